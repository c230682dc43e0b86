"""Shared test helpers."""
import json
from pathlib import Path

from tridend.algebra import TreeVector
from tridend.treecode import TreeCode, code_from_packed_word, encode_angles

FIXTURES = Path(__file__).parent / "fixtures"


def W(word: str) -> TreeCode:
    return code_from_packed_word(word)


def vec(*terms) -> TreeVector:
    """vec(("21", -1), ("12", 1)) -> TreeVector."""
    return TreeVector({W(w): c for w, c in terms})


def from_oracle(t) -> TreeCode:
    import oracle

    n, rows = oracle.code(t)
    return TreeCode(n, [encode_angles(r) for r in rows])


def reference_bases() -> dict[int, list[TreeVector]]:
    data = json.loads((FIXTURES / "reference_bases.json").read_text())
    return {int(n): [vec(*v) for v in vs] for n, vs in data.items()}
