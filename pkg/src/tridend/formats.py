"""Text, JSON and TikZ renderings of trees, vectors and tensors.

JSON forms:
    tree    {"n": int, "chain": [[angles of C_0], [angles of C_1], ...]}
    vector  [{"tree": packed word, "coeff": "p/q"}, ...]
    tensor  [{"left": packed word, "right": packed word, "coeff": "p/q"}, ...]

Packed text forms, one term per line:
    vector  "<coeff> [<word>]"
    tensor  "<coeff> [<left>] [<right>]"
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from .algebra import TreeVector
from .coalgebra import TensorVector
from .sparse import format_coeff
from .treecode import (
    MAX_ANGLES,
    CapacityError,
    CodeError,
    TreeCode,
    code_from_packed_word,
    decode_angles,
    encode_angles,
    format_word,
    packed_word,
    parse_word,
    render_grid,
    validate_code,
)

FORMATS = ("grid", "packed", "json", "tikz")
UNIT_GRID = "(unit)"


class FormatError(ValueError):
    pass


def _grid(t: TreeCode) -> str:
    # zero columns would print nothing
    return render_grid(t) if t.n else UNIT_GRID


def _word(t: TreeCode) -> str:
    return format_word(packed_word(t))


def _coeff(text: object) -> Fraction:
    if not isinstance(text, str) or not re.fullmatch(r"-?\d+(/\d+)?", text.strip()):
        raise FormatError(f"coefficient {text!r} is not of the form p or p/q")
    c = Fraction(text)
    if c == 0:
        raise FormatError("zero coefficients are not stored")
    return c


def _strict_keys(obj: object, keys: set[str], what: str) -> dict:
    if not isinstance(obj, dict):
        raise FormatError(f"{what} must be a JSON object")
    extra = set(obj) - keys
    missing = keys - set(obj)
    if extra:
        raise FormatError(f"unknown field(s) in {what}: {sorted(extra)}")
    if missing:
        raise FormatError(f"missing field(s) in {what}: {sorted(missing)}")
    return obj


# ---------------------------------------------------------------- JSON

def tree_to_json(t: TreeCode) -> dict:
    return {"n": t.n, "chain": [list(decode_angles(r)) for r in t.chain]}


def tree_from_json(obj: object) -> TreeCode:
    obj = _strict_keys(obj, {"n", "chain"}, "tree")
    n, chain = obj["n"], obj["chain"]
    if not isinstance(n, int) or not isinstance(chain, list):
        raise FormatError("tree needs an integer 'n' and a list 'chain'")
    if n > MAX_ANGLES:
        raise CapacityError(f"{n} angles exceed capacity {MAX_ANGLES}")
    try:
        rows = []
        for row in chain:
            if not isinstance(row, list) or any(not isinstance(a, int) or not 1 <= a <= max(n, 1) for a in row):
                raise FormatError(f"bad chain row {row!r}")
            rows.append(encode_angles(row))
    except CodeError as exc:
        raise FormatError(str(exc)) from None
    problem = validate_code(n, rows)
    if problem:
        raise FormatError(problem)
    return TreeCode(n, rows)


def _tree_ref(text: object) -> TreeCode:
    if not isinstance(text, str):
        raise FormatError(f"tree reference {text!r} must be a packed word string")
    return code_from_packed_word(parse_word(text))


def vector_to_json(v: TreeVector) -> list[dict]:
    return [{"tree": _word(t), "coeff": format_coeff(c)} for t, c in v.sorted_items()]


def vector_from_json(obj: object) -> TreeVector:
    if not isinstance(obj, list):
        raise FormatError("vector must be a JSON list")
    terms = []
    for item in obj:
        item = _strict_keys(item, {"tree", "coeff"}, "vector term")
        terms.append((_tree_ref(item["tree"]), _coeff(item["coeff"])))
    return TreeVector(terms)


def tensor_to_json(x: TensorVector) -> list[dict]:
    return [{"left": _word(a), "right": _word(b), "coeff": format_coeff(c)}
            for (a, b), c in x.sorted_items()]


def tensor_from_json(obj: object) -> TensorVector:
    if not isinstance(obj, list):
        raise FormatError("tensor must be a JSON list")
    terms = []
    for item in obj:
        item = _strict_keys(item, {"left", "right", "coeff"}, "tensor term")
        terms.append(((_tree_ref(item["left"]), _tree_ref(item["right"])), _coeff(item["coeff"])))
    return TensorVector(terms)


# ---------------------------------------------------------------- packed text

_TERM = re.compile(r"^\s*(-?\d+(?:/\d+)?)\s+\[([0-9,]*)\]\s*$")
_TENSOR_TERM = re.compile(r"^\s*(-?\d+(?:/\d+)?)\s+\[([0-9,]*)\]\s+\[([0-9,]*)\]\s*$")


def vector_to_packed(v: TreeVector) -> str:
    if not v:
        return "0"
    return "\n".join(f"{format_coeff(c)} [{_word(t)}]" for t, c in v.sorted_items())


def vector_from_packed(text: str) -> TreeVector:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if lines == ["0"]:
        return TreeVector()
    terms = []
    for ln in lines:
        m = _TERM.match(ln)
        if not m:
            raise FormatError(f"cannot read vector term {ln!r}")
        terms.append((code_from_packed_word(parse_word(m.group(2))), _coeff(m.group(1))))
    return TreeVector(terms)


def tensor_to_packed(x: TensorVector) -> str:
    if not x:
        return "0"
    return "\n".join(f"{format_coeff(c)} [{_word(a)}] [{_word(b)}]" for (a, b), c in x.sorted_items())


def tensor_from_packed(text: str) -> TensorVector:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if lines == ["0"]:
        return TensorVector()
    terms = []
    for ln in lines:
        m = _TENSOR_TERM.match(ln)
        if not m:
            raise FormatError(f"cannot read tensor term {ln!r}")
        a = code_from_packed_word(parse_word(m.group(2)))
        b = code_from_packed_word(parse_word(m.group(3)))
        terms.append(((a, b), _coeff(m.group(1))))
    return TensorVector(terms)


# ---------------------------------------------------------------- TikZ

def _structure(w: tuple[int, ...], lo: int, hi: int):
    """Nested children lists for the factor w[lo:hi]; None is a leaf."""
    if lo == hi:
        return None
    top = max(w[lo:hi])
    cuts = [i for i in range(lo, hi) if w[i] == top]
    bounds = [lo - 1] + cuts + [hi]
    kids = [_structure(w, bounds[j] + 1, bounds[j + 1]) for j in range(len(bounds) - 1)]
    return (top, kids)


def tree_to_tikz(t: TreeCode, scale: float = 0.5) -> str:
    """Drawing with the root at the bottom, filled internal vertices and open leaves."""
    w = packed_word(t)
    h = t.height
    edges, inner, leaves = [], [], []
    counter = [0]

    def place(node):
        if node is None:
            x = counter[0]
            counter[0] += 1
            p = (float(x), float(h + 1))
            leaves.append(p)
            return p
        letter, kids = node
        pts = [place(k) for k in kids]
        p = ((pts[0][0] + pts[-1][0]) / 2, float(h + 1 - letter))
        for q in pts:
            edges.append((p, q))
        inner.append(p)
        return p

    root = place(_structure(w, 0, len(w)))
    if t.is_unit:
        edges.append(((0.0, 0.0), root))
    else:
        edges.append(((root[0], root[1] - 1), root))

    def fmt(p):
        return f"({p[0]:g},{p[1]:g})"

    lines = [f"\\begin{{tikzpicture}}[scale={scale:g}]"]
    lines += [f"  \\draw {fmt(a)} -- {fmt(b)};" for a, b in edges]
    lines += [f"  \\fill {fmt(p)} circle (4pt);" for p in inner]
    lines += [f"  \\draw[fill=white] {fmt(p)} circle (4pt);" for p in leaves]
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines)


# ---------------------------------------------------------------- dispatch

def _check_format(fmt: str) -> None:
    if fmt not in FORMATS:
        raise FormatError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def render_tree(t: TreeCode, fmt: str) -> str:
    _check_format(fmt)
    if fmt == "grid":
        return _grid(t)
    if fmt == "packed":
        return _word(t) if t.n else "[]"
    if fmt == "json":
        return json.dumps(tree_to_json(t))
    return tree_to_tikz(t)


def render_vector(v: TreeVector, fmt: str) -> str:
    _check_format(fmt)
    if fmt == "packed":
        return vector_to_packed(v)
    if fmt == "json":
        return json.dumps(vector_to_json(v))
    if not v:
        return "0"
    blocks = []
    for t, c in v.sorted_items():
        body = _grid(t) if fmt == "grid" else tree_to_tikz(t)
        blocks.append(f"{format_coeff(c)} x\n{body}")
    return "\n\n".join(blocks)


def render_tensor(x: TensorVector, fmt: str) -> str:
    _check_format(fmt)
    if fmt == "packed":
        return tensor_to_packed(x)
    if fmt == "json":
        return json.dumps(tensor_to_json(x))
    if not x:
        return "0"
    draw = _grid if fmt == "grid" else tree_to_tikz
    blocks = []
    for (a, b), c in x.sorted_items():
        blocks.append(f"{format_coeff(c)} x\n{draw(a)}\n(x)\n{draw(b)}")
    return "\n\n".join(blocks)


def parse_tree(text: str) -> TreeCode:
    """A tree given as a packed word ("21", "[21]", "" for the unit) or JSON."""
    s = text.strip()
    if s.startswith("{"):
        try:
            obj = json.loads(s)
        except json.JSONDecodeError as exc:
            raise FormatError(f"bad JSON tree: {exc}") from None
        return tree_from_json(obj)
    return code_from_packed_word(parse_word(s))
