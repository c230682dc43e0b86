"""Schroeder trees stored as initial chains of angle sets.

A Schroeder tree of degree ``n`` has ``n`` angles (gaps between consecutive
children) and ``n + 1`` leaves.  Its canonical levelling puts the root at
level 1, then stacks the subtrees of the root right to left, each above the
previous one.  The code of the tree is the chain

    C_0 = {} < C_1 < ... < C_h = {1..n}

where ``C_i`` is the set of angles whose vertex sits at level <= i and ``h``
is the number of internal vertices.  Angle sets are plain Python ints used
as bitmasks: angle ``i`` is bit ``i - 1``.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from functools import lru_cache
from itertools import product as cartesian

MAX_ANGLES = 64
HASH_MASK = (1 << 64) - 1

PackedWord = tuple[int, ...]


class CapacityError(ValueError):
    """Raised when a tree would need more than MAX_ANGLES angles."""


class CodeError(ValueError):
    """Raised for malformed chains, grids or packed words."""


class PackedWordError(CodeError):
    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"{message} (position {position})")
        self.position = position


# ---------------------------------------------------------------- angle sets

def encode_angles(angles: Iterable[int]) -> int:
    bits = 0
    for a in angles:
        if not 1 <= a <= MAX_ANGLES:
            raise CapacityError(f"angle {a} outside [1..{MAX_ANGLES}]")
        bits |= 1 << (a - 1)
    return bits


def decode_angles(bits: int) -> tuple[int, ...]:
    out = []
    i = 1
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return tuple(out)


def angle_interval(lo: int, hi: int) -> int:
    """Bitmask of [lo..hi]; empty when hi < lo."""
    if hi < lo:
        return 0
    return ((1 << (hi - lo + 1)) - 1) << (lo - 1)


def restrict(bits: int, lo: int, hi: int) -> int:
    """Columns lo..hi of ``bits``, renumbered to start at 1."""
    return (bits & angle_interval(lo, hi)) >> (lo - 1) if hi >= lo else 0


def select_columns(bits: int, columns: Sequence[int]) -> int:
    """Keep the given (increasing) columns and renumber them 1, 2, ..."""
    out = 0
    for j, c in enumerate(columns):
        if bits >> (c - 1) & 1:
            out |= 1 << j
    return out


def dedup_rows(rows: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for r in rows:
        if not out or out[-1] != r:
            out.append(r)
    return tuple(out)


def _check_capacity(n: int) -> None:
    if n > MAX_ANGLES:
        raise CapacityError(f"{n} angles exceed capacity {MAX_ANGLES}")


# ---------------------------------------------------------------- codes

class TreeCode:
    """Canonical code of a Schroeder tree.

    ``chain`` is the tuple of bitmasks C_0, ..., C_h.  Construction checks
    the cheap chain invariants; use :func:`is_valid_code` for the full
    canonicity test.  Equality compares full codes, hashing uses
    :func:`hash_tree`, so dict lookups confirm equality on collisions.
    """

    __slots__ = ("n", "chain", "_hash")

    def __init__(self, n: int, chain: Sequence[int]):
        _check_capacity(n)
        chain = tuple(chain)
        problem = _chain_problem(n, chain)
        if problem:
            raise CodeError(problem)
        self.n = n
        self.chain = chain
        self._hash = sum(chain) & HASH_MASK

    @classmethod
    def _trusted(cls, n: int, chain: tuple[int, ...]) -> TreeCode:
        obj = object.__new__(cls)
        obj.n = n
        obj.chain = chain
        obj._hash = sum(chain) & HASH_MASK
        return obj

    @property
    def height(self) -> int:
        return len(self.chain) - 1

    @property
    def is_unit(self) -> bool:
        return self.n == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TreeCode):
            return NotImplemented
        return self.n == other.n and self.chain == other.chain

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: TreeCode) -> bool:
        return sort_key(self) < sort_key(other)

    def __repr__(self) -> str:
        return f"TreeCode({format_word(packed_word(self))!r})"

    def __reduce__(self):
        return (TreeCode, (self.n, self.chain))


def _chain_problem(n: int, chain: tuple[int, ...]) -> str:
    if not chain:
        return "empty chain"
    if chain[0] != 0:
        return "bottom row C_0 must be empty"
    if chain[-1] != angle_interval(1, n):
        return "top row must contain every angle"
    for i in range(len(chain) - 1):
        lo, hi = chain[i], chain[i + 1]
        if lo & ~hi or lo == hi:
            return f"rows {i} and {i + 1} are not strictly increasing"
    return ""


class ForestCode:
    """Chain of angle sets describing an ordered forest.

    A forest code is a tree code with its bottom row possibly removed.  A
    chain consisting of the single row ``0`` stands for the forest made of
    one leaf, i.e. the unit.
    """

    __slots__ = ("n", "chain")

    def __init__(self, n: int, chain: Sequence[int]):
        self.n = n
        self.chain = tuple(chain)

    @property
    def height(self) -> int:
        return len(self.chain) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ForestCode):
            return NotImplemented
        return self.n == other.n and self.chain == other.chain

    def __hash__(self) -> int:
        return hash((self.n, self.chain))

    def __repr__(self) -> str:
        rows = [decode_angles(r) for r in self.chain]
        return f"ForestCode(n={self.n}, chain={rows})"


UNIT = TreeCode._trusted(0, (0,))


def unit() -> TreeCode:
    return UNIT


def corolla(m: int) -> TreeCode:
    if m < 1:
        raise ValueError("corolla needs at least one angle")
    _check_capacity(m)
    return TreeCode._trusted(m, (0, angle_interval(1, m)))


def vee(subtrees: Sequence[TreeCode]) -> TreeCode:
    """Graft ``subtrees`` (at least two) as the ordered children of a new root."""
    k = len(subtrees)
    if k < 2:
        raise ValueError("a root needs at least two children")
    n = k - 1 + sum(t.n for t in subtrees)
    _check_capacity(n)
    offsets = []
    root = 0
    pos = 0
    for i, t in enumerate(subtrees):
        offsets.append(pos)
        pos += t.n
        if i < k - 1:
            pos += 1
            root |= 1 << (pos - 1)
    rows = [0, root]
    alive = root
    # rightmost subtree right above the root, then leftwards
    for i in range(k - 1, -1, -1):
        t = subtrees[i]
        for row in t.chain[1:]:
            rows.append(alive | row << offsets[i])
        alive |= t.chain[-1] << offsets[i]
    return TreeCode._trusted(n, tuple(rows))


# ---------------------------------------------------------------- packed words

def packed_word(t: TreeCode) -> PackedWord:
    h = t.height
    w = [0] * t.n
    for lev in range(h):
        new = t.chain[lev + 1] & ~t.chain[lev]
        for a in decode_angles(new):
            w[a - 1] = h - lev
    return tuple(w)


def combine_words(words: Sequence[PackedWord]) -> PackedWord:
    """The construction rule c(w_1, ..., w_k) = w_1 N (w_2 + m_1) N ..."""
    maxima = [max(w, default=0) for w in words]
    top = sum(maxima) + 1
    out: list[int] = []
    off = 0
    for i, w in enumerate(words):
        if i:
            out.append(top)
        out.extend(x + off for x in w)
        off += maxima[i]
    return tuple(out)


def _parse_lppw(w: Sequence[int], start: int) -> int:
    """Check ``w`` is a left priority packed word; return its maximum.

    ``start`` is the absolute position of ``w[0]`` (for diagnostics).
    """
    if not w:
        return 0
    top = max(w)
    cuts = [i for i, x in enumerate(w) if x == top]
    bounds = [-1] + cuts + [len(w)]
    off = 0
    for j in range(len(bounds) - 1):
        lo, hi = bounds[j] + 1, bounds[j + 1]
        seg = w[lo:hi]
        if not seg:
            continue
        shifted = [x - off for x in seg]
        for i, x in enumerate(shifted):
            if x < 1:
                raise PackedWordError(
                    f"letter {seg[i]} is too small for its block", start + lo + i + 1)
        off += _parse_lppw(shifted, start + lo)
    if top != off + 1:
        raise PackedWordError(
            f"maximal letter {top} should be {off + 1}", start + cuts[0] + 1)
    return top


def check_packed_word(w: Sequence[int]) -> None:
    """Raise PackedWordError unless ``w`` is a left priority packed word."""
    for i, x in enumerate(w):
        if not isinstance(x, int) or x < 1:
            raise PackedWordError(f"letter {x!r} is not a positive integer", i + 1)
    present = set(w)
    for v in range(1, max(w, default=0) + 1):
        if v not in present:
            raise PackedWordError(f"word is not packed: letter {v} missing")
    _parse_lppw(list(w), 0)


def is_lppw(w: Sequence[int]) -> bool:
    try:
        check_packed_word(w)
    except PackedWordError:
        return False
    return True


def code_from_packed_word(w: Sequence[int] | str) -> TreeCode:
    if isinstance(w, str):
        w = parse_word(w)
    w = tuple(w)
    check_packed_word(w)
    n = len(w)
    _check_capacity(n)
    h = max(w, default=0)
    # angle d sits at level h + 1 - w[d]
    rows = [0] * (h + 1)
    for d, x in enumerate(w):
        for i in range(h + 1 - x, h + 1):
            rows[i] |= 1 << d
    return TreeCode._trusted(n, tuple(rows))


def format_word(w: Sequence[int]) -> str:
    if max(w, default=0) <= 9:
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def parse_word(text: str) -> PackedWord:
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1].strip()
    if not text:
        return ()
    try:
        if "," in text:
            return tuple(int(x) for x in text.split(","))
        if not text.isdigit():
            raise ValueError
        return tuple(int(c) for c in text)
    except ValueError:
        raise PackedWordError(f"cannot read packed word {text!r}") from None


def sort_key(t: TreeCode) -> tuple[int, PackedWord]:
    w = packed_word(t)
    return (len(w), w)


# ---------------------------------------------------------------- validation

def validate_code(n: int, chain: Sequence[int]) -> str:
    """Empty string when (n, chain) is a canonical tree code, else the reason."""
    if n < 0:
        return "negative angle count"
    if n > MAX_ANGLES:
        return f"{n} angles exceed capacity {MAX_ANGLES}"
    chain = tuple(chain)
    problem = _chain_problem(n, chain)
    if problem:
        return problem
    try:
        check_packed_word(packed_word(TreeCode._trusted(n, chain)))
    except PackedWordError as exc:
        return f"not a canonical code: {exc}"
    return ""


def is_valid_code(t: TreeCode | tuple[int, Sequence[int]]) -> tuple[bool, str]:
    """Return (ok, diagnostic) for a TreeCode or an (n, chain) pair."""
    if isinstance(t, TreeCode):
        n, chain = t.n, t.chain
    else:
        n, chain = t
    problem = validate_code(n, chain)
    return (not problem, problem)


# ---------------------------------------------------------------- enumeration

def compositions_with_zeros(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions_with_zeros(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _lppw_of_length(n: int) -> tuple[PackedWord, ...]:
    if n == 0:
        return ((),)
    words = []
    for k in range(2, n + 2):
        for sizes in compositions_with_zeros(n - (k - 1), k):
            for choice in cartesian(*(_lppw_of_length(s) for s in sizes)):
                words.append(combine_words(choice))
    return tuple(sorted(words))


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[TreeCode, ...]:
    """All trees of degree ``n`` ordered lexicographically by packed word."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    _check_capacity(n)
    return tuple(code_from_packed_word(w) for w in _lppw_of_length(n))


def little_schroeder(n: int) -> int:
    """Number of Schroeder trees with n angles (1, 1, 3, 11, 45, 197, ...)."""
    s = [1, 1]
    for m in range(2, n + 1):
        s.append(((6 * m - 3) * s[m - 1] - (m - 2) * s[m - 2]) // (m + 1))
    return s[n]


# ---------------------------------------------------------------- hashing

def hash_tree(t: TreeCode) -> int:
    return t._hash


def hash_pair(t1: TreeCode, t2: TreeCode) -> int:
    return (hash_tree(t1) + (hash_tree(t2) << 32)) & HASH_MASK


# ---------------------------------------------------------------- grids

def render_grid(t: TreeCode) -> str:
    """One line per chain row, top row (C_h) first; '#' marks members."""
    lines = []
    for row in reversed(t.chain):
        lines.append("".join("#" if row >> j & 1 else "." for j in range(t.n)))
    return "\n".join(lines)


def parse_grid(text: str) -> TreeCode:
    lines = text.split("\n")
    while len(lines) > 1 and lines[-1].strip() == "":
        lines.pop()
    lines = [ln.strip() for ln in lines]
    n = len(lines[0])
    if any(len(ln) != n for ln in lines):
        raise CodeError("ragged grid rows")
    rows = []
    for ln in reversed(lines):
        bits = 0
        for j, ch in enumerate(ln):
            if ch == "#":
                bits |= 1 << j
            elif ch != ".":
                raise CodeError(f"illegal grid character {ch!r}")
        rows.append(bits)
    _check_capacity(n)
    problem = validate_code(n, rows)
    if problem:
        raise CodeError(problem)
    return TreeCode._trusted(n, tuple(rows))
