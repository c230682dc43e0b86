"""Single cuts, prunings and the coproduct.

Cutting the edge above an internal vertex v detaches the subtree of v, whose
angles form an interval of consecutive angles.  In the packed word that
interval is the maximal factor around the letters of v whose entries are at
most the letter of v.  A pruning is a set of pairwise disjoint such
intervals; the empty pruning and the total cut (the root's interval) are
included.  The coproduct is

    Delta(t) = sum over prunings of (P_1 * ... * P_k) (x) R

with pieces P_i left to right and R the part still attached to the root.
"""
from __future__ import annotations

from collections.abc import Callable, Iterator
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .algebra import TreeVector, as_vector, star_all
from .sparse import SparseVector, accumulate, format_coeff
from .treecode import (
    UNIT,
    TreeCode,
    dedup_rows,
    format_word,
    packed_word,
    restrict,
    select_columns,
    sort_key,
)


class CoalgebraError(ValueError):
    pass


class SingleCut(NamedTuple):
    lo: int
    hi: int

    def __str__(self) -> str:
        return f"[{self.lo}..{self.hi}]"


Pruning = tuple[SingleCut, ...]


class TensorVector(SparseVector[tuple[TreeCode, TreeCode]]):
    """Element of KSch (x) KSch, keyed by ordered pairs of trees."""

    __slots__ = ()

    def sorted_items(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (sort_key(kv[0][0]), sort_key(kv[0][1])))

    def __repr__(self) -> str:
        if not self.terms:
            return "TensorVector(0)"
        parts = [f"{format_coeff(c)}*[{format_word(packed_word(a))}]x[{format_word(packed_word(b))}]"
                 for (a, b), c in self.sorted_items()]
        return "TensorVector(" + " + ".join(parts) + ")"


def tensor(x: TreeVector | TreeCode, y: TreeVector | TreeCode) -> TensorVector:
    x, y = as_vector(x), as_vector(y)
    return TensorVector._from_clean({(a, b): c * d for a, c in x.items() for b, d in y.items()})


# ---------------------------------------------------------------- cuts

@lru_cache(maxsize=None)
def single_cuts(t: TreeCode) -> tuple[SingleCut, ...]:
    """One interval per internal vertex, scanned by increasing letter."""
    w = packed_word(t)
    n = len(w)
    out: list[SingleCut] = []
    seen = set()
    for letter in range(1, max(w, default=0) + 1):
        pos = [i for i, x in enumerate(w) if x == letter]
        lo, hi = pos[0], pos[-1]
        while lo > 0 and w[lo - 1] < letter:
            lo -= 1
        while hi < n - 1 and w[hi + 1] < letter:
            hi += 1
        cut = SingleCut(lo + 1, hi + 1)
        if cut not in seen:
            seen.add(cut)
            out.append(cut)
    return tuple(out)


def enumerate_prunings(t: TreeCode, visit: Callable[[Pruning], None]) -> None:
    """Visit every pruning of ``t`` once, starting with the empty one."""
    cuts = sorted(single_cuts(t))
    stack: list[Pruning] = [()]
    while stack:
        p = stack.pop()
        visit(p)
        last = p[-1].hi if p else 0
        for c in cuts:
            if last < c.lo:
                stack.append(p + (c,))


def iter_prunings(t: TreeCode) -> Iterator[Pruning]:
    found: list[Pruning] = []
    enumerate_prunings(t, found.append)
    return iter(found)


def _restrict_tree(t: TreeCode, lo: int, hi: int) -> TreeCode:
    rows = dedup_rows(restrict(row, lo, hi) for row in t.chain)
    return TreeCode._trusted(hi - lo + 1, rows)


def apply_pruning(t: TreeCode, p: Pruning) -> tuple[tuple[TreeCode, ...], TreeCode]:
    """(pieces left to right, root component) of the pruning ``p``."""
    allowed = set(single_cuts(t))
    last = 0
    for c in p:
        if c not in allowed:
            raise CoalgebraError(f"{c} is not a single cut of {t!r}")
        if c.lo <= last:
            raise CoalgebraError("cuts of a pruning must be disjoint and increasing")
        last = c.hi
    pieces = tuple(_restrict_tree(t, c.lo, c.hi) for c in p)
    removed = set()
    for c in p:
        removed.update(range(c.lo, c.hi + 1))
    keep = [a for a in range(1, t.n + 1) if a not in removed]
    if not keep:
        return pieces, UNIT
    rows = dedup_rows(select_columns(row, keep) for row in t.chain)
    return pieces, TreeCode._trusted(len(keep), rows)


# ---------------------------------------------------------------- coproduct

@lru_cache(maxsize=None)
def _tree_coproduct(t: TreeCode) -> tuple[tuple[tuple[TreeCode, TreeCode], Fraction], ...]:
    acc: dict = {}

    def visit(p: Pruning) -> None:
        pieces, root = apply_pruning(t, p)
        for a, c in star_all(pieces).items():
            accumulate(acc, (a, root), c)

    enumerate_prunings(t, visit)
    return tuple(acc.items())


def coproduct(x: TreeVector | TreeCode) -> TensorVector:
    x = as_vector(x)
    acc: dict = {}
    for t, c in x.items():
        for key, d in _tree_coproduct(t):
            accumulate(acc, key, c * d)
    return TensorVector._from_clean(acc)


def reduced_coproduct(x: TreeVector | TreeCode) -> TensorVector:
    x = as_vector(x)
    ds = x.degrees()
    if len(ds) > 1:
        raise CoalgebraError(f"reduced coproduct needs a homogeneous vector, got degrees {sorted(ds)}")
    if ds and ds.pop() < 1:
        raise CoalgebraError("reduced coproduct needs degree >= 1")
    one = TreeVector.from_tree(UNIT)
    return coproduct(x) - tensor(x, one) - tensor(one, x)


def is_primitive(x: TreeVector | TreeCode) -> bool:
    return not reduced_coproduct(x)


def tensor_star(X: TensorVector, Y: TensorVector) -> TensorVector:
    """(a (x) b) (*) (c (x) d) = (a * c) (x) (b * d), extended bilinearly."""
    from .algebra import tree_product

    acc: dict = {}
    for (a, b), p in X.items():
        for (c, d), q in Y.items():
            pq = p * q
            left = tree_product(a, c, "star")
            right = tree_product(b, d, "star")
            for u, m in left:
                for v, m2 in right:
                    accumulate(acc, (u, v), pq * m * m2)
    return TensorVector._from_clean(acc)
