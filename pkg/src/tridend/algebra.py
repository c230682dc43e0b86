"""Tridendriform products on tree codes.

Every product of two trees is a sum of atomic products, one per
quasi-shuffle of the right comb of the left factor against the left comb of
the right factor.  The family of the shuffle selects the product:

    prec  (<)   L
    mid   (.)   M
    succ  (>)   R
    preceq      L + M
    succeq      M + R
    star  (*)   L + M + R
"""
from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction
from functools import lru_cache, reduce

from . import quasishuffle as qs
from .quasishuffle import Family, QuasiShuffle
from .sparse import SparseVector, accumulate, format_coeff
from .treecode import (
    UNIT,
    ForestCode,
    TreeCode,
    _check_capacity,
    angle_interval,
    dedup_rows,
    format_word,
    packed_word,
    restrict,
    sort_key,
)

OPS: dict[str, tuple[Family, ...]] = {
    "prec": (Family.L,),
    "mid": (Family.M,),
    "succ": (Family.R,),
    "preceq": (Family.L, Family.M),
    "succeq": (Family.M, Family.R),
    "star": (Family.L, Family.M, Family.R),
}


class AlgebraError(ValueError):
    pass


class TreeVector(SparseVector[TreeCode]):
    """Element of the free vector space on Schroeder trees."""

    __slots__ = ()

    @classmethod
    def from_tree(cls, t: TreeCode, coeff: object = 1) -> TreeVector:
        return cls({t: coeff})

    @classmethod
    def zero(cls) -> TreeVector:
        return cls()

    def degrees(self) -> set[int]:
        return {t.n for t in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Common degree of all terms; ValueError if mixed or zero."""
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError(f"vector is not homogeneous (degrees {sorted(ds)})")
        return ds.pop()

    def sorted_items(self) -> list[tuple[TreeCode, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: sort_key(kv[0]))

    def __repr__(self) -> str:
        if not self.terms:
            return "TreeVector(0)"
        parts = [f"{format_coeff(c)}*[{format_word(packed_word(t))}]"
                 for t, c in self.sorted_items()]
        return "TreeVector(" + " + ".join(parts) + ")"


def as_vector(x: TreeVector | TreeCode) -> TreeVector:
    return x if isinstance(x, TreeVector) else TreeVector.from_tree(x)


# ---------------------------------------------------------------- combs

def get_forest(t: TreeCode, level: int, a_left: int, a_right: int) -> ForestCode:
    """Rows ``level..h`` of ``t`` restricted to angles [a_left..a_right]."""
    if not 0 <= level <= t.height:
        raise IndexError(f"level {level} outside [0..{t.height}]")
    if a_left < 1 or a_right > t.n or a_left > a_right + 1:
        raise IndexError(f"angle range [{a_left}..{a_right}] invalid for {t.n} angles")
    rows = dedup_rows(restrict(row, a_left, a_right) for row in t.chain[level:])
    return ForestCode(a_right - a_left + 1, rows)


def _min_bit(x: int) -> int:
    return (x & -x).bit_length()


@lru_cache(maxsize=None)
def left_comb(t: TreeCode) -> tuple[ForestCode, ...]:
    """Forests hanging right of the leftmost branch, root first."""
    out = []
    A = angle_interval(1, t.n)
    for lev in range(1, t.height + 1):
        X = t.chain[lev] & A
        if X:
            lo = _min_bit(X)
            out.append(get_forest(t, lev, lo + 1, A.bit_length()))
            A = angle_interval(1, lo - 1)
    return tuple(out)


@lru_cache(maxsize=None)
def right_comb(t: TreeCode) -> tuple[ForestCode, ...]:
    """Forests hanging left of the rightmost branch, root first."""
    out = []
    A = angle_interval(1, t.n)
    for lev in range(1, t.height + 1):
        X = t.chain[lev] & A
        if X:
            hi = X.bit_length()
            out.append(get_forest(t, lev, _min_bit(A), hi - 1))
            A = angle_interval(hi + 1, t.n)
    return tuple(out)


def rtl(t: TreeCode) -> int:
    return len(right_comb(t))


def ltl(t: TreeCode) -> int:
    return len(left_comb(t))


# ---------------------------------------------------------------- products

def atomic_product(t: TreeCode, s: TreeCode, sigma: QuasiShuffle) -> TreeCode:
    """Code of the tree obtained by grafting the comb forests of ``t`` (left
    sons) and ``s`` (right sons) on a ladder of ``sigma.r`` vertices."""
    L = right_comb(t)
    R = left_comb(s)
    k, l = len(L), len(R)
    if (sigma.k, sigma.l) != (k, l):
        raise AlgebraError(f"shuffle of type ({sigma.k},{sigma.l}) used for combs ({k},{l})")
    n = t.n + s.n
    _check_capacity(n)
    v = sigma.values
    tc, sc, shift = t.chain, s.chain, t.n
    ht = hs = 0
    fl = fr = 0  # 0-based cursors into L and R
    rows = [0]
    for ir in range(1, sigma.r + 1):
        if l == 0 or v[k + fr] != ir:
            ht += 1
            fl = min(fl + 1, k - 1)
            rows.append(tc[ht] | sc[hs] << shift)
        else:
            if k and v[fl] == ir:
                ht += 1
                fl = min(fl + 1, k - 1)
            for _ in range(R[fr].height + 1):
                hs += 1
                rows.append(tc[ht] | sc[hs] << shift)
            fr = min(fr + 1, l - 1)
    while ht < t.height:
        ht += 1
        rows.append(tc[ht] | sc[hs] << shift)
    return TreeCode._trusted(n, tuple(rows))


def _check_op(op: str) -> tuple[Family, ...]:
    try:
        return OPS[op]
    except KeyError:
        raise AlgebraError(f"unknown product {op!r}; expected one of {sorted(OPS)}") from None


@lru_cache(maxsize=1 << 16)
def tree_product(t: TreeCode, s: TreeCode, op: str) -> tuple[tuple[TreeCode, int], ...]:
    """Expansion of ``t op s`` as (tree, multiplicity) pairs."""
    fams = _check_op(op)
    if t.is_unit and s.is_unit:
        if op == "star":
            return ((UNIT, 1),)
        raise AlgebraError(f"unit {op} unit is undefined")
    acc: dict[TreeCode, int] = {}
    for sigma in qs.enumerate_family(rtl(t), ltl(s), fams):
        u = atomic_product(t, s, sigma)
        acc[u] = acc.get(u, 0) + 1
    return tuple(acc.items())


def product(x: TreeVector | TreeCode, y: TreeVector | TreeCode, op: str) -> TreeVector:
    _check_op(op)
    x, y = as_vector(x), as_vector(y)
    acc: dict[TreeCode, Fraction] = {}
    for t, a in x.items():
        for s, b in y.items():
            ab = a * b
            for u, m in tree_product(t, s, op):
                accumulate(acc, u, ab * m)
    return TreeVector._from_clean(acc)


def prec(x, y) -> TreeVector:
    return product(x, y, "prec")


def mid(x, y) -> TreeVector:
    return product(x, y, "mid")


def succ(x, y) -> TreeVector:
    return product(x, y, "succ")


def preceq(x, y) -> TreeVector:
    return product(x, y, "preceq")


def succeq(x, y) -> TreeVector:
    return product(x, y, "succeq")


def star(x, y) -> TreeVector:
    return product(x, y, "star")


def star_all(factors: Iterable[TreeVector | TreeCode]) -> TreeVector:
    """Left fold of * over ``factors``; the empty product is the unit."""
    return reduce(star, (as_vector(f) for f in factors), TreeVector.from_tree(UNIT))
