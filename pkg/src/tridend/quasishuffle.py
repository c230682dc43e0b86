"""(k, l)-quasi-shuffles and their L / M / R families.

A (k, l)-quasi-shuffle is a surjection sigma: [1..k+l] -> [1..r] that is
strictly increasing on [1..k] and on [k+1..k+l].  Two positions, one from
each block, may share a value (a merge).  The family of sigma is read from
the fibre over 1: L when it is {1}, M when it is {1, k+1}, R when it is
{k+1}.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache


class Family(str, Enum):
    L = "L"
    M = "M"
    R = "R"


FAMILY_ORDER = (Family.L, Family.M, Family.R)


@dataclass(frozen=True)
class QuasiShuffle:
    k: int
    l: int
    values: tuple[int, ...]

    def __post_init__(self):
        k, l, v = self.k, self.l, self.values
        if k < 0 or l < 0 or len(v) != k + l:
            raise ValueError(f"values {v} do not fit type ({k},{l})")
        if any(v[i] >= v[i + 1] for i in range(k - 1)):
            raise ValueError(f"{v}: first block not increasing")
        if any(v[i] >= v[i + 1] for i in range(k, k + l - 1)):
            raise ValueError(f"{v}: second block not increasing")
        if set(v) != set(range(1, max(v, default=0) + 1)):
            raise ValueError(f"{v} is not surjective onto [1..r]")

    @property
    def r(self) -> int:
        return max(self.values, default=0)

    @property
    def family(self) -> Family | None:
        """None only for the empty shuffle of type (0, 0)."""
        if not self.values:
            return None
        first = self.k >= 1 and self.values[0] == 1
        second = self.l >= 1 and self.values[self.k] == 1
        if first and second:
            return Family.M
        return Family.L if first else Family.R

    def __str__(self) -> str:
        return ",".join(map(str, self.values))


@lru_cache(maxsize=None)
def _family(k: int, l: int, fam: Family) -> tuple[QuasiShuffle, ...]:
    """Build one family from the smaller Batc sets it is in bijection with."""
    out = []
    if fam is Family.L and k >= 1:
        for s in enumerate(k - 1, l):
            v = s.values
            out.append(QuasiShuffle(k, l, (1,) + tuple(x + 1 for x in v)))
    elif fam is Family.M and k >= 1 and l >= 1:
        for s in enumerate(k - 1, l - 1):
            v = [x + 1 for x in s.values]
            out.append(QuasiShuffle(k, l, tuple([1] + v[:k - 1] + [1] + v[k - 1:])))
    elif fam is Family.R and l >= 1:
        for s in enumerate(k, l - 1):
            v = [x + 1 for x in s.values]
            out.append(QuasiShuffle(k, l, tuple(v[:k] + [1] + v[k:])))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate(k: int, l: int) -> tuple[QuasiShuffle, ...]:  # noqa: A001
    """Every (k, l)-quasi-shuffle once, families in order L, M, R."""
    if k < 0 or l < 0:
        raise ValueError("block lengths must be nonnegative")
    if k == 0 and l == 0:
        return (QuasiShuffle(0, 0, ()),)
    return tuple(s for fam in FAMILY_ORDER for s in _family(k, l, fam))


def enumerate_family(k: int, l: int, families: Iterable[Family | str]) -> tuple[QuasiShuffle, ...]:
    wanted = {Family(f) for f in families}
    return tuple(s for fam in FAMILY_ORDER if fam in wanted for s in _family(k, l, fam))


@lru_cache(maxsize=None)
def count(k: int, l: int) -> int:
    """Delannoy number D(k, l)."""
    if k == 0 or l == 0:
        return 1
    return count(k - 1, l) + count(k - 1, l - 1) + count(k, l - 1)
