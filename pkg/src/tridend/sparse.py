"""Finite linear combinations with exact rational coefficients."""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from numbers import Rational
from typing import Generic, TypeVar

K = TypeVar("K")


def as_fraction(c: object) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficient {c!r} is not an exact rational")


class SparseVector(Generic[K]):
    """Dict from basis keys to nonzero Fractions.

    Instances are treated as immutable once built; arithmetic returns new
    vectors.  Use :meth:`accumulate` on a fresh dict for hot loops.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[K, object] | Iterable[tuple[K, object]] | None = None):
        out: dict[K, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                c = as_fraction(c)
                if c:
                    v = out.get(key, 0) + c
                    if v:
                        out[key] = v
                    else:
                        del out[key]
        self.terms = out

    @classmethod
    def _from_clean(cls, terms: dict[K, Fraction]):
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def from_dict(cls, terms: dict[K, Fraction]):
        """Adopt ``terms`` after dropping zeros (no copy)."""
        for key in [k for k, c in terms.items() if not c]:
            del terms[key]
        return cls._from_clean(terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[K]:
        return iter(self.terms)

    def __contains__(self, key: object) -> bool:
        return key in self.terms

    def items(self):
        return self.terms.items()

    def coeff(self, key: K) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SparseVector):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def key(self) -> frozenset:
        """Hashable snapshot, for deduplication."""
        return frozenset(self.terms.items())

    def _combine(self, other: SparseVector[K], sign: int):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = out.get(key, 0) + sign * c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return self._from_clean(out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self._from_clean({k: -c for k, c in self.terms.items()})

    def __pos__(self):
        return self

    def __mul__(self, scalar):
        if isinstance(scalar, SparseVector):
            return NotImplemented
        s = as_fraction(scalar)
        if not s:
            return self._from_clean({})
        return self._from_clean({k: c * s for k, c in self.terms.items()})

    __rmul__ = __mul__


def accumulate(acc: dict, key, c) -> None:
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
