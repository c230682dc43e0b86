"""Inductive construction of primitive elements.

Degree 1 is spanned by Y.  For n >= 2 the candidates of degree n are

* theta(b) = b . Y for every basis vector b of degree n - 1, and
* omega(b_1 (x) ... (x) b_l) for every composition n = a_1 + ... + a_l with
  l >= 2 and every choice of basis vectors b_i of degree a_i,

where ``omega`` is the alternating sum

    omega(x_1 .. x_k (x) y) = sum_i (-1)^(k-i) omega_prec(x_1..x_i) >=. y < omega_succeq(x_i+1..x_k).

The candidates are row reduced against the trees of degree n; every basis
vector is then checked with the reduced coproduct.
"""
from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from pathlib import Path
from typing import Protocol

from . import linalg
from .algebra import TreeVector, as_vector, mid, prec, succeq
from .coalgebra import reduced_coproduct
from .treecode import UNIT, corolla, enumerate_trees

log = logging.getLogger(__name__)

Y = corolla(1)


class PrimitiveVerificationError(RuntimeError):
    def __init__(self, degree: int, index: int, residual_terms: int):
        super().__init__(f"degree {degree}, basis index {index}: reduced coproduct has "
                         f"{residual_terms} nonzero terms")
        self.degree = degree
        self.index = index


@dataclass(frozen=True)
class TensorWord:
    """x_1 (x) ... (x) x_k with each factor nonzero and homogeneous."""

    factors: tuple[TreeVector, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(as_vector(f) for f in self.factors))
        for f in self.factors:
            if not f or not f.is_homogeneous():
                raise ValueError("tensor word factors must be nonzero and homogeneous")

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(f.degree() for f in self.factors)

    def __len__(self) -> int:
        return len(self.factors)


def _factors(word: TensorWord | Sequence[TreeVector]) -> tuple[TreeVector, ...]:
    if isinstance(word, TensorWord):
        return word.factors
    return tuple(as_vector(x) for x in word)


def theta(x: TreeVector) -> TreeVector:
    return mid(x, Y)


def omega_prec(word) -> TreeVector:
    """x_1 < (x_2 < ( ... (x_k < 1)))."""
    acc = TreeVector.from_tree(UNIT)
    for x in reversed(_factors(word)):
        acc = prec(x, acc)
    return acc


def omega_succeq(word) -> TreeVector:
    """((1 >=. x_1) >=. x_2) ... >=. x_k."""
    acc = TreeVector.from_tree(UNIT)
    for x in _factors(word):
        acc = succeq(acc, x)
    return acc


def omega(word) -> TreeVector:
    factors = _factors(word)
    if not factors:
        raise ValueError("omega needs a nonempty word")
    *xs, y = factors
    k = len(xs)
    total = TreeVector()
    for i in range(k + 1):
        term = prec(succeq(omega_prec(xs[:i]), y), omega_succeq(xs[i:]))
        total = total + term if (k - i) % 2 == 0 else total - term
    return total


def compositions(n: int) -> list[tuple[int, ...]]:
    """Compositions of n into positive parts, in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")

    def rec(m):
        if m == 0:
            yield ()
            return
        for first in range(1, m + 1):
            for rest in rec(m - first):
                yield (first,) + rest

    return sorted(rec(n))


# ---------------------------------------------------------------- bases

@dataclass
class GradedPrimitiveBasis:
    """Basis vectors per degree with the label of the candidate behind each."""

    bases: dict[int, list[TreeVector]] = field(default_factory=dict)
    provenance: dict[int, list[str]] = field(default_factory=dict)

    def __getitem__(self, n: int) -> list[TreeVector]:
        return self.bases[n]

    def degrees(self) -> list[int]:
        return sorted(self.bases)

    def dimensions(self) -> tuple[int, ...]:
        return tuple(len(self.bases[n]) for n in self.degrees())


class BasisCache(Protocol):
    def load(self, n: int) -> tuple[list[TreeVector], list[str]] | None: ...

    def store(self, n: int, basis: list[TreeVector], provenance: list[str]) -> None: ...


def generate_candidates(n: int, lower: GradedPrimitiveBasis) -> tuple[list[TreeVector], list[str]]:
    """Candidate primitives of degree n with a label for each."""
    if n == 1:
        return [TreeVector.from_tree(Y)], ["Y"]
    missing = [d for d in range(1, n) if d not in lower.bases]
    if missing:
        raise ValueError(f"bases of degrees {missing} are required first")
    cands: list[TreeVector] = []
    labels: list[str] = []
    seen = set()

    def add(v: TreeVector, label: str) -> None:
        key = v.key()
        if v and key not in seen:
            seen.add(key)
            cands.append(v)
            labels.append(label)

    for comp in compositions(n):
        if len(comp) == 1:
            for i, b in enumerate(lower[n - 1]):
                add(theta(b), f"theta(b{n - 1}[{i}])")
            continue
        choices = [list(enumerate(lower[a])) for a in comp]
        for pick in cartesian(*choices):
            label = " (x) ".join(f"b{a}[{i}]" for a, (i, _) in zip(comp, pick))
            add(omega([b for _, b in pick]), f"omega({label})")
    return cands, labels


def _matrix(vectors: Sequence[TreeVector], n: int) -> list[list[Fraction]]:
    trees = enumerate_trees(n)
    col = {t: j for j, t in enumerate(trees)}
    rows = []
    for v in vectors:
        row = [Fraction(0)] * len(trees)
        for t, c in v.items():
            if t.n != n:
                raise ValueError(f"term of degree {t.n} in a degree {n} vector")
            row[col[t]] = c
        rows.append(row)
    return rows


def _vectors(rows: Sequence[Sequence[Fraction]], n: int) -> list[TreeVector]:
    trees = enumerate_trees(n)
    return [TreeVector({t: c for t, c in zip(trees, row) if c}) for row in rows]


def extract_basis(candidates: Sequence[TreeVector], n: int) -> list[TreeVector]:
    """Reduced row echelon basis of the span of ``candidates``."""
    return _extract(candidates, n)[0]


def _extract(candidates: Sequence[TreeVector], n: int) -> tuple[list[TreeVector], list[int]]:
    if not candidates:
        return [], []
    R, _, origin = linalg.rref(_matrix(candidates, n), len(enumerate_trees(n)))
    return _vectors(R, n), origin


def span_rank(vectors: Sequence[TreeVector], n: int) -> int:
    if not vectors:
        return 0
    return linalg.rank(_matrix(vectors, n), len(enumerate_trees(n)))


def same_span(a: Sequence[TreeVector], b: Sequence[TreeVector], n: int) -> bool:
    ra, rb = span_rank(a, n), span_rank(b, n)
    return ra == rb == span_rank(list(a) + list(b), n)


def kernel_oracle(n: int) -> list[TreeVector]:
    """Basis of the kernel of the reduced coproduct on degree n, in RREF."""
    trees = enumerate_trees(n)
    images = [reduced_coproduct(TreeVector.from_tree(t)) for t in trees]
    pairs = sorted({key for img in images for key in img},
                   key=lambda ab: (ab[0].n, ab[0].chain, ab[1].chain))
    index = {p: i for i, p in enumerate(pairs)}
    # rows of the matrix are codomain pairs, columns are trees
    M = [[Fraction(0)] * len(trees) for _ in pairs]
    for j, img in enumerate(images):
        for key, c in img.items():
            M[index[key]][j] = c
    kernel = linalg.nullspace(M, len(trees))
    return extract_basis(_vectors(kernel, n), n)


def verify_basis(basis: Sequence[TreeVector], n: int) -> None:
    for i, v in enumerate(basis):
        residual = reduced_coproduct(v)
        if residual:
            raise PrimitiveVerificationError(n, i, len(residual))


def pipeline(max_degree: int, cache: BasisCache | None = None) -> GradedPrimitiveBasis:
    """Bases of the primitive spaces of degrees 1..max_degree."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    out = GradedPrimitiveBasis()
    for n in range(1, max_degree + 1):
        loaded = cache.load(n) if cache is not None else None
        if loaded is not None:
            log.info("degree %d: loaded %d vectors from cache", n, len(loaded[0]))
            out.bases[n], out.provenance[n] = loaded
            continue
        cands, labels = generate_candidates(n, out)
        basis, origin = _extract(cands, n)
        verify_basis(basis, n)
        out.bases[n] = basis
        out.provenance[n] = [labels[i] for i in origin]
        log.info("degree %d: %d candidates, dimension %d", n, len(cands), len(basis))
        if cache is not None:
            cache.store(n, out.bases[n], out.provenance[n])
    return out


@dataclass(frozen=True)
class PipelineConfig:
    max_degree: int = 4
    cache_dir: Path | None = None
    check_kernel_up_to: int = 4

    def run(self) -> GradedPrimitiveBasis:
        cache = None
        if self.cache_dir is not None:
            from .cache import DirectoryCache
            cache = DirectoryCache(self.cache_dir)
        basis = pipeline(self.max_degree, cache)
        for n in range(1, min(self.max_degree, self.check_kernel_up_to) + 1):
            if not same_span(basis[n], kernel_oracle(n), n):
                raise RuntimeError(f"degree {n}: basis span differs from the kernel "
                                   "of the reduced coproduct")
        return basis
