"""Unital matrix algebras as echelonized bases closed under products.

The basis is the reduced row-echelon basis of the algebra's row-major
vectorization, so equal algebras have identical bases and equality is a
plain comparison.  Generation uses a worklist that multiplies each newly
independent element by the generators on both sides; the span this reaches
is exactly the span of all words in the generators, hence closed under
products.  Loaders and tests still verify closure by checking all pairwise
basis products.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import simplex
from .incidence import IncidencePattern
from .linear import EchelonSpan, nullspace
from .matrices import (Mat, Support, identity, inverse, mat_from_json,
                       mat_from_vector, mat_to_json, matrix_unit,
                       support_union, zero)

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class GenSet:
    """A nonempty list of same-size square generators."""

    n: int
    gens: tuple[Mat, ...]

    def __post_init__(self):
        if not self.gens:
            raise ValueError("empty generating set")
        for g in self.gens:
            if not (g.is_square and g.rows == self.n):
                raise ValueError("generator size mismatch")


@dataclass(frozen=True)
class Algebra:
    """A unital matrix algebra with canonical echelon basis."""

    n: int
    basis: tuple[Mat, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def _span(self) -> EchelonSpan:
        sp = EchelonSpan(self.n * self.n)
        for b in self.basis:
            sp.add(b.vectorize())
        return sp

    def contains(self, x: Mat) -> bool:
        if not (x.is_square and x.rows == self.n):
            raise ValueError("size mismatch")
        return self._span.contains(x.vectorize())

    def support(self) -> Support:
        return support_union(self.basis)

    def is_closed(self) -> bool:
        """Check span closure under all pairwise basis products."""
        sp = self._span
        return all(sp.contains((a @ b).vectorize())
                   for a in self.basis for b in self.basis)

    def is_unital(self) -> bool:
        return self.contains(identity(self.n))


def _from_span(n: int, span: EchelonSpan) -> Algebra:
    return Algebra(n, tuple(mat_from_vector(n, row) for row in span.canonical_rows()))


def generate(n: int, gens: Iterable[Mat]) -> Algebra:
    """Smallest unital algebra containing the generators.

    An empty generator list yields span{I}.
    """
    gens = list(gens)
    for g in gens:
        if not (g.is_square and g.rows == n):
            raise ValueError("generator size mismatch")
    span = EchelonSpan(n * n)
    queue: deque[Mat] = deque()

    def push(m: Mat) -> None:
        if span.add(m.vectorize()):
            queue.append(m)

    push(identity(n))
    for g in gens:
        push(g)
    while queue:
        x = queue.popleft()
        for g in gens:
            push(x @ g)
            push(g @ x)
    return _from_span(n, span)


def generate_genset(gs: GenSet) -> Algebra:
    return generate(gs.n, gs.gens)


def equal(a: Algebra, b: Algebra) -> bool:
    return a == b


def conjugate_algebra(a: Algebra, c: Mat) -> Algebra:
    """Basis-wise conjugation C^{-1} A C, re-echelonized."""
    cinv = inverse(c)
    span = EchelonSpan(a.n * a.n)
    for b in a.basis:
        span.add((cinv @ b @ c).vectorize())
    return _from_span(a.n, span)


def algebra_direct_sum(a: Algebra, b: Algebra) -> Algebra:
    """Block-diagonal sum {X (+) Y : X in A, Y in B}."""
    n = a.n + b.n
    span = EchelonSpan(n * n)
    zb, za = zero(b.n), zero(a.n)
    from .matrices import direct_sum as mat_direct_sum
    for x in a.basis:
        span.add(mat_direct_sum([x, zb]).vectorize())
    for y in b.basis:
        span.add(mat_direct_sum([za, y]).vectorize())
    return _from_span(n, span)


def covering_matrix(a: Algebra) -> Mat:
    """A member whose support is the support of the whole algebra.

    Accumulates basis elements with deterministic coefficients: each
    coefficient is the smallest positive integer that avoids cancelling any
    entry at an already-covered position.
    """
    acc = zero(a.n)
    for b in a.basis:
        bad = set()
        for i in range(a.n):
            for j in range(a.n):
                if b.data[i][j]:
                    bad.add(-acc.data[i][j] / b.data[i][j])
        c = 1
        while Fraction(c) in bad:
            c += 1
        acc = acc + c * b
    return acc


def nonneg_covering_exists(a: Algebra) -> Mat | None:
    """A nonnegative covering matrix in the algebra, or None.

    Exact rational feasibility: find coefficients x with sum x_k B_k at
    least 1 on every support position (entries off the support vanish
    identically, and by homogeneity strict positivity reduces to >= 1).
    """
    omega = a.support().sorted_positions()
    rows = [[b.data[i - 1][j - 1] for b in a.basis] for (i, j) in omega]
    rhs = [ONE] * len(rows)
    x = simplex.feasible_ge(rows, rhs)
    if x is None:
        return None
    acc = zero(a.n)
    for coef, b in zip(x, a.basis):
        if coef:
            acc = acc + coef * b
    return acc


def two_sided_ideal(a: Algebra, x: Mat) -> list[Mat]:
    """Echelon basis of the two-sided ideal generated by x inside a."""
    if not a.contains(x):
        raise ValueError("element is not in the algebra")
    span = EchelonSpan(a.n * a.n)
    for p in a.basis:
        px = p @ x
        for q in a.basis:
            span.add((px @ q).vectorize())
    return [mat_from_vector(a.n, row) for row in span.canonical_rows()]


def center(a: Algebra) -> list[Mat]:
    """Echelon basis of {X in A : XB = BX for every B in A}."""
    d = a.dim
    rows = []
    for b in a.basis:
        comm = [(c @ b - b @ c).vectorize() for c in a.basis]
        for pos in range(a.n * a.n):
            row = [comm[j][pos] for j in range(d)]
            if any(row):
                rows.append(row)
    if not rows:
        coeff_vectors = [tuple(ONE if i == j else ZERO for j in range(d))
                         for i in range(d)]
    else:
        coeff_vectors = nullspace(rows, d)
    span = EchelonSpan(a.n * a.n)
    for cv in coeff_vectors:
        acc = zero(a.n)
        for coef, b in zip(cv, a.basis):
            if coef:
                acc = acc + coef * b
        span.add(acc.vectorize())
    return [mat_from_vector(a.n, row) for row in span.canonical_rows()]


def centralizer(m: Mat) -> Algebra:
    """The full algebra {X : MX = XM}, returned closed and unital."""
    if not m.is_square:
        raise ValueError("matrix must be square")
    n = m.rows
    rows = []
    for i in range(n):
        for j in range(n):
            row = [ZERO] * (n * n)
            for k in range(n):
                row[k * n + j] += m.data[i][k]
            for l in range(n):
                row[i * n + l] -= m.data[l][j]
            if any(row):
                rows.append(row)
    vecs = nullspace(rows, n * n) if rows else [
        tuple(ONE if t == s else ZERO for t in range(n * n)) for s in range(n * n)]
    span = EchelonSpan(n * n)
    for v in vecs:
        span.add(v)
    alg = _from_span(n, span)
    if not (alg.is_unital() and alg.is_closed()):
        raise ArithmeticError("centralizer failed closure check")
    return alg


def is_simple(a: Algebra) -> bool:
    """Whether the algebra is simple as a real algebra.

    Radical first (trace-form kernel, exact in characteristic zero); a
    semisimple algebra is then simple iff its center is a field that stays
    a field over the reals: dimension 1, or dimension 2 with the quadratic
    minimal polynomial of a non-scalar central element having no real root.
    """
    d = a.dim
    gram = [[_trace(a.basis[i] @ a.basis[j]) for j in range(d)] for i in range(d)]
    if nullspace(gram, d):
        return False  # nonzero radical is a proper ideal
    zc = center(a)
    if len(zc) == 1:
        return True
    if len(zc) > 2:
        return False
    ident = identity(a.n)
    z = next((m for m in zc if not _is_scalar(m)), None)
    if z is None:
        raise ArithmeticError("two-dimensional center without non-scalar element")
    # Solve z^2 = alpha*I + beta*z; the minimal polynomial is x^2-beta*x-alpha.
    sp = EchelonSpan(a.n * a.n)
    sp.add(ident.vectorize())
    sp.add(z.vectorize())
    z2 = z @ z
    coeffs = _coords_in(z2, [ident, z])
    if coeffs is None:
        raise ArithmeticError("central element square escapes its plane")
    alpha, beta = coeffs
    disc = beta * beta + 4 * alpha
    return disc < 0


def _trace(m: Mat) -> Fraction:
    return sum((m.data[i][i] for i in range(m.rows)), ZERO)


def _is_scalar(m: Mat) -> bool:
    c = m.data[0][0]
    return all(m.data[i][j] == (c if i == j else 0)
               for i in range(m.rows) for j in range(m.cols))


def _coords_in(x: Mat, basis: Sequence[Mat]) -> list[Fraction] | None:
    from .linear import solve
    cols = [b.vectorize() for b in basis]
    rows = [[cols[k][p] for k in range(len(basis))] for p in range(len(cols[0]))]
    return solve(rows, x.vectorize())


def incidence_structure(a: Algebra) -> IncidencePattern | None:
    """The incidence pattern of the algebra when its canonical basis is a
    legal matrix-unit basis (all diagonal units present, no symmetric pair);
    None otherwise."""
    positions = []
    for b in a.basis:
        nz = [(i + 1, j + 1) for i in range(a.n) for j in range(a.n)
              if b.data[i][j]]
        if len(nz) != 1 or b.data[nz[0][0] - 1][nz[0][1] - 1] != 1:
            return None
        positions.append(nz[0])
    pos = frozenset(positions)
    if len(pos) != len(positions):
        return None
    try:
        return IncidencePattern(a.n, pos)
    except ValueError:
        return None


def incidence_algebra(p: IncidencePattern) -> Algebra:
    """The span of the pattern's matrix units (closed by transitivity)."""
    units = [matrix_unit(p.n, i, j) for (i, j) in p.sorted_positions()]
    span = EchelonSpan(p.n * p.n)
    for u in units:
        span.add(u.vectorize())
    return _from_span(p.n, span)


def contains_all_diagonal(a: Algebra) -> bool:
    return all(a.contains(matrix_unit(a.n, i, i)) for i in range(1, a.n + 1))


# -- serialization -----------------------------------------------------------

def algebra_to_json(a: Algebra) -> dict:
    return {"n": a.n, "basis": [mat_to_json(b) for b in a.basis]}


def algebra_from_json(obj: dict) -> Algebra:
    """Load and re-verify an algebra: independence, unitality, closure."""
    n = obj["n"]
    mats = [mat_from_json(m) for m in obj["basis"]]
    for m in mats:
        if not (m.is_square and m.rows == n):
            raise ValueError("basis matrix size mismatch")
    span = EchelonSpan(n * n)
    for m in mats:
        if not span.add(m.vectorize()):
            raise ValueError("basis is linearly dependent")
    alg = _from_span(n, span)
    if not alg.is_unital():
        raise ValueError("algebra is not unital")
    if not alg.is_closed():
        raise ValueError("span is not closed under products")
    return alg
