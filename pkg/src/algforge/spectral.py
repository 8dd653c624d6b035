"""Exact spectral computations over Q.

Characteristic polynomials come from a similarity reduction to Hessenberg
form followed by the leading-minor recurrence; minimal polynomials from the
first linear dependency among vectorized powers.  Irrational eigenvalues
are never materialized: existence questions are answered by Sturm counts,
and every operation that needs an eigenvalue takes a rational one.  The
spectral radius is replaced throughout by the certified row-sum upper
bound, which is all the downstream shift constructions require.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra
from .linear import (EchelonSpan, complete_basis, intersect_spans, nullspace,
                     orthogonal_complement, solve, span_rows)
from .matrices import (Mat, conjugate, direct_sum, identity, inverse,
                       jordan_cell, matrix_unit, poly_at)
from .polynomials import (P_ONE, Poly, multiplicity_one_part, poly_crt,
                          poly_gcd, rational_roots, sturm_real_root_count)

ZERO = Fraction(0)
ONE = Fraction(1)


def char_poly(a: Mat) -> Poly:
    """Monic characteristic polynomial det(xI - A)."""
    if not a.is_square:
        raise ValueError("matrix must be square")
    n = a.rows
    if n == 0:
        return P_ONE
    h = [list(row) for row in a.data]
    for j in range(n - 2):
        piv = next((r for r in range(j + 1, n) if h[r][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for row in h:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        inv = ONE / h[j + 1][j]
        for r in range(j + 2, n):
            f = h[r][j] * inv
            if f:
                h[r] = [v - f * w for v, w in zip(h[r], h[j + 1])]
                for row in h:
                    row[j + 1] += f * row[r]
    # char polys of leading principal minors of the Hessenberg form
    polys = [P_ONE]
    for m in range(1, n + 1):
        p = Poly.of(-h[m - 1][m - 1], 1) * polys[m - 1]
        prod = ONE
        for k in range(1, m):
            prod *= h[m - k][m - k - 1]
            if not prod:
                break
            term = h[m - 1 - k][m - 1]
            if term:
                p = p - (prod * term) * polys[m - 1 - k]
        polys.append(p)
    return polys[n]


def min_poly(a: Mat) -> Poly:
    """Least-degree monic polynomial with p(A) = 0, via the first linear
    dependency among vectorized powers I, A, A^2, ..."""
    if not a.is_square:
        raise ValueError("matrix must be square")
    n = a.rows
    if n == 0:
        return P_ONE
    length = n * n
    rows: list[tuple[list[Fraction], list[Fraction]]] = []  # (vector, combo)
    power = identity(n)
    k = 0
    while True:
        vec = list(power.vectorize())
        combo = [ZERO] * (k + 1)
        combo[k] = ONE
        for rvec, rcombo in rows:
            piv = next(i for i, v in enumerate(rvec) if v)
            c = vec[piv]
            if c:
                for i in range(length):
                    vec[i] -= c * rvec[i]
                for i in range(len(rcombo)):
                    combo[i] -= c * rcombo[i]
        if not any(vec):
            return Poly.from_coeffs(combo[:k] + [ONE])
        piv = next(i for i, v in enumerate(vec) if v)
        inv = ONE / vec[piv]
        rows.append(([v * inv for v in vec], [c * inv for c in combo]))
        power = power @ a
        k += 1


@dataclass(frozen=True)
class CharData:
    """Exactly computable spectral data of a square matrix."""

    char: Poly
    minimal: Poly
    rational_eigenvalues: tuple[tuple[Fraction, int], ...]
    simple_real_count: int


def char_data(a: Mat) -> CharData:
    cp = char_poly(a)
    mp = min_poly(a)
    roots = tuple(rational_roots(cp)) if cp.degree >= 1 else ()
    m1 = multiplicity_one_part(cp)
    count = sturm_real_root_count(m1) if m1.degree >= 1 else 0
    return CharData(cp, mp, roots, count)


def char_data_to_json(cd: CharData) -> dict:
    from .polynomials import poly_to_json
    return {
        "char_poly": poly_to_json(cd.char),
        "min_poly": poly_to_json(cd.minimal),
        "rational_roots": [[str(r), m] for r, m in cd.rational_eigenvalues],
        "simple_real_count": cd.simple_real_count,
    }


def has_simple_real_eigenvalue(a: Mat) -> bool:
    """Whether some real eigenvalue has algebraic multiplicity exactly 1.

    Exact for irrational eigenvalues: Sturm-counts the real roots of the
    multiplicity-one part of the characteristic polynomial.
    """
    m1 = multiplicity_one_part(char_poly(a))
    if m1.degree < 1:
        return False
    return sturm_real_root_count(m1) > 0


def spectral_radius_bound(a: Mat) -> Fraction:
    """Certified upper bound for the spectral radius: max absolute row sum."""
    if not a.is_square:
        raise ValueError("matrix must be square")
    return max((sum((abs(v) for v in row), ZERO) for row in a.data), default=ZERO)


def block_projector_poly(mu_target: Poly, mu_others: Poly) -> Poly:
    """The polynomial h with h = 1 mod mu_target and h = 0 mod mu_others.

    Evaluated at P (+) Q (+) R it yields O (+) I (+) O whenever the minimal
    polynomial of Q divides mu_target and those of P, R divide mu_others.
    Raises ValueError when the inputs share a factor (overlapping spectra).
    """
    if mu_target.is_zero or mu_others.is_zero:
        raise ValueError("zero modulus")
    if poly_gcd(mu_target, mu_others).degree != 0:
        raise ValueError("spectra overlap: moduli share a factor")
    return poly_crt([(mu_target, P_ONE if mu_target.degree > 0 else Poly()),
                     (mu_others, Poly())])


def eigenvalue_multiplicity(p: Poly, lam: Fraction) -> int:
    """Multiplicity of lam as a root of p."""
    lin = Poly.of(-lam, 1)
    mult = 0
    while True:
        q, r = divmod(p, lin)
        if not r.is_zero:
            return mult
        p = q
        mult += 1


def rational_spectral_projector(a: Mat, lam: int | Fraction) -> Mat:
    """The projector onto the generalized eigenspace of a rational
    eigenvalue, along the remaining generalized eigenspaces."""
    lam = Fraction(lam)
    mu = min_poly(a)
    e = eigenvalue_multiplicity(mu, lam)
    if e == 0:
        raise ValueError("not an eigenvalue of the matrix")
    target = Poly.of(-lam, 1) ** e
    others = mu // target
    h = block_projector_poly(target, others)
    p = poly_at(h, a)
    if p @ p != p or a @ p != p @ a:
        raise ArithmeticError("projector construction failed")
    return p


def orbit_span(a: Algebra, v: Sequence[Fraction]) -> list[tuple[Fraction, ...]]:
    """Canonical basis of the smallest A-invariant subspace containing v:
    the span of {Bv : B basis}."""
    if not any(v):
        raise ValueError("zero vector")
    if len(v) != a.n:
        raise ValueError("size mismatch")
    return span_rows([b.apply(v) for b in a.basis], a.n)


def _transpose_orbit(a: Algebra, v: Sequence[Fraction]) -> list[tuple[Fraction, ...]]:
    return span_rows([b.transpose().apply(v) for b in a.basis], a.n)


@dataclass(frozen=True)
class StructuralDecomposition:
    """Block upper-triangular presentation isolating a full matrix block.

    The conjugated algebra vanishes below the block diagonal with the
    stated sizes, the middle block compresses onto the full matrix algebra
    of its size, and the diagonal matrix unit at index l (1-based) belongs
    to the conjugated algebra.  j0 indexes the distinguished block.
    """

    transform: Mat
    sizes: tuple[int, int, int]
    j0: int
    l: int
    case: int


def structural_decomposition(a: Algebra) -> StructuralDecomposition:
    """Split an algebra containing the (1,1) diagonal matrix unit along its
    minimal and maximal invariant subspaces attached to e_1.

    Case 1: both the orbit of e_1 is proper and it meets the largest
    invariant subspace orthogonal to e_1; cases 2-4 degenerate one or both.
    """
    n = a.n
    e1 = tuple(ONE if i == 0 else ZERO for i in range(n))
    if not a.contains(matrix_unit(n, 1, 1)):
        raise ValueError("algebra does not contain the (1,1) matrix unit")
    z1 = orbit_span(a, e1)
    z2 = orthogonal_complement(_transpose_orbit(a, e1), n)
    dim_z1 = len(z1)
    dim_z2 = len(z2)
    inter = intersect_spans(z1, z2, n) if dim_z2 else []

    if dim_z1 == n and not dim_z2:
        case = 4
        sizes = (0, n, 0)
        cols: list[Sequence[Fraction]] = [tuple(ONE if i == k else ZERO
                                                for i in range(n))
                                          for k in range(n)]
    elif dim_z1 == n:
        case = 3
        k = dim_z2
        sizes = (k, n - k, 0)
        cols = list(z2) + [e1]
        cols = complete_basis(cols, n)
    elif not inter:
        case = 2
        k = dim_z1
        sizes = (0, k, n - k)
        picked = EchelonSpan(n)
        picked.add(e1)
        cols = [e1]
        for row in z1:
            if picked.add(row):
                cols.append(row)
        cols = complete_basis(cols, n)
    else:
        case = 1
        k1 = len(inter)
        k2 = dim_z1 - k1
        sizes = (k1, k2, n - k1 - k2)
        picked = EchelonSpan(n)
        cols = []
        for row in inter:
            picked.add(row)
            cols.append(row)
        if not picked.add(e1):
            raise ArithmeticError("e_1 unexpectedly inside the intersection")
        cols.append(e1)
        for row in z1:
            if picked.add(row):
                cols.append(row)
        cols = complete_basis(cols, n)

    # Normalize first coordinates so the conjugation sends the (1,1) unit
    # exactly onto the (l,l) unit: every column except e_1 itself is shifted
    # into the hyperplane x_1 = 0 (allowed since e_1 lies in the orbit).
    l = sizes[0] + 1
    fixed = []
    for idx, colv in enumerate(cols):
        if idx == l - 1:
            fixed.append(tuple(colv))
        else:
            c = colv[0]
            fixed.append(tuple(v - c * e for v, e in zip(colv, e1)))
    cmat = Mat(n, n, tuple(zip(*fixed)))
    decomposition = StructuralDecomposition(cmat, sizes, 2, l, case)
    _verify_decomposition(a, decomposition)
    return decomposition


def _verify_decomposition(a: Algebra, d: StructuralDecomposition) -> None:
    n = a.n
    k1, k2, _ = d.sizes
    cinv = inverse(d.transform)
    conj = [cinv @ b @ d.transform for b in a.basis]
    s0, s1 = k1, k1 + k2
    for x in conj:
        for i in range(s0, n):
            limit = s0 if i < s1 else s1
            for j in range(limit):
                if x.data[i][j]:
                    raise ArithmeticError("conjugated algebra is not block triangular")
    span = EchelonSpan(n * n)
    for x in conj:
        span.add(x.vectorize())
    if not span.contains(matrix_unit(n, d.l, d.l).vectorize()):
        raise ArithmeticError("distinguished diagonal unit missing")
    mid = EchelonSpan(k2 * k2)
    for x in conj:
        mid.add(x.submatrix(range(s0, s1), range(s0, s1)).vectorize())
    if mid.dim != k2 * k2:
        raise ArithmeticError("distinguished block is not the full matrix algebra")


# -- Jordan structure for nilpotent matrices ---------------------------------

def nilpotent_jordan_basis(m: Mat) -> tuple[Mat, tuple[int, ...]]:
    """Columns of a similarity taking a nilpotent matrix to its Jordan form
    with block sizes sorted descending; returns (C, sizes)."""
    if not m.is_square:
        raise ValueError("matrix must be square")
    n = m.rows
    if n == 0:
        return Mat(0, 0, ()), ()
    powers = [identity(n)]
    while True:
        nxt = powers[-1] @ m
        powers.append(nxt)
        if all(v == 0 for row in nxt.data for v in row):
            break
        if len(powers) > n:
            raise ValueError("matrix is not nilpotent")
    q = len(powers) - 1  # nilpotency index
    kernels = []
    for t in range(q + 1):
        rows = [list(r) for r in powers[t].data]
        kernels.append(nullspace(rows, n) if t else [])
    sel: dict[int, list[tuple[Fraction, ...]]] = {t: [] for t in range(1, q + 2)}
    descendants: list[tuple[Fraction, ...]] = []
    for t in range(q, 0, -1):
        descendants = [m.apply(v) for v in descendants] + \
                      [m.apply(v) for v in sel[t + 1]]
        blocked = EchelonSpan(n)
        for v in kernels[t - 1]:
            blocked.add(v)
        for v in descendants:
            blocked.add(v)
        for v in kernels[t]:
            if blocked.add(v):
                sel[t].append(tuple(v))
    cols: list[tuple[Fraction, ...]] = []
    sizes: list[int] = []
    for t in range(q, 0, -1):
        for v in sel[t]:
            chain = [v]
            for _ in range(t - 1):
                chain.append(m.apply(chain[-1]))
            cols.extend(reversed(chain))
            sizes.append(t)
    if sum(sizes) != n:
        raise ArithmeticError("jordan chains do not fill the space")
    c = Mat(n, n, tuple(zip(*cols)))
    expected = direct_sum([jordan_cell(t, 0) for t in sizes])
    if conjugate(m, c) != expected:
        raise ArithmeticError("jordan basis verification failed")
    return c, tuple(sizes)


def generalized_eigensplit(a: Mat, lam: Fraction) -> tuple[Mat, int, tuple[int, ...]]:
    """Similarity C with C^{-1}(A - lam I)C = P (+) N, where N collects the
    Jordan cells of the eigenvalue and 0 is not an eigenvalue of P.

    Returns (C, m, sizes): m is the algebraic multiplicity, sizes the cell
    sizes.  The eigenvalue block sits in the trailing coordinates.
    """
    n = a.rows
    shifted = a - lam * identity(n)
    proj = rational_spectral_projector(a, lam)
    ker_rows = [list(r) for r in proj.data]
    ker_basis = nullspace(ker_rows, n)
    im_span = EchelonSpan(n)
    im_basis = []
    for j in range(n):
        colv = proj.column(j)
        if im_span.add(colv):
            im_basis.append(colv)
    m = len(im_basis)
    # matrix of the restriction of (A - lam I) to the image, in im_basis coords
    cols_matrix = [[im_basis[k][i] for k in range(m)] for i in range(n)]
    restriction_cols = []
    for v in im_basis:
        image = shifted.apply(v)
        coords = solve(cols_matrix, image)
        if coords is None:
            raise ArithmeticError("image basis does not span its image")
        restriction_cols.append(coords)
    restriction = Mat(m, m, tuple(zip(*[tuple(c) for c in restriction_cols])))
    w, sizes = nilpotent_jordan_basis(restriction)
    chain_cols = []
    for j in range(m):
        col = [ZERO] * n
        for k in range(m):
            coeff = w.data[k][j]
            if coeff:
                for i in range(n):
                    col[i] += coeff * im_basis[k][i]
        chain_cols.append(tuple(col))
    cols = [tuple(v) for v in ker_basis] + chain_cols
    c = Mat(n, n, tuple(zip(*cols)))
    inverse(c)  # raises on a bug; the columns must form a basis
    return c, m, sizes


@dataclass(frozen=True)
class JordanSpec:
    """Eigenvalue groups with their Jordan cell sizes."""

    blocks: tuple[tuple[Fraction, tuple[int, ...]], ...]

    def __post_init__(self):
        eigs = [lam for lam, _ in self.blocks]
        if len(set(eigs)) != len(eigs):
            raise ValueError("eigenvalues must be pairwise distinct")
        for _, sizes in self.blocks:
            if not sizes or any(s < 1 for s in sizes):
                raise ValueError("cell sizes must be positive")

    @property
    def n(self) -> int:
        return sum(sum(sizes) for _, sizes in self.blocks)

    def assemble(self) -> Mat:
        cells = []
        for lam, sizes in self.blocks:
            for s in sizes:
                cells.append(jordan_cell(s, lam))
        return direct_sum(cells)

    def centralizer_dimension(self) -> int:
        """Sum over eigenvalues of sum_{i,j} min(n_i, n_j)."""
        total = 0
        for _, sizes in self.blocks:
            total += sum(min(p, q) for p in sizes for q in sizes)
        return total
