"""Constructive transforms: positivity, nonnegative coverings, direct sums,
centralizers, incidence algebras and semi-commuting generator pairs.

Every routine either returns verified data or raises; routines producing a
Certificate assert exactly re-checkable properties about the stored
matrices.  All randomized searches take an explicit seed and are fully
reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .algebra import (Algebra, algebra_direct_sum, centralizer,
                      conjugate_algebra, generate, incidence_algebra)
from .certificates import (Certificate, prop_central, prop_conjugate_of,
                           prop_covers, prop_covers_conjugated,
                           prop_dimension, prop_generate_equal,
                           prop_generate_equal_conjugated,
                           prop_has_simple_real_eigenvalue, prop_in_algebra,
                           prop_in_algebra_conjugated, prop_is_centralizer,
                           prop_nonneg, prop_positive, prop_semi_commuting,
                           prop_spans_pattern)
from .incidence import (IncidencePattern, incidence_of_dimension,
                        triangularize_incidence)
from .linear import rank
from .matrices import (Mat, commutator, conjugate, direct_sum, identity,
                       inverse, is_nonneg, is_positive, matrix_unit,
                       min_support_entry, permutation_matrix, poly_at,
                       regular_triangular, support, support_union,
                       uniform_norm, uniformizer, uniformizer_inv, zero)
from .polynomials import Poly, multiplicity_one_part, poly_gcd, rational_roots
from .spectral import (JordanSpec, char_poly, eigenvalue_multiplicity,
                       generalized_eigensplit, has_simple_real_eigenvalue,
                       nilpotent_jordan_basis, rational_spectral_projector,
                       spectral_radius_bound)

ZERO = Fraction(0)
ONE = Fraction(1)


# -- nonnegative / positive generating systems --------------------------------

def nonneg_generators_from_covering(a: Algebra, m: Mat) -> list[Mat]:
    """Nonnegative generators {B_i + c_i M} + {M} from a nonnegative
    covering matrix M, with c_i = (|B_i| + 1) / min support entry of M.

    The minimum-support-entry denominator makes every shifted entry at a
    support position at least 1; regeneration is verified exactly.
    """
    if not a.contains(m):
        raise ValueError("covering candidate is not in the algebra")
    if not is_nonneg(m):
        raise ValueError("covering candidate is not nonnegative")
    if support(m) != a.support():
        raise ValueError("candidate does not cover the algebra")
    low = min_support_entry(m)
    gens = [b + ((uniform_norm(b) + 1) / low) * m for b in a.basis] + [m]
    if not all(is_nonneg(g) for g in gens):
        raise ArithmeticError("shifted generators are not nonnegative")
    if generate(a.n, gens) != a:
        raise ArithmeticError("shifted generators fail to regenerate")
    return gens


def nonneg_basis_from_generators(gens: Sequence[Mat]) -> list[Mat]:
    """A linearly independent, all-nonnegative spanning set of <gens>,
    selected greedily from products of the nonnegative generators."""
    if not gens:
        raise ValueError("empty generating set")
    n = gens[0].rows
    for g in gens:
        if not is_nonneg(g):
            raise ValueError("generators must be nonnegative")
    target = generate(n, gens)
    from collections import deque
    from .linear import EchelonSpan
    span = EchelonSpan(n * n)
    basis: list[Mat] = []
    queue: deque[Mat] = deque()

    def push(mat: Mat) -> None:
        if span.add(mat.vectorize()):
            basis.append(mat)
            queue.append(mat)

    push(identity(n))
    for g in gens:
        push(g)
    while queue:
        x = queue.popleft()
        for g in gens:
            push(x @ g)
            push(g @ x)
    if span.dim != target.dim:
        raise ArithmeticError("word closure missed part of the algebra")
    if not all(is_nonneg(b) for b in basis):
        raise ArithmeticError("a selected word is not nonnegative")
    return basis


def positive_generators_from_positive(a: Algebra, m: Mat) -> list[Mat]:
    """Positive generators from a strictly positive element, by the same
    shift scheme with the minimum entry of M as denominator."""
    if not a.contains(m):
        raise ValueError("positive candidate is not in the algebra")
    if not is_positive(m):
        raise ValueError("candidate is not strictly positive")
    low = min_support_entry(m)
    gens = [b + ((uniform_norm(b) + 1) / low) * m for b in a.basis] + [m]
    if not all(is_positive(g) for g in gens):
        raise ArithmeticError("shifted generators are not positive")
    if generate(a.n, gens) != a:
        raise ArithmeticError("shifted generators fail to regenerate")
    return gens


# -- similarity onto the flat rank-one idempotent -----------------------------

def uniformize_rank1_idempotent(e: Mat) -> Mat:
    """A nonsingular C with C^{-1} E C = ones(n)/n for a rank-1 idempotent.

    E factors as u v^T with v^T u = 1; [u | basis of ker v^T] moves E onto
    the (1,1) diagonal unit, and the swap-plus-uniformizer composition
    turns that into the flat idempotent.  The postcondition is re-checked
    exactly.
    """
    if not e.is_square:
        raise ValueError("matrix must be square")
    n = e.rows
    if e @ e != e:
        raise ValueError("matrix is not idempotent")
    rk = rank([list(r) for r in e.data], n)
    if rk != 1:
        raise ValueError("idempotent does not have rank 1")
    if n == 1:
        return identity(1)
    j0 = next(j for j in range(n) if any(e.data[i][j] for i in range(n)))
    u = e.column(j0)
    i0 = next(i for i in range(n) if u[i])
    v = tuple(e.data[i0][j] / u[i0] for j in range(n))
    if sum((a * b for a, b in zip(v, u)), ZERO) != 1:
        raise ArithmeticError("rank-1 factor trace is not 1")
    t = next(i for i in range(n) if v[i])
    kernel = []
    for i in range(n):
        if i != t:
            w = [ZERO] * n
            w[i] = ONE
            w[t] = -v[i] / v[t]
            kernel.append(tuple(w))
    cols = [u] + kernel
    c1 = Mat(n, n, tuple(zip(*cols)))
    swap = permutation_matrix([n - 1] + list(range(1, n - 1)) + [0])
    c = c1 @ swap @ uniformizer(n)
    flat = Fraction(1, n) * Mat(n, n, tuple(tuple(ONE for _ in range(n))
                                            for _ in range(n)))
    if conjugate(e, c) != flat:
        raise ArithmeticError("uniformizing similarity failed verification")
    return c


def positive_single_generator(a: Mat, lam: int | Fraction) -> tuple[Mat, Mat]:
    """(C, B) with C^{-1} B C > 0 and <B> = <A>, for a matrix with a simple
    rational eigenvalue lam.

    B = A + beta*E shifts the rank-one spectral projector E of lam by
    beta = max(n*|C^{-1}AC| + 1, 2*rho_bound(A) + 1); both postconditions
    are verified exactly.
    """
    lam = Fraction(lam)
    n = a.rows
    if eigenvalue_multiplicity(char_poly(a), lam) != 1:
        raise ValueError("eigenvalue is not simple (algebraic multiplicity 1)")
    e = rational_spectral_projector(a, lam)
    c = uniformize_rank1_idempotent(e)
    conj_a = conjugate(a, c)
    beta = max(n * uniform_norm(conj_a) + 1, 2 * spectral_radius_bound(a) + 1)
    b = a + beta * e
    if not is_positive(conjugate(b, c)):
        raise ArithmeticError("shifted generator is not positive")
    if generate(n, [b]) != generate(n, [a]):
        raise ArithmeticError("shift changed the generated algebra")
    return c, b


def scalar_extension_positive_generators(
        b_gens: Sequence[Mat]) -> tuple[Mat, list[Mat]]:
    """(S, gens): a positive generating system, of the same cardinality, of
    S^{-1} (R (+) <b_gens>) S.

    The scalar summand receives an eigenvalue above the spectral radius
    bound of the first generator, which makes it simple; the positive-form
    construction then lifts the remaining generators by support-entry
    shifts.
    """
    if not b_gens:
        raise ValueError("empty generating set")
    nb = b_gens[0].rows
    n = nb + 1
    lam = spectral_radius_bound(b_gens[0]) + 1
    lifted = [direct_sum([Mat.from_rows([[lam]]), b_gens[0]])]
    for g in b_gens[1:]:
        lifted.append(direct_sum([zero(1), g]))
    target = algebra_direct_sum(generate(1, []), generate(nb, b_gens))
    if generate(n, lifted) != target:
        raise ArithmeticError("scalar extension failed to split")
    s, b1 = positive_single_generator(lifted[0], lam)
    top = conjugate(b1, s)
    low = min_support_entry(top)
    gens = [top]
    for g in lifted[1:]:
        gc = conjugate(g, s)
        gens.append(((uniform_norm(gc) + 1) / low) * top + gc)
    if not all(is_positive(g) for g in gens):
        raise ArithmeticError("lifted generators are not positive")
    if generate(n, gens) != conjugate_algebra(target, s):
        raise ArithmeticError("lifted generators fail to regenerate")
    return s, gens


# -- direct sums ---------------------------------------------------------------

def predict_padded_conjugation(t: Mat, pad: int) -> Mat:
    """Closed-form blocks of conjugating O_pad (+) T by the padded
    uniformizer, for T with positive (1,1) entry.

    Top-left block: T_11/(pad+1) times the all-ones matrix; bottom-left
    rows repeat the first column of T scaled by 1/(pad+1); top-right
    columns repeat the first row of T; bottom-right is T without its first
    row and column.  Must equal the direct conjugation exactly.
    """
    if not t.is_square or t.rows < 2:
        raise ValueError("block must be square of size >= 2")
    if pad < 1:
        raise ValueError("padding must be at least 1")
    if t.data[0][0] <= 0:
        raise ValueError("leading entry must be positive")
    k2 = t.rows
    n = pad + k2
    scale = Fraction(1, pad + 1)
    data = [[ZERO] * n for _ in range(n)]
    alpha = t.data[0][0] * scale
    for i in range(pad + 1):
        for j in range(pad + 1):
            data[i][j] = alpha
    for i in range(pad + 1):
        for j in range(k2 - 1):
            data[i][pad + 1 + j] = t.data[0][j + 1]
    for q in range(k2 - 1):
        val = t.data[q + 1][0] * scale
        for j in range(pad + 1):
            data[pad + 1 + q][j] = val
    for i in range(k2 - 1):
        for j in range(k2 - 1):
            data[pad + 1 + i][pad + 1 + j] = t.data[i + 1][j + 1]
    return Mat(n, n, tuple(tuple(row) for row in data))


def _padded_uniformizer(pad: int, rest: int) -> tuple[Mat, Mat]:
    c = direct_sum([uniformizer(pad + 1), identity(rest)])
    c_inv = direct_sum([uniformizer_inv(pad + 1), identity(rest)])
    return c, c_inv


def direct_sum_nonneg_covering(left: Algebra, right: Algebra,
                               covering: Mat) -> Certificate:
    """Certificate that the conjugated direct sum has a nonnegative
    covering matrix, given a nonnegative covering of the right summand."""
    k1, k2 = left.n, right.n
    if k1 < 1:
        raise ValueError("left summand must be nonempty")
    if k2 < 2:
        raise ValueError("right summand of size 1 routes to the scalar"
                         " extension construction")
    if not right.contains(covering):
        raise ValueError("covering candidate is not in the right algebra")
    if not is_nonneg(covering):
        raise ValueError("covering candidate is not nonnegative")
    if support(covering) != right.support():
        raise ValueError("candidate does not cover the right algebra")
    c, c_inv = _padded_uniformizer(k1, k2 - 1)
    padded = direct_sum([zero(k1), covering])
    conj = c_inv @ padded @ c
    if not is_nonneg(conj):
        raise ArithmeticError("conjugated covering is not nonnegative")
    expected = predict_padded_conjugation(covering, k1)
    if conj != expected:
        raise ArithmeticError("block prediction mismatch")
    sum_alg = algebra_direct_sum(left, right)
    conj_support = support_union([c_inv @ b @ c for b in sum_alg.basis])
    if support(conj) != conj_support:
        raise ArithmeticError("conjugated covering misses support positions")
    return Certificate(
        claim="direct-sum-nonneg-covering",
        inputs={"left": left, "right": right, "covering": covering,
                "sum": sum_alg},
        transform=c,
        outputs=(padded, conj),
        properties=(
            prop_in_algebra("out:0", "in:sum"),
            prop_conjugate_of("out:1", "out:0"),
            prop_nonneg("out:1"),
            prop_covers_conjugated("out:1", "in:sum"),
        ),
    )


def _min_nonneg_shift(a_blk: Mat, b_blk: Mat, z_blk: Mat) -> tuple[Fraction, Mat]:
    """Shift amount and the lifted generator A (+) (zI + Z).

    z starts at max((k1+1)*|K^{-1}(A (+) [0])K| + 1, 2*rho_bound(A (+) B) + 1)
    and is bumped past the finitely many values at which the two diagonal
    blocks would share an eigenvalue (checked by an exact gcd of
    characteristic polynomials).
    """
    k1, k2 = a_blk.rows, b_blk.rows
    ku, ku_inv = uniformizer(k1 + 1), uniformizer_inv(k1 + 1)
    lifted_a = direct_sum([a_blk, zero(1)])
    bound1 = (k1 + 1) * uniform_norm(ku_inv @ lifted_a @ ku) + 1
    bound2 = 2 * spectral_radius_bound(direct_sum([a_blk, b_blk])) + 1
    z = max(bound1, bound2)
    chi_a = char_poly(a_blk)
    while True:
        shifted = z * identity(k2) + z_blk
        if poly_gcd(chi_a, char_poly(shifted)).degree == 0:
            break
        z += 1
    return z, direct_sum([a_blk, shifted])


def direct_sum_min_nonneg_generators(
        sum_gens: Sequence[tuple[Mat, Mat]],
        right_gens: Sequence[Mat]) -> Certificate:
    """Certificate: a same-cardinality nonnegative generating system of the
    conjugated direct sum, from generators {A_i (+) B_i} of the sum and a
    nonnegative generating list of the right summand.

    The right generator list is padded with zero matrices up to the number
    of sum generators.
    """
    if not sum_gens:
        raise ValueError("empty generating set for the sum")
    k1 = sum_gens[0][0].rows
    k2 = sum_gens[0][1].rows
    if k1 < 1:
        raise ValueError("left summand must be nonempty")
    if k2 < 2:
        raise ValueError("right summand of size 1 routes to the scalar"
                         " extension construction")
    l = len(sum_gens)
    if len(right_gens) > l:
        raise ValueError("more right generators than sum generators")
    for zm in right_gens:
        if not is_nonneg(zm):
            raise ValueError("right generators must be nonnegative")
    z_list = list(right_gens) + [zero(k2)] * (l - len(right_gens))
    left_alg = generate(k1, [p for p, _ in sum_gens])
    right_alg = generate(k2, [q for _, q in sum_gens])
    sum_alg = algebra_direct_sum(left_alg, right_alg)
    paired = [direct_sum([p, q]) for p, q in sum_gens]
    if generate(k1 + k2, paired) != sum_alg:
        raise ValueError("the paired generators do not generate the direct sum")
    if generate(k2, right_gens) != right_alg:
        raise ValueError("right generators do not generate the right summand")
    c, c_inv = _padded_uniformizer(k1, k2 - 1)
    lifted: list[Mat] = []
    conj: list[Mat] = []
    for (a_blk, b_blk), z_blk in zip(sum_gens, z_list):
        _, u = _min_nonneg_shift(a_blk, b_blk, z_blk)
        lifted.append(u)
        conj.append(c_inv @ u @ c)
    for cu, z_blk in zip(conj, z_list):
        if not is_nonneg(cu):
            raise ArithmeticError("conjugated lifted generator not nonnegative")
        if is_positive(z_blk) and not is_positive(cu):
            raise ArithmeticError("positivity was not preserved")
    if generate(k1 + k2, lifted) != sum_alg:
        raise ArithmeticError("lifted generators fail to regenerate the sum")
    props = [prop_generate_equal(
        [f"out:{i}" for i in range(l)],
        [f"in:sum_gens:{i}" for i in range(l)])]
    for i in range(l):
        props.append(prop_conjugate_of(f"out:{l + i}", f"out:{i}"))
        if is_positive(z_list[i]):
            props.append(prop_positive(f"out:{l + i}"))
        else:
            props.append(prop_nonneg(f"out:{l + i}"))
    return Certificate(
        claim="direct-sum-min-nonneg-generators",
        inputs={"sum_gens": paired, "right_gens": list(right_gens)},
        transform=c,
        outputs=tuple(lifted + conj),
        properties=tuple(props),
    )


def blockwise_rank1_nonneg_covering(blocks: Sequence[Algebra],
                                    parts: Sequence[Mat]) -> Certificate:
    """Certificate from an element of a block-diagonal sum whose blockwise
    parts are zero or rank-1 idempotents (zero parts trailing): the
    conjugated element is nonnegative and covers the conjugated sum."""
    if len(blocks) != len(parts):
        raise ValueError("one part per block required")
    if not blocks:
        raise ValueError("no blocks")
    nonzero = [i for i, p in enumerate(parts) if any(v for row in p.data for v in row)]
    if not nonzero:
        raise ValueError("all parts are zero")
    m = nonzero[-1] + 1
    if nonzero != list(range(m)):
        raise ValueError("zero parts must trail the nonzero parts")
    for alg, p in zip(blocks, parts):
        if p.rows != alg.n:
            raise ValueError("part size mismatch")
        if not alg.contains(p):
            raise ValueError("part is not in its block algebra")
    for i in range(m):
        p = parts[i]
        if p @ p != p or rank([list(r) for r in p.data], p.rows) != 1:
            raise ValueError("nonzero part is not a rank-1 idempotent")
    tail = sum(blocks[i].n for i in range(m, len(blocks)))
    sims = [uniformize_rank1_idempotent(parts[i]) for i in range(m - 1)]
    merged = direct_sum([parts[m - 1], zero(tail)])
    sims.append(uniformize_rank1_idempotent(merged))
    s = direct_sum(sims)
    e = direct_sum(list(parts))
    conj = conjugate(e, s)
    if not is_nonneg(conj):
        raise ArithmeticError("conjugated idempotent sum is not nonnegative")
    sum_alg = blocks[0]
    for alg in blocks[1:]:
        sum_alg = algebra_direct_sum(sum_alg, alg)
    s_inv = inverse(s)
    conj_support = support_union([s_inv @ b @ s for b in sum_alg.basis])
    if support(conj) != conj_support:
        raise ArithmeticError("conjugated element misses support positions")
    return Certificate(
        claim="blockwise-rank1-nonneg-covering",
        inputs={"sum": sum_alg, "element": e},
        transform=s,
        outputs=(conj,),
        properties=(
            prop_in_algebra("in:element", "in:sum"),
            prop_conjugate_of("out:0", "in:element"),
            prop_nonneg("out:0"),
            prop_covers_conjugated("out:0", "in:sum"),
        ),
    )


# -- centralizers and centers --------------------------------------------------

def _allones_regular_block(sizes: Sequence[int]) -> Mat:
    """The centralizer covering of one nilpotent-type eigenvalue group:
    every block an all-ones regular triangular form."""
    total = sum(sizes)
    data = [[ZERO] * total for _ in range(total)]
    roff = 0
    for p in sizes:
        coff = 0
        for q in sizes:
            blk = regular_triangular(p, q, [ONE] * min(p, q))
            for i in range(p):
                for j in range(q):
                    if blk.data[i][j]:
                        data[roff + i][coff + j] = blk.data[i][j]
            coff += q
        roff += p
    return Mat(total, total, tuple(tuple(row) for row in data))


def centralizer_covering(spec: JordanSpec) -> tuple[Mat, Mat, Certificate]:
    """(jordan matrix, all-ones covering, certificate) for the centralizer
    of the given Jordan data: the blockwise all-ones regular forms cover the
    centralizer directly, and the certificate composes the direct-sum
    machinery across eigenvalue groups."""
    a = spec.assemble()
    n = spec.n
    cent = centralizer(a)
    if cent.dim != spec.centralizer_dimension():
        raise ArithmeticError("centralizer dimension mismatch")
    group_sizes = [sum(sizes) for _, sizes in spec.blocks]
    group_covers = [_allones_regular_block(sizes) for _, sizes in spec.blocks]
    allones_cover = direct_sum(group_covers)

    pivot = None
    for idx in range(len(spec.blocks) - 1, -1, -1):
        if group_sizes[idx] >= 2:
            pivot = idx
            break
    if len(spec.blocks) == 1 or pivot is None:
        # single group, or a fully diagonal centralizer: covers as is
        c_total = identity(n)
        embedded = allones_cover
        final = allones_cover
    else:
        order = [i for i in range(len(spec.blocks)) if i != pivot] + [pivot]
        offsets = [0]
        for gs in group_sizes:
            offsets.append(offsets[-1] + gs)
        positions = {}
        newoff = 0
        for gi in order:
            positions[gi] = newoff
            newoff += group_sizes[gi]
        images = [0] * n
        for gi in range(len(spec.blocks)):
            for t in range(group_sizes[gi]):
                images[offsets[gi] + t] = positions[gi] + t
        # perm maps original coordinate to permuted coordinate
        perm = permutation_matrix([images.index(i) for i in range(n)])
        k2 = group_sizes[pivot]
        k1 = n - k2
        c2, c2_inv = _padded_uniformizer(k1, k2 - 1)
        padded = direct_sum([zero(k1), group_covers[pivot]])
        final = c2_inv @ padded @ c2
        if not is_nonneg(final):
            raise ArithmeticError("composed covering is not nonnegative")
        c_total = perm @ c2
        embedded = perm @ padded @ inverse(perm)
    cinv = inverse(c_total)
    conj_support = support_union([cinv @ b @ c_total for b in cent.basis])
    if support(final) != conj_support:
        raise ArithmeticError("covering misses centralizer support")
    if conjugate(embedded, c_total) != final:
        raise ArithmeticError("embedded covering does not conjugate correctly")
    cert = Certificate(
        claim="centralizer-nonneg-covering",
        inputs={"jordan": a, "centralizer": cent, "embedded": embedded},
        transform=c_total,
        outputs=(allones_cover, final),
        properties=(
            prop_is_centralizer("in:centralizer", "in:jordan"),
            prop_nonneg("out:0"),
            prop_in_algebra("out:0", "in:centralizer"),
            prop_covers("out:0", "in:centralizer"),
            prop_in_algebra("in:embedded", "in:centralizer"),
            prop_conjugate_of("out:1", "in:embedded"),
            prop_nonneg("out:1"),
            prop_covers_conjugated("out:1", "in:centralizer"),
        ),
    )
    return a, allones_cover, cert


def central_eigenvalue_split(a: Algebra, z: Mat,
                             lam: int | Fraction) -> Certificate:
    """Certificate that an algebra whose center contains a matrix with a
    rational eigenvalue of geometric multiplicity 1 has a nonnegative
    covering up to similarity."""
    lam = Fraction(lam)
    n = a.n
    if not a.contains(z):
        raise ValueError("central candidate is not in the algebra")
    if any(z @ b != b @ z for b in a.basis):
        raise ValueError("candidate is not central")
    shifted = z - lam * identity(n)
    rk = rank([list(r) for r in shifted.data], n)
    if rk == n:
        raise ValueError("not an eigenvalue of the central element")
    if rk != n - 1:
        raise ValueError("eigenvalue has geometric multiplicity > 1")
    k = eigenvalue_multiplicity(char_poly(z), lam)

    if k == n:
        c_total, sizes = nilpotent_jordan_basis(shifted)
        if sizes != (n,):
            raise ArithmeticError("expected a single jordan chain")
        cell = conjugate(z, c_total)
        nil = cell - lam * identity(n)
        final = poly_at(Poly.of(1, 1) ** (n - 1), nil)  # (I + N)^(n-1)
    elif k == 1:
        proj = rational_spectral_projector(z, lam)
        c_total = uniformize_rank1_idempotent(proj)
        final = conjugate(proj, c_total)
        if not is_positive(final):
            raise ArithmeticError("flat idempotent is not positive")
    else:
        c1, m, sizes = generalized_eigensplit(z, lam)
        if m != k or sizes != (k,):
            raise ArithmeticError("expected one jordan cell for the eigenvalue")
        conj_alg = conjugate_algebra(a, c1)
        k1 = n - k
        for x in conj_alg.basis:
            for i in range(n):
                for j in range(n):
                    if (i < k1) != (j < k1) and x.data[i][j]:
                        raise ArithmeticError("central split is not block diagonal")
        cell = conjugate(z, c1).submatrix(range(k1, n), range(k1, n))
        nil = cell - lam * identity(k)
        t = poly_at(Poly.of(1, 1) ** (k - 1), nil)
        c2, c2_inv = _padded_uniformizer(k1, k - 1)
        padded = direct_sum([zero(k1), t])
        final = c2_inv @ padded @ c2
        c_total = c1 @ c2
    if not is_nonneg(final):
        raise ArithmeticError("covering is not nonnegative")
    cinv = inverse(c_total)
    conj_support = support_union([cinv @ b @ c_total for b in a.basis])
    if support(final) != conj_support:
        raise ArithmeticError("covering misses algebra support")
    if not conjugate_algebra(a, c_total).contains(final):
        raise ArithmeticError("covering left the conjugated algebra")
    return Certificate(
        claim="center-split-nonneg-covering",
        inputs={"algebra": a, "central": z},
        transform=c_total,
        outputs=(final,),
        properties=(
            prop_central("in:central", "in:algebra"),
            prop_nonneg("out:0"),
            prop_in_algebra_conjugated("out:0", "in:algebra"),
            prop_covers_conjugated("out:0", "in:algebra"),
        ),
    )


def single_generator_nonneg(a: Mat) -> Certificate:
    """Certificate: <A> is generated by one nonnegative matrix up to
    similarity, for A with at least one rational eigenvalue.

    The smallest rational eigenvalue is shifted to zero; the nilpotent part
    is brought to Jordan form (nonnegative); when an invertible complement
    remains, a single shifted generator is produced as in the minimal
    direct-sum construction.
    """
    n = a.rows
    roots = rational_roots(char_poly(a))
    if not roots:
        raise ValueError("no rational eigenvalue available")
    lam = roots[0][0]
    m = roots[0][1]
    a0 = a - lam * identity(n)
    if m == n:
        c_total, _ = nilpotent_jordan_basis(a0)
        gen_out = conjugate(a0, c_total)
    else:
        c1, mult, _ = generalized_eigensplit(a, lam)
        if mult != m:
            raise ArithmeticError("projector rank disagrees with multiplicity")
        split = conjugate(a0, c1)
        k1 = n - m
        p_blk = split.submatrix(range(k1), range(k1))
        q_blk = split.submatrix(range(k1, n), range(k1, n))
        for i in range(n):
            for j in range(n):
                if (i < k1) != (j < k1) and split.data[i][j]:
                    raise ArithmeticError("eigensplit is not block diagonal")
        if m == 1:
            # <P (+) [0]> = R in the trailing slot: move it up front and use
            # the scalar extension construction on the single generator P.
            cycle = permutation_matrix([(i - 1) % n for i in range(n)])
            s, gens = scalar_extension_positive_generators([p_blk])
            c_total = c1 @ cycle @ s
            gen_out = gens[0]
        else:
            _, u = _min_nonneg_shift(p_blk, q_blk, q_blk)
            c2, c2_inv = _padded_uniformizer(k1, m - 1)
            if generate(n, [u]) != generate(n, [split]):
                raise ArithmeticError("shifted generator changed the algebra")
            gen_out = c2_inv @ u @ c2
            c_total = c1 @ c2
    if not is_nonneg(gen_out):
        raise ArithmeticError("final generator is not nonnegative")
    if generate(n, [gen_out]) != conjugate_algebra(generate(n, [a]), c_total):
        raise ArithmeticError("final generator spans the wrong algebra")
    return Certificate(
        claim="single-generator-nonneg",
        inputs={"generator": a},
        transform=c_total,
        outputs=(gen_out,),
        properties=(
            prop_nonneg("out:0"),
            prop_generate_equal_conjugated(["out:0"], ["in:generator"]),
        ),
    )


# -- incidence algebras and the dimension table --------------------------------

def semicommuting_pair(p: IncidencePattern) -> tuple[Mat, Mat, Certificate]:
    """(A, D, certificate): the all-units covering matrix and a strictly
    decreasing positive diagonal, conjugated back through a triangularizing
    permutation when the pattern is not upper-triangular.

    The certificate orders the outputs (D, A) so the asserted commutator
    [D, A] is nonnegative, and checks that the pair generates exactly the
    span of the pattern's matrix units.
    """
    n = p.n
    if p.is_upper_triangular:
        a = _pattern_sum(p)
        d = direct_sum([Mat.from_rows([[n - i]]) for i in range(n)])
    else:
        order = triangularize_incidence(p)
        ranks = {orig + 1: pos + 1 for pos, orig in enumerate(order)}
        tri = p.relabel(ranks)
        a_tri = _pattern_sum(tri)
        d_tri = direct_sum([Mat.from_rows([[n - i]]) for i in range(n)])
        perm = permutation_matrix(order)
        perm_inv = inverse(perm)
        a = conjugate(a_tri, perm_inv)
        d = conjugate(d_tri, perm_inv)
    comm = commutator(d, a)
    if not is_nonneg(a) or not is_nonneg(d) or not is_nonneg(comm):
        raise ArithmeticError("pair construction lost nonnegativity")
    target = incidence_algebra(p)
    if generate(n, [a, d]) != target:
        raise ArithmeticError("pair fails to generate the incidence algebra")
    cert = Certificate(
        claim="semicommuting-incidence-pair",
        inputs={"pattern": p},
        transform=None,
        outputs=(d, a),
        properties=(
            prop_nonneg("out:0"),
            prop_nonneg("out:1"),
            prop_semi_commuting("out:0", "out:1", "nonneg"),
            prop_spans_pattern(["out:0", "out:1"], "in:pattern"),
            prop_dimension(["out:0", "out:1"], p.size),
        ),
    )
    return a, d, cert


def _pattern_sum(p: IncidencePattern) -> Mat:
    acc = zero(p.n)
    for (i, j) in p.sorted_positions():
        acc = acc + matrix_unit(p.n, i, j)
    return acc


def solve_all_dimensions(n: int) -> list[Certificate]:
    """One verified semi-commuting nonnegative pair per realizable
    dimension k with n <= k <= n(n+1)/2."""
    if n < 2:
        raise ValueError("need n >= 2")
    certs = []
    for k in range(n, n * (n + 1) // 2 + 1):
        pattern = incidence_of_dimension(n, k)
        _, _, cert = semicommuting_pair(pattern)
        certs.append(cert)
    return certs


# -- positive-generation classification -----------------------------------------

def classify_positive_generation(a: Algebra, budget: int = 64,
                                 seed: int = 0) -> Certificate | None:
    """Semi-decision for positive generation up to similarity.

    Tests every basis element and `budget` seeded random rational
    combinations for a simple real eigenvalue.  A hit with a rational
    simple eigenvalue yields a full positive-generation certificate; an
    irrational hit yields an existence-only witness.  Returns None
    (unknown) otherwise -- never a definite 'no'.
    """
    rng = random.Random(seed)
    candidates = list(a.basis)
    d = a.dim
    for _ in range(budget):
        combo = zero(a.n)
        for b in a.basis:
            num = rng.randint(-9, 9)
            den = rng.randint(1, 4)
            if num:
                combo = combo + Fraction(num, den) * b
        candidates.append(combo)
    for x in candidates:
        if not has_simple_real_eigenvalue(x):
            continue
        m1 = multiplicity_one_part(char_poly(x))
        simple_rationals = [r for r, _ in rational_roots(m1)] if m1.degree >= 1 else []
        if simple_rationals:
            lam = simple_rationals[0]
            proj = rational_spectral_projector(x, lam)
            c = uniformize_rank1_idempotent(proj)
            conj_alg = conjugate_algebra(a, c)
            flat = conjugate(proj, c)
            gens = positive_generators_from_positive(conj_alg, flat)
            props = [prop_in_algebra("in:witness", "in:algebra")]
            props += [prop_positive(f"out:{i}") for i in range(len(gens))]
            props.append(prop_generate_equal_conjugated(
                [f"out:{i}" for i in range(len(gens))],
                [f"in:algebra_basis:{i}" for i in range(d)]))
            return Certificate(
                claim="positive-generation",
                inputs={"algebra": a, "algebra_basis": list(a.basis),
                        "witness": x},
                transform=c,
                outputs=tuple(gens),
                properties=tuple(props),
            )
        return Certificate(
            claim="simple-real-eigenvalue-witness",
            inputs={"algebra": a},
            transform=None,
            outputs=(x,),
            properties=(
                prop_in_algebra("out:0", "in:algebra"),
                prop_has_simple_real_eigenvalue("out:0"),
            ),
        )
    return None
