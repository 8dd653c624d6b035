import random
from fractions import Fraction

import pytest

from algforge.algebra import (algebra_direct_sum, centralizer,
                              conjugate_algebra, generate, incidence_algebra)
from algforge.constructions import (blockwise_rank1_nonneg_covering,
                                    central_eigenvalue_split,
                                    centralizer_covering,
                                    classify_positive_generation,
                                    direct_sum_min_nonneg_generators,
                                    direct_sum_nonneg_covering,
                                    nonneg_basis_from_generators,
                                    nonneg_generators_from_covering,
                                    positive_generators_from_positive,
                                    positive_single_generator,
                                    predict_padded_conjugation,
                                    scalar_extension_positive_generators,
                                    semicommuting_pair,
                                    single_generator_nonneg,
                                    solve_all_dimensions,
                                    uniformize_rank1_idempotent)
from algforge.incidence import (IncidencePattern, incidence_of_dimension,
                                pattern_from_positions,
                                triangularize_incidence)
from algforge.matrices import (Mat, commutator, companion, conjugate,
                               direct_sum, identity, is_nonneg, is_positive,
                               jordan_cell, matrix_unit, ones, support,
                               uniformizer, zero)
from algforge.polynomials import Poly
from algforge.spectral import JordanSpec
from algforge.verify import verify_certificate

F = Fraction


def diag(*vals):
    n = len(vals)
    return Mat.from_rows([[vals[i] if i == j else 0 for j in range(n)]
                          for i in range(n)])


def upper_ones(n):
    return Mat.from_rows([[1 if j >= i else 0 for j in range(n)]
                          for i in range(n)])


T2 = incidence_algebra(incidence_of_dimension(2, 3))
D2 = incidence_algebra(incidence_of_dimension(2, 2))
M2 = generate(2, [matrix_unit(2, 1, 2), matrix_unit(2, 2, 1)])
C_LIKE = generate(2, [Mat.from_rows([[0, 1], [-1, 0]])])


# -- nonnegative / positive generating systems ---------------------------------

def test_nonneg_generators_from_covering():
    gens = nonneg_generators_from_covering(T2, upper_ones(2))
    assert all(is_nonneg(g) for g in gens)
    assert generate(2, gens) == T2
    dn = incidence_algebra(incidence_of_dimension(3, 3))
    gens = nonneg_generators_from_covering(dn, identity(3))
    assert all(is_nonneg(g) for g in gens)
    with pytest.raises(ValueError):
        nonneg_generators_from_covering(T2, identity(2))  # zero at (1,2)


def test_nonneg_basis_from_generators():
    gens = nonneg_generators_from_covering(T2, upper_ones(2))
    basis = nonneg_basis_from_generators(gens)
    assert len(basis) == T2.dim
    assert all(is_nonneg(b) for b in basis)
    assert generate(2, basis) == T2


def test_positive_generators():
    m = ones(2) + identity(2)
    full = generate(2, [matrix_unit(2, 1, 2), matrix_unit(2, 2, 1)])
    gens = positive_generators_from_positive(full, m)
    assert all(is_positive(g) for g in gens)
    assert generate(2, gens) == full
    small = generate(2, [ones(2)])
    assert generate(2, [m]).dim == 2  # the element alone already generates
    gens = positive_generators_from_positive(small, m)
    assert generate(2, gens) == small
    with pytest.raises(ValueError):
        positive_generators_from_positive(small, identity(2))


# -- rank-1 idempotent similarity ------------------------------------------------

def test_uniformize_rank1_idempotent():
    c = uniformize_rank1_idempotent(matrix_unit(2, 1, 1))
    assert conjugate(matrix_unit(2, 1, 1), c) == F(1, 2) * ones(2)
    flat = F(1, 3) * ones(3)
    c = uniformize_rank1_idempotent(flat)
    assert conjugate(flat, c) == flat
    e = Mat.from_rows([[1, 1], [0, 0]])
    c = uniformize_rank1_idempotent(e)
    assert conjugate(e, c) == F(1, 2) * ones(2)
    with pytest.raises(ValueError):
        uniformize_rank1_idempotent(Mat.from_rows([[1, 1], [0, 1]]))
    with pytest.raises(ValueError):
        uniformize_rank1_idempotent(identity(2))


def test_positive_single_generator():
    a = diag(1, 2, 2)
    c, b = positive_single_generator(a, 1)
    assert is_positive(conjugate(b, c))
    assert generate(3, [b]) == generate(3, [a])
    assert generate(3, [a]).dim == 2

    a = direct_sum([jordan_cell(2, 0), Mat.from_rows([[1]])])
    c, b = positive_single_generator(a, 1)
    assert is_positive(conjugate(b, c))
    assert generate(3, [b]) == generate(3, [a])
    assert generate(3, [a]).dim == 3

    with pytest.raises(ValueError):
        positive_single_generator(Mat.from_rows([[0, -1], [1, 0]]), 1)


def test_scalar_extension_positive_generators():
    s, gens = scalar_extension_positive_generators([diag(1, 2)])
    assert len(gens) == 1 and is_positive(gens[0])
    assert generate(3, gens).dim == 3

    s, gens = scalar_extension_positive_generators([Mat.from_rows([[1]])])
    assert len(gens) == 1
    assert generate(2, gens).dim == 2

    s, gens = scalar_extension_positive_generators(
        [matrix_unit(2, 1, 1), upper_ones(2)])
    assert len(gens) == 2 and all(is_positive(g) for g in gens)
    target = algebra_direct_sum(generate(1, []), T2)
    assert generate(3, gens) == conjugate_algebra(target, s)
    assert generate(3, gens).dim == 4


# -- padded conjugation blocks ---------------------------------------------------

def test_predict_padded_conjugation():
    t = Mat.from_rows([[2, 3], [4, 5]])
    b = predict_padded_conjugation(t, 1)
    assert b == Mat.from_rows([[1, 1, 3], [1, 1, 3], [2, 2, 5]])
    c = direct_sum([uniformizer(2), identity(1)])
    assert b == conjugate(direct_sum([zero(1), t]), c)
    # norm of the flat block: t1 / (pad + 1)
    t = Mat.from_rows([[6, 0], [0, 1]])
    b = predict_padded_conjugation(t, 2)
    from algforge.matrices import uniform_norm
    assert uniform_norm(b.submatrix(range(3), range(3))) == 2
    with pytest.raises(ValueError):
        predict_padded_conjugation(Mat.from_rows([[0, 1], [1, 0]]), 1)


def test_padded_conjugation_sign_propagation():
    rng = random.Random(41)
    for _ in range(30):
        k2 = rng.randint(2, 4)
        pad = rng.randint(1, 3)
        rows = [[F(rng.randint(0, 9)) for _ in range(k2)] for _ in range(k2)]
        rows[0][0] = F(rng.randint(1, 9))
        t = Mat.from_rows(rows)
        b = predict_padded_conjugation(t, pad)
        assert is_nonneg(b)
        rows = [[F(rng.randint(1, 9)) for _ in range(k2)] for _ in range(k2)]
        t = Mat.from_rows(rows)
        assert is_positive(predict_padded_conjugation(t, pad))


# -- direct sums -----------------------------------------------------------------

def test_direct_sum_nonneg_covering():
    cert = direct_sum_nonneg_covering(C_LIKE, T2, upper_ones(2))
    assert verify_certificate(cert) == []
    cert = direct_sum_nonneg_covering(generate(1, []), D2, identity(2))
    assert verify_certificate(cert) == []
    holey = Mat.from_rows([[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        direct_sum_nonneg_covering(C_LIKE, T2, holey)
    with pytest.raises(ValueError):
        direct_sum_nonneg_covering(C_LIKE, generate(1, []), identity(1))


def test_direct_sum_min_nonneg_generators():
    left = diag(2)
    z = [upper_ones(2), diag(2, 1)]
    sum_gens = [(left, zero(2)), (zero(1), z[0]), (zero(1), z[1])]
    cert = direct_sum_min_nonneg_generators(sum_gens, z)
    assert verify_certificate(cert) == []
    assert len(cert.outputs) == 2 * len(sum_gens)  # same cardinality

    # strictly positive right generators give strictly positive output
    zp = [ones(2) + identity(2)]
    sum_gens = [(diag(5), zp[0])]
    cert = direct_sum_min_nonneg_generators(sum_gens, zp)
    assert verify_certificate(cert) == []
    assert any(p["kind"] == "positive" for p in cert.properties)

    with pytest.raises(ValueError):
        direct_sum_min_nonneg_generators([(diag(1), zero(1))], [identity(1)])


def test_blockwise_rank1_nonneg_covering():
    cert = blockwise_rank1_nonneg_covering(
        [M2, M2], [matrix_unit(2, 1, 1), matrix_unit(2, 1, 1)])
    assert verify_certificate(cert) == []
    # the replicated subalgebra {X (+) X} is covered by the same element
    s = cert.transform
    conj = cert.outputs[0]
    rep = generate(4, [direct_sum([matrix_unit(2, 1, 2), matrix_unit(2, 1, 2)]),
                       direct_sum([matrix_unit(2, 2, 1), matrix_unit(2, 2, 1)])])
    from algforge.matrices import inverse, support_union
    s_inv = inverse(s)
    rep_support = support_union([s_inv @ b @ s for b in rep.basis])
    assert support(conj) == rep_support

    cert = blockwise_rank1_nonneg_covering([M2], [matrix_unit(2, 2, 2)])
    assert verify_certificate(cert) == []

    with pytest.raises(ValueError):
        blockwise_rank1_nonneg_covering([M2], [zero(2)])
    with pytest.raises(ValueError):
        blockwise_rank1_nonneg_covering(
            [M2, M2], [zero(2), matrix_unit(2, 1, 1)])


# -- centralizers and centers ----------------------------------------------------

def test_centralizer_covering_examples():
    a, r_hat, cert = centralizer_covering(JordanSpec(((F(0), (2,)),)))
    assert a == jordan_cell(2, 0)
    assert r_hat == identity(2) + jordan_cell(2, 0)
    assert verify_certificate(cert) == []

    spec = JordanSpec(((F(0), (2, 1)),))
    a, r_hat, cert = centralizer_covering(spec)
    assert centralizer(a).dim == 5
    assert verify_certificate(cert) == []
    # regular-form block shapes: 2x2, 2x1, 1x2, 1x1
    assert r_hat.data[0][1] == 1 and r_hat.data[0][2] == 1
    assert r_hat.data[2][2] == 1 and r_hat.data[2][0] == 0

    spec = JordanSpec(((F(1), (1,)), (F(2), (1,))))
    a, r_hat, cert = centralizer_covering(spec)
    assert r_hat == identity(2)
    assert verify_certificate(cert) == []


def test_centralizer_covering_multi_group():
    spec = JordanSpec(((F(1), (2,)), (F(2), (1,)), (F(3), (2, 1))))
    a, r_hat, cert = centralizer_covering(spec)
    assert verify_certificate(cert) == []
    assert centralizer(a).dim == spec.centralizer_dimension()
    # pivot group not last: permutation path
    spec = JordanSpec(((F(1), (2,)), (F(2), (1,))))
    a, r_hat, cert = centralizer_covering(spec)
    assert verify_certificate(cert) == []
    # fractional eigenvalues stay exact
    spec = JordanSpec(((F(1, 2), (2,)), (F(-3, 4), (1, 1))))
    a, r_hat, cert = centralizer_covering(spec)
    assert verify_certificate(cert) == []


def test_central_eigenvalue_split():
    z = jordan_cell(2, 1)
    alg = generate(2, [z])
    cert = central_eigenvalue_split(alg, z, 1)
    assert verify_certificate(cert) == []
    assert cert.outputs[0] == identity(2) + jordan_cell(2, 0)

    z = direct_sum([diag(2), jordan_cell(2, 1)])
    alg = generate(3, [z])
    cert = central_eigenvalue_split(alg, z, 1)
    assert verify_certificate(cert) == []

    with pytest.raises(ValueError):
        central_eigenvalue_split(generate(2, []), identity(2), 1)
    with pytest.raises(ValueError):
        central_eigenvalue_split(alg, z, 7)


def test_single_generator_nonneg():
    cert = single_generator_nonneg(jordan_cell(3, 0))
    assert verify_certificate(cert) == []
    assert cert.outputs[0] == jordan_cell(3, 0)

    a = direct_sum([diag(5), jordan_cell(2, 0)])
    cert = single_generator_nonneg(a)
    assert verify_certificate(cert) == []
    assert is_nonneg(cert.outputs[0])
    assert generate(3, [cert.outputs[0]]).dim == generate(3, [a]).dim

    # multiplicity-1 rational eigenvalue routes through the scalar extension
    a = direct_sum([diag(2), jordan_cell(2, 3)])
    cert = single_generator_nonneg(a)
    assert verify_certificate(cert) == []

    # several nilpotent cells plus an invertible part, off Jordan coordinates
    from oracles import random_unimodular
    a0 = direct_sum([diag(7), jordan_cell(2, 0), jordan_cell(1, 0)])
    a = conjugate(a0, random_unimodular(random.Random(2), 4))
    cert = single_generator_nonneg(a)
    assert verify_certificate(cert) == []

    with pytest.raises(ValueError):
        single_generator_nonneg(Mat.from_rows([[0, -1], [1, 0]]))


# -- incidence constructions -----------------------------------------------------

def test_incidence_of_dimension():
    pat = incidence_of_dimension(5, 11)
    strict = pat.strict()
    assert strict == {(4, 5), (3, 5), (3, 4), (2, 5), (2, 4), (2, 3)}
    assert incidence_of_dimension(4, 4).strict() == set()
    full = incidence_of_dimension(4, 10)
    assert full.positions == frozenset((i, j) for i in range(1, 5)
                                       for j in range(i, 5))
    with pytest.raises(ValueError):
        incidence_of_dimension(3, 2)
    with pytest.raises(ValueError):
        incidence_of_dimension(3, 7)
    with pytest.raises(ValueError):
        incidence_of_dimension(1, 1)


def test_incidence_of_dimension_always_valid():
    # every (n, k) yields a transitive antisymmetric pattern of size k
    for n in range(2, 7):
        for k in range(n, n * (n + 1) // 2 + 1):
            pat = incidence_of_dimension(n, k)  # invariants checked on init
            assert pat.size == k


def test_triangularize_incidence():
    pat = pattern_from_positions(2, [(2, 1)])
    assert triangularize_incidence(pat) == [1, 0]
    pat = pattern_from_positions(3, [(1, 2), (1, 3)])
    assert triangularize_incidence(pat) == [0, 1, 2]
    pat = pattern_from_positions(3, [(3, 1), (3, 2)])
    order = triangularize_incidence(pat)
    assert order[0] == 2
    with pytest.raises(ValueError):
        IncidencePattern(2, frozenset({(1, 1), (2, 2), (1, 2), (2, 1)}))


def test_semicommuting_pair():
    pat = incidence_of_dimension(3, 6)
    a, d, cert = semicommuting_pair(pat)
    assert a == upper_ones(3)
    assert d == diag(3, 2, 1)
    comm = commutator(d, a)
    assert is_nonneg(comm)
    assert verify_certificate(cert) == []
    assert generate(3, [a, d]).dim == 6

    pat = incidence_of_dimension(4, 4)
    a, d, cert = semicommuting_pair(pat)
    assert a == identity(4)
    assert generate(4, [a, d]).dim == 4
    assert verify_certificate(cert) == []

    pat = pattern_from_positions(2, [(2, 1)])
    a, d, cert = semicommuting_pair(pat)
    assert is_nonneg(a) and is_nonneg(d)
    assert support(a).positions == pat.positions
    assert verify_certificate(cert) == []


def test_solve_all_dimensions():
    certs = solve_all_dimensions(2)
    assert len(certs) == 2
    for k, cert in zip([2, 3], certs):
        assert verify_certificate(cert) == []
        dims = [p["value"] for p in cert.properties if p["kind"] == "dimension"]
        assert dims == [k]
    with pytest.raises(ValueError):
        solve_all_dimensions(1)


# -- classification ----------------------------------------------------------------

def test_classify_positive_generation():
    cert = classify_positive_generation(M2, budget=8, seed=0)
    assert cert is not None and cert.claim == "positive-generation"
    assert verify_certificate(cert) == []

    assert classify_positive_generation(C_LIKE, budget=64, seed=0) is None

    sqrt2 = generate(2, [companion(Poly.of(-2, 0, 1))])
    cert = classify_positive_generation(sqrt2, budget=8, seed=0)
    assert cert is not None and cert.claim == "simple-real-eigenvalue-witness"
    assert verify_certificate(cert) == []


def test_classify_deterministic():
    a = generate(3, [diag(1, 2, 3)])
    c1 = classify_positive_generation(a, budget=16, seed=5)
    c2 = classify_positive_generation(a, budget=16, seed=5)
    assert c1 is not None and c1.to_json() == c2.to_json()


def test_commutative_case_pipeline():
    # commutative algebra R (+) B: classification succeeds with rational data
    # and the scalar-extension pipeline exhibits the positive system
    b_gen = jordan_cell(2, 1)
    alg = algebra_direct_sum(generate(1, []), generate(2, [b_gen]))
    cert = classify_positive_generation(alg, budget=16, seed=0)
    assert cert is not None and cert.claim == "positive-generation"
    assert verify_certificate(cert) == []
    s, gens = scalar_extension_positive_generators([b_gen])
    assert all(is_positive(g) for g in gens)
    assert generate(3, gens) == conjugate_algebra(alg, s)
