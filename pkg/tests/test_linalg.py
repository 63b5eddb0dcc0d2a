"""Linear algebra: elimination identities, subspace lattice, fuzzing."""

import random

import pytest

from transvect import gf
from transvect.errors import DimensionMismatch, NoSolution, Singular
from transvect.linalg import Mat, Subspace, dot, is_zero_vec, outer, vec_add, vec_scale


def rand_mat(F, nr, nc, rng):
    return Mat(F, tuple(tuple(rng.randrange(F.q) for _ in range(nc)) for _ in range(nr)))


def test_rref_frozen_example():
    F = gf.field_create(2, 1)
    M = Mat(F, [(1, 1, 0), (1, 0, 1), (0, 1, 1)])
    red, piv = M.rref()
    assert piv == (0, 1)
    assert red.rows == ((1, 0, 1), (0, 1, 1), (0, 0, 0))
    assert M.rank() == 2
    assert M.det() == 0


def test_det_rank_inverse_fuzz():
    rng = random.Random(11)
    for F in [gf.field_create(2, 1), gf.field_create(3, 1), gf.field_create(2, 2),
              gf.field_create(5, 1), gf.field_create(3, 2)]:
        for _ in range(40):
            n = rng.randrange(1, 5)
            M = rand_mat(F, n, n, rng)
            d = M.det()
            if d != 0:
                Mi = M.inv()
                assert M.mul(Mi).is_identity()
                assert Mi.mul(M).is_identity()
                assert M.rank() == n
            else:
                assert M.rank() < n
                with pytest.raises(Singular):
                    M.inv()


def test_det_multiplicative():
    rng = random.Random(5)
    F = gf.field_create(3, 2)
    for _ in range(30):
        A = rand_mat(F, 3, 3, rng)
        B = rand_mat(F, 3, 3, rng)
        assert A.mul(B).det() == F.mul(A.det(), B.det())


def test_kernel_and_solve():
    rng = random.Random(13)
    for F in [gf.field_create(2, 1), gf.field_create(3, 1), gf.field_create(2, 2)]:
        for _ in range(40):
            nr = rng.randrange(1, 5)
            nc = rng.randrange(1, 5)
            M = rand_mat(F, nr, nc, rng)
            ker = M.kernel()
            assert len(ker) == nc - M.rank()
            for v in ker:
                assert is_zero_vec(M.matvec(v))
            x0 = tuple(rng.randrange(F.q) for _ in range(nc))
            b = M.matvec(x0)
            x = M.solve(b)
            assert M.matvec(x) == b
            # inconsistent system detection
            if M.rank() < nr:
                # pick b outside the column space when it exists
                img = Subspace(F, nr, M.image())
                for cand in range(F.q ** nr):
                    vv = tuple((cand // F.q ** i) % F.q for i in range(nr))
                    if not img.contains(vv):
                        with pytest.raises(NoSolution):
                            M.solve(vv)
                        break


def test_matvec_vecmat_outer():
    F = gf.field_create(3, 1)
    M = Mat(F, [(1, 2), (0, 1)])
    assert M.matvec((1, 1)) == (0, 1)
    assert M.vecmat((1, 1)) == (1, 0)
    O = outer(F, (1, 2), (0, 1))
    assert O.rows == ((0, 1), (0, 2))
    assert O.rank() == 1


def test_transpose_trace_pow():
    F = gf.field_create(5, 1)
    M = Mat(F, [(1, 2), (3, 4)])
    assert M.transpose().rows == ((1, 3), (2, 4))
    assert M.trace() == 0  # 1+4 = 5 = 0
    assert M.pow(0).is_identity()
    assert M.pow(3) == M.mul(M).mul(M)
    if M.det() != 0:
        assert M.pow(-1) == M.inv()


def test_subspace_canonical_equality():
    F = gf.field_create(3, 1)
    S1 = Subspace(F, 3, [(1, 1, 0), (0, 0, 1)])
    S2 = Subspace(F, 3, [(2, 2, 1), (1, 1, 1)])
    assert S1 == S2
    assert hash(S1) == hash(S2)
    assert S1.dim == 2


def test_subspace_lattice_fuzz():
    rng = random.Random(17)
    for F in [gf.field_create(2, 1), gf.field_create(3, 1), gf.field_create(2, 2)]:
        n = 4
        for _ in range(30):
            A = Subspace(F, n, [tuple(rng.randrange(F.q) for _ in range(n))
                                for _ in range(rng.randrange(3))])
            B = Subspace(F, n, [tuple(rng.randrange(F.q) for _ in range(n))
                                for _ in range(rng.randrange(3))])
            S = A.sum(B)
            I = A.intersect(B)
            assert S.contains_space(A) and S.contains_space(B)
            assert A.contains_space(I) and B.contains_space(I)
            assert S.dim + I.dim == A.dim + B.dim
            # double annihilator is the identity
            assert A.perp().perp() == A
            assert A.perp().dim == n - A.dim
            for row in A.perp().basis:
                for v in A.basis:
                    assert dot(F, row, v) == 0


def test_lex_least_nonzero():
    F = gf.field_create(3, 1)
    S = Subspace(F, 3, [(1, 0, 2), (0, 1, 1)])
    least = S.lex_least_nonzero()
    assert least == (0, 1, 1)
    # exhaustive confirmation
    all_nonzero = [v for v in S.elements() if not is_zero_vec(v)]
    assert min(all_nonzero) == least


def test_subspace_elements_count():
    F = gf.field_create(2, 2)
    S = Subspace(F, 3, [(1, 0, 0), (0, 1, 0)])
    els = list(S.elements())
    assert len(els) == F.q ** 2
    assert len(set(els)) == F.q ** 2
    assert all(S.contains(v) for v in els)


def test_dimension_errors():
    F = gf.field_create(2, 1)
    M = Mat(F, [(1, 0)])
    with pytest.raises(DimensionMismatch):
        M.det()
    with pytest.raises(DimensionMismatch):
        M.matvec((1,))
    with pytest.raises(DimensionMismatch):
        Mat(F, [(1, 0), (1,)])


def test_json_roundtrip():
    F = gf.field_create(3, 2)
    M = Mat(F, [(1, 8), (0, 3)])
    assert Mat.from_json(F, M.to_json()) == M
