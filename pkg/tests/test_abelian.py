"""Integer linear algebra and abelian group tests.

The Smith routine is verified against its defining equation (U M V = S with
unimodular U, V) on a randomized battery; group direct sums are checked
against a prime-factorization oracle; homology of free complexes is checked
against an independent rank-nullity computation over the rationals.
"""

import random
from fractions import Fraction

import pytest
import sympy

from elltree.abelian import (
    AbHom,
    ChainComplexFg,
    FgAbGroup,
    IntMatrix,
    PresentedGroup,
    canonical_group,
    cyclic_group_homology,
    determinant,
    direct_sum_groups,
    homology_at,
    invariant_factors,
    kernel_basis,
    matrix_rank,
    smith_normal_form,
)


def rational_rank(mat):
    """Oracle: Gaussian elimination over Q."""
    rows = [[Fraction(v) for v in r] for r in mat.rows]
    rank = 0
    for j in range(mat.ncols):
        piv = next((i for i in range(rank, mat.nrows) if rows[i][j]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][j]
        rows[rank] = [v * inv for v in rows[rank]]
        for i in range(mat.nrows):
            if i != rank and rows[i][j]:
                c = rows[i][j]
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def crt_invariant_factors(orders):
    """Oracle: merge cyclic orders into invariant factors by prime powers."""
    primes = {}
    for n in orders:
        for p, e in sympy.factorint(n).items():
            primes.setdefault(p, []).append(e)
    width = max((len(v) for v in primes.values()), default=0)
    factors = []
    for slot in range(width):
        f = 1
        for p, exps in primes.items():
            exps = sorted(exps, reverse=True)
            if slot < len(exps):
                f *= p ** exps[slot]
        factors.append(f)
    return tuple(sorted(factors))


def check_snf(mat):
    U, S, V = smith_normal_form(mat)
    assert (U @ mat) @ V == S
    assert abs(determinant(U)) == 1
    assert abs(determinant(V)) == 1
    diag = [S.at(i, i) for i in range(min(S.nrows, S.ncols))]
    for i in range(S.nrows):
        for j in range(S.ncols):
            if i != j:
                assert S.at(i, j) == 0
    nz = [d for d in diag if d]
    assert diag[: len(nz)] == nz, "zeros must trail"
    for a, b in zip(nz, nz[1:]):
        assert a > 0 and b % a == 0
    return nz


def test_snf_examples():
    nz = check_snf(IntMatrix([[2, 0], [0, 3]]))
    assert nz == [1, 6]
    nz = check_snf(IntMatrix([[4, 6], [2, 2]]))
    assert nz == [2, 2]


def test_snf_empty_and_degenerate():
    assert check_snf(IntMatrix.zeros(0, 3)) == []
    assert check_snf(IntMatrix.zeros(3, 0)) == []
    assert check_snf(IntMatrix.zeros(2, 2)) == []
    assert check_snf(IntMatrix([[7]])) == [7]
    assert check_snf(IntMatrix([[-7]])) == [7]


def test_snf_randomized_battery():
    rng = random.Random(20230823)
    for _ in range(300):
        m = rng.randint(1, 8)
        n = rng.randint(1, 8)
        mat = IntMatrix(
            [[rng.randint(-10, 10) for _ in range(n)] for _ in range(m)]
        )
        nz = check_snf(mat)
        assert len(nz) == rational_rank(mat)


def test_snf_deterministic():
    mat = IntMatrix([[6, 4, 2], [2, 8, 4], [10, 2, 6]])
    runs = {smith_normal_form(mat)[1].rows for _ in range(3)}
    assert len(runs) == 1


def test_invariant_factors_conjugation_invariant():
    rng = random.Random(7)
    base = IntMatrix([[rng.randint(-5, 5) for _ in range(5)] for _ in range(4)])
    baseline = invariant_factors(base)
    # permuting rows and columns and flipping signs is unimodular
    rows = [list(r) for r in base.rows]
    rng.shuffle(rows)
    rows = [r[::-1] for r in rows]
    rows[0] = [-v for v in rows[0]]
    assert invariant_factors(IntMatrix(rows)) == baseline


def test_kernel_basis_property():
    rng = random.Random(11)
    for _ in range(50):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        mat = IntMatrix([[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)])
        K = kernel_basis(mat)
        assert (mat @ K).is_zero()
        assert K.ncols == n - rational_rank(mat)
        # basis vectors are independent over Q
        assert rational_rank(K) == K.ncols


def test_fgab_canonical_validation():
    with pytest.raises(ValueError):
        FgAbGroup(0, (3, 2))
    with pytest.raises(ValueError):
        FgAbGroup(0, (1,))
    assert repr(FgAbGroup(1, (2, 4))) == "Z + Z/2 + Z/4"


def test_direct_sum_crt_oracle():
    assert direct_sum_groups([FgAbGroup(0, (2,)), FgAbGroup(0, (3,))]) == FgAbGroup(0, (6,))
    rng = random.Random(5)
    for _ in range(40):
        orders = [rng.randint(2, 30) for _ in range(rng.randint(1, 5))]
        got = direct_sum_groups([FgAbGroup(0, (d,)) for d in orders])
        assert got.rank == 0
        assert tuple(sorted(got.torsion)) == crt_invariant_factors(orders)
        for a, b in zip(got.torsion, got.torsion[1:]):
            assert b % a == 0


def test_canonical_group_example():
    P = PresentedGroup(2, IntMatrix([[2, 0], [0, 3]]))
    assert canonical_group(P) == FgAbGroup(0, (6,))
    free = PresentedGroup(3)
    assert canonical_group(free) == FgAbGroup(3, ())


def test_presented_from_group_round_trip():
    for fg in [FgAbGroup(2, (2, 6)), FgAbGroup(0, ()), FgAbGroup(1, (5,))]:
        assert PresentedGroup.from_group(fg).canonical() == fg


def test_abhom_well_definedness():
    z2 = PresentedGroup(1, IntMatrix([[2]]))
    z4 = PresentedGroup(1, IntMatrix([[4]]))
    # Z/4 -> Z/2 reduction is fine
    AbHom(z4, z2, IntMatrix([[1]]))
    # Z/2 -> Z/4 sending the generator to the generator is not a hom
    with pytest.raises(ValueError):
        AbHom(z2, z4, IntMatrix([[1]]))
    # but doubling is
    AbHom(z2, z4, IntMatrix([[2]]))


def test_abhom_compose_and_zero():
    z6 = PresentedGroup(1, IntMatrix([[6]]))
    z3 = PresentedGroup(1, IntMatrix([[3]]))
    f = AbHom(z6, z3, IntMatrix([[1]]))
    g = AbHom(z3, z3, IntMatrix([[3]]))  # multiplication by 3 is zero on Z/3
    assert g.is_zero_hom()
    assert g.compose(f).is_zero_hom()


def test_abhom_is_isomorphism():
    z6 = PresentedGroup(1, IntMatrix([[6]]))
    other = PresentedGroup(2, IntMatrix([[2, 0], [0, 3]]))  # Z/2 + Z/3 = Z/6
    h = AbHom(z6, other, IntMatrix([[1], [1]]))
    assert h.is_isomorphism()
    assert not AbHom(z6, z6, IntMatrix([[2]])).is_isomorphism()
    assert AbHom.identity(other).is_isomorphism()
    # injective but not surjective on free parts
    z = PresentedGroup(1)
    assert not AbHom(z, z, IntMatrix([[2]])).is_isomorphism()


def free_complex(mats):
    """Complex of free groups from boundary matrices d1, d2, ..."""
    groups = [PresentedGroup.free(mats[0].nrows)]
    for m in mats:
        groups.append(PresentedGroup.free(m.ncols))
    bnds = [
        AbHom(groups[i + 1], groups[i], m, check=False) for i, m in enumerate(mats)
    ]
    return ChainComplexFg(groups, bnds)


def test_homology_two_term_multiplication():
    cx = free_complex([IntMatrix([[2]])])
    assert homology_at(cx, 0) == FgAbGroup(0, (2,))
    assert homology_at(cx, 1) == FgAbGroup(0, ())


def test_homology_zero_map():
    cx = free_complex([IntMatrix([[0]])])
    assert homology_at(cx, 0) == FgAbGroup(1, ())
    assert homology_at(cx, 1) == FgAbGroup(1, ())


def test_homology_circle():
    # triangle as a graph: three vertices, three edges around
    d1 = IntMatrix([[-1, 0, 1], [1, -1, 0], [0, 1, -1]])
    cx = free_complex([d1])
    assert homology_at(cx, 0) == FgAbGroup(1, ())
    assert homology_at(cx, 1) == FgAbGroup(1, ())


def test_homology_outside_range_is_zero():
    cx = free_complex([IntMatrix([[2]])])
    assert homology_at(cx, 5).is_trivial
    assert homology_at(cx, -1).is_trivial


def test_homology_with_presented_groups():
    # Z/4 --inclusion of 2Z/4-- ... check a small presented complex:
    # C1 = Z/2 -> C0 = Z/4 by doubling; kernel is 0, image is 2Z/4
    z4 = PresentedGroup(1, IntMatrix([[4]]))
    z2 = PresentedGroup(1, IntMatrix([[2]]))
    d1 = AbHom(z2, z4, IntMatrix([[2]]))
    cx = ChainComplexFg([z4, z2], [d1])
    assert homology_at(cx, 0) == FgAbGroup(0, (2,))
    assert homology_at(cx, 1) == FgAbGroup(0, ())


def test_homology_rank_nullity_oracle():
    """homology_at vs rank over Q plus torsion of d2, on random complexes."""
    rng = random.Random(20230824)
    count = 0
    while count < 100:
        n1 = rng.randint(1, 6)
        n0 = rng.randint(1, 6)
        d1 = IntMatrix([[rng.randint(-3, 3) for _ in range(n1)] for _ in range(n0)])
        K = kernel_basis(d1)
        if K.ncols == 0:
            d2 = IntMatrix.zeros(n1, 1)
        else:
            width = rng.randint(1, 4)
            R = IntMatrix(
                [[rng.randint(-3, 3) for _ in range(width)] for _ in range(K.ncols)]
            )
            d2 = K @ R
        assert (d1 @ d2).is_zero()
        cx = free_complex([d1, d2])
        got = homology_at(cx, 1)
        betti = n1 - rational_rank(d1) - rational_rank(d2)
        torsion = tuple(d for d in invariant_factors(d2) if d > 1)
        assert got == FgAbGroup(betti, torsion)
        count += 1


def test_matrix_rank_matches_rational_rank():
    rng = random.Random(3)
    for _ in range(50):
        m, n = rng.randint(1, 7), rng.randint(1, 7)
        mat = IntMatrix([[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)])
        assert matrix_rank(mat) == rational_rank(mat)


def test_cyclic_homology_closed_form():
    assert cyclic_group_homology(4, 0) == FgAbGroup(1, ())
    assert cyclic_group_homology(4, 1) == FgAbGroup(0, (4,))
    assert cyclic_group_homology(4, 2) == FgAbGroup(0, ())
    assert cyclic_group_homology(4, 3) == FgAbGroup(0, (4,))
    assert cyclic_group_homology(1, 2).is_trivial


def test_chain_complex_rejects_nonzero_composite():
    g = [PresentedGroup.free(1), PresentedGroup.free(1), PresentedGroup.free(1)]
    good = ChainComplexFg(
        g, [AbHom(g[1], g[0], IntMatrix([[2]]), check=False), AbHom(g[2], g[1], IntMatrix([[0]]), check=False)]
    )
    assert homology_at(good, 0) == FgAbGroup(0, (2,))
    with pytest.raises(ValueError):
        ChainComplexFg(
            g,
            [
                AbHom(g[1], g[0], IntMatrix([[2]]), check=False),
                AbHom(g[2], g[1], IntMatrix([[1]]), check=False),
            ],
        )


def test_block_diag_and_hstack_shapes():
    a = IntMatrix([[1, 2]])
    b = IntMatrix.zeros(0, 3)
    c = IntMatrix.block_diag([a, b])
    assert (c.nrows, c.ncols) == (1, 5)
    d = IntMatrix.zeros(1, 0).hstack(a)
    assert d == a
