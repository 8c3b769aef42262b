import random
from fractions import Fraction
from itertools import combinations

import pytest

from quasispin.liealg import (GenIndex, Weight, bracket, canonical_generators,
                              canonicalize, defining_matrices, is_lowering,
                              is_raising, jacobi_defect,
                              o3_subalgebra_generators, root_of,
                              weyl_dimension)
from quasispin.linalg import ExactMatrix


def test_canonicalize_zero_generator():
    s, g = canonicalize(1, -1, 2)
    assert s == 0 and g is None


def test_canonicalize_identity_on_canonical():
    s, g = canonicalize(-2, -1, 2)
    assert s == 1 and g.key() == (-2, -1)


def test_canonicalize_antisymmetric_pair():
    s1, g1 = canonicalize(-2, -1, 2)
    s2, g2 = canonicalize(1, 2, 2)
    assert g1 == g2 and {s1, s2} == {1, -1}


def test_out_of_range_rejected():
    with pytest.raises(ValueError):
        canonicalize(3, 0, 2)


def test_bracket_examples():
    n = 2
    # [F_{1,2}, F_{2,1}] = F_{11} - F_{22}, computed through the canonical
    # representatives F_{1,2} = -F_{-2,-1}, F_{2,1} = -F_{-1,-2}
    res = bracket(GenIndex(-2, -1, n), GenIndex(-1, -2, n))
    as_dict = {g.key(): c for c, g in res}
    # F_{11} = -F_{-1,-1}, F_{22} = -F_{-2,-2}
    assert as_dict == {(-2, -2): 1, (-1, -1): -1}

    # [F_{11}, F_{12}] = F_{12}: canonically [F_{-1,-1}, F_{-2,-1}]
    res = bracket(GenIndex(-1, -1, n), GenIndex(-2, -1, n))
    assert [(c, g.key()) for c, g in res] == [(Fraction(-1), (-2, -1))]

    # [F_{1,2}, F_{-1,0}] = -F_{-2,0}: the delta_{-k,i} term does fire
    res = bracket(GenIndex(-2, -1, n), GenIndex(-1, 0, n))
    assert [(c, g.key()) for c, g in res] == [(Fraction(1), (-2, 0))]


def test_bracket_antisymmetry():
    gens = canonical_generators(2)
    for a in gens:
        for b in gens:
            ab = {g.key(): c for c, g in bracket(a, b)}
            ba = {g.key(): -c for c, g in bracket(b, a)}
            assert ab == ba


def test_root_of_examples():
    n = 2
    assert root_of(GenIndex(0, -1, n)) == Weight((1, 0))       # e_1
    assert root_of(GenIndex(-1, -1, n)).is_zero()              # Cartan
    assert root_of(GenIndex(-1, -2, n)) == Weight((-1, 1))     # -e_1 + e_2


def test_polarity_matches_tableau_conventions():
    # the o3 raising operator must be F_{-1,0} so that highest weights
    # come out nonpositive
    assert is_raising(GenIndex(-1, 0, 2))
    assert is_lowering(GenIndex(0, -1, 2))
    raising = [g.key() for g in canonical_generators(2) if is_raising(g)]
    assert sorted(raising) == [(-2, -1), (-2, 0), (-2, 1), (-1, 0)]


def test_jacobi_exhaustive_o3_o5():
    for n in (1, 2):
        for a, b, c in combinations(canonical_generators(n), 3):
            assert not jacobi_defect(a, b, c)


def test_jacobi_sampled_o7():
    gens = canonical_generators(3)
    rng = random.Random(11)
    for _ in range(120):
        a, b, c = rng.sample(gens, 3)
        assert not jacobi_defect(a, b, c)


def test_defining_matrices_faithful():
    for n in (1, 2, 3):
        mats = defining_matrices(n)
        gens = canonical_generators(n)
        for a in gens:
            assert mats[a].trace().is_zero()
            for b in gens:
                lhs = mats[a].commutator(mats[b])
                rhs = ExactMatrix(2 * n + 1, 2 * n + 1)
                for c, g in bracket(a, b):
                    rhs = rhs + mats[g].scale(c)
                assert lhs == rhs
        # faithfulness: the matrices are linearly independent
        flat = ExactMatrix.from_rows(
            [[mats[g].data[i][j] for i in range(2 * n + 1)
              for j in range(2 * n + 1)] for g in gens])
        from quasispin.linalg import rank_and_kernel
        assert rank_and_kernel(flat)[0] == len(gens)


def test_defining_cartan_o3():
    from quasispin.scalars import quad
    mats = defining_matrices(1)
    f11 = mats[GenIndex(-1, -1, 1)]  # canonical form of -F_{11}
    diag = [f11.data[i][i] for i in range(3)]
    # F_{11} = diag(-1, 0, 1) in index order (-1, 0, 1)
    assert [-d for d in diag] == [quad(-1), quad(0), quad(1)]


def test_o3_subalgebra_closes():
    sub = o3_subalgebra_generators(2)
    assert len(sub) == 3
    keys = {g.key() for g in sub}
    for a in sub:
        for b in sub:
            for c, g in bracket(a, b):
                assert g.key() in keys
    # same for the o5 inside o7
    sub7 = o3_subalgebra_generators(3)
    keys7 = {g.key() for g in sub7}
    assert len(sub7) == 10
    for a in sub7:
        for b in sub7:
            for c, g in bracket(a, b):
                assert g.key() in keys7


def test_weyl_dimension_oracle():
    assert weyl_dimension(0, 0) == 1
    assert weyl_dimension(0, -1) == 5
    assert weyl_dimension(-1, -1) == 10
    assert weyl_dimension(Fraction(-1, 2), Fraction(-1, 2)) == 4
    with pytest.raises(ValueError):
        weyl_dimension(-1, 0)
    with pytest.raises(ValueError):
        weyl_dimension(0, Fraction(-1, 2))
