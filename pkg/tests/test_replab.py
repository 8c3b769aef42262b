from fractions import Fraction

import pytest

from quasispin.liealg import Weight, weyl_dimension
from quasispin.linalg import rank_and_kernel
from quasispin.replab import (O3_LOWERING, O3_RAISING,
                              NonDiagonalCartan, Representation,
                              defining_representation, extract_irreps,
                              extremal_projector_o3, fock_representation,
                              multiplicity_slices, omega_operator,
                              pf_slice_maps, tensor_power_representation,
                              theta_transport, tps_scalar_probe,
                              trivial_representation, weight_decompose)
from quasispin.scalars import quad

HALF = Fraction(1, 2)


def test_weight_decompose_defining():
    buckets = weight_decompose(defining_representation())
    comps = sorted(tuple(w.comps) for w in buckets)
    assert comps == [(-1, 0), (0, -1), (0, 0), (0, 1), (1, 0)]
    assert all(len(v) == 1 for v in buckets.values())


def test_weight_decompose_trivial():
    buckets = weight_decompose(trivial_representation())
    assert list(buckets) == [Weight((0, 0))]


def test_fock_vacuum_weight():
    rep = fock_representation(HALF)
    buckets = weight_decompose(rep)
    vac_weight = [w for w, idx in buckets.items() if 0 in idx]
    assert vac_weight == [Weight((0, -1))]


def test_extract_defining():
    irs = extract_irreps(defining_representation())
    assert len(irs) == 1
    assert irs[0].highest_weight == (Fraction(0), Fraction(-1))
    assert irs[0].dim == 5


def test_extract_trivial():
    irs = extract_irreps(trivial_representation())
    assert len(irs) == 1 and irs[0].dim == 1
    assert irs[0].highest_weight == (Fraction(0), Fraction(0))


def test_extract_fock_half():
    irs = extract_irreps(fock_representation(HALF))
    assert sum(i.dim for i in irs) == 16
    dims = sorted(i.dim for i in irs)
    assert dims == [1, 1, 1, 4, 4, 5]
    for i in irs:
        assert i.dim == weyl_dimension(*i.highest_weight)


def test_extract_tensor_square():
    irs = extract_irreps(tensor_power_representation(2))
    weights = sorted((str(a), str(b)) for a, b in
                     (i.highest_weight for i in irs))
    assert weights == [("-1", "-1"), ("0", "-2"), ("0", "0")]


def test_generator_matrices_are_homomorphic():
    from quasispin.liealg import bracket, canonical_generators
    from quasispin.linalg import ExactMatrix
    irr = extract_irreps(defining_representation())[0]
    gens = canonical_generators(2)
    for a in gens:
        for b in gens:
            lhs = irr.genmats[a].commutator(irr.genmats[b])
            rhs = ExactMatrix(irr.dim, irr.dim)
            for c, g in bracket(a, b):
                rhs = rhs + irr.genmats[g].scale(c)
            assert lhs == rhs


def test_slices_of_defining():
    irr = extract_irreps(defining_representation())[0]
    sl = multiplicity_slices(irr)
    got = {(str(T), str(N)): s.dim for (T, N), s in sl.items()}
    assert got == {("0", "-1"): 1, ("0", "1"): 1, ("-1", "0"): 1}


def test_slices_of_trivial():
    irr = extract_irreps(trivial_representation())[0]
    sl = multiplicity_slices(irr)
    assert {(str(T), str(N)): s.dim for (T, N), s in sl.items()} == \
        {("0", "0"): 1}


def test_slices_of_adjoint():
    rep = tensor_power_representation(2)
    irr = [i for i in extract_irreps(rep)
           if i.highest_weight == (Fraction(-1), Fraction(-1))][0]
    sl = multiplicity_slices(irr)
    got = {(str(T), str(N)): s.dim for (T, N), s in sl.items()}
    assert got == {("-1", "-1"): 1, ("-1", "0"): 1, ("-1", "1"): 1,
                   ("0", "0"): 1}
    # bookkeeping: 3 * 3 + 1 = 10
    assert irr.dim == 10


def test_pf_slice_maps_zero_into_missing_slice():
    irr = extract_irreps(defining_representation())[0]
    ups, downs = pf_slice_maps(irr, Fraction(0))
    # T=0: N=-1 -> N=0 has no T=0 slice; the map must be zero
    m = ups[Fraction(-1)]
    assert m.matrix.rows == 0 and m.rank == 0
    # top of the ladder: zero as well
    assert ups[Fraction(1)].rank == 0


def test_extremal_projector_identities():
    for maker in (defining_representation,
                  lambda: fock_representation(HALF)):
        for irr in extract_irreps(maker()):
            pr = extremal_projector_o3(irr)
            P = pr.matrix
            e = irr.genmats[O3_RAISING]
            f = irr.genmats[O3_LOWERING]
            assert (P @ P) == P
            assert (e @ P).is_zero()
            assert (P @ f).is_zero()
            # image is exactly the o3-highest subspace
            slices = multiplicity_slices(irr)
            total = sum(s.dim for s in slices.values())
            assert rank_and_kernel(P)[0] == total


def test_projector_on_highest_and_lowest_triplet_vectors():
    irr = extract_irreps(defining_representation())[0]
    pr = extremal_projector_o3(irr)
    slices = multiplicity_slices(irr)
    s = slices[(Fraction(-1), Fraction(0))]
    v = s.basis[0]
    assert pr.matrix.apply(v) == v  # p fixes o3-highest vectors
    # the o3-lowest vector of the triplet is killed (it lies in im f)
    f = irr.genmats[O3_LOWERING]
    low = f.apply(f.apply(v))
    assert any(low)
    assert all(not x for x in pr.matrix.apply(low))
    # the series evaluation is singular exactly on the tau0 = +1 block
    assert [tuple(map(str, w.comps)) for w in pr.singular_weights] == \
        [("1", "0")]


def test_omega_trivial_rep():
    irr = extract_irreps(trivial_representation())[0]
    om = omega_operator(irr)
    assert om.data[0][0] == quad(1)


def test_omega_defining_structure():
    irr = extract_irreps(defining_representation())[0]
    om = omega_operator(irr)
    # omega maps each weight space onto the negated one
    for mu, pos in irr.weight_positions.items():
        neg = irr.weight_positions[Weight((-mu.comps[0], -mu.comps[1]))]
        for c in pos:
            for r in range(irr.dim):
                if om.data[r][c]:
                    assert r in neg


def test_omega_conjugation_identity_everywhere():
    for maker in (defining_representation,
                  lambda: fock_representation(HALF),
                  lambda: tensor_power_representation(2)):
        for irr in extract_irreps(maker()):
            om = omega_operator(irr)
            lhs = om @ irr.pf_matrix(-1)
            rhs = (irr.pf_matrix(+1) @ om).scale(-1)
            assert lhs == rhs
            om2 = om @ om
            for g in irr.genmats:
                assert (om2 @ irr.genmats[g]) == (irr.genmats[g] @ om2)


def test_theta_maps_slices():
    rep = tensor_power_representation(2)
    irr = [i for i in extract_irreps(rep)
           if i.highest_weight == (Fraction(-1), Fraction(-1))][0]
    om = omega_operator(irr)
    th = theta_transport(irr, om, Fraction(-1))
    slices = multiplicity_slices(irr)
    src = slices[(Fraction(-1), Fraction(-1))]
    tgt = slices[(Fraction(-1), Fraction(1))]
    img = th.apply(src.basis[0])
    assert any(img)
    from quasispin.linalg import coordinates_in_basis, dense_to_svec
    coords = coordinates_in_basis(
        [dense_to_svec(b) for b in tgt.basis], dense_to_svec(img))
    assert coords is not None


def test_tps_probe_values():
    irr = extract_irreps(defining_representation())[0]
    probe = tps_scalar_probe(irr)
    rows = probe["pf_sym_scalar"]
    assert rows and all(r["matches_F11_eigenvalue"] for r in rows)
    assert all(not r["matches_D1"] for r in rows)
    t_minus1 = [r for r in rows if r["T"] == Fraction(-1)]
    assert t_minus1 and t_minus1[0]["measured"] == quad(-1)


def test_projected_pfaffian_scalar_fits_one_minus_T():
    # p.PfF_2hat = (1 - T) p.F_20 on o3-highest vectors, measured on
    # every irrep with a nonzero projected F_20 action
    rep = tensor_power_representation(3)
    found = 0
    for irr in extract_irreps(rep):
        probe = tps_scalar_probe(irr)
        if probe["c_constant"]:
            assert probe["c_fits_one_minus_T"], irr
            found += 1
    assert found > 0


def test_nondiagonal_cartan_rejected():
    from quasispin.liealg import GenIndex
    from quasispin.linalg import LinOp
    rep = defining_representation()
    broken = dict(rep.genmap)
    cart = GenIndex(-1, -1, 2)
    op = LinOp(5, {0: {1: quad(1)}})
    broken[cart] = op
    with pytest.raises(NonDiagonalCartan):
        weight_decompose(Representation("broken", 5, broken))
