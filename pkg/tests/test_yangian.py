"""Standard modules: factor matrices, coproduct assembly, eigen data, RTT."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import ylab.yangian as ya
from ylab.exact import ONE, RatFun, linear
from ylab.grassmann import Grassmann
from ylab.yangian import (ActionMatrix, ModuleSpec, NoCandidateFactorization,
                          RelationViolated, eigen_closed, eigen_series,
                          eigenform_check, factor_action, highest_vector,
                          module_action, rtt_check, wedge_basis)

RF1 = RatFun.of(ONE)


def rf(num, den=ONE):
    return RatFun(num, den)


# ------------------------------------------------------------- single factors

def test_vector_factor_raising_entry():
    mat = factor_action(2, 1, 5, 1, 2)
    assert mat[0][1] == rf(ONE, linear(5))          # e_2 -> e_1/(u-5)
    assert mat[1][0].is_zero() and mat[0][0].is_zero() and mat[1][1].is_zero()


def test_covector_factor_raising_entry():
    z = F(3)
    mat = factor_action(2, -1, z, 1, 2)
    assert mat[1][0] == rf(-ONE, linear(z - 1))     # e_1 -> -e_2/(u-z+1)
    assert mat[0][1].is_zero()


def test_determinantal_factors_are_scalar():
    top = factor_action(2, 2, 0, 1, 1)
    assert top == ((rf(linear(-1), linear(0)),),)   # (u+1)/u
    assert factor_action(2, 2, 0, 1, 2) == ((RatFun.of(0),),)
    bot = factor_action(2, -2, 0, 1, 1)
    assert bot == ((rf(linear(0), linear(-1)),),)   # u/(u+1)


def test_degree_zero_factor_is_identity():
    assert factor_action(3, 0, 7, 2, 2) == ((RF1,),)
    assert factor_action(3, 0, 7, 1, 2) == ((RatFun.of(0),),)


def test_factor_rejects_oversized_degree():
    with pytest.raises(ValueError):
        factor_action(2, 3, 0, 1, 1)


def test_diagonal_factor_entries_sum_pattern():
    # on Lambda^1(C^3), T_ii has (u-z+1)/(u-z) at e_i and 1 elsewhere
    mat = factor_action(3, 1, 2, 2, 2)
    assert mat[1][1] == rf(linear(1), linear(2))
    assert mat[0][0] == RF1 and mat[2][2] == RF1


# ------------------------------------------------------------ module assembly

def test_single_factor_module_matches_factor():
    spec = ModuleSpec.make(3, (F(1, 2),), (2,))
    for i in range(1, 4):
        for j in range(1, 4):
            assert module_action(spec, i, j).entries == \
                factor_action(3, 2, F(1, 2), i, j)


def test_two_vector_factors_diagonal_action():
    z1, z2 = F(0), F(3)
    spec = ModuleSpec.make(2, (z1, z2), (1, 1))
    act = module_action(spec, 1, 1)
    # basis order: e1 x e1, e1 x e2, e2 x e1, e2 x e2
    col = [act.entries[r][1] for r in range(4)]
    assert col[1] == rf(linear(z1 - 1), linear(z1))
    assert col[0].is_zero() and col[2].is_zero() and col[3].is_zero()


def test_trivial_factor_insertion_changes_nothing():
    base = ModuleSpec.make(2, (F(1, 2),), (1,))
    padded = ModuleSpec.make(2, (F(1, 2), 9), (1, 0))
    for i in range(1, 3):
        for j in range(1, 3):
            assert module_action(base, i, j).entries == \
                module_action(padded, i, j).entries


@pytest.mark.parametrize("extra,scalar_num,scalar_den", [
    (-2, linear(4), linear(3)),   # bottom determinantal: (u-4)/(u-3)
    (2, linear(3), linear(4)),    # top determinantal: (u-4+1)/(u-4)
])
def test_determinantal_factor_is_central_scalar(extra, scalar_num, scalar_den):
    spec = ModuleSpec.make(2, (0, F(1, 2)), (1, -1))
    ext = ModuleSpec.make(2, (0, F(1, 2), 4), (1, -1, extra))
    scalar = rf(scalar_num, scalar_den)
    for i in range(1, 3):
        for j in range(1, 3):
            a = module_action(spec, i, j).entries
            b = module_action(ext, i, j).entries
            assert all(b[r][c] == a[r][c] * scalar
                       for r in range(spec.dim) for c in range(spec.dim))


def test_module_action_entries_are_proper():
    spec = ModuleSpec.make(3, (0, 2, F(-1, 2)), (1, -2, 3))
    bound = spec.denominator_bound()
    act = module_action(spec, 2, 3)
    assert isinstance(act, ActionMatrix)
    for row in act.entries:
        for f in row:
            assert (bound % f.den).is_zero()
            assert f.num.degree <= f.den.degree


def test_spec_validation_and_derived_data():
    with pytest.raises(ValueError):
        ModuleSpec.make(2, (0,), (3,))          # |nu| > n
    with pytest.raises(ValueError):
        ModuleSpec(2, 2, (F(0),), (1, 1))       # length mismatch
    spec = ModuleSpec.make(3, (0, F(1, 2), -2), (2, -1, 3))
    assert spec.lam == (2, F(-1, 2), 1)
    assert spec.eps == (1, -1, 1)
    assert spec.nubar == (2, 2, 3)
    assert spec.lambar == (2, F(5, 2), 1)
    assert spec.dim == 3 * 3 * 1
    assert spec.permuted((2, 3, 1)).mu == (-2, 0, F(1, 2))


# ------------------------------------------------------------ highest vectors

def test_highest_vector_examples():
    assert highest_vector(ModuleSpec.make(2, (0,), (2,))).index == 0
    hv = highest_vector(ModuleSpec.make(3, (0,), (-2,)))
    assert wedge_basis(3, 2)[hv.index] == (2, 3)
    hv2 = highest_vector(ModuleSpec.make(2, (0, 0), (1, -1)))
    assert hv2.index == 1 and hv2.coords[1] == 1
    assert sum(hv2.coords) == 1


def test_highest_vector_matches_grassmann_encoding():
    spec = ModuleSpec.make(3, (0, 1, 2), (2, -1, 3))
    G = Grassmann(spec.m, spec.n)
    tuples = tuple(ya.highest_factor_tuple(spec.n, d) for d in spec.nu)
    mask = G.alpha_encode(tuples)
    basis = G.basis_of_weight(spec.abs_nu)
    assert basis.index(mask) == highest_vector(spec).index


# ---------------------------------------------------------------- eigenvalues

def test_eigen_closed_all_vector_factors():
    z1, z2 = F(0), F(5)
    spec = ModuleSpec.make(2, (z1, z2), (2, 1))
    a1 = eigen_series(spec, 1)
    assert a1 == rf(linear(z1 - 1) * linear(z2 - 1), linear(z1) * linear(z2))
    a2 = eigen_series(spec, 2)
    assert a2 == rf(linear(z1 - 1), linear(z1))


def test_eigen_closed_full_covector():
    spec = ModuleSpec.make(2, (F(1, 2),), (-2,))
    for i in (1, 2):
        assert eigen_series(spec, i) == rf(linear(F(1, 2)), linear(F(-1, 2)))


def test_eigen_trivial_module():
    spec = ModuleSpec.make(3, (4, -1), (0, 0))
    assert all(eigen_series(spec, i) == RF1 for i in (1, 2, 3))


def test_eigen_series_mixed_spec_consistent():
    spec = ModuleSpec.make(3, (0, 5, F(1, 2)), (1, -1, 2))
    for i in (1, 2, 3):
        assert eigen_series(spec, i) == eigen_closed(spec, i)


# -------------------------------------------------------------- RTT sampling

@pytest.mark.parametrize("n,mu,nu", [
    (2, (0,), (1,)),
    (2, (F(1, 2),), (-1,)),
    (3, (2,), (3,)),
    (2, (0, 1), (1, 1)),
    (2, (0, 0), (1, -1)),
    (3, (0, F(1, 2)), (2, -1)),
])
def test_rtt_passes(n, mu, nu):
    spec = ModuleSpec.make(n, mu, nu)
    report = rtt_check(spec)
    assert report.passed and report.pairs > 2 * report.degree_bound


def test_rtt_rejects_undersampling():
    spec = ModuleSpec.make(2, (0,), (1,))
    with pytest.raises(ValueError):
        rtt_check(spec, samples=6)


def test_rtt_detects_corruption(monkeypatch):
    spec = ModuleSpec.make(2, (0, 1), (1, 1))
    orig = ya._numeric_action

    def corrupted(s, u0):
        mats, bound = orig(s, u0)
        mats = mats.copy()
        mats[0, 1, 0, 0] = mats[0, 1, 0, 0] + 1
        return mats, bound + 1

    monkeypatch.setattr(ya, "_numeric_action", corrupted)
    with pytest.raises(RelationViolated):
        rtt_check(spec)


# ------------------------------------------------------- eigenvalue spectrum

def test_spectrum_single_vector_factor():
    report = eigenform_check(ModuleSpec.make(2, (0,), (1,)))
    assert report.passed
    # multiset {1, (u+1)/u}: labels are (I, J, multiplicity)
    assert sorted(report.spectrum[0]) == [((), (), 1), ((0,), (), 1)]


def test_spectrum_single_covector_factor():
    report = eigenform_check(ModuleSpec.make(2, (F(1, 2),), (-1,)))
    assert sorted(report.spectrum[0]) == [((), (), 1), ((), (0,), 1)]


def test_spectrum_two_vector_factors():
    report = eigenform_check(ModuleSpec.make(2, (0, 5), (1, 1)))
    assert report.dim == 4
    assert sorted(report.spectrum[0]) == [
        ((), (), 1), ((0,), (), 1), ((0, 1), (), 1), ((1,), (), 1)]


def test_spectrum_mixed_signs():
    report = eigenform_check(ModuleSpec.make(2, (0, 5), (1, -1)))
    assert report.passed and report.dim == 4


def test_spectrum_dimension_cap():
    with pytest.raises(ValueError):
        eigenform_check(ModuleSpec.make(3, (0, 1, 2, 3), (1, 1, 1, 1)))


# ------------------------------------------------------------------ property

spec_strategy = st.builds(
    lambda n, pairs: ModuleSpec.make(
        n, tuple(p[0] for p in pairs),
        tuple(min(max(p[1], -n), n) for p in pairs)),
    st.integers(min_value=1, max_value=2),
    st.lists(st.tuples(st.sampled_from([F(0), F(1), F(-1), F(1, 2), F(3)]),
                       st.integers(min_value=-2, max_value=2)),
             min_size=1, max_size=2))


@given(spec_strategy)
@settings(max_examples=20, deadline=None)
def test_rtt_and_eigen_on_random_specs(spec):
    assert rtt_check(spec).passed
    for i in range(1, spec.n + 1):
        assert eigen_series(spec, i) == eigen_closed(spec, i)
