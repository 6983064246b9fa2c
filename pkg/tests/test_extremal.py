import numpy as np
import pytest

from janowski_schwarzian import (
    ExtremalKind,
    ExtremalSpec,
    K_series,
    PreconditionError,
    choose_pq,
    extremal_spec,
    extremal_weighted_value,
    f0_series,
    fzpq_series,
    is_admissible,
    norm_bound,
    pointwise_bound,
    schwarzian,
    solve_b,
    subordination_residual,
    validate,
)
from janowski_schwarzian.extremal import b_equation_residual, extremal_schwarzian_at_z0

from conftest import sample_params


@pytest.mark.parametrize("A,B,pq", [(1, -1, (1, 1)), (1, 0, (-1, 1)), (0.5, -0.2, (-1, -1))])
def test_choose_pq(A, B, pq):
    assert choose_pq(validate(A, B)) == pq


def test_solve_b_examples():
    assert solve_b(validate(1, -1), 0.5) == pytest.approx(0.0, abs=1e-16)
    assert solve_b(validate(1, 0), 0.5) == pytest.approx(0.5)
    p = validate(0.2, -0.5)
    b = solve_b(p, 0.5)
    assert b == pytest.approx(0.3875 / 1.525, abs=1e-15)
    assert abs(b_equation_residual(p, extremal_spec(p, 0.5))) < 1e-12


def test_solve_b_rejects_annulus():
    p = validate(-0.5, -1)  # delta1 = 1/3, annulus [1/3, 1]
    with pytest.raises(PreconditionError):
        solve_b(p, 0.5)
    assert is_admissible(p, 0.25)
    assert not is_admissible(p, -0.9)


def test_b_target_on_random_admissible():
    rng = np.random.default_rng(0)
    done = 0
    while done < 100:
        B = rng.uniform(-1, 1)
        A = rng.uniform(B, 1)
        p = validate(A, B)
        z0 = rng.uniform(-0.99, 0.99)
        if not is_admissible(p, z0):
            continue
        spec = extremal_spec(p, z0)
        assert -1 < spec.b < 1
        assert abs(b_equation_residual(p, spec)) <= 1e-12
        phi = complex(spec.schwarz_function()(z0))
        assert abs(phi - spec.p * spec.q * (2 * abs(B) * z0 ** 2 / (2 - abs(A + B) * (1 - z0 ** 2)))) <= 1e-12
        done += 1


def test_weighted_value_examples():
    p = validate(1, -1)
    for z0 in np.linspace(-0.9, 0.9, 7):
        assert extremal_weighted_value(p, z0) == pytest.approx(2.0, abs=1e-12)
    p = validate(-0.5, -1)
    assert extremal_weighted_value(p, 0.25) == pytest.approx((1 - 0.0625) ** 2 * pointwise_bound(p, 0.25),
                                                              abs=1e-12)
    p = validate(0.5, -0.95)
    rep = norm_bound(p)
    assert extremal_weighted_value(p, rep.alpha) == pytest.approx(rep.bound, abs=1e-12)


@pytest.mark.parametrize("region", ["E1", "E2", "E3"])
def test_closed_form_matches_constructed_phi(region):
    rng = np.random.default_rng(1)
    for p in sample_params(region, 20, seed=20 + len(region)):
        for z0 in rng.uniform(-0.95, 0.95, 5):
            if not is_admissible(p, z0):
                continue
            w = extremal_spec(p, z0).schwarz_function()
            direct = schwarzian(p, w, z0)
            closed = extremal_schwarzian_at_z0(p, z0)
            assert abs(direct.value - closed) <= 1e-9 * max(1, abs(closed))
            assert abs(direct.weighted - (1 - z0 * z0) ** 2 * pointwise_bound(p, z0)) <= 1e-9


def test_K_series_examples():
    assert np.array_equal(K_series(validate(1, -1), 5).c, [0, 1, 1, 1, 1, 1])
    for B in (-0.8, 0.3):
        c = K_series(validate(0.0, B) if B < 0 else validate(0.5, B), 6).c
        if B < 0:
            assert c[2] == pytest.approx(-B / 2)
            assert np.allclose(c[1:], [(-1) ** (n + 1) * B ** (n - 1) / n for n in range(1, 7)])


def test_K_series_exp_branch():
    from math import factorial
    A = 0.7
    c = K_series(validate(A, 0), 6).c
    assert np.allclose(c[1:], [A ** (n - 1) / factorial(n) for n in range(1, 7)], atol=1e-16)


def test_K_series_matches_ode_integration():
    from janowski_schwarzian import SchwarzFunction, series_from_schwarz
    for A, B in [(1, -1), (0.4, -0.3), (0, -0.6), (0.8, 0), (-0.5, -1), (0.9, 0.2)]:
        p = validate(A, B)
        closed = K_series(p, 20).c
        integrated = series_from_schwarz(p, SchwarzFunction.identity(), 20).c
        assert np.allclose(closed, integrated, atol=1e-12)


def test_f0_series_atanh():
    c = f0_series(validate(1, -1), 5).c
    assert np.allclose(c, [0, 1, 0, 1 / 3, 0, 1 / 5], atol=1e-15)


def test_roundtrip_and_normalisation():
    for A, B in [(1, -1), (0.3, -0.7), (-0.5, -1), (0.9, 0.4), (0.5, -0.95)]:
        p = validate(A, B)
        specs = [ExtremalSpec(ExtremalKind.K), ExtremalSpec(ExtremalKind.F0)]
        specs += [extremal_spec(p, z0) for z0 in (-0.3, 0.2) if is_admissible(p, z0)]
        for spec in specs:
            f = K_series(p, 32) if spec.kind is ExtremalKind.K else fzpq_series(p, spec, 32)
            assert f.c[0] == 0 and f.c[1] == 1
            res = subordination_residual(p, f, spec.schwarz_function())
            assert np.max(np.abs(res)) < 1e-10


def test_membership_on_grid():
    for A, B in [(0.3, -0.7), (0.5, -0.95), (-0.5, -0.9)]:
        p = validate(A, B)
        ws = [ExtremalSpec(ExtremalKind.F0).schwarz_function()]
        ws += [extremal_spec(p, z0).schwarz_function() for z0 in (0.1, -0.6) if is_admissible(p, z0)]
        r = np.linspace(0, 0.99, 40)[:, None]
        z = (r * np.exp(1j * np.linspace(0, 2 * np.pi, 33))[None, :]).ravel()
        for w in ws:
            for zi in z:
                s = schwarzian(p, w, zi)
                assert s.weighted <= (1 - abs(zi) ** 2) ** 2 * pointwise_bound(p, zi) + 1e-9
