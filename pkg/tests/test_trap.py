import math
from dataclasses import replace

import pytest

from mesoscope import (CGS, default_config, design_trap, em_force,
                       grad_product_check, release_check, spreading_velocity,
                       spread_time)
from mesoscope.errors import NonPositiveInput

GEOM, MIRROR, _ = default_config()
NU, ETA = 1e-3, 1e-1


@pytest.fixture(scope="module")
def symbolic_design():
    return design_trap(MIRROR, GEOM, NU, ETA)


@pytest.fixture(scope="module")
def collapsed_design():
    return design_trap(MIRROR, GEOM, NU, ETA, mode="collapsed")


def test_symbolic_design_frozen(symbolic_design):
    d = symbolic_design
    # frozen from the h-based chain (oracle: energy balance + induction chain)
    assert math.isclose(d.k, 1.2189184801284521e-6, rel_tol=1e-12)
    assert math.isclose(d.omega_os, 332882.5181963877, rel_tol=1e-12)
    assert math.isclose(d.grad_product, 1.6324477553691986e11, rel_tol=1e-11)
    assert math.isclose(d.B0, 808.071223437439, rel_tol=1e-11)


def test_collapsed_design_matches_quoted_reference(collapsed_design):
    d = collapsed_design
    # the folded reference chain reproduces the quoted design numbers
    assert math.isclose(d.k, 1.1e-6, rel_tol=0.05)
    assert math.isclose(d.omega_os, 3.2e5, rel_tol=0.05)
    assert math.isclose(d.grad_product, 1.8e11, rel_tol=0.25)
    assert math.isclose(d.B0, 8.5e2, rel_tol=0.10)


def test_modes_agree_within_folding_slack(symbolic_design, collapsed_design):
    # the two chains differ only through the ~5% spreading-velocity folding
    assert math.isclose(symbolic_design.k, collapsed_design.k, rel_tol=0.11)
    assert math.isclose(symbolic_design.B0, collapsed_design.B0, rel_tol=0.06)


def test_oscillator_consistency(symbolic_design):
    assert math.isclose(symbolic_design.omega_os ** 2 * MIRROR.mass_M,
                        symbolic_design.k, rel_tol=1e-12)


def test_atom_count(symbolic_design):
    assert math.isclose(symbolic_design.N_atoms,
                        MIRROR.mass_M / (MIRROR.atomic_weight_aw * CGS.amu),
                        rel_tol=1e-15)


def test_B0_invariant_under_nu_eta_tradeoff():
    # only the product nu*eta enters; power-of-two rescalings are exact
    base = design_trap(MIRROR, GEOM, NU, ETA)
    for c in (2.0, 4.0, 0.5):
        other = design_trap(MIRROR, GEOM, c * NU, ETA / c)
        assert other.B0 == base.B0
        assert other.grad_product == base.grad_product
    other = design_trap(MIRROR, GEOM, 3.0 * NU, ETA / 3.0)
    assert math.isclose(other.B0, base.B0, rel_tol=1e-12)


def test_grad_product_check_scaling(symbolic_design):
    assert grad_product_check(symbolic_design, NU, ETA) == symbolic_design.grad_product
    assert math.isclose(grad_product_check(symbolic_design, 2.0 * NU, ETA),
                        symbolic_design.grad_product / 2.0, rel_tol=1e-12)
    assert math.isclose(grad_product_check(symbolic_design, NU, ETA / 10.0),
                        symbolic_design.grad_product * 10.0, rel_tol=1e-12)


def test_em_force_time_structure(symbolic_design):
    d = symbolic_design
    omega = 2.0 * math.pi / (1000.0 * spread_time(
        GEOM.lambda1, spreading_velocity(MIRROR.delta_q_i, MIRROR.mass_M)))
    assert em_force(0.0, d, d.B0, omega, NU, ETA, MIRROR, GEOM) == 0.0
    t = 0.2 / omega
    f1 = em_force(t, d, d.B0, omega, NU, ETA, MIRROR, GEOM)
    f2 = em_force(t + math.pi / omega, d, d.B0, omega, NU, ETA, MIRROR, GEOM)
    assert f1 > 0.0
    assert math.isclose(f1, f2, rel_tol=1e-6)
    peak = em_force(math.pi / (2.0 * omega), d, d.B0, omega, NU, ETA, MIRROR, GEOM)
    expected_peak = (d.N_atoms * NU * ETA * CGS.electron_charge ** 2 * GEOM.lambda1
                     * d.B0 ** 2 / (CGS.electron_mass * CGS.light_speed_c ** 2))
    assert math.isclose(peak, expected_peak, rel_tol=1e-9)


def test_em_force_gradient_reproduces_spring_constant(symbolic_design):
    # oracle: finite-difference dF/dz over the assumed linear field profile
    # B0(z) = B0 (1 + fraction z / lambda1), at the force maximum
    d = symbolic_design
    omega = 2.0 * math.pi / 1.0  # slow drive
    t_peak = math.pi / (2.0 * omega)

    def force_at(z):
        b = d.B0 * (1.0 + d.gradient_fraction * z / GEOM.lambda1)
        return em_force(t_peak, d, b, omega, NU, ETA, MIRROR, GEOM)

    h = 1e-9
    dFdz = (force_at(h) - force_at(-h)) / (2.0 * h)
    assert math.isclose(dFdz, d.k, rel_tol=0.25)
    assert math.isclose(dFdz, d.k, rel_tol=1e-5)


def test_em_force_warns_on_fast_drive(symbolic_design):
    d = symbolic_design
    t_s = spread_time(GEOM.lambda1, spreading_velocity(MIRROR.delta_q_i, MIRROR.mass_M))
    with pytest.warns(UserWarning):
        em_force(0.0, d, d.B0, 2.0 * math.pi / t_s, NU, ETA, MIRROR, GEOM)


def test_release_bounds(symbolic_design):
    d = symbolic_design
    t_s = spread_time(GEOM.lambda1, spreading_velocity(MIRROR.delta_q_i, MIRROR.mass_M))
    assert math.isclose(d.t_R_max_spread, t_s / 100.0, rel_tol=1e-15)
    assert math.isclose(d.t_R_max_oscillator, 2.0 * math.pi / d.omega_os, rel_tol=1e-15)
    ok = release_check(1e-7, d)
    assert ok.ok_spread and ok.ok_oscillator
    slow = release_check(t_s, d)
    assert not slow.ok_spread
    mid = release_check(1e-5, d)
    assert not mid.ok_spread and mid.ok_oscillator


def test_release_check_rejects_nonpositive(symbolic_design):
    with pytest.raises(NonPositiveInput):
        release_check(0.0, symbolic_design)


def test_design_is_pure():
    assert design_trap(MIRROR, GEOM, NU, ETA) == design_trap(MIRROR, GEOM, NU, ETA)


def test_design_validation():
    with pytest.raises(NonPositiveInput):
        design_trap(MIRROR, GEOM, 0.0, ETA)
    with pytest.raises(NonPositiveInput):
        design_trap(MIRROR, GEOM, NU, 1.0)
    with pytest.raises(NonPositiveInput):
        design_trap(MIRROR, GEOM, NU, ETA, gradient_fraction=0.0)
    with pytest.raises(NonPositiveInput):
        design_trap(MIRROR, GEOM, NU, ETA, mode="verbatim")


def test_scaled_mirror_changes_design():
    light = replace(MIRROR, mass_M=MIRROR.mass_M / 2.0)
    d = design_trap(light, GEOM, NU, ETA)
    # k = M (dv/dq)^2 with dv ~ 1/M: halving M quadruples dv^2 M = k... k ~ 1/M
    assert math.isclose(d.k, 2.0 * design_trap(MIRROR, GEOM, NU, ETA).k, rel_tol=1e-12)