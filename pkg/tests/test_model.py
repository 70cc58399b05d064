import math

import pytest

from mesoscope import (CGS, EnvironmentSpec, default_config, default_environment,
                       default_geometry, default_mirror, validate_config)
from mesoscope.errors import InvalidConfig


def test_constants_roundtrip():
    assert math.isclose(CGS.hbar * 2.0 * math.pi / CGS.planck_h, 1.0, rel_tol=1e-12)


def test_constants_positive():
    for name in ("planck_h", "hbar", "light_speed_c", "boltzmann_kB",
                 "stefan_boltzmann_sigma", "electron_charge", "electron_mass", "amu"):
        assert getattr(CGS, name) > 0.0


def test_default_geometry_relations():
    g = default_geometry()
    assert g.lambda1 == 1e-6
    assert g.slit_separation_S == 2.29 * g.lambda1
    assert g.slit_mirror_distance_L == 2.5 * g.lambda1
    assert g.mirror_diameter_W == 2.5 * g.lambda1
    assert g.lambda2 == g.lambda1 / 4.0
    assert g.probe_aperture_Wa == 4.0 * g.lambda2 * math.cos(g.probe_angle_theta)


def test_default_mirror_values():
    m = default_mirror()
    assert m.mass_M == 1.1e-17
    assert m.lattice_spacing_d == 2.4e-8
    assert m.delta_q_i == m.lattice_spacing_d / 2.0
    assert m.density_rho == 6.1
    assert m.sound_speed_vs == 3e5
    assert m.atomic_weight_aw == 50.0
    assert m.emissivity_e == 1.0


def test_default_environment():
    e = default_environment()
    assert e.alpha == 5.0
    # Rb-85 in grams
    assert math.isclose(e.gas_particle_mass, 84.911789738 * CGS.amu, rel_tol=1e-15)


def test_validate_defaults_pass():
    g, m, e = default_config()
    cfg = validate_config(g, m, e)
    assert cfg.geometry is g and cfg.mirror is m and cfg.environment is e


def test_validate_collects_all_violations():
    from dataclasses import replace
    g, m, e = default_config()
    bad_g = replace(g, lambda1=0.0)
    bad_m = replace(m, emissivity_e=1.5)
    with pytest.raises(InvalidConfig) as excinfo:
        validate_config(bad_g, bad_m, e)
    fields = [f for f, _ in excinfo.value.violations]
    assert "geometry.lambda1" in fields
    assert "mirror.emissivity_e" in fields
    assert len(fields) == 2


def test_validate_rejects_bad_alpha():
    g, m, _ = default_config()
    with pytest.raises(InvalidConfig):
        validate_config(g, m, EnvironmentSpec(alpha=0.0, gas_particle_mass=1e-22))


def test_validate_theta_range():
    from dataclasses import replace
    g, m, e = default_config()
    with pytest.raises(InvalidConfig):
        validate_config(replace(g, probe_angle_theta=math.pi / 2.0), m, e)


def test_validate_is_pure():
    g, m, e = default_config()
    assert validate_config(g, m, e) == validate_config(g, m, e)
