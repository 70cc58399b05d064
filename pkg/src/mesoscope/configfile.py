"""Line-based ``key = value`` run configuration with ``[section]`` headers.

Missing keys take the reference-point defaults; geometry defaults are
derived from the interfering wavelength, so overriding ``lambda1_cm`` alone
rescales the whole apparatus.  Unknown keys, malformed lines and duplicate
assignments are rejected with their line number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .config import (EnvironmentSpec, ExperimentGeometry, MirrorSpec,
                     default_environment, default_mirror, validate_config)
from .errors import ParseError
from .quadrature import QuadratureSettings

# key -> (section, converter)
_KEYS = {
    "lambda1_cm": ("geometry", float),
    "slit_separation_cm": ("geometry", float),
    "slit_mirror_distance_cm": ("geometry", float),
    "mirror_diameter_cm": ("geometry", float),
    "lambda2_cm": ("geometry", float),
    "probe_angle_rad": ("geometry", float),
    "probe_aperture_cm": ("geometry", float),
    "mass_g": ("mirror", float),
    "delta_q_i_cm": ("mirror", float),
    "density_g_cm3": ("mirror", float),
    "sound_speed_cm_s": ("mirror", float),
    "atomic_weight_amu": ("mirror", float),
    "lattice_spacing_cm": ("mirror", float),
    "emissivity": ("mirror", float),
    "alpha": ("environment", float),
    "gas_particle_mass_g": ("environment", float),
    "initial_intervals": ("quadrature", int),
    "max_intervals": ("quadrature", int),
    "rel_tolerance": ("quadrature", float),
    "support_half_width_sigmas": ("quadrature", float),
    "pattern_points": ("output", int),
}

_SECTIONS = ("geometry", "mirror", "environment", "quadrature", "output")


@dataclass(frozen=True)
class RunConfig:
    geometry: ExperimentGeometry
    mirror: MirrorSpec
    environment: EnvironmentSpec
    quadrature: QuadratureSettings
    pattern_points: int
    explicit: frozenset = field(default_factory=frozenset, compare=False)


def _parse_lines(lines) -> dict:
    values = {}
    section = None
    for line_no, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip()
            if section not in _SECTIONS:
                raise ParseError(line_no, f"unknown section [{section}]")
            continue
        if "=" not in line:
            raise ParseError(line_no, f"expected 'key = value', got {line!r}")
        key, _, raw_value = line.partition("=")
        key = key.strip()
        raw_value = raw_value.strip()
        if key not in _KEYS:
            raise ParseError(line_no, f"unknown key {key!r}")
        owner, convert = _KEYS[key]
        if section is not None and owner != section:
            raise ParseError(line_no, f"key {key!r} belongs to section [{owner}]")
        if key in values:
            raise ParseError(line_no, f"duplicate key {key!r}")
        try:
            values[key] = convert(raw_value)
        except ValueError:
            raise ParseError(line_no, f"cannot parse value {raw_value!r} for {key!r}") from None
    return values


def resolve(values: dict) -> RunConfig:
    """Fill defaults (wavelength-derived where applicable) and validate."""
    get = values.get
    lambda1 = get("lambda1_cm", 1e-6)
    theta = get("probe_angle_rad", 0.0)
    lambda2 = get("lambda2_cm", lambda1 / 4.0)
    geometry = ExperimentGeometry(
        lambda1=lambda1,
        slit_separation_S=get("slit_separation_cm", 2.29 * lambda1),
        slit_mirror_distance_L=get("slit_mirror_distance_cm", 2.5 * lambda1),
        mirror_diameter_W=get("mirror_diameter_cm", 2.5 * lambda1),
        lambda2=lambda2,
        probe_angle_theta=theta,
        probe_aperture_Wa=get("probe_aperture_cm", 4.0 * lambda2 * math.cos(theta)),
    )
    md = default_mirror()
    d = get("lattice_spacing_cm", md.lattice_spacing_d)
    mirror = MirrorSpec(
        mass_M=get("mass_g", md.mass_M),
        delta_q_i=get("delta_q_i_cm", d / 2.0),
        density_rho=get("density_g_cm3", md.density_rho),
        sound_speed_vs=get("sound_speed_cm_s", md.sound_speed_vs),
        atomic_weight_aw=get("atomic_weight_amu", md.atomic_weight_aw),
        lattice_spacing_d=d,
        emissivity_e=get("emissivity", md.emissivity_e),
    )
    ed = default_environment()
    environment = EnvironmentSpec(
        alpha=get("alpha", ed.alpha),
        gas_particle_mass=get("gas_particle_mass_g", ed.gas_particle_mass),
    )
    qd = QuadratureSettings()
    quadrature = QuadratureSettings(
        initial_intervals=get("initial_intervals", qd.initial_intervals),
        max_intervals=get("max_intervals", qd.max_intervals),
        rel_tolerance=get("rel_tolerance", qd.rel_tolerance),
        support_half_width_sigmas=get("support_half_width_sigmas",
                                      qd.support_half_width_sigmas),
    ).validated()
    validate_config(geometry, mirror, environment)
    return RunConfig(
        geometry=geometry,
        mirror=mirror,
        environment=environment,
        quadrature=quadrature,
        pattern_points=get("pattern_points", 1001),
        explicit=frozenset(values),
    )


def load_config(path=None) -> RunConfig:
    """Load a config file; with no path, return the full reference defaults."""
    if path is None:
        return resolve({})
    with open(path) as fh:
        return resolve(_parse_lines(fh))


def loads_config(text: str) -> RunConfig:
    return resolve(_parse_lines(text.splitlines()))


def dump_config(cfg: RunConfig) -> str:
    """Echo the effective configuration; reloading the dump reproduces it."""
    g, m, e, q = cfg.geometry, cfg.mirror, cfg.environment, cfg.quadrature
    out = [
        "[geometry]",
        f"lambda1_cm = {g.lambda1!r}",
        f"slit_separation_cm = {g.slit_separation_S!r}",
        f"slit_mirror_distance_cm = {g.slit_mirror_distance_L!r}",
        f"mirror_diameter_cm = {g.mirror_diameter_W!r}",
        f"lambda2_cm = {g.lambda2!r}",
        f"probe_angle_rad = {g.probe_angle_theta!r}",
        f"probe_aperture_cm = {g.probe_aperture_Wa!r}",
        "",
        "[mirror]",
        f"mass_g = {m.mass_M!r}",
        f"delta_q_i_cm = {m.delta_q_i!r}",
        f"density_g_cm3 = {m.density_rho!r}",
        f"sound_speed_cm_s = {m.sound_speed_vs!r}",
        f"atomic_weight_amu = {m.atomic_weight_aw!r}",
        f"lattice_spacing_cm = {m.lattice_spacing_d!r}",
        f"emissivity = {m.emissivity_e!r}",
        "",
        "[environment]",
        f"alpha = {e.alpha!r}",
        f"gas_particle_mass_g = {e.gas_particle_mass!r}",
        "",
        "[quadrature]",
        f"initial_intervals = {q.initial_intervals!r}",
        f"max_intervals = {q.max_intervals!r}",
        f"rel_tolerance = {q.rel_tolerance!r}",
        f"support_half_width_sigmas = {q.support_half_width_sigmas!r}",
        "",
        "[output]",
        f"pattern_points = {cfg.pattern_points!r}",
    ]
    return "\n".join(out) + "\n"
