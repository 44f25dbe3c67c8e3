"""Command-line interface: point queries, parameter sweeps, figure presets.

Configuration is a plain INI file (sections of ``key = value`` pairs) with
energies in eV under keys carrying an explicit ``_ev`` suffix; command-line
flags override file values and environment variables are never consulted.
Output is CSV with leading ``#`` metadata lines, a header line, comma
separators, floats in 9-significant-digit scientific notation and a single
newline terminator, so repeated runs are byte-identical.

Sections understood in a config file::

    [material]  model = vacuum | pc | plasma | drude | six-oscillator |
                        two-plateau | sapphire | superconductor | niobium
                plus the model parameters (omega_p_ev, nu_ev, f1_ev2 ...,
                omega_p1_ev ..., delta_ev / sigma_n / tau_s / y)
    [atom]      omega_a_ev or omega_a_hz; weights = wx, wy, wz;
                coupling = magnetic | electric | both;
                moment_scale (A m^2) or dipole_cm (C m)
    [geometry]  h_over_z (default inf) or h_m (absolute metres)
    [sweep]     min, max, points_per_decade, scale = log | linear, points
    [quadrature] rel_tol, abs_tol, epsilon_split
    [output]    path

Grid points are evaluated sequentially in ascending order; rows are
assembled by a single writer, so output order equals grid order.
"""
from __future__ import annotations

import configparser
import math
from dataclasses import dataclass, replace
from pathlib import Path

import click

from . import __version__
from .forces import force_kernels, regime_classify
from .materials import (
    Drude,
    MaterialModel,
    PerfectConductor,
    Plasma,
    SixOscillator,
    SuperconductorMB,
    TwoPlateau,
    UnsupportedModelError,
    Vacuum,
    epsilon_imag_axis,
    epsilon_real_axis,
    epsilon_superconductor,
    sigma_mb_clean,
    sigma_mb_impure,
)
from .quadrature import NonConvergenceError, QuadratureSpec
from .shifts import TransitionSet, ground_shift, spin_flip_rate
from .slabgreen import SlabGeometry
from .units import CONSTANTS, to_angular_frequency

__all__ = [
    "RunConfig",
    "SweepResult",
    "run_sweep",
    "figure_preset",
    "read_csv",
    "write_csv",
    "PRESETS",
    "main",
]

# Reference transition frequency (rad/s) used when a sweep over reduced
# distance involves only scale-free materials (mirror / free-electron
# models), for which the scaled force depends on alpha, nu_bar and x alone.
OMEGA_REF = 2.0 * math.pi * 560e3

_EV = CONSTANTS.eV / CONSTANTS.hbar  # rad/s per eV

# Built-in niobium parameters: gap from the weak-coupling ratio at
# T_c = 9.2 K, normal-state conductivity fixed by a 2.4 eV plasma-like
# scale, relaxation time from hbar / (tau Delta) = 13.61 (9 nm mean free
# path).
NIOBIUM_DELTA = 3.53 * CONSTANTS.kB * 9.2 / 2.0
NIOBIUM_SIGMA_N = (CONSTANTS.eps0 * CONSTANTS.hbar * (2.4 * _EV) ** 2
                   / (math.pi * NIOBIUM_DELTA))
NIOBIUM_Y = 13.61
NIOBIUM_TAU = CONSTANTS.hbar / (NIOBIUM_Y * NIOBIUM_DELTA)

# Built-in sapphire two-plateau parameters (eV): omega_p1, omega_p2,
# omega_1, omega_2.
SAPPHIRE_PARAMS_EV = (0.16, 30.8, 0.07, 20.8)

PRESETS = (
    "fig-alpha-sweep",
    "fig-drude-nu-sweep",
    "fig-decca",
    "fig-thickness",
    "fig-sapphire",
    "fig-sigma-mb",
    "fig-dual",
    "fig-sapphire-dual",
)

_DEFAULT_MOMENT = CONSTANTS.muB * CONSTANTS.g_S


# ---------------------------------------------------------------------------
# CSV emission and parsing
# ---------------------------------------------------------------------------

def format_float(value: float) -> str:
    """Scientific notation with 9 significant digits; -0 normalized."""
    if value == 0.0:
        value = 0.0
    return f"{value:.8e}"


def _record_float(value: float) -> str:
    """Higher-precision rendering for single-point key=value records."""
    if value == 0.0:
        value = 0.0
    return f"{value:.12e}"


def write_csv(stream, metadata, header, rows) -> None:
    """Emit metadata comment lines, the header and the formatted rows."""
    for key, value in metadata:
        stream.write(f"# {key} = {value}\n")
    stream.write(",".join(header) + "\n")
    for row in rows:
        stream.write(",".join(format_float(v) for v in row) + "\n")


def read_csv(path):
    """Parse an emitted CSV back into (metadata, header, rows)."""
    metadata = []
    header = None
    rows = []
    for line in Path(path).read_text().splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition(" = ")
            metadata.append((key, value))
        elif header is None:
            header = tuple(line.split(","))
        else:
            rows.append(tuple(float(tok) for tok in line.split(",")))
    return tuple(metadata), header, tuple(rows)


# ---------------------------------------------------------------------------
# Configuration handling
# ---------------------------------------------------------------------------

def _load_config_file(path) -> dict:
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    with open(path, encoding="utf-8") as handle:
        parser.read_file(handle)
    return {section: dict(parser.items(section))
            for section in parser.sections()}


def _merge_flag(config: dict, section: str, key: str, value) -> None:
    if value is not None:
        config.setdefault(section, {})[key] = str(value)


def _require(section: dict, section_name: str, key: str) -> str:
    try:
        return section[key]
    except KeyError:
        raise click.UsageError(f"missing key: {section_name}.{key}")


def _float_key(section: dict, section_name: str, key: str) -> float:
    raw = _require(section, section_name, key)
    try:
        return float(raw)
    except ValueError:
        raise click.UsageError(f"invalid number for {section_name}.{key}: "
                               f"{raw!r}")


def build_material(mcfg: dict) -> MaterialModel:
    """Construct a material model from a [material] config mapping."""
    name = _require(mcfg, "material", "model").strip().lower()
    if name == "vacuum":
        return Vacuum()
    if name in ("pc", "perfect-conductor", "mirror"):
        return PerfectConductor()
    if name == "plasma":
        return Plasma(omega_p=_float_key(mcfg, "material", "omega_p_ev")
                      * _EV)
    if name == "drude":
        return Drude(omega_p=_float_key(mcfg, "material", "omega_p_ev")
                     * _EV,
                     nu=_float_key(mcfg, "material", "nu_ev") * _EV)
    if name == "six-oscillator":
        omega_p = _float_key(mcfg, "material", "omega_p_ev") * _EV
        oscillators = tuple(
            (_float_key(mcfg, "material", f"f{j}_ev2") * _EV * _EV,
             _float_key(mcfg, "material", f"omega{j}_ev") * _EV,
             _float_key(mcfg, "material", f"g{j}_ev") * _EV)
            for j in range(1, 7))
        return SixOscillator(omega_p=omega_p, oscillators=oscillators)
    if name == "two-plateau":
        return TwoPlateau(
            omega_p1=_float_key(mcfg, "material", "omega_p1_ev") * _EV,
            omega_p2=_float_key(mcfg, "material", "omega_p2_ev") * _EV,
            omega_1=_float_key(mcfg, "material", "omega_1_ev") * _EV,
            omega_2=_float_key(mcfg, "material", "omega_2_ev") * _EV)
    if name == "sapphire":
        p1, p2, o1, o2 = SAPPHIRE_PARAMS_EV
        return TwoPlateau(omega_p1=p1 * _EV, omega_p2=p2 * _EV,
                          omega_1=o1 * _EV, omega_2=o2 * _EV)
    if name == "superconductor":
        delta = _float_key(mcfg, "material", "delta_ev") * CONSTANTS.eV
        sigma_n = _float_key(mcfg, "material", "sigma_n")
        tau = None
        if "tau_s" in mcfg:
            tau = float(mcfg["tau_s"])
        elif "y" in mcfg:
            tau = CONSTANTS.hbar / (float(mcfg["y"]) * delta)
        return SuperconductorMB(delta=delta, sigma_n=sigma_n, tau=tau)
    if name == "niobium":
        return SuperconductorMB(delta=NIOBIUM_DELTA,
                                sigma_n=NIOBIUM_SIGMA_N, tau=NIOBIUM_TAU)
    raise click.UsageError(f"unknown material model {name!r}")


def _parse_weights(raw: str) -> tuple[float, float, float]:
    parts = [p for p in raw.replace(",", " ").split() if p]
    if len(parts) != 3:
        raise click.UsageError("atom.weights must hold three numbers")
    try:
        w = tuple(float(p) for p in parts)
    except ValueError:
        raise click.UsageError(f"invalid atom.weights: {raw!r}")
    if any(not (v >= 0.0 and math.isfinite(v)) for v in w):
        raise click.UsageError("atom.weights must be finite and >= 0")
    return w


def _atom_settings(acfg: dict) -> dict:
    omega_a = None
    if "omega_a_ev" in acfg:
        omega_a = to_angular_frequency(float(acfg["omega_a_ev"]), kind="ev")
    elif "omega_a_hz" in acfg:
        omega_a = to_angular_frequency(float(acfg["omega_a_hz"]), kind="hz")
    coupling = acfg.get("coupling", "magnetic").strip().lower()
    if coupling not in ("magnetic", "electric", "both"):
        raise click.UsageError(f"unknown coupling {coupling!r}")
    weights = _parse_weights(acfg.get("weights", "0.25, 0.25, 0.25"))
    moment = float(acfg["moment_scale"]) if "moment_scale" in acfg else None
    dipole = float(acfg["dipole_cm"]) if "dipole_cm" in acfg else None
    return {"omega_a": omega_a, "coupling": coupling, "weights": weights,
            "moment_scale": moment, "dipole": dipole}


def _geometry_settings(gcfg: dict) -> dict:
    h_m = float(gcfg["h_m"]) if "h_m" in gcfg else None
    raw = gcfg.get("h_over_z", "inf").strip().lower()
    h_over_z = math.inf if raw in ("inf", "infinity") else float(raw)
    if h_m is not None and not h_m > 0.0:
        raise click.UsageError("geometry.h_m must be > 0")
    if not h_over_z > 0.0:
        raise click.UsageError("geometry.h_over_z must be > 0")
    return {"h_m": h_m, "h_over_z": h_over_z}


def _quadrature_settings(qcfg: dict) -> QuadratureSpec:
    kwargs = {}
    if "rel_tol" in qcfg:
        kwargs["rel_tol"] = float(qcfg["rel_tol"])
    if "abs_tol" in qcfg:
        kwargs["abs_tol"] = float(qcfg["abs_tol"])
    if "epsilon_split" in qcfg:
        kwargs["epsilon_split"] = float(qcfg["epsilon_split"])
    return QuadratureSpec(**kwargs)


def _is_scale_free(model: MaterialModel) -> bool:
    """True when the reduced force depends only on alpha, nu_bar and x."""
    return isinstance(model, (Vacuum, PerfectConductor, Plasma, Drude))


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RunConfig:
    """One sweep request: material, atom, geometry, grid, tolerances."""

    model: MaterialModel
    coupling: str = "magnetic"
    weights: tuple[float, float, float] = (0.25, 0.25, 0.25)
    omega_a: float | None = None
    moment_scale: float | None = None
    dipole: float | None = None
    h_over_z: float = math.inf
    h_m: float | None = None
    x_min: float = 1e-3
    x_max: float = 1e2
    points_per_decade: int = 20
    scale: str = "log"
    points: int | None = None
    quad: QuadratureSpec = QuadratureSpec()
    output: str | None = None
    metadata_extra: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        if not (0.0 < self.x_min < self.x_max):
            raise ValueError("sweep requires 0 < min < max")
        if self.points_per_decade < 1:
            raise ValueError("points_per_decade must be >= 1")
        if self.coupling not in ("magnetic", "electric", "both"):
            raise ValueError(f"unknown coupling {self.coupling!r}")
        if self.scale not in ("log", "linear"):
            raise ValueError(f"unknown scale {self.scale!r}")
        if self.scale == "linear" and (self.points is None
                                       or self.points < 2):
            raise ValueError("linear scale requires points >= 2")
        if self.omega_a is not None and not self.omega_a > 0.0:
            raise ValueError("omega_a must be > 0")


@dataclass(frozen=True)
class SweepResult:
    """Ordered sweep rows plus the metadata block they were run with."""

    metadata: tuple[tuple[str, str], ...]
    header: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        xs = [row[0] for row in self.rows]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("rows must be strictly increasing in x")
        if any(len(row) != len(self.header) for row in self.rows):
            raise ValueError("row width must match header")

    def write(self, stream) -> None:
        write_csv(stream, self.metadata, self.header, self.rows)


def _grid(config: RunConfig) -> list[float]:
    if config.scale == "linear":
        n = config.points
        step = (config.x_max - config.x_min) / (n - 1)
        return [config.x_min + i * step for i in range(n)]
    decades = math.log10(config.x_max / config.x_min)
    n = int(round(decades * config.points_per_decade)) + 1
    e0 = math.log10(config.x_min)
    return [10.0 ** (e0 + i / config.points_per_decade) for i in range(n)]


def _model_metadata(model: MaterialModel) -> list[tuple[str, str]]:
    if isinstance(model, Vacuum):
        return [("model", "vacuum")]
    if isinstance(model, PerfectConductor):
        return [("model", "pc")]
    if isinstance(model, Drude):
        return [("model", "drude"),
                ("omega_p_rad_s", format_float(model.omega_p)),
                ("nu_rad_s", format_float(model.nu))]
    if isinstance(model, Plasma):
        return [("model", "plasma"),
                ("omega_p_rad_s", format_float(model.omega_p))]
    if isinstance(model, SixOscillator):
        md = [("model", "six-oscillator"),
              ("omega_p_rad_s", format_float(model.omega_p))]
        for j, (f_j, omega_j, g_j) in enumerate(model.oscillators, start=1):
            md += [(f"f{j}_rad2_s2", format_float(f_j)),
                   (f"omega{j}_rad_s", format_float(omega_j)),
                   (f"g{j}_rad_s", format_float(g_j))]
        return md
    if isinstance(model, TwoPlateau):
        return [("model", "two-plateau"),
                ("omega_p1_rad_s", format_float(model.omega_p1)),
                ("omega_p2_rad_s", format_float(model.omega_p2)),
                ("omega_1_rad_s", format_float(model.omega_1)),
                ("omega_2_rad_s", format_float(model.omega_2))]
    if isinstance(model, SuperconductorMB):
        return [("model", "superconductor"),
                ("delta_j", format_float(model.delta)),
                ("sigma_n_s_m", format_float(model.sigma_n)),
                ("tau_s", "inf" if model.tau is None
                 else format_float(model.tau))]
    raise ValueError(f"unknown material model {model!r}")


def _sweep_metadata(config: RunConfig) -> list[tuple[str, str]]:
    md = [("cpslab_version", __version__)]
    md += list(config.metadata_extra)
    md += _model_metadata(config.model)
    md += [("coupling", config.coupling),
           ("weights", " ".join(format_float(w) for w in config.weights))]
    if config.omega_a is not None:
        md.append(("omega_a_rad_s", format_float(config.omega_a)))
    else:
        md.append(("omega_a", "reduced"))
    if config.h_m is not None:
        md.append(("h_m", format_float(config.h_m)))
    else:
        md.append(("h_over_z", "inf" if math.isinf(config.h_over_z)
                   else format_float(config.h_over_z)))
    if config.scale == "log":
        md.append(("grid", f"log {format_float(config.x_min)} "
                   f"{format_float(config.x_max)} "
                   f"ppd={config.points_per_decade}"))
    else:
        md.append(("grid", f"linear {format_float(config.x_min)} "
                   f"{format_float(config.x_max)} "
                   f"points={config.points}"))
    md += [("rel_tol", format_float(config.quad.rel_tol)),
           ("abs_tol", format_float(config.quad.abs_tol))]
    return md


def _resolve_omega_a(config: RunConfig) -> float:
    if config.omega_a is not None:
        return config.omega_a
    if _is_scale_free(config.model):
        return OMEGA_REF
    raise click.UsageError("missing key: atom.omega_a_ev (this material has "
                           "absolute frequency scales)")


def _coupling_list(coupling: str) -> tuple[str, ...]:
    return ("magnetic", "electric") if coupling == "both" else (coupling,)


def _moments(config: RunConfig) -> dict[str, float | None]:
    return {
        "magnetic": (config.moment_scale if config.moment_scale is not None
                     else _DEFAULT_MOMENT),
        "electric": config.dipole,
    }


def run_sweep(config: RunConfig) -> SweepResult:
    """Evaluate the force over the configured grid and emit CSV.

    Output goes to ``config.output`` (or stdout when unset).  Every grid
    point must converge; otherwise the offending x values are collected
    and raised as a :class:`NonConvergenceError`.
    """
    omega_a = _resolve_omega_a(config)
    couplings = _coupling_list(config.coupling)
    moments = _moments(config)
    with_dim = (config.omega_a is not None
                and all(moments[c] is not None for c in couplings))
    w_par = config.weights[0] + config.weights[1]
    w_perp = config.weights[2]

    header = ["x"]
    for cp in couplings:
        suffix = f"_{cp}" if len(couplings) > 1 else ""
        label = "F_M" if cp == "magnetic" else "F_E"
        header += [f"ibar_parallel{suffix}", f"ibar_perp{suffix}", label]
    if with_dim:
        header.append("F_dimensional_N")

    rows = []
    failures = []
    for x in _grid(config):
        z = x * CONSTANTS.c / omega_a
        h = config.h_m if config.h_m is not None else config.h_over_z * z
        geom = SlabGeometry(z=z, h=h)
        try:
            cols = [x]
            f_dim = 0.0
            for cp in couplings:
                ip, iq = force_kernels(x, config.model, geom, config.quad,
                                       coupling=cp)
                f_val = w_par * ip + w_perp * iq
                cols += [ip, iq, f_val]
                if with_dim:
                    moment = moments[cp]
                    pref = (CONSTANTS.mu0 * moment**2 if cp == "magnetic"
                            else moment**2 / CONSTANTS.eps0)
                    f_dim += pref * f_val / (32.0 * math.pi * z**4)
            if with_dim:
                cols.append(f_dim)
            rows.append(tuple(cols))
        except NonConvergenceError:
            failures.append(x)
    if failures:
        raise NonConvergenceError(
            "sweep did not converge at x = "
            + ", ".join(format_float(x) for x in failures))

    metadata = _sweep_metadata(config) + [("converged", "true")]
    result = SweepResult(metadata=tuple(metadata), header=tuple(header),
                         rows=tuple(rows))
    if config.output is not None:
        with open(config.output, "w", encoding="utf-8", newline="") as fh:
            result.write(fh)
    else:
        result.write(click.get_text_stream("stdout"))
    return result


# ---------------------------------------------------------------------------
# Figure presets
# ---------------------------------------------------------------------------

def _sapphire_model() -> TwoPlateau:
    p1, p2, o1, o2 = SAPPHIRE_PARAMS_EV
    return TwoPlateau(omega_p1=p1 * _EV, omega_p2=p2 * _EV,
                      omega_1=o1 * _EV, omega_2=o2 * _EV)


def _alpha_label(alpha: float) -> str:
    return "inf" if math.isinf(alpha) else f"{alpha:g}"


def _sigma_mb_result(tau: float | None, quad: QuadratureSpec,
                     extra) -> SweepResult:
    qs = [10.0 ** (-2 + i / 20) for i in range(81)]
    rows = []
    failures = []
    for q in qs:
        omega = NIOBIUM_DELTA / (CONSTANTS.hbar * q)
        try:
            if tau is None:
                sig = sigma_mb_clean(omega, NIOBIUM_DELTA, spec=quad)
            else:
                sig = sigma_mb_impure(omega, NIOBIUM_DELTA, tau, spec=quad)
            rows.append((q, sig.sigma1_over_sigman, sig.sigma2_over_sigman))
        except NonConvergenceError:
            failures.append(q)
    if failures:
        raise NonConvergenceError(
            "conductivity sweep did not converge at q = "
            + ", ".join(format_float(q) for q in failures))
    metadata = [("cpslab_version", __version__)] + list(extra) + [
        ("model", "superconductor"),
        ("delta_j", format_float(NIOBIUM_DELTA)),
        ("tau_s", "inf" if tau is None else format_float(tau)),
        ("grid", "log 1.00000000e-02 1.00000000e+02 ppd=20"),
        ("rel_tol", format_float(quad.rel_tol)),
        ("abs_tol", format_float(quad.abs_tol)),
        ("converged", "true"),
    ]
    return SweepResult(metadata=tuple(metadata),
                       header=("q", "sigma1_over_sigma_n",
                               "sigma2_over_sigma_n"),
                       rows=tuple(rows))


def _decca_params(params_path: str | None):
    if params_path is None:
        raise click.UsageError(
            "fig-decca needs the six-oscillator parameter table, which is "
            "not built in; pass --params <file> with [material] omega_p_ev, "
            "f1_ev2..f6_ev2, omega1_ev..omega6_ev, g1_ev..g6_ev (optional "
            "[atom] omega_a_ev, default omega_p)")
    cfg = _load_config_file(params_path)
    mcfg = dict(cfg.get("material", {}))
    mcfg["model"] = "six-oscillator"
    model = build_material(mcfg)
    omega_a = model.omega_p
    if "atom" in cfg and "omega_a_ev" in cfg["atom"]:
        omega_a = float(cfg["atom"]["omega_a_ev"]) * _EV
    return model, omega_a


def figure_preset(name: str, output_dir: str = ".", rel_tol: float = 1e-7,
                  params: str | None = None) -> list[Path]:
    """Write the dataset files for one named figure; returns their paths.

    Each file reproduces one curve with the exact parameter set of the
    corresponding figure (equal weights 1/4 throughout).
    """
    if name not in PRESETS:
        raise click.UsageError(f"unknown preset {name!r}")
    quad = QuadratureSpec(rel_tol=rel_tol)
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    jobs: list[tuple[str, RunConfig]] = []

    def tag(curve: str, *pairs) -> tuple[tuple[str, str], ...]:
        return (("preset", name), ("curve", curve)) + pairs

    if name == "fig-alpha-sweep":
        for alpha in (1.0, 10.0, 1e2, 1e3, 1e4, math.inf):
            label = f"alpha-{_alpha_label(alpha)}"
            model = (PerfectConductor() if math.isinf(alpha)
                     else Plasma(omega_p=alpha * OMEGA_REF))
            jobs.append((label, RunConfig(
                model=model, quad=quad,
                metadata_extra=tag(label, ("alpha", _alpha_label(alpha))))))
    elif name == "fig-drude-nu-sweep":
        for nu_bar in (0.0, 1.0, 10.0, 1e2, 1e3, 1e4):
            label = f"nu-{nu_bar:g}"
            model = (Plasma(omega_p=OMEGA_REF) if nu_bar == 0.0
                     else Drude(omega_p=OMEGA_REF, nu=nu_bar * OMEGA_REF))
            jobs.append((label, RunConfig(
                model=model, quad=quad,
                metadata_extra=tag(label, ("alpha", "1"),
                                   ("nu_bar", f"{nu_bar:g}")))))
    elif name == "fig-decca":
        model, omega_a = _decca_params(params)
        jobs.append(("plasma", RunConfig(
            model=Plasma(omega_p=model.omega_p), omega_a=omega_a, quad=quad,
            metadata_extra=tag("plasma"))))
        jobs.append(("six-oscillator", RunConfig(
            model=model, omega_a=omega_a, quad=quad,
            metadata_extra=tag("six-oscillator"))))
    elif name == "fig-thickness":
        for ratio in (math.inf, 1e-1, 1e-2, 1e-4, 1e-6):
            label = f"h-over-z-{_alpha_label(ratio)}"
            jobs.append((label, RunConfig(
                model=Plasma(omega_p=1e4 * OMEGA_REF), h_over_z=ratio,
                quad=quad,
                metadata_extra=tag(label, ("alpha", "10000")))))
    elif name == "fig-sapphire":
        sap = _sapphire_model()
        jobs.append(("sapphire-560khz", RunConfig(
            model=sap, omega_a=OMEGA_REF, quad=quad,
            metadata_extra=tag("sapphire-560khz"))))
        jobs.append(("sapphire-omega-p", RunConfig(
            model=sap, omega_a=SAPPHIRE_PARAMS_EV[0] * _EV, quad=quad,
            metadata_extra=tag("sapphire-omega-p"))))
        jobs.append(("plasma-alpha-1", RunConfig(
            model=Plasma(omega_p=OMEGA_REF), quad=quad,
            metadata_extra=tag("plasma-alpha-1", ("alpha", "1")))))
    elif name == "fig-dual":
        jobs.append(("pc", RunConfig(
            model=PerfectConductor(), quad=quad,
            metadata_extra=tag("pc"))))
        jobs.append(("plasma-magnetic", RunConfig(
            model=Plasma(omega_p=OMEGA_REF), quad=quad,
            metadata_extra=tag("plasma-magnetic", ("alpha", "1")))))
        jobs.append(("plasma-electric", RunConfig(
            model=Plasma(omega_p=OMEGA_REF), coupling="electric", quad=quad,
            metadata_extra=tag("plasma-electric", ("alpha", "1")))))
    elif name == "fig-sapphire-dual":
        sap = _sapphire_model()
        jobs.append(("sapphire-560khz", RunConfig(
            model=sap, omega_a=OMEGA_REF, coupling="electric", quad=quad,
            metadata_extra=tag("sapphire-560khz"))))
        jobs.append(("plasma-alpha-1", RunConfig(
            model=Plasma(omega_p=OMEGA_REF), coupling="electric", quad=quad,
            metadata_extra=tag("plasma-alpha-1", ("alpha", "1")))))
        jobs.append(("sapphire-9ev", RunConfig(
            model=sap, omega_a=9.0 * _EV, coupling="electric", quad=quad,
            metadata_extra=tag("sapphire-9ev"))))

    paths = []
    if name == "fig-sigma-mb":
        for label, tau in (("clean", None), ("niobium", NIOBIUM_TAU)):
            path = out / f"{name}__{label}.csv"
            extra = tag(label)
            if tau is not None:
                extra += (("y", format_float(NIOBIUM_Y)),)
            result = _sigma_mb_result(tau, quad, extra)
            with open(path, "w", encoding="utf-8", newline="") as fh:
                result.write(fh)
            paths.append(path)
        return paths

    for label, cfg in jobs:
        path = out / f"{name}__{label}.csv"
        try:
            run_sweep(replace(cfg, output=str(path)))
        except NonConvergenceError as exc:
            raise NonConvergenceError(f"{path.name}: {exc}")
        paths.append(path)
    return paths


# ---------------------------------------------------------------------------
# Shared option plumbing
# ---------------------------------------------------------------------------

def _material_options(f):
    options = [
        click.option("--config", "config_path",
                     type=click.Path(exists=True, dir_okay=False),
                     help="INI config file; flags override its values."),
        click.option("--model", default=None,
                     help="vacuum | pc | plasma | drude | six-oscillator | "
                          "two-plateau | sapphire | superconductor | "
                          "niobium"),
        click.option("--omega-p-ev", type=float, default=None),
        click.option("--nu-ev", type=float, default=None),
        click.option("--rel-tol", type=float, default=None),
        click.option("--abs-tol", type=float, default=None),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def _atom_options(f):
    options = [
        click.option("--omega-a-ev", type=float, default=None),
        click.option("--omega-a-hz", type=float, default=None),
        click.option("--weights", default=None,
                     help="three numbers, e.g. '0.25, 0.25, 0.25'"),
        click.option("--coupling",
                     type=click.Choice(["magnetic", "electric", "both"]),
                     default=None),
        click.option("--moment-scale", type=float, default=None,
                     help="magnetic moment (A m^2); default mu_B g_S"),
        click.option("--dipole-cm", type=float, default=None,
                     help="electric dipole moment (C m)"),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def _geometry_options(f):
    options = [
        click.option("--h-over-z", default=None,
                     help="slab thickness relative to distance; 'inf' for "
                          "a half-space"),
        click.option("--h-m", type=float, default=None,
                     help="absolute slab thickness in metres"),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def _merged_config(config_path, **flags) -> dict:
    config = _load_config_file(config_path) if config_path else {}
    mapping = {
        "model": ("material", "model"),
        "omega_p_ev": ("material", "omega_p_ev"),
        "nu_ev": ("material", "nu_ev"),
        "omega_a_ev": ("atom", "omega_a_ev"),
        "omega_a_hz": ("atom", "omega_a_hz"),
        "weights": ("atom", "weights"),
        "coupling": ("atom", "coupling"),
        "moment_scale": ("atom", "moment_scale"),
        "dipole_cm": ("atom", "dipole_cm"),
        "h_over_z": ("geometry", "h_over_z"),
        "h_m": ("geometry", "h_m"),
        "x_min": ("sweep", "min"),
        "x_max": ("sweep", "max"),
        "points_per_decade": ("sweep", "points_per_decade"),
        "scale": ("sweep", "scale"),
        "points": ("sweep", "points"),
        "rel_tol": ("quadrature", "rel_tol"),
        "abs_tol": ("quadrature", "abs_tol"),
        "epsilon_split": ("quadrature", "epsilon_split"),
        "output": ("output", "path"),
    }
    for flag, (section, key) in mapping.items():
        if flag in flags:
            _merge_flag(config, section, key, flags[flag])
    return config


def _point_setup(config: dict):
    """Build (model, atom settings, geometry, quadrature) for point queries."""
    model = build_material(config.get("material", {}))
    atom = _atom_settings(config.get("atom", {}))
    geometry = _geometry_settings(config.get("geometry", {}))
    quad = _quadrature_settings(config.get("quadrature", {}))
    return model, atom, geometry, quad


def _echo_record(pairs) -> None:
    for key, value in pairs:
        if isinstance(value, float):
            value = _record_float(value)
        click.echo(f"{key} = {value}")


def _transition_for(atom: dict) -> TransitionSet:
    coupling = atom["coupling"]
    if coupling == "both":
        raise click.UsageError("point queries take coupling magnetic or "
                               "electric, not both")
    if atom["omega_a"] is None:
        raise click.UsageError("missing key: atom.omega_a_ev")
    if coupling == "magnetic":
        moment = (atom["moment_scale"] if atom["moment_scale"] is not None
                  else _DEFAULT_MOMENT)
    else:
        if atom["dipole"] is None:
            raise click.UsageError("missing key: atom.dipole_cm")
        moment = atom["dipole"]
    return TransitionSet.single(omega_t=atom["omega_a"],
                                weights=atom["weights"],
                                moment_scale=moment, kind=coupling)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(version=__version__, prog_name="cpslab")
def main() -> None:
    """Casimir-Polder shifts, spin-flip rates and forces near a slab."""


@main.command()
@_material_options
@click.option("--omega-ev", type=float, default=None)
@click.option("--omega-rad-s", type=float, default=None)
@click.option("--axis", type=click.Choice(["imag", "real"]), default="imag",
              show_default=True)
def epsilon(config_path, model, omega_p_ev, nu_ev, rel_tol, abs_tol,
            omega_ev, omega_rad_s, axis) -> None:
    """Dielectric function of a material at one frequency."""
    config = _merged_config(config_path, model=model, omega_p_ev=omega_p_ev,
                            nu_ev=nu_ev, rel_tol=rel_tol, abs_tol=abs_tol)
    mat, _, _, quad = _point_setup(config)
    if omega_ev is None and omega_rad_s is None:
        raise click.UsageError("missing key: omega_ev")
    omega = (omega_rad_s if omega_rad_s is not None
             else to_angular_frequency(omega_ev, kind="ev"))
    record = [("model", _model_metadata(mat)[0][1]),
              ("omega_rad_s", omega), ("axis", axis)]
    try:
        if axis == "imag":
            if isinstance(mat, SuperconductorMB):
                value = epsilon_superconductor(omega, mat, spec=quad)
            else:
                value = float(epsilon_imag_axis(mat, omega))
            record.append(("epsilon", float(value)))
        else:
            value = epsilon_real_axis(mat, omega)
            record += [("epsilon_re", float(value.real)),
                       ("epsilon_im", float(value.imag))]
    except UnsupportedModelError as exc:
        raise click.UsageError(str(exc))
    _echo_record(record)


@main.command()
@click.option("--q", type=float, required=True,
              help="reduced inverse frequency Delta / (hbar omega)")
@click.option("--delta-ev", type=float, default=NIOBIUM_DELTA / CONSTANTS.eV,
              show_default=True, help="gap energy")
@click.option("--y", type=float, default=None,
              help="hbar / (tau Delta); omit for the clean limit")
@click.option("--tau-s", type=float, default=None,
              help="relaxation time in seconds (alternative to --y)")
@click.option("--rel-tol", type=float, default=None)
def sigma(q, delta_ev, y, tau_s, rel_tol) -> None:
    """Mattis-Bardeen complex conductivity at one reduced frequency."""
    if not q > 0.0:
        raise click.UsageError("q must be > 0")
    delta = delta_ev * CONSTANTS.eV
    omega = delta / (CONSTANTS.hbar * q)
    quad = QuadratureSpec(rel_tol=rel_tol) if rel_tol else None
    if tau_s is not None:
        tau = tau_s
    elif y is not None:
        tau = CONSTANTS.hbar / (y * delta)
    else:
        tau = None
    if tau is None:
        sig = sigma_mb_clean(omega, delta, spec=quad)
    else:
        sig = sigma_mb_impure(omega, delta, tau, spec=quad)
    _echo_record([
        ("q", q), ("omega_rad_s", omega),
        ("tau_s", "inf" if tau is None else _record_float(tau)),
        ("sigma1_over_sigma_n", sig.sigma1_over_sigman),
        ("sigma2_over_sigma_n", sig.sigma2_over_sigman),
    ])


@main.command()
@_material_options
@_atom_options
@_geometry_options
@click.option("--z-m", type=float, required=True,
              help="atom-surface distance in metres")
def shift(config_path, model, omega_p_ev, nu_ev, rel_tol, abs_tol,
          omega_a_ev, omega_a_hz, weights, coupling, moment_scale,
          dipole_cm, h_over_z, h_m, z_m) -> None:
    """Ground-state level shift at one distance."""
    config = _merged_config(config_path, model=model, omega_p_ev=omega_p_ev,
                            nu_ev=nu_ev, rel_tol=rel_tol, abs_tol=abs_tol,
                            omega_a_ev=omega_a_ev, omega_a_hz=omega_a_hz,
                            weights=weights, coupling=coupling,
                            moment_scale=moment_scale, dipole_cm=dipole_cm,
                            h_over_z=h_over_z, h_m=h_m)
    mat, atom, geometry, quad = _point_setup(config)
    if not z_m > 0.0:
        raise click.UsageError("z_m must be > 0")
    ts = _transition_for(atom)
    h = geometry["h_m"] if geometry["h_m"] is not None \
        else geometry["h_over_z"] * z_m
    geom = SlabGeometry(z=z_m, h=h)
    try:
        result = ground_shift(z_m, ts, mat, geom=geom, quad=quad)
    except NonConvergenceError as exc:
        raise click.ClickException(str(exc))
    x = atom["omega_a"] * z_m / CONSTANTS.c
    _echo_record([
        ("model", _model_metadata(mat)[0][1]), ("z_m", z_m), ("x", x),
        ("coupling", atom["coupling"]),
        ("delta_omega_rad_s", result.delta_omega),
        ("regime", result.regime_tags[0]),
    ])


@main.command()
@_material_options
@_atom_options
@_geometry_options
@click.option("--z-m", type=float, required=True,
              help="atom-surface distance in metres")
def rate(config_path, model, omega_p_ev, nu_ev, rel_tol, abs_tol,
         omega_a_ev, omega_a_hz, weights, coupling, moment_scale,
         dipole_cm, h_over_z, h_m, z_m) -> None:
    """Spin-flip (magnetic dipole) emission rate at one distance."""
    config = _merged_config(config_path, model=model, omega_p_ev=omega_p_ev,
                            nu_ev=nu_ev, rel_tol=rel_tol, abs_tol=abs_tol,
                            omega_a_ev=omega_a_ev, omega_a_hz=omega_a_hz,
                            weights=weights, coupling=coupling,
                            moment_scale=moment_scale, dipole_cm=dipole_cm,
                            h_over_z=h_over_z, h_m=h_m)
    mat, atom, geometry, quad = _point_setup(config)
    if not z_m > 0.0:
        raise click.UsageError("z_m must be > 0")
    if atom["coupling"] != "magnetic":
        raise click.UsageError("rate supports magnetic transitions only")
    ts = _transition_for(atom)
    h = geometry["h_m"] if geometry["h_m"] is not None \
        else geometry["h_over_z"] * z_m
    geom = SlabGeometry(z=z_m, h=h)
    try:
        gamma = spin_flip_rate(z_m, atom["omega_a"], ts, mat, geom=geom,
                               quad=quad)
    except (NonConvergenceError, ValueError) as exc:
        raise click.ClickException(str(exc))
    gamma0 = spin_flip_rate(z_m, atom["omega_a"], ts, Vacuum())
    _echo_record([
        ("model", _model_metadata(mat)[0][1]), ("z_m", z_m),
        ("omega_a_rad_s", atom["omega_a"]),
        ("gamma0_rad_s", gamma0), ("gamma_rad_s", gamma),
        ("gamma_over_gamma0", gamma / gamma0),
    ])


@main.command()
@_material_options
@_atom_options
@_geometry_options
@click.option("--x", type=float, default=None,
              help="reduced distance omega_A z / c")
@click.option("--z-m", type=float, default=None,
              help="atom-surface distance in metres (needs omega_a)")
def force(config_path, model, omega_p_ev, nu_ev, rel_tol, abs_tol,
          omega_a_ev, omega_a_hz, weights, coupling, moment_scale,
          dipole_cm, h_over_z, h_m, x, z_m) -> None:
    """Casimir-Polder force at one distance."""
    config = _merged_config(config_path, model=model, omega_p_ev=omega_p_ev,
                            nu_ev=nu_ev, rel_tol=rel_tol, abs_tol=abs_tol,
                            omega_a_ev=omega_a_ev, omega_a_hz=omega_a_hz,
                            weights=weights, coupling=coupling,
                            moment_scale=moment_scale, dipole_cm=dipole_cm,
                            h_over_z=h_over_z, h_m=h_m)
    mat, atom, geometry, quad = _point_setup(config)
    cp = atom["coupling"]
    if cp == "both":
        raise click.UsageError("point queries take coupling magnetic or "
                               "electric, not both")
    if (x is None) == (z_m is None):
        raise click.UsageError("give exactly one of --x and --z-m")
    omega_a = atom["omega_a"]
    if omega_a is None:
        if z_m is not None or not _is_scale_free(mat):
            raise click.UsageError("missing key: atom.omega_a_ev")
        omega_a = OMEGA_REF
    if z_m is not None:
        x = omega_a * z_m / CONSTANTS.c
    else:
        z_m = x * CONSTANTS.c / omega_a
    h = geometry["h_m"] if geometry["h_m"] is not None \
        else geometry["h_over_z"] * z_m
    geom = SlabGeometry(z=z_m, h=h)
    try:
        ip, iq = force_kernels(x, mat, geom, quad, coupling=cp)
    except NonConvergenceError as exc:
        raise click.ClickException(str(exc))
    w = atom["weights"]
    f_val = (w[0] + w[1]) * ip + w[2] * iq
    record = [("model", _model_metadata(mat)[0][1]), ("x", x), ("z_m", z_m),
              ("coupling", cp), ("ibar_parallel", ip), ("ibar_perp", iq),
              ("F_M" if cp == "magnetic" else "F_E", f_val)]
    moment = atom["moment_scale"] if cp == "magnetic" else atom["dipole"]
    if cp == "magnetic" and moment is None:
        moment = _DEFAULT_MOMENT
    if atom["omega_a"] is not None and moment is not None:
        pref = (CONSTANTS.mu0 * moment**2 if cp == "magnetic"
                else moment**2 / CONSTANTS.eps0)
        record.append(("F_dimensional_N",
                       pref * f_val / (32.0 * math.pi * z_m**4)))
    alpha = None
    nu_bar = 0.0
    if isinstance(mat, PerfectConductor):
        alpha = math.inf
    elif isinstance(mat, Drude):
        alpha, nu_bar = mat.omega_p / omega_a, mat.nu / omega_a
    elif isinstance(mat, Plasma):
        alpha = mat.omega_p / omega_a
    if alpha is not None:
        tag_, pred = regime_classify(x, alpha, nu_bar)
        record.append(("regime", tag_))
        record.append(("regime_prediction",
                       "none" if pred is None else _record_float(pred)))
    _echo_record(record)


@main.command()
@_material_options
@_atom_options
@_geometry_options
@click.option("--min", "x_min", type=float, default=None)
@click.option("--max", "x_max", type=float, default=None)
@click.option("--points-per-decade", type=int, default=None)
@click.option("--scale", type=click.Choice(["log", "linear"]), default=None)
@click.option("--points", type=int, default=None,
              help="total grid points (linear scale)")
@click.option("--epsilon-split", type=float, default=None)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
def sweep(config_path, model, omega_p_ev, nu_ev, rel_tol, abs_tol,
          omega_a_ev, omega_a_hz, weights, coupling, moment_scale,
          dipole_cm, h_over_z, h_m, x_min, x_max, points_per_decade, scale,
          points, epsilon_split, output) -> None:
    """Force sweep over a grid of reduced distances, emitted as CSV."""
    config = _merged_config(config_path, model=model, omega_p_ev=omega_p_ev,
                            nu_ev=nu_ev, rel_tol=rel_tol, abs_tol=abs_tol,
                            omega_a_ev=omega_a_ev, omega_a_hz=omega_a_hz,
                            weights=weights, coupling=coupling,
                            moment_scale=moment_scale, dipole_cm=dipole_cm,
                            h_over_z=h_over_z, h_m=h_m, x_min=x_min,
                            x_max=x_max,
                            points_per_decade=points_per_decade,
                            scale=scale, points=points,
                            epsilon_split=epsilon_split, output=output)
    mat, atom, geometry, quad = _point_setup(config)
    scfg = config.get("sweep", {})
    ocfg = config.get("output", {})
    try:
        run_config = RunConfig(
            model=mat, coupling=atom["coupling"], weights=atom["weights"],
            omega_a=atom["omega_a"], moment_scale=atom["moment_scale"],
            dipole=atom["dipole"], h_over_z=geometry["h_over_z"],
            h_m=geometry["h_m"],
            x_min=float(scfg.get("min", 1e-3)),
            x_max=float(scfg.get("max", 1e2)),
            points_per_decade=int(scfg.get("points_per_decade", 20)),
            scale=scfg.get("scale", "log"),
            points=int(scfg["points"]) if "points" in scfg else None,
            quad=quad, output=ocfg.get("path"))
    except ValueError as exc:
        raise click.UsageError(str(exc))
    try:
        run_sweep(run_config)
    except NonConvergenceError as exc:
        raise click.ClickException(str(exc))


@main.command()
@click.argument("preset", type=click.Choice(PRESETS))
@click.option("--output-dir", type=click.Path(file_okay=False), default=".",
              show_default=True)
@click.option("--rel-tol", type=float, default=1e-7, show_default=True,
              help="quadrature tolerance recorded in the CSV metadata")
@click.option("--params", type=click.Path(exists=True, dir_okay=False),
              default=None,
              help="user-supplied parameter file (required by fig-decca)")
def figure(preset, output_dir, rel_tol, params) -> None:
    """Regenerate the dataset files behind one named figure."""
    try:
        paths = figure_preset(preset, output_dir=output_dir,
                              rel_tol=rel_tol, params=params)
    except NonConvergenceError as exc:
        raise click.ClickException(str(exc))
    for path in paths:
        click.echo(str(path))


if __name__ == "__main__":
    main()
