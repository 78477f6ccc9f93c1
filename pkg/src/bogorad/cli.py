"""Command-line front end: ``bogorad {spectrum,energy,sweep,depletion,validate}``.

Configs are YAML with a strict schema (unknown keys are errors, physical
parameters have no defaults).  Everything is computed in natural units;
every output file starts with a comment block holding the version and the
fully resolved config, which parses back to the same RunConfig.
"""
from __future__ import annotations

import argparse
import copy
import io
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path

import numpy as np
import yaml

from . import __version__
from .condensate import CondensateParams, UnitScale, to_natural
from .condensate import make_mode
from .phase_integral import RegulatorSpec, Window, extrapolate_regulator, integrate_regulated, reference_rate
from .spectrum import EnergyGrid, depletion, spectrum_point, total_energy
from .trajectory import (
    ConstantVelocity,
    ExponentialDecay,
    Sampled,
    UniformAccelerationRel,
    load_sampled_csv,
    translate,
)
from .validate import run_validation

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC, EXIT_VALIDATION = 0, 1, 2, 3

SPECTRUM_COLUMNS = ("k", "theta", "omega", "dn_dk_domega", "dE_dk_domega", "provenance")
ENERGY_COLUMNS = ("E_total", "E_upper", "E_lower", "k_max", "truncation_error", "divergent",
                  "divergent_upper", "divergent_lower", "tail_exponent_upper", "tail_exponent_lower")
DEPLETION_COLUMNS = ("leading", "correction", "total", "n_modes", "box_length", "n_particles",
                     "tail_estimate", "grid_error")


class ConfigError(ValueError):
    pass


# --------------------------------------------------------------------------
# config schema


@dataclass
class CondensateBlock:
    density: float
    coupling: float
    units: str = "natural"
    mass: float | None = None
    g: float | None = None
    hbar: float | None = None
    n_particles: int | None = None
    box_length: float | None = None
    diluteness_threshold: float = 1e-2


@dataclass
class TrajectoryBlock:
    kind: str
    v: float | None = None
    zeta0: float | None = None
    rate: float | None = None
    a: float | None = None
    path: str | None = None
    order: int = 3
    offset: float = 0.0


@dataclass
class WindowBlock:
    t_i: float = -math.inf
    t_f: float = math.inf


@dataclass
class RegulatorBlock:
    kind: str = "exponential"
    ladder: list = field(default_factory=lambda: [0.25 * 0.5**j for j in range(7)])
    order: int | None = None
    relative: bool = True


@dataclass
class GridBlock:
    k_min: float = 0.1
    k_max: float = 5.0
    k_count: int = 20
    spacing: str = "linear"
    theta_count: int = 7
    theta_min: float = 0.0
    theta_max: float = math.pi


@dataclass
class EnergyBlock:
    k_max: float = 10.0
    k_panels: int = 40
    k_order: int = 10
    angle_panels: int = 14
    angle_order: int = 8


@dataclass
class DepletionBlock:
    t: float | None = None
    k_max: float = 4.0


@dataclass
class SweepBlock:
    parameter: str = ""
    values: list = field(default_factory=list)
    command: str = "spectrum"


@dataclass
class OutputBlock:
    format: str = "csv"
    path: str | None = None
    precision: int = 17
    units: str = "natural"


@dataclass
class NumericsBlock:
    tol: float = 1e-11
    source: str = "auto"


@dataclass
class RunConfig:
    condensate: CondensateBlock
    trajectory: TrajectoryBlock
    window: WindowBlock = field(default_factory=WindowBlock)
    regulator: RegulatorBlock = field(default_factory=RegulatorBlock)
    grid: GridBlock = field(default_factory=GridBlock)
    energy: EnergyBlock = field(default_factory=EnergyBlock)
    depletion: DepletionBlock = field(default_factory=DepletionBlock)
    sweep: SweepBlock = field(default_factory=SweepBlock)
    output: OutputBlock = field(default_factory=OutputBlock)
    numerics: NumericsBlock = field(default_factory=NumericsBlock)


_BLOCK_TYPES = {
    "condensate": CondensateBlock,
    "trajectory": TrajectoryBlock,
    "window": WindowBlock,
    "regulator": RegulatorBlock,
    "grid": GridBlock,
    "energy": EnergyBlock,
    "depletion": DepletionBlock,
    "sweep": SweepBlock,
    "output": OutputBlock,
    "numerics": NumericsBlock,
}
_REQUIRED_BLOCKS = ("condensate", "trajectory")


def _coerce_number(section: str, key: str, value):
    if isinstance(value, bool):
        raise ConfigError(f"{section}.{key} must be a number, got {value!r}")
    if isinstance(value, str):
        text = value.strip().lower()
        if text in ("inf", "+inf", "infinity", ".inf"):
            return math.inf
        if text in ("-inf", "-infinity", "-.inf"):
            return -math.inf
        try:
            return float(text)
        except ValueError:
            raise ConfigError(f"{section}.{key} must be a number, got {value!r}") from None
    if isinstance(value, (int, float)):
        return value
    raise ConfigError(f"{section}.{key} must be a number, got {value!r}")


def _build_block(section: str, cls, raw):
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise ConfigError(f"section {section!r} must be a mapping")
    known = {f.name: f for f in fields(cls)}
    unknown = sorted(set(raw) - set(known))
    if unknown:
        raise ConfigError(f"unknown key(s) in {section}: {', '.join(unknown)}")
    kwargs = {}
    for name, f in known.items():
        if name not in raw:
            continue
        value = raw[name]
        ann = str(f.type)
        if value is not None and ("float" in ann or "int" in ann) and "str" not in ann:
            value = _coerce_number(section, name, value)
            if "int" in ann and "float" not in ann:
                if value != int(value):
                    raise ConfigError(f"{section}.{name} must be an integer, got {value!r}")
                value = int(value)
            elif "float" in ann:
                value = float(value)
        kwargs[name] = value
    try:
        return cls(**kwargs)
    except TypeError as exc:
        missing = [f.name for f in fields(cls) if f.name not in kwargs and f.default is f.default_factory]
        raise ConfigError(f"{section}: missing required field(s) {', '.join(missing) or exc}") from None


def parse_config(raw: dict) -> RunConfig:
    if not isinstance(raw, dict):
        raise ConfigError("config must be a mapping of sections")
    unknown = sorted(set(raw) - set(_BLOCK_TYPES))
    if unknown:
        raise ConfigError(f"unknown section(s): {', '.join(unknown)}")
    for name in _REQUIRED_BLOCKS:
        if name not in raw:
            raise ConfigError(f"missing required section {name!r}")
    blocks = {name: _build_block(name, cls, raw.get(name)) for name, cls in _BLOCK_TYPES.items()}
    cfg = RunConfig(**blocks)
    validate_config(cfg)
    return cfg


def load_config(path) -> RunConfig:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError(f"config {path} is not valid YAML: {exc}") from None
    return parse_config(raw)


def config_to_dict(cfg: RunConfig) -> dict:
    return asdict(cfg)


def read_header_config(text: str) -> RunConfig:
    """Recover the RunConfig embedded in an output file's comment header."""
    lines = []
    for line in text.splitlines():
        if not line.startswith("#"):
            break
        lines.append(line[2:] if line.startswith("# ") else line[1:])
    body = "\n".join(lines)
    marker = "config:"
    idx = body.index(marker)
    doc = yaml.safe_load(body[idx:])
    return parse_config(doc["config"])


# --------------------------------------------------------------------------
# resolving blocks into domain objects (all in natural units)


@dataclass(frozen=True)
class Resolved:
    params: CondensateParams
    units: UnitScale
    traj: object
    window: Window
    reg: RegulatorSpec
    physical_params: CondensateParams


def _condensate(block: CondensateBlock) -> CondensateParams:
    if block.units == "natural":
        for name in ("mass", "g", "hbar"):
            if getattr(block, name) is not None:
                raise ConfigError(f"condensate.{name} is fixed by units: natural; remove it or use units: physical")
        return CondensateParams.natural(
            block.density, block.coupling, n_particles=block.n_particles, box_length=block.box_length,
            diluteness_threshold=block.diluteness_threshold,
        )
    if block.units != "physical":
        raise ConfigError(f"condensate.units must be 'natural' or 'physical', got {block.units!r}")
    for name in ("mass", "g", "hbar"):
        if getattr(block, name) is None:
            raise ConfigError(f"condensate.{name} is required for units: physical")
    return CondensateParams(
        mass=block.mass, g=block.g, density=block.density, coupling=block.coupling, hbar=block.hbar,
        n_particles=block.n_particles, box_length=block.box_length,
        diluteness_threshold=block.diluteness_threshold,
    )


def _need(block: TrajectoryBlock, name: str, label: str):
    value = getattr(block, name)
    if value is None:
        raise ConfigError(f"trajectory.{name} ({label}) is required for kind {block.kind!r}")
    return value


def _trajectory(block: TrajectoryBlock, units: UnitScale):
    L, T = units.length, units.time
    kind = block.kind
    if kind == "constant_velocity":
        traj = ConstantVelocity(_need(block, "v", "speed") / units.velocity)
    elif kind == "exponential_decay":
        traj = ExponentialDecay(_need(block, "zeta0", "zeta_0") / L, _need(block, "rate", "Gamma_0") * T)
    elif kind == "uniform_acceleration":
        traj = UniformAccelerationRel(_need(block, "a", "acceleration") * T * T / L)
    elif kind == "sampled":
        raw = load_sampled_csv(_need(block, "path", "CSV path"), order=block.order)
        traj = Sampled(tuple(np.asarray(raw.times) / T), tuple(np.asarray(raw.positions) / L), order=block.order)
    else:
        raise ConfigError(
            f"trajectory.kind must be one of constant_velocity, exponential_decay, uniform_acceleration, "
            f"sampled; got {kind!r}"
        )
    if block.offset:
        traj = translate(traj, block.offset / L)
    return traj


def resolve(cfg: RunConfig) -> Resolved:
    try:
        physical = _condensate(cfg.condensate)
        params, units = to_natural(physical)
        traj = _trajectory(cfg.trajectory, units)
        window = Window(cfg.window.t_i / units.time, cfg.window.t_f / units.time)
        r = cfg.regulator
        reg = RegulatorSpec(kind=r.kind, ladder=tuple(r.ladder), order=r.order, relative=r.relative)
    except ConfigError:
        raise
    except (ValueError, TypeError, OSError) as exc:
        raise ConfigError(str(exc)) from None
    if not window.is_finite and reg.kind == "none":
        raise ConfigError("regulator.kind 'none' cannot be used with an infinite window")
    lo, hi = traj.span()
    if window.t_i < lo or window.t_f > hi:
        raise ConfigError(f"window [{cfg.window.t_i}, {cfg.window.t_f}] leaves the trajectory span")
    return Resolved(params, units, traj, window, reg, physical)


def validate_config(cfg: RunConfig) -> None:
    g = cfg.grid
    if not (0 < g.k_min <= g.k_max and math.isfinite(g.k_max)):
        raise ConfigError("grid needs 0 < k_min <= k_max < inf")
    if g.k_count < 1 or g.theta_count < 1:
        raise ConfigError("grid.k_count and grid.theta_count must be at least 1")
    if g.spacing not in ("linear", "log"):
        raise ConfigError(f"grid.spacing must be 'linear' or 'log', got {g.spacing!r}")
    if not (0.0 <= g.theta_min <= g.theta_max <= math.pi):
        raise ConfigError("grid needs 0 <= theta_min <= theta_max <= pi")
    if cfg.output.format not in ("csv", "json"):
        raise ConfigError(f"output.format must be 'csv' or 'json', got {cfg.output.format!r}")
    if cfg.output.units not in ("natural", "physical"):
        raise ConfigError(f"output.units must be 'natural' or 'physical', got {cfg.output.units!r}")
    if not 1 <= cfg.output.precision <= 17:
        raise ConfigError("output.precision must lie in [1, 17]")
    if cfg.numerics.source not in ("auto", "numeric", "closed"):
        raise ConfigError(f"numerics.source must be auto, numeric or closed; got {cfg.numerics.source!r}")
    if cfg.sweep.command not in ("spectrum", "energy", "extrapolation"):
        raise ConfigError(f"sweep.command must be spectrum, energy or extrapolation; got {cfg.sweep.command!r}")
    resolve(cfg)


# --------------------------------------------------------------------------
# computation


def _grid(cfg: RunConfig):
    g = cfg.grid
    if g.spacing == "log":
        ks = np.geomspace(g.k_min, g.k_max, g.k_count)
    else:
        ks = np.linspace(g.k_min, g.k_max, g.k_count)
    thetas = np.linspace(g.theta_min, g.theta_max, g.theta_count)
    if g.theta_count % 2 == 1 and g.theta_min == 0.0 and g.theta_max == math.pi:
        thetas[g.theta_count // 2] = math.pi / 2
    return ks, thetas


def _map(fn, items, threads: int):
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def compute_spectrum(cfg: RunConfig, threads: int = 1):
    res = resolve(cfg)
    ks, thetas = _grid(cfg)
    k_scale = res.units.length
    items = [(k, th) for k in ks for th in thetas]
    source = cfg.numerics.source

    def one(item):
        k, th = item
        p = spectrum_point(res.params, res.traj, float(k) * k_scale, float(th), res.window, res.reg, source)
        return _spectrum_row(cfg, res, p)

    return _map(one, items, threads)


def _spectrum_row(cfg, res, p):
    if cfg.output.units == "physical":
        u = res.units
        # dn/dk carries a length; dE/dk carries energy * length
        return (p.k / u.length, p.theta, p.omega / u.time, p.dn_dk_domega * u.length,
                p.dE_dk_domega * u.energy * u.length, p.provenance)
    return (p.k, p.theta, p.omega, p.dn_dk_domega, p.dE_dk_domega, p.provenance)


def compute_energy(cfg: RunConfig):
    res = resolve(cfg)
    e = cfg.energy
    grid = EnergyGrid(k_panels=e.k_panels, k_order=e.k_order, angle_panels=e.angle_panels, angle_order=e.angle_order)
    rep = total_energy(res.params, res.traj, res.window, res.reg, e.k_max * res.units.length, grid,
                       cfg.numerics.source)
    scale = res.units.energy if cfg.output.units == "physical" else 1.0
    kscale = 1.0 / res.units.length if cfg.output.units == "physical" else 1.0
    return (rep.total * scale, rep.upper * scale, rep.lower * scale, rep.k_max * kscale,
            rep.truncation_error * scale, rep.divergent, rep.divergent_upper, rep.divergent_lower,
            rep.tail_exponent_upper, rep.tail_exponent_lower)


def compute_depletion(cfg: RunConfig):
    res = resolve(cfg)
    if res.params.n_particles is None or res.params.box_length is None:
        raise ConfigError("depletion needs condensate.n_particles and condensate.box_length")
    d = cfg.depletion
    t = None if d.t is None else d.t / res.units.time
    if t is None and not math.isfinite(res.window.t_f):
        raise ConfigError("depletion.t is required when window.t_f is infinite")
    rep = depletion(res.params, res.traj, res.window, t, d.k_max * res.units.length, res.reg, cfg.numerics.source)
    length = res.units.length if cfg.output.units == "physical" else 1.0
    return (rep.leading, rep.correction, rep.total, rep.n_modes, rep.box_length * length, rep.n_particles,
            rep.tail_estimate, rep.grid_error)


def compute_extrapolation(cfg: RunConfig, threads: int = 1):
    """Regulated integrals along the ladder plus the eps -> 0 row, per grid mode."""
    res = resolve(cfg)
    if res.reg.kind == "none":
        raise ConfigError("extrapolation needs a regulator")
    ks, thetas = _grid(cfg)
    items = [(k, th) for k in ks for th in thetas]

    def one(item):
        k, th = item
        mode = make_mode(res.params, float(k) * res.units.length, float(th))
        unit = reference_rate(mode, res.traj) if res.reg.relative else 1.0
        ladder = []
        rows = []
        for e in res.reg.ladder:
            val = integrate_regulated(mode, res.traj, res.window, res.reg.kind, e * unit, cfg.numerics.tol)
            ladder.append((e * unit, val))
            rows.append((mode.k, mode.theta, e * unit, val.value.real, val.value.imag, val.error))
        out = extrapolate_regulator(ladder, order=res.reg.order)
        rows.append((mode.k, mode.theta, 0.0, out.value.real, out.value.imag, out.error))
        return rows

    return [row for rows in _map(one, items, threads) for row in rows]


_SWEEPABLE = {
    "trajectory": ("v", "zeta0", "rate", "a", "offset"),
    "window": ("t_i", "t_f"),
    "condensate": ("coupling", "density"),
}


def _swept(cfg: RunConfig, value) -> RunConfig:
    section, _, key = cfg.sweep.parameter.partition(".")
    if section not in _SWEEPABLE or key not in _SWEEPABLE[section]:
        allowed = ", ".join(f"{s}.{k}" for s, ks in _SWEEPABLE.items() for k in ks)
        raise ConfigError(f"sweep.parameter must be one of {allowed}; got {cfg.sweep.parameter!r}")
    new = copy.deepcopy(cfg)
    block = getattr(new, section)
    setattr(block, key, float(_coerce_number("sweep", "values", value)))
    new.sweep = SweepBlock()
    validate_config(new)
    return new


# --------------------------------------------------------------------------
# output


def _fmt(value, precision: int) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), f".{precision}g")
    return str(value)


def _header(cfg: RunConfig, command: str) -> str:
    doc = {"version": __version__, "command": command, "config": config_to_dict(cfg)}
    text = yaml.safe_dump(doc, sort_keys=True, default_flow_style=False)
    return "".join(f"# {line}\n" for line in text.splitlines())


def render(cfg: RunConfig, command: str, columns, rows) -> str:
    precision = cfg.output.precision
    if cfg.output.format == "json":
        def clean(v):
            if isinstance(v, (np.bool_, bool)):
                return bool(v)
            if isinstance(v, (np.integer,)):
                return int(v)
            if isinstance(v, (np.floating, float)):
                return float(format(float(v), f".{precision}g"))
            return v

        doc = {
            "version": __version__,
            "command": command,
            "config": config_to_dict(cfg),
            "columns": list(columns),
            "rows": [[clean(v) for v in row] for row in rows],
        }
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"
    buf = io.StringIO()
    buf.write(_header(cfg, command))
    buf.write(",".join(columns) + "\n")
    for row in rows:
        buf.write(",".join(_fmt(v, precision) for v in row) + "\n")
    return buf.getvalue()


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", newline="\n") as fh:
        fh.write(text)


# --------------------------------------------------------------------------
# commands


def cmd_spectrum(cfg, threads=1):
    return render(cfg, "spectrum", SPECTRUM_COLUMNS, compute_spectrum(cfg, threads))


def cmd_energy(cfg, threads=1):
    return render(cfg, "energy", ENERGY_COLUMNS, [compute_energy(cfg)])


def cmd_depletion(cfg, threads=1):
    return render(cfg, "depletion", DEPLETION_COLUMNS, [compute_depletion(cfg)])


def cmd_sweep(cfg, threads=1):
    sweep = cfg.sweep
    if not sweep.parameter or not sweep.values:
        raise ConfigError("sweep needs sweep.parameter and a non-empty sweep.values list")
    configs = [_swept(cfg, v) for v in sweep.values]
    if sweep.command == "spectrum":
        columns = ("parameter", "value") + SPECTRUM_COLUMNS
        blocks = _map(lambda c: compute_spectrum(c, 1), configs, threads)
    elif sweep.command == "energy":
        columns = ("parameter", "value") + ENERGY_COLUMNS
        blocks = _map(lambda c: [compute_energy(c)], configs, threads)
    else:
        columns = ("parameter", "value", "k", "theta", "epsilon", "re_I", "im_I", "error")
        blocks = _map(lambda c: compute_extrapolation(c, 1), configs, threads)
    rows = [(sweep.parameter, float(v)) + tuple(r) for v, block in zip(sweep.values, blocks) for r in block]
    return render(cfg, "sweep", columns, rows)


def cmd_validate(k1_perturbation=0.0, seed=0):
    results = run_validation(k1_perturbation=k1_perturbation, seed=seed)
    lines = [r.line() for r in results]
    failed = [r for r in results if not r.diagnostic and not r.passed]
    lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed" if not failed
                 else f"{len(failed)} check(s) failed")
    return "\n".join(lines) + "\n", not failed


_COMMANDS = {
    "spectrum": cmd_spectrum,
    "energy": cmd_energy,
    "sweep": cmd_sweep,
    "depletion": cmd_depletion,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bogorad", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("spectrum", "energy", "sweep", "depletion", "validate"):
        p = sub.add_parser(name)
        p.add_argument("--config", required=name != "validate")
        p.add_argument("--out")
        p.add_argument("--format", choices=("csv", "json"))
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)
        if name == "validate":
            p.add_argument("--perturb-k1", type=float, default=0.0, help=argparse.SUPPRESS)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return EXIT_CONFIG
    if args.command == "validate":
        try:
            text, ok = cmd_validate(args.perturb_k1, args.seed)
        except (ArithmeticError, RuntimeError, ValueError) as exc:
            print(f"numerical failure: {exc}", file=sys.stderr)
            return EXIT_NUMERIC
        sys.stdout.write(text)
        if args.out:
            _emit(text, args.out)
        return EXIT_OK if ok else EXIT_VALIDATION
    try:
        cfg = load_config(args.config)
        if args.format:
            cfg = replace(cfg, output=replace(cfg.output, format=args.format))
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    out = args.out or cfg.output.path
    try:
        text = _COMMANDS[args.command](cfg, args.threads)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ArithmeticError, RuntimeError, ValueError) as exc:
        print(f"numerical failure ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    _emit(text, out)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
