"""Command-line front end.

Subcommands
-----------
construct   build a complete MUM set and emit it as JSON
validate    re-check a previously exported measurement set
bounds      closed-form bound table for explicit parameters
sweep       Monte Carlo no-violation sweep over random states
sic         build (optionally depolarized) qubit SIC sets, sweep them

Exit codes: 0 success, 1 usage or parameter error, 2 validation failure
(including bound violations in a sweep), 3 I/O error. Numeric output on
stdout uses 12 significant digits; CSV/JSON files keep full precision so
they parse back to the in-process values exactly. The environment
variable MUM_SEED, when set, overrides any configured seed.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from dataclasses import dataclass

from .bounds import (
    DEFAULT_RENYI_ALPHAS,
    DEFAULT_TSALLIS_ALPHAS,
    bound_table,
    report_to_dict,
    reports_to_csv_string,
    sweep_to_json,
    verify_bounds,
)
from .errors import ValidationError
from .mums import (
    DEFAULT_VALIDATE_TOL,
    build_mums,
    mums_from_json,
    mums_to_json,
    validate_mums,
)
from .sic import (
    depolarized_sic,
    sic_from_json,
    sic_to_json,
    tetrahedron_sic,
    validate_sic,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_IO = 3


def _fmt(x: float) -> str:
    return f"{x:.12g}"


@dataclass(frozen=True)
class RunConfig:
    """One resolved CLI invocation.

    Built from defaults, then an optional JSON config file, then explicit
    flags (later layers win). Round-trips losslessly through to_json /
    from_json, which the test suite asserts.
    """

    command: str
    d: int | None = None
    t: float | str | None = None  # "max" or a positive real
    x: float | None = None
    kappa: float | None = None
    a: float | None = None
    purity: float = 1.0
    renyi_alphas: tuple[float, ...] = DEFAULT_RENYI_ALPHAS
    tsallis_alphas: tuple[float, ...] = DEFAULT_TSALLIS_ALPHAS
    states: int | None = None
    rank: int | str = "mixed"
    seed: int = 0
    workers: int = 1
    infile: str | None = None
    out: str | None = None
    fmt: str = "json"
    tol: float | None = None

    def to_json(self) -> dict:
        data = dataclasses.asdict(self)
        data["renyi_alphas"] = list(self.renyi_alphas)
        data["tsallis_alphas"] = list(self.tsallis_alphas)
        return data

    @classmethod
    def from_json(cls, data: dict) -> "RunConfig":
        if not isinstance(data, dict):
            raise ValidationError(f"config must be a JSON object, got {type(data).__name__}")
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValidationError(f"unknown config fields: {unknown}")
        if "command" not in data:
            raise ValidationError("config is missing the command field")
        kwargs = dict(data)
        for key in ("renyi_alphas", "tsallis_alphas"):
            if key in kwargs:
                kwargs[key] = tuple(float(v) for v in kwargs[key])
        return cls(**kwargs)


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad flags; remap to 1 (usage)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _t_value(text: str):
    if text == "max":
        return "max"
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"t must be 'max' or a real number, got {text!r}")
    return value


def _build_parser() -> _Parser:
    parser = _Parser(prog="mumkit", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="JSON file with a RunConfig; flags override it")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add_common(p):
        p.add_argument("--out", help="output file (default: stdout)")
        p.add_argument("--format", dest="fmt", choices=("json", "csv"))
        p.add_argument("--tol", type=float, help="validation tolerance override")

    p = sub.add_parser("construct", help="build a complete MUM set")
    p.add_argument("--d", type=int, help="Hilbert space dimension (>= 2)")
    p.add_argument("--t", type=_t_value, help="construction parameter, or 'max'")
    add_common(p)

    p = sub.add_parser("validate", help="re-check an exported measurement set")
    p.add_argument("--in", dest="infile", help="JSON file written by construct/sic")
    p.add_argument("--tol", type=float, help="validation tolerance override")

    p = sub.add_parser("bounds", help="closed-form bound table")
    p.add_argument("--d", type=int)
    p.add_argument("--kappa", type=float, help="MUM purity parameter in (1/d, 1]")
    p.add_argument("--a", type=float, help="SIC purity parameter in (1/d^3, 1/d^2]")
    p.add_argument("--purity", type=float, help="state purity in [1/d, 1] (default 1)")
    p.add_argument("--alpha", type=float, nargs="+", help="Renyi alpha grid (each >= 2)")
    p.add_argument(
        "--tsallis-alpha", type=float, nargs="+", dest="tsallis_alpha",
        help="Tsallis alpha grid (each in (0, 2])",
    )
    add_common(p)

    p = sub.add_parser("sweep", help="random-state no-violation sweep")
    p.add_argument("--d", type=int)
    p.add_argument("--t", type=_t_value, help="construction parameter (default 'max')")
    p.add_argument("--states", type=int, help="number of random states")
    p.add_argument("--rank", help="'mixed' (cycle 1..d) or a fixed integer rank")
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--alpha", type=float, nargs="+")
    p.add_argument("--tsallis-alpha", type=float, nargs="+", dest="tsallis_alpha")
    add_common(p)

    p = sub.add_parser("sic", help="build a qubit SIC set; optional sweep")
    p.add_argument("--d", type=int, help="must be 2 (built-in tetrahedron fiducial)")
    p.add_argument("--x", type=float, help="depolarizing weight in (0, 1] (default 1)")
    p.add_argument("--states", type=int, help="run a sweep with this many states")
    p.add_argument("--rank", help="'mixed' or a fixed integer rank")
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int)
    add_common(p)

    return parser


_FLAG_FIELDS = (
    "d", "t", "x", "kappa", "a", "purity", "states", "rank",
    "seed", "workers", "infile", "out", "fmt", "tol",
)


def _resolve_config(args) -> RunConfig:
    layers: dict = {}
    if args.config is not None:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                raw = json.load(fh)
        except OSError as exc:
            raise _IoFailure(f"cannot read config file: {exc}")
        except json.JSONDecodeError as exc:
            raise _UsageFailure(f"config file is not valid JSON: {exc}")
        if not isinstance(raw, dict):
            raise _UsageFailure("config file must hold a JSON object")
        layers.update(raw)
    if args.command is not None:
        layers["command"] = args.command
    if "command" not in layers or layers["command"] is None:
        raise _UsageFailure("no command given (and none in the config file)")

    for field in _FLAG_FIELDS:
        value = getattr(args, field, None)
        if value is not None:
            layers[field] = value
    if getattr(args, "alpha", None) is not None:
        layers["renyi_alphas"] = tuple(args.alpha)
    if getattr(args, "tsallis_alpha", None) is not None:
        layers["tsallis_alphas"] = tuple(args.tsallis_alpha)

    if "rank" in layers and isinstance(layers["rank"], str) and layers["rank"] != "mixed":
        try:
            layers["rank"] = int(layers["rank"])
        except ValueError:
            raise _UsageFailure(f"--rank must be 'mixed' or an integer, got {layers['rank']!r}")

    env_seed = os.environ.get("MUM_SEED")
    if env_seed is not None:
        try:
            layers["seed"] = int(env_seed)
        except ValueError:
            raise _UsageFailure(f"MUM_SEED must be an integer, got {env_seed!r}")

    try:
        return RunConfig.from_json(layers)
    except (ValidationError, TypeError) as exc:
        raise _UsageFailure(str(exc))


class _UsageFailure(Exception):
    exit_code = EXIT_USAGE


class _ValidationFailure(Exception):
    exit_code = EXIT_VALIDATION


class _IoFailure(Exception):
    exit_code = EXIT_IO


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise _IoFailure(f"cannot write {path}: {exc}")


def _check_dim(d) -> int:
    if d is None:
        raise _UsageFailure("--d is required")
    if not isinstance(d, int) or d < 2:
        raise _UsageFailure(f"--d must be an integer >= 2, got {d!r}")
    return d


def cmd_construct(cfg: RunConfig) -> int:
    d = _check_dim(cfg.d)
    t = cfg.t if cfg.t is not None else "max"
    if t != "max" and (not isinstance(t, (int, float)) or t <= 0):
        raise _UsageFailure(f"--t must be 'max' or a positive real, got {t!r}")
    try:
        mums = build_mums(d, t)
    except ValidationError as exc:
        raise _ValidationFailure(str(exc))
    tol = cfg.tol if cfg.tol is not None else DEFAULT_VALIDATE_TOL
    report = validate_mums(mums, tol=tol)
    print(f"d = {mums.d}")
    print(f"t = {_fmt(mums.t)}")
    print(f"kappa = {_fmt(mums.kappa)}")
    print(f"measurements = {mums.n_measurements} x {mums.d} outcomes")
    print(f"max validation deviation = {_fmt(report.max_deviation)} (tol {_fmt(tol)})")
    document = json.dumps(mums_to_json(mums))
    _write_text(cfg.out, document)
    if not report.passed:
        for line in report.lines():
            print(line, file=sys.stderr)
        raise _ValidationFailure("constructed set fails validation")
    return EXIT_OK


def cmd_validate(cfg: RunConfig) -> int:
    if cfg.infile is None:
        raise _UsageFailure("--in is required")
    try:
        with open(cfg.infile, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise _IoFailure(f"cannot read {cfg.infile}: {exc}")
    except json.JSONDecodeError as exc:
        raise _ValidationFailure(f"{cfg.infile} is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise _ValidationFailure(f"{cfg.infile} must hold a JSON object")
    tol = cfg.tol if cfg.tol is not None else DEFAULT_VALIDATE_TOL
    try:
        if "kappa" in data:
            mums = mums_from_json(data, tol=tol)
            report = validate_mums(mums, tol=tol)
            kind = f"MUM set (d = {mums.d}, kappa = {_fmt(mums.kappa)})"
        elif "a" in data:
            sic = sic_from_json(data, tol=tol)
            report = validate_sic(sic, tol=tol)
            kind = f"SIC set (d = {sic.d}, a = {_fmt(sic.a)})"
        else:
            raise _ValidationFailure(
                f"{cfg.infile} has neither a 'kappa' nor an 'a' field"
            )
    except ValidationError as exc:
        raise _ValidationFailure(str(exc))
    print(kind)
    for line in report.lines():
        print(line)
    if not report.passed:
        raise _ValidationFailure("validation failed")
    return EXIT_OK


def cmd_bounds(cfg: RunConfig) -> int:
    d = _check_dim(cfg.d)
    if (cfg.kappa is None) == (cfg.a is None):
        raise _UsageFailure("exactly one of --kappa or --a is required")
    try:
        rows = bound_table(
            d,
            kappa=cfg.kappa,
            a=cfg.a,
            purity=cfg.purity,
            renyi_alphas=cfg.renyi_alphas,
            tsallis_alphas=cfg.tsallis_alphas,
        )
    except ValidationError as exc:
        raise _UsageFailure(str(exc))
    if cfg.out is not None and cfg.fmt == "csv":
        _write_text(cfg.out, reports_to_csv_string(rows))
    elif cfg.out is not None:
        _write_text(cfg.out, json.dumps([report_to_dict(r) for r in rows]))
    name_w = max(len(r.bound_name) for r in rows)
    for r in rows:
        alpha = "" if r.alpha is None else f" alpha={_fmt(r.alpha)}"
        print(f"{r.bound_name:<{name_w}} [{r.base}]{alpha} bound = {_fmt(r.bound)}")
    return EXIT_OK


def cmd_sweep(cfg: RunConfig) -> int:
    d = _check_dim(cfg.d)
    if cfg.states is None or not isinstance(cfg.states, int) or cfg.states < 1:
        raise _UsageFailure(f"--states must be a positive integer, got {cfg.states!r}")
    t = cfg.t if cfg.t is not None else "max"
    try:
        mums = build_mums(d, t)
    except ValidationError as exc:
        raise _ValidationFailure(str(exc))
    return _run_sweep(cfg, mums, f"d = {d}, t = {_fmt(mums.t)}, kappa = {_fmt(mums.kappa)}")


def _run_sweep(cfg: RunConfig, measurements, header: str) -> int:
    try:
        result = verify_bounds(
            measurements,
            cfg.states,
            ranks=cfg.rank,
            seed=cfg.seed,
            workers=cfg.workers,
            renyi_alphas=cfg.renyi_alphas,
            tsallis_alphas=cfg.tsallis_alphas,
            keep_reports=cfg.out is not None,
        )
    except ValidationError as exc:
        raise _UsageFailure(str(exc))
    print(header)
    for line in result.summary_lines():
        print(line)
    if cfg.out is not None:
        if cfg.fmt == "csv":
            _write_text(cfg.out, reports_to_csv_string(result.reports))
        else:
            _write_text(cfg.out, json.dumps(sweep_to_json(result)))
    if result.total_violations > 0:
        raise _ValidationFailure(f"{result.total_violations} bound violations found")
    return EXIT_OK


def cmd_sic(cfg: RunConfig) -> int:
    d = cfg.d if cfg.d is not None else 2
    if d != 2:
        raise _UsageFailure(f"--d must be 2 (built-in tetrahedron fiducial), got {d!r}")
    x = cfg.x if cfg.x is not None else 1.0
    fiducial = tetrahedron_sic()
    try:
        sic = depolarized_sic(fiducial, x) if x != 1.0 else fiducial
    except ValidationError as exc:
        raise _UsageFailure(str(exc))
    tol = cfg.tol if cfg.tol is not None else DEFAULT_VALIDATE_TOL
    report = validate_sic(sic, tol=tol)
    print(f"d = {sic.d}")
    print(f"x = {_fmt(x)}")
    print(f"a = {_fmt(sic.a)}")
    print(f"max validation deviation = {_fmt(report.max_deviation)} (tol {_fmt(tol)})")
    if not report.passed:
        for line in report.lines():
            print(line, file=sys.stderr)
        raise _ValidationFailure("SIC set fails validation")
    if cfg.states is not None:
        return _run_sweep(cfg, sic, f"sweep over SIC set, a = {_fmt(sic.a)}")
    document = json.dumps(sic_to_json(sic))
    _write_text(cfg.out, document)
    return EXIT_OK


_COMMANDS = {
    "construct": cmd_construct,
    "validate": cmd_validate,
    "bounds": cmd_bounds,
    "sweep": cmd_sweep,
    "sic": cmd_sic,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _resolve_config(args)
        if cfg.command not in _COMMANDS:
            raise _UsageFailure(f"unknown command {cfg.command!r}")
        return _COMMANDS[cfg.command](cfg)
    except (_UsageFailure, _ValidationFailure, _IoFailure) as exc:
        print(f"mumkit: error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
