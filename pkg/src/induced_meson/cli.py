"""Command-line interface: ``induced-meson {solve,scan,condensates,validate,oracle}``."""
from __future__ import annotations

import argparse
import json
import sys

from . import report
from .condensates import Condensates, condensates_forward, condensates_invert
from .errors import ModelError
from .params import ModelParams
from .pipeline import GridSpec, ScanTable, Spacing, run_point, run_scan
from .validate import all_passed, standard_params, validate_model
from .vacuum import scaled_potential, vacuum_oracle_grid

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2

CONFIG_KEYS = {
    "nc": "nc", "lambda": "lambda_cut", "m": "m", "fpi": "fpi", "sigma": "sigma",
    "m0a": "m0a", "composite_a": "composite_a",
    "sigma_min": "sigma_min", "sigma_max": "sigma_max", "n": "n", "log": "log",
}
DEFAULTS = {
    "nc": 3, "lambda_cut": 1.0, "m": 0.0, "fpi": None, "sigma": None, "m0a": 0.0,
    "composite_a": False, "sigma_min": 0.0, "sigma_max": 2.0, "n": 21, "log": False,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _model_flags(with_sigma=True):
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--nc", type=int, default=None, help="number of colors (default 3)")
    p.add_argument("--lambda", dest="lambda_cut", type=float, default=None, help="compositeness scale in GeV")
    p.add_argument("--m", type=float, default=None, help="spectral asymmetry in GeV")
    p.add_argument("--fpi", type=float, default=None, help="pion decay constant; switches to override mode")
    p.add_argument("--config", default=None, help="flat JSON file with the same parameter names")
    if with_sigma:
        p.add_argument("--sigma", type=float, default=None)
    p.add_argument("--m0a", type=float, default=None, help="bare axial mass in GeV (default 0)")
    p.add_argument("--composite-a", dest="composite_a", action="store_const", const=True, default=None,
                   help="axial field shares the compositeness scale: m_A^2 = m_phi^2")
    return p


def _output_flags(default_format):
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("csv", "json"), default=default_format)
    p.add_argument("--out", default=None, help="output file (default stdout)")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="induced-meson", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("solve", parents=[_model_flags(), _output_flags("json")], help="single running scale")

    scan = sub.add_parser("scan", parents=[_model_flags(with_sigma=False), _output_flags("csv")], help="sigma grid")
    scan.add_argument("--sigma-min", dest="sigma_min", type=float, default=None)
    scan.add_argument("--sigma-max", dest="sigma_max", type=float, default=None)
    scan.add_argument("--n", type=int, default=None)
    scan.add_argument("--log", action="store_const", const=True, default=None, help="log-spaced grid")

    cond = sub.add_parser("condensates", help="condensate map")
    csub = cond.add_subparsers(dest="direction", required=True, parser_class=_Parser)
    fwd = csub.add_parser("forward")
    fwd.add_argument("--nc", type=int, default=3)
    fwd.add_argument("--lambda", dest="lambda_cut", type=float, required=True)
    fwd.add_argument("--m", type=float, required=True)
    inv = csub.add_parser("invert")
    inv.add_argument("--nc", type=int, default=3)
    inv.add_argument("--cq", type=float, required=True)
    inv.add_argument("--cg", type=float, required=True)
    inv.add_argument("--guess", type=float, nargs=2, metavar=("LAMBDA", "M"), default=None)

    val = sub.add_parser("validate", parents=[_model_flags(with_sigma=False)],
                         help="invariant suite (standard grid unless --lambda/--m/--config given)")
    val.add_argument("--quiet", action="store_true", help="print failures and the summary only")

    orc = sub.add_parser("oracle", parents=[_model_flags()], help="brute-force vacuum only")
    orc.add_argument("--n-points", dest="n_points", type=int, default=10**6)
    orc.add_argument("--s-max", dest="s_max", type=float, default=None)
    return parser


def _load_config(path):
    if path is None:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path!r}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("config must be a flat JSON object")
    unknown = sorted(set(data) - set(CONFIG_KEYS))
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(unknown)}")
    return {CONFIG_KEYS[k]: v for k, v in data.items()}


def resolve(args) -> dict:
    """Defaults, then config file, then command-line flags."""
    values = dict(DEFAULTS)
    values.update(_load_config(getattr(args, "config", None)))
    for key in DEFAULTS:
        v = getattr(args, key, None)
        if v is not None:
            values[key] = v
    return values


def _params(v) -> ModelParams:
    if not isinstance(v["nc"], int):
        raise UsageError("nc must be an integer")
    return ModelParams(n_c=v["nc"], lambda_cut=float(v["lambda_cut"]), m_asym=float(v["m"]), f_pi=v["fpi"])


def _write(text, out):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _cmd_solve(args):
    v = resolve(args)
    if v["sigma"] is None:
        raise UsageError("solve needs --sigma (or 'sigma' in the config file)")
    params = _params(v)
    row = run_point(params, float(v["sigma"]), float(v["m0a"]), bool(v["composite_a"]))
    if args.format == "json":
        text = json.dumps(report.point_to_dict(row), indent=2, allow_nan=False) + "\n"
    else:
        table = ScanTable(params=params, grid=GridSpec(row.sigma, row.sigma, 1), rows=[row])
        text = report.render(table, "csv")
    _write(text, args.out)
    return EXIT_OK


def _cmd_scan(args):
    v = resolve(args)
    grid = GridSpec(float(v["sigma_min"]), float(v["sigma_max"]), int(v["n"]),
                    Spacing.LOG if v["log"] else Spacing.LINEAR)
    try:
        grid.points()
    except ModelError as exc:
        raise UsageError(str(exc)) from exc
    table = run_scan(_params(v), grid, float(v["m0a"]), bool(v["composite_a"]))
    report.emit_report(table, args.format, args.out)
    return EXIT_OK


def _cmd_condensates(args):
    if args.direction == "forward":
        c = condensates_forward(args.nc, args.lambda_cut, args.m)
        out = {"c_q": c.c_q, "c_g": c.c_g}
    else:
        lam, m = condensates_invert(args.nc, Condensates(args.cq, args.cg), tuple(args.guess) if args.guess else None)
        out = {"lambda_cut": lam, "m_asym": m}
    print(json.dumps(out))
    return EXIT_OK


def _cmd_validate(args):
    explicit = any(getattr(args, k) is not None for k in ("lambda_cut", "m", "fpi", "config"))
    if explicit:
        models = [_params(resolve(args))]
    else:
        models = standard_params(args.nc or 3)
    results = []
    for params in models:
        results += validate_model(params)
    for r in results:
        if not args.quiet or not r.passed:
            print(r.line())
    n_fail = sum(1 for r in results if not (r.passed or r.informational))
    print(f"{len(results)} checks, {n_fail} failed")
    return EXIT_OK if all_passed(results) else EXIT_COMPUTE


def _cmd_oracle(args):
    v = resolve(args)
    if v["sigma"] is None:
        raise UsageError("oracle needs --sigma")
    params = _params(v)
    s_max = args.s_max if args.s_max is not None else 3.0 * params.lambda_cut
    phi0 = vacuum_oracle_grid(scaled_potential(params, float(v["sigma"])), s_max, args.n_points)
    print(json.dumps({"sigma": float(v["sigma"]), "phi0": phi0}))
    return EXIT_OK


COMMANDS = {
    "solve": _cmd_solve,
    "scan": _cmd_scan,
    "condensates": _cmd_condensates,
    "validate": _cmd_validate,
    "oracle": _cmd_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"induced-meson: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ModelError as exc:
        print(f"induced-meson: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except OSError as exc:
        print(f"induced-meson: io: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
