"""pseudogamma command line: ``eval``, ``verify`` and ``scan``.

Exit codes: 0 success, 1 an asserted check failed, 2 configuration or
domain error (one-line diagnostic on stderr naming the formula involved).
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from pathlib import Path
from typing import Optional

from . import classical
from .config import RunConfig, build_config, load_toml
from .ee_num import LogComplex, from_cartesian
from .errors import ConfigError, MaxTermsExceeded, PseudoGammaError
from .grid import POLICIES, GridSpec
from .parallel import ordered_map
from .pseudo_gamma import PseudoGammaParams, chain_bounds_dd, nabla
from .report import build_document, csv_text, dumps, write_meta
from .suites import SUITES

TARGETS = ("nabla", "zeta", "gamma", "xi")

EXIT_OK, EXIT_FAILED, EXIT_ERROR = 0, 1, 2


def _complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def _common() -> argparse.ArgumentParser:
    sup = argparse.SUPPRESS
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("run configuration")
    g.add_argument("--config", default=sup, help="TOML run configuration")
    g.add_argument("--regime", choices=("paper", "toy"), default=sup)
    g.add_argument("--R", type=float, default=sup, dest="R")
    g.add_argument("--omega", type=float, default=sup)
    g.add_argument("--alpha", type=float, default=sup)
    g.add_argument("--k-override", type=int, default=sup, dest="k_override")
    g.add_argument("--precision", choices=("standard", "extended"), default=sup)
    g.add_argument("--evaluator", choices=("auto", "direct", "closed"), default=sup)
    g.add_argument("--out", default=sup, help="output file")
    return p


def _grid_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("grid")
    g.add_argument("--grid-kind", choices=("interval", "circle"), dest="grid_kind")
    g.add_argument("--count", type=int)
    g.add_argument("--start", type=float)
    g.add_argument("--end", type=float)
    g.add_argument("--radius", type=float)
    g.add_argument("--policy", choices=POLICIES)
    g.add_argument("--axis", choices=("real", "imag"))
    g.add_argument("--fixed", type=float, help="Im s of a real-axis interval, or Re s of an imaginary one")


def make_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="pseudogamma", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", parents=[common], help="evaluate one function at one point")
    ev.add_argument("target", choices=TARGETS)
    ev.add_argument("s", nargs="?", type=_complex, help="point (e.g. 0.5, 2+3j); or use --s")
    ev.add_argument("--s", type=_complex, dest="s_opt")

    ve = sub.add_parser("verify", parents=[common], help="run a verification suite and write a JSON report")
    ve.add_argument("suite", choices=tuple(SUITES))
    ve.add_argument("--r-tilde", type=float, dest="r_tilde")
    ve.add_argument("--n-angles", type=int, dest="n_angles")
    ve.add_argument("--seed", type=int)
    _grid_args(ve)

    sc = sub.add_parser("scan", parents=[common], help="evaluate along a grid and write CSV")
    sc.add_argument("target", choices=TARGETS)
    _grid_args(sc)
    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    file_data = load_toml(args.config) if getattr(args, "config", None) else None
    over = {
        "regime": getattr(args, "regime", None),
        "R": getattr(args, "R", None),
        "Omega": getattr(args, "omega", None),
        "alpha": getattr(args, "alpha", None),
        "k_override": getattr(args, "k_override", None),
        "precision": getattr(args, "precision", None),
        "evaluator": getattr(args, "evaluator", None),
        "out": getattr(args, "out", None),
        "r_tilde": getattr(args, "r_tilde", None),
        "n_angles": getattr(args, "n_angles", None),
        "seed": getattr(args, "seed", None),
    }
    grid = {
        key: getattr(args, attr, None)
        for key, attr in (("kind", "grid_kind"), ("count", "count"), ("start", "start"), ("end", "end"),
                          ("radius", "radius"), ("endpoint_policy", "policy"), ("axis", "axis"),
                          ("fixed", "fixed"))
    }
    grid = {k: v for k, v in grid.items() if v is not None}
    if grid:
        over["grid"] = grid
    return build_config(file_data, over)


# -- evaluation --------------------------------------------------------------

def evaluate(target: str, s: complex, cfg: RunConfig, p: Optional[PseudoGammaParams] = None) -> LogComplex:
    if target == "nabla":
        return nabla(s, p or cfg.params(), cfg.profile, cfg.evaluator)
    tol = cfg.tolerance
    if target == "zeta":
        z = classical.zeta_hasse(s, tol)
        return from_cartesian(z.real, z.imag)
    if target == "gamma":
        return classical.gamma_weierstrass(s, tol)
    if target == "xi":
        return classical.xi(s, tol)
    raise ValueError(target)


def _real_text(x: float) -> str:
    text = repr(x)
    return text[:-2] if text.endswith(".0") else text


def _point_text(s: complex) -> str:
    if s.imag == 0.0:
        return _real_text(s.real)
    sign = "-" if math.copysign(1.0, s.imag) < 0 else "+"
    return f"{_real_text(s.real)}{sign}{_real_text(abs(s.imag))}j"


def _format_value(v: LogComplex) -> str:
    if not v.in_float_range():
        return f"exp({v.log_mod!r}) * exp(i {v.arg!r})"
    return _point_text(v.to_complex())


def cmd_eval(args: argparse.Namespace) -> int:
    cfg = _config_from(args)
    s = args.s_opt if args.s_opt is not None else args.s
    if s is None:
        raise ConfigError("eval needs a point: pass S or --s S")
    v = evaluate(args.target, s, cfg)
    print(f"{args.target}({_point_text(s)}) = {_format_value(v)}")
    print(f"log_mod = {v.log_mod + v.lo!r}")
    print(f"arg = {v.arg!r}")
    return EXIT_OK


# -- verification ------------------------------------------------------------

def cmd_verify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    cfg = _config_from(args)
    p = cfg.params()
    reports = SUITES[args.suite](cfg, p)
    doc = build_document(args.suite, cfg.to_dict(), p.summary(), reports)
    out = cfg.out or f"{args.suite}_report.json"
    Path(out).write_text(dumps(doc), encoding="utf-8")
    write_meta(out, started, {"suite": args.suite})
    for r in reports:
        if r.asserted and not r.holds:
            print(f"FAIL {r.name}: margin {r.margin!r}")
    s = doc["summary"]
    print(f"{args.suite}: {s['checks']} checks, {s['asserted']} asserted, "
          f"{s['asserted_failures']} failed -> {out}")
    return EXIT_OK if s["all_asserted_hold"] else EXIT_FAILED


# -- scan --------------------------------------------------------------------

def scan_rows(target: str, grid: GridSpec, cfg: RunConfig) -> list[dict]:
    p = cfg.params() if target == "nabla" else None
    final = None
    if p is not None and p.Omega == 1.0 and p.alpha == 0.25:
        final = float(chain_bounds_dd(p)[1])

    def row(item):
        i, s = item
        out = {"index": i, "re_s": s.real, "im_s": s.imag}
        try:
            v = evaluate(target, s, cfg, p)
        except (PseudoGammaError, OverflowError, ArithmeticError) as exc:
            out["error"] = f"{type(exc).__name__}: {exc}"
            return out
        out["log_mod"] = v.log_mod + v.lo
        out["arg"] = v.arg
        if final is not None and s.imag == 0.0 and 0.5 < s.real <= 2.0:
            out["extra"] = final - out["log_mod"]
        return out

    return ordered_map(row, list(enumerate(grid.points())))


def cmd_scan(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    cfg = _config_from(args)
    rows = scan_rows(args.target, cfg.grid, cfg)
    text = csv_text(rows)
    if cfg.out:
        Path(cfg.out).write_text(text, encoding="utf-8")
        write_meta(cfg.out, started, {"target": args.target, "rows": len(rows)})
    else:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {"eval": cmd_eval, "verify": cmd_verify, "scan": cmd_scan}


def main(argv: Optional[list[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (PseudoGammaError, MaxTermsExceeded) as exc:
        formula = getattr(exc, "formula", "")
        where = f" [{formula}]" if formula else ""
        print(f"pseudogamma: error: {type(exc).__name__}: {exc}{where}", file=sys.stderr)
        return EXIT_ERROR
    except (OverflowError, ValueError) as exc:
        print(f"pseudogamma: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
