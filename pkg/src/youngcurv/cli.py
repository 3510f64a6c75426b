"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import curvature_gen as cg
from .lr import format_product, lr_product
from .perm_algebra import GroupRingElement, ring_multiply, star
from .report import DEFAULT_TOLERANCES, EXCEPTIONAL_NU, full_report, idempotent_table
from .rng import default_seed, derive_rng
from .spacetime.formulas import FORMULAS, invariants, staticity_test, verify_curvature_formulas
from .spacetime.frame import GeometryError, build_point_frame
from .spacetime.metrics import get_metric
from .young import YoungTableau, essential_factor, verify_ring_decomposition, young_symmetrizer

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    seed: int = field(default_factory=default_seed)
    tolerances: dict = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    metric: str = "minkowski"
    params: dict = field(default_factory=dict)
    point: tuple | None = None
    output: str | None = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        cfg = cls()
        if getattr(args, "config", None):
            try:
                data = json.loads(Path(args.config).read_text())
            except (OSError, json.JSONDecodeError) as exc:
                raise UsageError(f"cannot read config {args.config}: {exc}") from None
            cfg.seed = int(data.get("seed", cfg.seed))
            cfg.tolerances.update(data.get("tolerances", {}))
            cfg.metric = data.get("metric", cfg.metric)
            cfg.params.update(data.get("params", {}))
            if "point" in data:
                cfg.point = tuple(float(v) for v in data["point"])
            cfg.output = data.get("output", cfg.output)
        if getattr(args, "seed", None) is not None:
            cfg.seed = args.seed
        for item in getattr(args, "tol", None) or []:
            key, value = _split_pair(item)
            cfg.tolerances[key] = float(value)
        if getattr(args, "metric", None):
            cfg.metric = args.metric
        for item in getattr(args, "param", None) or []:
            key, value = _split_pair(item)
            cfg.params[key] = float(value)
        if getattr(args, "point", None):
            cfg.point = _floats(args.point)
        if getattr(args, "output", None):
            cfg.output = args.output
        if any(v <= 0 for v in cfg.tolerances.values()):
            raise UsageError("tolerances must be positive")
        return cfg


def _split_pair(item: str) -> tuple[str, str]:
    if "=" not in item:
        raise UsageError(f"expected key=value, got {item!r}")
    key, value = item.split("=", 1)
    return key.strip(), value.strip()


def _floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"bad number list {text!r}") from None


def _ints(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def _emit(payload: dict, as_json: bool, text: str, output: str | None = None) -> None:
    doc = json.dumps(payload, sort_keys=True, indent=2, default=str)
    if output:
        Path(output).write_text(doc + "\n")
    print(doc if as_json else text)


def cmd_lr(args, cfg) -> int:
    prod = lr_product(_ints(args.left), _ints(args.right))
    text = format_product(_ints(args.left), _ints(args.right), prod)
    _emit({"left": _ints(args.left), "right": _ints(args.right), "product": prod.to_json(),
           "text": text}, args.json, text)
    return EXIT_OK


def cmd_symmetrizer(args, cfg) -> int:
    t = YoungTableau.parse(args.tableau)
    y = star(young_symmetrizer(t)) if args.star else young_symmetrizer(t)
    mu = essential_factor(y)
    lines = [f"tableau {t}  frame {t.frame}  standard={t.is_standard()}",
             f"{len(y)} terms, y*y = {mu}*y"]
    lines += [f"  {'+' if c > 0 else '-'}{abs(c)} {list(p)}" for p, c in y.items()]
    _emit({"tableau": t.to_json(), "element": y.to_json(), "essential_factor": str(mu)},
          args.json, "\n".join(lines))
    return EXIT_OK


def cmd_idempotents(args, cfg) -> int:
    nus = [Fraction(v) for v in args.nu] if args.nu else None
    rows = idempotent_table(nus) if nus else idempotent_table()
    ok = all(r["pass"] for r in rows)
    text = "\n".join(f"{r['relation']}: {'holds' if r['holds'] else 'fails'} "
                     f"({'pass' if r['pass'] else 'FAIL'})" for r in rows)
    _emit({"relations": rows, "pass": ok}, args.json, text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_span(args, cfg) -> int:
    dim = args.dim
    if not 2 <= dim <= 4:
        raise UsageError("--dim must be between 2 and 4")
    target = cg.acr_dimension(dim)
    samples = args.samples if args.samples is not None else 3 * target
    rng = derive_rng(cfg.seed, f"span/{args.generator}/{args.nu}/{args.order}/{dim}")
    if args.generator in ("gamma", "alpha"):
        rank = cg.thm12_span_experiment(dim, samples, args.generator, rng)
        ok = rank == target if samples >= target else True
    else:
        if dim != 4:
            raise UsageError("the product generators are defined for dim 4")
        nu = Fraction(args.nu)
        rank = cg.thm13_span_experiment(nu, samples, args.order, rng)
        ok = rank < target if nu == EXCEPTIONAL_NU else (rank == target or samples < target)
    payload = {"generator": args.generator, "dim": dim, "samples": samples, "seed": cfg.seed,
               "rank": rank, "target": target, "pass": ok}
    if args.generator == "thm13":
        payload.update(nu=str(Fraction(args.nu)), order=args.order)
    _emit(payload, True, "")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args, cfg) -> int:
    provider = get_metric(cfg.metric, **cfg.params)
    point = cfg.point or provider.default_point
    formulas = tuple(args.formulas.split(",")) if args.formulas else FORMULAS
    unknown = set(formulas) - set(FORMULAS)
    if unknown:
        raise UsageError(f"unknown formulas {sorted(unknown)}; choose from {FORMULAS}")
    frame = build_point_frame(provider, point)
    rep = verify_curvature_formulas(frame, formulas)
    tol = cfg.tolerances["formula"]
    results = {}
    for name, entry in rep["formulas"].items():
        if "precondition" in entry:
            status = "precondition"
        else:
            status = "pass" if entry["relative"] <= tol else "fail"
        results[name] = {**entry, "status": status}
    stat = staticity_test(provider, point)
    payload = {
        "metric": provider.name, "params": dict(provider.parameters), "point": list(point),
        "tolerance": tol, "formulas": results, "scale": rep["scale"],
        "D_residual": rep["D_residual"], "staticity": stat, "invariants": invariants(frame),
        "pass": all(r["status"] != "fail" for r in results.values()),
    }
    text = "\n".join([f"{provider.name} at {list(point)}"]
                     + [f"  ({n}) relative residual {r['relative']:.3e}  {r['status']}"
                        for n, r in results.items()]
                     + [f"  static: {stat['is_static']}"])
    _emit(payload, args.json, text, cfg.output)
    return EXIT_OK if payload["pass"] else EXIT_FAIL


def cmd_decompose(args, cfg) -> int:
    if args.r < 1 or args.r > 5:
        raise UsageError("--r must be between 1 and 5")
    rep = verify_ring_decomposition(args.r)
    text = (f"r={args.r}: sum f_lambda^2 = {rep['sum_f_squared']}, "
            f"rank of left translates = {rep['left_translate_rank']}, r! = {rep['order']}")
    _emit(rep, args.json, text)
    return EXIT_OK if rep["pass"] else EXIT_FAIL


def cmd_report(args, cfg) -> int:
    rep = full_report(cfg.seed, cfg.tolerances)
    text = "\n".join(f"{name}: {'pass' if s['pass'] else 'FAIL'}" for name, s in rep["sections"].items())
    _emit(rep, args.json or not sys.stdout.isatty(), text, cfg.output)
    return EXIT_OK if rep["pass"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--config", help="JSON config file; explicit flags take precedence")
    common.add_argument("--seed", type=int, help="master seed (default from $YOUNGCURV_SEED or 42)")
    common.add_argument("--tol", action="append", metavar="KEY=VALUE", help="tolerance override")

    parser = argparse.ArgumentParser(prog="youngcurv", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson product")
    p.add_argument("--left", required=True, help="partition, e.g. 2,1")
    p.add_argument("--right", required=True)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("symmetrizer", parents=[common], help="Young symmetrizer of a tableau")
    p.add_argument("--tableau", required=True, help='rows separated by ";", e.g. "1,3;2,4"')
    p.add_argument("--star", action="store_true", help="print y_t^* instead of y_t")
    p.set_defaults(func=cmd_symmetrizer)

    p = sub.add_parser("idempotents", parents=[common], help="zeta/eta/rho/f0 relation table")
    p.add_argument("--nu", action="append", help="zeta parameter (repeatable), e.g. -1 or 1/2")
    p.set_defaults(func=cmd_idempotents)

    p = sub.add_parser("span", parents=[common], help="span-rank experiments")
    p.add_argument("--generator", choices=("gamma", "alpha", "thm13"), required=True)
    p.add_argument("--nu", default="-1")
    p.add_argument("--order", choices=("Uw", "wU"), default="Uw")
    p.add_argument("--dim", type=int, default=4)
    p.add_argument("--samples", type=int)
    p.set_defaults(func=cmd_span)

    p = sub.add_parser("verify", parents=[common], help="curvature formula residuals at a point")
    p.add_argument("--metric", help="minkowski | schwarzschild | langevin | flrw | kerr")
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--point", help="t,x1,x2,x3")
    p.add_argument("--formulas", help=f"comma list from {','.join(FORMULAS)}")
    p.add_argument("--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", parents=[common], help="left-ideal decomposition of Q[S_r]")
    p.add_argument("--r", type=int, default=4)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("report", parents=[common], help="run the whole verification suite")
    p.add_argument("--output")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        return args.func(args, cfg)
    except (UsageError, ValueError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
