"""Command-line entry point.

Exit status: 0 on success (every verdict StrictPass or vacuous), 1 on a
Violation or a runtime error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import io
from .enumeration import canonical_form, generate_hypertrees
from .errors import HyperspecError
from .extremal import THEOREMS, run_verification
from .families import FamilySpec, hyperstar_parts
from .grafts import graft1, graft2, graft3
from .spectral import DEFAULT_MAX_ITER, DEFAULT_TOL, distance_matrix, spectral_radius


@dataclass(frozen=True)
class RunConfig:
    tolerance: float = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER
    seed: int = 0
    output: str = "text"


def _emit_json(payload: dict) -> None:
    sys.stdout.write(io.dumps({"schema": io.SCHEMA_VERSION, **payload}) + "\n")


def _config(args: argparse.Namespace, parser: argparse.ArgumentParser) -> RunConfig:
    if not args.tol > 0:
        parser.error(f"--tol must be positive, got {args.tol}")
    if args.max_iter < 1:
        parser.error(f"--max-iter must be at least 1, got {args.max_iter}")
    output = "json" if args.json else args.format
    return RunConfig(args.tol, args.max_iter, args.seed, output)


def _cmd_family(args, cfg: RunConfig) -> int:
    if args.spec:
        spec = FamilySpec.from_dict(json.loads(Path(args.spec).read_text(encoding="utf-8")))
    else:
        if args.kind is None or args.n is None or args.k is None:
            raise _Usage("family needs --spec, or --kind with --n and --k")
        params = {"n": args.n, "k": args.k}
        if args.delta is not None:
            params["delta"] = args.delta
        if args.a is not None:
            params["a"] = args.a
        spec = FamilySpec(args.kind, params)
    G = spec.build()
    if args.out:
        io.write_uhg(G, args.out)
    if cfg.output == "json":
        _emit_json({"family": spec.to_dict(), "hypergraph": io.hypergraph_to_dict(G)})
    elif not args.out:
        sys.stdout.write(io.format_uhg(G))
    return 0


def _cmd_rho(args, cfg: RunConfig) -> int:
    G = io.load_hypergraph(args.input)
    r = spectral_radius(G, cfg.tolerance, cfg.max_iter)
    if cfg.output == "json":
        _emit_json(r.to_dict())
    elif cfg.output == "csv":
        rows = [("rho", io.format_float(r.rho)), ("residual", io.format_float(r.residual)),
                ("iterations", str(r.iterations))]
        rows += [(f"perron[{i}]", io.format_float(x)) for i, x in enumerate(r.perron)]
        sys.stdout.write("key,value\n" + "".join(f"{k},{v}\n" for k, v in rows))
    else:
        print(f"rho        {r.rho:.15g}")
        print(f"residual   {r.residual:.3e}")
        print(f"iterations {r.iterations}")
    return 0


def _cmd_distance(args, cfg: RunConfig) -> int:
    D = distance_matrix(io.load_hypergraph(args.input))
    if cfg.output == "json":
        _emit_json({"n": D.n, "d": D.d.tolist()})
        return 0
    text = D.to_csv()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_graft(args, cfg: RunConfig) -> int:
    G = io.load_hypergraph(args.input)
    kw = dict(tol=cfg.tolerance, max_iter=cfg.max_iter)
    if args.type == 1:
        _need(args, "u", "p", "q")
        report = graft1(G, args.u, args.p, args.q, **kw)
    elif args.type == 2:
        _need(args, "u", "v", "p", "q")
        e = args.e
        if e is None:
            shared = [i for i, edge in enumerate(G.edges) if args.u in edge and args.v in edge]
            if len(shared) != 1:
                raise _Usage("--e is required when u and v do not share exactly one edge")
            e = shared[0]
        report = graft2(G, args.u, args.v, e, args.p, args.q, **kw)
    else:
        _need(args, "e", "s", "t")
        ts = [int(x) for x in args.t.split(",") if x.strip()]
        report = graft3(G, args.e, args.s, hyperstar_parts(ts, G.k or 0), **kw)
    if cfg.output == "json":
        _emit_json({"type": args.type, "report": report.to_dict()})
    else:
        print(f"graft {args.type}: {report.verdict.value}")
        inner = getattr(report, "forward", report)
        print(f"gap {inner.gap:.6e}")
    return 1 if report.verdict.value == "Violation" else 0


def _cmd_enumerate(args, cfg: RunConfig) -> int:
    trees = generate_hypertrees(args.k, args.m)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    classes = []
    for i, T in enumerate(trees):
        name = f"class_{i:03d}.uhg"
        io.write_uhg(T, out / name)
        classes.append({"file": name, "code": canonical_form(T).to_list()})
    manifest = {"schema": io.SCHEMA_VERSION, "k": args.k, "m": args.m,
                "n": 1 + (args.k - 1) * args.m, "count": len(trees), "classes": classes}
    (out / "manifest.json").write_text(io.dumps(manifest) + "\n", encoding="utf-8")
    if cfg.output == "json":
        _emit_json({k: v for k, v in manifest.items() if k != "schema"})
    else:
        print(f"{len(trees)} classes written to {out}")
    return 0


def _cmd_verify(args, cfg: RunConfig) -> int:
    theorems = tuple(args.theorem) if args.theorem else THEOREMS
    summary = run_verification(args.k, args.m, theorems, cfg.tolerance, cfg.max_iter)
    if cfg.output == "json":
        _emit_json(summary)
    else:
        for name, result in summary["results"].items():
            if isinstance(result, dict) and "verdict" in result:
                status = result["verdict"]
            elif isinstance(result, dict):
                status = "pass" if _result_ok(result) else "FAIL"
            else:
                status = "pass" if all(row["ok"] for row in result) else "FAIL"
            print(f"{name:<11} {status}")
        print("overall    ", "pass" if summary["passed"] else "FAIL")
    return 0 if summary["passed"] else 1


def _result_ok(result: dict) -> bool:
    claims = result.get("steps", []) + (result.get("argmax") or [])
    return all(c["verdict"] in ("StrictPass", "Vacuous") for c in claims) and all(
        i["holds"] for i in result.get("identities", [])
    )


class _Usage(Exception):
    pass


def _need(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise _Usage(f"missing required option(s): {', '.join(missing)}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="residual tolerance")
    common.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--json", action="store_true", help="shorthand for --format json")

    parser = argparse.ArgumentParser(prog="hyperspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", parents=[common], help="materialize a family instance")
    p.add_argument("--kind")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--spec", help="FamilySpec JSON file")
    p.add_argument("--out", help="write the hypergraph as .uhg")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("rho", parents=[common], help="distance spectral radius")
    p.add_argument("input")
    p.set_defaults(func=_cmd_rho)

    p = sub.add_parser("distance", parents=[common], help="distance matrix as CSV")
    p.add_argument("input")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser("graft", parents=[common], help="check one graft transformation")
    p.add_argument("--type", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--input", required=True)
    for name in ("u", "v", "e", "p", "q", "s"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--t", help="comma-separated hyperstar sizes t_1,...,t_{k-1}")
    p.set_defaults(func=_cmd_graft)

    p = sub.add_parser("enumerate", parents=[common], help="write all hypertrees of a size")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="check the extremal results")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--theorem", action="append", choices=THEOREMS)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _config(args, parser)
    try:
        return args.func(args, cfg)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"hyperspec {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (HyperspecError, OSError, json.JSONDecodeError) as exc:
        print(f"hyperspec {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
