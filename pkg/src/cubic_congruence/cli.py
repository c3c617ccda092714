"""Command-line front end.

Payloads go to stdout (JSON for single objects, CSV for bulk rows); a run
manifest with the payload's SHA-256 goes to stderr or to --manifest FILE.

Exit codes: 0 ok, 1 bad arguments, 2 domain error, 3 internal failure.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .experiments import approx_diagnostics, dyad_spacing_stats
from .parametrization import InternalError, enumerate_generators, gamma_data, generator_from_root
from .root_finder import DomainError, RootPair, enumerate_root_pairs, roots_bruteforce, roots_fast
from .sieve_check import make_ones, make_random, make_spike, sieve_ratio

SCHEMA_VERSION = 1
_SAFE_INT = 2**53


class UsageError(Exception):
    pass


@dataclass
class RunManifest:
    command: str
    parameters: dict[str, Any]
    seed: int | None
    tool_version: str
    timestamp: str
    output_digest: str
    schema_version: int = field(default=SCHEMA_VERSION)


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > _SAFE_INT else obj
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}" if obj.denominator != 1 else _jsonable(obj.numerator)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _dump_json(obj: dict[str, Any]) -> str:
    return json.dumps(_jsonable({"schema_version": SCHEMA_VERSION, **obj}), separators=(",", ":")) + "\n"


def _dump_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    buf.write(f"#schema_version={SCHEMA_VERSION}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_jsonable(v) for v in row])
    return buf.getvalue()


def _flat_rows(obj: dict[str, Any], prefix: str = "") -> list[tuple[str, Any]]:
    rows: list[tuple[str, Any]] = []
    for k, v in obj.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            rows.extend(_flat_rows(v, key + "."))
        elif isinstance(v, (list, tuple)) and v and isinstance(v[0], dict):
            for i, item in enumerate(v):
                rows.extend(_flat_rows(item, f"{key}.{i}."))
        elif isinstance(v, (list, tuple)):
            rows.append((key, " ".join(str(_jsonable(x)) for x in v)))
        else:
            rows.append((key, v))
    return rows


def _emit_object(obj: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return _dump_json(obj)
    return _dump_csv(["key", "value"], _flat_rows(obj))


def cmd_roots(args: argparse.Namespace) -> str:
    if args.m < 1:
        raise UsageError("--m must be >= 1")
    roots = roots_fast(args.m)
    if args.oracle and roots != roots_bruteforce(args.m):
        raise InternalError(f"fast and brute-force roots disagree for m={args.m}")
    if args.format == "csv":
        return _dump_csv(["m", "nu"], [(args.m, nu) for nu in roots])
    return _dump_json({"m": args.m, "roots": roots})


def cmd_enumerate(args: argparse.Namespace) -> str:
    if args.M < 1:
        raise UsageError("--M must be >= 1")
    gens = enumerate_generators(args.M)
    if args.oracle and [p for _, p in gens] != enumerate_root_pairs(args.M):
        raise InternalError("generator enumeration disagrees with the root oracle")
    rows = []
    for x, p in gens:
        g = gamma_data(x)
        rows.append((g.m, g.nu, g.a, g.b, g.c, g.u, g.v, g.w))
    header = ["m", "nu", "a", "b", "c", "u", "v", "w"]
    if args.format == "json":
        return _dump_json({"M": args.M, "rows": [dict(zip(header, r)) for r in rows]})
    return _dump_csv(header, rows)


def cmd_approx(args: argparse.Namespace) -> str:
    if args.m < 1:
        raise UsageError("--m must be >= 1")
    x = generator_from_root(RootPair(args.m, args.nu))
    g = gamma_data(x)
    points = []
    for d in approx_diagnostics(g):
        points.append({
            "den": d.point.den,
            "n1": d.point.n1,
            "n2": d.point.n2,
            "torus": [float(d.torus[0]), float(d.torus[1])],
            "torus_exact": [d.torus[0], d.torus[1]],
            "m_sup_dist": float(d.m_sup_dist),
            "m_dist": d.m_dist,
        })
    return _emit_object({
        "m": g.m,
        "nu": g.nu,
        "generator": [g.a, g.b, g.c],
        "uvw": [g.u, g.v, g.w],
        "points": points,
    }, args.format)


def cmd_spacing(args: argparse.Namespace) -> str:
    if args.M < 1:
        raise UsageError("--M must be >= 1")
    if not 0 < args.radius_scale / args.M <= 0.5:
        raise UsageError("radius radius_scale/M must lie in (0, 1/2]")
    s = dyad_spacing_stats(args.M, args.radius_scale)
    return _emit_object({
        "M": s.M,
        "radius": s.radius,
        "point_count": s.point_count,
        "max_disc_count": s.max_disc_count,
        "histogram": s.histogram,
        "min_line_norm_scaled": s.min_line_norm_scaled if s.point_count else None,
    }, args.format)


def cmd_sieve(args: argparse.Namespace) -> str:
    if min(args.M, args.K, args.L) < 1:
        raise UsageError("--M, --K, --L must be >= 1")
    if args.seq == "ones":
        seq = make_ones(args.K, args.L)
    elif args.seq == "random":
        if args.seed is None:
            raise UsageError("--seq random needs --seed")
        seq = make_random(args.K, args.L, args.seed)
    else:
        if args.m0 is not None:
            m0, nu0 = args.m0, args.nu0 if args.nu0 is not None else -1
            spike = RootPair(m0, nu0)
        else:
            pairs = enumerate_root_pairs(args.M)
            if not pairs:
                raise DomainError(f"no root pairs with {args.M} < m <= {2 * args.M}")
            spike = pairs[0]
        seq = make_spike(spike.m, spike.nu, args.K, args.L)
    report = sieve_ratio(args.M, seq)
    return _emit_object(asdict(report), args.format)


COMMANDS = {
    "roots": cmd_roots,
    "enumerate": cmd_enumerate,
    "approx": cmd_approx,
    "spacing": cmd_spacing,
    "sieve": cmd_sieve,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 by default
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--manifest", default=None, help="write the run manifest here, not stderr")

    parser = _Parser(prog="cubic-congruence", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("roots", parents=[common], help="roots of X^3 = 2 mod m")
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("enumerate", parents=[common], help="domain generators for M < m <= 2M")
    p.add_argument("--M", type=int, required=True)

    p = sub.add_parser("approx", parents=[common], help="approximations to (nu/m, nu^2/m)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)

    p = sub.add_parser("spacing", parents=[common], help="disc counts and line norms over a dyad")
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--radius-scale", type=float, default=1.0)

    p = sub.add_parser("sieve", parents=[common], help="large sieve ratio")
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--seq", choices=("ones", "spike", "random"), required=True)
    p.add_argument("--m0", type=int, default=None, help="spike modulus (default: first pair)")
    p.add_argument("--nu0", type=int, default=None)
    return parser


def _default_format(command: str) -> str:
    return "csv" if command == "enumerate" else "json"


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
        if args.format is None:
            args.format = _default_format(args.command)
        payload = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except DomainError as exc:
        print(f"domain error: {exc}", file=stderr)
        return 2
    except (InternalError, AssertionError) as exc:
        print(f"internal error: {exc}", file=stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except Exception as exc:  # anything unforeseen is our fault, not the caller's
        print(f"internal error: {type(exc).__name__}: {exc}", file=stderr)
        return 3

    data = payload.encode("utf-8")
    params = {k: v for k, v in vars(args).items() if k not in ("command", "manifest", "seed")}
    manifest = RunManifest(
        command=args.command,
        parameters=params,
        seed=args.seed,
        tool_version=__version__,
        timestamp=datetime.now(timezone.utc).isoformat(),
        output_digest=hashlib.sha256(data).hexdigest(),
    )
    text = json.dumps(asdict(manifest), sort_keys=True)
    if args.manifest:
        with open(args.manifest, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=stderr)
    if hasattr(stdout, "buffer"):
        stdout.flush()
        stdout.buffer.write(data)
        stdout.flush()
    else:
        stdout.write(payload)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
