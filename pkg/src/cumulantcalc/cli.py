"""Command-line front end: enumeration, verification, tables, conversion.

Exit codes: 0 success, 1 identity failure, 2 usage error, 3 resource
limit exceeded.  Data goes to stdout, diagnostics to stderr; identical
invocations produce byte-identical output (reports carry no timestamps
and all randomized checks are seeded).

Flag / environment precedence: command-line flags win over environment
variables (CUMULANTCALC_MAX_*, CUMULANTCALC_CACHE_DIR, CUMULANTCALC_JOBS),
which win over built-in defaults.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .algebra import rational_from_str, rational_to_str
from .cumulants import build_beta_table, convert_sequence
from .forests import alpha
from .graphs import anti_interval_digraph, anti_interval_graph, digraph_key, tutte_eval
from .identities import (
    IDENTITY_CATALOG,
    experimental_thm2_multivariate,
    identity_names,
    verify_identity,
)
from .limits import ResourceLimitError
from .partitions import (
    PartitionClass,
    SetPartition,
    enumerate_monotone,
    enumerate_partitions,
    mobius_to_top,
    partitions_of,
)

EXIT_OK = 0
EXIT_IDENTITY_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


#: default output format per subcommand (overridden by --format / env)
_FORMAT_DEFAULTS = {
    "enumerate": "text",
    "verify": "json",
    "experimental-thm2": "json",
    "table": "csv",
    "convert": "json",
    "graph": "text",
}


@dataclass
class Config:
    """Runtime configuration resolved from flags and environment."""

    output_format: str = "text"
    limit: int | None = None
    jobs: int = 1
    cache_dir: Path | None = None
    verbose: int = 0

    def class_limits(self) -> dict[str, int]:
        """Effective per-class enumeration limits (flag > env > default)."""
        from .limits import DEFAULT_LIMITS, limit_for

        return {key: limit_for(key, self.limit) for key in DEFAULT_LIMITS}

    @classmethod
    def from_args(cls, args) -> "Config":
        cache = args.cache_dir or os.environ.get("CUMULANTCALC_CACHE_DIR")
        jobs = args.jobs
        if jobs is None:
            jobs = int(os.environ.get("CUMULANTCALC_JOBS", "1"))
        fmt = args.format or os.environ.get("CUMULANTCALC_FORMAT")
        if fmt is None:
            fmt = _FORMAT_DEFAULTS[args.command]
        return cls(
            output_format=fmt,
            limit=args.limit,
            jobs=max(1, jobs),
            cache_dir=Path(cache) if cache else None,
            verbose=args.verbose,
        )


def _json_dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------

_CLASS_NAMES = {c.value: c for c in PartitionClass}


def _cmd_enumerate(args, cfg: Config) -> int:
    name = args.partition_class.lower()
    if name == "monotone":
        items = enumerate_monotone(args.n, limit=cfg.limit)
        for op in items:
            if cfg.output_format == "json":
                print(_json_dumps({"blocks_in_order": [list(b) for b in op.blocks_in_order]}))
            else:
                print(op.to_text())
        return EXIT_OK
    if name not in _CLASS_NAMES:
        valid = ", ".join(sorted(_CLASS_NAMES) + ["monotone"])
        print(f"error: unknown partition class {name!r} (expected one of {valid})",
              file=sys.stderr)
        return EXIT_USAGE
    writer = None
    if cfg.output_format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["partition", "noncrossing", "interval", "irreducible", "connected"])
    for pi in enumerate_partitions(args.n, _CLASS_NAMES[name], limit=cfg.limit):
        if cfg.output_format == "json":
            flags = pi.classify()
            print(_json_dumps({
                "partition": pi.to_json(),
                "noncrossing": flags.noncrossing,
                "interval": flags.interval,
                "irreducible": flags.irreducible,
                "connected": flags.connected,
            }))
        elif cfg.output_format == "csv":
            flags = pi.classify()
            writer.writerow([pi.to_text(), flags.noncrossing, flags.interval,
                             flags.irreducible, flags.connected])
        else:
            print(pi.to_text())
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _verify_worker(job):
    name, n = job
    rep = verify_identity(name, n)
    return rep.to_dict()


def _cmd_verify(args, cfg: Config) -> int:
    if args.identity == "--all" or args.all:
        names = identity_names()
    else:
        name = args.identity
        if name not in IDENTITY_CATALOG:
            print(f"error: unknown identity {name!r}", file=sys.stderr)
            print("known identities: " + ", ".join(identity_names()), file=sys.stderr)
            return EXIT_USAGE
        names = [name]
    jobs = []
    for name in names:
        top = min(args.n_max, IDENTITY_CATALOG[name].max_n) if args.all else args.n_max
        if not args.all and args.n_max > IDENTITY_CATALOG[name].max_n:
            print(
                f"error: identity {name} is limited to n <= "
                f"{IDENTITY_CATALOG[name].max_n}",
                file=sys.stderr,
            )
            return EXIT_RESOURCE
        jobs.extend((name, n) for n in range(1, top + 1))
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            reports = list(pool.map(_verify_worker, jobs))
    else:
        reports = [_verify_worker(j) for j in jobs]
    all_hold = all(r["holds"] for r in reports)
    if cfg.output_format == "text":
        for r in reports:
            status = "ok" if r["holds"] else "FAIL"
            extra = ""
            if r.get("detail") and "sum" in r["detail"]:
                extra = f" sum={r['detail']['sum']}"
            print(f"{status} {r['identity']} n={r['n']}{extra}")
    else:
        print(_json_dumps(reports))
    return EXIT_OK if all_hold else EXIT_IDENTITY_FAILURE


def _cmd_experimental(args, cfg: Config) -> int:
    reports = [experimental_thm2_multivariate(n).to_dict() for n in range(1, args.n_max + 1)]
    print(_json_dumps(reports))
    return EXIT_OK  # experimental: informative only, never a failure code


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------


def _digraph_key_str(key) -> str:
    n, und, dirs, loops = key
    parts = [f"n={n}"]
    if und:
        parts.append("u:" + ",".join(f"{a}-{b}" for a, b in und))
    if dirs:
        parts.append("d:" + ",".join(f"{a}>{b}" for a, b in dirs))
    return ";".join(parts)


def _table_rows(what: str, n: int):
    if what == "beta":
        table = build_beta_table(n)
        header = ["partition", "digraph_key", "beta"]
        rows = [
            (pi.to_text(), _digraph_key_str(key), rational_to_str(value))
            for pi, key, value in table.rows
        ]
    elif what == "alpha":
        header = ["partition", "alpha"]
        rows = [
            (pi.to_text(), rational_to_str(alpha(pi)))
            for pi in partitions_of(n, "noncrossing")
        ]
    elif what == "tutte":
        header = ["partition", "blocks", "tutte_anti_interval_10"]
        rows = [
            (pi.to_text(), str(pi.num_blocks),
             rational_to_str(tutte_eval(anti_interval_graph(pi), 1, 0)))
            for pi in partitions_of(n, "irreducible")
        ]
    elif what == "mobius":
        header = ["partition", "mu_p_top", "mu_nc_top", "mu_i_top"]
        rows = []
        for pi in partitions_of(n, "all"):
            nc = str(mobius_to_top(pi, "NC")) if pi.is_noncrossing() else ""
            iv = str(mobius_to_top(pi, "I")) if pi.is_interval() else ""
            rows.append((pi.to_text(), str(mobius_to_top(pi, "P")), nc, iv))
    else:
        raise ValueError(f"unknown table {what!r}")
    return header, rows


def _cmd_table(args, cfg: Config) -> int:
    what = args.what.lower()
    if what not in ("beta", "alpha", "tutte", "mobius"):
        print(f"error: unknown table {what!r}", file=sys.stderr)
        return EXIT_USAGE
    cache_file = None
    if cfg.cache_dir is not None:
        cfg.cache_dir.mkdir(parents=True, exist_ok=True)
        cache_file = cfg.cache_dir / f"table-{what}-{args.n}.json"
    if cache_file is not None and cache_file.exists():
        payload = json.loads(cache_file.read_text())
        header, rows = payload["header"], [tuple(r) for r in payload["rows"]]
    else:
        header, rows = _table_rows(what, args.n)
        if cache_file is not None:
            cache_file.write_text(
                _json_dumps({"header": header, "rows": [list(r) for r in rows]})
            )
    if cfg.output_format == "json":
        print(_json_dumps([dict(zip(header, r)) for r in rows]))
    else:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        sys.stdout.write(out.getvalue())
    return EXIT_OK


# ---------------------------------------------------------------------------
# convert
# ---------------------------------------------------------------------------

_SEQ_KINDS = ("moments", "classical", "free", "boolean", "monotone")


def _cmd_convert(args, cfg: Config) -> int:
    src, dst = args.src.lower(), args.dst.lower()
    for kind in (src, dst):
        if kind not in _SEQ_KINDS:
            print(f"error: unknown sequence kind {kind!r} "
                  f"(expected one of {', '.join(_SEQ_KINDS)})", file=sys.stderr)
            return EXIT_USAGE
    try:
        raw = json.loads(args.values)
    except json.JSONDecodeError as exc:
        print(f"error: values must be a JSON array of rationals "
              f"(parse error at position {exc.pos})", file=sys.stderr)
        return EXIT_USAGE
    if not isinstance(raw, list):
        print("error: values must be a JSON array", file=sys.stderr)
        return EXIT_USAGE
    try:
        values = [rational_from_str(str(v)) for v in raw]
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: bad rational in values: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = convert_sequence(src, dst, values)
    print(_json_dumps([rational_to_str(v) for v in out]))
    return EXIT_OK


# ---------------------------------------------------------------------------
# graph (small helper for inspecting partition graphs)
# ---------------------------------------------------------------------------


def _parse_partition(text: str) -> SetPartition:
    """Accept both the text form "1,3|2" and the JSON form [[1,3],[2]]."""
    text = text.strip()
    if text.startswith("["):
        return SetPartition.from_json(json.loads(text))
    return SetPartition.from_text(text)


def _cmd_graph(args, cfg: Config) -> int:
    pi = _parse_partition(args.partition)
    g = anti_interval_digraph(pi)
    if cfg.output_format == "text":
        print(_digraph_key_str(digraph_key(g)))
    else:
        from .graphs import graph_to_json

        print(_json_dumps(graph_to_json(g)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cumulantcalc",
        description="Exact cumulant combinatorics: enumeration, identity "
                    "verification, coefficient tables and conversions.",
    )
    parser.add_argument("--format", choices=("text", "json", "csv"), default=None,
                        help="output format (default depends on the subcommand)")
    parser.add_argument("--limit", type=int, default=None,
                        help="override the enumeration size limit")
    parser.add_argument("--jobs", type=int, default=None,
                        help="parallel workers for verification sweeps")
    parser.add_argument("--cache-dir", default=None,
                        help="directory for cached coefficient tables")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream partitions of a class")
    p.add_argument("n", type=int)
    p.add_argument("partition_class",
                   help="all|noncrossing|interval|irreducible|connected|"
                        "irreducible-noncrossing|connected-noncrossing|monotone")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="verify one identity (or --all) up to n")
    p.add_argument("identity", nargs="?", default=None)
    p.add_argument("n_max", type=int)
    p.add_argument("--all", action="store_true",
                   help="run the whole catalog, clamping each identity to its limit")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("experimental-thm2", help="experimental multivariate checker")
    p.add_argument("n_max", type=int)
    p.set_defaults(func=_cmd_experimental)

    p = sub.add_parser("table", help="emit beta/alpha/tutte/mobius tables")
    p.add_argument("what")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("convert", help="convert a rational sequence between bases")
    p.add_argument("src")
    p.add_argument("dst")
    p.add_argument("values", help='JSON array of rationals, e.g. \'["1","1/2"]\'')
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("graph", help="print the anti-interval digraph of a partition")
    p.add_argument("partition", help='text form, e.g. "1,3|2"')
    p.set_defaults(func=_cmd_graph)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not args.all and args.identity is None:
        print("error: verify needs an identity name or --all", file=sys.stderr)
        return EXIT_USAGE
    cfg = Config.from_args(args)
    try:
        return args.func(args, cfg)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
