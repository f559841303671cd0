"""Command line interface.

Exit codes: 0 success, 1 verification/enumeration failure, 2 usage error.
All output is deterministic, including under --jobs parallelism.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import atlas as atlas_mod
from . import verify as verify_mod


def _write(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _cmd_enumerate(args) -> int:
    which = args.what
    zon = atlas_mod.enumerate_zonotopal() if which in ("zonotopal", "all") else []
    sums = (
        atlas_mod.enumerate_sums(jobs=args.jobs)
        if which in ("sums", "all")
        else []
    )
    if which == "all":
        atl = atlas_mod.build_atlas(zonotopal=zon, sums=sums)
    else:
        atl = atlas_mod.Atlas(
            records=sorted(zon + sums, key=atlas_mod._record_order),
            version=atlas_mod.VERSION,
            provenance={
                "tool": f"paratlas {atlas_mod.VERSION}",
                "scan": {"subsets": 4096, "orbit_certificates": True}
                if sums
                else None,
            },
        )
    _write(atlas_mod.atlas_to_json(atl), args.out)
    return 0


def _cmd_classify(args) -> int:
    atl = atlas_mod.build_atlas(jobs=args.jobs)
    summary = atlas_mod.classify_all(atl, deep=args.deep)
    sys.stdout.write(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    return 0 if summary["ok"] else 1


def _cmd_tables(args) -> int:
    _write(atlas_mod.emit_table(args.which, args.format), args.out)
    return 0


def _cmd_verify(args) -> int:
    reports = verify_mod.run(args.prop)
    ok = True
    for rep in reports:
        for line in rep.lines():
            sys.stdout.write(line + "\n")
        ok = ok and rep.ok
    return 0 if ok else 1


def _cmd_show(args) -> int:
    if args.atlas:
        with open(args.atlas) as fh:
            atl = atlas_mod.atlas_from_json(fh.read())
    else:
        atl = atlas_mod.build_atlas(run_scan=False)
    try:
        rec = atl.by_id(args.id)
    except KeyError:
        sys.stderr.write(f"no record with id {args.id!r}\n")
        return 2
    single = atlas_mod.Atlas([rec], atl.version, atl.provenance)
    payload = json.loads(atlas_mod.atlas_to_json(single))
    sys.stdout.write(
        json.dumps(payload["records"][0], indent=2, sort_keys=True) + "\n"
    )
    return 0


def _cmd_export(args) -> int:
    with open(args.infile) as fh:
        atl = atlas_mod.atlas_from_json(fh.read())
    _write(atlas_mod.atlas_to_json(atl), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paratlas",
        description="Exact enumeration of the 52 four-dimensional parallelotope types",
    )
    parser.add_argument(
        "--jobs", type=int, default=1, help="parallel workers for the subset scan"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="build catalog records")
    p.add_argument("what", choices=["zonotopal", "sums", "all"])
    p.add_argument("--out", help="write atlas JSON here instead of stdout")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("classify", help="full enumeration plus consistency summary")
    p.add_argument("--deep", action="store_true", help="decompose every record")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("tables", help="emit a reference table")
    p.add_argument("which", type=int, choices=[1, 2])
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("verify", help="machine-check a proposition")
    p.add_argument("prop", choices=list(verify_mod.PROP_NAMES) + ["all"])
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("show", help="print one record")
    p.add_argument("--id", required=True)
    p.add_argument("--atlas", help="read records from this atlas JSON")
    p.set_defaults(func=_cmd_show)

    p = sub.add_parser("export", help="round-trip an atlas JSON file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except AssertionError as exc:
        sys.stderr.write(f"verification failure: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
