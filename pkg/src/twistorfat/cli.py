"""Command-line front end.

Exit codes: 0 certified (or listing ok), 1 infeasible / not applicable,
2 input error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, TextIO

from . import catalog
from .document import CERTIFICATE_SCHEMA, SCHEMA_VERSION, CertificateDocument, dumps
from .errors import InputError
from .maxrank import SPACE_FAMILIES, SpaceSpec, build_pair
from .twistor import (
    CERTIFIED,
    FatnessCertificate,
    InfeasibilityWitness,
    certify_fatness,
    solve_twistor_element,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2

log = logging.getLogger("twistorfat")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="twistorfat", description="Certify symplectic fatness of twistor bundles over K/H.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    lst = sub.add_parser("list", help="show the catalog")
    lst.add_argument("--json", action="store_true")

    def space_args(sp):
        sp.add_argument("--space", required=True, help=", ".join(SPACE_FAMILIES))
        sp.add_argument("--n", type=int, default=0)
        sp.add_argument("--m", type=int, default=0)
        sp.add_argument("--general", action="store_true", help="skip the closed-form T, search sign patterns")

    cert = sub.add_parser("certify", help="certify one space")
    space_args(cert)
    cert.add_argument("--oracle", action="store_true", help="also run the matrix oracle (classical families)")
    cert.add_argument("--json", action="store_true")

    solve = sub.add_parser("solve", help="print t0 or an infeasibility witness")
    space_args(solve)

    rep = sub.add_parser("report", help="batch certificates")
    rep.add_argument("--all", action="store_true", help="every catalog entry")
    rep.add_argument("--space", help="restrict to one family")
    rep.add_argument("--max-rank", type=int, required=True)
    rep.add_argument("--oracle", action="store_true")
    rep.add_argument("--json", action="store_true")
    rep.add_argument("--jobs", type=int, default=1)

    sub.add_parser("schema", help="print the certificate JSON schema")
    return p


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _spec(args) -> SpaceSpec:
    catalog.get_entry(args.space)
    return SpaceSpec(args.space, args.n, args.m)


def _print_certificate(cert: FatnessCertificate, out: TextIO) -> None:
    spec = cert.spec
    a, h, c = cert.root_counts
    print(f"space      {spec}  {spec.label}", file=out)
    print(f"roots      |Δ|={a}  |Δ(h)|={h}  |Δ∖Δ(h)|={c}", file=out)
    print(f"fiber      {cert.fiber}", file=out)
    print(f"status     {cert.status}", file=out)
    if cert.t0 is not None:
        print(f"t0         {_fmt_vec(cert.t0)}", file=out)
    if cert.witness is not None:
        print("witness    " + "  ".join(str(r) for r in cert.witness.roots), file=out)
        for line in cert.witness.describe():
            print(f"relation   {line}  (no ±1 assignment)", file=out)
    rep = cert.oracle_report
    if rep is not None:
        print(
            f"oracle     dim k={rep.dim_k} h={rep.dim_h} m={rep.dim_m}  "
            f"(ad T|m)^2=-id: {rep.adT_square_ok}  det(omega)≠0: {rep.fatness_det_nonzero}",
            file=out,
        )
    if cert.note:
        print(f"note       {cert.note}", file=out)
    for w in cert.warnings:
        print(f"warning    {w}", file=out)


def _cmd_list(args, out: TextIO) -> int:
    entries = catalog.list_entries()
    if args.json:
        rows = [
            {
                "space": e.family, "title": e.title, "t0": e.formula,
                "constraints": list(e.constraints), "status": e.status_note,
            }
            for e in entries
        ]
        print(dumps({"schema_version": SCHEMA_VERSION, "entries": rows}), file=out)
        return EXIT_OK
    print("space\ttitle\tt0\tconstraints\tstatus", file=out)
    for e in entries:
        print(f"{e.family}\t{e.title}\t{e.formula}\t{', '.join(e.constraints) or '-'}\t{e.status_note}", file=out)
    return EXIT_OK


def _cmd_certify(args, out: TextIO) -> int:
    cert = certify_fatness(_spec(args), run_oracle=args.oracle, use_closed_form=not args.general)
    if args.json:
        print(CertificateDocument.from_certificate(cert).to_json(), file=out)
    else:
        _print_certificate(cert, out)
    return EXIT_OK if cert.status == CERTIFIED else EXIT_NEGATIVE


def _cmd_solve(args, out: TextIO) -> int:
    pair = build_pair(_spec(args))
    if not pair.applicable:
        print(f"{pair.spec}: not applicable (Kaehler, Weinstein Thm 3.3)", file=out)
        return EXIT_NEGATIVE
    result = solve_twistor_element(pair, use_closed_form=not args.general)
    if isinstance(result, InfeasibilityWitness):
        print(f"{pair.spec}: infeasible", file=out)
        print("witness " + "  ".join(str(r) for r in result.roots), file=out)
        for line in result.describe():
            print(f"  {line}", file=out)
        return EXIT_NEGATIVE
    print(_fmt_vec(result.t0), file=out)
    return EXIT_OK


def _cmd_report(args, out: TextIO) -> int:
    if args.max_rank < 1:
        raise InputError("--max-rank must be ≥ 1")
    if args.all == bool(args.space):
        raise InputError("report needs exactly one of --all or --space")
    entries = catalog.list_entries() if args.all else [catalog.get_entry(args.space)]
    specs: List[SpaceSpec] = [s for e in entries for s in catalog.in_range_specs(e, args.max_rank)]
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        certs = list(pool.map(lambda s: certify_fatness(s, run_oracle=args.oracle), specs))
    if args.json:
        docs = [CertificateDocument.from_certificate(c).to_dict() for c in certs]
        print(dumps({"schema_version": SCHEMA_VERSION, "max_rank": args.max_rank, "certificates": docs}), file=out)
        return EXIT_OK
    print("space\tn\tm\tlabel\tstatus\tdim_m\tfiber\tt0", file=out)
    for c in certs:
        s = c.spec
        t0 = _fmt_vec(c.t0) if c.t0 is not None else "-"
        print(f"{s.family}\t{s.n}\t{s.m}\t{s.label}\t{c.status}\t{c.dim_m}\t{c.fiber}\t{t0}", file=out)
    return EXIT_OK


_COMMANDS = {
    "list": _cmd_list,
    "certify": _cmd_certify,
    "solve": _cmd_solve,
    "report": _cmd_report,
    "schema": lambda args, out: (print(dumps(CERTIFICATE_SCHEMA), file=out), EXIT_OK)[1],
}


def run(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
        return _COMMANDS[args.command](args, out)
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
