"""Command-line interface.

Exit codes: 0 nonresonance certified, 1 inconclusive, 2 the oracle found a
resonant instance (informational; it contradicts no criterion), 3 input
error.  Reports are line-oriented UTF-8; pass --format=json for the machine
form of the same content.  Exit codes are a function of report content only.
"""

import argparse
import json
import sys

from . import constructions, criteria, docio, oracle
from .criteria import Bipartition
from .docio import DocumentError

EXIT_CERTIFIED = 0
EXIT_INCONCLUSIVE = 1
EXIT_RESONANT = 2
EXIT_INPUT = 3

CRITERION_CHOICES = (
    "cdo",
    "lambda",
    "point",
    "bipartition",
    "bipartition-general",
    "shelter",
    "all",
)


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _CliError(message)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="report format (default text)",
    )
    parser = _Parser(
        prog="nonres",
        description="Nonresonance certificates for rank-one local systems on arrangement complements.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("lattice", parents=[common], help="intersection lattice")
    p.add_argument("arrangement")

    p = sub.add_parser("resonant", parents=[common], help="resonant flats and points")
    p.add_argument("arrangement")

    p = sub.add_parser("check", parents=[common], help="run nonresonance criteria")
    p.add_argument("arrangement")
    p.add_argument("--criterion", choices=CRITERION_CHOICES, default="all")
    p.add_argument("--partition", help="bipartition as 'H1,H2|H3,H4' (labels or 1-based indices)")

    p = sub.add_parser("certify", parents=[common], help="emit a certificate document")
    p.add_argument("arrangement")

    p = sub.add_parser("verify-cert", parents=[common], help="verify a certificate document")
    p.add_argument("arrangement")
    p.add_argument("certificate")

    p = sub.add_parser("cohomology", parents=[common], help="run the topological oracle")
    p.add_argument("arrangement")
    p.add_argument("--decone", metavar="LABEL", help="member to send to infinity")

    p = sub.add_parser("lift", parents=[common], help="lift along a bipartition")
    p.add_argument("arrangement")
    p.add_argument("--partition", required=True)
    p.add_argument("--seed", type=int)

    p = sub.add_parser("section", parents=[common], help="generic section through an irreducible flat")
    p.add_argument("arrangement")
    p.add_argument("--flat", required=True, help="comma-separated member labels")
    p.add_argument("--seed", type=int)
    return parser


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None
    return docio.parse_arrangement(text)


def _resolve_member(arrangement, token):
    token = token.strip()
    if not token:
        raise DocumentError("empty hyperplane reference in flag")
    if token in arrangement.labels:
        return arrangement.index_of_label(token)
    try:
        idx = int(token)
    except ValueError:
        raise DocumentError(f"unknown hyperplane label {token!r}") from None
    if not 1 <= idx <= len(arrangement):
        raise DocumentError(f"hyperplane index {idx} out of range 1..{len(arrangement)}")
    return idx - 1


def _parse_parts(arrangement, text):
    left, sep, right = text.partition("|")
    if not sep:
        raise DocumentError("partition flag needs the form 'H1,H2|H3,H4'")
    def side(chunk):
        chunk = chunk.strip()
        if not chunk:
            return ()
        return tuple(_resolve_member(arrangement, tok) for tok in chunk.split(","))
    p1, p2 = side(left), side(right)
    if set(p1) & set(p2):
        raise DocumentError("partition parts overlap")
    if set(p1) | set(p2) != set(range(len(arrangement))):
        raise DocumentError("partition parts must cover every hyperplane")
    return p1, p2


def _emit(doc, lines, fmt):
    if fmt == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _flat_text(labels):
    return "{" + ",".join(labels) + "}"


def _report_lines(arrangement, report_payload):
    lines = []
    for row in report_payload["results"]:
        bits = [f"{row['criterion']}: {row['status']}"]
        if "level" in row:
            bits.append(f"level={row['level']}")
            bits.append(f"nonresonant={'true' if row['nonresonant'] else 'false'}")
        line = " ".join(bits)
        cert = row.get("certificate")
        if cert is not None:
            line += f" certificate={json.dumps(cert, sort_keys=True)}"
        witness = row.get("witness")
        if witness is not None:
            line += f" witness={json.dumps(witness, sort_keys=True)}"
        if row.get("detail"):
            line += f" ({row['detail']})"
        lines.append(line)
    lines.append(
        "summary: nonresonant={} best_level={}".format(
            "true" if report_payload["nonresonant"] else "false",
            report_payload["best_level"],
        )
    )
    return lines


def _single_report(arrangement, result):
    report = criteria.CriterionReport(
        ambient_dim=arrangement.ambient_dim,
        results=(result,),
        best_level=result.conclusion.level if result.status == "fired" else 0,
        nonresonant=result.status == "fired" and result.conclusion.nonresonant,
    )
    return report


def _cmd_lattice(args):
    arrangement, _ = _load(args.arrangement)
    doc = docio.lattice_doc(arrangement)
    lines = [
        f"ambient_dim: {doc['ambient_dim']}",
        f"flats: {doc['flat_count']}",
    ]
    for rank in sorted(doc["flats_by_rank"], key=int):
        flats = " ".join(_flat_text(f) for f in doc["flats_by_rank"][rank])
        lines.append(f"rank {rank}: {flats}")
    _emit(doc, lines, args.format)
    return EXIT_CERTIFIED


def _cmd_resonant(args):
    arrangement, monodromy = _load(args.arrangement)
    doc = docio.resonant_doc(arrangement, monodromy)
    lines = [
        "resonant flats ({}): {}".format(
            len(doc["resonant_flats"]),
            " ".join(_flat_text(f) for f in doc["resonant_flats"]) or "-",
        )
    ]
    for p in doc.get("resonant_points", []):
        lines.append(
            "resonant point [{}] lines {}".format(
                ":".join(p["point"]), _flat_text(p["lines"])
            )
        )
    _emit(doc, lines, args.format)
    return EXIT_CERTIFIED


def _cmd_check(args):
    arrangement, monodromy = _load(args.arrangement)
    partition = None
    if args.partition:
        p1, p2 = _parse_parts(arrangement, args.partition)
        if not p1 or not p2:
            raise DocumentError("criteria partitions need both parts nonempty")
        partition = Bipartition(p1, p2)
    name = args.criterion
    if name == "all":
        report = criteria.run_all(arrangement, monodromy, partition=partition)
    elif name == "cdo":
        report = _single_report(arrangement, criteria.check_cdo(arrangement, monodromy))
    elif name == "lambda":
        report = _single_report(
            arrangement, criteria.check_lambda_criterion(arrangement, monodromy)
        )
    elif name == "point":
        report = _single_report(
            arrangement, criteria.check_unique_resonant_point(arrangement, monodromy)
        )
    elif name == "bipartition":
        if partition is None:
            partition = criteria.search_bipartition_lines(arrangement, monodromy)
        if partition is None:
            result = criteria.CriterionResult(
                "bipartition",
                "inconclusive",
                detail="no valid bipartition exists (resonance graph)",
            )
        else:
            result = criteria.check_bipartition_lines(arrangement, monodromy, partition)
        report = _single_report(arrangement, result)
    elif name == "bipartition-general":
        if partition is not None:
            result = criteria.check_bipartition_general(arrangement, monodromy, partition)
        else:
            result = criteria._search_bipartition_general(arrangement, monodromy)
        report = _single_report(arrangement, result)
    else:  # shelter
        report = _single_report(
            arrangement, criteria._search_shelter(arrangement, monodromy)
        )
    payload = docio.report_doc(arrangement, report)
    _emit(payload, _report_lines(arrangement, payload), args.format)
    return EXIT_CERTIFIED if report.nonresonant else EXIT_INCONCLUSIVE


def _cmd_certify(args):
    from .certificates import DeltaCertificate, decide_constant_combination, incidence_matrix
    from .localsys import resonant_flats

    arrangement, monodromy = _load(args.arrangement)
    rf = resonant_flats(arrangement, monodromy)
    outcome = decide_constant_combination(incidence_matrix(arrangement, rf))
    doc = docio.make_certificate_doc(arrangement, monodromy, outcome)
    print(json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_CERTIFIED if isinstance(outcome, DeltaCertificate) else EXIT_INCONCLUSIVE


def _cmd_verify_cert(args):
    arrangement, monodromy = _load(args.arrangement)
    try:
        with open(args.certificate, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {args.certificate}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError(f"certificate is not valid JSON: {exc}") from None
    ok, kind, reason = docio.verify_certificate_doc(arrangement, monodromy, doc)
    payload = {"accepted": ok, "type": kind, "reason": reason}
    lines = [
        "accepted {} certificate".format(kind) if ok else f"rejected: {reason}"
    ]
    _emit(payload, lines, args.format)
    if not ok:
        return EXIT_INPUT
    return EXIT_CERTIFIED if kind == "delta" else EXIT_INCONCLUSIVE


def _cmd_cohomology(args):
    arrangement, monodromy = _load(args.arrangement)
    index = 0
    if args.decone is not None:
        index = _resolve_member(arrangement, args.decone)
    report = oracle.twisted_cohomology(arrangement, monodromy, decone_at=index)
    doc = docio.oracle_doc(report)
    h = report.dims
    lines = [
        f"h = ({h.h0}, {h.h1}, {h.h2})",
        f"chi = {report.chi}",
        f"decone_at = {report.decone_at}",
        f"presentation: {report.generators} generators, {report.relators} relators",
    ]
    _emit(doc, lines, args.format)
    nonresonant = h.h0 == 0 and h.h1 == 0
    return EXIT_CERTIFIED if nonresonant else EXIT_RESONANT


def _cmd_lift(args):
    arrangement, monodromy = _load(args.arrangement)
    parts = _parse_parts(arrangement, args.partition)
    lift = constructions.lift_bipartition(arrangement, parts, seed=args.seed)
    print(json.dumps(docio.lift_doc(lift, monodromy), indent=2, sort_keys=True))
    return EXIT_CERTIFIED


def _cmd_section(args):
    arrangement, monodromy = _load(args.arrangement)
    members = tuple(
        _resolve_member(arrangement, tok) for tok in args.flat.split(",") if tok.strip()
    )
    flat = arrangement.closure(members)
    if set(flat.members) != set(members):
        raise DocumentError(
            "--flat must name a flat (closure adds {})".format(
                ",".join(
                    arrangement.label_of(i)
                    for i in flat.members
                    if i not in set(members)
                )
            )
        )
    section = constructions.generic_section(arrangement, flat, seed=args.seed)
    print(json.dumps(docio.section_doc(arrangement, monodromy, section), indent=2, sort_keys=True))
    return EXIT_CERTIFIED


_COMMANDS = {
    "lattice": _cmd_lattice,
    "resonant": _cmd_resonant,
    "check": _cmd_check,
    "certify": _cmd_certify,
    "verify-cert": _cmd_verify_cert,
    "cohomology": _cmd_cohomology,
    "lift": _cmd_lift,
    "section": _cmd_section,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return _COMMANDS[args.verb](args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
