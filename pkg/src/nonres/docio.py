"""Document formats: arrangement files, certificates, and report payloads.

Everything on the wire is a rational string — no floats anywhere.  The
canonical serialization (normalized forms, exponents reduced into [0,1),
sorted keys, compact separators) is what gets hashed, so a certificate is
pinned to the arrangement content rather than to a file path.
"""

import hashlib
import json

from .arrangement import Arrangement
from .certificates import (
    DeltaCertificate,
    LambdaWitness,
    incidence_matrix,
    verify_delta,
    verify_lambda,
)
from .criteria import (
    Bipartition,
    CdoCertificate,
    ShelterCertificate,
    UniquePointCertificate,
)
from .linalg import format_rational, parse_rational
from .localsys import MonodromyMap, resonant_flats

__all__ = [
    "DocumentError",
    "parse_arrangement",
    "serialize_arrangement",
    "canonical_text",
    "content_hash",
    "make_certificate_doc",
    "verify_certificate_doc",
    "labels_of",
    "flats_to_labels",
    "lattice_doc",
    "resonant_doc",
    "report_doc",
    "oracle_doc",
    "lift_doc",
    "section_doc",
]


class DocumentError(ValueError):
    """A malformed input document; maps to exit code 3 in the CLI."""


def _require(condition, message):
    if not condition:
        raise DocumentError(message)


def parse_arrangement(source):
    """Parse an arrangement document into (Arrangement, MonodromyMap).

    Accepts a JSON string or an already-decoded dict.  Violations carry the
    offending position: duplicate hyperplanes, zero forms, malformed or
    zero-denominator rationals, and non-integral exponent sums are rejected.
    """
    if isinstance(source, str):
        try:
            doc = json.loads(source)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not valid JSON: {exc}") from None
    else:
        doc = source
    _require(isinstance(doc, dict), "document must be a JSON object")
    _require("ambient_dim" in doc, "missing field 'ambient_dim'")
    n = doc["ambient_dim"]
    _require(isinstance(n, int) and n >= 1, "'ambient_dim' must be an integer >= 1")
    planes = doc.get("hyperplanes")
    _require(isinstance(planes, list) and planes, "'hyperplanes' must be a nonempty list")
    parsed_planes = []
    for i, row in enumerate(planes):
        _require(
            isinstance(row, list) and len(row) == n + 1,
            f"hyperplanes[{i}]: expected {n + 1} rational strings",
        )
        coeffs = []
        for j, cell in enumerate(row):
            _require(isinstance(cell, str), f"hyperplanes[{i}][{j}]: expected a string")
            try:
                coeffs.append(parse_rational(cell))
            except ValueError as exc:
                raise DocumentError(f"hyperplanes[{i}][{j}]: {exc}") from None
        parsed_planes.append(coeffs)
    exps_field = doc.get("monodromy_exponents")
    _require(
        isinstance(exps_field, list) and len(exps_field) == len(parsed_planes),
        "'monodromy_exponents' must list one rational string per hyperplane",
    )
    exponents = []
    for i, cell in enumerate(exps_field):
        _require(
            isinstance(cell, str), f"monodromy_exponents[{i}]: expected a string"
        )
        try:
            exponents.append(parse_rational(cell))
        except ValueError as exc:
            raise DocumentError(f"monodromy_exponents[{i}]: {exc}") from None
    labels = doc.get("labels")
    if labels is not None:
        _require(
            isinstance(labels, list)
            and all(isinstance(x, str) for x in labels),
            "'labels' must be a list of strings",
        )
    try:
        arrangement = Arrangement(n, parsed_planes, labels)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None
    try:
        monodromy = MonodromyMap(exponents)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None
    return arrangement, monodromy


def serialize_arrangement(arrangement, monodromy, extra=None):
    doc = {
        "ambient_dim": arrangement.ambient_dim,
        "hyperplanes": [
            [format_rational(c) for c in h.coeffs] for h in arrangement.hyperplanes
        ],
        "monodromy_exponents": [format_rational(q) for q in monodromy.exponents],
        "labels": list(arrangement.labels),
    }
    if extra:
        doc.update(extra)
    return doc


def canonical_text(doc):
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def content_hash(arrangement, monodromy):
    text = canonical_text(serialize_arrangement(arrangement, monodromy))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def labels_of(arrangement, members):
    return [arrangement.label_of(i) for i in members]


def flats_to_labels(arrangement, flats):
    return [labels_of(arrangement, f.members) for f in flats]


def make_certificate_doc(arrangement, monodromy, outcome):
    """Wrap a decide_constant_combination outcome as a portable document."""
    rf = resonant_flats(arrangement, monodromy)
    doc = {
        "resonant_flats": flats_to_labels(arrangement, rf),
        "arrangement_hash": content_hash(arrangement, monodromy),
    }
    if isinstance(outcome, DeltaCertificate):
        doc["type"] = "delta"
        doc["values"] = [format_rational(v) for v in outcome.values]
    elif isinstance(outcome, LambdaWitness):
        doc["type"] = "lambda"
        doc["values"] = [str(v) for v in outcome.values]
        doc["common_sum"] = str(outcome.common_sum)
    else:
        raise TypeError(f"not a certificate: {outcome!r}")
    return doc


def verify_certificate_doc(arrangement, monodromy, doc):
    """Re-derive everything from the arrangement and check the document.

    Returns (ok, kind, reason); kind is the certificate type when parseable.
    """
    if not isinstance(doc, dict):
        return False, None, "certificate must be a JSON object"
    kind = doc.get("type")
    if kind not in ("delta", "lambda"):
        return False, None, f"unknown certificate type {kind!r}"
    if doc.get("arrangement_hash") != content_hash(arrangement, monodromy):
        return False, kind, "arrangement hash mismatch"
    rf = resonant_flats(arrangement, monodromy)
    expected_flats = flats_to_labels(arrangement, rf)
    if doc.get("resonant_flats") != expected_flats:
        return False, kind, "resonant flat list does not match the arrangement"
    raw = doc.get("values")
    if not isinstance(raw, list) or not all(isinstance(v, str) for v in raw):
        return False, kind, "'values' must be a list of rational strings"
    try:
        values = [parse_rational(v) for v in raw]
    except ValueError as exc:
        return False, kind, str(exc)
    try:
        if kind == "delta":
            if len(values) != len(arrangement):
                return False, kind, "value count does not match the hyperplanes"
            ok, reason = verify_delta(arrangement, rf, DeltaCertificate(tuple(values)))
            return ok, kind, reason
        if any(v.denominator != 1 for v in values):
            return False, kind, "lambda weights must be integers"
        if len(values) != len(rf):
            return False, kind, "value count does not match the resonant flats"
        if "common_sum" not in doc:
            return False, kind, "missing common_sum"
        try:
            common = parse_rational(str(doc["common_sum"]))
        except ValueError as exc:
            return False, kind, str(exc)
        if common.denominator != 1:
            return False, kind, "common_sum must be an integer"
        witness = LambdaWitness(tuple(int(v) for v in values), int(common))
        matrix = incidence_matrix(arrangement, rf)
        ok, reason = verify_lambda(matrix, witness)
        return ok, kind, reason
    except ValueError as exc:
        return False, kind, str(exc)


def lattice_doc(arrangement):
    lattice = arrangement.lattice()
    by_rank = {}
    for flat in lattice:
        by_rank.setdefault(str(flat.rank), []).append(
            labels_of(arrangement, flat.members)
        )
    return {
        "ambient_dim": arrangement.ambient_dim,
        "flat_count": len(lattice),
        "flats_by_rank": by_rank,
    }


def resonant_doc(arrangement, monodromy):
    from .localsys import resonant_points

    rf = resonant_flats(arrangement, monodromy)
    doc = {"resonant_flats": flats_to_labels(arrangement, rf)}
    if arrangement.ambient_dim == 2:
        doc["resonant_points"] = [
            {
                "point": [format_rational(c) for c in p.point],
                "lines": labels_of(arrangement, p.flat.members),
            }
            for p in resonant_points(arrangement, monodromy)
        ]
    return doc


def _certificate_payload(arrangement, certificate):
    if isinstance(certificate, DeltaCertificate):
        return {
            "type": "delta",
            "values": [format_rational(v) for v in certificate.values],
        }
    if isinstance(certificate, LambdaWitness):
        return {
            "type": "lambda",
            "values": [str(v) for v in certificate.values],
            "common_sum": str(certificate.common_sum),
        }
    if isinstance(certificate, CdoCertificate):
        return {
            "type": "cdo",
            "hyperplane": arrangement.label_of(certificate.hyperplane),
            "delta": [format_rational(v) for v in certificate.delta.values],
        }
    if isinstance(certificate, UniquePointCertificate):
        return {
            "type": "unique-point",
            "flat": labels_of(arrangement, certificate.flat.members),
            "line": arrangement.label_of(certificate.line),
            "off_line": arrangement.label_of(certificate.off_line),
        }
    if isinstance(certificate, ShelterCertificate):
        return {
            "type": "shelter",
            "flat": labels_of(arrangement, certificate.flat.members),
        }
    if isinstance(certificate, Bipartition):
        return {
            "type": "bipartition",
            "part1": labels_of(arrangement, certificate.part1),
            "part2": labels_of(arrangement, certificate.part2),
        }
    if hasattr(certificate, "members"):
        return {"type": "flat", "flat": labels_of(arrangement, certificate.members)}
    return {"type": "opaque", "repr": repr(certificate)}


def report_doc(arrangement, report):
    rows = []
    for result in report.results:
        row = {"criterion": result.criterion, "status": result.status}
        if result.detail:
            row["detail"] = result.detail
        if result.conclusion is not None:
            row["level"] = result.conclusion.level
            row["nonresonant"] = result.conclusion.nonresonant
            row["certificate"] = _certificate_payload(
                arrangement, result.conclusion.certificate
            )
        if result.witness is not None:
            row["witness"] = _certificate_payload(arrangement, result.witness)
        rows.append(row)
    return {
        "ambient_dim": report.ambient_dim,
        "results": rows,
        "best_level": report.best_level,
        "nonresonant": report.nonresonant,
    }


def oracle_doc(report):
    return {
        "h": list(report.dims.as_tuple()),
        "chi": report.chi,
        "decone_at": report.decone_at,
        "presentation_stats": {
            "generators": report.generators,
            "relators": report.relators,
        },
    }


def lift_doc(lift, monodromy):
    base = lift.base
    doc = serialize_arrangement(lift.lifted, monodromy)
    doc["provenance"] = {
        "construction": "lift",
        "partition": [
            labels_of(base, lift.part1),
            labels_of(base, lift.part2),
        ],
        "direction": [format_rational(c) for c in lift.direction],
        "seed": lift.seed,
    }
    return doc


def section_doc(arrangement, monodromy, section):
    label = "S0"
    taken = set(arrangement.labels)
    bump = 0
    while label in taken:
        bump += 1
        label = f"S{bump}"
    augmented = Arrangement(
        arrangement.ambient_dim,
        [h.coeffs for h in arrangement.hyperplanes] + [section.hyperplane.coeffs],
        list(arrangement.labels) + [label],
    )
    from fractions import Fraction

    extended = MonodromyMap(tuple(monodromy.exponents) + (Fraction(0),))
    doc = serialize_arrangement(augmented, extended)
    doc["provenance"] = {
        "construction": "section",
        "flat": labels_of(arrangement, section.flat.members),
        "seed": section.seed,
        "attempts": section.attempts,
    }
    return doc
