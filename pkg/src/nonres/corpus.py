"""The bundled example corpus, shipped as documents under nonres/data.

Five small real line arrangements that between them exercise every
criterion's fire and refute branches:

* E1 "generic3": a triangle, no multiple points at all.
* E2 "pencil3": three concurrent lines; genuinely resonant for the bundled
  exponents (the oracle reports h1 = 1).
* E3 "twin-triples": five lines with two resonant triple points sharing a
  line; defeats the isolated-hyperplane test but not the incidence LP.
* E4 "disjoint-triples": six lines with two disjoint resonant triple points;
  defeats the incidence LP but splits along a bipartition.
* E5 "nonres-triple": four lines whose single triple point is not resonant.
"""

import json
from importlib import resources

from .docio import parse_arrangement

__all__ = ["NAMES", "load_doc", "load", "doc_path"]

NAMES = ("E1", "E2", "E3", "E4", "E5")


def doc_path(name):
    if name not in NAMES:
        raise KeyError(f"unknown corpus entry {name!r}; choose from {NAMES}")
    return resources.files("nonres").joinpath("data", f"{name}.json")


def load_doc(name):
    return json.loads(doc_path(name).read_text(encoding="utf-8"))


def load(name):
    """Corpus entry as a validated (Arrangement, MonodromyMap) pair."""
    return parse_arrangement(load_doc(name))
