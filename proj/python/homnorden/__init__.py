"""Exact-arithmetic analysis of twisted bracket structures.

Thin wrappers over the compiled module: each operation takes document JSON
text (and an optional ``{name: value-string}`` binding) and returns the parsed
report dict.  The raw JSON-string interface is available as
``homnorden.raw``.
"""

import json as _json

from . import _homnorden as raw

__version__ = raw.__version__

__all__ = [
    "raw",
    "validate",
    "classify",
    "connection",
    "curvature",
    "discover_structures",
    "discover_metrics",
    "corpus",
    "evaluate",
    "canonical_json",
]


def validate(document, binding=None):
    """Axiom and compatibility checks; dict with schema homnorden.validation/1."""
    return _json.loads(raw.validate(document, binding or {}))


def classify(document, binding=None):
    """Flag verdicts (homnorden.classification/1).

    With no binding the document's default binding grid is classified;
    otherwise exactly the given binding.
    """
    return _json.loads(raw.classify(document, binding or {}))


def connection(document, binding=None):
    """Canonical connection table (homnorden.connection/1)."""
    return _json.loads(raw.connection(document, binding or {}))


def curvature(document, binding=None):
    """Curvature components plus identity checks (homnorden.curvature/1)."""
    return _json.loads(raw.curvature(document, binding or {}))


def discover_structures(document, binding=None, predicates=()):
    """Signed-permutation complex-structure search (homnorden.discovery/1)."""
    return _json.loads(
        raw.discover_structures(document, binding or {}, list(predicates))
    )


def discover_metrics(document, entries, binding=None):
    """Diagonal-metric search (homnorden.discovery/1)."""
    return _json.loads(
        raw.discover_metrics(document, binding or {}, [str(e) for e in entries])
    )


def corpus():
    """Re-derives the embedded reference corpus (homnorden.corpus/1)."""
    return _json.loads(raw.corpus())


def evaluate(expression, binding=None):
    """Evaluates a parameter expression exactly; returns the rational as str."""
    return raw.evaluate(expression, binding or {})


def canonical_json(document):
    """Canonical serialization of a parsed document (str)."""
    return raw.canonical_json(document)
