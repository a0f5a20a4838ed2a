"""End-to-end smoke tests for the Python package."""

import os
import pathlib

import pytest

import homnorden

DATA = pathlib.Path(os.environ["HOMNORDEN_DATA_DIR"])

FLAG_NAMES = [
    "valid_hom_lie",
    "proper",
    "involutive",
    "regular",
    "metric_ok",
    "almost_complex",
    "integrable",
    "norden",
    "kahler_norden",
    "holomorphic",
    "abelian_J",
    "flat",
    "hom_left_symmetric",
]

NO_METRIC_DOC = """\
{
  "name": "no_metric",
  "dimension": 2,
  "brackets": [],
  "phi": [[0, 1], [1, 0]]
}
"""


def doc(name):
    return (DATA / f"{name}.json").read_text()


def test_evaluate_exact():
    assert homnorden.evaluate("1/3 + 1/6") == "1/2"
    assert homnorden.evaluate("2*A - 1", {"A": "3/2"}) == "2"


def test_validate_happy():
    report = homnorden.validate(doc("kahler4"))
    assert report["schema"] == "homnorden.validation/1"
    assert report["document"] == "kahler4"
    assert report["all_pass"] is True
    by_name = {check["name"]: check for check in report["checks"]}
    assert by_name["twist_invertible"]["note"] == "det = 1"
    assert by_name["metric.metric_symmetric"]["outcome"] == "pass"


def test_classify_flat_entry():
    report = homnorden.classify(doc("kahler6_flat"))
    assert report["schema"] == "homnorden.classification/1"
    statuses = {flag["name"]: flag["status"] for flag in report["flags"]}
    assert sorted(statuses) == sorted(FLAG_NAMES)
    assert all(status == "pass" for status in statuses.values())
    assert report["binding_errors"] == []
    assert report["consistency_errors"] == []


def test_classify_explicit_binding():
    report = homnorden.classify(doc("kahler4"), {"A": "2", "B": "3"})
    assert report["bindings"] == [{"A": "2", "B": "3"}]


def test_connection_table():
    report = homnorden.connection(doc("kahler4"), {"A": "1", "B": "1"})
    assert report["schema"] == "homnorden.connection/1"
    entries = {(e["i"], e["j"]): e["coefficients"] for e in report["entries"]}
    assert entries[(2, 1)] == {"3": "1"}
    assert entries[(2, 2)] == {"4": "-1"}


def test_connection_requires_metric():
    with pytest.raises(RuntimeError, match="no canonical connection"):
        homnorden.connection(NO_METRIC_DOC)


def test_curvature_flat():
    report = homnorden.curvature(doc("kahler6_flat"))
    assert report["schema"] == "homnorden.curvature/1"
    assert report["components"] == []
    assert report["all_pass"] is True


def test_discover_structures():
    report = homnorden.discover_structures(doc("kahler4"))
    assert report["schema"] == "homnorden.discovery/1"
    assert report["kind"] == "complex_structure"
    assert report["candidates_examined"] == 384
    assert [["0", "0", "0", "1"],
            ["0", "0", "1", "0"],
            ["0", "-1", "0", "0"],
            ["-1", "0", "0", "0"]] in report["results"]
    assert len(report["results"]) == 2


def test_discover_metrics():
    report = homnorden.discover_metrics(doc("kahler4"), [1, -1, 2, -2])
    assert report["kind"] == "metric"
    assert report["candidates_examined"] == 256
    assert len(report["results"]) == 16


def test_corpus_rederives():
    report = homnorden.corpus()
    assert report["schema"] == "homnorden.corpus/1"
    assert report["all_pass"] is True
    assert [entry["name"] for entry in report["entries"]] == [
        "norden4_nonholomorphic",
        "norden4_nonintegrable",
        "kahler4",
        "kahler6_flat",
    ]


def test_canonical_json_fixed_point():
    once = homnorden.canonical_json(doc("norden4_nonholomorphic"))
    assert homnorden.canonical_json(once) == once


def test_malformed_document_raises():
    with pytest.raises(RuntimeError):
        homnorden.classify("{ not json")
