import json
import shutil

import pytest

from knotforge.bounds import arc_index_upper, class_bound
from knotforge.catalog import CatalogError, default_catalog_dir, load_catalog
from knotforge.formats import parse_presentation, serialize_presentation
from knotforge.lattice import construct, stick_budget

MANDATORY = ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "7_1", "8_19", "8_20", "8_21"]


def test_contents(catalog):
    assert [e.name for e in catalog] == MANDATORY
    known = {e.name: e.known_minimal_length for e in catalog if e.known_minimal_length}
    assert known == {"3_1": 24, "4_1": 30, "5_1": 34}


def test_classes(catalog):
    by_name = {e.name: e.meta for e in catalog}
    assert by_name["8_19"].knot_class == "torus" and by_name["8_19"].torus_n == 3
    assert by_name["8_19"].is_nonalternating_prime
    assert by_name["8_20"].knot_class == by_name["8_21"].knot_class == "nonalternating_prime"


def test_arc_counts(catalog):
    for e in catalog:
        assert e.presentation.n <= arc_index_upper(e.meta)


def test_byte_stable_round_trip():
    for path in sorted(default_catalog_dir().glob("*_*.json")):
        text = path.read_text()
        assert serialize_presentation(*parse_presentation(text)) == text


def test_constructions_within_bounds(catalog):
    for e in catalog:
        k, _ = construct(e.presentation, e.meta)
        total = stick_budget(k).total_edges
        assert total <= class_bound(e.meta).exact_value
        if e.known_minimal_length is not None:
            assert e.known_minimal_length <= total


@pytest.fixture
def catalog_copy(tmp_path):
    dst = tmp_path / "cat"
    shutil.copytree(default_catalog_dir(), dst)
    return dst


def test_bad_presentation_names_file(catalog_copy):
    path = catalog_copy / "5_2.json"
    doc = json.loads(path.read_text())
    doc["arcs"][0]["page"] = doc["arcs"][1]["page"]
    path.write_text(json.dumps(doc))
    with pytest.raises(CatalogError, match="5_2.json"):
        load_catalog(catalog_copy)


def test_wrong_reference_polynomial(catalog_copy):
    manifest = json.loads((catalog_copy / "manifest.json").read_text())
    manifest["entries"][1]["alexander"] = {"0": 1, "1": -1, "2": 1}
    (catalog_copy / "manifest.json").write_text(json.dumps(manifest))
    with pytest.raises(CatalogError, match="4_1.json.*does not match"):
        load_catalog(catalog_copy)


def test_too_many_arcs(catalog_copy):
    manifest = json.loads((catalog_copy / "manifest.json").read_text())
    path = catalog_copy / "4_1.json"
    doc = json.loads(path.read_text())
    doc["crossing_number"] = 3
    path.write_text(json.dumps(doc))
    with pytest.raises(CatalogError, match="arc index bound"):
        load_catalog(catalog_copy)


def test_empty_dir(tmp_path):
    with pytest.raises(CatalogError, match="no entries"):
        load_catalog(tmp_path)
