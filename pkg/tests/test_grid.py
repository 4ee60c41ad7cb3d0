import itertools
from pathlib import Path

import pytest
from hypothesis import given, settings

from knotforge.catalog import default_catalog_dir
from knotforge.formats import SchemaError, parse_presentation, serialize_presentation
from knotforge.grid import (
    Arc,
    ArcPresentation,
    InvalidPresentationError,
    KnotMeta,
    dual,
    find_lift_pair,
    find_problems,
    symmetry_orbit,
    validate,
)
from knotforge.laurent import equal_up_to_units
from knotforge.verify import alexander_from_arcs

from .conftest import TREFOIL, presentations


def trace_cycle_length(arcs):
    """Oracle: follow arcs from binding 1 and count arcs until back at the start."""
    arcs = list(arcs)
    b, used, steps = 1, set(), 0
    while True:
        nxt = next(i for i, (p, lo, hi) in enumerate(arcs) if i not in used and b in (lo, hi))
        used.add(nxt)
        _, lo, hi = arcs[nxt]
        b = hi if b == lo else lo
        steps += 1
        if b == 1:
            return steps


class TestValidate:
    def test_pentagram_is_single_cycle(self):
        assert trace_cycle_length(TREFOIL) == 5
        ap = validate(TREFOIL)
        assert ap.n == 5

    def test_two_arc_unknot(self):
        assert validate([(1, 1, 2), (2, 1, 2)]).n == 2

    def test_duplicate_page_and_bad_bindings(self):
        with pytest.raises(InvalidPresentationError) as info:
            validate([(1, 1, 2), (1, 3, 4)])
        text = " | ".join(info.value.problems)
        assert "duplicate page 1" in text
        assert "binding index" in text

    def test_two_cycles(self):
        problems = find_problems([Arc(1, 1, 2), Arc(2, 1, 2), Arc(3, 3, 4), Arc(4, 3, 4)])
        assert problems == ["arcs form 2 cycles, expected 1"]

    def test_lo_must_be_below_hi(self):
        with pytest.raises(InvalidPresentationError, match="lo < hi"):
            validate([(1, 2, 1), (2, 1, 2)])

    @given(presentations())
    def test_each_binding_twice(self, ap):
        counts = {}
        for a in ap.arcs:
            for b in a.bindings:
                counts[b] = counts.get(b, 0) + 1
        assert counts == {b: 2 for b in range(1, ap.n + 1)}
        assert trace_cycle_length(ap.arcs) == ap.n


class TestDual:
    def test_unknot_self_dual(self, unknot2):
        assert dual(unknot2).key() == unknot2.key()

    def test_trefoil_dual_same_alexander(self, trefoil):
        d = dual(trefoil)
        assert d.n == 5
        assert equal_up_to_units(alexander_from_arcs(d), alexander_from_arcs(trefoil))

    @given(presentations())
    def test_involution(self, ap):
        assert dual(dual(ap)).key() == ap.key()


def brute_orbit_keys(ap):
    """Oracle: apply the symmetries as explicit maps on (page, lo, hi) triples."""
    n = ap.n
    keys = set()
    for r, fp, fb, d in itertools.product(range(n), (0, 1), (0, 1), (0, 1)):
        arcs = [((p - 1 + r) % n + 1, lo, hi) for p, lo, hi in ap.arcs]
        if fp:
            arcs = [(n + 1 - p, lo, hi) for p, lo, hi in arcs]
        if fb:
            arcs = [(p, n + 1 - hi, n + 1 - lo) for p, lo, hi in arcs]
        if d:
            new = []
            for b in range(1, n + 1):
                pages = sorted(p for p, lo, hi in arcs if b in (lo, hi))
                new.append((b, pages[0], pages[1]))
            arcs = new
        keys.add(tuple(sorted(arcs)))
    return keys


class TestOrbit:
    def test_unknot_orbit_size_one(self, unknot2):
        assert len(symmetry_orbit(unknot2)) == 1

    def test_trefoil_orbit_matches_enumeration(self, trefoil):
        orbit = symmetry_orbit(trefoil)
        assert len(orbit) <= 2 * 2 * 5 * 2
        assert {m.key() for m in orbit} == brute_orbit_keys(trefoil)

    @settings(max_examples=60)
    @given(presentations())
    def test_members_valid_and_contain_self(self, ap):
        orbit = symmetry_orbit(ap)
        assert ap.key() in {m.key() for m in orbit}
        assert all(m.n == ap.n and not find_problems(m.arcs) for m in orbit)
        assert [m.key() for m in orbit] == sorted(m.key() for m in orbit)

    @settings(max_examples=15, deadline=None)
    @given(presentations(max_n=6))
    def test_alexander_constant_on_orbit(self, ap):
        ref = alexander_from_arcs(ap)
        assert all(equal_up_to_units(alexander_from_arcs(m), ref) for m in symmetry_orbit(ap))


class TestLiftPair:
    def test_figure8_found(self, figure8):
        found = find_lift_pair(figure8)
        assert found is not None
        member, low, partner = found
        n = member.n
        assert low.page == 1 and 1 < low.lo < low.hi < n
        assert partner.bindings == (low.hi, n)
        assert partner in member.arcs and low in member.arcs

    def test_trefoil_not_found(self, trefoil):
        assert find_lift_pair(trefoil) is None

    def test_small_presentations(self, unknot2):
        assert find_lift_pair(unknot2) is None
        assert find_lift_pair(validate([(1, 1, 3), (2, 1, 2), (3, 2, 3)])) is None

    @given(presentations(min_n=4))
    def test_returned_pair_literal(self, ap):
        found = find_lift_pair(ap)
        if found is not None:
            member, low, partner = found
            assert 1 < low.lo < low.hi < member.n
            assert partner.bindings == (low.hi, member.n)
            assert member.key() in {m.key() for m in symmetry_orbit(ap)}


class TestKnotMeta:
    def test_torus_crossing_number(self):
        assert KnotMeta.torus("8_19", 3).crossing_number == 8
        with pytest.raises(ValueError):
            KnotMeta("x", 9, "torus", 3)

    def test_torus_counts_as_nonalternating_prime(self):
        assert KnotMeta.torus("8_19", 3).is_nonalternating_prime
        assert not KnotMeta.torus("3_1", 2).is_nonalternating_prime


class TestFileFormat:
    def test_round_trip_figure8(self):
        text = (default_catalog_dir() / "4_1.json").read_text()
        ap, meta = parse_presentation(text)
        assert serialize_presentation(ap, meta).split() == text.split()
        assert meta.name == "4_1" and meta.crossing_number == 4 and ap.n == 6

    def _doc(self, **over):
        doc = {
            "name": "u",
            "crossing_number": 1,
            "class": "general",
            "arcs": [{"page": 1, "binding": [1, 2]}, {"page": 2, "binding": [1, 2]}],
        }
        doc.update(over)
        return doc

    def test_binding_zero(self):
        import json

        doc = self._doc(arcs=[{"page": 1, "binding": [0, 2]}, {"page": 2, "binding": [1, 2]}])
        with pytest.raises(SchemaError) as info:
            parse_presentation(json.dumps(doc))
        assert any("binding" in p for p in info.value.problems)

    def test_missing_crossing_number(self):
        import json

        doc = self._doc()
        del doc["crossing_number"]
        with pytest.raises(SchemaError, match="crossing_number"):
            parse_presentation(json.dumps(doc))

    def test_unknown_key(self):
        import json

        with pytest.raises(SchemaError, match="extra"):
            parse_presentation(json.dumps(self._doc(extra=1)))

    def test_malformed(self):
        with pytest.raises(SchemaError, match="malformed"):
            parse_presentation("{")

    def test_torus_class(self):
        import json

        text = (default_catalog_dir() / "8_19.json").read_text()
        ap, meta = parse_presentation(text)
        assert meta.knot_class == "torus" and meta.torus_n == 3
        bad = json.loads(text)
        bad["crossing_number"] = 9
        with pytest.raises(SchemaError, match="class"):
            parse_presentation(json.dumps(bad))

    def test_invalid_presentation_reported(self):
        import json

        doc = self._doc(arcs=[{"page": 1, "binding": [1, 2]}, {"page": 1, "binding": [1, 2]}])
        with pytest.raises(SchemaError, match="duplicate page"):
            parse_presentation(json.dumps(doc))
