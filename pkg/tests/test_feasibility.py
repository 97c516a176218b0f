import math
import random

import pytest

from latticecenters.centers import CenterCondition, center_report
from latticecenters.feasibility import (
    ExclusionCertificate,
    Rule,
    SideMultiset,
    centroid_mod3_filter,
    exclusion_report,
    gcd_filter,
    gh_mod3_filter,
    halved_numerators,
    mid3_filter,
    one_one_m_filter,
    partitions,
    prop1_witness,
    prop2_witness,
    replay,
    right_centroid_possible,
    subtriangle_multisets,
    tangent_sum_filter,
)
from latticecenters.lattice import ShapeClass, side_lengths
from latticecenters.search import iter_canonical_triangles

F = CenterCondition.CIRCUMCENTER
G = CenterCondition.CENTROID
H = CenterCondition.ORTHOCENTER
GH = CenterCondition.CENTROID_AND_ORTHOCENTER


class TestPartitions:
    def test_examples(self):
        assert [s.as_tuple() for s in partitions(5)] == [(1, 1, 3), (1, 2, 2)]
        assert [s.as_tuple() for s in partitions(3)] == [(1, 1, 1)]
        tens = partitions(10)
        assert len(tens) == 8
        assert SideMultiset(2, 3, 5) in tens

    def test_small_perimeter_rejected(self):
        with pytest.raises(ValueError):
            partitions(2)

    def test_sum_invariant(self):
        for ell in range(3, 30):
            for s in partitions(ell):
                assert s.perimeter == ell
                assert s.a <= s.b <= s.c


class TestFilters:
    def test_gcd_filter(self):
        assert gcd_filter(SideMultiset(1, 2, 2), H) is not None
        assert gcd_filter(SideMultiset(1, 4, 5), F) is None
        assert gcd_filter(SideMultiset(2, 4, 6), G) is None  # common gcd 2

    def test_one_one_m(self):
        assert one_one_m_filter(SideMultiset(1, 1, 4)) is not None
        assert one_one_m_filter(SideMultiset(1, 2, 3)) is None
        assert one_one_m_filter(SideMultiset(1, 1, 9)) is not None

    def test_mid3(self):
        assert mid3_filter(SideMultiset(1, 2, 3)) is not None
        assert mid3_filter(SideMultiset(1, 3, 6)) is None
        assert mid3_filter(SideMultiset(3, 3, 4)) is None

    def test_centroid_mod3(self):
        assert centroid_mod3_filter(SideMultiset(1, 1, 3)) is not None
        assert centroid_mod3_filter(SideMultiset(3, 3, 3)) is None
        assert centroid_mod3_filter(SideMultiset(1, 3, 7)) is not None
        assert centroid_mod3_filter(SideMultiset(1, 2, 4)) is None  # none divisible

    def test_tangent_sum_halving(self):
        assert halved_numerators(SideMultiset(1, 4, 5)) == (1, 2, 5)
        assert halved_numerators(SideMultiset(2, 3, 5)) == (1, 3, 5)

    def test_subtriangle_multisets(self):
        subs = subtriangle_multisets(SideMultiset(2, 3, 5), (1, 2, 1))
        assert [s.as_tuple() for s in subs] == [(2, 2, 5), (1, 2, 2), (1, 2, 3)]
        # the first two violate the pairwise-gcd law, which kills the case
        assert gcd_filter(subs[0], F) is not None
        assert gcd_filter(subs[1], F) is not None

    def test_tangent_sum_filter_kills_both_ten_cases(self):
        assert tangent_sum_filter(SideMultiset(1, 4, 5)) is not None
        assert tangent_sum_filter(SideMultiset(2, 3, 5)) is not None
        # but not a realizable multiset such as (1,3,4) (perimeter 8 witness)
        assert tangent_sum_filter(SideMultiset(1, 3, 4)) is None


class TestExclusionReports:
    def test_orthocenter_acute_boundary(self):
        impossible = {
            ell
            for ell in range(3, 31)
            if exclusion_report(ell, H, ShapeClass.ACUTE).proven_impossible
        }
        assert impossible == {3, 4, 5, 7}

    def test_orthocenter_seven_certificates(self):
        rep = exclusion_report(7, H, ShapeClass.ACUTE)
        rules = sorted(c.rule.value for c in rep.certificates)
        assert rules == ["GcdLemma", "GcdLemma", "GcdLemma", "OneOneM"]

    def test_centroid_eleven_decomposition(self):
        rep = exclusion_report(11, G, ShapeClass.ACUTE)
        assert rep.proven_impossible
        rules = [c.rule for c in rep.certificates]
        assert rules.count(Rule.GCD_LEMMA) == 8
        assert rules.count(Rule.CENTROID_MOD3) == 2

    def test_centroid_five(self):
        for shape in ShapeClass:
            assert exclusion_report(5, G, shape).proven_impossible

    def test_circumcenter_acute_boundary(self):
        impossible = {
            ell
            for ell in range(3, 31)
            if exclusion_report(ell, F, ShapeClass.ACUTE).proven_impossible
        }
        assert impossible == {3, 4, 5, 6, 7, 9, 10, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29}
        # i.e. all odd perimeters plus the even exceptions 4, 6, 10

    def test_circumcenter_ten_uses_tangent_certificates(self):
        rep = exclusion_report(10, F, ShapeClass.ACUTE)
        assert rep.proven_impossible
        tangent = [c for c in rep.certificates if c.rule is Rule.TANGENT_SUM]
        assert {c.multiset.as_tuple() for c in tangent} == {(1, 4, 5), (2, 3, 5)}

    def test_odd_circumcenter_even_perimeter_certificate(self):
        rep = exclusion_report(9, F, ShapeClass.OBTUSE)
        assert rep.proven_impossible
        assert [c.rule for c in rep.certificates] == [Rule.EVEN_PERIMETER]

    def test_gh_small_multiples(self):
        for ell in (3, 6):
            rep = exclusion_report(ell, GH, ShapeClass.ACUTE)
            assert rep.proven_impossible
        assert not exclusion_report(9, GH, ShapeClass.ACUTE).proven_impossible

    def test_right_centroid(self):
        rep = exclusion_report(12, G, ShapeClass.RIGHT)
        assert not rep.proven_impossible
        rep = exclusion_report(10, G, ShapeClass.RIGHT)
        assert rep.proven_impossible
        assert any(c.rule is Rule.RIGHT_CENTROID_MOD3 for c in rep.certificates)

    def test_incenter_has_no_exclusions(self):
        with pytest.raises(ValueError):
            exclusion_report(10, CenterCondition.INCENTER, ShapeClass.ACUTE)


class TestCertificates:
    def test_replay_all_from_reports(self):
        cases = [
            (7, H, ShapeClass.ACUTE),
            (10, F, ShapeClass.ACUTE),
            (11, G, ShapeClass.OBTUSE),
            (9, F, ShapeClass.RIGHT),
            (6, GH, ShapeClass.RIGHT),
            (12, G, ShapeClass.RIGHT),
        ]
        seen_rules = set()
        for ell, cond, shape in cases:
            rep = exclusion_report(ell, cond, shape)
            for cert in rep.certificates:
                assert replay(cert), cert.text()
                seen_rules.add(cert.rule)
        assert Rule.TANGENT_SUM in seen_rules
        assert Rule.EVEN_PERIMETER in seen_rules

    def test_replay_rejects_wrong_data(self):
        bogus = ExclusionCertificate(
            Rule.GCD_LEMMA, "made up", H, None, 8, SideMultiset(1, 3, 4)
        )
        assert not replay(bogus)

    def test_stable_text_form(self):
        rep = exclusion_report(5, G, ShapeClass.ACUTE)
        texts = [c.text() for c in rep.certificates]
        assert texts[0].startswith("CentroidMod3[perimeter=5 sides=(1,1,3) scope=G/any]")
        assert all("perimeter=5" in t for t in texts)

    def test_json_round_trip_fields(self):
        rep = exclusion_report(10, F, ShapeClass.ACUTE)
        for cert in rep.certificates:
            data = cert.to_json()
            assert set(data) == {"rule", "condition", "shape", "perimeter", "multiset", "detail"}


class TestFilterSoundness:
    def test_no_filtered_multiset_is_ever_realized(self):
        """Filters only kill (condition, shape, multiset) combos that no
        actual triangle attains; sweep every small orbit to confirm."""
        realized = set()
        for t in iter_canonical_triangles(9, lmax=14):
            rep = center_report(t)
            sides = side_lengths(t)
            for cond in (F, G, H, GH, CenterCondition.ALL_THREE):
                if cond.satisfied_by(rep):
                    realized.add((cond, rep.shape, sides))
        checked = 0
        for cond, shape, sides in realized:
            s = SideMultiset(*sides)
            assert gcd_filter(s, cond) is None
            if cond in (H, F, GH, CenterCondition.ALL_THREE) and shape is ShapeClass.ACUTE:
                assert one_one_m_filter(s) is None
            if cond in (F, CenterCondition.ALL_THREE):
                assert s.perimeter % 2 == 0
                if shape is ShapeClass.ACUTE:
                    assert mid3_filter(s) is None
                    assert tangent_sum_filter(s) is None
            if cond in (G, GH, CenterCondition.ALL_THREE):
                assert centroid_mod3_filter(s) is None
                if shape is ShapeClass.RIGHT:
                    assert all(x % 3 == 0 for x in sides)
            if cond in (GH, CenterCondition.ALL_THREE):
                assert gh_mod3_filter(s) is None
            checked += 1
        assert checked > 50


def _prop1_set(limit):
    return {n for n in range(1, limit + 1) if prop1_witness(n) is not None}


def _prop2_set(limit):
    return {n for n in range(1, limit + 1) if prop2_witness(n) is not None}


class TestPropositions:
    def test_prop1_examples(self):
        assert prop1_witness(6) == (1, 2, 3)
        assert prop1_witness(7) is None
        w = prop1_witness(12)
        assert w is not None and sum(w) == 12
        x, y, z = w
        assert len({x, y, z}) == 3
        assert math.gcd(x, y) == math.gcd(x, z) == math.gcd(y, z) == 1

    def test_prop2_examples(self):
        assert prop2_witness(3) == (1, 1, 1)
        assert prop2_witness(5) is None
        assert prop2_witness(11) is None

    def test_characterizations_to_80(self):
        assert _prop1_set(80) == {6} | set(range(8, 81))
        assert _prop2_set(80) == set(range(3, 81)) - {5, 11}

    def test_witnesses_verify(self):
        rng = random.Random(8)
        for _ in range(40):
            n = rng.randint(1, 120)
            w1 = prop1_witness(n)
            if w1:
                x, y, z = w1
                assert x < y < z and x + y + z == n
                assert math.gcd(x, y) == math.gcd(x, z) == math.gcd(y, z) == 1
            w2 = prop2_witness(n)
            if w2:
                x, y, z = w2
                assert x <= y <= z and x + y + z == n
                assert all(v % 3 != 0 for v in w2)
                assert math.gcd(x, y) == math.gcd(x, z) == math.gcd(y, z) == 1


class TestRightCentroidPossible:
    def test_examples(self):
        assert right_centroid_possible(9)[0] is True
        assert right_centroid_possible(6)[0] is False
        assert right_centroid_possible(10)[0] is False

    def test_agrees_with_exclusion_report(self):
        for ell in range(3, 40):
            possible, _ = right_centroid_possible(ell)
            report = exclusion_report(ell, G, ShapeClass.RIGHT)
            assert possible == (not report.proven_impossible)
