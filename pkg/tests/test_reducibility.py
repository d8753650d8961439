# tests/test_reducibility.py
import unittest

from hypothesis import given
from hypothesis import strategies as st

from wedgespace.core.models import Moore, Sphere, SuspendedSummand, WedgeInput
from wedgespace.core.parser import parse_wedge
from wedgeaut.core.reducibility import check_reducible, hom_trivial_all_degrees


class TestPairChecks(unittest.TestCase):

    def test_sphere_and_moore_certified_one_way(self):
        check = check_reducible(parse_wedge("S2 v M(2,2)"))
        self.assertTrue(check.is_sufficient)
        (pair,) = check.pairs
        self.assertEqual((pair.r, pair.s, pair.direction), (1, 2, (2, 1)))
        self.assertEqual(pair.justification, "Hom(H_*(M(2,2)), H_*(S2)) = 0")
        self.assertEqual(pair.to_dict(), {
            "summands": [1, 2],
            "certified": True,
            "direction": [2, 1],
            "justification": "Hom(H_*(M(2,2)), H_*(S2)) = 0",
        })

    def test_disjoint_degrees_use_first_direction(self):
        (pair,) = check_reducible(parse_wedge("S4 v S3")).pairs
        self.assertEqual(pair.direction, (1, 2))

    def test_coprime_coefficients(self):
        self.assertTrue(check_reducible(parse_wedge("M(2,2) v M(3,2)")).is_sufficient)

    def test_equal_spheres_are_undetermined(self):
        check = check_reducible(parse_wedge("S3 v S3"))
        self.assertFalse(check.is_sufficient)
        (pair,) = check.failing_pairs
        self.assertIsNone(pair.direction)
        self.assertIn("both nonzero", pair.justification)
        self.assertIsNone(pair.to_dict()["direction"])

    def test_non_coprime_moore_spaces_are_undetermined(self):
        for expr in ["M(2,2) v M(2,2)", "M(2,2) v M(4,2)", "M(6,3) v M(4,3)"]:
            with self.subTest(expr=expr):
                self.assertFalse(check_reducible(parse_wedge(expr)).is_sufficient)

    def test_three_summands(self):
        check = check_reducible(parse_wedge("S6 v S5 v S3"))
        self.assertEqual([(p.r, p.s) for p in check.pairs], [(1, 2), (1, 3), (2, 3)])
        self.assertTrue(check.is_sufficient)
        check = check_reducible(parse_wedge("S5 v S3 v S3"))
        self.assertEqual([(p.r, p.s) for p in check.failing_pairs], [(2, 3)])

    def test_single_summand_is_vacuous(self):
        check = check_reducible(parse_wedge("M(2,4)"))
        self.assertEqual(check.pairs, ())
        self.assertTrue(check.is_sufficient)

    def test_hom_trivial_all_degrees(self):
        self.assertTrue(hom_trivial_all_degrees(Moore(2, 3), Sphere(3)))
        self.assertFalse(hom_trivial_all_degrees(Sphere(3), Moore(2, 3)))
        self.assertTrue(hom_trivial_all_degrees(Sphere(3), Moore(2, 4)))


summands = st.one_of(
    st.integers(2, 6).map(Sphere),
    st.builds(Moore, st.integers(2, 8), st.integers(2, 6)),
).map(SuspendedSummand)


@given(summands, summands)
def test_certification_ignores_summand_order(a, b):
    forward = check_reducible(WedgeInput((a, b))).pairs[0]
    backward = check_reducible(WedgeInput((b, a))).pairs[0]
    assert forward.certified == backward.certified


@given(summands, summands)
def test_certified_direction_has_vanishing_hom(a, b):
    w = WedgeInput((a, b))
    (pair,) = check_reducible(w).pairs
    if pair.certified:
        src, dst = pair.direction
        assert hom_trivial_all_degrees(w.summands[src - 1].space, w.summands[dst - 1].space)
    else:
        assert not hom_trivial_all_degrees(a.space, b.space)
        assert not hom_trivial_all_degrees(b.space, a.space)
