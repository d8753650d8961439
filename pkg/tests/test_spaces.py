# tests/test_spaces.py
import unittest

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wedgealg.core.abelian_groups import AbelianGroup
from wedgespace.core.errors import NotSimplyConnectedError, ParseError, UnsupportedSpaceError
from wedgespace.core.models import GenericSmash, Moore, Sphere, SuspendedSummand, WedgeInput, homology
from wedgespace.core.parser import parse_space, parse_summand, parse_wedge
from wedgespace.core.smash import suspend


class TestDescriptors(unittest.TestCase):

    def test_connectivity_and_dimension(self):
        self.assertEqual((Sphere(4).conn, Sphere(4).dim), (3, 4))
        self.assertEqual((Moore(2, 2).conn, Moore(2, 2).dim), (1, 3))
        g = GenericSmash((Moore(2, 1), Moore(2, 1)))
        self.assertEqual((g.conn, g.dim), (1, 4))

    def test_homology(self):
        self.assertEqual(homology(Sphere(3)), {3: AbelianGroup.free(1)})
        self.assertEqual(homology(Moore(2, 2)), {2: AbelianGroup.cyclic(2)})
        self.assertEqual(homology(Moore(3, 5)), {5: AbelianGroup.cyclic(3)})
        with self.assertRaises(UnsupportedSpaceError):
            homology(GenericSmash((Moore(2, 1), Moore(3, 1))))

    def test_invalid_descriptors(self):
        with self.assertRaises(UnsupportedSpaceError):
            Moore(1, 3)
        with self.assertRaises(UnsupportedSpaceError):
            GenericSmash((Moore(2, 1),))
        with self.assertRaises(NotSimplyConnectedError):
            SuspendedSummand(Sphere(1))

    def test_desuspension(self):
        self.assertEqual(SuspendedSummand(Sphere(4)).desusp, Sphere(3))
        self.assertEqual(SuspendedSummand(Moore(2, 2)).desusp, Moore(2, 1))
        for s in (Sphere(5), Moore(3, 4)):
            self.assertEqual(suspend(SuspendedSummand(s).desusp), s)

    def test_rendering(self):
        self.assertEqual(Sphere(4).render(), "S4")
        self.assertEqual(Moore(2, 3).render(), "M(2,3)")
        self.assertEqual(GenericSmash((Moore(3, 2), Moore(2, 1)), 2).render(), "Sigma^2(M(2,1) ^ M(3,2))")
        self.assertEqual(GenericSmash((Moore(2, 1), Moore(2, 1))).render(), "(M(2,1) ^ M(2,1))")
        w = WedgeInput((SuspendedSummand(Sphere(2)), SuspendedSummand(Moore(2, 2))))
        self.assertEqual(w.render(), "S2 v M(2,2)")

    def test_wedge_needs_a_summand(self):
        with self.assertRaisesRegex(UnsupportedSpaceError, "at least one summand"):
            WedgeInput(())
        self.assertEqual(WedgeInput([SuspendedSummand(Sphere(3))]).k, 1)


class TestParser(unittest.TestCase):

    def test_parse_summand(self):
        s = parse_summand("S4")
        self.assertEqual((s.space, s.desusp), (Sphere(4), Sphere(3)))
        m = parse_summand("M(2,2)")
        self.assertEqual((m.space, m.desusp), (Moore(2, 2), Moore(2, 1)))
        self.assertEqual(parse_summand(" M( 3 , 5 ) ").space, Moore(3, 5))

    def test_not_simply_connected(self):
        for text in ["S1", "M(2,1)", "S0"]:
            with self.subTest(text=text):
                with self.assertRaises(NotSimplyConnectedError) as cm:
                    parse_summand(text)
                self.assertIn(text, str(cm.exception))

    def test_parse_wedge(self):
        w = parse_wedge("S2 v M(2,2)")
        self.assertEqual([s.space for s in w.summands], [Sphere(2), Moore(2, 2)])
        self.assertEqual(parse_wedge("S12 v S11 v S7").k, 3)
        self.assertEqual(parse_wedge("S3vS3").k, 2)

    def test_error_offsets(self):
        cases = {"S2 &": 3, "S2 v": 4, "M(2 2)": 4, "S": 1, "S2 S3": 3, "v S2": 0}
        for text, offset in cases.items():
            with self.subTest(text=text):
                with self.assertRaises(ParseError) as cm:
                    parse_wedge(text)
                self.assertEqual(cm.exception.position, offset)

    def test_empty_expression(self):
        for text in ["", "   "]:
            with self.assertRaises(ParseError):
                parse_wedge(text)

    def test_caret_line(self):
        with self.assertRaises(ParseError) as cm:
            parse_wedge("S2 &")
        self.assertEqual(cm.exception.caret(), "S2 &\n   ^")

    def test_bad_moore_coefficient(self):
        with self.assertRaises(ParseError) as cm:
            parse_summand("M(1,3)")
        self.assertEqual(cm.exception.position, 2)

    def test_wedge_reports_not_simply_connected_summand(self):
        with self.assertRaises(NotSimplyConnectedError) as cm:
            parse_wedge("S3 v S1")
        self.assertEqual(cm.exception.summand, "S1")

    def test_parse_space_table_keys(self):
        self.assertEqual(parse_space("M(2,1)"), Moore(2, 1))
        self.assertEqual(parse_space("S1"), Sphere(1))
        self.assertEqual(parse_space("(S1 ^ M(2,1))"), Moore(2, 2))
        self.assertEqual(parse_space("Sigma^1(S2 ^ S3)"), Sphere(6))
        g = parse_space("Sigma^2(M(3,2) ^ M(2,1))")
        self.assertEqual(g, GenericSmash((Moore(2, 1), Moore(3, 2)), 2))
        with self.assertRaises(ParseError):
            parse_space("(M(2,1))")


summands = st.one_of(
    st.integers(2, 30).map(lambda n: SuspendedSummand(Sphere(n))),
    st.builds(lambda q, n: SuspendedSummand(Moore(q, n)), st.integers(2, 30), st.integers(2, 30)),
)


@given(summands)
def test_summand_round_trip(s):
    assert parse_summand(s.render()) == s
    assert parse_space(s.render()) == s.space
    assert s.conn < s.dim


@given(st.lists(summands, min_size=1, max_size=5))
def test_wedge_round_trip(parts):
    w = WedgeInput(tuple(parts))
    assert parse_wedge(w.render()) == w


@pytest.mark.parametrize("space", [Sphere(1), Sphere(7), Moore(2, 1), Moore(5, 4)])
def test_suspend_raises_conn_and_dim_by_one(space):
    s = suspend(space)
    assert (s.conn, s.dim) == (space.conn + 1, space.dim + 1)
