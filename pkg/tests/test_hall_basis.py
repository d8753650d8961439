# tests/test_hall_basis.py
"""
Basic commutators against an independent oracle: Lyndon words generated by
Duval's algorithm are equinumerous with basic commutators per weight and
per multidegree.
"""
import unittest
from collections import Counter

import pytest

from wedgealg.core.hall_basis import (
    Commutator, basic_commutators, commutators_with_multidegree, count_by_multidegree, count_by_weight,
    multidegree_classes,
)


def lyndon_words(k, n):
    """All Lyndon words of length <= n over k letters (Duval)."""
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(w)
        m = len(w)
        while len(w) < n:
            w.append(w[-m])
        while w and w[-1] == k - 1:
            w.pop()


def lyndon_counts(k, n):
    return Counter(len(w) for w in lyndon_words(k, n))


def lyndon_content_counts(k, n):
    return Counter(tuple(w.count(i) for i in range(k)) for w in lyndon_words(k, n))


class TestExamples(unittest.TestCase):

    def test_two_generators_weight_three(self):
        rendered = [c.render() for c in basic_commutators(2, 3)]
        self.assertEqual(rendered, ["z1", "z2", "[z1,z2]", "[z1,[z1,z2]]", "[z2,[z1,z2]]"])

    def test_one_generator_has_no_brackets(self):
        self.assertEqual([c.render() for c in basic_commutators(1, 5)], ["z1"])

    def test_three_generators_weight_two(self):
        weight_two = {c.render() for c in basic_commutators(3, 2) if c.weight == 2}
        self.assertEqual(weight_two, {"[z1,z2]", "[z1,z3]", "[z2,z3]"})

    def test_witt_numbers(self):
        self.assertEqual([count_by_weight(2, w) for w in range(1, 7)], [2, 1, 2, 3, 6, 9])
        self.assertEqual(count_by_weight(3, 3), 8)
        self.assertEqual(count_by_weight(1, 2), 0)

    def test_multidegree_and_weight(self):
        c = basic_commutators(3, 3)[-1]
        self.assertEqual(sum(c.multidegree), c.weight)
        leaf = Commutator.leaf(2, 3)
        self.assertEqual(leaf.multidegree, (0, 1, 0))
        self.assertEqual(str(leaf), "z2")

    def test_invalid_arguments(self):
        with self.assertRaises(ValueError):
            basic_commutators(0, 3)
        with self.assertRaises(ValueError):
            count_by_weight(2, 0)
        with self.assertRaises(ValueError):
            count_by_multidegree((0, 0))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_counts_match_lyndon_oracle(k):
    per_weight = Counter(c.weight for c in basic_commutators(k, 6))
    oracle = lyndon_counts(k, 6)
    for w in range(1, 7):
        assert per_weight[w] == count_by_weight(k, w) == oracle[w], (k, w)


@pytest.mark.parametrize("k", [2, 3])
def test_multidegree_counts_match_lyndon_oracle(k):
    per_degree = Counter(c.multidegree for c in basic_commutators(k, 6))
    oracle = lyndon_content_counts(k, 6)
    assert per_degree == oracle
    for degree, n in oracle.items():
        assert count_by_multidegree(degree) == n


@pytest.mark.parametrize("k", [2, 3, 4])
def test_structural_conditions(k):
    seq = basic_commutators(k, 6)
    index = {c: i for i, c in enumerate(seq)}
    assert len(index) == len(seq)
    for c in seq:
        if c.is_leaf:
            continue
        assert index[c.left] < index[c.right]
        if not c.right.is_leaf:
            assert index[c.right.left] <= index[c.left]
        assert index[c.left] < index[c] and index[c.right] < index[c]
    weights = [c.weight for c in seq]
    assert weights == sorted(weights)


@pytest.mark.parametrize("k", [2, 3])
def test_prefix_stability(k):
    longer = basic_commutators(k, 6)
    for w in range(1, 6):
        shorter = basic_commutators(k, w)
        assert longer[:len(shorter)] == shorter


def test_admission_filter_yields_admitted_subsequence():
    def admit(degree):
        return 2 * degree[0] + degree[1] + 3 * degree[2] < 9

    full = basic_commutators(3, 7)
    restricted = basic_commutators(3, 7, admit=admit)
    assert restricted == [c for c in full if admit(c.multidegree)]
    assert len(restricted) < len(full)


def test_admission_filter_stops_at_the_first_empty_weight():
    rendered = [c.render() for c in basic_commutators(2, 5000, admit=lambda d: sum(d) <= 2)]
    assert rendered == ["z1", "z2", "[z1,z2]"]


@pytest.mark.parametrize("k", [2, 3])
def test_multidegree_classes_match_the_basis(k):
    classes = multidegree_classes(k, 6)
    assert dict(classes) == Counter(c.multidegree for c in basic_commutators(k, 6))
    weights = [sum(m) for m, _ in classes]
    assert weights == sorted(weights)
    first_seen = list(dict.fromkeys(c.multidegree for c in basic_commutators(k, 2)))
    assert [m for m, _ in classes if sum(m) <= 2] == first_seen


def test_multidegree_classes_respect_the_admission_filter():
    def admit(degree):
        return 2 * degree[0] + degree[1] + 3 * degree[2] < 9

    classes = multidegree_classes(3, 7, admit=admit)
    assert dict(classes) == Counter(c.multidegree for c in basic_commutators(3, 7, admit=admit))
    # single-generator multidegrees above weight 1 are empty classes
    assert multidegree_classes(2, 400, admit=lambda d: 4999 * d[0] + 2 * d[1] < 5000) == [((1, 0), 1), ((0, 1), 1)]


@pytest.mark.parametrize("k", [2, 3])
def test_commutators_with_multidegree(k):
    full = basic_commutators(k, 5)
    for degree, n in multidegree_classes(k, 5):
        members = commutators_with_multidegree(degree)
        assert members == [c for c in full if c.multidegree == degree]
        assert len(members) == n
    with pytest.raises(ValueError):
        commutators_with_multidegree((0, 0))
