# tests/test_order_arithmetic.py
import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from wedgealg.core.abelian_groups import ExtOrder
from wedgealg.core.order_arithmetic import mul, power, product

F = ExtOrder.finite
INF = ExtOrder.infinite()
UNK = ExtOrder.unknown()

orders = st.one_of(
    st.integers(1, 10_000).map(ExtOrder.finite),
    st.just(INF),
    st.just(UNK),
)


def test_mul_examples():
    assert mul(F(2), F(16)) == F(32)
    assert mul(INF, UNK) == INF
    assert mul(UNK, INF) == INF
    assert mul(UNK, F(5)) == UNK
    assert mul(F(3), INF) == INF


def test_product_examples():
    assert product([]) == F(1)
    assert product([F(2)] * 5) == F(32)
    assert product([F(3), INF, UNK]) == INF
    assert product(iter([F(4), F(8)])) == F(32)


def test_all_variant_pairs_commute():
    samples = [F(1), F(6), INF, UNK]
    for a, b in itertools.product(samples, repeat=2):
        assert mul(a, b) == mul(b, a)


def test_power():
    assert power(F(2), 5) == F(32)
    assert power(INF, 3) == INF
    assert power(UNK, 0) == F(1)
    assert power(UNK, 2) == UNK


@given(orders, orders)
@settings(max_examples=200)
def test_mul_commutative(a, b):
    assert mul(a, b) == mul(b, a)


@given(orders, orders, orders)
@settings(max_examples=200)
def test_mul_associative(a, b, c):
    assert mul(mul(a, b), c) == mul(a, mul(b, c))


@given(orders)
def test_identity(a):
    assert mul(F(1), a) == a
    assert mul(a, F(1)) == a


@given(st.lists(orders, max_size=8), st.randoms(use_true_random=False))
@settings(max_examples=100)
def test_product_permutation_invariant(xs, rnd):
    shuffled = list(xs)
    rnd.shuffle(shuffled)
    assert product(xs) == product(shuffled)


@given(st.lists(orders, max_size=8))
def test_product_classification(xs):
    total = product(xs)
    if any(x.is_infinite for x in xs):
        assert total.is_infinite
    elif any(x.is_unknown for x in xs):
        assert total.is_unknown
    else:
        assert total.is_finite
