from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from juristat.decision import (
    BetaBelief,
    DiscreteBelief,
    HandInputs,
    bayes_update_discrete,
    beta_from_opinion,
    beta_update,
    conviction_rate,
    expected_daily_loss,
    hand_rule,
)
from juristat.errors import (
    InconsistentCounts,
    InvalidValue,
    LengthMismatch,
    OutOfRange,
    ZeroAccused,
    ZeroEvidence,
)


@pytest.mark.parametrize(
    "burden, liable",
    [(10, True), (100, False), (50, False), (49.999, True)],
)
def test_hand_rule(burden, liable):
    verdict = hand_rule(HandInputs(burden, 0.1, 500))
    assert verdict.liable is liable
    assert verdict.expected_harm == pytest.approx(50)


@pytest.mark.parametrize("args", [(-1, 0.1, 5), (1, 1.1, 5), (1, 0.1, -5), (float("inf"), 0.1, 1)])
def test_hand_domain(args):
    with pytest.raises(InvalidValue):
        HandInputs(*args)


@given(
    st.floats(0, 1e6),
    st.floats(0, 1),
    st.floats(0, 1e6),
    st.sampled_from([0.01, 0.5, 2.0, 1000.0]),
)
def test_hand_rule_scale_invariant(b, p, l, c):
    harm = p * l
    # skip inputs within rounding distance of the boundary
    if abs(b - harm) <= 1e-9 * max(b, harm, 1.0):
        return
    assert hand_rule(HandInputs(b, p, l)).liable == hand_rule(HandInputs(c * b, p, c * l)).liable


def test_expected_loss_example():
    ev = expected_daily_loss(1000, 0.1, 3450)
    assert ev.value == pytest.approx(1000 * 0.1 * 3450 / 22, rel=1e-15)
    assert abs(ev.value - 15681.82) < 0.005
    assert ev.text == "The estimated loss amount per business day is $15681.82."


def test_expected_loss_zero_and_linear():
    assert expected_daily_loss(1000, 0.0, 3450).value == 0
    assert expected_daily_loss(2000, 0.1, 3450).value == pytest.approx(2 * expected_daily_loss(1000, 0.1, 3450).value)


def test_expected_loss_half_up():
    # 0.125 is exact in binary, so the tie is a real tie
    assert expected_daily_loss(1, 1, 0.125, 1).text.endswith("$0.13.")


@pytest.mark.parametrize("args", [(-1, 0.1, 1), (1, 2, 1), (1, 0.1, -1), (1, 0.1, 1, 0), (1, 0.1, 1, 2.5)])
def test_expected_loss_domain(args):
    with pytest.raises(InvalidValue):
        expected_daily_loss(*args)


def test_conviction_rates():
    assert conviction_rate(4594, 7234) == pytest.approx(0.635, abs=5e-4)
    assert conviction_rate(4037, 6652) == pytest.approx(0.607, abs=5e-4)
    assert conviction_rate(0, 100) == 0


def test_conviction_errors():
    with pytest.raises(InconsistentCounts):
        conviction_rate(10, 5)
    with pytest.raises(ZeroAccused):
        conviction_rate(0, 0)


@given(st.integers(1, 10**6).flatmap(lambda n: st.tuples(st.integers(0, n), st.integers(0, n), st.just(n))))
def test_conviction_monotone(args):
    c1, c2, n = args
    lo, hi = sorted((c1, c2))
    assert 0 <= conviction_rate(lo, n) <= conviction_rate(hi, n) <= 1


@pytest.mark.parametrize(
    "prior, lik, post",
    [
        ((0.5, 0.5), (1, 1), (0.5, 0.5)),
        ((0.5, 0.5), (0.2, 0.8), (0.2, 0.8)),
        ((0.2, 0.8), (0.9, 0.1), (0.18 / 0.26, 0.08 / 0.26)),
    ],
)
def test_bayes_examples(prior, lik, post):
    out = bayes_update_discrete(DiscreteBelief(prior), lik)
    assert out.weights == pytest.approx(post, abs=1e-12)


def test_bayes_exact_fractions():
    prior = DiscreteBelief((Fraction(1, 5), Fraction(4, 5)))
    out = bayes_update_discrete(prior, (Fraction(9, 10), Fraction(1, 10)))
    assert out.weights == (Fraction(9, 13), Fraction(4, 13))


def test_bayes_errors():
    with pytest.raises(ZeroEvidence):
        bayes_update_discrete(DiscreteBelief((1.0, 0.0)), (0.0, 1.0))
    with pytest.raises(LengthMismatch):
        bayes_update_discrete(DiscreteBelief((0.5, 0.5)), (1.0,))
    with pytest.raises(InvalidValue):
        DiscreteBelief((0.5, 0.6))
    with pytest.raises(InvalidValue):
        bayes_update_discrete(DiscreteBelief((0.5, 0.5)), (-1.0, 1.0))


def test_labels_carried_through():
    prior = DiscreteBelief((0.5, 0.5), labels=("win", "lose"))
    assert bayes_update_discrete(prior, (0.3, 0.1)).labels == ("win", "lose")


weights = st.lists(st.floats(0.001, 1.0), min_size=1, max_size=8)


@given(weights.flatmap(lambda w: st.tuples(st.just(w), st.lists(st.floats(0.001, 10), min_size=len(w), max_size=len(w)))))
def test_bayes_normalizes(args):
    raw, lik = args
    prior = DiscreteBelief(tuple(x / sum(raw) for x in raw))
    post = bayes_update_discrete(prior, lik)
    assert abs(sum(post.weights) - 1) <= 1e-12
    flat = bayes_update_discrete(prior, [3.7] * len(raw))
    assert flat.weights == pytest.approx(prior.weights, abs=1e-12)


def test_beta_update_examples():
    assert beta_update(BetaBelief(1, 1), 0, 0) == BetaBelief(1, 1)
    assert beta_update(BetaBelief(1, 1), 3, 1) == BetaBelief(4, 2)
    assert beta_update(beta_update(BetaBelief(1, 1), 2, 0), 1, 1) == beta_update(BetaBelief(1, 1), 3, 1)


@given(st.floats(0.1, 50), st.floats(0.1, 50), st.integers(0, 10**4), st.integers(0, 10**4))
def test_beta_update_properties(a, b, s, f):
    post = beta_update(BetaBelief(a, b), s, f)
    assert post.alpha + post.beta == pytest.approx(a + b + s + f)
    if s + f:
        rate = s / (s + f)
        prior_mean = a / (a + b)
        assert abs(post.mean - rate) <= abs(prior_mean - rate) + 1e-12


def test_beta_mean_converges_to_rate():
    b = BetaBelief(6, 6)
    gaps = [abs(beta_update(b, 7 * k, 3 * k).mean - 0.7) for k in (1, 10, 100, 1000)]
    assert gaps == sorted(gaps, reverse=True)
    assert gaps[-1] < 1e-3


@pytest.mark.parametrize("level, params", [(0, (1, 1)), (1, (10, 2)), (2, (8, 4)), (3, (6, 6)), (4, (4, 8)), (5, (2, 10))])
def test_beta_from_opinion(level, params):
    b = beta_from_opinion(level)
    assert (b.alpha, b.beta) == params


def test_beta_from_opinion_monotone():
    means = [beta_from_opinion(k).mean for k in range(1, 6)]
    assert means == sorted(means, reverse=True)


@pytest.mark.parametrize("level", [-1, 6, 2.5, True])
def test_beta_from_opinion_range(level):
    with pytest.raises(OutOfRange):
        beta_from_opinion(level)
