import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from landen import (
    DomainError,
    agm,
    agm_product_identity_residual,
    agm_trace,
    ellint_k_agm,
    ellint_k_landen_product,
    log_mean,
)
from oracles import agm_ref, ellipk_ref, ulps

positive = st.floats(min_value=1e-6, max_value=1e6)
unit = st.floats(min_value=1e-6, max_value=1.0 - 1e-6)


def test_agm_examples():
    assert agm(1.0, 1.0) == 1.0
    assert agm(2.0, 2.0) == 2.0
    assert ulps(agm(1.0, 2.0), agm_ref(1.0, 2.0)) <= 2
    assert ulps(agm(1.0, math.sqrt(2.0) / 2), agm_ref(1.0, math.sqrt(2.0) / 2)) <= 2


def test_agm_is_symmetric():
    assert agm(3.0, 0.5) == agm(0.5, 3.0)


@given(positive, positive, st.floats(min_value=1e-3, max_value=1e3))
def test_agm_homogeneous(a, b, t):
    assert ulps(agm(t * a, t * b), t * agm(a, b)) <= 4


@given(positive, positive)
def test_agm_between_geometric_and_arithmetic(a, b):
    g = agm(a, b)
    assert math.sqrt(a * b) * (1 - 1e-15) <= g <= 0.5 * (a + b) * (1 + 1e-15)


@pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan])
def test_agm_rejects(bad):
    with pytest.raises(DomainError):
        agm(bad, 1.0)


def test_agm_trace():
    t = agm_trace(1.0, 0.5, 6)
    assert len(t.a_seq) == len(t.b_seq) == 7
    assert t.a_seq[0] == 1.0 and t.b_seq[0] == 0.5
    assert t.a_seq[1] == 0.75 and t.b_seq[1] == math.sqrt(0.5)
    assert all(b <= t.limit <= a for a, b in zip(t.a_seq, t.b_seq))
    assert t.a_seq[-1] == t.b_seq[-1] == t.limit


def test_agm_trace_rejects():
    with pytest.raises(DomainError):
        agm_trace(0.5, 1.0, 3)
    with pytest.raises(DomainError):
        agm_trace(1.0, 0.5, 40)


def test_k_self_dual_value():
    assert ellint_k_agm(math.sqrt(0.5)) == pytest.approx(1.8540746773013719, rel=2e-16)


@pytest.mark.parametrize("r", [1e-8, 1e-3, 0.1, 0.5, 0.9, 0.999, 1 - 1e-10])
def test_k_matches_mpmath(r):
    assert ulps(ellint_k_agm(r), ellipk_ref(r)) <= 4


@pytest.mark.parametrize("r", [1e-3, 0.2, 0.5, 0.8, 0.999])
def test_landen_product_matches(r):
    k = ellint_k_agm(r)
    assert abs(ellint_k_landen_product(r, 6) - k) <= 1e-15 * k


def test_landen_product_converges():
    r = 0.99
    k = ellint_k_agm(r)
    errs = [abs(ellint_k_landen_product(r, n) - k) for n in range(1, 7)]
    assert all(b < a for a, b in zip(errs, errs[1:]) if a > 1e-15)
    assert ellint_k_landen_product(r, 0) == 0.5 * math.pi


def test_product_terms_checked():
    with pytest.raises(DomainError):
        ellint_k_landen_product(0.5, 33)
    with pytest.raises(DomainError):
        ellint_k_landen_product(0.5, 2.5)


def test_log_mean_examples():
    assert log_mean(4.0, 1.0) == pytest.approx(3.0 / math.log(4.0), rel=1e-15)
    assert log_mean(2.0, 2.0) == 2.0
    assert log_mean(1.0, 1.0 + 1e-12) == pytest.approx(1.0 + 5e-13, rel=1e-15)
    # order t: L(a**t, b**t)**(1/t)
    expected = ((8.0 - 1.0) / math.log(8.0)) ** (1.0 / 1.5)
    assert log_mean(4.0, 1.0, 1.5) == pytest.approx(expected, rel=1e-14)


@given(unit)
def test_mean_chain_property(x):
    # L(1, x) < AG(1, x) < L_{3/2}(1, x), where the gaps are resolvable
    if x > 0.99:
        return
    assert log_mean(1.0, x) < agm(1.0, x) < log_mean(1.0, x, 1.5)


@pytest.mark.parametrize("s", [1e-8, 1e-3, 0.3, 0.7, 0.999, 1 - 1e-8])
def test_product_identity(s):
    assert agm_product_identity_residual(s, 8) <= 1e-14


def test_product_identity_six_terms():
    # six factors suffice once s is not tiny
    for s in (1e-3, 0.1, 0.5, 0.9):
        assert agm_product_identity_residual(s, 6) <= 1e-14


def test_product_identity_empty():
    assert agm_product_identity_residual(0.5, 0) == abs(agm(1.0, 0.5) - 1.0)


@pytest.mark.parametrize("r", [0.1, 0.5, 0.9, 0.999])
def test_landen_product_truncation_rate(r):
    # the factors omitted after n terms multiply to about 1 + L(r, -n-1),
    # so the relative truncation error tracks L(r, -n-1)
    from landen import landen

    k = ellipk_ref(r)
    for n in range(1, 5):
        err = (k - ellint_k_landen_product(r, n)) / k
        tail = landen(r, -(n + 1))
        if tail < 1e-14:
            break
        assert 0.5 * tail <= err <= 1.5 * tail
