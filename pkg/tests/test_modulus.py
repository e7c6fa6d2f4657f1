import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from landen import (
    BoundId,
    DomainError,
    complement,
    landen,
    mu,
    mu_bound,
    mu_bound_inverse,
    mu_landen_bracket,
    mu_landen_identity_residual,
    mu_plus_log,
    mu_plus_log_monotone_check,
)
from landen.modulus import LOG4, PI2_4
from oracles import bound_inverse_mp, mu_ref, ulps

unit = st.floats(min_value=1e-9, max_value=1.0 - 1e-9)


@pytest.mark.parametrize("r", [1e-12, 1e-4, 0.1, 0.5, math.sqrt(0.5), 0.9, 0.9999, 1 - 1e-10])
def test_mu_matches_mpmath(r):
    assert ulps(mu(r), mu_ref(r)) <= 4


def test_mu_values():
    assert mu(0.5) == pytest.approx(2.0094593770052852, rel=4e-16)
    assert mu(math.sqrt(0.5)) == pytest.approx(0.5 * math.pi, abs=1e-15)


def test_mu_beyond_double_range():
    tiny = landen(0.5, -12)
    assert mu(tiny) == pytest.approx(LOG4 - tiny.log_value, rel=1e-15)
    assert mu(tiny) == pytest.approx(2**12 * mu(0.5), rel=1e-13)
    top = landen(0.5, 8)
    assert mu(top) == pytest.approx(mu(0.5) / 2**8, rel=1e-13)


@given(unit)
def test_mu_reciprocal(r):
    assert abs(mu(r) * mu(complement(r)) - PI2_4) <= 1e-13 * PI2_4


@pytest.mark.parametrize("p", range(-8, 9))
def test_mu_landen_identity(p):
    for r in (1e-6, 0.01, 0.3, 0.7, 0.99, 1 - 1e-6):
        assert mu_landen_identity_residual(r, p) <= 1e-13


@pytest.mark.parametrize("bound", list(BoundId))
def test_bounds_against_mpmath(bound):
    import mpmath

    formulas = {
        BoundId.U1: lambda r, rp: mpmath.atanh(rp**0.25),
        BoundId.U2: lambda r, rp: mpmath.log((1 + mpmath.sqrt(rp)) ** 2 / r),
        BoundId.U3: lambda r, rp: mpmath.log((1 + 3 * rp) / r),
        BoundId.U4: lambda r, rp: mpmath.log(1 / r),
        BoundId.U5: lambda r, rp: mpmath.log((1 + rp) / r),
        BoundId.V1: lambda r, rp: mpmath.pi**2 / (4 * mpmath.atanh(r**0.25)),
        BoundId.V2: lambda r, rp: mpmath.log(2 * (1 + rp) / r),
        BoundId.V3: lambda r, rp: mpmath.log(4 / r),
    }
    for r in (1e-6, 0.1, 0.5, 0.9, 0.999999):
        with mpmath.workprec(200):
            x = mpmath.mpf(r)
            ref = float(formulas[bound](x, mpmath.sqrt(1 - x * x)))
        assert abs(mu_bound(bound, r) - ref) <= 1e-14 * abs(ref)


@pytest.mark.parametrize("bound", [b for b in BoundId if b is not BoundId.U2])
def test_bound_inverses(bound):
    for y in (0.3, 1.0, 2.5, 10.0):
        ref = float(bound_inverse_mp(bound.name.lower(), y))
        assert abs(mu_bound_inverse(bound, y) - ref) <= 1e-14 * ref


def test_u2_inverse_missing():
    with pytest.raises(DomainError):
        mu_bound_inverse(BoundId.U2, 1.0)


def test_bound_parse():
    assert BoundId.parse("v2") is BoundId.V2
    assert BoundId.lookup("lower", 3) is BoundId.U3
    with pytest.raises(DomainError):
        BoundId.parse("w9")


def test_bracket_depth_zero_and_one():
    r = 0.4
    lower, upper = mu_landen_bracket(r, 0)
    assert lower == pytest.approx(mu_bound(BoundId.U4, r), rel=1e-15)
    assert upper == pytest.approx(mu_bound(BoundId.V3, r), rel=1e-15)
    lower, upper = mu_landen_bracket(r, 1)
    assert lower == pytest.approx(mu_bound(BoundId.U5, r), rel=1e-15)
    assert upper == pytest.approx(mu_bound(BoundId.V2, r), rel=1e-15)


# pairs where upper - mu (about 2**-p L(r, -p)**2) exceeds an ulp of mu
@pytest.mark.parametrize("r, p", [(1e-3, 0), (1e-3, 1), (0.2, 2), (0.5, 2), (0.8, 3), (0.99, 4)])
def test_bracket_contains(r, p):
    lower, upper = mu_landen_bracket(r, p)
    assert lower < mu(r) < upper
    assert upper - lower == pytest.approx(LOG4 / 2**p, rel=1e-14)


@pytest.mark.parametrize("p", range(0, 17))
def test_bracket_converges(p):
    for r in (1e-3, 0.5, 0.999):
        lower, upper = mu_landen_bracket(r, p)
        m = mu(r)
        assert max(m - lower, upper - m) <= LOG4 / 2**p + 4 * math.ulp(m)


def test_mu_plus_log():
    assert mu_plus_log(1e-7) == pytest.approx(LOG4, abs=1e-6)
    # the approach to 0 at r = 1 is only logarithmic: mu(r) ~ pi**2 / (4 log(4/r'))
    assert mu_plus_log(1 - 1e-7) == pytest.approx(0.2711, abs=1e-3)
    assert 0.0 < mu_plus_log(0.5) < LOG4
    assert mu_plus_log_monotone_check([k / 100 for k in range(1, 100)])
    with pytest.raises(DomainError):
        mu_plus_log_monotone_check([0.5, 0.4])


@given(unit)
def test_mu_between_simple_bounds(r):
    if not 1e-6 < r < 0.999:
        return
    m = mu(r)
    assert mu_bound(BoundId.U4, r) < m < mu_bound(BoundId.V3, r)
