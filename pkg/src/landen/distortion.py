"""The distortion function phi_K(r) = mu^{-1}(mu(r) / K) and its bounds."""

import math
from dataclasses import dataclass
from typing import Optional

from .core import (
    MIN_NORMAL,
    DomainError,
    _landen_unchecked,
    _log,
    _log_down,
    _steps,
    ascend_exponential,
    check_depth,
    check_unit,
    complement,
    descend_exponential_complement,
)
from .inverse import PRODUCTION_DEPTH, SWITCH, ApproximantId, mu_inverse, mu_inverse_landen
from .modulus import LOG2, LOG4, PI2_4, BoundId, mu, mu_bound, mu_bound_inverse

MAX_PHI_DEPTH = 16


def _check_k(K, minimum=0.0, strict=True):
    K = float(K)
    ok = K > minimum if strict else K >= minimum
    if not ok or math.isinf(K) or math.isnan(K):
        op = ">" if strict else ">="
        raise DomainError(f"K must be finite and {op} {minimum:g}, got {K!r}", K)
    return K


def _check_phi_depth(p):
    p = check_depth(p, limit=MAX_PHI_DEPTH)
    if p < 0:
        raise DomainError(f"p must be non-negative, got {p}", p)
    return p


@dataclass(frozen=True)
class PhiBoundsReport:
    """Bounds of phi_K(r) for K > 1.

    ``sharp_upper`` is None where v2(r)/K drops below log 2, the range of
    v2 on (0, 1], so that v2^{-1} is no longer a true inverse there.
    """

    classical_lower: float
    classical_upper: float
    sharp_lower: float
    sharp_upper: Optional[float]
    sandwich_lower: float
    sandwich_upper: float


def phi_reference(K, r):
    """phi_K(r) composed from :func:`mu` and :func:`mu_inverse`."""
    K = _check_k(K)
    r = check_unit(r)
    return mu_inverse(mu(r) / K)


def phi_landen(K, r, p):
    """L(4**(1 - 1/K) L(r, -p)**(1/K), p), a Landen majorant of phi_K(r).

    Raises :class:`DomainError` carrying the inner value when
    4**(1 - 1/K) L(r, -p)**(1/K) >= 1, where the outer Landen steps are
    undefined.
    """
    K = _check_k(K, 1.0, strict=False)
    r = check_unit(r)
    p = _check_phi_depth(p)
    inv_k = 1.0 / K
    s = _steps(r, -p) if p else r
    if float(s) >= MIN_NORMAL:
        # the literal formula; pow keeps full relative accuracy where
        # exp(-exponent) would amplify the rounding of a large exponent
        inner = 4.0 ** (1.0 - inv_k) * float(s) ** inv_k
        if not inner < 1.0:
            raise _inner_error(K, r, p, inner)
        return float(_landen_unchecked(inner, p))
    # s underflowed; inner = 4 exp(-exponent) from the carried logarithm
    exponent = (LOG4 - _log(s)) * inv_k
    if not exponent > LOG4:
        raise _inner_error(K, r, p, 4.0 * math.exp(-exponent))
    return ascend_exponential(exponent, 1.0, p)


def _inner_error(K, r, p, inner):
    return DomainError(
        f"phi_landen undefined for K={K:g}, r={r:g}, p={p}: "
        f"inner value {inner:.6g} is not below 1",
        inner,
    )


def phi_lm(K, r, p=PRODUCTION_DEPTH):
    """g3(2**-p log(4 / L(r, -p)) / K, 5): the upper Landen bound of mu(r)
    divided by K, inverted by the depth-5 approximant g3."""
    K = _check_k(K, 1.0, strict=False)
    r = check_unit(r)
    p = _check_phi_depth(p)
    y = math.ldexp(LOG4 - _log_down(r, p), -p) / K
    return mu_inverse_landen(y, ApproximantId.G3, PRODUCTION_DEPTH)


def _phi_below_one(K, r, p):
    """sqrt(1 - LM(1/K, r', p)**2) for K < 1 without cancellation.

    LM(1/K, r', p) = mu^{-1}(y) is close to 1 here, so its complement is
    taken either as mu^{-1}(pi**2/(4y)) or, for y >= pi/2, as the descending
    Landen sequence of the complement of the g3 starting value.
    """
    y = math.ldexp(LOG4 - _log_down(complement(r), p), -p) * K
    if y < SWITCH:
        return mu_inverse_landen(PI2_4 / y, ApproximantId.G3, PRODUCTION_DEPTH)
    exponent = max(math.ldexp(y, PRODUCTION_DEPTH), LOG4)
    return descend_exponential_complement(exponent, PRODUCTION_DEPTH)


def phi(K, r):
    """phi_K(r) for any K > 0.

    K >= 1 uses :func:`phi_lm` at depth 5; K < 1 goes through
    phi_K(r)**2 + phi_{1/K}(r')**2 = 1.
    """
    K = _check_k(K)
    r = check_unit(r)
    if K >= 1.0:
        return phi_lm(K, r, PRODUCTION_DEPTH)
    return _phi_below_one(K, r, PRODUCTION_DEPTH)


def phi_bounds(K, r):
    K = _check_k(K, 1.0)
    r = check_unit(r)
    u1 = mu_bound(BoundId.U1, r)
    v2 = mu_bound(BoundId.V2, r)
    v3 = mu_bound(BoundId.V3, r)
    classical_lower = r ** (1.0 / K)
    sharp_upper = mu_bound_inverse(BoundId.V2, v2 / K) if v2 / K > LOG2 else None
    return PhiBoundsReport(
        classical_lower=classical_lower,
        classical_upper=4.0 ** (1.0 - 1.0 / K) * classical_lower,
        sharp_lower=mu_bound_inverse(BoundId.U1, u1 / K),
        sharp_upper=sharp_upper,
        sandwich_lower=mu_bound_inverse(BoundId.U1, v3 / K),
        sandwich_upper=mu_bound_inverse(BoundId.V3, max(u1 / K, LOG4)),
    )


def sharp_upper_radius(K):
    """r0 = v2^{-1}(K log 2): ``sharp_upper`` of :func:`phi_bounds` is
    defined exactly for r < r0, since v2 decreases onto (log 2, inf)."""
    K = _check_k(K, 1.0)
    return mu_bound_inverse(BoundId.V2, K * LOG2)


def sandwich_upper_radius(K):
    """r0 = u1^{-1}(K log 4): below it ``sandwich_upper`` of
    :func:`phi_bounds` is v3^{-1}(u1(r)/K); from r0 on the max clamps it
    to 1."""
    K = _check_k(K, 1.0)
    return mu_bound_inverse(BoundId.U1, K * LOG4)


def phi_pyth_residual(K, r, p=PRODUCTION_DEPTH):
    """|a**2 + b**2 - 1| with a = LM(K, r, p) and b the K < 1 branch at
    (1/K, r') built from LM at the same depth."""
    K = _check_k(K, 1.0, strict=False)
    r = check_unit(r)
    p = _check_phi_depth(p)
    a = phi_lm(K, r, p)
    b = _phi_below_one(1.0 / K, complement(r), p)
    return abs(a * a + b * b - 1.0)
