"""The inverse modulus mu^{-1}(y).

Two independent routes are provided: Jacobi's theta-series quotient, used
as the reference, and Landen approximants that push the argument far out
where an elementary bound of mu is essentially exact,

    f_k(y, p) = L(u^{-1}(2**p y), p)  <  mu^{-1}(y)  <  g_k(y, p) = L(v^{-1}(2**p y), p),

with (u, v) = (u1, v1), (u3, v2), (u4, v3) for k = 1, 2, 3.  The depth p
counts ascending Landen steps.
"""

import enum
import math
from dataclasses import dataclass

from .core import ONE_MINUS, DomainError, Modulus, _landen_unchecked, ascend_exponential, check_depth
from .modulus import LOG2, LOG4, PI2_4, BoundId, mu_bound_inverse

HALF_PI = 0.5 * math.pi
THETA_SWITCH = 0.25 * math.pi
SWITCH = HALF_PI
ORACLE_TERMS = 16
INTERACTIVE_TERMS = 8
PRODUCTION_DEPTH = 5
MAX_APPROX_DEPTH = 16


class ApproximantId(enum.Enum):
    F1 = "f1"
    F2 = "f2"
    F3 = "f3"
    G1 = "g1"
    G2 = "g2"
    G3 = "g3"

    @property
    def bound(self):
        return _BOUND_OF[self]

    @property
    def is_upper(self):
        return self.value.startswith("g")

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            raise DomainError(f"unknown approximant {name!r}", name) from None


_BOUND_OF = {
    ApproximantId.F1: BoundId.U1,
    ApproximantId.F2: BoundId.U3,
    ApproximantId.F3: BoundId.U4,
    ApproximantId.G1: BoundId.V1,
    ApproximantId.G2: BoundId.V2,
    ApproximantId.G3: BoundId.V3,
}


@dataclass(frozen=True)
class ErrorTableRow:
    """One line of an approximation error table; ``flag`` is set instead of
    the numbers when the approximant is undefined at ``y``."""

    y: float
    reference: float
    approx: float
    error: float
    flag: str = ""


def _positive_y(y):
    y = float(y)
    if not y > 0.0 or math.isnan(y):
        raise DomainError(f"y must be positive, got {y!r}", y)
    return y


def _theta_quotient(y, n_terms):
    num = 0.0
    den = 0.0
    # smallest terms first
    for n in range(n_terms - 1, -1, -1):
        num += math.exp(-2.0 * y * (n + 0.5) ** 2)
        den += math.exp(-2.0 * y * (n + 1) ** 2)
    ratio = 2.0 * num / (1.0 + 2.0 * den)
    return ratio * ratio


def mu_inverse_theta(y, n_terms=ORACLE_TERMS):
    """mu^{-1}(y) from Jacobi's theta functions with nome q = exp(-2y).

    Below y = pi/4 the series converge slowly, so the value comes from
    mu^{-1}(y)**2 + mu^{-1}(pi**2/(4y))**2 = 1 instead.
    """
    y = _positive_y(y)
    if isinstance(n_terms, bool) or int(n_terms) != n_terms or not 1 <= n_terms <= 64:
        raise DomainError(f"n_terms must be an integer in [1, 64], got {n_terms!r}", n_terms)
    if y >= THETA_SWITCH:
        return _theta_quotient(y, int(n_terms))
    t = _theta_quotient(PI2_4 / y, int(n_terms))
    return math.sqrt((1.0 - t) * (1.0 + t))


def _exponential_form(approx, big_y):
    """Write bound^{-1}(Y) as 4 c exp(-Y'); returns (Y', c)."""
    if approx is ApproximantId.G3:
        return max(big_y, LOG4), 1.0
    if approx is ApproximantId.F3:
        return big_y, 0.25
    if approx is ApproximantId.G2:
        m = max(big_y, LOG2)
        e = math.exp(-m)
        return m, 1.0 / (1.0 + 4.0 * e * e)
    if approx is ApproximantId.F2:
        e2 = math.exp(-2.0 * big_y)
        return big_y, (1.0 + 3.0 * math.sqrt(1.0 + 8.0 * e2)) / (4.0 * (1.0 + 9.0 * e2))
    if approx is ApproximantId.F1:
        # sqrt(1 - th**8) = exp(-Y) sqrt(2 (1 + th)(1 + th**2)(1 + th**4) / (1 + e))
        e = math.exp(-2.0 * big_y)
        th = (1.0 - e) / (1.0 + e)
        t2 = th * th
        return big_y, 0.25 * math.sqrt(2.0 * (1.0 + th) * (1.0 + t2) * (1.0 + t2 * t2) / (1.0 + e))
    raise AssertionError(approx)


def mu_inverse_landen(y, approx, p):
    """Landen approximant ``approx`` (f1..f3, g1..g3) of mu^{-1}(y) at depth p.

    The f-approximants lie below mu^{-1}(y), the g-approximants above.  When
    2**p y falls below the range of v2 or v3 the bound inverse is clamped to
    1, which the Landen steps leave at 1; at depth 0 that is rejected since
    the approximant carries no information there.  Values that round to 1
    saturate at the largest double below 1.
    """
    y = _positive_y(y)
    approx = ApproximantId.parse(approx)
    p = check_depth(p, limit=MAX_APPROX_DEPTH)
    if p < 0:
        raise DomainError(f"depth must be non-negative, got {p}", p)
    big_y = math.ldexp(y, p)
    clamp = {ApproximantId.G2: LOG2, ApproximantId.G3: LOG4}.get(approx)
    if clamp is not None and big_y <= clamp:
        if p == 0:
            raise DomainError(f"{approx.value} is undefined at depth 0 for y <= {clamp:.6g}", y)
        return ONE_MINUS
    if approx is ApproximantId.G1:
        x = mu_bound_inverse(BoundId.V1, big_y)
        return float(_landen_unchecked(x, p)) if x < 1.0 else ONE_MINUS
    exponent, scale = _exponential_form(approx, big_y)
    return ascend_exponential(exponent, scale, p)


def mu_inverse(y):
    """mu^{-1}(y) by the depth-5 approximant g3 on [pi/2, inf).

    Smaller y are mapped there by mu^{-1}(y)**2 + mu^{-1}(pi**2/(4y))**2 = 1;
    the result then carries that complement (see :class:`Modulus`).
    """
    y = _positive_y(y)
    if y >= SWITCH:
        return mu_inverse_landen(y, ApproximantId.G3, PRODUCTION_DEPTH)
    t = mu_inverse_landen(PI2_4 / y, ApproximantId.G3, PRODUCTION_DEPTH)
    return Modulus(math.sqrt((1.0 - t) * (1.0 + t)), t)


def error_table(ys, approx, p):
    """Rows (y, theta reference, approximant, reference - approximant)."""
    approx = ApproximantId.parse(approx)
    rows = []
    for y in ys:
        try:
            ref = mu_inverse_theta(y, ORACLE_TERMS)
            val = mu_inverse_landen(y, approx, p)
        except DomainError as exc:
            nan = float("nan")
            rows.append(ErrorTableRow(float(y), nan, nan, nan, str(exc)))
            continue
        rows.append(ErrorTableRow(float(y), ref, val, ref - val))
    return rows


def mu_inverse_elementary_bounds(y):
    """Closed-form bounds of mu^{-1}(y) obtained by inverting u1, u3, u4, u5
    (lower) and v1, v2, v3 (upper)."""
    y = _positive_y(y)
    lowers = [mu_bound_inverse(b, y) for b in (BoundId.U1, BoundId.U3, BoundId.U4, BoundId.U5)]
    uppers = [mu_bound_inverse(b, y) for b in (BoundId.V1, BoundId.V2, BoundId.V3)]
    return lowers, uppers
