"""The Groetzsch modulus mu(r) and its elementary lower/upper bounds.

mu(r) = (pi/2) K(r') / K(r) is a decreasing homeomorphism of (0, 1) onto
(0, inf) with mu(r) mu(r') = pi**2/4 and mu(r) = 2**p mu(L(r, p)).
"""

import enum
import math

from .core import (
    DomainError,
    _landen_unchecked,
    _log,
    _log_complement_sq,
    _log_prime,
    _log_down,
    _partner,
    check_depth,
    check_unit,
)
from .elliptic import agm

SELF_DUAL = math.sqrt(0.5)
PI2_4 = math.pi**2 / 4.0
LOG2 = math.log(2.0)
LOG4 = math.log(4.0)


class BoundId(enum.Enum):
    """Elementary bounds of mu: ``U1..U5`` from below, ``V1..V3`` from above."""

    U1 = ("lower", 1)
    U2 = ("lower", 2)
    U3 = ("lower", 3)
    U4 = ("lower", 4)
    U5 = ("lower", 5)
    V1 = ("upper", 1)
    V2 = ("upper", 2)
    V3 = ("upper", 3)

    @property
    def family(self):
        return self.value[0]

    @property
    def index(self):
        return self.value[1]

    @classmethod
    def lookup(cls, family, index):
        for member in cls:
            if member.value == (family, index):
                return member
        raise DomainError(f"no bound ({family}, {index})", (family, index))

    @classmethod
    def parse(cls, name):
        """Accept ``u3``, ``V2``, ``BoundId.U1`` or a member itself."""
        if isinstance(name, cls):
            return name
        try:
            return cls[str(name).upper()]
        except KeyError:
            raise DomainError(f"unknown bound {name!r}", name) from None


def _mu_pair(r, rp):
    # (pi/2) K(r')/K(r) with K(x) = pi/(2 AG(1, x')) and both moduli supplied
    return 0.5 * math.pi * agm(1.0, rp) / agm(1.0, r)


# Below this log r the asymptotic mu(r) = log(4/r) + O(r**2 log r) is exact
# in binary64; it also covers moduli too small to be represented.
LOG_ASYMPTOTIC = -46.0


def _mu_small(x, log_x, xp):
    # mu(x) for x <= 1/sqrt(2)
    if log_x < LOG_ASYMPTOTIC:
        return LOG4 - log_x
    return _mu_pair(x, xp)


def mu(r):
    """Groetzsch modulus mu(r).

    Evaluated directly for r <= 1/sqrt(2) and through the reciprocal
    identity mu(r) = pi**2 / (4 mu(r')) above it, so the small values of mu
    near r = 1 keep their relative accuracy.
    """
    r = check_unit(r)
    if r <= SELF_DUAL:
        return _mu_small(r, _log(r), _partner(r))
    return PI2_4 / _mu_small(_partner(r), _log_prime(r), float(r))


def mu_landen_identity_residual(r, p):
    """Relative residual of mu(r) = 2**p mu(L(r, p))."""
    r = check_unit(r)
    p = check_depth(p, limit=8)
    if p == 0:
        return 0.0
    m = mu(r)
    return abs(m - 2.0**p * mu(_landen_unchecked(r, p))) / m


# arth(x) for x -> 1 written in terms of 1 - x, which callers compute
# without cancellation.
def _arth_from_gap(one_minus_x):
    return 0.5 * math.log((2.0 - one_minus_x) / one_minus_x)


def _u1(r, rp, lr):
    # x = r'**(1/4) = (1 - r**2)**(1/8); 1 - x = -expm1(log(1 - r**2)/8)
    gap = -math.expm1(_log_complement_sq(r) / 8.0)
    return _arth_from_gap(gap)


def _v1(r, rp, lr):
    gap = -math.expm1(lr / 4.0)
    return PI2_4 / _arth_from_gap(gap)


_FORMULAS = {
    BoundId.U1: _u1,
    BoundId.U2: lambda r, rp, lr: 2.0 * math.log1p(math.sqrt(rp)) - lr,
    BoundId.U3: lambda r, rp, lr: math.log1p(3.0 * rp) - lr,
    BoundId.U4: lambda r, rp, lr: -lr,
    BoundId.U5: lambda r, rp, lr: math.log1p(rp) - lr,
    BoundId.V1: _v1,
    BoundId.V2: lambda r, rp, lr: LOG2 + math.log1p(rp) - lr,
    BoundId.V3: lambda r, rp, lr: LOG4 - lr,
}


def mu_bound(bound, r):
    """Evaluate the elementary bound ``bound`` of mu at r.

    ====  ===========================  ====  =======================
    u1    arth(r'**(1/4))              v1    pi**2/(4 arth(r**(1/4)))
    u2    log((1 + sqrt(r'))**2 / r)   v2    log(2 (1 + r') / r)
    u3    log((1 + 3 r') / r)          v3    log(4 / r)
    u4    log(1 / r)
    u5    log((1 + r') / r)
    ====  ===========================  ====  =======================
    """
    bound = BoundId.parse(bound)
    r = check_unit(r)
    return _FORMULAS[bound](r, _partner(r), _log(r))


def _positive_y(y):
    y = float(y)
    if not y > 0.0:
        raise DomainError(f"y must be positive, got {y!r}", y)
    return y


def _u1_inv(y):
    # sqrt(1 - th**8) with 1 - th = 2/(1 + e**(2y)) to avoid cancellation
    e = math.exp(-2.0 * y)
    th = (1.0 - e) / (1.0 + e)
    one_minus = 2.0 * e / (1.0 + e)
    t2 = th * th
    return math.sqrt(one_minus * (1.0 + th) * (1.0 + t2) * (1.0 + t2 * t2))


def _u3_inv(y):
    # (e**y + 3 sqrt(8 + e**(2y))) / (9 + e**(2y)), scaled by e**(-2y)
    e = math.exp(-y)
    return (1.0 + 3.0 * math.sqrt(8.0 * e * e + 1.0)) * e / (9.0 * e * e + 1.0)


def _u5_inv(y):
    # 2 e**y / (1 + e**(2y)) = 1 / cosh(y)
    return 1.0 / math.cosh(y)


def _v1_inv(y):
    return math.tanh(PI2_4 / y) ** 4


def _v2_inv(y):
    m = max(y, LOG2)
    e = math.exp(-m)
    return 4.0 * e / (4.0 * e * e + 1.0)


def _v3_inv(y):
    return 4.0 * math.exp(-max(y, LOG4))


_INVERSES = {
    BoundId.U1: _u1_inv,
    BoundId.U3: _u3_inv,
    BoundId.U4: lambda y: math.exp(-y),
    BoundId.U5: _u5_inv,
    BoundId.V1: _v1_inv,
    BoundId.V2: _v2_inv,
    BoundId.V3: _v3_inv,
}

# Lower end of the range of each bound on (0, 1]; the inverses of v2 and v3
# are extended by the constant 1 below it.
CLAMP = {BoundId.V2: LOG2, BoundId.V3: LOG4}


def mu_bound_inverse(bound, y):
    """Inverse of an elementary bound; u2 has no closed-form inverse."""
    bound = BoundId.parse(bound)
    y = _positive_y(y)
    if bound is BoundId.U2:
        raise DomainError("the inverse of u2 is not provided", y)
    return _INVERSES[bound](y)


def mu_landen_bracket(r, p):
    """(2**-p log(1/s), 2**-p log(4/s)) with s = L(r, -p); brackets mu(r)."""
    r = check_unit(r)
    p = check_depth(p, limit=16)
    if p < 0:
        raise DomainError(f"p must be non-negative, got {p}", p)
    scale = 2.0**-p
    lower = -_log_down(r, p) * scale
    return lower, lower + LOG4 * scale


def mu_plus_log(r):
    """mu(r) + log(r), decreasing from log 4 to 0 on (0, 1)."""
    r = check_unit(r)
    return mu(r) + math.log(r)


def mu_plus_log_monotone_check(r_grid):
    """True iff mu(r) + log(r) strictly decreases along the sorted grid and
    stays inside (0, log 4)."""
    r_grid = [check_unit(r) for r in r_grid]
    if len(r_grid) < 2:
        raise DomainError("need at least two grid points", len(r_grid))
    if any(b <= a for a, b in zip(r_grid, r_grid[1:])):
        raise DomainError("grid must be sorted ascending without repeats", None)
    values = [mu_plus_log(r) for r in r_grid]
    if not all(0.0 < v < LOG4 for v in values):
        return False
    return all(b < a for a, b in zip(values, values[1:]))
