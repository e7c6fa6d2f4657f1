"""Ascending and descending Landen sequences.

For r in (0, 1) the sequence is L(r, 0) = r with

    L(r, p + 1) = 2 sqrt(L(r, p)) / (1 + L(r, p))
    L(r, -p - 1) = (L(r, -p) / (1 + sqrt(1 - L(r, -p)**2)))**2

so that L(., -p) inverts L(., p).  Everything here is plain binary64
arithmetic from :mod:`math`.
"""

import math
import sys

MAX_DEPTH = 64

# Largest double below 1 and smallest positive double; iterates are clamped
# to these instead of leaving the open interval.
ONE_MINUS = math.nextafter(1.0, 0.0)
TINY = math.ulp(0.0)
SELF_DUAL = math.sqrt(0.5)
LOG2 = math.log(2.0)
MIN_NORMAL = sys.float_info.min
LOG_MIN_NORMAL = math.log(MIN_NORMAL)


class DomainError(ValueError):
    """An argument outside the domain of a function.

    ``value`` carries the offending (possibly intermediate) quantity so
    callers can report it.
    """

    def __init__(self, message, value=None):
        super().__init__(message)
        self.value = value


class Modulus(float):
    """A modulus r in (0, 1) that remembers its complement r' = sqrt(1 - r**2).

    Near r = 1 the double nearest to r no longer determines r' to full
    relative precision, so :func:`landen` and :func:`complement` return
    values of this type and every function of the package reuses the carried
    complement instead of recomputing it.  The logarithms of both members are
    kept as well, so a member that underflows (or a float value that
    saturates at 1) still carries its magnitude.  In arithmetic it is a plain
    float.
    """

    def __new__(cls, value, prime, log_value=None, log_prime=None):
        obj = super().__new__(cls, min(max(value, TINY), ONE_MINUS))
        obj.prime = min(max(float(prime), TINY), ONE_MINUS)
        obj.log_value = math.log(value) if log_value is None else log_value
        obj.log_prime = math.log(prime) if log_prime is None else log_prime
        return obj

    def __reduce__(self):
        return (Modulus, (float(self), self.prime, self.log_value, self.log_prime))


def check_unit(r, name="r"):
    """Return ``r`` as a float, rejecting anything outside (0, 1)."""
    if isinstance(r, Modulus):
        return r
    r = float(r)
    if not 0.0 < r < 1.0:
        raise DomainError(f"{name} must lie in the open interval (0, 1), got {r!r}", r)
    return r


def check_depth(p, limit=MAX_DEPTH):
    if isinstance(p, bool) or int(p) != p:
        raise DomainError(f"Landen index must be an integer, got {p!r}", p)
    p = int(p)
    if abs(p) > limit:
        raise DomainError(f"|p| must not exceed {limit}, got {p}", p)
    return p


def _complement(r):
    return math.sqrt((1.0 - r) * (1.0 + r))


def _partner(r):
    """r' for r in (0, 1), taken from a :class:`Modulus` when available."""
    if isinstance(r, Modulus):
        return r.prime
    return _complement(r)


def _log(r):
    return r.log_value if isinstance(r, Modulus) else math.log(r)


def _log_prime(r):
    """log r' without cancellation near either end."""
    if isinstance(r, Modulus):
        return r.log_prime
    if r < 0.5:
        return 0.5 * math.log1p(-r * r)
    return 0.5 * (math.log1p(-r) + math.log1p(r))


def _log_complement_sq(r):
    return 2.0 * _log_prime(r)


def modulus_key(r):
    """log(r / r'), strictly increasing in r.

    Orders moduli that share a float value near 0 or 1 (saturated Landen
    iterates) by the complement or logarithm they carry.
    """
    r = check_unit(r)
    return _log(r) - _log_prime(r)


def key_from_log(log_r):
    """:func:`modulus_key` of the modulus exp(log_r), for log_r < 0."""
    return log_r - 0.5 * math.log(-math.expm1(2.0 * log_r))


def _up(r):
    s = 2.0 * math.sqrt(r) / (1.0 + r)
    return s if s < 1.0 else ONE_MINUS


def _down(r):
    s = r / (1.0 + _complement(r))
    s *= s
    return s if s > 0.0 else TINY


def _from_log(log_x):
    return math.exp(log_x) if log_x > LOG_MIN_NORMAL else 0.0


def _ascend_pair(s, c, ls, lc):
    # (s, c) -> (2 sqrt(s)/(1 + s), (c/(1 + s))**2) together with the logs.
    # A member below the normal range is held as 0 and rebuilt from its log.
    d = math.log1p(s)
    ls_new = LOG2 + 0.5 * ls - d
    lc_new = 2.0 * (lc - d)
    s_new = 2.0 * math.sqrt(s) / (1.0 + s) if s >= MIN_NORMAL else _from_log(ls_new)
    c_new = (c / (1.0 + s)) ** 2
    if c_new < MIN_NORMAL:
        c_new = _from_log(lc_new)
    # The squaring rule doubles relative errors, so if it produced the
    # larger member that member is rebuilt from the smaller one; the larger
    # log is always taken from the smaller member to avoid cancellation.
    if c_new > s_new:
        c_new = _complement(s_new)
        lc_new = 0.5 * math.log1p(-s_new * s_new)
    else:
        ls_new = 0.5 * math.log1p(-c_new * c_new)
    return s_new, c_new, ls_new, lc_new


def _pair_steps(s, c, p, ls=None, lc=None):
    """Step the pair (L(r, k), L(r', -k)) from k = 0 to k = p.

    A descending step of r is an ascending step of r' with the roles
    swapped.
    """
    ls = math.log(s) if ls is None else ls
    lc = math.log(c) if lc is None else lc
    for _ in range(abs(p)):
        if p > 0:
            s, c, ls, lc = _ascend_pair(s, c, ls, lc)
        else:
            c, s, lc, ls = _ascend_pair(c, s, lc, ls)
    return Modulus(s, c, ls, lc)


def _steps(r, p):
    return _pair_steps(float(r), _partner(r), p, _log(r), _log_prime(r))


def complement(r):
    """Complementary modulus sqrt(1 - r**2), factored to keep digits near r = 1.

    The result is a :class:`Modulus` carrying r, so complement(complement(r))
    returns r exactly.
    """
    r = check_unit(r)
    return Modulus(_partner(r), float(r), _log_prime(r), _log(r))


def landen_step_up(r):
    """2 sqrt(r) / (1 + r)."""
    r = check_unit(r)
    return _steps(r, 1)


def landen_step_down(r):
    """(r / (1 + r'))**2."""
    r = check_unit(r)
    return _steps(r, -1)


def landen(r, p):
    """L(r, p): ``|p|`` Landen steps, ascending for p > 0, descending for p < 0.

    The complement L(r', -p) is carried along, which keeps both members
    accurate: ascending iterates converge to 1 quadratically and round to
    1.0 after a few steps, while their complements stay representable.  The
    float value saturates at the largest double below 1 (or, descending, at
    the smallest positive double); the carried complement does not.
    """
    r = check_unit(r)
    p = check_depth(p)
    if p == 0:
        return r
    return _steps(r, p)


def _landen_unchecked(r, p):
    if p == 0:
        return r
    return _steps(r, p)


def log_landen_down(r, p):
    """log L(r, -p) for p >= 0.

    Carried in the logarithm so deep descents that would underflow in
    binary64 stay finite: log L(s, -1) = 2 (log s - log(1 + s')).
    """
    r = check_unit(r)
    p = check_depth(p)
    if p < 0:
        raise DomainError(f"p must be non-negative, got {p}", p)
    return _log_down(r, p)


def _log_down(r, p):
    return _steps(r, -p).log_value if p else _log(r)


def ascend_exponential(exponent, scale, p):
    """L(4 * scale * exp(-exponent), p) for p >= 0.

    Each ascending step maps 4 c exp(-Y) to 4 c' exp(-Y/2) with
    c' = sqrt(c) / (1 + x), so the iterate is rebuilt from exp(-Y / 2**k)
    and never underflows on the way up even when the starting value does.
    Results that round to 1 saturate at the largest double below 1.
    """
    x = 4.0 * scale * math.exp(-exponent)
    c = scale
    for k in range(1, p + 1):
        c = math.sqrt(c) / (1.0 + x)
        x = 4.0 * c * math.exp(-math.ldexp(exponent, -k))
    return x if x < 1.0 else ONE_MINUS


def descend_exponential_complement(exponent, p):
    """Complement of L(4 exp(-exponent), p), i.e. L(sqrt(1 - 16 exp(-2 exponent)), -p).

    By L(x, k)**2 + L(x', -k)**2 = 1 the complement of every descending
    iterate is the matching ascending iterate of x = 4 exp(-exponent), so
    each step divides by 1 + L(x, k) rebuilt in exponential form instead of
    recomputing a complement of a number close to 1.
    """
    x = 4.0 * math.exp(-exponent)
    if x >= 1.0:
        return 0.0
    s = math.sqrt((1.0 - x) * (1.0 + x))
    c = 1.0
    for k in range(1, p + 1):
        s = s / (1.0 + x)
        s *= s
        c = math.sqrt(c) / (1.0 + x)
        x = 4.0 * c * math.exp(-math.ldexp(exponent, -k))
    return s if s > 0.0 else TINY


def _w_near_zero(r, rp):
    q = r / (1.0 + rp)
    return 1.0 - q**4


def _w_near_one(r, rp):
    r2 = r * r
    return (4.0 * (2.0 - r2) * rp - 8.0 * (1.0 - r) * (1.0 + r)) / (r2 * r2)


# Above this modulus the rational form of w is the more accurate of the two
# equivalent expressions (see tests/test_core.py::test_w_forms_cancel_at_opposite_ends).
W_SWITCH = 0.97


def landen_w(r):
    """Auxiliary w = 1 - r**4/(1 + r')**4 used by the closed form of L(r, -2)."""
    r = check_unit(r)
    rp = _partner(r)
    if r <= W_SWITCH:
        return _w_near_zero(r, rp)
    return _w_near_one(r, rp)


def landen_closed_form(r, p):
    """Explicit formula for L(r, p) when -2 <= p <= 2."""
    r = check_unit(r)
    p = check_depth(p)
    if p == 0:
        return r
    if p == 1:
        return 2.0 * math.sqrt(r) / (1.0 + r)
    if p == 2:
        sr = math.sqrt(r)
        return 2.0 * math.sqrt(2.0) * math.sqrt(sr) * math.sqrt(1.0 + r) / (1.0 + sr) ** 2
    rp = _partner(r)
    if p == -1:
        return r * r / (1.0 + rp) ** 2
    if p == -2:
        w = landen_w(r)
        return r**4 / ((1.0 + math.sqrt(w)) ** 2 * (1.0 + rp) ** 4)
    raise DomainError(f"closed forms are only available for -2 <= p <= 2, got {p}", p)


def landen_lower_bound(r, p):
    """sqrt(1 - r'**(2**(p + 1))), a lower bound for L(r, p + 1).

    Returned as a :class:`Modulus` with complement r'**(2**p), so it can be
    compared with L(r, p + 1) through :func:`modulus_key` after both round
    to 1.
    """
    r = check_unit(r)
    p = check_depth(p)
    if p < 0:
        raise DomainError(f"p must be non-negative, got {p}", p)
    log_prime = math.ldexp(_log_prime(r), p)
    gap = -math.expm1(2.0 * log_prime)
    return Modulus(math.sqrt(gap), _from_log(log_prime), 0.5 * math.log(gap), log_prime)
