"""Arithmetic-geometric mean and the complete elliptic integral K(r)."""

import itertools
import math
from dataclasses import dataclass

from .core import DomainError, _partner, _steps, check_unit

EPS = 2.0**-52
MAX_AGM_ITER = 32
MAX_PRODUCT_TERMS = 32
DEFAULT_PRODUCT_TERMS = 6

HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class AgmTrace:
    """Iterates a_0..a_n, b_0..b_n of the AGM together with its limit."""

    a_seq: tuple
    b_seq: tuple
    limit: float


def _positive(x, name):
    x = float(x)
    if not x > 0.0 or math.isinf(x):
        raise DomainError(f"{name} must be a positive finite number, got {x!r}", x)
    return x


def _iterates(a, b):
    # (a_n, b_n) for b <= a; once the relative gap is within 4 machine
    # epsilons (or after 32 steps) the pair is replaced by the limit
    # (a_n + b_n)/2 and stays there.
    n = 0
    while True:
        if a - b <= 4.0 * EPS * a or n == MAX_AGM_ITER:
            m = a if a == b else 0.5 * (a + b)
            while True:
                yield m, m
        yield a, b
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        n += 1


def agm(a, b):
    """Arithmetic-geometric mean AG(a, b) of two positive numbers.

    Stops once the relative gap is within 4 machine epsilons, or after
    32 iterations.
    """
    a = _positive(a, "a")
    b = _positive(b, "b")
    if b > a:
        a, b = b, a
    for x, y in _iterates(a, b):
        if x == y:
            return x


def agm_trace(a, b, n):
    """Record the first ``n`` AGM iterates for 0 < b < a.

    The iterates are those of :func:`agm`; after it terminates they stay at
    the limit.
    """
    a = _positive(a, "a")
    b = _positive(b, "b")
    if not b < a:
        raise DomainError(f"agm_trace requires b < a, got a={a!r}, b={b!r}", b)
    if isinstance(n, bool) or int(n) != n or not 0 <= n <= MAX_AGM_ITER:
        raise DomainError(f"n must be an integer in [0, {MAX_AGM_ITER}], got {n!r}", n)
    pairs = list(itertools.islice(_iterates(a, b), int(n) + 1))
    return AgmTrace(tuple(x for x, _ in pairs), tuple(y for _, y in pairs), agm(a, b))


def _descending(r, n):
    """L(r, -1), ..., L(r, -n)."""
    s = r
    for _ in range(n):
        s = _steps(s, -1)
        yield s


def ellint_k_agm(r):
    """K(r) = pi / (2 AG(1, r')) (Gauss)."""
    r = check_unit(r)
    return math.pi / (2.0 * agm(1.0, _partner(r)))


def _check_terms(n_terms):
    if isinstance(n_terms, bool) or int(n_terms) != n_terms or not 0 <= n_terms <= MAX_PRODUCT_TERMS:
        raise DomainError(
            f"n_terms must be an integer in [0, {MAX_PRODUCT_TERMS}], got {n_terms!r}", n_terms
        )
    return int(n_terms)


def ellint_k_landen_product(r, n_terms=DEFAULT_PRODUCT_TERMS):
    """Partial product (pi/2) * prod_{n=1}^{n_terms} (1 + L(r, -n))."""
    r = check_unit(r)
    n_terms = _check_terms(n_terms)
    prod = 1.0
    for s in _descending(r, n_terms):
        prod *= 1.0 + s
    return HALF_PI * prod


def _log_mean1(a, b):
    if a == b:
        return a
    # log(a/b) as log1p keeps the quotient accurate when a ~ b
    return (a - b) / math.log1p((a - b) / b)


def log_mean(a, b, t=1.0):
    """Logarithmic mean of order t: L(a**t, b**t)**(1/t), with L(a, a) = a."""
    a = _positive(a, "a")
    b = _positive(b, "b")
    t = _positive(t, "t")
    if t == 1.0:
        return _log_mean1(a, b)
    return _log_mean1(a**t, b**t) ** (1.0 / t)


def agm_product_identity_residual(s, n_terms=8):
    """|AG(1, s) - prod_{n=0}^{n_terms-1} (1 + L(s, n))/2|.

    The factors use the ascending iterates: AG(1, s) = (1 + s)/2 AG(1, L(s, 1))
    telescopes to this product, whose factors tend to 1.
    """
    s = check_unit(s)
    n_terms = _check_terms(n_terms)
    prod = 1.0
    x = s
    for _ in range(n_terms):
        prod *= 0.5 * (1.0 + x)
        x = _steps(x, 1)
    return abs(agm(1.0, s) - prod)
