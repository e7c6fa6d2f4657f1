"""High-precision reference values computed with mpmath."""

import math

import mpmath

mp = mpmath.mp
PREC = 200


def _with_prec(fn):
    def wrapped(*args):
        with mpmath.workprec(PREC):
            return fn(*args)

    wrapped.__name__ = fn.__name__
    return wrapped


def _mpf(x):
    return mpmath.mpf(float(x)) if not isinstance(x, mpmath.mpf) else x


@_with_prec
def landen_mp(r, p):
    """L(r, p) in extended precision (an mpf)."""
    s = _mpf(r)
    for _ in range(abs(p)):
        if p > 0:
            s = 2 * mpmath.sqrt(s) / (1 + s)
        else:
            s = (s / (1 + mpmath.sqrt(1 - s * s))) ** 2
    return s


def landen_ref(r, p):
    with mpmath.workprec(PREC):
        return float(landen_mp(r, p))


def landen_complement_ref(r, p):
    """L(r', -p) with r' taken in extended precision before descending."""
    with mpmath.workprec(PREC):
        r = _mpf(r)
        return float(landen_mp(mpmath.sqrt(1 - r * r), -p))


def log_landen_down_ref(r, p):
    with mpmath.workprec(PREC):
        return float(mpmath.log(landen_mp(r, -p)))


def complement_ref(r):
    with mpmath.workprec(PREC):
        r = _mpf(r)
        return float(mpmath.sqrt(1 - r * r))


def ellipk_ref(r):
    """K(r) with modulus r (mpmath takes the parameter m = r**2)."""
    with mpmath.workprec(PREC):
        r = _mpf(r)
        return float(mpmath.ellipk(r * r))


def agm_ref(a, b):
    with mpmath.workprec(PREC):
        return float(mpmath.agm(_mpf(a), _mpf(b)))


@_with_prec
def mu_mp(r):
    r = _mpf(r)
    m = r * r
    return mpmath.pi / 2 * mpmath.ellipk(1 - m) / mpmath.ellipk(m)


def mu_ref(r):
    with mpmath.workprec(PREC):
        return float(mu_mp(r))


@_with_prec
def mu_inverse_mp(y):
    """mu^{-1}(y) = theta_2(q)**2 / theta_3(q)**2 with q = exp(-2y)."""
    q = mpmath.exp(-2 * _mpf(y))
    return (mpmath.jtheta(2, 0, q) / mpmath.jtheta(3, 0, q)) ** 2


def mu_inverse_ref(y):
    with mpmath.workprec(PREC):
        return float(mu_inverse_mp(y))


def phi_ref(K, r):
    with mpmath.workprec(PREC):
        return float(mu_inverse_mp(mu_mp(r) / _mpf(K)))


@_with_prec
def bound_inverse_mp(name, y):
    y = _mpf(y)
    if name == "v3":
        return 4 * mpmath.exp(-max(y, mpmath.log(4)))
    if name == "v2":
        e = mpmath.exp(-max(y, mpmath.log(2)))
        return 4 * e / (1 + 4 * e * e)
    if name == "u4":
        return mpmath.exp(-y)
    if name == "u3":
        e = mpmath.exp(y)
        return (e + 3 * mpmath.sqrt(8 + e * e)) / (9 + e * e)
    if name == "u5":
        return 1 / mpmath.cosh(y)
    if name == "u1":
        # 1 - tanh(y)**8 is about 16 exp(-2y); keep enough bits to resolve it
        with mpmath.workprec(PREC + int(3 * y) + 64):
            return +mpmath.sqrt(1 - mpmath.tanh(y) ** 8)
    if name == "v1":
        return mpmath.tanh(mpmath.pi**2 / (4 * y)) ** 4
    raise ValueError(name)


def approximant_ref(name, y, p):
    """f_k / g_k evaluated entirely in extended precision."""
    bound = {"f1": "u1", "f2": "u3", "f3": "u4", "g1": "v1", "g2": "v2", "g3": "v3"}[name]
    with mpmath.workprec(PREC):
        x = bound_inverse_mp(bound, _mpf(y) * 2**p)
        if x >= 1:
            return 1.0
        return float(landen_mp(x, p))


def ulps(a, b):
    """|a - b| in units of the last place of b."""
    return abs(float(a) - float(b)) / math.ulp(float(b))
