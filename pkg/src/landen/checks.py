"""Verification suites.

Each suite evaluates the identities and inequalities of one module on
grids and records every violation.  A suite passes iff no check failed.
"""

import math
from dataclasses import dataclass, field

from . import grids
from .core import (
    DomainError,
    complement,
    key_from_log,
    landen,
    landen_closed_form,
    log_landen_down,
    modulus_key,
)
from .distortion import phi, phi_bounds, phi_landen, phi_lm, phi_pyth_residual, phi_reference
from .elliptic import (
    agm,
    agm_trace,
    ellint_k_agm,
    ellint_k_landen_product,
    log_mean,
)
from .inverse import (
    ApproximantId,
    mu_inverse,
    mu_inverse_landen,
    mu_inverse_theta,
)
from .modulus import (
    PI2_4,
    BoundId,
    mu,
    mu_bound,
    mu_bound_inverse,
    mu_landen_bracket,
)

DEFAULT_DENSITY = grids.INTERIOR_POINTS


@dataclass(frozen=True)
class Failure:
    description: str
    inputs: tuple
    observed: float
    tolerance: object = None


@dataclass
class InvariantReport:
    name: str
    description: str
    checks_run: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures


@dataclass
class SuiteResult:
    suite_name: str
    checks_run: int = 0
    failures: list = field(default_factory=list)
    invariants: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures


class _Recorder:
    def __init__(self, report, tolerance):
        self.report = report
        self.tolerance = tolerance

    def expect(self, ok, inputs, observed, tolerance=None):
        self.report.checks_run += 1
        if not ok:
            self.report.failures.append(
                Failure(self.report.description, tuple(inputs), observed, tolerance)
            )

    def within(self, error, inputs, tolerance=None):
        tolerance = self.tolerance if tolerance is None else tolerance
        self.expect(error <= tolerance, inputs, error, tolerance)

    def increasing(self, values, points, label="strict"):
        for a, b, x, y in zip(values, values[1:], points, points[1:]):
            self.expect(a < b, (x, y), b - a, label)


@dataclass
class Settings:
    """Grid density and tolerance overrides shared by all suites."""

    density: int = DEFAULT_DENSITY
    tolerances: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.density < 2:
            raise ValueError(f"grid density must be at least 2, got {self.density}")
        unknown = set(self.tolerances) - set(TOLERANCES)
        if unknown:
            raise ValueError(f"unknown tolerance name(s): {', '.join(sorted(unknown))}")

    @property
    def grid(self):
        # the endpoint clusters shrink with the density: 20 per end at 1000
        return grids.unit_grid(self.density, min(grids.ENDPOINT_POINTS, self.density // 50))

    @property
    def interior(self):
        return grids.uniform_interior(self.density)

    def span(self, lo, hi):
        """``density`` points equally spaced on [lo, hi]."""
        n = self.density
        return [lo + (hi - lo) * k / (n - 1) for k in range(n)]

    def y_grid(self, lo, hi):
        return grids.geometric(lo, hi, max(10, self.density // 5))

    def tol(self, name):
        return self.tolerances.get(name, TOLERANCES[name])


# Tolerances, overridable with ``--tol name=value``.  The closed-form,
# bracket and theta-truncation entries count ulps; the rest are absolute or
# relative as the invariant description says.  Strict inequalities have none.
TOLERANCES = {
    "landen_pyth": 1e-14,
    "landen_quotient": 1e-13,
    "landen_round_trip": 1e-12,
    "landen_closed_form": 8.0,
    "gauss": 1e-15,
    "landen_k": 1e-13,
    "mu_reciprocal": 1e-13,
    "mu_bracket_width": 2.0,
    "mu_bracket_converges": 4.0,
    "mu_bound_inverse": 1e-12,
    "mu_inverse_round_trip": 1e-12,
    "theta_truncation": 1.0,
    "phi_power_of_two": 1e-13,
    "phi_pyth": 1e-13,
    "phi_pyth_identity": 1e-13,
    "phi_families": 1e-13,
}


# --- landen -----------------------------------------------------------------


def _landen_pyth(s, rec):
    for p in range(9):
        for r in s.grid:
            e = abs(landen(r, p) ** 2 + landen(complement(r), -p) ** 2 - 1.0)
            rec.within(e, (r, p))


def _landen_quotient(s, rec):
    for p in range(9):
        for r in s.grid:
            t = landen(complement(r), -p)
            e = abs(landen(r, p - 1) - (1.0 - t) / (1.0 + t))
            rec.within(e, (r, p))


def _landen_order(s, rec):
    for r in s.grid:
        keys = [modulus_key(landen(r, p)) for p in range(-8, 10)]
        for p, (a, b) in enumerate(zip(keys, keys[1:]), start=-8):
            rec.expect(a < b, (r, p), b - a, "strict")


def _landen_ineq3(s, rec):
    # L(r, -p-1) < r**(2**p), compared through logarithms
    for p in range(7):
        for r in s.grid:
            lhs = log_landen_down(r, p + 1)
            rhs = math.ldexp(math.log(r), p)
            rec.expect(lhs < rhs, (r, p), rhs - lhs, "strict")


def _landen_ineq4(s, rec):
    # L(r, p+1) > r**(2**-p), compared through log(x / x')
    for p in range(7):
        for r in s.grid:
            lhs = modulus_key(landen(r, p + 1))
            rhs = key_from_log(math.ldexp(math.log(r), -p))
            rec.expect(lhs > rhs, (r, p), lhs - rhs, "strict")


def _landen_round_trip(s, rec):
    points = [r for r in s.grid if 0.001 <= r <= 0.999]
    for p in range(-6, 7):
        for r in points:
            rec.within(abs(landen(landen(r, p), -p) - r), (r, p))


def _landen_closed_forms(s, rec):
    for p in range(-2, 3):
        for r in s.grid:
            a = landen(r, p)
            b = landen_closed_form(r, p)
            rec.within(abs(a - b) / math.ulp(a), (r, p))


def _landen_monotone(s, rec):
    points = s.grid
    for p in range(-6, 7):
        rec.increasing([modulus_key(landen(r, p)) for r in points], [(r, p) for r in points])


# --- elliptic ---------------------------------------------------------------


def _gauss(s, rec):
    for r in s.span(1e-3, 0.999):
        k = ellint_k_agm(r)
        rec.within(abs(k - ellint_k_landen_product(r, 6)) / k, (r,))


def _landen_k(s, rec):
    for r in s.grid:
        k = ellint_k_agm(r)
        up = ellint_k_agm(landen(r, 1))
        rec.within(abs(up - (1.0 + r) * k) / up, (r, "ascending"))
        kp = ellint_k_agm(complement(r))
        # (1 - r)/(1 + r) is the complement of L(r, 1); taking it that way
        # keeps its own complement exact when it is close to 1
        down = ellint_k_agm(complement(landen(r, 1)))
        rec.within(abs(down - 0.5 * (1.0 + r) * kp) / down, (r, "descending"))


def _agm_bracketing(s, rec):
    for b in s.grid:
        t = agm_trace(1.0, b, 8)
        lo, hi = max(t.b_seq), min(t.a_seq)
        rec.expect(lo <= t.limit <= hi, (1.0, b), t.limit, (lo, hi))


def _agm_quadratic(s, rec):
    # gap_{n+1} <= gap_n**2 / (8 b0), plus one rounding unit of a_n: the
    # computed gap cannot fall below the spacing of the doubles near a_n
    for b in s.grid:
        if b < 0.1:
            continue
        t = agm_trace(1.0, b, 8)
        gaps = [a - c for a, c in zip(t.a_seq, t.b_seq)]
        for n in range(len(gaps) - 1):
            bound = gaps[n] ** 2 / (8.0 * b) + math.ulp(t.a_seq[n + 1])
            rec.expect(gaps[n + 1] <= bound, (b, n), gaps[n + 1], bound)


def _b_sequence(s, rec):
    # b_n < L(b**alpha, n); for alpha = 0 the right side is the limit L(1, n) = 1
    for b in s.grid:
        t = agm_trace(1.0, b, 8)
        for alpha in (0.0, 0.25, 0.5, 1.0):
            for n in range(1, 9):
                rhs = 1.0 if alpha == 0.0 else landen(b**alpha, n)
                rec.expect(t.b_seq[n] < rhs, (b, alpha, n), rhs - t.b_seq[n], "strict")


def _mean_chain(s, rec):
    for x in s.grid:
        g = agm(1.0, x)
        hi = log_mean(1.0, x, 1.5)
        lo = log_mean(1.0, x)
        rec.expect(hi > g > lo, (x,), (hi - g, g - lo), "strict")


# --- mu ---------------------------------------------------------------------


def _mu_decreasing(s, rec):
    points = s.grid
    rec.increasing([-mu(r) for r in points], points)


def _mu_reciprocal(s, rec):
    for r in s.grid:
        rec.within(abs(mu(r) * mu(complement(r)) - PI2_4) / PI2_4, (r,))


def _chain(rec, r, values):
    for a, b in zip(values, values[1:]):
        rec.expect(a < b, (r,), b - a, "strict")


def _chain_u4_v3(s, rec):
    for r in s.grid:
        u = [mu_bound(b, r) for b in (BoundId.U4, BoundId.U3, BoundId.U2)]
        v = [mu_bound(b, r) for b in (BoundId.V2, BoundId.V3)]
        _chain(rec, r, u + [mu(r)] + v)


def _chain_u1_v1(s, rec):
    for r in s.grid:
        values = [mu_bound(BoundId.U2, r), mu_bound(BoundId.U1, r), mu(r), mu_bound(BoundId.V1, r)]
        _chain(rec, r, values)


def _mu_bracket(s, rec):
    width_tol = s.tol("mu_bracket_width")
    slack = s.tol("mu_bracket_converges")
    for r in s.grid:
        m = mu(r)
        for p in range(17):
            lower, upper = mu_landen_bracket(r, p)
            width = math.ldexp(math.log(4.0), -p)
            err = abs((upper - lower) - width) / math.ulp(upper)
            rec.expect(err <= width_tol, (r, p, "width"), err, width_tol)
            rec.expect(lower < m < upper, (r, p, "contains"), (m - lower, upper - m), "strict")
            # both ends approach mu at the rate of the width, up to the
            # rounding of mu (slack in ulps)
            gap = max(m - lower, upper - m)
            bound = width + slack * math.ulp(m)
            rec.expect(gap <= bound, (r, p, "converges"), gap, bound)


def _mu_bound_round_trip(s, rec):
    for b in BoundId:
        if b is BoundId.U2:
            continue
        for r in s.interior:
            back = mu_bound_inverse(b, mu_bound(b, r))
            rec.within(abs(back - r), (b.name.lower(), r))


def _mu_quotients(s, rec):
    points = s.grid
    rec.increasing([mu(r) / mu_bound(BoundId.U1, r) for r in points], [(r, "mu/u1") for r in points])
    rec.increasing([mu_bound(BoundId.V2, r) / mu(r) for r in points], [(r, "v2/mu") for r in points])


# --- mu-inverse -------------------------------------------------------------


def _approx_bracketing(s, rec):
    for y in s.y_grid(0.2, 20.0):
        t = mu_inverse_theta(y)
        for p in range(1, 6):
            for k in (1, 2, 3):
                f = mu_inverse_landen(y, f"f{k}", p)
                g = mu_inverse_landen(y, f"g{k}", p)
                rec.expect(f < t < g, (y, k, p), (t - f, g - t), "strict")


def _approx_convergence(s, rec):
    for y in s.y_grid(0.2, 20.0):
        t = mu_inverse_theta(y)
        errs = [abs(mu_inverse_landen(y, ApproximantId.G3, p) - t) for p in range(1, 7)]
        for p, (a, b) in enumerate(zip(errs, errs[1:]), start=1):
            rec.expect(b <= a, (y, p), b - a, "non-increasing")


def _mu_inverse_round_trip(s, rec):
    for y in s.y_grid(0.05, 20.0):
        rec.within(abs(mu(mu_inverse(y)) - y) / y, (y,))


def _theta_truncation(s, rec):
    for y in s.y_grid(0.5, 20.0):
        a = mu_inverse_theta(y, 16)
        b = mu_inverse_theta(y, 8)
        rec.within(abs(a - b) / math.ulp(a), (y,))


def _selection(s, rec):
    ys = s.y_grid(0.2, 20.0)
    ref = [mu_inverse_theta(y) for y in ys]

    def max_error(approx, p):
        worst = 0.0
        for y, t in zip(ys, ref):
            try:
                worst = max(worst, abs(t - mu_inverse_landen(y, approx, p)))
            except DomainError:
                return math.inf
        return worst

    best = max(max_error(ApproximantId.G2, 4), max_error(ApproximantId.G3, 5))
    for approx in ApproximantId:
        for p in range(1, 6):
            if (approx, p) in ((ApproximantId.G2, 4), (ApproximantId.G3, 5)):
                continue
            e = max_error(approx, p)
            rec.expect(best <= e, (approx.value, p), e - best, best)


# --- phi --------------------------------------------------------------------

PHI_POWER_RANGE = range(-3, 4)


def _phi_power_of_two(s, rec):
    for p in PHI_POWER_RANGE:
        for r in s.grid:
            rec.within(abs(phi(2.0**p, r) - landen(r, p)), (2.0**p, r))


def _classical(s, rec):
    for K in (1.5, 2.0, 5.0, 10.0):
        c = 4.0 ** (1.0 - 1.0 / K)
        for r in s.grid:
            lo = r ** (1.0 / K)
            v = phi(K, r)
            hi = c * lo
            rec.expect(lo < v < hi, (K, r), (v - lo, hi - v), "strict")


def _phi_pyth_identity(s, rec):
    for K in (0.2, 0.5, 2.0, 5.0):
        for r in s.grid:
            e = abs(phi(K, r) ** 2 + phi(1.0 / K, complement(r)) ** 2 - 1.0)
            rec.within(e, (K, r))


def _phi_pyth(s, rec):
    for K in grids.open_geometric(1.0, 20.0, 40):
        for r in s.interior:
            rec.within(phi_pyth_residual(K, r, 5), (K, r))


def _phi_families(s, rec):
    for K in (1.05, 1.5, 2.0, 3.0, 5.0, 10.0):
        for r in s.grid:
            try:
                a = phi_landen(K, r, 5)
            except DomainError:
                continue
            rec.within(abs(a - phi_lm(K, r, 5)), (K, r))


def _bound_tightening(s, rec):
    for K in (1.5, 2.0, 3.0):
        for r in s.grid:
            b = phi_bounds(K, r)
            rec.expect(b.classical_lower < b.sharp_lower, (K, r, "lower"),
                       b.sharp_lower - b.classical_lower, "strict")
            if b.sharp_upper is not None:
                rec.expect(b.sharp_upper < b.classical_upper, (K, r, "upper"),
                           b.classical_upper - b.sharp_upper, "strict")


def _majorant(s, rec):
    Ks = [1.0 + 2.0 * k / 20 for k in range(1, 20)]
    rs = [r for r in s.grid if r <= 0.7]
    for p in (0, 1):
        for K in Ks:
            for r in rs:
                try:
                    a = phi_landen(K, r, p)
                except DomainError:
                    continue
                ref = phi_reference(K, r)
                rec.expect(a >= ref, (K, r, p), a - ref, ">=")


SUITES = {
    "landen": [
        ("landen_pyth", "L(r,p)^2 + L(r',-p)^2 = 1, p in [0,8]", _landen_pyth),
        ("landen_quotient", "L(r,p-1) = (1 - L(r',-p)) / (1 + L(r',-p)), p in [0,8]", _landen_quotient),
        ("landen_order", "L(r,p) < L(r,p+1), p in [-8,8]", _landen_order),
        ("landen_ineq3", "L(r,-p-1) < r^(2^p), p in [0,6]", _landen_ineq3),
        ("landen_ineq4", "L(r,p+1) > r^(2^-p), p in [0,6]", _landen_ineq4),
        ("landen_round_trip", "L(L(r,p),-p) = r, |p| <= 6, r in [0.001, 0.999]", _landen_round_trip),
        ("landen_closed_form", "closed forms agree with iteration (ulps), p in [-2,2]", _landen_closed_forms),
        ("landen_monotone", "L(., p) strictly increasing, p in [-6,6]", _landen_monotone),
    ],
    "elliptic": [
        ("gauss", "K by AGM vs Landen product (6 terms), relative", _gauss),
        ("landen_k", "K(L(r,1)) = (1+r) K(r) and K((1-r)/(1+r)) = (1+r)/2 K(r'), relative", _landen_k),
        ("agm_bracketing", "max b_n <= AG <= min a_n", _agm_bracketing),
        ("agm_quadratic", "gap_{n+1} <= gap_n^2 / (8 b0) for b0 >= 0.1", _agm_quadratic),
        ("agm_b_sequence", "b_n < L(b^alpha, n), alpha in {0, 1/4, 1/2, 1}, n in [1,8]", _b_sequence),
        ("mean_chain", "L_{3/2}(1,x) > AG(1,x) > L(1,x)", _mean_chain),
    ],
    "mu": [
        ("mu_decreasing", "mu strictly decreasing", _mu_decreasing),
        ("mu_reciprocal", "mu(r) mu(r') = pi^2/4, relative", _mu_reciprocal),
        ("mu_chain_u4_v3", "u4 < u3 < u2 < mu < v2 < v3", _chain_u4_v3),
        ("mu_chain_u1_v1", "u2 < u1 < mu < v1", _chain_u1_v1),
        ("mu_bracket", "Landen bracket: width 2^-p log 4 (ulps), contains mu, converges, p in [0,16]", _mu_bracket),
        ("mu_bound_inverse", "bound inverses round-trip", _mu_bound_round_trip),
        ("mu_quotients", "mu/u1 and v2/mu strictly increasing", _mu_quotients),
    ],
    "mu-inverse": [
        ("approx_bracketing", "f_k(y,p) < mu^-1(y) < g_k(y,p), k in 1..3, p in [1,5]", _approx_bracketing),
        ("approx_convergence", "|g3(y,p) - mu^-1(y)| non-increasing, p in [1,6]", _approx_convergence),
        ("mu_inverse_round_trip", "mu(mu^-1(y)) = y, relative, y in [0.05, 20]", _mu_inverse_round_trip),
        ("theta_truncation", "theta with 8 vs 16 terms (ulps), y >= 0.5", _theta_truncation),
        ("approx_selection", "g2(.,4) and g3(.,5) have the smallest max error", _selection),
    ],
    "phi": [
        ("phi_power_of_two", "phi(2^p, r) = L(r, p), p in [-3,3]", _phi_power_of_two),
        ("phi_classical", "r^(1/K) < phi_K(r) < 4^(1-1/K) r^(1/K)", _classical),
        ("phi_pyth_identity", "phi_K(r)^2 + phi_{1/K}(r')^2 = 1", _phi_pyth_identity),
        ("phi_pyth", "Pythagorean residual of LM at p = 5, K in (1,20)", _phi_pyth),
        ("phi_families", "|L_phi(K,r,5) - LM(K,r,5)| where defined", _phi_families),
        ("phi_bound_tightening", "sharp bounds inside classical ones", _bound_tightening),
        ("phi_majorant", "L_phi(K,r,p) >= phi_K(r), p in {0,1}, K in (1,3), r <= 0.7", _majorant),
    ],
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(name, settings=None):
    """Run one suite (or ``all``) and collect the results."""
    settings = settings or Settings()
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    names = list(SUITES) if name == "all" else [name]
    result = SuiteResult(name)
    for suite in names:
        for key, description, fn in SUITES[suite]:
            report = InvariantReport(key, description)
            fn(settings, _Recorder(report, settings.tol(key) if key in TOLERANCES else None))
            result.invariants.append(report)
            result.checks_run += report.checks_run
            result.failures.extend(report.failures)
    return result
