"""Regularity of ideal powers: tables, asymptotic fits, bounds, sampling.

reg I^t grows as d*t + e_t with e_t eventually constant; this module computes
the table of reg I^t either through minimal resolutions or, for finite-length
quotients, through the top nonzero degree of the Hilbert function.  The
stabilized tail value of e_t is only a heuristic estimate of the asymptotic
constant (no effective bound for "t large enough" exists), so reports carry
the stabilization window and explicit warnings.

epsilon_containment computes, per t, the least eps with m^(dt+eps) contained
in (V)^t + I_X; bound_report compares the stabilized eps against reg R - 1
and deg - codim; conjecture_sampler draws random linear systems and tabulates
eps against floor(n/c).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import messages
from .errors import DimensionError, GeometryError, SelfCheckError, UsageError
from .groebner import DEFAULT_DEGREE_CEILING, Ideal
from .hilbert import (
    finite_length_witness,
    quotient_degree,
    quotient_dimension,
    top_degree_finite,
)
from .polynomials import Polynomial
from .resolution import regularity

DEFAULT_WINDOW = 3

STATUS_STABLE = "heuristically_stable"
STATUS_NOT_STABILIZED = "not_stabilized"


@dataclass(frozen=True)
class PowerRegRow:
    t: int
    reg_power: int
    reg_quotient: int
    e_t: int
    f_t: int


@dataclass(frozen=True)
class PowerRegReport:
    d: int
    route: str
    rows: tuple
    epsilon_estimate: int | None
    stable_from_t: int | None
    status: str
    window: int
    warnings: tuple


@dataclass(frozen=True)
class EpsilonRow:
    t: int
    top_degree: int
    epsilon_t: int


@dataclass(frozen=True)
class EpsilonReport:
    d: int
    rows: tuple
    epsilon: int | None
    stable_from_t: int | None
    status: str
    window: int
    warnings: tuple


@dataclass(frozen=True)
class AsymptoticFit:
    d: int
    epsilon: int | None
    stable_from_t: int | None
    status: str


@dataclass(frozen=True)
class BoundReport:
    d: int
    epsilon_computed: int | None
    status: str
    reg_R: int
    deg_X: int
    codim_X: int
    bound_easy: int
    bound_degcodim: int
    easy_tight: bool | None
    degcodim_tight: bool | None
    warnings: tuple


@dataclass(frozen=True)
class SamplerTrial:
    trial: int
    epsilon: int
    stabilized: bool
    within_bound: bool


@dataclass(frozen=True)
class SamplerReport:
    c: int
    n: int
    bound: int
    trials: int
    skipped: int
    rows: tuple
    seed: int
    all_within: bool
    warnings: tuple


def _stabilize(ts, values, window, warnings):
    """(epsilon, stable_from_t, status) for a trace expected to stabilize."""
    if len(values) >= window and len(set(values[-window:])) == 1:
        eps = values[-1]
        stable_from = ts[-1]
        for t, v in zip(reversed(ts), reversed(values)):
            if v != eps:
                break
            stable_from = t
        warnings.append(messages.stabilization_heuristic(window))
        return eps, stable_from, STATUS_STABLE
    warnings.append(messages.not_stabilized(ts[-1]))
    return None, None, STATUS_NOT_STABILIZED


def power_table(I: Ideal, t_max: int, route: str = "resolution",
                window: int = DEFAULT_WINDOW,
                degree_ceiling: int = DEFAULT_DEGREE_CEILING) -> PowerRegReport:
    """Rows (t, reg I^t, reg S/I^t, e_t, f_t) for t = 1..t_max.

    Routes: "resolution" (always available), "hilbert" (finite length only:
    reg I^t = 1 + top nonzero degree), "both" (cross-checks the two).
    Monotonicity of e_t and f_t is asserted fatally when S/I has finite
    length and suppressed, with a warning, otherwise.
    """
    if t_max < 1:
        raise UsageError("t_max must be at least 1")
    if route not in ("resolution", "hilbert", "both"):
        raise UsageError(f"unknown route {route!r}")
    if window < 1:
        raise UsageError("window must be at least 1")
    if I.is_zero_ideal():
        raise UsageError("power table of the zero ideal is degenerate")
    d = I.single_degree()
    if d is None:
        raise UsageError("generators have mixed degrees: d is undefined")
    if d == 0:
        raise UsageError("generators are constants: the ideal is the unit ideal")

    witness = finite_length_witness(I, degree_ceiling)
    m_primary = witness is None
    if route in ("hilbert", "both") and not m_primary:
        raise DimensionError(
            f"route {route!r} needs finite length, but variable {witness} "
            "has no pure power in the lead-term ideal"
        )

    rows = []
    for t in range(1, t_max + 1):
        It = I.power(t)
        if route == "hilbert":
            reg_q = top_degree_finite(It, degree_ceiling)
            reg_p = reg_q + 1
        else:
            reg_q = regularity(It, "quotient", degree_ceiling)
            reg_p = reg_q + 1
            if route == "both":
                top = top_degree_finite(It, degree_ceiling)
                if reg_p != top + 1:
                    raise SelfCheckError(
                        f"route disagreement at t = {t}: resolution gives "
                        f"reg I^t = {reg_p}, Hilbert gives {top + 1}"
                    )
        rows.append(PowerRegRow(t, reg_p, reg_q,
                                reg_p - d * t, reg_q - d * t + 1))

    warnings: list = []
    if m_primary:
        for row in rows:
            if row.e_t < 0 or row.f_t < 0:
                raise SelfCheckError(
                    f"negative normalized regularity at t = {row.t}: "
                    f"e_t = {row.e_t}, f_t = {row.f_t}"
                )
            if row.e_t != row.f_t:
                raise SelfCheckError(
                    f"e_t != f_t at t = {row.t} ({row.e_t} vs {row.f_t})"
                )
        for prev, cur in zip(rows, rows[1:]):
            if cur.e_t > prev.e_t or cur.f_t > prev.f_t:
                raise SelfCheckError(
                    f"e_t or f_t increased from t = {prev.t} to {cur.t}"
                )
    else:
        warnings.append(messages.MONOTONICITY_SUPPRESSED)

    eps, stable_from, status = _stabilize(
        [r.t for r in rows], [r.e_t for r in rows], window, warnings)
    return PowerRegReport(d, route, tuple(rows), eps, stable_from, status,
                          window, tuple(warnings))


def fit_asymptotic(report: PowerRegReport) -> AsymptoticFit:
    """(d, epsilon, stable_from_t) read off a power table's stabilized tail."""
    if len(report.rows) < report.window + 1:
        raise UsageError(
            f"need at least window + 1 = {report.window + 1} rows to fit"
        )
    return AsymptoticFit(report.d, report.epsilon_estimate,
                         report.stable_from_t, report.status)


def epsilon_containment(I_X: Ideal, forms, t_max: int,
                        window: int = DEFAULT_WINDOW,
                        degree_ceiling: int = DEFAULT_DEGREE_CEILING) -> EpsilonReport:
    """Per t, the least eps_t with m^(dt+eps_t) inside (V)^t + I_X.

    The forms must share one degree d and the center must be disjoint from
    the scheme of I_X, i.e. I_X + (V) must have finite length.
    """
    if t_max < 1:
        raise UsageError("t_max must be at least 1")
    ring = I_X.ring
    degs = set()
    for f in forms:
        if not isinstance(f, Polynomial) or f.ring != ring:
            raise UsageError("forms live in a different ring")
        if f.is_zero():
            raise UsageError("zero form in V")
        hd = f.homogeneous_degree()
        if hd is None:
            raise UsageError(f"form {f} is not homogeneous")
        degs.add(hd)
    if len(degs) != 1:
        raise UsageError("forms of V must share a single degree")
    d = degs.pop()
    if d < 1:
        raise UsageError("forms of V must have positive degree")

    V = Ideal(ring, tuple(forms))
    witness = finite_length_witness(V.plus(I_X), degree_ceiling)
    if witness is not None:
        raise GeometryError(
            f"the center meets X: variable {witness} has no pure power in "
            "the lead-term ideal of I_X + (V)"
        )

    rows = []
    for t in range(1, t_max + 1):
        A = V.power(t).plus(I_X)
        top = top_degree_finite(A, degree_ceiling)
        rows.append(EpsilonRow(t, top, top - d * t + 1))

    for prev, cur in zip(rows, rows[1:]):
        if cur.epsilon_t > prev.epsilon_t:
            raise SelfCheckError(
                f"epsilon_t increased from t = {prev.t} to {cur.t} "
                f"({prev.epsilon_t} -> {cur.epsilon_t})"
            )

    warnings: list = []
    eps, stable_from, status = _stabilize(
        [r.t for r in rows], [r.epsilon_t for r in rows], window, warnings)
    return EpsilonReport(d, tuple(rows), eps, stable_from, status, window,
                         tuple(warnings))


def bound_report(I_X: Ideal, forms, t_max: int,
                 window: int = DEFAULT_WINDOW,
                 degree_ceiling: int = DEFAULT_DEGREE_CEILING) -> BoundReport:
    """Compare the computed eps with reg R - 1 and with deg X - codim X.

    The forms must be linear.  reg R means the regularity of the defining
    ideal I_X (ideal convention; the zero ideal has regularity 1).  The
    reg R - 1 bound is asserted when eps stabilized; deg - codim is reported
    as informational only.
    """
    for f in forms:
        if isinstance(f, Polynomial) and f.homogeneous_degree() not in (None, 1):
            raise UsageError("bound reports require linear forms")
    eps_rep = epsilon_containment(I_X, forms, t_max, window, degree_ceiling)
    if eps_rep.d != 1:
        raise UsageError("bound reports require linear forms")

    reg_R = regularity(I_X, "ideal", degree_ceiling)
    deg_X = quotient_degree(I_X, degree_ceiling)
    codim_X = I_X.ring.nvars - quotient_dimension(I_X, degree_ceiling)
    bound_easy = reg_R - 1
    bound_dc = deg_X - codim_X

    warnings = list(eps_rep.warnings)
    warnings.append(messages.DEGCODIM_INFORMATIONAL)
    eps = eps_rep.epsilon
    easy_tight = None
    dc_tight = None
    if eps is not None:
        if eps > bound_easy:
            raise SelfCheckError(
                f"stabilized epsilon = {eps} exceeds reg R - 1 = {bound_easy}"
            )
        easy_tight = eps == bound_easy
        dc_tight = eps == bound_dc
    return BoundReport(eps_rep.d, eps, eps_rep.status, reg_R, deg_X, codim_X,
                       bound_easy, bound_dc, easy_tight, dc_tight,
                       tuple(warnings))


def ci_formula_check(d: int, t: int, n_plus_1: int) -> int:
    """t*d + (n-1)*(d-1) - 1 with n = n_plus_1: the regular-sequence top
    degree of S/I^t, and an upper bound for reg S/I^t in general."""
    if d < 1 or t < 1 or n_plus_1 < 1:
        raise UsageError("d, t and the variable count must be positive")
    return t * d + (n_plus_1 - 1) * (d - 1) - 1


def conjecture_sampler(I_X: Ideal, c: int, trials: int, seed: int,
                       t_max: int = 4, window: int = DEFAULT_WINDOW,
                       degree_ceiling: int = DEFAULT_DEGREE_CEILING) -> SamplerReport:
    """Empirical check of eps <= floor(n/c) on random linear systems.

    Per trial, draws n + 1 + c random linear forms (n + 1 = Krull dimension
    of S/I_X), skips draws whose center meets X, and tabulates the computed
    eps against floor(n/c).  The summary is evidence, never a proof.
    """
    if c < 1:
        raise UsageError("c must be at least 1")
    if trials < 0:
        raise UsageError("trials must be nonnegative")
    ring = I_X.ring
    field = ring.field
    n = quotient_dimension(I_X, degree_ceiling) - 1
    if n < 0:
        raise UsageError("S/I_X has dimension 0; no projection to sample")
    bound = n // c
    count = n + 1 + c

    warnings = [messages.EMPIRICAL_NOT_PROOF]
    if field.p < 101:
        warnings.append(messages.small_field(field.p))

    variables = ring.variables()
    rows = []
    skipped = 0
    for i in range(trials):
        rng = random.Random(seed * 1_000_003 + i)
        forms = []
        while len(forms) < count:
            coeffs = [field.random(rng) for _ in variables]
            f = ring.zero()
            for coeff, x in zip(coeffs, variables):
                f = f + x.scale(field.element(coeff))
            if not f.is_zero():
                forms.append(f)
        V = Ideal(ring, tuple(forms))
        if finite_length_witness(V.plus(I_X), degree_ceiling) is not None:
            skipped += 1
            continue
        rep = epsilon_containment(I_X, forms, t_max, window, degree_ceiling)
        stabilized = rep.status == STATUS_STABLE
        eps = rep.epsilon if stabilized else rep.rows[-1].epsilon_t
        rows.append(SamplerTrial(i, eps, stabilized, eps <= bound))

    all_within = all(r.within_bound for r in rows)
    return SamplerReport(c, n, bound, trials, skipped, tuple(rows), seed,
                         all_within, tuple(warnings))
