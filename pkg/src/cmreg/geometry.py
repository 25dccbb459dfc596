"""Finite linear projections and their fibers.

A projection is given by linearly independent linear forms V = (l_0, ...,
l_s); it is finite on X exactly when I_X + (V) has finite length.  The fiber
over a closed point p of P^s is cut out by I_X plus the 2x2 minors binding
the l_i to the coordinates of p; since p is normalized (first nonzero
coordinate 1, at index i0), the minors reduce to the s independent linear
forms l_j - p_j * l_{i0}.  Those forms are eliminated by substitution, the
remainder is saturated in the smaller ring, and degree and regularity are
read off the Hilbert function there; both are invariant under the linear
change of coordinates, and the saturation of the ambient fiber ideal is the
linear forms plus any section of the saturated small-ring ideal.

Closed points over GF(p) are Galois orbits of points with coordinates in
GF(p^k); enumeration walks k = 1..K, keeps the points whose Frobenius orbit
has size exactly k, and takes the lexicographically least normalized orbit
member as the representative.

The two-variable invariant r is the maximum over codimension-1 subspaces V'
of V of deg gcd(V').  Hyperplanes of V are enumerated as dual points with
the same orbit machinery; binary-form gcds strip the x- and y-contents, run
a univariate Euclid on the dehomogenization at y, and rehomogenize.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import messages
from .errors import (
    BudgetError,
    DimensionError,
    GeometryError,
    SelfCheckError,
    UsageError,
)
from .fields import GF, MAX_EXTENSION_DEGREE, PrimeField
from .groebner import DEFAULT_DEGREE_CEILING, Ideal, saturate
from .hilbert import (
    finite_length_witness,
    hilbert_function,
    quotient_degree,
    quotient_dimension,
)
from .orders import GREVLEX, MonomialOrder
from .polynomials import Monomial, PolyRing, Polynomial, lift_polynomial

DEFAULT_EXTENSION_BOUND = 2
DEFAULT_FIBER_BUDGET = 20000


def _linear_coefficients(f: Polynomial):
    """Coefficient vector of a linear form; UsageError when not linear."""
    if f.is_zero() or f.homogeneous_degree() != 1:
        raise UsageError(f"form {f} is not linear")
    ring = f.ring
    vec = [ring.field.zero] * ring.nvars
    for m, c in f._terms.items():
        vec[m.exps.index(1)] = c
    return vec


def _rref(field, rows):
    """In-place reduced row echelon form; returns the pivot column list."""
    pivots = []
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        hit = None
        for r in range(rank, len(rows)):
            if rows[r][col] != field.zero:
                hit = r
                break
        if hit is None:
            continue
        rows[rank], rows[hit] = rows[hit], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, v) for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != field.zero:
                factor = rows[r][col]
                rows[r] = [field.sub(a, field.mul(factor, b))
                           for a, b in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    return pivots


def _rank(field, rows) -> int:
    return len(_rref(field, [list(r) for r in rows]))


def _require_prime_base(ring: PolyRing, what: str):
    if not isinstance(ring.field, PrimeField):
        raise UsageError(
            f"{what} enumerates closed points over the prime field; the ring "
            f"is defined over {ring.field}"
        )


class ProjectionSpec:
    """X in P^n together with s+1 independent linear forms defining a
    projection to P^s."""

    __slots__ = ("ideal", "forms", "ring", "s")

    def __init__(self, ideal: Ideal, forms):
        ring = ideal.ring
        forms = tuple(forms)
        if not forms:
            raise UsageError("a projection needs at least one linear form")
        rows = []
        for f in forms:
            if not isinstance(f, Polynomial) or f.ring != ring:
                raise UsageError("projection forms live in a different ring")
            rows.append(_linear_coefficients(f))
        if _rank(ring.field, rows) != len(forms):
            raise UsageError("projection forms are linearly dependent")
        self.ideal = ideal
        self.forms = forms
        self.ring = ring
        self.s = len(forms) - 1


@dataclass(frozen=True)
class Finiteness:
    finite: bool
    witness: str | None


def check_finite(spec: ProjectionSpec,
                 degree_ceiling: int = DEFAULT_DEGREE_CEILING) -> Finiteness:
    """Certificate that the projection is finite: I_X + (V) has finite
    length.  When it does not, the witness names a variable with no pure
    power among the lead terms (the center of projection meets X)."""
    J = spec.ideal.plus(Ideal(spec.ring, spec.forms))
    witness = finite_length_witness(J, degree_ceiling)
    return Finiteness(witness is None, witness)


@dataclass(frozen=True)
class ClosedPoint:
    """Orbit representative of a closed point of P^s over GF(p).

    Coordinates live in GF(p^k), are normalized (first nonzero = 1), and are
    the lexicographically least member of the Frobenius orbit."""

    k: int
    coords: tuple

    def __str__(self):
        field = self.coords[0].field
        return "(" + ":".join(field.format_coeff(c.raw) for c in self.coords) + ")"


def _normalized_points(field, s):
    """All normalized points of P^s(field): first nonzero coordinate is 1."""
    elems = list(field.elements())
    one = field.one
    zero = field.zero
    for i0 in range(s + 1):
        prefix = (zero,) * i0 + (one,)
        for tail in itertools.product(elems, repeat=s - i0):
            yield prefix + tail


def _orbit(field, coords):
    """Frobenius orbit of a coordinate tuple of raw values."""
    out = [coords]
    cur = coords
    while True:
        cur = tuple(field.frobenius(c) for c in cur)
        if cur == coords:
            return out
        out.append(cur)


def enumerate_closed_points(p: int, K: int, s: int):
    """Galois-orbit representatives of the closed points of P^s over GF(p)
    with residue extension degree at most K, in a deterministic order."""
    if K < 1:
        raise UsageError("extension bound K must be at least 1")
    if K > MAX_EXTENSION_DEGREE:
        raise UsageError(
            f"extension bound K = {K} exceeds the supported maximum "
            f"{MAX_EXTENSION_DEGREE}"
        )
    for k in range(1, K + 1):
        field = GF(p, k)
        for coords in _normalized_points(field, s):
            orbit = _orbit(field, coords)
            if len(orbit) != k:
                continue
            if coords != min(orbit):
                continue
            yield ClosedPoint(k, tuple(field.element(c) for c in coords))


@dataclass(frozen=True)
class FiberReport:
    point: ClosedPoint
    ideal: Ideal
    degree: int
    regularity: int


@dataclass(frozen=True)
class FiberSearchReport:
    max_regularity: int
    argmax: tuple
    fibers: tuple
    K: int
    epsilon: int | None
    equals_epsilon_plus_1: bool | None
    empty_fibers: int
    partial: bool
    warnings: tuple


def _extension_ring(ring: PolyRing, k: int) -> PolyRing:
    if k == 1:
        return ring
    if not isinstance(ring.field, PrimeField):
        raise UsageError(
            "points over a proper extension of an extension base field are "
            "not supported"
        )
    return PolyRing(ring.names, GF(ring.field.p, k), ring.order)


class _Fiber:
    """One fiber, resolved: the saturated ideal in the substituted ring plus
    everything needed to re-embed it."""

    __slots__ = ("saturated", "linear_forms", "small", "positions", "big")

    def __init__(self, spec: ProjectionSpec, point: ClosedPoint,
                 degree_ceiling: int):
        if not 1 <= point.k <= MAX_EXTENSION_DEGREE:
            raise UsageError(f"unsupported extension degree {point.k}")
        big = _extension_ring(spec.ring, point.k)
        field = big.field
        forms = [lift_polynomial(f, big) for f in spec.forms]
        gens = [lift_polynomial(g, big) for g in spec.ideal.gens]
        coords = [field.coerce(c) for c in point.coords]

        i0 = next(i for i, c in enumerate(coords) if c != field.zero)
        base = forms[i0]
        linear = []
        for j, (c, f) in enumerate(zip(coords, forms)):
            if j != i0:
                linear.append(f - base.scale(c))

        # substitute the pivot variables of the fiber's linear forms away
        rows = [_linear_coefficients(f) for f in linear]
        pivots = _rref(field, rows)
        if len(pivots) != len(linear):
            raise SelfCheckError("fiber linear forms are dependent")
        keep = [i for i in range(big.nvars) if i not in pivots]
        small = PolyRing(tuple(big.names[i] for i in keep), field,
                         MonomialOrder(GREVLEX, len(keep)))
        keep_pos = {v: i for i, v in enumerate(keep)}
        small_vars = small.variables()
        images = [None] * big.nvars
        for row, col in zip(rows, pivots):
            img = small.zero()
            for j in keep:
                if row[j] != field.zero:
                    img = img - small_vars[keep_pos[j]].scale(row[j])
            images[col] = img
        for j in keep:
            images[j] = small_vars[keep_pos[j]]

        sub_gens = []
        for g in gens:
            h = g.substitute(images)
            if not h.is_zero():
                sub_gens.append(h)
        self.saturated = saturate(Ideal(small, sub_gens), None, degree_ceiling)
        self.linear_forms = tuple(linear)
        self.small = small
        self.positions = keep
        self.big = big

    def is_empty(self, degree_ceiling: int) -> bool:
        gb = self.saturated.groebner_basis(degree_ceiling)
        return bool(gb.elements) and gb.elements[0].degree() == 0

    def ambient_ideal(self) -> Ideal:
        gens = list(self.linear_forms)
        for g in self.saturated.gens:
            gens.append(_embed(g, self.big, self.positions))
        return Ideal(self.big, gens)


def _embed(poly: Polynomial, big: PolyRing, positions) -> Polynomial:
    """Section of the substitution: subring variable i goes to the ambient
    variable at positions[i]."""
    terms = {}
    for m, c in poly._terms.items():
        exps = [0] * big.nvars
        for i, e in enumerate(m.exps):
            exps[positions[i]] = e
        terms[Monomial(tuple(exps))] = c
    return Polynomial(big, terms)


def fiber_ideal(spec: ProjectionSpec, point: ClosedPoint,
                degree_ceiling: int = DEFAULT_DEGREE_CEILING) -> Ideal:
    """Saturated ideal of the fiber over a closed point; the unit ideal for
    points outside the image.

    The result lives in the spec's ring with coefficients lifted to GF(p^k)
    for the point's extension degree k."""
    return _Fiber(spec, point, degree_ceiling).ambient_ideal()


def fiber_regularity(Z: Ideal,
                     degree_ceiling: int = DEFAULT_DEGREE_CEILING):
    """(degree, regularity) of a saturated ideal of finitely many points.

    The degree is the stable value of the Hilbert function and the
    regularity is 1 + the first degree where the Hilbert function reaches
    it."""
    dim = quotient_dimension(Z, degree_ceiling)
    if dim != 1:
        raise DimensionError(
            f"fiber regularity needs a finite scheme; the affine cone has "
            f"Krull dimension {dim}, not 1"
        )
    deg = quotient_degree(Z, degree_ceiling)
    bound = 4
    while bound <= 1 << 16:
        h = hilbert_function(Z, bound, degree_ceiling)
        for e in range(bound + 1):
            if h.value(e) == deg:
                return deg, e + 1
        bound *= 2
    raise SelfCheckError("Hilbert function never reached the degree")


def max_fiber_regularity(spec: ProjectionSpec,
                         K: int = DEFAULT_EXTENSION_BOUND,
                         epsilon: int | None = None,
                         budget: int = DEFAULT_FIBER_BUDGET,
                         degree_ceiling: int = DEFAULT_DEGREE_CEILING) -> FiberSearchReport:
    """Maximum fiber regularity over the closed points of P^s with residue
    extension degree at most K, with every maximizing point.

    When epsilon is supplied the report states whether max = epsilon + 1;
    a shortfall is flagged as possible K-insufficiency (a maximizing point
    may live in a deeper extension), an excess is a fatal self-check
    failure.  Exhausting the point budget raises BudgetError carrying the
    partial report, whose max is then only a lower bound."""
    _require_prime_base(spec.ring, "fiber search")
    cert = check_finite(spec, degree_ceiling)
    if not cert.finite:
        raise GeometryError(
            f"projection is not finite: variable {cert.witness} has no pure "
            "power among the lead terms of I_X + (V)"
        )
    fibers = []
    empty = 0
    count = 0
    partial = False
    for point in enumerate_closed_points(spec.ring.field.p, K, spec.s):
        if count >= budget:
            partial = True
            break
        count += 1
        fib = _Fiber(spec, point, degree_ceiling)
        if fib.is_empty(degree_ceiling):
            empty += 1
            continue
        deg, reg = fiber_regularity(fib.saturated, degree_ceiling)
        fibers.append(FiberReport(point, fib.ambient_ideal(), deg, reg))

    if not fibers:
        raise GeometryError("no fibers found within the enumeration bound")
    max_reg = max(f.regularity for f in fibers)
    argmax = tuple(f.point for f in fibers if f.regularity == max_reg)

    warnings: list = []
    equals = None
    if epsilon is not None:
        target = epsilon + 1
        if max_reg > target:
            raise SelfCheckError(
                f"max fiber regularity {max_reg} exceeds epsilon + 1 = {target}"
            )
        equals = max_reg == target
        if max_reg < target and not partial:
            warnings.append(messages.k_insufficient(max_reg, target, K))
    if partial:
        warnings.append(messages.partial_lower_bound())
        report = FiberSearchReport(max_reg, argmax, tuple(fibers), K, epsilon,
                                   equals, empty, True, tuple(warnings))
        raise BudgetError(
            f"fiber budget {budget} exhausted after {count} points",
            partial=report,
        )
    return FiberSearchReport(max_reg, argmax, tuple(fibers), K, epsilon,
                             equals, empty, False, tuple(warnings))


# --- binary forms: gcd and the two-variable invariant ---

def _split_contents(h: Polynomial):
    """(x-content, y-content, dense coefficient list by x-degree) of a
    nonzero binary form; the list is the dehomogenization at y of the
    content-free part, constant term and lead both nonzero."""
    field = h.ring.field
    cx = min(m.exps[0] for m in h._terms)
    cy = min(m.exps[1] for m in h._terms)
    deg = h.degree() - cx - cy
    coeffs = [field.zero] * (deg + 1)
    for m, c in h._terms.items():
        coeffs[m.exps[0] - cx] = c
    return cx, cy, coeffs


def _unieuclid(field, a, b):
    """gcd of two dense univariate coefficient lists, low degree first."""
    def strip(u):
        while u and u[-1] == field.zero:
            u.pop()
        return u

    a = strip(list(a))
    b = strip(list(b))
    while b:
        if len(a) < len(b):
            a, b = b, a
            continue
        lead = field.div(a[-1], b[-1])
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[i + shift] = field.sub(a[i + shift], field.mul(lead, c))
        strip(a)
        if len(a) < len(b):
            a, b = b, a
    return a


def _binary_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd of two binary forms, zero inputs allowed."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    ring = f.ring
    field = ring.field
    fx, fy, fu = _split_contents(f)
    gx, gy, gu = _split_contents(g)
    u = _unieuclid(field, fu, gu)
    udeg = len(u) - 1
    inv = field.inv(u[-1])
    cx = min(fx, gx)
    cy = min(fy, gy)
    terms = {}
    for i, c in enumerate(u):
        if c != field.zero:
            terms[Monomial((i + cx, udeg - i + cy))] = field.mul(inv, c)
    return Polynomial(ring, terms)


def binary_gcd(forms) -> Polynomial:
    """Monic gcd of a list of binary forms."""
    forms = [f for f in forms if not f.is_zero()]
    if not forms:
        raise UsageError("gcd of an empty or all-zero list")
    out = forms[0]
    for f in forms[1:]:
        out = _binary_gcd(out, f)
        if out.degree() == 0:
            break
    return out.monic()


@dataclass(frozen=True)
class TwoVarsReport:
    d: int
    dim_V: int
    r: int
    witness: tuple
    witness_gcd: Polynomial
    K: int
    warnings: tuple


def twovars_r(forms, K: int = DEFAULT_EXTENSION_BOUND,
              budget: int = DEFAULT_FIBER_BUDGET) -> TwoVarsReport:
    """max over codimension-1 subspaces V' of V of deg gcd(V'), with a
    witness basis achieving it.

    Subspaces defined over GF(p^k), k <= K, are enumerated as points of the
    dual projective space.  With dim V = 2 every hyperplane is a single form
    and r = d without enumeration."""
    forms = tuple(forms)
    if len(forms) < 2:
        raise UsageError("V must have dimension at least 2")
    ring = forms[0].ring
    if ring.nvars != 2:
        raise UsageError("the two-variable invariant needs a 2-variable ring")
    degs = set()
    for f in forms:
        if not isinstance(f, Polynomial) or f.ring != ring:
            raise UsageError("forms live in a different ring")
        if f.is_zero() or f.homogeneous_degree() is None:
            raise UsageError("forms must be nonzero and homogeneous")
        degs.add(f.homogeneous_degree())
    if len(degs) != 1:
        raise UsageError("forms must share a single degree")
    d = degs.pop()

    rows = []
    for f in forms:
        vec = [ring.field.zero] * (d + 1)
        for m, c in f._terms.items():
            vec[m.exps[0]] = c
        rows.append(vec)
    if _rank(ring.field, rows) != len(forms):
        raise UsageError("forms are linearly dependent: not a basis")

    g = binary_gcd(forms)
    if g.degree() != 0:
        raise UsageError(f"gcd of V is not 1: common factor {g}")

    m = len(forms)
    if m == 2:
        return TwoVarsReport(d, 2, d, (forms[0],), forms[0].monic(), K, ())

    # a hyperplane of V holds m - 1 independent forms; degree-g multiples of
    # a common factor span only d - g + 1 dimensions, so g <= d - m + 2 and
    # hitting that ceiling certifies the max over the closed field too
    ceiling = max(0, d - m + 2)
    _require_prime_base(ring, "subspace search")
    best = -1
    witness = None
    witness_gcd = None
    count = 0
    for point in enumerate_closed_points(ring.field.p, K, m - 1):
        if count >= budget:
            report = TwoVarsReport(d, m, best, witness, witness_gcd, K,
                                   (messages.partial_lower_bound(),))
            raise BudgetError(
                f"subspace budget {budget} exhausted after {count} points",
                partial=report,
            )
        count += 1
        big = _extension_ring(ring, point.k)
        field = big.field
        lifted = [lift_polynomial(f, big) for f in forms]
        coords = [field.coerce(c) for c in point.coords]
        i0 = next(i for i, c in enumerate(coords) if c != field.zero)
        basis = []
        for j in range(m):
            if j != i0:
                basis.append(lifted[j] - lifted[i0].scale(coords[j]))
        gg = binary_gcd(basis)
        if gg.degree() > best:
            best = gg.degree()
            witness = tuple(basis)
            witness_gcd = gg
            if best >= ceiling:
                break

    if best > ceiling:
        raise SelfCheckError("gcd degree exceeded the subspace ceiling")
    return TwoVarsReport(d, m, best, witness, witness_gcd, K, ())


@dataclass(frozen=True)
class TwoVarsRowCheck:
    t: int
    reg_power: int
    predicted: int
    equal: bool


@dataclass(frozen=True)
class TwoVarsVerdict:
    d: int
    r: int
    rows: tuple
    equality_on_stable_rows: bool | None
    status: str
    K: int
    warnings: tuple
    report: TwoVarsReport | None = None


def twovars_verify(forms, t_max: int, K: int = DEFAULT_EXTENSION_BOUND,
                   window: int = 3, budget: int = DEFAULT_FIBER_BUDGET,
                   degree_ceiling: int = DEFAULT_DEGREE_CEILING) -> TwoVarsVerdict:
    """Check dt + r - 1 <= reg I^t on the stabilized rows of the power
    table, reporting where equality holds.

    r from the K-bounded enumeration is a lower bound for the value over
    the closed field, so the inequality is asserted fatally; equality is
    expected exactly when a maximizing subspace is defined within degree
    K."""
    from .asymptotics import STATUS_STABLE, power_table

    rep = twovars_r(forms, K, budget)
    ring = forms[0].ring
    I = Ideal(ring, tuple(forms))
    table = power_table(I, t_max, route="hilbert", window=window,
                        degree_ceiling=degree_ceiling)
    warnings = list(rep.warnings) + list(table.warnings)
    rows = []
    equality = None
    if table.status == STATUS_STABLE:
        for row in table.rows:
            if row.t < table.stable_from_t:
                continue
            predicted = rep.d * row.t + rep.r - 1
            if predicted > row.reg_power:
                raise SelfCheckError(
                    f"dt + r - 1 = {predicted} exceeds reg I^t = "
                    f"{row.reg_power} at t = {row.t}"
                )
            rows.append(TwoVarsRowCheck(row.t, row.reg_power, predicted,
                                        predicted == row.reg_power))
        equality = all(r.equal for r in rows)
    return TwoVarsVerdict(rep.d, rep.r, tuple(rows), equality, table.status,
                          K, tuple(warnings), rep)
