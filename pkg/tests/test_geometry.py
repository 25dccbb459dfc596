import pytest

from cmreg import messages
from cmreg.errors import (
    BudgetError,
    DimensionError,
    GeometryError,
    UsageError,
)
from cmreg.fields import GF, FieldElement
from cmreg.geometry import (
    ClosedPoint,
    ProjectionSpec,
    binary_gcd,
    check_finite,
    enumerate_closed_points,
    fiber_ideal,
    fiber_regularity,
    max_fiber_regularity,
    twovars_r,
    twovars_verify,
)
from cmreg.groebner import Ideal
from cmreg.hilbert import quotient_degree
from cmreg.polynomials import PolyRing


def ring2(p=7):
    return PolyRing(("x", "y"), field=GF(p))


def conic_spec(p=7):
    R = PolyRing(("x", "y", "z"), field=GF(p))
    x, y, z = R.variables()
    return ProjectionSpec(Ideal(R, (x * z - y * y,)), (x, z))


def twisted_cubic_spec(p=11):
    R = PolyRing(("x0", "x1", "x2", "x3"), field=GF(p))
    x0, x1, x2, x3 = R.variables()
    I = Ideal(R, (x0 * x2 - x1 * x1, x0 * x3 - x1 * x2, x1 * x3 - x2 * x2))
    forms = (
        x0 + x1.scale(2) + x2.scale(3) + x3.scale(4),
        x1 + x2.scale(5) + x3.scale(9),
    )
    return ProjectionSpec(I, forms)


# --- closed points ---


def projective_count(q, s):
    return (q ** (s + 1) - 1) // (q - 1)


def test_closed_point_counts_match_point_counts_over_extensions():
    # grouping rational points of P^s(GF(p^k)) by residue degree:
    # sum over d | k of d * (number of degree-d closed points)
    for p, s, K in ((7, 1, 2), (3, 2, 2), (5, 1, 3), (2, 1, 4)):
        by_k = {}
        for pt in enumerate_closed_points(p, K, s):
            by_k[pt.k] = by_k.get(pt.k, 0) + 1
        for k in range(1, K + 1):
            total = sum(d * by_k.get(d, 0) for d in range(1, k + 1) if k % d == 0)
            assert total == projective_count(p**k, s), (p, s, k)


def test_closed_point_fixture_counts():
    assert sum(1 for _ in enumerate_closed_points(7, 1, 1)) == 8
    assert sum(1 for _ in enumerate_closed_points(7, 2, 1)) == 29
    assert sum(1 for p in enumerate_closed_points(3, 1, 2)) == 13


def test_closed_points_are_normalized_orbit_representatives():
    for pt in enumerate_closed_points(5, 2, 1):
        field = pt.coords[0].field
        raws = [c.raw for c in pt.coords]
        # normalized: first nonzero coordinate is one
        lead = next(r for r in raws if r != field.zero)
        assert lead == field.one
        # representative: lexicographically least in its Frobenius orbit
        orbit = []
        cur = tuple(raws)
        while True:
            cur = tuple(field.frobenius(r) for r in cur)
            orbit.append(cur)
            if cur == tuple(raws):
                break
        assert len(orbit) == pt.k
        assert tuple(raws) == min(orbit)


def test_closed_point_enumeration_validation():
    with pytest.raises(UsageError):
        list(enumerate_closed_points(7, 0, 1))
    with pytest.raises(UsageError):
        list(enumerate_closed_points(7, 9, 1))


# --- projections and fibers ---


def test_projection_spec_validation():
    R = PolyRing(("x", "y", "z"), field=GF(7))
    x, y, z = R.variables()
    I = Ideal(R, (x * z - y * y,))
    with pytest.raises(UsageError):
        ProjectionSpec(I, ())
    with pytest.raises(UsageError):
        ProjectionSpec(I, (x, x.scale(2)))  # dependent
    with pytest.raises(UsageError):
        ProjectionSpec(I, (x * x,))  # not linear
    with pytest.raises(UsageError):
        ProjectionSpec(I, (ring2().variable(0),))
    spec = ProjectionSpec(I, (x, z))
    assert spec.s == 1


def test_check_finite_certificates():
    spec = conic_spec()
    assert check_finite(spec) == check_finite(spec)
    assert check_finite(spec).finite
    R = spec.ring
    x, y, _ = R.variables()
    bad = ProjectionSpec(spec.ideal, (x, y))  # center (0:0:1) lies on X
    cert = check_finite(bad)
    assert not cert.finite
    assert cert.witness == "z"
    with pytest.raises(GeometryError):
        max_fiber_regularity(bad, K=1)


def test_conic_projection_fibers():
    spec = conic_spec()
    rep = max_fiber_regularity(spec, K=1, epsilon=1)
    assert rep.max_regularity == 2
    assert rep.epsilon == 1
    assert rep.equals_epsilon_plus_1 is True
    assert rep.empty_fibers == 0
    assert not rep.partial
    assert len(rep.fibers) == 8
    for fib in rep.fibers:
        assert fib.degree == 2  # every fiber of the double cover
        assert fib.regularity == 2
    names = {str(pt) for pt in rep.argmax}
    assert {"(1:0)", "(0:1)"} <= names


def test_conic_ramified_fiber_ideal():
    # over (1:0) the fiber is the double point z = y^2 = 0
    spec = conic_spec()
    field = GF(7)
    pt = ClosedPoint(1, (field.element(1), field.element(0)))
    Z = fiber_ideal(spec, pt)
    R = spec.ring
    x, y, z = R.variables()
    assert Z.contains(z)
    assert Z.contains(y * y)
    assert not Z.contains(y)
    assert quotient_degree(Z) == 2
    deg, reg = fiber_regularity(Z)
    assert (deg, reg) == (2, 2)


def test_conic_split_fiber_is_two_reduced_points():
    # over (1:1) the conic meets x = z in two distinct rational points
    spec = conic_spec()
    field = GF(7)
    pt = ClosedPoint(1, (field.element(1), field.element(1)))
    Z = fiber_ideal(spec, pt)
    deg, reg = fiber_regularity(Z)
    assert (deg, reg) == (2, 2)
    # reduced: y^2 is not in the ideal, but y^2 - x^2 vanishes on both points
    R = spec.ring
    x, y, _ = R.variables()
    assert not Z.contains(y * y)
    assert Z.contains(y * y - x * x)


def test_identity_projection_of_the_line():
    R = ring2()
    x, y = R.variables()
    spec = ProjectionSpec(Ideal(R, ()), (x, y))
    rep = max_fiber_regularity(spec, K=2, epsilon=0)
    assert rep.max_regularity == 1
    assert rep.equals_epsilon_plus_1 is True
    assert len(rep.fibers) == 29
    assert all(f.degree == 1 and f.regularity == 1 for f in rep.fibers)


def test_twisted_cubic_general_projection():
    spec = twisted_cubic_spec()
    rep = max_fiber_regularity(spec, K=1, epsilon=1)
    assert len(rep.fibers) == 12  # P^1(GF(11))
    assert all(f.degree == 3 for f in rep.fibers)
    assert rep.max_regularity == 2
    assert rep.equals_epsilon_plus_1 is True
    assert rep.empty_fibers == 0


def test_twisted_cubic_coordinate_projection_ramified_fiber():
    # projecting to (x0 : x3): over (1:0) the fiber is curvilinear of
    # degree 3 and the identity max reg = eps + 1 = 2 still holds
    R = PolyRing(("x0", "x1", "x2", "x3"), field=GF(11))
    x0, x1, x2, x3 = R.variables()
    I = Ideal(R, (x0 * x2 - x1 * x1, x0 * x3 - x1 * x2, x1 * x3 - x2 * x2))
    spec = ProjectionSpec(I, (x0, x3))
    field = GF(11)
    pt = ClosedPoint(1, (field.element(1), field.element(0)))
    Z = fiber_ideal(spec, pt)
    deg, reg = fiber_regularity(Z)
    assert (deg, reg) == (3, 2)
    assert Z.contains(x3)
    assert Z.contains(x1 * x1 - x0 * x2)
    assert Z.contains(x2 * x2)
    assert not Z.contains(x2)
    rep = max_fiber_regularity(spec, K=1, epsilon=1)
    assert rep.max_regularity == 2
    assert rep.equals_epsilon_plus_1 is True


def test_fibers_of_galois_conjugate_points_agree():
    spec = conic_spec()
    pts = [p for p in enumerate_closed_points(7, 2, 1) if p.k == 2]
    for pt in pts[:4]:
        field = pt.coords[0].field
        conj = ClosedPoint(
            2,
            tuple(
                FieldElement(field, field.frobenius(c.raw)) for c in pt.coords
            ),
        )
        assert conj.coords != pt.coords
        a = fiber_regularity(fiber_ideal(spec, pt))
        b = fiber_regularity(fiber_ideal(spec, conj))
        assert a == b


def test_fiber_invariants_are_bounded_by_the_cover_degree():
    # degree of each fiber is between 1 and deg X, regularity at most degree
    spec = twisted_cubic_spec()
    rep = max_fiber_regularity(spec, K=2, epsilon=1)
    deg_X = quotient_degree(spec.ideal)
    for fib in rep.fibers:
        assert 1 <= fib.degree <= deg_X
        assert 1 <= fib.regularity <= fib.degree


def test_projection_of_a_point_counts_empty_fibers():
    R = PolyRing(("x", "y", "z"), field=GF(7))
    x, y, z = R.variables()
    point = Ideal(R, (y, z))  # the single point (1:0:0)
    spec = ProjectionSpec(point, (x, y))
    rep = max_fiber_regularity(spec, K=1, epsilon=0)
    assert len(rep.fibers) == 1
    assert rep.empty_fibers == 7
    assert rep.max_regularity == 1
    assert str(rep.fibers[0].point) == "(1:0)"


def test_fiber_search_budget_carries_partial_report():
    spec = conic_spec()
    with pytest.raises(BudgetError) as exc:
        max_fiber_regularity(spec, K=1, epsilon=1, budget=3)
    partial = exc.value.partial
    assert partial.partial
    assert partial.max_regularity == 2
    assert messages.partial_lower_bound() in partial.warnings


def test_fiber_search_requires_prime_base():
    R = PolyRing(("x", "y"), field=GF(7, 2))
    x, y = R.variables()
    spec = ProjectionSpec(Ideal(R, ()), (x, y))
    with pytest.raises(UsageError):
        max_fiber_regularity(spec, K=2)


def test_fiber_regularity_rejects_positive_dimension():
    R = PolyRing(("x", "y", "z"), field=GF(7))
    x, _, _ = R.variables()
    with pytest.raises(DimensionError):
        fiber_regularity(Ideal(R, (x,)))  # a line, not points


# --- binary forms ---


def test_binary_gcd_fixtures():
    R = ring2()
    x, y = R.variables()
    assert binary_gcd((x**3 * y, x**2 * y**2)) == x**2 * y
    assert binary_gcd((x * x - y * y, x * x + x * y)) == x + y
    assert binary_gcd((x * x, y * y)).degree() == 0
    assert binary_gcd((x.scale(3),)) == x
    with pytest.raises(UsageError):
        binary_gcd((R.zero(),))


def test_binary_gcd_product_property():
    R = ring2()
    x, y = R.variables()
    samples = [x + y, x - y, x, y, x + y.scale(3)]
    for i, a in enumerate(samples):
        for b in samples[i + 1:]:
            common = (x + y.scale(2)) ** 2
            g = binary_gcd((a * common, b * common))
            # gcd contains the common factor; a and b here are coprime
            assert g == common.monic() * binary_gcd((a, b))


def test_twovars_r_fixtures():
    R = ring2(101)
    x, y = R.variables()
    two = twovars_r((x * x, y * y))
    assert (two.d, two.dim_V, two.r) == (2, 2, 2)
    full = twovars_r((x * x, x * y, y * y))
    assert (full.d, full.dim_V, full.r) == (2, 3, 1)
    assert full.witness_gcd.degree() == 1
    cuspish = twovars_r((x**3, x * x * y, y**3))
    assert (cuspish.d, cuspish.r) == (3, 2)
    assert cuspish.witness_gcd == x * x
    for f in cuspish.witness:
        assert f.homogeneous_degree() == 3
        # the witness basis really is divisible by the witness gcd
        assert binary_gcd((f, cuspish.witness_gcd)) == cuspish.witness_gcd


def test_twovars_r_validation():
    R = ring2(101)
    x, y = R.variables()
    with pytest.raises(UsageError):
        twovars_r((x * x,))  # dim V < 2
    with pytest.raises(UsageError):
        twovars_r((x * x, x * x + y * y, y * y, x * y))  # dependent
    with pytest.raises(UsageError):
        twovars_r((x * x, x * y))  # gcd is x, not 1
    with pytest.raises(UsageError):
        twovars_r((x * x, y))  # mixed degrees
    R3 = PolyRing(("x", "y", "z"), field=GF(101))
    with pytest.raises(UsageError):
        twovars_r((R3.variable(0) ** 2, R3.variable(1) ** 2))


def test_twovars_budget_carries_partial_report():
    R = ring2(101)
    x, y = R.variables()
    with pytest.raises(BudgetError) as exc:
        twovars_r((x**3, x * x * y, y**3), budget=1)
    partial = exc.value.partial
    assert partial.r == 1  # the first dual point only reaches gcd degree 1
    assert messages.partial_lower_bound() in partial.warnings


def test_twovars_verify_fixtures():
    R = ring2(101)
    x, y = R.variables()
    m2 = twovars_verify((x * x, x * y, y * y), t_max=4)
    assert m2.r == 1
    assert m2.equality_on_stable_rows is True
    for row in m2.rows:
        assert row.reg_power == 2 * row.t
        assert row.predicted == 2 * row.t
    squares = twovars_verify((x * x, y * y), t_max=4)
    assert squares.r == 2
    assert squares.equality_on_stable_rows is True
    for row in squares.rows:
        assert row.reg_power == 2 * row.t + 1
    assert squares.report is not None
    assert squares.report.dim_V == 2
