"""Hilbert functions of graded quotients via lead-term ideals.

The Hilbert series of S/I equals N(T) / (1-T)^n where N is the numerator of
the monomial ideal LT(I).  N is computed by a pivot recursion: splitting off
the most shared variable x gives N(J) = N(J + (x)) + T * N(J : x), with
pairwise-coprime generator sets as the closed-form base case.  Everything
downstream (Hilbert function values, Krull dimension, degree, finite-length
detection, top nonzero degree, power containment) reads off N.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DimensionError, UsageError
from .groebner import DEFAULT_DEGREE_CEILING, Ideal
from .polynomials import Monomial, PolyRing


@dataclass(frozen=True)
class HilbertFunction:
    """Values h(d) = dim_F (S/I)_d for 0 <= d <= through."""

    values: tuple
    through: int

    def value(self, d: int) -> int:
        if not 0 <= d <= self.through:
            raise UsageError(f"degree {d} outside computed range 0..{self.through}")
        return self.values[d]

    def __call__(self, d: int) -> int:
        return self.value(d)


# --- integer polynomial helpers (coefficient lists, index = degree) ---

def _zadd(a, b):
    n = max(len(a), len(b))
    return [
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
        for i in range(n)
    ]


def _zshift(a, k):
    return [0] * k + list(a)


def _zmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _strip(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _minimalize(gens):
    """Minimal generators of the monomial ideal spanned by exponent tuples."""
    gens = sorted(set(gens), key=lambda g: (sum(g), g))
    out = []
    for g in gens:
        if not any(all(o[i] <= g[i] for i in range(len(g))) for o in out):
            out.append(g)
    return out


def _numerator(gens) -> list:
    """Numerator of the Hilbert series of S/(monomial ideal), exact in Z[T]."""
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return [0]
    nvars = len(gens[0])
    counts = [0] * nvars
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    if max(counts) <= 1:
        # pairwise coprime: complete intersection of monomials
        out = [1]
        for g in gens:
            out = _zmul(out, [1] + [0] * (sum(g) - 1) + [-1])
        return out
    pivot = counts.index(max(counts))
    unit = tuple(1 if i == pivot else 0 for i in range(nvars))
    plus = _minimalize([g for g in gens if g[pivot] == 0] + [unit])
    quot = _minimalize([
        tuple(e - 1 if i == pivot and e > 0 else e for i, e in enumerate(g))
        for g in gens
    ])
    return _zadd(_numerator(plus), _zshift(_numerator(quot), 1))


def hilbert_numerator(I: Ideal, degree_ceiling: int = DEFAULT_DEGREE_CEILING) -> tuple:
    """Coefficients of N(T) with Hilbert series of S/I equal to N/(1-T)^n."""
    gb = I.groebner_basis(degree_ceiling)
    gens = [m.exps for m in gb.lead_monomials]
    out = _numerator(_minimalize(gens)) if gens else [1]
    return tuple(_strip(list(out)) or [0])


def hilbert_function(I: Ideal, d_max: int,
                     degree_ceiling: int = DEFAULT_DEGREE_CEILING) -> HilbertFunction:
    """h(d) = number of standard monomials of degree d, for 0 <= d <= d_max."""
    if d_max < 0:
        raise UsageError("d_max must be nonnegative")
    num = hilbert_numerator(I, degree_ceiling)
    coeffs = [num[d] if d < len(num) else 0 for d in range(d_max + 1)]
    for _ in range(I.ring.nvars):
        total = 0
        for d in range(d_max + 1):
            total += coeffs[d]
            coeffs[d] = total
    return HilbertFunction(tuple(coeffs), d_max)


def _numerator_split(I: Ideal, degree_ceiling: int):
    """(Q, c): N = Q * (1-T)^c with Q(1) != 0, plus the zero-numerator case."""
    num = list(hilbert_numerator(I, degree_ceiling))
    if not any(num):
        return None, I.ring.nvars
    c = 0
    while sum(num) == 0:
        total = 0
        quotient = []
        for coeff in num:
            total += coeff
            quotient.append(total)
        num = _strip(quotient)
        c += 1
    return num, c


def quotient_dimension(I: Ideal, degree_ceiling: int = DEFAULT_DEGREE_CEILING) -> int:
    """Krull dimension of S/I; -1 for the unit ideal."""
    Q, c = _numerator_split(I, degree_ceiling)
    if Q is None:
        return -1
    return I.ring.nvars - c


def quotient_degree(I: Ideal, degree_ceiling: int = DEFAULT_DEGREE_CEILING) -> int:
    """Multiplicity of S/I: Q(1) where N = Q * (1-T)^codim; 0 for the unit ideal."""
    Q, c = _numerator_split(I, degree_ceiling)
    if Q is None:
        return 0
    return sum(Q)


def finite_length_witness(I: Ideal,
                          degree_ceiling: int = DEFAULT_DEGREE_CEILING) -> str | None:
    """None when S/I has finite length; otherwise the name of a variable with
    no pure power among the lead terms."""
    gb = I.groebner_basis(degree_ceiling)
    ring = I.ring
    for i in range(ring.nvars):
        found = False
        for m in gb.lead_monomials:
            if all(e == 0 for j, e in enumerate(m.exps) if j != i):
                found = True
                break
        if not found:
            return ring.names[i]
    return None


def top_degree_finite(I: Ideal, degree_ceiling: int = DEFAULT_DEGREE_CEILING) -> int:
    """Largest d with h(d) != 0, for finite-length S/I; -1 for the unit ideal."""
    witness = finite_length_witness(I, degree_ceiling)
    if witness is not None:
        raise DimensionError(
            f"S/I is not finite length: variable {witness} has no pure power "
            "in the lead-term ideal"
        )
    num = list(hilbert_numerator(I, degree_ceiling))
    if not any(num):
        return -1
    for _ in range(I.ring.nvars):
        total = 0
        quotient = []
        for coeff in num:
            total += coeff
            quotient.append(total)
        num = _strip(quotient)
    return len(num) - 1


def m_power_containment(s: int, I: Ideal,
                        degree_ceiling: int = DEFAULT_DEGREE_CEILING) -> bool:
    """Whether m^s is contained in I, for finite-length S/I."""
    if s < 0:
        raise UsageError("power s must be nonnegative")
    return top_degree_finite(I, degree_ceiling) < s


def monomials_of_degree(ring: PolyRing, d: int):
    """All degree-d monomials of the ring, in a fixed deterministic order."""
    if d < 0:
        raise UsageError("degree must be nonnegative")
    n = ring.nvars
    for bars in itertools.combinations(range(d + n - 1), n - 1):
        exps = []
        prev = -1
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + n - 1 - prev - 1)
        yield Monomial(tuple(exps))
