"""Independent brute-force oracles used to validate the fast paths.

Everything here avoids the library's Groebner/Hilbert machinery on purpose:
ranks come from dense Gaussian elimination over GF(p), monomial enumeration
from itertools, so agreement is meaningful evidence.
"""

import itertools
from math import comb


def gf_rank(p, rows):
    """Rank of a dense matrix over GF(p) by Gaussian elimination."""
    mat = [[v % p for v in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [v * inv % p for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(a - f * b) % p for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def degree_monomials(nvars, d):
    """All exponent tuples of total degree d (stars and bars)."""
    if nvars == 1:
        return [(d,)]
    out = []
    for bars in itertools.combinations(range(d + nvars - 1), nvars - 1):
        exps = []
        prev = -1
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + nvars - 2 - prev)
        out.append(tuple(exps))
    return out


def hilbert_by_rank(p, nvars, gens, d):
    """h_{S/I}(d) for I generated by ``gens`` (lists of (exps, coeff)),
    via the rank of the degree-d coefficient matrix of I."""
    basis = degree_monomials(nvars, d)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for gen in gens:
        gdeg = sum(gen[0][0])
        if gdeg > d:
            continue
        for mult in degree_monomials(nvars, d - gdeg):
            row = [0] * len(basis)
            for exps, c in gen:
                shifted = tuple(a + b for a, b in zip(exps, mult))
                row[index[shifted]] = c % p
            rows.append(row)
    return len(basis) - gf_rank(p, rows)


def poly_to_dense(f):
    """Library polynomial -> [(exps, int coeff)] for the oracle (prime
    fields only, where raw coefficients are ints)."""
    return [(m.exps, c) for m, c in f.sorted_terms()]


def free_module_hilbert(nvars, twists, d):
    """h of a twisted free module sum_j S(-j) at degree d."""
    total = 0
    for j in twists:
        e = d - j
        if e >= 0:
            total += comb(e + nvars - 1, nvars - 1)
    return total
