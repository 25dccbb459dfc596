"""Graded free modules, Schreyer syzygies, minimal resolutions, Betti tables.

Resolutions are built non-minimally: the reduced Groebner basis of the ideal
is the first differential, and each further level is the syzygy module of the
previous basis under the induced Schreyer order.  Schreyer's theorem makes
every level a Groebner basis for free, so no module Buchberger loop runs on
the tower.  Minimization then cancels constant entries by the Gaussian
elimination lemma: cancelling a unit at (r, c) of D_k applies a Schur update
to D_k only, while D_{k+1} just loses row c and D_{k-1} just loses column r.

Betti numbers and regularity read off the surviving twists.  Basis elements at
each level are sorted with lead monomials lexicographically decreasing inside
each position group; that keeps the variables supporting level-k lead
quotients shrinking, which bounds the tower length by nvars + 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SelfCheckError, UsageError
from .groebner import DEFAULT_DEGREE_CEILING, GroebnerBasis, Ideal
from .polynomials import Monomial, Polynomial


@dataclass(frozen=True)
class FreeModule:
    """A graded free module given by its twists: F = sum_i S(-twists[i])."""

    twists: tuple

    @property
    def rank(self) -> int:
        return len(self.twists)


class ModuleElement:
    """Sparse element of a graded free module: (basis index, Polynomial) pairs.

    Homogeneity is enforced: deg(component) + twist(index) must agree across
    the support.
    """

    __slots__ = ("free", "ring", "components", "degree")

    def __init__(self, free: FreeModule, ring, components):
        pairs = []
        degree = None
        for idx, poly in components:
            if not 0 <= idx < free.rank:
                raise UsageError("basis index out of range")
            if not isinstance(poly, Polynomial) or poly.ring != ring:
                raise UsageError("component lives in a different ring")
            if poly.is_zero():
                continue
            d = poly.homogeneous_degree()
            if d is None:
                raise UsageError("module element components must be homogeneous")
            total = d + free.twists[idx]
            if degree is None:
                degree = total
            elif degree != total:
                raise UsageError("module element is not homogeneous across positions")
            pairs.append((idx, poly))
        pairs.sort(key=lambda pair: pair[0])
        self.free = free
        self.ring = ring
        self.components = tuple(pairs)
        self.degree = degree

    def is_zero(self) -> bool:
        return not self.components

    def __repr__(self):
        inside = ", ".join(f"e{idx}*({poly})" for idx, poly in self.components)
        return f"ModuleElement({inside or '0'})"


class SchreyerOrder:
    """Term order on a free module, flattened through the syzygy tower.

    key(pos, mon) compares the image lead monomial mon * weights[pos] in the
    ring order, breaks ties along the recorded position path, then by the
    position itself (smaller position wins).
    """

    __slots__ = ("ring", "weights", "ties", "_ringkey", "_negties")

    def __init__(self, ring, weights, ties):
        self.ring = ring
        self.weights = tuple(weights)
        self.ties = tuple(ties)
        self._ringkey = ring.order.key
        self._negties = tuple(tuple(-x for x in t) for t in self.ties)

    @classmethod
    def trivial(cls, ring, rank: int):
        one = ring.one_monomial
        return cls(ring, (one,) * rank, ((),) * rank)

    def key(self, pos: int, mon: Monomial):
        return (self._ringkey(mon.mul(self.weights[pos]).exps),
                self._negties[pos], -pos)

    def induced(self, leads):
        """Order on the next level, given (pos, mon) leads of this level's basis."""
        weights = tuple(mon.mul(self.weights[pos]) for pos, mon in leads)
        ties = tuple(self.ties[pos] + (pos,) for pos, mon in leads)
        return SchreyerOrder(self.ring, weights, ties)


# --- flat-dict module arithmetic: elements as {(pos, Monomial): coeff} ---

def _flat(element: ModuleElement) -> dict:
    out = {}
    for idx, poly in element.components:
        for m, c in poly._terms.items():
            out[(idx, m)] = c
    return out


def _unflat(flat: dict, free: FreeModule, ring) -> ModuleElement:
    per_pos = {}
    for (pos, m), c in flat.items():
        per_pos.setdefault(pos, {})[m] = c
    comps = [(pos, Polynomial(ring, terms)) for pos, terms in sorted(per_pos.items())]
    return ModuleElement(free, ring, comps)


def _module_axpy(work: dict, field, coeff, u: Monomial, terms: dict):
    """work -= coeff * u * terms, in place."""
    zero = field.zero
    one_u = u.is_one()
    for (p, m), c in terms.items():
        pm = (p, m) if one_u else (p, u.mul(m))
        v = field.sub(work.get(pm, zero), field.mul(coeff, c))
        if v == zero:
            work.pop(pm, None)
        else:
            work[pm] = v


def _module_reduce(start: dict, basis, leads, order: SchreyerOrder, field,
                   collect: bool = False):
    """Fully reduce a flat element against basis (list of flat dicts).

    leads[i] = (pos, Monomial, coeff) is the lead of basis[i] under ``order``.
    Returns (remainder, quotients) where quotients maps (basis index, Monomial)
    to a coefficient when ``collect`` is set.
    """
    work = dict(start)
    out = {}
    quot = {} if collect else None
    kcache = {}

    def mkey(pm):
        k = kcache.get(pm)
        if k is None:
            k = order.key(*pm)
            kcache[pm] = k
        return k

    while work:
        pm = max(work, key=mkey)
        pos, mon = pm
        c = work.pop(pm)
        hit = None
        for idx, (lp, lm, lc) in enumerate(leads):
            if lp == pos and lm.divides(mon):
                hit = (idx, lm, lc)
                break
        if hit is None:
            out[pm] = c
            continue
        idx, lm, lc = hit
        u = mon.quotient(lm)
        factor = field.div(c, lc)
        if collect:
            key2 = (idx, u)
            prev = quot.get(key2, field.zero)
            quot[key2] = field.add(prev, factor)
        work[pm] = c
        _module_axpy(work, field, factor, u, basis[idx])
    return out, quot


def module_groebner(generators, order: SchreyerOrder | None = None):
    """Groebner basis of the submodule spanned by ``generators``.

    S-pairs are formed only between elements sharing a lead position; the
    result is interreduced and sorted by descending lead.
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        return []
    free = gens[0].free
    ring = gens[0].ring
    for g in gens:
        if g.free != free or g.ring != ring:
            raise UsageError("generators live in different modules")
    if order is None:
        order = SchreyerOrder.trivial(ring, free.rank)
    field = ring.field

    G = []
    leads = []
    pairs = []

    def install(flat):
        red, _ = _module_reduce(flat, G, leads, order, field)
        if not red:
            return
        pm = max(red, key=lambda t: order.key(*t))
        lc = red[pm]
        inv = field.inv(lc)
        red = {k: field.mul(inv, v) for k, v in red.items()}
        idx = len(G)
        for i, (lp, lm, _) in enumerate(leads):
            if lp == pm[0]:
                pairs.append((i, idx))
        G.append(red)
        leads.append((pm[0], pm[1], field.one))

    for g in sorted(gens, key=lambda e: order.key(*max(_flat(e), key=lambda t: order.key(*t)))):
        install(_flat(g))

    while pairs:
        pairs.sort(key=lambda ij: order.key(
            leads[ij[0]][0],
            leads[ij[0]][1].lcm(leads[ij[1]][1])))
        i, j = pairs.pop(0)
        pi, mi, ci = leads[i]
        pj, mj, cj = leads[j]
        lcm = mi.lcm(mj)
        u, v = lcm.quotient(mi), lcm.quotient(mj)
        work = {}
        _module_axpy(work, field, field.neg(field.inv(ci)), u, G[i])
        _module_axpy(work, field, field.inv(cj), v, G[j])
        install(work)

    # interreduce: minimal leads, then tail reduction
    idx_sorted = sorted(range(len(G)),
                        key=lambda i: order.key(leads[i][0], leads[i][1]))
    keep = []
    for i in idx_sorted:
        p, m, _ = leads[i]
        if not any(leads[j][0] == p and leads[j][1].divides(m) for j in keep):
            keep.append(i)
    final = []
    for i in keep:
        others = [G[j] for j in keep if j != i]
        other_leads = [leads[j] for j in keep if j != i]
        red, _ = _module_reduce(G[i], others, other_leads, order, field)
        final.append(red)
    final.sort(key=lambda f: order.key(*max(f, key=lambda t: order.key(*t))),
               reverse=True)
    return [_unflat(f, free, ring) for f in final]


# --- Schreyer syzygies ---

def _syzygy_step(ring, basis, leads, order: SchreyerOrder, twists):
    """One tower level: syzygies of a module GB, pruned, sorted, with the
    induced order and twists for the next level.

    Returns (sigmas, sigma_leads, next_order, next_twists) where each sigma is
    a flat dict over the basis-index positions.
    """
    field = ring.field
    groups = {}
    for i, (p, m, c) in enumerate(leads):
        groups.setdefault(p, []).append(i)

    kept = []
    for p, members in sorted(groups.items()):
        for i in members:
            mi = leads[i][1]
            cands = []
            for j in members:
                if j <= i:
                    continue
                u = mi.lcm(leads[j][1]).quotient(mi)
                cands.append((u.degree, u.exps, j, u))
            cands.sort(key=lambda t: t[:3])
            chosen = []
            for _, _, j, u in cands:
                if not any(k.divides(u) for k, _ in chosen):
                    chosen.append((u, j))
            kept.extend((i, j, u) for u, j in chosen)

    sigmas = []
    for i, j, u in kept:
        pi, mi, ci = leads[i]
        pj, mj, cj = leads[j]
        lcm = mi.lcm(mj)
        v = lcm.quotient(mj)
        ratio = field.div(ci, cj)
        work = {}
        _module_axpy(work, field, field.neg(field.one), u, basis[i])
        _module_axpy(work, field, ratio, v, basis[j])
        rem, quot = _module_reduce(work, basis, leads, order, field, collect=True)
        if rem:
            raise SelfCheckError("S-pair of a syzygy-level basis did not reduce to zero")
        sig = {(i, u): field.one}
        key_j = (j, v)
        sig[key_j] = field.sub(sig.get(key_j, field.zero), ratio)
        for (idx, um), q in quot.items():
            prev = sig.get((idx, um), field.zero)
            val = field.sub(prev, q)
            if val == field.zero:
                sig.pop((idx, um), None)
            else:
                sig[(idx, um)] = val
        sigmas.append(((i, tuple(-e for e in u.exps), j), sig, (i, u)))

    sigmas.sort(key=lambda t: t[0])
    sig_flats = [s for _, s, _ in sigmas]
    sig_leads = [(i, u, field.one) for _, _, (i, u) in sigmas]
    # order on the free module the sigmas live in, induced by the basis leads
    next_order = order.induced([(p, m) for p, m, _ in leads])
    next_twists = [twists[i] + u.degree for _, _, (i, u) in sigmas]
    for sig, (i, u, _) in zip(sig_flats, sig_leads):
        if max(sig, key=lambda t: next_order.key(*t)) != (i, u):
            raise SelfCheckError("syzygy lead differs from its Schreyer prediction")
    return sig_flats, sig_leads, next_order, next_twists


def syzygies(G, degree_ceiling: int = DEFAULT_DEGREE_CEILING):
    """Generators of the syzygy module of a Groebner basis.

    Accepts an ideal GroebnerBasis (embedded at position 0) or a list of
    ModuleElements already forming a module GB.  One syzygy per kept S-pair;
    pairs whose lead quotient is divisible by another kept quotient at the
    same position are pruned (the pruned set is still a basis).
    """
    if isinstance(G, GroebnerBasis):
        ring = G.ring
        elems = sorted(G.elements, key=lambda g: g.lead_monomial().exps,
                       reverse=True)
        basis = [{(0, m): c for m, c in g._terms.items()} for g in elems]
        leads = [(0, g.lead_monomial(), g.lead_coefficient()) for g in elems]
        order = SchreyerOrder.trivial(ring, 1)
        twists = [g.homogeneous_degree() for g in elems]
        free = FreeModule(tuple(twists))
    else:
        elems = [g for g in G if not g.is_zero()]
        if not elems:
            return []
        ring = elems[0].ring
        free = FreeModule(tuple(e.degree for e in elems))
        order0 = SchreyerOrder.trivial(ring, elems[0].free.rank)
        basis = [_flat(e) for e in elems]
        leads = []
        for b in basis:
            pm = max(b, key=lambda t: order0.key(*t))
            leads.append((pm[0], pm[1], b[pm]))
        order = order0
        twists = [e.degree for e in elems]

    sig_flats, _, _, _ = _syzygy_step(ring, basis, leads, order, twists)
    return [_unflat(s, free, ring) for s in sig_flats]


# --- resolutions ---

class Resolution:
    """A complex of free modules F_0 <- F_1 <- ... with graded differentials.

    Differentials are sparse maps {(row, col): Polynomial}; differentials[k]
    is the map F_{k+1} -> F_k.
    """

    __slots__ = ("ring", "frees", "differentials", "minimal")

    def __init__(self, ring, frees, differentials, minimal):
        self.ring = ring
        self.frees = tuple(frees)
        self.differentials = tuple(dict(D) for D in differentials)
        self.minimal = minimal

    @property
    def length(self) -> int:
        return len(self.frees) - 1

    def is_complex(self) -> bool:
        """Whether consecutive differentials compose to zero."""
        for k in range(len(self.differentials) - 1):
            A, B = self.differentials[k], self.differentials[k + 1]
            rows_of = {}
            for (r, c), p in A.items():
                rows_of.setdefault(c, []).append((r, p))
            sums = {}
            for (r, c), p in B.items():
                for s, q in rows_of.get(r, ()):
                    key = (s, c)
                    acc = sums.get(key)
                    prod = q * p
                    sums[key] = prod if acc is None else acc + prod
            if any(not v.is_zero() for v in sums.values()):
                return False
        return True

    def has_constant_entry(self) -> bool:
        return any(p.degree() == 0
                   for D in self.differentials for p in D.values())


class BettiTable:
    """Graded Betti numbers beta_{i,j} with the usual grid rendering."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = {k: v for k, v in entries.items() if v}

    def beta(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def regularity(self) -> int:
        if not self.entries:
            raise UsageError("Betti table of the zero module has no regularity")
        return max(j - i for i, j in self.entries)

    def projective_dimension(self) -> int:
        if not self.entries:
            raise UsageError("Betti table of the zero module has no projective dimension")
        return max(i for i, _ in self.entries)

    def as_json_map(self) -> dict:
        return {f"{i},{j}": self.entries[(i, j)]
                for i, j in sorted(self.entries)}

    def render(self) -> str:
        if not self.entries:
            return "(zero module)"
        imax = max(i for i, _ in self.entries)
        rmin = min(j - i for i, j in self.entries)
        rmax = max(j - i for i, j in self.entries)
        cols = list(range(imax + 1))
        grid = []
        header = [""] + [str(i) for i in cols]
        grid.append(header)
        totals = ["total:"] + [
            str(sum(v for (i, j), v in self.entries.items() if i == c) or ".")
            for c in cols
        ]
        grid.append(totals)
        for r in range(rmin, rmax + 1):
            row = [f"{r}:"]
            for c in cols:
                v = self.entries.get((c, c + r), 0)
                row.append(str(v) if v else ".")
            grid.append(row)
        widths = [max(len(row[k]) for row in grid) for k in range(len(header))]
        lines = [
            " ".join(cell.rjust(widths[k]) for k, cell in enumerate(row))
            for row in grid
        ]
        return "\n".join(lines)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __repr__(self):
        return f"BettiTable({self.as_json_map()})"


def _schreyer_tower(J: Ideal, degree_ceiling: int):
    """Non-minimal resolution of S/J: free modules and differentials."""
    ring = J.ring
    gb = J.groebner_basis(degree_ceiling)
    frees = [FreeModule((0,))]
    diffs = []
    if not gb.elements:
        return frees, diffs
    cols = sorted(gb.elements, key=lambda g: g.lead_monomial().exps, reverse=True)
    basis = [{(0, m): c for m, c in g._terms.items()} for g in cols]
    leads = [(0, g.lead_monomial(), g.lead_coefficient()) for g in cols]
    order = SchreyerOrder.trivial(ring, 1)
    twists = [g.homogeneous_degree() for g in cols]
    frees.append(FreeModule(tuple(twists)))
    diffs.append({(0, c): g for c, g in enumerate(cols)})

    while True:
        sig_flats, sig_leads, next_order, next_twists = _syzygy_step(
            ring, basis, leads, order, twists)
        if not sig_flats:
            return frees, diffs
        if len(diffs) > ring.nvars + 1:
            raise SelfCheckError("syzygy tower exceeded its length bound")
        D = {}
        for cidx, sig in enumerate(sig_flats):
            per_row = {}
            for (pos, m), c in sig.items():
                per_row.setdefault(pos, {})[m] = c
            for row, terms in per_row.items():
                D[(row, cidx)] = Polynomial(ring, terms)
        frees.append(FreeModule(tuple(next_twists)))
        diffs.append(D)
        basis, leads, order, twists = (sig_flats, sig_leads, next_order,
                                       next_twists)


def _minimize(ring, frees, diffs):
    """Cancel constant entries level by level; returns (frees, diffs) minimal."""
    field = ring.field
    ids = [list(range(f.rank)) for f in frees]
    twists = [dict(enumerate(f.twists)) for f in frees]
    mats = [dict(D) for D in diffs]

    for k in range(len(mats)):
        while True:
            pivot = None
            for rc in sorted(mats[k]):
                if mats[k][rc].degree() == 0:
                    pivot = rc
                    break
            if pivot is None:
                break
            r, c = pivot
            unit = mats[k][pivot].lead_coefficient()
            inv = field.inv(unit)
            col_c = {}
            row_r = {}
            dead = []
            for (s, j), p in mats[k].items():
                if j == c:
                    dead.append((s, j))
                    if s != r:
                        col_c[s] = p
                elif s == r:
                    dead.append((s, j))
                    row_r[j] = p
            for key in dead:
                del mats[k][key]
            for s, ps in col_c.items():
                scaled = ps.scale(inv)
                for j, pj in row_r.items():
                    delta = scaled * pj
                    old = mats[k].get((s, j))
                    new = -delta if old is None else old - delta
                    if new.is_zero():
                        mats[k].pop((s, j), None)
                    else:
                        mats[k][(s, j)] = new
            ids[k].remove(r)
            ids[k + 1].remove(c)
            del twists[k][r]
            del twists[k + 1][c]
            if k + 1 < len(mats):
                for key in [key for key in mats[k + 1] if key[0] == c]:
                    del mats[k + 1][key]
            if k >= 1:
                for key in [key for key in mats[k - 1] if key[1] == r]:
                    del mats[k - 1][key]

    # rebuild positional indexing, truncating once ranks vanish
    cut = len(ids)
    for lvl, lst in enumerate(ids):
        if not lst:
            cut = lvl
            break
    for lvl in range(cut, len(ids)):
        if ids[lvl] and lvl > cut:
            raise SelfCheckError("minimized complex has a gap")
    ids = ids[:cut]
    out_frees = []
    out_diffs = []
    for lvl, lst in enumerate(ids):
        out_frees.append(FreeModule(tuple(twists[lvl][i] for i in lst)))
        if lvl:
            rowpos = {i: a for a, i in enumerate(ids[lvl - 1])}
            colpos = {i: a for a, i in enumerate(lst)}
            D = {}
            for (r, c), p in mats[lvl - 1].items():
                D[(rowpos[r], colpos[c])] = p
            out_diffs.append(D)
    return out_frees, out_diffs


def _betti_from_frees(frees, shift: int = 0) -> BettiTable:
    entries = {}
    for i, free in enumerate(frees):
        if i + shift < 0:
            continue
        for j in free.twists:
            key = (i + shift, j)
            entries[key] = entries.get(key, 0) + 1
    return BettiTable(entries)


def minimal_free_resolution(J: Ideal, of: str = "quotient",
                            degree_ceiling: int = DEFAULT_DEGREE_CEILING):
    """Minimal graded free resolution of S/J or of J, with its Betti table."""
    if of not in ("quotient", "ideal"):
        raise UsageError(f"unknown resolution target {of!r}")
    frees, diffs = _schreyer_tower(J, degree_ceiling)
    frees, diffs = _minimize(J.ring, frees, diffs)
    if of == "quotient":
        res = Resolution(J.ring, frees, diffs, True)
        return res, _betti_from_frees(frees)
    # the resolution of the ideal is the quotient's with F_0 = S stripped
    res = Resolution(J.ring, frees[1:] or [FreeModule(())], diffs[1:], True)
    return res, _betti_from_frees(frees[1:], shift=0)


def regularity(J: Ideal, of: str = "ideal",
               degree_ceiling: int = DEFAULT_DEGREE_CEILING) -> int:
    """Castelnuovo-Mumford regularity of J or of S/J.

    Conventions: the zero ideal (all of projective space) has regularity 1 as
    an ideal and 0 as a quotient; the unit ideal has regularity 0 as an ideal
    (it is S) and -1 as a quotient (top-degree convention for the zero
    module).
    """
    if of not in ("quotient", "ideal"):
        raise UsageError(f"unknown regularity target {of!r}")
    if J.is_zero_ideal():
        return 1 if of == "ideal" else 0
    gb = J.groebner_basis(degree_ceiling)
    if gb.elements and gb.elements[0].degree() == 0:
        # unit ideal: S as a module / the zero quotient
        return 0 if of == "ideal" else -1
    _, betti = minimal_free_resolution(J, "quotient", degree_ceiling)
    reg_quotient = betti.regularity()
    return reg_quotient + 1 if of == "ideal" else reg_quotient
