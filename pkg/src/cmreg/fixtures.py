"""Shipped fixture ideals used by tests and the documentation examples."""

from __future__ import annotations

import json
from importlib import resources

from .fields import GF, DEFAULT_PRIME
from .groebner import Ideal
from .orders import GREVLEX, MonomialOrder
from .polynomials import Monomial, PolyRing, Polynomial


def projective_plane_complex() -> dict:
    """The 6-vertex triangulation of the real projective plane, as shipped."""
    path = resources.files("cmreg.data") / "rp2_triangulation.json"
    return json.loads(path.read_text())


def projective_plane_ideal(p: int = DEFAULT_PRIME) -> Ideal:
    """Stanley-Reisner ideal of the 6-vertex projective-plane triangulation.

    Ten squarefree cubic monomial generators (the minimal non-faces, which
    are the complements of the ten faces) in GF(p)[x1..x6] under grevlex.
    """
    data = projective_plane_complex()
    vertices = data["vertices"]
    faces = [frozenset(f) for f in data["faces"]]
    field = GF(p)
    names = tuple(f"x{v}" for v in vertices)
    ring = PolyRing(names, field, MonomialOrder(GREVLEX, len(names)))
    index = {v: i for i, v in enumerate(vertices)}
    gens = []
    for face in sorted(sorted(f) for f in faces):
        complement = [v for v in vertices if v not in face]
        exps = [0] * len(vertices)
        for v in complement:
            exps[index[v]] = 1
        gens.append(Polynomial(ring, {Monomial(tuple(exps)): field.one}))
    return Ideal(ring, gens)
