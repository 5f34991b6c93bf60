"""The rank-two layer: Fricke coordinates, component tests, an explicit
two-parameter family of SL(2) representations and the symmetric-square bridge.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coords import extract
from .grp import RelationError, Representation, failing_relations, word
from .mat3 import Mat2
from .numtower import as_elem, simplify
from .poly import RatFunc, var

__all__ = [
    "GL2Coords",
    "SL2Coords",
    "classify_gl2",
    "classify_pgl2",
    "classify_sl2",
    "fricke",
    "is_irreducible",
    "riley_matrices",
    "riley_polynomial",
    "riley_rep",
    "sym2_bridge",
    "sym2_rep",
]

REDUCIBLE = "reducible-line"
IRREDUCIBLE = "irreducible-curve"


@dataclass(frozen=True)
class SL2Coords:
    """``x1 = tr a``, ``x2 = tr b``, ``y0 = tr t``."""

    x1: object
    x2: object
    y0: object


@dataclass(frozen=True)
class GL2Coords:
    """``v = tr t``, ``w = det t``, ``x1 = tr a``."""

    v: object
    w: object
    x1: object

    def __post_init__(self):
        if not as_elem(self.w):
            raise ValueError("w = det t must be nonzero")


def classify_sl2(c):
    x1, x2, y0 = (as_elem(v) for v in (c.x1, c.x2, c.y0))
    out = set()
    if x1 == 2 and x2 == 2:
        out.add(REDUCIBLE)
    if (x1 - 1) * (x2 - 1) == 1 and y0 * y0 == x1 + x2 + 1:
        out.add(IRREDUCIBLE)
    return out


def classify_pgl2(x1, x2, z0):
    """Components for the squared meridian trace ``z0 = y0²``."""
    x1, x2, z0 = as_elem(x1), as_elem(x2), as_elem(z0)
    out = set()
    if x1 == 2 and x2 == 2:
        out.add(REDUCIBLE)
    if (x1 - 1) * (x2 - 1) == 1 and z0 == x1 + x2 + 1:
        out.add(IRREDUCIBLE)
    return out


def classify_gl2(c):
    """``{"XTR", "X2"}`` memberships of a GL(2) character ``(v, w, x1)``."""
    v, w, x1 = as_elem(c.v), as_elem(c.w), as_elem(c.x1)
    if x1 == 1:
        raise ValueError("x1 = 1 is excluded")
    out = set()
    if x1 == 2:
        out.add("XTR")
    if (x1 * x1 + x1 - 1) / (x1 - 1) * w == v * v:
        out.add("X2")
    return out


def riley_matrices(s, u):
    s, u = as_elem(s), as_elem(u)
    if not s:
        raise ValueError("s must be nonzero")
    return Mat2([[s, 1], [0, 1 / s]]), Mat2([[s, 0], [u, 1 / s]])


@lru_cache(maxsize=1)
def riley_polynomial():
    """Condition on ``(s, u)`` for the Wirtinger relation, derived by expansion.

    With ``W = S T⁻¹ S⁻¹ T`` the relation reads ``W·S = T·W``.  The
    off-diagonal entries of ``W·S − T·W`` are ``s``-power multiples of one
    polynomial (the lower one also carries a factor ``u``); that polynomial
    is returned with its ``s``-power content removed.
    """
    s, u = var("s"), var("u")
    S = Mat2([[RatFunc(s), RatFunc(1)], [RatFunc(0), RatFunc(1, s)]])
    T = Mat2([[RatFunc(s), RatFunc(0)], [RatFunc(u), RatFunc(1, s)]])
    W = S @ T.adj() @ S.adj() @ T
    return (W @ S - T @ W)[0, 1].num.strip_power("s")


def riley_rep(s, u):
    """Relation-checked representation ``S ↦ [[s,1],[0,1/s]]``, ``T ↦ [[s,0],[u,1/s]]``."""
    S, T = riley_matrices(s, u)
    rep = Representation("ST", {"S": S, "T": T})
    bad = failing_relations(rep)
    if bad:
        raise RelationError(f"(s, u) does not satisfy {bad[0]}")
    return rep


def fricke(rep):
    """``SL2Coords`` of a rank-two representation."""
    return SL2Coords(simplify(rep(word("a")).trace()), simplify(rep(word("b")).trace()),
                     simplify(rep(word("t")).trace()))


def is_irreducible(rep):
    """Irreducible iff the commutator of the generators has trace ≠ 2."""
    return rep(word("S.T.S'.T'")).trace() != 2


def sym2_rep(rep2):
    if rep2.size != 2:
        raise ValueError("expected a 2×2 representation")
    return Representation(rep2.alphabet, {g: m.sym2() for g, m in rep2.gens.items()})


def sym2_bridge(rep2):
    """Trace coordinates of the symmetric square of a rank-two representation."""
    bad = failing_relations(rep2)
    if bad:
        raise RelationError(f"relation fails: {bad[0]}")
    return extract(sym2_rep(rep2))
