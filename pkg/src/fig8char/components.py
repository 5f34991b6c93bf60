"""Equation catalogs of the five components and the point classifier.

Membership in the totally reducible component and in ``V0``, ``V1``, ``V2``
is the vanishing of a catalog of polynomials shipped as data files.  The
partially reducible component is only known through a parametrization, so
its membership is decided by recovering the parameter ``w`` as a common
root of three cubics and then testing the remaining relation.
"""

from __future__ import annotations

from importlib import resources

from .coords import CharCoords, formal_lift, lift_orbit, vanishes_on_orbit
from .numtower import (
    Cyclo12,
    QuadExt,
    as_elem,
    common_modulus,
    roots_in_field,
    simplify,
    sqrt_adjoin,
)
from .poly import UPoly, gcd_univar, parse_poly, var

__all__ = [
    "COMPONENTS",
    "INTERSECTION_FIXTURES",
    "ComponentSet",
    "EquationCatalog",
    "boundary_curve",
    "boundary_curve_alpha",
    "catalog",
    "classify",
    "classify_orbit",
    "reducible_curve",
    "sextic_discriminant_check",
    "w_catalog",
    "w_component_of",
    "xpr_parameters",
    "xpr_xtr_curve",
]

COMPONENTS = ("XTR", "XPR", "V0", "V1", "V2")

_FILES = {
    "XTR": "xtr.poly",
    "V0": "v0_radical.poly",
    "V0-system": "v0_system.poly",
    "V1": "v1.poly",
    "V2": "v2.poly",
}


class EquationCatalog:
    """Named list of polynomials with one source line per polynomial."""

    def __init__(self, name, polys, notes):
        self.name = name
        self.polys = list(polys)
        self.notes = list(notes)

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def vanishes_at(self, point):
        return all(not p.eval(point) for p in self.polys)

    def __repr__(self):
        return f"EquationCatalog({self.name!r}, {len(self.polys)} polynomials)"


def _read(filename):
    text = resources.files("fig8char").joinpath("data", filename).read_text(encoding="utf-8")
    entries = []
    comment = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            comment.append(line[1:].strip())
            continue
        label = None
        if ":" in line:
            label, line = (part.strip() for part in line.split(":", 1))
        entries.append((label, parse_poly(line), " ".join(comment)))
    return entries


_CACHE = {}


def catalog(name):
    """Catalog ``XTR``, ``V0``, ``V1``, ``V2`` or ``V0-system``."""
    if name not in _CACHE:
        if name not in _FILES:
            raise KeyError(f"no equation catalog for {name!r}")
        entries = _read(_FILES[name])
        _CACHE[name] = EquationCatalog(name, [p for _, p, _ in entries],
                                       [n for _, _, n in entries])
    return _CACHE[name]


def w_catalog():
    """``{"W0": {"P": ..., "Q": ..., "disc": ...}, "W1": ..., "W2": ...}``."""
    if "W" not in _CACHE:
        out = {}
        for label, p, _ in _read("w.poly"):
            comp, key = label.split(".")
            out.setdefault(comp, {})[key] = p
        _CACHE["W"] = out
    return _CACHE["W"]


def reducible_curve():
    """Image of the reducible characters in the F2 coordinates (α = ᾱ, β = β̄)."""
    a, b = var("alpha"), var("beta")
    return a * b - 2 * a - 2 * b + 3


def w_component_of(components):
    """The W-component whose ``P, Q`` govern η for a set of memberships."""
    if "V1" in components and "V0" not in components and "XPR" not in components:
        return "W1"
    if "V2" in components and "V0" not in components and "XPR" not in components:
        return "W2"
    return "W0"


class ComponentSet:
    """Memberships of a point, with undecided components and ``XPR`` parameters."""

    def __init__(self, members=(), undecided=(), xpr_params=None):
        self.members = frozenset(members)
        self.undecided = frozenset(undecided)
        self.xpr_params = xpr_params

    def __contains__(self, name):
        return name in self.members

    def __iter__(self):
        return iter(self.names())

    def __len__(self):
        return len(self.members)

    def __bool__(self):
        return bool(self.members)

    def names(self):
        return [c for c in COMPONENTS if c in self.members]

    def __eq__(self, other):
        if isinstance(other, ComponentSet):
            return self.members == other.members and self.undecided == other.undecided
        return self.members == frozenset(other)

    def __hash__(self):
        return hash((self.members, self.undecided))

    def __str__(self):
        return " ".join(self.names())

    def __repr__(self):
        extra = f", undecided={sorted(self.undecided)}" if self.undecided else ""
        return f"ComponentSet({self.names()}{extra})"


# ---------------------------------------------------------------------------
# partially reducible component

def _xpr_cubics(c):
    """Coefficient lists (low degree first) of the three cubics in ``w``."""
    return (
        [-1, c.y, -c.yb, 1],
        [1, 0, -c.z, c.alpha],
        [c.alpha, -c.zb, 0, 1],
    )


def _quadratic_roots(g):
    c0, c1, c2 = g.c
    disc = c1 * c1 - 4 * c0 * c2
    if not disc:
        return [simplify(as_elem(-c1 / (2 * c2)))]
    if isinstance(disc, QuadExt) or common_modulus(g.c) is not None:
        return None
    ctx = sqrt_adjoin(disc)
    return [(-c1 + s) / (2 * c2) for s in (ctx.s, -ctx.s)]


def _common_roots(c):
    """Common roots of the cubics, or ``None`` when they cannot be found."""
    cubics = [UPoly(p) for p in _xpr_cubics(c)]
    g = cubics[0]
    for p in cubics[1:]:
        g = gcd_univar(g, p)
    d = g.degree()
    if d == 0:
        return []
    if d == 1:
        return [simplify(as_elem(-g.c[0] / g.c[1]))]
    if d == 2:
        roots = _quadratic_roots(g)
        if roots is not None:
            return roots
    D = common_modulus(list(c.values()))
    roots = roots_in_field(g.c, D)
    return roots if len(roots) == d else (roots or None)


def xpr_parameters(c):
    """``(v, w, x1)`` with ``Φ(v, w, x1) = c``, ``False`` if none, ``None`` if undecided."""
    if c.alpha != c.alphab or c.beta != c.betab:
        return False
    a = c.alpha
    if (a - 2) * (c.beta - 2) != 1:
        return False
    roots = _common_roots(c)
    if roots is None:
        return None
    for w in roots:
        if not w:
            continue
        v = c.y - 1 / w
        if v * v == w * (a * a - a - 1) / (a - 2):
            return (simplify(v) if not isinstance(v, QuadExt) else v, w, simplify(as_elem(a - 1)))
    return False


# ---------------------------------------------------------------------------
# classification

def classify(c):
    """Components containing the point ``c`` (a :class:`CharCoords`)."""
    point = c.point()
    members = [name for name in ("XTR", "V0", "V1", "V2") if catalog(name).vanishes_at(point)]
    undecided = []
    params = xpr_parameters(c)
    if params is None:
        undecided.append("XPR")
    elif params:
        members.append("XPR")
    return ComponentSet(members, undecided, params or None)


def classify_orbit(o):
    """Components containing the μ3-orbit described by :class:`OrbitCoords`."""
    lifted = lift_orbit(o)
    if lifted:
        return classify(lifted[0])
    lift = formal_lift(o)
    members = [name for name in ("XTR", "V0", "V1", "V2")
               if all(vanishes_on_orbit(o, p, lift) for p in catalog(name))]
    a, ab, b, bb = o.alpha, o.alphab, o.beta, o.betab
    if a == ab and b == bb and (a - 2) * (b - 2) == 1:
        return ComponentSet(members, ["XPR"])
    return ComponentSet(members)


def xpr_xtr_curve(c):
    """True iff ``c`` lies on the curve where the two reducible components meet."""
    if not (c.alpha == c.alphab == c.beta == c.betab == 3):
        return False
    y, yb = c.y, c.yb
    if c.z != y * y - 2 * yb or c.zb != yb * yb - 2 * y:
        return False
    return not (64 - 28 * y * yb - y * y * yb * yb + 5 * (y ** 3 + yb ** 3))


def boundary_curve(w, x1):
    """Vanishing of ``w⁶ − 2w³(2x1² + x1 − 1)/(x1 − 1) + 1``."""
    w, x1 = as_elem(w), as_elem(x1)
    if x1 == 1:
        raise ValueError("x1 = 1 is excluded")
    return not (w ** 6 - 2 * w ** 3 * (2 * x1 * x1 + x1 - 1) / (x1 - 1) + 1)


def boundary_curve_alpha(w, alpha):
    """Vanishing of ``w⁶ − 2w³α(2α − 3)/(α − 2) + 1``."""
    w, alpha = as_elem(w), as_elem(alpha)
    if alpha == 2:
        raise ValueError("α = 2 is excluded")
    return not (w ** 6 - 2 * w ** 3 * alpha * (2 * alpha - 3) / (alpha - 2) + 1)


def sextic_discriminant_check(alpha):
    """``α²(2α − 3)² − (α − 2)²``, the discriminant of the boundary sextic in ``w³`` up to 4/(α−2)²."""
    alpha = as_elem(alpha)
    if alpha == 2:
        raise ValueError("α = 2 is excluded")
    return alpha ** 2 * (2 * alpha - 3) ** 2 - (alpha - 2) ** 2


def _pt(*vals):
    return CharCoords(*(as_elem(v) if not isinstance(v, (Cyclo12, QuadExt)) else v for v in vals))


def _mu3_orbit(c):
    from .coords import mu3_act
    return [mu3_act(k, c) for k in range(3)]


INTERSECTION_FIXTURES = (
    (_mu3_orbit(_pt(4, 4, 8, 8, 3, 3, 3, 3)), frozenset({"XTR", "XPR", "V0"})),
    (_mu3_orbit(_pt(2, 2, 2, 2, 1, 1, 1, 1)), frozenset({"XPR", "V0", "V1", "V2"})),
)
