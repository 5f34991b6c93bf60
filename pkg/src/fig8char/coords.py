"""Trace coordinates, the μ3 center action, symmetry actions and orbit invariants.

A character is recorded by eight traces ``(y, ȳ, z, z̄, α, ᾱ, β, β̄)`` and,
when available, the commutator trace ``η``.  In the fibered generators
``t, a, b`` they are::

    y = tr t        ȳ = tr t⁻¹
    z = tr(t a⁻¹ t a)          z̄ = tr(a⁻¹ t⁻¹ a t⁻¹)
    α = tr a        ᾱ = tr a⁻¹
    β = tr b        β̄ = tr b⁻¹
    η = tr(a b a⁻¹ b⁻¹)
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from fractions import Fraction

from .grp import RelationError, failing_relations, word
from .numtower import OMEGA, as_elem, cube_roots, format_elem, parse_elem, simplify
from .poly import MPoly, var

__all__ = [
    "COORD_VARS",
    "CharCoords",
    "OrbitCoords",
    "compose_maps",
    "extract",
    "extract_matrices",
    "extract_projective",
    "formal_lift",
    "gl3_coords",
    "iota",
    "is_identity_map",
    "lift_orbit",
    "mu3_act",
    "orbit",
    "orbit_map",
    "pgl3_coords",
    "sym_f",
    "sym_f_map",
    "sym_h",
    "sym_h_general",
    "sym_h_general_map",
    "sym_h_map",
    "vanishes_on_orbit",
]

COORD_VARS = ("y", "yb", "z", "zb", "alpha", "alphab", "beta", "betab")


def _clean(x):
    return simplify(as_elem(x))


@dataclass(frozen=True)
class CharCoords:
    """The eight trace coordinates and an optional commutator trace."""

    y: object
    yb: object
    z: object
    zb: object
    alpha: object
    alphab: object
    beta: object
    betab: object
    eta: object = None

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if value is not None:
                object.__setattr__(self, f.name, _clean(value))

    @classmethod
    def of(cls, *values, eta=None):
        if len(values) == 1:
            values = tuple(values[0])
        if len(values) != 8:
            raise ValueError("eight coordinates are required")
        return cls(*values, eta=eta)

    @classmethod
    def parse(cls, text, D=None):
        parts = [p for p in text.split(",")]
        if len(parts) != 8:
            raise ValueError(f"expected 8 comma-separated coordinates, got {len(parts)}")
        return cls(*(parse_elem(p, D) for p in parts))

    def values(self):
        return tuple(getattr(self, name) for name in COORD_VARS)

    def point(self):
        """Mapping from polynomial variable names to values."""
        out = dict(zip(COORD_VARS, self.values()))
        if self.eta is not None:
            out["eta"] = self.eta
        return out

    def without_eta(self):
        return replace(self, eta=None)

    def __str__(self):
        text = ",".join(format_elem(v) for v in self.values())
        if self.eta is not None:
            text += f" eta={format_elem(self.eta)}"
        return text


_ORBIT_FIELDS = (
    ("y3", (3, 0, 0, 0)), ("yb3", (0, 3, 0, 0)), ("z3", (0, 0, 3, 0)), ("zb3", (0, 0, 0, 3)),
    ("yyb", (1, 1, 0, 0)), ("zzb", (0, 0, 1, 1)), ("yz", (1, 0, 1, 0)), ("ybzb", (0, 1, 0, 1)),
    ("y2zb", (2, 0, 0, 1)), ("yb2z", (0, 2, 1, 0)), ("yzb2", (1, 0, 0, 2)), ("ybz2", (0, 1, 2, 0)),
)
ORBIT_MONOMIALS = dict(_ORBIT_FIELDS)


@dataclass(frozen=True)
class OrbitCoords:
    """μ3-invariant monomials in ``(y, ȳ, z, z̄)`` together with ``α, ᾱ, β, β̄, η``."""

    y3: object
    yb3: object
    z3: object
    zb3: object
    yyb: object
    zzb: object
    yz: object
    ybzb: object
    y2zb: object
    yb2z: object
    yzb2: object
    ybz2: object
    alpha: object
    alphab: object
    beta: object
    betab: object
    eta: object = None

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if value is not None:
                object.__setattr__(self, f.name, _clean(value))

    def monomial(self, name):
        return getattr(self, name)

    def __str__(self):
        parts = [f"{f.name}={format_elem(getattr(self, f.name))}"
                 for f in fields(self) if getattr(self, f.name) is not None]
        return " ".join(parts)


# ---------------------------------------------------------------------------
# extraction

def extract_matrices(t, a, b):
    """Coordinates from matrices of ``t, a, b`` (no relation check)."""
    ti, ai, bi = t.inv(), a.inv(), b.inv()
    return CharCoords(
        t.trace(), ti.trace(),
        (t @ ai @ t @ a).trace(), (ai @ ti @ a @ ti).trace(),
        a.trace(), ai.trace(), b.trace(), bi.trace(),
        eta=(a @ b @ ai @ bi).trace(),
    )


def fibered_matrices(rep):
    """Matrices of ``t, a, b`` under a knot group representation."""
    return rep(word("t")), rep(word("a")), rep(word("b"))


def extract(rep, check=True):
    """Trace coordinates (with η) of a knot group representation."""
    if rep.alphabet == "KL":
        raise ValueError("extract expects a knot group representation")
    if check:
        bad = failing_relations(rep)
        if bad:
            raise RelationError(f"relation fails: {bad[0]}")
    return extract_matrices(*fibered_matrices(rep))


def _weighted(d, K, value):
    # value · d^(−K/3), K a multiple of 3
    return value * as_elem(d) ** (-(K // 3))


def extract_projective(T0, A, B):
    """Orbit coordinates of ``t = T0/∛det T0`` without choosing a cube root."""
    d = T0.det()
    if not d:
        raise ZeroDivisionError("det T0 vanishes; the monodromy cannot be normalized")
    Ai, Bi = A.inv(), B.inv()
    T0i = T0.inv()
    base = {
        "y": T0.trace(),
        "yb": T0i.trace(),
        "z": (T0 @ Ai @ T0 @ A).trace(),
        "zb": (Ai @ T0i @ A @ T0i).trace(),
    }
    weight = {"y": 1, "yb": -1, "z": 2, "zb": -2}
    vals = {}
    for name, exps in _ORBIT_FIELDS:
        value = Fraction(1)
        K = 0
        for key, e in zip(("y", "yb", "z", "zb"), exps):
            if e:
                value = value * base[key] ** e
                K += weight[key] * e
        vals[name] = _weighted(d, K, value)
    return OrbitCoords(
        **vals,
        alpha=A.trace(), alphab=Ai.trace(), beta=B.trace(), betab=Bi.trace(),
        eta=(A @ B @ Ai @ Bi).trace(),
    )


# ---------------------------------------------------------------------------
# center action and symmetries

def mu3_act(k, c):
    """Twist by the ``k``-th power of the central character."""
    k %= 3
    if k == 0:
        return c
    w1 = OMEGA ** k
    w2 = OMEGA ** (2 * k)
    return replace(c, y=c.y * w1, yb=c.yb * w2, z=c.z * w2, zb=c.zb * w1)


def _v(name):
    return var(name)


def sym_f_map():
    """Coordinate action of ``f`` as polynomials in the eight coordinates."""
    return {
        "y": _v("yb"), "yb": _v("y"), "z": _v("zb"), "zb": _v("z"),
        "alpha": _v("alphab"), "alphab": _v("alpha"),
        "beta": _v("beta"), "betab": _v("betab"),
    }


def sym_h_map():
    """Coordinate action of ``h`` as polynomials in the eight coordinates."""
    return {
        "y": _v("yb"), "yb": _v("y"),
        "z": _v("yb") ** 2 - _v("zb"), "zb": _v("y") ** 2 - _v("z"),
        "alpha": _v("betab"), "alphab": _v("beta"),
        "beta": _v("alpha"), "betab": _v("alphab"),
    }


def sym_h_general_map():
    """``h*`` as precomposition by ``h``, valid on the whole character variety.

    :func:`sym_h_map` agrees with it on ``V0``, ``V1``, ``V2`` but not on the
    reducible components.
    """
    y, yb, z, zb = _v("y"), _v("yb"), _v("z"), _v("zb")
    b, bb = _v("beta"), _v("betab")
    out = sym_h_map()
    out["z"] = zb * bb + yb * z - y * y * yb + y * b + y
    out["zb"] = z * b + y * zb - yb * yb * y + yb * bb + yb
    return out


def iota_map():
    """Coordinate action of the duality ``ρ ↦ (ρᵀ)⁻¹``."""
    return {
        "y": _v("yb"), "yb": _v("y"), "z": _v("zb"), "zb": _v("z"),
        "alpha": _v("alphab"), "alphab": _v("alpha"),
        "beta": _v("betab"), "betab": _v("beta"),
    }


def compose_maps(first, second):
    """The map ``c ↦ second(first(c))``, both given as polynomial dicts."""
    return {name: poly.compose(first) for name, poly in second.items()}


def is_identity_map(m):
    return all(m[name] == var(name) for name in COORD_VARS)


def _apply_map(m, c):
    point = c.point()
    return CharCoords(*(m[name].eval(point) for name in COORD_VARS))


def sym_f(c):
    """``f*``; η is dropped since it is not a function of the eight traces."""
    return _apply_map(sym_f_map(), c)


def sym_h(c):
    """``h*``; η is dropped since it is not a function of the eight traces."""
    return _apply_map(sym_h_map(), c)


def sym_h_general(c):
    """``h*`` by the formula valid on every component; η is dropped."""
    return _apply_map(sym_h_general_map(), c)


def iota(c):
    """Duality: exchange barred and unbarred coordinates."""
    return _apply_map(iota_map(), c)


# ---------------------------------------------------------------------------
# orbit invariants

def orbit(c):
    """μ3-invariant orbit coordinates of a point."""
    vals = {}
    base = (c.y, c.yb, c.z, c.zb)
    for name, exps in _ORBIT_FIELDS:
        value = Fraction(1)
        for x, e in zip(base, exps):
            if e:
                value = value * x ** e
        vals[name] = value
    return OrbitCoords(**vals, alpha=c.alpha, alphab=c.alphab, beta=c.beta,
                       betab=c.betab, eta=c.eta)


def pgl3_coords(c):
    """``(u1, ..., u12)``: the μ3-invariant monomials in ``y, ȳ, z, z̄``."""
    y, yb, z, zb = c.y, c.yb, c.z, c.zb
    return (y ** 3, yb ** 3, y * yb, z ** 3, zb ** 3, z * zb,
            y * z, yb * zb, y * zb ** 2, y ** 2 * zb, yb * z ** 2, yb ** 2 * z)


def gl3_coords(c, lam):
    """``(u1..u12, v1..v6)``, invariant under ``(c, λ) ↦ (ϖ·c, ϖλ)``."""
    lam = as_elem(lam)
    if not lam:
        raise ValueError("λ must be nonzero")
    y, yb, z, zb = c.y, c.yb, c.z, c.zb
    v = (y * lam ** 2, y ** 2 * lam, yb * lam, z * lam, zb * lam ** 2, zb ** 2 * lam)
    return pgl3_coords(c) + v


def _lift_plan(o):
    """Pivot coordinate, its cube, and the other three as functions of it."""
    if o.y3:
        return "y", o.y3, lambda r: {"y": r, "yb": o.yyb / r, "z": o.yz / r, "zb": o.y2zb / (r * r)}
    if o.yb3:
        return "yb", o.yb3, lambda r: {"y": 0, "yb": r, "z": o.yb2z / (r * r), "zb": o.ybzb / r}
    if o.z3:
        return "z", o.z3, lambda r: {"y": 0, "yb": 0, "z": r, "zb": o.zzb / r}
    if o.zb3:
        return "zb", o.zb3, lambda r: {"y": 0, "yb": 0, "z": 0, "zb": r}
    return None, 0, lambda r: {"y": 0, "yb": 0, "z": 0, "zb": 0}


def _consistent(o, c):
    return orbit(c) == replace(o, eta=c.eta)


def lift_orbit(o):
    """All points over the orbit, when the needed cube root lies in the field.

    Returns three points (or one when ``y = ȳ = z = z̄ = 0``), or an empty
    list when the cube root is not available in the current field.
    """
    pivot, cube, build = _lift_plan(o)
    roots = [0] if pivot is None else cube_roots(cube)
    out = []
    for r in roots:
        vals = build(r)
        c = CharCoords(vals["y"], vals["yb"], vals["z"], vals["zb"],
                       o.alpha, o.alphab, o.beta, o.betab, eta=o.eta)
        if not _consistent(o, c):
            raise ValueError("orbit coordinates are not consistent with a point")
        out.append(c)
    return out


def formal_lift(o):
    """Lift into ``K[Y]/(Y³ − c)``: returns ``(values, relation)``.

    ``values`` maps the coordinate names to polynomials in ``Y``; a
    polynomial identity holds at all three points of the orbit iff its
    image reduces to zero modulo ``relation``.  ``relation`` is ``None``
    when the orbit is the single point ``y = ȳ = z = z̄ = 0``.
    """
    pivot, cube, _ = _lift_plan(o)
    Y = var("Y")
    consts = {"alpha": o.alpha, "alphab": o.alphab, "beta": o.beta, "betab": o.betab}
    if o.eta is not None:
        consts["eta"] = o.eta
    values = {k: MPoly.const(v) for k, v in consts.items()}
    if pivot is None:
        values.update({k: MPoly.const(0) for k in ("y", "yb", "z", "zb")})
        return values, None
    relation = Y ** 3 - cube
    inv_cube = 1 / as_elem(cube)
    # 1/Y = Y²/c
    inv_Y = Y ** 2 * inv_cube
    if pivot == "y":
        values.update(y=Y, yb=o.yyb * inv_Y, z=o.yz * inv_Y, zb=(o.y2zb * inv_cube) * Y)
    elif pivot == "yb":
        values.update(y=MPoly.const(0), yb=Y, z=(o.yb2z * inv_cube) * Y, zb=o.ybzb * inv_Y)
    elif pivot == "z":
        values.update(y=MPoly.const(0), yb=MPoly.const(0), z=Y, zb=o.zzb * inv_Y)
    else:
        values.update(y=MPoly.const(0), yb=MPoly.const(0), z=MPoly.const(0), zb=Y)
    check = {name: _mono_in_Y(values, exps).reduce_mod("Y", relation)
             for name, exps in _ORBIT_FIELDS}
    for name, got in check.items():
        if got != MPoly.const(getattr(o, name)):
            raise ValueError("orbit coordinates are not consistent with a point")
    return values, relation


def _mono_in_Y(values, exps):
    out = MPoly.const(1)
    for key, e in zip(("y", "yb", "z", "zb"), exps):
        if e:
            out = out * values[key] ** e
    return out


def vanishes_on_orbit(o, poly, lift=None):
    """True iff ``poly`` vanishes at every point of the orbit."""
    values, relation = lift if lift is not None else formal_lift(o)
    image = poly.compose(values)
    if relation is not None:
        image = image.reduce_mod("Y", relation)
    return image.is_zero()


def orbit_map(o, m):
    """Image of an orbit under a coordinate map such as :func:`sym_h_map`.

    The map must send μ3-orbits to μ3-orbits; η is dropped.
    """
    values, relation = formal_lift(o)

    def reduce(p):
        return p.reduce_mod("Y", relation) if relation is not None else p

    image = {name: reduce(m[name].compose(values)) for name in COORD_VARS}
    out = {}
    for name, exps in _ORBIT_FIELDS:
        mono = reduce(_mono_in_Y(image, exps))
        if not mono.is_constant():
            raise ValueError("the map does not preserve μ3-orbits")
        out[name] = mono.constant()
    for name in ("alpha", "alphab", "beta", "betab"):
        if not image[name].is_constant():
            raise ValueError("the map does not preserve μ3-orbits")
        out[name] = image[name].constant()
    return OrbitCoords(**out)
