"""Exact points and representations on every component.

The reducible components come from closed-form points and block-diagonal
representations.  The three irreducible components come from matrix
families: explicit ``A, B`` for the fiber group, with the monodromy ``T0``
found by solving the linear intertwining equations.  ``T0`` is only known
up to scale, so coordinates are reported as μ3-invariant
:class:`~fig8char.coords.OrbitCoords`.  The triangle group slice gives
further representations through the two Dehn-filling quotients.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .coords import CharCoords, extract_projective
from .grp import (
    RelationError,
    Representation,
    automorphism_images,
    dehn_phi_images,
    failing_relations,
    word,
)
from .mat3 import Mat2, Mat3, diag, identity, solve_intertwiner
from .numtower import (
    G,
    I,
    QuadExt,
    as_elem,
    cube_roots,
    simplify,
    sqrt_adjoin,
    sqrt_elem,
)

__all__ = [
    "ExcludedLocus",
    "FamilyPoint",
    "SlicePoint",
    "WPoint",
    "dehn_rep",
    "metabelian_points",
    "slice_f",
    "slice_g",
    "slice_ideal",
    "slice_rep",
    "v0_discriminant",
    "v0_family",
    "v1_family",
    "v2_discriminant",
    "v2_family",
    "w_hypersurface",
    "w_point",
    "xpr_point",
    "xpr_rep",
    "xtr_point",
    "xtr_rep",
    "y_loci",
]


class ExcludedLocus(ValueError):
    """Parameters lie where a constructor is undefined."""


def _e(x):
    return as_elem(x)


def _root(D, branch):
    """``branch·√D``; zero when ``D`` vanishes."""
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    D = simplify(_e(D))
    if not D:
        return _e(0)
    if isinstance(D, QuadExt):
        raise ExcludedLocus("parameters already need a square root; a second one is unsupported")
    return sqrt_adjoin(D).root(branch)


# ---------------------------------------------------------------------------
# totally and partially reducible components

def xtr_point(y, yb):
    y, yb = _e(y), _e(yb)
    return CharCoords(y, yb, y * y - 2 * yb, yb * yb - 2 * y, 3, 3, 3, 3, eta=3)


def xtr_rep(y, yb):
    """``t`` a companion matrix of ``x³ − y x² + ȳ x − 1``, ``a = b = 1``."""
    y, yb = _e(y), _e(yb)
    t = Mat3([[0, 0, 1], [1, 0, -yb], [0, 1, y]])
    one = identity(3, y)
    return Representation("TAB", {"t": t, "a": one, "b": one})


def _xpr_check(v, w, x1):
    if not w:
        raise ExcludedLocus("w must be nonzero")
    if x1 == 1:
        raise ExcludedLocus("x1 = 1 is excluded")
    if (x1 * x1 + x1 - 1) / (x1 - 1) * w != v * v:
        raise ExcludedLocus("(x1² + x1 − 1)/(x1 − 1)·w = v² fails")


def xpr_point(v, w, x1):
    v, w, x1 = _e(v), _e(w), _e(x1)
    _xpr_check(v, w, x1)
    alpha = x1 + 1
    beta = x1 / (x1 - 1) + 1
    return CharCoords(v + 1 / w, w + v / w, w * alpha + 1 / (w * w), alpha / w + w * w,
                      alpha, alpha, beta, beta)


def _xpr_blocks(v, w, x1):
    """2×2 blocks ``T2, A2, B2`` realizing the GL(2) character ``(v, w, x1)``."""
    if x1 == 2:
        one = identity(2, v)
        return Mat2([[0, -w], [1, v]]), one, one
    x2 = x1 / (x1 - 1)
    # B2 = [[m, 1], [0, 1/m]] with m + 1/m = x2
    m = (x2 + _root(x2 * x2 - 4, 1)) / 2
    a, d = x1, _e(0)
    c = x1 - a * m - d / m
    A2 = Mat2([[a, (a * d - 1) / c], [c, d]])
    B2 = Mat2([[m, 1], [0, 1 / m]])
    basis = solve_intertwiner(A2, B2)
    if len(basis) != 1:
        raise ExcludedLocus("the monodromy block is not unique")
    M = basis[0]
    tr = M.trace()
    if tr:
        T2 = M * (v / tr)
    elif not v:
        scale = sqrt_elem(w / M.det())
        if scale is None:
            raise ExcludedLocus("the monodromy block needs a square root outside the field")
        T2 = M * scale
    else:
        raise ExcludedLocus("no monodromy block with trace v")
    return T2, A2, B2


def xpr_rep(v, w, x1):
    """Block representation ``t = T2 ⊕ 1/w``, ``a = A2 ⊕ 1``, ``b = B2 ⊕ 1``."""
    v, w, x1 = _e(v), _e(w), _e(x1)
    _xpr_check(v, w, x1)
    T2, A2, B2 = _xpr_blocks(v, w, x1)
    if T2.det() != w:
        raise ExcludedLocus("the monodromy block has the wrong determinant")

    def block(m2, corner):
        return Mat3([[m2[0, 0], m2[0, 1], 0], [m2[1, 0], m2[1, 1], 0], [0, 0, corner]])

    return Representation("TAB", {"t": block(T2, 1 / w), "a": block(A2, 1), "b": block(B2, 1)})


# ---------------------------------------------------------------------------
# irreducible components

class FamilyPoint(NamedTuple):
    """``A, B`` for the fiber group, monodromy ``T0`` up to scale, ``d0 = det T0``."""

    A: object
    B: object
    T0: object
    d0: object
    orbit: object
    s: object

    def projective_rep(self):
        """Representation with ``t ↦ T0`` (not normalized to determinant one)."""
        return Representation("TAB", {"t": self.T0, "a": self.A, "b": self.B})

    def rep(self):
        """Determinant-one representation, or ``None`` if ``∛d0`` is outside the field."""
        roots = cube_roots(self.d0)
        if not roots:
            return None
        return Representation("TAB", {"t": self.T0 * (1 / roots[0]), "a": self.A, "b": self.B})


def _family(A, B, s):
    if A.det() != 1 or B.det() != 1:
        raise ExcludedLocus("fiber matrices are not in SL(3)")
    basis = solve_intertwiner(A, B)
    if len(basis) != 1:
        raise ExcludedLocus(f"monodromy space has dimension {len(basis)}")
    T0 = basis[0]
    d0 = T0.det()
    if not d0:
        raise ExcludedLocus("normalize-by-limit unsupported at this point: det T0 = 0")
    return FamilyPoint(A, B, T0, d0, extract_projective(T0, A, B), s)


def v2_discriminant(alpha, alphab):
    a, ab = _e(alpha), _e(alphab)
    return (a * a * ab * ab - 4 * a ** 3 - 4 * ab ** 3 - 2 * a * a * ab - 2 * a * ab * ab
            + a * a + ab * ab + 12 * a * ab + 2 * a + 2 * ab - 7)


def _v2_matrices(a, ab, branch):
    one_m_i, one_p_i = 1 - I, 1 + I
    B = diag(_e(1), I, -I)
    c = a * a - 2 * ab + 1
    if c:
        s = _root(v2_discriminant(a, ab), branch)
        X = a ** 3 - a * a - 4 * a * ab - a + 5
        A = Mat3([
            [(a + 1) / 2, one_m_i * c / 8, one_p_i * c / 8],
            [1, one_m_i * (a - 1) / 4, one_p_i * (X + 2 * I * s) / (4 * c)],
            [1, one_m_i * (X - 2 * I * s) / (4 * c), one_p_i * (a - 1) / 4],
        ])
        return A, B, s
    # degenerate chart: Δ = −(α−1)²(α²+2α+5)²/4 there
    s = branch * I * (a - 1) * (a * a + 2 * a + 5) / 2
    q = -(a * a + 2 * a + 5) / 8
    corner = (-a ** 3 - a * a - 3 * a + 5) / 8
    if branch > 0:
        A = Mat3([
            [(a + 1) / 2, corner, 0],
            [0, one_m_i * (a - 1) / 4, 1],
            [1, q, one_p_i * (a - 1) / 4],
        ])
    else:
        A = Mat3([
            [(a + 1) / 2, 0, corner],
            [1, one_m_i * (a - 1) / 4, q],
            [0, 1, one_p_i * (a - 1) / 4],
        ])
    return A, B, s


def v2_family(alpha, alphab, branch=1):
    """Point of ``V2`` over ``(α, ᾱ)`` on the sheet ``branch``.

    Off the curve ``α² − 2ᾱ + 1 = 0`` the fiber matrices are the closed
    form with ``√Δ``; on it one of two alternate matrices is used.
    """
    A, B, s = _v2_matrices(_e(alpha), _e(alphab), branch)
    return _family(A, B, s)


def v1_family(beta, betab, branch=1):
    """Point of ``V1`` over ``(β, β̄)``: a ``V2`` family pulled back by ``h``.

    The words ``h(a), h(b)`` have exponent sum zero in ``S, T``, so their
    images do not depend on the scale of ``T0``.
    """
    base = v2_family(betab, beta, branch)
    rep = base.projective_rep()
    images = automorphism_images("h")
    A = rep(word("T'.S.T.S'").substitute(images, "ST"))
    B = rep(word("T.S'").substitute(images, "ST"))
    # h(S) has exponent sum one, so its image is the new monodromy up to scale
    T0 = rep(word("S").substitute(images, "ST"))
    if T0 @ A != A @ B @ T0 or T0 @ B != B @ A @ B @ T0:
        raise RelationError("pulled-back monodromy does not intertwine")
    d0 = T0.det()
    return FamilyPoint(A, B, T0, d0, extract_projective(T0, A, B), base.s)


def v0_discriminant(alpha, beta):
    a, b = _e(alpha), _e(beta)
    return a * a * b * b - 6 * a * b - 4 * a - 4 * b - 3


def v0_family(alpha, beta, branch=1):
    """Point of ``V0`` over ``(α, β)`` on the sheet ``branch``."""
    a, b = _e(alpha), _e(beta)
    if b in (3, -1) or b == a:
        raise ExcludedLocus("β ∈ {3, −1, α} is excluded")
    s = _root(v0_discriminant(a, b), branch)
    E = 2 * (b - 3) * (b + 1) * (b - a)
    k = a * b - 2 * a - 2 * b + 3
    r = (b - 3) * (b + 1)
    m = 4 * a * a - a * b ** 3 + 4 * a * b * b - 9 * a * b - 6 * a + 7 * b * b - 6 * b - 9
    A = Mat3([
        [(a * b - 2 * a - b) / (b - 3),
         2 * k * (b - a) / ((b - 3) ** 2 * (b + 1)),
         k * (b - a) * (b - 1) / ((b - 3) ** 2 * (b + 1))],
        [1, (m + r * s) / E,
         (4 * a * b ** 3 - a * b ** 4 + 5 * b ** 3 - 5 * a * b * b + 2 * a * a * b - 8 * b * b
          - 2 * a * a - 2 * a * b - 9 * b + r * (b - 2) * s) / E],
        [1, (m - r * s) / E,
         (a * b ** 3 + 2 * b ** 3 - 8 * a * b * b + 2 * a * a * b - 5 * b * b - 2 * a * a
          + 5 * a * b + 6 * a + 6 * b + 9 - r * s) / E],
    ])
    B = Mat3([[1, 0, 0], [0, b - 1, 1], [0, -1, 0]])
    return _family(A, B, s)


def metabelian_points():
    """The five characters with ``y = ȳ = z = z̄ = 0`` and ``η = 3``."""
    p, q = -1 + 2 * I, -1 - 2 * I
    params = [(-1, -1, -1, -1), (1, 1, p, q), (1, 1, q, p), (p, q, 1, 1), (q, p, 1, 1)]
    return [CharCoords(0, 0, 0, 0, *vals, eta=3) for vals in params]


# ---------------------------------------------------------------------------
# triangle group slice

def slice_ideal(x0, x1, y0, y1):
    """The two generators of the ideal cutting out the slice."""
    return (x0 * y0 + x1 - y1 - 2, x0 * y1 - x1 * y1 - x0 - y0 + y1 - 2)


def w_hypersurface(nu, nub, zeta):
    return zeta * zeta - (nu * nub - 2) * zeta + nu ** 3 + nub ** 3 - 5 * nu * nub + 5


@dataclass(frozen=True)
class SlicePoint:
    """Parameters of ``K, L``; validated against the slice equations."""

    x0: object
    x1: object
    y0: object
    y1: object

    def __post_init__(self):
        vals = [simplify(_e(v)) for v in (self.x0, self.x1, self.y0, self.y1)]
        for name, v in zip(("x0", "x1", "y0", "y1"), vals):
            object.__setattr__(self, name, v)
        if any(slice_ideal(*vals)):
            raise ExcludedLocus("point is not on the slice")

    def values(self):
        return (self.x0, self.x1, self.y0, self.y1)


@dataclass(frozen=True)
class WPoint:
    """``(ν, ν̄, ζ)`` on the hypersurface ``W``."""

    nu: object
    nub: object
    zeta: object

    def __post_init__(self):
        vals = [simplify(_e(v)) for v in (self.nu, self.nub, self.zeta)]
        for name, v in zip(("nu", "nub", "zeta"), vals):
            object.__setattr__(self, name, v)
        if w_hypersurface(*vals):
            raise ExcludedLocus("point is not on the hypersurface W")

    def values(self):
        return (self.nu, self.nub, self.zeta)


def w_point(nu, nub, branch=1):
    """The point of ``W`` over ``(ν, ν̄)`` with ``ζ`` on sheet ``branch``."""
    nu, nub = _e(nu), _e(nub)
    b = nu * nub - 2
    disc = b * b - 4 * (nu ** 3 + nub ** 3 - 5 * nu * nub + 5)
    return WPoint(nu, nub, (b + _root(disc, branch)) / 2)


def slice_matrices(p):
    x0, x1, y0, y1 = p.values()
    K = Mat3([[0, 0, 1], [x0, 1, x1], [-1, 0, -1]])
    L = Mat3([[1, y0, y1], [0, -1, -1], [0, 1, 0]])
    return K, L


def slice_rep(p):
    """Relation-checked triangle group representation ``k ↦ K``, ``l ↦ L``."""
    K, L = slice_matrices(p)
    rep = Representation("KL", {"k": K, "l": L})
    bad = failing_relations(rep)
    if bad:
        raise RelationError(f"relation fails: {bad[0]}")
    return rep


def slice_f(p):
    x0, x1, y0, y1 = p.values()
    nu = x0 * y0 - x1 * y0 + x0 + y1 - 2
    nub = x0 * y1 - x1 + y0 - y1 + 1
    zeta = (x0 * x0 * y0 * y1 - x0 * x1 * y0 * y1 - x0 * x0 * y0 + x0 * y0 * y0
            - x1 * y0 * y0 + x0 * x1 * y1 - x1 * x1 * y1 - x0 * y0 * y1 + x1 * y0 * y1
            + x0 * y1 * y1 - x0 * x1 + 2 * x0 * y0 - x1 * y0 - 3 * x0 * y1 + 2 * x1 * y1
            + y0 * y1 - y1 * y1 + 4 * x0 - x1 - 2 * y0 - 2)
    return WPoint(nu, nub, zeta)


def y_loci():
    """Defining pairs of the six lines where the inverse map is undefined."""
    h = G * G  # primitive sixth root of unity

    def pairs(nu, nub, zeta):
        return {
            "Y1": (zeta - 1, nu + nub + 2),
            "Y2": (zeta - 1, nu + h * h * nub - 2 * h),
            "Y3": (zeta - 1, nu - h * nub + 2 * h * h),
            "Y4": (nu + nub + 2, nub * nub + 2 * nub + zeta + 3),
            "Y5": (nu + h * h * nub - 2 * h, nub * nub + 2 * h * h * nub - h * zeta - 3 * h),
            "Y6": (nu - h * nub + 2 * h * h, nub * nub - 2 * h * nub + h * h * zeta + 3 * h * h),
        }

    return pairs


def slice_g(q):
    """Inverse of :func:`slice_f` off the six exceptional lines."""
    nu, nub, zeta = q.values()
    hit = [name for name, pair in y_loci()(nu, nub, zeta).items() if not any(pair)]
    if hit:
        raise ExcludedLocus(f"g undefined: the point lies on {', '.join(hit)}")
    d1 = zeta - 1
    d2 = -nu * nub + zeta + 3
    if not d1:
        raise ExcludedLocus("g undefined: ζ − 1 vanishes")
    if not d2:
        raise ExcludedLocus("g undefined: νν̄ − ζ − 3 vanishes")
    x0 = (nub * nub + nub * nu - 2 * nu - zeta - 3) / d1
    x1 = (nub * nub - nu * nu + 2 * nub - 2 * nu + zeta - 1) / d1
    y0 = (nub * nu - nu * nu + 2 * nub - 2 * zeta - 2) / d2
    y1 = (-nub * nub + 2 * nu - zeta + 1) / d2
    return SlicePoint(x0, x1, y0, y1)


def dehn_rep(p, target="V2"):
    """Knot group representation through the triangle group quotient.

    ``V2`` uses ``S ↦ klk``, ``T ↦ klklk``; ``V1`` precomposes with ``h``.
    """
    tri = slice_rep(p)
    rep = tri.pullback(dehn_phi_images(), "ST")
    if target == "V1":
        rep = rep.pullback(automorphism_images("h"), "ST")
    elif target != "V2":
        raise ValueError("target must be 'V1' or 'V2'")
    bad = failing_relations(rep)
    if bad:
        raise RelationError(f"relation fails: {bad[0]}")
    return rep
