"""Identity suites: named groups of exact checks run symbolically or on samples.

Symbolic mode expands polynomial identities to zero.  Sampled mode draws
seeded random parameters (numerators in ``[-20, 20]``, denominators in
``[1, 10]``), builds exact points with the constructors and evaluates each
identity there.  Reports contain no timing data, so identical inputs give
byte-identical output.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .components import (
    INTERSECTION_FIXTURES,
    catalog,
    classify,
    classify_orbit,
    sextic_discriminant_check,
    w_catalog,
    w_component_of,
    xpr_parameters,
)
from .constructors import (
    ExcludedLocus,
    SlicePoint,
    dehn_rep,
    metabelian_points,
    slice_f,
    slice_g,
    slice_matrices,
    slice_rep,
    v0_discriminant,
    v0_family,
    v1_family,
    v2_family,
    w_point,
    xpr_point,
    xpr_rep,
    xtr_point,
    xtr_rep,
)
from .coords import (
    compose_maps,
    extract,
    formal_lift,
    is_identity_map,
    mu3_act,
    orbit,
    orbit_map,
    sym_f_map,
    sym_h,
    sym_h_general,
    sym_h_map,
    vanishes_on_orbit,
)
from .grp import RelationError, automorphism_images, check_relations
from .mat3 import Matrix
from .numtower import format_elem, sqrt_adjoin
from .poly import (
    BudgetExceeded,
    MPoly,
    RatFunc,
    expand_is_zero,
    parse_poly,
    term_limit,
    var,
)
from .sl2 import (
    classify_sl2,
    fricke,
    riley_polynomial,
    riley_rep,
    sym2_bridge,
    sym2_rep,
)

__all__ = ["SUITES", "Report", "Suite", "UnknownSuite", "Verdict", "list_suites", "run_suite"]

MAX_RETRIES = 1000
DOWNGRADE_SAMPLES = 200


class UnknownSuite(KeyError):
    """No suite with the requested name."""


@dataclass
class Suite:
    """A named list of identities with a sampler and optional symbolic checks.

    ``checks`` are ``(label, fn(data) -> bool)`` pairs evaluated on sampled
    data; ``symbolic`` are ``(label, fn() -> bool)`` pairs.  ``fixed``
    replaces random sampling by a fixed list of ``(witness, data)``.
    """

    name: str
    claim: str
    checks: list
    sampler: object = None
    symbolic: list = None
    fixed: object = None

    @property
    def modes(self):
        out = ["sampled"]
        if self.symbolic:
            out.insert(0, "symbolic")
        return out


@dataclass
class Verdict:
    identity: str
    verdict: str
    witness: str = None

    def as_dict(self):
        return {"identity": self.identity, "verdict": self.verdict, "witness": self.witness}


@dataclass
class Report:
    suite: str
    mode: str
    n: int
    seed: object
    verdicts: list
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return all(v.verdict != "fail" for v in self.verdicts)

    def as_dict(self):
        return {
            "suite": self.suite,
            "mode": self.mode,
            "n": self.n,
            "seed": self.seed,
            "result": "PASS" if self.passed else "FAIL",
            "verdicts": [v.as_dict() for v in self.verdicts],
            "notes": list(self.notes),
        }

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    def to_text(self):
        lines = [f"suite: {self.suite}", f"mode: {self.mode}", f"samples: {self.n}",
                 f"seed: {self.seed}"]
        lines += [f"note: {note}" for note in self.notes]
        for v in self.verdicts:
            line = f"{v.verdict.upper():<12} {v.identity}"
            if v.witness:
                line += f"  [witness: {v.witness}]"
            lines.append(line)
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# sampling helpers

def _rat(rng):
    return Fraction(rng.randint(-20, 20), rng.randint(1, 10))


def _nonzero(rng):
    while True:
        x = _rat(rng)
        if x:
            return x


def _branch(rng):
    return rng.choice((1, -1))


def _fmt(**kw):
    return " ".join(f"{k}={format_elem(v) if not isinstance(v, str) else v}" for k, v in kw.items())


def _sign(b):
    return "+" if b > 0 else "-"


def _on_orbit(o, text, **extra):
    """``text`` vanishes at every point of the orbit, with constants ``extra``."""
    values, relation = formal_lift(o)
    values = dict(values)
    for k, v in extra.items():
        values[k] = MPoly.const(v)
    return vanishes_on_orbit(o, parse_poly(text), (values, relation))


def _fiber_identities(c):
    a, ab, b, bb = c.alpha, c.alphab, c.beta, c.betab
    return [
        ("alpha = alpha*beta - alphab*beta + alphab", a == a * b - ab * b + ab),
        ("alphab = alphab*betab - alpha*betab + alpha", ab == ab * bb - a * bb + a),
        ("beta = beta*alpha - betab*alpha + betab", b == b * a - bb * a + bb),
        ("betab = betab*alphab - beta*alphab + beta", bb == bb * ab - b * ab + b),
    ]


def _xpr_params(rng):
    while True:
        x1, v = _rat(rng), _nonzero(rng)
        if x1 == 1 or not (x1 * x1 + x1 - 1):
            continue
        w = v * v * (x1 - 1) / (x1 * x1 + x1 - 1)
        return v, w, x1


def _x_point(rng):
    """Random rational point of the slice: ``y0`` is linear once ``x0, y1`` are chosen."""
    while True:
        x0, y1 = _rat(rng), _rat(rng)
        if x0 * y1 == 1:
            continue
        y0 = (y1 * y1 + y1 + x0 + 2 - x0 * y1) / (x0 * y1 - 1)
        x1 = y1 + 2 - x0 * y0
        return SlicePoint(x0, x1, y0, y1)


# ---------------------------------------------------------------------------
# matrix checks shared by the family suites

def _matrix_checks(prefix=""):
    def trace_conditions(fp):
        A, B = fp.A, fp.B
        Ai, Bi = A.inv(), B.inv()
        return (A.trace() == (A @ B).trace() and B.trace() == (B @ Ai).trace()
                and B.trace() == (B @ B @ A).trace()
                and Ai.trace() == (Ai @ Bi).trace() and Bi.trace() == (Bi @ A).trace()
                and Bi.trace() == (Bi @ Bi @ Ai).trace())

    return [
        (prefix + "det A = det B = 1", lambda fp: fp.A.det() == 1 and fp.B.det() == 1),
        (prefix + "traces fixed by the monodromy", trace_conditions),
        (prefix + "T0 A = A B T0", lambda fp: fp.T0 @ fp.A == fp.A @ fp.B @ fp.T0),
        (prefix + "T0 B = B A B T0", lambda fp: fp.T0 @ fp.B == fp.B @ fp.A @ fp.B @ fp.T0),
        (prefix + "det T0 != 0", lambda fp: bool(fp.d0)),
    ]


def _family_checks(identities, component):
    checks = [(label, lambda fp, label=label, text=text: _on_orbit(fp.orbit, text, s=fp.s))
              for label, text in identities]
    checks.append((f"classify contains {component}",
                   lambda fp: component in classify_orbit(fp.orbit)))
    return [(label, (lambda fp, fn=fn: fn(fp[1]))) for label, fn in _matrix_checks() + checks]


def _pair_sampler(build, names):
    def sample(rng):
        p, q, br = _rat(rng), _rat(rng), _branch(rng)
        return _fmt(**{names[0]: p, names[1]: q, "branch": _sign(br)}), (None, build(p, q, br))

    return sample


_V2_IDENTITIES = [
    ("beta = 1", "beta - 1"),
    ("betab = 1", "betab - 1"),
    ("y*yb = alpha + alphab + 2", "y*yb - (alpha + alphab + 2)"),
    ("y^3 + yb^3 = alpha*alphab + 5*alpha + 5*alphab + 5",
     "y^3 + yb^3 - (alpha*alphab + 5*alpha + 5*alphab + 5)"),
    ("eta = yb^3 - 3*(alpha + alphab + 1)", "eta - yb^3 + 3*(alpha + alphab + 1)"),
    ("z = y^2 - yb", "z - y^2 + yb"),
    ("zb = yb^2 - y", "zb - yb^2 + y"),
    ("2*y^3 = alpha*alphab + 5*alpha + 5*alphab + 5 + s",
     "2*y^3 - (alpha*alphab + 5*alpha + 5*alphab + 5) - s"),
    ("2*eta = alpha*alphab - alpha - alphab - 1 - s",
     "2*eta - (alpha*alphab - alpha - alphab - 1) + s"),
]

_V1_IDENTITIES = [
    ("alpha = 1", "alpha - 1"),
    ("alphab = 1", "alphab - 1"),
    ("y*yb = beta + betab + 2", "y*yb - (beta + betab + 2)"),
    ("y^3 + yb^3 = beta*betab + 5*beta + 5*betab + 5",
     "y^3 + yb^3 - (beta*betab + 5*beta + 5*betab + 5)"),
    ("eta = y^3 - 3*(beta + betab + 1)", "eta - y^3 + 3*(beta + betab + 1)"),
    ("z = yb", "z - yb"),
    ("zb = y", "zb - y"),
    ("2*yb^3 = beta*betab + 5*beta + 5*betab + 5 + s",
     "2*yb^3 - (beta*betab + 5*beta + 5*betab + 5) - s"),
]

_V0_IDENTITIES = [
    ("alpha = alphab", "alpha - alphab"),
    ("beta = betab", "beta - betab"),
    ("y*yb = (alpha + 1)*(beta + 1)", "y*yb - (alpha + 1)*(beta + 1)"),
    ("2*y^3 = Y0 - (alpha - beta)*s",
     ("2*y^3 - (alpha^2*beta + alpha*beta^2 + 6*alpha*beta + 3*alpha + 3*beta + 2)"
      " + (alpha - beta)*s")),
    ("2*yb^3 = Y0 + (alpha - beta)*s",
     ("2*yb^3 - (alpha^2*beta + alpha*beta^2 + 6*alpha*beta + 3*alpha + 3*beta + 2)"
      " - (alpha - beta)*s")),
    ("2*eta = E0 - (alpha*beta - 2*alpha - 2*beta + 3)*s",
     ("2*eta - (alpha^2*beta^2 - 2*alpha^2*beta - 2*alpha*beta^2 + 2*alpha^2 + 2*beta^2 - 3)"
      " + (alpha*beta - 2*alpha - 2*beta + 3)*s")),
    ("2*z^3 = Z0 - (alpha^3*beta + 3*alpha^2 - 4*alpha)*s",
     ("2*z^3 - (alpha^4*beta^2 + 10*alpha^2*beta + 9*alpha^2 - 2*alpha^3 - 2)"
      " + (alpha^3*beta + 3*alpha^2 - 4*alpha)*s")),
    ("2*zb^3 = Z0 + (alpha^3*beta + 3*alpha^2 - 4*alpha)*s",
     ("2*zb^3 - (alpha^4*beta^2 + 10*alpha^2*beta + 9*alpha^2 - 2*alpha^3 - 2)"
      " - (alpha^3*beta + 3*alpha^2 - 4*alpha)*s")),
    ("z*zb = 1 + alpha^2 + 2*alpha^2*beta", "z*zb - (1 + alpha^2 + 2*alpha^2*beta)"),
    ("2*y*z = H0 + (1 - alpha)*s",
     "2*y*z - (alpha^2*beta + 3*alpha*beta + 3*alpha + 1) - (1 - alpha)*s"),
    ("2*yb*zb = H0 - (1 - alpha)*s",
     "2*yb*zb - (alpha^2*beta + 3*alpha*beta + 3*alpha + 1) + (1 - alpha)*s"),
]


# ---------------------------------------------------------------------------
# suite builders

def _fiber_suite():
    def sample(rng):
        kind = rng.choice(("XTR", "XPR", "V0", "V1", "V2"))
        if kind == "XTR":
            y, yb = _rat(rng), _rat(rng)
            return f"XTR {_fmt(y=y, yb=yb)}", extract(xtr_rep(y, yb))
        if kind == "XPR":
            v, w, x1 = _xpr_params(rng)
            return f"XPR {_fmt(v=v, w=w, x1=x1)}", extract(xpr_rep(v, w, x1))
        p, q, br = _rat(rng), _rat(rng), _branch(rng)
        build = {"V0": v0_family, "V1": v1_family, "V2": v2_family}[kind]
        return f"{kind} {_fmt(p=p, q=q, branch=_sign(br))}", build(p, q, br).orbit

    labels = [label for label, _ in _fiber_identities(xtr_point(0, 0))]
    checks = [(label, lambda c, i=i: _fiber_identities(c)[i][1]) for i, label in enumerate(labels)]
    return Suite("fiber-trace-identities",
                 "traces of a, b, a^-1, b^-1 obey the four fiber identities on every component",
                 checks, sample)


def _w_suite():
    W = w_catalog()
    names = sorted(W)

    def symbolic_check(name):
        P, Q, disc = W[name]["P"], W[name]["Q"], W[name]["disc"]
        return lambda: expand_is_zero(P * P - 4 * Q - disc)

    def sample(rng):
        point = {k: _rat(rng) for k in ("alpha", "alphab", "beta", "betab")}
        return _fmt(**point), point

    def sampled_check(name):
        P, Q, disc = W[name]["P"], W[name]["Q"], W[name]["disc"]
        return lambda pt: (P * P - 4 * Q).eval(pt) == disc.eval(pt)

    return Suite("W-discriminants", "P^2 - 4Q equals the stored discriminant for W0, W1, W2",
                 [(f"{n}: P^2 - 4Q = disc", sampled_check(n)) for n in names], sample,
                 [(f"{n}: P^2 - 4Q = disc", symbolic_check(n)) for n in names])


def _family_suite(name, claim, build, names, identities, component):
    return Suite(name, claim, _family_checks(identities, component), _pair_sampler(build, names))


def _v0_radical_suite():
    def sample(rng):
        a, b, br = _rat(rng), _rat(rng), _branch(rng)
        return _fmt(alpha=a, beta=b, branch=_sign(br)), v0_family(a, b, br)

    checks = []
    for key in ("V0", "V0-system"):
        for k, poly in enumerate(catalog(key).polys):
            checks.append((f"{key} generator {k + 1} vanishes",
                           lambda fp, poly=poly: vanishes_on_orbit(fp.orbit, poly)))
    return Suite("V0-radical18",
                 "the radical generators and the short system vanish on the distinguished family",
                 checks, sample)


def _xpr_suite():
    v, w, x1 = (RatFunc(var(n)) for n in ("v", "w", "x1"))
    alpha = x1 + 1
    y, yb = v + 1 / w, w + v / w
    z, zb = w * alpha + 1 / (w * w), alpha / w + w * w
    beta = x1 / (x1 - 1) + 1

    def zero(e):
        return lambda: expand_is_zero(e)

    symbolic = [
        ("w^3 - yb*w^2 + y*w - 1 = 0 on the image", zero(w ** 3 - yb * w * w + y * w - 1)),
        ("alpha*w^3 - z*w^2 + 1 = 0 on the image", zero(alpha * w ** 3 - z * w * w + 1)),
        ("w^3 - zb*w + alpha = 0 on the image", zero(w ** 3 - zb * w + alpha)),
        ("(alpha - 2)*(beta - 2) = 1 on the image", zero((alpha - 2) * (beta - 2) - 1)),
    ]

    def sample(rng):
        params = _xpr_params(rng)
        return _fmt(v=params[0], w=params[1], x1=params[2]), params

    def recovers(params):
        c = xpr_point(*params)
        found = xpr_parameters(c)
        return bool(found) and xpr_point(*found) == c

    checks = [
        ("classify contains XPR", lambda p: "XPR" in classify(xpr_point(*p))),
        ("parameters recovered", recovers),
        ("block representation has the parametrized traces",
         lambda p: extract(xpr_rep(*p)).without_eta() == xpr_point(*p)),
    ]
    return Suite("XPR-phi", "the partially reducible parametrization lands on its component",
                 checks, sample, symbolic)


def _boundary_suite():
    a = var("alpha")
    x1 = var("x1")
    lhs = a ** 2 * (2 * a - 3) ** 2 - (a - 2) ** 2
    quartic = a ** 4 - 3 * a ** 3 + 2 * a ** 2 + a - 1
    product = (a ** 2 - a - 1) * (a - 1) ** 2

    def alpha_form(x):
        al = RatFunc(x) + 1
        return al * (2 * al - 3) / (al - 2)

    def roots_at_three():
        ctx = sqrt_adjoin(5)
        return all((9 + 4 * sgn * ctx.s) ** 2 - 18 * (9 + 4 * sgn * ctx.s) + 1 == 0
                   for sgn in (1, -1))

    symbolic = [
        ("alpha^2(2alpha-3)^2 - (alpha-2)^2 = 4*quartic", lambda: expand_is_zero(lhs - 4 * quartic)),
        ("quartic = (alpha^2-alpha-1)(alpha-1)^2", lambda: expand_is_zero(quartic - product)),
        ("x1 and alpha forms of the sextic agree",
         lambda: expand_is_zero(RatFunc(2 * x1 ** 2 + x1 - 1, x1 - 1) - alpha_form(x1))),
        ("alpha = 3: w^3 = 9 +- 4*sqrt(5)", roots_at_three),
    ]

    def sample(rng):
        while True:
            al = _rat(rng)
            if al != 2:
                return _fmt(alpha=al), al

    def sextic_roots(al):
        p = al * (2 * al - 3) / (al - 2)
        disc = sextic_discriminant_check(al) / (al - 2) ** 2
        if not disc:
            return (p * p - 2 * p * p + 1) == 0
        ctx = sqrt_adjoin(disc)
        return all((p + sg * ctx.s) ** 2 - 2 * p * (p + sg * ctx.s) + 1 == 0 for sg in (1, -1))

    checks = [
        ("alpha^2(2alpha-3)^2 - (alpha-2)^2 = 4*quartic",
         lambda al: lhs.eval({"alpha": al}) == 4 * quartic.eval({"alpha": al})),
        ("quartic = (alpha^2-alpha-1)(alpha-1)^2",
         lambda al: quartic.eval({"alpha": al}) == product.eval({"alpha": al})),
        ("roots in w^3 of the sextic use the discriminant", sextic_roots),
    ]
    return Suite("boundary-curve", "the discriminant of the boundary sextic factors",
                 checks, sample, symbolic)


def _component_samples(rng):
    """A random point of a random component, as CharCoords or OrbitCoords."""
    kind = rng.choice(("XTR", "XPR", "V0", "V1", "V2"))
    if kind == "XTR":
        y, yb = _rat(rng), _rat(rng)
        return f"XTR {_fmt(y=y, yb=yb)}", (kind, orbit(xtr_point(y, yb)))
    if kind == "XPR":
        v, w, x1 = _xpr_params(rng)
        return f"XPR {_fmt(v=v, w=w, x1=x1)}", (kind, orbit(xpr_point(v, w, x1)))
    p, q, br = _rat(rng), _rat(rng), _branch(rng)
    build = {"V0": v0_family, "V1": v1_family, "V2": v2_family}[kind]
    return f"{kind} {_fmt(p=p, q=q, branch=_sign(br))}", (kind, build(p, q, br).orbit)


def _symmetry_suite():
    f, h = sym_f_map(), sym_h_map()

    def power(m, k):
        out = m
        for _ in range(k - 1):
            out = compose_maps(out, m)
        return out

    symbolic = [
        ("f^2 = id", lambda: is_identity_map(power(f, 2))),
        ("h^4 = id", lambda: is_identity_map(power(h, 4))),
        ("(f h)^2 = id", lambda: is_identity_map(power(compose_maps(f, h), 2))),
        ("h^2 != id", lambda: not is_identity_map(power(h, 2))),
    ]

    def f_preserves(data):
        kind, o = data
        return kind in classify_orbit(orbit_map(o, f))

    def group_orbitwise(data):
        _, o = data
        return orbit_map(orbit_map(o, f), f) == orbit_map(o, power(f, 2))

    checks = [
        ("f preserves the component", f_preserves),
        ("f^2 acts trivially on the sample", group_orbitwise),
    ]
    return Suite("symmetry-group", "f and h generate a dihedral action of order eight",
                 checks, _component_samples, symbolic)


def _h_suite():
    partner = {"V1": "V2", "V2": "V1", "V0": "V0", "XTR": "XTR", "XPR": "XPR"}
    riley = _riley_sampler()

    def sample(rng):
        kind = rng.choice(("XTR", "XPR", "V0", "V1", "V2"))
        if kind == "XTR":
            y, yb = _rat(rng), _rat(rng)
            return f"XTR {_fmt(y=y, yb=yb)}", (kind, xtr_rep(y, yb))
        if kind == "XPR":
            v, w, x1 = _xpr_params(rng)
            return f"XPR {_fmt(v=v, w=w, x1=x1)}", (kind, xpr_rep(v, w, x1))
        if kind == "V0":
            witness, rep = riley(rng)
            return f"V0 sym2 {witness}", (kind, sym2_rep(rep))
        p = _x_point(rng)
        return f"{kind} slice {_fmt(x0=p.x0, y1=p.y1)}", (kind, dehn_rep(p, kind))

    def pulled(rep):
        return extract(rep.pullback(automorphism_images("h"), "ST")).without_eta()

    def general(data):
        _, rep = data
        return pulled(rep) == sym_h_general(extract(rep))

    def componentwise(data):
        kind, rep = data
        return kind in ("XTR", "XPR") or pulled(rep) == sym_h(extract(rep))

    def moves(data):
        kind, rep = data
        return partner[kind] in classify(pulled(rep))

    checks = [
        ("general formula equals precomposition by h", general),
        ("component-wise formula equals precomposition on V0, V1, V2", componentwise),
        ("h* sends each component to its partner", moves),
    ]
    return Suite("symmetry-h", "h exchanges the two non-distinguished components",
                 checks, sample)


def _riley_sampler():
    poly = riley_polynomial()

    def sample(rng):
        s = _nonzero(rng)
        # the relation is quadratic in u; read its coefficients off three values
        q0 = poly.eval({"s": s, "u": 0})
        up, down = poly.eval({"s": s, "u": 1}), poly.eval({"s": s, "u": -1})
        q2 = (up + down) / 2 - q0
        q1 = (up - down) / 2
        disc = q1 * q1 - 4 * q2 * q0
        br = _branch(rng)
        u = (-q1 + (sqrt_adjoin(disc).root(br) if disc else 0)) / (2 * q2)
        return _fmt(s=s, branch=_sign(br)), riley_rep(s, u)

    return sample


def _sym2_suite():
    sample = _riley_sampler()

    def bridge(rep):
        return sym2_bridge(rep)

    checks = [
        ("relations hold", check_relations),
        ("irreducible-curve membership", lambda r: "irreducible-curve" in classify_sl2(fricke(r))),
        ("discriminant vanishes", lambda r: not v0_discriminant(bridge(r).alpha, bridge(r).beta)),
        ("alpha = alphab and beta = betab",
         lambda r: bridge(r).alpha == bridge(r).alphab and bridge(r).beta == bridge(r).betab),
        ("V0 generators vanish", lambda r: catalog("V0").vanishes_at(bridge(r).point())),
        ("classify contains V0", lambda r: "V0" in classify(bridge(r))),
    ]
    return Suite("sym2-discriminant",
                 "symmetric squares of SL(2) representations lie on the branch curve of V0",
                 checks, sample)


def _f_polys():
    x0, x1, y0, y1 = (var(n) for n in ("x0", "x1", "y0", "y1"))
    nu = x0 * y0 - x1 * y0 + x0 + y1 - 2
    nub = x0 * y1 - x1 + y0 - y1 + 1
    zeta = (x0 ** 2 * y0 * y1 - x0 * x1 * y0 * y1 - x0 ** 2 * y0 + x0 * y0 ** 2 - x1 * y0 ** 2
            + x0 * x1 * y1 - x1 ** 2 * y1 - x0 * y0 * y1 + x1 * y0 * y1 + x0 * y1 ** 2 - x0 * x1
            + 2 * x0 * y0 - x1 * y0 - 3 * x0 * y1 + 2 * x1 * y1 + y0 * y1 - y1 ** 2 + 4 * x0
            - x1 - 2 * y0 - 2)
    return nu, nub, zeta


def _g_ratfuncs():
    nu, nub, zeta = (var(n) for n in ("nu", "nub", "zeta"))
    d1 = zeta - 1
    d2 = -nu * nub + zeta + 3
    return {
        "x0": RatFunc(nub ** 2 + nub * nu - 2 * nu - zeta - 3, d1),
        "x1": RatFunc(nub ** 2 - nu ** 2 + 2 * nub - 2 * nu + zeta - 1, d1),
        "y0": RatFunc(nub * nu - nu ** 2 + 2 * nub - 2 * zeta - 2, d2),
        "y1": RatFunc(-nub ** 2 + 2 * nu - zeta + 1, d2),
    }


def _x_param():
    """Rational parametrization of the slice by ``x0, y1``."""
    x0, y1 = var("x0"), var("y1")
    y0 = RatFunc(y1 ** 2 + y1 + x0 + 2 - x0 * y1, x0 * y1 - 1)
    x1 = RatFunc(y1) + 2 - RatFunc(x0) * y0
    return {"x0": RatFunc(x0), "x1": x1, "y0": y0, "y1": RatFunc(y1)}


def _hypersurface():
    nu, nub, zeta = (var(n) for n in ("nu", "nub", "zeta"))
    return zeta ** 2 - (nu * nub - 2) * zeta + nu ** 3 + nub ** 3 - 5 * nu * nub + 5


def _slice_roundtrip_suite():
    def fg_symbolic(k):
        def check():
            g = _g_ratfuncs()
            target = ("nu", "nub", "zeta")[k]
            image = _f_polys()[k].compose_frac(g)
            return expand_is_zero(image - RatFunc(var(target)), modulo=("zeta", _hypersurface()))
        return check

    def gf_symbolic():
        par = _x_param()
        f_image = {n: p.compose_frac(par) for n, p in zip(("nu", "nub", "zeta"), _f_polys())}
        for name, g in _g_ratfuncs().items():
            back = g.num.compose_frac(f_image) / g.den.compose_frac(f_image)
            if not expand_is_zero(back - par[name]):
                return False
        return True

    def f_on_w():
        par = _x_param()
        image = {n: p.compose_frac(par) for n, p in zip(("nu", "nub", "zeta"), _f_polys())}
        return expand_is_zero(_hypersurface().compose_frac(image))

    symbolic = [
        ("f(g(q)) = q: nu", fg_symbolic(0)),
        ("f(g(q)) = q: nub", fg_symbolic(1)),
        ("f(g(q)) = q: zeta", fg_symbolic(2)),
        ("g(f(p)) = p on the slice", gf_symbolic),
        ("f maps the slice into W", f_on_w),
    ]

    def sample(rng):
        nu, nub, br = _rat(rng), _rat(rng), _branch(rng)
        q = w_point(nu, nub, br)
        p = _x_point(rng)
        slice_g(q)
        slice_g(slice_f(p))
        return f"{_fmt(nu=nu, nub=nub, branch=_sign(br))} {_fmt(x0=p.x0, y1=p.y1)}", (q, p)

    checks = [
        ("f(g(q)) = q", lambda d: slice_f(slice_g(d[0])) == d[0]),
        ("g(f(p)) = p", lambda d: slice_g(slice_f(d[1])) == d[1]),
    ]
    return Suite("slice-roundtrip", "f and g are mutually inverse between the slice and W",
                 checks, sample, symbolic)


def _slice_orders_suite():
    def symbolic_matrices():
        par = _x_param()
        rows_k = [[0, 0, 1], ["x0", 1, "x1"], [-1, 0, -1]]
        rows_l = [[1, "y0", "y1"], [0, -1, -1], [0, 1, 0]]

        def build(rows):
            return Matrix([[par[e] if isinstance(e, str) else RatFunc(MPoly.const(e)) for e in row]
                           for row in rows])

        return build(rows_k), build(rows_l)

    def is_one(M):
        return all(expand_is_zero(M[i, j] - (1 if i == j else 0))
                   for i in range(3) for j in range(3))

    def order(which, n):
        def check():
            K, L = symbolic_matrices()
            M = {"K": K, "L": L, "KL": K @ L}[which]
            out = M
            for _ in range(n - 1):
                out = out @ M
            return is_one(out)
        return check

    def charpoly_kl():
        K, L = symbolic_matrices()
        got = (K @ L).charpoly()
        want = [-1, 1, -1, 1]  # (t − 1)(t² + 1)
        return all(expand_is_zero(g - w) for g, w in zip(got, want))

    symbolic = [
        ("K^3 = 1", order("K", 3)),
        ("L^3 = 1", order("L", 3)),
        ("charpoly(KL) = (t-1)(t^2+1)", charpoly_kl),
        ("(KL)^4 = 1", order("KL", 4)),
    ]

    def sample(rng):
        p = _x_point(rng)
        return _fmt(x0=p.x0, x1=p.x1, y0=p.y0, y1=p.y1), p

    def traces(p):
        K, L = slice_matrices(p)
        KL = K @ L
        return KL.trace() == 1 and KL.inv().trace() == 1

    def divides(p):
        K, L = slice_matrices(p)
        KL = K @ L
        return KL.charpoly() == [-1, 1, -1, 1] and (KL ** 4).is_identity()

    checks = [
        ("triangle relations hold", lambda p: check_relations(slice_rep(p))),
        ("tr KL = tr (KL)^-1 = 1", traces),
        ("charpoly(KL) divides t^4 - 1", divides),
    ]
    return Suite("slice-orders", "the slice matrices have orders 3, 3 and 4",
                 checks, sample, symbolic)


def _dehn_suite():
    def sample(rng):
        p = _x_point(rng)
        return _fmt(x0=p.x0, x1=p.x1, y0=p.y0, y1=p.y1), p

    def v2(p):
        c = extract(dehn_rep(p, "V2"))
        q = slice_f(p)
        return "V2" in classify(c) and (c.y, c.yb, c.alpha) == q.values()

    def v1(p):
        c = extract(dehn_rep(p, "V1"))
        q = slice_f(p)
        return "V1" in classify(c) and (c.yb, c.y, c.beta) == q.values()

    def swap(p):
        return "V1" in classify(sym_h(extract(dehn_rep(p, "V2"))))

    def h_matches(p):
        rep = dehn_rep(p, "V2")
        pulled = rep.pullback(automorphism_images("h"), "ST")
        return extract(pulled).without_eta() == sym_h(extract(rep))

    checks = [
        ("phi lands in V2 with (nu, nub, zeta) = (y, yb, alpha)", v2),
        ("phi.h lands in V1 with (nu, nub, zeta) = (yb, y, beta)", v1),
        ("h* of the V2 image classifies in V1", swap),
        ("coordinate h* agrees with precomposition by h", h_matches),
        ("knot relation holds for both", lambda p: all(
            check_relations(dehn_rep(p, t)) for t in ("V1", "V2"))),
    ]
    return Suite("dehn-classification",
                 "Dehn filling representations land on the non-distinguished components",
                 checks, sample)


def _metabelian_suite():
    W = w_catalog()
    pts = metabelian_points()

    def eta_root(c):
        comp = w_component_of(classify(c))
        P, Q = W[comp]["P"], W[comp]["Q"]
        pt = c.point()
        return c.eta * c.eta - P.eval(pt) * c.eta + Q.eval(pt) == 0

    def counts(_):
        names = [frozenset(classify(c).members) for c in pts]
        return (names.count(frozenset({"V0"})), names.count(frozenset({"V1"})),
                names.count(frozenset({"V2"}))) == (1, 2, 2)

    checks = [
        ("one in V0, two in V1, two in V2", counts),
        ("y = yb = z = zb = 0 and eta = 3",
         lambda c: (c.y, c.yb, c.z, c.zb, c.eta) == (0, 0, 0, 0, 3)),
        ("eta^2 - P*eta + Q = 0", eta_root),
        ("fixed by the center action", lambda c: all(mu3_act(k, c) == c for k in range(3))),
    ]
    fixed = [(str(c), c) for c in pts]
    return Suite("metabelian-points", "the five F2-reducible irreducible characters",
                 checks, fixed=fixed)


def _intersection_suite():
    fixed = []
    for points, expected in INTERSECTION_FIXTURES:
        for c in points:
            fixed.append((str(c), (c, expected)))
    checks = [("classify returns exactly the expected set",
               lambda d: classify(d[0]).members == d[1] and not classify(d[0]).undecided)]
    return Suite("intersection-table", "the two μ3-orbits where the components meet",
                 checks, fixed=fixed)


def _build():
    suites = [
        _fiber_suite(),
        _w_suite(),
        _family_suite("V1-family", "closed-form invariants of the V1 family",
                      v1_family, ("beta", "betab"), _V1_IDENTITIES, "V1"),
        _family_suite("V2-family", "closed-form invariants of the V2 family",
                      v2_family, ("alpha", "alphab"), _V2_IDENTITIES, "V2"),
        _family_suite("V0-identities", "closed-form invariants of the distinguished family",
                      v0_family, ("alpha", "beta"), _V0_IDENTITIES, "V0"),
        _v0_radical_suite(),
        _xpr_suite(),
        _boundary_suite(),
        _symmetry_suite(),
        _h_suite(),
        _sym2_suite(),
        _slice_roundtrip_suite(),
        _slice_orders_suite(),
        _dehn_suite(),
        _metabelian_suite(),
        _intersection_suite(),
    ]
    return {s.name: s for s in suites}


SUITES = _build()


def list_suites():
    """``(name, claim, modes)`` for every suite, in catalog order."""
    return [(s.name, s.claim, tuple(s.modes)) for s in SUITES.values()]


def _get(name):
    try:
        return SUITES[name]
    except KeyError:
        raise UnknownSuite(name) from None


def _draw(suite, rng):
    for _ in range(MAX_RETRIES):
        try:
            return suite.sampler(rng)
        except (ExcludedLocus, ZeroDivisionError, RelationError):
            continue
    raise RuntimeError(f"{suite.name}: no admissible sample after {MAX_RETRIES} draws")


def _run_checks(suite, items):
    verdicts = []
    for label, fn in suite.checks:
        witness = None
        for wit, data in items:
            try:
                ok = fn(data)
            except Exception as exc:  # noqa: BLE001 - a crash at a sample is a failure there
                ok = False
                wit = f"{wit} ({type(exc).__name__}: {exc})"
            if not ok:
                witness = wit
                break
        verdicts.append(Verdict(label, "pass" if witness is None else "fail", witness))
    return verdicts


def _sampled(suite, n, seed):
    if suite.fixed is not None:
        items = list(suite.fixed)
    else:
        rng = random.Random(f"{suite.name}/{seed}")
        items = [_draw(suite, rng) for _ in range(n)]
    return _run_checks(suite, items)


def run_suite(name, mode="sampled", n=50, seed=0, budget=None):
    """Run a suite; deterministic in ``(name, mode, n, seed, budget)``.

    ``budget`` caps the terms of any product in symbolic mode (default
    :func:`~fig8char.poly.term_budget`); a check that exceeds it is reported
    inconclusive and the suite falls back to sampling.
    """
    suite = _get(name)
    if mode not in ("symbolic", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "sampled":
        if n < 1:
            raise ValueError("sampled mode needs n >= 1")
        count = len(suite.fixed) if suite.fixed is not None else n
        return Report(name, "sampled", count, seed, _sampled(suite, n, seed))
    if not suite.symbolic:
        raise ValueError(f"suite {name!r} has no symbolic mode")
    verdicts = []
    inconclusive = []
    for label, fn in suite.symbolic:
        try:
            with term_limit(budget):
                ok = fn()
        except BudgetExceeded:
            inconclusive.append(label)
            continue
        verdicts.append(Verdict(label, "pass" if ok else "fail", None if ok else "symbolic"))
    if inconclusive:
        notes = [f"inconclusive by budget: {label}" for label in inconclusive]
        notes.append(f"downgraded to sampled mode with n={DOWNGRADE_SAMPLES}")
        verdicts += [Verdict(label, "inconclusive") for label in inconclusive]
        verdicts += _sampled(suite, DOWNGRADE_SAMPLES, seed)
        return Report(name, "symbolic->sampled", DOWNGRADE_SAMPLES, seed, verdicts, notes)
    return Report(name, "symbolic", 0, seed, verdicts)
