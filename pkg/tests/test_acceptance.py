"""Acceptance criteria, one test each; every test prints a PASS or FAIL line.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the log) or as
a script, ``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from fractions import Fraction

import pytest

from fig8char.components import (
    INTERSECTION_FIXTURES,
    boundary_curve_alpha,
    catalog,
    classify,
    classify_orbit,
)
from fig8char.constructors import (
    ExcludedLocus,
    SlicePoint,
    dehn_rep,
    metabelian_points,
    slice_f,
    slice_g,
    slice_matrices,
    slice_rep,
    v0_family,
    v1_family,
    v2_family,
    w_hypersurface,
    w_point,
    xpr_point,
    xpr_rep,
    xtr_point,
    xtr_rep,
)
from fig8char.coords import (
    compose_maps,
    extract,
    is_identity_map,
    orbit,
    orbit_map,
    sym_f_map,
    sym_h_map,
)
from fig8char.grp import RelationError, check_relations, longitude
from fig8char.numtower import sqrt_adjoin
from fig8char.poly import expand_is_zero, var
from fig8char.sl2 import riley_polynomial, riley_rep, sym2_bridge
from fig8char.verify import SUITES, run_suite

SEED = 20241016


@pytest.fixture
def emit(capsys):
    def write(line):
        with capsys.disabled():
            print(line, flush=True)
    return write


def _verdict(emit, number, ok, elapsed, limit, what):
    in_time = elapsed < limit
    status = "PASS" if ok and in_time else "FAIL"
    note = "" if in_time else f" (over the {limit:g} s bound)"
    emit(f"\ncriterion {number:>2} [PRIMARY] {status}: {what} [{elapsed:.2f} s]{note}")
    assert ok, f"criterion {number}: {what}"
    assert in_time, f"criterion {number}: took {elapsed:.2f} s, bound {limit} s"


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def _rat(rng):
    return Fraction(rng.randint(-20, 20), rng.randint(1, 10))


def _admissible(rng, build, count):
    """``count`` values of ``build(rng)``, skipping excluded parameters."""
    out = []
    while len(out) < count:
        try:
            out.append(build(rng))
        except (ExcludedLocus, ZeroDivisionError, RelationError):
            continue
    return out


def _xpr_params(rng):
    x1, v = _rat(rng), _rat(rng)
    if x1 == 1 or not (x1 * x1 + x1 - 1) or not v:
        raise ExcludedLocus("outside the XPR parametrization")
    return v, v * v * (x1 - 1) / (x1 * x1 + x1 - 1), x1


def _slice_point(rng):
    x0, y1 = _rat(rng), _rat(rng)
    if x0 * y1 == 1:
        raise ExcludedLocus("slice chart")
    y0 = (y1 * y1 + y1 + x0 + 2 - x0 * y1) / (x0 * y1 - 1)
    return SlicePoint(x0, y1 + 2 - x0 * y0, y0, y1)


def _family_point(build, branch):
    return lambda rng: build(_rat(rng), _rat(rng), branch)


def _run_checks(checks, items):
    return all(fn(item) for item in items for _, fn in checks)


# ---------------------------------------------------------------------------

def test_criterion_01_intersection_table(emit):
    with Timer() as t:
        ok = True
        for points, expected in INTERSECTION_FIXTURES:
            ok &= len(points) == 3
            for c in points:
                got = classify(c)
                ok &= got.members == expected and not got.undecided
        ok &= INTERSECTION_FIXTURES[0][1] == {"XTR", "XPR", "V0"}
        ok &= INTERSECTION_FIXTURES[1][1] == {"XPR", "V0", "V1", "V2"}
        ok &= INTERSECTION_FIXTURES[0][0][0].values() == (4, 4, 8, 8, 3, 3, 3, 3)
        ok &= INTERSECTION_FIXTURES[1][0][0].values() == (2, 2, 2, 2, 1, 1, 1, 1)
    _verdict(emit, 1, ok, t.elapsed, 1, "intersection table on both mu3-orbits")


def test_criterion_02_fiber_identities(emit):
    rng = random.Random(f"{SEED}/2")
    builders = {
        "XTR": lambda r: xtr_rep(_rat(r), _rat(r)),
        "XPR": lambda r: xpr_rep(*_xpr_params(r)),
        "V0": lambda r: v0_family(_rat(r), _rat(r), r.choice((1, -1))).projective_rep(),
        "V1": lambda r: v1_family(_rat(r), _rat(r), r.choice((1, -1))).projective_rep(),
        "V2": lambda r: v2_family(_rat(r), _rat(r), r.choice((1, -1))).projective_rep(),
    }
    with Timer() as t:
        reps = []
        for build in builders.values():
            reps += _admissible(rng, build, 20)
        ok = len(reps) == 100
        for rep in reps:
            ok &= check_relations(rep)
            a, b = rep("a"), rep("b")
            al, alb, be, beb = a.trace(), a.inv().trace(), b.trace(), b.inv().trace()
            ok &= al == al * be - alb * be + alb
            ok &= alb == alb * beb - al * beb + al
            ok &= be == be * al - beb * al + beb
            ok &= beb == beb * alb - be * alb + be
    _verdict(emit, 2, ok, t.elapsed, 30, "fiber identities on 100 representations, 20 per constructor")


def test_criterion_03_w_discriminants(emit):
    with Timer() as t:
        report = run_suite("W-discriminants", mode="symbolic")
        ok = report.mode == "symbolic" and report.passed and len(report.verdicts) == 3
    _verdict(emit, 3, ok, t.elapsed, 5, "P^2 - 4Q factorizations for W0, W1, W2 by expansion")


def test_criterion_04_v1_v2_families(emit):
    with Timer() as t:
        ok = True
        for name, build in (("V2-family", v2_family), ("V1-family", v1_family)):
            checks = SUITES[name].checks
            for branch in (1, -1):
                rng = random.Random(f"{SEED}/4/{name}/{branch}")
                points = _admissible(rng, _family_point(build, branch), 50)
                ok &= _run_checks(checks, [(None, fp) for fp in points])
                ok &= all(fp.A.det() == 1 for fp in points)
    _verdict(emit, 4, ok, t.elapsed, 300,
             "v2_family and v1_family, 50 points per branch: det, traces, intertwining, equations")


def test_criterion_05_v0_family(emit):
    with Timer() as t:
        identities = SUITES["V0-identities"].checks
        radical = SUITES["V0-radical18"].checks
        ok = len(catalog("V0")) == 20
        for branch in (1, -1):
            rng = random.Random(f"{SEED}/5/{branch}")
            points = _admissible(rng, _family_point(v0_family, branch), 50)
            ok &= _run_checks(identities, [(None, fp) for fp in points])
            ok &= _run_checks(radical, points)
    _verdict(emit, 5, ok, t.elapsed, 300, "v0_family, 50 points per branch: identity block and radical")


def test_criterion_06_boundary_discriminant(emit):
    with Timer() as t:
        a = var("alpha")
        quartic = a ** 4 - 3 * a ** 3 + 2 * a ** 2 + a - 1
        ok = expand_is_zero(a ** 2 * (2 * a - 3) ** 2 - (a - 2) ** 2 - 4 * quartic)
        ok &= expand_is_zero(quartic - (a ** 2 - a - 1) * (a - 1) ** 2)
        ok &= run_suite("boundary-curve", mode="symbolic").passed
        # at alpha = 3 the sextic is u^2 - 18u + 1 in u = w^3
        al = Fraction(3)
        coeff = 2 * al * (2 * al - 3) / (al - 2)
        r5 = sqrt_adjoin(5).s
        for u in (9 + 4 * r5, 9 - 4 * r5):
            ok &= u * u - coeff * u + 1 == 0
        ok &= coeff == 18
        # 9 + 4 sqrt 5 is the cube of (3 + sqrt 5)/2, an honest root of the sextic
        ok &= boundary_curve_alpha((3 + r5) / 2, 3) and boundary_curve_alpha((3 - r5) / 2, 3)
    _verdict(emit, 6, ok, t.elapsed, 5, "boundary sextic discriminant and w^3 = 9 +- 4 sqrt 5 at alpha = 3")


def test_criterion_07_metabelian_points(emit):
    with Timer() as t:
        pts = metabelian_points()
        kinds = sorted(" ".join(classify(c).names()) for c in pts)
        ok = len(pts) == 5 and kinds == ["V0", "V1", "V1", "V2", "V2"]
        ok &= all((c.y, c.yb, c.z, c.zb, c.eta) == (0, 0, 0, 0, 3) for c in pts)
        ok &= run_suite("metabelian-points").passed
    _verdict(emit, 7, ok, t.elapsed, 1, "five metabelian characters: one V0, two V1, two V2")


def test_criterion_08_symmetries(emit):
    with Timer() as t:
        f, h = sym_f_map(), sym_h_map()
        fh = compose_maps(f, h)
        h2 = compose_maps(h, h)
        ok = is_identity_map(compose_maps(f, f))
        ok &= is_identity_map(compose_maps(h2, h2))
        ok &= is_identity_map(compose_maps(fh, fh))
        rng = random.Random(f"{SEED}/8")
        for src, dst, build in (("V1", "V2", v1_family), ("V2", "V1", v2_family)):
            pts = _admissible(rng, lambda r, build=build: build(_rat(r), _rat(r), r.choice((1, -1))),
                              50)
            ok &= all(dst in classify_orbit(orbit_map(fp.orbit, h)) for fp in pts)
        samplers = {
            "XTR": lambda r: orbit(xtr_point(_rat(r), _rat(r))),
            "XPR": lambda r: orbit(xpr_point(*_xpr_params(r))),
            "V0": lambda r: v0_family(_rat(r), _rat(r), r.choice((1, -1))).orbit,
            "V1": lambda r: v1_family(_rat(r), _rat(r), r.choice((1, -1))).orbit,
            "V2": lambda r: v2_family(_rat(r), _rat(r), r.choice((1, -1))).orbit,
        }
        for kind, sample in samplers.items():
            for o in _admissible(rng, sample, 50):
                ok &= kind in classify_orbit(o)
                ok &= kind in classify_orbit(orbit_map(o, f))
    _verdict(emit, 8, ok, t.elapsed, 60,
             "f^2 = h^4 = (fh)^2 = id; h swaps V1 and V2; f preserves every component")


def test_criterion_09_slice_and_filling(emit):
    with Timer() as t:
        r7 = sqrt_adjoin(-7).s
        ok = w_hypersurface(2, 2, 1) == 0
        ok &= all(w_hypersurface(3, 3, (7 + e * r7) / 2) == 0 for e in (1, -1))
        ok &= run_suite("slice-orders", mode="symbolic").passed
        roundtrip = run_suite("slice-roundtrip", mode="symbolic")
        ok &= roundtrip.mode == "symbolic" and roundtrip.passed
        rng = random.Random(f"{SEED}/9")
        pts = _admissible(rng, _slice_point, 50)
        for p in pts:
            K, L = slice_matrices(p)
            ok &= (K ** 3).is_identity() and (L ** 3).is_identity()
            ok &= ((K @ L) ** 4).is_identity() and check_relations(slice_rep(p))
            ok &= slice_g(slice_f(p)) == p
            for target in ("V2", "V1"):
                rep = dehn_rep(p, target)
                ok &= check_relations(rep) and target in classify(extract(rep))

        def fg_sample(r):
            q = w_point(_rat(r), _rat(r), r.choice((1, -1)))
            return q, slice_g(q)

        for q, p in _admissible(rng, fg_sample, 50):
            ok &= slice_f(p) == q
    _verdict(emit, 9, ok, t.elapsed, 120,
             "hypersurface points, K and L orders, f and g inverse, filling lands in V2 and V1")


def test_criterion_10_example_end_to_end(emit):
    with Timer() as t:
        r7 = sqrt_adjoin(-7).s
        q = w_point(3, 3, 1)
        ok = q.zeta == (7 + r7) / 2
        rep = dehn_rep(slice_g(q), "V1")
        S = rep("S")
        ok &= S.trace() == 3 and S.inv().trace() == 3
        ok &= rep(longitude()).charpoly() == [-1, 3, -3, 1]
        c = extract(rep)
        ok &= "V1" in classify(c)
        ok &= c.beta + c.betab == 7 and c.beta * c.betab == 14
    _verdict(emit, 10, ok, t.elapsed, 10,
             "example (3, 3, 7/2 + i sqrt 7/2): traces 3, unipotent longitude, V1 point")


def test_criterion_11_sym2_bridge(emit):
    poly = riley_polynomial()

    def riley_point(r):
        s = _rat(r)
        if not s:
            raise ExcludedLocus("s = 0")
        q0 = poly.eval({"s": s, "u": 0})
        up, down = poly.eval({"s": s, "u": 1}), poly.eval({"s": s, "u": -1})
        q2, q1 = (up + down) / 2 - q0, (up - down) / 2
        disc = q1 * q1 - 4 * q2 * q0
        root = sqrt_adjoin(disc).root(r.choice((1, -1))) if disc else 0
        return riley_rep(s, (-q1 + root) / (2 * q2))

    with Timer() as t:
        rng = random.Random(f"{SEED}/11")
        reps = _admissible(rng, riley_point, 20)
        ok = len(reps) == 20 and all(check_relations(r) for r in reps)
        generators = catalog("V0").polys[2:]
        ok &= len(generators) == 18
        for rep in reps:
            c = sym2_bridge(rep)
            a, b = c.alpha, c.beta
            ok &= a * a * b * b - 6 * a * b - 4 * a - 4 * b - 3 == 0
            pt = c.point()
            ok &= all(g.eval(pt) == 0 for g in generators)
    _verdict(emit, 11, ok, t.elapsed, 60,
             "symmetric squares of 20 SL(2) points: discriminant and 18 generators")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
