"""Sparse multivariate polynomials, formal fractions and square-root adjunction.

Monomials are packed into a single integer, 16 bits per variable in the
fixed global order :data:`VARS`, so multiplying monomials is integer
addition.  Coefficients are field elements from :mod:`fig8char.numtower`.
"""

from __future__ import annotations

import os
import re
import threading
from contextlib import contextmanager
from fractions import Fraction

from .numtower import Cyclo12, ParseError, QuadExt, as_elem, format_elem, parse_elem

__all__ = [
    "VARS",
    "BudgetExceeded",
    "EvalError",
    "MPoly",
    "RatFunc",
    "SqrtPoly",
    "UPoly",
    "const",
    "expand_is_zero",
    "gcd_univar",
    "parse_poly",
    "resultant_in",
    "term_budget",
    "term_limit",
    "var",
]

VARS = (
    "alpha", "alphab", "beta", "betab", "y", "yb", "z", "zb", "eta",
    "v", "w", "x1", "nu", "nub", "zeta", "s",
    "x0", "y0", "y1", "x2", "t", "u", "lam", "m", "Y",
)
_INDEX = {name: k for k, name in enumerate(VARS)}
_BITS = 16
_MASK = (1 << _BITS) - 1


class BudgetExceeded(RuntimeError):
    """Intermediate expansion grew beyond the configured term budget."""


class EvalError(ValueError):
    """Evaluation failed: an unbound variable or a vanishing denominator."""


_state = threading.local()


def term_budget():
    """Active term budget (``FIG8_TERM_BUDGET`` or 2,000,000)."""
    return int(os.environ.get("FIG8_TERM_BUDGET", "2000000"))


def _limit():
    return getattr(_state, "limit", None)


@contextmanager
def term_limit(budget=None):
    """Raise :class:`BudgetExceeded` when any product inside the block
    grows beyond ``budget`` terms (default :func:`term_budget`)."""
    previous = _limit()
    _state.limit = term_budget() if budget is None else budget
    try:
        yield
    finally:
        _state.limit = previous


def _shift(name):
    try:
        return _INDEX[name] * _BITS
    except KeyError:
        raise KeyError(f"unknown variable {name!r}") from None


def _exponents(mono):
    out = []
    k = 0
    while mono:
        e = mono & _MASK
        if e:
            out.append((k, e))
        mono >>= _BITS
        k += 1
    return out


def _exp_tuple(mono):
    return tuple((mono >> (_BITS * k)) & _MASK for k in range(len(VARS)))


def _sort_key(mono):
    exps = _exp_tuple(mono)
    return (-sum(exps), tuple(-e for e in exps))


def _norm(c):
    if isinstance(c, Cyclo12) and c.is_rational():
        return c.rational()
    return as_elem(c)


class MPoly:
    """Sparse polynomial; ``terms`` maps packed monomials to nonzero coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {} if terms is None else terms

    @classmethod
    def const(cls, c):
        c = _norm(c)
        return cls({0: c} if c else {})

    @classmethod
    def var(cls, name, power=1):
        return cls({power << _shift(name): Fraction(1)})

    @staticmethod
    def _coerce(other):
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction, Cyclo12, QuadExt)):
            return MPoly.const(other)
        return None

    # -- queries ---------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def variables(self):
        found = set()
        for mono in self.terms:
            for k, _ in _exponents(mono):
                found.add(VARS[k])
        return sorted(found, key=_INDEX.__getitem__)

    def degree(self, name=None):
        """Degree in ``name``, or total degree; ``-1`` for the zero polynomial."""
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e for _, e in _exponents(m)) for m in self.terms)
        sh = _shift(name)
        return max((m >> sh) & _MASK for m in self.terms)

    def coeff_in(self, name):
        """Map ``e ↦`` coefficient polynomial of ``name^e``."""
        sh = _shift(name)
        out = {}
        for mono, c in self.terms.items():
            e = (mono >> sh) & _MASK
            out.setdefault(e, {})[mono - (e << sh)] = c
        return {e: MPoly(t) for e, t in out.items()}

    def strip_power(self, name):
        """Divide by the largest power of ``name`` dividing every term."""
        if not self.terms:
            return self
        sh = _shift(name)
        low = min((m >> sh) & _MASK for m in self.terms)
        return MPoly({m - (low << sh): c for m, c in self.terms.items()})

    def constant(self):
        return self.terms.get(0, Fraction(0))

    def is_constant(self):
        return all(m == 0 for m in self.terms)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo12, QuadExt)):
            if not other:
                return MPoly()
            return MPoly({m: c * other for m, c in self.terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.terms, o.terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        limit = _limit()
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = ma + mb
                v = get(m)
                out[m] = ca * cb if v is None else v + ca * cb
            if limit is not None and len(out) > limit:
                raise BudgetExceeded(f"expansion exceeded {limit} terms")
        return MPoly({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Cyclo12, QuadExt)):
            inv = 1 / as_elem(other)
            return self * inv
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- evaluation and substitution ------------------------------------
    def eval(self, point):
        """Value at ``point`` (a mapping from variable names to scalars)."""
        total = Fraction(0)
        powers = {}
        for mono, c in self.terms.items():
            term = c
            for k, e in _exponents(mono):
                key = (k, e)
                p = powers.get(key)
                if p is None:
                    name = VARS[k]
                    if name not in point:
                        raise EvalError(f"unbound variable {name}")
                    p = as_elem(point[name]) ** e
                    powers[key] = p
                term = term * p
            total = total + term
        return total

    def subs(self, mapping):
        """Substitute polynomials (or scalars) for variables."""
        return self.compose({k: _to_mpoly(v) for k, v in mapping.items()})

    def compose(self, mapping):
        """Substitute :class:`MPoly` values; unmapped variables stay put."""
        result = MPoly()
        powers = {}
        for mono, c in self.terms.items():
            term = MPoly.const(c)
            rest = 0
            for k, e in _exponents(mono):
                name = VARS[k]
                if name in mapping:
                    key = (k, e)
                    p = powers.get(key)
                    if p is None:
                        p = mapping[name] ** e
                        powers[key] = p
                    term = term * p
                else:
                    rest += e << (k * _BITS)
            if rest:
                term = MPoly({m + rest: cc for m, cc in term.terms.items()})
            result = result + term
        return result

    def compose_frac(self, mapping):
        """Substitute :class:`RatFunc` values, returning a :class:`RatFunc`."""
        mapping = {k: RatFunc.lift(v) for k, v in mapping.items()}
        degs = {name: self.degree(name) for name in mapping}
        num = MPoly()
        den = MPoly.const(1)
        for name, d in degs.items():
            if d > 0:
                den = den * mapping[name].den ** d
        cache = {}

        def power(name, which, e):
            key = (name, which, e)
            if key not in cache:
                f = mapping[name]
                cache[key] = (f.num if which else f.den) ** e
            return cache[key]

        for mono, c in self.terms.items():
            term = MPoly.const(c)
            rest = 0
            seen = {}
            for k, e in _exponents(mono):
                name = VARS[k]
                if name in mapping:
                    seen[name] = e
                    term = term * power(name, 1, e)
                else:
                    rest += e << (k * _BITS)
            for name, d in degs.items():
                e = seen.get(name, 0)
                if d - e > 0:
                    term = term * power(name, 0, d - e)
            if rest:
                term = MPoly({m + rest: cc for m, cc in term.terms.items()})
            num = num + term
        return RatFunc(num, den)

    def reduce_mod(self, name, relation):
        """Remainder modulo ``relation``, which must be monic in ``name``."""
        parts = relation.coeff_in(name)
        d = max(parts)
        if d < 1 or parts[d] != MPoly.const(1):
            raise ValueError(f"relation is not monic of positive degree in {name}")
        tail = -(relation - MPoly.var(name, d))
        sh = _shift(name)
        current = self
        while current.degree(name) >= d:
            keep = {}
            high = MPoly()
            for mono, c in current.terms.items():
                e = (mono >> sh) & _MASK
                if e >= d:
                    high.terms[mono - (d << sh)] = c
                else:
                    keep[mono] = c
            current = MPoly(keep) + high * tail
        return current

    def map_coeffs(self, fn):
        out = {}
        for m, c in self.terms.items():
            v = fn(c)
            if v:
                out[m] = v
        return MPoly(out)

    # -- text ------------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MPoly({format_poly(self)!r})"


def _to_mpoly(v):
    if isinstance(v, MPoly):
        return v
    if isinstance(v, str):
        return MPoly.var(v)
    return MPoly.const(v)


def var(name, power=1):
    return MPoly.var(name, power)


def const(c):
    return MPoly.const(c)


# ---------------------------------------------------------------------------
# formal fractions

class RatFunc:
    """``num/den`` with no gcd reduction; equality by cross-multiplication."""

    __slots__ = ("den", "num")

    def __init__(self, num, den=None):
        self.num = _to_mpoly(num)
        self.den = MPoly.const(1) if den is None else _to_mpoly(den)
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")

    @classmethod
    def lift(cls, x):
        return x if isinstance(x, RatFunc) else cls(_to_mpoly(x))

    def _pair(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (MPoly, int, Fraction, Cyclo12, QuadExt)):
            return RatFunc(_to_mpoly(other))
        return None

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero fraction")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return RatFunc(self.den ** (-n), self.num ** (-n))
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    __hash__ = None

    def eval(self, point):
        d = self.den.eval(point)
        if not d:
            raise EvalError("denominator vanishes at this point")
        return self.num.eval(point) / d

    def compose_frac(self, mapping):
        return self.num.compose_frac(mapping) / self.den.compose_frac(mapping)

    def __repr__(self):
        return f"RatFunc(({self.num})/({self.den}))"


# ---------------------------------------------------------------------------
# adjoined square root over fractions

class SqrtPoly:
    """``p0 + p1·s`` with ``s² = delta``; ``p0, p1`` are :class:`RatFunc`."""

    __slots__ = ("delta", "p0", "p1")

    def __init__(self, p0, p1=0, delta=None):
        self.p0 = RatFunc.lift(p0)
        self.p1 = RatFunc.lift(p1)
        self.delta = MPoly.const(0) if delta is None else _to_mpoly(delta)

    @classmethod
    def root(cls, delta):
        return cls(0, 1, delta)

    def _pair(self, other):
        if isinstance(other, SqrtPoly):
            if other.delta != self.delta and not other.p1.is_zero() and not self.p1.is_zero():
                raise ValueError("square roots of different radicands")
            return other
        if isinstance(other, (RatFunc, MPoly, int, Fraction, Cyclo12, QuadExt)):
            return SqrtPoly(other, 0, self.delta)
        return None

    def _delta_with(self, o):
        return self.delta if not self.p1.is_zero() or o.p1.is_zero() else o.delta

    def __add__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        return SqrtPoly(self.p0 + o.p0, self.p1 + o.p1, self._delta_with(o))

    __radd__ = __add__

    def __neg__(self):
        return SqrtPoly(-self.p0, -self.p1, self.delta)

    def __sub__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        delta = self._delta_with(o)
        p0 = self.p0 * o.p0 + self.p1 * o.p1 * delta
        p1 = self.p0 * o.p1 + self.p1 * o.p0
        return SqrtPoly(p0, p1, delta)

    __rmul__ = __mul__

    def conj(self):
        return SqrtPoly(self.p0, -self.p1, self.delta)

    def __truediv__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        n = o.p0 * o.p0 - o.p1 * o.p1 * o.delta
        if n.is_zero():
            raise ZeroDivisionError("norm of the divisor vanishes identically")
        c = self * o.conj()
        return SqrtPoly(c.p0 / n, c.p1 / n, c.delta)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = SqrtPoly(1, 0, self.delta)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def is_zero(self):
        return self.p0.is_zero() and self.p1.is_zero()

    def eval(self, point, s0=None):
        """Value with ``s ↦ s0``; ``s0`` must square to ``delta`` at the point."""
        base = self.p0.eval(point)
        if self.p1.is_zero():
            return base
        if s0 is None:
            raise EvalError("a value for the square root is required")
        if as_elem(s0) ** 2 != self.delta.eval(point):
            raise EvalError("supplied root does not square to the radicand")
        return base + self.p1.eval(point) * s0

    def __repr__(self):
        return f"SqrtPoly({self.p0!r} + ({self.p1!r})*s, s^2={self.delta})"


def expand_is_zero(e, modulo=None, budget=None):
    """Decide ``e ≡ 0`` by full expansion of cleared numerators.

    ``modulo`` is an optional ``(var, relation)`` pair; numerators are reduced
    by that monic relation before the zero test.  Raises
    :class:`BudgetExceeded` when intermediate expansion grows beyond
    ``budget`` terms (default :func:`term_budget`).
    """
    if budget is None and _limit() is not None:
        budget = _limit()
    with term_limit(budget):
        if isinstance(e, SqrtPoly):
            nums = [e.p0.num, e.p1.num]
        elif isinstance(e, RatFunc):
            nums = [e.num]
        else:
            nums = [_to_mpoly(e)]
        for n in nums:
            if modulo is not None:
                n = n.reduce_mod(*modulo)
            if not n.is_zero():
                return False
        return True


# ---------------------------------------------------------------------------
# resultants

def _det_dp(rows):
    """Determinant of a square matrix of ring elements by subset recursion."""
    n = len(rows)
    dp = {0: MPoly.const(1)}
    for r in range(n):
        nxt = {}
        for mask, val in dp.items():
            for j in range(n):
                if mask >> j & 1:
                    continue
                entry = rows[r][j]
                if entry.is_zero():
                    continue
                sign = -1 if (mask >> (j + 1)).bit_count() & 1 else 1
                term = val * entry
                if sign < 0:
                    term = -term
                key = mask | (1 << j)
                nxt[key] = nxt[key] + term if key in nxt else term
        dp = nxt
    return dp.get((1 << n) - 1, MPoly())


def resultant_in(p, q, name):
    """Sylvester resultant of ``p`` and ``q`` with respect to ``name``."""
    p, q = _to_mpoly(p), _to_mpoly(q)
    m, n = p.degree(name), q.degree(name)
    if m < 1 or n < 1:
        raise ValueError(f"both polynomials need positive degree in {name}")
    pc, qc = p.coeff_in(name), q.coeff_in(name)
    zero = MPoly()
    size = m + n
    rows = []
    for r in range(n):
        row = [zero] * size
        for e in range(m + 1):
            row[r + m - e] = pc.get(e, zero)
        rows.append(row)
    for r in range(m):
        row = [zero] * size
        for e in range(n + 1):
            row[r + n - e] = qc.get(e, zero)
        rows.append(row)
    return _det_dp(rows)


# ---------------------------------------------------------------------------
# univariate polynomials over a field

class UPoly:
    """Dense univariate polynomial, coefficients low degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        c = [as_elem(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.c = c

    @classmethod
    def from_mpoly(cls, p, name):
        p = _to_mpoly(p)
        parts = p.coeff_in(name)
        for part in parts.values():
            if not part.is_constant():
                raise ValueError(f"polynomial is not univariate in {name}")
        d = max(parts) if parts else -1
        return cls([parts[e].constant() if e in parts else 0 for e in range(d + 1)])

    def to_mpoly(self, name):
        out = MPoly()
        for e, c in enumerate(self.c):
            if c:
                out = out + MPoly.var(name, e) * c
        return out

    def degree(self):
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def lead(self):
        return self.c[-1]

    def monic(self):
        inv = 1 / self.lead()
        return UPoly([x * inv for x in self.c])

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.c):
            acc = acc * x + c
        return acc

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.c)
        dq = len(r) - len(other.c)
        if dq < 0:
            return UPoly([]), UPoly(r)
        q = [Fraction(0)] * (dq + 1)
        inv = 1 / other.lead()
        for k in range(dq, -1, -1):
            coef = r[k + len(other.c) - 1] * inv
            q[k] = coef
            if coef:
                for j, oc in enumerate(other.c):
                    r[k + j] = r[k + j] - coef * oc
        return UPoly(q), UPoly(r[: len(other.c) - 1])

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        return len(self.c) == len(other.c) and all(a == b for a, b in zip(self.c, other.c))

    __hash__ = None

    def __repr__(self):
        return f"UPoly({[format_elem(x) for x in self.c]})"


def gcd_univar(p, q, name=None):
    """Monic gcd of two univariate polynomials by Euclid's algorithm."""
    if not isinstance(p, UPoly):
        p = UPoly.from_mpoly(p, name)
    if not isinstance(q, UPoly):
        q = UPoly.from_mpoly(q, name)
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials")
    while not q.is_zero():
        p, q = q, p.divmod(q)[1]
    return p.monic()


# ---------------------------------------------------------------------------
# text format
#
# poly   := ['+'|'-'] term (('+'|'-') term)*
# term   := factor ('*' factor)*
# factor := atom ('^' int)?
# atom   := int ('/' int)? | ident | '[' element ']' | '(' poly ')'
#
# Identifiers are always variables.  Constants from Q(ζ12) go in brackets
# using the element grammar, e.g. ``[1/2*i]*alpha^2``.

_PTOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\[[^\]]*\])|([-+*/^()]))")


def parse_poly(text):
    """Parse polynomial text into an :class:`MPoly`."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _PTOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastindex
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append((0, "", len(text)))
    idx = 0

    def peek():
        return tokens[idx]

    def advance():
        nonlocal idx
        idx += 1
        return tokens[idx - 1]

    def expect(sym):
        tok = advance()
        if tok[1] != sym:
            raise ParseError(f"expected {sym!r}", tok[2])

    def atom():
        kind, val, at = advance()
        if kind == 1:
            value = Fraction(int(val))
            if peek()[1] == "/":
                advance()
                dk, dv, dat = advance()
                if dk != 1 or int(dv) == 0:
                    raise ParseError("bad denominator", dat)
                value /= int(dv)
            return MPoly.const(value)
        if kind == 2:
            if val not in _INDEX:
                raise ParseError(f"unknown variable {val!r}", at)
            return MPoly.var(val)
        if kind == 3:
            try:
                return MPoly.const(parse_elem(val[1:-1]))
            except ParseError as exc:
                raise ParseError(f"bad coefficient {val}: {exc}", at) from None
        if val == "(":
            inner = poly()
            expect(")")
            return inner
        raise ParseError(f"unexpected {val or 'end of input'!r}", at)

    def factor():
        base = atom()
        if peek()[1] == "^":
            advance()
            kind, val, at = advance()
            if kind != 1:
                raise ParseError("exponent must be a nonnegative integer", at)
            base = base ** int(val)
        return base

    def term():
        value = factor()
        while peek()[1] == "*":
            advance()
            value = value * factor()
        return value

    def poly():
        sign = 1
        if peek()[1] in "+-" and peek()[0] == 4:
            sign = -1 if advance()[1] == "-" else 1
        total = term() * sign
        while peek()[0] == 4 and peek()[1] in "+-":
            sign = -1 if advance()[1] == "-" else 1
            total = total + term() * sign
        return total

    result = poly()
    if peek()[0] != 0:
        raise ParseError(f"unexpected {peek()[1]!r}", peek()[2])
    return result


def _mono_text(mono):
    parts = []
    for k, e in _exponents(mono):
        parts.append(VARS[k] if e == 1 else f"{VARS[k]}^{e}")
    return "*".join(parts)


def format_poly(p):
    """Canonical text, terms sorted by descending degree then variable order."""
    if p.is_zero():
        return "0"
    out = []
    for mono in sorted(p.terms, key=_sort_key):
        c = p.terms[mono]
        mtext = _mono_text(mono)
        if isinstance(c, Fraction) or (isinstance(c, Cyclo12) and c.is_rational()):
            c = Fraction(c.rational() if isinstance(c, Cyclo12) else c)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            ctext = str(a)
            if mtext:
                body = mtext if a == 1 else f"{ctext}*{mtext}"
            else:
                body = ctext
        else:
            sign = "+"
            ctext = f"[{format_elem(c)}]"
            body = f"{ctext}*{mtext}" if mtext else ctext
        if not out:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
