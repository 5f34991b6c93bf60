"""Exact scalar arithmetic on the tower Q ⊂ Q(ζ12) ⊂ Q(ζ12)(√D).

Scalars are one of three kinds:

* ``Fraction`` (and plain ``int``) for rationals,
* :class:`Cyclo12` for the twelfth cyclotomic field, stored on the basis
  ``1, g, g², g³`` with ``g⁴ = g² − 1``,
* :class:`QuadExt` for ``p + q·s`` with ``s² = D`` and ``D`` a non-square of
  ``Q(ζ12)``.

Mixed arithmetic promotes to the larger kind.  Equality across kinds compares
values, and hashes agree for equal values.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

import mpmath

__all__ = [
    "OMEGA",
    "Cyclo12",
    "Fraction",
    "G",
    "I",
    "ParseError",
    "QuadExt",
    "Rational",
    "SqrtContext",
    "as_elem",
    "common_modulus",
    "cube_roots",
    "field_modulus",
    "format_elem",
    "is_zero",
    "parse_elem",
    "roots_in_field",
    "sqrt_adjoin",
    "sqrt_elem",
    "to_complex",
]

Rational = Fraction


class ParseError(ValueError):
    """Raised for malformed element text; ``pos`` is the offending offset."""

    def __init__(self, message, pos=None):
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)
        self.pos = pos


def _rat(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


class Cyclo12:
    """Element ``(c0 + c1 g + c2 g² + c3 g³)/d`` of Q(ζ12).

    Numerators are integers and ``d`` is a positive integer coprime to all
    of them, so the representation is canonical.
    """

    __slots__ = ("_hash", "c", "d")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        coeffs = [_rat(x) for x in (c0, c1, c2, c3)]
        d = 1
        for x in coeffs:
            d = d * x.denominator // gcd(d, x.denominator)
        self._set(tuple(int(x * d) for x in coeffs), d)

    def _set(self, c, d):
        g = d
        for x in c:
            g = gcd(g, x)
        if g != 1:
            c = tuple(x // g for x in c)
            d //= g
        self.c = c
        self.d = d
        self._hash = None

    @classmethod
    def _raw(cls, c, d):
        obj = object.__new__(cls)
        if d < 0:
            c = tuple(-x for x in c)
            d = -d
        obj._set(c, d)
        return obj

    @classmethod
    def from_basis(cls, a, b, c, e):
        """Build ``a + b·i + c·ϖ + e·ϖi`` (i = g³, ϖ = g² − 1, ϖi = −g)."""
        a, b, c, e = (_rat(x) for x in (a, b, c, e))
        return cls(a - c, -e, c, b)

    # -- coordinates -----------------------------------------------------
    def coeffs(self):
        """Rational coordinates on the basis ``1, g, g², g³``."""
        return tuple(Fraction(x, self.d) for x in self.c)

    def basis_coeffs(self):
        """Rational coordinates on the printing basis ``1, i, ϖ, ϖi``."""
        c0, c1, c2, c3 = self.coeffs()
        return (c0 + c2, c3, c2, -c1)

    def is_rational(self):
        return self.c[1] == 0 and self.c[2] == 0 and self.c[3] == 0

    def rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.c[0], self.d)

    def __bool__(self):
        return any(self.c)

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, Cyclo12):
            return other
        if isinstance(other, int):
            return Cyclo12._raw((other, 0, 0, 0), 1)
        if isinstance(other, Fraction):
            return Cyclo12._raw((other.numerator, 0, 0, 0), other.denominator)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d1, d2 = self.d, o.d
        return Cyclo12._raw(tuple(a * d2 + b * d1 for a, b in zip(self.c, o.c)), d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo12._raw(tuple(-x for x in self.c), self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d1, d2 = self.d, o.d
        return Cyclo12._raw(tuple(a * d2 - b * d1 for a, b in zip(self.c, o.c)), d1 * d2)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a0, a1, a2, a3 = self.c
        b0, b1, b2, b3 = o.c
        p0 = a0 * b0
        p1 = a0 * b1 + a1 * b0
        p2 = a0 * b2 + a1 * b1 + a2 * b0
        p3 = a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
        p4 = a1 * b3 + a2 * b2 + a3 * b1
        p5 = a2 * b3 + a3 * b2
        p6 = a3 * b3
        # g⁴ = g² − 1, g⁵ = g³ − g, g⁶ = −1
        return Cyclo12._raw((p0 - p4 - p6, p1 - p5, p2 + p4, p3 + p5), self.d * o.d)

    __rmul__ = __mul__

    def galois(self, k):
        """Image under the automorphism ``g ↦ g^k`` (k ∈ {1, 5, 7, 11})."""
        if k == 1:
            return self
        g1, g2, g3 = _GALOIS_IMAGES[k]
        c0, c1, c2, c3 = self.c
        out = [c0 + c1 * g1[0] + c2 * g2[0] + c3 * g3[0],
               c1 * g1[1] + c2 * g2[1] + c3 * g3[1],
               c1 * g1[2] + c2 * g2[2] + c3 * g3[2],
               c1 * g1[3] + c2 * g2[3] + c3 * g3[3]]
        return Cyclo12._raw(tuple(out), self.d)

    def conjugate(self):
        """Complex conjugate (``g ↦ g^11``)."""
        return self.galois(11)

    def norm(self):
        """Field norm to Q."""
        n = self * self.galois(5) * self.galois(7) * self.galois(11)
        return n.rational()

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(ζ12)")
        rest = self.galois(5) * self.galois(7) * self.galois(11)
        n = (self * rest).rational()
        return rest * (1 / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational():
            if not o.c[0]:
                raise ZeroDivisionError("division by zero")
            return Cyclo12._raw(tuple(x * o.d for x in self.c), self.d * o.c[0])
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE_C
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Cyclo12):
            return self.c == other.c and self.d == other.d
        if isinstance(other, (int, Fraction)):
            o = Fraction(other)
            return (self.is_rational() and self.c[0] == o.numerator
                    and self.d == o.denominator)
        if isinstance(other, QuadExt):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.c[0], self.d))
            else:
                self._hash = hash((self.c, self.d))
        return self._hash

    def __repr__(self):
        return f"Cyclo12({format_elem(self)!r})"

    def __str__(self):
        return format_elem(self)

    def to_complex(self, k=1):
        z = mpmath.exp(2j * mpmath.pi * k / 12)
        total = mpmath.mpc(0)
        for j, x in enumerate(self.c):
            if x:
                total += mpmath.mpf(x) * z ** j
        return total / self.d


ONE_C = Cyclo12._raw((1, 0, 0, 0), 1)
G = Cyclo12._raw((0, 1, 0, 0), 1)
I = Cyclo12._raw((0, 0, 0, 1), 1)
OMEGA = Cyclo12._raw((-1, 0, 1, 0), 1)


def _power_images():
    images = {}
    for k in (5, 7, 11):
        gk = G ** k
        images[k] = tuple((gk ** j).c for j in (1, 2, 3))
    return images


_GALOIS_IMAGES = _power_images()


@lru_cache(maxsize=4096)
def _cyclo_sqrt_cached(x):
    return _sqrt_level(x, 2)


class QuadExt:
    """Element ``p + q·s`` with ``s² = D``; ``p, q, D`` live in Q(ζ12)."""

    __slots__ = ("D", "_hash", "p", "q")

    def __init__(self, p, q, D, check=True):
        self.p = _as_cyclo(p)
        self.q = _as_cyclo(q)
        self.D = _as_cyclo(D)
        self._hash = None
        if check:
            if not self.D:
                raise ValueError("modulus D must be nonzero")
            if _cyclo_sqrt_cached(self.D) is not None:
                raise ValueError(f"D = {self.D} is a perfect square in Q(ζ12)")

    @classmethod
    def _raw(cls, p, q, D):
        obj = object.__new__(cls)
        obj.p = p
        obj.q = q
        obj.D = D
        obj._hash = None
        return obj

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.D != self.D:
                raise ValueError(
                    f"incompatible square roots: s² = {self.D} vs s² = {other.D}")
            return other
        if isinstance(other, (int, Fraction, Cyclo12)):
            return QuadExt._raw(_as_cyclo(other), ZERO_C, self.D)
        return None

    def __bool__(self):
        return bool(self.p) or bool(self.q)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt._raw(self.p + o.p, self.q + o.q, self.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt._raw(-self.p, -self.q, self.D)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt._raw(self.p - o.p, self.q - o.q, self.D)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo12)):
            return QuadExt._raw(self.p * other, self.q * other, self.D)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.p * o.p + self.q * o.q * self.D
        q = self.p * o.q + self.q * o.p
        return QuadExt._raw(p, q, self.D)

    __rmul__ = __mul__

    def conj_s(self):
        """Image under ``s ↦ −s``."""
        return QuadExt._raw(self.p, -self.q, self.D)

    def inverse(self):
        n = self.p * self.p - self.q * self.q * self.D
        if not n:
            raise ZeroDivisionError("inverse of zero in quadratic extension")
        ninv = n.inverse()
        return QuadExt._raw(self.p * ninv, -self.q * ninv, self.D)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Cyclo12)):
            if not other:
                raise ZeroDivisionError("division by zero")
            inv = 1 / _as_cyclo(other)
            return QuadExt._raw(self.p * inv, self.q * inv, self.D)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExt._raw(ONE_C, ZERO_C, self.D)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if self.D != other.D:
                return (not self.q and not other.q and self.p == other.p)
            return self.p == other.p and self.q == other.q
        if isinstance(other, (int, Fraction, Cyclo12)):
            return not self.q and self.p == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.p) if not self.q else hash((self.p, self.q, self.D))
        return self._hash

    def is_base(self):
        return not self.q

    def __repr__(self):
        return f"QuadExt({format_elem(self)!r}, D={format_elem(self.D)!r})"

    def __str__(self):
        return format_elem(self)

    def to_complex(self, k=1, sign=1):
        root = mpmath.sqrt(self.D.to_complex(k))
        return self.p.to_complex(k) + sign * root * self.q.to_complex(k)


ZERO_C = Cyclo12._raw((0, 0, 0, 0), 1)


def _as_cyclo(x):
    if isinstance(x, Cyclo12):
        return x
    if isinstance(x, int):
        return Cyclo12._raw((x, 0, 0, 0), 1)
    if isinstance(x, Fraction):
        return Cyclo12._raw((x.numerator, 0, 0, 0), x.denominator)
    raise TypeError(f"cannot view {x!r} as an element of Q(ζ12)")


def as_elem(x):
    """Normalize ints to ``Fraction``; pass field elements through."""
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, (Fraction, Cyclo12, QuadExt)):
        return x
    raise TypeError(f"not a field element: {x!r}")


def is_zero(x):
    return not x


def field_modulus(x):
    """The ``D`` of a ``QuadExt`` element, else ``None``."""
    return x.D if isinstance(x, QuadExt) else None


def common_modulus(values):
    """The single modulus shared by the ``QuadExt`` values, or ``None``."""
    found = None
    for v in values:
        if isinstance(v, QuadExt):
            if found is None:
                found = v.D
            elif v.D != found:
                raise ValueError("values live in different quadratic extensions")
    return found


def to_complex(x, k=1, sign=1):
    """Complex embedding ``g ↦ e^{2πik/12}``, ``s ↦ sign·√D``."""
    if isinstance(x, QuadExt):
        return x.to_complex(k, sign)
    if isinstance(x, Cyclo12):
        return x.to_complex(k)
    return mpmath.mpc(mpmath.mpf(Fraction(x).numerator) / Fraction(x).denominator)


# ---------------------------------------------------------------------------
# square roots along the tower Q ⊂ Q(√−3) ⊂ Q(ζ12) ⊂ Q(ζ12)(√D)

def _sqrt_rational(x):
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


# Q(√−3) is spanned by 1, g² with r1 = 2g² − 1 satisfying r1² = −3.
_R1 = Cyclo12._raw((-1, 0, 2, 0), 1)


def _split_level(x, level):
    """Write ``x = u + v·r`` with ``u, v`` one level down."""
    if level == 1:
        c0, c1, c2, c3 = x.coeffs()
        # x = c0 + c2 g² = (c0 + c2/2) + (c2/2) r1
        return c0 + c2 / 2, c2 / 2
    c0, c1, c2, c3 = x.coeffs()
    # g = i(1 − g²), so x = (c0 + c2 g²) + i·((c1 + c3) − c1 g²)
    u = Cyclo12(c0, 0, c2, 0)
    v = Cyclo12(c1 + c3, 0, -c1, 0)
    return u, v


def _join_level(u, v, level):
    if level == 1:
        return _as_cyclo(u) + _R1 * v
    return _as_cyclo(u) + I * v


def _sqrt_sub(x, level):
    if level == 1:
        return _sqrt_rational(x)
    return _sqrt_level(x, level - 1)


def _generic_sqrt(u, v, e, sub_sqrt, join):
    """Square root of ``u + v r`` with ``r² = e`` given a square root below."""
    if not v:
        x = sub_sqrt(u)
        if x is not None:
            return join(x, 0)
        y = sub_sqrt(u / e)
        if y is not None:
            return join(0, y)
        return None
    n = sub_sqrt(u * u - e * v * v)
    if n is None:
        return None
    for cand in ((u + n) / 2, (u - n) / 2):
        x = sub_sqrt(cand)
        if x is not None and x:
            y = v / (2 * x)
            return join(x, y)
    return None


def _sqrt_level(x, level):
    """Square root of ``x`` inside level ``level`` (1 = Q(√−3), 2 = Q(ζ12))."""
    x = _as_cyclo(x)
    if level == 1 and (x.c[1] or x.c[3]):
        return None
    u, v = _split_level(x, level)
    e = -3 if level == 1 else -1
    root = _generic_sqrt(
        u, v, e,
        lambda t: _sqrt_sub(t, level),
        lambda a, b: _join_level(a, b, level),
    )
    if root is None:
        return None
    root = _as_cyclo(root)
    if root * root != x:
        return None
    return root


def sqrt_elem(x):
    """Exact square root of ``x`` in its own field, or ``None`` if none exists."""
    if isinstance(x, QuadExt):
        root = _generic_sqrt(x.p, x.q, x.D, _cyclo_sqrt_cached,
                             lambda a, b: QuadExt._raw(_as_cyclo(a), _as_cyclo(b), x.D))
        if root is None or root * root != x:
            return None
        return root
    if isinstance(x, Cyclo12):
        if x.is_rational():
            r = _sqrt_rational(x.rational())
            if r is not None:
                return r
        return _cyclo_sqrt_cached(x)
    x = Fraction(x)
    r = _sqrt_rational(x)
    if r is not None:
        return r
    return _cyclo_sqrt_cached(_as_cyclo(x))


class SqrtContext:
    """Result of adjoining ``√D``.

    ``s`` is the element playing the square root.  When ``D`` is already a
    square in Q(ζ12) the context is *degenerate* and ``s`` is that root.
    """

    def __init__(self, D):
        D = as_elem(D)
        if isinstance(D, QuadExt):
            if D.q:
                raise ValueError("only one quadratic layer is supported")
            D = D.p
        if not D:
            raise ValueError("cannot adjoin √0: the point is on the ramification locus")
        self.D = _as_cyclo(D)
        root = sqrt_elem(D)
        self.degenerate = root is not None
        if self.degenerate:
            self.s = root
        else:
            self.s = QuadExt._raw(ZERO_C, ONE_C, self.D)

    def root(self, sign=1):
        return self.s if sign > 0 else -self.s

    def elem(self, p, q=0):
        return as_elem(p) + as_elem(q) * self.s

    def __repr__(self):
        kind = "degenerate" if self.degenerate else "proper"
        return f"SqrtContext(D={format_elem(self.D)}, {kind}, s={format_elem(self.s)})"


def sqrt_adjoin(D):
    """Adjoin a square root of ``D``; see :class:`SqrtContext`."""
    return SqrtContext(D)


# ---------------------------------------------------------------------------
# printing

def _fmt_coef(c, sym):
    """Format ``c·sym`` as a signed term string (``sym`` may be empty)."""
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if not sym:
        body = str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
    elif a == 1:
        body = sym
    else:
        num = str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        body = f"{num}*{sym}"
    return sign, body


def _cyclo_terms(x, suffix=""):
    x = _as_cyclo(x)
    out = []
    for coef, sym in zip(x.basis_coeffs(), ("", "i", "w", "w*i")):
        if coef:
            full = sym + ("*" + suffix if sym and suffix else suffix)
            out.append(_fmt_coef(coef, full))
    return out


def format_elem(x):
    """Canonical text of a field element (see the element grammar)."""
    if isinstance(x, QuadExt):
        terms = _cyclo_terms(x.p) + _cyclo_terms(x.q, "s")
    else:
        terms = _cyclo_terms(as_elem(x))
    if not terms:
        return "0"
    pieces = []
    for n, (sign, body) in enumerate(terms):
        if n == 0:
            pieces.append(("-" if sign == "-" else "") + body)
        else:
            pieces.append(sign + body)
    return "".join(pieces)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([iws])|(\^)|(\*)|(/)|([+-]))")


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.start(m.lastindex) != _first_nonspace(text, pos):
            raise ParseError(f"unexpected character {text[_first_nonspace(text, pos)]!r}",
                             _first_nonspace(text, pos))
        start = m.start(m.lastindex)
        kinds = ("int", "sym", "^", "*", "/", "sign")
        tokens.append((kinds[m.lastindex - 1], m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


def _first_nonspace(text, pos):
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def parse_elem(text, D=None):
    """Parse element text; ``D`` is required when ``s`` occurs.

    Grammar: ``elem := term (('+'|'-') term)*``, ``term := factor ('*' factor)*``,
    ``factor := int ('/' posint)? | sym ('^' posint)?`` with ``sym`` one of
    ``i``, ``w`` (ϖ) and ``s`` (the adjoined root).  A leading sign is allowed.
    """
    tokens = _tokenize(text)
    ctx = None
    idx = 0

    def peek():
        return tokens[idx]

    def take(kind):
        nonlocal idx
        tok = tokens[idx]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind}, found {what}", tok[2])
        idx += 1
        return tok

    def symbol(name, pos):
        nonlocal ctx
        if name == "i":
            return I
        if name == "w":
            return OMEGA
        if D is None:
            raise ParseError("'s' used without a declared square root", pos)
        if ctx is None:
            ctx = SqrtContext(D)
            if ctx.degenerate:
                raise ParseError(f"D = {format_elem(ctx.D)} is a perfect square", pos)
        return ctx.s

    def factor():
        tok = peek()
        if tok[0] == "int":
            take("int")
            value = Fraction(int(tok[1]))
            if peek()[0] == "/":
                take("/")
                den = take("int")
                if int(den[1]) == 0:
                    raise ParseError("zero denominator", den[2])
                value = value / int(den[1])
            return value
        if tok[0] == "sym":
            take("sym")
            value = symbol(tok[1], tok[2])
            if peek()[0] == "^":
                take("^")
                exp = take("int")
                e = int(exp[1])
                if e <= 0:
                    raise ParseError("exponent must be positive", exp[2])
                value = value ** e
            return value
        what = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"expected a number or symbol, found {what}", tok[2])

    def term():
        value = factor()
        while peek()[0] == "*":
            take("*")
            value = value * factor()
        return value

    total = Fraction(0)
    sign = 1
    if peek()[0] == "sign":
        sign = -1 if take("sign")[1] == "-" else 1
    total = total + sign * term()
    while peek()[0] == "sign":
        sign = -1 if take("sign")[1] == "-" else 1
        total = total + sign * term()
    if peek()[0] != "end":
        tok = peek()
        raise ParseError(f"unexpected {tok[1]!r}", tok[2])
    return simplify(total)


def simplify(x):
    """Smallest kind holding ``x`` (QuadExt with q = 0 stays QuadExt)."""
    if isinstance(x, Cyclo12) and x.is_rational():
        return x.rational()
    if isinstance(x, int):
        return Fraction(x)
    return x


# ---------------------------------------------------------------------------
# roots in the field by complex embeddings and exact verification

def _basis_for(D):
    base = [Cyclo12._raw(tuple(int(j == k) for j in range(4)), 1) for k in range(4)]
    if D is None:
        return base, [(1, 1), (5, 1)]
    D = _as_cyclo(D)
    s = QuadExt._raw(ZERO_C, ONE_C, D)
    return ([QuadExt._raw(b, ZERO_C, D) for b in base] + [s * b for b in base],
            [(1, 1), (1, -1), (5, 1), (5, -1)])


def _digits(values):
    size = 1
    for v in values:
        parts = []
        if isinstance(v, QuadExt):
            parts = [v.p, v.q, v.D]
        elif isinstance(v, Cyclo12):
            parts = [v]
        else:
            f = Fraction(v)
            size = max(size, len(str(abs(f.numerator))) + len(str(f.denominator)))
            continue
        for p in parts:
            size = max(size, max(len(str(abs(c))) for c in p.c) + len(str(p.d)))
    return size


def _eval_upoly(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def roots_in_field(coeffs, D=None, max_degree=6):
    """Roots lying in Q(ζ12) (or Q(ζ12)(√D)) of ``Σ coeffs[k]·x^k``.

    Numeric roots in independent embeddings are matched, converted to
    rational coordinates and then checked exactly, so every returned root
    is exact.  A root with very large coordinates may be missed; callers
    treat an empty answer as "no root found".
    """
    coeffs = [as_elem(c) for c in coeffs]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    n = len(coeffs) - 1
    if n < 1:
        return []
    if n > max_degree:
        raise ValueError("degree too large for embedding root search")
    if D is None:
        D = common_modulus(coeffs)
    if n == 1:
        return [simplify(-coeffs[0] / coeffs[1])]
    basis, embeddings = _basis_for(D)
    digits = _digits(coeffs)
    dps = 40 + 3 * digits
    found = []
    with mpmath.workdps(dps):
        per_emb = []
        for k, sign in embeddings:
            cz = [to_complex(c, k, sign) for c in reversed(coeffs)]
            try:
                rts = mpmath.polyroots(cz, maxsteps=400, extraprec=4 * dps)
            except mpmath.libmp.NoConvergence:
                return []
            per_emb.append(rts)
        rows = []
        for k, sign in embeddings:
            vals = [to_complex(b, k, sign) for b in basis]
            rows.append([mpmath.re(v) for v in vals])
            rows.append([mpmath.im(v) for v in vals])
        try:
            Minv = mpmath.inverse(mpmath.matrix(rows))
        except ZeroDivisionError:
            return []
        inv_rows = [[Minv[i, j] for j in range(Minv.cols)] for i in range(Minv.rows)]
        bound = 10 ** (dps // 3)
        tol = mpmath.mpf(10) ** (-(3 * dps) // 4)
        for combo in _product(per_emb):
            rhs = []
            for r in combo:
                rhs.extend([mpmath.re(r), mpmath.im(r)])
            coords = _rational_coords(inv_rows, rhs, dps, bound, tol)
            if coords is None:
                continue
            cand = sum((c * b for c, b in zip(coords, basis)), Fraction(0))
            cand = simplify(cand) if not isinstance(cand, QuadExt) else cand
            if _eval_upoly(coeffs, cand) == 0 and cand not in found:
                found.append(cand)
    return found


def _rational_coords(inv_rows, rhs, dps, bound, tol):
    """Rational coordinates of a numeric solution, or ``None`` as soon as one
    coordinate is not near-rational (mismatched embeddings give such values)."""
    out = []
    for row in inv_rows:
        v = mpmath.fdot(row, rhs)
        c = Fraction(mpmath.nstr(v, dps - 5, min_fixed=-dps, max_fixed=dps)).limit_denominator(bound)
        if abs(v - mpmath.mpf(c.numerator) / c.denominator) > tol:
            return None
        out.append(c)
    return out


def _product(lists):
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for tail in _product(lists[1:]):
            yield (head,) + tail


def _is_int_cube(n):
    n = abs(n)
    r = round(n ** (1 / 3)) if n < 1 << 60 else 1 << (n.bit_length() // 3 + 1)
    while r ** 3 > n:  # Newton steps downward; exact on integers
        r = (2 * r + n // (r * r)) // 3
    while (r + 1) ** 3 <= n:
        r += 1
    return r ** 3 == n


def _absolute_norm(x):
    """Norm down to Q, from Q(ζ12) or from its quadratic extension."""
    if isinstance(x, QuadExt):
        return _as_cyclo(x.p * x.p - x.q * x.q * x.D).norm()
    return _as_cyclo(x).norm()


def cube_roots(x):
    """All cube roots of ``x`` in its own field (possibly empty)."""
    x = as_elem(x)
    if not x:
        return [Fraction(0)]
    # a cube has a rational cube as its absolute norm
    n = Fraction(_absolute_norm(x))
    if not (_is_int_cube(n.numerator) and _is_int_cube(n.denominator)):
        return []
    D = x.D if isinstance(x, QuadExt) else None
    return roots_in_field([-x, 0, 0, 1], D)
