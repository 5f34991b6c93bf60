"""Words in the knot group presentations and the triangle group, and representations.

Three alphabets are supported:

* ``ST``: two meridians with ``S T⁻¹ S⁻¹ T S = T S T⁻¹ S⁻¹ T``,
* ``TAB``: the fibered form ``t a t⁻¹ = a b``, ``t b t⁻¹ = b a b``,
* ``KL``: the triangle group ``k³ = l³ = (kl)⁴ = 1``.
"""

from __future__ import annotations

from .mat3 import identity

__all__ = [
    "ALPHABETS",
    "RelationError",
    "Representation",
    "Word",
    "apply_automorphism",
    "check_relations",
    "convert",
    "dehn_phi",
    "failing_relations",
    "longitude",
    "meridian",
    "word",
]

ALPHABETS = {"ST": ("S", "T"), "TAB": ("t", "a", "b"), "KL": ("k", "l")}
_LETTER_ALPHABET = {g: name for name, gens in ALPHABETS.items() for g in gens}


class RelationError(ValueError):
    """A representation violates a defining relation."""


class Word:
    """Freely reduced word; ``letters`` is a tuple of ``(generator, ±1)``."""

    __slots__ = ("alphabet", "letters")

    def __init__(self, alphabet, letters=()):
        if alphabet not in ALPHABETS:
            raise ValueError(f"unknown alphabet {alphabet!r}")
        gens = ALPHABETS[alphabet]
        out = []
        for g, e in letters:
            if g not in gens or e not in (1, -1):
                raise ValueError(f"bad letter {g}^{e} for alphabet {alphabet}")
            if out and out[-1][0] == g and out[-1][1] == -e:
                out.pop()
            else:
                out.append((g, e))
        self.alphabet = alphabet
        self.letters = tuple(out)

    @classmethod
    def parse(cls, text, alphabet=None):
        """Parse ``T.S'`` style text; the alphabet is inferred when omitted."""
        text = text.strip()
        letters = []
        if text and text not in ("1", "e"):
            for part in text.split("."):
                part = part.strip()
                if not part:
                    raise ValueError(f"empty letter in {text!r}")
                g = part[0]
                rest = part[1:]
                if rest not in ("", "'"):
                    raise ValueError(f"bad letter {part!r}")
                letters.append((g, -1 if rest else 1))
        if alphabet is None:
            found = {_LETTER_ALPHABET.get(g) for g, _ in letters}
            if None in found or len(found) > 1:
                raise ValueError(f"cannot infer alphabet of {text!r}")
            alphabet = found.pop() if found else "ST"
        return cls(alphabet, letters)

    def __mul__(self, other):
        if self.alphabet != other.alphabet:
            raise ValueError("words over different alphabets")
        return Word(self.alphabet, self.letters + other.letters)

    def inverse(self):
        return Word(self.alphabet, [(g, -e) for g, e in reversed(self.letters)])

    def __pow__(self, n):
        base = self if n >= 0 else self.inverse()
        out = Word(self.alphabet)
        for _ in range(abs(n)):
            out = out * base
        return out

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return (isinstance(other, Word) and self.alphabet == other.alphabet
                and self.letters == other.letters)

    def __hash__(self):
        return hash((self.alphabet, self.letters))

    def __str__(self):
        if not self.letters:
            return "1"
        return ".".join(g + ("'" if e < 0 else "") for g, e in self.letters)

    def __repr__(self):
        return f"Word({self.alphabet}, {self})"

    def substitute(self, images, alphabet):
        """Image under the homomorphism ``generator ↦ images[generator]``."""
        out = Word(alphabet)
        for g, e in self.letters:
            img = images[g]
            out = out * (img if e > 0 else img.inverse())
        return out


def word(text, alphabet=None):
    return Word.parse(text, alphabet)


_ST_TO_TAB = {"S": "t", "T": "a'.t.a"}
_TAB_TO_ST = {"t": "S", "a": "T'.S.T.S'", "b": "T.S'"}


def convert(w, target):
    """Rewrite a word between the ``ST`` and ``TAB`` alphabets."""
    if w.alphabet == target:
        return w
    if "KL" in (w.alphabet, target):
        raise ValueError("conversion is defined only between ST and TAB")
    table = _ST_TO_TAB if target == "TAB" else _TAB_TO_ST
    images = {g: Word.parse(t, target) for g, t in table.items()}
    return w.substitute(images, target)


def relations(alphabet):
    """Named relator pairs ``(name, lhs, rhs)`` of an alphabet."""
    if alphabet == "ST":
        return [("S.T'.S'.T.S = T.S.T'.S'.T", word("S.T'.S'.T.S"), word("T.S.T'.S'.T"))]
    if alphabet == "TAB":
        return [
            ("t.a.t' = a.b", word("t.a.t'"), word("a.b")),
            ("t.b.t' = b.a.b", word("t.b.t'"), word("b.a.b")),
        ]
    one = Word("KL")
    return [
        ("k^3 = 1", word("k.k.k"), one),
        ("l^3 = 1", word("l.l.l"), one),
        ("(k.l)^4 = 1", word("k.l") ** 4, one),
    ]


class Representation:
    """Assignment of invertible matrices to the generators of an alphabet."""

    def __init__(self, alphabet, gens):
        if alphabet not in ALPHABETS:
            raise ValueError(f"unknown alphabet {alphabet!r}")
        missing = set(ALPHABETS[alphabet]) - set(gens)
        if missing:
            raise ValueError(f"missing generators {sorted(missing)}")
        self.alphabet = alphabet
        self.gens = {g: gens[g] for g in ALPHABETS[alphabet]}
        self._inv = {}

    @property
    def size(self):
        return next(iter(self.gens.values())).n

    def inverse_of(self, g):
        if g not in self._inv:
            self._inv[g] = self.gens[g].inv()
        return self._inv[g]

    def __call__(self, w):
        """Matrix of a word; words in the other knot alphabet are converted."""
        if isinstance(w, str):
            w = Word.parse(w)
        if w.alphabet != self.alphabet:
            w = convert(w, self.alphabet)
        first = next(iter(self.gens.values()))
        result = identity(first.n, first[0, 0])
        for g, e in w.letters:
            result = result @ (self.gens[g] if e > 0 else self.inverse_of(g))
        return result

    def pullback(self, images, alphabet):
        """Representation ``ρ∘ψ`` for a homomorphism given on generators."""
        return Representation(alphabet, {g: self(images[g]) for g in ALPHABETS[alphabet]})


def failing_relations(rep):
    return [name for name, lhs, rhs in relations(rep.alphabet) if rep(lhs) != rep(rhs)]


def check_relations(rep):
    """True iff every defining relation of the representation's alphabet holds."""
    return not failing_relations(rep)


_PHI = {"S": "k.l.k", "T": "k.l.k.l.k"}


def dehn_phi(w):
    """Image of a knot group word in the triangle group."""
    w = convert(w, "ST")
    return w.substitute({g: Word.parse(t, "KL") for g, t in _PHI.items()}, "KL")


def dehn_phi_images():
    return {g: Word.parse(t, "KL") for g, t in _PHI.items()}


_AUTOMORPHISMS = {
    "f": {"S": "T'", "T": "S'"},
    "h": {"S": "S.T'.S'", "T": "T.S'.T'"},
}


def automorphism_images(name):
    try:
        table = _AUTOMORPHISMS[name]
    except KeyError:
        raise ValueError(f"unknown automorphism {name!r}") from None
    return {g: Word.parse(t, "ST") for g, t in table.items()}


def apply_automorphism(name, w):
    """Image of ``w`` under ``f`` or ``h``; the result keeps ``w``'s alphabet."""
    image = convert(w, "ST").substitute(automorphism_images(name), "ST")
    return convert(image, w.alphabet)


def meridian():
    return word("S")


def longitude():
    """The commutator ``[a, b] = a b a⁻¹ b⁻¹`` written in ``S, T``."""
    return word("T'.S.T.S'.S'.T.S.T'")
