"""Binary morphisms: application, conjugation, fixed points, frequencies.

A morphism is the ordered pair of images of the letters 0 and 1.  At
least one image must be nonempty.  Values are immutable; every operation
returns new objects, so morphisms can be shared across worker processes
without synchronization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import isqrt, sqrt

from .errors import (
    ConsistencyError,
    NotAConjugacyWord,
    NotPrimitive,
    NotProlongable,
    ParseError,
)
from .words import Word, check_word, parse_word, primitive_root

IncidenceMatrix = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class Morphism:
    image0: Word
    image1: Word

    def __post_init__(self):
        check_word(self.image0)
        check_word(self.image1)
        if not self.image0 and not self.image1:
            raise ParseError("at least one image must be nonempty")

    def image(self, letter: str) -> Word:
        return self.image0 if letter == "0" else self.image1

    @cached_property
    def _table(self):
        return str.maketrans({"0": self.image0, "1": self.image1})

    def __str__(self) -> str:
        return format_morphism(self)


def format_morphism(m: Morphism) -> str:
    return f"0->{m.image0},1->{m.image1}"


def parse_morphism(text: str) -> Morphism:
    """Parse '0->IMAGE0,1->IMAGE1'; whitespace is ignored, 'eps' or '' mean the empty image."""
    squeezed = "".join(text.split())
    if not squeezed.startswith("0->"):
        raise ParseError("expected '0->'", position=0)
    comma = squeezed.find(",", 3)
    if comma < 0:
        raise ParseError("expected ',' separating the two images", position=len(squeezed))
    if not squeezed.startswith("1->", comma + 1):
        raise ParseError("expected '1->'", position=comma + 1)
    image0 = parse_word(squeezed[3:comma])
    image1 = parse_word(squeezed[comma + 4 :])
    return Morphism(image0, image1)


def apply(m: Morphism, w: Word) -> Word:
    """Image of w: the concatenation of the letter images."""
    return w.translate(m._table)


def compose(m1: Morphism, m2: Morphism) -> Morphism:
    """The morphism sending a to m1(m2(a))."""
    return Morphism(apply(m1, m2.image0), apply(m1, m2.image1))


def square(m: Morphism) -> Morphism:
    return compose(m, m)


def incidence(m: Morphism) -> IncidenceMatrix:
    """Row a, column b: occurrences of letter a in the image of b."""
    return (
        (m.image0.count("0"), m.image1.count("0")),
        (m.image0.count("1"), m.image1.count("1")),
    )


def is_uniform(m: Morphism) -> bool:
    return len(m.image0) == len(m.image1)


def is_primitive(m: Morphism) -> bool:
    """Entrywise positivity of the squared incidence matrix (binary Wielandt exponent)."""
    (a, b), (c, d) = incidence(m)
    sq = (a * a + b * c, a * b + b * d, c * a + d * c, c * b + d * d)
    return all(entry > 0 for entry in sq)


def _immortal_letters(m: Morphism) -> set[str]:
    """Letters whose iterated images never die out."""
    mortal: set[str] = set()
    changed = True
    while changed:
        changed = False
        for letter in "01":
            if letter not in mortal and all(ch in mortal for ch in m.image(letter)):
                mortal.add(letter)
                changed = True
    return set("01") - mortal


def prolongable_letters(m: Morphism) -> frozenset[str]:
    """Letters a with image a·w, w nonempty, whose iterates grow without bound."""
    immortal = _immortal_letters(m)
    out = set()
    for letter in "01":
        img = m.image(letter)
        if len(img) >= 2 and img[0] == letter and any(ch in immortal for ch in img[1:]):
            out.add(letter)
    return frozenset(out)


def fixed_point_prefix(m: Morphism, letter: str, n: int) -> Word:
    """Length-n prefix of the fixed point starting with a prolongable letter.

    Built as letter + w + m(w) + m(m(w)) + ... with w the image tail, so
    total work stays linear in n even when the images grow slowly.
    """
    if letter not in prolongable_letters(m):
        raise NotProlongable(f"{format_morphism(m)} is not prolongable on {letter}")
    if n <= 0:
        return ""
    pieces = [letter]
    total = 1
    block = m.image(letter)[1:]
    while total < n:
        pieces.append(block)
        total += len(block)
        if total >= n:
            break
        block = apply(m, block)
    return "".join(pieces)[:n]


@dataclass(frozen=True)
class ConjugacyChain:
    """The finite chain of conjugates, leftmost first, rightmost last.

    ``qs[i]`` is the conjugacy word of ``chain[i]`` against the leftmost
    element: qs[i] + leftmost(w) == chain[i](w) + qs[i] for every w, and
    ``q_full == qs[-1]`` links the two extremes.  For a cyclic morphism
    the chain is the full rotation cycle starting at the queried
    morphism, the extremes are meaningless, and ``q_full`` is the
    primitive common root of the images (the period of the unique fixed
    point).
    """

    chain: tuple[Morphism, ...]
    qs: tuple[Word, ...]
    q_full: Word
    cyclic: bool

    @property
    def leftmost(self) -> Morphism:
        return self.chain[0]

    @property
    def rightmost(self) -> Morphism:
        return self.chain[-1]


def _shared_first(m: Morphism) -> str | None:
    if m.image0 and m.image1 and m.image0[0] == m.image1[0]:
        return m.image0[0]
    return None


def _shared_last(m: Morphism) -> str | None:
    if m.image0 and m.image1 and m.image0[-1] == m.image1[-1]:
        return m.image0[-1]
    return None


def _roll_forward(m: Morphism) -> Morphism:
    c = m.image0[0]
    return Morphism(m.image0[1:] + c, m.image1[1:] + c)


def _roll_backward(m: Morphism) -> Morphism:
    d = m.image0[-1]
    return Morphism(d + m.image0[:-1], d + m.image1[:-1])


def conjugacy_chain(m: Morphism) -> ConjugacyChain:
    """Roll the images both ways to the extreme conjugates.

    Moving the shared first letter of both images to their ends yields a
    left conjugate; iterating reaches the leftmost one, whose images
    start with distinct letters.  Walking back from there with the shared
    last letter produces the whole chain and accumulates the conjugacy
    words.  Returning to the start during the forward walk means the
    images are powers of one root and the morphism is cyclic.
    """
    limit = len(m.image0) * len(m.image1) + 1
    cur = m
    cycle = [m]
    for _ in range(limit + 1):
        if _shared_first(cur) is None:
            break
        cur = _roll_forward(cur)
        if cur == m:
            root, _ = primitive_root(m.image0 or m.image1)
            return ConjugacyChain(tuple(cycle), (), root, True)
        cycle.append(cur)
    else:
        raise ConsistencyError("rotation walk did not terminate")

    leftmost = cur
    chain = [leftmost]
    q_letters: list[str] = []
    qs = [""]
    for _ in range(limit + 1):
        d = _shared_last(chain[-1])
        if d is None:
            break
        chain.append(_roll_backward(chain[-1]))
        q_letters.append(d)
        qs.append("".join(reversed(q_letters)))
    else:
        raise ConsistencyError("rotation walk did not terminate")
    return ConjugacyChain(tuple(chain), tuple(qs), qs[-1], False)


def conjugate_by(m: Morphism, q: Word) -> Morphism:
    """The left conjugate of m by q: the morphism psi with q·psi(w) == m(w)·q."""
    images = []
    for letter in "01":
        shifted = m.image(letter) + q
        if not shifted.startswith(q):
            raise NotAConjugacyWord(f"{q!r} is not a conjugacy word for {format_morphism(m)}")
        images.append(shifted[len(q) :])
    return Morphism(images[0], images[1])


@dataclass(frozen=True)
class FrequencyVector:
    """Letter frequencies of the fixed point; exact fractions when the
    dominant eigenvalue is rational, floats (1e-12 internal tolerance)
    otherwise."""

    rho0: Fraction | float
    rho1: Fraction | float

    def as_floats(self) -> tuple[float, float]:
        return float(self.rho0), float(self.rho1)


def letter_frequencies(m: Morphism) -> FrequencyVector:
    """Normalized dominant eigenvector of the incidence matrix (2x2 closed form)."""
    if not is_primitive(m):
        raise NotPrimitive(f"{format_morphism(m)} is not primitive")
    (a, b), (c, d) = incidence(m)
    disc = (a - d) * (a - d) + 4 * b * c
    s = isqrt(disc)
    if s * s == disc:
        lam = Fraction(a + d + s, 2)
        v0: Fraction | float = Fraction(b)
        v1 = lam - a
    else:
        lam = (a + d + sqrt(disc)) / 2.0
        v0 = float(b)
        v1 = lam - a
    total = v0 + v1
    return FrequencyVector(v0 / total, v1 / total)
