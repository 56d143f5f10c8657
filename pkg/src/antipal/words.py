"""Finite binary words and the basic (anti)morphic operations on them.

Words are plain Python strings over the alphabet {0,1}; the empty string
is the empty word.  Everything here is a pure function on immutable
values, so results can be shared freely across threads and processes.

The two involutive antimorphisms are the mirror map (``reverse``) and the
exchange map (``exchange``), which complements every letter and reverses
the order.  A word fixed by ``reverse`` is a palindrome, a word fixed by
``exchange`` is an antipalindrome.  Antipalindromes have even length and
the empty word is the only word that is both.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyWordError, NotInThetaImage, ParseError

Word = str

_COMPLEMENT = str.maketrans("01", "10")
_THETA = str.maketrans({"0": "01", "1": "10"})


def check_word(w: str) -> Word:
    """Validate that ``w`` only uses letters 0 and 1 and return it."""
    if w.strip("01"):
        bad = min(i for i, ch in enumerate(w) if ch not in "01")
        raise ParseError(f"invalid letter {w[bad]!r} in word", position=bad)
    return w


def parse_word(text: str) -> Word:
    """Parse the textual word format: a {0,1}-string, with '' or 'eps' for the empty word."""
    text = "".join(text.split())
    if text in ("", "eps"):
        return ""
    return check_word(text)


def complement(w: Word) -> Word:
    """Flip every letter in place (0 <-> 1), keeping the order."""
    return w.translate(_COMPLEMENT)


def reverse(w: Word) -> Word:
    """Mirror image of ``w``."""
    return w[::-1]


def exchange(w: Word) -> Word:
    """Exchange map: complement of the mirror image.  An involution."""
    return w.translate(_COMPLEMENT)[::-1]


def is_palindrome(w: Word) -> bool:
    return w == w[::-1]


def is_antipalindrome(w: Word) -> bool:
    return w == exchange(w)


def theta_apply(w: Word) -> Word:
    """Apply the doubling morphism 0 -> 01, 1 -> 10 letter by letter."""
    return w.translate(_THETA)


def theta_decode(w: Word) -> Word:
    """Exact inverse of ``theta_apply`` on its image.

    Reads non-overlapping pairs 01 -> 0 and 10 -> 1.  Raises
    ``NotInThetaImage`` if the length is odd or some pair is 00/11.
    """
    # Every image block starts with the encoded letter, so the candidate
    # preimage is the subsequence of even positions.
    candidate = w[0::2]
    if theta_apply(candidate) != w:
        raise NotInThetaImage(f"{w!r} is not an image under 0->01, 1->10")
    return candidate


@dataclass(frozen=True)
class ThetaFactorization:
    """A decomposition ``x + theta_apply(z) + y`` with both borders of length <= 1."""

    x: Word
    z: Word
    y: Word

    def reassemble(self) -> Word:
        return self.x + theta_apply(self.z) + self.y


def theta_factorize(v: Word) -> tuple[ThetaFactorization, ...]:
    """All decompositions ``v = x + theta_apply(z) + y`` with ``|x|, |y| <= 1``.

    Returns every valid boundary choice (at most four).  Whenever ``v``
    contains 00 or 11 the result has at most one element; existence is
    only guaranteed for factors of the fixed points this is used on.
    """
    found = []
    n = len(v)
    for xl in (0, 1):
        for yl in (0, 1):
            if xl + yl > n:
                continue
            mid = v[xl : n - yl]
            if len(mid) % 2:
                continue
            candidate = mid[0::2]
            if theta_apply(candidate) == mid:
                found.append(ThetaFactorization(v[:xl], candidate, v[n - yl :] if yl else ""))
    return tuple(found)


def smallest_period(w: Word) -> int:
    """Smallest p >= 1 with w[i] == w[i+p] for all valid i (border construction, linear time)."""
    if not w:
        raise EmptyWordError("the empty word has no period")
    n = len(w)
    border = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = border[k - 1]
        if w[i] == w[k]:
            k += 1
        border[i] = k
    return n - border[-1]


def primitive_root(w: Word) -> tuple[Word, int]:
    """The primitive root and maximal exponent: root**exponent == w."""
    if not w:
        raise EmptyWordError("the empty word has no primitive root")
    p = smallest_period(w)
    if len(w) % p == 0:
        return w[:p], len(w) // p
    return w, 1


def s_map(w: Word) -> Word:
    """Letterwise difference map: output letter i is (w[i] + w[i+1]) mod 2; length shrinks by one."""
    if not w:
        raise EmptyWordError("the difference map needs a nonempty word")
    return "".join("1" if a != b else "0" for a, b in zip(w, w[1:]))


def longest_antipalindrome(w: Word) -> int:
    """Length of the longest antipalindromic factor of ``w`` (0 if none).

    An even factor is an antipalindrome exactly when the letterwise
    difference word over it is an odd palindrome with central letter 1,
    so a single Manacher pass over the difference word suffices.  Linear
    time, which keeps prefix scans at 1e5+ letters cheap.
    """
    m = len(w) - 1
    if m < 1:
        return 0
    d = s_map(w)
    # radius[i] = r means d[i-r .. i+r] is a palindrome, r maximal.
    radius = [0] * m
    center = right = 0
    best = 0
    for i in range(m):
        r = min(radius[2 * center - i], right - i) if i < right else 0
        while i - r - 1 >= 0 and i + r + 1 < m and d[i - r - 1] == d[i + r + 1]:
            r += 1
        radius[i] = r
        if i + r > right:
            center, right = i, i + r
        if d[i] == "1" and r + 1 > best:
            best = r + 1
    return 2 * best
