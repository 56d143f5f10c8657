"""Factor language of a fixed-point prefix.

The index is built over the length-N prefix of a fixed point.  Because a
prefix only approximates the infinite language, every per-length factor
set is certified by recomputing it from the half prefix: a length is
trusted only when both computations agree (``stable_up_to``).  Queries
beyond the certified range raise instead of silently lying.

Per-length counting works on rolling hashes (two 31-bit prime moduli,
numpy-vectorized), which keeps full censuses over thousands of lengths
affordable; collisions across both moduli are negligible at these sizes.
The special-factor operations work on exact string sets, materialized
lazily for the small lengths they need.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadBounds,
    CertificationExceeded,
    CyclicMorphism,
    PreconditionViolated,
    UnstableLength,
)
from .morphisms import Morphism, apply, conjugacy_chain, fixed_point_prefix
from .words import Word, exchange, is_antipalindrome, longest_antipalindrome

_MODS = ((2_147_483_647, 1_000_003), (2_147_483_629, 998_244_353))


class _HashedText:
    """Prefix hashes of one string under both moduli."""

    def __init__(self, s: str, powers, inverse_powers):
        digits = np.frombuffer(s.encode("ascii"), dtype=np.uint8).astype(np.int64) - ord("0")
        self.length = len(s)
        self.prefix = []
        self.inverse_powers = inverse_powers
        for (mod, _), pw in zip(_MODS, powers):
            q = np.zeros(self.length + 1, dtype=np.int64)
            np.cumsum(digits * pw[: self.length], out=q[1:])
            q[1:] %= mod
            self.prefix.append(q)

    def window_keys(self, n: int) -> np.ndarray:
        """Combined hash of every length-n window, indexed by start."""
        count = self.length - n + 1
        keys = None
        for (mod, _), q, inv in zip(_MODS, self.prefix, self.inverse_powers):
            h = (q[n : n + count] - q[:count]) % mod
            h = h * inv[:count] % mod
            keys = h if keys is None else keys * mod + h
        return keys


def _power_tables(n: int):
    powers, inverse_powers = [], []
    for mod, base in _MODS:
        pw = np.empty(n + 1, dtype=np.int64)
        inv = np.empty(n + 1, dtype=np.int64)
        base_inv = pow(base, mod - 2, mod)
        x = y = 1
        for j in range(n + 1):
            pw[j] = x
            inv[j] = y
            x = x * base % mod
            y = y * base_inv % mod
        powers.append(pw)
        inverse_powers.append(inv)
    return powers, inverse_powers


@dataclass(frozen=True)
class CensusRow:
    length: int
    factor_count: int
    palindrome_count: int
    antipalindrome_count: int
    certified: bool


class FactorIndex:
    """Factors of a fixed-point prefix, organized by length."""

    def __init__(self, morphism: Morphism, letter: str, prefix_len: int, n_max: int):
        if n_max < 1 or n_max > prefix_len // 4:
            raise BadBounds(f"need 1 <= n_max <= prefix_len // 4, got {n_max} / {prefix_len}")
        self.morphism = morphism
        self.letter = letter
        self.prefix_len = prefix_len
        self.n_max = n_max
        self.prefix = fixed_point_prefix(morphism, letter, prefix_len)
        powers, inverse_powers = _power_tables(prefix_len)
        self._fwd = _HashedText(self.prefix, powers, inverse_powers)
        self._rev = _HashedText(self.prefix[::-1], powers, inverse_powers)
        self._exch = _HashedText(exchange(self.prefix), powers, inverse_powers)
        self._sets: dict[int, frozenset[str]] = {0: frozenset({""})}
        self._stable_cache: dict[int, bool] = {}
        self.stable_up_to = self._certify()

    def _stable_at(self, n: int) -> bool:
        """Factor set of length n agrees between the half and full prefix."""
        if n not in self._stable_cache:
            keys = self._fwd.window_keys(n)
            half_count = self.prefix_len // 2 - n + 1
            self._stable_cache[n] = half_count >= 1 and bool(
                np.array_equal(np.unique(keys[:half_count]), np.unique(keys))
            )
        return self._stable_cache[n]

    def _certify(self) -> int:
        """Largest n with every length up to n stable.

        Stability is monotone apart from rare suffix-boundary effects, so
        the boundary is located by exponential plus binary search and the
        lengths below it are spot-checked on a geometric grid; any
        contradiction drops to the exact sequential scan.
        """
        if not self._stable_at(1):
            return 0
        lo = 1
        while lo < self.n_max:
            nxt = min(2 * lo, self.n_max)
            if self._stable_at(nxt):
                lo = nxt
            else:
                hi = nxt
                while hi - lo > 1:
                    mid = (lo + hi) // 2
                    if self._stable_at(mid):
                        lo = mid
                    else:
                        hi = mid
                break
        checkpoints = set()
        c = lo
        while c > 1:
            c = c * 3 // 4
            checkpoints.add(max(c, 1))
        if all(self._stable_at(c) for c in checkpoints):
            return lo
        stable = 0
        for n in range(1, self.n_max + 1):
            if not self._stable_at(n):
                break
            stable = n
        return stable

    def factors(self, n: int) -> frozenset[str]:
        """Exact set of length-n factors of the prefix (not certification-gated)."""
        if n < 0 or n > self.prefix_len:
            return frozenset()
        if n not in self._sets:
            u = self.prefix
            self._sets[n] = frozenset(u[i : i + n] for i in range(len(u) - n + 1))
        return self._sets[n]

    def _certified_sets(self):
        """Yield (n, factor set) for every certified length with one prefix scan.

        Every length-n factor is a prefix of a full-length window unless it
        only occurs in the tail, so the per-length sets come from trimming
        one pool of windows plus the few tail windows.
        """
        top = self.stable_up_to
        if top < 1:
            return
        u = self.prefix
        pool = {u[i : i + top] for i in range(len(u) - top + 1)}
        tail_start = max(0, len(u) - top + 1)
        for n in range(1, top + 1):
            fs = {w[:n] for w in pool}
            fs.update(u[j : j + n] for j in range(tail_start, len(u) - n + 1))
            yield n, frozenset(fs)

    def has_factor(self, w: Word) -> bool:
        return w in self.prefix

    def certified_factor(self, w: Word) -> bool:
        return len(w) <= self.stable_up_to and (w == "" or w in self.factors(len(w)))

    def _require_certified(self, n: int):
        if n > self.stable_up_to:
            raise UnstableLength(
                f"length {n} exceeds the certified range (stable up to {self.stable_up_to})"
            )

    def right_special(self, n: int) -> frozenset[str]:
        """Certified length-n factors extendable by both letters on the right."""
        self._require_certified(n + 1)
        longer = self.factors(n + 1)
        return frozenset(w for w in self.factors(n) if w + "0" in longer and w + "1" in longer)

    def left_special(self, n: int) -> frozenset[str]:
        self._require_certified(n + 1)
        longer = self.factors(n + 1)
        return frozenset(w for w in self.factors(n) if "0" + w in longer and "1" + w in longer)

    def bispecials(self) -> tuple[str, ...]:
        """All bispecial factors within the certified range, shortest first."""
        out = []
        prev = self.factors(0)
        for n, fs in self._certified_sets():
            out.extend(
                sorted(
                    w
                    for w in prev
                    if w + "0" in fs
                    and w + "1" in fs
                    and "0" + w in fs
                    and "1" + w in fs
                )
            )
            prev = fs
        return tuple(out)

    def census(self, lengths=None) -> tuple[CensusRow, ...]:
        """Distinct factor / palindrome / antipalindrome counts per length.

        ``lengths`` defaults to every length up to n_max; pass a sparser
        grid when n_max is large.
        """
        rows = []
        for n in lengths if lengths is not None else range(1, self.n_max + 1):
            if not 1 <= n <= self.n_max:
                raise BadBounds(f"census length {n} outside 1..{self.n_max}")
            keys = self._fwd.window_keys(n)
            count = keys.size
            mirror = self._rev.window_keys(n)[::-1]
            pal = int(np.unique(keys[keys == mirror]).size)
            if n % 2:
                anti = 0
            else:
                image = self._exch.window_keys(n)[::-1]
                anti = int(np.unique(keys[keys == image]).size)
            rows.append(
                CensusRow(
                    length=n,
                    factor_count=int(np.unique(keys).size),
                    palindrome_count=pal,
                    antipalindrome_count=anti,
                    certified=n <= self.stable_up_to,
                )
            )
        return tuple(rows)

    def e_closure_check(self) -> bool:
        """True iff the certified factor sets are closed under the exchange map."""
        for _, fs in self._certified_sets():
            if any(exchange(w) not in fs for w in fs):
                return False
        return True

    def antipal_center(self, limit: int) -> str:
        """Longest w (within limit) with E(w)+w a certified factor, grown
        letter by letter with backtracking."""
        cap = min(limit, self.stable_up_to // 2)
        best = ""

        def grow(w: str):
            nonlocal best
            if len(w) > len(best):
                best = w
            if len(w) >= cap:
                return
            for letter in "01":
                cand = w + letter
                if exchange(cand) + cand in self.factors(2 * len(cand)):
                    grow(cand)

        grow("")
        return best

    def extend_to_bispecial(self, f: Word) -> str:
        """Extend rightward by forced letters to a right special factor,
        then leftward to a left special one."""
        if not self.certified_factor(f):
            raise PreconditionViolated(f"{f!r} is not a certified factor")

        def step(w, attach):
            if len(w) + 1 > self.stable_up_to:
                raise CertificationExceeded(
                    f"ran into the certification boundary at length {len(w)}"
                )
            longer = self.factors(len(w) + 1)
            exts = [a for a in "01" if attach(w, a) in longer]
            return exts

        w = f
        while True:
            exts = step(w, lambda w, a: w + a)
            if len(exts) == 2:
                break
            if not exts:
                raise CertificationExceeded(f"{w!r} has no certified right extension")
            w = w + exts[0]
        while True:
            exts = step(w, lambda w, a: a + w)
            if len(exts) == 2:
                break
            if not exts:
                raise CertificationExceeded(f"{w!r} has no certified left extension")
            w = exts[0] + w
        return w


def build_index(
    morphism: Morphism, letter: str, prefix_len: int = 100_000, n_max: int = 64
) -> FactorIndex:
    return FactorIndex(morphism, letter, prefix_len, n_max)


def bispecial_successor(m: Morphism, w: Word) -> Word:
    """Image of a bispecial factor under the rightmost conjugate, followed
    by the conjugacy word; maps bispecial factors to bispecial factors."""
    chain = conjugacy_chain(m)
    if chain.cyclic:
        raise CyclicMorphism(f"{m} is cyclic")
    return apply(chain.rightmost, w) + chain.q_full


@dataclass(frozen=True)
class BispecialOrbit:
    seed: Word
    steps: tuple[Word, ...]


def bispecial_orbit(m: Morphism, seed: Word, count: int) -> BispecialOrbit:
    steps = []
    w = seed
    for _ in range(count):
        w = bispecial_successor(m, w)
        steps.append(w)
    return BispecialOrbit(seed, tuple(steps))


def q_antipalindrome_check(m: Morphism, idx: FactorIndex) -> bool | None:
    """Consistency check: when the prefix keeps producing longer
    antipalindromes, the conjugacy word between the extreme conjugates
    must itself be an antipalindrome.

    Returns None when the evidence does not grow (check not applicable),
    otherwise the verdict of the antipalindrome test on the conjugacy
    word.
    """
    chain = conjugacy_chain(m)
    if chain.cyclic:
        raise CyclicMorphism(f"{m} is cyclic")
    quarter = idx.prefix[: idx.prefix_len // 4]
    if longest_antipalindrome(idx.prefix) <= longest_antipalindrome(quarter):
        return None
    return is_antipalindrome(chain.q_full)
