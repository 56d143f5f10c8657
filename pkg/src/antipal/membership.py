"""Membership deciders for the four morphism classes, with witnesses.

The four shapes of interest, each witnessed by its defining
decomposition:

* class P:   both images are a common palindromic prefix followed by a
  palindrome.  Generating such a morphism (or a conjugate of one, or of
  its square) is exactly what makes a primitive binary fixed point
  palindromic.
* class EP:  the same shape with antipalindromes throughout.
* class A1:  uniform morphisms  0 -> head+suffix, 1 -> E(head)+suffix
  with an antipalindromic suffix; their fixed points contain unboundedly
  long antipalindromes.
* class A2:  both images are doubling-morphism codes built from one core
  word:  0 -> T(core (R(core) core)^k),  1 -> T((R(core) core)^h R(core))
  where T is 0->01,1->10.  Generally non-uniform, same conclusion.

``classify`` assembles the deciders over the whole conjugacy chain of a
morphism and of its square, settles the palindromic and antipalindromic
character of the fixed point where the theory is decisive, and falls
back to two-scale empirical evidence otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from .equations import decompose_two_antipalindromes, decompose_two_palindromes
from .errors import CyclicMorphism, NotInThetaImage, PreconditionViolated
from .morphisms import (
    ConjugacyChain,
    Morphism,
    apply,
    conjugacy_chain,
    fixed_point_prefix,
    format_morphism,
    is_primitive,
    is_uniform,
    prolongable_letters,
    square,
)
from .words import (
    Word,
    exchange,
    is_antipalindrome,
    is_palindrome,
    longest_antipalindrome,
    reverse,
    smallest_period,
    theta_apply,
    theta_decode,
)


@dataclass(frozen=True)
class PWitness:
    """image_a == prefix + tail_a with all three parts palindromes."""

    prefix: Word
    tail0: Word
    tail1: Word

    def build(self) -> Morphism:
        return Morphism(self.prefix + self.tail0, self.prefix + self.tail1)

    def is_valid(self) -> bool:
        return all(is_palindrome(w) for w in (self.prefix, self.tail0, self.tail1))

    def to_dict(self) -> dict:
        return {"kind": "p", "prefix": self.prefix, "tail0": self.tail0, "tail1": self.tail1}


@dataclass(frozen=True)
class EPWitness:
    """image_a == prefix + tail_a with all three parts antipalindromes."""

    prefix: Word
    tail0: Word
    tail1: Word

    def build(self) -> Morphism:
        return Morphism(self.prefix + self.tail0, self.prefix + self.tail1)

    def is_valid(self) -> bool:
        return all(is_antipalindrome(w) for w in (self.prefix, self.tail0, self.tail1))

    def to_dict(self) -> dict:
        return {"kind": "ep", "prefix": self.prefix, "tail0": self.tail0, "tail1": self.tail1}


@dataclass(frozen=True)
class A1Witness:
    """image0 == head + suffix, image1 == exchange(head) + suffix."""

    head: Word
    suffix: Word

    def build(self) -> Morphism:
        return Morphism(self.head + self.suffix, exchange(self.head) + self.suffix)

    def is_valid(self) -> bool:
        return bool(self.head) and is_antipalindrome(self.suffix)

    def to_dict(self) -> dict:
        return {"kind": "a1", "head": self.head, "suffix": self.suffix}


@dataclass(frozen=True)
class A2Witness:
    """Both images are doubling codes of core/reversed-core alternations."""

    core: Word
    k: int
    h: int

    def build(self) -> Morphism:
        r = reverse(self.core)
        return Morphism(
            theta_apply(self.core + (r + self.core) * self.k),
            theta_apply((r + self.core) * self.h + r),
        )

    def is_valid(self) -> bool:
        return bool(self.core) and self.k >= 0 and self.h >= 0

    def to_dict(self) -> dict:
        return {"kind": "a2", "core": self.core, "k": self.k, "h": self.h}


Witness = PWitness | EPWitness | A1Witness | A2Witness


def witness_from_dict(d: dict) -> Witness:
    kind = d.get("kind")
    if kind == "p":
        return PWitness(d["prefix"], d["tail0"], d["tail1"])
    if kind == "ep":
        return EPWitness(d["prefix"], d["tail0"], d["tail1"])
    if kind == "a1":
        return A1Witness(d["head"], d["suffix"])
    if kind == "a2":
        return A2Witness(d["core"], d["k"], d["h"])
    raise ValueError(f"unknown witness kind {kind!r}")


def p_witnesses(m: Morphism) -> tuple[PWitness, ...]:
    """All class-P witnesses, longest common prefix first."""
    out = []
    top = min(len(m.image0), len(m.image1))
    for plen in range(top, -1, -1):
        p = m.image0[:plen]
        if m.image1[:plen] != p or not is_palindrome(p):
            continue
        t0, t1 = m.image0[plen:], m.image1[plen:]
        if is_palindrome(t0) and is_palindrome(t1):
            out.append(PWitness(p, t0, t1))
    return tuple(out)


def in_class_p(m: Morphism) -> PWitness | None:
    ws = p_witnesses(m)
    return ws[0] if ws else None


def ep_witnesses(m: Morphism) -> tuple[EPWitness, ...]:
    """All class-EP witnesses, longest common prefix first."""
    out = []
    top = min(len(m.image0), len(m.image1))
    for plen in range(top, -1, -1):
        p = m.image0[:plen]
        if m.image1[:plen] != p or not is_antipalindrome(p):
            continue
        t0, t1 = m.image0[plen:], m.image1[plen:]
        if is_antipalindrome(t0) and is_antipalindrome(t1):
            out.append(EPWitness(p, t0, t1))
    return tuple(out)


def in_class_ep(m: Morphism) -> EPWitness | None:
    ws = ep_witnesses(m)
    return ws[0] if ws else None


@dataclass(frozen=True)
class EPSuffixWitness:
    """image_a == body_a + suffix with all three parts antipalindromes."""

    body0: Word
    body1: Word
    suffix: Word

    def build(self) -> Morphism:
        return Morphism(self.body0 + self.suffix, self.body1 + self.suffix)

    def is_valid(self) -> bool:
        return all(is_antipalindrome(w) for w in (self.body0, self.body1, self.suffix))


def ep_suffix_witnesses(m: Morphism) -> tuple[EPSuffixWitness, ...]:
    """The mirror-image decomposition: a common antipalindromic suffix.

    Composing a uniform head/suffix morphism with the doubling morphism
    lands in this shape (not the common-prefix one); a suffix-shape
    member is the left conjugate of a prefix-shape member by the shared
    part, so the two shapes agree up to conjugacy.
    """
    out = []
    n0, n1 = len(m.image0), len(m.image1)
    for plen in range(min(n0, n1), -1, -1):
        p = m.image0[n0 - plen :] if plen else ""
        if (m.image1[n1 - plen :] if plen else "") != p or not is_antipalindrome(p):
            continue
        h0, h1 = m.image0[: n0 - plen], m.image1[: n1 - plen]
        if is_antipalindrome(h0) and is_antipalindrome(h1):
            out.append(EPSuffixWitness(h0, h1, p))
    return tuple(out)


def a1_witnesses(m: Morphism) -> tuple[A1Witness, ...]:
    """All class-A1 witnesses, longest antipalindromic suffix first."""
    if not is_uniform(m) or not m.image0:
        return ()
    n = len(m.image0)
    out = []
    for slen in range(n - 1, -1, -1):
        head, suffix = m.image0[: n - slen], m.image0[n - slen :]
        if not is_antipalindrome(suffix):
            continue
        if m.image1 == exchange(head) + suffix:
            out.append(A1Witness(head, suffix))
    return tuple(out)


def in_class_a1(m: Morphism) -> A1Witness | None:
    ws = a1_witnesses(m)
    return ws[0] if ws else None


def a2_witnesses(m: Morphism) -> tuple[A2Witness, ...]:
    """All class-A2 witnesses, shortest core first."""
    try:
        u0 = theta_decode(m.image0)
        u1 = theta_decode(m.image1)
    except NotInThetaImage:
        return ()
    out = []
    for ell in range(1, len(u0) + 1):
        q0, r0 = divmod(len(u0), ell)
        q1, r1 = divmod(len(u1), ell)
        if r0 or r1 or q0 % 2 == 0 or q1 % 2 == 0:
            continue
        core = u0[:ell]
        r = reverse(core)
        k, h = (q0 - 1) // 2, (q1 - 1) // 2
        if u0 == core + (r + core) * k and u1 == (r + core) * h + r:
            out.append(A2Witness(core, k, h))
    return tuple(out)


def in_class_a2(m: Morphism) -> tuple[A2Witness, ...]:
    return a2_witnesses(m)


def conjugate_to_p(m: Morphism) -> bool:
    """Mirror test on the extreme conjugates: reversing every rightmost
    image must give the corresponding leftmost image."""
    chain = conjugacy_chain(m)
    if chain.cyclic:
        raise CyclicMorphism(f"{format_morphism(m)} is cyclic")
    left, right = chain.leftmost, chain.rightmost
    return reverse(right.image0) == left.image0 and reverse(right.image1) == left.image1


def a1_palindromicity(w: A1Witness) -> bool:
    """Fixed point of the witnessed morphism is palindromic iff the
    suffix is empty and the head is a palindrome (aperiodic case)."""
    return w.suffix == "" and is_palindrome(w.head)


def a2_palindromicity(w: A2Witness) -> bool:
    """Fixed point of the witnessed morphism is palindromic iff the core
    is an antipalindrome (aperiodic case)."""
    return is_antipalindrome(w.core)


def a2_rebalance(w: A2Witness) -> A2Witness:
    """Shift the whole alternation budget onto the second image.

    The two witnessed morphisms share their fixed points, so rebalancing
    never changes the generated word.
    """
    if w.k + w.h < 1:
        raise PreconditionViolated("rebalancing needs k + h >= 1")
    return A2Witness(w.core, 0, w.k + w.h)


@dataclass(frozen=True)
class Hit:
    """Where a class membership was found around a morphism.

    ``where`` is one of direct / conjugate / square / square-conjugate;
    for chain hits ``chain_index`` points into the conjugacy chain and
    ``q`` is that element's conjugacy word against the leftmost element
    (None on the rotation cycle of a cyclic morphism).
    """

    where: str
    witness: Witness
    chain_index: int | None = None
    q: Word | None = None


@dataclass(frozen=True)
class ClassMembership:
    direct: Witness | None
    conjugate: Hit | None
    square: Witness | None
    square_conjugate: Hit | None

    @property
    def any_hit(self) -> bool:
        return any(
            x is not None for x in (self.direct, self.conjugate, self.square, self.square_conjugate)
        )

    def first_hit(self) -> Hit | None:
        if self.direct is not None:
            return Hit("direct", self.direct)
        if self.conjugate is not None:
            return self.conjugate
        if self.square is not None:
            return Hit("square", self.square)
        return self.square_conjugate

    @property
    def witness(self) -> Witness | None:
        hit = self.first_hit()
        return hit.witness if hit else None

    def to_dict(self) -> dict:
        def hit_dict(hit):
            if hit is None:
                return None
            return {
                "index": hit.chain_index,
                "q": hit.q,
                "witness": hit.witness.to_dict(),
            }

        return {
            "direct": self.direct is not None,
            "conjugate": hit_dict(self.conjugate),
            "square": self.square is not None,
            "square_conjugate": hit_dict(self.square_conjugate),
            "witness": self.witness.to_dict() if self.witness else None,
        }


def _chain_hit(enumerate_witnesses, chain: ConjugacyChain, where: str) -> Hit | None:
    for index, element in enumerate(chain.chain):
        ws = enumerate_witnesses(element)
        if ws:
            q = chain.qs[index] if chain.qs else None
            return Hit(where, ws[0], chain_index=index, q=q)
    return None


def _membership(enumerate_witnesses, m, chain, m2, chain2) -> ClassMembership:
    direct = enumerate_witnesses(m)
    sq = enumerate_witnesses(m2)
    return ClassMembership(
        direct=direct[0] if direct else None,
        conjugate=_chain_hit(enumerate_witnesses, chain, "conjugate"),
        square=sq[0] if sq else None,
        square_conjugate=_chain_hit(enumerate_witnesses, chain2, "square-conjugate"),
    )


def conjugate_to_a1(m: Morphism) -> Hit | None:
    """First class-A1 hit over the chains of m and of its square."""
    m2 = square(m)
    mem = _membership(a1_witnesses, m, conjugacy_chain(m), m2, conjugacy_chain(m2))
    return mem.first_hit()


@dataclass(frozen=True)
class EvidenceConfig:
    """Parameters for the two-scale antipalindrome evidence."""

    prefix_len: int = 25_000
    factor: int = 4
    seed_letter: str | None = None


@dataclass(frozen=True)
class Evidence:
    """Longest antipalindromic factor length at two prefix scales."""

    prefix_len: int
    a_small: int
    big_len: int
    a_big: int
    source: str
    letter: str

    @property
    def growing(self) -> bool:
        return self.a_big > self.a_small

    def to_dict(self) -> dict:
        return {
            "prefix_len": self.prefix_len,
            "a_small": self.a_small,
            "big_len": self.big_len,
            "a_big": self.a_big,
            "source": self.source,
            "letter": self.letter,
        }


def _evidence_source(m: Morphism, m2: Morphism, preferred: str | None):
    """Pick the morphism/letter whose fixed point carries the evidence."""
    for source, morphism in (("self", m), ("square", m2)):
        letters = prolongable_letters(morphism)
        order = [preferred] if preferred in letters else sorted(letters)
        if order:
            return source, morphism, order[0]
    return None


def _proven_period(host: Morphism, prefix: Word) -> Word | None:
    """The period word, when the prefix provably extends to a purely
    periodic fixed point of the host morphism.

    The prefix being a power of r only suggests periodicity; the proof is
    that r**inf is itself fixed, which one window of length
    lcm(|r|, |host(r)|) decides because both sides are periodic.  The
    fixed point starting with a given letter is unique, so equality pins
    the analyzed word down to r**inf exactly.
    """
    p = smallest_period(prefix)
    if p > len(prefix) // 4:
        return None
    r = prefix[:p]
    image = apply(host, r)
    if not image:
        return None
    window = lcm(p, len(image))
    if (r * (window // p)) != (image * (window // len(image)))[:window]:
        return None
    return r


@dataclass(frozen=True)
class ClassificationReport:
    morphism: Morphism
    primitive: bool
    uniform: bool
    cyclic: bool
    periodicity: str
    class_p: ClassMembership
    class_ep: ClassMembership
    class_a1: ClassMembership
    class_a2: ClassMembership
    palindromic_status: str
    palindromic_basis: str
    antipal_verdict: str
    antipal_basis: str
    evidence: Evidence | None
    counterexample_candidate: bool
    chain: ConjugacyChain = field(repr=False)
    square_chain: ConjugacyChain = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "morphism": format_morphism(self.morphism),
            "flags": {
                "primitive": self.primitive,
                "uniform": self.uniform,
                "cyclic": self.cyclic,
                "periodicity": self.periodicity,
            },
            "class_p": self.class_p.to_dict(),
            "class_ep": self.class_ep.to_dict(),
            "class_a1": self.class_a1.to_dict(),
            "class_a2": self.class_a2.to_dict(),
            "palindromic": {
                "status": self.palindromic_status,
                "basis": self.palindromic_basis,
            },
            "antipalindromic": {
                "verdict": self.antipal_verdict,
                "basis": self.antipal_basis,
                "evidence": self.evidence.to_dict() if self.evidence else None,
            },
            "counterexample_candidate": self.counterexample_candidate,
        }


def _palindromic_proof(morphism: Morphism, chain: ConjugacyChain) -> bool:
    """Palindromicity of the fixed point, settled exactly.

    Cyclic morphisms fix a purely periodic word whose period must split
    into two palindromes; acyclic ones go through the mirror test on the
    extreme conjugates.
    """
    if chain.cyclic:
        return bool(decompose_two_palindromes(chain.q_full))
    left, right = chain.leftmost, chain.rightmost
    return reverse(right.image0) == left.image0 and reverse(right.image1) == left.image1


def classify(m: Morphism, cfg: EvidenceConfig = EvidenceConfig()) -> ClassificationReport:
    """Full classification with a settled or empirical antipalindromicity verdict.

    Verdict ladder:

    1. membership (or conjugate/square membership) in one of the two
       antipalindrome-generating classes proves unboundedly long
       antipalindromes, for a primitive morphism;
    2. a cyclic morphism fixes a periodic word, settled exactly by
       whether the period splits into two antipalindromes;
    3. a uniform primitive morphism with an (empirically) aperiodic
       fixed point and no uniform-class hit anywhere has only finitely
       many antipalindromic factors;
    4. the same conclusion holds for a non-uniform primitive aperiodic
       morphism whose fixed point is palindromic;
    5. otherwise the verdict stays empirical: the longest antipalindromic
       factor is measured at two prefix scales and compared.

    A record is a counterexample candidate when the evidence keeps
    growing but no class membership explains it.
    """
    chain = conjugacy_chain(m)
    m2 = square(m)
    chain2 = conjugacy_chain(m2)

    class_p = _membership(p_witnesses, m, chain, m2, chain2)
    class_ep = _membership(ep_witnesses, m, chain, m2, chain2)
    class_a1 = _membership(a1_witnesses, m, chain, m2, chain2)
    class_a2 = _membership(a2_witnesses, m, chain, m2, chain2)

    primitive = is_primitive(m)
    uniform = is_uniform(m)
    source = _evidence_source(m, m2, cfg.seed_letter)

    evidence = None
    if source is not None:
        tag, host, letter = source
        big_len = cfg.prefix_len * cfg.factor
        big = fixed_point_prefix(host, letter, big_len)
        evidence = Evidence(
            prefix_len=cfg.prefix_len,
            a_small=longest_antipalindrome(big[: cfg.prefix_len]),
            big_len=big_len,
            a_big=longest_antipalindrome(big),
            source=tag,
            letter=letter,
        )

    proven_period = None
    if chain.cyclic:
        periodicity = "periodic-proven"
        proven_period = chain.q_full
    elif source is None:
        periodicity = "no-fixed-point"
    else:
        tag, host, letter = source
        prefix = fixed_point_prefix(host, letter, cfg.prefix_len)
        proven_period = _proven_period(host, prefix)
        if proven_period is not None:
            periodicity = "periodic-proven"
        elif smallest_period(prefix) <= len(prefix) // 4:
            periodicity = "periodic-likely"
        else:
            periodicity = "aperiodic-likely"

    if proven_period is not None:
        split = bool(decompose_two_palindromes(proven_period))
        palindromic_status = "proven" if split else "proven-absent"
        palindromic_basis = (
            "periodic: the period word "
            + ("splits" if split else "does not split")
            + " into two palindromes"
        )
    elif source is None:
        palindromic_status, palindromic_basis = (
            "unknown",
            "no prolongable letter on the morphism or its square",
        )
    elif not primitive:
        palindromic_status, palindromic_basis = "unknown", "morphism is not primitive"
    else:
        proven = _palindromic_proof(m, chain) or _palindromic_proof(m2, chain2)
        palindromic_status = "proven" if proven else "proven-absent"
        palindromic_basis = "mirror test on the extreme conjugates of the morphism or its square"

    a1_hit = class_a1.any_hit
    a2_hit = class_a2.any_hit

    if (a1_hit and primitive) or a2_hit:
        hit = class_a1.first_hit() if (a1_hit and primitive) else class_a2.first_hit()
        kind = "A1" if (a1_hit and primitive) else "A2"
        verdict = "proven-infinite"
        basis = f"class {kind} membership ({hit.where})"
    elif proven_period is not None:
        if decompose_two_antipalindromes(proven_period):
            verdict = "proven-infinite"
            basis = "periodic: the period word splits into two antipalindromes"
        else:
            verdict = "proven-finite"
            basis = "periodic: the period word does not split into two antipalindromes"
    elif source is None:
        verdict, basis = "not-applicable", "no prolongable letter on the morphism or its square"
    elif uniform and primitive and periodicity == "aperiodic-likely":
        verdict = "proven-finite"
        basis = (
            "uniform case: no uniform-class hit on the morphism or its square "
            "(aperiodicity per prefix-period heuristic)"
        )
    elif not uniform and primitive and periodicity == "aperiodic-likely" and palindromic_status == "proven":
        verdict = "proven-finite"
        basis = (
            "non-uniform palindromic case: no doubling-class membership on the "
            "morphism or its square (aperiodicity per prefix-period heuristic)"
        )
    else:
        verdict = "empirical-growing" if evidence.growing else "empirical-bounded"
        basis = "two-scale longest-antipalindrome evidence"

    # A counterexample must sit inside the conjecture's hypothesis, which
    # speaks about primitive morphisms; non-primitive growing cases (for
    # example (0,101), whose fixed point is the periodic word (10)^inf)
    # are not counterexamples to anything.
    candidate = verdict == "empirical-growing" and primitive and not (a1_hit or a2_hit)

    return ClassificationReport(
        morphism=m,
        primitive=primitive,
        uniform=uniform,
        cyclic=chain.cyclic,
        periodicity=periodicity,
        class_p=class_p,
        class_ep=class_ep,
        class_a1=class_a1,
        class_a2=class_a2,
        palindromic_status=palindromic_status,
        palindromic_basis=palindromic_basis,
        antipal_verdict=verdict,
        antipal_basis=basis,
        evidence=evidence,
        counterexample_candidate=candidate,
        chain=chain,
        square_chain=chain2,
    )
