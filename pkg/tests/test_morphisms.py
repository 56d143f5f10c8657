import math
import random
from fractions import Fraction

import pytest

from antipal import ParseError
from antipal.errors import NotAConjugacyWord, NotPrimitive, NotProlongable
from antipal.morphisms import (
    Morphism,
    apply,
    compose,
    conjugacy_chain,
    conjugate_by,
    fixed_point_prefix,
    format_morphism,
    incidence,
    is_primitive,
    is_uniform,
    letter_frequencies,
    parse_morphism,
    prolongable_letters,
    square,
)
from bruteforce import bf_factor_set, words_up_to

FIB = Morphism("01", "0")
THETA = Morphism("01", "10")


def test_parse_and_format():
    assert parse_morphism("0->01,1->0") == FIB
    assert parse_morphism(" 0 -> 01 , 1 -> 0 ") == FIB
    assert parse_morphism("0->eps,1->0") == Morphism("", "0")
    assert parse_morphism("0->,1->0") == Morphism("", "0")
    assert format_morphism(FIB) == "0->01,1->0"
    for bad in ("0->01", "1->0,0->1", "0->02,1->0", "0->,1->"):
        with pytest.raises(ParseError):
            parse_morphism(bad)


def test_apply_examples():
    assert apply(FIB, "0") == "01"
    assert apply(THETA, "01") == "0110"
    assert apply(FIB, "") == ""


def test_apply_respects_concatenation():
    rng = random.Random(31)
    for _ in range(100):
        m = Morphism(
            "".join(rng.choice("01") for _ in range(rng.randrange(1, 5))),
            "".join(rng.choice("01") for _ in range(rng.randrange(1, 5))),
        )
        u = "".join(rng.choice("01") for _ in range(rng.randrange(15)))
        v = "".join(rng.choice("01") for _ in range(rng.randrange(15)))
        assert apply(m, u + v) == apply(m, u) + apply(m, v)


def test_compose_square():
    assert square(THETA) == Morphism("0110", "1001")
    assert square(FIB) == Morphism("010", "01")
    ident = Morphism("0", "1")
    assert compose(ident, FIB) == FIB


def test_incidence_primitive():
    assert incidence(THETA) == ((1, 1), (1, 1))
    assert is_primitive(THETA)
    assert incidence(FIB) == ((1, 1), (1, 0))
    assert is_primitive(FIB)
    assert not is_primitive(Morphism("0", "1"))
    assert not is_primitive(Morphism("00", "11"))


def test_incidence_column_sums_are_image_lengths():
    rng = random.Random(33)
    for _ in range(50):
        m = Morphism(
            "".join(rng.choice("01") for _ in range(rng.randrange(1, 7))),
            "".join(rng.choice("01") for _ in range(rng.randrange(1, 7))),
        )
        mat = incidence(m)
        assert mat[0][0] + mat[1][0] == len(m.image0)
        assert mat[0][1] + mat[1][1] == len(m.image1)


def test_uniform():
    assert is_uniform(THETA)
    assert not is_uniform(FIB)
    assert is_uniform(Morphism("0101", "1100"))


def test_prolongable_letters():
    assert prolongable_letters(FIB) == frozenset("0")
    assert prolongable_letters(THETA) == frozenset("01")
    assert prolongable_letters(Morphism("10", "01")) == frozenset()
    # image tail that dies out is not prolongable: 0 -> 01 but 1 -> eps
    assert prolongable_letters(Morphism("01", "")) == frozenset()


def test_fixed_point_prefix_known_words():
    assert fixed_point_prefix(FIB, "0", 18) == "010010100100101001"
    assert fixed_point_prefix(THETA, "0", 16) == "0110100110010110"
    assert fixed_point_prefix(THETA, "1", 8) == "10010110"
    assert fixed_point_prefix(FIB, "0", 1) == "0"
    with pytest.raises(NotProlongable):
        fixed_point_prefix(FIB, "1", 5)


def test_fixed_point_prefix_extension_consistent():
    for m in (FIB, THETA, Morphism("011", "01"), Morphism("01", "1")):
        for letter in prolongable_letters(m):
            long = fixed_point_prefix(m, letter, 500)
            for n in (1, 7, 100, 499):
                assert fixed_point_prefix(m, letter, n) == long[:n]
            assert apply(m, long)[:500] == long  # genuinely fixed


def test_conjugacy_chain_worked_example():
    # 0->01001,1->01 rolls out to extremes 0->01010,1->10 / 0->01010,1->01
    chain = conjugacy_chain(Morphism("01001", "01"))
    assert not chain.cyclic
    assert chain.leftmost == Morphism("01010", "10")
    assert chain.rightmost == Morphism("01010", "01")
    assert chain.q_full == "01010"
    assert len(chain.chain) == len(chain.q_full) + 1
    assert Morphism("01001", "01") in chain.chain


def test_conjugacy_chain_trivial_and_cyclic():
    chain = conjugacy_chain(THETA)
    assert chain.chain == (THETA,)
    assert chain.q_full == ""
    cyc = conjugacy_chain(Morphism("01", "01"))
    assert cyc.cyclic
    assert set(cyc.chain) == {Morphism("01", "01"), Morphism("10", "10")}
    assert cyc.q_full == "01"


def test_chain_satisfies_conjugacy_relation():
    rng = random.Random(32)
    samples = [Morphism("01001", "01"), FIB, Morphism("0010", "0100"), Morphism("001", "0")]
    for _ in range(40):
        samples.append(
            Morphism(
                "".join(rng.choice("01") for _ in range(rng.randrange(1, 6))),
                "".join(rng.choice("01") for _ in range(rng.randrange(1, 6))),
            )
        )
    for m in samples:
        chain = conjugacy_chain(m)
        if chain.cyclic:
            continue
        assert m in chain.chain
        left = chain.leftmost
        # extremes start/end with distinct letters (marked morphism shape)
        if left.image0 and left.image1:
            assert left.image0[0] != left.image1[0]
            assert chain.rightmost.image0[-1] != chain.rightmost.image1[-1]
        for elem, q in zip(chain.chain, chain.qs):
            for a in "01":
                assert q + apply(left, a) == apply(elem, a) + q
        if is_primitive(m):
            assert all(is_primitive(e) for e in chain.chain)


def test_chain_elements_share_factors():
    # conjugates with fixed points generate the same language
    chain = conjugacy_chain(Morphism("01001", "01"))
    seen = None
    for elem in chain.chain:
        letters = prolongable_letters(elem)
        if not letters:
            continue
        prefix = fixed_point_prefix(elem, sorted(letters)[0], 4000)
        factors = frozenset(
            frozenset(bf_factor_set(prefix, n)) for n in range(1, 13)
        )
        if seen is None:
            seen = factors
        else:
            assert factors == seen


def test_conjugate_by():
    assert conjugate_by(FIB, "0") == Morphism("10", "0")
    assert conjugate_by(FIB, "") == FIB
    with pytest.raises(NotAConjugacyWord):
        conjugate_by(THETA, "0")


def test_conjugate_by_agrees_with_chain():
    chain = conjugacy_chain(Morphism("01001", "01"))
    for elem, q in zip(chain.chain, chain.qs):
        assert conjugate_by(elem, q) == chain.leftmost


def test_letter_frequencies():
    assert letter_frequencies(THETA) == type(letter_frequencies(THETA))(
        Fraction(1, 2), Fraction(1, 2)
    )
    rho0, rho1 = letter_frequencies(FIB).as_floats()
    tau = (1 + math.sqrt(5)) / 2
    assert abs(rho0 - 1 / tau) < 1e-9
    assert abs(rho0 + rho1 - 1) < 1e-12
    with pytest.raises(NotPrimitive):
        letter_frequencies(Morphism("00", "11"))


def test_letter_frequencies_match_counts():
    for m in (FIB, THETA, Morphism("001", "01"), Morphism("0110", "1001")):
        letter = sorted(prolongable_letters(m))[0]
        prefix = fixed_point_prefix(m, letter, 100000)
        rho0 = letter_frequencies(m).as_floats()[0]
        assert abs(prefix.count("0") / len(prefix) - rho0) < 2e-3


def test_exhaustive_small_chains_terminate():
    for i0 in words_up_to(4, include_empty=False):
        for i1 in words_up_to(4, include_empty=False):
            chain = conjugacy_chain(Morphism(i0, i1))
            if not chain.cyclic:
                assert len(chain.chain) == len(chain.q_full) + 1
