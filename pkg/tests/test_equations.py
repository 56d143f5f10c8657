import random

import pytest

from antipal import (
    EmptyWordError,
    EquationFails,
    HypothesisNotMet,
    NoCommonRoot,
    NoNormalForm,
    NotAntipalindrome,
    NotCommuting,
    PreconditionViolated,
    exchange,
    is_antipalindrome,
    is_palindrome,
    primitive_root,
)
from antipal.equations import (
    antipal_periodic_normal_form,
    decompose_two_antipalindromes,
    decompose_two_palindromes,
    fine_wilf_root,
    solve_commutation,
    solve_pal_antipal,
    solve_transfer,
)
from bruteforce import (
    bf_commutation,
    bf_normal_forms,
    bf_pal_antipal_solutions,
    bf_transfer_solutions,
    bf_two_antipalindromes,
    bf_two_palindromes,
    words_up_to,
)


def test_commutation_examples():
    s = solve_commutation("0101", "01")
    assert (s.u, s.i, s.j) == ("01", 2, 1)
    s = solve_commutation("011011", "011")
    assert (s.u, s.i, s.j) == ("011", 2, 1)
    with pytest.raises(NotCommuting):
        solve_commutation("0", "1")


def test_commutation_exhaustive_small():
    for x in words_up_to(5):
        for y in words_up_to(5):
            expected = bf_commutation(x, y)
            if expected is None:
                with pytest.raises(NotCommuting):
                    solve_commutation(x, y)
            else:
                s = solve_commutation(x, y)
                assert (s.u, s.i, s.j) == expected
                assert s.u * s.i == x and s.u * s.j == y


def test_transfer_examples():
    s = solve_transfer("01", "010", "10")
    assert (s.u, s.v, s.i) == ("0", "1", 1)
    s = solve_transfer("01", "0", "10")
    assert (s.u, s.v, s.i) == ("0", "1", 0)
    with pytest.raises(EquationFails):
        solve_transfer("01", "1", "01")
    with pytest.raises(EmptyWordError):
        solve_transfer("", "0", "0")


def test_transfer_round_trip_small():
    # xy = yz determines z from (x, y); enumerate those, then check the
    # solver's output is one of the brute-force solutions.
    for x in words_up_to(5, include_empty=False):
        for y in words_up_to(5):
            z = (x + y)[len(y) :]
            if x + y != y + z:
                with pytest.raises(EquationFails):
                    solve_transfer(x, y, z)
                continue
            s = solve_transfer(x, y, z)
            assert s.u + s.v == x
            assert (s.u + s.v) * s.i + s.u == y
            assert s.v + s.u == z
            assert (s.u, s.v, s.i) in bf_transfer_solutions(x, y, z)


def test_pal_antipal_examples():
    s = solve_pal_antipal("010", "101")
    assert (s.u, s.i, s.j) == ("0", 1, 1)
    s = solve_pal_antipal("0", "1")
    assert (s.u, s.i, s.j) == ("0", 0, 0)
    # 0011 is an antipalindrome, so this succeeds with seed 00
    s = solve_pal_antipal("00", "11")
    assert (s.u, s.i, s.j) == ("00", 0, 0)
    with pytest.raises(NotAntipalindrome):
        solve_pal_antipal("010", "010")
    with pytest.raises(PreconditionViolated):
        solve_pal_antipal("", "1")
    with pytest.raises(PreconditionViolated):
        solve_pal_antipal("01", "1")


def test_pal_antipal_exhaustive_small():
    pals = [w for w in words_up_to(7, include_empty=False) if is_palindrome(w)]
    for x in pals:
        for y in pals:
            expected = bf_pal_antipal_solutions(x, y)
            if not is_antipalindrome(x + y):
                assert expected == []
                with pytest.raises(NotAntipalindrome):
                    solve_pal_antipal(x, y)
                continue
            s = solve_pal_antipal(x, y)
            assert (s.u, s.i, s.j) in expected
            assert len(s.u) == min(len(u) for u, _, _ in expected)
            assert is_palindrome(s.u)


def test_fine_wilf_examples():
    assert fine_wilf_root("0101", "01", "010101") == "01"
    assert fine_wilf_root("0", "00", "000") == "0"
    with pytest.raises(HypothesisNotMet):
        fine_wilf_root("01", "10", "0")
    with pytest.raises(NoCommonRoot):
        fine_wilf_root("", "0", "")


def test_fine_wilf_random():
    rng = random.Random(21)
    for _ in range(300):
        z = "".join(rng.choice("01") for _ in range(rng.randrange(1, 4)))
        x, y = z * rng.randrange(1, 4), z * rng.randrange(1, 4)
        bound = len(x) + len(y)  # above the gcd-corrected bound
        w = (x * (bound // len(x) + 1))[:bound]
        root = fine_wilf_root(x, y, w)
        assert x == root * (len(x) // len(root))
        assert y == root * (len(y) // len(root))


def test_fine_wilf_short_witness_rejected():
    # same setup but w below the bound and xy != yx
    with pytest.raises(HypothesisNotMet):
        fine_wilf_root("001", "0010", "00100")


def test_decompositions_frozen():
    assert decompose_two_palindromes("010") == (("", "010"), ("010", ""))
    assert decompose_two_palindromes("01") == (("0", "1"),)
    assert decompose_two_palindromes("0110") == (("", "0110"), ("0110", ""))
    assert decompose_two_antipalindromes("0110") == (("01", "10"),)
    assert decompose_two_antipalindromes("01") == (("", "01"), ("01", ""))
    assert decompose_two_antipalindromes("0") == ()
    with pytest.raises(EmptyWordError):
        decompose_two_palindromes("")


def test_decompositions_match_bruteforce():
    for w in words_up_to(10, include_empty=False):
        assert list(decompose_two_palindromes(w)) == bf_two_palindromes(w)
        assert list(decompose_two_antipalindromes(w)) == bf_two_antipalindromes(w)


def test_normal_form_frozen():
    assert antipal_periodic_normal_form("01") == ("0", 1)
    assert antipal_periodic_normal_form("0101") == ("0", 2)
    # the rotation 1100 equals 11+E(11), easy to miss by hand
    assert antipal_periodic_normal_form("0110") == ("11", 1)
    with pytest.raises(NoNormalForm):
        antipal_periodic_normal_form("0")
    with pytest.raises(NoNormalForm):
        antipal_periodic_normal_form("0010")


def test_normal_form_matches_bruteforce():
    for w in words_up_to(10, include_empty=False):
        expected = bf_normal_forms(w)
        if not expected:
            with pytest.raises(NoNormalForm):
                antipal_periodic_normal_form(w)
            continue
        c, k = antipal_periodic_normal_form(w)
        assert is_palindrome(c)
        assert any(c == ec and k == ek for _, ec, ek in expected)
        rotations = {w[s:] + w[:s] for s in range(len(w))}
        assert (c + exchange(c)) * k in rotations


def test_solvers_round_trip_on_long_random_inputs():
    rng = random.Random(22)
    for _ in range(300):
        u = "".join(rng.choice("01") for _ in range(rng.randrange(1, 8)))
        x, y = u * rng.randrange(0, 6), u * rng.randrange(0, 6)
        if x or y:
            s = solve_commutation(x, y)
            assert s.u * s.i == x and s.u * s.j == y
    for _ in range(300):
        u = "".join(rng.choice("01") for _ in range(rng.randrange(0, 10)))
        v = "".join(rng.choice("01") for _ in range(rng.randrange(0, 10)))
        if not u + v:
            continue
        i = rng.randrange(0, 5)
        x, y, z = u + v, (u + v) * i + u, v + u
        s = solve_transfer(x, y, z)
        assert s.u + s.v == x and (s.u + s.v) * s.i + s.u == y and s.v + s.u == z
    for _ in range(300):
        half = "".join(rng.choice("01") for _ in range(rng.randrange(0, 6)))
        u = half + ("" if rng.random() < 0.5 else rng.choice("01")) + half[::-1]
        if not u:
            continue
        i, j = rng.randrange(0, 4), rng.randrange(0, 4)
        x = (u + exchange(u)) * i + u
        y = (exchange(u) + u) * j + exchange(u)
        s = solve_pal_antipal(x, y)
        assert (s.u + exchange(s.u)) * s.i + s.u == x
        assert (exchange(s.u) + s.u) * s.j + exchange(s.u) == y


def test_seed_then_alternation_is_primitive():
    # (E(c) c)^N E(c) is primitive for every nonempty palindrome c, N >= 1
    pals = [w for w in words_up_to(6, include_empty=False) if is_palindrome(w)]
    for c in pals:
        for n in (1, 2, 3):
            word = (exchange(c) + c) * n + exchange(c)
            assert primitive_root(word)[1] == 1
