"""Character arithmetic, Demazure operators, and the two weight oracles."""

import itertools
import random

import pytest

from schubert import (
    Character,
    adjoint_character,
    build,
    char_sorted_terms,
    char_to_str,
    demazure_along_word,
    demazure_op,
    e,
    freudenthal_char,
    longest_element,
    weyl_dim,
)
from schubert.rootsys import Weight

from helpers import random_small_character


def test_character_algebra():
    rs = build("A2")
    a = e(rs.weight((1, 0)), 2)
    b = e(rs.weight((1, 0)), -2) + e(rs.weight((0, 1)))
    s = a + b
    assert s.multiplicity(rs.weight((1, 0))) == 0
    assert len(s) == 1  # cancelled terms are pruned
    assert s - s == Character.zero()
    assert (2 * s).dimension() == 2
    assert (-s).is_effective() is False
    assert s.termwise_leq(2 * s)
    assert Character.zero().is_zero
    assert char_to_str(rs, Character.zero()) == "0"
    with pytest.raises(TypeError):
        hash(s)


def test_demazure_string_cases():
    rs = build("A2")
    w = rs.weight
    # m = 0: fixed
    assert demazure_op(rs, 1, e(w((0, 1)))) == e(w((0, 1)))
    # m = 1: two-term string
    assert demazure_op(rs, 1, e(w((1, 0)))) == e(w((1, 0))) + e(w((-1, 1)))
    # m = -1: annihilated
    assert demazure_op(rs, 1, e(w((-1, 0)))).is_zero
    assert demazure_op(rs, 1, e(w((-1, 2)))).is_zero
    # m = -2: one negative term
    assert demazure_op(rs, 1, e(w((-2, 0)))) == -e(w((0, -1)))
    # m = -3: two negative terms
    assert demazure_op(rs, 1, e(w((-3, 0)))) == -e(w((-1, -1))) - e(w((1, -2)))


def test_demazure_a2_anchors():
    # frozen from an independent by-hand string-formula evaluation
    rs = build("A2")
    w = rs.weight
    got = demazure_along_word(rs, (2, 1), e(w((1, 1))))
    expected = (e(w((1, 1))) + e(w((2, -1))) + e(w((-1, 2)))
                + e(w((0, 0))) + e(w((1, -2))))
    assert got == expected
    got2 = demazure_along_word(rs, (2, 1), e(w((2, -1))))
    expected2 = e(w((0, 0))) + e(w((-2, 1))) + e(w((-1, -1)))
    assert got2 == expected2
    # the third positive root dies under the inner operator
    assert demazure_along_word(rs, (2, 1), e(w((-1, 2)))).is_zero


def test_demazure_linearity_and_idempotence():
    rng = random.Random(3)
    for name in ("A2", "B2", "G2"):
        rs = build(name)
        for _ in range(40):
            f = random_small_character(rs, rng)
            g = random_small_character(rs, rng)
            i = rng.randint(1, rs.rank)
            assert demazure_op(rs, i, f + g) == demazure_op(rs, i, f) + demazure_op(rs, i, g)
            once = demazure_op(rs, i, f)
            assert demazure_op(rs, i, once) == once


BRAID_WORDS = {"A2": ((1, 2, 1), (2, 1, 2)),
               "B2": ((1, 2, 1, 2), (2, 1, 2, 1)),
               "G2": ((1, 2, 1, 2, 1, 2), (2, 1, 2, 1, 2, 1))}


@pytest.mark.parametrize("name", sorted(BRAID_WORDS))
def test_braid_compatibility(name):
    rs = build(name)
    rng = random.Random(17)
    u, v = BRAID_WORDS[name]
    for _ in range(30):
        f = random_small_character(rs, rng)
        assert demazure_along_word(rs, u, f) == demazure_along_word(rs, v, f)


def test_along_word_edge_cases():
    rs = build("A2")
    f = e(rs.weight((1, -1)), 3)
    assert demazure_along_word(rs, (), f) == f
    with pytest.raises(ValueError):
        demazure_along_word(rs, (0,), f)
    with pytest.raises(ValueError):
        demazure_along_word(rs, (3,), f)


@pytest.mark.parametrize("name,dim", [("A2", 8), ("B2", 10), ("G2", 14), ("D4", 28), ("A3", 15)])
def test_adjoint_character(name, dim):
    rs = build(name)
    adj = adjoint_character(rs)
    assert adj.dimension() == dim
    assert adj.multiplicity(rs.zero()) == rs.rank
    for root in rs.roots:
        assert adj.multiplicity(root.weight) == 1
    assert len(adj) == len(rs.roots) + 1
    # the adjoint is the irreducible with highest weight alpha_0 here
    assert adj == freudenthal_char(rs, rs.highest_root.weight)


# classical dimension table
WEYL_DIMS = [
    ("A2", (1, 0), 3), ("A2", (0, 1), 3), ("A2", (1, 1), 8), ("A2", (2, 2), 27),
    ("B2", (1, 0), 5), ("B2", (0, 1), 4), ("B2", (0, 2), 10), ("B2", (1, 1), 16),
    ("G2", (1, 0), 7), ("G2", (0, 1), 14), ("G2", (2, 0), 27),
    ("A3", (1, 0, 0), 4), ("A3", (0, 1, 0), 6), ("A3", (1, 0, 1), 15),
    ("D4", (1, 0, 0, 0), 8), ("D4", (0, 1, 0, 0), 28),
]


@pytest.mark.parametrize("name,fw,dim", WEYL_DIMS)
def test_weyl_dimensions(name, fw, dim):
    rs = build(name)
    assert weyl_dim(rs, rs.weight(fw)) == dim


def test_weyl_dim_rejects_nondominant():
    rs = build("A2")
    with pytest.raises(ValueError):
        weyl_dim(rs, rs.weight((-1, 0)))
    with pytest.raises(ValueError):
        freudenthal_char(rs, rs.weight((-1, 0)))


def test_freudenthal_properties():
    for name in ("A2", "B2", "G2"):
        rs = build(name)
        for fw in itertools.product(range(3), repeat=2):
            lam = rs.weight(fw)
            ch = freudenthal_char(rs, lam)
            assert ch.dimension() == weyl_dim(rs, lam)
            assert ch.multiplicity(lam) == 1
            assert ch.is_effective()
            # Weyl-group invariance at the extreme weight
            w0 = longest_element(rs)
            assert ch.multiplicity(w0.apply(lam)) == 1


def test_freudenthal_known_multiplicities():
    rs = build("A2")
    adj = freudenthal_char(rs, rs.weight((1, 1)))
    assert adj.multiplicity(rs.zero()) == 2
    # 27 of A2 = (2,2): weight 0 appears 3 times, weights at rho twice
    big = freudenthal_char(rs, rs.weight((2, 2)))
    assert big.multiplicity(rs.zero()) == 3
    assert big.multiplicity(rs.rho) == 2
    g2 = build("G2")
    assert freudenthal_char(g2, g2.weight((0, 1))).multiplicity(g2.zero()) == 2
    assert freudenthal_char(g2, g2.weight((1, 0))).multiplicity(g2.zero()) == 1


def test_sorted_terms_order():
    rs = build("A2")
    f = e(rs.weight((1, 1))) + e(rs.zero(), 2) + e(rs.weight((1, -2)), -1)
    terms = char_sorted_terms(rs, f)
    heights = [rs.height(wt) for wt, _ in terms]
    assert heights == sorted(heights)
    assert char_to_str(rs, f) == "-1*e[1, -2] + 2*e[0, 0] + 1*e[1, 1]"


def test_demazure_matches_weyl_character_on_w0():
    # chi(w0, e^lam) is the full irreducible character
    rs = build("B2")
    w0 = longest_element(rs)
    lam = rs.weight((1, 1))
    assert demazure_along_word(rs, w0.reduced_word(), e(lam)) == freudenthal_char(rs, lam)
    assert weyl_dim(rs, lam) == 16


def test_demazure_stability_along_subwords():
    # prefix characters are termwise below the full character
    rs = build("A3")
    w0 = longest_element(rs)
    lam = rs.weight((1, 0, 1))
    word = w0.reduced_word()
    prev = e(lam)
    for k in range(1, len(word) + 1):
        cur = demazure_along_word(rs, word[len(word) - k:], e(lam))
        assert prev.termwise_leq(cur)
        prev = cur
    assert prev == freudenthal_char(rs, lam)
