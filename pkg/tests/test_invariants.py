import pytest

from braid_bounds.braid_core import BraidWord, GeneratorRangeError, exchange_move, markov_stabilize
from braid_bounds.diagram import closure
from braid_bounds.invariants import (
    Fingerprint,
    InvariantError,
    LaurentPolynomial,
    MultiComponentError,
    alexander,
    alexander_from_homfly,
    alexander_genus_lb,
    burau_reduced,
    determinant,
    fingerprint,
    homfly,
    jones_from_homfly,
    jones_normalized,
    kauffman_bracket,
    mfw_lower_bound,
    state_sum_bracket,
)


def a_poly(terms):
    return LaurentPolynomial.univariate(terms, "A")


def t_poly(terms):
    return LaurentPolynomial.univariate(terms, "t")


def vz(terms):
    return LaurentPolynomial(terms, ("v", "z"))


RIGHT_TREFOIL_JONES = a_poly({-4: 1, -12: 1, -16: -1})
FIGURE_EIGHT_JONES = a_poly({8: 1, 4: -1, 0: 1, -4: -1, -8: 1})


class TestBracket:
    def test_one_strand_is_normalized(self):
        assert kauffman_bracket(closure(BraidWord.identity(1))) == 1

    def test_single_crossing(self):
        assert kauffman_bracket(closure(BraidWord(2, (1,)))) == a_poly({3: -1})
        assert kauffman_bracket(closure(BraidWord(2, (-1,)))) == a_poly({-3: -1})

    def test_unlink_loop_value(self):
        assert kauffman_bracket(closure(BraidWord.identity(2))) == a_poly({2: -1, -2: -1})

    def test_trefoil_matches_state_sum(self, trefoil):
        d = closure(trefoil)
        assert kauffman_bracket(d) == state_sum_bracket(d)

    @pytest.mark.slow
    @pytest.mark.parametrize("strands", [2, 3, 4])
    def test_random_words_match_state_sum(self, strands, make_word):
        for _ in range(200):
            d = closure(make_word(strands, 8, reduced=False))
            assert d.crossing_count <= 8
            assert kauffman_bracket(d) == state_sum_bracket(d), str(d.word)


class TestJones:
    def test_unknot(self):
        assert jones_normalized(BraidWord(2, (1,))) == 1
        assert jones_normalized(BraidWord(2, (-1,))) == 1
        assert jones_normalized(BraidWord.identity(1)) == 1

    def test_trefoil(self, trefoil, left_trefoil):
        assert jones_normalized(trefoil) == RIGHT_TREFOIL_JONES
        assert jones_normalized(left_trefoil) == RIGHT_TREFOIL_JONES.invert_variable()

    def test_figure_eight(self, figure_eight):
        assert jones_normalized(figure_eight) == FIGURE_EIGHT_JONES

    def test_markov_stabilization(self, trefoil):
        assert jones_normalized(markov_stabilize(trefoil)) == jones_normalized(trefoil)
        assert jones_normalized(BraidWord(3, (1, 1, 1, 2))) == RIGHT_TREFOIL_JONES

    def test_hopf_link(self):
        assert jones_normalized(BraidWord(2, (1, 1))) == a_poly({-2: -1, -10: -1})


class TestBurau:
    def test_small_matrices(self):
        assert burau_reduced(BraidWord.identity(2)) == [[t_poly({0: 1})]]
        assert burau_reduced(BraidWord(2, (1,))) == [[t_poly({1: -1})]]
        assert burau_reduced(BraidWord(2, (1, -1))) == [[t_poly({0: 1})]]

    def test_braid_relation(self):
        assert burau_reduced(BraidWord(3, (1, 2, 1))) == burau_reduced(BraidWord(3, (2, 1, 2)))
        assert burau_reduced(BraidWord(4, (1, 3))) == burau_reduced(BraidWord(4, (3, 1)))

    def test_inverse_letters(self):
        w = BraidWord(4, (1, -2, 3, 2, -3, -1))
        identity = burau_reduced(BraidWord.identity(4))
        assert burau_reduced(BraidWord(4, w.letters + tuple(-x for x in reversed(w.letters)))) == identity

    def test_needs_two_strands(self):
        with pytest.raises(GeneratorRangeError):
            burau_reduced(BraidWord.identity(1))

    def test_determinant(self):
        assert determinant([]) == 1
        singular = [[t_poly({1: 1}), t_poly({0: 1})], [t_poly({0: 1}), t_poly({-1: 1})]]
        assert determinant(singular).is_zero()
        assert determinant(
            [[t_poly({1: 2}), t_poly({0: 1})], [t_poly({0: -1}), t_poly({-1: 1, 0: 1})]]
        ) == t_poly({0: 3, 1: 2})

    def test_determinant_of_burau_image(self, trefoil):
        # each positive letter contributes -t, each negative one -t^-1
        assert determinant(burau_reduced(trefoil)) == t_poly({3: -1})
        assert determinant(burau_reduced(BraidWord(3, (1, -2)))) == 1


class TestAlexander:
    def test_values(self, trefoil, figure_eight):
        assert alexander(BraidWord(2, (1,))) == 1
        assert alexander(BraidWord.identity(1)) == 1
        assert alexander(trefoil) == t_poly({1: 1, 0: -1, -1: 1})
        assert alexander(figure_eight) == t_poly({1: -1, 0: 3, -1: -1})

    def test_five_two(self):
        assert alexander(BraidWord(3, (1, 1, 1, 2, -1, 2))) == t_poly({1: 2, 0: -3, -1: 2})

    def test_links_rejected(self):
        with pytest.raises(MultiComponentError):
            alexander(BraidWord(2, (1, 1)))

    def test_normalization(self, make_word):
        for _ in range(60):
            w = make_word(4, 10)
            if closure(w).component_count != 1:
                continue
            delta = alexander(w)
            assert delta.evaluate_at_one() == 1
            assert delta == delta.invert_variable()

    def test_genus_lower_bound(self, trefoil, figure_eight):
        assert alexander_genus_lb(t_poly({0: 1})) == 0
        assert alexander_genus_lb(alexander(trefoil)) == 1
        assert alexander_genus_lb(alexander(figure_eight)) == 1


class TestHomfly:
    def test_unknot_and_unlink(self):
        assert homfly(BraidWord(2, (1,))) == 1
        assert homfly(BraidWord.identity(1)) == 1
        assert homfly(BraidWord.identity(2)) == vz({(-1, -1): 1, (1, -1): -1})

    def test_trefoil(self, trefoil, left_trefoil):
        expected = vz({(2, 0): 2, (4, 0): -1, (2, 2): 1})
        assert homfly(trefoil) == expected
        assert homfly(left_trefoil) == expected.invert_variable(axis=0)

    def test_hopf_link(self):
        assert homfly(BraidWord(2, (1, 1))) == vz({(1, 1): 1, (1, -1): 1, (3, -1): -1})

    def test_figure_eight(self, figure_eight):
        assert homfly(figure_eight) == vz({(-2, 0): 1, (0, 0): -1, (2, 0): 1, (0, 2): -1})

    def test_rotation_and_reduction_share_memo(self, figure_eight):
        rotated = BraidWord(3, (-2, 1, -2, 1))
        padded = BraidWord(3, (2, 1, -2, 1, -2, -2))
        assert homfly(rotated) == homfly(figure_eight)
        assert homfly(padded) == homfly(figure_eight)


class TestSpecializations:
    def test_jones_cross_check(self, trefoil, figure_eight):
        assert jones_from_homfly(homfly(trefoil)) == RIGHT_TREFOIL_JONES
        assert jones_from_homfly(homfly(figure_eight)) == FIGURE_EIGHT_JONES
        assert jones_from_homfly(homfly(BraidWord(2, (1, 1)))) == jones_normalized(
            BraidWord(2, (1, 1))
        )

    def test_alexander_from_conway(self, trefoil, figure_eight):
        assert alexander_from_homfly(homfly(trefoil)) == alexander(trefoil)
        assert alexander_from_homfly(homfly(figure_eight)) == alexander(figure_eight)

    def test_conway_rejects_links(self):
        with pytest.raises(InvariantError):
            alexander_from_homfly(homfly(BraidWord(2, (1, 1))))

    @pytest.mark.slow
    def test_random_words_agree(self, make_word):
        for _ in range(80):
            w = make_word(4, 9)
            assert jones_from_homfly(homfly(w)) == jones_normalized(w)
            if closure(w).component_count == 1:
                assert alexander_from_homfly(homfly(w)) == alexander(w)


class TestMFW:
    def test_values(self, trefoil):
        assert mfw_lower_bound(homfly(BraidWord(2, (1,)))) == 1
        assert mfw_lower_bound(homfly(trefoil)) == 2
        assert mfw_lower_bound(homfly(BraidWord(3, (1, 2) * 4))) == 3

    def test_zero_polynomial(self):
        with pytest.raises(InvariantError):
            mfw_lower_bound(vz({}))

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "p,q", [(p, q) for p in range(2, 6) for q in range(p + 1, 7)]
    )
    def test_torus_braids_are_certified(self, p, q):
        w = BraidWord(p, tuple(range(1, p)) * q)
        assert mfw_lower_bound(homfly(w)) == p

    def test_sound_against_exhibited_braid(self, make_word):
        for _ in range(60):
            w = make_word(4, 10)
            assert mfw_lower_bound(homfly(w)) <= w.strands


class TestFingerprint:
    def test_unknot_words_agree(self):
        prints = {
            fingerprint(BraidWord(2, (1,))),
            fingerprint(BraidWord.identity(1)),
            fingerprint(BraidWord(3, (1, 2))),
        }
        assert len(prints) == 1

    def test_distinguishes(self, trefoil, figure_eight, left_trefoil):
        assert fingerprint(trefoil) != fingerprint(figure_eight)
        assert fingerprint(trefoil) != fingerprint(left_trefoil)

    def test_links_have_no_alexander(self):
        fp = fingerprint(BraidWord(2, (1, 1)))
        assert fp.alexander is None
        assert fp.components == 2

    def test_exchange_move_outputs(self):
        w = BraidWord(4, (1, 3, 1, -3))
        for moved in exchange_move(w):
            assert fingerprint(moved) == fingerprint(w)

    def test_json_round_trip_and_sort_key(self, trefoil):
        fp = fingerprint(trefoil)
        assert Fingerprint.from_json(fp.to_json()) == fp
        assert fp.sort_key() == Fingerprint.from_json(fp.to_json()).sort_key()
