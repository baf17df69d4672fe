import pytest

from braid_bounds.braid_core import (
    BraidLetter,
    BraidParseError,
    BraidWord,
    FreeGroupWord,
    GeneratorRangeError,
    MarkovMoveError,
    StrandMismatchError,
    ab_tile_word,
    artin_action,
    band_generator,
    braid_eq,
    canonical_rotation,
    component_count,
    compose,
    conjugate,
    cyclic_reduce,
    delta,
    exchange_move,
    exponent_sum,
    free_reduce,
    inverse,
    is_cyclic_rotation,
    markov_destabilize,
    markov_stabilize,
    parse_braid_word,
    permutation,
    power,
    rotate,
)


class TestBraidWord:
    def test_letters_are_range_checked(self):
        with pytest.raises(GeneratorRangeError):
            BraidWord(2, (2,))
        with pytest.raises(GeneratorRangeError):
            BraidWord(3, (0,))
        with pytest.raises(GeneratorRangeError):
            BraidWord(0, ())

    def test_identity_allowed(self):
        assert len(BraidWord.identity(4)) == 0

    def test_braid_letters_view(self):
        w = BraidWord(3, (1, -2))
        assert w.braid_letters == (BraidLetter(1, 1), BraidLetter(2, -1))
        assert BraidWord.from_letters(3, w.braid_letters) == w

    def test_text_format(self):
        w = parse_braid_word("B3: 1 -2 1 -2")
        assert w == BraidWord(3, (1, -2, 1, -2))
        assert str(w) == "B3: 1 -2 1 -2"
        assert parse_braid_word("B1:") == BraidWord.identity(1)
        assert str(BraidWord.identity(2)) == "B2:"

    @pytest.mark.parametrize("text", ["3: 1 2", "B3 1 2", "Bx: 1", "B3: 1 a"])
    def test_malformed_text(self, text):
        with pytest.raises(BraidParseError):
            parse_braid_word(text)


class TestWordAlgebra:
    def test_compose(self):
        u, v = BraidWord(2, (1,)), BraidWord(2, (-1,))
        assert compose(u, v).letters == (1, -1)
        assert compose(BraidWord.identity(2), u) == u
        w = compose(BraidWord(3, (1, 2)), BraidWord(3, (-2, -1)))
        assert len(w) == 4
        assert free_reduce(w) == BraidWord.identity(3)

    def test_compose_strand_mismatch(self):
        with pytest.raises(StrandMismatchError):
            compose(BraidWord(2, (1,)), BraidWord(3, (1,)))

    def test_inverse(self):
        assert inverse(BraidWord(3, (1, 2))).letters == (-2, -1)
        assert inverse(BraidWord.identity(2)) == BraidWord.identity(2)
        assert inverse(BraidWord(2, (1, 1, 1))).letters == (-1, -1, -1)

    def test_inverse_cancels(self, make_word):
        for _ in range(50):
            w = make_word(4, 10, reduced=False)
            assert free_reduce(compose(w, inverse(w))) == BraidWord.identity(4)

    def test_free_reduce(self):
        assert free_reduce(BraidWord(3, (1, -1, 2))).letters == (2,)
        assert free_reduce(BraidWord(2, (1, 1, 1))).letters == (1, 1, 1)
        assert free_reduce(BraidWord(3, (2, 1, -1, -2))).letters == ()

    def test_free_reduce_idempotent_and_shorter(self, make_word):
        for _ in range(100):
            w = make_word(4, 12, reduced=False)
            reduced = free_reduce(w)
            assert free_reduce(reduced) == reduced
            assert len(reduced) <= len(w)
            assert braid_eq(w, reduced)

    def test_cyclic_reduce(self):
        assert cyclic_reduce(BraidWord(3, (-1, 2, 1))).letters == (2,)
        assert cyclic_reduce(BraidWord(2, (1, 1, 1))).letters == (1, 1, 1)
        assert cyclic_reduce(BraidWord(3, (2, 1, -2))).letters == (1,)

    def test_exponent_sum(self):
        assert exponent_sum(BraidWord(2, (1, 1, 1))) == 3
        assert exponent_sum(BraidWord.identity(3)) == 0
        assert exponent_sum(BraidWord(3, (1, -2, 1, -2))) == 0

    def test_power_and_delta(self):
        assert power(BraidWord(3, (1, 2)), 2).letters == (1, 2, 1, 2)
        assert power(BraidWord(3, (1, 2)), -1).letters == (-2, -1)
        assert delta(4).letters == (1, 2, 3)

    def test_rotations(self):
        w = BraidWord(3, (2, 1, 1))
        assert rotate(w, 1).letters == (1, 1, 2)
        assert is_cyclic_rotation(w, BraidWord(3, (1, 2, 1)))
        assert not is_cyclic_rotation(w, BraidWord(3, (2, 2, 1)))
        assert canonical_rotation(BraidWord(3, (-1, 2, 1, 1))).letters == (1, 2)

    def test_permutation_and_components(self):
        assert permutation(BraidWord(3, (1,))) == (1, 0, 2)
        assert component_count(BraidWord.identity(3)) == 3
        assert component_count(BraidWord(2, (1, 1, 1))) == 1
        assert component_count(BraidWord(2, (1, 1))) == 2
        assert component_count(BraidWord(3, (1, -2, 1, -2))) == 1


class TestMoves:
    def test_stabilize(self):
        assert markov_stabilize(BraidWord(2, (1, 1, 1))) == BraidWord(3, (1, 1, 1, 2))
        assert markov_stabilize(BraidWord(2, (1,)), -1) == BraidWord(3, (1, -2))

    def test_destabilize(self):
        assert markov_destabilize(BraidWord(3, (1, 1, 1, 2))) == BraidWord(2, (1, 1, 1))
        assert markov_destabilize(BraidWord(3, (1, -2, 1))) == BraidWord(2, (1, 1))

    def test_destabilize_inapplicable(self):
        with pytest.raises(MarkovMoveError):
            markov_destabilize(BraidWord(2, (1, 1, 1)))
        with pytest.raises(MarkovMoveError):
            markov_destabilize(BraidWord(3, (2, 1, 2)))

    def test_exchange_move(self):
        w = BraidWord(4, (1, 3, 1, -3))
        assert exchange_move(w) == [BraidWord(4, (1, -3, 1, 3))]
        assert exchange_move(BraidWord(2, (1, 1, 1))) == []

    def test_exchange_interior_avoids_second_to_last_generator(self):
        assert exchange_move(BraidWord(4, (2, 3, 1, -3))) == []

    def test_band_generator(self):
        assert band_generator(1, 2, 1, 3).letters == (1,)
        assert band_generator(1, 3, 1, 3).letters == (1, 2, -1)
        assert band_generator(2, 4, -1, 4).letters == (2, -3, -2)
        for n in range(2, 7):
            for i in range(1, n):
                for sign in (1, -1):
                    assert band_generator(i, i + 1, sign, n).letters == (sign * i,)

    def test_band_generator_range(self):
        with pytest.raises(GeneratorRangeError):
            band_generator(2, 2, 1, 3)
        with pytest.raises(GeneratorRangeError):
            band_generator(1, 4, 1, 3)

    def test_ab_tile_word(self):
        assert ab_tile_word(1, 4, 1, "ascending", 4).letters == (1, 2, 3)
        assert ab_tile_word(1, 2, 1, "ascending", 3) == ab_tile_word(1, 2, 1, "descending", 3)
        assert ab_tile_word(2, 4, -1, "descending", 5).letters == (-3, -2)
        assert inverse(ab_tile_word(1, 4, 1, "descending", 4)) == ab_tile_word(
            1, 4, -1, "ascending", 4
        )


class TestArtinAction:
    def test_images(self):
        x1, x2 = FreeGroupWord.generator(1), FreeGroupWord.generator(2)
        assert artin_action(BraidWord.identity(2)) == [x1, x2]
        assert artin_action(BraidWord(2, (1,))) == [x1 * x2 * ~x1, x1]
        assert artin_action(BraidWord(2, (1, -1))) == [x1, x2]

    def test_free_word_stays_reduced(self):
        with pytest.raises(ValueError):
            FreeGroupWord((1, -1))
        assert FreeGroupWord.reduced((1, 2, -2, -1)) == FreeGroupWord()

    def test_braid_relations(self):
        assert braid_eq(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
        assert braid_eq(BraidWord(4, (1, 3)), BraidWord(4, (3, 1)))
        assert not braid_eq(BraidWord(3, (1, 2)), BraidWord(3, (2, 1)))
        assert not braid_eq(BraidWord(2, (1, 1)), BraidWord.identity(2))

    def test_strand_mismatch(self):
        with pytest.raises(StrandMismatchError):
            braid_eq(BraidWord(2, ()), BraidWord(3, ()))

    def test_equivalence_respects_compose(self):
        u, v = BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2))
        tail = BraidWord(3, (-1, 2))
        assert braid_eq(compose(u, tail), compose(v, tail))
        assert braid_eq(compose(tail, u), compose(tail, v))

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_full_cycle_conjugates_band_generators(self, n):
        d = delta(n)
        for i in range(1, n - 1):
            for j in range(i + 1, n):
                for sign in (1, -1):
                    shifted = conjugate(band_generator(i, j, sign, n), d)
                    assert braid_eq(shifted, band_generator(i + 1, j + 1, sign, n))
