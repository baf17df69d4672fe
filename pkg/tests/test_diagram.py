from braid_bounds.bounds import theorem_bounds
from braid_bounds.braid_core import BraidWord, conjugate, exchange_move, free_reduce
from braid_bounds.diagram import bennequin_chi, closure, seifert, strand_valences


def test_closure(trefoil, figure_eight):
    d = closure(trefoil)
    assert (d.crossing_count, d.component_count, d.is_knot) == (3, 1, True)
    d = closure(BraidWord.identity(3))
    assert (d.crossing_count, d.component_count) == (0, 3)
    d = closure(figure_eight)
    assert (d.crossing_count, d.component_count) == (4, 1)
    assert d.word == figure_eight


def test_closure_json(figure_eight):
    assert closure(figure_eight).to_json() == {
        "strands": 3,
        "crossings": [[1, 1], [2, -1], [1, 1], [2, -1]],
        "components": 1,
    }


def test_seifert(trefoil, figure_eight):
    s = seifert(closure(trefoil))
    assert (s.circles, s.crossings, s.chi) == (2, 3, -1)
    s = seifert(closure(BraidWord.identity(3)))
    assert (s.circles, s.crossings, s.chi) == (3, 0, 3)
    assert seifert(closure(figure_eight)).chi == -1


def test_bennequin_chi(trefoil):
    assert bennequin_chi(trefoil) == -1
    for q in range(1, 10):
        assert bennequin_chi(BraidWord(2, (1,) * q)) == 2 - q
    assert bennequin_chi(BraidWord(3, (1, 2))) == 1
    assert bennequin_chi(BraidWord(3, (1, -1, 2))) == 2


def test_strand_valences():
    assert strand_valences(BraidWord(3, (1, 2))) == (1, 2, 1)
    assert strand_valences(BraidWord(2, (1, 1, 1))) == (3, 3)
    assert strand_valences(BraidWord.identity(2)) == (0, 0)


def test_seifert_matches_bennequin_on_reduced_words(make_word):
    for _ in range(100):
        w = make_word(5, 12)
        assert seifert(closure(w)).chi == bennequin_chi(w)
        assert seifert(closure(w)).chi <= w.strands


def test_components_stable_under_moves(make_word):
    for _ in range(100):
        w = make_word(4, 10, reduced=False)
        c = make_word(4, 6, reduced=False)
        count = closure(w).component_count
        assert closure(free_reduce(w)).component_count == count
        assert closure(conjugate(w, c)).component_count == count
        for moved in exchange_move(w):
            assert closure(moved).component_count == count


def test_lower_bound_evaluated_on_the_diagram(make_word):
    for _ in range(100):
        w = make_word(4, 12)
        chi = bennequin_chi(w)
        if -chi + w.strands <= 0:
            continue
        assert theorem_bounds(chi, w.strands).lower == len(w)
