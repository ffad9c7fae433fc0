import pytest

from wordrep.graphs import Graph, generate
from wordrep.orientations import (
    CyclicOrientationError,
    Orientation,
    ShortcutWitness,
    find_k_shortcut_free_orientation,
    find_semi_transitive_orientation,
    find_shortcut,
    find_transitive_orientation,
    is_acyclic,
    is_semi_transitive_orientation,
    is_transitive_orientation,
    is_word_representable,
    orient_by_order,
)

from .conftest import connected_graphs, random_graph
from .oracles import (
    all_orientations,
    brute_k_shortcut_free,
    brute_semi_transitive,
    brute_transitive,
    has_shortcut_by_paths,
    oriented_acyclic,
    oriented_transitive,
)


def directed_cycle(n):
    g = generate("cycle", n)
    succ = [0] * n
    for i in range(n):
        succ[i] = 1 << ((i + 1) % n)
    return Orientation(g, tuple(succ))


class TestOrientation:
    def test_validation(self):
        g = generate("path", 3)
        with pytest.raises(ValueError):
            Orientation(g, (0b010, 0, 0))  # edge 2-3 left unoriented
        with pytest.raises(ValueError):
            Orientation(g, (0b110, 0, 0))  # arc without an edge
        with pytest.raises(ValueError):
            Orientation(g, (0b010, 0b001, 0b010))  # edge oriented both ways

    def test_arcs_and_text(self):
        o = orient_by_order(generate("path", 3), [2, 1, 3])
        assert o.arcs() == [(2, 1), (2, 3)]
        assert o.arc_text() == "2->1,2->3"
        assert o.has_arc(2, 3) and not o.has_arc(3, 2)

    def test_orient_by_order_is_acyclic(self, rng):
        for _ in range(50):
            n = rng.randint(2, 8)
            g = random_graph(rng, n)
            order = list(range(1, n + 1))
            rng.shuffle(order)
            assert is_acyclic(orient_by_order(g, order))

    def test_directed_cycle_not_acyclic(self):
        assert not is_acyclic(directed_cycle(4))
        with pytest.raises(CyclicOrientationError):
            find_shortcut(directed_cycle(4))


class TestFindShortcut:
    def shortcut_example(self):
        g = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)])
        return orient_by_order(g, [1, 2, 3, 4])

    def test_textbook_shortcut(self):
        w = find_shortcut(self.shortcut_example())
        assert w is not None
        assert w.path == (1, 2, 3, 4)
        assert w.missing_pair == (2, 4)
        w.validate(self.shortcut_example())

    def test_transitive_tournament_has_none(self):
        o = orient_by_order(generate("complete", 5), [1, 2, 3, 4, 5])
        assert find_shortcut(o) is None
        assert find_shortcut(o, 3) is None

    def test_fixed_length(self):
        o = self.shortcut_example()
        assert find_shortcut(o, 3) is not None
        assert find_shortcut(o, 4) is None  # only 4 vertices, no 5-vertex path

    def test_length_validation(self):
        o = self.shortcut_example()
        with pytest.raises(ValueError):
            find_shortcut(o, 2)
        with pytest.raises(ValueError):
            find_shortcut(o, "three")

    def test_witness_validate_rejects_garbage(self):
        o = self.shortcut_example()
        with pytest.raises(AssertionError):
            ShortcutWitness((1, 2, 3), (1, 3)).validate(o)

    def test_matches_path_enumeration_oracle(self, rng):
        checked = 0
        while checked < 40:
            g = random_graph(rng, rng.randint(4, 5))
            if not 4 <= g.edge_count() <= 8:
                continue
            checked += 1
            for o in all_orientations(g):
                if not oriented_acyclic(o):
                    continue
                w = find_shortcut(o)
                assert (w is not None) == has_shortcut_by_paths(o)
                if w is not None:
                    w.validate(o)
                for k in (3, 4):
                    wk = find_shortcut(o, k)
                    assert (wk is not None) == has_shortcut_by_paths(o, k)
                    if wk is not None:
                        assert len(wk.path) == k + 1
                        wk.validate(o)


class TestSemiTransitive:
    def test_wheel5_has_none(self):
        assert find_semi_transitive_orientation(generate("wheel", 5)) is None
        assert not is_word_representable(generate("wheel", 5))

    def test_small_families_have_one(self):
        for family, size in [("cycle", 5), ("cycle", 7), ("path", 6),
                             ("complete", 5), ("petersen", 0), ("prism", 3),
                             ("crown", 4), ("wheel", 6)]:
            o = find_semi_transitive_orientation(generate(family, size))
            assert o is not None, (family, size)
            assert is_semi_transitive_orientation(o)

    def test_matches_brute_force_n5(self):
        for n in (2, 3, 4, 5):
            for g in connected_graphs(n):
                o = find_semi_transitive_orientation(g)
                assert (o is not None) == brute_semi_transitive(g)
                if o is not None:
                    assert is_semi_transitive_orientation(o)


class TestKShortcutFree:
    def test_k_validation(self):
        with pytest.raises(ValueError):
            find_k_shortcut_free_orientation(generate("path", 4), 2)

    def test_wheel5_not_3_shortcut_free(self):
        assert find_k_shortcut_free_orientation(generate("wheel", 5), 3) is None

    def test_semi_transitive_implies_all_k(self):
        g = generate("prism", 3)
        for k in (3, 4, 5, 6):
            o = find_k_shortcut_free_orientation(g, k)
            assert o is not None
            assert find_shortcut(o, k) is None

    def test_matches_brute_force_n5(self):
        for n in (4, 5):
            for g in connected_graphs(n):
                for k in (3, 4):
                    o = find_k_shortcut_free_orientation(g, k)
                    assert (o is not None) == brute_k_shortcut_free(g, k), (g, k)
                    if o is not None:
                        assert is_acyclic(o)
                        assert find_shortcut(o, k) is None


class TestTransitive:
    def test_examples(self):
        assert find_transitive_orientation(generate("cycle", 5)) is None
        assert find_transitive_orientation(generate("cycle", 6)) is not None
        assert find_transitive_orientation(generate("j4", 0)) is None
        o = find_transitive_orientation(generate("crown", 4))
        assert o is not None and is_transitive_orientation(o)

    def test_is_transitive_matches_oracle(self, rng):
        for _ in range(30):
            g = random_graph(rng, 5)
            for o in all_orientations(g):
                assert is_transitive_orientation(o) == oriented_transitive(o)

    def test_matches_brute_force_n5(self):
        for n in (2, 3, 4, 5):
            for g in connected_graphs(n):
                o = find_transitive_orientation(g)
                assert (o is not None) == brute_transitive(g)
                if o is not None:
                    assert is_transitive_orientation(o)
