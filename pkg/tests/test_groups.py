import itertools

import pytest
from hypothesis import given, settings, strategies as st

from regpoly.construction import build_generators, build_group
from regpoly.errors import ClosureExceedsCap, DimensionError, NotASubgroup, OrderExceedsCap
from regpoly.gf2 import Gf2Matrix, Gf2Vector
from regpoly.groups import (AffineMap, DihedralElement, Permutation, bfs_words, closure, compose,
                            coset_closure_bound, coset_decomposition, coset_labels, element_order,
                            translation_subgroup, trivial_group)

from _support import nn_system


def random_element(n, word):
    gens = build_generators(n).as_list()
    g = gens[0].identity()
    for k in word:
        g = g * gens[k]
    return g


class TestAffine:
    def test_translations_add(self):
        t = AffineMap.translation_by(Gf2Vector.from_list([1, 0, 1]))
        s = AffineMap.translation_by(Gf2Vector.from_list([1, 1, 0]))
        assert compose(t, s) == AffineMap.translation_by(Gf2Vector.from_list([0, 1, 1]))

    def test_apply_left_first(self):
        f, g, _ = build_generators(4)
        w = Gf2Vector.from_list([1, 1, 0])
        assert (f * g)(w) == g(f(w))

    def test_rho0_rho2_is_translation_by_u(self):
        r0, _, r2 = build_generators(3)
        p = compose(r0, r2)
        assert p.is_translation()
        assert p.translation.to_list() == [0, 1]

    def test_rho1_rho2_cubed_n3(self):
        _, r1, r2 = build_generators(3)
        assert ((r1 * r2) ** 3).is_identity()

    def test_identity_and_inverse(self):
        f = random_element(6, [0, 1, 2, 1, 0, 2, 1])
        assert compose(f, f.identity()) == f
        assert compose(f, f.inverse()).is_identity()
        assert (f ** -1) == f.inverse()

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            build_generators(3).rho0 * build_generators(4).rho0

    def test_singular_rejected(self):
        with pytest.raises(ValueError):
            AffineMap(Gf2Matrix.zeros(2))

    def test_frame_roundtrip(self):
        f = random_element(7, [2, 1, 0, 1, 2, 0, 1, 2])
        assert f.from_frame(f.frame()) == f

    def test_key_is_linear_rows_then_translation(self):
        r2 = build_generators(3).rho2
        assert r2.key == r2.linear.rows + (r2.translation.bits,)

    def test_associative_exhaustive_n3(self):
        elems = build_group(3).elements
        for a, b, c in itertools.product(elems, repeat=3):
            assert (a * b) * c == a * (b * c)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(4, 10), st.lists(st.lists(st.integers(0, 2), max_size=12), min_size=3, max_size=3))
    def test_associative_random(self, n, words):
        a, b, c = (random_element(n, w) for w in words)
        assert (a * b) * c == a * (b * c)


class TestDihedral:
    @pytest.mark.parametrize("n", [3, 4, 7, 12])
    def test_presentation(self, n):
        h0, h1 = DihedralElement.h0(n), DihedralElement.h1(n)
        assert (h0 * h0).is_identity() and (h1 * h1).is_identity()
        assert element_order(h0 * h1) == n

    @given(st.integers(1, 20), st.data())
    def test_flips_are_involutions(self, n, data):
        r = data.draw(st.integers(0, n - 1))
        f = DihedralElement(n, r, True)
        assert (f * f).is_identity()
        g = DihedralElement(n, data.draw(st.integers(0, n - 1)), data.draw(st.booleans()))
        assert (g * g.inverse()).is_identity()
        assert g.from_frame(g.frame()) == g

    def test_closure_order(self):
        assert closure([DihedralElement.h0(9), DihedralElement.h1(9)]).order == 18


class TestOrders:
    def test_identity_order(self):
        assert element_order(build_generators(5).rho0.identity()) == 1

    @pytest.mark.parametrize("n", [3, 5, 8, 11])
    def test_rho0_rho2(self, n):
        r0, _, r2 = build_generators(n)
        assert element_order(r0 * r2) == 2

    def test_rho1_rho2_n7(self):
        _, r1, r2 = build_generators(7)
        assert element_order(r1 * r2) == 7

    def test_cap(self):
        _, r1, r2 = build_generators(7)
        with pytest.raises(OrderExceedsCap):
            element_order(r1 * r2, cap=6)
        with pytest.raises(ValueError):
            element_order(r1, cap=0)


class TestClosure:
    def test_identity_only(self):
        assert trivial_group(build_generators(4).rho0).order == 1
        assert closure([build_generators(4).rho0.identity()]).order == 1

    def test_nn_group_n3(self):
        assert closure(build_generators(3).as_list()).order == 24

    def test_dihedral_part_n5(self):
        g = build_generators(5)
        assert closure([g.rho0, g.rho1]).order == 10

    def test_cap(self):
        with pytest.raises(ClosureExceedsCap):
            closure(build_generators(5).as_list(), cap=100)

    def test_mixed_families_rejected(self):
        with pytest.raises(DimensionError):
            closure([DihedralElement.h0(3), Permutation([1, 0])])

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            closure([])

    def test_table_is_closed(self):
        g = build_group(4)
        keys = g.keys()
        assert len(keys) == g.order
        for e in g.elements[:16]:
            assert e.inverse().key in keys
            for h in g.elements[::7]:
                assert (e * h).key in keys

    def test_right_cayley_columns(self):
        g = build_group(4)
        for k, col in enumerate(g.right):
            for i in range(0, g.order, 5):
                assert g.elements[col[i]] == g.elements[i] * g.generators[k]

    def test_bfs_words_evaluate(self):
        g = build_group(3)
        for i, w in enumerate(bfs_words(g)):
            assert g.word_index(w) == i


class TestCosets:
    def test_whole_group_single_coset(self):
        g = build_group(3)
        assert len(coset_decomposition(g, g)) == 1

    def test_vertex_cosets_n3(self):
        sys = nn_system(3)
        sub = closure([sys.generators[1], sys.generators[2]])
        assert sub.order == 6
        assert len(coset_decomposition(sys.group, sub)) == 4

    def test_rho0_rho2_cosets_n4(self):
        sys = nn_system(4)
        sub = closure([sys.generators[0], sys.generators[2]])
        assert sub.order == 4
        cosets = coset_decomposition(sys.group, sub)
        assert len(cosets) == 16
        assert all(len(c) == 4 for c in cosets)
        assert set().union(*(c.members for c in cosets)) == set(range(64))

    def test_representatives_are_least_keys(self):
        sys = nn_system(4)
        sub = closure([sys.generators[0], sys.generators[1]])
        elems = sys.group.elements
        cosets = coset_decomposition(sys.group, sub)
        for c in cosets:
            assert c.key == min(elems[i].key for i in c.members)
        assert [c.key for c in cosets] == sorted(c.key for c in cosets)

    def test_not_a_subgroup(self):
        g = build_group(3)
        other = build_group(4).elements[:2]
        with pytest.raises(NotASubgroup):
            coset_labels(g, other)
        # a non-closed subset of the group overlaps its own translates
        with pytest.raises(NotASubgroup):
            coset_labels(g, g.elements[:3])

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_partition_property(self, n):
        sys = nn_system(n)
        for ids in [(0,), (1, 2), (0, 2)]:
            sub = closure([sys.generators[i] for i in ids])
            cosets = coset_decomposition(sys.group, sub)
            seen = set()
            for c in cosets:
                assert len(c) == sub.order
                assert not seen & c.members
                seen |= c.members
            assert len(seen) == sys.group.order


def n_subgroup(sys, n):
    r0, r1, r2 = sys.generators
    return [((r1 * r2) ** k) * ((r0 * r1) ** k) for k in range(1, n)]


class TestClosureBound:
    def test_trivial_subgroup(self):
        g = closure([DihedralElement.h0(5), DihedralElement.h1(5)])
        closed, bound = coset_closure_bound(g.generators, trivial_group(g.elements[0]), g.elements)
        assert closed and bound == 10

    @pytest.mark.parametrize("n", [3, 4])
    def test_nn_bound(self, n):
        sys = nn_system(n)
        r0, r1, _ = sys.generators
        nsub = closure(n_subgroup(sys, n))
        dihedral = closure([r0 * r1, r0]).elements
        closed, bound = coset_closure_bound(sys.generators, nsub, dihedral)
        assert closed and bound == 2 ** n * n == sys.group.order

    def test_escape_detected(self):
        sys = nn_system(4)
        r0, r1, _ = sys.generators
        nsub = closure(n_subgroup(sys, 4))
        closed, _ = coset_closure_bound(sys.generators, nsub, closure([r0 * r1, r0]).elements[:4])
        assert not closed

    def test_duplicate_cosets_rejected(self):
        sys = nn_system(3)
        nsub = closure(n_subgroup(sys, 3))
        with pytest.raises(ValueError):
            coset_closure_bound(sys.generators, nsub, [nsub.elements[0], nsub.elements[1]])


class TestTranslations:
    @pytest.mark.parametrize("n", range(3, 9))
    def test_elementary_abelian(self, n):
        g = build_group(n)
        idx = translation_subgroup(g)
        assert len(idx) == 2 ** (n - 1)
        elems = [g.elements[i] for i in idx]
        keys = {e.key for e in elems}
        for e in elems:
            if not e.is_identity():
                assert element_order(e) == 2
        for a in elems[:8]:
            for b in elems:
                assert (a * b).key in keys


class TestPermutation:
    def test_from_cycles(self):
        p = Permutation.from_cycles(4, (0, 1, 2))
        assert p.images == (1, 2, 0, 3)
        assert element_order(p) == 3

    def test_product_convention(self):
        p = Permutation.from_cycles(3, (0, 1))
        q = Permutation.from_cycles(3, (1, 2))
        assert (p * q)[0] == q[p[0]]

    def test_invalid(self):
        with pytest.raises(ValueError):
            Permutation([0, 0, 1])

    def test_symmetric_group_order(self):
        gens = [Permutation.from_cycles(5, (i, i + 1)) for i in range(4)]
        assert closure(gens).order == 120
