import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import any_transformations
from starfree import families, gallery
from starfree.automata import to_dfa
from starfree.monotonic import check_order, classify, find_monotonic_order
from starfree.semigroup import generate
from starfree.transform import Transformation

T = Transformation.of


def brute_force(ts):
    n = ts[0].n
    for perm in itertools.permutations(range(1, n + 1)):
        if check_order(ts, perm):
            return perm
    return None


class TestCheckOrder:
    def test_natural_order_on_monotonic_maps(self):
        sg = generate(list(families.monotonic_generators(3).values()))
        assert check_order(list(sg.elements), (1, 2, 3))

    def test_transposition_never_monotonic(self):
        assert not check_order([T(2, 1)], (1, 2))
        assert not check_order([T(2, 1)], (2, 1))

    def test_dead_state_letters_natural(self):
        assert check_order([T(1, 3, 3, 3), T(1, 1, 4, 4)], (1, 2, 3, 4))

    def test_rejects_bad_permutation(self):
        with pytest.raises(ValueError):
            check_order([T(1, 2)], (1, 1))

    def test_partial_checks_domain_only(self):
        assert check_order([T(None, 1), T(2, None)], (1, 2))


class TestFindOrder:
    def test_incomplete_letters(self):
        witness = find_monotonic_order([T(None, 1), T(2, None), T(2, 2)])
        assert witness == (1, 2)

    def test_identity_any_order(self):
        assert find_monotonic_order([Transformation.identity(4)]) == (1, 2, 3, 4)

    def test_completed_letters_admit_none(self):
        assert find_monotonic_order([T(2, 3, 3), T(3, 1, 3), T(2, 2, 3)]) is None

    def test_needs_nonnatural_order(self):
        # the operands of the union counterexample are ordered 3 < 2 < 1 < 4
        ts = [T(2, 3, 3, 4), T(4, 2, 2, 4)]
        witness = find_monotonic_order(ts)
        assert witness is not None
        assert check_order(ts, witness)
        assert not check_order(ts, (1, 2, 3, 4))

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError):
            find_monotonic_order([])

    def test_size_cap(self):
        with pytest.raises(ValueError):
            find_monotonic_order([Transformation.identity(11)])

    @settings(max_examples=150)
    @given(
        st.integers(2, 4).flatmap(
            lambda n: st.lists(any_transformations(n), min_size=1, max_size=3)
        )
    )
    def test_agrees_with_brute_force(self, ts):
        witness = find_monotonic_order(ts)
        expected = brute_force(ts)
        assert (witness is None) == (expected is None)
        if witness is not None:
            assert check_order(ts, witness)

    def test_monotonicity_closed_under_composition(self):
        for tag, n in (("A", 3), ("A", 4), ("B", 3), ("B", 4)):
            letters = list(families.family_letters(tag, n).values())
            order = find_monotonic_order(letters)
            assert order is not None
            assert check_order(list(generate(letters).elements), order)


class TestClassify:
    def test_completed_two_state(self):
        c = classify(gallery.completed_two_state())
        assert c.flags() == (False, True, True, True)
        assert c.partial_order is not None

    def test_reset_letter_breaks_partial(self):
        c = classify(gallery.completed_two_state_with_reset())
        assert c.flags() == (False, False, True, True)
        assert c.removed_letters == ("d",)

    def test_dead_state_monotonic(self):
        c = classify(gallery.monotonic_with_dead_state())
        assert c.monotonic and c.monotonic_order is not None

    def test_star_free_only(self):
        assert classify(gallery.star_free_not_nearly_monotonic()).flags() == (
            False, False, False, True,
        )

    def test_concat_quotient_star_free_only(self):
        assert classify(gallery.concat_counterexample()).flags() == (
            False, False, False, True,
        )

    def test_star_of_double_a_not_star_free(self):
        from starfree.langops import star

        assert classify(star(gallery.double_a())).flags() == (
            False, False, False, False,
        )

    def test_nearly_monotonic_family(self):
        c = classify(families.build("C", 3))
        assert c.flags() == (False, False, True, True)
        assert c.removed_letters == ("e",)

    def test_monotonic_family(self):
        for n in (1, 2, 3, 4):
            assert classify(families.build("A", n)).monotonic

    def test_all_letters_constant(self):
        dfa = gallery.concat_operand_one()
        from starfree.automata import restrict_letters

        only_constant = restrict_letters(dfa, ["a"])
        c = classify(only_constant)
        assert c.nearly_monotonic and c.monotonic

    @pytest.mark.parametrize(
        "builder",
        [
            gallery.completed_two_state,
            gallery.completed_two_state_with_reset,
            gallery.monotonic_with_dead_state,
            gallery.star_free_not_nearly_monotonic,
            gallery.concat_counterexample,
            gallery.union_operand_one,
            gallery.words_containing_a,
            gallery.a_after_last_b,
            gallery.double_a,
        ],
    )
    def test_chain_invariant_fixtures(self, builder):
        m, pm, nm, sf = classify(builder()).flags()
        assert not (m and not pm)
        assert not (pm and not nm)
        assert not (nm and not sf)

    def test_chain_invariant_families(self):
        automata = [families.build("A", n) for n in range(1, 5)]
        automata += [families.build("Bprime", n) for n in range(2, 5)]
        automata += [families.build("C", n) for n in range(2, 5)]
        automata += [to_dfa(families.build("B", n)) for n in range(1, 5)]
        for dfa in automata:
            m, pm, nm, sf = classify(dfa).flags()
            assert not (m and not pm)
            assert not (pm and not nm)
            assert not (nm and not sf)

    def test_completed_family_partially_not_monotonic(self):
        for n in (3, 4):
            c = classify(families.build("Bprime", n))
            assert c.flags() == (False, True, True, True)
