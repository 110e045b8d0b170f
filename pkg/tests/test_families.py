import itertools

import pytest

from starfree import families
from starfree.automata import Dfa, Idfa
from starfree.monotonic import check_order
from starfree.semigroup import generate
from starfree.transform import Transformation

T = Transformation.of


class TestCounts:
    def test_monotonic_counts(self):
        assert [families.monotonic_count(n) for n in range(1, 7)] == [
            1, 3, 10, 35, 126, 462,
        ]

    def test_partial_counts(self):
        assert [families.partial_monotonic_count(n) for n in range(1, 6)] == [
            2, 8, 38, 192, 1002,
        ]

    def test_nearly_counts(self):
        assert [families.nearly_monotonic_count(n) for n in range(2, 7)] == [
            3, 10, 41, 196, 1007,
        ]

    def test_aperiodic_counts(self):
        assert [families.aperiodic_count(n) for n in range(1, 7)] == [
            1, 3, 16, 125, 1296, 16807,
        ]

    def test_sum_form_agrees_up_to_twelve(self):
        for n in range(1, 13):
            families.monotonic_count(n)
            families.partial_monotonic_count(n)
            if n >= 2:
                families.nearly_monotonic_count(n)

    def test_short_aliases(self):
        assert families.f(3) == 10 and families.g(2) == 8 and families.h(3) == 10

    @pytest.mark.parametrize(
        "func,bad",
        [
            (families.monotonic_count, 0),
            (families.monotonic_count, 13),
            (families.nearly_monotonic_count, 1),
            (families.aperiodic_count, 0),
        ],
    )
    def test_range_errors(self, func, bad):
        with pytest.raises(ValueError):
            func(bad)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_counts_against_direct_enumeration(self, n):
        natural = tuple(range(1, n + 1))
        total = [
            Transformation(images)
            for images in itertools.product(range(1, n + 1), repeat=n)
        ]
        assert sum(check_order([t], natural) for t in total) == families.monotonic_count(n)
        partial = [
            Transformation(images)
            for images in itertools.product([None] + list(range(1, n + 1)), repeat=n)
        ]
        assert sum(
            check_order([t], natural) for t in partial
        ) == families.partial_monotonic_count(n)


class TestGenerators:
    def test_monotonic_three(self):
        got = {k: v.images for k, v in families.monotonic_generators(3).items()}
        assert got == {
            "a": (1, 1, 2), "b1": (2, 2, 3), "b2": (1, 3, 3), "c": (1, 2, 3),
        }

    def test_partial_three(self):
        got = {k: v.images for k, v in families.partial_monotonic_generators(3).items()}
        assert got == {
            "a": (None, 1, 2),
            "b1": (2, None, 3),
            "b2": (1, 3, None),
            "c1": (2, 2, 3),
            "c2": (1, 3, 3),
            "d": (1, 2, 3),
        }

    def test_partial_two(self):
        got = {k: v.images for k, v in families.partial_monotonic_generators(2).items()}
        assert got == {"a": (None, 1), "b1": (2, None), "c1": (2, 2), "d": (1, 2)}

    def test_completed_three(self):
        got = {k: v.images for k, v in families.completed_generators(3).items()}
        assert got == {
            "a": (3, 1, 3), "b1": (2, 3, 3), "c1": (2, 2, 3), "d": (1, 2, 3),
        }

    def test_completed_two(self):
        got = {k: v.images for k, v in families.completed_generators(2).items()}
        assert got == {"a": (2, 2), "d": (1, 2)}

    def test_nearly_three_adds_reset(self):
        got = families.nearly_monotonic_generators(3)
        assert got["e"] == T(1, 1, 1)
        assert list(got) == ["a", "b1", "c1", "d", "e"]

    def test_degenerate_smallest(self):
        assert {k: v.images for k, v in families.monotonic_generators(1).items()} == {
            "a": (1,), "c": (1,),
        }
        assert {k: v.images for k, v in families.partial_monotonic_generators(1).items()} == {
            "a": (None,), "d": (1,),
        }

    def test_build_types(self):
        assert isinstance(families.build("A", 2), Dfa)
        assert isinstance(families.build("B", 2), Idfa)
        assert isinstance(families.build("C", 2), Dfa)
        auto = families.build("C", 2)
        assert auto.initial == 1 and auto.finals == frozenset({1})

    def test_unknown_tag(self):
        with pytest.raises(ValueError):
            families.build("D", 3)

    def test_family_ranges(self):
        with pytest.raises(ValueError):
            families.build("Bprime", 1)
        with pytest.raises(ValueError):
            families.build("C", 1)


class TestVerifyFamily:
    @pytest.mark.parametrize(
        "tag,n,size",
        [("A", 3, 10), ("B", 2, 8), ("Bprime", 3, 8), ("C", 2, 3), ("C", 3, 10)],
    )
    def test_small_instances(self, tag, n, size):
        report = families.verify_family(tag, n)
        assert report.ok, report.summary()
        assert report.closure_size == size

    def test_alphabet_sizes(self):
        assert families.verify_family("A", 4).alphabet_size == 5
        assert families.verify_family("B", 4).alphabet_size == 8
        assert families.verify_family("Bprime", 4).alphabet_size == 6
        assert families.verify_family("C", 4).alphabet_size == 7

    def test_range_cap(self):
        with pytest.raises(ValueError):
            families.verify_family("A", 7)

    def test_nearly_two_elements(self):
        closure = generate(list(families.nearly_monotonic_generators(2).values()))
        assert {t.images for t in closure} == {(2, 2), (1, 2), (1, 1)}


class TestCompletionStructure:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_completed_closure_is_lifted_partial_closure(self, n):
        partial = generate(list(families.partial_monotonic_generators(n - 1).values()))
        completed = generate(list(families.completed_generators(n).values()))
        lifted = {families.complete_partial(t).images for t in partial}
        assert lifted == {t.images for t in completed}

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_nearly_closure_adds_missing_constants(self, n):
        completed = generate(list(families.completed_generators(n).values()))
        nearly = generate(list(families.nearly_monotonic_generators(n).values()))
        constants = {Transformation.constant(n, j) for j in range(1, n)}
        assert nearly.element_set == completed.element_set | constants
        assert Transformation.constant(n, n) in completed

    def test_complete_partial_examples(self):
        assert families.complete_partial(T(None, 1)) == T(3, 1, 3)
        assert families.complete_partial(T(1, 2)) == T(1, 2, 3)
