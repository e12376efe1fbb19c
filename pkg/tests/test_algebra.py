import random

import pytest

from oracles import brute_paths, brute_total_dimension, plain
from quivalg import (Arrow, InfiniteDimensionalError, MonomialPresentation,
                     NotQuadraticError, PathWord, Quiver, build_algebra,
                     check_radicals, check_radicals_quadratic, cover_length,
                     finiteness, nonzero_paths, opposite, profiles,
                     projective_profile)
from quivalg.generate import random_presentation, random_triple


def presentation(name, vertices, arrows, relations):
    q = Quiver(tuple(vertices), tuple(Arrow(*a) for a in arrows))
    return MonomialPresentation(name, q, tuple(PathWord(tuple(r)) for r in relations))


# radical of the projective at x decomposes as S_y + S_z: neither projective
# nor simple, so the radical check fails exactly at x
BRANCHING = presentation("branching", ["x", "y", "z", "w"],
                         [("a", "x", "y"), ("b", "x", "z"), ("c", "y", "w")],
                         [("a", "c")])

FREE_LOOP = presentation("free_loop", ["1"], [("a1", "1", "1")], [])


class TestConstruction:
    def test_relations_are_canonicalized(self):
        p1 = presentation("p", "12", [("a", "1", "2"), ("b", "2", "1")],
                          [("a", "b"), ("b", "a")])
        p2 = presentation("p", "12", [("a", "1", "2"), ("b", "2", "1")],
                          [("b", "a"), ("a", "b")])
        assert p1 == p2

    def test_duplicate_relations_collapse(self):
        p = presentation("p", "1", [("a", "1", "1")], [("a", "a"), ("a", "a")])
        assert len(p.relations) == 1

    def test_short_relation_rejected(self):
        with pytest.raises(ValueError, match="shorter than two"):
            presentation("p", "1", [("a", "1", "1")], [("a",)])

    def test_non_composable_relation_rejected(self):
        with pytest.raises(ValueError, match="do not compose"):
            presentation("p", "12", [("b", "1", "2")], [("b", "b")])

    def test_reduced_set_enforced(self):
        with pytest.raises(ValueError, match="must be reduced"):
            presentation("p", "1", [("a", "1", "1")], [("a", "a"), ("a", "a", "a")])

    def test_quadratic_flag(self, corpus):
        assert all(p.is_quadratic for p in corpus.values())
        cubic = presentation("p", "1", [("a", "1", "1")], [("a", "a", "a")])
        assert not cubic.is_quadratic
        with pytest.raises(NotQuadraticError):
            check_radicals_quadratic(cubic)


class TestNonzeroPaths:
    def test_lambda4_vertex_1(self, corpus):
        words = nonzero_paths(corpus["lambda4"], "1")
        assert [str(w) for w in words] == ["e(1)", "b", "b*a2"]
        assert cover_length(corpus["lambda4"], "1") == 3

    def test_sink_has_only_trivial_path(self, corpus):
        assert [str(w) for w in nonzero_paths(corpus["gamma1_1"], "2")] == ["e(2)"]

    def test_lambda1(self, corpus):
        assert [str(w) for w in nonzero_paths(corpus["lambda1"], "1")] == ["e(1)", "a1"]

    def test_matches_brute_enumeration(self, corpus):
        for p in corpus.values():
            vertices, arrows, relations = plain(p)
            for v in vertices:
                expected = sorted(brute_paths(vertices, arrows, relations, v))
                got = sorted(w.arrows for w in nonzero_paths(p, v))
                assert got == expected

    def test_infinite_dimensional_raises(self):
        with pytest.raises(InfiniteDimensionalError) as exc:
            nonzero_paths(FREE_LOOP, "1")
        assert exc.value.cycle.arrows == ("a1",)

    def test_unknown_vertex(self, corpus):
        with pytest.raises(ValueError, match="unknown vertex"):
            nonzero_paths(corpus["lambda4"], "9")


class TestFiniteness:
    def test_lambda1_total_dimension(self, corpus):
        report = finiteness(corpus["lambda1"])
        assert report.finite and report.total_dimension == 2

    def test_lambda4_total_dimension(self, corpus):
        report = finiteness(corpus["lambda4"])
        assert report.finite and report.total_dimension == 5

    def test_free_loop_is_infinite(self):
        report = finiteness(FREE_LOOP)
        assert not report.finite
        assert report.cycle.arrows == ("a1",)

    def test_witness_cycle_survives_repetition(self):
        # two-step cycle where only one relation blocks: witness must avoid it
        p = presentation("p", "12",
                         [("u", "1", "2"), ("v", "2", "1"), ("w", "2", "2")],
                         [("w", "w")])
        report = finiteness(p)
        assert not report.finite
        word = report.cycle.arrows
        doubled = word + word
        vertices, arrows, relations = plain(p)
        assert all(doubled[i:i + 2] not in [tuple(r) for r in relations]
                   for i in range(len(doubled) - 1))

    def test_total_dimension_matches_brute_count(self, corpus):
        for p in corpus.values():
            assert finiteness(p).total_dimension == brute_total_dimension(p)


class TestProfiles:
    def test_lambda4_vertex_2(self, corpus):
        prof = projective_profile(corpus["lambda4"], "2")
        assert prof.length == 2
        assert prof.radical_simple and not prof.radical_projective
        (summand,) = prof.summands
        assert summand.kind == "simple" and summand.target == "1"
        assert prof.socle == ("1",)

    def test_lambda4_vertex_1(self, corpus):
        prof = projective_profile(corpus["lambda4"], "1")
        assert prof.length == 3
        assert prof.radical_projective and not prof.radical_simple
        (summand,) = prof.summands
        assert summand.kind == "projective" and summand.target == "2"
        assert summand.dimension == 2
        assert prof.socle == ("1",)

    def test_sink_profile(self, corpus):
        prof = projective_profile(corpus["gamma1_2"], "3")
        assert prof.length == 1 and prof.summands == () and prof.socle == ("3",)
        assert prof.radical_projective  # the zero radical is projective

    def test_branching_summands(self):
        prof = projective_profile(BRANCHING, "x")
        kinds = {s.arrow: s.kind for s in prof.summands}
        assert kinds == {"a": "simple", "b": "projective"}
        assert not prof.radical_projective and not prof.radical_simple

    def test_neither_simple_nor_projective_summand(self):
        # the module generated by a has basis {a, a*c}: dimension 2, but the
        # projective at y has dimension 3
        p = presentation("p", ["x", "y", "z", "w"],
                         [("a", "x", "y"), ("b", "y", "z"), ("c", "y", "w")],
                         [("a", "b")])
        prof = projective_profile(p, "x")
        (summand,) = prof.summands
        assert summand.kind == "other" and summand.dimension == 2


class TestRadicalCheck:
    def test_corpus_all_hold(self, corpus):
        for name, p in corpus.items():
            assert check_radicals(p).holds, name

    def test_hereditary_holds(self):
        p = presentation("path", "123", [("a", "1", "2"), ("b", "2", "3")], [])
        assert check_radicals(p).holds

    def test_branching_fails_at_x(self):
        verdict = check_radicals(BRANCHING)
        assert not verdict.holds and verdict.witness == "x"

    def test_total_dimension_reported(self, corpus):
        assert check_radicals(corpus["lambda4"]).total_dimension == 5

    def test_infinite_dimensional_raises(self):
        with pytest.raises(InfiniteDimensionalError):
            check_radicals(FREE_LOOP)


class TestQuadraticCriterion:
    def test_lambda2(self, corpus):
        report = check_radicals_quadratic(corpus["lambda2"])
        assert report.holds
        assert report.relation_sources == ("1", "2")

    def test_branching_fails_unique_exit(self):
        report = check_radicals_quadratic(BRANCHING)
        assert not report.holds
        assert not report.unique_exit and report.unique_exit_witness == "x"

    def test_free_loop_fails_cycle_cover(self):
        report = check_radicals_quadratic(FREE_LOOP)
        assert not report.holds
        assert report.relation_sources == ()
        assert not report.cycles_covered and report.cycle_witness is not None

    def test_saturation_failure(self):
        # unique arrow out of the relation source, but one composition survives
        p = presentation("p", "123",
                         [("a", "1", "2"), ("b", "2", "3"), ("c", "2", "2")],
                         [("a", "b")])
        report = check_radicals_quadratic(p)
        assert not report.saturated and report.saturated_witness == ("a", "c")

    def test_agrees_with_profile_route_exhaustively(self):
        # small exhaustive sweep; the acceptance suite runs the full one
        from quivalg.generate import (arrow_layouts, mask_is_finite,
                                      presentation_from_mask)
        checked = 0
        for names, arrows, composable in arrow_layouts(2, 3):
            for mask in range(1 << len(composable)):
                if not mask_is_finite(arrows, composable, mask):
                    continue
                p = presentation_from_mask(names, arrows, composable, mask)
                assert check_radicals(p).holds == check_radicals_quadratic(p).holds
                checked += 1
        assert checked > 1000

    def test_agrees_on_random_instances(self):
        rng = random.Random(5)
        done = 0
        while done < 150:
            p = random_presentation(rng, rng.randint(2, 5), rng.randint(0, 7))
            if not finiteness(p).finite:
                continue
            assert check_radicals(p).holds == check_radicals_quadratic(p).holds
            done += 1


class TestOpposite:
    def test_lambda2_relations(self, corpus):
        opp = opposite(corpus["lambda2"])
        assert {a.name: (a.source, a.target) for a in opp.quiver.arrows} == {
            "a1": ("2", "1"), "a2": ("2", "2")}
        assert sorted(r.arrows for r in opp.relations) == [("a2", "a1"), ("a2", "a2")]

    def test_involution(self, corpus):
        for p in corpus.values():
            assert opposite(opposite(p)) == p

    def test_lambda4_opposite_satisfies_radical_condition(self, corpus):
        assert check_radicals(opposite(corpus["lambda4"])).holds

    def test_lambda2_opposite_fails(self, corpus):
        assert not check_radicals(opposite(corpus["lambda2"])).holds


class TestStructuralInvariants:
    """Consequences of the radical condition, exercised on random instances."""

    def _random_algebras(self, count, seed):
        rng = random.Random(seed)
        for i in range(count):
            yield build_algebra(random_triple(rng, rng.randint(1, 7),
                                              rng.randint(0, 9), name=f"r{i}"))

    def test_two_element_nonhereditary_projective_has_unique_exit(self):
        for p in self._random_algebras(120, 31):
            for v, prof in profiles(p).items():
                if prof.length == 2 and not prof.radical_projective:
                    assert len(p.quiver.outgoing[v]) == 1

    def test_nonprojective_socle_entries_are_radicals(self):
        # every nonprojective simple inside a socle is the radical of some
        # two-element projective
        for p in self._random_algebras(120, 32):
            profs = profiles(p)
            covered = {prof.summands[0].target
                       for prof in profs.values()
                       if prof.length == 2 and not prof.summands[0].projective}
            for prof in profs.values():
                for y in prof.socle:
                    if profs[y].length > 1:
                        assert y in covered

    def test_cover_lengths_sum_to_brute_path_count(self):
        for p in self._random_algebras(40, 33):
            assert finiteness(p).total_dimension == brute_total_dimension(p)
