import random

import pytest

from quivalg import (Arrow, CrossCheckError, EventuallyPeriodic, INFINITY,
                     MonomialPresentation, NotQuadraticError, PathWord, Quiver,
                     RadicalConditionError, UndetectedPeriodicityError,
                     build_algebra, chain_cover_counts, complexity,
                     compare_resolution_routes, global_dimension,
                     oracle_cover_counts, projective_dimension, relation_chains,
                     resolution_minimality, resolution_sequence,
                     semisimple_sequence, syzygy_orbit)
from quivalg.generate import random_triple


def presentation(name, vertices, arrows, relations):
    q = Quiver(tuple(vertices), tuple(Arrow(*a) for a in arrows))
    return MonomialPresentation(name, q, tuple(PathWord(tuple(r)) for r in relations))


def seq(prefix, cycle=()):
    return EventuallyPeriodic(tuple(prefix), tuple(cycle))


# radical-square-zero double loop: syzygies double every degree, so the state
# never repeats and the resolution stays undecided within any bound
DOUBLING = presentation("doubling", ["x"],
                        [("u", "x", "x"), ("v", "x", "x")],
                        [("u", "u"), ("u", "v"), ("v", "u"), ("v", "v")])


class TestChains:
    def test_lambda2_degree_2(self, corpus):
        chains = relation_chains(corpus["lambda2"], "1", 2)
        assert [w.arrows for w in chains.chains] == [("a1", "a2")]

    def test_degree_0_is_trivial_chain(self, corpus):
        chains = relation_chains(corpus["lambda4"], "2", 0)
        assert [str(w) for w in chains.chains] == ["e(2)"]

    def test_lambda4_degree_3_empty(self, corpus):
        assert relation_chains(corpus["lambda4"], "2", 3).chains == ()

    def test_rejects_non_quadratic(self):
        cubic = presentation("cubic", "1", [("a", "1", "1")], [("a", "a", "a")])
        with pytest.raises(NotQuadraticError):
            relation_chains(cubic, "1", 2)


class TestResolutionSequences:
    @pytest.mark.parametrize("name,m", [("gamma1_1", 1), ("gamma1_2", 2),
                                        ("gamma1_3", 3)])
    def test_two_then_one_family(self, corpus, name, m):
        result = resolution_sequence(corpus[name], "1")
        assert result.sequence == seq([2] * m + [1])
        assert result.dimension == m

    def test_gamma2_constant_two(self, corpus):
        result = resolution_sequence(corpus["gamma2"], "1")
        assert result.sequence == seq([], [2])
        assert result.dimension == INFINITY

    def test_lambda1_constant_two(self, corpus):
        assert resolution_sequence(corpus["lambda1"], "1").sequence == seq([], [2])

    def test_lambda4(self, corpus):
        assert resolution_sequence(corpus["lambda4"], "2").sequence == seq([2, 3, 2])
        assert resolution_sequence(corpus["lambda4"], "1").sequence == seq([3, 2])

    def test_simple_projective(self, corpus):
        result = resolution_sequence(corpus["gamma1_1"], "2")
        assert result.sequence == seq([1]) and result.dimension == 0

    def test_truncation_marker(self):
        result = resolution_sequence(DOUBLING, "x")
        assert result.truncated and result.sequence is None
        assert result.entries[:4] == (3, 6, 12, 24)
        with pytest.raises(UndetectedPeriodicityError):
            result.dimension

    def test_entries_follow_chain_counts(self, corpus):
        from quivalg import cover_length
        for p in corpus.values():
            for v in p.quiver.vertices:
                result = resolution_sequence(p, v)
                counts = chain_cover_counts(p, v, len(result.entries) - 1)
                expected = tuple(sum(cover_length(p, w) * k for w, k in c.items())
                                 for c in counts)
                assert result.entries == expected


class TestSyzygyOrbit:
    def test_lambda3_immediately_periodic(self, corpus):
        orbit = syzygy_orbit(corpus["lambda3"], "2")
        assert (orbit.entry, orbit.period) == (0, 1)

    def test_lambda1_immediately_periodic(self, corpus):
        orbit = syzygy_orbit(corpus["lambda1"], "1")
        assert (orbit.entry, orbit.period) == (0, 1)

    def test_lambda4_terminates_through_projective(self, corpus):
        orbit = syzygy_orbit(corpus["lambda4"], "2")
        assert orbit.terminated
        assert orbit.states == ((("simple", "2"),), (("simple", "1"),),
                                (("projective", "2"),))

    def test_bound_exhaustion(self):
        orbit = syzygy_orbit(DOUBLING, "x", bound=6)
        assert orbit.truncated and len(orbit.states) == 7


class TestProjectiveDimension:
    def test_lambda4(self, corpus):
        assert projective_dimension(corpus["lambda4"], "1") == 1
        assert projective_dimension(corpus["lambda4"], "2") == 2

    def test_sink_is_zero(self, corpus):
        assert projective_dimension(corpus["gamma1_2"], "3") == 0

    def test_infinite(self, corpus):
        assert projective_dimension(corpus["lambda2"], "2") == INFINITY


class TestComplexity:
    def test_cases(self):
        assert complexity(seq([], [2])) == 1
        assert complexity(seq([2, 2, 1])) == 0
        assert complexity(seq([], [2, 3])) == 1


class TestSemisimple:
    def test_lambda4_both_simples(self, corpus):
        assert semisimple_sequence(corpus["lambda4"], {"1": 1, "2": 1}) == seq([5, 5, 2])

    def test_single_simple_matches_resolution(self, corpus):
        got = semisimple_sequence(corpus["lambda3"], {"1": 1})
        assert got == resolution_sequence(corpus["lambda3"], "1").sequence

    def test_lambda2_sum_of_cycles(self, corpus):
        assert semisimple_sequence(corpus["lambda2"], {"1": 1, "2": 1}) == seq([], [4])

    def test_requires_positive_multiplicity(self, corpus):
        with pytest.raises(ValueError):
            semisimple_sequence(corpus["lambda2"], {"1": 0})


class TestMinimality:
    def test_lambda4_r2_holds(self, corpus):
        assert resolution_minimality(corpus["lambda4"], 2).holds

    def test_lambda4_r1_fails_at_1(self, corpus):
        report = resolution_minimality(corpus["lambda4"], 1)
        assert not report.holds and report.witness == "1"
        row = next(r for r in report.rows if r.vertex == "1")
        assert (row.dimension, row.cover_length) == (1, 3)

    def test_semisimple_holds_for_all_r(self):
        p = presentation("points", "12", [], [])
        for r in (1, 2, 3):
            assert resolution_minimality(p, r).holds

    def test_r1_means_all_covers_thin(self, corpus, generated_algebras):
        # slack 1 holds exactly when every indecomposable projective has
        # length at most 2
        from quivalg import cover_length
        pool = list(corpus.values()) + [p for _, p in generated_algebras[:80]]
        for p in pool:
            expected = all(cover_length(p, v) <= 2 for v in p.quiver.vertices)
            assert resolution_minimality(p, 1).holds == expected


class TestGlobalDimension:
    def test_lambda4(self, corpus):
        report = global_dimension(corpus["lambda4"])
        assert report.value == 2 and not report.hereditary
        assert report.link_vertices == ("2",) and report.link_depth == 0

    def test_lambda1_infinite(self, corpus):
        assert global_dimension(corpus["lambda1"]).value == INFINITY

    def test_semisimple_zero(self):
        p = presentation("points", "12", [], [])
        report = global_dimension(p)
        assert report.value == 0 and report.hereditary

    def test_hereditary_path(self, corpus):
        report = global_dimension(corpus["gamma1_1"])
        assert report.value == 1 and report.hereditary

    def test_link_chain(self, corpus):
        # gamma1_3 has marked vertices 1 and 2 with an edge 1 -> 2
        report = global_dimension(corpus["gamma1_3"])
        assert report.value == 3
        assert report.link_vertices == ("1", "2") and report.link_depth == 1

    def test_requires_radical_condition(self):
        bad = presentation("bad", ["x", "y", "z", "w"],
                           [("a", "x", "y"), ("b", "x", "z"), ("c", "y", "w")],
                           [("a", "c")])
        with pytest.raises(RadicalConditionError):
            global_dimension(bad)


class TestRouteAgreement:
    def test_corpus_to_degree_12(self, corpus):
        for p in corpus.values():
            for v in p.quiver.vertices:
                compare_resolution_routes(p, v, 12)

    def test_oracle_matches_chains_even_off_condition(self):
        # branching syzygies: still quadratic monomial, so routes must agree
        p = presentation("branchy", "123",
                         [("a", "1", "2"), ("b", "2", "3"), ("c", "2", "2")],
                         [("a", "b"), ("a", "c"), ("c", "c"), ("c", "b")])
        for v in p.quiver.vertices:
            compare_resolution_routes(p, v, 10)

    def test_doubling_counts(self):
        counts = oracle_cover_counts(DOUBLING, "x", 4)
        assert [sum(c.values()) for c in counts] == [1, 2, 4, 8, 16]
        assert counts == chain_cover_counts(DOUBLING, "x", 4)


class TestStructureOnGeneratedAlgebras:
    def test_sequences_resolve_with_expected_shape(self, generated_algebras):
        for _, p in generated_algebras[:150]:
            for v in p.quiver.vertices:
                result = resolution_sequence(p, v)
                assert not result.truncated
                pd = result.dimension
                values = result.sequence
                if pd == INFINITY:
                    assert all(values.value(i) == 2
                               for i in range(1, len(values.prefix)
                                              + len(values.cycle) + 1))
                elif pd >= 2:
                    assert all(values.value(i) == 2 for i in range(1, int(pd) - 1))

    def test_global_dimension_cross_check_never_fires(self, generated_algebras):
        for _, p in generated_algebras[:150]:
            report = global_dimension(p)
            direct = max(projective_dimension(p, v) for v in p.quiver.vertices)
            assert report.value == direct
