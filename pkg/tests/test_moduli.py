import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from strategies import as_strings, presentations
from monopoint import (
    Alphabet,
    BudgetExceeded,
    CharacteristicSturmian,
    EventuallyPeriodic,
    Exactness,
    FactorSet,
    NotProlongable,
    OracleAlgebra,
    PointModuleTrunc,
    Presentation,
    SturmianCheckFailed,
    SubsetSeq,
    Variant,
    components,
    count_components,
    dim_profile,
    factors,
    fibonacci,
    irreducibility_report,
    is_coherent,
    is_prolongable_seq,
    p1_report,
    thue_morse,
    verify_point_module,
)
from monopoint.moduli import nilpotent_power_vanishes

P = Presentation.parse
XY = P("xy", ["xy"])
TRUNC = P(["x1", "x2", "x3", "x4"], ["x1x2", "x1x4", "x2x1", "x2x3"])
S = SubsetSeq.of


def canon(seqs):
    """Sequences of letter sets as sorted tuples of sorted strings."""
    return sorted(tuple("".join(sorted(c)) for c in seq) for seq in seqs)


def as_oracle_sets(cs):
    a = cs.alphabet
    return canon([[a.symbols[i] for i in c] for c in comp.sets] for comp in cs.components)


class TestSubsetSeq:
    def test_basics(self):
        s = S([{0, 1}, {1}])
        assert s.n == 1 and s.dimension == 1 and not s.is_word()
        assert S([{1}, {1}]).leq(s) and not s.leq(S([{1}, {1}]))
        assert sorted(s.words()) == [(0, 1), (1, 1)]

    def test_empty_set_rejected(self):
        with pytest.raises(Exception):
            S([{0}, set()])

    def test_json(self):
        a = Alphabet(("x", "y"))
        s = S([{0, 1}, {0}])
        assert s.to_json(a) == [["x", "y"], ["x"]]
        assert SubsetSeq.from_json(a, s.to_json(a)) == s


class TestCoherence:
    def test_examples(self):
        assert is_coherent(XY, S([{0, 1}, {0}]))
        assert not is_coherent(XY, S([{0}, {0, 1}]))
        assert is_coherent(Presentation.free(2), S([{0, 1}] * 5))

    def test_oracle(self):
        f = factors(fibonacci(), 8)
        assert is_coherent(f, S([{0, 1}, {0}, {1}]))
        assert not is_coherent(f, S([{1}, {1}]))

    def test_prolongable(self):
        v = is_prolongable_seq(XY, S([{0, 1}]))
        assert v.value and v.exactness is Exactness.EXACT
        assert not is_prolongable_seq(P("xy", ["xx", "xy"]), S([{0}])).value
        assert is_prolongable_seq(Presentation.free(2), S([{0, 1}] * 4)).value

    @settings(max_examples=60)
    @given(presentations(max_m=3, max_d=3, max_relations=5),
           st.lists(st.integers(1, 7), min_size=1, max_size=4))
    def test_agrees_with_naive(self, p, raw):
        letters, forbidden = as_strings(p)
        masks = tuple(((c - 1) % ((1 << p.m) - 1)) + 1 for c in raw)
        s = SubsetSeq(masks)
        seq = [set(p.alphabet.symbols[i] for i in c) for c in s.sets]
        assert is_coherent(p, s) == oracles.coherent(forbidden, seq)
        assert is_prolongable_seq(p, s).value == oracles.prolongable(letters, forbidden, seq)


class TestComponents:
    def test_xy(self):
        cs = components(XY, 2, "point")
        assert cs.count == 3
        assert all(c.dimension == 1 for c in cs.components)

    def test_free(self):
        for variant in ("point", "truncated"):
            cs = components(Presentation.free(2), 3, variant)
            assert cs.components == (S([{0, 1}] * 4),) and cs.dimension == 4

    def test_trunc_example_counts(self):
        # frozen from tests/oracles.py (pairwise domination over all sequences)
        expected = {2: (7, 10), 3: (17, 24), 4: (41, 58)}
        for n, (coh, pro) in expected.items():
            assert count_components(TRUNC, n, "truncated")[0] == coh
            assert count_components(TRUNC, n, "point")[0] == pro

    def test_trunc_example_has_non_prolongable_maximal(self):
        for n in (2, 3, 4):
            cs = components(TRUNC, n, "truncated")
            assert any(not is_prolongable_seq(TRUNC, c).value for c in cs.components)

    def test_xy_counts(self):
        assert [count_components(XY, n)[0] for n in range(11)] == [n + 1 for n in range(11)]
        assert [count_components(Presentation.free(3), n)[0] for n in range(5)] == [1] * 5

    def test_oracle_one_y(self):
        levels = [[(0,) * a + (1,) + (0,) * (n - a - 1) for a in range(n)] + [(0,) * n]
                  for n in range(12)]
        f = FactorSet.from_language(Alphabet(("x", "y")), levels, Exactness.EXACT)
        cs = components(OracleAlgebra(f), 4, "point")
        assert cs.count == 5 and cs.exactness is Exactness.HEURISTIC
        assert all(sum(1 for c in comp.masks if c == 3) == 1 for comp in cs.components)

    def test_json_and_table(self):
        cs = components(XY, 1)
        data = cs.to_json()
        assert data["count"] == "2" and data["dimension"] == "1"
        assert "{x,y}" in cs.table()

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            components(Presentation.free(3), 12, budget=100)

    @settings(max_examples=40)
    @given(presentations(max_m=2, max_d=3, max_relations=4), st.integers(0, 4),
           st.sampled_from(["point", "truncated"]))
    def test_matches_naive_binary(self, p, n, variant):
        letters, forbidden = as_strings(p)
        cs = components(p, n, variant)
        naive = oracles.maximal_sequences(letters, forbidden, n + 1, variant == "point")
        assert as_oracle_sets(cs) == canon(naive)

    @settings(max_examples=25)
    @given(presentations(max_m=3, max_d=3, max_relations=5), st.integers(0, 2),
           st.sampled_from(["point", "truncated"]))
    def test_matches_naive_ternary(self, p, n, variant):
        letters, forbidden = as_strings(p)
        cs = components(p, n, variant)
        naive = oracles.maximal_sequences(letters, forbidden, n + 1, variant == "point")
        assert as_oracle_sets(cs) == canon(naive)

    @settings(max_examples=40)
    @given(presentations(max_m=3, max_d=3, max_relations=5), st.integers(0, 5))
    def test_maximality_and_containment(self, p, n):
        point = components(p, n, "point")
        trunc = components(p, n, "truncated")
        for variant, cs in (("point", point), ("truncated", trunc)):
            valid = (lambda s: is_prolongable_seq(p, s).value) if variant == "point" else \
                (lambda s: is_coherent(p, s))
            for c in cs.components:
                assert valid(c)
                for j in range(len(c)):
                    for x in range(p.m):
                        if not c.masks[j] >> x & 1:
                            bigger = list(c.masks)
                            bigger[j] |= 1 << x
                            assert not valid(SubsetSeq(tuple(bigger)))
        for c in point.components:
            assert any(c.leq(t) for t in trunc.components)

    @settings(max_examples=40)
    @given(presentations(max_m=3, max_d=3, max_relations=5), st.integers(1, 5))
    def test_projection_compatibility(self, p, n):
        for c in components(p, n, "point").components:
            assert is_prolongable_seq(p, c.prefix(n)).value


def random_module(rng, n, m, zero_rate):
    rows = []
    for _ in range(n + 1):
        row = [Fraction(rng.randint(1, 9), rng.randint(1, 5)) * rng.choice((1, -1))
               if rng.random() > zero_rate else Fraction(0) for _ in range(m)]
        if not any(row):
            row[rng.randrange(m)] = Fraction(1)
        rows.append(row)
    return PointModuleTrunc(tuple(map(tuple, rows)))


class TestPointModules:
    def test_tree_module(self):
        M = PointModuleTrunc(((0, 3), (0, Fraction(1, 2)), (2, 5), (7, 0), (1, 0)))
        assert verify_point_module(XY, M).ok

    def test_zero_row(self):
        M = PointModuleTrunc(((1, 1), (0, 0)))
        res = verify_point_module(XY, M)
        assert not res.ok and res.failure == {"kind": "zero-row", "row": 1}

    def test_relation_failure(self):
        res = verify_point_module(XY, PointModuleTrunc(((1, 0), (0, 2))))
        assert res.failure == {"kind": "relation", "word": "xy", "row": 0}

    def test_free(self):
        assert verify_point_module(Presentation.free(2), PointModuleTrunc(((1, 2),) * 4)).ok

    def test_oracle(self):
        f = factors(fibonacci(), 8)
        assert verify_point_module(f, PointModuleTrunc(((1, 1), (1, 0), (0, 1)))).ok
        assert not verify_point_module(f, PointModuleTrunc(((0, 1), (0, 1)))).ok

    def test_json(self):
        M = PointModuleTrunc(((1, Fraction(2, 3)),))
        assert PointModuleTrunc.from_json(M.to_json()) == M

    @settings(max_examples=30)
    @given(presentations(max_m=3, max_d=3, max_relations=5), st.integers(0, 2 ** 32))
    def test_classification_equivalence(self, p, seed):
        rng = random.Random(seed)
        for _ in range(10):
            M = random_module(rng, rng.randint(0, 5), p.m, rng.choice((0.2, 0.5, 0.7)))
            assert verify_point_module(p, M).ok == is_coherent(p, M.support())


class TestIrreducibility:
    def test_example(self):
        p = P(["x1", "x2", "x3"], ["x1x1", "x2x1", "x3x1"])
        rep = irreducibility_report(p, 5)
        assert rep.irreducible and rep.free_rank == 2
        assert rep.nilpotent_generators == {0}
        assert rep.chain.masks == (0b111,) + (0b110,) * 5
        assert nilpotent_power_vanishes(p, rep.nilpotent_generators, rep.nilpotency_bound)
        assert not nilpotent_power_vanishes(p, rep.nilpotent_generators, 1)

    def test_free(self):
        rep = irreducibility_report(Presentation.free(3), 4)
        assert rep.irreducible and rep.free_rank == 3 and rep.nilpotent_generators == frozenset()

    def test_xy_reducible(self):
        rep = irreducibility_report(XY, 4)
        assert not rep.irreducible and rep.per_degree == (True, False)

    def test_not_prolongable(self):
        with pytest.raises(NotProlongable):
            irreducibility_report(P("xy", ["xx", "xy"]), 3)

    @settings(max_examples=30)
    @given(presentations(max_m=3, max_d=3, max_relations=5))
    def test_nilpotent_bound(self, p):
        try:
            rep = irreducibility_report(p, 5)
        except NotProlongable:
            return
        if rep.irreducible:
            assert nilpotent_power_vanishes(p, rep.nilpotent_generators,
                                            max(rep.nilpotency_bound, 1))


class TestP1:
    def test_fibonacci(self):
        rep = p1_report(fibonacci(), 6)
        assert rep.tree.masks[0] == 0b11 and rep.tree.masks[1:] == SubsetSeq.word(
            rep.intersection_points[0][1:]).masks
        assert rep.component_count == 7 and rep.dimension == 1
        assert rep.others_are_words and rep.exactness is Exactness.HEURISTIC

    def test_thue_morse_rejected(self):
        with pytest.raises(SturmianCheckFailed):
            p1_report(thue_morse(), 6)

    def test_periodic_rejected(self):
        with pytest.raises(SturmianCheckFailed):
            p1_report(EventuallyPeriodic(Alphabet(("0", "1")), (), (0, 1)), 6)

    @settings(max_examples=10)
    @given(st.lists(st.integers(1, 3), min_size=8, max_size=8))
    def test_singleton_rule(self, cf):
        g = CharacteristicSturmian(tuple(cf))
        for n in range(9):
            rep = p1_report(g, n)
            assert rep.component_count == n + 1 and rep.dimension == 1 and rep.others_are_words

    def test_matches_naive_oracle(self):
        word = oracles.fibonacci_word(16 * 20)
        levels = [set(lv) for lv in oracles.factors_of(word, 20)]
        for n in range(5):
            naive = oracles.oracle_components(levels, "01", n + 1, True, 20 - n - 1)
            assert len(naive) == n + 1


class TestDimProfile:
    def test_free(self):
        prof = dim_profile(Presentation.free(2), 4)
        assert prof.dims == (1, 2, 3, 4, 5) and not prof.stabilized
        assert dim_profile(Presentation.free(3), 3).dims == (2, 4, 6, 8)

    def test_thue_morse(self):
        prof = dim_profile(factors(thue_morse(), 24), 8)
        assert prof.dims == (1,) * 9 and prof.stabilized
        assert prof.exactness is Exactness.HEURISTIC

    def test_xy(self):
        prof = dim_profile(XY, 6)
        assert prof.dims == (1,) * 7 and prof.stabilized
