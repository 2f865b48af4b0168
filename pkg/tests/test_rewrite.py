"""The rewriting system for the 72-dimensional family: normal forms,
ambiguity resolution, the multiplication table, and completion."""

import random
from fractions import Fraction

import pytest

from hopfs3.groups import parse_perm
from hopfs3.rewrite import (GENERATORS, NonterminationError, Rule,
                            RuleSystem, S3, X12, X13, X23,
                            check_associativity, complete, default_rules,
                            hilbert_series, irreducible_words,
                            overlap_ambiguities, resolve_ambiguity,
                            shift_tail, sigma, smash_add, smash_mult,
                            smash_of, smash_scale, smash_unit,
                            structure_constants, uniform_rule)
from hopfs3.scalars import PolyRing, poly_eval

R = PolyRing("a1", "a2")
A1, A2 = R.gens()

G = {s: parse_perm(s, 3) for s in ("e", "(12)", "(13)", "(23)", "(123)",
                                   "(132)")}


def sym_rules():
    return default_rules(A1, A2)


class TestSigmaAndSmash:
    def test_sigma(self):
        assert sigma(()) == G["e"]
        assert sigma((X12,)) == G["(12)"]
        # sigma(x12 x13) = (13)(12) = (123)
        assert sigma((X12, X13)) == G["(123)"]
        assert sigma((X12, X13, X23)) == G["(13)"]

    def test_shift_tail(self):
        # delta_s w = w delta_{sigma(w) s}
        kappa = {G["e"]: 1, G["(12)"]: 3}
        out = shift_tail(kappa, (X13,))
        assert out == {G["(13)"]: 1, G["(13)"] * G["(12)"]: 3}

    def test_smash_unit(self):
        one = smash_unit()
        x = smash_of((X12,), G["(23)"], 5)
        assert smash_mult(one, x) == x
        assert smash_mult(x, one) == x

    def test_delta_delta(self):
        dg = smash_of((), G["(12)"])
        dh = smash_of((), G["(13)"])
        assert smash_mult(dg, dg) == dg
        assert smash_mult(dg, dh) == {}

    def test_tail_compatibility(self):
        # (x13 dg)(x23 dh) survives only when h = (23) g
        x = smash_of((X13,), G["e"])
        y_good = smash_of((X23,), G["(23)"])
        y_bad = smash_of((X23,), G["e"])
        assert smash_mult(x, y_good) == {((X13, X23), G["(23)"]): 1}
        assert smash_mult(x, y_bad) == {}

    def test_reduced_square(self):
        # x13^2 collapses onto deltas; the tail picks out one coefficient
        rules = sym_rules()
        sq = smash_mult(smash_of((X13,), G["(132)"]),
                        smash_of((X13,), G["(23)"]), rules)
        assert sq == {((), G["(23)"]): A1}  # tail (23) keeps the a1 term

    def test_squares_sum_to_zero(self):
        # x12^2 + x13^2 + x23^2 = 0 in the algebra, any parameters
        rules = sym_rules()
        total: dict = {}
        for t in GENERATORS:
            x = {((t,), g): 1 for g in S3}
            total = smash_add(total, smash_mult(x, x, rules))
        assert total == {}


class TestRuleSystem:
    def test_default_lhs_set(self):
        lhss = {r.lhs for r in sym_rules().rules}
        assert lhss == {(X13, X13), (X23, X23), (X12, X12),
                        (X13, X23), (X23, X13),
                        (X12, X13, X12), (X23, X12, X23), (X23, X12, X13)}

    def test_sigma_preserving(self):
        assert sym_rules().sigma_preserving

    def test_inclusion_ambiguity_rejected(self):
        with pytest.raises(ValueError):
            RuleSystem([Rule((X12, X12), {}), Rule((X12, X12, X13), {})])

    def test_irreducible_word_reduces_to_itself(self):
        rules = sym_rules()
        for g in S3:
            assert rules.reduce_term((X13, X12), g) == {((X13, X12), g): 1}

    def test_fuel_exhaustion(self):
        rules = default_rules(1, 2, fuel=2)
        with pytest.raises(NonterminationError):
            rules.reduce_term((X23, X12, X23, X12, X23), G["e"])

    def test_termination_on_random_words(self):
        rules = default_rules(Fraction(1), Fraction(-2))
        rng = random.Random(20260825)
        for _ in range(1000):
            w = tuple(rng.choice(GENERATORS) for _ in range(rng.randint(0, 6)))
            g = rng.choice(S3)
            nf = rules.reduce_term(w, g)
            for (w2, h), _c in nf.items():
                assert rules._find_redex(w2) is None
                assert h == g


class TestBasis:
    def test_twelve_words(self):
        words = irreducible_words(sym_rules())
        assert len(words) == 12
        assert hilbert_series(words) == [1, 3, 4, 3, 1]

    def test_top_word(self):
        words = irreducible_words(sym_rules())
        assert max(words, key=len) == (X13, X12, X23, X12)

    def test_against_naive_enumeration(self):
        # independent oracle: brute-force subword avoidance on strings
        rules = sym_rules()
        lhss = [r.lhs for r in rules.rules]
        key = {X12: "a", X13: "b", X23: "c"}
        bad = ["".join(key[t] for t in l) for l in lhss]
        letters = "abc"
        words = [""]
        layer = [""]
        for _ in range(8):
            layer = [w + a for w in layer for a in letters
                     if not any(b in w + a for b in bad)]
            words.extend(layer)
        got = {"".join(key[t] for t in w)
               for w in irreducible_words(rules)}
        assert got == set(words)


class TestAmbiguities:
    def test_count(self):
        assert len(overlap_ambiguities(sym_rules())) == 23

    def test_known_overlaps_present(self):
        words = {w for _, _, w in overlap_ambiguities(sym_rules())}
        assert (X13, X13, X13) in words
        assert (X23, X12, X13, X13) in words
        assert (X12, X12, X13, X12) in words

    def test_all_resolve_symbolically(self):
        rules = sym_rules()
        for amb in overlap_ambiguities(rules):
            ok, trace = resolve_ambiguity(amb, rules)
            assert ok, trace

    def test_corrupted_rule_fails_to_resolve(self):
        # flip one sign in the omega coefficient table; the diamond
        # property must break somewhere
        rules = sym_rules()
        broken = []
        for r in rules.rules:
            if r.lhs == (X23, X12, X13):
                rhs = dict(r.rhs)
                k = ((X12,), G["(13)"])
                rhs[k] = -rhs[k]
                broken.append(Rule(r.lhs, rhs))
            else:
                broken.append(r)
        bad = RuleSystem(broken)
        results = [resolve_ambiguity(a, bad)[0]
                   for a in overlap_ambiguities(bad)]
        assert not all(results)


class TestMultTable:
    def test_dimension(self):
        table = structure_constants(sym_rules())
        assert table.dim == 72

    def test_unit(self):
        table = structure_constants(sym_rules())
        one = table.unit_vector()
        for i in range(table.dim):
            assert table.mult(one, {i: 1}) == {i: 1}
            assert table.mult({i: 1}, one) == {i: 1}

    def test_exhaustive_associativity_symbolic(self):
        table = structure_constants(sym_rules())
        rep = check_associativity(table, "exhaustive")
        assert rep["ok"]
        assert rep["checked"] == 72 * 12 * 12

    def test_sampled_mode(self):
        table = structure_constants(default_rules(2, 3))
        rep = check_associativity(table, "sampled", seed=7, count=200)
        assert rep["ok"] and rep["checked"] == 200

    def test_specialization_commutes(self):
        # evaluating the symbolic table at a point equals building the
        # table at that point
        sym = structure_constants(sym_rules())
        rng = random.Random(42)
        for _ in range(5):
            pt = (Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
                  Fraction(rng.randint(-9, 9), rng.randint(1, 4)))
            num = structure_constants(default_rules(*pt))
            assert num.labels == sym.labels
            for k, nf in sym.products.items():
                ev = {lab: poly_eval(c, pt) if not isinstance(c, (int, Fraction))
                      else Fraction(c) for lab, c in nf.items()}
                ev = {lab: c for lab, c in ev.items() if c}
                got = {lab: Fraction(c) for lab, c in num.products[k].items()}
                assert ev == got, k

    def test_graded_at_zero(self):
        table = structure_constants(default_rules(0, 0))
        for (w1, w2, _h), nf in table.products.items():
            for (w, _g) in nf:
                assert len(w) == len(w1) + len(w2)


class TestCompletion:
    def test_already_complete_at_zero(self):
        rules = default_rules(0, 0)
        done = complete(rules, maxdeg=8)
        assert {r.lhs for r in done.rules} == {r.lhs for r in rules.rules}
        assert len(irreducible_words(done)) == 12

    def test_single_square(self):
        rules = RuleSystem([uniform_rule((X12, X12), {})])
        done = complete(rules, maxdeg=8)
        assert {r.lhs for r in done.rules} == {(X12, X12)}

    def test_rejects_tail_dependent_rules(self):
        with pytest.raises(ValueError):
            complete(default_rules(1, 0), maxdeg=8)
