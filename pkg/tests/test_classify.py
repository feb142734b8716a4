import pytest

from syncprim import automaton as am, catalog, classify as cl, group as gr, perm
from syncprim.classify import MODE_ALL, MODE_IDEMPOTENTS
from syncprim.perm import Transformation


class TestIsSyncMaximal:
    def test_c5_both_modes(self):
        G = catalog.cyclic(5)
        assert cl.is_sync_maximal(G, MODE_IDEMPOTENTS).value is True
        res = cl.is_sync_maximal(G, MODE_ALL)
        assert res.value is True
        assert res.scanned == 1200  # C(5,2) * 5! rank-4 maps

    def test_c4_fails_with_witness(self):
        res = cl.is_sync_maximal(catalog.cyclic(4), MODE_IDEMPOTENTS)
        assert res.value is False
        f = perm.parse_image(res.witness["f"])
        assert perm.rank(f) == 3
        A = am.build_group_automaton(catalog.cyclic(4), f)
        assert am.minimal_syn_dfa(A).state_count == res.witness["state_count"]
        assert res.witness["state_count"] < 2 ** 4 - 4

    def test_degree_2_always_sync_maximal(self):
        assert cl.is_sync_maximal(gr.trivial_group(2)).value is True
        assert cl.is_sync_maximal(gr.from_cycles(2, "(0 1)")).value is True

    def test_degree_1_vacuous(self):
        assert cl.is_sync_maximal(gr.trivial_group(1)).value is True

    def test_scanned_counts_match_family(self):
        G = catalog.symmetric(4)
        assert cl.is_sync_maximal(G, MODE_IDEMPOTENTS).scanned == 12
        assert cl.is_sync_maximal(G, MODE_ALL).scanned == 144

    def test_mode_agreement_on_catalog(self):
        for entry in catalog.builtin_catalog(5):
            if entry.degree < 3:
                continue
            a = cl.is_sync_maximal(entry.group, MODE_IDEMPOTENTS).value
            b = cl.is_sync_maximal(entry.group, MODE_ALL).value
            assert a == b, entry.name

    def test_thread_count_invariance(self):
        for G in (catalog.cyclic(4), catalog.cyclic(5)):
            single = cl.is_sync_maximal(G, MODE_IDEMPOTENTS, threads=1)
            multi = cl.is_sync_maximal(G, MODE_IDEMPOTENTS, threads=4)
            assert single.value == multi.value
            assert single.witness == multi.witness
            assert single.scanned == multi.scanned


class TestConditions:
    def test_condition_6_diverges_at_degree_4(self):
        G = gr.from_cycles(4, "(0 1 2)(3)")
        assert cl.condition(G, 6).value is True
        assert cl.condition(G, 1).value is False

    def test_c5_all_six_true(self):
        G = catalog.cyclic(5)
        for i in range(1, 7):
            assert cl.condition(G, i).value is True, f"condition {i}"

    def test_generator_set_independence(self):
        a = gr.from_cycles(5, "(0 1 2 3 4)")
        b = gr.GroupSpec(5, (perm.compose(a.generators[0], a.generators[0]),))
        for i in range(1, 7):
            assert cl.condition(a, i).value == cl.condition(b, i).value

    def test_condition_2_witness_revalidates(self):
        res = cl.condition(catalog.cyclic(4), 2)
        assert res.value is False
        f = perm.parse_image(res.witness["f"])
        A = am.build_group_automaton(catalog.cyclic(4), f)
        missing = am.parse_set(res.witness["unreachable"], 4)
        sub = am.build_subset_automaton(A)
        assert all(am.mask_to_set(s) != missing for s in sub.states)

    def test_condition_3_witness_revalidates(self):
        res = cl.condition(catalog.cyclic(4), 3)
        assert res.value is False
        f = perm.parse_image(res.witness["f"])
        A = am.build_group_automaton(catalog.cyclic(4), f)
        S, T = (am.parse_set(s, 4) for s in res.witness["pair"])
        assert am.distinguish_witness(A, S, T) is None

    def test_bad_index(self):
        with pytest.raises(ValueError):
            cl.condition(catalog.cyclic(4), 7)

    def test_trivial_group_condition2_false(self):
        assert cl.condition(gr.trivial_group(3), 2).value is False


class TestStronglySyncMaximal:
    def test_s5_true_full_scan(self):
        res = cl.is_strongly_sync_maximal(catalog.symmetric(5))
        assert res.value is True
        # all maps of rank 2..4 on [5]
        expected = sum(
            1 for r in (2, 3, 4) for _ in perm.enumerate_maps_of_rank(5, r)
        )
        assert res.scanned == expected == 3000

    def test_s4_counterexample_at_degree_4(self):
        # a rank-2 map whose kernel splits [4] into two 2-classes defeats
        # even the full symmetric group: a complementary pair of 2-sets
        # stays equal, complementary, or both-collapsed under every word
        res = cl.is_strongly_sync_maximal(catalog.symmetric(4))
        assert res.value is False
        f = perm.parse_image(res.witness["f"])
        assert f.image == (0, 0, 1, 1)
        S, T = (am.parse_set(s, 4) for s in res.witness["pair"])
        assert {S, T} == {frozenset({0, 1}), frozenset({2, 3})}
        # exhaustive monoid closure: no element maps exactly one to a singleton
        gens = list(catalog.symmetric(4).generators) + [f]
        monoid = {perm.identity(4)}
        frontier = [perm.identity(4)]
        while frontier:
            x = frontier.pop()
            for y in gens:
                z = perm.compose(y, x)
                if z not in monoid:
                    monoid.add(z)
                    frontier.append(z)
        assert not any(
            (len(h.apply_set(S)) == 1) != (len(h.apply_set(T)) == 1) for h in monoid
        )

    def test_c4_false_with_revalidating_witness(self):
        res = cl.is_strongly_sync_maximal(catalog.cyclic(4))
        assert res.value is False
        f = perm.parse_image(res.witness["f"])
        assert 2 <= perm.rank(f) <= 3
        A = am.build_group_automaton(catalog.cyclic(4), f)
        S, T = (am.parse_set(s, 4) for s in res.witness["pair"])
        assert am.distinguish_witness(A, S, T) is None

    def test_imprimitive_implies_not_strongly(self):
        for entry in catalog.builtin_catalog(5):
            if entry.degree < 3:
                continue
            if not gr.is_primitive(entry.group)[0]:
                assert cl.is_strongly_sync_maximal(entry.group).value is False, entry.name

    def test_degree_2_vacuous(self):
        assert cl.is_strongly_sync_maximal(gr.trivial_group(2)).value is True

    def test_large_degree_skipped(self):
        res = cl.is_strongly_sync_maximal(catalog.symmetric(8))
        assert res.value is None
        assert "infeasible" in res.reason


class TestClassify:
    def test_c5_report(self):
        report = cl.classify(catalog.cyclic(5), name="C5")
        preds = report.predicates
        assert preds["transitive"].value is True
        assert preds["primitive"].value is True
        assert preds["sync_maximal"].value is True
        assert preds["completely_reachable_all_f"].value is True

    def test_trivial_3_report(self):
        preds = cl.classify(gr.trivial_group(3)).predicates
        assert preds["transitive"].value is False
        assert preds["primitive"].value is False
        assert preds["sync_maximal"].value is False
        assert preds["sync_maximal"].witness is not None

    def test_degree_1_vacuously_true(self):
        preds = cl.classify(gr.trivial_group(1)).predicates
        for name in ("transitive", "primitive", "sync_maximal", "strongly_sync_maximal"):
            assert preds[name].value is True, name

    def test_report_serializes(self):
        import json

        report = cl.classify(catalog.cyclic(4), name="C4")
        doc = report.to_dict()
        assert doc["schema"] == "syncprim-report/1"
        json.dumps(doc)  # must be JSON clean
        assert doc["group"]["degree"] == 4

    def test_false_predicates_carry_witnesses(self):
        report = cl.classify(catalog.cyclic(4))
        for name, res in report.predicates.items():
            if res.value is False and name != "transitive":
                assert res.witness is not None, name

    def test_skipped_never_guessed(self):
        report = cl.classify(
            catalog.symmetric(8), with_conditions=False, with_strong=True
        )
        assert report.predicates["strongly_sync_maximal"].value is None
        assert report.predicates["strongly_sync_maximal"].reason
