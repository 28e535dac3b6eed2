import heapq
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from voyn.editdist import (
    SIMPLE,
    STRICT,
    EditCostConfig,
    edit_distance,
    is_subgroup,
    prefix_diff,
    split_min_distance,
    suffix_diff,
)
from voyn.glyphs import ALL_UNITS, DEFAULT_RELATION, SimilarityRelation, tokenize

t = tokenize

words = st.lists(st.sampled_from(ALL_UNITS), min_size=1, max_size=7).map(tuple)


def test_paper_examples():
    assert edit_distance(t("daiin"), t("dain")) == 1
    assert edit_distance(t("daiin"), t("dair")) == 2
    assert edit_distance(t("chedy"), t("chedy")) == 0
    assert edit_distance(t("ee"), t("ch"), SIMPLE) == 2
    assert edit_distance(t("chedy"), t("cthedy"), STRICT) == 1


def test_similar_substitution_costs_one():
    assert edit_distance(t("okaiin"), t("otaiin")) == 1
    assert edit_distance(t("chol"), t("shol")) == 1


def test_dissimilar_substitution_costs_two():
    assert edit_distance(t("d"), t("k"), STRICT) == 2
    assert edit_distance(t("d"), t("k"), SIMPLE) == 1


def test_cluster_ee_e():
    assert edit_distance(t("cheedy"), t("chedy"), STRICT) == 1
    # simple mode has no cluster but a deletion achieves the same here
    assert edit_distance(t("cheedy"), t("chedy"), SIMPLE) == 1


def test_cluster_pedestal_family():
    for ped in ("cthedy", "ckhedy", "cphedy", "cfhedy"):
        assert edit_distance(t("chedy"), t(ped), STRICT) == 1


def test_invalid_config_rejected():
    with pytest.raises(ValueError):
        EditCostConfig(mode="weird")
    with pytest.raises(ValueError):
        EditCostConfig(dissimilar_subst_cost=3)


# --- independent oracles -----------------------------------------------------


def oracle_distance(a, b, cfg):
    """Exhaustive branch-and-bound enumeration of every edit script.

    Every edit path corresponds to a left-to-right alignment script; this
    explores the whole script tree without any DP table.
    """
    rules = []
    if cfg.mode == "strict":
        for x, y in cfg.relation.cluster_rules:
            rules.append((x, y))
            rules.append((y, x))
    la, lb = len(a), len(b)
    best = [la * cfg.delete_cost + lb * cfg.insert_cost]

    def rec(i, j, cost):
        if cost >= best[0]:
            return
        if i == la and j == lb:
            best[0] = cost
            return
        if i < la and j < lb:
            if a[i] == b[j]:
                rec(i + 1, j + 1, cost)
            elif cfg.mode == "simple":
                rec(i + 1, j + 1, cost + 1)
            elif cfg.relation.similar(a[i], b[j]):
                rec(i + 1, j + 1, cost + cfg.similar_subst_cost)
            else:
                rec(i + 1, j + 1, cost + cfg.dissimilar_subst_cost)
        for x, y in rules:
            if a[i : i + len(x)] == x and b[j : j + len(y)] == y:
                rec(i + len(x), j + len(y), cost + cfg.cluster_cost)
        if i < la:
            rec(i + 1, j, cost + cfg.delete_cost)
        if j < lb:
            rec(i, j + 1, cost + cfg.insert_cost)

    rec(0, 0, 0)
    return best[0]


def dijkstra_distance(a, b, cfg):
    """Shortest edit path over whole-string states; only viable for tiny words."""
    alphabet = sorted(set(a) | set(b) | {"e", "ch"})
    cap = max(len(a), len(b)) + 1
    rel = cfg.relation
    rules = []
    if cfg.mode == "strict":
        for x, y in rel.cluster_rules:
            rules.append((x, y))
            rules.append((y, x))
    dist = {a: 0}
    heap = [(0, a)]
    while heap:
        d, state = heapq.heappop(heap)
        if state == b:
            return d
        if d > dist.get(state, 1 << 30):
            continue
        moves = []
        for i in range(len(state) + 1):
            if len(state) < cap:
                for u in alphabet:
                    moves.append((state[:i] + (u,) + state[i:], cfg.insert_cost))
        for i in range(len(state)):
            moves.append((state[:i] + state[i + 1 :], cfg.delete_cost))
            for u in alphabet:
                if u == state[i]:
                    continue
                if cfg.mode == "simple":
                    c = 1
                elif rel.similar(state[i], u):
                    c = cfg.similar_subst_cost
                else:
                    c = cfg.dissimilar_subst_cost
                moves.append((state[:i] + (u,) + state[i + 1 :], c))
        for x, y in rules:
            for i in range(len(state) - len(x) + 1):
                if state[i : i + len(x)] == x and len(state) - len(x) + len(y) <= cap:
                    moves.append((state[:i] + y + state[i + len(x) :], cfg.cluster_cost))
        for nxt, cost in moves:
            nd = d + cost
            if nd < dist.get(nxt, 1 << 30):
                dist[nxt] = nd
                heapq.heappush(heap, (nd, nxt))
    raise AssertionError("unreachable")


@pytest.mark.parametrize("cfg", [STRICT, SIMPLE], ids=["strict", "simple"])
def test_dp_matches_script_oracle(cfg):
    rng = random.Random(99)
    pool = [
        tuple(rng.choice(ALL_UNITS) for _ in range(rng.randint(1, 5))) for _ in range(60)
    ]
    for _ in range(400):
        a, b = rng.choice(pool), rng.choice(pool)
        assert edit_distance(a, b, cfg) == oracle_distance(a, b, cfg)


@pytest.mark.parametrize("cfg", [STRICT, SIMPLE], ids=["strict", "simple"])
def test_dp_matches_path_search_tiny(cfg):
    rng = random.Random(5)
    pool = [
        tuple(rng.choice(ALL_UNITS) for _ in range(rng.randint(1, 2))) for _ in range(25)
    ]
    pool += [tokenize(w) for w in ("ee", "ch", "e", "cth", "chedy"[:2])]
    for _ in range(60):
        a, b = rng.choice(pool), rng.choice(pool)
        assert edit_distance(a, b, cfg) == dijkstra_distance(a, b, cfg)


def test_metric_axioms_sampled():
    rng = random.Random(7)
    pool = [
        tuple(rng.choice(ALL_UNITS) for _ in range(rng.randint(1, 6))) for _ in range(120)
    ]
    for cfg in (STRICT, SIMPLE):
        for _ in range(2000):
            a, b, c = (rng.choice(pool) for _ in range(3))
            dab = edit_distance(a, b, cfg)
            assert (dab == 0) == (a == b)
            assert dab == edit_distance(b, a, cfg)
            assert edit_distance(a, c, cfg) <= dab + edit_distance(b, c, cfg)


@given(words, words, st.sampled_from(ALL_UNITS))
@settings(max_examples=200)
def test_append_same_unit_keeps_distance(a, b, u):
    for cfg in (STRICT, SIMPLE):
        assert edit_distance(a + (u,), b + (u,), cfg) == edit_distance(a, b, cfg)


@given(words, words)
@settings(max_examples=200)
def test_cluster_rules_never_increase_distance(a, b):
    bare = EditCostConfig(mode="strict", relation=SimilarityRelation(DEFAULT_RELATION.classes, ()))
    assert edit_distance(a, b, STRICT) <= edit_distance(a, b, bare)


def test_subgroup():
    assert is_subgroup(t("ol"), t("olchedy"))
    assert not is_subgroup(t("chedy"), t("chedy"))
    assert not is_subgroup(t("dy"), t("daiin"))
    assert is_subgroup(t("aii"), t("daiin"))
    # units, not letters: the t inside cth is not a match for t
    assert not is_subgroup(t("t"), t("cthol"))


def test_prefix_diff():
    assert prefix_diff(t("qokedy"), t("okedy")) == ("q",)
    assert prefix_diff(t("ycheor"), t("cheor")) == ("y",)
    assert prefix_diff(t("chedy"), t("chedy")) is None
    assert prefix_diff(t("qokedy"), t("kedy")) == ("q", "o")
    assert prefix_diff(t("qokedy"), t("qoke")) is None


def test_suffix_diff():
    assert suffix_diff(t("qokedy"), t("qoke")) == ("d", "y")
    assert suffix_diff(t("qokedy"), t("okedy")) is None


def test_split_min_distance():
    # a compound scores by its better half plus one for the split
    w = t("cheolchcthy")
    target = t("chcthy")
    assert edit_distance(w, target) > 3
    assert split_min_distance(w, target) == 1
    assert split_min_distance(t("olchedy"), t("chedy")) == 1
