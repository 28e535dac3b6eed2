"""Unit-level edit distance between glyph groups.

Two cost models are supported.  The strict model charges one for inserting,
deleting or substituting a similar glyph, two for substituting a dissimilar
glyph (treated as delete plus add), and one for the cluster rewrites carried
by the similarity relation.  The simple model is plain Levenshtein distance
over units.
"""

from __future__ import annotations

from dataclasses import dataclass

from .glyphs import DEFAULT_RELATION, SimilarityRelation


@dataclass(frozen=True)
class EditCostConfig:
    mode: str = "strict"  # strict | simple
    relation: SimilarityRelation = DEFAULT_RELATION
    insert_cost: int = 1
    delete_cost: int = 1
    similar_subst_cost: int = 1
    dissimilar_subst_cost: int = 2
    cluster_cost: int = 1

    def __post_init__(self):
        if self.mode not in ("strict", "simple"):
            raise ValueError("mode must be strict or simple")
        costs = (
            self.insert_cost,
            self.delete_cost,
            self.similar_subst_cost,
            self.dissimilar_subst_cost,
            self.cluster_cost,
        )
        if any(c <= 0 for c in costs):
            raise ValueError("all costs must be positive")
        if self.dissimilar_subst_cost != self.insert_cost + self.delete_cost:
            raise ValueError("dissimilar substitution must cost delete plus add")


STRICT = EditCostConfig(mode="strict")
SIMPLE = EditCostConfig(mode="simple")


def edit_distance(a, b, cfg: EditCostConfig = STRICT) -> int:
    """Minimal edit cost transforming unit tuple `a` into unit tuple `b`."""
    if a == b:
        return 0
    m, n = len(a), len(b)
    simple = cfg.mode == "simple"
    rel = cfg.relation
    rules = ()
    if not simple:
        # both orientations of every unordered cluster pair
        seen = []
        for x, y in rel.cluster_rules:
            seen.append((x, y))
            if x != y:
                seen.append((y, x))
        rules = tuple(seen)

    prev_rows = []  # keep all rows; cluster rules may reach several rows back
    row = list(range(0, (n + 1) * cfg.insert_cost, cfg.insert_cost))
    prev_rows.append(row)
    for i in range(1, m + 1):
        cur = [i * cfg.delete_cost] + [0] * n
        for j in range(1, n + 1):
            au, bu = a[i - 1], b[j - 1]
            if au == bu:
                sub = prev_rows[i - 1][j - 1]
            elif simple:
                sub = prev_rows[i - 1][j - 1] + 1
            elif rel.similar(au, bu):
                sub = prev_rows[i - 1][j - 1] + cfg.similar_subst_cost
            else:
                sub = prev_rows[i - 1][j - 1] + cfg.dissimilar_subst_cost
            best = min(
                sub,
                prev_rows[i - 1][j] + cfg.delete_cost,
                cur[j - 1] + cfg.insert_cost,
            )
            if rules:
                for x, y in rules:
                    lx, ly = len(x), len(y)
                    if lx <= i and ly <= j and a[i - lx : i] == x and b[j - ly : j] == y:
                        cand = prev_rows[i - lx][j - ly] + cfg.cluster_cost
                        if cand < best:
                            best = cand
            cur[j] = best
        prev_rows.append(cur)
    return prev_rows[m][n]


def is_subgroup(a, b) -> bool:
    """True iff `a` occurs contiguously inside `b` and is a proper part of it."""
    if a == b:
        return False
    la, lb = len(a), len(b)
    if la == 0 or la > lb:
        return False
    first = a[0]
    for i in range(lb - la + 1):
        if b[i] == first and b[i : i + la] == a:
            return True
    return False


def prefix_diff(a, b):
    """If `b` is a proper suffix of `a`, the removed leading units, else None."""
    la, lb = len(a), len(b)
    if lb == 0 or lb >= la:
        return None
    if a[la - lb :] == b:
        return a[: la - lb]
    return None


def suffix_diff(a, b):
    """If `b` is a proper prefix of `a`, the removed trailing units, else None."""
    la, lb = len(a), len(b)
    if lb == 0 or lb >= la:
        return None
    if a[:lb] == b:
        return a[lb:]
    return None


def split_min_distance(w, target, cfg: EditCostConfig = STRICT) -> int:
    """Best score for `w` read as two parts: min over splits of ED(part, target) + 1.

    Mirrors the addendum scoring of compound groups; callers must opt in,
    the plain distance never applies this silently.
    """
    if len(w) < 2:
        return edit_distance(w, target, cfg) + 1
    best = None
    for i in range(1, len(w)):
        for part in (w[:i], w[i:]):
            d = edit_distance(part, target, cfg) + 1
            if best is None or d < best:
                best = d
    return best
