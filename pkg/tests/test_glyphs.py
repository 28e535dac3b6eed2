import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from voyn import glyphs
from voyn.glyphs import (
    ALL_UNITS,
    DEFAULT_RELATION,
    UnknownCharacter,
    glyph_class,
    normalize,
    render,
    similar,
    tokenize,
)

units_seq = st.lists(st.sampled_from(ALL_UNITS), min_size=1, max_size=10)


def test_tokenize_single_letters():
    assert tokenize("daiin") == ("d", "a", "i", "i", "n")


def test_tokenize_longest_match():
    assert tokenize("chckhy") == ("ch", "ckh", "y")
    assert tokenize("qokeedy") == ("q", "o", "k", "e", "e", "d", "y")
    assert len(tokenize("qokeedy")) == 7


def test_tokenize_pedestals_before_digraphs():
    assert tokenize("cthol") == ("cth", "o", "l")
    assert tokenize("chol") == ("ch", "o", "l")
    assert tokenize("shckhy") == ("sh", "ckh", "y")


def test_unknown_character_position():
    with pytest.raises(UnknownCharacter) as exc:
        tokenize("dazn", norm=None)
    assert exc.value.position == 2


def test_tokenize_empty_rejected():
    with pytest.raises(ValueError):
        tokenize("")


def test_normalize_variants():
    assert normalize("csedy") == "shedy"
    assert normalize("aikhy") == "ackhy"
    assert normalize("chol") == "chol"
    assert normalize("aithy") == "acthy"
    assert tokenize("csedy") == ("sh", "e", "d", "y")


def test_glyph_classes():
    assert glyph_class("k") == "gallow"
    assert glyph_class("cth") == "pedestal-gallow"
    for u in "oaeiy":
        assert glyph_class(u) == "vowel-like"
    assert glyph_class("ch") == "consonant-like"
    assert glyph_class("x") == "other"


@given(units_seq)
def test_roundtrip_tokenize_render(seq):
    seq = tuple(seq)
    assert tokenize(render(seq), norm=None) == seq


@given(units_seq)
def test_roundtrip_render_tokenize(seq):
    s = render(tuple(seq))
    assert render(tokenize(s, norm=None)) == s


def _all_tokenizations(s):
    if not s:
        return [()]
    out = []
    for u in ALL_UNITS:
        if s.startswith(u):
            for rest in _all_tokenizations(s[len(u) :]):
                out.append((u,) + rest)
    return out


@settings(max_examples=300)
@given(st.lists(st.sampled_from(ALL_UNITS), min_size=1, max_size=6))
def test_longest_match_uniqueness(seq):
    s = render(tuple(seq))
    if len(s) > 12:
        return
    options = _all_tokenizations(s)
    assert options == [tokenize(s, norm=None)]


def test_similar_default_classes():
    assert similar("k", "t", DEFAULT_RELATION)
    assert similar("n", "r", DEFAULT_RELATION)
    assert similar("o", "a", DEFAULT_RELATION)
    assert similar("ch", "sh", DEFAULT_RELATION)
    assert similar("cth", "cfh", DEFAULT_RELATION)
    assert not similar("d", "k", DEFAULT_RELATION)
    assert not similar("e", "o", DEFAULT_RELATION)


def test_similar_reflexive_symmetric_exhaustive():
    for a in ALL_UNITS:
        assert similar(a, a, DEFAULT_RELATION)
        for b in ALL_UNITS:
            assert similar(a, b, DEFAULT_RELATION) == similar(b, a, DEFAULT_RELATION)


def test_each_unit_in_at_most_one_class():
    seen = set()
    for cls in DEFAULT_RELATION.classes:
        assert not (cls & seen)
        seen |= cls


def test_disjointness_enforced():
    with pytest.raises(ValueError):
        glyphs.SimilarityRelation((frozenset({"o", "a"}), frozenset({"a", "e"})))


def test_load_glyph_config(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("# comment\nclass o a\ncluster ee e\nnorm cs sh\n")
    rel, norm = glyphs.load_glyph_config(p)
    assert rel.similar("o", "a")
    assert not rel.similar("k", "t")
    assert rel.cluster_rules == ((("e", "e"), ("e",)),)
    assert norm == (("cs", "sh"),)


def test_bundled_config_matches_defaults():
    from importlib import resources

    path = resources.files("voyn.data").joinpath("glyph_config.txt")
    rel, norm = glyphs.load_glyph_config(path)
    assert set(rel.classes) == set(DEFAULT_RELATION.classes)
    assert set(rel.cluster_rules) == set(DEFAULT_RELATION.cluster_rules)
    assert norm == glyphs.DEFAULT_NORMALIZATION
