import pytest

from voyn import transcript
from voyn.glyphs import render, tokenize
from voyn.transcript import (
    DEFAULT_KINDS,
    Locus,
    ParseError,
    load_kind_config,
    parse_corpus,
    serialize_corpus,
    text_lines,
)

SAMPLE = """\
<f1v.P.1> fachys.ykal.daiin=
<f1v.P.2> chol.cthol.shol
<f1v.P.3> daiin.ol
<f1v.P2.4> pchedy.qokeedy.dar
<f1v.L1.1> otaly
<f2r.P.1> daiin.daiin.qokedy
<f2r.P.2> okedy,chol
<f2r.T1.3> oteody.dal
"""

META = {"f1v": ("A", "herbal"), "f2r": ("B", "biological")}


def _corpus(text=SAMPLE, **kw):
    return parse_corpus(text, META, **kw)


def test_locus_roundtrip():
    for s in ("<f1v.P.6>", "<f105r.T1.9a>", "<f70v2.S1.8>"):
        assert Locus.parse(s).text() == s


def test_locus_fields():
    loc = Locus.parse("<f105r.T1.9a>")
    assert (loc.page, loc.kind, loc.index, loc.suffix) == ("f105r", "T1", 9, "a")


def test_parse_basic():
    c = _corpus()
    assert [p.id for p in c.pages] == ["f1v", "f2r"]
    f1v = c.pages[0]
    assert f1v.currier == "A"
    assert f1v.section == "herbal"
    assert len(f1v.lines) == 5
    assert f1v.lines[1].words == (tokenize("chol"), tokenize("cthol"), tokenize("shol"))


def test_paper_example_line():
    c = parse_corpus("<f1v.P.6> chol.cthol.shol", {})
    assert len(c.pages) == 1
    assert len(c.pages[0].lines) == 1
    assert len(c.pages[0].lines[0].words) == 3


def test_empty_input():
    with pytest.raises(ParseError) as exc:
        parse_corpus("", {})
    assert exc.value.lineno == 0


def test_malformed_tag():
    with pytest.raises(ParseError) as exc:
        parse_corpus("<f1v.P1> chol", {})
    assert exc.value.lineno == 1


def test_unknown_character_carries_locus():
    with pytest.raises(ParseError) as exc:
        parse_corpus("<f1v.P.1> chzol", {})
    assert "f1v.P.1" in str(exc.value)


def test_unknown_page_gets_question_mark():
    c = parse_corpus("<f99x.P.1> daiin", {})
    assert c.pages[0].currier == "?"
    assert c.pages[0].section == "unknown"


def test_paragraph_detection():
    c = _corpus()
    f1v = c.pages[0]
    # P run broken by the = marker, then a new kind run P2
    assert f1v.paragraphs == [[0], [1, 2], [3]]
    f2r = c.pages[1]
    assert f2r.paragraphs == [[0, 1]]


def test_roundtrip_bytes():
    c = _corpus()
    out = serialize_corpus(c)
    assert out == SAMPLE
    again = parse_corpus(out, META)
    assert serialize_corpus(again) == out


def test_comma_separator_kept():
    c = _corpus()
    line = c.pages[1].lines[1]
    assert line.separators == (",",)
    assert "okedy,chol" in serialize_corpus(c)


def test_comma_joins_flag():
    c = _corpus(comma_joins=True)
    line = c.pages[1].lines[1]
    assert len(line.words) == 1
    assert render(line.words[0]) == "okedychol"


def test_text_lines_filters_labels():
    c = _corpus()
    lines = text_lines(c)
    assert len(lines) == 7  # 8 loci minus 1 label
    kinds = {tl.locus.kind for tl in lines}
    assert "L1" not in kinds
    assert "T1" in kinds


def test_text_lines_merges_labels():
    text = SAMPLE + "<f2r.L1.1> okary\n<f2r.L1.2> oky\n<f2r.L2.3> otol\n"
    c = parse_corpus(text, META)
    lines = text_lines(c, labels_as_one_line=True)
    merged = [tl for tl in lines if tl.merged_labels]
    assert len(merged) == 2  # f1v label line, f2r adjacent labels as one
    assert [render(w) for w in merged[-1].words] == ["okary", "oky", "otol"]


def test_paragraph_line_index():
    c = _corpus()
    lines = text_lines(c)
    by_locus = {tl.locus.text(): tl for tl in lines}
    assert by_locus["<f1v.P.1>"].is_paragraph_start
    assert by_locus["<f1v.P.2>"].is_paragraph_start  # after the = marker
    assert not by_locus["<f1v.P.3>"].is_paragraph_start
    assert by_locus["<f1v.P.3>"].paragraph_line_index == 2
    assert by_locus["<f1v.P2.4>"].is_paragraph_start
    assert by_locus["<f2r.T1.3>"].paragraph_line_index == 0


def test_kind_config_roundtrip(tmp_path):
    p = tmp_path / "kinds.txt"
    p.write_text("text: P* R*\nlabel: L* m\n")
    cfg = load_kind_config(p)
    assert cfg.classify("P2") == "text"
    assert cfg.classify("R1") == "text"
    assert cfg.classify("L1") == "label"
    assert cfg.classify("m") == "label"
    assert cfg.classify("Z") == "other"


def test_default_kind_classes():
    for kind in ("P", "P1", "R2", "C", "T1", "Q", "W"):
        assert DEFAULT_KINDS.classify(kind) == "text"
    for kind in ("L1", "S2", "X", "Y", "m", "t"):
        assert DEFAULT_KINDS.classify(kind) == "label"


def test_word_tokens_census():
    c = _corpus()
    assert len(list(c.word_tokens())) == 18
    assert len(list(c.word_tokens(include_labels=True))) == 19
