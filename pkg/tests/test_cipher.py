import pytest

from voyn.cipher import UnmappedLetter, decode, encode, load_code_table

TABLE = load_code_table()


def test_table_shape():
    assert TABLE.columns == ("III-5", "III-15")
    assert len(TABLE.letters()) == 24
    assert "j" not in TABLE.letters()
    assert "v" not in TABLE.letters()


def test_known_codewords():
    assert encode("a", TABLE, ("fixed", "III-5")) == ["pafa"]
    assert encode("c", TABLE, ("fixed", "III-15")) == ["mastri"]
    assert encode("", TABLE, ("fixed", "III-5")) == []


def test_decode_sets():
    assert decode(["pafa"], TABLE) == [{"a"}]
    assert decode(["mastral"], TABLE) == [{"l", "m"}]
    assert decode(["pasas"], TABLE) == [{"l", "m"}]
    assert decode(["mastras"], TABLE) == [{"q", "r", "t"}]
    assert decode(["mastril"], TABLE) == [{"n", "o"}]
    assert decode(["mastraff"], TABLE) == [{"x", "y"}]
    assert decode(["notaword"], TABLE) == [set()]


def test_roundtrip_exhaustive():
    for letter in TABLE.letters():
        for column in TABLE.columns:
            (code,) = encode(letter, TABLE, ("fixed", column))
            assert letter in decode([code], TABLE)[0]


def test_round_robin_cycles():
    out = encode("aaaa", TABLE, ("roundRobin",))
    assert out == ["pafa", "mastra", "pafa", "mastra"]


def test_random_policy_deterministic():
    a = encode("abcde", TABLE, ("random", 42))
    b = encode("abcde", TABLE, ("random", 42))
    assert a == b
    assert encode("abcde", TABLE, ("random", 43)) != a or True  # just determinism matters


def test_unmapped_letter():
    with pytest.raises(UnmappedLetter) as exc:
        encode("aj", TABLE)
    assert exc.value.position == 1


def test_custom_table(tmp_path):
    p = tmp_path / "t.tsv"
    p.write_text("letter\tone\na\tfoo\nb\tfoo\n")
    tbl = load_code_table(p)
    assert decode(["foo"], tbl) == [{"a", "b"}]
