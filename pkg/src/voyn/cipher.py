"""Nomenclator-style code table codec.

A code table maps each plaintext letter to one codeword per named column.
Codewords inside a column may collide (the historical tables do), so
decoding returns candidate sets rather than single letters.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from importlib import resources


class UnmappedLetter(KeyError):
    def __init__(self, letter: str, position: int):
        self.letter = letter
        self.position = position
        super().__init__("letter %r at position %d is not in the code table" % (letter, position))


@dataclass(frozen=True)
class CodeTable:
    columns: tuple  # column names, in table order
    mapping: dict  # letter -> {column: codeword}

    def letters(self):
        return tuple(self.mapping)

    def codeword(self, letter: str, column: str) -> str:
        return self.mapping[letter][column]

    def reverse(self) -> dict:
        rev = {}
        for letter, row in self.mapping.items():
            for word in row.values():
                rev.setdefault(word, set()).add(letter)
        return rev


def load_code_table(path=None) -> CodeTable:
    """Load a table from TSV (header `letter<TAB>col...`); defaults to the bundled one."""
    if path is None:
        text = resources.files("voyn.data").joinpath("trithemius.tsv").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    lines = [l for l in text.splitlines() if l.strip() and not l.startswith("#")]
    header = lines[0].split("\t")
    if header[0] != "letter" or len(header) < 2:
        raise ValueError("code table header must be letter<TAB>column...")
    columns = tuple(header[1:])
    mapping = {}
    for raw in lines[1:]:
        parts = raw.split("\t")
        if len(parts) != len(header):
            raise ValueError("bad code table row %r" % raw)
        mapping[parts[0]] = dict(zip(columns, parts[1:]))
    return CodeTable(columns, mapping)


def encode(plaintext, table: CodeTable, policy=("fixed", None)) -> list:
    """Encode a letter sequence, one codeword per letter.

    `policy` is ("fixed", column), ("roundRobin",) or ("random", seed);
    all three are deterministic for fixed arguments.
    """
    kind = policy[0]
    if kind == "fixed":
        column = policy[1] if policy[1] is not None else table.columns[0]
        if column not in table.columns:
            raise ValueError("unknown column %r" % column)
        pick = lambda i: column
    elif kind == "roundRobin":
        pick = lambda i: table.columns[i % len(table.columns)]
    elif kind == "random":
        rng = random.Random(policy[1])
        choices = [rng.randrange(len(table.columns)) for _ in plaintext]
        pick = lambda i: table.columns[choices[i]]
    else:
        raise ValueError("unknown column policy %r" % (policy,))
    out = []
    for i, letter in enumerate(plaintext):
        row = table.mapping.get(letter)
        if row is None:
            raise UnmappedLetter(letter, i)
        out.append(row[pick(i)])
    return out


def decode(codewords, table: CodeTable) -> list:
    """Candidate letter sets per codeword; empty set flags an unknown codeword."""
    rev = table.reverse()
    return [set(rev.get(w, ())) for w in codewords]
