"""Words in free groups, finite presentations and their text/JSON formats.

A word is a tuple of nonzero integers: ``i + 1`` stands for generator ``i``
and ``-(i + 1)`` for its inverse.  Text relators use single-letter (or
declared multi-letter) generator names, ``^n`` powers, upper case or a
postfix ``'`` for inverses, parentheses, left-normed commutator brackets
``[x, y, z]`` with ``[x, y] = x y x^-1 y^-1``, and ``lhs = rhs`` relations.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

Word = tuple[int, ...]


class PresentationError(ValueError):
    pass


def free_reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def cyclic_reduce(word: Iterable[int]) -> Word:
    w = free_reduce(word)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i:j + 1]


def invert(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def power(word: Sequence[int], n: int) -> Word:
    base = tuple(word) if n >= 0 else invert(word)
    return free_reduce(base * abs(n))


def commutator(a: Sequence[int], b: Sequence[int]) -> Word:
    """``[a, b] = a b a^-1 b^-1``."""
    return free_reduce((*a, *b, *invert(a), *invert(b)))


def conjugate(g: Sequence[int], w: Sequence[int]) -> Word:
    """``g w g^-1``."""
    return free_reduce((*g, *w, *invert(g)))


def to_columns(word: Sequence[int]) -> list[int]:
    """Map letters to coset-table columns (2i for generator i, 2i+1 inverse)."""
    return [2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1 for x in word]


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    name: str = ""
    meta: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        k = len(self.generators)
        if k == 0:
            raise PresentationError("a presentation needs at least one generator")
        if len(set(self.generators)) != k:
            raise PresentationError(f"repeated generator names in {self.generators}")
        rels = []
        for w in self.relators:
            for x in w:
                if x == 0 or abs(x) > k:
                    raise PresentationError(f"letter {x} outside the {k} declared generators")
            rels.append(free_reduce(w))
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def word_str(self, w: Word) -> str:
        if not w:
            return "1"
        parts = []
        for x in w:
            name = self.generators[abs(x) - 1]
            parts.append(name if x > 0 else name + "^-1")
        return "*".join(parts)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "generators": list(self.generators),
            "relators": [list(w) for w in self.relators],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Presentation":
        gens = tuple(data["generators"])
        rels = []
        for r in data.get("relators", []):
            rels.append(parse_word(r, gens) if isinstance(r, str) else tuple(int(x) for x in r))
        return cls(gens, tuple(rels), data.get("name", ""))


# --------------------------------------------------------------------------
# text parser


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.pos = 0
        self.index = {n: i + 1 for i, n in enumerate(names)}
        self.names = sorted(names, key=len, reverse=True)

    def error(self, msg: str):
        raise PresentationError(f"{msg} at position {self.pos} in {self.text!r}")

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t*":
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def relation(self) -> Word:
        lhs = self.word()
        if self.peek() == "=":
            self.pos += 1
            rhs = self.word()
            return free_reduce(lhs + invert(rhs))
        return lhs

    def word(self) -> Word:
        out: Word = ()
        while True:
            c = self.peek()
            if not c or c in ",)]=|>":
                return free_reduce(out)
            out = out + self.factor()

    def factor(self) -> Word:
        base = self.atom()
        while True:
            c = self.peek()
            if c == "^":
                self.pos += 1
                self.skip()
                m = re.match(r"[+-]?\d+", self.text[self.pos:])
                if not m:
                    self.error("expected an integer exponent")
                self.pos += m.end()
                base = power(base, int(m.group()))
            elif c == "'":
                self.pos += 1
                base = invert(base)
            else:
                return base

    def atom(self) -> Word:
        c = self.peek()
        if c == "(":
            self.pos += 1
            w = self.word()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return w
        if c == "[":
            self.pos += 1
            parts = [self.word()]
            while self.peek() == ",":
                self.pos += 1
                parts.append(self.word())
            if self.peek() != "]" or len(parts) < 2:
                self.error("malformed commutator")
            self.pos += 1
            w = parts[0]
            for p in parts[1:]:
                w = commutator(w, p)
            return w
        if c == "1":
            self.pos += 1
            return ()
        rest = self.text[self.pos:]
        for name in self.names:
            if rest.startswith(name):
                self.pos += len(name)
                return (self.index[name],)
        for name in self.names:
            if name.upper() != name and rest.startswith(name.upper()):
                self.pos += len(name)
                return (-self.index[name],)
        self.error("unknown symbol")


def parse_word(text: str, generators: Sequence[str]) -> Word:
    p = _Parser(text, generators)
    w = p.relation()
    if p.peek():
        p.error("trailing input")
    return w


def parse_relators(text: str, generators: Sequence[str]) -> list[Word]:
    p = _Parser(text, generators)
    out = []
    while p.peek():
        out.append(p.relation())
        if p.peek() == ",":
            p.pos += 1
        elif p.peek():
            p.error("expected ','")
    return out


def parse_presentation(text: str, name: str = "") -> Presentation:
    """Parse ``"a, b | a^3, b^2, (ab)^2"`` (optionally wrapped in ``< >``)."""
    s = text.strip()
    if s.startswith("<") and s.endswith(">"):
        s = s[1:-1]
    if "|" in s:
        head, body = s.split("|", 1)
    else:
        head, body = s, ""
    gens = tuple(g.strip() for g in head.split(",") if g.strip())
    for g in gens:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", g):
            raise PresentationError(f"bad generator name {g!r}")
    return Presentation(gens, tuple(parse_relators(body, gens)), name)


def load_presentation(path: str | Path) -> Presentation:
    path = Path(path)
    text = path.read_text()
    if text.lstrip().startswith("{"):
        data = json.loads(text)
        data.setdefault("name", path.stem)
        return Presentation.from_dict(data)
    return parse_presentation(text, name=path.stem)
