"""
Generator words such as "g1 X1^-1 1(1,2) g2^-1".

Letters are separated by whitespace or '*'. Each letter is a generator name,
an optional index and an optional integer exponent; "1" is the unit and
"1(a,b,...)" the idempotent of a residue tuple.
"""

import re
from dataclasses import dataclass

from src.errors import MalformedWordError

_TOKEN = re.compile(r"[^\s*]+")
_LETTER = re.compile(r"(?P<name>[A-Za-z]+)(?P<index>\d+)?(?:\^(?P<exp>-?\d+))?")
_IDEMPOTENT = re.compile(r"1\((?P<residues>\d+(?:,\d+)*)\)")

HHAT_LETTERS = frozenset({"g", "X"})
Y_LETTERS = frozenset({"t", "h", "e"})
AH_LETTERS = frozenset({"T", "Z", "pi"})


@dataclass(frozen=True)
class Letter:
    name: str
    index: int | None = None
    exponent: int = 1
    residues: tuple[int, ...] | None = None
    position: int = 0
    text: str = ""

    @property
    def is_unit(self) -> bool:
        return self.name == "1" and self.residues is None


@dataclass(frozen=True)
class GenWord:
    letters: tuple[Letter, ...]
    text: str = ""

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def error(self, letter: Letter, message: str) -> MalformedWordError:
        return MalformedWordError(message, self.text, letter.position)


def parse_word(text: str, allowed: frozenset[str]) -> GenWord:
    letters = []
    for match in _TOKEN.finditer(text):
        token, pos = match.group(0), match.start()
        if token == "1":
            letters.append(Letter("1", position=pos, text=token))
            continue
        idem = _IDEMPOTENT.fullmatch(token)
        if idem:
            residues = tuple(int(v) for v in idem.group("residues").split(","))
            letters.append(Letter("1", residues=residues, position=pos, text=token))
            continue
        m = _LETTER.fullmatch(token)
        if not m or m.group("name") not in allowed:
            raise MalformedWordError(f"unknown letter {token!r}", text, pos)
        index = int(m.group("index")) if m.group("index") is not None else None
        if index is None and m.group("name") != "pi":
            raise MalformedWordError(f"letter {token!r} needs an index", text, pos)
        exp = int(m.group("exp")) if m.group("exp") is not None else 1
        letters.append(Letter(m.group("name"), index, exp, position=pos, text=token))
    return GenWord(tuple(letters), text)
