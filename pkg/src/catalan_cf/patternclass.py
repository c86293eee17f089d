"""Insertion encoding and the three pattern classes 312-, 321- and
{3124, 4123, 3142, 4132}-avoiding permutations.

A permutation is built by inserting ``1, 2, ..., n`` in turn into *slots*,
the gaps that will eventually receive larger values.  Each insertion is a
letter: ``m`` (slot -> slot x slot), ``l`` (slot -> x slot), ``r``
(slot -> slot x) or ``f`` (slot -> x), subscripted with the slot index,
1-based from the left or negative from the right.

In *modified* mode a free slot is kept at the right end for the whole
construction: ``f`` and ``r`` are never applied to it and it is discarded at
the end.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from . import config, kernels
from .permstats import (ZERO_INF, ZERO_ZERO, Perm, classify, des, VALLEY, DA, DD)
from .polyring import MPoly


class Letter(NamedTuple):
    kind: str
    slot: int

    def __str__(self) -> str:
        return f"{self.kind}{self.slot}"


InsertionWord = tuple[Letter, ...]

_DELTA = {"m": 1, "l": 0, "r": 0, "f": -1}


class InvalidWordError(ValueError):
    pass


class PatternViolationError(ValueError):
    pass


def parse_word(text: str) -> InsertionWord:
    """Parse ``"m1,m1,l2,f1,f2,f1"``; ``l-1`` is the rightmost-slot ``l``."""
    letters = []
    for raw in text.replace(" ", "").split(","):
        if not raw:
            continue
        kind, slot = raw[0], raw[1:]
        if kind not in _DELTA:
            raise InvalidWordError(f"bad letter kind in {raw!r}")
        try:
            idx = int(slot)
        except ValueError:
            raise InvalidWordError(f"bad slot index in {raw!r}") from None
        if idx == 0:
            raise InvalidWordError("slot index 0 is not allowed")
        letters.append(Letter(kind, idx))
    return tuple(letters)


def format_word(word: Sequence[Letter]) -> str:
    return ",".join(str(Letter(*x)) for x in word)


_SLOT = None  # marker for an open slot inside a configuration


def _resolve(config_list: list, slot: int, nslots: int) -> int:
    if nslots == 0:
        raise InvalidWordError("no open slot left")
    if not (1 <= slot <= nslots or -nslots <= slot <= -1):
        raise InvalidWordError(f"slot {slot} does not exist (open slots: {nslots})")
    target = slot - 1 if slot > 0 else nslots + slot
    seen = -1
    for pos, item in enumerate(config_list):
        if item is _SLOT:
            seen += 1
            if seen == target:
                return pos
    raise AssertionError("unreachable")


def _apply(config_list: list, letter: Letter, value: int, nslots: int, modified: bool) -> int:
    kind, slot = letter
    pos = _resolve(config_list, slot, nslots)
    if modified and kind in ("f", "r") and pos == len(config_list) - 1:
        raise InvalidWordError(f"{letter} would close the retained right slot")
    config_list[pos:pos + 1] = {
        "m": [_SLOT, value, _SLOT],
        "l": [value, _SLOT],
        "r": [_SLOT, value],
        "f": [value],
    }[kind]
    return nslots + _DELTA[kind]


def insertion_decode(word: Sequence[Letter], modified: bool = False) -> Perm:
    """Replay an insertion word into the permutation it encodes."""
    word = [Letter(*x) for x in word]
    if not word:
        return ()
    config_list: list = [_SLOT]
    nslots = 1
    for value, letter in enumerate(word, 1):
        if letter.kind not in _DELTA:
            raise InvalidWordError(f"bad letter {letter}")
        nslots = _apply(config_list, letter, value, nslots, modified)
    if modified:
        if nslots != 1:
            raise InvalidWordError(f"{nslots - 1} open slots left besides the retained one")
        config_list.pop()
    elif nslots:
        raise InvalidWordError(f"{nslots} open slots left")
    return tuple(config_list)


def insertion_encode(sigma: Sequence[int], modified: bool = False) -> InsertionWord:
    """The insertion word of ``sigma`` with positive slot indices.

    At stage ``k`` the slots are the maximal runs of positions holding values
    larger than ``k``; in modified mode a virtual never-filled position is
    appended on the right.
    """
    n = len(sigma)
    word = list(sigma) + ([float("inf")] if modified else [])
    letters = []
    for k in range(1, n + 1):
        runs = []  # (start, end) of positions holding values >= k
        start = None
        for i, x in enumerate(word):
            if x >= k:
                if start is None:
                    start = i
            elif start is not None:
                runs.append((start, i - 1))
                start = None
        if start is not None:
            runs.append((start, len(word) - 1))
        pos = word.index(k)
        for idx, (a, b) in enumerate(runs, 1):
            if a <= pos <= b:
                break
        if a == b:
            kind = "f"
        elif pos == a:
            kind = "l"
        elif pos == b:
            kind = "r"
        else:
            kind = "m"
        letters.append(Letter(kind, idx))
    return tuple(letters)


def _letters_a312(nslots: int) -> list[Letter]:
    return [Letter("f", 1), Letter("l", 1), Letter("m", 1), Letter("r", 1)]


def _letters_a321(nslots: int) -> list[Letter]:
    if nslots == 1:
        return [Letter("l", -1), Letter("m", -1)]
    return [Letter("f", 1), Letter("l", -1), Letter("l", 1), Letter("m", -1)]


def _letters_b4(nslots: int) -> list[Letter]:
    letters = [Letter("f", 1), Letter("l", 1), Letter("m", 1), Letter("r", 1)]
    if nslots == 2:
        letters.insert(1, Letter("f", 2))
    return letters


@dataclass(frozen=True)
class _ClassInfo:
    patterns: tuple[Perm, ...]
    letters: object
    modified: bool
    shift: int  # class_polynomial(n) sums over permutations of length n + shift


class PatternClass(enum.Enum):
    A312 = "a312"
    A321 = "a321"
    B4 = "b4"

    @property
    def info(self) -> _ClassInfo:
        return _CLASSES[self]

    @property
    def patterns(self) -> tuple[Perm, ...]:
        return self.info.patterns

    def licensed(self, nslots: int) -> list[Letter]:
        """Letters the class grammar allows with ``nslots`` open slots."""
        return self.info.letters(nslots)

    @classmethod
    def parse(cls, name: str) -> "PatternClass":
        return cls(name.lower())


_CLASSES = {
    PatternClass.A312: _ClassInfo(((3, 1, 2),), _letters_a312, False, 1),
    PatternClass.A321: _ClassInfo(((3, 2, 1),), _letters_a321, True, 0),
    PatternClass.B4: _ClassInfo(((3, 1, 2, 4), (4, 1, 2, 3), (3, 1, 4, 2), (4, 1, 3, 2)),
                                _letters_b4, False, 1),
}


def uses_licensed_letters(word: Sequence[Letter], c: PatternClass) -> bool:
    """Check a word letter by letter against the class grammar.

    Slot indices are compared after resolving negatives, so ``m1`` and
    ``m-1`` coincide when only one slot is open.
    """
    modified = c.info.modified
    nslots = 1
    for letter in word:
        kind, slot = letter
        absolute = slot if slot > 0 else nslots + slot + 1
        ok = any(k == kind and (s if s > 0 else nslots + s + 1) == absolute
                 for k, s in c.licensed(nslots))
        if not ok:
            return False
        nslots += _DELTA[kind]
    return nslots == (1 if modified else 0) or not word


def generate_words(n: int, c: PatternClass) -> Iterator[tuple[InsertionWord, Perm]]:
    """Walk the class grammar; yields ``(word, permutation)`` in lexicographic
    order of words.  Only permutations of length ``n`` are produced."""
    if n == 0:
        yield (), ()
        return
    info = c.info
    floor = 1 if info.modified else 0
    letters_for = info.letters

    def walk(word: list, config_list: list, nslots: int, value: int):
        remaining = n - value + 1
        if remaining == 0:
            if nslots == floor:
                out = config_list[:-1] if info.modified else config_list
                yield tuple(word), tuple(out)
            return
        for letter in sorted(letters_for(nslots)):
            if abs(letter.slot) > nslots:
                continue
            after = nslots + _DELTA[letter.kind]
            # every non-retained slot still needs at least one value
            if after - floor > remaining - 1 or after < floor:
                continue
            if remaining - 1 > 0 and after == 0:
                continue
            nxt = list(config_list)
            _apply(nxt, letter, value, nslots, info.modified)
            word.append(letter)
            yield from walk(word, nxt, after, value + 1)
            word.pop()

    yield from walk([], [_SLOT], 1, 1)


def generate_class(n: int, c: PatternClass) -> Iterator[Perm]:
    for _, sigma in generate_words(n, c):
        yield sigma


@lru_cache(maxsize=32)
def class_members(length: int, c: PatternClass) -> tuple[Perm, ...]:
    """Cached grammar output for permutations of the given length."""
    return tuple(generate_class(length, c))


def perms_avoiding_bruteforce(n: int, patterns: Sequence[Sequence[int]],
                              cap: int | None = None) -> list[Perm]:
    """Filter all ``n!`` permutations by classical containment (the oracle)."""
    if cap is None:
        cap = config.active().bruteforce_cap
    config.check_cap(n, cap, "perms_avoiding_bruteforce")
    return kernels.avoiders(n, [tuple(pat) for pat in patterns])


# exponent vector order is (p, q, t, u, v, w)
def class_exponents(sigma: Sequence[int], c: PatternClass) -> tuple[int, ...]:
    """The statistic tuple whose monomial each class member contributes."""
    s31_2, _, s2_13, _, hat = kernels.vincular2_totals(tuple(sigma))
    if c is PatternClass.A321:
        kinds = Counter(classify(sigma, ZERO_INF).values())
        return (hat, s31_2, des(sigma), kinds[DA], 0, kinds[VALLEY])
    kinds = Counter(classify(sigma, ZERO_ZERO).values())
    if c is PatternClass.B4:
        return (s2_13, s31_2, des(sigma), kinds[DA], kinds[DD], kinds[VALLEY])
    return (0, s2_13, des(sigma), kinds[DA], kinds[DD], kinds[VALLEY])


def class_polynomial(n: int, c: PatternClass, members: Sequence[Perm] | None = None) -> MPoly:
    """Weighted enumerator of the class.

    A321 sums over length ``n``; B4 and A312 sum over length ``n + 1``.
    """
    if members is None:
        members = class_members(n + c.info.shift, c)
    counts = Counter(class_exponents(sigma, c) for sigma in members)
    return MPoly.from_terms(counts.items())


def class_size_shift(c: PatternClass) -> int:
    return c.info.shift
