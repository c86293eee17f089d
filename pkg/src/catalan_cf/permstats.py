"""Permutation statistics under explicit boundary conventions.

Permutations are plain tuples of the values ``1..n`` in one-line notation.
Positions in the public API are 1-based, as in the combinatorics literature.

Local classification looks at each value together with its two neighbours,
padding the word with ``left`` and ``right`` boundary values.  With boundary
``(0, 0)`` and ``n >= 1`` the last letter is always a peak or a double
descent and is never a descent top, so ``des = pk + dd - 1 = val + dd``.
With boundary ``(0, inf)`` or ``(0, n+1)``, ``des = pk + dd``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels

Perm = tuple[int, ...]


class NotAPermutationError(ValueError):
    pass


def as_perm(obj: str | Iterable[int]) -> Perm:
    """Validate and normalise a permutation.

    Strings are read either comma/space separated (``"4,7,2"``) or, when every
    value is a single digit, as a bare digit string (``"472589316"``).
    """
    if isinstance(obj, str):
        text = obj.strip()
        if any(ch in text for ch in ", "):
            word = tuple(int(x) for x in text.replace(",", " ").split())
        else:
            word = tuple(int(ch) for ch in text)
    else:
        word = tuple(int(x) for x in obj)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise NotAPermutationError(f"{word} is not a permutation of 1..{len(word)}")
    return word


def format_perm(sigma: Sequence[int]) -> str:
    if len(sigma) < 10:
        return "".join(map(str, sigma))
    return ",".join(map(str, sigma))


def inverse(sigma: Sequence[int]) -> Perm:
    inv = [0] * len(sigma)
    for i, x in enumerate(sigma, 1):
        inv[x - 1] = i
    return tuple(inv)


class Right(enum.Enum):
    ZERO = "zero"
    INF = "inf"
    NPLUS1 = "nplus1"


@dataclass(frozen=True)
class Boundary:
    """Padding values: ``sigma(0) = 0`` and ``sigma(n+1)`` per ``right``."""

    right: Right
    left: int = 0

    def __post_init__(self):
        if self.left != 0:
            raise ValueError("only sigma(0) = 0 is supported on the left")

    def right_value(self, n: int) -> float:
        if self.right is Right.ZERO:
            return 0
        if self.right is Right.NPLUS1:
            return n + 1
        return float("inf")

    @classmethod
    def parse(cls, name: str) -> "Boundary":
        return cls(Right(name))


ZERO_ZERO = Boundary(Right.ZERO)
ZERO_INF = Boundary(Right.INF)
ZERO_NPLUS1 = Boundary(Right.NPLUS1)

PEAK, VALLEY, DA, DD = "pk", "val", "da", "dd"


def classify(sigma: Sequence[int], boundary: Boundary) -> dict[int, str]:
    """Map each value to ``"pk"``, ``"val"``, ``"da"`` or ``"dd"``."""
    n = len(sigma)
    padded = [boundary.left, *sigma, boundary.right_value(n)]
    out = {}
    for i in range(1, n + 1):
        a, x, b = padded[i - 1], padded[i], padded[i + 1]
        if a < x:
            out[x] = PEAK if x > b else DA
        else:
            out[x] = DD if x > b else VALLEY
    return out


@dataclass(frozen=True)
class LocalStats:
    Pk: frozenset
    Val: frozenset
    Da: frozenset
    Dd: frozenset

    @property
    def pk(self) -> int:
        return len(self.Pk)

    @property
    def val(self) -> int:
        return len(self.Val)

    @property
    def da(self) -> int:
        return len(self.Da)

    @property
    def dd(self) -> int:
        return len(self.Dd)

    def counts(self) -> dict[str, int]:
        return {"pk": self.pk, "val": self.val, "da": self.da, "dd": self.dd}


def local_stats(sigma: Sequence[int], boundary: Boundary) -> LocalStats:
    kinds = classify(sigma, boundary)
    sets: dict[str, set[int]] = {PEAK: set(), VALLEY: set(), DA: set(), DD: set()}
    for value, kind in kinds.items():
        sets[kind].add(value)
    return LocalStats(frozenset(sets[PEAK]), frozenset(sets[VALLEY]),
                      frozenset(sets[DA]), frozenset(sets[DD]))


def des(sigma: Sequence[int]) -> int:
    return sum(1 for a, b in zip(sigma, sigma[1:]) if a > b)


def descent_set(sigma: Sequence[int]) -> frozenset:
    return frozenset(i for i in range(1, len(sigma)) if sigma[i - 1] > sigma[i])


VINCULAR2 = ("31-2", "2-31", "2-13", "13-2")


def _vincular2_at(sigma: Sequence[int], which: str, i: int) -> int:
    n = len(sigma)
    s = (None, *sigma)  # 1-based
    x = s[i]
    if which == "31-2":
        return sum(1 for j in range(2, i) if s[j] < x < s[j - 1])
    if which == "13-2":
        return sum(1 for j in range(2, i) if s[j - 1] < x < s[j])
    if which == "2-31":
        return sum(1 for j in range(i + 1, n) if s[j + 1] < x < s[j])
    if which == "2-13":
        return sum(1 for j in range(i + 1, n) if s[j] < x < s[j + 1])
    raise ValueError(f"unknown vincular pattern {which!r}; expected one of {VINCULAR2}")


def vincular2(sigma: Sequence[int], which: str, at: int | None = None) -> int:
    """Occurrences of a length-3 vincular pattern with the value at position ``at``
    playing the role of the isolated letter; the total when ``at`` is None."""
    if at is not None:
        if not 1 <= at <= len(sigma):
            raise IndexError(f"position {at} outside 1..{len(sigma)}")
        return _vincular2_at(sigma, which, at)
    if which not in VINCULAR2:
        raise ValueError(f"unknown vincular pattern {which!r}; expected one of {VINCULAR2}")
    return kernels.vincular2_totals(sigma)[VINCULAR2.index(which)]


def hat_2_13(sigma: Sequence[int], at: int | None = None) -> int:
    """The (2-13) count with ``sigma(n+1) = n+1`` appended and ``j`` up to ``n``."""
    n = len(sigma)
    if at is None:
        return kernels.vincular2_totals(sigma)[4]
    if not 1 <= at <= n:
        raise IndexError(f"position {at} outside 1..{n}")
    s = (None, *sigma, n + 1)
    x = s[at]
    return sum(1 for j in range(at + 1, n + 1) if s[j] < x < s[j + 1])


def stat_at_value(sigma: Sequence[int], stat, value: int) -> int:
    """Evaluate a position-indexed statistic ``stat(sigma, at=...)`` at the
    position holding ``value``."""
    return stat(sigma, at=sigma.index(value) + 1)


def all_stats_at_value(sigma: Sequence[int], value: int) -> dict[str, int]:
    pos = sigma.index(value) + 1
    out = {name: _vincular2_at(sigma, name, pos) for name in VINCULAR2}
    out["hat(2-13)"] = hat_2_13(sigma, at=pos)
    return out


@dataclass(frozen=True)
class Vincular3:
    s3124: int
    s3142: int
    s4123: int
    s4132: int

    @property
    def total(self) -> int:
        return self.s3124 + self.s3142 + self.s4123 + self.s4132


def vincular3(sigma: Sequence[int]) -> Vincular3:
    """Occurrences of 31-2-4, 31-4-2, 41-2-3 and 41-3-2."""
    return Vincular3(*kernels.vincular3_counts(sigma))


def vincular3_refined(sigma: Sequence[int], k: int, l: int) -> Vincular3:
    """Occurrences refined to the pair of entries ``k < l``."""
    if not k < l:
        raise ValueError(f"need k < l, got k={k}, l={l}")
    n = len(sigma)
    if not (1 <= k and l <= n):
        raise ValueError(f"entries must lie in 1..{n}")
    s = (None, *sigma)
    pk, pl = sigma.index(k) + 1, sigma.index(l) + 1
    c = [0, 0, 0, 0]
    for i in range(2, n + 1):
        lo, hi = s[i], s[i - 1]
        if not lo < k:
            continue
        if k < hi < l:
            if i < pk < pl:
                c[0] += 1
            elif i < pl < pk:
                c[1] += 1
        elif hi > l:
            if i < pk < pl:
                c[2] += 1
            elif i < pl < pk:
                c[3] += 1
    return Vincular3(*c)


def contains(sigma: Sequence[int], pattern: Sequence[int]) -> bool:
    """Whether some subsequence of ``sigma`` is order-isomorphic to ``pattern``."""
    if len(pattern) > len(sigma):
        raise ValueError("pattern longer than permutation")
    return kernels.contains(tuple(sigma), tuple(pattern))


def avoids(sigma: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    sigma = tuple(sigma)
    return not any(len(pat) <= len(sigma) and kernels.contains(sigma, tuple(pat))
                   for pat in patterns)


def all_statistics(sigma: Sequence[int], boundary: Boundary) -> dict:
    """Everything the CLI ``stats`` command prints."""
    loc = local_stats(sigma, boundary)
    totals = dict(zip(VINCULAR2, kernels.vincular2_totals(sigma)))
    v3 = vincular3(sigma)
    return {
        "perm": format_perm(sigma),
        "boundary": boundary.right.value,
        "des": des(sigma),
        **loc.counts(),
        "Pk": sorted(loc.Pk), "Val": sorted(loc.Val),
        "Da": sorted(loc.Da), "Dd": sorted(loc.Dd),
        **totals,
        "hat(2-13)": hat_2_13(sigma),
        "31-2-4": v3.s3124, "31-4-2": v3.s3142,
        "41-2-3": v3.s4123, "41-3-2": v3.s4132,
        "vincular3": v3.total,
    }
