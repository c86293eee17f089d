"""2-Motzkin paths, Laguerre histories, path diagrams and the Françon–Viennot maps.

Step ``i`` of every path corresponds to the *value* ``i`` of the permutation,
and all per-step statistics are read at the position holding that value.
The height of a step is the height of its starting point.

Both Françon–Viennot maps are inverted by the same slot replay used for
insertion encodings: value ``i`` goes into a slot chosen by its annotation,
with the step kind deciding how (``U``: middle, ``D``: fill, ``Lb``: left,
``Lr``: right).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from . import config
from .patternclass import PatternClass, PatternViolationError
from .permstats import (ZERO_INF, ZERO_ZERO, DA, DD, PEAK, VALLEY, Perm, avoids,
                        classify)
from .polyring import ONE, MPoly, p, q, t, u, v, w

U, D, LB, LR = "U", "D", "Lb", "Lr"
STEPS = (U, D, LB, LR)  # also the lexicographic generation order
_RISE = {U: 1, D: -1, LB: 0, LR: 0}
_STEP_OF = {VALLEY: U, PEAK: D, DA: LB, DD: LR}


class InvalidPathError(ValueError):
    pass


def heights(path: Sequence[str]) -> list[int]:
    """Starting heights ``h_0 .. h_n`` (``h_i`` is after step ``i``)."""
    hs = [0]
    for s in path:
        if s not in _RISE:
            raise InvalidPathError(f"unknown step {s!r}")
        hs.append(hs[-1] + _RISE[s])
    return hs


def is_motzkin(path: Sequence[str]) -> bool:
    hs = heights(path)
    return min(hs) >= 0 and hs[-1] == 0


def format_path(path: Sequence[str]) -> str:
    return " ".join(path)


def parse_path(text: str) -> tuple[str, ...]:
    path = tuple(text.split())
    heights(path)
    return path


def motzkin_paths(n: int, steps: Sequence[str] = STEPS) -> Iterator[tuple[str, ...]]:
    """All 2-Motzkin paths of length ``n`` over ``steps``, lexicographically."""
    order = [s for s in STEPS if s in steps]

    def walk(prefix: list, h: int):
        left = n - len(prefix)
        if left == 0:
            if h == 0:
                yield tuple(prefix)
            return
        for s in order:
            nh = h + _RISE[s]
            if 0 <= nh <= left - 1:
                prefix.append(s)
                yield from walk(prefix, nh)
                prefix.pop()

    yield from walk([], 0)


@dataclass(frozen=True)
class LaguerreHistory:
    path: tuple[str, ...]
    p: tuple[int, ...]
    restricted: bool = False

    def __post_init__(self):
        if len(self.path) != len(self.p):
            raise InvalidPathError("path and annotation lengths differ")
        if not is_motzkin(self.path):
            raise InvalidPathError(f"{format_path(self.path)} is not a Motzkin path")
        for s, pi, h in zip(self.path, self.p, heights(self.path)):
            bound = h - 1 if self.restricted and s in (LR, D) else h
            if not 0 <= pi <= bound:
                raise InvalidPathError(f"annotation {pi} outside 0..{bound} on {s} at height {h}")

    def __len__(self) -> int:
        return len(self.path)


def laguerre_histories(n: int, restricted: bool = False) -> Iterator[LaguerreHistory]:
    for path in motzkin_paths(n):
        hs = heights(path)
        ranges = [range((h - 1 if restricted and s in (LR, D) else h) + 1)
                  for s, h in zip(path, hs)]
        for ps in product(*ranges):
            yield LaguerreHistory(path, ps, restricted)


def _steps_by_value(sigma: Sequence[int], boundary, n: int) -> tuple[str, ...]:
    kinds = classify(sigma, boundary)
    return tuple(_STEP_OF[kinds[i]] for i in range(1, n + 1))


def _annotations(sigma: Sequence[int], n: int, descending: bool) -> tuple[int, ...]:
    """Per-value (2-13) (ascending pairs) or (2-31) (descending pairs) counts."""
    m = len(sigma)
    pos = {x: i for i, x in enumerate(sigma)}
    out = []
    for value in range(1, n + 1):
        i = pos[value]
        c = 0
        for j in range(i + 1, m - 1):
            a, b = sigma[j], sigma[j + 1]
            if descending:
                if b < value < a:
                    c += 1
            elif a < value < b:
                c += 1
        out.append(c)
    return tuple(out)


def psi_fv(sigma: Sequence[int]) -> LaguerreHistory:
    """Permutation of ``n + 1`` to a Laguerre history of length ``n``
    (boundary ``(0, 0)``, annotation = (2-13) at each value)."""
    sigma = tuple(sigma)
    if not sigma:
        raise ValueError("psi_fv needs a non-empty permutation")
    n = len(sigma) - 1
    return LaguerreHistory(_steps_by_value(sigma, ZERO_ZERO, n), _annotations(sigma, n, False))


def phi_fv(sigma: Sequence[int]) -> LaguerreHistory:
    """Permutation of ``n`` to a restricted Laguerre history of length ``n``
    (boundary ``(0, inf)``, annotation = (2-31) at each value)."""
    sigma = tuple(sigma)
    n = len(sigma)
    return LaguerreHistory(_steps_by_value(sigma, ZERO_INF, n), _annotations(sigma, n, True),
                           restricted=True)


_ACTION = {U: "m", D: "f", LB: "l", LR: "r"}


def _replay(path: Sequence[str], target_slot) -> list:
    slot = object()
    conf: list = [slot]
    for value, s in enumerate(path, 1):
        idxs = [i for i, x in enumerate(conf) if x is slot]
        pos = idxs[target_slot(value - 1, s, len(idxs))]
        conf[pos:pos + 1] = {
            "m": [slot, value, slot], "l": [value, slot],
            "r": [slot, value], "f": [value]}[_ACTION[s]]
    return conf, slot


def psi_fv_inv(history: LaguerreHistory) -> Perm:
    """Inverse of :func:`psi_fv`: ``p_i`` counts the open slots to the right."""
    ps = history.p
    conf, slot = _replay(history.path, lambda i, s, k: k - 1 - ps[i])
    n = len(history.path)
    assert conf.count(slot) == 1
    return tuple(n + 1 if x is slot else x for x in conf)


def phi_fv_inv(history: LaguerreHistory) -> Perm:
    """Inverse of :func:`phi_fv`; the rightmost slot is kept open and dropped."""
    ps = history.p

    def target(i, s, k):
        return k - 1 - ps[i] if s in (U, LB) else k - 2 - ps[i]

    conf, slot = _replay(history.path, target)
    assert conf[-1] is slot and conf.count(slot) == 1
    return tuple(conf[:-1])


@dataclass(frozen=True)
class PathDiagram:
    path: tuple[str, ...]
    xi: tuple[int, ...]

    kind = "?"

    def __post_init__(self):
        if len(self.path) != len(self.xi):
            raise InvalidPathError("path and xi lengths differ")
        if not is_motzkin(self.path):
            raise InvalidPathError(f"{format_path(self.path)} is not a Motzkin path")
        for k, (s, x, h) in enumerate(zip(self.path, self.xi, heights(self.path)), 1):
            if x not in self.allowed(s, h):
                raise InvalidPathError(
                    f"type {self.kind}: step {k} ({s} at height {h}) cannot carry xi={x}")

    @staticmethod
    def allowed(step: str, h: int) -> tuple[int, ...]:
        raise NotImplementedError

    @staticmethod
    def step_weight(step: str, h: int, xi: int) -> MPoly:
        raise NotImplementedError

    def weight(self) -> MPoly:
        result = ONE
        for s, x, h in zip(self.path, self.xi, heights(self.path)):
            result = result * self.step_weight(s, h, x)
        return result

    def __len__(self) -> int:
        return len(self.path)


class PathDiagramA(PathDiagram):
    """No ``Lr`` steps; ``D`` carries ``h - 1``, ``Lb`` carries 0 or ``h``."""

    kind = "A"

    @staticmethod
    def allowed(step, h):
        if step == D:
            return (h - 1,)
        if step == LB:
            return (0, h) if h >= 1 else (0,)
        if step == U:
            return (0,)
        return ()

    @staticmethod
    def step_weight(step, h, xi):
        if step == U:
            return q ** h * w
        if step == D:
            return p ** h * t
        return p ** xi * q ** (h - xi) * u


class PathDiagramB(PathDiagram):
    """``D`` from height 1 carries 0 or 1; every other step carries its height."""

    kind = "B"

    @staticmethod
    def allowed(step, h):
        if step == D and h == 1:
            return (0, 1)
        return (h,)

    @staticmethod
    def step_weight(step, h, xi):
        if step == U:
            return p ** xi * w * t
        if step == D:
            return p ** xi * q ** (h - xi)
        if step == LB:
            return p ** xi * u
        return p ** xi * v * t


class PathDiagramC(PathDiagram):
    """Every step carries its height."""

    kind = "C"

    @staticmethod
    def allowed(step, h):
        return (h,)

    @staticmethod
    def step_weight(step, h, xi):
        base = q ** xi
        if step == U:
            return base * w
        if step == D:
            return base * t
        if step == LB:
            return base * u
        return base * v * t


DIAGRAM_TYPES = {"A": PathDiagramA, "B": PathDiagramB, "C": PathDiagramC}


def weight(d: PathDiagram) -> MPoly:
    return d.weight()


def _require(sigma: Perm, c: PatternClass) -> None:
    if not avoids(sigma, c.patterns):
        pats = ", ".join("".join(map(str, x)) for x in c.patterns)
        raise PatternViolationError(f"{sigma} contains one of {pats}")


def phi1(sigma: Sequence[int]) -> PathDiagramA:
    """321-avoiding permutation of ``n`` to a type A diagram of length ``n``."""
    sigma = tuple(sigma)
    _require(sigma, PatternClass.A321)
    h = phi_fv(sigma)
    return PathDiagramA(h.path, h.p)


def phi1_inv(d: PathDiagramA) -> Perm:
    return phi_fv_inv(LaguerreHistory(d.path, d.xi, restricted=True))


def phi2(sigma: Sequence[int]) -> PathDiagramB:
    """Class-B4 permutation of ``n + 1`` to a type B diagram of length ``n``."""
    sigma = tuple(sigma)
    _require(sigma, PatternClass.B4)
    h = psi_fv(sigma)
    return PathDiagramB(h.path, h.p)


def phi2_inv(d: PathDiagramB) -> Perm:
    return psi_fv_inv(LaguerreHistory(d.path, d.xi))


def phi3(sigma: Sequence[int]) -> PathDiagramC:
    """312-avoiding permutation of ``n + 1`` to a type C diagram of length ``n``."""
    sigma = tuple(sigma)
    _require(sigma, PatternClass.A312)
    h = psi_fv(sigma)
    return PathDiagramC(h.path, h.p)


def phi3_inv(d: PathDiagramC) -> Perm:
    return psi_fv_inv(LaguerreHistory(d.path, d.xi))


def diagrams(n: int, kind: str) -> Iterator[PathDiagram]:
    """Every diagram of the given type, paths first then xi, lexicographically."""
    cls = DIAGRAM_TYPES[kind.upper()]
    steps = (U, D, LB) if cls is PathDiagramA else STEPS
    for path in motzkin_paths(n, steps):
        hs = heights(path)
        choices = [cls.allowed(s, h) for s, h in zip(path, hs)]
        for xi in product(*choices):
            yield cls(path, xi)


def path_sum(n: int, kind: str, cap: int | None = None) -> MPoly:
    """Sum of weights over all diagrams of length ``n`` (the lattice-path side
    of Flajolet's correspondence)."""
    if cap is None:
        cap = config.active().pathsum_cap
    config.check_cap(n, cap, "path_sum")
    acc: Counter = Counter()
    for d in diagrams(n, kind):
        for exps, c in d.weight().terms():
            acc[tuple(exps)] += c
    return MPoly.from_terms(acc.items())
