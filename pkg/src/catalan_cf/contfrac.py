"""Jacobi- and Stieltjes-type continued fractions expanded as truncated series.

A J-fraction is

    1 / (1 - b_0 z - lam_1 z^2 / (1 - b_1 z - lam_2 z^2 / (1 - ...)))

and an S-fraction is ``1 / (1 - c_1 z / (1 - c_2 z / (1 - ...)))``.  Both are
expanded bottom-up from a finite depth with the tail replaced by 1; level
``k`` of a J-fraction first touches ``z**(2k)`` so the truncation depth below
is exact for the requested order.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .polyring import ONE, ZERO, MPoly, PolyLike, Series, p, q, t, u, v, w

Coeff = Callable[[int], MPoly]


@dataclass(frozen=True)
class JFraction:
    b: Coeff
    lam: Coeff
    name: str = field(default="", compare=False)

    def specialize(self, assignment: Mapping[str, PolyLike]) -> "JFraction":
        b, lam = self.b, self.lam
        return JFraction(lambda k: b(k).specialize(assignment),
                         lambda k: lam(k).specialize(assignment),
                         name=self.name)


@dataclass(frozen=True)
class SFraction:
    c: Coeff
    name: str = field(default="", compare=False)

    def specialize(self, assignment: Mapping[str, PolyLike]) -> "SFraction":
        c = self.c
        return SFraction(lambda k: c(k).specialize(assignment), name=self.name)


def _pad(s: Series, order: int) -> Series:
    if s.order >= order:
        return s.truncate(order)
    return Series.from_list(list(s.coeffs), order)


def default_depth(order: int) -> int:
    return -(-order // 2) + 1


def jfraction_series(J: JFraction, N: int, depth: int | None = None) -> Series:
    """Taylor coefficients of a J-fraction up to ``z**N``.

    Level ``k`` is expanded only to order ``N - 2k`` since it is multiplied by
    ``z**(2k)`` on the way up.
    """
    if N < 0:
        raise ValueError("order must be non-negative")
    D = default_depth(N) if depth is None else depth
    if D < 1:
        raise ValueError("depth must be at least 1")
    tail = Series.one(0)  # stands in for level D
    for k in range(D - 1, -1, -1):
        order = max(N - 2 * k, 0)
        denom = [ONE, -J.b(k)] if order >= 1 else [ONE]
        denom = Series.from_list(denom, order)
        if order >= 2:
            lam = J.lam(k + 1)
            if lam:
                shifted = [ZERO, ZERO] + [x * lam for x in _pad(tail, order - 2).coeffs]
                denom = denom - Series(order, tuple(shifted))
        tail = denom.inverse()
    return _pad(tail, N)


def sfraction_series(S: SFraction, N: int, depth: int | None = None) -> Series:
    """Taylor coefficients of an S-fraction up to ``z**N``."""
    if N < 0:
        raise ValueError("order must be non-negative")
    D = N + 1 if depth is None else depth
    tail = Series.one(0)
    for k in range(D, 0, -1):
        order = max(N - (k - 1), 0)
        denom = Series.one(order)
        if order >= 1:
            c = S.c(k)
            if c:
                shifted = [ZERO] + [x * c for x in _pad(tail, order - 1).coeffs]
                denom = denom - Series(order, tuple(shifted))
        tail = denom.inverse()
    return _pad(tail, N)


def contract(S: SFraction, N: int | None = None) -> JFraction:
    """Even contraction of an S-fraction into the equivalent J-fraction.

    ``N`` is accepted for symmetry with the expansion routines; the coefficient
    maps are closed-form so any order works.
    """
    c = S.c

    def b(k: int) -> MPoly:
        return c(1) if k == 0 else c(2 * k) + c(2 * k + 1)

    def lam(k: int) -> MPoly:
        return c(2 * k - 1) * c(2 * k)

    return JFraction(b, lam, name=f"contract({S.name})" if S.name else "contract")


class CF(enum.Enum):
    TypeA = "typeA"
    TypeB = "typeB"
    TypeC = "typeC"


def _type_a() -> JFraction:
    def b(k: int) -> MPoly:
        return u if k == 0 else (p ** k + q ** k) * u

    def lam(k: int) -> MPoly:
        return w * t * p ** k * q ** (k - 1)

    return JFraction(b, lam, name="typeA")


def _type_b() -> JFraction:
    def b(k: int) -> MPoly:
        return p ** k * (u + t * v)

    def lam(k: int) -> MPoly:
        if k == 1:
            return (p + q) * t * w
        return p ** (2 * k - 1) * t * w

    return JFraction(b, lam, name="typeB")


def _type_c() -> JFraction:
    def b(k: int) -> MPoly:
        return q ** k * (u + v * t)

    def lam(k: int) -> MPoly:
        return w * t * q ** (2 * k - 1)

    return JFraction(b, lam, name="typeC")


_NAMED = {CF.TypeA: _type_a, CF.TypeB: _type_b, CF.TypeC: _type_c}


def named_cf(which: CF | str) -> JFraction:
    if isinstance(which, str):
        which = CF(which if which.startswith("type") else f"type{which.upper()}")
    return _NAMED[which]()


def catalan_jfraction() -> JFraction:
    return JFraction(lambda k: ONE if k == 0 else MPoly.const(2), lambda k: ONE, name="catalan")


def bar_c_sfraction() -> SFraction:
    """S-fraction of ``C_n(1, q, 1)``: odd levels ``q**k``, even levels 1."""
    return SFraction(lambda k: q ** ((k - 1) // 2) if k % 2 else ONE, name="barC")


def tilde_c_sfraction() -> SFraction:
    """S-fraction of ``C_n(q, 1, 1)``: even levels ``q**(k/2)``, odd levels 1."""
    return SFraction(lambda k: ONE if k % 2 else q ** (k // 2), name="tildeC")


def sequence_sfraction(values) -> SFraction:
    """S-fraction from an explicit finite list ``c_1, c_2, ...`` (zero beyond)."""
    vals = [MPoly.coerce(x) for x in values]
    return SFraction(lambda k: vals[k - 1] if k <= len(vals) else ZERO, name="list")
