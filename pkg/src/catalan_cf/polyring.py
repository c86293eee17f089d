"""Sparse multivariate polynomials over the integers and truncated power series.

Polynomials live in Z[p, q, t, u, v, w].  Exponent vectors are packed into a
single integer key (8 bits per variable, ``p`` most significant) so that the
product of two monomials is one integer addition and integer order on keys is
lexicographic order on exponent vectors.
"""
from __future__ import annotations

import json
import re
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

VARS = ("p", "q", "t", "u", "v", "w")
_INDEX = {name: i for i, name in enumerate(VARS)}
_BITS = 8
_FIELD = (1 << _BITS) - 1
_SHIFT = {name: _BITS * (len(VARS) - 1 - i) for i, name in enumerate(VARS)}

DEFAULT_EXPONENT_CAP = 64
_exponent_cap = DEFAULT_EXPONENT_CAP


class ExponentOverflowError(OverflowError):
    pass


class OrderMismatchError(ValueError):
    pass


class NonUnitError(ZeroDivisionError):
    pass


def set_exponent_cap(cap: int) -> int:
    """Set the per-variable exponent bound; returns the previous value."""
    global _exponent_cap
    if not 0 < cap < 128:
        raise ValueError("exponent cap must lie in 1..127")
    old, _exponent_cap = _exponent_cap, cap
    return old


def get_exponent_cap() -> int:
    return _exponent_cap


def pack(exps: Sequence[int]) -> int:
    if len(exps) != len(VARS):
        raise ValueError(f"expected {len(VARS)} exponents, got {len(exps)}")
    key = 0
    for e in exps:
        if e < 0:
            raise ValueError("negative exponent")
        if e > _exponent_cap:
            raise ExponentOverflowError(f"exponent {e} exceeds cap {_exponent_cap}")
        key = (key << _BITS) | e
    return key


def unpack(key: int) -> tuple[int, ...]:
    return tuple((key >> _SHIFT[name]) & _FIELD for name in VARS)


def _check_keys(keys: Iterable[int]) -> None:
    cap = _exponent_cap
    for key in keys:
        k = key
        while k:
            if k & _FIELD > cap:
                raise ExponentOverflowError(
                    f"exponent vector {unpack(key)} exceeds cap {cap}")
            k >>= _BITS


Scalar = int
PolyLike = Union["MPoly", int]


class MPoly:
    """Immutable sparse polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        # trusted constructor: keys packed, zero coefficients allowed here and dropped
        self._terms = {k: c for k, c in (terms or {}).items() if c}
        self._hash = None

    # -- construction -----------------------------------------------------
    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "MPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "MPoly":
        return cls._raw({0: c} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MPoly":
        if name not in _INDEX:
            raise KeyError(f"unknown variable {name!r}; alphabet is {VARS}")
        exps = [0] * len(VARS)
        exps[_INDEX[name]] = power
        return cls._raw({pack(exps): 1})

    @classmethod
    def monomial(cls, coeff: int = 1, **powers: int) -> "MPoly":
        exps = [0] * len(VARS)
        for name, e in powers.items():
            if name not in _INDEX:
                raise KeyError(f"unknown variable {name!r}")
            exps[_INDEX[name]] = e
        return cls._raw({pack(exps): coeff} if coeff else {})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Sequence[int], int]]) -> "MPoly":
        acc: dict[int, int] = defaultdict(int)
        for exps, c in terms:
            acc[pack(exps)] += c
        return cls(acc)

    @staticmethod
    def coerce(x: PolyLike) -> "MPoly":
        if isinstance(x, MPoly):
            return x
        if isinstance(x, int):
            return MPoly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to MPoly")

    # -- inspection -------------------------------------------------------
    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms as ``(exponents, coeff)`` in lexicographic exponent order."""
        return [(unpack(k), self._terms[k]) for k in sorted(self._terms)]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def constant_term(self) -> int:
        return self._terms.get(0, 0)

    def degree(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        shift = _SHIFT[name]
        return max(((k >> shift) & _FIELD for k in self._terms), default=-1)

    def min_degree(self, name: str) -> int:
        shift = _SHIFT[name]
        return min(((k >> shift) & _FIELD for k in self._terms), default=-1)

    def variables(self) -> set[str]:
        return {name for name in VARS
                if any((k >> _SHIFT[name]) & _FIELD for k in self._terms)}

    def coefficients_in(self, name: str) -> list["MPoly"]:
        """Split as ``sum c_i * name**i``; returns ``[c_0, c_1, ...]``."""
        shift = _SHIFT[name]
        parts: dict[int, dict[int, int]] = defaultdict(dict)
        for k, c in self._terms.items():
            e = (k >> shift) & _FIELD
            parts[e][k & ~(_FIELD << shift)] = c
        top = max(parts, default=-1)
        return [MPoly._raw(parts.get(i, {})) for i in range(top + 1)]

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: PolyLike) -> "MPoly":
        if isinstance(other, int):
            other = MPoly.const(other)
        elif not isinstance(other, MPoly):
            return NotImplemented
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        out = dict(big)
        for k, c in small.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: PolyLike) -> "MPoly":
        if isinstance(other, int):
            other = MPoly.const(other)
        elif not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: PolyLike) -> "MPoly":
        return MPoly.coerce(other) - self

    def __mul__(self, other: PolyLike) -> "MPoly":
        if isinstance(other, int):
            if not other:
                return MPoly()
            return MPoly._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return MPoly()
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = defaultdict(int)
        for kb, cb in b.items():
            for ka, ca in a.items():
                out[ka + kb] += ca * cb
        _check_keys(out)
        return MPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result, base = MPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- evaluation -------------------------------------------------------
    def eval(self, assignment: Mapping[str, int]) -> int:
        missing = [name for name in VARS if name not in assignment]
        if missing:
            raise KeyError(f"assignment missing variables {missing}")
        vals = [assignment[name] for name in VARS]
        total = 0
        for k, c in self._terms.items():
            term = c
            for name, x in zip(VARS, vals):
                e = (k >> _SHIFT[name]) & _FIELD
                if e:
                    term *= x ** e
            total += term
        return total

    def substitute(self, name: str, value: PolyLike) -> "MPoly":
        """Replace one variable by a polynomial (or integer)."""
        value = MPoly.coerce(value)
        shift = _SHIFT[name]
        clear = ~(_FIELD << shift)
        groups: dict[int, dict[int, int]] = defaultdict(dict)
        for k, c in self._terms.items():
            groups[(k >> shift) & _FIELD][k & clear] = c
        result = MPoly()
        powers = {0: MPoly.const(1)}
        for e in sorted(groups):
            if e not in powers:
                powers[e] = value ** e
            result = result + MPoly._raw(groups[e]) * powers[e]
        return result

    def specialize(self, assignment: Mapping[str, PolyLike]) -> "MPoly":
        """Simultaneous substitution, so ``{"p": q, "q": 1}`` swaps correctly."""
        if not assignment:
            return self
        names = list(assignment)
        values = [MPoly.coerce(assignment[name]) for name in names]
        shifts = [_SHIFT[name] for name in names]
        clear = ~sum(_FIELD << s for s in shifts)
        groups: dict[tuple[int, ...], dict[int, int]] = defaultdict(dict)
        for k, c in self._terms.items():
            exps = tuple((k >> s) & _FIELD for s in shifts)
            groups[exps][k & clear] = c
        powers: dict[tuple[int, int], MPoly] = {}
        result = MPoly()
        for exps, rest in groups.items():
            factor = MPoly._raw(rest)
            for i, e in enumerate(exps):
                if e:
                    if (i, e) not in powers:
                        powers[(i, e)] = values[i] ** e
                    factor = factor * powers[(i, e)]
            result = result + factor
        return result

    # -- rendering --------------------------------------------------------
    def to_json(self) -> list[dict]:
        return [{"c": str(c), "e": list(e)} for e, c in self.terms()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> "MPoly":
        return cls.from_terms((item["e"], int(item["c"])) for item in data)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        # highest total degree first reads most naturally
        for e, c in sorted(self.terms(), key=lambda ec: (-sum(ec[0]), [-x for x in ec[0]])):
            mono = "*".join(
                name if x == 1 else f"{name}^{x}" for name, x in zip(VARS, e) if x)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"MPoly('{self}')"

    @classmethod
    def parse(cls, text: str) -> "MPoly":
        return _Parser(text).parse()


_TOKEN = re.compile(r"\s*(?:(\d+)|([pqtuvw])|(\*\*|[-+*^()]))")


class _Parser:
    """Recursive-descent parser for ``+ - * ^ ( )`` over integers and p..w."""

    def __init__(self, text: str):
        self.tokens: list[tuple[str, str]] = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise ValueError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
            num, name, op = m.groups()
            if num is not None:
                self.tokens.append(("num", num))
            elif name is not None:
                self.tokens.append(("var", name))
            else:
                self.tokens.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of input")
        self.i += 1
        return tok

    def parse(self) -> MPoly:
        if not self.tokens:
            raise ValueError("empty expression")
        result = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing input at token {self.peek()}")
        return result

    def expr(self) -> MPoly:
        tok = self.peek()
        if tok in (("op", "-"), ("op", "+")):
            self.take()
            value = self.term()
            value = -value if tok[1] == "-" else value
        else:
            value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> MPoly:
        value = self.power()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                value = value * self.power()
            elif tok is not None and (tok[0] in ("num", "var") or tok == ("op", "(")):
                value = value * self.power()  # implicit multiplication: 2pt, (p+q)t
            else:
                return value

    def power(self) -> MPoly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ValueError("exponent must be a non-negative integer")
            return base ** int(val)
        return base

    def atom(self) -> MPoly:
        kind, val = self.take()
        if kind == "num":
            return MPoly.const(int(val))
        if kind == "var":
            return MPoly.var(val)
        if val == "(":
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parenthesis")
            return inner
        raise ValueError(f"unexpected token {val!r}")


ZERO = MPoly()
ONE = MPoly.const(1)
p, q, t, u, v, w = (MPoly.var(name) for name in VARS)


def mpoly_add(a: MPoly, b: MPoly) -> MPoly:
    return a + b


def mpoly_mul(a: MPoly, b: MPoly) -> MPoly:
    return a * b


def mpoly_eval(a: MPoly, assignment: Mapping[str, int]) -> int:
    return a.eval(assignment)


def mpoly_substitute(a: MPoly, name: str, value: PolyLike) -> MPoly:
    return a.substitute(name, value)


def all_ones() -> dict[str, int]:
    return {name: 1 for name in VARS}


@dataclass(frozen=True)
class Series:
    """Power series in z truncated after ``z**order``."""

    order: int
    coeffs: tuple[MPoly, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        coeffs = tuple(MPoly.coerce(c) for c in self.coeffs)
        if len(coeffs) != self.order + 1:
            raise ValueError(
                f"series of order {self.order} needs {self.order + 1} coefficients, "
                f"got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_list(cls, coeffs: Sequence[PolyLike], order: int | None = None) -> "Series":
        coeffs = [MPoly.coerce(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        coeffs = (coeffs + [ZERO] * (order + 1))[: order + 1]
        return cls(order, tuple(coeffs))

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.from_list([ONE], order)

    def __getitem__(self, n: int) -> MPoly:
        return self.coeffs[n]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise OrderMismatchError("cannot raise the truncation order")
        return Series(order, self.coeffs[: order + 1])

    def _check(self, other: "Series") -> None:
        if not isinstance(other, Series):
            raise TypeError("expected Series")
        if other.order != self.order:
            raise OrderMismatchError(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        return Series(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Series") -> "Series":
        self._check(other)
        return Series(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: Union["Series", MPoly, int]) -> "Series":
        if isinstance(other, (MPoly, int)):
            return Series(self.order, tuple(c * other for c in self.coeffs))
        self._check(other)
        n = self.order
        out = []
        for k in range(n + 1):
            acc = ZERO
            for i in range(k + 1):
                a = self.coeffs[i]
                if a:
                    b = other.coeffs[k - i]
                    if b:
                        acc = acc + a * b
            out.append(acc)
        return Series(n, tuple(out))

    def shift(self, k: int) -> "Series":
        """Multiply by ``z**k`` and truncate."""
        coeffs = [ZERO] * k + list(self.coeffs)
        return Series(self.order, tuple(coeffs[: self.order + 1]))

    def inverse(self) -> "Series":
        """Reciprocal; the constant coefficient must be the polynomial 1."""
        if not self.coeffs[0].is_one():
            raise NonUnitError(f"constant term {self.coeffs[0]} is not 1")
        n = self.order
        inv = [ONE]
        for k in range(1, n + 1):
            acc = ZERO
            for i in range(1, k + 1):
                a = self.coeffs[i]
                if a:
                    acc = acc - a * inv[k - i]
            inv.append(acc)
        return Series(n, tuple(inv))

    def map(self, fn) -> "Series":
        return Series(self.order, tuple(fn(c) for c in self.coeffs))

    def specialize(self, assignment: Mapping[str, PolyLike]) -> "Series":
        return self.map(lambda c: c.specialize(assignment))

    def eval(self, assignment: Mapping[str, int]) -> list[int]:
        return [c.eval(assignment) for c in self.coeffs]

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Series":
        return cls(int(data["order"]), tuple(MPoly.from_json(c) for c in data["coeffs"]))


def series_mul(a: Series, b: Series) -> Series:
    return a * b


def series_inverse(a: Series) -> Series:
    return a.inverse()


def dumps(obj: MPoly | Series) -> str:
    """Canonical compact JSON text used by golden files."""
    return json.dumps(obj.to_json(), separators=(",", ":"))


def loads(text: str) -> MPoly | Series:
    data = json.loads(text)
    if isinstance(data, dict):
        return Series.from_json(data)
    return MPoly.from_json(data)
