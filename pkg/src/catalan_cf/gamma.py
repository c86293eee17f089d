"""Gamma expansions of palindromic polynomials and valley hopping.

Valley hopping (the modified Foata–Strehl action) works with boundary
``sigma(0) = sigma(n+1) = 0`` throughout.  For a value ``x`` the
*x-factorization* is ``sigma = w1 w2 x w3 w4`` where ``w2`` / ``w3`` are the
maximal runs of letters larger than ``x`` immediately left / right of ``x``.
Swapping ``w2`` and ``w3`` toggles ``x`` between double ascent and double
descent and leaves peaks and valleys alone.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Sequence

from . import kernels
from .patternclass import PatternClass, class_members, class_polynomial
from .permstats import ZERO_ZERO, VALLEY, DD, Perm, classify, des, local_stats
from .polyring import ONE, ZERO, MPoly, t, u, v, w


class NotPalindromicError(ValueError):
    pass


@dataclass(frozen=True)
class GammaExpansion:
    """``f = sum_k gammas[k] * t**k * (1 + t)**(center2 - 2k)``."""

    center2: int
    gammas: tuple[MPoly, ...]

    def reconstruct(self) -> MPoly:
        total = ZERO
        one_plus_t = ONE + t
        for k, g in enumerate(self.gammas):
            if g:
                total = total + g * t ** k * one_plus_t ** (self.center2 - 2 * k)
        return total

    def render(self) -> str:
        """Human-readable gamma form, e.g. ``(1+t)^2 + (p + q)*t``."""
        parts = []
        for k, g in enumerate(self.gammas):
            if not g:
                continue
            factors = []
            if not g.is_one():
                factors.append(f"({g})" if len(g) > 1 else str(g))
            if k:
                factors.append("t" if k == 1 else f"t^{k}")
            e = self.center2 - 2 * k
            if e:
                factors.append("(1+t)" if e == 1 else f"(1+t)^{e}")
            parts.append("*".join(factors) or "1")
        return " + ".join(parts) if parts else "0"


def gamma_decompose(f: MPoly) -> GammaExpansion:
    """Expand ``f``, palindromic in ``t``, in the basis ``t^k (1+t)^(n-2k)``.

    The other variables ride along in the coefficients.  Elimination runs
    from the lowest power of ``t`` upward; a non-zero residual means ``f`` is
    not palindromic.
    """
    if f.is_zero():
        raise NotPalindromicError("the zero polynomial has no center")
    coeffs = f.coefficients_in("t")
    r = next(i for i, c in enumerate(coeffs) if c)
    s = len(coeffs) - 1
    n = r + s
    for i in range((s - r) // 2 + 1):
        if coeffs[r + i] != coeffs[s - i]:
            raise NotPalindromicError(
                f"coefficients of t^{r + i} and t^{s - i} differ")
    residual = f
    one_plus_t = ONE + t
    gammas = []
    for k in range(n // 2 + 1):
        parts = residual.coefficients_in("t")
        g = parts[k] if k < len(parts) else ZERO
        gammas.append(g)
        if g:
            residual = residual - g * t ** k * one_plus_t ** (n - 2 * k)
    if residual:
        raise NotPalindromicError(f"non-zero residual {residual}")
    return GammaExpansion(n, tuple(gammas))


@dataclass(frozen=True)
class XFactorization:
    w1: Perm
    w2: Perm
    x: int
    w3: Perm
    w4: Perm

    def word(self) -> Perm:
        return self.w1 + self.w2 + (self.x,) + self.w3 + self.w4


def x_factorization(sigma: Sequence[int], x: int) -> XFactorization:
    sigma = tuple(sigma)
    if x not in sigma:
        raise ValueError(f"{x} does not occur in {sigma}")
    i = sigma.index(x)
    a = i
    while a > 0 and sigma[a - 1] > x:
        a -= 1
    b = i + 1
    while b < len(sigma) and sigma[b] > x:
        b += 1
    return XFactorization(sigma[:a], sigma[a:i], x, sigma[i + 1:b], sigma[b:])


def phi_x(sigma: Sequence[int], x: int) -> Perm:
    """Foata–Strehl involution: exchange ``w2`` and ``w3``."""
    f = x_factorization(sigma, x)
    return f.w1 + f.w3 + (x,) + f.w2 + f.w4


def phi_prime_x(sigma: Sequence[int], x: int) -> Perm:
    sigma = tuple(sigma)
    if classify(sigma, ZERO_ZERO)[x] == VALLEY:
        return sigma
    return phi_x(sigma, x)


def phi_prime_S(sigma: Sequence[int], S: Iterable[int]) -> Perm:
    out = tuple(sigma)
    for x in sorted(set(S)):
        out = phi_prime_x(out, x)
    return out


def mfs_representative(sigma: Sequence[int]) -> Perm:
    """The orbit member without double descents (hop every double descent)."""
    sigma = tuple(sigma)
    return phi_prime_S(sigma, local_stats(sigma, ZERO_ZERO).Dd)


@dataclass(frozen=True)
class Orbit:
    members: frozenset
    representative: Perm


def mfs_orbit(sigma: Sequence[int]) -> Orbit:
    """Closure of ``{sigma}`` under every single hop ``phi'_x``."""
    sigma = tuple(sigma)
    seen = {sigma}
    frontier = [sigma]
    n = len(sigma)
    while frontier:
        cur = frontier.pop()
        for x in range(1, n + 1):
            nxt = phi_prime_x(cur, x)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    reps = [s for s in seen if not local_stats(s, ZERO_ZERO).Dd]
    if len(reps) != 1:
        raise AssertionError(f"orbit of {sigma} has {len(reps)} dd-free members")
    return Orbit(frozenset(seen), reps[0])


def gamma_class(n1: int, k: int) -> list[Perm]:
    """Members of the B4 class of length ``n1`` with no double descent and
    ``val = des = k``."""
    out = []
    for sigma in class_members(n1, PatternClass.B4):
        kinds = Counter(classify(sigma, ZERO_ZERO).values())
        if kinds[DD] == 0 and kinds[VALLEY] == k and des(sigma) == k:
            out.append(sigma)
    return out


def gamma_via_perms(n1: int, k: int) -> MPoly:
    """``sum p^(2-13) q^(31-2)`` over :func:`gamma_class`."""
    acc: Counter = Counter()
    for sigma in gamma_class(n1, k):
        s31_2, _, s2_13, _, _ = kernels.vincular2_totals(sigma)
        acc[(s2_13, s31_2, 0, 0, 0, 0)] += 1
    return MPoly.from_terms(acc.items())


def gamma_multinomial(n: int, k: int) -> int:
    return factorial(n) // (factorial(k) ** 2 * factorial(n - 2 * k))


def b_polynomial(n: int) -> MPoly:
    """The three-variable Type B polynomial: the class enumerator at u=v=w=1."""
    return class_polynomial(n, PatternClass.B4).specialize({"u": 1, "v": 1, "w": 1})


def gamma_identity_rhs(n: int, gammas: Sequence[MPoly]) -> MPoly:
    total = ZERO
    base = u + t * v
    for k, g in enumerate(gammas):
        if g:
            total = total + g * (t * w) ** k * base ** (n - 2 * k)
    return total


def full_gamma_identity_check(n: int) -> bool:
    """Six-variable identity: class enumerator equals
    ``sum_k gamma_{n+1,k}(p, q) (tw)^k (u + tv)^(n - 2k)``."""
    lhs = class_polynomial(n, PatternClass.B4)
    gammas = [gamma_via_perms(n + 1, k) for k in range(n // 2 + 1)]
    return lhs == gamma_identity_rhs(n, gammas)
