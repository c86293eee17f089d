"""Verification suites: every identity checked by at least two independent routes.

Each suite produces one :class:`Cell` per ``n`` with the values of all
routes; a cell passes iff the routes agree exactly.  Nothing here uses a
tolerance.
"""
from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable

from . import config, kernels
from .contfrac import (bar_c_sfraction, catalan_jfraction, contract, jfraction_series,
                       named_cf, sequence_sfraction, sfraction_series, tilde_c_sfraction)
from .gamma import (b_polynomial, full_gamma_identity_check, gamma_decompose,
                    gamma_multinomial, gamma_via_perms, mfs_orbit, phi_prime_x)
from .pathdiag import path_sum
from .patternclass import PatternClass, class_polynomial, generate_class
from .permstats import ZERO_ZERO, des, local_stats, vincular3
from .polyring import MPoly, Series, all_ones

# The five gamma-form expansions of the Type B polynomials B_1 .. B_5.
LISTED_B_EXPANSIONS = {
    1: "1+t",
    2: "(1+t)^2+(p+q)t",
    3: "(1+t)^3+(p+2)(p+q)t(1+t)",
    4: "(1+t)^4+(p+q)(p^2+2p+3)t(1+t)^2+t^2(p^3+p+q)(p+q)",
    5: "(1+t)^5+(p+q)(p^3+2p^2+3p+4)t(1+t)^3"
       "+t^2(1+t)(p+q)(p^5+2p^4+2p^3+2p^2+(2q+3)p+3q)",
}
LISTED_B_GAMMAS = {
    1: ["1"],
    2: ["1", "p+q"],
    3: ["1", "(p+2)(p+q)"],
    4: ["1", "(p+q)(p^2+2p+3)", "(p^3+p+q)(p+q)"],
    5: ["1", "(p+q)(p^3+2p^2+3p+4)", "(p+q)(p^5+2p^4+2p^3+2p^2+(2q+3)p+3q)"],
}

UW1 = {"u": 1, "w": 1}
UVW1 = {"u": 1, "v": 1, "w": 1}


@dataclass
class Cell:
    n: int
    routes: dict
    status: str
    diff: str | None = None

    def to_json(self) -> dict:
        out = {"n": self.n, "status": self.status, "routes": {
            name: (val.to_json() if isinstance(val, (MPoly, Series)) else val)
            for name, val in self.routes.items()}}
        if self.diff:
            out["diff"] = self.diff
        return out


@dataclass
class VerifyReport:
    theorem: str
    nmin: int
    nmax: int
    cells: list[Cell] = field(default_factory=list)
    wall_time: float = 0.0
    error: str | None = None

    @property
    def status(self) -> str:
        if self.error:
            return "fail"
        return "pass" if all(c.status == "pass" for c in self.cells) else "fail"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {"theorem": self.theorem, "n_range": [self.nmin, self.nmax],
               "status": self.status, "backend": kernels.BACKEND,
               "cells": [c.to_json() for c in self.cells],
               "wall_time": round(self.wall_time, 3)}
        if self.error:
            out["error"] = self.error
        return out


def _compare(n: int, routes: dict) -> Cell:
    values = list(routes.values())
    first = values[0]
    bad = [name for name, val in routes.items() if val != first]
    if not bad:
        return Cell(n, routes, "pass")
    ref = next(iter(routes))
    diffs = []
    for name in bad:
        a, b = routes[ref], routes[name]
        if isinstance(a, MPoly) and isinstance(b, MPoly):
            diffs.append(f"{ref} - {name} = {a - b}")
        else:
            diffs.append(f"{ref}={a!r} vs {name}={b!r}")
    return Cell(n, routes, "fail", "; ".join(diffs))


def _properties(n: int, checks: dict[str, bool]) -> Cell:
    failed = [k for k, ok in checks.items() if not ok]
    return Cell(n, checks, "fail" if failed else "pass",
                ("failed: " + ", ".join(failed)) if failed else None)


# -- suites ---------------------------------------------------------------

def _type_a(nmax: int, five_vars: bool) -> list[Cell]:
    J = named_cf("typeA")
    if not five_vars:
        J = J.specialize(UW1)
    series = jfraction_series(J, nmax)
    cells = []
    for n in range(nmax + 1):
        enum = class_polynomial(n, PatternClass.A321)
        routes = {"cf": series[n]}
        if five_vars:
            routes["enumeration"] = enum
            routes["path_sum"] = path_sum(n, "A")
        else:
            routes["enumeration"] = enum.specialize(UW1)
            routes["path_sum"] = path_sum(n, "A").specialize(UW1)
        cells.append(_compare(n, routes))
    return cells


def _type_b(nmax: int, six_vars: bool) -> list[Cell]:
    J = named_cf("typeB")
    if not six_vars:
        J = J.specialize(UVW1)
    series = jfraction_series(J, nmax)
    cells = []
    for n in range(nmax + 1):
        enum = class_polynomial(n, PatternClass.B4)
        pth = path_sum(n, "B")
        if not six_vars:
            enum, pth = enum.specialize(UVW1), pth.specialize(UVW1)
        cells.append(_compare(n, {"cf": series[n], "enumeration": enum, "path_sum": pth}))
    return cells


def suite_t11(nmax):
    return _type_a(nmax, five_vars=False)


def suite_t32(nmax):
    return _type_a(nmax, five_vars=True)


def suite_t12(nmax):
    return _type_b(nmax, six_vars=False)


def suite_t41(nmax):
    return _type_b(nmax, six_vars=True)


def suite_t61(nmax):
    series = jfraction_series(named_cf("typeC"), nmax)
    return [_compare(n, {"cf": series[n],
                         "enumeration": class_polynomial(n, PatternClass.A312),
                         "path_sum": path_sum(n, "C")})
            for n in range(nmax + 1)]


def suite_t13(nmax):
    series = jfraction_series(named_cf("typeB").specialize(UVW1), nmax)
    cells = []
    for n in range(1, nmax + 1):
        from_cf = gamma_decompose(series[n])
        from_enum = gamma_decompose(b_polynomial(n))
        routes = {}
        for k in range(n // 2 + 1):
            routes[f"k={k}:cf"] = from_cf.gammas[k]
            routes[f"k={k}:enumeration"] = from_enum.gammas[k]
            routes[f"k={k}:perms"] = gamma_via_perms(n + 1, k)
            if n in LISTED_B_GAMMAS:
                routes[f"k={k}:listed"] = MPoly.parse(LISTED_B_GAMMAS[n][k])
        checks = {}
        for k in range(n // 2 + 1):
            vals = [v for name, v in routes.items() if name.startswith(f"k={k}:")]
            checks[f"gamma_{k}"] = all(x == vals[0] for x in vals)
        if n in LISTED_B_EXPANSIONS:
            checks["listed_expansion"] = MPoly.parse(LISTED_B_EXPANSIONS[n]) == series[n]
        cell = _properties(n, checks)
        cell.routes = {**routes, **checks}
        cells.append(cell)
    return cells


def suite_t51(nmax):
    return [_properties(n, {"six_variable_identity": full_gamma_identity_check(n)})
            for n in range(nmax + 1)]


def suite_gamma_oracle(nmax):
    cells = []
    for n in range(nmax + 1):
        routes = {}
        for k in range(n // 2 + 1):
            routes[f"k={k}"] = gamma_via_perms(n + 1, k).eval(all_ones()) == gamma_multinomial(n, k)
        cells.append(_properties(n, routes))
    return cells


def random_sfraction(rng: random.Random, length: int, lo: int = -3, hi: int = 3):
    return sequence_sfraction([rng.randint(lo, hi) for _ in range(length)])


def suite_l11(order, count: int = 50, seed: int = 20240917):
    rng = random.Random(seed)
    checks = {}
    for i in range(count):
        S = random_sfraction(rng, order + 2)
        checks[f"random_{i}"] = sfraction_series(S, order) == jfraction_series(contract(S), order)
    ones = sequence_sfraction([1] * (2 * order + 3))
    J = contract(ones)
    cat = catalan_jfraction()
    checks["c=1 gives Catalan J-fraction"] = all(
        J.b(k) == cat.b(k) and J.lam(k + 1) == cat.lam(k + 1) for k in range(order + 1))
    checks["barC chain"] = (sfraction_series(bar_c_sfraction(), order)
                            == jfraction_series(named_cf("typeA").specialize(
                                {"p": 1, "t": 1, "u": 1, "w": 1}), order))
    checks["tildeC chain"] = (sfraction_series(tilde_c_sfraction(), order)
                              == jfraction_series(named_cf("typeA").specialize(
                                  {"p": MPoly.var("q"), "q": 1, "t": 1, "u": 1, "w": 1}),
                                  order))
    return [_properties(order, checks)]


def suite_l52(nmax):
    pats = PatternClass.B4.patterns
    cells = []
    for n in range(1, nmax + 1):
        classical = kernels.avoiders(n, pats)
        vinc = kernels.vincular_avoiders(n)
        cell = _properties(n, {"classes_equal": classical == vinc})
        cell.routes.update(classical=len(classical), vincular=len(vinc))
        cells.append(cell)
    return cells


def mfs_checks(n: int) -> dict[str, bool]:
    """Exhaustive valley-hopping properties on all permutations of length ``n``."""
    perms = list(permutations(range(1, n + 1)))
    b4 = set(generate_class(n, PatternClass.B4))
    values = range(1, n + 1)
    involution = commute = True
    hop = {}
    for s in perms:
        row = [phi_prime_x(s, x) for x in values]
        hop[s] = row
        for x, img in zip(values, row):
            if phi_prime_x(img, x) != s:
                involution = False
    for s in perms:
        row = hop[s]
        for x, y in combinations(values, 2):
            if hop[row[x - 1]][y - 1] != hop[row[y - 1]][x - 1]:
                commute = False
    seen: set = set()
    partition = unique_rep = invariants = closure = toggles = True
    total = 0
    for s in perms:
        if s in seen:
            continue
        orb = mfs_orbit(s)
        if orb.members & seen:
            partition = False
        seen |= orb.members
        total += len(orb.members)
        rep = orb.representative
        rep_stats = local_stats(rep, ZERO_ZERO)
        if len(orb.members) != 2 ** rep_stats.da:
            unique_rep = False

        def signature(x):
            st = local_stats(x, ZERO_ZERO)
            s31_2, _, s2_13, _, _ = kernels.vincular2_totals(x)
            return (st.pk, st.val, vincular3(x).total, s2_13, s31_2)

        sig = signature(rep)
        in_b4 = rep in b4
        for m in orb.members:
            if signature(m) != sig:
                invariants = False
            if (m in b4) != in_b4:
                closure = False
            st = local_stats(m, ZERO_ZERO)
            hops = st.dd
            if (des(m) != des(rep) + hops or st.da != rep_stats.da - hops):
                toggles = False
    return {
        "involution": involution,
        "commutation": commute,
        "orbit_partition": partition and total == len(perms),
        "unique_dd_free_representative_and_size": unique_rep,
        "invariance(pk,val,vincular3,2-13,31-2)": invariants,
        "class_closure": closure,
        "des_dd_da_toggle": toggles,
    }


def suite_mfs(nmax):
    return [_properties(n, mfs_checks(n)) for n in range(1, nmax + 1)]


@dataclass(frozen=True)
class Suite:
    run: Callable[[int], list[Cell]]
    default_nmax: int
    cap: int
    nmin: int = 0


SUITES: dict[str, Suite] = {
    "t1.1": Suite(suite_t11, 9, 11),
    "t1.2": Suite(suite_t12, 7, 9),
    "t1.3": Suite(suite_t13, 7, 9, nmin=1),
    "t3.2": Suite(suite_t32, 9, 10),
    "t4.1": Suite(suite_t41, 7, 9),
    "t5.1": Suite(suite_t51, 6, 8),
    "t6.1": Suite(suite_t61, 8, 10),
    "gamma-oracle": Suite(suite_gamma_oracle, 9, 10),
    "l1.1": Suite(suite_l11, 16, 40),
    "l5.2": Suite(suite_l52, 9, 10, nmin=1),
    "mfs": Suite(suite_mfs, 7, 8, nmin=1),
}
THEOREMS = tuple(SUITES)


def verify(theorem: str, nmax: int | None = None) -> VerifyReport:
    """Run one suite; route failures and exceptions become fail reports."""
    key = theorem.lower()
    if key not in SUITES:
        raise KeyError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    suite = SUITES[key]
    cfg = config.active()
    if nmax is None:
        nmax = cfg.nmax.get(key, suite.default_nmax)
    cap = cfg.bruteforce_cap if config.ENV_CAP in os.environ else suite.cap
    config.check_cap(nmax, cap, f"verify {key}")
    report = VerifyReport(key, suite.nmin, nmax)
    start = time.perf_counter()
    try:
        report.cells = suite.run(nmax)
    except Exception as exc:  # a crash in a route is a failed check, not a crash of the tool
        report.error = f"{type(exc).__name__}: {exc}"
    report.wall_time = time.perf_counter() - start
    return report


# -- tables ---------------------------------------------------------------

def q_coefficient_rows(which: str, nmax: int) -> list[list[int]]:
    """Coefficient lists (ascending powers of q) of C_n(1,q,1) or C_n(q,1,1)."""
    which = which.lower()
    if which == "barc":
        spec = {"p": 1, "t": 1, "u": 1, "w": 1}
    elif which == "tildec":
        spec = {"p": MPoly.var("q"), "q": 1, "t": 1, "u": 1, "w": 1}
    else:
        raise ValueError(which)
    series = jfraction_series(named_cf("typeA").specialize(spec), nmax)
    rows = []
    for n in range(1, nmax + 1):
        rows.append([c.eval(all_ones()) for c in series[n].coefficients_in("q")])
    return rows


def table(which: str, nmax: int) -> list[str]:
    """CSV rows ``n,...``: q-coefficients for barc/tildec, gamma form for bexpansion."""
    which = which.lower()
    if which in ("barc", "tildec"):
        return [",".join(map(str, [n, *row]))
                for n, row in enumerate(q_coefficient_rows(which, nmax), 1)]
    if which == "bexpansion":
        series = jfraction_series(named_cf("typeB").specialize(UVW1), nmax)
        return [f"{n},{gamma_decompose(series[n]).render()}" for n in range(1, nmax + 1)]
    raise ValueError(f"unknown table {which!r}; expected barc, tildec or bexpansion")
