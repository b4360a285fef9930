"""Euler-Mahonian and Eulerian polynomials of C_a wr S_n and their identities.

``majA_*`` build sum over the group of t^des_L * q^rmaj_{L,n}, either by
enumeration or by the coefficient recurrence.  ``eulerian`` gives the q = 1
specialisation by four routes.  ``verify_identity`` checks one named
identity exactly and reports the first discrepancy it finds.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from .algebra import ONE, Q, T, BiPoly, TPoly, USeries, q_int, q_poch_t, series_exp
from .perm import (
    DEFAULT_GUARD,
    LOrder,
    classical_stats,
    descent_data,
    enumerate_group,
    format_window,
    lemma_check,
    reverse,
    subsets_of_size,
    tilde_descent_data,
)
from . import engine

__all__ = [
    "MahonianSpec",
    "VerificationReport",
    "IDENTITIES",
    "majA_enumerate",
    "majA_recurrence",
    "eulerian",
    "verify_identity",
]

METHODS = ("enumerate", "recurrence", "derivative", "specialize")


@dataclass(frozen=True)
class MahonianSpec:
    a: int
    ell: int
    n: int
    L: frozenset | None = None

    def __post_init__(self):
        if self.a < 1:
            raise ValueError(f"a must be >= 1, got {self.a}")
        if not 0 <= self.ell <= self.a:
            raise ValueError(f"ell must lie in [0, {self.a}], got {self.ell}")
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if self.L is not None:
            L = frozenset(self.L)
            object.__setattr__(self, "L", L)
            LOrder(self.a, L)
            if len(L) != self.ell:
                raise ValueError(f"|L| = {len(L)} but ell = {self.ell}")

    @property
    def colors(self) -> frozenset:
        """The explicit L, or {0, ..., ell-1} when none was given."""
        return self.L if self.L is not None else frozenset(range(self.ell))


@dataclass
class VerificationReport:
    identity: str
    params: dict
    holds: bool
    witness: dict | None = None
    note: str = field(default="", compare=False)

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("a report holds exactly when it has no witness")

    def to_json_obj(self) -> dict:
        return {
            "identity": self.identity,
            "params": self.params,
            "holds": self.holds,
            "witness": self.witness,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


# -- constructions -----------------------------------------------------------

def _check_params(a: int, ell: int, n: int):
    MahonianSpec(a, ell, n)


def majA_enumerate(a: int, L, n: int, *, guard: int | None = DEFAULT_GUARD,
                   jobs: int = 1, engine_name: str = "vector") -> BiPoly:
    """sum_{sigma in C_a wr S_n} t^des_L(sigma) q^rmaj_{L,n}(sigma), by enumeration.

    ``engine_name="direct"`` walks the group element by element with
    ``descent_data``; the default tallies with numpy.
    """
    L = frozenset(L)
    order = LOrder(a, L)
    if engine_name == "vector":
        counts = engine.tally(a, L, n, guard=guard, jobs=jobs)
    elif engine_name == "direct":
        counts = Counter()
        for sigma in enumerate_group(a, n, guard):
            d = descent_data(sigma, order)
            counts[d.des, d.rmaj] += 1
    else:
        raise ValueError(f"unknown engine {engine_name!r}")
    return BiPoly(counts)


@lru_cache(maxsize=None)
def _majA_rows(a: int, ell: int, n: int) -> tuple[BiPoly, ...]:
    # rows[s] is the coefficient of t^s, a polynomial in q
    if n == 0:
        return (ONE,)
    prev = _majA_rows(a, ell, n - 1)
    rows = []
    for s in range(n + 1):
        acc = BiPoly()
        if s < len(prev):
            acc = acc + (a * q_int(s + 1) - ell) * prev[s]
        if 1 <= s <= len(prev):
            acc = acc + (a * Q**s * q_int(n - s) + ell * Q**n) * prev[s - 1]
        rows.append(acc)
    while len(rows) > 1 and rows[-1].is_zero():
        rows.pop()
    return tuple(rows)


def majA_recurrence(a: int, ell: int, n: int) -> BiPoly:
    """The Euler-Mahonian polynomial for |L| = ell, from the coefficient recurrence.

    Starts at n = 0 with the constant 1.
    """
    _check_params(a, ell, n)
    return BiPoly.from_t_coefficients(_majA_rows(a, ell, n))


def _eulerian_recurrence(a: int, ell: int, n: int) -> BiPoly:
    row = [1]
    for m in range(1, n + 1):
        new = []
        for s in range(m + 1):
            x = (a * (s + 1) - ell) * row[s] if s < len(row) else 0
            if s >= 1:
                x += (a * (m - s) + ell) * row[s - 1]
            new.append(x)
        row = new
    return BiPoly({(s, 0): c for s, c in enumerate(row)})


def _eulerian_derivative(a: int, ell: int, n: int) -> BiPoly:
    p = ONE
    for m in range(1, n + 1):
        p = ((a - ell) + (a * (m - 1) + ell) * T) * p + a * T * (1 - T) * p.derivative_t()
    return p


def eulerian(a: int, ell: int, n: int, method: str = "recurrence", *,
             L=None, guard: int | None = DEFAULT_GUARD, jobs: int = 1) -> BiPoly:
    """sum over C_a wr S_n of t^des_L, as a q-free ``BiPoly``.

    ``method`` is one of ``enumerate`` (count descents over the group, using
    ``L`` or {0..ell-1}), ``recurrence`` (integer coefficient recurrence),
    ``derivative`` (the t-derivative recurrence) or ``specialize``
    (the Euler-Mahonian recurrence at q = 1).
    """
    _check_params(a, ell, n)
    if method == "enumerate":
        colors = MahonianSpec(a, ell, n, L).colors
        counts = Counter()
        for (d, _), c in engine.tally(a, colors, n, guard=guard, jobs=jobs).items():
            counts[d, 0] += c
        return BiPoly(counts)
    if method == "recurrence":
        return _eulerian_recurrence(a, ell, n)
    if method == "derivative":
        return _eulerian_derivative(a, ell, n)
    if method == "specialize":
        return majA_recurrence(a, ell, n).eval_q1()
    raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")


# -- identity checks ---------------------------------------------------------

def _first_difference(lhs: BiPoly, rhs: BiPoly) -> dict | None:
    lt, rt = lhs.terms, rhs.terms
    for key in sorted(set(lt) | set(rt)):
        if lt.get(key, 0) != rt.get(key, 0):
            return {"t": key[0], "q": key[1], "lhs": str(lt.get(key, 0)), "rhs": str(rt.get(key, 0))}
    return None


def _majA(spec: MahonianSpec, n: int, source: str, guard) -> BiPoly:
    if source == "recurrence":
        return majA_recurrence(spec.a, spec.ell, n)
    return majA_enumerate(spec.a, spec.colors, n, guard=guard)


def _check_recursion(spec, S, N, source, guard):
    witness = _first_difference(
        majA_enumerate(spec.a, spec.colors, spec.n, guard=guard),
        majA_recurrence(spec.a, spec.ell, spec.n),
    )
    return witness, "enumeration (lhs) against the coefficient recurrence (rhs)"


def _check_recursion2(spec, S, N, source, guard):
    a, ell, n = spec.a, spec.ell, spec.n
    if n < 1:
        raise ValueError("recursion2 needs n >= 1")
    cur, prev = _majA(spec, n, source, guard), _majA(spec, n - 1, source, guard)
    lhs = (1 - Q) * cur
    rhs = (a - (1 - Q) * ell) * (1 - T * Q**n) * prev - a * Q * (1 - T) * prev.subst_t_tq()
    return _first_difference(lhs, rhs), ""


def _quotient_witness(a, ell, n, S, poly, q_one: bool):
    # (t;q)_{n+1} * sum_{s<=S} t^s (a[s+1]_q - ell)^n must match poly up to t^S
    if S < n:
        raise ValueError(f"truncation S={S} must be >= n={n}")
    if q_one:
        denom = (1 - T) ** (n + 1)
        series = BiPoly({(s, 0): (a * (s + 1) - ell) ** n for s in range(S + 1)})
    else:
        denom = q_poch_t(n + 1)
        series = BiPoly.from_t_coefficients((a * q_int(s + 1) - ell) ** n for s in range(S + 1))
    return _first_difference(poly, (denom * series).truncate_t(S))


def _check_quotient(spec, S, N, source, guard):
    poly = _majA(spec, spec.n, source, guard)
    return _quotient_witness(spec.a, spec.ell, spec.n, S, poly, q_one=False), ""


def _check_des_quotient(spec, S, N, source, guard):
    if source == "recurrence":
        poly = eulerian(spec.a, spec.ell, spec.n, "recurrence")
    else:
        poly = eulerian(spec.a, spec.ell, spec.n, "enumerate", L=spec.colors, guard=guard)
    return _quotient_witness(spec.a, spec.ell, spec.n, S, poly, q_one=True), ""


def _check_egf(spec, S, N, source, guard):
    # The u^n/n! coefficient of each side is the n-th quotient identity.
    for n in range(N + 1):
        sub = MahonianSpec(spec.a, spec.ell, n, spec.L)
        s_n = max(S, n) if S is not None else n + 3
        for check in (_check_quotient, _check_des_quotient):
            witness, _ = check(sub, s_n, N, source, guard)
            if witness is not None:
                witness["u"] = n
                witness["form"] = "q" if check is _check_quotient else "q=1"
                return witness, ""
    return None, "checked per u-coefficient as the quotient identities for n = 0..N"


def _check_gf(spec, S, N, source, guard):
    a, ell = spec.a, spec.ell
    polys = []
    for n in range(N + 1):
        if source == "recurrence":
            p = eulerian(a, ell, n, "recurrence")
        else:
            p = eulerian(a, ell, n, "enumerate", L=spec.colors, guard=guard)
        polys.append(TPoly(c / factorial(n) for c in TPoly.from_bipoly(p).coeffs))
    lhs = USeries(polys, N)
    one_minus_t = TPoly([1, -1])
    t_minus_one = TPoly([-1, 1])
    denom = (USeries.constant(TPoly([0, -1]), N) * series_exp(USeries.linear(one_minus_t * ell, N))
             + series_exp(USeries.linear(t_minus_one * (a - ell), N)))
    product = lhs * denom
    target = USeries.constant(one_minus_t, N)
    for k, (x, y) in enumerate(zip(product.coeffs, target.coeffs)):
        if x != y:
            n = max(len(x.coeffs), len(y.coeffs))
            xs = x.coeffs + (0,) * (n - len(x.coeffs))
            ys = y.coeffs + (0,) * (n - len(y.coeffs))
            i = next(i for i in range(n) if xs[i] != ys[i])
            return {"t": i, "q": 0, "u": k, "lhs": str(xs[i]), "rhs": str(ys[i])}, ""
    return None, "cross-multiplied: (sum u^n/n! A_n) * denominator == 1 - t"


def _check_lemma(spec, S, N, source, guard):
    if spec.n < 1:
        raise ValueError("lemma needs n >= 1")
    Ls = [spec.L] if spec.L is not None else list(subsets_of_size(spec.a, spec.ell))
    for L in Ls:
        order = LOrder(spec.a, L)
        for sigma in enumerate_group(spec.a, spec.n - 1, guard):
            if not lemma_check(sigma, order):
                return {"t": None, "q": None, "lhs": "formula", "rhs": "insertion",
                        "element": format_window(sigma), "L": sorted(L)}, ""
    return None, f"checked {len(Ls)} color set(s)"


def _check_l_independence(spec, S, N, source, guard):
    Ls = list(subsets_of_size(spec.a, spec.ell))
    ref = majA_enumerate(spec.a, Ls[0], spec.n, guard=guard)
    for L in Ls[1:]:
        witness = _first_difference(ref, majA_enumerate(spec.a, L, spec.n, guard=guard))
        if witness is not None:
            witness["L"] = sorted(L)
            return witness, ""
    return None, f"{len(Ls)} color sets agree"


def _check_maj_rmaj(spec, S, N, source, guard):
    n = spec.n
    empty = LOrder(1, frozenset())
    by_maj: Counter = Counter()
    by_rmaj: Counter = Counter()
    for sigma in enumerate_group(1, n, guard):
        des, maj = classical_stats(sigma)
        by_maj[des, maj] += 1
        d = descent_data(sigma, empty)
        by_rmaj[d.des, d.rmaj] += 1
    return _first_difference(BiPoly(by_maj), BiPoly(by_rmaj)), "S_n only; a and ell are ignored"


def _check_tilde(spec, S, N, source, guard):
    Ls = [spec.L] if spec.L is not None else list(subsets_of_size(spec.a, spec.ell))
    for L in Ls:
        order = LOrder(spec.a, L)
        comp = order.complement()
        tilde: Counter = Counter()
        plain: Counter = Counter()
        for sigma in enumerate_group(spec.a, spec.n, guard):
            d = tilde_descent_data(sigma, order)
            tilde[d.des, d.rmaj] += 1
            d = descent_data(sigma, comp)
            plain[d.des, d.rmaj] += 1
        witness = _first_difference(BiPoly(tilde), BiPoly(plain))
        if witness is not None:
            witness["L"] = sorted(L)
            return witness, ""
    return None, "complement taken in the color set {0..a-1}"


def _check_reverse_tilde(spec, S, N, source, guard):
    # elementwise form: Des~_L(sigma) = {n - i : i in Des_{L^c}(reverse(sigma))}
    Ls = [spec.L] if spec.L is not None else list(subsets_of_size(spec.a, spec.ell))
    n = spec.n
    for L in Ls:
        order = LOrder(spec.a, L)
        comp = order.complement()
        for sigma in enumerate_group(spec.a, n, guard):
            lhs = tilde_descent_data(sigma, order).descent_set
            rhs = frozenset(n - i for i in descent_data(reverse(sigma), comp).descent_set)
            if lhs != rhs:
                return {"t": None, "q": None, "lhs": sorted(lhs), "rhs": sorted(rhs),
                        "element": format_window(sigma)}, ""
    return None, ""


IDENTITIES = {
    "recursion": _check_recursion,
    "recursion2": _check_recursion2,
    "quotient": _check_quotient,
    "des-quotient": _check_des_quotient,
    "egf": _check_egf,
    "gf": _check_gf,
    "lemma": _check_lemma,
    "l-independence": _check_l_independence,
    "maj-rmaj": _check_maj_rmaj,
    "tilde": _check_tilde,
    "tilde-elementwise": _check_reverse_tilde,
}


def verify_identity(identity: str, spec: MahonianSpec, S: int | None = None,
                    N: int | None = None, *, source: str = "recurrence",
                    guard: int | None = DEFAULT_GUARD) -> VerificationReport:
    """Run one named identity check.

    ``S`` truncates the t-series of the quotient checks (default n + 3) and
    ``N`` is the u-order of the generating-function checks (default n).
    ``source`` picks whether the polynomials come from the recurrences or
    from enumeration.  Identities that are statements about enumeration
    (``recursion``, ``lemma``, ``l-independence``, ``maj-rmaj``, ``tilde``)
    always enumerate.
    """
    try:
        check = IDENTITIES[identity]
    except KeyError:
        raise ValueError(
            f"unknown identity {identity!r}; expected one of {', '.join(IDENTITIES)}"
        ) from None
    if source not in ("recurrence", "enumerate"):
        raise ValueError(f"unknown source {source!r}")
    if S is None:
        S = spec.n + 3
    if N is None:
        N = spec.n
    if N < 0:
        raise ValueError("N must be >= 0")
    witness, note = check(spec, S, N, source, guard)
    params = {"a": spec.a, "ell": spec.ell, "n": spec.n,
              "L": sorted(spec.colors), "S": S, "N": N, "source": source}
    return VerificationReport(identity, params, witness is None, witness, note)

