"""Exact polynomial and truncated power-series arithmetic.

``BiPoly`` is a sparse polynomial in ``t`` and ``q`` with Python integer
coefficients.  ``TPoly`` is a dense polynomial in ``t`` over the rationals and
``USeries`` a power series in ``u`` truncated at a fixed order whose
coefficients are ``TPoly`` values.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "BiPoly",
    "TPoly",
    "USeries",
    "q_int",
    "q_poch_t",
    "series_exp",
    "series_mul",
    "series_equal",
]


def _monomial_text(c, i: int, j: int, latex: bool) -> str:
    parts = []
    for var, e in (("t", i), ("q", j)):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{{{e}}}" if latex else f"{var}^{e}")
    mono = ("" if latex else "*").join(parts)
    c = abs(c)
    if not mono:
        return str(c)
    return mono if c == 1 else f"{c}{mono}"


def _join_terms(items, latex=False) -> str:
    # items: iterable of (coefficient, t-degree, q-degree), already ordered
    out = []
    for c, i, j in items:
        body = _monomial_text(c, i, j, latex)
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out) or "0"


class BiPoly:
    """Sparse polynomial in t and q over the integers.

    ``terms`` maps ``(deg_t, deg_q)`` to a nonzero ``int``.  Instances are
    treated as immutable and are hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial t^{i} q^{j}")
            if c:
                clean[(int(i), int(j))] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "BiPoly":
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "BiPoly":
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, c: int = 1, t: int = 0, q: int = 0) -> "BiPoly":
        return cls({(t, q): c})

    @classmethod
    def from_t_coefficients(cls, coeffs: Iterable["BiPoly | int"]) -> "BiPoly":
        """Assemble sum_s t^s * coeffs[s]; each coefficient is free of t."""
        terms = {}
        for s, p in enumerate(coeffs):
            p = _coerce(p)
            for (i, j), c in p._terms.items():
                if i:
                    raise ValueError("t-coefficients must not involve t")
                terms[(s, j)] = c
        return cls._raw(terms)

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def deg_t(self) -> int:
        """Degree in t; -1 for the zero polynomial."""
        return max((i for i, _ in self._terms), default=-1)

    def deg_q(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def t_coefficient(self, s: int) -> "BiPoly":
        """The coefficient of t^s, a polynomial in q alone."""
        return BiPoly._raw({(0, j): c for (i, j), c in self._terms.items() if i == s})

    def t_coefficients(self) -> list["BiPoly"]:
        return [self.t_coefficient(s) for s in range(self.deg_t() + 1)]

    def truncate_t(self, max_deg: int) -> "BiPoly":
        return BiPoly._raw({k: c for k, c in self._terms.items() if k[0] <= max_deg})

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for k, c in other._terms.items():
            v = terms.get(k, 0) + c
            if v:
                terms[k] = v
            else:
                terms.pop(k, None)
        return BiPoly._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                terms[k] = terms.get(k, 0) + c1 * c2
        return BiPoly._raw({k: c for k, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitutions ------------------------------------------------------

    def subst_t_tq(self) -> "BiPoly":
        """p(t, q) -> p(tq, q)."""
        return BiPoly._raw({(i, i + j): c for (i, j), c in self._terms.items()})

    def derivative_t(self) -> "BiPoly":
        return BiPoly._raw({(i - 1, j): i * c for (i, j), c in self._terms.items() if i})

    def eval_q1(self) -> "BiPoly":
        """p(t, 1), as a BiPoly free of q."""
        terms: dict = {}
        for (i, _), c in self._terms.items():
            terms[(i, 0)] = terms.get((i, 0), 0) + c
        return BiPoly._raw({k: c for k, c in terms.items() if c})

    def evaluate(self, t, q):
        return sum(c * t**i * q**j for (i, j), c in self._terms.items())

    # -- output -------------------------------------------------------------

    def __repr__(self):
        return f"BiPoly({self})"

    def __str__(self):
        return _join_terms((c, i, j) for (i, j), c in self.items())

    def to_latex(self) -> str:
        return _join_terms(((c, i, j) for (i, j), c in self.items()), latex=True)

    def to_json_obj(self) -> list[dict]:
        return [{"t": i, "q": j, "c": str(c)} for (i, j), c in self.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: list[dict]) -> "BiPoly":
        terms: dict = {}
        for entry in obj:
            k = (int(entry["t"]), int(entry["q"]))
            if k in terms:
                raise ValueError(f"duplicate monomial t^{k[0]} q^{k[1]}")
            terms[k] = int(entry["c"])
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> "BiPoly":
        return cls.from_json_obj(json.loads(text))


def _coerce(x):
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, int):
        return BiPoly.const(x)
    return NotImplemented


ONE = BiPoly.const(1)
ZERO = BiPoly()
T = BiPoly.monomial(1, 1, 0)
Q = BiPoly.monomial(1, 0, 1)


def q_int(m: int) -> BiPoly:
    """[m]_q = 1 + q + ... + q^(m-1); zero for m = 0."""
    if m < 0:
        raise ValueError(f"q-integer needs m >= 0, got {m}")
    return BiPoly._raw({(0, j): 1 for j in range(m)})


def q_poch_t(m: int) -> BiPoly:
    """(t; q)_m = (1 - t)(1 - tq)...(1 - tq^(m-1))."""
    if m < 0:
        raise ValueError(f"q-Pochhammer needs m >= 0, got {m}")
    result = ONE
    for j in range(m):
        result = result * BiPoly._raw({(0, 0): 1, (1, j): -1})
    return result


# -- univariate polynomials in t over Q --------------------------------------

class TPoly:
    """Dense polynomial in t with ``Fraction`` coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_bipoly(cls, p: BiPoly) -> "TPoly":
        if p.deg_q() > 0:
            raise ValueError("polynomial still depends on q")
        cs = [0] * (p.deg_t() + 1)
        for (i, _), c in p.items():
            cs[i] = c
        return cls(cs)

    def to_bipoly(self) -> BiPoly:
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("non-integral coefficients")
        return BiPoly({(i, 0): int(c) for i, c in enumerate(self.coeffs)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        other = _tcoerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return TPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return TPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_tcoerce(other))

    def __rsub__(self, other):
        return _tcoerce(other) - self

    def __mul__(self, other):
        other = _tcoerce(other)
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return TPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = _tcoerce(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TPoly({self})"

    def __str__(self):
        return _join_terms((c, i, 0) for i, c in enumerate(self.coeffs) if c)


def _tcoerce(x) -> TPoly:
    if isinstance(x, TPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return TPoly([x])
    if isinstance(x, BiPoly):
        return TPoly.from_bipoly(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial in t")


# -- truncated power series in u ---------------------------------------------

class USeries:
    """Power series in u known up to and including ``u^order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = [_tcoerce(c) for c in coeffs][: order + 1]
        cs += [TPoly()] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c, order: int) -> "USeries":
        return cls([c], order)

    @classmethod
    def linear(cls, c, order: int) -> "USeries":
        """The series c*u."""
        return cls([0, c], order)

    def __add__(self, other: "USeries") -> "USeries":
        order = min(self.order, other.order)
        return USeries((x + y for x, y in zip(self.coeffs, other.coeffs)), order)

    def __neg__(self):
        return USeries((-c for c in self.coeffs), self.order)

    def __sub__(self, other: "USeries") -> "USeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, USeries):
            return series_mul(self, other)
        return USeries((c * other for c in self.coeffs), self.order)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        return series_equal(self, other)

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        body = " + ".join(f"({c})u^{k}" for k, c in enumerate(self.coeffs) if not c.is_zero())
        return f"USeries({body or '0'}; O(u^{self.order + 1}))"


def series_mul(p: USeries, r: USeries) -> USeries:
    """Cauchy product truncated at the smaller of the two orders."""
    order = min(p.order, r.order)
    out = []
    for m in range(order + 1):
        acc = TPoly()
        for k in range(m + 1):
            if not p.coeffs[k].is_zero() and not r.coeffs[m - k].is_zero():
                acc = acc + p.coeffs[k] * r.coeffs[m - k]
        out.append(acc)
    return USeries(out, order)


def series_equal(p: USeries, r: USeries) -> bool:
    if p.order != r.order:
        raise ValueError(f"cannot compare series of orders {p.order} and {r.order}")
    return p.coeffs == r.coeffs


def series_exp(s: USeries) -> USeries:
    """exp(s) for a series without constant term.

    Uses E' = s' E, i.e. e_m = (1/m) sum_{k=1}^{m} k s_k e_{m-k}.
    """
    if not s.coeffs[0].is_zero():
        raise ValueError("series_exp needs a zero constant term")
    e = [TPoly([1])]
    for m in range(1, s.order + 1):
        acc = TPoly()
        for k in range(1, m + 1):
            if not s.coeffs[k].is_zero():
                acc = acc + s.coeffs[k] * e[m - k] * k
        e.append(acc * Fraction(1, m))
    return USeries(e, s.order)
