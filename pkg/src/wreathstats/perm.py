"""Colored permutations in C_a wr S_n, the L-order and its descent statistics.

A colored permutation is stored in window notation as a tuple of
``ColoredLetter(value, color)`` pairs, where ``color`` is the exponent of the
primitive a-th root of unity.  The letter ``(0, 0)`` is the sentinel zero,
used for ``sigma(0)`` (and ``sigma(n+1)`` for the tilde statistics); it never
appears inside a window.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "ColoredLetter",
    "ColoredPermutation",
    "LOrder",
    "DescentData",
    "WindowParseError",
    "EnumerationGuardError",
    "ZERO",
    "DEFAULT_GUARD",
    "parse_window",
    "format_window",
    "l_compare",
    "descent_data",
    "tilde_descent_data",
    "classical_stats",
    "reverse",
    "phi",
    "phi_inverse",
    "lemma_check",
    "group_order",
    "enumerate_group",
]

DEFAULT_GUARD = 10**7


class WindowParseError(ValueError):
    """Raised for malformed window text.  ``position`` is the 1-based token index."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"token {position}: {message}"
        super().__init__(message)


class EnumerationGuardError(RuntimeError):
    pass


class ColoredLetter(NamedTuple):
    value: int
    color: int = 0

    def __str__(self) -> str:
        return f"{self.value}^{self.color}"


ZERO = ColoredLetter(0, 0)


@dataclass(frozen=True)
class ColoredPermutation:
    a: int
    window: tuple[ColoredLetter, ...]

    def __post_init__(self):
        if self.a < 1:
            raise ValueError(f"color modulus must be >= 1, got {self.a}")
        window = tuple(ColoredLetter(*x) for x in self.window)
        object.__setattr__(self, "window", window)
        n = len(window)
        seen = set()
        for pos, (v, c) in enumerate(window, 1):
            if not 0 <= c < self.a:
                raise ValueError(f"position {pos}: color {c} out of range [0, {self.a - 1}]")
            if not 1 <= v <= n:
                raise ValueError(f"position {pos}: value {v} out of range [1, {n}]")
            if v in seen:
                raise ValueError(f"position {pos}: repeated value {v}")
            seen.add(v)

    @classmethod
    def _trusted(cls, a: int, window: tuple[ColoredLetter, ...]) -> "ColoredPermutation":
        # skips validation; for internal hot loops only
        obj = object.__new__(cls)
        object.__setattr__(obj, "a", a)
        object.__setattr__(obj, "window", window)
        return obj

    @classmethod
    def identity(cls, n: int, a: int = 1) -> "ColoredPermutation":
        return cls._trusted(a, tuple(ColoredLetter(j, 0) for j in range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.window)

    def __iter__(self):
        return iter(self.window)

    def __getitem__(self, i):
        return self.window[i]

    @property
    def n(self) -> int:
        return len(self.window)

    def abs(self) -> tuple[int, ...]:
        """The underlying permutation |sigma| in S_n."""
        return tuple(x.value for x in self.window)

    def __str__(self) -> str:
        return format_window(self)


# -- window text -------------------------------------------------------------

_TOKEN = re.compile(r"^(\d+)\^(\d+)$")
_SIGNED = re.compile(r"^([+-]?)(\d+)$")


def parse_window(text: str, a: int) -> ColoredPermutation:
    """Parse whitespace separated ``v^c`` tokens into a colored permutation.

    For ``a == 2`` plain signed integers are accepted too, ``-j`` meaning
    ``j^1``.  The empty string is the empty permutation.
    """
    if a < 1:
        raise WindowParseError(f"color modulus must be >= 1, got {a}")
    letters = []
    for pos, tok in enumerate(text.split(), 1):
        m = _TOKEN.match(tok)
        if m:
            v, c = int(m.group(1)), int(m.group(2))
        else:
            m = _SIGNED.match(tok)
            if m is None or a != 2:
                raise WindowParseError(f"malformed token {tok!r}", pos)
            v, c = int(m.group(2)), int(m.group(1) == "-")
        if v < 1:
            raise WindowParseError(f"value must be >= 1 in {tok!r}", pos)
        if c >= a:
            raise WindowParseError(f"color {c} out of range [0, {a - 1}] in {tok!r}", pos)
        letters.append(ColoredLetter(v, c))

    n = len(letters)
    seen: dict[int, int] = {}
    for pos, (v, _) in enumerate(letters, 1):
        if v > n:
            raise WindowParseError(f"value {v} exceeds window length {n}", pos)
        if v in seen:
            raise WindowParseError(f"value {v} already used at token {seen[v]}", pos)
        seen[v] = pos
    return ColoredPermutation._trusted(a, tuple(letters))


def format_window(sigma: ColoredPermutation) -> str:
    return " ".join(f"{v}^{c}" for v, c in sigma.window)


# -- the L-order -------------------------------------------------------------

@dataclass(frozen=True)
class LOrder:
    """The linear order <_L on colored letters and zero.

    Letters whose color lies in ``L`` sit below zero, larger values lower;
    the rest sit above zero, smaller values lower.  Letters sharing a value
    and a class are ordered by color, ascending by default.  ``tie_break``
    may be set to ``"descending"``; the statistics do not depend on it.
    """

    a: int
    L: frozenset = field(default_factory=frozenset)
    tie_break: str = "ascending"

    def __post_init__(self):
        L = frozenset(self.L)
        object.__setattr__(self, "L", L)
        if self.a < 1:
            raise ValueError(f"color modulus must be >= 1, got {self.a}")
        bad = sorted(c for c in L if not 0 <= c < self.a)
        if bad:
            raise ValueError(f"colors {bad} not in [0, {self.a - 1}]")
        if self.tie_break not in ("ascending", "descending"):
            raise ValueError(f"unknown tie_break {self.tie_break!r}")

    @property
    def U(self) -> frozenset:
        return frozenset(range(self.a)) - self.L

    @property
    def ell(self) -> int:
        return len(self.L)

    def complement(self) -> "LOrder":
        return LOrder(self.a, self.U, self.tie_break)

    def key(self, letter) -> int:
        """Integer rank of ``letter``; comparing keys is comparing under <_L."""
        v, c = letter
        if v == 0:
            return 0
        if self.tie_break == "descending":
            c = self.a - 1 - c
        if letter[1] in self.L:
            return c - v * self.a  # in [-v*a, -v*a + a - 1], all < 0
        return (v - 1) * self.a + c + 1  # in [(v-1)*a + 1, v*a], all > 0

    def key_table(self, n: int) -> list[list[int]]:
        """``table[v][c]`` is the key of the letter ``v^c``, for 0 <= v <= n."""
        return [[self.key((v, c)) for c in range(self.a)] for v in range(n + 1)]


def l_compare(x, y, order: LOrder) -> int:
    """Three-way comparison under <_L: -1 (less), 0 (equal) or 1 (greater)."""
    for letter in (x, y):
        if letter[0] != 0 and not 0 <= letter[1] < order.a:
            raise ValueError(f"color {letter[1]} out of range for a={order.a}")
        if letter[0] == 0 and letter[1] != 0:
            raise ValueError("the zero letter carries no color")
    kx, ky = order.key(x), order.key(y)
    return (kx > ky) - (kx < ky)


# -- descent statistics ------------------------------------------------------

class DescentData(NamedTuple):
    descent_set: frozenset
    des: int
    rmaj: int


def _check_modulus(sigma: ColoredPermutation, order: LOrder):
    if sigma.a != order.a:
        raise ValueError(f"modulus mismatch: permutation has a={sigma.a}, order has a={order.a}")


def descent_data(sigma: ColoredPermutation, order: LOrder) -> DescentData:
    """L-descent set (positions 0..n-1, with sigma(0) = 0), des_L and rmaj_{L,n}."""
    _check_modulus(sigma, order)
    n = len(sigma.window)
    keys = [0] + [order.key(x) for x in sigma.window]
    dset = frozenset(i for i in range(n) if keys[i] > keys[i + 1])
    return DescentData(dset, len(dset), sum(n - i for i in dset))


def tilde_descent_data(sigma: ColoredPermutation, order: LOrder) -> DescentData:
    """Descents at positions 1..n with sigma(n+1) = 0; the rmaj field holds maj~ = sum of positions."""
    _check_modulus(sigma, order)
    n = len(sigma.window)
    keys = [None] + [order.key(x) for x in sigma.window] + [0]
    dset = frozenset(i for i in range(1, n + 1) if keys[i] > keys[i + 1])
    return DescentData(dset, len(dset), sum(dset))


def classical_stats(pi: ColoredPermutation) -> tuple[int, int]:
    """(des, maj) of an ordinary permutation, descents at positions 1..n-1."""
    if pi.a != 1:
        raise ValueError(f"classical statistics need a=1, got a={pi.a}")
    w = pi.abs()
    positions = [i for i in range(1, len(w)) if w[i - 1] > w[i]]
    return len(positions), sum(positions)


# -- reversal and the insertion bijection ------------------------------------

def reverse(sigma: ColoredPermutation) -> ColoredPermutation:
    """sigma * [n, n-1, ..., 1]: the window read right to left."""
    return ColoredPermutation._trusted(sigma.a, sigma.window[::-1])


def phi(sigma: ColoredPermutation, r: int, t: int) -> ColoredPermutation:
    """Insert the letter ``n^t`` right after position ``r`` of a length n-1 window."""
    n = len(sigma.window) + 1
    if not 0 <= r <= n - 1:
        raise ValueError(f"insertion position {r} out of range [0, {n - 1}]")
    if not 0 <= t < sigma.a:
        raise ValueError(f"color {t} out of range [0, {sigma.a - 1}]")
    w = sigma.window
    return ColoredPermutation._trusted(sigma.a, w[:r] + (ColoredLetter(n, t),) + w[r:])


def phi_inverse(tau: ColoredPermutation) -> tuple[ColoredPermutation, int, int]:
    n = len(tau.window)
    if n < 1:
        raise ValueError("phi_inverse needs n >= 1")
    for r, (v, c) in enumerate(tau.window):
        if v == n:
            rest = tau.window[:r] + tau.window[r + 1:]
            return ColoredPermutation._trusted(tau.a, rest), r, c
    raise ValueError("window has no letter of maximal value")  # unreachable for valid input


def insertion_indices(sigma: ColoredPermutation, order: LOrder) -> tuple[list[int], int]:
    """The sequence i_1..i_n used by the insertion lemma, and s = des_L(sigma).

    i_1 < ... < i_s are the descents of sigma, followed by the non-descents
    of {0, ..., n-1} listed from right to left (so i_{s+1} = n-1).
    """
    m = len(sigma.window)
    dset = descent_data(sigma, order).descent_set
    descents = sorted(dset)
    rest = [i for i in range(m, -1, -1) if i not in dset]
    return descents + rest, len(descents)


def lemma_check(sigma: ColoredPermutation, order: LOrder) -> bool:
    """Check the insertion lemma for ``sigma`` of length n-1, every k in 1..n and every color t."""
    _check_modulus(sigma, order)
    n = len(sigma.window) + 1
    idx, s = insertion_indices(sigma, order)
    base_rmaj = descent_data(sigma, order).rmaj
    for k in range(1, n + 1):
        for t in range(order.a):
            in_L = t in order.L
            got = descent_data(phi(sigma, idx[k - 1], t), order)
            want_des = s + 1 if (k > s + 1 or (k == s + 1 and in_L)) else s
            want_rmaj = base_rmaj + k if in_L else base_rmaj + k - 1
            if got.des != want_des or got.rmaj != want_rmaj:
                return False
    return True


# -- enumeration -------------------------------------------------------------

def group_order(a: int, n: int) -> int:
    return a**n * math.factorial(n)


def check_guard(a: int, n: int, guard: int | None):
    size = group_order(a, n)
    if guard is not None and size > guard:
        raise EnumerationGuardError(
            f"C_{a} wr S_{n} has {size} elements, above the limit of {guard}"
        )


def enumerate_group(a: int, n: int, guard: int | None = DEFAULT_GUARD) -> Iterator[ColoredPermutation]:
    """Every element of C_a wr S_n once.

    Value permutations come in lexicographic order; within one, the color
    vectors run lexicographically (last position fastest).  Pass
    ``guard=None`` to lift the size limit.
    """
    if a < 1 or n < 0:
        raise ValueError(f"need a >= 1 and n >= 0, got a={a}, n={n}")
    check_guard(a, n, guard)
    colorings = list(itertools.product(range(a), repeat=n))
    for values in itertools.permutations(range(1, n + 1)):
        for colors in colorings:
            yield ColoredPermutation._trusted(
                a, tuple(ColoredLetter(v, c) for v, c in zip(values, colors))
            )


def subsets_of_size(a: int, ell: int) -> Iterable[frozenset]:
    return (frozenset(c) for c in itertools.combinations(range(a), ell))


def all_subsets(a: int) -> Iterable[frozenset]:
    for ell in range(a + 1):
        yield from subsets_of_size(a, ell)
