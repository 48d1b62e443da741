"""Sparse two-variable Laurent polynomials over GF(2).

A polynomial is its support: a frozenset of exponent pairs (e_x, e_y) with
possibly negative exponents; every present coefficient is 1.  Addition is
symmetric difference, multiplication is set convolution with mod-2
cancellation, and squaring doubles every exponent (freshman's dream).

The transition multipliers of the two linear rules, Fibonacci/Lucas
polynomial evaluation with a doubling ladder, and the grid <-> polynomial
bijection live here as well; together they give the closed-form state of a
linear lift at any step without simulating.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, NamedTuple

from .grid import BinaryGrid
from .rules import Rule


class NonlinearRuleError(ValueError):
    """Requested a transition polynomial for a rule that has none."""


class IndexOutOfRangeError(ValueError):
    """Index outside the domain of a recursion or decomposition."""


class LaurentPoly2:
    """Immutable GF(2) Laurent polynomial in x, y, stored as its support."""

    __slots__ = ("support",)

    def __init__(self, terms: Iterable[tuple[int, int]] = ()):
        object.__setattr__(self, "support", frozenset(terms))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly2 is immutable")

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        return LaurentPoly2(self.support ^ other.support)

    def __mul__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        if len(self.support) > len(other.support):
            self, other = other, self
        acc: Counter = Counter()
        for (ax, ay) in self.support:
            for (bx, by) in other.support:
                acc[(ax + bx, ay + by)] += 1
        return LaurentPoly2(e for e, c in acc.items() if c & 1)

    def square(self) -> "LaurentPoly2":
        """p^2 over GF(2): every exponent pair doubles, no cross terms."""
        return LaurentPoly2((2 * ex, 2 * ey) for ex, ey in self.support)

    def pow_2k(self, k: int) -> "LaurentPoly2":
        """p raised to the 2^k-th power by k squarings."""
        if k < 0:
            raise ValueError("k must be nonnegative")
        p = self
        for _ in range(k):
            p = p.square()
        return p

    def shift_exponents(self, dx: int, dy: int) -> "LaurentPoly2":
        """Multiply by the monomial x^dx y^dy."""
        return LaurentPoly2((ex + dx, ey + dy) for ex, ey in self.support)

    def __len__(self) -> int:
        return len(self.support)

    def __bool__(self) -> bool:
        return bool(self.support)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self.support == other.support

    def __hash__(self) -> int:
        return hash(self.support)

    def __repr__(self) -> str:
        return f"LaurentPoly2({sorted(self.support)!r})"


ZERO = LaurentPoly2()
ONE = LaurentPoly2([(0, 0)])


def poly_add(p: LaurentPoly2, q: LaurentPoly2) -> LaurentPoly2:
    return p + q


def poly_mul(p: LaurentPoly2, q: LaurentPoly2) -> LaurentPoly2:
    return p * q


def poly_square(p: LaurentPoly2) -> LaurentPoly2:
    return p.square()


def poly_pow_2k(p: LaurentPoly2, k: int) -> LaurentPoly2:
    return p.pow_2k(k)


def transition_poly(rule: Rule) -> LaurentPoly2:
    """Multiplier T(x, y) with f[p] = T * p for the linear rules.

    C1: (x^-1 + x)(y^-1 + y); C2: x^-1 + x + y^-1 + y.  C3 and C3' are
    nonlinear and raise :class:`NonlinearRuleError`.
    """
    if rule is Rule.C1:
        return LaurentPoly2([(-1, -1), (1, -1), (-1, 1), (1, 1)])
    if rule is Rule.C2:
        return LaurentPoly2([(-1, 0), (1, 0), (0, -1), (0, 1)])
    raise NonlinearRuleError(f"{rule.value} has no transition polynomial")


def fib_poly_naive(T: LaurentPoly2, k: int) -> LaurentPoly2:
    """f_k(T) by the plain linear recursion; reference path for the ladder."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a, b = ZERO, ONE  # f_0, f_1
    for _ in range(k):
        a, b = b, T * b + a
    return a


def _fib_pair(T: LaurentPoly2, k: int) -> tuple[LaurentPoly2, LaurentPoly2]:
    """(f_k(T), f_{k+1}(T)) by the doubling ladder.

    Processes bits of k from the most significant down, keeping (f_m,
    f_{m+1}) and using f_{2m} = T f_m^2 and f_{2m+1} = (f_m + f_{m+1})^2,
    hence f_{2m+2} = T f_{m+1}^2.  O(log k) squarings and 4-term products.
    """
    a, b = ZERO, ONE
    for shift in range(k.bit_length() - 1, -1, -1):
        mid = (a + b).square()
        if (k >> shift) & 1:
            a, b = mid, T * b.square()
        else:
            a, b = T * a.square(), mid
    return a, b


def fib_poly_eval(T: LaurentPoly2, k: int) -> LaurentPoly2:
    """Fibonacci polynomial f_k evaluated at T over GF(2), by doubling."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _fib_pair(T, k)[0]


def lucas_poly_eval(T: LaurentPoly2, k: int) -> LaurentPoly2:
    """Lucas polynomial l_k at T over GF(2): l_0 = 2 = 0, else T * f_k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return ZERO
    return T * fib_poly_eval(T, k)


def fib_addition_split(k: int, j: int, T: LaurentPoly2) -> LaurentPoly2:
    """Evaluate f_{2^k + j}(T) as T^{2^k} f_j(T) + f_{2^k - j}(T).

    Requires 0 <= j < 2^k; must agree with the direct ladder evaluation.
    """
    if k < 0 or not 0 <= j < (1 << k):
        raise IndexOutOfRangeError(f"need 0 <= j < 2^{k}, got j={j}")
    t2k = T.pow_2k(k)
    return t2k * fib_poly_eval(T, j) + fib_poly_eval(T, (1 << k) - j)


class PolyPair(NamedTuple):
    """(current, previous) components of a state as polynomials."""

    first: LaurentPoly2
    second: LaurentPoly2


def state_poly_at(rule: Rule, n: int) -> PolyPair:
    """Exact state of the lift of a linear rule after n >= 0 steps.

    The pair is (f_{n+1}(T), f_n(T)); converting both members to grids
    reproduces the simulated state from the single seed.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    T = transition_poly(rule)
    fn, fn1 = _fib_pair(T, n)
    return PolyPair(fn1, fn)


def grid_to_poly(g: BinaryGrid) -> LaurentPoly2:
    """Characteristic polynomial: occupied cell (i, j) -> monomial x^i y^j."""
    return LaurentPoly2(g.cells())


def poly_to_grid(p: LaurentPoly2) -> BinaryGrid:
    return BinaryGrid(p.support)


# --- text interchange format ------------------------------------------------

def poly_to_text(p: LaurentPoly2) -> str:
    """Serialize: header '#lpoly v1 terms=N', then sorted 'e_x e_y' lines."""
    lines = [f"#lpoly v1 terms={len(p)}"]
    lines.extend(f"{ex} {ey}" for ex, ey in sorted(p.support))
    return "\n".join(lines) + "\n"


def poly_from_text(text: str) -> LaurentPoly2:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#lpoly v1"):
        raise ValueError("missing '#lpoly v1' header")
    terms = []
    for ln in lines[1:]:
        ex, ey = ln.split()
        terms.append((int(ex), int(ey)))
    declared = int(lines[0].split("terms=")[1])
    if declared != len(terms):
        raise ValueError(f"header terms={declared} but {len(terms)} terms")
    return LaurentPoly2(terms)
