"""Exact univariate integer polynomials and coefficient-sequence predicates.

Polynomials are dense: ``IntPoly([a0, a1, a2])`` is ``a0 + a1*t + a2*t**2``.
Every polynomial in this package has degree below the vertex count of some
small graph, so a dense tuple of Python ints is both the simplest and the
fastest representation.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

from .errors import PreconditionError

__all__ = [
    "IntPoly",
    "T",
    "ONE",
    "ZERO",
    "canonical",
    "equiv_up_to_units",
    "is_palindromic",
    "is_log_concave_no_internal_zeros",
    "is_trapezoidal",
    "is_ultra_log_concave",
    "substitute_neg_t",
]

Coeffs = Union["IntPoly", Sequence[int]]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Immutable polynomial in ``t`` with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    # -- basic protocol -------------------------------------------------
    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lowest_degree(self) -> int:
        """Exponent of the lowest nonzero term (``-1`` for zero)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    # -- ring operations ------------------------------------------------
    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: "IntPoly | int") -> "IntPoly":
        return _coerce(other) - self

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return self.scale(other)
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: int) -> "IntPoly":
        return IntPoly(c * x for x in self.coeffs)

    def shift(self, k: int) -> "IntPoly":
        """Multiply by ``t**k`` (``k >= 0``)."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def divmod(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Division with remainder over Q, returned only if both parts are integral."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        d = other.degree
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1 - d, -1, -1):
            q = rem[k + d] / lead
            quot[k] = q
            if q:
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= q * c
        if any(x.denominator != 1 for x in quot + rem):
            raise ArithmeticError("division not exact over the integers")
        return IntPoly(int(x) for x in quot), IntPoly(int(x) for x in rem)

    def exact_div(self, other: "IntPoly | int") -> "IntPoly":
        """Quotient of an exact division; raises ``ArithmeticError`` otherwise."""
        q, r = self.divmod(_coerce(other))
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __floordiv__(self, other):
        return self.exact_div(other)

    def __call__(self, x):
        """Evaluate by Horner's rule (exact for ints and Fractions)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    eval_at_integer = __call__

    def reversed(self) -> "IntPoly":
        return IntPoly(reversed(self.coeffs))

    def compose_neg(self) -> "IntPoly":
        """Return ``p(-t)``."""
        return IntPoly(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    # -- display ----------------------------------------------------------
    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly((x,))
    return IntPoly(x)


ZERO = IntPoly()
ONE = IntPoly((1,))
T = IntPoly((0, 1))


def substitute_neg_t(p: IntPoly) -> IntPoly:
    """``p(t) -> p(-t)``; turns an alternating Alexander polynomial positive."""
    return p.compose_neg()


# ---------------------------------------------------------------------------
# unit normalisation


def canonical(p: Coeffs) -> IntPoly:
    """Representative of ``p`` modulo multiplication by ``±t**k``.

    Strips the lowest power of ``t`` and flips the sign so the lowest
    surviving coefficient is positive.
    """
    p = _coerce(p)
    if p.is_zero:
        return p
    low = p.lowest_degree
    c = p.coeffs[low:]
    if c[0] < 0:
        c = tuple(-x for x in c)
    return IntPoly(c)


def equiv_up_to_units(p: Coeffs, q: Coeffs) -> bool:
    return canonical(p) == canonical(q)


# ---------------------------------------------------------------------------
# sequence predicates


def _seq(p: Coeffs) -> tuple[int, ...]:
    return _coerce(p).coeffs


def _nonnegative(seq: Sequence[int], what: str) -> None:
    if any(a < 0 for a in seq):
        raise PreconditionError(f"{what} needs nonnegative coefficients, got {list(seq)}")


def is_palindromic(p: Coeffs) -> bool:
    s = _seq(p)
    return s == s[::-1]


def _no_internal_zeros(s: Sequence[int]) -> bool:
    nz = [k for k, a in enumerate(s) if a]
    if not nz:
        return True
    return all(s[k] for k in range(nz[0], nz[-1] + 1))


def is_log_concave_no_internal_zeros(p: Coeffs) -> bool:
    """``a_k**2 >= a_{k-1} a_{k+1}`` for all internal ``k`` and no internal zeros."""
    s = _seq(p)
    _nonnegative(s, "log-concavity")
    if not _no_internal_zeros(s):
        return False
    return all(s[k] * s[k] >= s[k - 1] * s[k + 1] for k in range(1, len(s) - 1))


def is_trapezoidal(p: Coeffs) -> bool:
    """Strictly increasing, then constant, then strictly decreasing.

    Either strict part may be empty, so constant sequences (and the
    length-one sequence) are trapezoidal.
    """
    s = _seq(p)
    _nonnegative(s, "trapezoidality")
    n = len(s)
    i = 0
    while i + 1 < n and s[i] < s[i + 1]:
        i += 1
    while i + 1 < n and s[i] == s[i + 1]:
        i += 1
    while i + 1 < n and s[i] > s[i + 1]:
        i += 1
    return i >= n - 1


def is_ultra_log_concave(p: Coeffs) -> bool:
    """Log-concavity of ``a_k / C(d, k)`` with ``d`` the degree.

    Compared exactly as
    ``a_k**2 * C(d,k-1) * C(d,k+1) >= a_{k-1} a_{k+1} C(d,k)**2``.
    Internal zeros are rejected as for plain log-concavity.
    """
    s = _seq(p)
    _nonnegative(s, "ultra log-concavity")
    if not _no_internal_zeros(s):
        return False
    d = len(s) - 1
    for k in range(1, d):
        lhs = s[k] * s[k] * comb(d, k - 1) * comb(d, k + 1)
        rhs = s[k - 1] * s[k + 1] * comb(d, k) ** 2
        if lhs < rhs:
            return False
    return True
