"""Exact univariate q-arithmetic: q-integers, q-factorials, Gaussian
binomials and multinomials, q-Stirling numbers, coefficient reversal.

All coefficients are Python ints, so every operation is exact at any size.
Division is always exact polynomial division; a nonzero remainder raises,
since it can only come from a bug, never from data.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable


class QPoly:
    """A polynomial in q with integer coefficients, stored densely.

    ``coeffs[i]`` is the coefficient of q^i; trailing zeros are trimmed so
    the top stored coefficient of a nonzero polynomial is nonzero.
    Instances are immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @staticmethod
    def zero() -> "QPoly":
        return QPoly()

    @staticmethod
    def one() -> "QPoly":
        return QPoly((1,))

    @staticmethod
    def const(c: int) -> "QPoly":
        return QPoly((c,))

    @staticmethod
    def q_power(d: int) -> "QPoly":
        return QPoly((0,) * d + (1,))

    @property
    def degree(self) -> int:
        """Degree, with deg(0) = -1."""
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "QPoly":
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "QPoly":
        if isinstance(other, int):
            other = QPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "QPoly":
        return (-self) + other

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, int):
            return QPoly(tuple(other * c for c in self.coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def exact_div(self, other: "QPoly") -> "QPoly":
        """Exact polynomial division; raises ArithmeticError on a nonzero
        remainder (which always signals an implementation bug)."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        div = other.coeffs
        dd = len(div) - 1
        lead = div[-1]
        out = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise ArithmeticError(f"inexact division: {self} / {other}")
            out[i - dd] = q
            for j, d in enumerate(div):
                rem[i - dd + j] -= q * d
        if any(rem):
            raise ArithmeticError(f"inexact division: {self} / {other}")
        return QPoly(out)

    def __call__(self, q: int) -> int:
        """Evaluate at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def to_json(self) -> list[int]:
        """Serialize as the coefficient list, lowest degree first."""
        return list(self.coeffs)

    @staticmethod
    def from_json(data: Iterable[int]) -> "QPoly":
        return QPoly(int(c) for c in data)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                term = str(c)
            else:
                mon = "q" if i == 1 else f"q^{i}"
                if c == 1:
                    term = mon
                elif c == -1:
                    term = f"-{mon}"
                else:
                    term = f"{c}*{mon}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out


def q_int(n: int) -> QPoly:
    """[n]_q = 1 + q + ... + q^(n-1); the empty sum [0]_q is 0."""
    if n < 0:
        raise ValueError("q_int requires n >= 0")
    return QPoly((1,) * n)


def q_factorial(n: int) -> QPoly:
    """[n]!_q = [n]_q [n-1]_q ... [1]_q, with [0]!_q = 1."""
    if n < 0:
        raise ValueError("q_factorial requires n >= 0")
    out = QPoly.one()
    for i in range(1, n + 1):
        out = out * q_int(i)
    return out


def q_binomial(a: int, b: int) -> QPoly:
    """Gaussian binomial [a choose b]_q, zero when b > a, b < 0 or a < 0."""
    if a < 0 or b < 0 or b > a:
        return QPoly.zero()
    return q_factorial(a).exact_div(q_factorial(b) * q_factorial(a - b))


def q_multinomial(k: int, mults: Iterable[int]) -> QPoly:
    """[k choose m_1, m_2, ...]_q = [k]!_q / prod [m_i]!_q; the m_i must sum to k."""
    ms = list(mults)
    if any(m < 0 for m in ms):
        raise ValueError("multiplicities must be nonnegative")
    if sum(ms) != k:
        raise ValueError(f"multiplicities {ms} do not sum to {k}")
    denom = QPoly.one()
    for m in ms:
        denom = denom * q_factorial(m)
    return q_factorial(k).exact_div(denom)


@lru_cache(maxsize=None)
def q_stirling(n: int, k: int) -> QPoly:
    """q-Stirling number of the second kind.

    Stir_q(0, k) = delta_{k,0}; for n > 0,
    Stir_q(n, k) = Stir_q(n-1, k-1) + [k]_q Stir_q(n-1, k).
    """
    if k < 0:
        return QPoly.zero()
    if n == 0:
        return QPoly.one() if k == 0 else QPoly.zero()
    if k == 0 or k > n:
        return QPoly.zero()
    return q_stirling(n - 1, k - 1) + q_int(k) * q_stirling(n - 1, k)


def rev_q(p: QPoly, degree: int | None = None) -> QPoly:
    """Reverse the coefficient sequence of p.

    The coefficient of q^i in the result is the coefficient of
    q^(degree - i) in p.  The reversal degree defaults to deg(p); an
    explicit larger degree shifts the reversal window.
    """
    if not p:
        return QPoly.zero()
    if degree is None:
        degree = p.degree
    if degree < p.degree:
        raise ValueError(f"reversal degree {degree} below deg(p) = {p.degree}")
    out = [0] * (degree + 1)
    for i, c in enumerate(p.coeffs):
        out[degree - i] = c
    return QPoly(out)
