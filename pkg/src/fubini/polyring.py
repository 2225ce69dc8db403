"""Exact multivariate polynomial arithmetic over the integers.

Monomials are exponent tuples of a fixed length ``nvars``; tuple
comparison is exactly the lexicographic term order (x1 heaviest), so
``max`` over exponent tuples is the lex-leading monomial.  Coefficients
are arbitrary-precision ints in normal use; the same class works with
``fractions.Fraction`` coefficients, which the Groebner oracle relies on.

Operations: subscript-permutation action, divided differences,
elementary/complete symmetric polynomials on variable subsets, Demazure
characters (key polynomials), and variable reversal.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .words import Perm

Monomial = tuple  # exponent tuple; lex order == tuple order


class MultiPoly:
    """An element of Z[x_1, ..., x_nvars], stored as {exponent tuple: coeff}
    with no zero coefficients.  Immutable."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, int] | None = None):
        clean = {}
        if terms:
            for exps, c in terms.items():
                if c == 0:
                    continue
                if len(exps) != nvars:
                    raise ValueError(f"exponent tuple {exps} has wrong length")
                clean[tuple(exps)] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "MultiPoly":
        return MultiPoly(nvars)

    @staticmethod
    def const(nvars: int, c: int) -> "MultiPoly":
        return MultiPoly(nvars, {(0,) * nvars: c})

    @staticmethod
    def one(nvars: int) -> "MultiPoly":
        return MultiPoly.const(nvars, 1)

    @staticmethod
    def variable(i: int, nvars: int) -> "MultiPoly":
        """x_i, 1-based."""
        if not (1 <= i <= nvars):
            raise ValueError(f"variable index {i} outside [1..{nvars}]")
        exps = [0] * nvars
        exps[i - 1] = 1
        return MultiPoly(nvars, {tuple(exps): 1})

    @staticmethod
    def monomial(exps: Iterable[int], coeff: int = 1) -> "MultiPoly":
        exps = tuple(exps)
        return MultiPoly(len(exps), {exps: coeff})

    # -- ring structure ----------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable-count mismatch")
            return other
        return MultiPoly.const(self.nvars, other)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            new = out.get(e, 0) + c
            if new:
                out[e] = new
            else:
                out.pop(e, None)
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            if other == 0:
                return MultiPoly.zero(self.nvars)
            return MultiPoly(
                self.nvars, {e: c * other for e, c in self.terms.items()}
            )
        other = self._coerce(other)
        out: dict[Monomial, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                new = out.get(e, 0) + c1 * c2
                if new:
                    out[e] = new
                else:
                    out.pop(e, None)
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, d: int) -> "MultiPoly":
        if d < 0:
            raise ValueError("negative power")
        out = MultiPoly.one(self.nvars)
        base = self
        while d:
            if d & 1:
                out = out * base
            base = base * base
            d >>= 1
        return out

    # -- queries -----------------------------------------------------------

    def lex_leading(self) -> tuple[Monomial, int]:
        """The lex-largest monomial with its coefficient; errors on zero."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def coefficient(self, exps: Iterable[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def degree(self) -> int:
        """Total degree; deg(0) = -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in lex-descending order (deterministic output order)."""
        return sorted(self.terms.items(), reverse=True)

    # -- substitutions -----------------------------------------------------

    def set_var_zero(self, i: int) -> "MultiPoly":
        """Substitute x_i = 0 (1-based)."""
        out = {e: c for e, c in self.terms.items() if e[i - 1] == 0}
        return MultiPoly(self.nvars, out)

    def drop_last_var(self) -> "MultiPoly":
        """Forget an unused last variable."""
        if any(e[-1] != 0 for e in self.terms):
            raise ValueError("last variable occurs; cannot drop")
        return MultiPoly(self.nvars - 1, {e[:-1]: c for e, c in self.terms.items()})

    def embed(self, nvars: int) -> "MultiPoly":
        """View in a larger polynomial ring (append fresh variables)."""
        if nvars < self.nvars:
            raise ValueError("embed target smaller than current ring")
        pad = (0,) * (nvars - self.nvars)
        return MultiPoly(nvars, {e + pad: c for e, c in self.terms.items()})

    def restrict(self, nvars: int) -> "MultiPoly":
        """Project onto the first nvars variables; the rest must not occur."""
        if nvars > self.nvars:
            raise ValueError("restrict target larger than current ring")
        out = {}
        for e, c in self.terms.items():
            if any(x != 0 for x in e[nvars:]):
                raise ValueError("polynomial involves a variable beyond the target")
            out[e[:nvars]] = c
        return MultiPoly(nvars, out)

    def evaluate(self, values: Iterable) -> int:
        vals = tuple(values)
        if len(vals) != self.nvars:
            raise ValueError("wrong number of values")
        total = 0
        for e, c in self.terms.items():
            prod = c
            for v, d in zip(vals, e):
                prod *= v**d
            total += prod
        return total

    # -- rendering / serialization ------------------------------------------

    def to_json(self) -> list:
        """Lex-descending [exponent-vector, coefficient-string] pairs."""
        return [[list(e), str(c)] for e, c in self.sorted_terms()]

    @staticmethod
    def from_json(data, nvars: int | None = None) -> "MultiPoly":
        terms = {}
        for exps, coeff in data:
            exps = tuple(int(x) for x in exps)
            if nvars is None:
                nvars = len(exps)
            terms[exps] = terms.get(exps, 0) + int(coeff)
        if nvars is None:
            raise ValueError("cannot infer variable count from empty data")
        return MultiPoly(nvars, terms)

    def pretty(self, latex: bool = False) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for i, d in enumerate(e, start=1):
                if d == 0:
                    continue
                if latex:
                    factors.append(f"x_{{{i}}}" + (f"^{{{d}}}" if d > 1 else ""))
                else:
                    factors.append(f"x{i}" + (f"^{d}" if d > 1 else ""))
            mono = ("" if latex else "*").join(factors)
            if not mono:
                term = str(c)
            elif c == 1:
                term = mono
            elif c == -1:
                term = "-" + mono
            else:
                term = f"{c}{'' if latex else '*'}{mono}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self.pretty()})"

    __str__ = __repr__


def act(p: Perm, f: MultiPoly) -> MultiPoly:
    """Subscript permutation x_i -> x_{p(i)}; a ring automorphism and a
    left action: act(p*q, f) = act(p, act(q, f))."""
    if p.size != f.nvars:
        raise ValueError("permutation size does not match variable count")
    imgs = p.images
    out: dict[Monomial, int] = {}
    for e, c in f.terms.items():
        new = [0] * f.nvars
        for i, d in enumerate(e):
            new[imgs[i] - 1] = d
        out[tuple(new)] = c
    return MultiPoly(f.nvars, out)


def swap_vars(f: MultiPoly, i: int, j: int) -> MultiPoly:
    """Transpose x_i and x_j (1-based)."""
    out: dict[Monomial, int] = {}
    for e, c in f.terms.items():
        new = list(e)
        new[i - 1], new[j - 1] = new[j - 1], new[i - 1]
        out[tuple(new)] = c
    return MultiPoly(f.nvars, out)


def divided_difference(i: int, f: MultiPoly) -> MultiPoly:
    """The operator (f - s_i.f)/(x_i - x_{i+1}), 1 <= i < nvars.

    The numerator is antisymmetric in x_i, x_{i+1}, so the division is
    always exact; a nonzero remainder raises ArithmeticError.
    """
    if not (1 <= i <= f.nvars - 1):
        raise ValueError(f"divided difference index {i} outside [1..{f.nvars - 1}]")
    num = f - swap_vars(f, i, i + 1)
    # long division by (x_i - x_{i+1}) in lex order; leading term is x_i
    quotient: dict[Monomial, int] = {}
    rem = dict(num.terms)
    while rem:
        e = max(rem)
        c = rem.pop(e)
        if e[i - 1] == 0:
            raise ArithmeticError("inexact division in divided difference")
        q = list(e)
        q[i - 1] -= 1
        q = tuple(q)
        quotient[q] = quotient.get(q, 0) + c
        # subtract c * x^q * (x_i - x_{i+1}); the x_i part cancels e exactly
        lower = list(q)
        lower[i] += 1
        lower = tuple(lower)
        new = rem.get(lower, 0) + c
        if new:
            rem[lower] = new
        else:
            rem.pop(lower, None)
    return MultiPoly(f.nvars, quotient)


def isobaric_divided_difference(i: int, f: MultiPoly) -> MultiPoly:
    """pi_i(f) = d_i(x_i f), the Demazure operator."""
    return divided_difference(i, MultiPoly.variable(i, f.nvars) * f)


def elem_sym(d: int, nvars: int, varset: Iterable[int] | None = None) -> MultiPoly:
    """Elementary symmetric polynomial e_d in the chosen variables
    (1-based indices; all of them by default).  e_0 = 1, e_d = 0 for
    d > |varset| or d < 0."""
    vs = sorted(varset) if varset is not None else list(range(1, nvars + 1))
    if d < 0 or d > len(vs):
        return MultiPoly.zero(nvars)
    # dp over variables: row t holds e_t of the prefix processed so far
    rows: list[dict[Monomial, int]] = [dict() for _ in range(d + 1)]
    rows[0][(0,) * nvars] = 1
    for v in vs:
        for t in range(min(d, len(rows) - 1), 0, -1):
            addition = {}
            for e, c in rows[t - 1].items():
                new = list(e)
                new[v - 1] += 1
                addition[tuple(new)] = c
            for e, c in addition.items():
                rows[t][e] = rows[t].get(e, 0) + c
    return MultiPoly(nvars, rows[d])


def complete_sym(d: int, nvars: int, varset: Iterable[int] | None = None) -> MultiPoly:
    """Complete homogeneous symmetric polynomial h_d in the chosen
    variables.  h_0 = 1; h_d = 0 for d < 0 or an empty variable set."""
    vs = sorted(varset) if varset is not None else list(range(1, nvars + 1))
    if d < 0 or (d > 0 and not vs):
        return MultiPoly.zero(nvars)
    out: dict[Monomial, int] = {}

    def spread(idx: int, remaining: int, exps: list[int]):
        if idx == len(vs) - 1:
            exps[vs[idx] - 1] = remaining
            out[tuple(exps)] = out.get(tuple(exps), 0) + 1
            exps[vs[idx] - 1] = 0
            return
        for t in range(remaining + 1):
            exps[vs[idx] - 1] = t
            spread(idx + 1, remaining - t, exps)
        exps[vs[idx] - 1] = 0

    spread(0, d, [0] * nvars)
    return MultiPoly(nvars, out)


@lru_cache(maxsize=None)
def demazure_char(gamma: tuple[int, ...]) -> MultiPoly:
    """The key polynomial kappa_gamma in len(gamma) variables.

    kappa is x^gamma for weakly decreasing gamma; otherwise sorting an
    ascent gamma_i < gamma_{i+1} and applying the isobaric operator pi_i
    reduces to a previously known case.  Coefficients are nonnegative.
    """
    gamma = tuple(gamma)
    if any(g < 0 for g in gamma):
        raise ValueError("composition entries must be nonnegative")
    n = len(gamma)
    for i in range(n - 1):
        if gamma[i] < gamma[i + 1]:
            swapped = list(gamma)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            return isobaric_divided_difference(i + 1, demazure_char(tuple(swapped)))
    return MultiPoly.monomial(gamma)


def reverse_vars(f: MultiPoly) -> MultiPoly:
    """Substitute x_i -> x_{n+1-i}; an involution."""
    return MultiPoly(f.nvars, {e[::-1]: c for e, c in f.terms.items()})
