"""The quotient rings presented by variable powers, elementary symmetric
polynomials, and (for the tail family) complete homogeneous generators,
as lex rewriting systems.

Three families, by generators of the defining ideal in Z[x_1..x_n]:

* ``R(n, k)``    : x_i^k and e_n, ..., e_{n-k+1};
* ``Rs(n, k, s)``: x_i^k and e_n, ..., e_{n-s+1};
* ``T(n, k, r)`` : h_{k+1}, ..., h_{k+n} and e_n, ..., e_{n-r+1}.

The standard monomial basis avoids the variable-power bounds and all
skip monomials x(S) of the family's skip size.  The normal form rewrites
the lex-largest non-basis monomial: a variable-power offender is killed
directly (or, in the tail family, through the suffix identity
h_{k+i}(x_i..x_n) in the ideal), and a skip offender is straightened by
the reversed-variable Demazure character kappa_{gamma(S)*}(x*), whose
lex form "x(S) + smaller" makes the offender strictly decrease.

A Buchberger oracle over Q provides the independent normal form used to
cross-validate the rewriting path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .polyring import MultiPoly, Monomial, complete_sym, demazure_char, elem_sym, reverse_vars
from .qseries import QPoly
from .schubert import schubert_word
from .words import Word, enumerate_fubini


@dataclass(frozen=True)
class RingSpec:
    """Which quotient, with its parameters."""

    family: str  # "R" | "Rs" | "T"
    n: int
    k: int
    s: int | None = None
    r: int | None = None

    @staticmethod
    def R(n: int, k: int) -> "RingSpec":
        if not (1 <= k <= n):
            raise ValueError(f"R requires 1 <= k <= n, got ({n}, {k})")
        return RingSpec("R", n, k)

    @staticmethod
    def Rs(n: int, k: int, s: int) -> "RingSpec":
        if not (1 <= s <= k <= n):
            raise ValueError(f"Rs requires 1 <= s <= k <= n, got ({n}, {k}, {s})")
        return RingSpec("Rs", n, k, s=s)

    @staticmethod
    def T(n: int, k: int, r: int) -> "RingSpec":
        if not (1 <= r <= n):
            raise ValueError(f"T requires 1 <= r <= n, got ({n}, {k}, {r})")
        return RingSpec("T", n, k, r=r)

    @property
    def skip_size(self) -> int:
        if self.family == "R":
            return self.n - self.k + 1
        if self.family == "Rs":
            return self.n - self.s + 1
        return self.n - self.r + 1

    def var_power(self, i: int) -> int:
        """The excluded power of x_i (1-based): exponents must stay below it."""
        if self.family in ("R", "Rs"):
            return self.k
        return self.k + i

    def describe(self) -> str:
        if self.family == "R":
            return f"R({self.n},{self.k})"
        if self.family == "Rs":
            return f"R({self.n},{self.k},{self.s})"
        return f"T({self.n},{self.k},{self.r})"


# -- skip monomials ----------------------------------------------------------


def skip_monomial(S, n: int) -> Monomial:
    """x(S) = x_{s_1}^{s_1} x_{s_2}^{s_2-1} ... x_{s_r}^{s_r-r+1} as an
    exponent tuple of length n."""
    exps = [0] * n
    for idx, s in enumerate(sorted(S), start=1):
        if not (1 <= s <= n):
            raise ValueError(f"skip set element {s} outside [1..{n}]")
        exps[s - 1] = s - idx + 1
    return tuple(exps)


def skip_composition(S, n: int) -> tuple[int, ...]:
    """The exponent sequence of x(S) as a weak composition gamma(S)."""
    return skip_monomial(S, n)


@dataclass(frozen=True)
class SkipData:
    """A skip set with its monomial and both composition readings."""

    S: tuple[int, ...]
    monomial: Monomial
    composition: tuple[int, ...]
    reversed_composition: tuple[int, ...]


def skip_data(S, n: int) -> SkipData:
    gamma = skip_composition(S, n)
    return SkipData(tuple(sorted(S)), gamma, gamma, gamma[::-1])


# -- standard monomial bases -------------------------------------------------


def _divides(d: Monomial, m: Monomial) -> bool:
    return all(a <= b for a, b in zip(d, m))


@lru_cache(maxsize=None)
def _skip_divisors(n: int, size: int) -> tuple[Monomial, ...]:
    return tuple(skip_monomial(S, n) for S in combinations(range(1, n + 1), size))


@lru_cache(maxsize=None)
def standard_monomial_basis(spec: RingSpec) -> tuple[Monomial, ...]:
    """All monomials below the variable-power bounds and divisible by no
    skip monomial of the family's size, sorted by degree then lex."""
    n = spec.n
    skips = _skip_divisors(n, spec.skip_size)
    bounds = [spec.var_power(i) for i in range(1, n + 1)]
    basis = []

    def extend(i: int, exps: list[int]):
        if i == n:
            m = tuple(exps)
            if not any(_divides(d, m) for d in skips):
                basis.append(m)
            return
        for e in range(bounds[i]):
            exps.append(e)
            extend(i + 1, exps)
            exps.pop()

    extend(0, [])
    basis.sort(key=lambda m: (sum(m), m))
    return tuple(basis)


def hilbert_series(spec: RingSpec) -> QPoly:
    """Degree generating function of the standard monomial basis."""
    counts: dict[int, int] = {}
    for m in standard_monomial_basis(spec):
        counts[sum(m)] = counts.get(sum(m), 0) + 1
    top = max(counts) if counts else 0
    return QPoly(counts.get(d, 0) for d in range(top + 1))


def ideal_generators(spec: RingSpec) -> list[MultiPoly]:
    """The defining generators, as polynomials."""
    n, k = spec.n, spec.k
    gens: list[MultiPoly] = []
    if spec.family in ("R", "Rs"):
        for i in range(1, n + 1):
            gens.append(MultiPoly.variable(i, n) ** k)
        low = (n - k + 1) if spec.family == "R" else (n - spec.s + 1)
    else:
        for d in range(k + 1, k + n + 1):
            gens.append(complete_sym(d, n))
        low = n - spec.r + 1
    for d in range(low, n + 1):
        gens.append(elem_sym(d, n))
    return gens


# -- the rewriting normal form ------------------------------------------------


@lru_cache(maxsize=None)
def _skip_rules(spec: RingSpec) -> tuple[tuple[Monomial, MultiPoly], ...]:
    """(x(S), kappa_{gamma(S)*}(x*)) pairs for the family's skip size.

    Construction-time check of the straightening shape: the reversed
    Demazure character must read "x(S) plus a nonnegative combination of
    lex-smaller monomials".
    """
    n = spec.n
    rules = []
    for S in combinations(range(1, n + 1), spec.skip_size):
        data = skip_data(S, n)
        kappa = reverse_vars(demazure_char(data.reversed_composition))
        lead, coeff = kappa.lex_leading()
        if lead != data.monomial or coeff != 1 or any(
            c < 0 for c in kappa.terms.values()
        ):
            raise AssertionError(
                f"straightening rule for S={S} violates the expected lex form"
            )
        rules.append((data.monomial, kappa))
    return tuple(rules)


@lru_cache(maxsize=None)
def _suffix_h(spec: RingSpec, i: int) -> MultiPoly:
    """h_{k+i}(x_i, ..., x_n), an ideal member of the tail family with
    lex-leading term x_i^{k+i}."""
    n = spec.n
    return complete_sym(spec.k + i, n, range(i, n + 1))


def normal_form(f: MultiPoly, spec: RingSpec) -> MultiPoly:
    """The representative of f modulo the ideal supported on the standard
    monomial basis, with integer coefficients.

    Repeatedly the lex-largest non-basis monomial is removed: variable
    powers reduce to zero (R, Rs) or through the suffix complete
    homogeneous identity (T); otherwise some skip monomial divides and
    the Demazure straightening applies.  Both strictly lower the largest
    offender, so the loop terminates; the iteration cap only trips on a
    rewriting bug.
    """
    n = spec.n
    if f.nvars != n:
        raise ValueError(f"polynomial has {f.nvars} variables, ring needs {n}")
    basis = set(standard_monomial_basis(spec))
    skips = _skip_rules(spec)
    work = dict(f.terms)
    deg = f.degree()
    cap = 10 * comb(max(deg, 0) + n, n) + 10
    steps = 0
    while True:
        offender = None
        for e in work:
            if e not in basis and (offender is None or e > offender):
                offender = e
        if offender is None:
            break
        steps += 1
        if steps > cap:
            raise RuntimeError(
                f"rewriting exceeded {cap} steps in {spec.describe()}; "
                "this indicates a straightening bug"
            )
        c = work.pop(offender)
        i = next(
            (
                i
                for i in range(1, n + 1)
                if offender[i - 1] >= spec.var_power(i)
            ),
            None,
        )
        if i is not None:
            if spec.family in ("R", "Rs"):
                continue  # the whole term is a multiple of x_i^k
            quot = list(offender)
            quot[i - 1] -= spec.var_power(i)
            _subtract_multiple(work, _suffix_h(spec, i), tuple(quot), c)
            # the leading term of the suffix h cancels the popped offender
            work[offender] = work.get(offender, 0) + c
            if work.get(offender) == 0:
                del work[offender]
            continue
        for skip, kappa in skips:
            if _divides(skip, offender):
                quot = tuple(a - b for a, b in zip(offender, skip))
                _subtract_multiple(work, kappa, quot, c)
                work[offender] = work.get(offender, 0) + c
                if work.get(offender) == 0:
                    del work[offender]
                break
        else:
            raise RuntimeError(
                f"monomial {offender} outside the basis admits no rewrite in "
                f"{spec.describe()}"
            )
    return MultiPoly(n, work)


def _subtract_multiple(work: dict, poly: MultiPoly, shift: Monomial, coeff) -> None:
    """work -= coeff * x^shift * poly, in place."""
    for e, c in poly.terms.items():
        key = tuple(a + b for a, b in zip(e, shift))
        new = work.get(key, 0) - coeff * c
        if new:
            work[key] = new
        else:
            work.pop(key, None)


def ideal_member(f: MultiPoly, spec: RingSpec) -> bool:
    """Whether f reduces to zero."""
    return not normal_form(f, spec)


@lru_cache(maxsize=None)
def monomial_normal_form(exps: Monomial, spec: RingSpec) -> MultiPoly:
    """Cached normal form of a single monomial."""
    return normal_form(MultiPoly.monomial(exps), spec)


# -- the Schubert basis of R(n,k) ---------------------------------------------


class _SchubertBasisData:
    """Normal forms of the word Schubert polynomials of W(n,k), their
    coordinate matrix in the standard monomial basis, and (lazily) its
    exact inverse."""

    def __init__(self, n: int, k: int):
        self.n, self.k = n, k
        self.spec = RingSpec.R(n, k)
        self.words = enumerate_fubini(n, k)
        self.basis = standard_monomial_basis(self.spec)
        if len(self.words) != len(self.basis):
            raise ArithmeticError(
                f"rank mismatch in R({n},{k}): {len(self.words)} words vs "
                f"{len(self.basis)} standard monomials"
            )
        self.basis_index = {m: i for i, m in enumerate(self.basis)}
        self.rows: list[list[int]] = []
        for w in self.words:
            nf = normal_form(schubert_word(w), self.spec)
            row = [0] * len(self.basis)
            for e, c in nf.terms.items():
                row[self.basis_index[e]] = c
            self.rows.append(row)
        self._inverse: list[list[Fraction]] | None = None

    def determinant(self) -> int:
        return _det_bareiss([row[:] for row in self.rows])

    def inverse(self) -> list[list[Fraction]]:
        if self._inverse is None:
            self._inverse = _invert_exact(self.rows)
        return self._inverse


@lru_cache(maxsize=None)
def schubert_basis_data(n: int, k: int) -> _SchubertBasisData:
    return _SchubertBasisData(n, k)


def schubert_expand(f: MultiPoly, n: int, k: int) -> dict[Word, int]:
    """The unique integers c_w with f congruent to sum c_w S_w modulo the
    ideal of R(n,k): solved exactly over Q against the normal-form
    coordinate matrix, then asserted integral."""
    data = schubert_basis_data(n, k)
    nf = normal_form(f, data.spec)
    vec = [Fraction(nf.coefficient(m)) for m in data.basis]
    inv = data.inverse()
    out: dict[Word, int] = {}
    # coordinates of f: c = vec . inverse  (rows of `rows` are the words)
    for w_idx, w in enumerate(data.words):
        c = sum(vec[j] * inv[j][w_idx] for j in range(len(vec)))
        if c:
            if c.denominator != 1:
                raise ArithmeticError(
                    f"non-integral Schubert coefficient {c} for {w}"
                )
            out[w] = int(c)
    return out


def structure_constants(u: Word, v: Word, n: int, k: int) -> dict[Word, int]:
    """Expansion of the product S_u S_v in the Schubert basis of R(n,k)."""
    return schubert_expand(schubert_word(u) * schubert_word(v), n, k)


def _det_bareiss(rows: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; exact integer determinant."""
    m = len(rows)
    if m == 0:
        return 1
    sign = 1
    prev = 1
    for col in range(m - 1):
        pivot_row = next((r for r in range(col, m) if rows[r][col]), None)
        if pivot_row is None:
            return 0
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            sign = -sign
        pivot = rows[col][col]
        for r in range(col + 1, m):
            for c in range(col + 1, m):
                rows[r][c] = (rows[r][c] * pivot - rows[r][col] * rows[col][c]) // prev
            rows[r][col] = 0
        prev = pivot
    return sign * rows[m - 1][m - 1]


def _invert_exact(rows: list[list[int]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over Q; raises on a singular matrix."""
    m = len(rows)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(m)]
        for i, row in enumerate(rows)
    ]
    for col in range(m):
        pivot_row = next((r for r in range(col, m) if aug[r][col]), None)
        if pivot_row is None:
            raise ArithmeticError(
                "singular expansion matrix: the Schubert classes are dependent"
            )
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        scale = aug[col][col]
        aug[col] = [x / scale for x in aug[col]]
        for r in range(m):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[m:] for row in aug]


# -- Buchberger oracle over Q -------------------------------------------------

_ORACLE_SIZE_LIMIT = 5


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic(f: MultiPoly) -> MultiPoly:
    _, lc = f.lex_leading()
    return f * Fraction(1, 1) if lc == 1 else f * (Fraction(1) / Fraction(lc))


def oracle_reduce(f: MultiPoly, basis: list[MultiPoly]) -> MultiPoly:
    """Full multivariate division: reduce every monomial of f by the
    leading terms of the basis until none divides."""
    n = f.nvars
    leads = [(g.lex_leading()[0], g) for g in basis]
    work = {e: Fraction(c) for e, c in f.terms.items()}
    out: dict[Monomial, Fraction] = {}
    while work:
        e = max(work)
        c = work.pop(e)
        for lt, g in leads:
            if _divides(lt, e):
                shift = tuple(a - b for a, b in zip(e, lt))
                _subtract_multiple(work, g, shift, c)
                work[e] = work.get(e, 0) + c
                if work.get(e) == 0:
                    del work[e]
                break
        else:
            out[e] = out.get(e, 0) + c
    return MultiPoly(n, out)


@lru_cache(maxsize=None)
def groebner_oracle(spec: RingSpec) -> tuple[MultiPoly, ...]:
    """The reduced lex Groebner basis of the defining ideal over Q, by
    Buchberger's algorithm; guarded to small sizes."""
    if spec.n > _ORACLE_SIZE_LIMIT:
        raise ValueError(
            f"Groebner oracle is limited to n <= {_ORACLE_SIZE_LIMIT}"
        )
    basis = [_monic(g) for g in ideal_generators(spec) if g]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop()
        lt_i = basis[i].lex_leading()[0]
        lt_j = basis[j].lex_leading()[0]
        lcm = _lcm(lt_i, lt_j)
        if lcm == tuple(a + b for a, b in zip(lt_i, lt_j)):
            continue  # coprime leading monomials: S-poly reduces to zero
        shift_i = tuple(a - b for a, b in zip(lcm, lt_i))
        shift_j = tuple(a - b for a, b in zip(lcm, lt_j))
        spoly = basis[i] * MultiPoly.monomial(shift_i, Fraction(1)) - basis[
            j
        ] * MultiPoly.monomial(shift_j, Fraction(1))
        remainder = oracle_reduce(spoly, basis)
        if remainder:
            basis.append(_monic(remainder))
            new = len(basis) - 1
            pairs.extend((t, new) for t in range(new))
    # interreduce to the unique reduced basis
    reduced: list[MultiPoly] = []
    leads = [g.lex_leading()[0] for g in basis]
    for idx, g in enumerate(basis):
        lt = leads[idx]
        if any(
            other != idx and _divides(leads[other], lt)
            and not (leads[other] == lt and other > idx)
            for other in range(len(basis))
        ):
            continue
        reduced.append(g)
    final = []
    for idx, g in enumerate(reduced):
        others = reduced[:idx] + reduced[idx + 1 :]
        final.append(_monic(oracle_reduce(g, others)))
    final.sort(key=lambda g: g.lex_leading()[0])
    return tuple(final)


def oracle_normal_form(f: MultiPoly, spec: RingSpec) -> MultiPoly:
    """Normal form against the reduced Groebner basis: the independent
    cross-check of the rewriting path."""
    return oracle_reduce(f, list(groebner_oracle(spec)))


def oracle_standard_monomials(spec: RingSpec) -> tuple[Monomial, ...]:
    """Monomials not divisible by any oracle leading term (finite because
    the ideal contains a power of every variable)."""
    gb = groebner_oracle(spec)
    leads = [g.lex_leading()[0] for g in gb]
    n = spec.n
    bounds = []
    for i in range(n):
        pure = [lt[i] for lt in leads if all(lt[j] == 0 for j in range(n) if j != i)]
        if not pure:
            raise ArithmeticError(f"no pure power of x_{i + 1} among leading terms")
        bounds.append(min(pure))
    out = []

    def extend(i: int, exps: list[int]):
        if i == n:
            m = tuple(exps)
            if not any(_divides(lt, m) for lt in leads):
                out.append(m)
            return
        for e in range(bounds[i]):
            exps.append(e)
            extend(i + 1, exps)
            exps.pop()

    extend(0, [])
    out.sort(key=lambda m: (sum(m), m))
    return tuple(out)
