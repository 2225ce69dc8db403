"""Field-generic matrix laboratory.

Canonicalization of full-rank, no-zero-column k x n matrices under the
row action of lower unitriangular matrices and the column action of the
diagonal torus, over Q (exact Fractions) or a prime field F_p.  Brute
force enumeration over F_p verifies the counting identities: the number
of canonical classes is the Mahonian distribution evaluated at p, and
orbit sizes are uniform because the product action is free.

Enumeration budgets are hard errors, overridable through the environment
variable FUBINI_BUDGET (documented as: here be dragons).
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator

from .words import Word, in_wnk
from .qseries import q_factorial, q_stirling

DEFAULT_BUDGET = 10**7


class FalsificationError(AssertionError):
    """An identity the package promises was contradicted by enumeration."""


class Field:
    """Exact field operations; rationals or a prime field."""

    __slots__ = ("p", "inv_table")

    def __init__(self, p: int | None = None):
        if p is not None:
            if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
                raise ValueError(f"{p} is not prime")
            object.__setattr__(
                self, "inv_table", tuple(pow(a, p - 2, p) if a else 0 for a in range(p))
            )
        else:
            object.__setattr__(self, "inv_table", None)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    def zero(self):
        return 0 if self.is_prime_field else Fraction(0)

    def coerce(self, value):
        if self.is_prime_field:
            return int(value) % self.p
        return Fraction(value)

    def sub(self, a, b):
        return (a - b) % self.p if self.is_prime_field else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.is_prime_field else a * b

    def inv(self, a):
        if self.is_prime_field:
            a %= self.p
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return self.inv_table[a]
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / Fraction(a)

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("Field", self.p))

    def __repr__(self) -> str:
        return "Field(Q)" if self.p is None else f"Field(F_{self.p})"


QQ = Field()


class FieldMatrix:
    """A k x n matrix with entries in a fixed field; immutable."""

    __slots__ = ("field", "rows")

    def __init__(self, rows, field: Field = QQ):
        coerced = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        if coerced and any(len(r) != len(coerced[0]) for r in coerced):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", coerced)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("FieldMatrix is immutable")

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, pos: tuple[int, int]):
        i, j = pos
        return self.rows[i - 1][j - 1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldMatrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.field, self.rows))

    def column(self, j: int) -> tuple:
        return tuple(self.rows[i][j - 1] for i in range(self.k))

    def has_zero_column(self) -> bool:
        zero = self.field.zero()
        return any(all(x == zero for x in self.column(j)) for j in range(1, self.n + 1))

    def rank(self) -> int:
        """Forward elimination rank, exact in either field."""
        f = self.field
        zero = f.zero()
        work = [list(r) for r in self.rows]
        rank = 0
        for col in range(self.n):
            pivot = next((r for r in range(rank, self.k) if work[r][col] != zero), None)
            if pivot is None:
                continue
            work[rank], work[pivot] = work[pivot], work[rank]
            piv_inv = f.inv(work[rank][col])
            for r in range(rank + 1, self.k):
                if work[r][col] != zero:
                    factor = f.mul(work[r][col], piv_inv)
                    work[r] = [
                        f.sub(x, f.mul(factor, y)) for x, y in zip(work[r], work[rank])
                    ]
            rank += 1
            if rank == self.k:
                break
        return rank

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.rows]

    def __repr__(self) -> str:
        body = "\n".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"FieldMatrix over {self.field}:\n{body}"


def _eliminate(work: list[list], f: Field, trace: list | None = None):
    """Column-by-column reduction of `work` in place; returns the word.

    Column j: if some row whose letter was never introduced has a nonzero
    entry, the least such row becomes a fresh pivot, the column entries
    below it are cleared by row operations, and the pivot is scaled to 1.
    Otherwise the column is scaled to put a 1 in the row of the
    latest-introduced letter having a nonzero entry there.
    """
    k = len(work)
    n = len(work[0])
    zero = f.zero()
    word: list[int] = []
    introduced: list[int] = []
    is_introduced = [False] * (k + 1)
    for j in range(n):
        fresh = next(
            (
                i
                for i in range(k)
                if not is_introduced[i + 1] and work[i][j] != zero
            ),
            None,
        )
        if fresh is not None:
            pivot_inv = f.inv(work[fresh][j])
            row_f = work[fresh]
            for lower in range(fresh + 1, k):
                if work[lower][j] != zero:
                    factor = f.mul(work[lower][j], pivot_inv)
                    row_l = work[lower]
                    for t in range(n):
                        row_l[t] = f.sub(row_l[t], f.mul(factor, row_f[t]))
            scale = f.inv(work[fresh][j])
            for i in range(k):
                if work[i][j] != zero:
                    work[i][j] = f.mul(scale, work[i][j])
            introduced.append(fresh + 1)
            is_introduced[fresh + 1] = True
            word.append(fresh + 1)
        else:
            pivot_row = next(
                (a for a in reversed(introduced) if work[a - 1][j] != zero), None
            )
            if pivot_row is None:
                raise ValueError("zero column encountered during reduction")
            scale = f.inv(work[pivot_row - 1][j])
            for i in range(k):
                if work[i][j] != zero:
                    work[i][j] = f.mul(scale, work[i][j])
            word.append(pivot_row)
        if trace is not None:
            trace.append(FieldMatrix(work, f))
    return tuple(word)


def canonicalize(
    m: FieldMatrix, trace: list[FieldMatrix] | None = None
) -> tuple[Word, FieldMatrix]:
    """Reduce a full-rank, no-zero-column matrix to the unique
    representative of its double orbit fitting a pattern matrix.

    If `trace` is given, the matrix state after each column is appended
    to it.  Rejects rank-deficient or zero-column input with a
    diagnostic.
    """
    if m.has_zero_column():
        raise ValueError("matrix has a zero column; not in the admissible set")
    if m.rank() < m.k:
        raise ValueError(f"matrix has rank < {m.k}; not in the admissible set")
    work = [list(r) for r in m.rows]
    letters = _eliminate(work, m.field, trace)
    return Word(letters, m.k), FieldMatrix(work, m.field)


def _budget() -> int:
    raw = os.environ.get("FUBINI_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def _check_budget(n: int, k: int, p: int) -> None:
    if p ** (k * n) > _budget():
        raise ValueError(
            f"enumeration space p^(k*n) = {p}^{k * n} exceeds the budget "
            f"{_budget()}; set FUBINI_BUDGET to override"
        )


def enumerate_M(n: int, k: int, p: int) -> Iterator[FieldMatrix]:
    """Every full-rank k x n matrix over F_p with no zero column, exactly
    once.  Enumerates by columns, so a shard is a fixed first column."""
    _check_budget(n, k, p)
    field = Field(p)
    if k > n:
        return
    nonzero_cols = [v for v in product(range(p), repeat=k) if any(v)]
    for cols in product(nonzero_cols, repeat=n):
        rows = tuple(tuple(col[i] for col in cols) for i in range(k))
        m = FieldMatrix(rows, field)
        if m.rank() == k:
            yield m


@lru_cache(maxsize=None)
def _orbit_census(n: int, k: int, p: int):
    """One exhaustive sweep of the no-zero-column matrices over F_p:
    returns (number of full-rank ones, {canonical form: class size}).

    Mod-p arithmetic is inlined here; the canonical forms agree with
    ``canonicalize`` (rank deficiency shows up as a word with fewer than
    k distinct letters, since unintroduced letters give zero rows)."""
    _check_budget(n, k, p)
    inv_table = tuple(pow(a, p - 2, p) if a else 0 for a in range(p))
    sizes: dict[tuple, int] = {}
    total = 0
    if k > n:
        return 0, sizes
    nonzero_cols = [v for v in product(range(p), repeat=k) if any(v)]
    for cols in product(nonzero_cols, repeat=n):
        work = [[col[i] for col in cols] for i in range(k)]
        word: list[int] = []
        introduced: list[int] = []
        is_introduced = [False] * (k + 1)
        for j in range(n):
            fresh = -1
            for i in range(k):
                if not is_introduced[i + 1] and work[i][j]:
                    fresh = i
                    break
            if fresh >= 0:
                pivot_inv = inv_table[work[fresh][j]]
                row_f = work[fresh]
                for lower in range(fresh + 1, k):
                    entry = work[lower][j]
                    if entry:
                        factor = entry * pivot_inv % p
                        row_l = work[lower]
                        for t in range(n):
                            row_l[t] = (row_l[t] - factor * row_f[t]) % p
                scale = inv_table[work[fresh][j]]
                if scale != 1:
                    for i in range(k):
                        work[i][j] = work[i][j] * scale % p
                introduced.append(fresh + 1)
                is_introduced[fresh + 1] = True
                word.append(fresh + 1)
            else:
                pivot_row = next(a for a in reversed(introduced) if work[a - 1][j])
                scale = inv_table[work[pivot_row - 1][j]]
                if scale != 1:
                    for i in range(k):
                        work[i][j] = work[i][j] * scale % p
                word.append(pivot_row)
        if len(introduced) < k:
            continue  # rank deficient
        total += 1
        key = (tuple(word), tuple(tuple(r) for r in work))
        sizes[key] = sizes.get(key, 0) + 1
    return total, sizes


def y_count_closed(n: int, k: int, p: int) -> int:
    """[k]!_q Stir_q(n, k) evaluated at q = p."""
    return (q_factorial(k) * q_stirling(n, k))(p)


def x_count_closed(n: int, k: int, p: int) -> int:
    """p^binom(k,2) [k]!_q Stir_q(n, k) at q = p."""
    return p ** (k * (k - 1) // 2) * y_count_closed(n, k, p)


def y_count_enumerated(n: int, k: int, p: int) -> int:
    """Number of distinct canonical forms among all of M(n,k) over F_p."""
    _, sizes = _orbit_census(n, k, p)
    for word, _ in sizes:
        if not in_wnk(Word(word, k)):
            raise FalsificationError(f"canonical word {word} is not Fubini")
    return len(sizes)


def x_count_enumerated(n: int, k: int, p: int) -> int:
    """|M| / (p-1)^n; the column-scaling action is free on matrices with
    no zero column, so this is the number of torus orbits."""
    total, _ = _orbit_census(n, k, p)
    orbit = (p - 1) ** n
    if total % orbit:
        raise FalsificationError(
            f"|M| = {total} is not divisible by the torus orbit size {orbit}"
        )
    return total // orbit


def count_Y(n: int, k: int, p: int) -> int:
    """The double-orbit count over F_p, enumerated and checked against the
    closed form; a mismatch raises FalsificationError."""
    enumerated = y_count_enumerated(n, k, p)
    closed = y_count_closed(n, k, p)
    if enumerated != closed:
        raise FalsificationError(
            f"|Y({n},{k})| over F_{p}: enumerated {enumerated} != closed {closed}"
        )
    return enumerated


def count_X(n: int, k: int, p: int) -> int:
    """The torus-orbit count over F_p, enumerated and checked against the
    closed form; a mismatch raises FalsificationError."""
    enumerated = x_count_enumerated(n, k, p)
    closed = x_count_closed(n, k, p)
    if enumerated != closed:
        raise FalsificationError(
            f"|X({n},{k})| over F_{p}: enumerated {enumerated} != closed {closed}"
        )
    return enumerated


def verify_free_action(n: int, k: int, p: int) -> bool:
    """Group the matrices of M(n,k) by canonical form and confirm every
    class has the full size p^binom(k,2) (p-1)^n of the acting group."""
    _, sizes = _orbit_census(n, k, p)
    expected = p ** (k * (k - 1) // 2) * (p - 1) ** n
    return bool(sizes) and all(size == expected for size in sizes.values())
