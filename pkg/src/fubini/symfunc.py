"""Partitions, standard Young tableaux with maj/des, Schur polynomials by
Jacobi-Trudi, symmetric group characters by Murnaghan-Nakayama, and the
graded Frobenius expansions of the generalized coinvariant quotients.

A partition is a weakly decreasing tuple of positive ints; a tableau is a
tuple of row tuples filled with 1..n.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .polyring import MultiPoly, complete_sym
from .qseries import QPoly, q_binomial
from .words import Perm

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


def is_partition(shape) -> bool:
    shape = tuple(shape)
    return all(a >= 1 for a in shape) and all(
        shape[i] >= shape[i + 1] for i in range(len(shape) - 1)
    )


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in reverse lexicographic order."""
    if n == 0:
        return ((),)
    out: list[Partition] = []

    def build(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            build(remaining - part, part, prefix + (part,))

    build(n, n, ())
    return tuple(out)


@lru_cache(maxsize=None)
def syt(shape: Partition) -> tuple[Tableau, ...]:
    """All standard Young tableaux of the given shape, by removing the
    largest entry from a corner and recursing."""
    shape = tuple(shape)
    if not is_partition(shape):
        raise ValueError(f"{shape} is not a partition")
    n = sum(shape)
    if n == 0:
        return ((),)
    out: list[Tableau] = []
    for row in range(len(shape)):
        if row + 1 < len(shape) and shape[row] == shape[row + 1]:
            continue  # not a corner
        smaller = list(shape)
        smaller[row] -= 1
        if smaller[row] == 0:
            smaller.pop()
        for t in syt(tuple(smaller)):
            rows = [list(r) for r in t]
            while len(rows) <= row:
                rows.append([])
            rows[row].append(n)
            out.append(tuple(tuple(r) for r in rows))
    return tuple(out)


def _row_of(t: Tableau, value: int) -> int:
    for r, row in enumerate(t):
        if value in row:
            return r
    raise ValueError(f"{value} not in tableau")


def descent_set(t: Tableau) -> tuple[int, ...]:
    """Entries i such that i+1 sits in a strictly lower row."""
    n = sum(len(r) for r in t)
    return tuple(i for i in range(1, n) if _row_of(t, i + 1) > _row_of(t, i))


def maj(t: Tableau) -> int:
    """Major index: the sum of the descents."""
    return sum(descent_set(t))


def des(t: Tableau) -> int:
    """Number of descents."""
    return len(descent_set(t))


def shape_of(t: Tableau) -> Partition:
    return tuple(len(r) for r in t)


@lru_cache(maxsize=None)
def num_syt(shape: Partition) -> int:
    """f^lambda by the hook length formula."""
    shape = tuple(shape)
    n = sum(shape)
    if n == 0:
        return 1
    conj = [sum(1 for part in shape if part > i) for i in range(shape[0])]
    hooks = 1
    for r, part in enumerate(shape):
        for c in range(part):
            hooks *= (part - c) + (conj[c] - r) - 1
    return factorial(n) // hooks


def schur_poly(shape: Partition, nvars: int) -> MultiPoly:
    """The Schur polynomial s_shape(x_1..x_nvars) by the Jacobi-Trudi
    determinant det(h_{shape_i - i + j}); zero when the shape has more
    rows than there are variables."""
    shape = tuple(shape)
    if shape and not is_partition(shape):
        raise ValueError(f"{shape} is not a partition")
    ell = len(shape)
    if ell == 0:
        return MultiPoly.one(nvars)
    if ell > nvars:
        return MultiPoly.zero(nvars)
    entries = [
        [complete_sym(shape[i] - (i + 1) + (j + 1), nvars) for j in range(ell)]
        for i in range(ell)
    ]

    memo: dict[tuple[int, frozenset], MultiPoly] = {}

    def minor(row: int, cols: frozenset) -> MultiPoly:
        if row == ell:
            return MultiPoly.one(nvars)
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = MultiPoly.zero(nvars)
        for sign_idx, j in enumerate(sorted(cols)):
            sub = minor(row + 1, cols - {j})
            term = entries[row][j] * sub
            total = total + (term if sign_idx % 2 == 0 else -term)
        memo[key] = total
        return total

    return minor(0, frozenset(range(ell)))


class SchurExpansion:
    """A finite map from partitions (all of the same size) to QPoly
    coefficients; the value of a graded Frobenius characteristic."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[Partition, QPoly] | None = None):
        clean = {}
        sizes = set()
        for shape, c in (coeffs or {}).items():
            shape = tuple(shape)
            if not c:
                continue
            if shape and not is_partition(shape):
                raise ValueError(f"{shape} is not a partition")
            sizes.add(sum(shape))
            clean[shape] = c
        if len(sizes) > 1:
            raise ValueError("mixed partition sizes in one expansion")
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SchurExpansion is immutable")

    def __getitem__(self, shape) -> QPoly:
        return self.coeffs.get(tuple(shape), QPoly.zero())

    def __eq__(self, other) -> bool:
        return isinstance(other, SchurExpansion) and self.coeffs == other.coeffs

    def __iter__(self):
        return iter(sorted(self.coeffs))

    def scale(self, factor: QPoly) -> "SchurExpansion":
        return SchurExpansion({s: factor * c for s, c in self.coeffs.items()})

    def to_json(self) -> list:
        """[[partition, coefficient array], ...], partitions sorted."""
        return [
            [list(shape), self.coeffs[shape].to_json()]
            for shape in sorted(self.coeffs)
        ]

    def __repr__(self) -> str:
        body = ", ".join(f"s{list(s)}: {c}" for s, c in sorted(self.coeffs.items()))
        return f"SchurExpansion({body})"


def grfrob_R(n: int, k: int) -> SchurExpansion:
    """Graded Frobenius image of the rank-n,k quotient: the sum over
    standard tableaux T with n boxes of
    q^maj(T) [n - des(T) - 1 choose n - k]_q s_shape(T).

    At k = n the binomial collapses to 1 and this is the classical
    coinvariant formula."""
    if not (1 <= k <= n):
        raise ValueError(f"need 1 <= k <= n, got ({n}, {k})")
    coeffs: dict[Partition, QPoly] = {}
    for shape in partitions_of(n):
        total = QPoly.zero()
        for t in syt(shape):
            total = total + QPoly.q_power(maj(t)) * q_binomial(n - des(t) - 1, n - k)
        if total:
            coeffs[shape] = total
    return SchurExpansion(coeffs)


def grfrob_T(n: int, k: int, r: int) -> SchurExpansion:
    """Graded Frobenius image of the tail quotient: the q-binomial
    [n+k-r choose k]_q times the classical coinvariant expansion."""
    if not (1 <= r <= n):
        raise ValueError(f"need 1 <= r <= n, got ({n}, {k}, {r})")
    return grfrob_R(n, n).scale(q_binomial(n + k - r, k))


def hilbert_from_frobenius(e: SchurExpansion) -> QPoly:
    """Dimension specialization s_shape -> f^shape."""
    total = QPoly.zero()
    for shape in e:
        total = total + e[shape] * num_syt(shape)
    return total


@lru_cache(maxsize=None)
def irr_character(shape: Partition, cycle_type: Partition) -> int:
    """chi^shape evaluated on the conjugacy class of the given cycle type,
    by Murnaghan-Nakayama border-strip recursion."""
    shape = tuple(shape)
    cycle_type = tuple(cycle_type)
    if sum(shape) != sum(cycle_type):
        raise ValueError("partition sizes disagree")
    if not cycle_type:
        return 1
    strip = cycle_type[0]
    rest = cycle_type[1:]
    total = 0
    for smaller, height in _border_strip_removals(shape, strip):
        total += (-1) ** height * irr_character(smaller, rest)
    return total


def _border_strip_removals(shape: Partition, strip: int):
    """All ways to remove a border strip of the given size, with heights.

    In beta-set coordinates (shape_i + l - i) a strip removal is a bead
    drop by `strip` landing on a free slot; the height is the number of
    beads strictly between the two positions.
    """
    ell = len(shape)
    if ell == 0:
        return
    beta = [shape[i] + (ell - 1 - i) for i in range(ell)]
    occupied = set(beta)
    for i, b in enumerate(beta):
        target = b - strip
        if target < 0 or target in occupied:
            continue
        crossed = sum(1 for c in beta if target < c < b)
        new_beta = sorted([x for x in beta if x != b] + [target], reverse=True)
        new_shape = tuple(
            x - (ell - 1 - idx) for idx, x in enumerate(new_beta)
        )
        new_shape = tuple(p for p in new_shape if p > 0)
        yield new_shape, crossed


def cycle_type(p: Perm) -> Partition:
    """The cycle type of a permutation, as a partition."""
    seen = [False] * (p.size + 1)
    lengths = []
    for start in range(1, p.size + 1):
        if seen[start]:
            continue
        length = 0
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cur = p(cur)
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))
