"""Pattern matrices, omega pattern matrices, rank functions, and cell
dimensions for the cellular decomposition indexed by words.

A pattern matrix is a k x n template over {0, 1, star}: its star-fillings
are the canonical orbit representatives produced by fieldlab's
elimination.  Omega pattern matrices (over {0, star, diamond}) describe
the rank strata of convex words.  ASCII rendering uses '.', '1', '*', 'o'
for zero, one, star, diamond.
"""

from __future__ import annotations

from .words import (
    Word,
    initial_positions,
    is_convex,
    generalized_dimension,
)

ZERO = "."
ONE = "1"
STAR = "*"
DIAMOND = "o"


class PatternMatrix:
    """A k x n symbol grid; immutable."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("PatternMatrix is immutable")

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, pos: tuple[int, int]) -> str:
        """1-based (row, column) access."""
        i, j = pos
        return self.rows[i - 1][j - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, PatternMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def star_count(self) -> int:
        return sum(row.count(STAR) for row in self.rows)

    def diamond_count(self) -> int:
        return sum(row.count(DIAMOND) for row in self.rows)

    def ascii(self) -> str:
        return "\n".join(" ".join(row) for row in self.rows)

    def to_json(self) -> list[list[str]]:
        return [list(row) for row in self.rows]

    def __repr__(self) -> str:
        return f"PatternMatrix of size {self.k}x{self.n}:\n{self.ascii()}"


def pattern_matrix(w: Word) -> PatternMatrix:
    """PM(w) for an arbitrary word w in [k]^n.

    Column j holds a 1 in row w_j.  In an initial column, row i < w_j is
    starred when the letter i occurred earlier; in a noninitial column,
    row i is starred when i's first occurrence precedes that of w_j.
    Letters that never occur give zero rows.
    """
    n, k = w.n, w.k
    init = set(initial_positions(w))
    first: dict[int, int] = {}
    for pos, a in enumerate(w.letters, start=1):
        first.setdefault(a, pos)
    rows = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, n + 1):
            a = w[j]
            if a == i:
                row.append(ONE)
            elif j in init:
                row.append(STAR if a > i and first.get(i, n + 1) < j else ZERO)
            else:
                row.append(STAR if first.get(i, n + 1) < first[a] else ZERO)
        rows.append(row)
    return PatternMatrix(rows)


def omega_pattern_matrix(w: Word) -> PatternMatrix:
    """OPM(w) for a convex word: diamonds at the initial entries and, in a
    noninitial column j, in every row whose letter occurred among
    w_1..w_j; stars above an initial diamond in the rows of earlier
    initial letters."""
    if not is_convex(w):
        raise ValueError(f"{w} is not convex")
    n, k = w.n, w.k
    init = initial_positions(w)
    rows = [[ZERO] * n for _ in range(k)]
    seen_rows: list[int] = []
    for j in init:
        a = w[j]
        for i in seen_rows:
            if i < a:
                rows[i - 1][j - 1] = STAR
        rows[a - 1][j - 1] = DIAMOND
        seen_rows.append(a)
    init_set = set(init)
    for j in range(1, n + 1):
        if j in init_set:
            continue
        for a in set(w.letters[:j]):
            rows[a - 1][j - 1] = DIAMOND
    return PatternMatrix(rows)


def u_group_star_positions(w: Word) -> tuple[tuple[int, int], ...]:
    """The free below-diagonal coordinates (i, j) of the unipotent group
    U(w): i > j with the letter j appearing in w.  Its length is the
    dimension of U(w)."""
    letters = set(w.letters)
    out = []
    for j in range(1, w.k + 1):
        if j not in letters:
            continue
        for i in range(j + 1, w.k + 1):
            out.append((i, j))
    return tuple(sorted(out))


class RankFunction:
    """Ranks of all upper-left submatrices of the 0,1-matrix of a word."""

    __slots__ = ("values",)

    def __init__(self, values):
        object.__setattr__(self, "values", tuple(tuple(r) for r in values))

    def __setattr__(self, name, value):
        raise AttributeError("RankFunction is immutable")

    def __getitem__(self, pos: tuple[int, int]) -> int:
        i, j = pos
        return self.values[i - 1][j - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, RankFunction) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def leq(self, other: "RankFunction") -> bool:
        """Pointwise comparison."""
        return all(
            a <= b
            for ra, rb in zip(self.values, other.values)
            for a, b in zip(ra, rb)
        )

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.values]

    def __repr__(self) -> str:
        body = "\n".join(" ".join(str(v) for v in row) for row in self.values)
        return f"RankFunction:\n{body}"


def rank_function(w: Word) -> RankFunction:
    """r(w)(i, j) = rank of the upper-left i x j corner of the matrix with
    1's at (w_j, j); this counts the distinct letters <= i among the first
    j letters of w."""
    n, k = w.n, w.k
    values = [[0] * n for _ in range(k)]
    seen: set[int] = set()
    counts = [0] * (k + 1)  # counts[i] = #distinct letters <= i so far
    for j in range(1, n + 1):
        a = w[j]
        if a not in seen:
            seen.add(a)
            for i in range(a, k + 1):
                counts[i] += 1
        for i in range(1, k + 1):
            values[i - 1][j - 1] = counts[i]
    return RankFunction(values)


def closure_leq_convex(v: Word, w: Word) -> bool:
    """Whether the stratum of v lies in the closure of the stratum of w,
    for convex words: the pointwise inequality r(v) <= r(w)."""
    if not is_convex(v) or not is_convex(w):
        raise ValueError("closure comparison is defined for convex words")
    if (v.n, v.k) != (w.n, w.k):
        raise ValueError("words must share the same (n, k)")
    return rank_function(v).leq(rank_function(w))


def cell_dimension(w: Word) -> int:
    """dim C_w = dim U(w) + (star count of PM(w)), via the closed formula
    for the star count."""
    return len(u_group_star_positions(w)) + generalized_dimension(w)


def cell_codimension(w: Word) -> int:
    """Codimension inside the n(k-1)-dimensional ambient product; equals
    inv(std(conv(w)))."""
    return w.n * (w.k - 1) - cell_dimension(w)


def omega_cells(w: Word) -> list[Word]:
    """The words v labeling the cells partitioning the stratum of a convex
    word w: in(v) = in(w) with the same letters at initial positions; at a
    noninitial position, any previously introduced letter may appear."""
    if not is_convex(w):
        raise ValueError(f"{w} is not convex")
    init = set(initial_positions(w))
    available: list[int] = []
    choices: list[list[int]] = []
    for j in range(1, w.n + 1):
        if j in init:
            choices.append([w[j]])
            available = available + [w[j]]
        else:
            choices.append(list(available))
    out: list[list[int]] = [[]]
    for options in choices:
        out = [prefix + [a] for prefix in out for a in sorted(options)]
    return [Word(tuple(letters), w.k) for letters in out]


def dimension_via_pattern_matrix(w: Word) -> int:
    """Star count of PM(w); the definitional route, used to cross-check
    the closed formula."""
    return pattern_matrix(w).star_count()


def rank_convex_representative(w: Word) -> Word:
    """The convex word with the same rank function as w: keep the letters
    at initial positions and repeat the previous letter elsewhere.

    This is the stratum label of the cell of w.  It differs from
    convexify(w) in general (121 fills to 122 while convexify gives 112),
    because ranks only see which letters have been introduced, not their
    multiplicities.
    """
    init = set(initial_positions(w))
    letters: list[int] = []
    for j in range(1, w.n + 1):
        letters.append(w[j] if j in init else letters[-1])
    return Word(tuple(letters), w.k)


def conv_rank_check(w: Word) -> bool:
    """Every word's rank function is that of a convex word."""
    filled = rank_convex_representative(w)
    return is_convex(filled) and rank_function(w) == rank_function(filled)


def bruhat_reference(n: int, k: int) -> dict:
    """Reference closure-containment (Bruhat) Hasse diagrams for W(3,2)
    and W(4,3), shipped as static data.

    Computing this order in general is open (the naive rank-function
    criterion fails for non-convex words), so only these two transcribed
    posets are available; each entry has `words`, `covers` as
    [lower, upper] pairs, and the codimension grading.
    """
    import json
    from importlib import resources

    if (n, k) not in ((3, 2), (4, 3)):
        raise ValueError("reference diagrams exist only for (3,2) and (4,3)")
    name = f"bruhat_covers_{n}{k}.json"
    return json.loads(resources.files("fubini.data").joinpath(name).read_text())
