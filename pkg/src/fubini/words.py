"""Fubini-word combinatorics.

Words are length-n sequences over the alphabet [k] = {1, ..., k}; a word
carries its alphabet bound k explicitly because standardization depends
on it.  The module provides enumeration of the word families W(n,k),
W(n,k,s), T(n,k,r), initial positions, convexification, standardization,
the permutation sigma(w), the dimension statistic, and the star/bar
growth process.

Letter-place action convention
------------------------------
S_n acts on words in positions: ``word_act(p, w)`` is the word whose i-th
letter is w[p(i)].  With this reading, ``word_act(sigma_of(w), w)`` equals
``convexify(w)`` and ``word_act(sigma_of(w).inverse(), convexify(w))``
recovers w.  Two mirror conventions exist in the literature; this is the
one under which the worked identities in this package (the single-letter
Schubert classes, the structure-constant example) come out right.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .qseries import QPoly, q_factorial, q_stirling


class Perm:
    """A permutation of {1, ..., m} in one-line notation."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of [{len(imgs)}]: {imgs}")
        object.__setattr__(self, "images", imgs)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @staticmethod
    def identity(m: int) -> "Perm":
        return Perm(range(1, m + 1))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __mul__(self, other: "Perm") -> "Perm":
        """Composition (self * other)(i) = self(other(i))."""
        if self.size != other.size:
            raise ValueError("size mismatch in composition")
        return Perm(self.images[j - 1] for j in other.images)

    def inverse(self) -> "Perm":
        out = [0] * self.size
        for i, j in enumerate(self.images, start=1):
            out[j - 1] = i
        return Perm(out)

    def inversions(self) -> int:
        imgs = self.images
        return sum(
            1
            for a in range(len(imgs))
            for b in range(a + 1, len(imgs))
            if imgs[a] > imgs[b]
        )

    def descents(self) -> tuple[int, ...]:
        """Positions i with self(i) > self(i+1), 1-based."""
        imgs = self.images
        return tuple(i + 1 for i in range(len(imgs) - 1) if imgs[i] > imgs[i + 1])

    def swap_adjacent(self, i: int) -> "Perm":
        """Right multiplication by s_i: exchanges the values in slots i, i+1."""
        imgs = list(self.images)
        imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
        return Perm(imgs)

    def times_one(self) -> "Perm":
        """w x 1: append a fixed point."""
        return Perm(self.images + (self.size + 1,))

    def one_times(self, m: int = 1) -> "Perm":
        """1^m x w: prepend m fixed points, shifting all values up by m."""
        return Perm(tuple(range(1, m + 1)) + tuple(v + m for v in self.images))

    def __repr__(self) -> str:
        return f"Perm({list(self.images)!r})"

    def __str__(self) -> str:
        if self.size <= 9:
            return "".join(str(v) for v in self.images)
        return "[" + ",".join(str(v) for v in self.images) + "]"


@dataclass(frozen=True)
class Word:
    """A word over the alphabet [k], carrying its alphabet bound."""

    letters: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if any(not (1 <= a <= self.k) for a in self.letters):
            raise ValueError(f"letters {self.letters} exceed alphabet [1..{self.k}]")

    @property
    def n(self) -> int:
        return len(self.letters)

    def __getitem__(self, i: int) -> int:
        """1-based letter access."""
        return self.letters[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        if self.k <= 9:
            return "".join(str(a) for a in self.letters)
        return "[" + ",".join(str(a) for a in self.letters) + "]"

    @staticmethod
    def parse(text: str, k: int) -> "Word":
        """Accept a digit string (k <= 9) or a JSON-style integer list."""
        text = text.strip()
        if text.startswith("["):
            letters = [int(t) for t in text.strip("[]").split(",") if t.strip()]
        else:
            letters = [int(ch) for ch in text]
        return Word(tuple(letters), k)


def is_fubini(w: Word) -> bool:
    """True iff every letter from 1 up to max(w) occurs in w.

    Membership in W(n,k) additionally requires max(w) = w.k.
    """
    present = set(w.letters)
    return bool(present) and present == set(range(1, max(present) + 1))


def in_wnk(w: Word) -> bool:
    """Membership test for W(n,k): Fubini with full alphabet [k]."""
    return set(w.letters) == set(range(1, w.k + 1))


def enumerate_fubini(n: int, k: int) -> list[Word]:
    """All words in W(n,k), in lexicographic order.

    Backtracking with the pruning rule that the letters not yet used must
    still fit in the remaining positions, so every visited leaf is a valid
    word and no filtering pass is needed.
    """
    if not (1 <= k <= n):
        raise ValueError(f"need 1 <= k <= n, got (n, k) = ({n}, {k})")
    out: list[Word] = []
    prefix = [0] * n

    def extend(pos: int, unused: int, seen_mask: int):
        if pos == n:
            out.append(Word(tuple(prefix), k))
            return
        for a in range(1, k + 1):
            new_mask = seen_mask | (1 << a)
            new_unused = unused - (0 if seen_mask & (1 << a) else 1)
            if new_unused > n - pos - 1:
                continue
            prefix[pos] = a
            extend(pos + 1, new_unused, new_mask)

    extend(0, k, 0)
    return out


def enumerate_words_s(n: int, k: int, s: int) -> list[Word]:
    """W(n,k,s): words in [k]^n in which the letters 1..s all appear."""
    if not (1 <= s <= k <= n):
        raise ValueError(f"need 1 <= s <= k <= n, got ({n}, {k}, {s})")
    out: list[Word] = []
    prefix = [0] * n

    def extend(pos: int, missing: int, seen_mask: int):
        if pos == n:
            out.append(Word(tuple(prefix), k))
            return
        for a in range(1, k + 1):
            new_missing = missing
            if a <= s and not seen_mask & (1 << a):
                new_missing -= 1
            if new_missing > n - pos - 1:
                continue
            prefix[pos] = a
            extend(pos + 1, new_missing, seen_mask | (1 << a))

    extend(0, s, 0)
    return out


def enumerate_tail(n: int, k: int, r: int) -> list[Word]:
    """T(n,k,r): length-n words over [n+k] with distinct letters in which
    1..r all appear.  Their count is binom(n+k-r, k) * n!."""
    if not (1 <= r <= n):
        raise ValueError(f"need 1 <= r <= n, got ({n}, {k}, {r})")
    out: list[Word] = []
    prefix = [0] * n

    def extend(pos: int, missing: int, seen_mask: int):
        if pos == n:
            out.append(Word(tuple(prefix), n + k))
            return
        for a in range(1, n + k + 1):
            if seen_mask & (1 << a):
                continue
            new_missing = missing - (1 if a <= r else 0)
            if new_missing > n - pos - 1:
                continue
            prefix[pos] = a
            extend(pos + 1, new_missing, seen_mask | (1 << a))

    extend(0, r, 0)
    return out


def initial_positions(w: Word) -> tuple[int, ...]:
    """The 1-based positions whose letter has no earlier occurrence."""
    seen: set[int] = set()
    out = []
    for i, a in enumerate(w.letters, start=1):
        if a not in seen:
            seen.add(a)
            out.append(i)
    return tuple(out)


def pi_of(w: Word) -> tuple[int, ...]:
    """The initial letters of w in order of first occurrence.

    For w in W(n,k) this is (the one-line notation of) a permutation of [k].
    """
    seen: set[int] = set()
    out = []
    for a in w.letters:
        if a not in seen:
            seen.add(a)
            out.append(a)
    return tuple(out)


def is_convex(w: Word) -> bool:
    """True iff w avoids the pattern i...j...i, i.e. every letter's
    occurrences are contiguous."""
    last_seen: dict[int, int] = {}
    for i, a in enumerate(w.letters):
        if a in last_seen and last_seen[a] != i - 1:
            return False
        last_seen[a] = i
    return True


def convexify(w: Word) -> Word:
    """The unique convex word with the same letter multiplicities and the
    same first-occurrence order of letters."""
    counts: dict[int, int] = {}
    order = []
    for a in w.letters:
        if a not in counts:
            order.append(a)
            counts[a] = 0
        counts[a] += 1
    letters = []
    for a in order:
        letters.extend([a] * counts[a])
    return Word(tuple(letters), w.k)


def word_act(p: Perm, w: Word) -> Word:
    """Letter-place action: the i-th letter of p.w is w[p(i)]."""
    if p.size != w.n:
        raise ValueError("permutation size does not match word length")
    return Word(tuple(w.letters[j - 1] for j in p.images), w.k)


def sigma_of(w: Word) -> Perm:
    """The permutation listing, block by block, the positions of each
    initial letter of w (positions of the first initial letter in
    increasing order, then of the second, and so on).

    ``word_act(sigma_of(w), w) == convexify(w)``.
    """
    positions: dict[int, list[int]] = {}
    order = []
    for i, a in enumerate(w.letters, start=1):
        if a not in positions:
            positions[a] = []
            order.append(a)
        positions[a].append(i)
    images: list[int] = []
    for a in order:
        images.extend(positions[a])
    return Perm(images)


def sigma_factorization(w: Word) -> list[int]:
    """Adjacent-swap indices carrying convexify(w) to w, by left-to-right
    nearest-occurrence insertion: for each target position take the
    closest later copy of the wanted letter and bubble it leftward.

    The list has length inversions(sigma_of(w)), and no recorded swap
    exchanges two positions that are both initial in the word at the time
    of the swap (verified exhaustively in the test suite; no construction
    is pinned down beyond these properties).
    """
    cur = list(convexify(w).letters)
    target = list(w.letters)
    swaps: list[int] = []
    for t in range(len(cur)):
        j = next(i for i in range(t, len(cur)) if cur[i] == target[t])
        while j > t:
            swaps.append(j)  # 1-based index of the left position is j
            cur[j - 1], cur[j] = cur[j], cur[j - 1]
            j -= 1
    return swaps


def standardize(w: Word) -> Perm:
    """std(w): keep initial letters, relabel noninitial positions left to
    right with k+1, k+2, ..., then append the unused letters of [k] in
    increasing order.  Lives in S_{n+k-m} where m = #distinct letters."""
    k = w.k
    init = set(initial_positions(w))
    used = set(w.letters)
    images = []
    next_big = k + 1
    for i, a in enumerate(w.letters, start=1):
        if i in init:
            images.append(a)
        else:
            images.append(next_big)
            next_big += 1
    images.extend(sorted(set(range(1, k + 1)) - used))
    return Perm(images)


def _pi_data(letters: Sequence[int]) -> tuple[tuple[int, ...], dict[int, int]]:
    """Initial-letter sequence and the 1-based position of each letter in it."""
    pos: dict[int, int] = {}
    order = []
    for a in letters:
        if a not in pos:
            order.append(a)
            pos[a] = len(order)
    return tuple(order), pos


def generalized_dimension(w: Word) -> int:
    """Star count of the pattern matrix, by the closed formula
    -inv(pi) - n + sum_i pos(w_i in pi), valid for arbitrary words."""
    order, pos = _pi_data(w.letters)
    inv = sum(
        1
        for a in range(len(order))
        for b in range(a + 1, len(order))
        if order[a] > order[b]
    )
    return -inv - w.n + sum(pos[a] for a in w.letters)


def dimension_stat(w: Word) -> int:
    """The dimension statistic of a Fubini word (the number of stars in
    its pattern matrix); Mahonian on W(n,k)."""
    if not in_wnk(w):
        raise ValueError(f"{w} is not a Fubini word with full alphabet [{w.k}]")
    return generalized_dimension(w)


def star_growth(w: Word, j: int) -> Word:
    """Append the existing letter j, growing W(n,k) -> W(n+1,k).

    Raises dimension by pos(j in pi(w)) - 1.
    """
    if not (1 <= j <= w.k):
        raise ValueError(f"star growth letter {j} outside [1..{w.k}]")
    return Word(w.letters + (j,), w.k)


def bar_growth(w: Word, j: int) -> Word:
    """Shift letters >= j up by one, then append the new letter j, growing
    W(n,k) -> W(n+1,k+1).  Raises dimension by j - 1."""
    if not (1 <= j <= w.k + 1):
        raise ValueError(f"bar growth letter {j} outside [1..{w.k + 1}]")
    shifted = tuple(a + 1 if a >= j else a for a in w.letters)
    return Word(shifted + (j,), w.k + 1)


def mahonian_distribution(n: int, k: int) -> QPoly:
    """The generating function sum over W(n,k) of q^dim(w), accumulated by
    direct enumeration with the dimension tracked incrementally."""
    if not (1 <= k <= n):
        raise ValueError(f"need 1 <= k <= n, got (n, k) = ({n}, {k})")
    counts = [0] * (n * k + 1)
    # state: pi as a list, pos_in_pi per letter, running inv(pi) and position sum
    pos_in_pi = [0] * (k + 1)

    def extend(pos: int, unused: int, inv: int, pos_sum: int, order: list[int]):
        if pos == n:
            counts[pos_sum - inv - n] += 1
            return
        remaining = n - pos - 1
        for a in range(1, k + 1):
            if pos_in_pi[a]:
                if unused > remaining:
                    continue
                extend(pos + 1, unused, inv, pos_sum + pos_in_pi[a], order)
            else:
                if unused - 1 > remaining:
                    continue
                new_inv = inv + sum(1 for b in order if b > a)
                order.append(a)
                pos_in_pi[a] = len(order)
                extend(pos + 1, unused - 1, new_inv, pos_sum + pos_in_pi[a], order)
                pos_in_pi[a] = 0
                order.pop()

    extend(0, k, 0, 0, [])
    return QPoly(counts)


@lru_cache(maxsize=None)
def mahonian_closed_form(n: int, k: int) -> QPoly:
    """[k]!_q * Stir_q(n,k), the distribution every Mahonian statistic on
    W(n,k) must match."""
    return q_factorial(k) * q_stirling(n, k)
