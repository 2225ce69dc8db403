"""Schubert polynomials for permutations and for words.

Classical Schubert polynomials are computed by the divided-difference
recursion downward from the staircase monomial of the longest element,
memoized across calls.  The word-indexed Schubert polynomial of w in
[k]^n is the subscript-permuted classical polynomial

    schubert_word(w) = act(sigma(w), schubert_perm(std(conv(w)))),

which represents the closure class of the cell labeled w.  Also here:
double Schubert polynomials, the append-last-initial-letter embedding
(with its polynomial invariance), and the two stability limits (Stanley
truncations and the variable-reversal restriction tower).
"""

from __future__ import annotations

import threading

from .polyring import MultiPoly, act, reverse_vars
from .words import Perm, Word, convexify, initial_positions, sigma_of, standardize

_memo: dict[tuple[int, ...], MultiPoly] = {}
_memo_lock = threading.Lock()


def _first_ascent(images: tuple[int, ...]) -> int | None:
    for i in range(len(images) - 1):
        if images[i] < images[i + 1]:
            return i + 1
    return None


def schubert_perm(w: Perm) -> MultiPoly:
    """The Schubert polynomial of a permutation, in Z[x_1..x_m], m = w.size.

    Homogeneous of degree inv(w) with nonnegative coefficients; the
    longest element gives the staircase monomial x1^(m-1) x2^(m-2) ...
    """
    images = w.images
    cached = _memo.get(images)
    if cached is not None:
        return cached
    m = len(images)
    i = _first_ascent(images)
    if i is None:
        # w0: staircase monomial
        poly = MultiPoly.monomial(tuple(m - j for j in range(1, m + 1)))
    else:
        from .polyring import divided_difference

        higher = schubert_perm(w.swap_adjacent(i))
        poly = divided_difference(i, higher)
    with _memo_lock:
        _memo.setdefault(images, poly)
    return poly


def schubert_word(w: Word) -> MultiPoly:
    """The Schubert polynomial attached to a word w in [k]^n, in Z[x_n].

    std(conv(w)) has an increasing tail, so its classical Schubert
    polynomial only involves x_1..x_n and restricts cleanly.
    """
    v = standardize(convexify(w))
    poly = schubert_perm(v).restrict(w.n) if v.size > w.n else schubert_perm(v).embed(w.n)
    return act(sigma_of(w), poly)


def double_schubert(w: Perm) -> MultiPoly:
    """The double Schubert polynomial in Z[x_1..x_m, y_1..y_m]: the sum of
    schubert(u)(x) * schubert(v)(-y) over factorizations w = v^(-1) u with
    inv(u) + inv(v) = inv(w).  Variables x_i sit in slots 1..m, y_i in
    slots m+1..2m."""
    m = w.size
    target = w.inversions()
    out = MultiPoly.zero(2 * m)
    for v in _all_perms(m):
        iv = v.inversions()
        if iv > target:
            continue
        u = v * w
        if u.inversions() != target - iv:
            continue
        fx = schubert_perm(u).embed(2 * m)
        gy = _shift_to_y(schubert_perm(v), m)
        out = out + fx * gy
    return out


def _shift_to_y(f: MultiPoly, m: int) -> MultiPoly:
    """Substitute x_i -> -y_i, where y_i lives in slot m+i of a 2m-ring."""
    out = {}
    for e, c in f.terms.items():
        sign = -1 if sum(e) % 2 else 1
        out[(0,) * m + e] = sign * c
    return MultiPoly(2 * m, out)


def _all_perms(m: int):
    from itertools import permutations

    for imgs in permutations(range(1, m + 1)):
        yield Perm(imgs)


def grassmannian_shape(w: Perm) -> tuple[int, ...] | None:
    """If w has a unique descent at position r, the partition
    (w_r - r, ..., w_1 - 1) with zero parts dropped; None otherwise."""
    des = w.descents()
    if len(des) != 1:
        return None
    r = des[0]
    parts = [w(i) - i for i in range(r, 0, -1)]
    return tuple(p for p in parts if p > 0)


# -- embeddings ------------------------------------------------------------


def one_times_word(w: Word) -> Word:
    """1 x w: shift all letters up by one and prepend a 1."""
    return Word((1,) + tuple(a + 1 for a in w.letters), w.k + 1)


def circledast(w: Word) -> Word:
    """w (*) 1: append the last initial letter of w."""
    last_initial = initial_positions(w)[-1]
    return Word(w.letters + (w[last_initial],), w.k)


def circledast_check(w: Word) -> bool:
    """Polynomial invariance under the append embedding:
    schubert_word(w (*) 1) equals schubert_word(w) in one more variable."""
    grown = schubert_word(circledast(w))
    return grown == schubert_word(w).embed(w.n + 1)


def stanley_truncation(w: Perm, steps: int) -> MultiPoly:
    """The Schubert polynomial of 1^steps x w, in n + steps variables.

    As steps grows, the coefficient of any fixed monomial stabilizes to
    its value in the Stanley symmetric function of w.
    """
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    return schubert_perm(w.one_times(steps))


def stanley_report(w: Perm, steps: int) -> dict:
    """Compare consecutive truncations at `steps` and `steps + 1`.

    A monomial (in the first n + steps variables) counts as stable when
    its coefficient agrees across the two truncations -- a heuristic
    stand-in for the true limit.  Returns the stable part, the flagged
    monomials, and both truncations.
    """
    small = stanley_truncation(w, steps)
    large = stanley_truncation(w, steps + 1)
    nv = small.nvars
    stable = {}
    flagged = []
    monomials = set(small.terms) | {
        e[:nv] for e in large.terms if all(x == 0 for x in e[nv:])
    }
    for e in sorted(monomials, reverse=True):
        c_small = small.coefficient(e)
        c_large = large.coefficient(e + (0,))
        if c_small == c_large:
            if c_small:
                stable[e] = c_small
        else:
            flagged.append(e)
    return {
        "stable": MultiPoly(nv, stable),
        "flagged": flagged,
        "truncation": small,
        "next_truncation": large,
    }


def dual_stable_tower(w: Word, m: int) -> list[MultiPoly]:
    """The variable-reversed Schubert polynomials of 1^j x w, j = 0..m."""
    tower = []
    current = w
    for _ in range(m + 1):
        tower.append(reverse_vars(schubert_word(current)))
        current = one_times_word(current)
    return tower


def dual_stable_check(w: Word, m: int) -> bool:
    """Check, for m steps, that killing the top variable of the reversed
    Schubert polynomial of 1 x v recovers the reversed polynomial of v."""
    tower = dual_stable_tower(w, m)
    for j in range(1, m + 1):
        restricted = tower[j].set_var_zero(tower[j].nvars).drop_last_var()
        if restricted != tower[j - 1]:
            return False
    return True
