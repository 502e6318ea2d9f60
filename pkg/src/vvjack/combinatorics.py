"""Partitions, reverse standard Young tableaux, and their statistics.

A shape is a partition of N given as a tuple of weakly decreasing positive
integers.  A reverse standard Young tableau (RSYT) of that shape is a filling
with 1..N whose entries decrease along each row and each column; it is
identified by its content vector ``c(i) = column(i) - row(i)``.  Compositions
are plain integer tuples of length N.

Everything here is exact (ints and Fractions) and immutable.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cache, reduce
from math import factorial
from operator import mul


def check_shape(tau: tuple[int, ...]) -> tuple[int, ...]:
    """Validate a partition shape and return it as a tuple.

    Raises ValueError for an empty shape, nonpositive parts, or parts out of
    weakly decreasing order.
    """
    tau = tuple(int(t) for t in tau)
    if len(tau) == 0 or sum(tau) == 0:
        raise ValueError("empty partition is not a valid shape")
    if any(t <= 0 for t in tau):
        raise ValueError(f"shape parts must be positive: {tau}")
    if any(tau[i] < tau[i + 1] for i in range(len(tau) - 1)):
        raise ValueError(f"shape parts must be weakly decreasing: {tau}")
    return tau


def transpose_shape(tau: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugate partition: column lengths of the Ferrers diagram."""
    tau = check_shape(tau)
    return tuple(sum(1 for t in tau if t >= j) for j in range(1, tau[0] + 1))


def cells(tau: tuple[int, ...]) -> list[tuple[int, int]]:
    """All (row, col) cells of the Ferrers diagram, 1-based, row-major."""
    return [(i, j) for i, t in enumerate(tau, start=1) for j in range(1, t + 1)]


def hooks_and_dim(tau: tuple[int, ...]) -> tuple[dict[tuple[int, int], int], int, int]:
    """Hook lengths per cell, the maximum hook length, and the RSYT count.

    The hook of cell (i, j) counts the arm to its right, the leg below in
    column j, and the cell itself; the maximum hook is tau_1 + len(tau) - 1,
    and the number of tableaux is N! divided by the product of all hooks.
    """
    tau = check_shape(tau)
    ell = len(tau)
    hooks = {}
    for i, j in cells(tau):
        leg = sum(1 for k in range(i + 1, ell + 1) if tau[k - 1] >= j)
        hooks[(i, j)] = tau[i - 1] - j + leg + 1
    h_max = tau[0] + ell - 1
    n = sum(tau)
    dim = factorial(n) // reduce(mul, hooks.values())
    return hooks, h_max, dim


def weight_n(tau: tuple[int, ...]) -> int:
    """Sum of (i-1)*tau_i over rows: the minimal symmetric degree."""
    return sum((i - 1) * t for i, t in enumerate(check_shape(tau), start=1))


def content_sum(tau: tuple[int, ...]) -> int:
    """Sum of column-minus-row over all cells (independent of the filling)."""
    return sum(j - i for i, j in cells(check_shape(tau)))


def content_square_sum(tau: tuple[int, ...]) -> int:
    """Sum of squared contents over all cells.

    Closed form: (1/6) * sum_i tau_i * ((tau_i-1)(2*tau_i-1) - 6(tau_i-i)(i-1)).
    """
    tau = check_shape(tau)
    total = 0
    for i, t in enumerate(tau, start=1):
        total += t * ((t - 1) * (2 * t - 1) - 6 * (t - i) * (i - 1))
    assert total % 6 == 0
    return total // 6


class RSYT:
    """A reverse standard Young tableau, immutable and hashable.

    ``rows`` holds the filling; ``content[i-1]`` is column(i) - row(i) for the
    cell containing i, and determines the tableau uniquely within its shape.
    """

    __slots__ = ("rows", "shape", "size", "content", "_pos")

    def __init__(self, rows):
        self.rows = tuple(tuple(int(v) for v in row) for row in rows)
        self.shape = check_shape(tuple(len(row) for row in self.rows))
        self.size = sum(self.shape)
        pos = {}
        for i, row in enumerate(self.rows, start=1):
            for j, v in enumerate(row, start=1):
                pos[v] = (i, j)
        if sorted(pos) != list(range(1, self.size + 1)):
            raise ValueError(f"entries must be exactly 1..{self.size}: {self.rows}")
        for i, j in cells(self.shape):
            v = self.rows[i - 1][j - 1]
            if j < self.shape[i - 1] and not v > self.rows[i - 1][j]:
                raise ValueError(f"row entries must decrease: {self.rows}")
            if i < len(self.shape) and self.shape[i] >= j and not v > self.rows[i][j - 1]:
                raise ValueError(f"column entries must decrease: {self.rows}")
        self._pos = pos
        self.content = tuple(pos[i][1] - pos[i][0] for i in range(1, self.size + 1))

    def position(self, i: int) -> tuple[int, int]:
        """(row, col) of entry i, 1-based."""
        return self._pos[i]

    def swap(self, j: int) -> "RSYT":
        """The tableau with entries j and j+1 interchanged.

        Valid only when j and j+1 are neither in the same row nor the same
        column (i.e. their contents differ by at least 2).
        """
        rj, cj = self._pos[j]
        rk, ck = self._pos[j + 1]
        if abs(self.content[j - 1] - self.content[j]) < 2:
            raise ValueError(f"swapping {j},{j + 1} does not give a valid tableau")
        grid = [list(row) for row in self.rows]
        grid[rj - 1][cj - 1] = j + 1
        grid[rk - 1][ck - 1] = j
        return RSYT(grid)

    def __eq__(self, other):
        return isinstance(other, RSYT) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"RSYT({list(list(r) for r in self.rows)})"


def root_tableau(tau: tuple[int, ...]) -> RSYT:
    """The tableau with N, N-1, ..., 1 entered column by column."""
    tau = check_shape(tau)
    cols = transpose_shape(tau)
    grid = [[0] * t for t in tau]
    v = sum(tau)
    for j, height in enumerate(cols, start=1):
        for i in range(1, height + 1):
            grid[i - 1][j - 1] = v
            v -= 1
    return RSYT(grid)


def row_tableau(tau: tuple[int, ...]) -> RSYT:
    """The tableau with N, N-1, ..., 1 entered row by row."""
    tau = check_shape(tau)
    grid = []
    v = sum(tau)
    for t in tau:
        grid.append(list(range(v, v - t, -1)))
        v -= t
    return RSYT(grid)


@cache
def enumerate_rsyt(tau: tuple[int, ...]) -> tuple[RSYT, ...]:
    """All RSYT of a shape, ordered by content vector (descending lex).

    The ordering puts the column-by-column root tableau first; the length
    always agrees with the hook-length count.
    """
    tau = check_shape(tau)
    n = sum(tau)

    def build(grid, v):
        # place v in any corner cell of the unfilled sub-diagram: the filled
        # region must stay a partition complement so larger entries sit
        # up-left of smaller ones
        if v == 0:
            yield RSYT(grid)
            return
        for i, t in enumerate(tau):
            filled = sum(1 for x in grid[i] if x != 0)
            j = filled  # next free column index in row i
            if j >= t:
                continue
            if i > 0 and sum(1 for x in grid[i - 1] if x != 0) <= j:
                continue
            grid[i][j] = v
            yield from build(grid, v - 1)
            grid[i][j] = 0

    found = list(build([[0] * t for t in tau], n))
    found.sort(key=lambda T: T.content, reverse=True)
    _, _, dim = hooks_and_dim(tau)
    assert len(found) == dim and found[0] == root_tableau(tau)
    return tuple(found)


def tableau_norm0(T: RSYT) -> Fraction:
    """Invariant squared length of the basis tableau.

    Product of 1 - 1/(c(i)-c(j))^2 over pairs i<j with c(i) <= c(j) - 2.
    """
    c = T.content
    out = Fraction(1)
    for i, j in itertools.combinations(range(T.size), 2):
        if c[i] <= c[j] - 2:
            out *= 1 - Fraction(1, (c[i] - c[j]) ** 2)
    return out


def c_eps(T: RSYT, eps: int) -> Fraction:
    """Product of 1 + eps/(c(i)-c(j)) over pairs i<j with c(i) <= c(j) - 2."""
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    c = T.content
    out = Fraction(1)
    for i, j in itertools.combinations(range(T.size), 2):
        if c[i] <= c[j] - 2:
            out *= 1 + Fraction(eps, c[i] - c[j])
    return out


def rank_perm(alpha: tuple[int, ...]) -> tuple[int, ...]:
    """The rank permutation r with r(i) = #{j: a_j > a_i} + #{j <= i: a_j = a_i}.

    Applying r to alpha gives the nonincreasing rearrangement.
    """
    return tuple(
        sum(1 for b in alpha if b > a) + sum(1 for b in alpha[: i + 1] if b == a)
        for i, a in enumerate(alpha)
    )


def dominance_less(alpha: tuple[int, ...], beta: tuple[int, ...]) -> bool:
    """Dominance order: all partial sums of alpha <= those of beta, alpha != beta."""
    if len(alpha) != len(beta):
        raise ValueError("compositions must have equal length")
    if alpha == beta:
        return False
    sa = sb = 0
    for a, b in zip(alpha, beta):
        sa += a
        sb += b
        if sa > sb:
            return False
    return True


def graph_less(alpha: tuple[int, ...], beta: tuple[int, ...]) -> bool:
    """The order refining dominance used for leading-term triangularity.

    Compares the sorted rearrangements by dominance first, then the
    compositions themselves.  On compositions of equal total degree (the only
    case triangularity consumes) the first comparison forces equal totals.
    """
    if len(alpha) != len(beta):
        raise ValueError("compositions must have equal length")
    if alpha == beta:
        return False
    ap = tuple(sorted(alpha, reverse=True))
    bp = tuple(sorted(beta, reverse=True))
    if ap == bp:
        return dominance_less(alpha, beta)
    return dominance_less(ap, bp)


def inv_alpha(alpha: tuple[int, ...]) -> int:
    """Number of ascents: pairs i<j with alpha_i < alpha_j."""
    return sum(
        1 for i, j in itertools.combinations(range(len(alpha)), 2) if alpha[i] < alpha[j]
    )


def inv_tableau(T: RSYT) -> int:
    """Number of pairs i<j with c(i) >= c(j) + 2."""
    c = T.content
    return sum(
        1 for i, j in itertools.combinations(range(T.size), 2) if c[i] >= c[j] + 2
    )


class Filling:
    """A filling of a Ferrers diagram with nonnegative integers."""

    __slots__ = ("rows", "shape")

    def __init__(self, rows):
        self.rows = tuple(tuple(int(v) for v in row) for row in rows)
        self.shape = check_shape(tuple(len(row) for row in self.rows))
        if any(v < 0 for row in self.rows for v in row):
            raise ValueError(f"filling values must be nonnegative: {self.rows}")

    def is_column_strict(self) -> bool:
        """True when entries increase down each column and are nondecreasing
        along each row."""
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if j + 1 < len(row) and not row[j + 1] >= v:
                    return False
                if i + 1 < len(self.rows) and j < len(self.rows[i + 1]):
                    if not self.rows[i + 1][j] > v:
                        return False
        return True

    def weight(self) -> int:
        return sum(v for row in self.rows for v in row)

    def __eq__(self, other):
        return isinstance(other, Filling) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Filling({list(list(r) for r in self.rows)})"


def floor_filling(alpha: tuple[int, ...], T: RSYT) -> Filling:
    """Replace each entry i of T by the i-th part of the sorted alpha.

    Depends on alpha only through its nonincreasing rearrangement.
    """
    if len(alpha) != T.size:
        raise ValueError("composition length must match tableau size")
    if any(a < 0 for a in alpha):
        raise ValueError("composition entries must be nonnegative")
    ap = sorted(alpha, reverse=True)
    return Filling([[ap[v - 1] for v in row] for row in T.rows])


def root_sink(F: Filling) -> tuple[RSYT, RSYT]:
    """The extreme tableaux of the connected component with filling F.

    For each cell, count cells with a strictly larger value, plus the tied
    cells that come later in column-major (root) or row-major (sink) reading
    order, the cell itself included.
    """
    if not F.is_column_strict():
        raise ValueError("root/sink tableaux require a column-strict filling")
    cs = [(i, j, F.rows[i - 1][j - 1]) for i, j in cells(F.shape)]
    root = [[0] * t for t in F.shape]
    sink = [[0] * t for t in F.shape]
    for i, j, v in cs:
        bigger = sum(1 for _, _, u in cs if u > v)
        root[i - 1][j - 1] = bigger + sum(
            1 for k, l, u in cs if u == v and (l > j or (l == j and k >= i))
        )
        sink[i - 1][j - 1] = bigger + sum(
            1 for k, l, u in cs if u == v and (k > i or (k == i and l >= j))
        )
    return RSYT(root), RSYT(sink)


def jack_count(tau: tuple[int, ...], n: int, restrict_last_zero: bool = False) -> int:
    """Number of distinct symmetric labels of degree n for the shape.

    Coefficient of z^n in z^w / prod_{cells}(1 - z^h), with w the minimal
    symmetric degree; the restricted variant multiplies by (1 - z^N).
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    hooks, _, _ = hooks_and_dim(tau)
    w = weight_n(tau)
    if n < w:
        return 0
    m = n - w
    coeffs = [0] * (m + 1)
    coeffs[0] = 1
    for h in hooks.values():
        # multiply the series by 1/(1 - z^h)
        for k in range(h, m + 1):
            coeffs[k] += coeffs[k - h]
    if restrict_last_zero:
        N = sum(tau)
        return coeffs[m] - (coeffs[m - N] if m >= N else 0)
    return coeffs[m]
