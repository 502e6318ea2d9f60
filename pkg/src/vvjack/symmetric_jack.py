"""Symmetric vector-valued Jack polynomials.

A component of the graph (edges and jumps only, no affine steps) collects all
labels (beta, T') sharing one filling: replace each entry i of T' by the i-th
part of the sorted composition.  The component supports a nonzero symmetric
polynomial exactly when that filling is column-strict, in which case

    J = sum over the component of  C_{-1}(T_S)/C_{-1}(T') * E_{-1}(beta, T')
        * zeta_{beta, T'}

normalized so the coefficient of x^lambda tensor T_S at the sink (lambda,
T_S) is one.  The squared norm has a closed form over the root/sink data, and
the operator sum_i (U_i - 1 - kappa*gamma)^2 acts on J by

    sum_i (lambda_i + kappa*(c(i, T_S) - gamma))^2 .
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .combinatorics import (
    Filling,
    RSYT,
    c_eps,
    check_shape,
    enumerate_rsyt,
    floor_filling,
    hooks_and_dim,
    root_sink,
    root_tableau,
    row_tableau,
    tableau_norm0,
    transpose_shape,
    weight_n,
)
from .hermitian import norm, norm_partition
from .vvpoly import KappaContext, VVPoly
from .yang_baxter import e_eps, nsjp


@dataclass(frozen=True)
class ComponentSet:
    """All labels connected to (lambda, T) by steps and jumps."""

    filling: Filling
    labels: tuple  # ordered (beta, T') pairs
    root: tuple  # (lambda sorted ascending, T_R)
    sink: tuple  # (lambda sorted descending, T_S)
    stabilizer_order: int


@dataclass(frozen=True)
class SymmetricJack:
    lam: tuple[int, ...]
    T_S: RSYT
    poly: VVPoly
    coefficients: dict
    norm: Fraction
    eigenvalue: Fraction
    component: ComponentSet


def component(lam, T: RSYT) -> ComponentSet:
    """Enumerate the component of (lam, T) through the filling criterion.

    Raises ValueError when the filling is not column-strict (no symmetric
    polynomial exists there).
    """
    tau = T.shape
    lam = tuple(int(a) for a in lam)
    F = floor_filling(lam, T)
    if not F.is_column_strict():
        raise ValueError(
            f"filling {F.rows} is not column-strict: the component of "
            f"({lam}, {T.rows}) carries no symmetric polynomial"
        )
    mates = tuple(
        U for U in enumerate_rsyt(tau) if floor_filling(lam, U) == F
    )
    rearrangements = sorted(set(itertools.permutations(lam)), reverse=True)
    labels = tuple((beta, U) for beta in rearrangements for U in mates)
    T_R, T_S = root_sink(F)
    n = sum(tau)
    order, rem = divmod(factorial(n), len(labels))
    assert rem == 0
    comp = ComponentSet(
        filling=F,
        labels=labels,
        root=(tuple(sorted(lam)), T_R),
        sink=(tuple(sorted(lam, reverse=True)), T_S),
        stabilizer_order=order,
    )
    assert comp.root in set(labels) and comp.sink in set(labels)
    return comp


def stabilizer_generator_order(lam, T_S: RSYT) -> int:
    """Order of the group generated by the adjacent swaps fixing the sink.

    Generators are the s_i with lambda_i = lambda_{i+1} and entries i, i+1 in
    the same row of T_S; they span disjoint blocks of consecutive indices, so
    the order is the product of factorials of the block sizes.
    """
    lam = tuple(int(a) for a in lam)
    n = T_S.size
    gens = [
        i
        for i in range(1, n)
        if lam[i - 1] == lam[i] and T_S.position(i)[0] == T_S.position(i + 1)[0]
    ]
    order = 1
    block = 1
    for i in range(1, n):
        if i in gens:
            block += 1
        else:
            order *= factorial(block)
            block = 1
    return order * factorial(block)


def jack(ctx: KappaContext, lam, T: RSYT) -> SymmetricJack:
    """The symmetric Jack polynomial normalized at the sink (lam, T).

    Requires lam nonincreasing and T the sink tableau of its component.
    """
    lam = tuple(int(a) for a in lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"label must be nonincreasing: {lam}")
    comp = component(lam, T)
    if comp.sink[1] != T:
        raise ValueError(
            f"{T.rows} is not the sink of its component; use {comp.sink[1].rows}"
        )
    c_sink = c_eps(T, -1)
    coefficients = {}
    poly = ctx.zero()
    for beta, U in comp.labels:
        a = (c_sink / c_eps(U, -1)) * e_eps(ctx, beta, U, -1)
        coefficients[(beta, U.content)] = a
        poly = poly + a * nsjp(ctx, beta, U)
    return SymmetricJack(
        lam=lam,
        T_S=T,
        poly=poly,
        coefficients=coefficients,
        norm=jack_norm(ctx, lam, T),
        eigenvalue=eigenvalue(ctx, lam, T),
        component=comp,
    )


def jack_norm(ctx: KappaContext, lam, T: RSYT) -> Fraction:
    """Closed-form squared norm of the symmetric Jack polynomial.

    Component size times C_1(T_R) / (C_1(T_S) E_1(lam ascending, T_R)) times
    the squared norm of the sink eigenfunction.
    """
    lam = tuple(int(a) for a in lam)
    comp = component(lam, T)
    lam_min, T_R = comp.root
    T_S = comp.sink[1]
    if T_S != T:
        raise ValueError(f"{T.rows} is not the sink of its component")
    factor = c_eps(T_R, 1) / (c_eps(T_S, 1) * e_eps(ctx, lam_min, T_R, 1))
    return len(comp.labels) * factor * norm_partition(ctx, lam, T_S)


def jack_norm_direct(ctx: KappaContext, lam, T: RSYT) -> Fraction:
    """Oracle for the norm: sum of squared coefficients times node norms."""
    comp = component(lam, T)
    c_sink = c_eps(T, -1)
    total = Fraction(0)
    for beta, U in comp.labels:
        a = (c_sink / c_eps(U, -1)) * e_eps(ctx, beta, U, -1)
        total += a * a * norm(ctx, beta, U)
    return total


def eigenvalue(ctx: KappaContext, lam, T_S: RSYT, shift: int = 0) -> Fraction:
    """Eigenvalue of sum_i (U_i - 1 - kappa*gamma)^2 on the Jack polynomial.

    Multiplying by the m-th power of x_1...x_N adds 2m|lam| + N m^2.
    """
    lam = tuple(int(a) for a in lam)
    c = T_S.content
    base = sum(
        (lam[i] + ctx.kappa * (c[i] - ctx.gamma)) ** 2 for i in range(ctx.N)
    )
    return base + 2 * shift * sum(lam) + ctx.N * shift * shift


def minimal_label(tau) -> tuple[tuple[int, ...], RSYT]:
    """The minimal-degree symmetric label: row index minus one in every row,
    with the sink filled row by row."""
    tau = check_shape(tau)
    lam = []
    for i in range(len(tau), 0, -1):
        lam.extend([i - 1] * tau[i - 1])
    return tuple(lam), row_tableau(tau)


# -- scalar polynomials for the alternating-product construction ------------


def _scalar_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for ea, ca in p.items():
        for eb, cb in q.items():
            key = tuple(a + b for a, b in zip(ea, eb))
            val = out.get(key, 0) + ca * cb
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return out


def _scalar_swap(p: dict, i: int) -> dict:
    """Interchange variables i and i+1 (1-based)."""
    out = {}
    for e, c in p.items():
        key = e[: i - 1] + (e[i], e[i - 1]) + e[i + 1:]
        out[key] = c
    return out


def _alternating(n: int, lo: int, hi: int) -> dict:
    """Product of (x_i - x_j) over lo <= i < j <= hi, in n variables."""
    out = {(0,) * n: Fraction(1)}
    for i in range(lo, hi + 1):
        for j in range(i + 1, hi + 1):
            ei = [0] * n
            ei[i - 1] = 1
            ej = [0] * n
            ej[j - 1] = 1
            out = _scalar_mul(out, {tuple(ei): Fraction(1), tuple(ej): Fraction(-1)})
    return out


def minimal_jack(ctx: KappaContext) -> SymmetricJack:
    """Minimal-degree Jack polynomial built from alternating products.

    The root-tableau component is the product of the column alternants; the
    remaining components follow the exchange recursion p' = s_i p - p/d for
    content gaps d >= 2, and the result is assembled with inverse invariant
    lengths.  It reproduces the graph construction coefficient for
    coefficient.
    """
    tau = ctx.tau
    if ctx.n_tau < 2:
        raise ValueError("one-dimensional shapes carry no vector-valued module")
    lam, T_S = minimal_label(tau)
    cols = transpose_shape(tau)
    k = [ctx.N - sum(cols[:j]) for j in range(tau[0] + 1)]
    p0 = {(0,) * ctx.N: Fraction(1)}
    for j in range(1, tau[0] + 1):
        p0 = _scalar_mul(p0, _alternating(ctx.N, k[j] + 1, k[j - 1]))

    T0 = root_tableau(tau)
    scalar = {T0.content: p0}
    frontier = [T0]
    while frontier:
        T = frontier.pop()
        p = scalar[T.content]
        for i in range(1, ctx.N):
            if T.content[i - 1] - T.content[i] >= 2:
                U = T.swap(i)
                if U.content in scalar:
                    continue
                b = Fraction(1, T.content[i - 1] - T.content[i])
                q = _scalar_swap(p, i)
                for e, c in p.items():
                    val = q.get(e, 0) - b * c
                    if val:
                        q[e] = val
                    elif e in q:
                        del q[e]
                scalar[U.content] = q
                frontier.append(U)

    norm_sink = tableau_norm0(T_S)
    terms: dict = {}
    for t, T in enumerate(ctx.tableaux):
        w = norm_sink / tableau_norm0(T)
        for e, c in scalar[T.content].items():
            terms[(e, t)] = c * w
    poly = VVPoly(ctx, terms)

    comp = component(lam, T_S)
    coefficients = {
        (beta, U.content): (c_eps(T_S, -1) / c_eps(U, -1)) * e_eps(ctx, beta, U, -1)
        for beta, U in comp.labels
    }
    return SymmetricJack(
        lam=lam,
        T_S=T_S,
        poly=poly,
        coefficients=coefficients,
        norm=jack_norm(ctx, lam, T_S),
        eigenvalue=eigenvalue(ctx, lam, T_S),
        component=comp,
    )


def minimal_jack_norm(ctx: KappaContext) -> Fraction:
    """Product formula for the minimal-degree squared norm.

    N!/prod(tau_i!) times the sink length times, over cells, the rising
    factorial (1 - kappa*hook)_{leg} over (1 + kappa*(col-row))_{row-1}.
    """
    tau = ctx.tau
    if ctx.n_tau < 2:
        raise ValueError("one-dimensional shapes carry no vector-valued module")
    _, T_S = minimal_label(tau)
    cols = transpose_shape(tau)
    out = Fraction(factorial(ctx.N))
    for t in tau:
        out /= factorial(t)
    out *= tableau_norm0(T_S)
    for (i, j), h in ctx.hooks.items():
        leg = cols[j - 1] - i
        out *= _pochhammer(1 - ctx.kappa * h, leg)
        out /= _pochhammer(1 + ctx.kappa * (j - i), i - 1)
    return out


def _pochhammer(a: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for j in range(n):
        out *= a + j
    return out


def labels_by_degree(tau, degree: int) -> list[tuple[tuple[int, ...], RSYT]]:
    """All sink labels (lambda, T_S) of symmetric polynomials of one degree.

    Enumerates distinct column-strict fillings of weight ``degree`` and maps
    each to its sink; the count matches the hook generating series.
    """
    tau = check_shape(tau)
    N = sum(tau)
    seen = {}
    for lam in _partitions_into(degree, N):
        for T in enumerate_rsyt(tau):
            F = floor_filling(lam, T)
            if F not in seen and F.is_column_strict():
                _, T_S = root_sink(F)
                seen[F] = (lam, T_S)
    return sorted(seen.values(), key=lambda lt: (lt[0], lt[1].content), reverse=True)


def _partitions_into(degree: int, parts: int):
    """Partitions of ``degree`` into at most ``parts`` parts, zero padded."""

    def gen(remaining, biggest, slots):
        if remaining == 0:
            yield (0,) * slots
            return
        if slots == 0:
            return
        for first in range(min(remaining, biggest), 0, -1):
            for rest in gen(remaining - first, first, slots - 1):
                yield (first,) + rest

    yield from gen(degree, degree, parts)


def jack_shift(ctx: KappaContext, J: SymmetricJack, m: int) -> SymmetricJack:
    """Multiply by the m-th power of x_1...x_N (Laurent for m < 0).

    The norm is unchanged; the label shifts by m in every part and the
    eigenvalue picks up 2m|lam| + N m^2.
    """
    m = int(m)
    lam = tuple(a + m for a in J.lam)
    return SymmetricJack(
        lam=lam,
        T_S=J.T_S,
        poly=J.poly.e_n_shift(m),
        coefficients={
            (tuple(b + m for b in beta), content): c
            for (beta, content), c in J.coefficients.items()
        },
        norm=J.norm,
        eigenvalue=eigenvalue(ctx, J.lam, J.T_S, shift=m),
        component=J.component,
    )


def canonical_laurent(ctx: KappaContext, J: SymmetricJack) -> SymmetricJack:
    """The representative of the e_N-orbit with last part zero."""
    return jack_shift(ctx, J, -J.lam[-1]) if J.lam[-1] else J
