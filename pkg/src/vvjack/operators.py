"""Dunkl and Cherednik-Dunkl operators on vector-valued polynomials.

The Dunkl operator is

    D_i p = d/dx_i p + kappa * sum_{j != i} tau(i,j) (p - p o (i,j)) / (x_i - x_j)

where the divided difference is expanded exactly per monomial (it is always a
polynomial), and the commuting Cherednik-Dunkl operators are

    U_i p = D_i(x_i p) - kappa * sum_{j < i} (i,j) p
          = x_i D_i p + p + kappa * sum_{j > i} (i,j) p,

with (i,j) acting by the group action.  Both lower/preserve degree as usual
and require polynomial (non-Laurent) input.
"""

from __future__ import annotations

from fractions import Fraction

from . import group_action
from .vvpoly import KappaContext, VVPoly


def _require_polynomial(p: VVPoly, who: str):
    if p.is_laurent():
        raise ValueError(f"{who} requires nonnegative exponents (no Laurent terms)")


def _unit(n: int, i: int) -> tuple[int, ...]:
    e = [0] * n
    e[i - 1] = 1
    return tuple(e)


def dunkl(p: VVPoly, i: int) -> VVPoly:
    """Apply the i-th Dunkl operator (1-based), lowering degree by one."""
    ctx = p.context
    if not 1 <= i <= ctx.N:
        raise ValueError(f"operator index out of range: {i}")
    _require_polynomial(p, "dunkl")
    out: dict = {}

    def accumulate(key, val):
        cur = out.get(key, 0) + val
        if cur:
            out[key] = cur
        elif key in out:
            del out[key]

    for (alpha, t), c in p.terms.items():
        a = alpha[i - 1]
        if a:
            beta = alpha[: i - 1] + (a - 1,) + alpha[i:]
            accumulate((beta, t), c * a)

    kappa = ctx.kappa
    if kappa:
        for j in range(1, ctx.N + 1):
            if j == i:
                continue
            mat = group_action.rep_transposition(ctx.tau, i, j)
            cols = [
                [(s, mat[s][t]) for s in range(ctx.n_tau) if mat[s][t]]
                for t in range(ctx.n_tau)
            ]
            for (alpha, t), c in p.terms.items():
                a, b = alpha[i - 1], alpha[j - 1]
                if a == b:
                    continue
                # (x^alpha - x^{(i,j)alpha})/(x_i - x_j) telescopes into
                # max(a,b)-min(a,b) monomials of degree |alpha|-1
                sign = 1 if a > b else -1
                lo, hi = min(a, b), max(a, b)
                coeff = kappa * c * sign
                base = list(alpha)
                for k in range(hi - lo):
                    base[i - 1] = hi - 1 - k
                    base[j - 1] = lo + k
                    beta = tuple(base)
                    for s, entry in cols[t]:
                        accumulate((beta, s), coeff * entry)
    return VVPoly(ctx, out)


def cherednik(p: VVPoly, i: int) -> VVPoly:
    """Apply U_i = D_i x_i - kappa * sum_{j<i} (i,j)."""
    ctx = p.context
    if not 1 <= i <= ctx.N:
        raise ValueError(f"operator index out of range: {i}")
    _require_polynomial(p, "cherednik")
    out = dunkl(p.multiply_monomial(_unit(ctx.N, i)), i)
    if ctx.kappa:
        for j in range(1, i):
            w = group_action.transposition_perm(ctx.N, i, j)
            out = out - ctx.kappa * group_action.act(w, p)
    return out


def cherednik_xd(p: VVPoly, i: int) -> VVPoly:
    """The same operator via x_i D_i + 1 + kappa * sum_{j>i} (i,j).

    Kept as an independent route; both formulas must agree exactly.
    """
    ctx = p.context
    if not 1 <= i <= ctx.N:
        raise ValueError(f"operator index out of range: {i}")
    _require_polynomial(p, "cherednik")
    out = dunkl(p, i).multiply_monomial(_unit(ctx.N, i)) + p
    if ctx.kappa:
        for j in range(i + 1, ctx.N + 1):
            w = group_action.transposition_perm(ctx.N, i, j)
            out = out + ctx.kappa * group_action.act(w, p)
    return out


def hamiltonian_poly(p: VVPoly) -> VVPoly:
    """Apply sum_i (U_i - 1 - kappa*gamma)^2 by repeated Cherednik action.

    Conjugation by the torus base-state matrix turns this operator into the
    Calogero-Sutherland Hamiltonian; on a symmetric Jack polynomial it acts
    by the scalar sum_i (lambda_i + kappa*(c(i) - gamma))^2.
    """
    ctx = p.context
    shift = 1 + ctx.kappa * ctx.gamma
    total = ctx.zero()
    for i in range(1, ctx.N + 1):
        q = cherednik(p, i) - shift * p
        total = total + cherednik(q, i) - shift * q
    return total


def power_sum(p: VVPoly, m: int) -> VVPoly:
    """Apply sum_i U_i^m; commutes with the whole group action."""
    if m < 1:
        raise ValueError("power must be a positive integer")
    ctx = p.context
    total = ctx.zero()
    for i in range(1, ctx.N + 1):
        q = p
        for _ in range(m):
            q = cherednik(q, i)
        total = total + q
    return total


def elementary_symmetric(p: VVPoly, k: int) -> VVPoly:
    """Apply e_k(U_1, ..., U_N), the coefficient of t^k in prod(1 + t U_i)."""
    ctx = p.context
    if not 0 <= k <= ctx.N:
        raise ValueError(f"elementary symmetric index out of range: {k}")
    # layers[m] accumulates e_m applied to p while sweeping U_1, ..., U_N
    layers = [p] + [ctx.zero()] * k
    for i in range(1, ctx.N + 1):
        for m in range(min(i, k), 0, -1):
            layers[m] = layers[m] + cherednik(layers[m - 1], i)
    return layers[k]
