"""The torus Hermitian form through the nonsymmetric Jack eigenbasis.

The form is fixed by its axioms (tableaux at degree zero are orthogonal with
their invariant lengths; multiplication by any coordinate is isometric; the
Cherednik-Dunkl operators are self-adjoint), which makes the eigenfunctions
mutually orthogonal and determines every squared norm in closed form:

    |zeta_{lambda,T}|^2 = <T,T>_0 * prod_{i<j} prod_{l=1}^{lambda_i-lambda_j}
                          (1 - (kappa/(l + kappa*(c(i,T)-c(j,T))))^2)

for a partition lambda, with the correction factor 1/(E_1 E_{-1}) for general
compositions.  The same value also follows edge by edge along the graph
(steps and jumps scale by 1-b^2, affine steps preserve the norm); both routes
are kept and cross-validated.  Values depend only on the differences
alpha_i - alpha_j, which extends the form to Laurent labels.
"""

from __future__ import annotations

from fractions import Fraction

from . import group_action
from .combinatorics import graph_less, rank_perm, root_tableau, tableau_norm0
from .vvpoly import KappaContext, KappaError, VVPoly
from .yang_baxter import RSYT, e_eps, nsjp, spectral_vector


def norm_partition(ctx: KappaContext, lam, T: RSYT) -> Fraction:
    """Closed-form squared norm for a nonincreasing label."""
    lam = tuple(int(a) for a in lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"label must be nonincreasing: {lam}")
    if len(lam) != ctx.N or lam[-1] < 0:
        raise ValueError("label must be a nonnegative composition of length N")
    c = T.content
    out = tableau_norm0(T)
    for i in range(ctx.N):
        for j in range(i + 1, ctx.N):
            gap = c[i] - c[j]
            for l in range(1, lam[i] - lam[j] + 1):
                denom = l + ctx.kappa * gap
                if denom == 0:
                    raise KappaError(f"kappa={ctx.kappa} hits a pole in the norm")
                out *= 1 - (ctx.kappa / denom) ** 2
    return out


def norm(ctx: KappaContext, alpha, T: RSYT) -> Fraction:
    """Squared norm of the eigenfunction with label (alpha, T).

    Integer labels are allowed: the value depends only on the differences of
    the parts, so negative entries are shifted away first.
    """
    alpha = tuple(int(a) for a in alpha)
    m = max(0, -min(alpha))
    alpha = tuple(a + m for a in alpha)
    lam = tuple(sorted(alpha, reverse=True))
    base = norm_partition(ctx, lam, T)
    if alpha == lam:
        return base
    corr = e_eps(ctx, alpha, T, 1) * e_eps(ctx, alpha, T, -1)
    return base / corr


def norm_recursive(ctx: KappaContext, alpha, T: RSYT) -> Fraction:
    """Squared norm accumulated edge by edge along the construction path.

    Independent of the closed form: starts from the degree-zero tableau
    lengths and multiplies 1-b^2 per step or jump.
    """
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != ctx.N or any(a < 0 for a in alpha):
        raise ValueError("alpha must be a nonnegative composition of length N")
    N = ctx.N
    if any(alpha[i] > alpha[i + 1] for i in range(N - 1)):
        i = next(i for i in range(N - 1) if alpha[i] > alpha[i + 1]) + 1
        src = alpha[: i - 1] + (alpha[i], alpha[i - 1]) + alpha[i + 1:]
        xi = spectral_vector(ctx, src, T)
        denom = xi[i - 1] - xi[i]
        if denom == 0:
            raise KappaError(f"kappa={ctx.kappa} hits a zero spectral gap at {src}")
        b = ctx.kappa / denom
        return (1 - b * b) * norm_recursive(ctx, src, T)
    if any(alpha):
        src = (alpha[-1] - 1,) + alpha[:-1]
        return norm_recursive(ctx, src, T)
    T0 = root_tableau(ctx.tau)
    if T == T0:
        return tableau_norm0(T0)
    c = T.content
    j = next((j for j in range(1, N) if c[j - 1] <= c[j] - 2), None)
    if j is None:
        raise RuntimeError(f"no jump reaches {T!r} from the root tableau")
    src_T = T.swap(j)
    b = Fraction(1, src_T.content[j - 1] - src_T.content[j])
    return (1 - b * b) * norm_recursive(ctx, alpha, src_T)


def expand_in_nsjp(ctx: KappaContext, p: VVPoly) -> dict:
    """Coefficients of a homogeneous polynomial in the eigenfunction basis.

    Eliminates along the graph order: at a maximal surviving exponent the
    leading vectors are the columns of an invertible representation matrix,
    so the coefficients there are read off exactly and the corresponding
    eigenfunctions are subtracted.  Keys are (alpha, content vector of T).
    """
    if p.is_laurent():
        raise ValueError("expansion requires nonnegative exponents")
    if not p.is_zero() and p.homogeneous_degree() is None:
        raise ValueError("expansion requires a homogeneous polynomial")
    tableaux = ctx.tableaux
    coeffs: dict = {}
    work = p
    while not work.is_zero():
        exps = work.exponents()
        beta = next(
            b for b in exps if not any(graph_less(b, other) for other in exps)
        )
        vec = work.vector_at(beta)
        mat = group_action.rep_perm(ctx.tau, rank_perm(beta))
        d = [
            sum(mat[s][t] * vec[t] for t in range(ctx.n_tau))
            for s in range(ctx.n_tau)
        ]
        for s, ds in enumerate(d):
            if ds:
                coeffs[(beta, tableaux[s].content)] = ds
                work = work - ds * nsjp(ctx, beta, tableaux[s])
        assert not any(work.vector_at(beta))
    return coeffs


def reconstruct(ctx: KappaContext, coeffs: dict) -> VVPoly:
    """Inverse of the expansion: sum of coefficient times eigenfunction."""
    out = ctx.zero()
    index = {T.content: T for T in ctx.tableaux}
    for (alpha, content), c in coeffs.items():
        out = out + c * nsjp(ctx, alpha, index[content])
    return out


def form(ctx: KappaContext, f: VVPoly, g: VVPoly) -> Fraction:
    """The Hermitian form of two polynomials.

    Both sides are expanded in the eigenfunction basis; distinct labels are
    orthogonal and distinct degrees separate under the eigenvalues of the
    operator sum, so only shared labels contribute coefficient products times
    squared norms.  Coefficients are rational, so conjugation is trivial.
    """
    if f.is_laurent() or g.is_laurent():
        raise ValueError("the form is evaluated on polynomial inputs")
    total = Fraction(0)
    by_degree_f = _split_by_degree(ctx, f)
    by_degree_g = _split_by_degree(ctx, g)
    for d, fd in by_degree_f.items():
        gd = by_degree_g.get(d)
        if gd is None:
            continue
        cf = expand_in_nsjp(ctx, fd)
        cg = expand_in_nsjp(ctx, gd)
        index = {T.content: T for T in ctx.tableaux}
        for label, a in cf.items():
            b = cg.get(label)
            if b:
                alpha, content = label
                total += a * b * norm(ctx, alpha, index[content])
    return total


def _split_by_degree(ctx: KappaContext, p: VVPoly) -> dict[int, VVPoly]:
    parts: dict[int, dict] = {}
    for (alpha, t), c in p.terms.items():
        parts.setdefault(sum(alpha), {})[(alpha, t)] = c
    return {d: VVPoly(ctx, terms) for d, terms in parts.items()}
