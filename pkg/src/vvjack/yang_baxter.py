"""Construction of nonsymmetric Jack polynomials along the Yang-Baxter graph.

Nodes are labeled (alpha, T) for a composition alpha and a tableau T; each
node carries its spectral vector

    xi_i = alpha_i + 1 + kappa * c(r_alpha(i), T)

which lists the simultaneous Cherednik-Dunkl eigenvalues.  Three kinds of
directed edges generate every node from the root (0, T_0, 1 tensor T_0):

  * affine step:  alpha -> (alpha_2, ..., alpha_N, alpha_1 + 1), with
    zeta' = x_N * (w_0^{-1} zeta) for the long cycle w_0;
  * step s_i (alpha_i < alpha_{i+1}):  zeta' = s_i zeta - b zeta with
    b = kappa / (xi_i - xi_{i+1});
  * jump s_i (alpha_i = alpha_{i+1}, j = r_alpha(i), c(j,T)-c(j+1,T) >= 2):
    zeta' = s_i zeta - zeta/(c(j,T)-c(j+1,T)), landing on the tableau with
    j and j+1 interchanged.

The scheduler here materializes a node by walking backwards: undo steps until
the composition is nondecreasing, undo one affine step, and at degree zero
undo jumps until the root tableau is reached.  Any exact zero denominator or
a spectral-vector collision marks the coupling as inadmissible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import group_action
from .combinatorics import RSYT, graph_less, rank_perm, root_tableau
from .vvpoly import KappaContext, KappaError, VVPoly


@dataclass(frozen=True)
class Affine:
    pass


@dataclass(frozen=True)
class Step:
    i: int


@dataclass(frozen=True)
class Jump:
    i: int


@dataclass(frozen=True)
class GraphNode:
    alpha: tuple[int, ...]
    T: RSYT
    xi: tuple[Fraction, ...]
    r: tuple[int, ...]
    zeta: VVPoly


def spectral_vector(ctx: KappaContext, alpha, T: RSYT) -> tuple[Fraction, ...]:
    """Eigenvalues of the Cherednik-Dunkl operators on the node (alpha, T).

    Every computed vector is recorded; two distinct labels sharing one is a
    collision and rejects kappa.
    """
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != ctx.N or any(a < 0 for a in alpha):
        raise ValueError("alpha must be a nonnegative composition of length N")
    r = rank_perm(alpha)
    xi = tuple(
        alpha[i] + 1 + ctx.kappa * T.content[r[i] - 1] for i in range(ctx.N)
    )
    label = (alpha, T.content)
    seen = ctx.spectral_registry.get(xi)
    if seen is None:
        ctx.spectral_registry[xi] = label
    elif seen != label:
        raise KappaError(
            f"kappa={ctx.kappa}: labels {seen} and {label} share the spectral "
            f"vector {xi}"
        )
    return xi


def _make_node(ctx: KappaContext, alpha, T: RSYT, zeta: VVPoly) -> GraphNode:
    return GraphNode(tuple(alpha), T, spectral_vector(ctx, alpha, T), rank_perm(alpha), zeta)


def apply_edge(ctx: KappaContext, node: GraphNode, edge) -> GraphNode:
    """Follow one directed edge, checking its precondition."""
    alpha, T = node.alpha, node.T
    N = ctx.N
    if isinstance(edge, Affine):
        new_alpha = alpha[1:] + (alpha[0] + 1,)
        w0 = group_action.cycle_perm(N)
        zeta = group_action.act(group_action.inverse_perm(w0), node.zeta)
        zeta = zeta.multiply_monomial((0,) * (N - 1) + (1,))
        return _make_node(ctx, new_alpha, T, zeta)
    if isinstance(edge, Step):
        i = edge.i
        if not 1 <= i < N or not alpha[i - 1] < alpha[i]:
            raise ValueError(f"step s_{i} needs alpha_{i} < alpha_{i + 1}: {alpha}")
        denom = node.xi[i - 1] - node.xi[i]
        if denom == 0:
            raise KappaError(f"kappa={ctx.kappa} hits a zero spectral gap at {alpha}")
        b = ctx.kappa / denom
        si = group_action.simple_perm(N, i)
        zeta = group_action.act(si, node.zeta) - b * node.zeta
        new_alpha = group_action.perm_on_composition(si, alpha)
        return _make_node(ctx, new_alpha, T, zeta)
    if isinstance(edge, Jump):
        i = edge.i
        if not 1 <= i < N or alpha[i - 1] != alpha[i]:
            raise ValueError(f"jump s_{i} needs alpha_{i} = alpha_{i + 1}: {alpha}")
        j = node.r[i - 1]
        gap = T.content[j - 1] - T.content[j]
        if gap < 2:
            raise ValueError(
                f"jump s_{i} needs content gap >= 2 at entries {j},{j + 1}, got {gap}"
            )
        b = Fraction(1, gap)
        si = group_action.simple_perm(N, i)
        zeta = group_action.act(si, node.zeta) - b * node.zeta
        return _make_node(ctx, alpha, T.swap(j), zeta)
    raise TypeError(f"unknown edge {edge!r}")


def node(ctx: KappaContext, alpha, T: RSYT) -> GraphNode:
    """Materialize the graph node (alpha, T), memoized on the context."""
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != ctx.N or any(a < 0 for a in alpha):
        raise ValueError("alpha must be a nonnegative composition of length N")
    key = (alpha, T.content)
    cached = ctx.nsjp_cache.get(key)
    if cached is not None:
        return cached

    if any(alpha[i] > alpha[i + 1] for i in range(ctx.N - 1)):
        # undo a step: the source has the offending pair swapped
        i = next(i for i in range(ctx.N - 1) if alpha[i] > alpha[i + 1]) + 1
        src_alpha = alpha[: i - 1] + (alpha[i], alpha[i - 1]) + alpha[i + 1:]
        out = apply_edge(ctx, node(ctx, src_alpha, T), Step(i))
    elif any(alpha):
        # nondecreasing and nonzero: undo the affine step
        src_alpha = (alpha[-1] - 1,) + alpha[:-1]
        out = apply_edge(ctx, node(ctx, src_alpha, T), Affine())
    else:
        T0 = root_tableau(ctx.tau)
        if T == T0:
            out = _make_node(ctx, alpha, T0, ctx.monomial(alpha, T0))
        else:
            # undo a jump: swapping j, j+1 moves one inversion back toward T_0
            c = T.content
            j = next(
                (j for j in range(1, ctx.N) if c[j - 1] <= c[j] - 2), None
            )
            if j is None:
                raise RuntimeError(f"no jump reaches {T!r} from the root tableau")
            out = apply_edge(ctx, node(ctx, alpha, T.swap(j)), Jump(j))

    ctx.nsjp_cache[key] = out
    return out


def nsjp(ctx: KappaContext, alpha, T: RSYT) -> VVPoly:
    """The nonsymmetric Jack polynomial with label (alpha, T)."""
    return node(ctx, alpha, T).zeta


def nsjp_laurent(ctx: KappaContext, alpha, T: RSYT) -> VVPoly:
    """Laurent extension: shift alpha into the nonnegative cone and undo it."""
    alpha = tuple(int(a) for a in alpha)
    m = max(0, -min(alpha))
    p = nsjp(ctx, tuple(a + m for a in alpha), T)
    return p.e_n_shift(-m) if m else p


def e_eps(ctx: KappaContext, alpha, T: RSYT, eps: int) -> Fraction:
    """Correction factor relating the norm at alpha to the sorted norm.

    Product over pairs i<j with alpha_i < alpha_j of
    1 + eps*kappa / (alpha_j - alpha_i + kappa*(c(r(j),T) - c(r(i),T))).
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    alpha = tuple(int(a) for a in alpha)
    r = rank_perm(alpha)
    c = T.content
    out = Fraction(1)
    for i in range(ctx.N):
        for j in range(i + 1, ctx.N):
            if alpha[i] < alpha[j]:
                denom = alpha[j] - alpha[i] + ctx.kappa * (c[r[j] - 1] - c[r[i] - 1])
                if denom == 0:
                    raise KappaError(f"kappa={ctx.kappa} hits a pole at {alpha}")
                out *= 1 + eps * ctx.kappa / denom
    return out


def check_triangular(ctx: KappaContext, nd: GraphNode) -> bool:
    """Leading term x^alpha tensor tau(r^{-1})T; every other exponent is
    strictly below alpha in the graph order."""
    mat = group_action.rep_perm(ctx.tau, group_action.inverse_perm(nd.r))
    t = ctx.tableau_index(nd.T)
    lead = [mat[s][t] for s in range(ctx.n_tau)]
    if nd.zeta.vector_at(nd.alpha) != lead:
        return False
    return all(
        beta == nd.alpha or graph_less(beta, nd.alpha)
        for beta in nd.zeta.exponents()
    )
