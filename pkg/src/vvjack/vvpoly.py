"""Sparse exact-rational vector-valued Laurent polynomials.

A polynomial lives in P tensor V_tau for a fixed shape tau and a fixed exact
rational coupling kappa, and is stored as a map

    (exponent vector, tableau index)  ->  Fraction

with no zero coefficients.  Exponents may be negative (Laurent terms); the
graph construction itself only ever produces nonnegative ones.
"""

from __future__ import annotations

from fractions import Fraction

from .combinatorics import (
    RSYT,
    check_shape,
    content_sum,
    enumerate_rsyt,
    hooks_and_dim,
)
from . import group_action


class KappaError(ValueError):
    """The coupling hits a pole or a spectral collision and must be rejected."""


class KappaContext:
    """Shape, coupling, and the per-context caches of the exact engine.

    By default kappa must lie in the open window (-1/h, 1/h) for the maximum
    hook length h, where the Hermitian form is positive definite.  Passing
    ``force=True`` admits any rational kappa; every denominator formed during
    construction is exact, so a pole encountered at some degree still raises
    KappaError.
    """

    def __init__(self, tau, kappa, force: bool = False):
        self.tau = check_shape(tau)
        self.N = sum(self.tau)
        self.kappa = Fraction(kappa)
        hooks, h_tau, n_tau = hooks_and_dim(self.tau)
        self.hooks = hooks
        self.h_tau = h_tau
        self.n_tau = n_tau
        self.gamma = Fraction(content_sum(self.tau), self.N)
        if not force and not -Fraction(1, h_tau) < self.kappa < Fraction(1, h_tau):
            raise KappaError(
                f"kappa={self.kappa} outside the window (-1/{h_tau}, 1/{h_tau}); "
                "pass force=True to override"
            )
        self.tableaux = enumerate_rsyt(self.tau)
        self._index = group_action.tableau_index(self.tau)
        # populated lazily by the graph construction
        self.nsjp_cache: dict = {}
        self.spectral_registry: dict = {}

    def tableau_index(self, T: RSYT) -> int:
        return self._index[T.content]

    def compatible(self, other: "KappaContext") -> bool:
        return self.tau == other.tau and self.kappa == other.kappa

    def zero(self) -> "VVPoly":
        return VVPoly(self, {})

    def monomial(self, alpha, T, coeff=1) -> "VVPoly":
        """The single term coeff * x^alpha tensor T."""
        t = T if isinstance(T, int) else self.tableau_index(T)
        alpha = tuple(int(a) for a in alpha)
        if len(alpha) != self.N:
            raise ValueError("exponent length must match N")
        return VVPoly(self, {(alpha, t): Fraction(coeff)})

    def __repr__(self):
        return f"KappaContext(tau={self.tau}, kappa={self.kappa})"


class VVPoly:
    """Immutable sparse vector-valued Laurent polynomial over a context."""

    __slots__ = ("context", "terms")

    def __init__(self, context: KappaContext, terms: dict):
        self.context = context
        self.terms = {k: v for k, v in terms.items() if v}

    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous_degree(self):
        """Total degree when all terms share it, else None (also for zero)."""
        degrees = {sum(alpha) for alpha, _ in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def is_laurent(self) -> bool:
        return any(a < 0 for alpha, _ in self.terms for a in alpha)

    def coefficient_of(self, alpha, T) -> Fraction:
        t = T if isinstance(T, int) else self.context.tableau_index(T)
        return self.terms.get((tuple(alpha), t), Fraction(0))

    def exponents(self) -> set:
        return {alpha for alpha, _ in self.terms}

    def vector_at(self, alpha) -> list[Fraction]:
        """Coefficient vector over tableau indices at a fixed exponent."""
        alpha = tuple(alpha)
        out = [Fraction(0)] * self.context.n_tau
        for (beta, t), c in self.terms.items():
            if beta == alpha:
                out[t] = c
        return out

    def __add__(self, other: "VVPoly") -> "VVPoly":
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            val = out.get(key, 0) + c
            if val:
                out[key] = val
            elif key in out:
                del out[key]
        return VVPoly(self.context, out)

    def __sub__(self, other: "VVPoly") -> "VVPoly":
        return self + (-other)

    def __neg__(self) -> "VVPoly":
        return VVPoly(self.context, {k: -v for k, v in self.terms.items()})

    def scale(self, c) -> "VVPoly":
        c = Fraction(c)
        if not c:
            return self.context.zero()
        return VVPoly(self.context, {k: v * c for k, v in self.terms.items()})

    __rmul__ = scale
    __mul__ = scale

    def multiply_monomial(self, alpha, coeff=1) -> "VVPoly":
        """Multiply by coeff * x^alpha (alpha may have negative entries)."""
        alpha = tuple(int(a) for a in alpha)
        coeff = Fraction(coeff)
        if not coeff:
            return self.context.zero()
        return VVPoly(
            self.context,
            {
                (tuple(a + b for a, b in zip(beta, alpha)), t): c * coeff
                for (beta, t), c in self.terms.items()
            },
        )

    def e_n_shift(self, m: int) -> "VVPoly":
        """Multiply by the m-th power of x_1 x_2 ... x_N (m may be negative)."""
        return self.multiply_monomial((int(m),) * self.context.N)

    def partial(self, i: int) -> "VVPoly":
        """Exact partial derivative in the i-th variable (1-based)."""
        out: dict = {}
        for (alpha, t), c in self.terms.items():
            a = alpha[i - 1]
            if a == 0:
                continue
            beta = alpha[: i - 1] + (a - 1,) + alpha[i:]
            key = (beta, t)
            val = out.get(key, 0) + c * a
            if val:
                out[key] = val
            elif key in out:
                del out[key]
        return VVPoly(self.context, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VVPoly)
            and self.context.compatible(other.context)
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("VVPoly is not hashable")

    def _check(self, other: "VVPoly"):
        if not self.context.compatible(other.context):
            raise ValueError("operands built over different contexts")

    def __repr__(self):
        n = len(self.terms)
        return f"VVPoly({n} term{'s' if n != 1 else ''}, tau={self.context.tau})"


def substitute_transposition(p: VVPoly, i: int, j: int) -> VVPoly:
    """x -> x(i,j) composed with the tableau action of (i,j).

    This is the group action of the transposition, the building block of the
    Dunkl exchange terms; applying it twice is the identity.
    """
    return group_action.act(transposition(p.context.N, i, j), p)


def transposition(n: int, i: int, j: int) -> tuple[int, ...]:
    return group_action.transposition_perm(n, i, j)
