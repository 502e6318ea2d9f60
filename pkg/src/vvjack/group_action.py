"""The symmetric group: permutations, words, and its action on tableaux.

Permutations are tuples of 1-based images, ``w[i-1] = w(i)``.  Matrices of the
irreducible representation attached to a shape come in two bases: the
``"unnormalized"`` tableau basis (exact rational entries, used by the exact
engine) and the ``"orthonormal"`` basis (numpy floats, used on the torus).

Matrix columns are images: column t holds the expansion of the image of
basis tableau t.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import isqrt, sqrt

import numpy as np

from .combinatorics import RSYT, enumerate_rsyt, tableau_norm0


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def compose(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """(u v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(u)))


def inverse_perm(w: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        inv[wi - 1] = i
    return tuple(inv)


def simple_perm(n: int, i: int) -> tuple[int, ...]:
    """The adjacent transposition swapping i and i+1."""
    if not 1 <= i < n:
        raise ValueError(f"simple reflection index out of range: {i}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return tuple(images)


def transposition_perm(n: int, i: int, j: int) -> tuple[int, ...]:
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"invalid transposition ({i},{j}) in S_{n}")
    images = list(range(1, n + 1))
    images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
    return tuple(images)


def cycle_perm(n: int) -> tuple[int, ...]:
    """The long cycle 1 -> 2 -> ... -> n -> 1."""
    return tuple(list(range(2, n + 1)) + [1])


def perm_power(w: tuple[int, ...], m: int) -> tuple[int, ...]:
    n = len(w)
    out = identity_perm(n)
    if m < 0:
        w = inverse_perm(w)
        m = -m
    for _ in range(m):
        out = compose(out, w)
    return out


def reduced_word(w: tuple[int, ...]) -> tuple[int, ...]:
    """A reduced word (i_1, ..., i_k) with w = s_{i_1} s_{i_2} ... s_{i_k}.

    Found by bubble-sorting the image vector; each right-multiplication by a
    simple reflection removes one inversion, so the word is reduced.
    """
    images = list(w)
    word = []
    n = len(images)
    done = False
    while not done:
        done = True
        for i in range(n - 1):
            if images[i] > images[i + 1]:
                images[i], images[i + 1] = images[i + 1], images[i]
                word.append(i + 1)
                done = False
    return tuple(reversed(word))


def perm_on_composition(w: tuple[int, ...], alpha: tuple[int, ...]) -> tuple[int, ...]:
    """(w alpha)_i = alpha_{w^{-1}(i)}, matching (xw)^alpha = x^{w alpha}."""
    winv = inverse_perm(w)
    return tuple(alpha[winv[i] - 1] for i in range(len(alpha)))


def _sqrt_fraction(q: Fraction) -> float:
    """sqrt of a positive rational, exact when the value is a perfect square."""
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return rn / rd
    return sqrt(num / den)


@cache
def tableau_index(tau: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Map content vector -> position in the canonical enumeration."""
    return {T.content: t for t, T in enumerate(enumerate_rsyt(tau))}


@cache
def rep_simple(tau: tuple[int, ...], i: int, basis: str = "unnormalized"):
    """Matrix of the adjacent transposition s_i on the tableau module.

    For each basis tableau T with d = c(i,T) - c(i+1,T): d = 1 fixes T,
    d = -1 negates it, and |d| >= 2 mixes T with the tableau T' obtained by
    interchanging i and i+1.  In the unnormalized basis the image of T is
    T' + (1/d) T when d >= 2 and (1 - 1/d^2) T' + (1/d) T when d <= -2; the
    orthonormal basis turns each such pair into a symmetric orthogonal
    2x2 block.
    """
    tableaux = enumerate_rsyt(tau)
    n = len(tableaux)
    index = tableau_index(tau)
    if not 1 <= i < sum(tau):
        raise ValueError(f"simple reflection index out of range: {i}")
    if basis == "unnormalized":
        mat = [[Fraction(0)] * n for _ in range(n)]
        for t, T in enumerate(tableaux):
            d = T.content[i - 1] - T.content[i]
            if d == 1:
                mat[t][t] = Fraction(1)
            elif d == -1:
                mat[t][t] = Fraction(-1)
            else:
                b = Fraction(1, d)
                s = index[T.swap(i).content]
                mat[t][t] = b
                mat[s][t] = Fraction(1) if d >= 2 else 1 - b * b
        return tuple(tuple(row) for row in mat)
    if basis == "orthonormal":
        mat = np.zeros((n, n))
        for t, T in enumerate(tableaux):
            d = T.content[i - 1] - T.content[i]
            if abs(d) == 1:
                mat[t, t] = float(d)
            elif d >= 2:
                b = 1.0 / d
                s = index[T.swap(i).content]
                off = sqrt(1.0 - b * b)
                mat[t, t] = b
                mat[s, t] = off
                mat[t, s] = off
                mat[s, s] = -b
        return mat
    raise ValueError(f"unknown basis {basis!r}")


def _matmul_exact(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n))
        for r in range(n)
    )


def _identity_exact(n):
    return tuple(
        tuple(Fraction(1) if r == c else Fraction(0) for c in range(n)) for r in range(n)
    )


@cache
def rep_perm(tau: tuple[int, ...], w: tuple[int, ...], basis: str = "unnormalized"):
    """Matrix of an arbitrary permutation, as the product over a reduced word.

    The result is independent of the word chosen; matrices are cached per
    (shape, permutation, basis) since graph traversal reuses them heavily.
    """
    word = reduced_word(w)
    n = len(enumerate_rsyt(tau))
    if basis == "orthonormal":
        out = np.eye(n)
        for i in word:
            out = out @ rep_simple(tau, i, basis)
        return out
    out = _identity_exact(n)
    for i in word:
        out = _matmul_exact(out, rep_simple(tau, i, basis))
    return out


@cache
def rep_transposition(tau: tuple[int, ...], i: int, j: int, basis: str = "unnormalized"):
    return rep_perm(tau, transposition_perm(sum(tau), i, j), basis)


def orthonormal_scale(tau: tuple[int, ...]) -> tuple[float, ...]:
    """Square roots of the invariant squared lengths, one per canonical tableau.

    Multiplying unnormalized-basis coefficients by these gives coefficients in
    the orthonormal basis.
    """
    return tuple(_sqrt_fraction(tableau_norm0(T)) for T in enumerate_rsyt(tau))


def act(w: tuple[int, ...], p):
    """Apply a permutation to a vector-valued polynomial.

    Exponent vectors are relabeled alpha -> w alpha while the tableau
    component transforms by the representation matrix; the two together give
    a left action: act(u, act(v, p)) = act(compose(u, v), p).
    """
    ctx = p.context
    mat = rep_perm(ctx.tau, w, "unnormalized")
    terms: dict = {}
    n = ctx.n_tau
    for (alpha, t), coeff in p.terms.items():
        beta = perm_on_composition(w, alpha)
        for s in range(n):
            entry = mat[s][t]
            if entry:
                key = (beta, s)
                val = terms.get(key, 0) + coeff * entry
                if val:
                    terms[key] = val
                elif key in terms:
                    del terms[key]
    return type(p)(ctx, terms)
