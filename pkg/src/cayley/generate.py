"""Construction of the Cayley hypersurface polynomials and their relatives.

The degree-N hypersurface in affine N-space is the zero set of

    Phi_N = sum_{d=1}^{N} (-1)^d (1/d) sum_{i+j+...+m = N} x_i x_j ... x_m

where the inner sum runs over ordered compositions of N into d positive
parts.  The d = 1 term is -x_N, the only occurrence of x_N, so the surface
is the graph x_N = f(x_1, ..., x_{N-1}).

Two construction routes are provided.  The composition route follows the
defining sum literally (2^{N-1} compositions in total).  The partition route
uses the collapsed coefficient: the monomial given by a partition of N with
d parts and multiplicities m_v carries coefficient (-1)^d (d-1)! / prod m_v!.
Above N = 12 the partition route is chosen automatically; the two routes are
checked against each other in the test suite.

A one-parameter deformation replaces the 1/d prefactor by
(1/d!) prod_{k=0}^{d-3} [(1-b)k + 2]; at b = 0 this is Phi_N again.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Sequence, Union

from .poly import Polynomial

Scalar = Union[int, Fraction]

AUTO_PARTITION_THRESHOLD = 12


def compositions(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """All ordered d-tuples of positive integers summing to n, lexicographic.

    There are C(n-1, d-1) of them.
    """
    if d < 1 or d > n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if d == 1:
        yield (n,)
        return
    for first in range(1, n - d + 2):
        for rest in compositions(n - first, d - 1):
            yield (first,) + rest


def partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n as weakly decreasing tuples, largest part first."""

    def gen(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - part, part):
                yield (part,) + rest

    return gen(n, n)


def coefficient_closed_form(n: int, partition: Iterable[int]) -> Fraction:
    """Coefficient in Phi_n of the monomial prod x_v over the given multiset.

    For a partition with d parts and part multiplicities m_v the coefficient
    is (-1)^d (d-1)! / prod(m_v!): each of the d!/prod(m_v!) orderings of the
    parts contributes (-1)^d / d.
    """
    parts = list(partition)
    if not parts or any(p < 1 for p in parts):
        raise ValueError("partition parts must be positive integers")
    if sum(parts) != n:
        raise ValueError(f"partition sums to {sum(parts)}, expected {n}")
    d = len(parts)
    denom = 1
    for mult in Counter(parts).values():
        denom *= factorial(mult)
    return Fraction((-1) ** d * factorial(d - 1), denom)


def family_prefactor(d: int, b: Scalar) -> Fraction:
    """The deformed composition prefactor (-1)^d (1/d!) prod_{k=0}^{d-3}[(1-b)k+2].

    The product is empty (equal to 1) for d = 1 and d = 2.
    """
    if d < 1:
        raise ValueError("d must be positive")
    b = Fraction(b)
    prod = Fraction(1)
    for k in range(d - 2):
        prod *= (1 - b) * k + 2
    return Fraction((-1) ** d, factorial(d)) * prod


def _poly_from_partitions(n: int, partition_coeff) -> Polynomial:
    terms = []
    for lam in partitions(n):
        coeff = partition_coeff(lam)
        if coeff:
            terms.append((Counter(lam), coeff))
    return Polynomial(n, terms)


def _poly_from_compositions(n: int, prefactor) -> Polynomial:
    terms = []
    for d in range(1, n + 1):
        coeff = prefactor(d)
        if not coeff:
            continue
        for comp in compositions(n, d):
            terms.append((Counter(comp), coeff))
    return Polynomial(n, terms)


def _resolve_method(n: int, method: str) -> str:
    if method == "auto":
        return "partitions" if n > AUTO_PARTITION_THRESHOLD else "compositions"
    if method not in ("compositions", "partitions"):
        raise ValueError(f"unknown construction method {method!r}")
    return method


def cayley_poly(n: int, method: str = "auto") -> Polynomial:
    """The defining polynomial Phi_n, in canonical form.

    Phi_n has one term per integer partition of n; x_n occurs only in the
    single term -x_n.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if _resolve_method(n, method) == "partitions":
        return _poly_from_partitions(n, lambda lam: coefficient_closed_form(n, lam))
    return _poly_from_compositions(n, lambda d: Fraction((-1) ** d, d))


def family_poly(n: int, b: Scalar, method: str = "auto") -> Polynomial:
    """The interpolating family member with parameter b (b = 0 gives Phi_n)."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    b = Fraction(b)
    if _resolve_method(n, method) == "partitions":

        def coeff(lam: tuple[int, ...]) -> Fraction:
            d = len(lam)
            orderings = factorial(d)
            for mult in Counter(lam).values():
                orderings //= factorial(mult)
            return family_prefactor(d, b) * orderings

        return _poly_from_partitions(n, coeff)
    return _poly_from_compositions(n, lambda d: family_prefactor(d, b))


def graph_function(n: int, method: str = "auto") -> Polynomial:
    """The graph function f with Phi_n = -x_n + f, in variables x1..x_{n-1}."""
    if n < 2:
        raise ValueError("graph form needs n >= 2")
    phi = cayley_poly(n, method)
    f = phi + Polynomial.variable(n, n)
    return f.restrict(n - 1)


def variant_surface_4() -> Polynomial:
    """A second homogeneous graph in dimension 4: -x4 + x1*x3 + x2^2/2 - x1^3/3.

    Unlike Phi_4 it has two-dimensional linear isotropy at the origin, and it
    is not weight-homogeneous in the grading that assigns weight h to x_h.
    """
    return Polynomial(
        4,
        [
            ({4: 1}, -1),
            ({1: 1, 3: 1}, 1),
            ({2: 2}, Fraction(1, 2)),
            ({1: 3}, Fraction(-1, 3)),
        ],
    )


def monomial_count(n: int, method: str = "auto") -> int:
    """Number of terms of Phi_n (equals the integer-partition count p(n))."""
    return len(cayley_poly(n, method).terms)
