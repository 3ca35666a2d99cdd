"""Independent oracles used by the tests.

Everything here deliberately avoids the library's own algorithms: dense
exponent-tuple polynomials instead of sparse monomial maps, plain rational
Gauss-Jordan instead of fraction-free elimination, cofactor expansion
instead of Bareiss, and the pentagonal-number recurrence for partition
counts.
"""

from __future__ import annotations

from fractions import Fraction


def partition_counts(limit: int) -> list[int]:
    """p(0..limit) by the pentagonal-number recurrence."""
    p = [1] + [0] * limit
    for n in range(1, limit + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n and g2 > n:
                break
            sign = 1 if k % 2 else -1
            if g1 <= n:
                total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def cofactor_det(m: list[list[Fraction]]) -> Fraction:
    """Determinant by first-row cofactor expansion."""
    size = len(m)
    if size == 1:
        return m[0][0]
    total = Fraction(0)
    for j in range(size):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * cofactor_det(minor)
        total += term if j % 2 == 0 else -term
    return total


def rref_nullity(rows: list[list[Fraction]], ncols: int) -> int:
    """Nullspace dimension by plain rational Gauss-Jordan."""
    m = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        piv = m[rank][col]
        m[rank] = [v / piv for v in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return ncols - rank


# -- dense polynomial mini-implementation (exponent tuples, one slot per var) --


def dense_from_sparse(p) -> dict[tuple[int, ...], Fraction]:
    """Convert a cayley.Polynomial to a dense exponent-tuple dictionary."""
    out = {}
    for mono, coeff in p.terms.items():
        exps = [0] * p.n
        for var, e in mono:
            exps[var - 1] = e
        out[tuple(exps)] = Fraction(coeff)
    return out


def dense_diff(terms: dict, j: int) -> dict:
    """d/dx_j on a dense dictionary (j is 1-based)."""
    out: dict[tuple[int, ...], Fraction] = {}
    for exps, coeff in terms.items():
        e = exps[j - 1]
        if not e:
            continue
        reduced = exps[: j - 1] + (e - 1,) + exps[j:]
        out[reduced] = out.get(reduced, Fraction(0)) + coeff * e
    return {k: v for k, v in out.items() if v}


def dense_mul_var(terms: dict, i: int) -> dict:
    """Multiply a dense dictionary by x_i (i is 1-based)."""
    return {exps[: i - 1] + (exps[i - 1] + 1,) + exps[i:]: coeff for exps, coeff in terms.items()}


def dense_scale(terms: dict, factor: Fraction) -> dict:
    return {k: v * factor for k, v in terms.items() if v * factor}


def all_exponents(n_vars: int, max_degree: int) -> list[tuple[int, ...]]:
    """Every exponent tuple with total degree <= max_degree, densely."""
    out: list[tuple[int, ...]] = [()]
    for _ in range(n_vars):
        out = [e + (k,) for e in out for k in range(max_degree + 1 - sum(e))]
    return out


def dense_eigen_dimension(p) -> int:
    """Dimension of {(c, X) : X p = c p, X affine} by a dense brute-force route.

    Assembles the coefficient matrix over every monomial of degree <= deg p
    and counts free columns with plain Gauss-Jordan.
    """
    n = p.n
    phi = dense_from_sparse(p)
    diffs = [dense_diff(phi, j) for j in range(1, n + 1)]
    columns = [dense_scale(phi, Fraction(-1))]
    columns += diffs
    for i in range(1, n + 1):
        for j in range(n):
            columns.append(dense_mul_var(diffs[j], i))
    degree = max((sum(e) for e in phi), default=0)
    rows = []
    for exps in all_exponents(n, degree):
        rows.append([col.get(exps, Fraction(0)) for col in columns])
    return rref_nullity(rows, len(columns))
