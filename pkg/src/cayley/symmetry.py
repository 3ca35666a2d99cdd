"""Affine vector fields, exact flows, and affine symmetry algebras.

An affine vector field on N-space is a derivation

    X = sum_j (constant[j] + sum_i linear[i][j] * x_i) d/dx_j,

stored as a constant vector and an N x N matrix of rationals.  Fields with
nilpotent linear part exponentiate exactly: the time-t flow is the affine
map x -> x E + v with E = sum_k t^k A^k / k! a finite sum.  Transformations
act on row vectors: (T x)_j = sum_i x_i M[i][j] + v[j].

The solver at the bottom computes, for a polynomial p, the space of all
affine fields X with X p = c p for a scalar c.  Since the unknowns
(c, constant, linear) enter the coefficients of X p - c p linearly, this is
an exact rational nullspace computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence, Union

from . import linalg
from .poly import Mono, Polynomial, _mono_key, substitute_affine

Scalar = Union[int, Fraction]


class InexactExponentialError(ValueError):
    """Raised when a field's linear part is not nilpotent, so its flow is not polynomial."""


def _freeze_vector(v: Sequence[Scalar], n: int, what: str) -> tuple[Fraction, ...]:
    if len(v) != n:
        raise ValueError(f"{what} has length {len(v)}, expected {n}")
    return tuple(Fraction(x) for x in v)


def _freeze_matrix(m: Sequence[Sequence[Scalar]], n: int, what: str) -> tuple[tuple[Fraction, ...], ...]:
    if len(m) != n or any(len(row) != n for row in m):
        raise ValueError(f"{what} must be {n}x{n}")
    return tuple(tuple(Fraction(x) for x in row) for row in m)


@dataclass(frozen=True)
class AffineVectorField:
    """A degree-<=1 vector field: constant part plus linear part."""

    n: int
    constant: tuple[Fraction, ...]
    linear: tuple[tuple[Fraction, ...], ...]

    def __init__(self, n: int, constant: Sequence[Scalar], linear: Sequence[Sequence[Scalar]]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "constant", _freeze_vector(constant, n, "constant part"))
        object.__setattr__(self, "linear", _freeze_matrix(linear, n, "linear part"))

    @classmethod
    def zero(cls, n: int) -> "AffineVectorField":
        return cls(n, [0] * n, [[0] * n for _ in range(n)])

    def coefficient(self, j: int) -> Polynomial:
        """The coefficient polynomial of d/dx_j (1-based)."""
        terms = [({}, self.constant[j - 1])]
        terms += [({i + 1: 1}, self.linear[i][j - 1]) for i in range(self.n)]
        return Polynomial(self.n, terms)

    def apply(self, p: Polynomial) -> Polynomial:
        """Apply the derivation to a polynomial."""
        if p.n != self.n:
            raise ValueError(f"dimension mismatch: field in {self.n}, polynomial in {p.n}")
        result = Polynomial.zero(self.n)
        for j in range(1, self.n + 1):
            dp = p.diff(j)
            if not dp:
                continue
            result = result + self.coefficient(j) * dp
        return result

    def flatten(self) -> list[Fraction]:
        """Coordinates (constant, then linear row-major) for rank computations."""
        flat = list(self.constant)
        for row in self.linear:
            flat.extend(row)
        return flat

    def __add__(self, other: "AffineVectorField") -> "AffineVectorField":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return AffineVectorField(
            self.n,
            [a + b for a, b in zip(self.constant, other.constant)],
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.linear, other.linear)],
        )

    def scale(self, factor: Scalar) -> "AffineVectorField":
        f = Fraction(factor)
        return AffineVectorField(
            self.n,
            [f * a for a in self.constant],
            [[f * a for a in row] for row in self.linear],
        )

    def is_zero(self) -> bool:
        return not any(self.constant) and not any(any(row) for row in self.linear)


def coordinate_field(n: int, j: int) -> AffineVectorField:
    """The translation field d/dx_j."""
    if not 1 <= j <= n:
        raise ValueError(f"index {j} out of range 1..{n}")
    constant = [0] * n
    constant[j - 1] = 1
    return AffineVectorField(n, constant, [[0] * n for _ in range(n)])


def cayley_fields(n: int) -> list[AffineVectorField]:
    """The n-1 commuting fields X_p = d/dx_p + sum_{h>p} x_{h-p} d/dx_h.

    Each annihilates the degree-n hypersurface polynomial; together they
    generate a transitive abelian group of affine motions of its zero set.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    fields = []
    for p in range(1, n):
        constant = [0] * n
        constant[p - 1] = 1
        linear = [[0] * n for _ in range(n)]
        for i in range(1, n - p + 1):
            linear[i - 1][i + p - 1] = 1
        fields.append(AffineVectorField(n, constant, linear))
    return fields


def euler_field(n: int) -> AffineVectorField:
    """The weighted scaling field sum_h h x_h d/dx_h (weight h on x_h)."""
    if n < 1:
        raise ValueError("need n >= 1")
    linear = [[Fraction(0)] * n for _ in range(n)]
    for h in range(n):
        linear[h][h] = Fraction(h + 1)
    return AffineVectorField(n, [0] * n, linear)


def apply_field(field: AffineVectorField, p: Polynomial) -> Polynomial:
    return field.apply(p)


def commutator(x: AffineVectorField, y: AffineVectorField) -> AffineVectorField:
    """The Lie bracket [X, Y] with the convention [X,Y]f = X(Yf) - Y(Xf)."""
    if x.n != y.n:
        raise ValueError("dimension mismatch")
    b, a_mat = x.constant, x.linear
    c, b_mat = y.constant, y.linear
    constant = [p - q for p, q in zip(linalg.vec_mat(b, b_mat), linalg.vec_mat(c, a_mat))]
    ab = linalg.mat_mul(a_mat, b_mat)
    ba = linalg.mat_mul(b_mat, a_mat)
    linear = [[p - q for p, q in zip(r1, r2)] for r1, r2 in zip(ab, ba)]
    return AffineVectorField(x.n, constant, linear)


@dataclass(frozen=True)
class AffineTransformation:
    """An affine map acting on row vectors: x -> x M + v."""

    n: int
    matrix: tuple[tuple[Fraction, ...], ...]
    translation: tuple[Fraction, ...]

    def __init__(self, n: int, matrix: Sequence[Sequence[Scalar]], translation: Sequence[Scalar]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "matrix", _freeze_matrix(matrix, n, "matrix"))
        object.__setattr__(self, "translation", _freeze_vector(translation, n, "translation"))

    @classmethod
    def identity(cls, n: int) -> "AffineTransformation":
        return cls(n, linalg.identity(n), [0] * n)

    def apply(self, point: Sequence[Scalar]) -> tuple[Fraction, ...]:
        if len(point) != self.n:
            raise ValueError(f"point has length {len(point)}, expected {self.n}")
        moved = linalg.vec_mat([Fraction(x) for x in point], self.matrix)
        return tuple(m + t for m, t in zip(moved, self.translation))

    def then(self, other: "AffineTransformation") -> "AffineTransformation":
        """The composite map: apply self first, then other."""
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        matrix = linalg.mat_mul(self.matrix, other.matrix)
        translation = [
            a + b for a, b in zip(linalg.vec_mat(self.translation, other.matrix), other.translation)
        ]
        return AffineTransformation(self.n, matrix, translation)

    def inverse(self) -> "AffineTransformation":
        inv = linalg.invert(self.matrix)
        translation = [-t for t in linalg.vec_mat(self.translation, inv)]
        return AffineTransformation(self.n, inv, translation)


def _nilpotency_powers(a: Sequence[Sequence[Fraction]], n: int) -> list:
    """Powers [I, A, A^2, ...] up to the vanishing one; error if A is not nilpotent."""
    powers = [linalg.identity(n)]
    current = [list(row) for row in a]
    for _ in range(n):
        if not any(any(row) for row in current):
            return powers
        powers.append(current)
        current = linalg.mat_mul(current, a)
    if any(any(row) for row in current):
        raise InexactExponentialError(
            "inexact exponential: linear part is not nilpotent"
        )
    return powers


def exp_field(field: AffineVectorField, t: Scalar) -> AffineTransformation:
    """The exact time-t flow of a field whose linear part is nilpotent.

    With A the linear part and c the constant part, the flow is the affine
    map with matrix E = sum_k t^k A^k / k! and translation
    c . (sum_k t^{k+1} A^k / (k+1)!); both sums are finite.
    """
    t = Fraction(t)
    n = field.n
    powers = _nilpotency_powers(field.linear, n)
    matrix = [[Fraction(0)] * n for _ in range(n)]
    shift = [[Fraction(0)] * n for _ in range(n)]
    for k, ak in enumerate(powers):
        ek = Fraction(t**k, factorial(k))
        fk = Fraction(t ** (k + 1), factorial(k + 1))
        for i in range(n):
            for j in range(n):
                matrix[i][j] += ek * ak[i][j]
                shift[i][j] += fk * ak[i][j]
    translation = linalg.vec_mat(field.constant, shift)
    return AffineTransformation(n, matrix, translation)


def weight_scaling(n: int, lam: Scalar) -> AffineTransformation:
    """The exact diagonal map x_h -> lam^h x_h (lam nonzero)."""
    lam = Fraction(lam)
    if not lam:
        raise ValueError("scaling parameter must be nonzero")
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for h in range(n):
        matrix[h][h] = lam ** (h + 1)
    return AffineTransformation(n, matrix, [0] * n)


def orbit_point(n: int, params: Sequence[Scalar]) -> tuple[Fraction, ...]:
    """Image of the origin under exp(sum_p t_p X_p) for the commuting fields.

    The combined field has constant part (t_1, ..., t_{n-1}, 0) and strictly
    upper-triangular linear part, so the series is finite and the result lies
    on the hypersurface exactly.
    """
    t = _freeze_vector(params, n - 1, "parameter vector")
    a = [[Fraction(0)] * n for _ in range(n)]
    for p in range(1, n):
        if not t[p - 1]:
            continue
        for i in range(1, n - p + 1):
            a[i - 1][i + p - 1] += t[p - 1]
    c = list(t) + [Fraction(0)]
    total = [Fraction(0)] * n
    row = c[:]
    k = 0
    while any(row):
        f = Fraction(1, factorial(k + 1))
        for j in range(n):
            total[j] += f * row[j]
        row = linalg.vec_mat(row, a)
        k += 1
    return tuple(total)


def parameters_for_point(n: int, x: Sequence[Scalar]) -> tuple[Fraction, ...]:
    """Invert the orbit map on the first n-1 coordinates (triangular solve)."""
    target = _freeze_vector(x, n - 1, "coordinate vector")
    t = [Fraction(0)] * (n - 1)
    for k in range(n - 1):
        reached = orbit_point(n, t)
        t[k] = target[k] - reached[k]
    return tuple(t)


@dataclass(frozen=True)
class SymmetryAlgebra:
    """A basis of affine fields X with X p = c p, and the scalar c for each."""

    basis: tuple[AffineVectorField, ...]
    eigenvalues: tuple[Fraction, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _eigen_system(p: Polynomial, include_constant: bool) -> SymmetryAlgebra:
    if not p:
        raise ValueError("polynomial must be nonzero")
    n = p.n
    diffs = [p.diff(j) for j in range(1, n + 1)]
    xs = [Polynomial.variable(n, i) for i in range(1, n + 1)]
    # Unknown order: c, then constant part by index, then linear part row-major.
    columns: list[Polynomial] = [-p]
    if include_constant:
        columns.extend(diffs)
    for i in range(n):
        for j in range(n):
            columns.append(xs[i] * diffs[j])
    monos: set[Mono] = set()
    for col in columns:
        monos.update(col.terms)
    rows_index = sorted(monos, key=lambda m: _mono_key(m, n))
    matrix = [[col.terms.get(mono, Fraction(0)) for col in columns] for mono in rows_index]
    basis_vectors = linalg.nullspace(matrix, ncols=len(columns))
    fields = []
    eigenvalues = []
    for vec in basis_vectors:
        c = vec[0]
        offset = 1
        if include_constant:
            constant = vec[1 : n + 1]
            offset = n + 1
        else:
            constant = [Fraction(0)] * n
        linear = [vec[offset + i * n : offset + (i + 1) * n] for i in range(n)]
        field = AffineVectorField(n, constant, linear)
        if field.apply(p) != p * c:
            raise RuntimeError("solver produced a field violating its eigen-relation")
        fields.append(field)
        eigenvalues.append(c)
    return SymmetryAlgebra(tuple(fields), tuple(eigenvalues))


def symmetry_algebra(p: Polynomial) -> SymmetryAlgebra:
    """All affine fields X (constant + linear part) with X p = c p, c scalar."""
    return _eigen_system(p, include_constant=True)


def isotropy_at_origin(p: Polynomial) -> SymmetryAlgebra:
    """Purely linear fields X with X p = c p; requires p(0) = 0."""
    if not p:
        raise ValueError("polynomial must be nonzero")
    if p.evaluate([0] * p.n) != 0:
        raise ValueError("origin is not on the hypersurface p = 0")
    return _eigen_system(p, include_constant=False)


def span_contains(algebra: SymmetryAlgebra, fields: Sequence[AffineVectorField]) -> bool:
    """True iff every given field lies in the rational span of the basis."""
    base_rows = [f.flatten() for f in algebra.basis]
    base_rank = linalg.rank(base_rows)
    return linalg.rank(base_rows + [f.flatten() for f in fields]) == base_rank


def field_to_json_dict(field: AffineVectorField, eigenvalue: Fraction | None = None) -> dict:
    """Pinned JSON form with rationals as num/den strings."""
    data = {
        "n": field.n,
        "constant": [str(v) for v in field.constant],
        "linear": [[str(v) for v in row] for row in field.linear],
    }
    if eigenvalue is not None:
        data["eigenvalue"] = str(eigenvalue)
    return data


__all__ = [
    "AffineTransformation",
    "AffineVectorField",
    "InexactExponentialError",
    "SymmetryAlgebra",
    "apply_field",
    "cayley_fields",
    "commutator",
    "coordinate_field",
    "euler_field",
    "exp_field",
    "field_to_json_dict",
    "isotropy_at_origin",
    "orbit_point",
    "parameters_for_point",
    "span_contains",
    "substitute_affine",
    "symmetry_algebra",
    "weight_scaling",
]
