"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial lives in an ambient space of ``n`` variables ``x1 .. xn``
(1-based indices) and is stored as a dictionary mapping monomials to nonzero
``Fraction`` coefficients.  A monomial is a tuple of ``(variable, exponent)``
pairs, sorted by variable index, with no zero exponents:

    x1^2 * x3  ->  ((1, 2), (3, 1))
    1          ->  ()

This representation is canonical: two polynomials are mathematically equal
exactly when their term dictionaries are equal.  All arithmetic is exact;
there is no floating point anywhere.

Terms are ordered for printing and serialization by ascending total degree,
ties broken by lexicographically descending exponent vector (x1-major).  That
is the order in which the generated hypersurface equations are conventionally
written, so rendered output is byte-stable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Mono = tuple[tuple[int, int], ...]
Scalar = Union[int, Fraction]
ExpsLike = Union[Mapping[int, int], Iterable[tuple[int, int]]]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _normalize_exps(exps: ExpsLike, n: int) -> Mono:
    """Validate and canonicalize an exponent mapping into a Mono key."""
    items = exps.items() if isinstance(exps, Mapping) else exps
    merged: dict[int, int] = {}
    for var, exp in items:
        if not 1 <= var <= n:
            raise ValueError(f"variable index {var} out of range 1..{n}")
        if exp < 0:
            raise ValueError(f"negative exponent {exp} for x{var}")
        if exp:
            merged[var] = merged.get(var, 0) + exp
    return tuple(sorted(merged.items()))


def mono_mul(a: Mono, b: Mono) -> Mono:
    out = dict(a)
    for var, exp in b:
        out[var] = out.get(var, 0) + exp
    return tuple(sorted(out.items()))


def mono_degree(m: Mono) -> int:
    return sum(exp for _, exp in m)


def mono_div(a: Mono, b: Mono) -> Mono | None:
    """Return a/b as a monomial, or None if b does not divide a."""
    out = dict(a)
    for var, exp in b:
        have = out.get(var, 0)
        if have < exp:
            return None
        if have == exp:
            del out[var]
        else:
            out[var] = have - exp
    return tuple(sorted(out.items()))


def _mono_key(m: Mono, n: int) -> tuple[int, tuple[int, ...]]:
    """Canonical sort key: (total degree, negated dense exponent vector)."""
    vec = [0] * n
    for var, exp in m:
        vec[var - 1] = -exp
    return (mono_degree(m), tuple(vec))


class Polynomial:
    """An immutable sparse polynomial with exact rational coefficients.

    Instances should be treated as frozen: every operation returns a new
    polynomial, and the internal term map must not be mutated.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Iterable[tuple[ExpsLike, Scalar]] = ()):
        if n < 0:
            raise ValueError("ambient dimension must be nonnegative")
        object.__setattr__(self, "n", n)
        acc: dict[Mono, Fraction] = {}
        for exps, coeff in terms:
            mono = _normalize_exps(exps, n)
            c = acc.get(mono, _ZERO) + Fraction(coeff)
            if c:
                acc[mono] = c
            elif mono in acc:
                del acc[mono]
        object.__setattr__(self, "terms", acc)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def _raw(cls, n: int, terms: dict[Mono, Fraction]) -> "Polynomial":
        """Internal constructor; terms must already be canonical."""
        p = cls.__new__(cls)
        object.__setattr__(p, "n", n)
        object.__setattr__(p, "terms", terms)
        return p

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, value: Scalar) -> "Polynomial":
        c = Fraction(value)
        return cls._raw(n, {(): c} if c else {})

    @classmethod
    def variable(cls, n: int, index: int) -> "Polynomial":
        if not 1 <= index <= n:
            raise ValueError(f"variable index {index} out of range 1..{n}")
        return cls._raw(n, {((index, 1),): _ONE})

    @classmethod
    def monomial(cls, n: int, exps: ExpsLike, coeff: Scalar = 1) -> "Polynomial":
        return cls(n, [(exps, coeff)])

    # -- basic queries -----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def coefficient(self, exps: ExpsLike) -> Fraction:
        """Coefficient of the given monomial (zero if absent)."""
        return self.terms.get(_normalize_exps(exps, self.n), _ZERO)

    def total_degree(self) -> int:
        """Total degree; the zero polynomial has degree -1 by convention."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def degree_in(self, variables: Iterable[int]) -> int:
        """Maximum joint degree of the given variables over all terms."""
        block = set(variables)
        best = 0
        for mono in self.terms:
            best = max(best, sum(e for v, e in mono if v in block))
        return best

    def variables_used(self) -> set[int]:
        return {v for mono in self.terms for v, _ in mono}

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def sorted_terms(self) -> list[tuple[Mono, Fraction]]:
        """Terms in canonical order: degree ascending, then x1-major."""
        return sorted(self.terms.items(), key=lambda kv: _mono_key(kv[0], self.n))

    # -- ring operations ---------------------------------------------------

    def _require_same_space(self, other: "Polynomial") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_space(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = out.get(mono, _ZERO) + coeff
            if c:
                out[mono] = c
            elif mono in out:
                del out[mono]
        return Polynomial._raw(self.n, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_space(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = out.get(mono, _ZERO) - coeff
            if c:
                out[mono] = c
            elif mono in out:
                del out[mono]
        return Polynomial._raw(self.n, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Polynomial.zero(self.n)
            return Polynomial._raw(self.n, {m: k * c for m, k in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_space(other)
        out: dict[Mono, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = mono_mul(ma, mb)
                c = out.get(mono, _ZERO) + ca * cb
                if c:
                    out[mono] = c
                elif mono in out:
                    del out[mono]
        return Polynomial._raw(self.n, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "Polynomial":
        c = Fraction(scalar)
        return Polynomial._raw(self.n, {m: k / c for m, k in self.terms.items()})

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.n, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- calculus and substitution -----------------------------------------

    def diff(self, index: int) -> "Polynomial":
        """Exact partial derivative with respect to x_index."""
        if not 1 <= index <= self.n:
            raise ValueError(f"variable index {index} out of range 1..{self.n}")
        out: dict[Mono, Fraction] = {}
        for mono, coeff in self.terms.items():
            exps = dict(mono)
            e = exps.get(index, 0)
            if not e:
                continue
            if e == 1:
                del exps[index]
            else:
                exps[index] = e - 1
            key = tuple(sorted(exps.items()))
            c = out.get(key, _ZERO) + coeff * e
            if c:
                out[key] = c
            elif key in out:
                del out[key]
        return Polynomial._raw(self.n, out)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Exact value at a rational point (one coordinate per variable)."""
        if len(point) != self.n:
            raise ValueError(f"point has length {len(point)}, expected {self.n}")
        values = [Fraction(v) for v in point]
        powers: dict[tuple[int, int], Fraction] = {}
        total = _ZERO
        for mono, coeff in self.terms.items():
            term = coeff
            for var, exp in mono:
                key = (var, exp)
                if key not in powers:
                    powers[key] = values[var - 1] ** exp
                term *= powers[key]
            total += term
        return total

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Compose: replace x_i by images[i-1].  All images must share a space."""
        if len(images) != self.n:
            raise ValueError(f"need {self.n} images, got {len(images)}")
        if not images:
            return self
        m = images[0].n
        for q in images:
            if q.n != m:
                raise ValueError("images live in different spaces")
        powers: dict[tuple[int, int], Polynomial] = {}
        result = Polynomial.zero(m)
        for mono, coeff in self.terms.items():
            term = Polynomial.constant(m, coeff)
            for var, exp in mono:
                key = (var, exp)
                if key not in powers:
                    powers[key] = images[var - 1] ** exp
                term = term * powers[key]
            result = result + term
        return result

    def extend(self, n_new: int) -> "Polynomial":
        """Reinterpret in a larger ambient space (same terms)."""
        if n_new < self.n:
            raise ValueError("extend cannot shrink the ambient space")
        return Polynomial._raw(n_new, dict(self.terms))

    def restrict(self, n_new: int) -> "Polynomial":
        """Reinterpret in a smaller space; fails if dropped variables occur."""
        used = self.variables_used()
        if any(v > n_new for v in used):
            raise ValueError(f"polynomial uses variables above x{n_new}")
        return Polynomial._raw(n_new, dict(self.terms))

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        return format_plain(self)

    def __repr__(self) -> str:
        return f"Polynomial({self.n}, {format_plain(self)!r})"


def weighted_degree_check(p: Polynomial, weights: Sequence[int], w: int) -> bool:
    """True iff every term of p has weighted degree exactly w.

    The zero polynomial passes vacuously.
    """
    if len(weights) != p.n:
        raise ValueError(f"weights have length {len(weights)}, expected {p.n}")
    for mono in p.terms:
        if sum(weights[var - 1] * exp for var, exp in mono) != w:
            return False
    return True


def substitute_affine(p: Polynomial, transform) -> Polynomial:
    """Compose p with an affine map x_j -> sum_i x_i M[i][j] + v[j].

    ``transform`` is any object with ``n``, ``matrix`` and ``translation``
    attributes (see cayley.symmetry.AffineTransformation).
    """
    if transform.n != p.n:
        raise ValueError(f"dimension mismatch: {transform.n} vs {p.n}")
    n = p.n
    images = []
    for j in range(n):
        terms: list[tuple[ExpsLike, Scalar]] = [
            ({i + 1: 1}, transform.matrix[i][j]) for i in range(n)
        ]
        terms.append(({}, transform.translation[j]))
        images.append(Polynomial(n, terms))
    return p.substitute(images)


# -- term rendering ---------------------------------------------------------


def _plain_mono(mono: Mono) -> str:
    parts = [f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in mono]
    return "*".join(parts)


def format_plain(p: Polynomial) -> str:
    """Deterministic plain-text form, e.g. ``x1*x2 - 1/3*x1^3``."""
    terms = p.sorted_terms()
    if not terms:
        return "0"
    pieces = []
    for i, (mono, coeff) in enumerate(terms):
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = _plain_mono(mono)
        else:
            body = f"{mag}*{_plain_mono(mono)}"
        if i == 0:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(pieces)


def _latex_index(k: int) -> str:
    return str(k) if k < 10 else "{" + str(k) + "}"


def _latex_mono(mono: Mono) -> str:
    parts = []
    for v, e in mono:
        if e == 1:
            parts.append(f"x_{_latex_index(v)}")
        else:
            parts.append(f"x_{_latex_index(v)}^{_latex_index(e)}")
    return "".join(parts)


def _latex_coeff(mag: Fraction) -> str:
    if mag.denominator == 1:
        return str(mag.numerator)
    return rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"


def format_latex(p: Polynomial) -> str:
    """Deterministic LaTeX form, e.g. ``x_1x_2-\\frac{1}{3}x_1^3``."""
    terms = p.sorted_terms()
    if not terms:
        return "0"
    pieces = []
    for i, (mono, coeff) in enumerate(terms):
        mag = abs(coeff)
        if not mono:
            body = _latex_coeff(mag)
        elif mag == 1:
            body = _latex_mono(mono)
        else:
            body = _latex_coeff(mag) + _latex_mono(mono)
        sign = "-" if coeff < 0 else ("" if i == 0 else "+")
        pieces.append(sign + body)
    return "".join(pieces)


# -- JSON serialization -----------------------------------------------------


def poly_to_json_dict(p: Polynomial) -> dict:
    """Serialize to the pinned schema with integers as decimal strings."""
    return {
        "n": p.n,
        "terms": [
            {
                "exps": [[v, e] for v, e in mono],
                "num": str(coeff.numerator),
                "den": str(coeff.denominator),
            }
            for mono, coeff in p.sorted_terms()
        ],
    }


def poly_from_json_dict(data: Mapping) -> Polynomial:
    """Parse the schema produced by poly_to_json_dict."""
    try:
        n = int(data["n"])
        terms = [
            (
                [(int(v), int(e)) for v, e in entry["exps"]],
                Fraction(int(entry["num"]), int(entry["den"])),
            )
            for entry in data["terms"]
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed polynomial JSON: {exc}") from exc
    return Polynomial(n, terms)


# -- polynomial matrices and determinants ------------------------------------


class PolyMatrix:
    """A rectangular matrix of polynomials sharing one ambient space."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Polynomial]]):
        rows = len(entries)
        if rows == 0:
            raise ValueError("matrix needs at least one row")
        cols = len(entries[0])
        if cols == 0:
            raise ValueError("matrix needs at least one column")
        n = entries[0][0].n
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged matrix")
            for p in row:
                if p.n != n:
                    raise ValueError("entries live in different spaces")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(tuple(row) for row in entries))

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def identity(cls, size: int, n: int) -> "PolyMatrix":
        one = Polynomial.constant(n, 1)
        zero = Polynomial.zero(n)
        return cls([[one if i == j else zero for j in range(size)] for i in range(size)])

    @classmethod
    def from_scalars(cls, entries: Sequence[Sequence[Scalar]], n: int = 0) -> "PolyMatrix":
        return cls([[Polynomial.constant(n, v) for v in row] for row in entries])

    def ambient_dimension(self) -> int:
        return self.entries[0][0].n


def _leading_term(p: Polynomial) -> tuple[Mono, Fraction]:
    mono = max(p.terms, key=lambda m: _mono_key(m, p.n))
    return mono, p.terms[mono]


def divide_exact(p: Polynomial, q: Polynomial) -> Polynomial:
    """Exact polynomial division p/q; raises ValueError if q does not divide p."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    p._require_same_space(q)
    q_mono, q_coeff = _leading_term(q)
    quotient: dict[Mono, Fraction] = {}
    rem = p
    while rem:
        r_mono, r_coeff = _leading_term(rem)
        t_mono = mono_div(r_mono, q_mono)
        if t_mono is None:
            raise ValueError("inexact polynomial division")
        t_coeff = r_coeff / q_coeff
        quotient[t_mono] = quotient.get(t_mono, _ZERO) + t_coeff
        rem = rem - Polynomial._raw(p.n, {t_mono: t_coeff}) * q
    return Polynomial._raw(p.n, {m: c for m, c in quotient.items() if c})


def _det_cofactor(a: Sequence[Sequence[Polynomial]], size: int, n: int) -> Polynomial:
    if size == 1:
        return a[0][0]
    if size == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    return (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )


def determinant(matrix: PolyMatrix) -> Polynomial:
    """Exact determinant of a square polynomial matrix.

    Uses cofactor expansion up to 3x3 and fraction-free Bareiss elimination
    (all intermediate entries are true minors) beyond that.
    """
    if matrix.rows != matrix.cols:
        raise ValueError(f"non-square matrix: {matrix.rows}x{matrix.cols}")
    size = matrix.rows
    n = matrix.ambient_dimension()
    if size <= 3:
        return _det_cofactor(matrix.entries, size, n)

    a = [list(row) for row in matrix.entries]
    zero = Polynomial.zero(n)
    prev = Polynomial.constant(n, 1)
    sign = 1
    for k in range(size - 1):
        pivot_row = next((i for i in range(k, size) if a[i][k]), None)
        if pivot_row is None:
            return zero
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
            a[i][k] = zero
        prev = a[k][k]
    det = a[size - 1][size - 1]
    return det if sign == 1 else -det


def variables(n: int) -> list[Polynomial]:
    """Convenience: the coordinate polynomials [x1, ..., xn]."""
    return [Polynomial.variable(n, i) for i in range(1, n + 1)]
