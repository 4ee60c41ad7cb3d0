"""Integer Laurent polynomials in one variable and exact determinants."""
from __future__ import annotations

from typing import Mapping, Sequence


class LaurentPolynomial:
    """Sum of ``c * t**e`` with integer ``c`` and integer (possibly negative) ``e``.

    Stored as an exponent -> coefficient mapping without zero entries.
    Instances are immutable and hashable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            c = int(c)
            if c:
                clean[int(e)] = c
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int], shift: int = 0) -> "LaurentPolynomial":
        """``coeffs[i]`` is the coefficient of ``t**(i + shift)``."""
        return cls({i + shift: c for i, c in enumerate(coeffs)})

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls({0: c})

    @classmethod
    def t(cls, power: int = 1) -> "LaurentPolynomial":
        return cls({power: 1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> int:
        return min(self._terms) if self._terms else 0

    def max_exp(self) -> int:
        return max(self._terms) if self._terms else 0

    def span(self) -> int:
        return self.max_exp() - self.min_exp()

    def coefficients(self) -> list[int]:
        """Dense coefficients from the lowest exponent up."""
        if not self._terms:
            return []
        lo = self.min_exp()
        return [self._terms.get(e, 0) for e in range(lo, self.max_exp() + 1)]

    def shift(self, k: int) -> "LaurentPolynomial":
        return LaurentPolynomial({e + k: c for e, c in self._terms.items()})

    def reflect(self) -> "LaurentPolynomial":
        """Substitute ``t -> 1/t``."""
        return LaurentPolynomial({-e: c for e, c in self._terms.items()})

    def canonical(self) -> "LaurentPolynomial":
        """Lowest exponent 0 and positive leading coefficient."""
        if not self._terms:
            return self
        p = self.shift(-self.min_exp())
        return -p if p._terms[p.max_exp()] < 0 else p

    def __call__(self, value):
        return sum(c * value**e for e, c in self._terms.items())

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LaurentPolynomial.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __repr__(self):
        return f"LaurentPolynomial({self._terms})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        return text + "".join(f" {s} {b}" for s, b in parts[1:])

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self._terms.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPolynomial":
        return cls({int(e): int(c) for e, c in data.items()})


def _coerce(x) -> LaurentPolynomial:
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


def equal_up_to_units(p: LaurentPolynomial, q: LaurentPolynomial) -> bool:
    """Equality up to multiplication by ``±t**k`` and the substitution ``t -> 1/t``."""
    cp = p.canonical()
    return cp == q.canonical() or cp == q.reflect().canonical()


# ------------------------------------------------------ dense polynomials
# Plain integer coefficient lists, index = exponent; used inside elimination.


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _psub(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _pdiv_exact(a: list[int], b: list[int]) -> list[int]:
    """Quotient of ``a`` by ``b`` in Z[t]; raises if the division leaves a remainder."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    if not a:
        return []
    q = [0] * (len(a) - len(b) + 1) if len(a) >= len(b) else []
    lead = b[-1]
    while a and len(a) >= len(b):
        coef, rem = divmod(a[-1], lead)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        shift = len(a) - len(b)
        q[shift] = coef
        for i, c in enumerate(b):
            a[i + shift] -= coef * c
        _trim(a)
    if a:
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def _bareiss(rows: list[list[list[int]]]) -> list[int]:
    """Determinant of a square matrix of integer polynomials, fraction-free."""
    n = len(rows)
    if n == 0:
        return [1]
    m = [[list(e) for e in row] for row in rows]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return []
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _psub(_pmul(m[i][j], pivot), _pmul(m[i][k], m[k][j]))
                m[i][j] = _pdiv_exact(num, prev)
        prev = pivot
    det = m[n - 1][n - 1]
    return [-c for c in det] if sign < 0 else det


def determinant(matrix: Sequence[Sequence[LaurentPolynomial | int]]) -> LaurentPolynomial:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Each row is first multiplied by a power of ``t`` so that its entries
    are ordinary polynomials; the shift is undone at the end.
    """
    rows = [[_coerce(e) for e in row] for row in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    total_shift = 0
    dense = []
    for row in rows:
        nonzero = [e for e in row if not e.is_zero()]
        if not nonzero:
            return LaurentPolynomial()
        s = min(e.min_exp() for e in nonzero)
        total_shift += s
        dense.append([_dense(e.shift(-s)) for e in row])
    return LaurentPolynomial.from_coefficients(_bareiss(dense), shift=total_shift)


def _dense(p: LaurentPolynomial) -> list[int]:
    if p.is_zero():
        return []
    return [0] * p.min_exp() + p.coefficients()


def cofactor_determinant(matrix: Sequence[Sequence[LaurentPolynomial | int]]) -> LaurentPolynomial:
    """Determinant by Laplace expansion along the first row (small matrices only)."""
    rows = [[_coerce(e) for e in row] for row in matrix]
    n = len(rows)
    if n == 0:
        return LaurentPolynomial.constant(1)
    if n == 1:
        return rows[0][0]
    total = LaurentPolynomial()
    for j, entry in enumerate(rows[0]):
        if entry.is_zero():
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = entry * cofactor_determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total
