"""Exact integer-lattice algebra for row-generated sublattices of Z^n.

A sublattice is presented by a square integer matrix whose rows generate it:
the lattice is {x . M : x integer row vector}.  Everything here is exact
integer arithmetic (Python ints, so no overflow and no rounding): fraction-free
determinants, row-style Hermite normal form, membership and witness solving,
coset counting, and certification of nested chains Z^n > M Z^n > q Z^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

Vec = tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Square integer matrix, used as a lattice generator via its rows.

    The row convention matters: a vector v lies in the lattice exactly when
    v = x . M for some integer row vector x.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n < 1:
            raise ValueError("matrix must have at least one row")
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def scalar(cls, c: int, n: int) -> "IntMatrix":
        return cls(tuple(tuple(c * int(i == j) for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def left_mul(self, v: Sequence[int]) -> Vec:
        """Row vector times matrix: returns v . M."""
        if len(v) != self.n:
            raise ValueError("dimension mismatch")
        return tuple(
            sum(v[i] * self.rows[i][j] for i in range(self.n)) for j in range(self.n)
        )

    def matmul(self, other: "IntMatrix") -> "IntMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return IntMatrix(tuple(other.left_mul(r) for r in self.rows))


def determinant(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    All intermediate divisions are exact, so the result is the true integer
    determinant regardless of entry size.
    """
    n = m.n
    a = [list(r) for r in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, s, t) with s*a + t*b = g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
        old_t, t = t, old_t - quot * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hermite_decomposition(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form with its unimodular transform.

    Returns (H, U) with U . m = H, |det U| = 1, H upper triangular with
    positive diagonal pivots, and every entry above a pivot reduced into
    [0, pivot).  Row spans of H and m coincide, which is what membership
    and coset counting rely on.
    """
    n = m.n
    h = [list(r) for r in m.rows]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if h[r][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        if piv != c:
            h[c], h[piv] = h[piv], h[c]
            u[c], u[piv] = u[piv], u[c]
        for r in range(c + 1, n):
            if h[r][c] == 0:
                continue
            a, b = h[c][c], h[r][c]
            g, s, t = _xgcd(a, b)
            p, q = a // g, b // g
            # 2x2 unimodular row transform: det(s*p + t*q) = g/g = 1.
            h[c], h[r] = (
                [s * x + t * y for x, y in zip(h[c], h[r])],
                [-q * x + p * y for x, y in zip(h[c], h[r])],
            )
            u[c], u[r] = (
                [s * x + t * y for x, y in zip(u[c], u[r])],
                [-q * x + p * y for x, y in zip(u[c], u[r])],
            )
        if h[c][c] < 0:
            h[c] = [-x for x in h[c]]
            u[c] = [-x for x in u[c]]
        for r in range(c):
            f = h[r][c] // h[c][c]
            if f:
                h[r] = [x - f * y for x, y in zip(h[r], h[c])]
                u[r] = [x - f * y for x, y in zip(u[r], u[c])]
    return IntMatrix.from_rows(h), IntMatrix.from_rows(u)


def hermite_form(m: IntMatrix) -> IntMatrix:
    """Canonical row Hermite normal form of a nonsingular matrix."""
    return hermite_decomposition(m)[0]


def _solve_upper(h: IntMatrix, v: Sequence[int]) -> Optional[list[int]]:
    # Solve x . H = v over the integers for upper-triangular H with nonzero
    # diagonal; forward substitution column by column.
    n = h.n
    x = [0] * n
    for j in range(n):
        s = v[j] - sum(x[i] * h.rows[i][j] for i in range(j))
        quot, rem = divmod(s, h.rows[j][j])
        if rem:
            return None
        x[j] = quot
    return x


def contains(m: IntMatrix, v: Sequence[int]) -> bool:
    """Whether v lies in the lattice generated by the rows of m."""
    if len(v) != m.n:
        raise ValueError("dimension mismatch")
    h, _ = hermite_decomposition(m)
    return _solve_upper(h, v) is not None


def solve_left(m: IntMatrix, v: Sequence[int]) -> Optional[Vec]:
    """Integer witness x with x . m = v, or None when v is not in the lattice.

    When a witness is returned it is re-multiplied against m as a self-check.
    """
    if len(v) != m.n:
        raise ValueError("dimension mismatch")
    h, u = hermite_decomposition(m)
    y = _solve_upper(h, v)
    if y is None:
        return None
    x = u.rows  # x = y . U
    witness = tuple(sum(y[i] * x[i][j] for i in range(m.n)) for j in range(m.n))
    if m.left_mul(witness) != tuple(int(c) for c in v):
        raise AssertionError("witness re-multiplication failed")
    return witness


def coset_count(outer: IntMatrix, inner: IntMatrix) -> int:
    """Number of cosets of the inner lattice inside the outer lattice.

    Requires inner to be a sublattice of outer; the count is the exact ratio
    |det inner| / |det outer|.
    """
    if outer.n != inner.n:
        raise ValueError("dimension mismatch")
    for row in inner.rows:
        if not contains(outer, row):
            raise ValueError("not a sublattice")
    det_outer = abs(determinant(outer))
    det_inner = abs(determinant(inner))
    quot, rem = divmod(det_inner, det_outer)
    if rem:
        raise AssertionError("coset count is not integral despite inclusion")
    return quot


@dataclass(frozen=True)
class ChainReport:
    """Certificate for a nested chain Z^n > M Z^n > q Z^n.

    ambient_index is |Z^n / M Z^n| (equal to det_abs); scaled_index is
    |M Z^n / q Z^n| and is None when the inclusion q Z^n <= M Z^n fails,
    since the quotient is undefined in that case.
    """

    ambient_dim: int
    scale: int
    matrix: IntMatrix
    det_abs: int
    ambient_index: int
    scaled_index: Optional[int]
    inclusion_holds: bool

    @property
    def strictly_nested(self) -> bool:
        """Both inclusions proper: 1 < det_abs and scaled_index > 1."""
        return (
            self.inclusion_holds
            and self.det_abs > 1
            and self.scaled_index is not None
            and self.scaled_index > 1
        )


def verify_chain(m: IntMatrix, q: int) -> ChainReport:
    """Check the chain Z^n > M Z^n > q Z^n and report the lattice indices."""
    if q < 2:
        raise ValueError("scale must be at least 2")
    n = m.n
    det_abs = abs(determinant(m))
    if det_abs == 0:
        raise ValueError("singular matrix")
    basis = [tuple(q * int(i == j) for j in range(n)) for i in range(n)]
    inclusion = all(contains(m, e) for e in basis)
    scaled: Optional[int] = None
    if inclusion:
        scaled, rem = divmod(q**n, det_abs)
        if rem:
            raise AssertionError("index ratio is not integral despite inclusion")
    return ChainReport(
        ambient_dim=n,
        scale=q,
        matrix=m,
        det_abs=det_abs,
        ambient_index=det_abs,
        scaled_index=scaled,
        inclusion_holds=inclusion,
    )
