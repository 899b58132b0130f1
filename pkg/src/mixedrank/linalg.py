"""Exact linear algebra over the Gaussian integers.

Adjacency-style matrices of mixed graphs live in Z[i].  Rank is computed by
fraction-free elimination and characteristic polynomials by the
Faddeev-LeVerrier recurrence, so every result is an exact integer; no
floating point enters anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import MixedGraph, UnderlyingGraph


@dataclass(frozen=True)
class GaussianInt:
    """A Gaussian integer re + im*i with arbitrary-precision parts."""

    re: int
    im: int = 0

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianInt(a * c - b * d, a * d + b * c)

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def exact_div(self, other: "GaussianInt") -> "GaussianInt":
        """Quotient self/other, which must be exact in Z[i]."""
        if not other:
            raise ZeroDivisionError("division by zero Gaussian integer")
        nm = other.norm()
        num = self * other.conjugate()
        q_re, r_re = divmod(num.re, nm)
        q_im, r_im = divmod(num.im, nm)
        if r_re or r_im:
            raise ArithmeticError(f"{self} not divisible by {other}")
        return GaussianInt(q_re, q_im)

    def __repr__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


GI_ZERO = GaussianInt(0, 0)
GI_ONE = GaussianInt(1, 0)
GI_I = GaussianInt(0, 1)


def _coerce(value) -> GaussianInt:
    if isinstance(value, GaussianInt):
        return value
    if isinstance(value, int):
        return GaussianInt(value, 0)
    if isinstance(value, tuple) and len(value) == 2:
        return GaussianInt(value[0], value[1])
    raise TypeError(f"cannot interpret {value!r} as a Gaussian integer")


@dataclass(frozen=True)
class GaussianMatrix:
    """Dense matrix over Z[i], stored row-major as immutable tuples."""

    rows: int
    cols: int
    entries: tuple[tuple[GaussianInt, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("column count mismatch")

    @classmethod
    def from_rows(cls, rows) -> "GaussianMatrix":
        data = tuple(tuple(_coerce(x) for x in row) for row in rows)
        r = len(data)
        c = len(data[0]) if data else 0
        return cls(r, c, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "GaussianMatrix":
        return cls(rows, cols, tuple(tuple([GI_ZERO] * cols) for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "GaussianMatrix":
        return cls.from_rows(
            [[GI_ONE if i == j else GI_ZERO for j in range(n)] for i in range(n)]
        )

    def entry(self, i: int, j: int) -> GaussianInt:
        return self.entries[i][j]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def conjugate_transpose(self) -> "GaussianMatrix":
        return GaussianMatrix(
            self.cols,
            self.rows,
            tuple(
                tuple(self.entries[i][j].conjugate() for i in range(self.rows))
                for j in range(self.cols)
            ),
        )

    def is_hermitian(self) -> bool:
        return self.is_square() and self == self.conjugate_transpose()

    def scalar_mul(self, s: GaussianInt) -> "GaussianMatrix":
        return GaussianMatrix(
            self.rows,
            self.cols,
            tuple(tuple(s * x for x in row) for row in self.entries),
        )

    def _pairs(self) -> list[list[tuple[int, int]]]:
        return [[(x.re, x.im) for x in row] for row in self.entries]


@dataclass(frozen=True)
class IntPolynomial:
    """Monic polynomial with integer coefficients, leading coefficient first."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients or self.coefficients[0] != 1:
            raise ValueError("polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, j: int) -> int:
        """Coefficient of x^(degree-j), i.e. the j-th after the leading 1."""
        return self.coefficients[j]

    def zero_root_multiplicity(self) -> int:
        count = 0
        for c in reversed(self.coefficients):
            if c != 0:
                break
            count += 1
        return count

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in self.coefficients:
            acc = acc * x + c
        return acc


def hermitian_matrix(g: MixedGraph) -> GaussianMatrix:
    """Entry 1 for an undirected edge, i / -i for an arc and its reverse."""
    n = g.n
    grid = [[GI_ZERO] * n for _ in range(n)]
    for u, v in g.undirected_edges:
        grid[u][v] = GI_ONE
        grid[v][u] = GI_ONE
    for u, v in g.arcs:
        grid[u][v] = GI_I
        grid[v][u] = GaussianInt(0, -1)
    return GaussianMatrix(n, n, tuple(tuple(row) for row in grid))


def adjacency_matrix(g: UnderlyingGraph) -> GaussianMatrix:
    n = g.n
    grid = [[GI_ZERO] * n for _ in range(n)]
    for u, v in g.edges:
        grid[u][v] = GI_ONE
        grid[v][u] = GI_ONE
    return GaussianMatrix(n, n, tuple(tuple(row) for row in grid))


def skew_adjacency_matrix(g: MixedGraph) -> GaussianMatrix:
    """Antisymmetric +/-1 matrix of an oriented graph.

    Rejects input with undirected edges: the skew form is only defined once
    every edge carries an orientation.
    """
    if g.undirected_edges:
        raise ValueError("not an oriented graph: undirected edges present")
    n = g.n
    grid = [[GI_ZERO] * n for _ in range(n)]
    one, minus = GI_ONE, GaussianInt(-1, 0)
    for u, v in g.arcs:
        grid[u][v] = one
        grid[v][u] = minus
    return GaussianMatrix(n, n, tuple(tuple(row) for row in grid))


def _bareiss_rank(rows: list[list[tuple[int, int]]]) -> int:
    """Fraction-free elimination on (re, im) integer pairs.

    Pivot policy: first row with a nonzero entry in the leftmost unresolved
    column.  Each intermediate division is exact by the Sylvester identity;
    a nonzero remainder would mean corrupted arithmetic, so it is checked.
    """
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    r = 0
    prev_re, prev_im = 1, 0
    for c in range(ncols):
        piv = -1
        for i in range(r, m):
            e = rows[i][c]
            if e[0] or e[1]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        top = rows[r]
        p_re, p_im = top[c]
        pnorm = prev_re * prev_re + prev_im * prev_im
        for i in range(r + 1, m):
            row = rows[i]
            l_re, l_im = row[c]
            for j in range(c + 1, ncols):
                a_re, a_im = row[j]
                t_re, t_im = top[j]
                # pivot*entry - lead*top_entry, then exact division by prev
                num_re = (p_re * a_re - p_im * a_im) - (l_re * t_re - l_im * t_im)
                num_im = (p_re * a_im + p_im * a_re) - (l_re * t_im + l_im * t_re)
                d_re = num_re * prev_re + num_im * prev_im
                d_im = num_im * prev_re - num_re * prev_im
                q_re, rem_re = divmod(d_re, pnorm)
                q_im, rem_im = divmod(d_im, pnorm)
                if rem_re or rem_im:
                    raise ArithmeticError("inexact division in fraction-free elimination")
                row[j] = (q_re, q_im)
            row[c] = (0, 0)
        prev_re, prev_im = p_re, p_im
        r += 1
        if r == m:
            break
    return r


def exact_rank(M: GaussianMatrix) -> int:
    """Rank of M over the Gaussian rationals, computed exactly."""
    if M.rows == 0 or M.cols == 0:
        return 0
    return _bareiss_rank(M._pairs())


def char_poly(M: GaussianMatrix) -> IntPolynomial:
    """Coefficients of det(xI - M) for Hermitian (or real symmetric) M.

    Uses the Faddeev-LeVerrier recurrence; all divisions are exact and all
    coefficients must come out real, which is asserted.
    """
    if not M.is_square():
        raise ValueError("characteristic polynomial needs a square matrix")
    if not M.is_hermitian():
        raise ValueError("matrix is not Hermitian")
    n = M.rows
    if n == 0:
        return IntPolynomial((1,))
    a = M._pairs()
    coeffs: list[tuple[int, int]] = [(1, 0)]
    work = [[(0, 0)] * n for _ in range(n)]  # M_0 = 0
    for k in range(1, n + 1):
        c_re, c_im = coeffs[k - 1]
        # work <- A*work + c_{k-1} * I
        nxt = [[(0, 0)] * n for _ in range(n)]
        for i in range(n):
            arow = a[i]
            nrow = nxt[i]
            for j in range(n):
                s_re = 0
                s_im = 0
                for t in range(n):
                    x_re, x_im = arow[t]
                    y_re, y_im = work[t][j]
                    s_re += x_re * y_re - x_im * y_im
                    s_im += x_re * y_im + x_im * y_re
                if i == j:
                    s_re += c_re
                    s_im += c_im
                nrow[j] = (s_re, s_im)
        work = nxt
        tr_re = 0
        tr_im = 0
        for i in range(n):
            arow = a[i]
            for t in range(n):
                x_re, x_im = arow[t]
                y_re, y_im = work[t][i]
                tr_re += x_re * y_re - x_im * y_im
                tr_im += x_re * y_im + x_im * y_re
        q_re, rem_re = divmod(-tr_re, k)
        q_im, rem_im = divmod(-tr_im, k)
        if rem_re or rem_im:
            raise ArithmeticError("inexact trace division in characteristic polynomial")
        coeffs.append((q_re, q_im))
    for c_re, c_im in coeffs:
        if c_im:
            raise ArithmeticError(
                "characteristic polynomial of a Hermitian matrix came out non-real"
            )
    return IntPolynomial(tuple(c_re for c_re, _ in coeffs))
