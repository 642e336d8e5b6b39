"""Exact arithmetic in Q(w), w = exp(2*pi*i/3), plus dense matrices over it.

Elements are stored on the basis {1, w}; w**2 is rewritten to -1 - w as soon
as it appears, so equality is a comparison of two rationals.  ``CycI`` adjoins
the imaginary unit (needed for the Pauli matrix sigma^2) as pairs u + v*i.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Callable, Iterable, Sequence

__all__ = [
    "Cyclotomic",
    "CycI",
    "CycMatrix",
    "CycTensor3",
    "omega",
    "mat_mul",
    "rank",
    "row_echelon",
    "parse_scalar",
    "format_scalar",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def _frac_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Cyclotomic:
    """The number a + b*w with a, b rational."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    @classmethod
    def coerce(cls, x) -> Cyclotomic:
        if isinstance(x, Cyclotomic):
            return x
        return cls(x)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Cyclotomic):
            return Cyclotomic(self.a + other.a, self.b + other.b)
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(-self.a, -self.b)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, Cyclotomic):
            return Cyclotomic(self.a - other.a, self.b - other.b)
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.a - other, self.b)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(other - self.a, -self.b)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Cyclotomic):
            a, b, c, d = self.a, self.b, other.a, other.b
            if not b and not d:
                return Cyclotomic(a * c)
            bd = b * d
            # w^2 = -1 - w
            return Cyclotomic(a * c - bd, a * d + b * c - bd)
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> Cyclotomic:
        # w -> w^2 = -1 - w
        return Cyclotomic(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        """x * conj(x) = a^2 - ab + b^2, a nonnegative rational."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self) -> Cyclotomic:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = self.conjugate()
        return Cyclotomic(c.a / n, c.b / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic(self.a / other, self.b / other)
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = Cyclotomic(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparisons --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, CycI):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def __complex__(self):
        # w = -1/2 + i*sqrt(3)/2
        return complex(float(self.a) - float(self.b) / 2, float(self.b) * 3**0.5 / 2)

    def __repr__(self):
        return f"Cyclotomic({self})"

    def __str__(self):
        a, b = self.a, self.b
        if not b:
            return _frac_text(a)
        btext = f"{_frac_text(b)}*w"
        if not a:
            return btext
        sign = "" if b < 0 else "+"
        return f"{_frac_text(a)}{sign}{btext}"

    _TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*(\*?\s*w)?")

    @classmethod
    def parse(cls, text: str) -> Cyclotomic:
        """Inverse of ``str``; also accepts "w", "-w" and integer-free forms."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty cyclotomic literal")
        a = b = Fraction(0)
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if m is None or m.end() == pos or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"malformed cyclotomic literal: {text!r}")
            if pos > 0 and not m.group(1):
                raise ValueError(f"malformed cyclotomic literal: {text!r}")
            coeff = Fraction(m.group(2)) if m.group(2) is not None else Fraction(1)
            if m.group(1) == "-":
                coeff = -coeff
            if m.group(3):
                if m.group(2) is not None and not m.group(3).startswith("*"):
                    raise ValueError(f"malformed cyclotomic literal: {text!r}")
                b += coeff
            else:
                a += coeff
            pos = m.end()
        return cls(a, b)


def omega() -> Cyclotomic:
    """The primitive cube root of unity w."""
    return Cyclotomic(0, 1)


class CycI:
    """Element u + v*i of Q(w, i), with u, v in Q(w) and i^2 = -1."""

    __slots__ = ("u", "v")

    def __init__(self, u=0, v=0):
        object.__setattr__(self, "u", Cyclotomic.coerce(u))
        object.__setattr__(self, "v", Cyclotomic.coerce(v))

    def __setattr__(self, name, value):
        raise AttributeError("CycI is immutable")

    @classmethod
    def coerce(cls, x) -> CycI:
        if isinstance(x, CycI):
            return x
        return cls(x)

    @classmethod
    def i(cls) -> CycI:
        return cls(0, 1)

    def __add__(self, other):
        if isinstance(other, (CycI, Cyclotomic, int, Fraction)):
            o = CycI.coerce(other)
            return CycI(self.u + o.u, self.v + o.v)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return CycI(-self.u, -self.v)

    def __sub__(self, other):
        if isinstance(other, (CycI, Cyclotomic, int, Fraction)):
            o = CycI.coerce(other)
            return CycI(self.u - o.u, self.v - o.v)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CycI):
            return CycI(self.u * other.u - self.v * other.v, self.u * other.v + self.v * other.u)
        if isinstance(other, (Cyclotomic, int, Fraction)):
            return CycI(self.u * other, self.v * other)
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> CycI:
        return CycI(self.u.conjugate(), -self.v.conjugate())

    def inverse(self) -> CycI:
        # (u + vi)(u - vi) = u^2 + v^2 lies in Q(w)
        d = self.u * self.u + self.v * self.v
        if not d:
            # u = +-i v is impossible in Q(w) unless both vanish
            raise ZeroDivisionError("inverse of zero in Q(w, i)")
        dinv = d.inverse()
        return CycI(self.u * dinv, -self.v * dinv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycI(self.u / other, self.v / other)
        if isinstance(other, (Cyclotomic, CycI)):
            return self * CycI.coerce(other).inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return CycI.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = CycI(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (CycI, Cyclotomic, int, Fraction)):
            o = CycI.coerce(other)
            return self.u == o.u and self.v == o.v
        return NotImplemented

    def __hash__(self):
        if not self.v:
            return hash(self.u)
        return hash((self.u, self.v))

    def __bool__(self):
        return bool(self.u) or bool(self.v)

    def __complex__(self):
        return complex(self.u) + 1j * complex(self.v)

    def __repr__(self):
        return f"CycI({self})"

    def __str__(self):
        if not self.v:
            return str(self.u)
        return f"({self.u})+({self.v})*i"

    _FORM = re.compile(r"^\((.*)\)\+\((.*)\)\*i$")

    @classmethod
    def parse(cls, text: str) -> CycI:
        s = text.replace(" ", "")
        m = cls._FORM.match(s)
        if m is None:
            # shorthand for pure imaginary values: "i", "-i", "2*i", "(1+w)*i"
            if s in ("i", "+i", "-i"):
                return cls(0, -1 if s[0] == "-" else 1)
            if s.endswith("*i"):
                head = s[:-2]
                if head.startswith("(") and head.endswith(")"):
                    head = head[1:-1]
                return cls(0, Cyclotomic.parse(head))
            return cls(Cyclotomic.parse(s))
        return cls(Cyclotomic.parse(m.group(1)), Cyclotomic.parse(m.group(2)))


def parse_scalar(text: str):
    """Parse a Q(w) or Q(w, i) literal; Q(w, i) values with v = 0 come back as Cyclotomic."""
    x = CycI.parse(text)
    return x.u if not x.v else x


def format_scalar(x) -> str:
    if isinstance(x, (int, Fraction)):
        return str(Cyclotomic(x))
    return str(x)


def _scalar(x):
    if isinstance(x, (Cyclotomic, CycI)):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclotomic(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"not an exact scalar: {x!r}")


# ---------------------------------------------------------------------------
# elimination


def row_echelon(rows: Iterable[dict], key: Callable[[int], object] | None = None):
    """Reduced row echelon form of sparse rows ``{column: scalar}``.

    The pivot of each row is its first nonzero column in ``key`` order
    (ascending column index by default).  Returns a list of ``(pivot, row)``
    with every pivot column cleared from all other rows and each row scaled
    so its pivot entry is 1.
    """
    order = key if key is not None else (lambda c: c)
    pivots: dict[int, dict] = {}
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        # reduce against existing pivots until the leading column is new
        while row:
            lead = min(row, key=order)
            prow = pivots.get(lead)
            if prow is None:
                break
            f = row[lead]
            for c, v in prow.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        if not row:
            continue
        lead = min(row, key=order)
        inv = 1 / row[lead]
        row = {c: v * inv for c, v in row.items()}
        # keep the echelon fully reduced
        for p, prow in pivots.items():
            f = prow.get(lead)
            if f:
                for c, v in row.items():
                    nv = prow.get(c, 0) - f * v
                    if nv:
                        prow[c] = nv
                    else:
                        prow.pop(c, None)
        pivots[lead] = row
    return sorted(pivots.items(), key=lambda item: order(item[0]))


# ---------------------------------------------------------------------------
# matrices


class CycMatrix:
    """Immutable dense rows x cols matrix with exact scalar entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if rows <= 0 or cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        entries = tuple(_scalar(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("CycMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> CycMatrix:
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged or empty matrix")
        return cls(len(rows), len(rows[0]), [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> CycMatrix:
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> CycMatrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def scalar(cls, n: int, value) -> CycMatrix:
        return cls(n, n, [value if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def from_function(cls, rows: int, cols: int, fn) -> CycMatrix:
        return cls(rows, cols, [fn(i, j) for i in range(rows) for j in range(cols)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def _check_same_shape(self, other: CycMatrix):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return CycMatrix(self.rows, self.cols, [x + y for x, y in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return CycMatrix(self.rows, self.cols, [x - y for x, y in zip(self.entries, other.entries)])

    def __neg__(self):
        return CycMatrix(self.rows, self.cols, [-x for x in self.entries])

    def __mul__(self, scalar):
        if isinstance(scalar, CycMatrix):
            return NotImplemented
        s = _scalar(scalar)
        return CycMatrix(self.rows, self.cols, [s * x for x in self.entries])

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return mat_mul(self, other)

    def __pow__(self, n: int):
        if self.rows != self.cols or n < 0:
            raise ValueError("matrix power needs a square matrix and n >= 0")
        result = CycMatrix.identity(self.rows)
        for _ in range(n):
            result = result @ self
        return result

    def transpose(self) -> CycMatrix:
        return CycMatrix.from_function(self.cols, self.rows, lambda i, j: self[j, i])

    @property
    def T(self) -> CycMatrix:
        return self.transpose()

    def adjoint(self) -> CycMatrix:
        """Conjugate transpose."""
        return CycMatrix.from_function(self.cols, self.rows, lambda i, j: self[j, i].conjugate())

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        total = Cyclotomic(0)
        for i in range(self.rows):
            total = self[i, i] + total
        return total

    def is_zero(self) -> bool:
        return not any(self.entries)

    def scalar_value(self):
        """The c with self == c * I, or None if self is not a scalar matrix."""
        if self.rows != self.cols:
            return None
        c = self[0, 0]
        for i in range(self.rows):
            for j in range(self.cols):
                if self[i, j] != (c if i == j else 0):
                    return None
        return c

    def rank(self) -> int:
        return rank(self)

    def inverse(self) -> CycMatrix:
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of a non-square matrix")
        aug = [{**{j: self[i, j] for j in range(n) if self[i, j]}, n + i: Cyclotomic(1)} for i in range(n)]
        ech = row_echelon(aug)
        if len(ech) < n or any(p >= n for p, _ in ech):
            raise ZeroDivisionError("matrix is singular")
        out = [[Cyclotomic(0)] * n for _ in range(n)]
        for p, row in ech:
            for c, v in row.items():
                if c >= n:
                    out[p][c - n] = v
        return CycMatrix.from_rows(out)

    def det(self):
        """Determinant by fraction-producing elimination."""
        n = self.rows
        if n != self.cols:
            raise ValueError("determinant of a non-square matrix")
        m = self.tolist()
        det = Cyclotomic(1)
        for c in range(n):
            p = next((r for r in range(c, n) if m[r][c]), None)
            if p is None:
                return Cyclotomic(0)
            if p != c:
                m[c], m[p] = m[p], m[c]
                det = -det
            det = det * m[c][c]
            inv = 1 / m[c][c]
            for r in range(c + 1, n):
                f = m[r][c] * inv
                if f:
                    m[r] = [x - f * y for x, y in zip(m[r], m[c])]
        return det

    def kron(self, other: CycMatrix) -> CycMatrix:
        r, c = self.rows * other.rows, self.cols * other.cols
        return CycMatrix.from_function(
            r, c,
            lambda i, j: self[i // other.rows, j // other.cols] * other[i % other.rows, j % other.cols],
        )

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"CycMatrix({self.to_nested()})"

    def to_nested(self) -> list[list[str]]:
        return [[format_scalar(x) for x in self.row(i)] for i in range(self.rows)]

    @classmethod
    def from_nested(cls, data) -> CycMatrix:
        if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
            raise ValueError("matrix JSON must be a non-empty list of rows")
        return cls.from_rows([[parse_scalar(str(x)) for x in r] for r in data])

    def to_json(self) -> str:
        return json.dumps(self.to_nested())

    @classmethod
    def from_json(cls, text: str) -> CycMatrix:
        return cls.from_nested(json.loads(text))


def mat_mul(A: CycMatrix, B: CycMatrix) -> CycMatrix:
    """Exact matrix product; raises ValueError on a dimension mismatch."""
    if A.cols != B.rows:
        raise ValueError(f"cannot multiply {A.shape} by {B.shape}")
    n, m, p = A.rows, A.cols, B.cols
    a, b = A.entries, B.entries
    out = []
    for i in range(n):
        arow = a[i * m:(i + 1) * m]
        nz = [(k, x) for k, x in enumerate(arow) if x]
        for j in range(p):
            s = Cyclotomic(0)
            for k, x in nz:
                y = b[k * p + j]
                if y:
                    s = x * y + s
            out.append(s)
    return CycMatrix(n, p, out)


def rank(A: CycMatrix) -> int:
    """Rank over the coefficient field by exact Gaussian elimination."""
    rows = [{j: x for j, x in enumerate(A.row(i)) if x} for i in range(A.rows)]
    return len(row_echelon(rows))


# ---------------------------------------------------------------------------
# three-index tensors


class CycTensor3:
    """Dense N x N x N tensor t[i, j, k] (0-based indices) with exact entries."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries: Sequence):
        if dim <= 0:
            raise ValueError("tensor dimension must be positive")
        entries = tuple(_scalar(e) for e in entries)
        if len(entries) != dim ** 3:
            raise ValueError(f"expected {dim ** 3} entries, got {len(entries)}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("CycTensor3 is immutable")

    @classmethod
    def zeros(cls, dim: int) -> CycTensor3:
        return cls(dim, [0] * dim ** 3)

    @classmethod
    def from_function(cls, dim: int, fn) -> CycTensor3:
        r = range(dim)
        return cls(dim, [fn(i, j, k) for i in r for j in r for k in r])

    @classmethod
    def from_sparse(cls, dim: int, items: dict) -> CycTensor3:
        data = [Cyclotomic(0)] * dim ** 3
        for (i, j, k), v in items.items():
            data[(i * dim + j) * dim + k] = _scalar(v)
        return cls(dim, data)

    def __getitem__(self, ijk):
        i, j, k = ijk
        n = self.dim
        if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
            raise IndexError(ijk)
        return self.entries[(i * n + j) * n + k]

    def indices(self):
        r = range(self.dim)
        return ((i, j, k) for i in r for j in r for k in r)

    def nonzero(self):
        return {idx: v for idx, v in zip(self.indices(), self.entries) if v}

    def __add__(self, other):
        if not isinstance(other, CycTensor3) or other.dim != self.dim:
            return NotImplemented
        return CycTensor3(self.dim, [x + y for x, y in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if not isinstance(other, CycTensor3) or other.dim != self.dim:
            return NotImplemented
        return CycTensor3(self.dim, [x - y for x, y in zip(self.entries, other.entries)])

    def __neg__(self):
        return CycTensor3(self.dim, [-x for x in self.entries])

    def __mul__(self, scalar):
        s = _scalar(scalar)
        return CycTensor3(self.dim, [s * x for x in self.entries])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __eq__(self, other):
        if not isinstance(other, CycTensor3):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __hash__(self):
        return hash((self.dim, self.entries))

    def __repr__(self):
        return f"CycTensor3(dim={self.dim}, nonzero={ {k: str(v) for k, v in self.nonzero().items()} })"

    def to_nested(self) -> list:
        n = self.dim
        return [[[format_scalar(self[i, j, k]) for k in range(n)] for j in range(n)] for i in range(n)]

    @classmethod
    def from_nested(cls, data) -> CycTensor3:
        n = len(data)
        try:
            flat = [parse_scalar(str(data[i][j][k])) for i in range(n) for j in range(n) for k in range(n)]
        except (IndexError, TypeError) as exc:
            raise ValueError("tensor JSON must be an N x N x N nested list") from exc
        return cls(n, flat)
