"""Exact scalars, binary forms and dense matrices over Q and F_p.

Rationals are :class:`fractions.Fraction`; prime-field residues are
:class:`ModP`.  Both support the ordinary arithmetic operators, so the
geometric code above this module is written once for either field.  Mixing
residues of different moduli, or residues with non-integral rationals, raises
:class:`FieldMismatchError`.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from .errors import FieldMismatchError, PreconditionError

MAX_MODULUS = 2**31


# ---------------------------------------------------------------------------
# Scalars and fields
# ---------------------------------------------------------------------------


class ModP:
    """A residue class modulo a prime ``p``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldMismatchError(f"F_{self.p} combined with F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            if other.denominator == 1:
                return other.numerator
            raise FieldMismatchError(f"F_{self.p} combined with rational {other}")
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return ModP(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            if self.v == 0:
                raise ZeroDivisionError(f"division by zero in F_{self.p}")
            return ModP(pow(pow(self.v, -1, self.p), -e, self.p), self.p)
        return ModP(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v} (mod {self.p})"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.4e14
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field Q; elements are ``Fraction``."""

    name = "Q"
    characteristic = 0
    modulus = None

    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, ModP):
            raise FieldMismatchError(f"residue {x!r} used as a rational")
        if isinstance(x, Fraction):
            return x
        return Fraction(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The field F_p for a prime ``p < 2**31``; elements are :class:`ModP`."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not 2 <= p < MAX_MODULUS or not _is_prime(p):
            raise PreconditionError(f"modulus must be a prime below 2^31, got {p!r}")
        self.p = p
        self.zero = ModP(0, p)
        self.one = ModP(1, p)

    name = property(lambda self: f"Fp:{self.p}")
    characteristic = property(lambda self: self.p)
    modulus = property(lambda self: self.p)

    def __call__(self, x) -> ModP:
        if isinstance(x, ModP):
            if x.p != self.p:
                raise FieldMismatchError(f"F_{x.p} residue used in F_{self.p}")
            return x
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise FieldMismatchError(f"rational {x} used in F_{self.p}")
            return ModP(x.numerator, self.p)
        if isinstance(x, str):
            return ModP(int(x), self.p)
        return ModP(x, self.p)

    def elements(self):
        return (ModP(v, self.p) for v in range(self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"F_{self.p}"


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


Field = RationalField | PrimeField


def parse_field(text: str) -> Field:
    """Parse ``"Q"`` or ``"Fp:<p>"``."""
    text = text.strip()
    if text in ("Q", "QQ"):
        return QQ
    if text.startswith("Fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise PreconditionError(f"bad field descriptor {text!r}") from None
        return GF(p)
    raise PreconditionError(f"bad field descriptor {text!r}; expected Q or Fp:<p>")


def field_of(x) -> Field:
    if isinstance(x, ModP):
        return GF(x.p)
    return QQ


def infer_field(values) -> Field:
    """The unique field of ``values``; plain ints are compatible with any field."""
    field = None
    has_fraction = False
    for x in values:
        if isinstance(x, ModP):
            if field is not None and field.p != x.p:
                raise FieldMismatchError(f"entries from F_{field.p} and F_{x.p}")
            field = GF(x.p)
        elif isinstance(x, Fraction) and x.denominator != 1:
            has_fraction = True
    if field is None:
        return QQ
    if has_fraction:
        raise FieldMismatchError(f"rational entries mixed with F_{field.p} entries")
    return field


def canonical_vector(vec: Sequence, field: Field) -> tuple:
    """Projective normal form: primitive integers with positive lead over Q,
    lead coefficient 1 over F_p.  The zero vector is returned unchanged."""
    vec = [field(x) for x in vec]
    lead = next((x for x in vec if x != 0), None)
    if lead is None:
        return tuple(vec)
    if field is QQ:
        den = 1
        for x in vec:
            den = den * x.denominator // math.gcd(den, x.denominator)
        ints = [x.numerator * (den // x.denominator) for x in vec]
        g = math.gcd(*ints)
        if lead < 0:
            g = -g
        return tuple(Fraction(v // g) for v in ints)
    inv = 1 / lead
    return tuple(x * inv for x in vec)


# ---------------------------------------------------------------------------
# Row reduction
# ---------------------------------------------------------------------------


class Rref(NamedTuple):
    matrix: "Matrix"
    rank: int
    pivots: tuple[int, ...]


def _primitive(row: list[int]) -> list[int]:
    g = math.gcd(*row)
    return [v // g for v in row] if g > 1 else row


def _cancel(target: list[int], pivot_row: list[int], c: int) -> list[int]:
    """Integer combination of the two rows with a zero in column c, made primitive."""
    a, b = pivot_row[c], target[c]
    g = math.gcd(a, b)
    a, b = a // g, b // g
    return _primitive([a * x - b * y for x, y in zip(target, pivot_row)])


def _rref_rational(rows: list[list[Fraction]], ncols: int, reduce: bool = True):
    # Fraction-free elimination on primitive integer rows: forward pass, then
    # back substitution.  Keeping rows primitive holds entries near the size
    # of the final answer.
    R = []
    for r in rows:
        den = 1
        for x in r:
            if x.denominator != 1:
                den = den * x.denominator // math.gcd(den, x.denominator)
        R.append(_primitive([x.numerator * (den // x.denominator) for x in r]))
    m = len(R)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if R[i][c] != 0), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        for i in range(r + 1, m):
            if R[i][c] != 0:
                R[i] = _cancel(R[i], R[r], c)
        pivots.append(c)
        r += 1
    if not reduce:
        return None, pivots
    for i in range(r - 1, -1, -1):
        c = pivots[i]
        for j in range(i):
            if R[j][c] != 0:
                R[j] = _cancel(R[j], R[i], c)
    out = []
    for i in range(m):
        if i < r:
            a = R[i][pivots[i]]
            out.append([Fraction(v, a) for v in R[i]])
        else:
            out.append([Fraction(0)] * ncols)
    return out, pivots


def _rref_modp(rows: list[list[int]], ncols: int, p: int):
    R = [list(r) for r in rows]
    m = len(R)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if R[i][c] % p), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = pow(R[r][c], -1, p)
        pr = [v * inv % p for v in R[r]]
        R[r] = pr
        for i in range(m):
            if i == r:
                continue
            b = R[i][c] % p
            if b == 0:
                continue
            R[i] = [(x - b * y) % p for x, y in zip(R[i], pr)]
        pivots.append(c)
        r += 1
    for i in range(r, m):
        R[i] = [0] * ncols
    return R, pivots


def rref_rows(rows: Sequence[Sequence], ncols: int, field: Field):
    """Reduced row echelon form of raw rows; returns (rows, pivots).

    Rows of the result are field elements.  Zero rows are kept at the bottom.
    """
    if field is QQ:
        return _rref_rational([[QQ(x) for x in r] for r in rows], ncols)
    p = field.p
    ints = [[x.v if isinstance(x, ModP) else int(x) for x in r] for r in rows]
    R, piv = _rref_modp(ints, ncols, p)
    return [[ModP(v, p) for v in r] for r in R], piv


def rank_rows(rows: Sequence[Sequence], ncols: int, field: Field) -> int:
    """Rank of raw rows, without materialising the reduced matrix as objects."""
    if not rows:
        return 0
    if field is QQ:
        return len(_rref_rational([[QQ(x) for x in r] for r in rows], ncols, reduce=False)[1])
    p = field.p
    ints = [[x.v if isinstance(x, ModP) else int(x) for x in r] for r in rows]
    return len(_rref_modp(ints, ncols, p)[1])


def kernel_rows(rows: Sequence[Sequence], ncols: int, field: Field) -> list[tuple]:
    """Canonical basis of the right null space, one vector per free column."""
    if rows:
        R, pivots = rref_rows(rows, ncols, field)
    else:
        R, pivots = [], []
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for i, c in enumerate(pivots):
            v[c] = -R[i][f]
        basis.append(canonical_vector(v, field))
    return basis


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


class Matrix:
    """Immutable dense matrix with entries in a single field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, rows, field: Field | None = None):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise PreconditionError("matrix dimensions must be positive")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise PreconditionError("ragged matrix rows")
        if field is None:
            field = infer_field(x for r in rows for x in r)
        self.field = field
        self.rows = tuple(tuple(field(x) for x in r) for r in rows)
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int, field: Field) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def from_columns(cls, cols, field: Field | None = None) -> "Matrix":
        cols = [list(c) for c in cols]
        return cls([list(r) for r in zip(*cols)], field)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self.rows[i][j]
        return self.rows[idx]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    @property
    def T(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)), self.field)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{self.field}]({body})"

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise PreconditionError("shape mismatch")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.field)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise PreconditionError("shape mismatch")
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.field)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix([[c * x for x in r] for r in self.rows], self.field)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise PreconditionError(f"cannot multiply {self.shape} by {other.shape}")
            if self.field != other.field:
                raise FieldMismatchError(f"{self.field} matrix times {other.field} matrix")
            cols = list(zip(*other.rows))
            return Matrix(
                [[sum((a * b for a, b in zip(r, c)), self.field.zero) for c in cols] for r in self.rows],
                self.field,
            )
        vec = [self.field(x) for x in other]
        if len(vec) != self.ncols:
            raise PreconditionError("vector length mismatch")
        return tuple(sum((a * b for a, b in zip(r, vec)), self.field.zero) for r in self.rows)

    def rref(self) -> Rref:
        return mat_rref(self)

    def rank(self) -> int:
        return rank_rows(self.rows, self.ncols, self.field)

    def kernel(self) -> list[tuple]:
        return mat_kernel(self)

    def det(self):
        if self.nrows != self.ncols:
            raise PreconditionError("determinant of a non-square matrix")
        return _det(self.rows, self.field)

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise PreconditionError("inverse of a non-square matrix")
        aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.rows)]
        R, piv = rref_rows(aug, 2 * n, self.field)
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix([r[n:] for r in R], self.field)

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows


def _det(rows, field: Field):
    n = len(rows)
    if field is QQ:
        # Bareiss over integers after clearing row denominators
        den = Fraction(1)
        R = []
        for r in rows:
            d = 1
            for x in r:
                d = d * x.denominator // math.gcd(d, x.denominator)
            den *= d
            R.append([x.numerator * (d // x.denominator) for x in r])
        sign = 1
        prev = 1
        for c in range(n - 1):
            if R[c][c] == 0:
                swap = next((i for i in range(c + 1, n) if R[i][c] != 0), None)
                if swap is None:
                    return Fraction(0)
                R[c], R[swap] = R[swap], R[c]
                sign = -sign
            for i in range(c + 1, n):
                for j in range(c + 1, n):
                    R[i][j] = (R[i][j] * R[c][c] - R[i][c] * R[c][j]) // prev
            prev = R[c][c]
        return Fraction(sign * R[n - 1][n - 1]) / den
    p = field.p
    R = [[x.v for x in r] for r in rows]
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if R[i][c]), None)
        if piv is None:
            return field.zero
        if piv != c:
            R[c], R[piv] = R[piv], R[c]
            det = -det
        det = det * R[c][c] % p
        inv = pow(R[c][c], -1, p)
        for i in range(c + 1, n):
            f = R[i][c] * inv % p
            if f:
                R[i] = [(a - f * b) % p for a, b in zip(R[i], R[c])]
    return ModP(det, p)


def mat_rref(M: Matrix) -> Rref:
    """Reduced row echelon form, rank and pivot columns of ``M``."""
    R, piv = rref_rows(M.rows, M.ncols, M.field)
    return Rref(Matrix(R, M.field), len(piv), tuple(piv))


def mat_kernel(M: Matrix) -> list[tuple]:
    """Canonical basis of the right null space of ``M`` (possibly empty).

    Over Q the vectors are primitive integer vectors with positive leading
    entry; over F_p the leading entry is 1.
    """
    return kernel_rows(M.rows, M.ncols, M.field)


# ---------------------------------------------------------------------------
# Binary forms
# ---------------------------------------------------------------------------


def _strip(a: list) -> list:
    i = 0
    while i < len(a) and a[i] == 0:
        i += 1
    return a[i:]


def _udivmod(a: list, b: list, field: Field):
    """Division of univariate polynomials given by descending coefficients."""
    a = _strip(list(a))
    b = _strip(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    inv = field.one / b[0]
    q = []
    r = list(a)
    for i in range(len(a) - len(b) + 1):
        c = r[i] * inv
        q.append(c)
        if c != 0:
            for j in range(1, len(b)):
                r[i + j] = r[i + j] - c * b[j]
    rem = _strip(r[len(a) - len(b) + 1 :])
    return q, rem


def _ugcd(a: list, b: list, field: Field) -> list:
    a = _strip(list(a))
    b = _strip(list(b))
    while b:
        _, r = _udivmod(a, b, field)
        a, b = b, r
    if not a:
        return []
    inv = field.one / a[0]
    return [x * inv for x in a]


class Poly2:
    """Binary form of degree ``a`` in (s, t), coefficients by descending s-power.

    ``Poly2([c0, ..., ca])`` is ``sum c_j s^(a-j) t^j``.  The zero form keeps
    its nominal degree; :attr:`is_zero` flags it explicitly.
    """

    __slots__ = ("coeffs", "field", "is_zero")

    def __init__(self, coeffs, field: Field | None = None):
        coeffs = list(coeffs)
        if not coeffs:
            raise PreconditionError("a binary form needs at least one coefficient")
        if field is None:
            field = infer_field(coeffs)
        self.field = field
        self.coeffs = tuple(field(c) for c in coeffs)
        self.is_zero = all(c == 0 for c in self.coeffs)

    @classmethod
    def zero(cls, degree: int, field: Field) -> "Poly2":
        return cls([0] * (degree + 1), field)

    @classmethod
    def monomial(cls, degree: int, j: int, field: Field, c=1) -> "Poly2":
        """``c * s^(degree-j) t^j``."""
        out = [0] * (degree + 1)
        out[j] = c
        return cls(out, field)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __repr__(self):
        a = self.degree
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "*".join(x for x in (_pow("s", a - j), _pow("t", j)) if x)
            terms.append(f"{c}*{mono}" if mono else f"{c}")
        return "Poly2(" + (" + ".join(terms) if terms else "0") + ")"

    def __eq__(self, other):
        return isinstance(other, Poly2) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __call__(self, s, t):
        s = self.field(s)
        t = self.field(t)
        a = self.degree
        acc = self.field.zero
        spow = [self.field.one]
        for _ in range(a):
            spow.append(spow[-1] * s)
        tp = self.field.one
        for j, c in enumerate(self.coeffs):
            if c != 0:
                acc = acc + c * spow[a - j] * tp
            tp = tp * t
        return acc

    def __add__(self, other: "Poly2") -> "Poly2":
        if not isinstance(other, Poly2):
            return NotImplemented
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if other.degree != self.degree:
            raise PreconditionError("sum of binary forms of different degrees")
        return Poly2([a + b for a, b in zip(self.coeffs, other.coeffs)], self.field)

    def __neg__(self) -> "Poly2":
        return Poly2([-c for c in self.coeffs], self.field)

    def __sub__(self, other: "Poly2") -> "Poly2":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly2):
            if self.field != other.field:
                raise FieldMismatchError(f"{self.field} form times {other.field} form")
            out = [self.field.zero] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b != 0:
                        out[i + j] = out[i + j] + a * b
            return Poly2(out, self.field)
        c = self.field(other)
        return Poly2([c * x for x in self.coeffs], self.field)

    __rmul__ = __mul__

    def leading(self):
        """First nonzero coefficient (zero for the zero form)."""
        return next((c for c in self.coeffs if c != 0), self.field.zero)

    def monic(self) -> "Poly2":
        if self.is_zero:
            return self
        inv = self.field.one / self.leading()
        return Poly2([c * inv for c in self.coeffs], self.field)

    def t_order(self) -> int:
        """Multiplicity of the root (1:0), i.e. the power of t dividing the form."""
        return next(i for i, c in enumerate(self.coeffs) if c != 0)

    def dehomogenize(self) -> list:
        """Descending coefficients of f(x, 1) / x-free part: drops leading zeros."""
        return list(self.coeffs[self.t_order():])

    @classmethod
    def homogenize(cls, poly: list, t_power: int, field: Field) -> "Poly2":
        return cls([0] * t_power + list(poly), field)

    def divmod_by(self, other: "Poly2"):
        """Return (q, exact) with ``self = q * other`` when ``exact`` is true."""
        if other.is_zero:
            raise ZeroDivisionError("division by the zero form")
        if self.is_zero:
            return Poly2.zero(max(self.degree - other.degree, 0), self.field), self.degree >= other.degree
        ms, mo = self.t_order(), other.t_order()
        if ms < mo:
            return None, False
        q, r = _udivmod(self.dehomogenize(), other.dehomogenize(), self.field)
        if r or not q:
            return None, False
        return Poly2.homogenize(q, ms - mo, self.field), True

    def divides(self, other: "Poly2") -> bool:
        return other.divmod_by(self)[1]

    def exact_div(self, other: "Poly2") -> "Poly2":
        q, ok = self.divmod_by(other)
        if not ok:
            raise PreconditionError(f"{other} does not divide {self}")
        return q


def _pow(var: str, e: int) -> str:
    return "" if e == 0 else var if e == 1 else f"{var}^{e}"


def poly_gcd(f: Poly2, g: Poly2) -> Poly2:
    """Monic greatest common divisor of two binary forms."""
    if f.field != g.field:
        raise FieldMismatchError(f"gcd of {f.field} and {g.field} forms")
    if f.is_zero and g.is_zero:
        raise PreconditionError("gcd of two zero forms")
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()
    m = min(f.t_order(), g.t_order())
    u = _ugcd(f.dehomogenize(), g.dehomogenize(), f.field)
    return Poly2.homogenize(u, m, f.field)


def gcd_all(forms) -> Poly2 | None:
    """gcd of every nonzero form in ``forms``; None if all are zero."""
    g = None
    for f in forms:
        if f.is_zero:
            continue
        g = f.monic() if g is None else poly_gcd(g, f)
        if g.degree == 0:
            break
    return g


class RootReport(NamedTuple):
    roots: tuple  # ((s, t), multiplicity) pairs, canonical and sorted
    residual_degree: int


def _sort_key(pt):
    return tuple(x.v if isinstance(x, ModP) else (x.numerator, x.denominator) for x in pt)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n < 10**12:
        small, large = [], []
        i = 1
        while i * i <= n:
            if n % i == 0:
                small.append(i)
                if i * i != n:
                    large.append(n // i)
            i += 1
        return small + large[::-1]
    from sympy import divisors

    return [int(x) for x in divisors(n)]


def _rational_roots(poly: list[Fraction]) -> list[Fraction]:
    """Distinct rational roots of a univariate polynomial (descending coeffs)."""
    den = 1
    for x in poly:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [x.numerator * (den // x.denominator) for x in poly]
    g = math.gcd(*ints)
    ints = [v // g for v in ints]
    deg = len(ints) - 1
    if deg == 1:
        return [Fraction(-ints[1], ints[0])]
    if deg == 2:
        a, b, c = ints
        disc = b * b - 4 * a * c
        if disc < 0:
            return []
        r = math.isqrt(disc)
        if r * r != disc:
            return []
        return sorted({Fraction(-b + r, 2 * a), Fraction(-b - r, 2 * a)})
    lead, const = ints[0], ints[-1]
    found = []
    for num in _divisors(const):
        for den_ in _divisors(lead):
            for cand in (Fraction(num, den_), Fraction(-num, den_)):
                if cand in found:
                    continue
                acc = 0
                for c in poly:
                    acc = acc * cand + c
                if acc == 0:
                    found.append(cand)
    return sorted(found)


def poly_roots(f: Poly2) -> RootReport:
    """Base-field roots of a nonzero binary form, with multiplicity.

    Over F_p the search is exhaustive over P^1(F_p).  Over Q the integer
    content is removed and candidates are bounded by divisors of the extreme
    coefficients.  Roots outside the base field only show up in
    ``residual_degree``.
    """
    if f.is_zero:
        raise PreconditionError("roots of the zero form")
    field = f.field
    roots = []
    m = f.t_order()
    if m:
        roots.append(((field.one, field.zero), m))
    rest = f.dehomogenize()
    # factor x = s/t, i.e. the root (0:1)
    k = 0
    while len(rest) > 1 and rest[-1] == 0:
        rest.pop()
        k += 1
    if k:
        roots.append(((field.zero, field.one), k))
    if field is QQ:
        candidates = _rational_roots(rest) if len(rest) > 1 else []
    else:
        p = field.p
        ints = [c.v for c in rest]
        if len(ints) == 2:
            candidates = [ModP(-ints[1] * pow(ints[0], -1, p), p)]
        elif len(ints) > 2:
            candidates = []
            for x in range(1, p):
                acc = 0
                for c in ints:
                    acc = (acc * x + c) % p
                if acc == 0:
                    candidates.append(ModP(x, p))
                    if len(candidates) == len(ints) - 1:
                        break
        else:
            candidates = []
    for x in candidates:
        mult = 0
        while len(rest) > 1:
            q, r = _udivmod(rest, [field.one, -x], field)
            if r:
                break
            rest = q
            mult += 1
        if mult:
            roots.append((canonical_vector((x, field.one), field), mult))
    roots = [(canonical_vector(r, field), mlt) for r, mlt in roots]
    roots.sort(key=lambda rm: _sort_key(rm[0]))
    return RootReport(tuple(roots), len(rest) - 1)


# ---------------------------------------------------------------------------
# Polynomial matrices
# ---------------------------------------------------------------------------


def poly_det(M: Sequence[Sequence[Poly2]]) -> Poly2:
    """Determinant of a square matrix of binary forms by cofactor expansion."""
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    acc = None
    for j in range(n):
        e = M[0][j]
        if e.is_zero:
            continue
        sub = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = e * poly_det(sub)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        # homogeneous matrices give every permutation the same degree
        return Poly2.zero(sum(M[i][i].degree for i in range(n)), M[0][0].field)
    return acc


def poly_minors(M: Sequence[Sequence[Poly2]], r: int) -> list[Poly2]:
    """All r x r minors, in lexicographic order of (row tuple, column tuple)."""
    nr = len(M)
    nc = len(M[0]) if nr else 0
    if not 1 <= r <= min(nr, nc):
        raise PreconditionError(f"minor size {r} out of range for a {nr}x{nc} matrix")
    out = []
    for rows in itertools.combinations(range(nr), r):
        for cols in itertools.combinations(range(nc), r):
            out.append(poly_det([[M[i][j] for j in cols] for i in rows]))
    return out
