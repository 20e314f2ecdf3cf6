"""
Exact scalars, dense multilinear tensors and exact linear algebra.

Two number systems are supported: the rationals (``QQ``) and prime fields
(``GF(p)``).  A field is fixed per object; combining data from different
fields raises ``FieldMismatch``.

Tensors are plain numpy arrays.  A k-linear map ``A x ... x A -> W`` is an
array of shape ``(dim A,) * k + (dim W,)`` whose entry ``t[i1, .., ik, m]``
is the ``m``-th coordinate of ``t(e_i1, .., e_ik)``.  Matrices act on column
vectors, so column ``j`` of a matrix is the image of ``e_j``.

Over ``QQ`` arrays have dtype ``object`` and hold ``int`` or ``Fraction``;
over ``GF(p)`` they are ``int64`` arrays reduced into ``[0, p)``.
"""

from fractions import Fraction
from math import gcd
from numbers import Integral, Rational

import numpy as np


# defaults shared by the verification and construction layers
MAX_FAILURES = 32
PRODUCT_DIM_CAP = 12
COCHAIN_ARITY_CAP = 5
SEARCH_BUDGET = 2 ** 20
DEFORMATION_ORDER = 2


class FieldMismatch(ValueError):
    pass


class DimensionError(ValueError):
    pass


class PreconditionError(ValueError):
    """Raised when a construction's input fails a required check.

    ``report`` carries the IdentityReport (or other diagnostic) that failed.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Field:
    """The rationals when ``p`` is None, otherwise the prime field GF(p)."""

    def __init__(self, p=None):
        if p is not None:
            p = int(p)
            if not _is_prime(p):
                raise ValueError("GF(p) needs a prime p, got %d" % p)
        self.p = p

    @property
    def is_rational(self):
        return self.p is None

    @property
    def dtype(self):
        return object if self.p is None else np.int64

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else "GF(%d)" % self.p

    # scalars

    def scalar(self, x):
        """Coerce ``x`` (int, Fraction, "a/b" string) into this field."""
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, (bool, np.bool_)):
            x = int(x)
        if isinstance(x, np.integer):
            x = int(x)
        if isinstance(x, float) or isinstance(x, np.floating):
            raise TypeError("floating point value %r is not exact" % (x,))
        if not isinstance(x, Rational):
            raise TypeError("cannot coerce %r into %r" % (x, self))
        if self.p is None:
            if isinstance(x, Integral):
                return int(x)
            x = Fraction(x)
            return x.numerator if x.denominator == 1 else x
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise ZeroDivisionError(
                "denominator %d vanishes in %r" % (x.denominator, self))
        return (x.numerator * pow(x.denominator, -1, self.p)) % self.p

    def inv(self, x):
        if self.p is None:
            if x == 0:
                raise ZeroDivisionError("inverse of zero")
            return Fraction(1) / x
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def canonical(self, x):
        """Canonical python scalar: int when integral, else reduced Fraction."""
        if self.p is None:
            if isinstance(x, Fraction) and x.denominator == 1:
                return x.numerator
            return int(x) if isinstance(x, Integral) else x
        return int(x) % self.p

    # arrays

    def array(self, data, shape=None):
        """Exact array in canonical form built from nested sequences or an array."""
        a = np.asarray(data, dtype=object)
        if shape is not None:
            a = a.reshape(shape)
        flat = [self.scalar(v) for v in a.reshape(-1)]
        out = np.empty(len(flat), dtype=self.dtype)
        out[:] = flat
        return out.reshape(a.shape)

    def zeros(self, shape):
        if self.p is None:
            out = np.empty(shape, dtype=object)
            out.fill(0)
            return out
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n):
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = 1
        return out

    def reduce(self, a):
        """Bring an arithmetic result back into canonical range."""
        if self.p is None:
            return a
        return np.mod(a, self.p)

    def nonzero(self, a):
        """Boolean mask of nonzero entries."""
        if self.p is None:
            return np.asarray(a != 0, dtype=bool)
        return np.asarray(np.mod(a, self.p) != 0, dtype=bool)

    def is_zero(self, a):
        return not self.nonzero(a).any()

    def equal(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        return a.shape == b.shape and self.is_zero(a - b)

    def matmul(self, a, b):
        a, b = np.asarray(a), np.asarray(b)
        if a.ndim == 2 and b.ndim in (1, 2):
            return self.dot(a, b, ([1], [0]))
        return self.reduce(a @ b)

    def dot(self, a, b, axes):
        """np.tensordot with exact arithmetic that stays fast over QQ."""
        if self.p is not None:
            return np.mod(np.tensordot(a, b, axes=axes), self.p)
        return _qq_tensordot(np.asarray(a), np.asarray(b), axes)

    def power(self, m, k):
        out = self.eye(m.shape[0])
        for _ in range(k):
            out = self.matmul(m, out)
        return out

    def tolist(self, a):
        return [self.canonical(v) for v in np.asarray(a).reshape(-1)]


QQ = Field()

_INT64_SAFE = 2 ** 62
_denominator = np.frompyfunc(lambda v: v.denominator if isinstance(v, Fraction) else 1, 1, 1)
_as_int = np.frompyfunc(int, 1, 1)


def _integral(a):
    """(numerators, common denominator) of an object array of ints and Fractions."""
    if a.size == 0:
        return a, 1
    den = 1
    for d in set(_denominator(a).reshape(-1).tolist()):
        den = den * d // gcd(den, d)
    if den == 1:
        return a, 1
    return _as_int(a * den), den


def _qq_tensordot(a, b, axes):
    na, da = _integral(a)
    nb, db = _integral(b)
    ma = max((abs(int(v)) for v in na.reshape(-1)), default=0)
    mb = max((abs(int(v)) for v in nb.reshape(-1)), default=0)
    k = 1
    for ax in axes[0]:
        k *= a.shape[ax]
    den = da * db
    if ma * mb * max(k, 1) < _INT64_SAFE and den < _INT64_SAFE:
        out = np.tensordot(na.astype(np.int64), nb.astype(np.int64), axes=axes)
        if den == 1:
            return out.astype(object)
        g = np.gcd(out, den)
        num, dd = out // g, den // g
        res = num.astype(object)
        frac = dd != 1
        res[frac] = [Fraction(int(n), int(d)) for n, d in zip(num[frac], dd[frac])]
        return res
    out = np.tensordot(na, nb, axes=axes)
    if den == 1:
        return out
    return np.frompyfunc(lambda v: _fraction_or_int(v, den), 1, 1)(out)


def _fraction_or_int(v, den):
    q = Fraction(v, den)
    return q.numerator if q.denominator == 1 else q


def GF(p):
    return Field(p)


def same_field(*fields):
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatch("mixing %r and %r" % (first, f))
    return first


# matrices and tensors

def compose_linear(a, b, field=QQ):
    """Matrix product ``a @ b`` (the composite map "a after b")."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise DimensionError("cannot compose %s after %s" % (a.shape, b.shape))
    return field.matmul(a, b)


def tensor_eval(t, args, field=QQ):
    """Evaluate the multilinear map ``t`` on coordinate vectors ``args``."""
    t = np.asarray(t)
    k = t.ndim - 1
    if len(args) != k:
        raise DimensionError("tensor has %d slots, got %d arguments" % (k, len(args)))
    out = t
    for slot, v in enumerate(args):
        v = np.asarray(v)
        if v.shape != (t.shape[slot],):
            raise DimensionError(
                "slot %d expects a vector of length %d, got shape %s"
                % (slot, t.shape[slot], v.shape))
        out = field.dot(v, out, ([0], [0]))
    return out


def matrices_to_bilinear(family):
    """Family ``rho[i]`` of matrices -> tensor ``b[i, v, w]`` with b(x, u) = rho(x) u."""
    return np.moveaxis(family, -1, -2)


def bilinear_to_matrices(b):
    return np.moveaxis(b, -1, -2)


# exact Gaussian elimination on sparse rows

def _row_dict(values, field):
    return {j: v for j, v in enumerate(values) if v != 0}


class Echelon:
    """Reduced row echelon form built incrementally from sparse rows."""

    def __init__(self, ncols, field=QQ):
        self.ncols = ncols
        self.field = field
        self.rows = {}      # pivot column -> row dict with 1 at the pivot
        self.order = []     # pivot columns in insertion order

    def _normalise(self, v):
        if self.field.p is None:
            return Fraction(v) if not isinstance(v, (int, Fraction)) else v
        return int(v) % self.field.p

    def reduce(self, row):
        p = self.field.p
        row = dict(row)
        for c in [c for c in row if c in self.rows]:
            coef = row.get(c, 0)
            if coef == 0:
                continue
            for j, v in self.rows[c].items():
                nv = row.get(j, 0) - coef * v
                if p is not None:
                    nv %= p
                if nv == 0:
                    row.pop(j, None)
                else:
                    row[j] = nv
        return row

    def add(self, row):
        """Insert a row; returns True when it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        pivot = min(row)
        inv = self.field.inv(row[pivot])
        p = self.field.p
        if p is None:
            row = {j: Fraction(v) * inv for j, v in row.items()}
            row = {j: (v.numerator if v.denominator == 1 else v) for j, v in row.items()}
        else:
            row = {j: (v * inv) % p for j, v in row.items()}
        for c, other in self.rows.items():
            coef = other.get(pivot, 0)
            if coef == 0:
                continue
            for j, v in row.items():
                nv = other.get(j, 0) - coef * v
                if p is not None:
                    nv %= p
                if nv == 0:
                    other.pop(j, None)
                else:
                    other[j] = nv
        self.rows[pivot] = row
        self.order.append(pivot)
        return True

    @property
    def rank(self):
        return len(self.rows)

    def kernel(self):
        field = self.field
        free = [j for j in range(self.ncols) if j not in self.rows]
        basis = []
        for f in free:
            v = field.zeros(self.ncols)
            v[f] = 1
            for c, row in self.rows.items():
                coef = row.get(f, 0)
                if coef != 0:
                    v[c] = field.canonical(-coef)
            basis.append(v)
        return basis


def echelon(m, field=QQ):
    m = np.asarray(m)
    if m.ndim != 2:
        raise DimensionError("expected a matrix, got shape %s" % (m.shape,))
    e = Echelon(m.shape[1], field)
    for r in m:
        e.add(_row_dict(r, field))
    return e


def rank(m, field=QQ):
    return echelon(m, field).rank


def kernel_basis(m, field=QQ):
    """Basis of the null space of ``m``; empty iff ``m`` is injective."""
    return echelon(m, field).kernel()


def image_basis(m, field=QQ):
    """Basis of the column space, taken from the pivot columns of ``m``."""
    m = np.asarray(m)
    e = echelon(m.T, field)
    return [field.array([field.canonical(row.get(j, 0)) for j in range(m.shape[0])])
            for _, row in sorted(e.rows.items())]


def solve(m, b, field=QQ):
    """One solution ``x`` of ``m x = b`` or None when inconsistent."""
    m = np.asarray(m)
    b = np.asarray(b)
    rows, cols = m.shape
    e = Echelon(cols + 1, field)
    for i in range(rows):
        r = _row_dict(m[i], field)
        if b[i] != 0:
            r[cols] = b[i]
        e.add(r)
    if cols in e.rows:
        return None
    x = field.zeros(cols)
    for c, row in e.rows.items():
        x[c] = field.canonical(row.get(cols, 0))
    return x


# batched multilinear evaluation over basis tuples

class Term:
    """A vector-valued expression in named basis variables.

    ``data`` has one axis per variable (the basis index the variable takes)
    followed by a component axis.  Evaluating an identity as a Term yields
    its value on every basis tuple simultaneously.
    """

    __slots__ = ("data", "names", "field", "basis")

    def __init__(self, data, names, field, basis=False):
        self.data = data
        self.names = tuple(names)
        self.field = field
        self.basis = basis

    @property
    def dim(self):
        return self.data.shape[-1]

    def _aligned(self, other):
        if not isinstance(other, Term):
            raise TypeError("cannot combine Term with %r" % type(other))
        same_field(self.field, other.field)
        if set(other.names) != set(self.names) or len(other.names) != len(self.names):
            raise ValueError("terms in different variables: %s vs %s"
                             % (self.names, other.names))
        if other.dim != self.dim:
            raise DimensionError("adding vectors of dims %d and %d" % (self.dim, other.dim))
        perm = [other.names.index(n) for n in self.names] + [len(self.names)]
        return np.transpose(other.data, perm)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return Term(self.field.reduce(self.data + self._aligned(other)), self.names, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return Term(self.field.reduce(self.data - self._aligned(other)), self.names, self.field)

    def __neg__(self):
        return Term(self.field.reduce(-self.data), self.names, self.field)

    def __rmul__(self, c):
        c = self.field.scalar(c)
        return Term(self.field.reduce(self.data * c), self.names, self.field)

    def values(self, order=None):
        """Array with variable axes in ``order`` (default: declaration order)."""
        if order is None:
            return self.data
        perm = [self.names.index(n) for n in order] + [len(self.names)]
        return np.transpose(self.data, perm)


def var(name, dim, field=QQ):
    return Term(field.eye(dim), (name,), field, basis=True)


def const(vector, field=QQ):
    return Term(field.array(vector), (), field)


def apply(tensor, *args):
    """Multilinear map applied to Terms; variables of the result concatenate."""
    if not args:
        raise ValueError("apply needs at least one argument")
    field = args[0].field
    for a in args[1:]:
        same_field(field, a.field)
    k = tensor.ndim - 1
    if len(args) != k:
        raise DimensionError("map with %d slots applied to %d terms" % (k, len(args)))
    names = []
    for a in args:
        names.extend(a.names)
    if len(set(names)) != len(names):
        raise ValueError("variable repeated in a multilinear term: %s" % (names,))
    # labels of the axes of `cur`; slot axes are ints, variable axes are names
    cur = tensor
    labels = list(range(k)) + ["out"]
    for slot, a in enumerate(args):
        if a.dim != tensor.shape[slot]:
            raise DimensionError("slot %d expects dim %d, got %d"
                                 % (slot, tensor.shape[slot], a.dim))
        pos = labels.index(slot)
        if a.basis:
            labels[pos] = a.names[0]
            continue
        cur = field.dot(a.data, cur, ([a.data.ndim - 1], [pos]))
        labels = list(a.names) + labels[:pos] + labels[pos + 1:]
    perm = [labels.index(n) for n in names] + [labels.index("out")]
    return Term(np.transpose(cur, perm), names, field)


def linear(matrix, term):
    """Apply a matrix to a Term."""
    matrix = np.asarray(matrix)
    n = matrix.shape[0]
    if matrix.shape == (n, n) and term.dim == n and term.field.equal(matrix, term.field.eye(n)):
        return term
    return apply(matrix.T, term)


def cyclic(f, a, b, c):
    """f(a, b, c) + f(b, c, a) + f(c, a, b)."""
    return f(a, b, c) + f(b, c, a) + f(c, a, b)
