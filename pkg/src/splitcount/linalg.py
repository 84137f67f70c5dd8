"""Matrices and canonical-form subspaces over F_q, with exhaustive enumeration.

A subspace of F_q^N is stored as its reduced-row-echelon basis, which makes
equality and hashing exact and representation-independent.  The enumeration
routines generate every RREF pattern directly (pivot-column subsets in
colexicographic order, free entries in odometer order), so streams are
deterministic and already canonical.

Operators act on column vectors: the image of a row-space basis B under M
is the row space of B @ M^T.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator

from . import _backend
from .errors import DimensionMismatch, InvalidParameters, SingularOperator
from .fields import FieldSpec, ModulusPoly

__all__ = [
    "Mat",
    "Subspace",
    "companion_operator",
    "span",
    "subspace_sum",
    "intersect",
    "image",
    "preimage",
    "kernel_space",
    "subspaces",
    "subspaces_containing",
    "subspaces_within",
]


def _rref(field: FieldSpec, data: bytearray, nrows: int, ncols: int):
    add, mul, neg, inv = field.tables
    return _backend.active().rref_in_place(data, nrows, ncols, add, mul, neg, inv, field.q)


def _mat_mul(field: FieldSpec, a, ar, ac, b, br, bc) -> bytes:
    if ac != br:
        raise DimensionMismatch(f"cannot multiply {ar}x{ac} by {br}x{bc}")
    add, mul, _, _ = field.tables
    return _backend.active().mat_mul(a, ar, ac, b, br, bc, add, mul, field.q)


class Mat:
    """Rectangular matrix over a FieldSpec, stored as flat row-major bytes."""

    __slots__ = ("field", "nrows", "ncols", "data", "_inv", "_t")

    def __init__(self, field: FieldSpec, nrows: int, ncols: int, data: bytes):
        if len(data) != nrows * ncols:
            raise DimensionMismatch("data length does not match shape")
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.data = bytes(data)
        self._inv = None
        self._t = None

    @classmethod
    def from_rows(cls, field: FieldSpec, rows) -> "Mat":
        rows = [tuple(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        flat = bytearray(nrows * ncols)
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                if not 0 <= v < field.q:
                    raise InvalidParameters(f"{v} is not an element of F_{field.q}")
                flat[i * ncols + j] = v
        return cls(field, nrows, ncols, bytes(flat))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Mat":
        flat = bytearray(n * n)
        for i in range(n):
            flat[i * n + i] = 1
        return cls(field, n, n, bytes(flat))

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        n = self.ncols
        return tuple(tuple(self.data[i * n : (i + 1) * n]) for i in range(self.nrows))

    def transpose(self) -> "Mat":
        if self._t is None:
            flat = bytearray(self.nrows * self.ncols)
            for i in range(self.nrows):
                for j in range(self.ncols):
                    flat[j * self.nrows + i] = self.data[i * self.ncols + j]
            self._t = Mat(self.field, self.ncols, self.nrows, bytes(flat))
        return self._t

    def __matmul__(self, other: "Mat") -> "Mat":
        out = _mat_mul(
            self.field, self.data, self.nrows, self.ncols, other.data, other.nrows, other.ncols
        )
        return Mat(self.field, self.nrows, other.ncols, out)

    def __pow__(self, n: int) -> "Mat":
        if self.nrows != self.ncols:
            raise DimensionMismatch("power of a non-square matrix")
        result = Mat.identity(self.field, self.nrows)
        for _ in range(n):
            result = result @ self
        return result

    def rank(self) -> int:
        buf = bytearray(self.data)
        r, _ = _rref(self.field, buf, self.nrows, self.ncols)
        return r

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self) -> "Mat":
        """Inverse of a square matrix; raises SingularOperator otherwise."""
        if self._inv is not None:
            return self._inv
        n = self.nrows
        if n != self.ncols:
            raise DimensionMismatch("inverse of a non-square matrix")
        buf = bytearray(n * 2 * n)
        for i in range(n):
            buf[i * 2 * n : i * 2 * n + n] = self.data[i * n : (i + 1) * n]
            buf[i * 2 * n + n + i] = 1
        rank, pivots = _rref(self.field, buf, n, 2 * n)
        if rank < n or any(p >= n for p in pivots):
            raise SingularOperator("matrix is singular")
        flat = bytearray(n * n)
        for i in range(n):
            flat[i * n : (i + 1) * n] = buf[i * 2 * n + n : (i + 1) * 2 * n]
        self._inv = Mat(self.field, n, n, bytes(flat))
        return self._inv

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return (
            self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.field, self.nrows, self.ncols, self.data))

    def __repr__(self) -> str:
        return f"Mat(F_{self.field.q}, {list(map(list, self.rows))})"


def companion_operator(f: ModulusPoly) -> Mat:
    """Matrix of multiplication by the residue of x in F_q[x]/(f).

    In the power basis 1, x, ..., x^(N-1) this is the companion matrix:
    subdiagonal ones, last column the negated low-order coefficients of f.
    """
    field = f.field
    n = f.degree
    flat = bytearray(n * n)
    for i in range(n - 1):
        flat[(i + 1) * n + i] = 1
    for i in range(n):
        flat[i * n + (n - 1)] = field.neg(f.coeffs[i])
    return Mat(field, n, n, bytes(flat))


class Subspace:
    """A subspace of F_q^N held in canonical reduced-row-echelon form.

    Instances compare and hash by their canonical basis bytes: two values
    are equal exactly when they are the same subspace.  Construct through
    span() or the enumeration generators, which guarantee canonical data.
    """

    __slots__ = ("field", "ambient", "data", "pivots")

    def __init__(self, field: FieldSpec, ambient: int, data: bytes, pivots: tuple[int, ...]):
        self.field = field
        self.ambient = ambient
        self.data = data
        self.pivots = pivots

    @classmethod
    def zero(cls, field: FieldSpec, ambient: int) -> "Subspace":
        return cls(field, ambient, b"", ())

    @classmethod
    def full(cls, field: FieldSpec, ambient: int) -> "Subspace":
        return span(field, Mat.identity(field, ambient).rows, ambient)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        n = self.ambient
        return tuple(tuple(self.data[i * n : (i + 1) * n]) for i in range(self.dim))

    def basis_matrix(self) -> Mat:
        return Mat(self.field, self.dim, self.ambient, self.data)

    def contains(self, other: "Subspace") -> bool:
        _check_compatible(self, other)
        if other.dim > self.dim:
            return False
        return _stacked_rank(self, other) == self.dim

    def contains_vector(self, vec) -> bool:
        vec = tuple(vec)
        if len(vec) != self.ambient:
            raise DimensionMismatch("vector length differs from ambient dimension")
        buf = bytearray(self.data + bytes(vec))
        rank, _ = _rref(self.field, buf, self.dim + 1, self.ambient)
        return rank == self.dim

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient == other.ambient
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.data))

    def __repr__(self) -> str:
        return f"Subspace(F_{self.field.q}^{self.ambient}, dim={self.dim})"


def _check_compatible(w1: Subspace, w2: Subspace):
    if w1.field != w2.field or w1.ambient != w2.ambient:
        raise DimensionMismatch("subspaces live in different ambient spaces")


def _stacked_rank(w1: Subspace, w2: Subspace) -> int:
    buf = bytearray(w1.data + w2.data)
    rank, _ = _rref(w1.field, buf, w1.dim + w2.dim, w1.ambient)
    return rank


def span(field: FieldSpec, rows, ambient: int | None = None) -> Subspace:
    """Canonical subspace spanned by the given row vectors."""
    rows = [tuple(r) for r in rows]
    if ambient is None:
        if not rows:
            raise InvalidParameters("ambient dimension required for an empty row list")
        ambient = len(rows[0])
    if any(len(r) != ambient for r in rows):
        raise DimensionMismatch("row length differs from ambient dimension")
    flat = bytearray(len(rows) * ambient)
    for i, r in enumerate(rows):
        for j, v in enumerate(r):
            if field.e == 1:
                v %= field.q
            elif not 0 <= v < field.q:
                raise InvalidParameters(f"{v} is not an element of F_{field.q}")
            flat[i * ambient + j] = v
    rank, pivots = _rref(field, flat, len(rows), ambient)
    return Subspace(field, ambient, bytes(flat[: rank * ambient]), pivots)


def _span_flat(field: FieldSpec, flat: bytearray, nrows: int, ambient: int) -> Subspace:
    rank, pivots = _rref(field, flat, nrows, ambient)
    return Subspace(field, ambient, bytes(flat[: rank * ambient]), pivots)


def subspace_sum(w1: Subspace, w2: Subspace) -> Subspace:
    """W1 + W2."""
    _check_compatible(w1, w2)
    return _span_flat(w1.field, bytearray(w1.data + w2.data), w1.dim + w2.dim, w1.ambient)


def intersect(w1: Subspace, w2: Subspace) -> Subspace:
    """W1 intersected with W2, by the Zassenhaus block trick."""
    _check_compatible(w1, w2)
    if w1.dim == 0 or w2.dim == 0:
        return Subspace.zero(w1.field, w1.ambient)
    n = w1.ambient
    k1, k2 = w1.dim, w2.dim
    buf = bytearray((k1 + k2) * 2 * n)
    for i in range(k1):
        row = w1.data[i * n : (i + 1) * n]
        buf[i * 2 * n : i * 2 * n + n] = row
        buf[i * 2 * n + n : (i + 1) * 2 * n] = row
    for i in range(k2):
        buf[(k1 + i) * 2 * n : (k1 + i) * 2 * n + n] = w2.data[i * n : (i + 1) * n]
    rank, pivots = _rref(w1.field, buf, k1 + k2, 2 * n)
    rows = []
    new_pivots = []
    for i, p in enumerate(pivots):
        if p >= n:
            rows.append(buf[i * 2 * n + n : (i + 1) * 2 * n])
            new_pivots.append(p - n)
    return Subspace(w1.field, n, b"".join(bytes(r) for r in rows), tuple(new_pivots))


def image(m: Mat, w: Subspace) -> Subspace:
    """Image of W under the operator M (columns convention: v maps to Mv)."""
    if m.ncols != w.ambient:
        raise DimensionMismatch("operator and subspace ambient dimensions differ")
    if w.dim == 0:
        return Subspace.zero(w.field, m.nrows)
    mt = m.transpose()
    out = _mat_mul(w.field, w.data, w.dim, w.ambient, mt.data, mt.nrows, mt.ncols)
    return _span_flat(w.field, bytearray(out), w.dim, m.nrows)


def kernel_space(m: Mat) -> Subspace:
    """The solution space {v : Mv = 0} as a canonical subspace."""
    n = m.ncols
    buf = bytearray(m.data)
    rank, pivots = _rref(m.field, buf, m.nrows, n)
    pivset = set(pivots)
    rows = []
    for j in range(n):
        if j in pivset:
            continue
        vec = bytearray(n)
        vec[j] = 1
        for i, p in enumerate(pivots):
            vec[p] = m.field.neg(buf[i * n + j])
        rows.append(bytes(vec))
    if not rows:
        return Subspace.zero(m.field, n)
    return _span_flat(m.field, bytearray(b"".join(rows)), len(rows), n)


def preimage(m: Mat, w: Subspace) -> Subspace:
    """The full preimage {v : Mv in W} under a square operator M.

    Uses the matrix inverse when M is invertible and a kernel computation
    otherwise.
    """
    if m.nrows != m.ncols:
        raise DimensionMismatch("preimage requires a square operator")
    if m.ncols != w.ambient:
        raise DimensionMismatch("operator and subspace ambient dimensions differ")
    if w.dim == w.ambient:
        return w
    try:
        return image(m.inverse(), w)
    except SingularOperator:
        dual = _dual_matrix(w)
        return kernel_space(Mat(m.field, dual.nrows, m.ncols, _mat_mul(
            m.field, dual.data, dual.nrows, dual.ncols, m.data, m.nrows, m.ncols)))


def _dual_matrix(w: Subspace) -> Mat:
    """A matrix K with W = {v : Kv = 0}."""
    k = kernel_space(w.basis_matrix())
    return k.basis_matrix()


def _colex_combinations(n: int, k: int):
    return sorted(combinations(range(n), k), key=lambda c: c[::-1])


def subspaces(field: FieldSpec, N: int, k: int) -> Iterator[Subspace]:
    """Every k-dimensional subspace of F_q^N, exactly once, canonically.

    The stream is deterministic: pivot-column subsets in colexicographic
    order, free RREF entries filled in odometer order.
    """
    if N < 0 or not 0 <= k <= N:
        raise InvalidParameters(f"need 0 <= k <= N, got k={k}, N={N}")
    q = field.q
    for pivots in _colex_combinations(N, k):
        pivset = set(pivots)
        free = [
            (i, j)
            for i, p in enumerate(pivots)
            for j in range(p + 1, N)
            if j not in pivset
        ]
        base = bytearray(k * N)
        for i, p in enumerate(pivots):
            base[i * N + p] = 1
        for filling in product(range(q), repeat=len(free)):
            data = bytearray(base)
            for (i, j), v in zip(free, filling):
                data[i * N + j] = v
            yield Subspace(field, N, bytes(data), pivots)


def subspaces_containing(u: Subspace, k: int) -> Iterator[Subspace]:
    """Every k-dimensional subspace containing U, via the quotient space.

    Subspaces of the quotient F_q^N / U are enumerated in the coordinates
    of U's non-pivot columns and lifted back.
    """
    d, N = u.dim, u.ambient
    if not d <= k <= N:
        raise DimensionMismatch(f"need dim U <= k <= N, got {d}, {k}, {N}")
    if k == d:
        yield u
        return
    nonpiv = [j for j in range(N) if j not in set(u.pivots)]
    for s in subspaces(u.field, N - d, k - d):
        flat = bytearray(k * N)
        flat[: d * N] = u.data
        for i in range(s.dim):
            for jj, j in enumerate(nonpiv):
                flat[(d + i) * N + j] = s.data[i * (N - d) + jj]
        yield _span_flat(u.field, flat, k, N)


def subspaces_within(w: Subspace, k: int) -> Iterator[Subspace]:
    """Every k-dimensional subspace of W, in W's basis coordinates."""
    d = w.dim
    if not 0 <= k <= d:
        raise DimensionMismatch(f"need 0 <= k <= dim W, got {k}, {d}")
    if k == 0:
        yield Subspace.zero(w.field, w.ambient)
        return
    for s in subspaces(w.field, d, k):
        out = _mat_mul(w.field, s.data, k, d, w.data, d, w.ambient)
        yield _span_flat(w.field, bytearray(out), k, w.ambient)
