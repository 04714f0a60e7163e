"""Exact matrices over Q(i, sqrt2), indefinite Hermitian forms, subspaces.

Subspaces are stored in reduced row echelon form (applied to their spanning
vectors), which is the canonical basis of a subspace: subspace equality is
basis-tuple equality, and reduction modulo a subspace is well defined.

Definiteness of the restricted Hermitian form is decided by exact congruence
elimination of the Gram matrix (Sylvester inertia).  A subspace meeting its
own orthocomplement reports "degenerate".
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import FieldElem, ZERO, ONE, as_scalar


def _coerce_row(row):
    out = []
    for x in row:
        s = as_scalar(x)
        if s is NotImplemented:
            raise TypeError(f"matrix entry {x!r} is not a scalar")
        out.append(s)
    return tuple(out)


class Matrix:
    """Immutable matrix with FieldElem entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows_of_entries):
        entries = tuple(_coerce_row(r) for r in rows_of_entries)
        if not entries or not entries[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(entries[0])
        if any(len(r) != width for r in entries):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values):
        vals = _coerce_row(values)
        n = len(vals)
        return cls([[vals[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns):
        cols = [_coerce_row(c) for c in columns]
        if not cols:
            raise ValueError("no columns")
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))])

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def col(self, j):
        return tuple(r[j] for r in self.entries)

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix addition")
        return Matrix([[x + y for x, y in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Matrix([[-x for x in r] for r in self.entries])

    def __mul__(self, scalar):
        s = as_scalar(scalar)
        if s is NotImplemented:
            return NotImplemented
        return Matrix([[x * s for x in r] for r in self.entries])

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        cols = [other.col(j) for j in range(other.cols)]
        return Matrix([[_dot(r, c) for c in cols] for r in self.entries])

    def transpose(self) -> "Matrix":
        return Matrix([self.col(j) for j in range(self.cols)])

    def conj_transpose(self) -> "Matrix":
        return Matrix([[x.conj() for x in self.col(j)] for j in range(self.cols)])

    def trace(self) -> FieldElem:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        t = ZERO
        for i in range(self.rows):
            t = t + self.entries[i][i]
        return t

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.entries for x in r)

    def apply(self, vector):
        """Matrix times column vector (tuple in, tuple out)."""
        v = _coerce_row(vector)
        if len(v) != self.cols:
            raise ValueError("length mismatch in matrix-vector product")
        return tuple(_dot(r, v) for r in self.entries)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        rows = ["[" + ", ".join(str(x) for x in r) + "]" for r in self.entries]
        return "[" + "; ".join(rows) + "]"


def _dot(u, v):
    acc = ZERO
    for x, y in zip(u, v):
        acc = acc + x * y
    return acc


@dataclass(frozen=True)
class HermSig:
    """Signature (p, q) Hermitian form diag(I_p, -I_q) on C^(p+q)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("signature counts must be nonnegative")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def signs(self):
        return (1,) * self.p + (-1,) * self.q


def herm_form(u, v, sig: HermSig):
    """h(u, v) = sum_k s_k u_k conj(v_k): linear in u, conjugate-linear in v.

    Generic over the scalar type (FieldElem or JetScalar entries).
    """
    if len(u) != sig.n or len(v) != sig.n:
        raise ValueError("vector length does not match the signature")
    acc = None
    for s, x, y in zip(sig.signs, u, v):
        term = s * (x * y.conj())
        acc = term if acc is None else acc + term
    return acc if acc is not None else ZERO


def _rref(vectors, ambient):
    """Reduced row echelon form of the spanning vectors; returns (rows, pivots)."""
    rows = [list(_coerce_row(v)) for v in vectors]
    for r in rows:
        if len(r) != ambient:
            raise ValueError("vector length does not match ambient dimension")
    pivots = []
    rank = 0
    for col in range(ambient):
        pivot_row = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return [tuple(r) for r in rows[:rank]], pivots


class Subspace:
    """Subspace of C^n over Q(i, sqrt2), canonicalized on construction."""

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient, vectors):
        basis, pivots = _rref(vectors, ambient)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", tuple(basis))
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def span(cls, ambient, vectors):
        return cls(ambient, vectors)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def residue(self, vector):
        """Canonical representative of the vector modulo this subspace."""
        x = list(_coerce_row(vector))
        if len(x) != self.ambient:
            raise ValueError("vector length does not match ambient dimension")
        for row, p in zip(self.basis, self.pivots):
            if x[p]:
                f = x[p]
                x = [a - f * b for a, b in zip(x, row)]
        return tuple(x)

    def contains(self, vector) -> bool:
        return all(x.is_zero() for x in self.residue(vector))

    def __contains__(self, vector):
        return self.contains(vector)

    def __add__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.ambient != other.ambient:
            raise ValueError("ambient dimensions differ")
        return Subspace(self.ambient, self.basis + other.basis)

    def perp(self, sig: HermSig) -> "Subspace":
        """Orthocomplement with respect to the indefinite form."""
        if sig.n != self.ambient:
            raise ValueError("signature does not match ambient dimension")
        if not self.basis:
            return Subspace(self.ambient, [tuple(ONE if i == j else ZERO
                                                 for j in range(self.ambient))
                                           for i in range(self.ambient)])
        constraints = [tuple(s * b.conj() for s, b in zip(sig.signs, row))
                       for row in self.basis]
        reduced, pivots = _rref(constraints, self.ambient)
        free = [c for c in range(self.ambient) if c not in pivots]
        vectors = []
        for f in free:
            v = [ZERO] * self.ambient
            v[f] = ONE
            for row, p in zip(reduced, pivots):
                v[p] = -row[f]
            vectors.append(tuple(v))
        if not vectors:
            vectors = [tuple(ZERO for _ in range(self.ambient))]
        return Subspace(self.ambient, vectors)

    def gram(self, sig: HermSig) -> Matrix:
        if not self.basis:
            raise ValueError("gram matrix of the zero subspace")
        return Matrix([[herm_form(u, v, sig) for v in self.basis]
                       for u in self.basis])

    def inertia(self, sig: HermSig):
        """(n_plus, n_minus, n_zero) of the restricted form, by exact congruence."""
        if not self.basis:
            return (0, 0, 0)
        g = [list(row) for row in self.gram(sig).entries]
        active = list(range(len(self.basis)))
        n_plus = n_minus = n_zero = 0
        while active:
            pivot = next((d for d in active if g[d][d]), None)
            if pivot is None:
                pair = next(((i, j) for i in active for j in active
                             if i != j and g[i][j]), None)
                if pair is None:
                    n_zero += len(active)
                    break
                i, j = pair
                lam = g[i][j]
                # b_i <- b_i + lam*b_j makes the i-th diagonal 2|lam|^2 > 0
                for k in active:
                    if k != i:
                        g[i][k] = g[i][k] + lam * g[j][k]
                        g[k][i] = g[i][k].conj()
                g[i][i] = (lam * lam.conj()) * 2
                continue
            d = g[pivot][pivot]
            if d.real_sign() > 0:
                n_plus += 1
            else:
                n_minus += 1
            active.remove(pivot)
            inv = d.inverse()
            for i in active:
                fi = g[i][pivot]
                if fi.is_zero():
                    continue
                for j in active:
                    g[i][j] = g[i][j] - fi * inv * g[pivot][j]
            for i in active:
                g[i][pivot] = ZERO
                g[pivot][i] = ZERO
        return (n_plus, n_minus, n_zero)

    def definiteness(self, sig: HermSig) -> str:
        """One of "positive", "negative", "indefinite", "degenerate"."""
        n_plus, n_minus, n_zero = self.inertia(sig)
        if n_zero:
            return "degenerate"
        if n_plus and n_minus:
            return "indefinite"
        if n_minus:
            return "negative"
        return "positive"

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        rows = ["[" + ", ".join(str(x) for x in r) + "]" for r in self.basis]
        return f"span{{{'; '.join(rows)}}} in C^{self.ambient}"
