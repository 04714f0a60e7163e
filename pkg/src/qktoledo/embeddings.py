"""Differentials at the base point of four embeddings of the complex ball.

The ball B = SU(n,1)/S(U(n)xU(1)) sits inside X = SU(2n,2)/S(U(2n)xU(2)) in
four ways; each differential is an R-linear map from C^n to 2n x 2 blocks,
stored by its values on the real basis e_1..e_n, i*e_1..i*e_n:

* ``rho``          row pairs (x_k, 0), (0, x_k): the holomorphic diagonal;
* ``totally_real`` row pairs (x_k, 0), (0, conj(x_k));
* ``phi``          row pairs (x_k, 0), (0, 0): one diagonal factor frozen;
* ``sym_square``   n = 2 only: the symmetric square of the defining
  representation of SU(2,1), landing in SU(4,2).

For the symmetric square, W = Sym^2(C^{2,1}) carries the orthonormal basis

    E1 = e1^2, E2 = e2^2, E3 = e3^2,
    E4 = sqrt2 e1.e2, E5 = sqrt2 e3.e1, E6 = sqrt2 e3.e2

(u.v = (u@v + v@u)/2) of signature (4,2): E1..E4 positive, E5, E6 negative.
``sym_square_lie`` is the Leibniz-rule differential in this basis, an honest
Lie algebra homomorphism into su(4,2).  The bounded-domain chart identifies
the base negative plane through the unnormalized vectors e3.e1, e3.e2, which
rescales the off-diagonal blocks by 1/sqrt2; ``sym_square_p_block`` performs
that extraction, and its closed form is ``sym_square_tangent_diff``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import FieldElem, ZERO, ONE, I, SQRT2, HALF_SQRT2, as_scalar
from .linalg import Matrix, HermSig
from .geometry import TangentVec

W_SIG = HermSig(4, 2)
BALL_SIG = HermSig(2, 1)
_ETA = Matrix.diagonal([1, 1, -1])
_HALF = Fraction(1, 2)


# -- symmetric square of C^{2,1} --------------------------------------------

def sym_product(u, v):
    """Coefficient grid of u.v in the e_i (x) e_j basis; generic in the scalar."""
    return tuple(tuple((u[i] * v[j] + u[j] * v[i]) * _HALF for j in range(3))
                 for i in range(3))


def sym_to_e_coords(grid):
    """Coordinates of a symmetric tensor in the orthonormal basis E1..E6."""
    return (grid[0][0], grid[1][1], grid[2][2],
            SQRT2 * grid[0][1], SQRT2 * grid[2][0], SQRT2 * grid[2][1])


def e_coords_to_sym(coords):
    c1, c2, c3, c4, c5, c6 = coords
    h4, h5, h6 = c4 * HALF_SQRT2, c5 * HALF_SQRT2, c6 * HALF_SQRT2
    return ((c1, h4, h5), (h4, c2, h6), (h5, h6, c3))


def w_form_tensor(s, t) -> FieldElem:
    """Induced Hermitian form on Sym^2 evaluated on coefficient grids."""
    signs = BALL_SIG.signs
    acc = ZERO
    for i in range(3):
        for j in range(3):
            acc = acc + signs[i] * signs[j] * (s[i][j] * t[i][j].conj())
    return acc


def _unit3(k):
    return tuple(ONE if i == k else ZERO for i in range(3))


E_BASIS_TENSORS = tuple(
    sym_product(_unit3(i), _unit3(j)) if i == j
    else tuple(tuple(x * SQRT2 for x in row)
               for row in sym_product(_unit3(i), _unit3(j)))
    for i, j in ((0, 0), (1, 1), (2, 2), (0, 1), (2, 0), (2, 1))
)


# -- su(2,1) -----------------------------------------------------------------

def su21_p_matrix(a1, a2) -> Matrix:
    """The symmetric-pair element of su(2,1) with top-right column (a1, a2)."""
    a1, a2 = as_scalar(a1), as_scalar(a2)
    return Matrix([
        [ZERO, ZERO, a1],
        [ZERO, ZERO, a2],
        [a1.conj(), a2.conj(), ZERO],
    ])


def is_su21(m: Matrix) -> bool:
    if (m.rows, m.cols) != (3, 3):
        return False
    if not m.trace().is_zero():
        return False
    return (m.conj_transpose() @ _ETA + _ETA @ m).is_zero()


def sym_square_lie(m: Matrix) -> Matrix:
    """Leibniz differential of g -> g(x)g on Sym^2, in the E-basis.

    A Lie algebra homomorphism su(2,1) -> su(4,2): the result is traceless
    and skew with respect to diag(1,1,1,1,-1,-1).
    """
    if not is_su21(m):
        raise ValueError("input is not an su(2,1) matrix")
    mt = m.transpose()
    columns = []
    for tensor in E_BASIS_TENSORS:
        t = Matrix(tensor)
        image = m @ t + t @ mt
        columns.append(sym_to_e_coords(image.entries))
    return Matrix.from_columns(columns)


def sym_square_p_block(lie_matrix: Matrix) -> Matrix:
    """Bounded-domain tangent block of a symmetric-square image.

    Extracts the top-right 4 x 2 block and removes the sqrt2 that the
    orthonormal E5, E6 carry relative to the chart's unnormalized e3.e1,
    e3.e2; on p-part images this recovers the closed form below.
    """
    return Matrix([[lie_matrix[r, 4 + c] * HALF_SQRT2 for c in range(2)]
                   for r in range(4)])


def sym_square_v_block(lie_matrix: Matrix) -> Matrix:
    """Lower-left 2 x 4 block in the same chart normalization."""
    return Matrix([[lie_matrix[4 + r, c] * HALF_SQRT2 for c in range(4)]
                   for r in range(2)])


def sym_square_tangent_diff(a) -> TangentVec:
    """Closed form of the symmetric-square differential on the ball tangent.

    For a = (a1, a2) the 4 x 2 block has rows (a1, 0), (0, a2),
    (conj(a1), conj(a2)), (a2/sqrt2, a1/sqrt2).
    """
    a1, a2 = (as_scalar(x) for x in a)
    return TangentVec(Matrix([
        [a1, ZERO],
        [ZERO, a2],
        [a1.conj(), a2.conj()],
        [a2 * HALF_SQRT2, a1 * HALF_SQRT2],
    ]))


# -- the four embedding differentials ----------------------------------------

@dataclass(frozen=True)
class EmbeddingDiff:
    """R-linear differential from C^n to 2m x 2 blocks, tabulated on the
    real basis vectors e_1..e_n, i*e_1..i*e_n."""

    name: str
    n: int
    values: tuple

    def __call__(self, x) -> TangentVec:
        comps = [as_scalar(c) for c in x]
        if len(comps) != self.n or any(c is NotImplemented for c in comps):
            raise ValueError(f"expected a complex {self.n}-vector")
        out = TangentVec.zero(self.values[0].p, 2)
        for k, c in enumerate(comps):
            re = FieldElem(c.a, 0, c.c, 0)
            im = FieldElem(c.b, 0, c.d, 0)
            if re:
                out = out + self.values[k].scale(re)
            if im:
                out = out + self.values[self.n + k].scale(im)
        return out


def _tabulate(name, n, rows_of):
    basis = []
    for k in range(n):
        basis.append(tuple(ONE if j == k else ZERO for j in range(n)))
    for k in range(n):
        basis.append(tuple(I if j == k else ZERO for j in range(n)))
    return EmbeddingDiff(name, n, tuple(TangentVec(Matrix(rows_of(x)))
                                        for x in basis))


def rho_embedding(n=2) -> EmbeddingDiff:
    """Holomorphic diagonal: z -> column of z_k I_2 blocks."""
    if n < 1:
        raise ValueError("n must be at least 1")

    def rows(x):
        out = []
        for c in x:
            out.append([c, ZERO])
            out.append([ZERO, c])
        return out

    return _tabulate("rho", n, rows)


def totally_real_embedding(n=2) -> EmbeddingDiff:
    """Totally real: z -> column of diag(z_k, conj(z_k)) blocks."""
    if n < 1:
        raise ValueError("n must be at least 1")

    def rows(x):
        out = []
        for c in x:
            out.append([c, ZERO])
            out.append([ZERO, c.conj()])
        return out

    return _tabulate("totally_real", n, rows)


def phi_embedding(n=2) -> EmbeddingDiff:
    """Partial diagonal: z -> column of (z_k, 0) blocks, second factor frozen."""
    if n < 1:
        raise ValueError("n must be at least 1")

    def rows(x):
        out = []
        for c in x:
            out.append([c, ZERO])
            out.append([ZERO, ZERO])
        return out

    return _tabulate("phi", n, rows)


def sym_square_embedding() -> EmbeddingDiff:
    """Symmetric square differential of SU(2,1) -> SU(4,2) (n = 2)."""

    def rows(x):
        return sym_square_tangent_diff(x).a.entries

    return _tabulate("sym_square", 2, rows)


EMBEDDING_NAMES = ("rho", "totally_real", "phi", "sym_square")


def make_embedding(name: str, n=2) -> EmbeddingDiff:
    if name == "rho":
        return rho_embedding(n)
    if name == "totally_real":
        return totally_real_embedding(n)
    if name == "phi":
        return phi_embedding(n)
    if name == "sym_square":
        if n != 2:
            raise ValueError("the symmetric square embedding requires n = 2")
        return sym_square_embedding()
    raise ValueError(f"unknown embedding {name!r}")


def standard_quadruple(n=2):
    """The basis quadruple (e1, i e1, e2, i e2) of the ball tangent space."""
    if n < 2:
        raise ValueError("the standard quadruple needs n >= 2")

    def unit(k, s):
        return tuple(s if j == k else ZERO for j in range(n))

    return (unit(0, ONE), unit(0, I), unit(1, ONE), unit(1, I))


def ball_tangent(x) -> TangentVec:
    """A ball tangent vector as an n x 1 block (for the base Kahler form)."""
    return TangentVec(Matrix([[as_scalar(c)] for c in x]))
