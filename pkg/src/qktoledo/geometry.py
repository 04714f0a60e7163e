"""Base-point geometry of SU(p,q)/S(U(p)xU(q)) and the quaternionic 4-form.

A tangent vector at the base point is the p x q block A of the symmetric-pair
element [[0, A], [A*, 0]].  Conventions fixed here and used everywhere:

* complex structure: J(A) = i*A;
* metric: g0(X, Y) = 4 Re Tr(B* A), Kahler form Omega0(X, Y) = g0(JX, Y);
* quaternionic coordinates (q = 2 only): row m of A = (x_m, y_m) becomes the
  quaternion x_m + y_m*j, i.e. the identification q = x + y*j;
* the 2-forms omega_u(X, Y) = Re(q_X . conj(q_Y) u) for u in {i, j, k}, with
  q . conj(p) = sum_m q_m conj(p_m);
* the square of a 2-form alpha is evaluated by the three-term expansion

      alpha(X,Y)alpha(Z,W) - alpha(X,Z)alpha(Y,W) + alpha(X,W)alpha(Y,Z)

  (the signed sum over the three perfect matchings, with no extra
  combinatorial factor), and the 4-form is

      omega = omega_i^2 + omega_j^2 + omega_k^2.

With these conventions the pullback constants through the four standard
embeddings of complex hyperbolic space come out exactly 1/4, 11/64, 1/16, 0
relative to the square of the base Kahler form.  The opposite identification
q = x + j*y swaps which embedding carries the extreme constant.
"""

from __future__ import annotations

from .scalars import (FieldElem, Quat, ZERO, I, QUAT_UNITS, as_scalar)
from .linalg import Matrix


class TangentVec:
    """p x q block of a symmetric-pair tangent vector at the base point."""

    __slots__ = ("a",)

    def __init__(self, block: Matrix):
        if not isinstance(block, Matrix):
            block = Matrix(block)
        object.__setattr__(self, "a", block)

    def __setattr__(self, name, value):
        raise AttributeError("TangentVec is immutable")

    @classmethod
    def zero(cls, p, q):
        return cls(Matrix.zeros(p, q))

    @property
    def p(self) -> int:
        return self.a.rows

    @property
    def q(self) -> int:
        return self.a.cols

    def __add__(self, other):
        if not isinstance(other, TangentVec):
            return NotImplemented
        return TangentVec(self.a + other.a)

    def __sub__(self, other):
        if not isinstance(other, TangentVec):
            return NotImplemented
        return TangentVec(self.a - other.a)

    def __neg__(self):
        return TangentVec(-self.a)

    def scale(self, s) -> "TangentVec":
        """Real scalar multiple (the tangent space is a real vector space)."""
        s = as_scalar(s)
        if s is NotImplemented:
            raise TypeError("scale expects a real scalar")
        if not s.is_real():
            raise ValueError("scale by a non-real scalar; use complex_structure_j")
        return TangentVec(self.a * s)

    def su_matrix(self) -> Matrix:
        """The full (p+q) x (p+q) matrix [[0, A], [A*, 0]]."""
        p, q = self.p, self.q
        astar = self.a.conj_transpose()
        rows = []
        for i in range(p):
            rows.append([ZERO] * p + list(self.a.row(i)))
        for i in range(q):
            rows.append(list(astar.row(i)) + [ZERO] * q)
        return Matrix(rows)

    def is_zero(self) -> bool:
        return self.a.is_zero()

    def __eq__(self, other):
        if not isinstance(other, TangentVec):
            return NotImplemented
        return self.a == other.a

    def __hash__(self):
        return hash(self.a)

    def __repr__(self):
        return f"TangentVec({self.a!r})"


def complex_structure_j(x: TangentVec) -> TangentVec:
    """J(A) = i*A; squares to minus the identity."""
    return TangentVec(x.a * I)


def _check_same_shape(*vecs):
    p, q = vecs[0].p, vecs[0].q
    for v in vecs[1:]:
        if (v.p, v.q) != (p, q):
            raise ValueError("tangent vectors have mismatched shapes")


def metric_g0(x: TangentVec, y: TangentVec) -> FieldElem:
    """g0(X, Y) = 4 Re Tr(B* A); real, symmetric, positive definite."""
    _check_same_shape(x, y)
    t = (y.a.conj_transpose() @ x.a).trace()
    return (t * 4).real_part()


def kahler_form(x: TangentVec, y: TangentVec) -> FieldElem:
    """Omega0(X, Y) = g0(JX, Y); antisymmetric and real."""
    return metric_g0(complex_structure_j(x), y)


class QuatCoords:
    """Quaternionic coordinates of a tangent vector with two columns."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        object.__setattr__(self, "entries", tuple(entries))

    def __setattr__(self, name, value):
        raise AttributeError("QuatCoords is immutable")

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, m):
        return self.entries[m]

    def pairing(self, other: "QuatCoords") -> Quat:
        """Standard quaternionic Hermitian pairing sum_m q_m conj(p_m)."""
        acc = Quat()
        for q, p in zip(self.entries, other.entries):
            acc = acc + q * p.conj()
        return acc

    def right_mul(self, unit) -> "QuatCoords":
        u = QUAT_UNITS[unit] if isinstance(unit, str) else unit
        return QuatCoords(q * u for q in self.entries)

    def to_tangent(self) -> TangentVec:
        return TangentVec(Matrix([[q.z, q.w] for q in self.entries]))

    def __eq__(self, other):
        if not isinstance(other, QuatCoords):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "(" + ", ".join(repr(q) for q in self.entries) + ")"


def to_quat(x: TangentVec) -> QuatCoords:
    """Identify a 2n x 2 block (x | y) with the quaternion vector x + y*j."""
    if x.q != 2:
        raise ValueError("quaternionic coordinates need exactly 2 columns")
    return QuatCoords(Quat(x.a[m, 0], x.a[m, 1]) for m in range(x.p))


def omega_unit(x: TangentVec, y: TangentVec, unit: str) -> FieldElem:
    """omega_u(X, Y) = Re(q_X . conj(q_Y) u); antisymmetric, real-valued."""
    _check_same_shape(x, y)
    pairing = to_quat(x).pairing(to_quat(y))
    return (pairing * QUAT_UNITS[unit]).re()


def wedge_square_eval(form, x, y, z, w):
    """(alpha ^ alpha)(X,Y,Z,W) by the three-term matching expansion."""
    return (form(x, y) * form(z, w)
            - form(x, z) * form(y, w)
            + form(x, w) * form(y, z))


def omega4(x: TangentVec, y: TangentVec, z: TangentVec, w: TangentVec) -> FieldElem:
    """The quaternionic 4-form omega_i^2 + omega_j^2 + omega_k^2.

    The six quaternionic pairings are computed once and reused across the
    three unit 2-forms; the value agrees with composing wedge_square_eval
    and omega_unit directly.
    """
    _check_same_shape(x, y, z, w)
    qx, qy, qz, qw = (to_quat(v) for v in (x, y, z, w))
    pair = {
        "xy": qx.pairing(qy), "zw": qz.pairing(qw),
        "xz": qx.pairing(qz), "yw": qy.pairing(qw),
        "xw": qx.pairing(qw), "yz": qy.pairing(qz),
    }
    total = ZERO
    for unit in QUAT_UNITS.values():
        f = {key: (p * unit).re() for key, p in pair.items()}
        total = total + (f["xy"] * f["zw"] - f["xz"] * f["yw"]
                         + f["xw"] * f["yz"])
    return total


# The three generators whose adjoint action realizes right quaternion
# multiplication on the tangent space: conjugating [[0,A],[A*,0]] by the
# group element diag(I_2n, u*) sends A to A*u.
SU2_GENERATORS = {
    "i": Matrix([[I, ZERO], [ZERO, -I]]),
    "j": Matrix([[ZERO, FieldElem(1)], [FieldElem(-1), ZERO]]),
    "k": Matrix([[ZERO, I], [I, ZERO]]),
}


def su2_action_check(unit: str, x: TangentVec) -> bool:
    """Adjoint action of the unit's generator == right multiplication by it."""
    g = SU2_GENERATORS[unit]
    acted = TangentVec(x.a @ g)
    return to_quat(acted) == to_quat(x).right_mul(unit)
