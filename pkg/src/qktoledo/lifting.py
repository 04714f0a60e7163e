"""Period-domain checks for the symmetric square embedding.

A flag domain of SU(4,2) carries the complex structure whose holomorphic
tangent space is the positive eigenspace of ad(H) for a grading element
H = diag(h); ``grading_mask`` tabulates which matrix positions that allows.
Two gradings are used:

* twistor grading (0,0,0,0,1,-1): the holomorphic-lift obstruction lives in
  the off-diagonal blocks, and the image of the holomorphic ball tangent
  under the symmetric square always leaves the allowed pattern, so no
  holomorphic horizontal lift to the twistor space exists;
* flag grading (1,1,-3,1,0,0): the same image always stays inside the
  allowed pattern, and first-order curve calculus shows the induced map of
  flags (Sym^2 of the orthocomplement, square of the line, mixed plane) is
  horizontal, so the lift to that period domain exists.

Positions are reported as 1-based (row, col) pairs in the E-basis, so (1, 5)
is the E1-row, E5-column entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import JetScalar, ZERO, I, as_scalar
from .linalg import Matrix, Subspace, herm_form
from .embeddings import (BALL_SIG, W_SIG, EmbeddingDiff, su21_p_matrix,
                         sym_square_lie, sym_square_p_block, sym_square_v_block,
                         sym_product, sym_to_e_coords)

TWISTOR_H = (0, 0, 0, 0, 1, -1)
PERIOD_FLAG_H = (1, 1, -3, 1, 0, 0)
_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class GradedMask:
    """Positive-eigenvalue positions of ad(diag(h))."""

    h: tuple
    allow: tuple

    @property
    def size(self) -> int:
        return len(self.h)

    def allowed(self, row: int, col: int) -> bool:
        """1-based indices."""
        return self.allow[row - 1][col - 1]

    def allowed_positions(self):
        n = self.size
        return tuple((r, c) for r in range(1, n + 1) for c in range(1, n + 1)
                     if self.allow[r - 1][c - 1])


def grading_mask(h) -> GradedMask:
    hs = tuple(Fraction(x) for x in h)
    allow = tuple(tuple(hp > hq for hq in hs) for hp in hs)
    return GradedMask(h=hs, allow=allow)


def p_positions(size=6, split=4):
    """Off-diagonal block positions of the (split, size-split) decomposition."""
    return tuple((r, c) for r in range(1, size + 1) for c in range(1, size + 1)
                 if (r <= split) != (c <= split))


@dataclass(frozen=True)
class BPlusVector:
    """Holomorphic ball tangent vector (1,0)-part of the pair element for a.

    The 3 x 3 matrix has (a1, a2) in the top-right column and zeros
    elsewhere; it equals (X_a - i * X_{ia}) / 2.
    """

    a: tuple

    @property
    def matrix(self) -> Matrix:
        a1, a2 = (as_scalar(x) for x in self.a)
        return Matrix([[ZERO, ZERO, a1], [ZERO, ZERO, a2], [ZERO, ZERO, ZERO]])

    def p_split(self):
        """The two real pair elements X_a and X_{ia} recombining to this."""
        a1, a2 = (as_scalar(x) for x in self.a)
        return su21_p_matrix(a1, a2), su21_p_matrix(a1 * I, a2 * I)


def iota_star_bplus(a) -> Matrix:
    """Symmetric-square image of the holomorphic tangent vector for a.

    Complex-linear extension (L(X_a) - i * L(X_{ia})) / 2 of the Leibniz
    differential, with the off-diagonal blocks in the bounded-domain chart
    normalization, so the entries match the closed tangent form directly.
    """
    xa, xia = BPlusVector(tuple(a)).p_split()
    la, lia = sym_square_lie(xa), sym_square_lie(xia)
    full = (la - lia * I) * _HALF
    u = sym_square_p_block(full)
    v = sym_square_v_block(full)
    rows = []
    for r in range(4):
        rows.append([full[r, c] for c in range(4)] + list(u.row(r)))
    for r in range(2):
        rows.append(list(v.row(r)) + [full[4 + r, 4 + c] for c in range(2)])
    return Matrix(rows)


@dataclass(frozen=True)
class TwistorVerdict:
    member: bool
    violations: tuple    # ((row, col, value), ...) 1-based E-positions

    def to_json_dict(self) -> dict:
        return {
            "check": "twistor-nonlift",
            "verdict": f"member={str(self.member).lower()}",
            "violations": [{"row": r, "col": c, "value": str(v)}
                           for r, c, v in self.violations],
        }


def twistor_nonlift_check(a) -> TwistorVerdict:
    """Does the symmetric-square image stay in the twistor holomorphic pattern?

    Membership is tested on the off-diagonal blocks against the pattern the
    twistor grading allows; for every a != 0 the answer is no, and the
    violations name the offending entries.
    """
    mask = grading_mask(TWISTOR_H)
    image = iota_star_bplus(a)
    violations = []
    for r, c in p_positions():
        value = image[r - 1, c - 1]
        if value and not mask.allowed(r, c):
            violations.append((r, c, value))
    return TwistorVerdict(member=not violations, violations=tuple(violations))


def holomorphy_check_u3u1u2(a) -> bool:
    """True iff the symmetric-square image respects the flag grading."""
    mask = grading_mask(PERIOD_FLAG_H)
    image = iota_star_bplus(a)
    for r in range(1, 7):
        for c in range(1, 7):
            if image[r - 1, c - 1] and not mask.allowed(r, c):
                return False
    return True


# -- linearity classification -------------------------------------------------

LINEAR, CONJUGATE_LINEAR, ZERO_MAP, NEITHER = (
    "linear", "conjugate_linear", "zero", "neither")


def classify_linearity(embedding: EmbeddingDiff, column: int, row: int) -> str:
    """Classify one scalar component of a differential (1-based column, row).

    Tests L(i e_k) = i L(e_k) (linear) and L(i e_k) = -i L(e_k)
    (conjugate-linear) across the domain basis; identically zero components
    report "zero".
    """
    n = embedding.n
    alphas = [embedding.values[k].a[row - 1, column - 1] for k in range(n)]
    betas = [embedding.values[n + k].a[row - 1, column - 1] for k in range(n)]
    if all(x.is_zero() for x in alphas + betas):
        return ZERO_MAP
    if all(b == I * a for a, b in zip(alphas, betas)):
        return LINEAR
    if all(b == -I * a for a, b in zip(alphas, betas)):
        return CONJUGATE_LINEAR
    return NEITHER


def classify_column(embedding: EmbeddingDiff, column: int) -> str:
    rows = embedding.values[0].p
    verdicts = {classify_linearity(embedding, column, r)
                for r in range(1, rows + 1)}
    if verdicts == {ZERO_MAP}:
        return ZERO_MAP
    if verdicts <= {LINEAR, ZERO_MAP}:
        return LINEAR
    if verdicts <= {CONJUGATE_LINEAR, ZERO_MAP}:
        return CONJUGATE_LINEAR
    return NEITHER


def twistor_lift_condition(embedding: EmbeddingDiff) -> bool:
    """Necessary condition for a holomorphic twistor lift: first column
    conjugate-linear, second column linear (zero components allowed)."""
    return (classify_column(embedding, 1) in (CONJUGATE_LINEAR, ZERO_MAP)
            and classify_column(embedding, 2) in (LINEAR, ZERO_MAP))


# -- the flag of a negative line ----------------------------------------------

@dataclass(frozen=True)
class PeriodTriple:
    """(Sym^2 of the orthocomplement, square of the line, mixed plane) in W."""

    s2_perp: Subspace
    line_sq: Subspace
    mixed: Subspace

    def parts(self):
        return (("S2Lperp", self.s2_perp), ("L2", self.line_sq),
                ("LoLperp", self.mixed))

    def dimensions(self):
        return (self.s2_perp.dim, self.line_sq.dim, self.mixed.dim)

    def definiteness(self):
        return tuple(s.definiteness(W_SIG) for _, s in self.parts())

    def mutually_orthogonal(self) -> bool:
        spaces = [s for _, s in self.parts()]
        for i in range(3):
            for j in range(i + 1, 3):
                for u in spaces[i].basis:
                    for v in spaces[j].basis:
                        if herm_form(u, v, W_SIG):
                            return False
        return True


def _negative_line_basis(v):
    vec = tuple(as_scalar(x) for x in v)
    if len(vec) != 3:
        raise ValueError("expected a vector in C^{2,1}")
    norm = herm_form(vec, vec, BALL_SIG)
    if norm.real_sign() >= 0:
        raise ValueError("the vector must be negative for the (2,1) form")
    perp = Subspace.span(3, [vec]).perp(BALL_SIG)
    return vec, perp.basis


def period_triple(v) -> PeriodTriple:
    """The three subspaces of W attached to the negative line through v."""
    vec, (u1, u2) = _negative_line_basis(v)
    coords = lambda x, y: sym_to_e_coords(sym_product(x, y))
    return PeriodTriple(
        s2_perp=Subspace.span(6, [coords(u1, u1), coords(u1, u2), coords(u2, u2)]),
        line_sq=Subspace.span(6, [coords(vec, vec)]),
        mixed=Subspace.span(6, [coords(vec, u1), coords(vec, u2)]),
    )


# -- horizontality along first-order curves ------------------------------------

def _jet_vec(vals, derivs):
    return tuple(JetScalar(v, d) for v, d in zip(vals, derivs))


def _first_order_flag_curves(v0, w):
    """Jet spanning vectors for the three flag components along the line curve.

    The moving line is spanned by v0 + t*w; its orthocomplement basis gets
    the first-order correction u_i + t*c_i*v0 with c_i = -h(u_i, w)/h(v0, v0),
    which keeps it orthogonal to the moving line to first order.
    """
    v0 = tuple(as_scalar(x) for x in v0)
    w = tuple(as_scalar(x) for x in w)
    if len(w) != 3:
        raise ValueError("expected a vector in C^{2,1}")
    if herm_form(v0, w, BALL_SIG):
        raise ValueError("the curve direction must be orthogonal to the line")
    vec, (u1, u2) = _negative_line_basis(v0)
    hvv = herm_form(vec, vec, BALL_SIG)
    zeros = (ZERO, ZERO, ZERO)
    v_t = _jet_vec(vec, w)
    u_t = []
    for u in (u1, u2):
        c = -(herm_form(u, w, BALL_SIG) / hvv)
        u_t.append(_jet_vec(u, tuple(c * x for x in vec)))
    coords = lambda x, y: sym_to_e_coords(sym_product(x, y))
    return {
        "L2": [coords(v_t, v_t)],
        "S2Lperp": [coords(u_t[0], u_t[0]), coords(u_t[0], u_t[1]),
                    coords(u_t[1], u_t[1])],
        "LoLperp": [coords(v_t, u_t[0]), coords(v_t, u_t[1])],
    }


def horizontality_residues(v0, w):
    """First-order residues of the square-of-line and Sym^2 components.

    Each residue is the derivative of a spanning vector reduced modulo that
    component's subspace at time zero.  The mixed plane's own motion is the
    base motion of the flag and carries no fiber component, so it does not
    appear here.
    """
    curves = _first_order_flag_curves(v0, w)
    residues = {}
    for name in ("L2", "S2Lperp"):
        at_zero = Subspace.span(6, [tuple(j.val for j in vec)
                                    for vec in curves[name]])
        residues[name] = [at_zero.residue(tuple(j.deriv for j in vec))
                          for vec in curves[name]]
    return residues


def horizontality_check(v0, w) -> bool:
    """True iff the induced flag motion is horizontal to first order.

    The derivative residues of the square of the line and of Sym^2 of the
    orthocomplement must lie in (mixed plane + component at time zero).
    """
    curves = _first_order_flag_curves(v0, w)
    mixed0 = Subspace.span(6, [tuple(j.val for j in vec)
                               for vec in curves["LoLperp"]])
    for name in ("L2", "S2Lperp"):
        at_zero = Subspace.span(6, [tuple(j.val for j in vec)
                                    for vec in curves[name]])
        target = at_zero + mixed0
        for vec in curves[name]:
            if not target.contains(tuple(j.deriv for j in vec)):
                return False
    return True
