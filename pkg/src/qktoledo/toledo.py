"""Exact pullback constants of the quaternionic 4-form.

For each embedding differential the 4-form and the square of the ambient
Kahler form are evaluated on the images of the standard basis quadruple;
the square of the base Kahler form on that quadruple is 16, so the reported
ratio is the constant c with (pullback of omega) = c * (base Kahler form)^2.
The four constants 1/4, 11/64, 1/16, 0 are pairwise distinct, which is what
separates the corresponding representation classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .scalars import FieldElem, as_scalar
from .geometry import kahler_form, omega4, wedge_square_eval
from .embeddings import EmbeddingDiff, standard_quadruple

CONVENTION = ("v1: quat x+y*j; wedge a^2(X,Y,Z,W) = "
              "a(X,Y)a(Z,W) - a(X,Z)a(Y,W) + a(X,W)a(Y,Z)")

OMEGA_B_SQUARED = as_scalar(16)


@dataclass(frozen=True)
class PullbackReport:
    embedding: str
    omega_value: FieldElem       # 4-form on the embedded basis quadruple
    omega0sq_value: FieldElem    # ambient Kahler form squared on the same quadruple
    ratio: FieldElem             # omega_value / 16
    convention: str = CONVENTION

    def to_json_dict(self) -> dict:
        return {
            "embedding": self.embedding,
            "omega_on_basis": str(self.omega_value),
            "ratio_to_OmegaB2": str(self.ratio),
            "convention": self.convention,
        }


def pullback_constant(embedding: EmbeddingDiff) -> PullbackReport:
    """Evaluate the 4-form pullback on the standard quadruple, exactly."""
    quad = standard_quadruple(embedding.n)
    images = [embedding(x) for x in quad]
    omega_value = omega4(*images)
    omega0sq_value = wedge_square_eval(kahler_form, *images)
    return PullbackReport(
        embedding=embedding.name,
        omega_value=omega_value,
        omega0sq_value=omega0sq_value,
        ratio=omega_value / OMEGA_B_SQUARED,
    )


@dataclass(frozen=True)
class CompositionReport:
    """Invariant of a representation factored through a holomorphic map."""

    value: Fraction                       # (1/16) * degree * vol(target)
    below_source_bound: Optional[bool]    # value < (1/16) * vol(source), if given


def composition_invariant(degree: int, vol_target, vol_source=None) -> CompositionReport:
    """(1/16) * degree * vol(target), with the strict bound flag if vol(source) given."""
    if degree < 1:
        raise ValueError("degree must be a positive integer")
    vol_target = Fraction(vol_target)
    if vol_target <= 0:
        raise ValueError("target volume must be positive")
    value = Fraction(1, 16) * degree * vol_target
    flag = None
    if vol_source is not None:
        vol_source = Fraction(vol_source)
        if vol_source <= 0:
            raise ValueError("source volume must be positive")
        flag = value < Fraction(1, 16) * vol_source
    return CompositionReport(value=value, below_source_bound=flag)
