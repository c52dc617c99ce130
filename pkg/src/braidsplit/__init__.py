"""Splitting of projections between (mixed) braid groups of the torus and the
Klein bottle: presentations, kernel models, collection, verdicts with
replayable certificates, and a numeric check of the geometric sections."""

from .presentations import Surface, build_presentation
from .solver import (
    Verdict, q1_linear_form, q1_verdict, q_last_verdict, ts1_verdict, two_factor_verdict,
    verify_derived_lemma,
)

__version__ = "0.1.0"

__all__ = [
    "Surface", "Verdict", "build_presentation", "q1_linear_form", "q1_verdict", "q_last_verdict",
    "ts1_verdict", "two_factor_verdict", "verify_derived_lemma",
]
