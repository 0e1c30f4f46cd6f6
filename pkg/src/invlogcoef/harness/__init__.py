"""Verification reports, body searches, figures and the command line."""

from .render import render_image_domain, render_lune
from .verify import THEOREMS, TheoremSpec, VerificationReport, search_class, verify_theorem

__all__ = ["THEOREMS", "TheoremSpec", "VerificationReport", "render_image_domain",
           "render_lune", "search_class", "verify_theorem"]
