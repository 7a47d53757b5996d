"""Exact computations for gentle algebras and their Cohen-Macaulay Auslander algebras."""

from __future__ import annotations

from importlib import resources

from .bound_quiver import (
    Arrow,
    GentlePresentation,
    Path,
    Quiver,
    compose,
    enumerate_nonzero_paths,
    is_gentle,
    is_schurian,
    parse_presentation,
    serialize_presentation,
    validate_gentle,
)
from .cm_construct import cm_auslander, critical_cycles, gorenstein_projectives, singularity_profile

__version__ = "0.1.0"

FIXTURES = ("A2", "C3", "HEX", "KRON", "LOOP", "TWOCYC")


def fixture(name: str) -> GentlePresentation:
    """Load one of the bundled example presentations by name."""
    text = resources.files(__package__).joinpath("data", f"{name}.quiver").read_text("utf-8")
    return parse_presentation(text)
