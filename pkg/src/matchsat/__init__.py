"""Saturation numbers sat(n, (p+1)K2): closed form, constructions and oracles."""

from .construct import CliqueProfile, build_candidate, extremal_candidates
from .formula import Instance, objective_D, sat_theorem, z_star_exhaustive
from .graph import SimpleGraph, deficiency, matching_number
from .saturation import is_saturated, structure_report

__all__ = [
    "CliqueProfile",
    "Instance",
    "SimpleGraph",
    "build_candidate",
    "deficiency",
    "extremal_candidates",
    "is_saturated",
    "matching_number",
    "objective_D",
    "sat_theorem",
    "structure_report",
    "z_star_exhaustive",
]

__version__ = "0.1.0"
