"""Symplectic fatness certificates for twistor bundles over K/H of maximal rank."""

from .catalog import CatalogEntry, instantiate, list_entries
from .errors import InputError, OracleDisagreement
from .maxrank import MaxRankPair, SpaceSpec, build_pair, complement, wall_violations
from .rootsys import Root, RootSystem, build_root_system, root_eval
from .twistor import (
    FatnessCertificate,
    InfeasibilityWitness,
    TwistorElement,
    certify_fatness,
    fiber_description,
    solve_twistor_element,
    verify_twistor_element,
)

__all__ = [
    "CatalogEntry", "FatnessCertificate", "InfeasibilityWitness", "InputError", "MaxRankPair",
    "OracleDisagreement", "Root", "RootSystem", "SpaceSpec", "TwistorElement", "build_pair",
    "build_root_system", "certify_fatness", "complement", "fiber_description", "instantiate",
    "list_entries", "root_eval", "solve_twistor_element", "verify_twistor_element", "wall_violations",
]
