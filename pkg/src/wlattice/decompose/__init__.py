"""Laurent decompositions of brackets in the generators."""
from .basis import DecompResult, LaurentBasis, Verification, enumerate_basis
from .linalg import InconsistentSystem, solve_exact
from .solve import (DecompConfig, DegenerateSampling, LinearSystem, NotRepresentable,
                    VerificationFailed, build_system, laurent_identity_holds, solve_by_coefficients,
                    solve_decomposition, verify_identity)

__all__ = [
    "DecompResult", "LaurentBasis", "Verification", "enumerate_basis", "InconsistentSystem",
    "solve_exact", "DecompConfig", "DegenerateSampling", "LinearSystem", "NotRepresentable",
    "VerificationFailed", "build_system", "laurent_identity_holds", "solve_by_coefficients",
    "solve_decomposition", "verify_identity",
]
