"""Exact computation of crystal energies and loop symmetric functions.

The package has five layers:

    tableaux    partitions, skew shapes, SSYT enumeration, jeu de taquin
    crystal     single-row crystals, R-matrix, coenergy, intrinsic and
                tropical staircase energy
    lsym        colored polynomials: loop e/h/tau/sigma, loop Schur
                functions, banded staircase matrices, tropical evaluation
    birational  exact rational kappa, the birational R-action, and the
                product formula for rational energy
    verify/cli  identity suites and the command line front end
"""

from .birational import (
    RationalPoint,
    check_lem_tact,
    kappa,
    random_point,
    rational_energy_global,
    rational_energy_product,
    s_action,
)
from .crystal import (
    CrystalElement,
    TensorElement,
    TropicalGrid,
    apply_s,
    coenergy,
    coenergy_sliding_oracle,
    counts_to_grid,
    energy_staircase,
    grid_to_counts,
    intrinsic_energy,
    ok,
    r_matrix,
    r_matrix_oracle,
)
from .identities import IdentityCheck, identity_suite
from .lsym import (
    ColoredPoly,
    PolyMatrix,
    build_A,
    build_B,
    loop_e,
    loop_h,
    loop_schur_jt,
    loop_schur_tableaux,
    sigma,
    tau,
    tau_vector,
    trop_eval,
)
from .tableaux import (
    EnumerationGuardError,
    Shape,
    SkewShape,
    Ssyt,
    count_ssyt,
    enumerate_ssyt,
    jdt_slide,
    rectify,
    staircase,
)
from .verify import RunReport, VerifyConfig, run_verify

__version__ = "0.1.0"

__all__ = [
    "CrystalElement",
    "ColoredPoly",
    "EnumerationGuardError",
    "IdentityCheck",
    "PolyMatrix",
    "RationalPoint",
    "RunReport",
    "Shape",
    "SkewShape",
    "Ssyt",
    "TensorElement",
    "TropicalGrid",
    "VerifyConfig",
    "apply_s",
    "build_A",
    "build_B",
    "check_lem_tact",
    "coenergy",
    "coenergy_sliding_oracle",
    "count_ssyt",
    "counts_to_grid",
    "energy_staircase",
    "enumerate_ssyt",
    "grid_to_counts",
    "identity_suite",
    "intrinsic_energy",
    "jdt_slide",
    "kappa",
    "loop_e",
    "loop_h",
    "loop_schur_jt",
    "loop_schur_tableaux",
    "ok",
    "r_matrix",
    "r_matrix_oracle",
    "random_point",
    "rational_energy_global",
    "rational_energy_product",
    "rectify",
    "run_verify",
    "s_action",
    "sigma",
    "staircase",
    "tau",
    "tau_vector",
    "trop_eval",
]
