"""q-analogs of group divisible designs: construction, search and verification."""

__version__ = "0.1.0"

from ._kernels import BACKEND
from .construct import (
    OrbitSelection,
    build_fat_gdd,
    build_theorem5_gdd,
    det_invariant,
    fat_count,
    gdd_from_steiner,
)
from .designfile import DesignFile, read_design, write_design
from .errors import QgddError
from .field import Field, create_field
from .gdd import GddInstance, VerificationReport, lambda_max_bruteforce, supplementary, verify
from .grassmann import GrassmannIter, enumerate_k_subspaces, gaussian_binomial, is_fat, is_scattered
from .km_search import (
    MatrixGroup,
    build_km_system,
    frobenius_generator,
    orbits,
    reconstruct_from_generators,
    singer_generator,
    singer_group,
    singer_spread,
    solve_lambda_cover,
)
from .linalg import Subspace, canonicalize
from .params import admissible_table, check_conditions, lambda_delta, lambda_max_g2k4, lambda_max_k3
from .spread import Spread, desarguesian_spread

__all__ = [
    "BACKEND",
    "DesignFile",
    "Field",
    "GddInstance",
    "GrassmannIter",
    "MatrixGroup",
    "OrbitSelection",
    "QgddError",
    "Spread",
    "Subspace",
    "VerificationReport",
    "admissible_table",
    "build_km_system",
    "build_fat_gdd",
    "build_theorem5_gdd",
    "canonicalize",
    "check_conditions",
    "create_field",
    "desarguesian_spread",
    "det_invariant",
    "enumerate_k_subspaces",
    "fat_count",
    "frobenius_generator",
    "gaussian_binomial",
    "gdd_from_steiner",
    "is_fat",
    "is_scattered",
    "lambda_delta",
    "lambda_max_bruteforce",
    "lambda_max_g2k4",
    "lambda_max_k3",
    "orbits",
    "read_design",
    "reconstruct_from_generators",
    "singer_generator",
    "singer_group",
    "singer_spread",
    "solve_lambda_cover",
    "supplementary",
    "verify",
    "write_design",
]
