"""Continuous-time classical and quantum walks on direct products of Cayley graphs."""

from . import classical, closedforms, linalg, mixing, quantum, verification
from .classical import GeneratorConvention
from .errors import (
    CayleyWalkError,
    ContractViolation,
    ConventionMismatchError,
    DimensionError,
    DomainError,
    SpecValidationError,
)
from .graphs import Graph, GraphSpec, build, degree, direct_product, is_regular
from .linalg import SpectralDecomposition, hermitian_eigendecomposition
from .quantum import HamiltonianConvention

__version__ = "0.1.0"

__all__ = [
    "classical",
    "closedforms",
    "linalg",
    "mixing",
    "quantum",
    "verification",
    "GeneratorConvention",
    "HamiltonianConvention",
    "Graph",
    "GraphSpec",
    "build",
    "degree",
    "direct_product",
    "is_regular",
    "SpectralDecomposition",
    "hermitian_eigendecomposition",
    "CayleyWalkError",
    "ContractViolation",
    "ConventionMismatchError",
    "DimensionError",
    "DomainError",
    "SpecValidationError",
]
