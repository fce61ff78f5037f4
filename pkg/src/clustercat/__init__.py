"""Exact engine for simply-laced finite-type cluster algebras and their cluster categories."""

from .cluster_algebra import Atlas, Laurent, Seed, atlas, initial_seed, mutate_seed, rebase
from .errors import (
    CapExceededError,
    ContractViolationError,
    NotExchangeableError,
    NotFiniteTypeError,
)
from .repcat import ClusterCategory, cluster_category
from .root_system import ALL_TYPES, DynkinType, RootSystem, root_system
from .tilting import (
    Tilting,
    check_all_denominators,
    check_exchange,
    check_quiver_identity,
    check_relations,
    exchange_triangles,
    quiver_QT,
    tilting_from_cluster,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_TYPES",
    "Atlas",
    "CapExceededError",
    "ClusterCategory",
    "ContractViolationError",
    "DynkinType",
    "Laurent",
    "NotExchangeableError",
    "NotFiniteTypeError",
    "RootSystem",
    "Seed",
    "Tilting",
    "atlas",
    "check_all_denominators",
    "check_exchange",
    "check_quiver_identity",
    "check_relations",
    "cluster_category",
    "exchange_triangles",
    "initial_seed",
    "mutate_seed",
    "quiver_QT",
    "rebase",
    "root_system",
    "tilting_from_cluster",
    "__version__",
]
