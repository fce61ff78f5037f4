from .reps import (
    Rep,
    VMap,
    simple,
    projective,
    injective,
    hom_basis,
    hom_dim,
    ext_dim,
    euler_form,
    indecomposables,
    tau_inv,
    tau_inv_map,
)
from .category import CMor, ClusterCategory, DObj, DPiece, cluster_category

__all__ = [
    "Rep",
    "VMap",
    "simple",
    "projective",
    "injective",
    "hom_basis",
    "hom_dim",
    "ext_dim",
    "euler_form",
    "indecomposables",
    "tau_inv",
    "tau_inv_map",
    "CMor",
    "ClusterCategory",
    "DObj",
    "DPiece",
    "cluster_category",
]
