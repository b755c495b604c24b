"""Exact combinatorics and module data for the hyperoctahedral group C2 wr S_n."""

from .brauer import brauer_quotient_dim, r_r_gens, vertex_catalog
from .decomp import decomposition_columns
from .errors import CapExceeded, HypothesisViolation, InternalError
from .model import ModelVector, act, enumerate_basis, theta_fixed
from .perms import CycleType, GeneratorSet, SignedPermutation, cycle_type
from .repdata import BlockLabel, ModelIndex, model_dim, specht_dim

__version__ = "0.1.0"

__all__ = [
    "BlockLabel",
    "CapExceeded",
    "CycleType",
    "GeneratorSet",
    "HypothesisViolation",
    "InternalError",
    "ModelIndex",
    "ModelVector",
    "SignedPermutation",
    "act",
    "brauer_quotient_dim",
    "cycle_type",
    "decomposition_columns",
    "enumerate_basis",
    "model_dim",
    "specht_dim",
    "r_r_gens",
    "theta_fixed",
    "vertex_catalog",
]
