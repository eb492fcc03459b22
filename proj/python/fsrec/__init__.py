"""Characters, recurrences and exact sequences of Feigin-Stoyanovsky type subspaces."""

import json

from ._fsrec import (
    FsrecError,
    ResourceLimitError,
    apply_index_set,
    character_json,
    compute_character,
    cyclic_shift,
    d_family,
    degree,
    enumerate_admissible,
    is_admissible,
    omega_image,
    position_sign,
    solve_character,
    solve_coefficient,
    verify_equality_identity,
    weight,
)
from . import _fsrec

__version__ = "0.1.0"


def verify_recurrence(ell, k, M):
    """Report for the character recurrence over every composition of k."""
    return json.loads(_fsrec.verify_recurrence_json(ell, k, M))


def verify_exactness(K, max_degree):
    """Per-grade exactness report for the sequence attached to K."""
    return json.loads(_fsrec.verify_exactness_json(list(K), max_degree))


def check_lemmas(ell, k, max_degree):
    return json.loads(_fsrec.check_lemmas_json(ell, k, max_degree))


__all__ = [
    "FsrecError",
    "ResourceLimitError",
    "apply_index_set",
    "character_json",
    "check_lemmas",
    "compute_character",
    "cyclic_shift",
    "d_family",
    "degree",
    "enumerate_admissible",
    "is_admissible",
    "omega_image",
    "position_sign",
    "solve_character",
    "solve_coefficient",
    "verify_equality_identity",
    "verify_exactness",
    "verify_recurrence",
    "weight",
]
