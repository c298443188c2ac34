"""Exact Hall-Littlewood algebra and equivariant Euler characteristics on Hilbert schemes of points."""

from ._core import (  # noqa: F401
    Error,
    chi,
    hl_inner,
    hl_poly,
    jing,
    k_exponent,
    partition_function,
    run_cli,
    set_threads,
    verify_lemma,
)

__all__ = [
    "Error",
    "chi",
    "hl_inner",
    "hl_poly",
    "jing",
    "k_exponent",
    "partition_function",
    "run_cli",
    "set_threads",
    "verify_lemma",
]
