"""Exact image ratios of word maps on finite groups and polynomial maps on finite rings."""

from _imago import (
    ImagoCapExceeded,
    ImagoDomainError,
    ImagoParseError,
    admissible_exponents,
    classes,
    commutator_cyclic_ratio,
    eval_poly,
    eval_word,
    gl2_power_ratio,
    gl2ring_square_closed_forms,
    plan,
    scan,
)

__all__ = [
    "ImagoCapExceeded",
    "ImagoDomainError",
    "ImagoParseError",
    "admissible_exponents",
    "classes",
    "commutator_cyclic_ratio",
    "eval_poly",
    "eval_word",
    "gl2_power_ratio",
    "gl2ring_square_closed_forms",
    "plan",
    "scan",
]
