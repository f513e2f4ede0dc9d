"""Formal group laws, genera and SU-bordism computations over exact rationals."""

from ._core import (
    CacheError,
    DomainError,
    ParseError,
    Poly,
    alpha,
    chern_number,
    genus,
    pairing,
    parse_class,
    run_cli,
    s_number,
    su_check,
    verify,
)

__all__ = [
    "CacheError",
    "DomainError",
    "ParseError",
    "Poly",
    "alpha",
    "chern_number",
    "genus",
    "pairing",
    "parse_class",
    "run_cli",
    "s_number",
    "su_check",
    "verify",
]
