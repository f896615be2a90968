"""Symbolic arithmetic in Leavitt path algebras."""

from .terms import (
    DEFAULT_REWRITE_BOUND,
    LpaContext,
    LpaElement,
    Monomial,
    SpecialEdgeChoice,
    degree,
    format_element,
    homogeneous_components,
    homogeneous_part,
    involute,
    multiply,
    multiply_monomials,
    normal_form,
    random_element,
    random_monomial,
)
from .expressions import ExpressionParser, parse_expression

__all__ = [
    "DEFAULT_REWRITE_BOUND",
    "LpaContext",
    "LpaElement",
    "Monomial",
    "SpecialEdgeChoice",
    "degree",
    "format_element",
    "homogeneous_components",
    "homogeneous_part",
    "involute",
    "multiply",
    "multiply_monomials",
    "normal_form",
    "random_element",
    "random_monomial",
    "ExpressionParser",
    "parse_expression",
]
