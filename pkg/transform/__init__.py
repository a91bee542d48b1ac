"""Направленные масштабирования решеток"""
from transform.ratios import GOLDEN, PLATINUM, SILVER, named_ratios, sqrt_ring
from transform.scaling import (
    Custom,
    DirectionalScaling,
    FamilyTag,
    KindMismatch,
    SquareFamily,
    TriangularKnown,
    apply_exact,
    apply_float,
    apply_resolved_exact,
    custom_scaling,
    directional_scale_float,
    scaling_from_k,
    square_family,
    theta_degrees,
    triangular_known,
)

__all__ = [
    "Custom",
    "DirectionalScaling",
    "FamilyTag",
    "GOLDEN",
    "KindMismatch",
    "PLATINUM",
    "SILVER",
    "SquareFamily",
    "TriangularKnown",
    "apply_exact",
    "apply_float",
    "apply_resolved_exact",
    "custom_scaling",
    "directional_scale_float",
    "named_ratios",
    "scaling_from_k",
    "sqrt_ring",
    "square_family",
    "theta_degrees",
    "triangular_known",
]
