"""Geometric duals and their correspondence checks."""

from .checks import check_correspondences, double_dual_check, dual_operation_checks
from .dual import dual

__all__ = ["check_correspondences", "double_dual_check", "dual", "dual_operation_checks"]
