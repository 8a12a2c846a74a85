"""Toric deformations - graded T1, T2 and cup products of affine toric varieties."""

__version__ = "0.4.0"
__title__ = "Toric Deformations"
__description__ = (
    "Exact computation of T1, T2 and the cup product for affine toric varieties"
)
__author__ = "mugipan-en"
__license__ = "MIT"
