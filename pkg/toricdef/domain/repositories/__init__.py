"""Domain repositories package."""

from .input import InputRepository

__all__ = ["InputRepository"]
