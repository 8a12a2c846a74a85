"""Dependencies package."""

from .repositories import get_fixture_repository, get_input_repository

__all__ = ["get_fixture_repository", "get_input_repository"]
