"""HTTP service wrapping the evaluation registry and the identity audit."""

from .app import create_app

__all__ = ["create_app"]
