"""
Client package for file-system access.
"""

from .client import ImageStore

__all__ = ['ImageStore']
