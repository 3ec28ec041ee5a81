"""
API routes.
"""

from .evaluation import router

__all__ = ['router']
