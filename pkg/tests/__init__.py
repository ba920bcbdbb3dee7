# tests/__init__.py
"""Test package marker.

This enables stable imports like `from tests.conftest import ...`.
"""
