"""
Common utilities for bcom-homology.

This module contains exceptions, configuration, resource guards, metrics and logging
functionality used across the package.
"""
