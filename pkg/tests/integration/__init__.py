"""
Integration tests for bcom-homology.

This module contains end-to-end tests for the CLI and the acceptance suites.
"""
