"""
Core module for bcom-homology.

This module contains groups, the B(tau, G) construction, simplicial sets with their mod-ell
homology, and the homotopy colimit machinery.
"""
