"""Truncated simplicial sets, normalized chains and mod-ell homology."""
