"""Diagrams of simplicial sets, homotopy colimits and the decomposition machinery."""
