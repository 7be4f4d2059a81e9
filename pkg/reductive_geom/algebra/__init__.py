"""Lie algebra, exterior form and Clifford algebra primitives."""
