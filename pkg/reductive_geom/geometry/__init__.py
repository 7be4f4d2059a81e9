"""Invariant connections, Dirac operators and string equations."""
