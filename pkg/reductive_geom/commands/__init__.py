"""ReductiveGeom commands."""
