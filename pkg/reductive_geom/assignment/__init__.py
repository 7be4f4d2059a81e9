"""Assignment of grid points to runners."""
