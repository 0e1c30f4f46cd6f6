"""Sharp bounds on |Gamma2| - |Gamma1| for inverse logarithmic coefficients."""

__version__ = "0.1.0"
