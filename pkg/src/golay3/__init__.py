"""3-phase Golay sequence and array triads over Z3 (work in progress)."""
__version__ = "0.1.0"
