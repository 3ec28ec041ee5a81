"""
hidden_homfly: exact transverse HOMFLYPT invariants of closed braids and
their hidden polynomials.
"""

__version__ = "0.1.0"
