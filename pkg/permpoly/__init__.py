"""Module: permpoly - permutation polynomials over finite fields"""

__version__ = "0.1.0"
