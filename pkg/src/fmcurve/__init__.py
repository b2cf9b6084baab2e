"""Exact verification toolkit for a genus-49 generalized Fermat family, its
genus-7 quotients and the genus-7 Hurwitz curve inside it."""

from fmcurve.field import ONE, ZERO, ZETA, CycloElem, embed, rho

__all__ = ["CycloElem", "ONE", "ZERO", "ZETA", "embed", "rho"]
__version__ = "0.1.0"
