"""Workbench for homology of PGL2 of affine elliptic coordinate rings.

The pipeline: classify the vertical lines of a Weierstrass curve, build the
truncated fundamental-domain tree for the group action, attach stabilizer
homology as a coefficient system, run the two-column spectral sequence over
exact integer linear algebra, and compare the assembled answer against the
predicted closed-form decomposition.
"""

__version__ = "0.1.0"
