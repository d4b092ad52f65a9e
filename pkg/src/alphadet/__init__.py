"""Exact decomposition of cyclic modules generated by powers of the alpha-determinant.

The alpha-determinant interpolates between determinant (alpha = -1) and
permanent (alpha = 1).  This package computes, in exact rational arithmetic,
the multiplicity of each irreducible gl_n constituent of the module generated
by the l-th power of the alpha-determinant, as the rank of an explicit
transition matrix over Q[alpha], and cross-validates the result against
closed-form polynomial identities and a brute-force module construction.
"""

__version__ = "0.1.0"
