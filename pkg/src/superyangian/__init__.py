"""Exact computer algebra for affine super Yangian evaluation and contraction maps.

The package verifies commutation identities between images of the evaluation
map and the two edge-contraction embeddings inside completed enveloping
algebras of affine general linear superalgebras, plus the rectangular
W-superalgebra generator calculus on the other side of the correspondence.
Everything is exact: scalars are rational functions over the integers, series
are handled through degree-homogeneous templates with stabilized truncation,
and every check reports pass/fail/error with a witness on failure.
"""

__version__ = "0.1.0"
