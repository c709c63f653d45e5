"""loopforge: exact combinatorial invariants of loops on surfaces.

Word arithmetic in free and surface groups, exact rational curve diagrams on
the two-annulus chart atlas, self-intersection enumeration, the refined
Turaev cobracket, conjugacy-class growth estimation, entropy forcing bounds,
and persistence barcodes with exact bottleneck distance.
"""

from .groups import (
    ConjClass,
    GEquivClass,
    Presentation,
    Word,
    are_conjugate,
    conj_canonical,
    dehn_reduce,
    free_reduce,
    g_equiv_canonical,
    is_identity,
)

__all__ = [
    "Presentation",
    "Word",
    "ConjClass",
    "GEquivClass",
    "free_reduce",
    "dehn_reduce",
    "is_identity",
    "conj_canonical",
    "are_conjugate",
    "g_equiv_canonical",
]

__version__ = "0.1.0"
