"""Canon descent polynomials of Dyck paths.

Core objects: :class:`DyckPath`, :class:`Permutation`, :class:`CanonWord`,
:class:`DescentPolynomial`.  Labeling a path with a permutation yields a
multiset word; ``canon_descent_poly`` tallies its descents over all
permutations.  ``bperm`` / ``vperm`` construct descent maximizers, ``b_set``
and ``max_poset`` describe the full maximizer set, and ``run_suite`` /
``seq_*`` expose the exhaustive checks and integer sequences.
"""

from ._canondy import *  # noqa: F401,F403
from ._canondy import __doc__ as _core_doc  # noqa: F401

__version__ = "1.0.0"
