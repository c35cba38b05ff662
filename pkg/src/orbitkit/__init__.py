"""orbitkit: exhaustive orbit dynamics on posets.

Strict labelings of stacked poset copies under Bender-Knuth promotion,
poset partitions under piecewise-linear toggles and rowmotion, the gamma
poset tying the two together, and an orbit engine for order, homomesy,
distribution, and resonance verification.
"""

from ._kernels import BACKEND as kernel_backend
from .dynamics import (HomomesyReport, OrbitDecomposition, ResonanceReport,
                       equivariance_check, homomesy_check, orbit_decomposition,
                       orbit_size_multiset, order_of_action, resonance_check)
from .gamma import (GammaBijection, GammaPoset, flag_triangle_isomorphism,
                    gamma_poset, graded_isomorphism, is_column_adjacent)
from .labelings import PStrictSpace
from .partitions import (PartitionSpace, diff_word, diff_word_graded,
                         graded_togpro_order, slice_decomposition_order)
from .poset import (Poset, RankProfile, antipode, build_poset, chain,
                    chain_product, coxeter_number, find_isomorphism,
                    is_isomorphic, j_tower, order_ideals, product, staircase,
                    triangle, v_poset)
from .restriction import (RestrictionFunction, from_bounds, from_flags,
                          from_global_bound, make_consistent, typea_flag)
from .suite import run_paper_suite

__version__ = "0.1.0"
