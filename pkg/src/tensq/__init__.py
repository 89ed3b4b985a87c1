"""Non-abelian tensor squares of finite groups through the nu-group
construction, with Engel scans and graded Lie rings of p-groups.

Everything runs at desk scale over explicit permutation groups; each
computed structure ships with exhaustive or seeded verification of the
identities it is supposed to satisfy.
"""

__version__ = "0.1.0"

from .catalog import catalog, get_group, get_presentation, resolve_group
from .coset import (CosetTable, EnumerationLimits,
                    multiplication_table_presentation, tc_enumerate,
                    to_perm_group)
from .engel import (EngelScanConfig, EngelScanResult, engel_power_scan,
                    engel_stack_identity, engel_projection_check,
                    engel_degree, fitting_subgroup, is_left_n_engel,
                    left_engel_set)
from .errors import (AmbientMismatchError, CapacityError,
                     EnumerationLimitError, StateError)
from .linalg import abelian_invariants, invariant_factors_from_cyclic
from .liering import (GradedElement, GradedLieRing, PGroupSeries,
                      ad_nilpotency_index, dimension_subgroups,
                      jennings_recursion, lie_nilpotency_class, lie_ring,
                      subalgebra_Lp, verify_lazard, verify_lie_axioms)
from .nu import (NuGroup, TensorReport, VerificationReport, build_nu,
                 derived_map_check, nu_presentation, route_independence,
                 tensor_order, tensor_report, tensor_square,
                 verify_nu_relations, verify_tensor_set_closed,
                 verify_decomposition)
from .perm import (FiniteGroup, Permutation, SeriesReport, Subgroup,
                   closure, commutator, center, derived_subgroup,
                   format_perm_group, iterated_commutator,
                   lower_central_series, normal_closure, parse_cycles,
                   parse_perm_group, power_subgroup, quotient_action)
from .words import (Presentation, Word, free_reduce, parse_presentation,
                    parse_word)

__all__ = [name for name in dir() if not name.startswith("_")]
