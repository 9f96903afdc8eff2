"""Exact braided Hopf cyclic cohomology in anyonic (Z_n-graded) vector spaces."""

from .cyclo import (CyclotomicField, CyclotomicScalar, FieldMismatchError, cyclotomic_field,
                    cyclotomic_polynomial, root_sum_check, zeta_power)
from .graded import (DegreeError, GradedMap, GradedSpace, braid_symmetry_check, braiding,
                     cokernel, flip, identity, image, kernel, permutation_map, rank,
                     support_criterion, tensor_map, tensor_power, tensor_space)
from .hopf import (AxiomReport, BraidedHopfAlgebra, HopfStructureError, ModularPair,
                   braided_shuffle, iterated_coproduct, power_multiplication,
                   twisted_antipode, verify_hopf_axioms, verify_modular_pair)
from .transmutation import (NotInAnyonicCategoryError, QuasitriangularElement,
                            TransmutationError, conjugation_action, czn_group_algebra,
                            czn_r_matrix, transmutation_triviality, transmute,
                            verify_quasitriangular)
from .builtin import group_character_pair, quantum_line
from .cocyclic import (CocyclicModule, CoefficientModule, ModuleCoalgebra, SizeCapExceeded,
                       TripleData, balanced_quotient, build_cm_cocyclic,
                       build_triple_cocyclic, build_triple_paracocyclic, induce_on_quotient,
                       para_defect, regular_coalgebra, unit_module,
                       verify_cocyclic_identities, verify_triple)
from .cohomology import CohomologyError, hc_dimensions, hochschild_differential

__version__ = "0.1.0"
