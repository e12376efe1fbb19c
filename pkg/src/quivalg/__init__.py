"""Quadratic monomial quiver algebras.

Models finite-dimensional algebras presented by a finite quiver with monomial
relations, decides whether every projective radical is projective or simple,
computes minimal projective resolutions of simple modules as eventually
periodic length sequences, converts between such algebras and triples
(acyclic quiver, marked sinks, sink assignment), and derives global dimension
and an Ext-algebra presentation with noetherian verdicts.
"""

from .algebra import (FinitenessReport, MonomialPresentation, ProjectiveProfile,
                      QuadraticRadicalReport, RadicalSummand, RadicalVerdict,
                      check_radicals, check_radicals_quadratic, cover_length,
                      finiteness, nonzero_paths, opposite, profiles,
                      projective_profile)
from .dsl import (parse_document, parse_presentation, parse_triple,
                  serialize_presentation, serialize_triple)
from .errors import (AdmissibilityError, CrossCheckError, DslError,
                     InfiniteDimensionalError, InvalidTripleError,
                     NotQuadraticError, QuivalgError, RadicalConditionError,
                     UndetectedPeriodicityError)
from .ext import (CriterionReport, ExtPresentation, NoetherianReport,
                  RIGHT_FINITE_DIMENSIONAL, RIGHT_NOT_ESTABLISHED,
                  RIGHT_SUFFICIENT_CRITERION, ext_presentation,
                  noetherian_criterion, noetherian_report)
from .quiver import (Arrow, PathWord, Quiver, boundary_vertices, opposite_quiver,
                     oriented_cycle_witness, topological_order, trivial_word)
from .resolution import (ChainSet, GlobalDimensionReport, MinimalityReport,
                         OrbitReport, ResolutionResult, chain_cover_counts,
                         compare_resolution_routes, complexity,
                         default_degree_bound, global_dimension,
                         oracle_cover_counts, projective_dimension,
                         relation_chains, resolution_minimality,
                         resolution_sequence, semisimple_sequence, syzygy_orbit)
from .sequences import (INFINITY, AdmissibilityReport, EventuallyPeriodic,
                        equivalent, is_admissible, is_least, parse_sequence,
                        precedes, weighted_sum)
from .triples import (OppositeReport, Triple, TripleIso, TripleVerdict,
                      build_algebra, extract_triple, opposite_radical_check,
                      triple_iso, validate_triple)

__version__ = "0.1.0"
