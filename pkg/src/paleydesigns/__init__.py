"""Paley and Peisert graphs over GF(p^r): 4-vertex censuses, k4, and 2-designs."""

from .analysis import (asymptotic_ratio, char_sum, fit_normalization, k4_char_sum, k4_interval,
                       thomason_check)
from .census import (ISO_CLASSES, TILDE_CLASSES, Census4, IsoClass4, brute_census,
                     census_from_k4, check_linear_relations, classify_4set,
                     count_through_pair, k4_fast, linear_relations, triangle_counts)
from .designs import (BlockFamily, Design, appendix_table, build_blocks, build_design,
                      complement_design, corollary2_designs, predicted_lambda,
                      validate_family, verify_2design)
from .field import GF, FieldElement, find_irreducible, prime_power
from .graphs import (Graph, GraphKind, SrgParams, build_graph, build_paley, build_peisert,
                     common_neighborhood, complement_map, find_isomorphism, verify_srg)
from .reference import design_lambda_q29, paley_k4_table, peisert_k4_table

__version__ = "0.1.0"
