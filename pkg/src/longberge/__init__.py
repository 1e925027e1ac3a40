"""Extremal numbers for hypergraphs without long Berge cycles."""

from .berge import (BergeWitness, BudgetExhausted, SearchBudget, find_berge_cycle_at_least, has_berge_cycle_at_least,
                    lift_to_berge, longest_berge, longest_graph_cycle, verify_witness)
from .extremal import (ConstructionSpec, ExtremalParams, ParameterError, build_construction41, build_construction42,
                       build_construction63, build_extremal, build_hnka, eval_f_graph, eval_fr, eval_fr_plus, eval_ur,
                       recognize_extremal)
from .hypercore import (Graph, Hypergraph, MixedHypergraph, ParseError, complement_shadow2, parse_hypergraph,
                        parse_mixed, serialize_hypergraph, serialize_mixed, shadow)
from .sdrp import Sdrp, hall_check, max_sdrp
from .structure import (blocks, core, find_kopylov_set, is_hamilton_connected, kk_fractional_bound,
                        shadow_inequality_check)

__version__ = "0.1.0"
