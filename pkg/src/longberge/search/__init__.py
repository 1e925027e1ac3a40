"""Exhaustive and randomized verification: exact searches, hunts and inequality scans."""

from .canon import brute_canonical_form, canonical_form
from .exact import (SearchRefused, SearchResult, contains_hnka, exact_eg_graph, exact_eg_hypergraph, exact_mixed,
                    free_graphs, two_connected_free_graphs)
from .hunt import random_hunt
from .report import SCHEMA, ScanReport, Violation
from .scan import CLAIMS, ScanGrid, inequality_scan

__all__ = [
    "CLAIMS", "SCHEMA", "ScanGrid", "ScanReport", "SearchRefused", "SearchResult", "Violation",
    "brute_canonical_form", "canonical_form", "contains_hnka", "exact_eg_graph", "exact_eg_hypergraph",
    "exact_mixed", "free_graphs", "inequality_scan", "random_hunt", "two_connected_free_graphs",
]
