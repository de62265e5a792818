"""Local distance antimagic labelings: constructions, verification, exact search."""

from .graph import (Graph, GraphError, ParseError, blowup, gen_family, join, lexicographic,
                    parse_graph, serialize_graph)
from .labeling import (Certificate, LabelingError, WeightProfile, certify, is_ldal, symdiff_rule,
                       weigh)
from .oracle import OracleResult, SearchBudget, chi_exact, chi_ld_exact

__version__ = "0.1.0"
