"""maxgdelta: order-theory lab around a spliced algebraic domain.

The domain glues countably many finite-climb columns under two copies of the
sequence tree (plain and starred).  Its maximal points cannot be carved out
as a countable intersection of Scott opens: the diagonalization engine
refutes any proposed indexed family of opens and emits a certificate that can
be re-checked independently.
"""

from .seq import OMEGA, Seq, SeqStream, comparable, finite, has_upper_bound, periodic, substring_leq
from .domain import (
    Elem,
    IndexSet,
    chain_sup_x,
    directed_restriction_check,
    is_compact,
    is_maximal,
    leq,
    min_upper_generators,
    plain,
    refute_chain_upper_bound,
    star,
    starred,
    truncation,
    unstar,
    xpoint,
)
from .posets import ChainPairPoset, FinitePoset, OraclePoset, sup_in_oracle
from .opens import OpenDesc, OpensFamily, canonical_level, covers_max, intersection_member_prefix_check
from .diagonal import DiagCertificate, diagonalize, verify_certificate, witness_element
from .parsing import parse_elem, parse_seq
from .suites import run_suites

__version__ = "0.1.0"
