"""Finite Steiner triple systems, Steiner quasigroups and Steiner loops.

Cayley-table algebra, a small term language with a brute-force identity
checker, Pasch/Fano configuration analysis, deciders for whether a loop
satisfies the Moufang-theorem property, constructions of the classical small
systems, exhaustive enumeration of triple systems up to isomorphism, and a
search for identities separating one Steiner loop from others.
"""

__version__ = "0.1.0"

from .algebra import (
    LoopTable,
    QuasigroupTable,
    TripleSystem,
    ValidationReport,
    is_steiner_loop,
    is_steiner_quasigroup,
    loop_to_quasigroup,
    quasigroup_to_loop,
    quasigroup_to_sts,
    sts_to_quasigroup,
    validate_sts,
)
from .errors import (
    CollinearTripleError,
    InvalidSystemError,
    InvalidTableError,
    NonAssociatingTripleError,
    NotSteinerError,
    SteinerError,
    TermEvalError,
    TermSyntaxError,
)
from .terms import (
    ASSOC,
    BUILTIN_IDENTITIES,
    EXTRA10,
    ID4,
    IDEMPOTENT,
    MOUFANG,
    ONE,
    STEINER_COMM,
    STEINER_KEY,
    CheckReport,
    Identity,
    One,
    Product,
    Term,
    Variable,
    check_identity,
    eval_term,
    parse_identity,
    parse_term,
    print_term,
)

__all__ = [name for name in dir() if not name.startswith("_")]
