"""
quasiplus: finite quasigroups, identities and trimediality checks
"""

# -------------------- pull key objects to package level

# tables and quasigroups
from quasiplus.core.quasigroup import (
    ElementMap,
    FiniteQuasigroup,
    ParastropheKind,
    cyclic_group,
    from_mul_table,
    from_symbol_table,
)
from quasiplus.core.closure import (
    generated_subquasigroup,
    is_endomorphism,
    maps_commute_ef,
)
from quasiplus.core.io import read_table, write_table

# identity language
from quasiplus.identities.parse import parse_identity, parse_term, print_identity
from quasiplus.identities.evaluate import eval_term, holds, satisfies_all
from quasiplus.identities.registry import NAMED_IDENTITIES, get_identity
from quasiplus.identities.term import rewrite_for_parastrophe, substitute

# search
from quasiplus.search.enumerate import enumerate_latin_squares
from quasiplus.search.canonical import canonical_form, is_isomorphic
from quasiplus.search.sample import random_quasigroup
from quasiplus.search.corpus import Corpus
from quasiplus.search.query import SearchQuery, run_query
from quasiplus.search.census import identity_census

# verification
from quasiplus.verify.trimedial import is_trimedial
from quasiplus.verify.report import verify_statement

# Get version
from .version import __version__, __last_version__
