"""
Enumeration, canonical forms, sampling, corpora and model queries.
"""
from quasiplus.search.enumerate import (
    enumerate_latin_squares,
    iter_latin_squares,
    latin_square_stack,
)
from quasiplus.search.canonical import (
    CanonicalForm,
    canonical_form,
    is_isomorphic,
    unique_up_to_isomorphism,
)
from quasiplus.search.sample import random_quasigroup, random_stack
from quasiplus.search.corpus import Corpus, Provenance
from quasiplus.search.query import QueryResult, SearchQuery, run_query
from quasiplus.search.census import identity_census
