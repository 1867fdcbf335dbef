"""Constants used throughout quasiplus."""

import os
from pathlib import Path
from types import MappingProxyType as MapProxy
from typing import Callable, Optional, Sequence, Tuple, Union

from typing_extensions import Literal

# ------------------- size guards

# largest order enumerated exhaustively unless explicitly overridden
MAX_EXHAUSTIVE_ORDER = 5

# largest order for which the n! canonical-form scan is allowed
MAX_CANONICAL_ORDER = 8

# every quasigroup of order below this is medial, so generated
# subquasigroups smaller than it never need an explicit M check
MEDIAL_BELOW_ORDER = 4

# ------------------- known census values (used in docs and cross-checks)

# number of Latin squares of order n
LATIN_SQUARE_COUNTS = MapProxy({1: 1, 2: 2, 3: 12, 4: 576, 5: 161280})

# number of reduced Latin squares of order n
REDUCED_SQUARE_COUNTS = MapProxy({1: 1, 2: 1, 3: 1, 4: 4, 5: 56})

# number of quasigroups of order n up to isomorphism
ISOMORPHISM_CLASS_COUNTS = MapProxy({1: 1, 2: 2, 3: 5, 4: 35, 5: 1411})

# ------------------- identity registry keys

# keys of the named identities, in display order
IDENTITY_KEYS = ("M", "Sl", "Sr", "Fl", "Fr", "El", "Er", "K")

# ------------------- statement registry ids

STATEMENT_IDS = (
    "prop1",
    "thm1",
    "thm2",
    "lem1",
    "lem2",
    "lem3",
    "lem4",
    "lem5",
    "lem6",
    "lem7",
    "kepka_axioms",
    "medial_chain",
)

# ------------------- file formats

# header prefix of a corpus cache file
CORPUS_MAGIC = "qcorpus"
CORPUS_VERSION = "v1"

# extension used for corpus files in the cache directory
CORPUS_EXT = ".qcorpus"

# ------------------- execution defaults

# number of (model, assignment) cells evaluated per numpy batch
EVALUATION_BUDGET = 1 << 20

# number of models per chunk handed to a worker process
CHUNK_SIZE = 8192

# maximum number of witnesses kept in a verification report
MAX_WITNESSES = 10

# minimum number of models before a progress bar is shown
MIN_MODELS_FOR_BAR = 2000

# directory used as the corpus cache, None disables caching
_cache_env = os.environ.get("QUASIPLUS_CACHE_PATH")
CACHE_PATH: Optional[Path] = Path(_cache_env) if _cache_env else None

# ------------------- type aliases

# Path types
path_types = Union[str, Path]

# a Cayley table as nested python sequences
table_type = Sequence[Sequence[int]]

# a Cayley table as rows of python ints
row_table_type = Tuple[Tuple[int, ...], ...]

# a visitor called with each enumerated table
visitor_type = Callable[[row_table_type], None]

# dedup policies
dedup_type = Literal["raw", "iso"]

# verification status
status_type = Literal["Verified", "CounterexampleFound"]
