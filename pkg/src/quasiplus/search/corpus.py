"""
Corpora: collections of quasigroups of one order, and their cache files.

A corpus file starts with the header line

    qcorpus v1 order=<n> dedup=<raw|iso> provenance=<exhaustive|random(seed=S,count=C)>

followed by one table per block in the text table format, blocks separated
by blank lines.
"""
import logging
import re
from pathlib import Path
from typing import Iterator, NamedTuple, Optional

import numpy as np
from typing_extensions import Literal

from quasiplus.constants import (
    CACHE_PATH,
    CORPUS_EXT,
    CORPUS_MAGIC,
    CORPUS_VERSION,
    dedup_type,
    path_types,
)
from quasiplus.core.quasigroup import FiniteQuasigroup, find_latin_violation
from quasiplus.exceptions import CorpusFormatError
from quasiplus.identities.evaluate import TableStack
from quasiplus.search.canonical import unique_up_to_isomorphism
from quasiplus.search.enumerate import latin_square_stack
from quasiplus.search.sample import random_stack

logger = logging.getLogger(__name__)

_HEADER_RE = re.compile(
    rf"^{CORPUS_MAGIC} (?P<version>\S+) order=(?P<order>\d+) "
    r"dedup=(?P<dedup>raw|iso) provenance=(?P<provenance>\S+)$"
)
_RANDOM_RE = re.compile(r"^random\(seed=(?P<seed>-?\d+|None),count=(?P<count>\d+)\)$")


class Provenance(NamedTuple):
    """Where the models of a corpus came from."""

    kind: Literal["exhaustive", "random"] = "exhaustive"
    seed: Optional[int] = None
    count: Optional[int] = None

    def __str__(self):
        if self.kind == "exhaustive":
            return "exhaustive"
        return f"random(seed={self.seed},count={self.count})"

    @classmethod
    def parse(cls, text: str) -> "Provenance":
        """Parse the header representation."""
        if text == "exhaustive":
            return cls()
        match = _RANDOM_RE.match(text)
        if match is None:
            raise CorpusFormatError(f"unknown provenance {text!r}")
        seed = match.group("seed")
        seed = None if seed == "None" else int(seed)
        return cls("random", seed, int(match.group("count")))


class Corpus:
    """
    Quasigroups of a single order, stored as a (count, n, n) uint8 array.

    Parameters
    ----------
    order
        The order of every model.
    tables
        The multiplication tables.
    dedup
        "raw" if every square appears, "iso" if one per isomorphism class.
    provenance
        How the models were obtained.
    """

    def __init__(
        self,
        order: int,
        tables: np.ndarray,
        dedup: dedup_type = "raw",
        provenance: Provenance = Provenance(),
    ):
        tables = np.asarray(tables, dtype=np.uint8).reshape(-1, order, order)
        tables.setflags(write=False)
        self.order = order
        self.tables = tables
        self.dedup = dedup
        self.provenance = provenance
        self._stack = None

    # --- constructors

    @classmethod
    def exhaustive(
        cls,
        order: int,
        dedup: dedup_type = "raw",
        workers: int = 1,
        allow_large: bool = False,
        cache_path: Optional[path_types] = CACHE_PATH,
    ) -> "Corpus":
        """
        Every Latin square of an order (dedup="raw") or one canonical
        representative per isomorphism class (dedup="iso").

        When cache_path is set, the corpus is read from (or written to) a
        file in that directory.
        """
        cached = _cache_file(cache_path, order, dedup)
        if cached is not None and cached.exists():
            logger.info("reading cached corpus %s", cached)
            return cls.read(cached)
        tables = latin_square_stack(order, workers=workers, allow_large=allow_large)
        if dedup == "iso":
            tables = unique_up_to_isomorphism(tables)
        corpus = cls(order, tables, dedup=dedup)
        if cached is not None:
            cached.parent.mkdir(parents=True, exist_ok=True)
            corpus.write(cached)
        return corpus

    @classmethod
    def random(cls, order: int, count: int, seed: Optional[int] = None) -> "Corpus":
        """count seeded random models; see :func:`random_stack`."""
        provenance = Provenance("random", seed, count)
        return cls(order, random_stack(order, count, seed), provenance=provenance)

    # --- access

    @property
    def stack(self) -> TableStack:
        """The tables with their divisions, for batched evaluation."""
        if self._stack is None:
            self._stack = TableStack.from_mul(self.tables)
        return self._stack

    def quasigroup(self, index: int) -> FiniteQuasigroup:
        """Return model number index."""
        return FiniteQuasigroup(self.tables[index])

    def __len__(self):
        return len(self.tables)

    def __iter__(self) -> Iterator[FiniteQuasigroup]:
        for index in range(len(self)):
            yield self.quasigroup(index)

    def __repr__(self):
        return (
            f"Corpus(order={self.order}, count={len(self)}, dedup={self.dedup}, "
            f"provenance={self.provenance})"
        )

    # --- io

    @property
    def header(self) -> str:
        return (
            f"{CORPUS_MAGIC} {CORPUS_VERSION} order={self.order} "
            f"dedup={self.dedup} provenance={self.provenance}"
        )

    def to_text(self) -> str:
        """Render the corpus file contents."""
        blocks = []
        for table in self.tables.tolist():
            rows = "\n".join(" ".join(str(x) for x in row) for row in table)
            blocks.append(f"{self.order}\n{rows}\n")
        return self.header + "\n" + "\n".join(blocks)

    @classmethod
    def from_text(cls, text: str) -> "Corpus":
        """Parse corpus file contents."""
        header, _, body = text.partition("\n")
        match = _HEADER_RE.match(header.strip())
        if match is None:
            raise CorpusFormatError(f"bad corpus header: {header!r}")
        if match.group("version") != CORPUS_VERSION:
            raise CorpusFormatError(f"unsupported version {match.group('version')}")
        order = int(match.group("order"))
        tables = []
        for num, block in enumerate(re.split(r"\n\s*\n", body.strip())):
            if not block.strip():
                continue
            lines = block.strip().splitlines()
            if lines[0].strip() != str(order) or len(lines) != order + 1:
                raise CorpusFormatError(f"block {num} is not an order {order} table")
            try:
                table = np.array([line.split() for line in lines[1:]], dtype=np.int64)
            except ValueError:
                raise CorpusFormatError(f"block {num} has non-integer entries")
            bad_entries = (table < 0) | (table >= order)
            if table.shape != (order, order) or bad_entries.any():
                raise CorpusFormatError(f"block {num} is malformed")
            if find_latin_violation(table) is not None:
                raise CorpusFormatError(f"block {num} is not a Latin square")
            tables.append(table)
        return cls(
            order,
            np.array(tables, dtype=np.uint8).reshape(-1, order, order),
            dedup=match.group("dedup"),
            provenance=Provenance.parse(match.group("provenance")),
        )

    def write(self, path: path_types) -> Path:
        """Write the corpus to a file."""
        path = Path(path)
        path.write_text(self.to_text())
        return path

    @classmethod
    def read(cls, path: path_types) -> "Corpus":
        """Read a corpus file."""
        return cls.from_text(Path(path).read_text())


def _cache_file(cache_path, order, dedup) -> Optional[Path]:
    """Path of the cache file for an exhaustive corpus, None if uncached."""
    if cache_path is None:
        return None
    return Path(cache_path) / f"order{order}-{dedup}{CORPUS_EXT}"
