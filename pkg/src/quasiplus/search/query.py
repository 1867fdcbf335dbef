"""
Model queries: find quasigroups satisfying some identities and violating
others.
"""
import logging
from functools import partial
from typing import List, NamedTuple, Optional, Sequence

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from quasiplus.constants import (
    CACHE_PATH,
    CHUNK_SIZE,
    MAX_EXHAUSTIVE_ORDER,
    dedup_type,
)
from quasiplus.core.quasigroup import FiniteQuasigroup
from quasiplus.identities.evaluate import TableStack, satisfaction_mask
from quasiplus.identities.registry import get_identity
from quasiplus.identities.term import Identity
from quasiplus.search.canonical import unique_up_to_isomorphism
from quasiplus.search.corpus import Corpus
from quasiplus.utils.misc import check_order, map_chunks

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ("order", "source", "enumerated", "satisfying", "returned")


class SearchQuery(BaseModel):
    """
    A search over all quasigroups with orders in [min_order, max_order].

    satisfy and violate hold registry keys (e.g. "El") or identity text
    (e.g. "x*y = y*x").

    Orders above the exhaustive limit are only searched when sample_count
    is set; those orders then use sample_count seeded random models.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    min_order: int = Field(1, gt=0)
    max_order: int = Field(gt=0)
    satisfy: List[str] = Field(default_factory=list)
    violate: List[str] = Field(default_factory=list)
    dedup: dedup_type = "raw"
    limit: Optional[int] = Field(None, gt=0)
    sample_count: Optional[int] = Field(None, gt=0)
    seed: int = 0
    allow_large: bool = False

    @field_validator("satisfy", "violate")
    @classmethod
    def _check_identities(cls, value):
        """Every entry must resolve to an identity."""
        for item in value:
            try:
                get_identity(item)
            except KeyError as err:
                raise ValueError(str(err))
        return list(value)

    @model_validator(mode="after")
    def _check_query(self):
        if self.min_order > self.max_order:
            msg = f"min_order {self.min_order} exceeds max_order {self.max_order}"
            raise ValueError(msg)
        overlap = set(self.satisfy_identities) & set(self.violate_identities)
        if overlap:
            shared = ", ".join(sorted(str(x) for x in overlap))
            raise ValueError(f"identities both satisfied and violated: {shared}")
        return self

    @property
    def satisfy_identities(self) -> List[Identity]:
        return [get_identity(x) for x in self.satisfy]

    @property
    def violate_identities(self) -> List[Identity]:
        return [get_identity(x) for x in self.violate]

    @property
    def orders(self) -> range:
        return range(self.min_order, self.max_order + 1)


class QueryResult(NamedTuple):
    """Models found by a query and the per-order summary."""

    models: List[FiniteQuasigroup]
    summary: pd.DataFrame

    def __len__(self):
        return len(self.models)


def filter_mask(
    tables: np.ndarray,
    satisfy: Sequence[Identity] = (),
    violate: Sequence[Identity] = (),
) -> np.ndarray:
    """
    True for models satisfying every identity of satisfy and none of violate.
    """
    out = np.ones(len(tables), dtype=bool)
    if not len(tables):
        return out
    stack = TableStack.from_mul(tables)
    for identity in satisfy:
        if out.any():
            out &= satisfaction_mask(stack, identity)
    for identity in violate:
        if out.any():
            out &= ~satisfaction_mask(stack, identity)
    return out


def _corpus_for_order(query: SearchQuery, order: int, workers: int, cache_path):
    """The models searched at one order."""
    if order > MAX_EXHAUSTIVE_ORDER and query.sample_count is not None:
        return Corpus.random(order, query.sample_count, seed=query.seed)
    check_order(order, MAX_EXHAUSTIVE_ORDER, query.allow_large, "exhaustive search")
    return Corpus.exhaustive(
        order, workers=workers, allow_large=query.allow_large, cache_path=cache_path
    )


def run_query(
    query: SearchQuery,
    workers: int = 1,
    cache_path=CACHE_PATH,
    chunk_size: int = CHUNK_SIZE,
) -> QueryResult:
    """
    Run a search query.

    Orders are searched in increasing order. With dedup="iso" the models
    of each order are the sorted canonical representatives of the
    satisfying isomorphism classes; with dedup="raw" they come in
    enumeration order. The search stops as soon as limit models have been
    collected.

    Parameters
    ----------
    query
        The query.
    workers
        Number of processes used to filter each order.
    cache_path
        Corpus cache directory, None to disable.
    chunk_size
        Number of models handed to a process at a time.

    Raises
    ------
    OrderTooLargeError if an order exceeds the exhaustive limit and neither
    sample_count nor allow_large is set.
    """
    func = partial(
        filter_mask,
        satisfy=query.satisfy_identities,
        violate=query.violate_identities,
    )
    models: List[FiniteQuasigroup] = []
    rows = []
    for order in query.orders:
        corpus = _corpus_for_order(query, order, workers, cache_path)
        parts = map_chunks(func, corpus.tables, workers, chunk_size)
        mask = np.concatenate(parts or [[]])
        found = corpus.tables[mask.astype(bool)]
        if query.dedup == "iso":
            found = unique_up_to_isomorphism(found)
        if query.limit is not None:
            found = found[: query.limit - len(models)]
        models.extend(FiniteQuasigroup(x) for x in found)
        source = str(corpus.provenance)
        rows.append((order, source, len(corpus), int(mask.sum()), len(found)))
        logger.info(
            "order %d: %d of %d models match", order, int(mask.sum()), len(corpus)
        )
        if query.limit is not None and len(models) >= query.limit:
            break
    summary = pd.DataFrame(rows, columns=list(SUMMARY_COLUMNS))
    return QueryResult(models, summary)
