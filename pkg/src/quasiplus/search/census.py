"""
Counts of models satisfying each named identity, per order.
"""
import logging
from functools import partial
from typing import Iterable, Optional

import numpy as np
import pandas as pd

from quasiplus.constants import CACHE_PATH, IDENTITY_KEYS, dedup_type
from quasiplus.identities.evaluate import TableStack, satisfaction_mask
from quasiplus.identities.registry import get_identity, identity_label
from quasiplus.search.corpus import Corpus
from quasiplus.utils.misc import map_chunks
from quasiplus.verify.trimedial import trimedial_mask

logger = logging.getLogger(__name__)


def _census_chunk(identities, trimedial, tables) -> np.ndarray:
    """Satisfaction counts of one chunk, one entry per column."""
    stack = TableStack.from_mul(tables)
    counts = [int(satisfaction_mask(stack, x).sum()) for x in identities]
    if trimedial:
        counts.append(int(trimedial_mask(stack).sum()))
    return np.array(counts, dtype=np.int64)


def identity_census(
    min_order: int = 1,
    max_order: int = 4,
    keys: Optional[Iterable[str]] = None,
    dedup: dedup_type = "raw",
    trimedial: bool = True,
    workers: int = 1,
    cache_path=CACHE_PATH,
) -> pd.DataFrame:
    """
    Count the models of each order satisfying each identity.

    Parameters
    ----------
    min_order, max_order
        The range of orders; each is enumerated exhaustively.
    keys
        Registry keys or identity text; defaults to every registry entry.
    dedup
        "raw" counts Latin squares, "iso" counts isomorphism classes.
    trimedial
        Add a "trimedial" column.
    workers
        Number of processes.
    cache_path
        Corpus cache directory, None to disable.

    Returns
    -------
    A DataFrame indexed by order with a "models" column and one column per
    identity.
    """
    keys = list(IDENTITY_KEYS if keys is None else keys)
    identities = [get_identity(x) for x in keys]
    columns = [identity_label(x) for x in keys]
    if trimedial:
        columns.append("trimedial")
    func = partial(_census_chunk, identities, trimedial)
    rows = {}
    for order in range(min_order, max_order + 1):
        corpus = Corpus.exhaustive(
            order, dedup=dedup, workers=workers, cache_path=cache_path
        )
        counts = np.sum(map_chunks(func, corpus.tables, workers), axis=0)
        rows[order] = [len(corpus)] + counts.tolist()
        logger.info("census of order %d done (%d models)", order, len(corpus))
    out = pd.DataFrame.from_dict(rows, orient="index", columns=["models"] + columns)
    out.index.name = "order"
    return out
