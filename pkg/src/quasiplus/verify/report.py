"""
Verification of registered statements over corpora, and the reports.
"""
import logging
from functools import partial
from typing import Dict, List, Optional

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, model_validator
from typing_extensions import Literal

from quasiplus.constants import (
    CACHE_PATH,
    CHUNK_SIZE,
    MAX_WITNESSES,
    MIN_MODELS_FOR_BAR,
    status_type,
)
from quasiplus.core.io import table_to_text
from quasiplus.core.quasigroup import FiniteQuasigroup
from quasiplus.identities.evaluate import TableStack
from quasiplus.interfaces import ProgressBar
from quasiplus.search.canonical import canonical_tables
from quasiplus.search.corpus import Corpus
from quasiplus.utils.misc import chunk_array, get_progressbar, map_chunks
from quasiplus.verify.statements import Statement, get_statement

logger = logging.getLogger(__name__)


class Counterexample(BaseModel):
    """A model breaking one direction of a clause."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    order: int
    table: List[List[int]]
    clause: str
    direction: Literal["forward", "backward"]
    assignment: Dict[str, int]

    def to_text(self) -> str:
        values = ", ".join(f"{k}={v}" for k, v in self.assignment.items())
        head = f"order {self.order}, {self.direction} direction of {self.clause}"
        head += f": {values}" if values else ""
        table = table_to_text(FiniteQuasigroup(self.table))
        return head + "\n" + table.rstrip("\n")


class VerificationReport(BaseModel):
    """
    The outcome of checking a statement on every model of some corpora.

    models_per_order and sources are keyed by order; counterexamples is
    the number of failing models, witnesses the first few of them sorted
    by order, canonical form and table.
    """

    model_config = ConfigDict(extra="forbid")

    statement: str
    description: str
    orders: List[int]
    models_per_order: Dict[int, int]
    sources: Dict[int, str]
    models_checked: int
    counterexamples: int = 0
    status: status_type
    witnesses: List[Counterexample] = []

    @model_validator(mode="after")
    def _check_status(self):
        """Verified reports carry no witnesses, failed ones at least one."""
        if self.status == "Verified" and (self.witnesses or self.counterexamples):
            raise ValueError("a verified report cannot contain witnesses")
        if self.status == "CounterexampleFound" and not self.witnesses:
            raise ValueError("a failed report needs at least one witness")
        return self

    @property
    def verified(self) -> bool:
        return self.status == "Verified"

    @property
    def summary(self) -> pd.DataFrame:
        """Models checked per order."""
        data = [(x, self.sources[x], self.models_per_order[x]) for x in self.orders]
        return pd.DataFrame(data, columns=["order", "source", "models"])

    def to_text(self) -> str:
        """Human readable report; the first line is the verdict."""
        if self.verified:
            lines = [f"Verified: {self.models_checked} models"]
        else:
            lines = [
                f"CounterexampleFound: {self.counterexamples} of "
                f"{self.models_checked} models"
            ]
        lines.append(f"statement: {self.statement} ({self.description})")
        for order in self.orders:
            models = self.models_per_order[order]
            lines.append(f"order {order}: {models} models, {self.sources[order]}")
        for num, witness in enumerate(self.witnesses, 1):
            lines.append(f"witness {num}: {witness.to_text()}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return self.model_dump_json(indent=2) + "\n"


def _failure_chunk(statement_id: str, tables: np.ndarray) -> np.ndarray:
    """Failure masks of a chunk of tables; module level so it pickles."""
    statement = get_statement(statement_id)
    return statement.failure_masks(TableStack.from_mul(tables))


def _failure_masks(statement, corpus, workers, progress, chunk_size) -> np.ndarray:
    """Failure masks of a whole corpus, shape (num_directions, count)."""
    func = partial(_failure_chunk, statement.id)
    if workers > 1:
        parts = map_chunks(func, corpus.tables, workers, chunk_size)
    else:
        bar: Optional[ProgressBar] = None
        if progress:
            bar = get_progressbar(len(corpus), min_value=MIN_MODELS_FOR_BAR)
        parts, done = [], 0
        for chunk in chunk_array(corpus.tables, chunk_size):
            parts.append(func(chunk))
            done += len(chunk)
            if bar is not None:
                bar.update(done)
        if bar is not None:
            bar.finish()
    return np.concatenate(parts, axis=1)


def _counterexamples(
    statement: Statement, corpus: Corpus, masks: np.ndarray
) -> List[tuple]:
    """Sortable (key, index, direction row) entries for every failure."""
    rows, models = np.nonzero(masks)
    if not len(models):
        return []
    failing = np.unique(models)
    canonical = canonical_tables(corpus.tables[failing])
    keys = {
        int(model): (corpus.order, canon.tobytes(), corpus.tables[model].tobytes())
        for model, canon in zip(failing, canonical)
    }
    return [(keys[int(m)] + (int(r),), int(m), int(r)) for r, m in zip(rows, models)]


def verify_statement(
    statement_id: str,
    max_order: int,
    sample_order_6: Optional[int] = None,
    seed: int = 0,
    workers: int = 1,
    allow_large: bool = False,
    cache_path=CACHE_PATH,
    progress: bool = False,
    chunk_size: int = CHUNK_SIZE,
) -> VerificationReport:
    """
    Check a registered statement on every quasigroup of order <= max_order.

    Parameters
    ----------
    statement_id
        A key of the statement registry.
    max_order
        Every Latin square of orders 1..max_order is checked.
    sample_order_6
        If given, also check this many seeded random models of order 6.
    seed
        Seed of the order 6 sample.
    workers
        Number of processes.
    allow_large
        Permit exhaustive orders above the limit.
    cache_path
        Corpus cache directory, None to disable.
    progress
        Show a progress bar for large corpora (single process only).
    chunk_size
        Number of models evaluated (or handed to a process) at a time.

    Raises
    ------
    UnknownStatementError for an unregistered statement.
    OrderTooLargeError if max_order exceeds the exhaustive limit.
    """
    statement = get_statement(statement_id)
    if max_order < 1:
        raise ValueError(f"max_order must be positive, got {max_order}")
    if sample_order_6 and max_order >= 6:
        raise ValueError("sample_order_6 needs max_order below 6")
    directions = statement.directions()
    corpora = [
        Corpus.exhaustive(
            order, workers=workers, allow_large=allow_large, cache_path=cache_path
        )
        for order in range(1, max_order + 1)
    ]
    if sample_order_6:
        corpora.append(Corpus.random(6, sample_order_6, seed=seed))
    entries = []
    failing_models = 0
    for corpus in corpora:
        masks = _failure_masks(statement, corpus, workers, progress, chunk_size)
        failing_models += int(masks.any(axis=0).sum())
        found = _counterexamples(statement, corpus, masks)
        entries.extend((key, corpus, model, row) for key, model, row in found)
        logger.info(
            "%s: order %d, %d models (%s), %d counterexamples",
            statement.id,
            corpus.order,
            len(corpus),
            corpus.provenance,
            int(masks.any(axis=0).sum()),
        )
    entries.sort(key=lambda x: x[0])
    witnesses = []
    for _, corpus, model, row in entries[:MAX_WITNESSES]:
        quasigroup = corpus.quasigroup(model)
        clause_index, direction = directions[row]
        clause = statement.clauses[clause_index]
        witnesses.append(
            Counterexample(
                order=corpus.order,
                table=quasigroup.to_list(),
                clause=str(clause),
                direction=direction,
                assignment=clause.explain(quasigroup, direction),
            )
        )
    orders = [x.order for x in corpora]
    return VerificationReport(
        statement=statement.id,
        description=statement.description,
        orders=orders,
        models_per_order={x.order: len(x) for x in corpora},
        sources={x.order: str(x.provenance) for x in corpora},
        models_checked=sum(len(x) for x in corpora),
        counterexamples=failing_models,
        status="Verified" if not failing_models else "CounterexampleFound",
        witnesses=witnesses,
    )
