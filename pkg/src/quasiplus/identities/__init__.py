"""
The identity language: terms, parsing, printing and evaluation.
"""
from quasiplus.identities.term import (
    BinOp,
    Identity,
    Op,
    Term,
    Var,
    rewrite_for_parastrophe,
    substitute,
    substitute_identity,
)
from quasiplus.identities.parse import (
    parse_identity,
    parse_term,
    print_identity,
    print_term,
)
from quasiplus.identities.registry import (
    IDENTITY_TEXT,
    NAMED_IDENTITIES,
    get_identity,
)
from quasiplus.identities.evaluate import (
    TableStack,
    Witness,
    eval_term,
    holds,
    satisfaction_mask,
    satisfies_all,
)
