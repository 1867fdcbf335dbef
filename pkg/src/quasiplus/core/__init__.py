"""
Finite quasigroups: tables, divisions, parastrophes and closures.
"""
from quasiplus.core.quasigroup import (
    ElementMap,
    FiniteQuasigroup,
    ParastropheKind,
    cyclic_group,
    from_mul_table,
    from_symbol_table,
    is_latin_square,
)
from quasiplus.core.closure import (
    generated_subquasigroup,
    is_endomorphism,
    maps_commute_ef,
)
