"""
General utilities for quasiplus.
"""
from quasiplus.utils.misc import map_chunks, split_keys
