"""
Trimediality, statement registry and verification reports.
"""
from quasiplus.verify.trimedial import TrimedialWitness, is_trimedial, trimedial_mask
from quasiplus.verify.statements import STATEMENTS, Statement, get_statement
from quasiplus.verify.report import VerificationReport, verify_statement
