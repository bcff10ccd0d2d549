"""Exact Tristram-Levine signature functions and genus bounds from Seifert matrices."""

from .bounds import BoundsReport, Witness, bounds_report, g4_lower_bound, gds_lower_bound
from .realalg import RealAlgebraicNumber, isolate_real_roots, sign_at
from .seifert import (UNKNOT, SeifertMatrix, SeifertMatrixError, alexander, circle_roots,
                      connected_sum, mirror, parse_matrix, trace_polynomial, validate)
from .signature import (MINUS_ONE, AlgebraicPoint, RationalPoint, SignatureFunction,
                        SignatureValue, averaged_signature, congruence_diagonalize,
                        signature_at, signature_at_rational, signature_at_root,
                        signature_function)
from .table import KnotRecord, ScanCriteria, TableFormat, load_fixtures, parse_table, scan

__version__ = "0.1.0"
