"""Exact cyclotomic arithmetic and real-subfield linear algebra."""
from .field import CycNum, cyc_conj, cyc_reduce, cyclotomic_polynomial, euler_phi, imag_unit, root_of_unity
from .linalg import (RationalKernelBasis, im_part, inverse, kernel_over_real_subfield, matmul, rank, re_part,
                     real_rows,
                     rref, span_rref)
from .matrix import CycMatrix, permutation_matrix
from .render import format_cyc, parse_cyc

__all__ = [
    "CycMatrix",
    "CycNum",
    "RationalKernelBasis",
    "cyc_conj",
    "cyc_reduce",
    "cyclotomic_polynomial",
    "euler_phi",
    "format_cyc",
    "im_part",
    "inverse",
    "matmul",
    "imag_unit",
    "kernel_over_real_subfield",
    "parse_cyc",
    "permutation_matrix",
    "rank",
    "re_part",
    "real_rows",
    "root_of_unity",
    "rref",
    "span_rref",
]
