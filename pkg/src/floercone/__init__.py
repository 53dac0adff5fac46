"""Exact GF(2) surgery calculus for filtered knot complexes.

Truncations of Alexander-graded complexes, dual-knot mapping cones,
integer-surgery cones, block-matrix surgery cubes, and the closed-form
rank formulas they cross-validate.
"""

from .borromean import BorromeanReport, fixture, grading_zero_rank
from .borromean import report as borromean_report
from .complexes import (GradedComplex, complex_from_dict, complex_from_profile,
                        complex_to_dict, dualize, ell, restriction_rank,
                        total_homology_rank, truncate_ge, validate)
from .gf2 import (Gf2Matrix, homology_rank, induced_homology_map_rank,
                  kernel_basis, kernel_matrix, mul, rank)
from .ranks import (ProfileWarning, RankVector, SimpleSurgeryParams, genus, h_inf,
                    h_minus_one, kernel_d1_size, parse_rank_vector, simplicity_gap,
                    surgery_params, y_one, y_pq, y_pq_from_h)
from .spinc import FramedSlope, SpinCQuotient, cone_partner, conj, reduce_mod
from .surgery import (ConeReport, CubeInstance, SurgeryMaps, assemble_mapping_cube,
                      build_d1, cube_assemble, cube_homology_rank, dual_knot_rank,
                      dual_knot_table, integer_surgery_rank, simple_blocks)
from .torus import (ScanRow, ell_closed, hm_rank_closed, scan_to_tsv, simple_scan,
                    staircase, torus_report)

__version__ = "0.1.0"

__all__ = [
    "BorromeanReport", "ConeReport", "CubeInstance", "FramedSlope", "Gf2Matrix",
    "GradedComplex", "ProfileWarning", "RankVector", "ScanRow",
    "SimpleSurgeryParams", "SpinCQuotient", "SurgeryMaps",
    "assemble_mapping_cube", "borromean_report", "build_d1", "complex_from_dict",
    "complex_from_profile", "complex_to_dict", "cone_partner", "conj",
    "cube_assemble", "cube_homology_rank", "dual_knot_rank", "dual_knot_table",
    "dualize", "ell", "ell_closed", "fixture", "genus", "grading_zero_rank",
    "h_inf", "h_minus_one", "hm_rank_closed", "homology_rank",
    "induced_homology_map_rank", "integer_surgery_rank", "kernel_basis",
    "kernel_d1_size", "kernel_matrix", "mul", "parse_rank_vector", "rank",
    "reduce_mod", "restriction_rank", "scan_to_tsv", "simple_blocks",
    "simple_scan", "simplicity_gap", "staircase", "surgery_params",
    "torus_report", "total_homology_rank", "truncate_ge", "validate", "y_one",
    "y_pq", "y_pq_from_h",
]
