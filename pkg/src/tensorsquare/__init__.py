"""Non-abelian tensor squares of finite groups through nu(G) and coset enumeration."""

__version__ = "0.1.0"

from .abelian import AbelianType, gamma_whitehead, nabla_abelian, smith_normal_form, tensor_abelian
from .catalog import CATALOG, STANDARD_CORPUS, resolve
from .config import RunConfig
from .coset_enum import CosetOverflow, ElementCapExceeded, todd_coxeter
from .groups import GroupTable, Subgroup, fingerprint
from .nu import TensorAnalysis, direct_tensor_square, full_report, nu_image, tensor_square
from .presentation import Presentation, parse_presentation
from .theorems import GdcSpec, VerificationOutcome, build_gdc, run_suite, witt_rank

__all__ = [
    "AbelianType", "gamma_whitehead", "nabla_abelian", "smith_normal_form", "tensor_abelian",
    "CATALOG", "STANDARD_CORPUS", "resolve", "RunConfig", "CosetOverflow", "ElementCapExceeded",
    "todd_coxeter", "GroupTable", "Subgroup", "fingerprint", "TensorAnalysis", "direct_tensor_square",
    "full_report", "nu_image", "tensor_square", "Presentation", "parse_presentation", "GdcSpec",
    "VerificationOutcome", "build_gdc", "run_suite", "witt_rank",
]
