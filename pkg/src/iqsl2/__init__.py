"""Exact symbolic kernel for rank-1 iota-divided powers.

Constructs the generator B = F + varsigma E K^-1 inside the quantized
enveloping algebra of sl2, builds both families of its divided powers, and
mechanically verifies their multiplication and comultiplication laws with
exact Laurent-polynomial arithmetic. The verify module exposes the check
suites; the cli module exposes them as the `iqsl2` command.
"""

from ._kernel import BACKEND as KERNEL_BACKEND
from .coeff import LaurentPoly, Scalar
from .errors import (
    DenominatorVanishes,
    DivisionByZero,
    IqslError,
    NegativeInput,
    NotIntegral,
    RequiresSpecialized,
    ResourceLimit,
    UnknownSuite,
    ZeroBase,
)
from .idp import (
    EV,
    ODD,
    PARITIES,
    BPolynomial,
    comult_direct,
    comult_theorem,
    comult_theorem_reversed,
    idp_basis_expand,
    idp_closed,
    idp_recursive,
    idp_to_pbw,
    mult_closed,
    s_component,
    s_component_reversed,
)
from .pbw import UElement, chi, divided_power, u_gen, u_h, u_h_binom
from .qcomb import qbinom, qfact, qint, qint_base
from .tensor import TensorElement, delta
from .verify import (
    SUITES,
    emit_table,
    expand_comult,
    expand_idp,
    run_suite,
    table_rows,
)

__all__ = [
    "KERNEL_BACKEND",
    "LaurentPoly",
    "Scalar",
    "IqslError",
    "DivisionByZero",
    "DenominatorVanishes",
    "RequiresSpecialized",
    "NotIntegral",
    "ZeroBase",
    "NegativeInput",
    "UnknownSuite",
    "ResourceLimit",
    "qint",
    "qint_base",
    "qfact",
    "qbinom",
    "EV",
    "ODD",
    "PARITIES",
    "BPolynomial",
    "idp_closed",
    "idp_recursive",
    "idp_basis_expand",
    "idp_to_pbw",
    "mult_closed",
    "s_component",
    "s_component_reversed",
    "comult_theorem",
    "comult_theorem_reversed",
    "comult_direct",
    "UElement",
    "u_gen",
    "u_h",
    "u_h_binom",
    "divided_power",
    "chi",
    "TensorElement",
    "delta",
    "SUITES",
    "run_suite",
    "table_rows",
    "emit_table",
    "expand_idp",
    "expand_comult",
]

__version__ = "0.1.0"
