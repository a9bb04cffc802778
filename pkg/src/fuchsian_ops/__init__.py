"""Exact computer algebra for parametric Fuchsian differential operators."""

from .params import (
    DenominatorVanishes,
    DivisionByZero,
    InexactDivision,
    ParamFrac,
    ParamPoly,
    Rat,
    RatFuncX,
    SYMBOLS,
    frac,
    poly,
    ratx,
    specialize,
)
from .weyl import (
    D,
    DiffOp,
    DivisionByZeroOperator,
    MixedForm,
    NonPolynomialCoefficients,
    THETA,
    ThetaPoly,
    X,
    adjoint,
    ext_euclid,
    from_mixed,
    op_ldivmod,
    op_mul,
    op_rdivmod,
    theta_shift,
    to_mixed,
)
from .catalog import (
    BadParameterCount,
    CatalogOperator,
    IndicialDoesNotSplit,
    MissingAccessoryParameter,
    NAMES,
    NonFuchsian,
    RiemannScheme,
    fuchs_check,
    make,
    param_map,
    riemann_scheme,
    spectral_type,
)
from .transforms import (
    GaugeFactor,
    McParams,
    addition,
    mc,
    mc_monodromy,
    order_drop,
    se3_to_se6,
    se5_to_se3,
    se6_to_se3,
    theta_conjugate,
)
from .shifts import (
    AnsatzShape,
    MappedRoute,
    ShiftPair,
    ShiftRoute,
    VerifyResult,
    builtin_shift_table,
    derive_reverse,
    shifted_assignment,
    solve_shift,
    svalue,
    svalue_matches,
    svalue_samples,
    verify_shift,
)
from .shift_tables import SvalueCase, svalue_cases
from .reducibility import (
    FactorWitness,
    Locus,
    NotDivisible,
    all_witnesses,
    apparent_flag,
    factor_type_witness,
    first_order_witnesses,
    gauss_witnesses,
    iter_witnesses,
    locus_table,
    on_locus_assignment,
)

__version__ = "0.1.0"
