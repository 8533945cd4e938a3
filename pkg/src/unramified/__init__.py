"""Arithmetic in unramified extensions Z_{p^n} of the p-adic integers, modulo p^N.

The ring is presented as (Z/p^N)[x] / phi(x) with phi monic and irreducible
modulo p.  Modular composition and power projection are the two workhorse
subroutines; Frobenius conjugates, Frobenius-equation solving, Teichmuller
lifts and moduli, minimal polynomials, traces and norms are built on them.

>>> from unramified import new_context, frob_element
>>> ctx = new_context(5, 2, 2, [1, 1, 1])
>>> frob_element(ctx.element([3, 7]))
UnramElement([21, 18])
"""

__version__ = "0.1.0"

from types import ModuleType as _ModuleType

from .arith import add, inv, mul, neg, power, reduce_mod_p, scalar_mul, sub
from .charpoly import (
    is_teichmuller_modulus,
    minimal_polynomial,
    norm,
    norm_resultant,
    teichmuller_context,
    teichmuller_modulus,
    trace,
)
from .context import (
    RingContext,
    UnramElement,
    element_from_coeffs,
    new_context,
    random_element,
    random_inert_polynomial,
)
from .errors import (
    BadDegree,
    ContextMismatch,
    InstanceTooLarge,
    InternalInconsistency,
    NonUnit,
    NotIrreducible,
    NotMonic,
    NotPrime,
    PreconditionFailed,
    UnramifiedError,
    ZeroDivisorPivot,
)
from .frobenius import FrobImage, frob_element, frob_generator_lifted, frob_generator_mod_p
from .newton import NewtonProblem, lift_root, lift_root_trace
from .polyring import (
    DensePoly,
    ext_euclid,
    modcomp,
    minpoly_from_sequence,
    pdivrem_monic,
    pmul,
    power_projection,
    resultant,
)
from .semilinear import (
    FrobPolynomial,
    SemiLinearMap,
    gen_newton_lift,
    semilinear_power,
    solve_artin_schreier,
    teichmuller_lift,
)
from .zmod import ResidueInt, zadd, zinv, zmul, zneg, zreduce, zsub, zval

__all__ = [k for k, v in list(globals().items()) if not k.startswith("_") and not isinstance(v, _ModuleType)]
