"""Newton lifting of simple roots from mod p to mod p^N."""

from dataclasses import dataclass

from . import polyring as P
from .context import UnramElement
from .errors import PreconditionFailed
from .zmod import ResidueInt

__all__ = ["NewtonProblem", "lift_root", "lift_root_trace", "doubling_ladder"]


def doubling_ladder(N):
    """Precisions 1, 2, 4, ..., capped at N."""
    out = [1]
    while out[-1] < N:
        out.append(min(2 * out[-1], N))
    return out


@dataclass(frozen=True)
class NewtonProblem:
    """Find y = y0 mod p with f(y) = 0 mod p^precision.

    ``f`` is either a :class:`~unramified.polyring.DensePoly` / integer list
    (coefficients in Z_p) or a list whose entries may be ring elements
    (coefficients in Z_{p^n}), lowest degree first.
    """

    f: object
    y0: UnramElement
    precision: int = None


def _constant_coeffs(f):
    if isinstance(f, P.DensePoly):
        return list(f.coeffs)
    if all(isinstance(c, (int, ResidueInt)) for c in f):
        return [int(c) for c in f]
    return None


def _make_evaluator(f, root_ctx):
    """Returns (value, derivative) callables on ring elements."""
    const = _constant_coeffs(f)
    if const is not None:
        deriv = [i * c for i, c in enumerate(const)][1:]

        def compose(cs):
            # Z_p coefficients: evaluation is a modular composition in the ring.
            return lambda y: y.ctx._wrap(P.compose_list(cs, y.trimmed(), y.ctx.mod))

        return compose(const), compose(deriv)

    coeffs = [c if isinstance(c, UnramElement) else root_ctx._wrap([int(c) % root_ctx.modulus]) for c in f]
    deriv = [c * i for i, c in enumerate(coeffs)][1:]

    def horner(cs):
        def run(y):
            acc = y.ctx.zero()
            for c in reversed(cs):
                acc = acc * y + c.reduce(y.ctx.N)
            return acc

        return run

    return horner(coeffs), horner(deriv)


def lift_root_trace(problem):
    """All Newton iterates: entry j is correct modulo p^min(2^j, N)."""
    y0 = problem.y0
    ctx = y0.ctx
    N = ctx.N if problem.precision is None else problem.precision
    if not 1 <= N <= ctx.root.N:
        raise ValueError(f"target precision {N} unavailable in this context")
    value, deriv = _make_evaluator(problem.f, ctx.root)
    y = y0.reduce(1)
    if not value(y).is_zero():
        raise PreconditionFailed("f(y0) is not 0 mod p")
    if not deriv(y).is_unit():
        raise PreconditionFailed("f'(y0) is 0 mod p: not a simple root")
    trace = [y]
    for M in doubling_ladder(N)[1:]:
        # f(y) is already 0 mod p^prev, so 1/f'(y) is only needed to precision prev.
        correction = deriv(y).inverse()
        y = y.lift_to(ctx.at_precision(M))
        y = y - value(y) * correction.lift_to(y.ctx)
        trace.append(y)
    return trace


def lift_root(problem):
    """The unique y = y0 mod p with f(y) = 0 mod p^N (quadratic Newton iteration)."""
    return lift_root_trace(problem)[-1]
