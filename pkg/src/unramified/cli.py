"""Command-line interface: JSON element documents in, documents or decimals out.

An element document looks like::

    {"p": "5", "n": 2, "N": 2, "phi": ["1", "1", "1"], "value": ["3", "7"]}

``phi`` and ``value`` list decimal strings from the constant term up; ``phi``
has n+1 entries ending in "1" and ``value`` at most n.  Commands read
documents from the files named on the command line (or standard input), and
each file may hold one document or a JSON list of them.

Exit codes: 0 success, 1 usage error, 2 mathematical error, 3 parse error.
Failures are reported on standard error as one JSON object {code, message}.
"""

import argparse
import csv
import json
import re
import statistics
import sys
import time

from . import __version__
from .charpoly import minimal_polynomial, norm, norm_resultant, teichmuller_modulus, trace
from .checks import run_grid
from .context import RingContext, random_element, random_inert_polynomial
from .errors import ContextMismatch, InternalInconsistency, UnramifiedError
from .frobenius import frob_element
from .newton import NewtonProblem, lift_root
from .semilinear import solve_artin_schreier, teichmuller_lift

__all__ = ["run", "main", "parse_element", "element_document", "poly_document", "ParseError"]

BENCH_HEADER = ["op", "p", "n", "N", "reps", "median_ns", "seed"]
BENCH_OPS = ("add", "mul", "inv", "frob", "solve-as", "teich", "minpoly", "trace", "norm", "norm-res")
_DECIMAL = re.compile(r"[0-9]+\Z")


class ParseError(Exception):
    code = "ParseError"


class UsageError(Exception):
    code = "UsageError"


# -- documents


def _int_field(doc, key):
    if key not in doc:
        raise ParseError(f"missing field {key!r}")
    v = doc[key]
    if isinstance(v, bool):
        raise ParseError(f"field {key!r} must be an integer")
    if isinstance(v, int):
        if v < 0:
            raise ParseError(f"field {key!r} must be non-negative")
        return v
    if isinstance(v, str) and _DECIMAL.match(v):
        return int(v)
    raise ParseError(f"field {key!r} must be an integer or a decimal string")


def _decimal_list(doc, key):
    v = doc.get(key)
    if not isinstance(v, list):
        raise ParseError(f"field {key!r} must be a list of decimal strings")
    out = []
    for c in v:
        if not (isinstance(c, str) and _DECIMAL.match(c)):
            raise ParseError(f"field {key!r} holds {c!r}, not a decimal string")
        out.append(int(c))
    return out


def parse_element(doc, contexts=None):
    """Element document -> UnramElement.  ``contexts`` caches rings by key."""
    if not isinstance(doc, dict):
        raise ParseError("an element document must be a JSON object")
    p, n, N = _int_field(doc, "p"), _int_field(doc, "n"), _int_field(doc, "N")
    phi, value = _decimal_list(doc, "phi"), _decimal_list(doc, "value")
    if len(phi) != n + 1 or phi[-1] != 1:
        raise ParseError(f"phi must have {n + 1} entries ending in \"1\"")
    if len(value) > n:
        raise ParseError(f"value has {len(value)} entries, at most {n} allowed")
    key = (p, n, N, tuple(phi))
    contexts = {} if contexts is None else contexts
    if key not in contexts:
        contexts[key] = RingContext(p, n, N, phi)
    return contexts[key].element(value)


def element_document(a):
    ctx = a.ctx
    return {
        "p": str(ctx.p),
        "n": ctx.n,
        "N": ctx.N,
        "phi": [str(c) for c in ctx.phi],
        "value": [str(c) for c in a.trimmed()],
    }


def poly_document(f):
    """DensePoly -> {"p", "N", "coeffs"} with decimal-string coefficients."""
    return {"p": str(f.p), "N": f.N, "coeffs": [str(c) for c in f.coeffs]}


def _read_documents(paths, stdin):
    texts = []
    if not paths or paths == ["-"]:
        texts.append(stdin.read())
    else:
        for path in paths:
            try:
                with open(path, encoding="utf-8") as fh:
                    texts.append(fh.read())
            except OSError as exc:
                raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    docs = []
    for text in texts:
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        docs.extend(obj if isinstance(obj, list) else [obj])
    return docs


def _elements(args, stdin, count=None):
    contexts = {}
    els = [parse_element(d, contexts) for d in _read_documents(args.docs, stdin)]
    if count is not None and len(els) != count:
        raise UsageError(f"{args.command} takes {count} element document(s), got {len(els)}")
    return els


def _int_list(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


# -- commands


def _cmd_ctx_check(args, io):
    return [element_document(a) for a in _elements(args, io.stdin)]


def _unary(fn):
    def cmd(args, io):
        (a,) = _elements(args, io.stdin, 1)
        return fn(a, args)

    return cmd


def _binary(fn):
    def cmd(args, io):
        a, b = _elements(args, io.stdin, 2)
        return element_document(fn(a, b))

    return cmd


def _cmd_solve_as(args, io):
    alpha, beta, gamma = _elements(args, io.stdin, 3)
    return element_document(solve_artin_schreier(alpha, beta, gamma))


def _cmd_newton_lift(args, io):
    els = _elements(args, io.stdin)
    if not els:
        raise UsageError("newton-lift needs an initial approximation y0")
    *coeffs, y0 = els
    if args.poly is not None:
        if coeffs:
            raise UsageError("give either --poly or coefficient documents, not both")
        f = args.poly
    elif coeffs:
        f = coeffs
    else:
        raise UsageError("newton-lift needs --poly or coefficient documents before y0")
    return element_document(lift_root(NewtonProblem(f, y0)))


def _cmd_teichmod(args, io):
    (a,) = _elements(args, io.stdin, 1)
    return poly_document(teichmuller_modulus(a.ctx))


def _bench_op(op, a, b, p):
    if op == "add":
        return lambda: a + b
    if op == "mul":
        return lambda: a * b
    if op == "inv":
        u = a if a.is_unit() else a + 1
        return lambda: u.inverse()
    if op == "frob":
        return lambda: frob_element(a, 1)
    if op == "solve-as":
        u = b if b.is_unit() else b + 1
        return lambda: solve_artin_schreier(u, a * p, a)
    if op == "teich":
        return lambda: teichmuller_lift(a)
    if op == "minpoly":
        return lambda: minimal_polynomial(a)
    if op == "trace":
        return lambda: trace(a)
    if op == "norm":
        return lambda: norm(a)
    return lambda: norm_resultant(a)


def _cmd_bench(args, io):
    unknown = [op for op in args.ops if op not in BENCH_OPS]
    if unknown:
        raise UsageError(f"unknown bench op(s): {', '.join(unknown)}")
    if args.reps < 1:
        raise UsageError("--reps must be >= 1")
    writer = csv.writer(io.stdout, lineterminator="\n")
    writer.writerow(BENCH_HEADER)
    for p in args.p_list:
        for n in args.n_list:
            for N in args.N_list:
                ctx = RingContext(p, n, N, random_inert_polynomial(p, n, N, args.seed))
                a = random_element(ctx, args.seed)
                b = random_element(ctx, args.seed + 1)
                for op in args.ops:
                    fn = _bench_op(op, a, b, p)
                    fn()  # warm-up: fills the context's Frobenius cache
                    times = []
                    for _ in range(args.reps):
                        t0 = time.perf_counter_ns()
                        fn()
                        times.append(time.perf_counter_ns() - t0)
                    writer.writerow([op, p, n, N, args.reps, int(statistics.median(times)), args.seed])
                    io.stdout.flush()
    return None


def _cmd_selftest(args, io):
    failures = 0
    for p, n, N, bad, secs in run_grid(args.p_list, args.n_list, args.N_list, args.count, args.seed, extended=True):
        status = "ok" if not bad else f"FAIL ({len(bad)})"
        print(f"p={p} n={n} N={N} {status} {secs:.2f}s", file=io.stdout)
        for line in bad[:5]:
            print(f"  {line}", file=io.stdout)
        failures += len(bad)
    if failures:
        raise InternalInconsistency(f"{failures} mismatch(es) against the oracle")
    print("selftest passed", file=io.stdout)
    return None


# -- parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = _Parser(prog="unramified", description="Arithmetic in unramified extensions of Z_p modulo p^N.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    def add(name, fn, help_text, docs=True):
        sp = sub.add_parser(name, help=help_text, description=help_text)
        if docs:
            sp.add_argument("docs", nargs="*", metavar="FILE", help="JSON document files (default: standard input)")
        sp.set_defaults(func=fn)
        return sp

    add("ctx-check", _cmd_ctx_check, "validate contexts and echo canonical documents")
    add("add", _binary(lambda a, b: a + b), "sum of two elements")
    add("mul", _binary(lambda a, b: a * b), "product of two elements")
    add("inv", _unary(lambda a, _: element_document(a.inverse())), "inverse of a unit")
    frob = add("frob", _unary(lambda a, args: element_document(frob_element(a, args.k))), "Frobenius power sigma^k")
    frob.add_argument("--k", type=int, default=1, help="power of sigma (taken mod n, default 1)")
    add("solve-as", _cmd_solve_as, "solve alpha*sigma(X) + beta*X + gamma = 0 (documents alpha, beta, gamma)")
    nl = add("newton-lift", _cmd_newton_lift, "lift a simple root y0 of f (coefficient documents, then y0)")
    nl.add_argument("--poly", type=_int_list, help="f with integer coefficients, constant term first")
    add("teich", _unary(lambda a, _: element_document(teichmuller_lift(a))), "Teichmuller lift")
    add("minpoly", _unary(lambda a, _: poly_document(minimal_polynomial(a))), "minimal polynomial over Z_p")
    add("trace", _unary(lambda a, _: str(int(trace(a)))), "trace to Z_p")
    add("norm", _unary(lambda a, _: str(int(norm(a)))), "norm to Z_p")
    add("norm-res", _unary(lambda a, _: str(int(norm_resultant(a)))), "norm as Res(phi, a)")
    add("teichmod", _cmd_teichmod, "Teichmuller modulus of the document's ring")

    bench = add("bench", _cmd_bench, "time operations over a (p, n, N) grid, CSV output", docs=False)
    bench.add_argument("--p-list", type=_int_list, default=[5, 2**31 - 1])
    bench.add_argument("--n-list", type=_int_list, default=[16, 64])
    bench.add_argument("--N-list", type=_int_list, default=[4, 16])
    bench.add_argument("--reps", type=int, default=5)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--ops", type=lambda s: [t for t in s.split(",") if t], default=["mul", "inv", "frob"],
                       help=f"comma-separated subset of {','.join(BENCH_OPS)}")

    st = add("selftest", _cmd_selftest, "compare every operation with the naive oracle on a small grid", docs=False)
    st.add_argument("--p-list", type=_int_list, default=[2, 3, 5, 7])
    st.add_argument("--n-list", type=_int_list, default=[1, 2, 3])
    st.add_argument("--N-list", type=_int_list, default=[1, 2, 3])
    st.add_argument("--count", type=int, default=10, help="random samples per cell")
    st.add_argument("--seed", type=int, default=0)
    return parser


class _IO:
    def __init__(self, stdin, stdout, stderr):
        self.stdin, self.stdout, self.stderr = stdin, stdout, stderr


def _emit(result, out):
    if result is None:
        return
    if isinstance(result, str):
        print(result, file=out)
    else:
        print(json.dumps(result), file=out)


def _fail(err, code, exc):
    name = getattr(exc, "code", None) or type(exc).__name__
    print(json.dumps({"code": name, "message": str(exc)}), file=err)
    return code


def run(argv=None, stdin=None, stdout=None, stderr=None):
    """Execute one command; returns the process exit code."""
    io = _IO(stdin or sys.stdin, stdout or sys.stdout, stderr or sys.stderr)
    try:
        args = build_parser().parse_args(argv)
        _emit(args.func(args, io), io.stdout)
    except UsageError as exc:
        return _fail(io.stderr, 1, exc)
    except ParseError as exc:
        return _fail(io.stderr, 3, exc)
    except UnramifiedError as exc:
        return _fail(io.stderr, 2, exc)
    except (ContextMismatch, ValueError) as exc:
        return _fail(io.stderr, 1, exc)
    except SystemExit as exc:  # --help / --version
        return exc.code or 0
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
