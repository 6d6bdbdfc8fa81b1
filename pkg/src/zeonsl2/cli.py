"""Command-line interface: emit matrices, states, spectra and run identity suites.

Exit status: 0 on success, 1 when a verification suite reports a failure,
2 on bad arguments (one-line diagnostic on stderr).  Data goes to stdout or
``--output``; output is byte-identical for identical arguments.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from collections.abc import Sequence

from .boolean import Order, format_rational, format_subset, parse_rational
from .operators import GroupParams, group_element, op_matrix, parse_op
from .ratmat import RationalMatrix, check_dense_n
from .schemes import (
    hadamard_via_group,
    hamming_matrix,
    johnson_matrix,
    krawtchouk_matrix,
    krawtchouk_poly,
    layer_block,
    moebius,
    poset_incidence,
    spectrum_table,
    sylvester_hadamard,
)
from .verify import SUITES, run_suite
from .zbasis import state_matrices, zbasis


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1/3" through as a value rather than an option
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")

    def error(self, message: str):  # one-line diagnostic, exit 2
        raise UsageError(message)


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# -- emission -------------------------------------------------------------------------


def emit_matrix(m: RationalMatrix, fmt: str = "csv", labels: bool = False) -> str:
    return m.to_json(labels) if fmt == "json" else m.to_csv(labels)


def emit_table(header: Sequence[str], rows: Sequence[Sequence], fmt: str = "csv") -> str:
    cells = [[format_rational(x) if not isinstance(x, str) else x for x in row] for row in rows]
    if fmt == "json":
        return json.dumps([dict(zip(header, row)) for row in cells], ensure_ascii=False) + "\n"
    return "".join(",".join(row) + "\n" for row in [list(header)] + cells)


def _states_text(n: int, ell: int | None, fmt: str) -> str:
    layers = range(n + 1) if ell is None else [ell]
    if fmt == "json":
        out = []
        for e in layers:
            w, d = state_matrices(n, e)
            out.append({"ell": e, "W": w.to_json_obj()["rows"], "D": [format_rational(x) for x in d.diagonal()]})
        return json.dumps({"n": n, "order": "graded-lex", "layers": out}) + "\n"
    chunks = []
    for e in layers:
        w, d = state_matrices(n, e)
        chunks.append(f"# n={n} ell={e} W\n" + w.to_csv())
        chunks.append(f"# n={n} ell={e} D\n" + d.to_csv())
    return "".join(chunks)


def _zbasis_text(n: int, fmt: str) -> str:
    states = zbasis(n)
    if fmt == "json":
        objs = [{
            "N": z.label.N, "i": z.label.i, "j": z.label.j,
            "ell": z.layer_label.ell, "k": z.layer_label.k,
            "norm2": format_rational(z.norm2),
            "terms": {format_subset(m): format_rational(c) for m, c in z.vector.items()},
        } for z in states]
        return json.dumps({"n": n, "states": objs}, ensure_ascii=False) + "\n"
    chunks = []
    for z in states:
        a, b = z.label, z.layer_label
        chunks.append(f"# |nNij>=|{n} {a.N} {a.i} {a.j}> |nlk>=|{n} {b.ell} {b.k}> "
                      f"norm2={format_rational(z.norm2)}\n")
        chunks.append(z.vector.to_text())
    return "".join(chunks)


# -- parser ---------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--labels", action="store_true", help="prefix rows/columns with subset labels")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")

    ordered = _Parser(add_help=False)
    ordered.add_argument("--order", choices=[o.value for o in Order], default=Order.GRADED_LEX.value)

    p = _Parser(prog="zeonsl2", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", metavar="VERB")
    sub.required = True

    def verb(name: str, help: str, *parents):
        return sub.add_parser(name, help=help, parents=[common, *parents])

    s = verb("op-matrix", "matrix of an operator: T, Tstar, U, L, C, E:i, D:i, H:i, T^k, Tstar^k, Tj:j", ordered)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--op", default="T")
    s.add_argument("--ell", type=int, help="emit only the layer-ell block (graded-lex)")

    s = verb("group", "group element g(s,u,t) = exp(sT) u^L exp(tT*)", ordered)
    s.add_argument("--n", type=int, required=True)
    for name in ("s", "u", "t"):
        s.add_argument(f"--{name}", type=_rational, required=True)
    s.add_argument("--ell", type=int, help="emit only the layer-ell block (graded-lex)")

    s = verb("zbasis", "all Z-basis states with labels and squared norms")
    s.add_argument("--n", type=int, required=True)

    s = verb("states", "per-layer state matrix W and squared norms D")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--ell", type=int)

    s = verb("scheme", "Hamming or Johnson relation matrix", ordered)
    s.add_argument("--kind", choices=("hamming", "johnson"), required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--j", type=int, help="Hamming distance")
    s.add_argument("--ell", type=int, help="Johnson layer")
    s.add_argument("--k", type=int, help="Johnson distance")

    s = verb("krawtchouk", "coefficients of K_j(x,n)/j!, or its value at X = T + T*", ordered)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--j", type=int, required=True)
    s.add_argument("--matrix", action="store_true")

    s = verb("spectrum", "eigenvalues of the Johnson matrix J_k on layer ell")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--ell", type=int, required=True)
    s.add_argument("--k", type=int, required=True)

    s = verb("poset", "incidence matrix exp(tT*) of the Boolean poset, or its Moebius inverse", ordered)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--t", type=_rational, default=parse_rational("1"))
    s.add_argument("--moebius", action="store_true")

    s = verb("hadamard", "Sylvester-Hadamard matrix (binary order) or g(1,-2,1)", ordered)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--method", choices=("sylvester", "group"), default="sylvester")

    s = verb("verify", "run identity suites; exit 1 on any failure")
    s.add_argument("--n", type=int, required=True, help="largest lattice size to check")
    s.add_argument("--suite", choices=("all", *SUITES), default="all")
    return p


def _need(args, *names: str) -> None:
    missing = [f"--{x}" for x in names if getattr(args, x) is None]
    if missing:
        raise UsageError(f"{args.verb} requires {' '.join(missing)}")


def _render(args) -> tuple[str, int]:
    fmt = args.format
    if args.n < 1:
        raise ValueError("--n must be a positive integer")
    if args.verb == "op-matrix":
        check_dense_n(args.n)
        order = Order.GRADED_LEX if args.ell is not None else args.order
        m = op_matrix(parse_op(args.op), args.n, order)
        if args.ell is not None:
            m = layer_block(m, _layer(args))
        return emit_matrix(m, fmt, args.labels), 0
    if args.verb == "group":
        p = GroupParams(args.s, args.u, args.t)
        if args.ell is not None:
            m = layer_block(group_element(p, args.n), _layer(args))
        else:
            m = group_element(p, args.n, args.order)
        return emit_matrix(m, fmt, args.labels), 0
    if args.verb == "zbasis":
        return _zbasis_text(args.n, fmt), 0
    if args.verb == "states":
        check_dense_n(args.n)
        if args.ell is not None:
            _layer(args)
        return _states_text(args.n, args.ell, fmt), 0
    if args.verb == "scheme":
        if args.kind == "hamming":
            _need(args, "j")
            m = hamming_matrix(args.n, args.j, args.order).matrix
        else:
            _need(args, "ell", "k")
            m = johnson_matrix(args.n, args.ell, args.k).matrix
        return emit_matrix(m, fmt, args.labels), 0
    if args.verb == "krawtchouk":
        if args.matrix:
            return emit_matrix(krawtchouk_matrix(args.j, args.n, args.order), fmt, args.labels), 0
        poly = krawtchouk_poly(args.j, args.n)
        return emit_table(("power", "coefficient"), list(enumerate(poly.coeffs)), fmt), 0
    if args.verb == "spectrum":
        return emit_table(("alpha", "eigenvalue", "multiplicity"), spectrum_table(args.n, args.ell, args.k), fmt), 0
    if args.verb == "poset":
        m = (moebius if args.moebius else poset_incidence)(args.n, args.t, args.order)
        return emit_matrix(m, fmt, args.labels), 0
    if args.verb == "hadamard":
        m = sylvester_hadamard(args.n) if args.method == "sylvester" else hadamard_via_group(args.n, args.order)
        return emit_matrix(m, fmt, args.labels), 0
    if args.verb == "verify":
        reports = run_suite(args.suite, args.n)
        failed = [r for r in reports if not r.ok]
        lines = [r.summary() for r in reports]
        for r in failed:
            lines.extend(f"  {f}" for f in r.failures[:10])
        total = sum(r.checked for r in reports)
        lines.append(f"{'FAIL' if failed else 'PASS'} total: {sum(r.passed for r in reports)}/{total} "
                     f"in {len(reports)} suites")
        return "".join(line + "\n" for line in lines), 1 if failed else 0
    raise UsageError(f"unknown verb {args.verb!r}")


def _layer(args) -> int:
    if not 0 <= args.ell <= args.n:
        raise ValueError(f"--ell must lie in 0..{args.n}")
    return args.ell


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        text, code = _render(args)
    except (UsageError, ValueError, ArithmeticError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"zeonsl2: error: {msg}", file=err)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
