"""Command line front end.

Four subcommands: ``matrix`` emits a differentiation matrix (or its
antidifferentiation / generalized-inverse companion with ``--pinv``),
``weights`` emits barycentric weights, ``verify`` runs the invariant
suite, and ``experiment`` reproduces the double-precision conditioning
runs as CSV.

Serialization is text-only and round-trips: exact rationals as "p/q"
(bare integers without the slash), floats via ``repr``, complex values
as "a+bi".  Exit codes: 0 success, 1 verification failure, 2 usage
error (including malformed values and inconsistent flag combinations).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import bernstein, degree_graded, experiments, hermite, lagrange, structure, verify
from .core import (
    BernsteinBasis,
    DegreeGradedBasis,
    DenseMatrix,
    Field,
    HermiteBasis,
    LagrangeBasis,
    NodeSet,
    promote_matrix,
)

_MATRIX_BASES = ("monomial", "chebyshev", "legendre", "newton",
                 "lagrange", "hermite", "bernstein", "recurrence")
_DEGREE_BASES = ("monomial", "chebyshev", "legendre", "bernstein", "recurrence")


class UsageError(Exception):
    """Bad flags or unparseable values; reported on stderr, exit code 2."""


# ------------------------------------------------------------ scalars

def parse_complex(s: str) -> complex:
    """Parse "a+bi" (also bare "a", "bi", "i", "-i"); exponents allowed."""
    t = s.strip().replace(" ", "")
    if not t:
        raise ValueError("empty complex literal")
    if t[-1] not in "iI":
        return complex(float(t), 0.0)
    body = t[:-1]
    # split at the last sign that is neither leading nor part of an exponent
    for k in range(len(body) - 1, 0, -1):
        if body[k] in "+-" and body[k - 1] not in "eE":
            re_part, im_part = body[:k], body[k:]
            break
    else:
        re_part, im_part = "", body
    if im_part in ("", "+"):
        im = 1.0
    elif im_part == "-":
        im = -1.0
    else:
        im = float(im_part)
    return complex(float(re_part) if re_part else 0.0, im)


def parse_scalar(s: str, field: Field):
    try:
        if field is Field.RATIONAL:
            return Fraction(s)
        if field is Field.REAL:
            return float(s)
        return parse_complex(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse {s.strip()!r} as a {field.value} scalar") from exc


def format_scalar(x) -> str:
    if isinstance(x, complex):
        sign = "-" if x.imag < 0 else "+"
        return f"{x.real!r}{sign}{abs(x.imag)!r}i"
    if isinstance(x, float):
        return repr(x)
    return str(Fraction(x))


def _read_values(spec: str) -> list[str]:
    """Split a comma list, or the contents of "@path", into raw tokens."""
    if spec.startswith("@"):
        try:
            text = Path(spec[1:]).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {spec[1:]!r}: {exc}") from exc
        tokens = re.split(r"[,\s]+", text.strip())
    else:
        tokens = spec.split(",")
    out = [tok.strip() for tok in tokens if tok.strip()]
    if not out:
        raise UsageError(f"no values found in {spec!r}")
    return out


def parse_scalar_list(spec: str, field: Field) -> list:
    return [parse_scalar(tok, field) for tok in _read_values(spec)]


def parse_int_list(spec: str) -> list[int]:
    try:
        return [int(tok) for tok in _read_values(spec)]
    except ValueError as exc:
        raise UsageError(f"expected a comma list of integers, got {spec!r}") from exc


# ------------------------------------------------------------ output

def matrix_to_csv(M: DenseMatrix) -> str:
    lines = [",".join(format_scalar(e) for e in M.row(i)) for i in range(M.rows)]
    return "\n".join(lines) + "\n"


def matrix_to_json(M: DenseMatrix, basis_name: str) -> str:
    obj = {
        "basis": basis_name,
        "dimension": M.rows,
        "field": M.field.value,
        "entries": [[format_scalar(e) for e in M.row(i)] for i in range(M.rows)],
    }
    return json.dumps(obj, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise UsageError(f"cannot write {out!r}: {exc}") from exc
    else:
        sys.stdout.write(text)


# ------------------------------------------------------------ matrix

def _parse_node_set(args, field: Field) -> NodeSet:
    nodes = parse_scalar_list(args.nodes, field)
    conf = parse_int_list(args.confluency) if args.confluency is not None else None
    if conf is not None and len(conf) != len(nodes):
        raise UsageError(f"{len(nodes)} nodes but {len(conf)} confluencies")
    return NodeSet(nodes, conf)


def _generic_pinv(D: DenseMatrix, basis_obj) -> DenseMatrix:
    if D.field is not Field.RATIONAL:
        print("polydiff: warning: pseudo-inverse computed in floating point; "
              "entries may lose accuracy", file=sys.stderr)
    V = structure.build_V(structure.monomial_images(basis_obj))
    return structure.pseudo_inverse(D, V)


def cmd_matrix(args) -> int:
    basis = args.basis
    field = Field(args.field)
    if basis in _DEGREE_BASES:
        if args.nodes is not None:
            raise UsageError(f"--nodes does not apply to --basis {basis}")
        if args.confluency is not None:
            raise UsageError(f"--confluency does not apply to --basis {basis}")
    else:
        if args.degree is not None:
            raise UsageError(f"--degree does not apply to --basis {basis}; "
                             "the node list fixes the dimension")
        if args.nodes is None:
            raise UsageError(f"--basis {basis} requires --nodes")
    if basis != "recurrence" and (args.alpha or args.beta or args.gamma):
        raise UsageError("--alpha/--beta/--gamma apply to --basis recurrence only")
    if basis in _DEGREE_BASES and basis != "recurrence" and args.degree is None:
        raise UsageError(f"--basis {basis} requires --degree")

    if basis == "monomial":
        n = args.degree
        D = degree_graded.diff_matrix_degree_graded(degree_graded.monomial_recurrence(n), n)
        M = _generic_pinv(D, degree_graded.monomial_basis(n)) if args.pinv else D
        M = promote_matrix(M, field)
    elif basis == "chebyshev":
        n = args.degree
        M = (degree_graded.chebyshev_antideriv_matrix(n) if args.pinv
             else degree_graded.chebyshev_diff_matrix(n))
        M = promote_matrix(M, field)
    elif basis == "legendre":
        n = args.degree
        M = (degree_graded.legendre_antideriv_matrix(n) if args.pinv
             else degree_graded.diff_matrix_degree_graded(degree_graded.legendre_recurrence(n), n))
        M = promote_matrix(M, field)
    elif basis == "bernstein":
        n = args.degree
        D = bernstein.diff_matrix_bernstein(n)
        M = _generic_pinv(D, BernsteinBasis(n)) if args.pinv else D
        M = promote_matrix(M, field)
    elif basis == "recurrence":
        if args.alpha is None:
            raise UsageError("--basis recurrence requires --alpha")
        alpha = parse_scalar_list(args.alpha, field)
        beta = parse_scalar_list(args.beta, field) if args.beta is not None else None
        gamma = parse_scalar_list(args.gamma, field) if args.gamma is not None else None
        rec = degree_graded.RecurrenceSpec(alpha, beta, gamma)
        n = args.degree if args.degree is not None else len(alpha)
        D = degree_graded.diff_matrix_degree_graded(rec, n)
        M = _generic_pinv(D, DegreeGradedBasis(rec, n, name="recurrence")) if args.pinv else D
    elif basis == "newton":
        ns = _parse_node_set(args, field)
        D = degree_graded.newton_diff_matrix(ns)
        M = _generic_pinv(D, degree_graded.newton_basis(ns)) if args.pinv else D
    elif basis == "lagrange":
        ns = _parse_node_set(args, field)
        D = lagrange.diff_matrix_lagrange(ns)
        M = _generic_pinv(D, LagrangeBasis(ns)) if args.pinv else D
    else:  # hermite
        ns = _parse_node_set(args, field)
        D = hermite.diff_matrix_hermite(ns)
        M = _generic_pinv(D, HermiteBasis(ns)) if args.pinv else D

    text = matrix_to_json(M, basis) if args.fmt == "json" else matrix_to_csv(M)
    _emit(text, args.out)
    return 0


# ------------------------------------------------------------ weights

def cmd_weights(args) -> int:
    field = Field(args.field)
    ns = _parse_node_set(args, field)
    if ns.is_simple:
        w = lagrange.bary_weights(ns)
        rows = [(i, 0, b) for i, b in enumerate(w.weights)]
    else:
        w = hermite.gen_bary_weights(ns)
        rows = [(i, j, b) for i, wi in enumerate(w.weights) for j, b in enumerate(wi)]
    if args.fmt == "json":
        obj = {
            "nodes": [format_scalar(t) for t in ns.nodes],
            "confluencies": list(ns.confluencies),
            "field": ns.field.value,
            "weights": [[i, j, format_scalar(b)] for i, j, b in rows],
        }
        text = json.dumps(obj, indent=2) + "\n"
    else:
        text = "\n".join(f"{i},{j},{format_scalar(b)}" for i, j, b in rows) + "\n"
    _emit(text, args.out)
    return 0


# ------------------------------------------------------------ verify

def cmd_verify(args) -> int:
    results = verify.run_checks(args.basis)
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{status} {r.name}: {r.detail}")
    failed = sum(1 for r in results if not r.ok)
    print(f"{len(results)} checks, {len(results) - failed} passed, {failed} failed")
    return 1 if failed else 0


# ------------------------------------------------------------ experiment

def cmd_experiment(args) -> int:
    if args.which == "lagrange-error":
        if args.confluency not in (None, 1):
            raise UsageError("lagrange-error runs at confluency 1")
        confluency = 1
    else:
        confluency = 3 if args.confluency is None else args.confluency
        if confluency < 1:
            raise UsageError("confluency must be at least 1")
    sizes = parse_int_list(args.n) if args.n is not None else None
    records = experiments.run_experiment(args.which, args.nodes, confluency, sizes)
    _emit(experiments.records_to_csv(records), args.out)
    return 0


# ------------------------------------------------------------ driver

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="polydiff",
        description="Differentiation matrices for polynomial bases.")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("matrix", help="emit a differentiation matrix")
    m.add_argument("--basis", required=True, choices=_MATRIX_BASES)
    m.add_argument("--degree", type=int,
                   help="polynomial degree (dimension - 1) for degree-indexed bases")
    m.add_argument("--nodes",
                   help="comma list of nodes, or @file (spell a leading minus as --nodes=-1,0,1)")
    m.add_argument("--confluency", help="comma list of per-node confluencies")
    m.add_argument("--alpha", help="recurrence coefficients of phi_{j+1} (comma list)")
    m.add_argument("--beta", help="recurrence coefficients of phi_j (comma list)")
    m.add_argument("--gamma", help="recurrence coefficients of phi_{j-1} (comma list)")
    m.add_argument("--field", choices=[f.value for f in Field], default="rational")
    m.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    m.add_argument("--pinv", action="store_true",
                   help="emit the antidifferentiation companion (Chebyshev, Legendre) "
                        "or the structured generalized inverse (other bases)")
    m.add_argument("--out", help="write to this path instead of standard output")
    m.set_defaults(func=cmd_matrix)

    w = sub.add_parser("weights", help="emit barycentric weights as rows i,j,weight")
    w.add_argument("--nodes", required=True,
                   help="comma list of nodes, or @file (spell a leading minus as --nodes=-1,0,1)")
    w.add_argument("--confluency", help="comma list of per-node confluencies")
    w.add_argument("--field", choices=[f.value for f in Field], default="rational")
    w.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    w.add_argument("--out", help="write to this path instead of standard output")
    w.set_defaults(func=cmd_weights)

    v = sub.add_parser("verify", help="run the invariant suite")
    v.add_argument("--basis", choices=verify.KNOWN_BASES,
                   help="restrict to checks for one basis family")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("experiment", help="run a conditioning experiment, CSV output")
    e.add_argument("--which", required=True, choices=experiments.EXPERIMENTS)
    e.add_argument("--nodes", choices=experiments.NODE_FAMILIES, default="chebyshev")
    e.add_argument("--confluency", type=int,
                   help="confluency at every node (default 3 for the hermite experiments)")
    e.add_argument("--n", help="comma list of sizes overriding the built-in list")
    e.add_argument("--out", help="write to this path instead of standard output")
    e.set_defaults(func=cmd_experiment)
    return p


_VALUE_FLAGS = ("--nodes", "--alpha", "--beta", "--gamma")


def _absorb_negative_values(argv: list[str]) -> list[str]:
    """Turn ``--nodes -1,0,1`` into ``--nodes=-1,0,1`` so argparse accepts it."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and re.match(r"-[\d.]", argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_absorb_negative_values(
        list(sys.argv[1:] if argv is None else argv)))
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"polydiff: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # constructor-level rejections (duplicate nodes, bad degrees, ...)
        print(f"polydiff: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
