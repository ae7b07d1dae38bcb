"""Command-line front end.

Exit codes: 0 success, 1 property/bound violation, 2 parse error,
3 domain error, 4 resource guard, 5 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from ._backend import BACKEND
from .bounds import compound_norm_bound, eig_product_lower, eig_product_upper, is_singular
from .compound import compound
from .config import DEFAULTS
from .errors import DimensionError, DomainError, NumericalFailure, ParseError, ResourceError
from .extremal import (
    MonomialSpec,
    first_row_ones,
    fourier,
    hadamard_order_exponent,
    hadamard_sylvester,
    monomial,
    random_monomial,
    theta2_extremal,
    unit_diag_psd,
)
from .linalg import ALL_NORMS, NormKind, determinant, eigenvalues, eigh, op_norm
from .matrixio import format_matrix, read_matrix
from .verify import ALL_CLASSES, MatrixClass, SweepConfig, run_sweep

EXIT_OK, EXIT_VIOLATION, EXIT_PARSE, EXIT_DOMAIN, EXIT_RESOURCE, EXIT_NUMERICAL = range(6)


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors routed to exit code 2 via ParseError."""

    def error(self, message):
        raise ParseError(f"{self.prog}: {message}")


def _g(x) -> str:
    """Human-readable number, 6 significant digits."""
    if x is None:
        return "-"
    return f"{x:.6g}"


def _norm(text):
    try:
        return NormKind.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit_matrix(a, out):
    text = format_matrix(a)
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _dump(obj):
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


# --------------------------------------------------------------------------


def cmd_compound(args) -> int:
    a = read_matrix(args.input)
    c = compound(a, args.k)
    norms = {p.value: op_norm(c.matrix, p) for p in ALL_NORMS}
    if args.out is not None:
        _emit_matrix(c.matrix, args.out)
    if args.json:
        _dump({"n": c.base_n, "k": c.k, "size": c.size, "norms": norms, "out": args.out})
        return EXIT_OK
    if args.out is None:
        _emit_matrix(c.matrix, None)
    print(f"# C({c.base_n},{c.k}) = {c.size}")
    print("# norms: " + "  ".join(f"{k}={_g(v)}" for k, v in norms.items()))
    return EXIT_OK


def _print_report(d, title):
    print(title)
    for key in ("quantity", "bound", "ratio"):
        print(f"  {key:<9}{_g(d[key])}")
    print(f"  theta    {_g(d['theta']['value'])} ({d['theta']['kind']})")
    print(f"  tight    {str(d['tight']).lower()}")
    if d.get("rows") is not None:
        print(f"  columns  {_g(d['columns'])}")
        print(f"  rows     {_g(d['rows'])}")
        print(f"  winner   {d['winner']}")


def cmd_bound(args) -> int:
    a = read_matrix(args.input)
    r = compound_norm_bound(a, args.k, args.mu, args.nu)
    holds = r.holds(DEFAULTS.bound)
    d = {**r.to_dict(), "holds": holds}
    if args.json:
        _dump(d)
    else:
        _print_report(d, f"{args.mu.value}(C_{args.k}(A)) <= theta_{args.k}({args.mu.value},{args.nu.value}) "
                         f"* max prod {args.nu.value}(col)")
    return EXIT_OK if holds else EXIT_VIOLATION


def cmd_eigbound(args) -> int:
    a = read_matrix(args.input)
    n = a.shape[0] if a.ndim == 2 else 0
    if args.smallest:
        if a.shape[0] != a.shape[1]:
            raise DimensionError(f"expected a square matrix, got {a.shape[0]}x{a.shape[1]}")
        if is_singular(a):
            raise DomainError("--smallest needs a nonsingular matrix: det(A) is zero to working precision, "
                              "so the smallest eigenvalue product has no positive lower bound")
        if not 1 <= args.k < n:
            raise DomainError(f"--smallest needs 1 <= k < n, got n={n}, k={args.k}")
    spectrum = eigenvalues(a)
    r = eig_product_upper(a, args.k, args.norm, _spectrum=spectrum)
    d = {**r.to_dict(), "mode": "largest", "holds": r.holds(DEFAULTS.eig_bound)}
    if args.smallest:
        low = eig_product_lower(a, args.k, args.norm, _spectrum=spectrum)
        smallest = float(np.prod(np.abs(spectrum[args.k:])))
        d.update(mode="smallest", lower_bound=low, smallest_product=smallest,
                 holds=low <= smallest + DEFAULTS.eig_bound * max(1.0, smallest))
    if args.json:
        _dump(d)
    elif args.smallest:
        print(f"|lambda_{args.k + 1} ... lambda_{n}| >= |det A| / bound  ({args.norm.value})")
        print(f"  product  {_g(d['smallest_product'])}")
        print(f"  lower    {_g(d['lower_bound'])}")
        print(f"  winner   {d['winner']}")
    else:
        _print_report(d, f"|lambda_1 ... lambda_{args.k}| <= bound  ({args.norm.value})")
    return EXIT_OK if d["holds"] else EXIT_VIOLATION


def _certificate(family, n, k, a, args):
    if family == "monomial":
        ratios = [compound_norm_bound(a, j, NormKind.L1, NormKind.L1).ratio for j in range(1, n + 1)]
        return {"compound_l1_ratio_by_k": ratios}
    if family == "fourier":
        resid = float(np.linalg.norm(a @ a.conj().T - n * np.eye(n)))
        cert = {"aastar_minus_nI_frobenius": resid, "abs_det": abs(determinant(a)), "n_pow_half_n": n ** (n / 2)}
        if n >= 2:
            cert["compound_n_minus_1_linf"] = op_norm(compound(a, n - 1).matrix, NormKind.LINF)
        return cert
    if family == "hadamard":
        return {"hht_minus_nI_max_abs": float(np.abs(a @ a.T - n * np.eye(n)).max())}
    if family == "first-row-ones":
        return {"linf_norm": op_norm(a, NormKind.LINF), "n": n}
    # psd-theta2
    gram = unit_diag_psd(n, k)
    cols = np.sqrt((np.abs(a) ** 2).sum(axis=0))
    spectrum, _ = eigh(gram)
    return {
        "column_l2_norms": cols.tolist(),
        "gram_diagonal": np.real(np.diag(gram)).tolist(),
        "gram_spectrum": spectrum.tolist(),
        "compound_l2_norm": op_norm(compound(a, k).matrix, NormKind.L2),
        "target": (n / k) ** (k / 2),
    }


def cmd_extremal(args) -> int:
    n, k, family = args.n, args.k, args.family
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if family == "monomial":
        if args.seed is not None:
            a = random_monomial(n, np.random.Generator(np.random.PCG64(args.seed)))
        else:
            a = monomial(MonomialSpec(tuple(range(n, 0, -1)), tuple(float(n - j) for j in range(n))))
    elif family == "fourier":
        a = fourier(n)
    elif family == "hadamard":
        a = hadamard_sylvester(hadamard_order_exponent(n))
    elif family == "first-row-ones":
        a = first_row_ones(n)
    else:
        if k is None:
            raise DomainError("psd-theta2 needs --k")
        a = theta2_extremal(n, k)
    cert = _certificate(family, n, k, a, args)
    if args.out is not None:
        _emit_matrix(a, args.out)
    if args.json:
        _dump({"family": family, "n": n, "k": k, "certificate": cert, "out": args.out})
        return EXIT_OK
    if args.out is None:
        _emit_matrix(a, None)
    for key, val in cert.items():
        shown = "[" + ", ".join(_g(v) for v in val) + "]" if isinstance(val, list) else _g(val)
        print(f"# {key}: {shown}")
    return EXIT_OK


def cmd_verify(args) -> int:
    classes = tuple(MatrixClass.parse(c) for c in args.classes.split(",")) if args.classes else ALL_CLASSES
    config = SweepConfig(
        n_min=args.n_min, n_max=args.n_max, samples_per_n=args.samples,
        seed=args.seed, classes=classes, tolerance=args.tolerance,
    )
    report = run_sweep(config)
    text = report.to_json()
    if args.out is not None:
        Path(args.out).write_text(text)
    if args.json:
        sys.stdout.write(text)
    else:
        print(f"backend {report.backend}; {report.samples} samples; seed {config.seed}")
        for name, st in sorted(report.properties.items()):
            tag = "" if st.enforced else "  (measurement)"
            print(f"  {name:<22} pass {st.passed:>6}  fail {st.failed:>5}  worst {_g(st.worst_ratio)}{tag}")
        if report.numerical_failures:
            print(f"  numerical failures: {len(report.numerical_failures)}")
        print("OK" if report.ok else f"FAILED: {report.violations} violation(s)")
    return EXIT_OK if report.ok else EXIT_VIOLATION


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="compoundnorms", description="Compound matrix norm bounds and extremal matrices.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compound", help="write the k-th compound of a matrix file")
    c.add_argument("input")
    c.add_argument("-k", type=int, required=True)
    c.add_argument("--out", "-o")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_compound)

    b = sub.add_parser("bound", help="evaluate mu(C_k(A)) against its theta bound")
    b.add_argument("input")
    b.add_argument("-k", type=int, required=True)
    b.add_argument("--mu", type=_norm, required=True, help="L1, L2 or LInf")
    b.add_argument("--nu", type=_norm, required=True, help="L1, L2 or LInf")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bound)

    e = sub.add_parser("eigbound", help="bound the product of the k largest (or n-k smallest) eigenvalues")
    e.add_argument("input")
    e.add_argument("-k", type=int, required=True)
    e.add_argument("--norm", type=_norm, required=True, help="L1, L2 or LInf")
    e.add_argument("--smallest", action="store_true", help="lower-bound the n-k smallest instead")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_eigbound)

    x = sub.add_parser("extremal", help="generate an extremal matrix with its certificate")
    x.add_argument("family", choices=["monomial", "fourier", "hadamard", "first-row-ones", "psd-theta2"])
    x.add_argument("n", type=int)
    x.add_argument("-k", "--k", type=int, dest="k")
    x.add_argument("--seed", type=int, help="monomial: draw a random monomial matrix")
    x.add_argument("--out", "-o")
    x.add_argument("--json", action="store_true")
    x.set_defaults(func=cmd_extremal)

    v = sub.add_parser("verify", help="run the randomized property sweep")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--n-min", type=int, default=2)
    v.add_argument("--n-max", type=int, default=6)
    v.add_argument("--samples", type=int, default=50)
    v.add_argument("--classes", help="comma-separated subset of " + ",".join(c.value for c in ALL_CLASSES))
    v.add_argument("--tolerance", type=float, default=DEFAULTS.bound)
    v.add_argument("--json", action="store_true")
    v.add_argument("--out", "-o")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except NumericalFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
