"""Command-line entry point: ``wedgekit <subcommand> ...``.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import acceptance, characters, fock, limits, measures, partitions, theta, variational
from .partitions import Partition
from .qseries import OutsideWindow

DIM_METHODS = {
    "hook": characters.dim_hook,
    "coords": characters.dim_coords,
    "frobenius": characters.dim_frobenius,
    "determinant": characters.dim_determinant,
}


class DomainError(Exception):
    pass


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _mode_coeffs(items: list[str]) -> dict[int, Fraction]:
    out = {}
    for item in items or []:
        n, sep, c = item.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"expected n=c, got {item!r}")
        out[int(n)] = _fraction(c)
    return out


def _dump(obj, out) -> None:
    json.dump(obj, out, indent=2, sort_keys=False)
    out.write("\n")


def _series_out(series, fmt: str, out) -> None:
    """Rows (u2, q_num, q_den, c_num, c_den); u2 is 0 for plain q-series."""
    keys = ("u2", "q_num", "q_den", "c_num", "c_den")
    rows = series.tsv_rows()
    if fmt == "json":
        _dump({"terms": [{k: str(v) for k, v in zip(keys, r)} for r in rows]}, out)
        return
    out.write("\t".join(keys) + "\n")
    for r in rows:
        out.write("\t".join(map(str, r)) + "\n")


# -- subcommands -----------------------------------------------------------------


def cmd_dim(a, out) -> None:
    if a.method == "all":
        vals = {name: fn(a.partition) for name, fn in DIM_METHODS.items()}
        if a.format == "json":
            _dump({"partition": str(a.partition), "values": {k: str(v) for k, v in vals.items()},
                   "agree": len(set(vals.values())) == 1}, out)
        else:
            for k, v in vals.items():
                out.write(f"{k}\t{v}\n")
            out.write(f"agree\t{str(len(set(vals.values())) == 1).lower()}\n")
        return
    out.write(f"{DIM_METHODS[a.method](a.partition)}\n")


def cmd_char(a, out) -> None:
    if a.partition.size() != a.cycle_type.size():
        raise DomainError(f"sizes differ: |{a.partition}| != |{a.cycle_type}|")
    out.write(f"{characters.mn_character(a.partition, a.cycle_type)}\n")


def cmd_table(a, out) -> None:
    t = characters.character_table(a.n)
    if a.format == "json":
        _dump(t.to_json(), out)
    else:
        out.write(t.to_tsv())


def cmd_skew_dim(a, out) -> None:
    if not a.outer.contains(a.inner):
        raise DomainError(f"{a.inner} is not contained in {a.outer}")
    out.write(f"{characters.skew_dim(a.outer, a.inner)}\n")


def cmd_core_quotient(a, out) -> None:
    if a.p < 1:
        raise DomainError("p must be positive")
    out.write(f"{partitions.p_core_quotient(a.partition, a.p)}\n")


def _parse_op(text: str):
    name, _, arg = text.partition(":")
    if name == "alpha":
        n = int(arg)
        return lambda v: fock.apply_alpha(n, v)
    if name == "bilinear":
        i, j = (Fraction(x) for x in arg.split(","))
        if (2 * i).denominator != 1 or (2 * j).denominator != 1:
            raise DomainError("bilinear sites must be half-integers")
        return lambda v: fock.apply_normal_bilinear(int(2 * i), int(2 * j), v)
    if name == "energy":
        return fock.apply_energy
    if name == "pillowcase":
        return lambda v: fock.apply_vertex(fock.pillowcase_spec(), v, v.cutoff)
    raise argparse.ArgumentTypeError(f"unknown operator {text!r}")


def cmd_fock_apply(a, out) -> None:
    v = fock.basis(a.partition, a.cutoff)
    # operators act right to left, as written
    for op in reversed([_parse_op(t) for t in a.op]):
        v = op(v)
    _dump(v.to_json(), out)


def cmd_fock_trace(a, out) -> None:
    spec = fock.VertexOpSpec(minus=_mode_coeffs(a.minus), plus=_mode_coeffs(a.plus))
    fn = fock.trace_vertex if a.method == "enumeration" else fock.trace_closed_form
    _series_out(fn(spec, a.order).series, a.format, out)


def cmd_fock_verify(a, out) -> None:
    if a.identity == "boson-fermion":
        rep = fock.verify_boson_fermion(a.degree, a.size)
        ok, detail = rep.ok, f"{rep.compared} monomials, {len(rep.mismatches)} mismatches"
    elif a.identity == "one-point":
        bad = fock.verify_one_point(2 * a.degree + 1, a.order)
        ok, detail = not bad, f"{len(bad)} mismatches"
    elif a.identity == "pillowcase":
        ok, detail = acceptance.c7()
    else:
        ok, detail = acceptance.c5()
    out.write(f"{a.identity}\t{'pass' if ok else 'FAIL'}\t{detail}\n")
    if not ok:
        raise DomainError(f"{a.identity} identity failed")


def cmd_theta_dump(a, out) -> None:
    window = (a.lo, a.hi)
    if a.what == "product":
        s = theta.theta_product(a.order, window)
    elif a.what == "triple":
        s = theta.theta_triple_product(a.order, window)
    elif a.what == "inverse":
        if a.lo is None or a.hi is None:
            raise DomainError("the inverse needs a bounded window (--lo and --hi)")
        s = theta.theta_inverse(a.order, window, a.annulus)
    elif a.what == "eta":
        s = theta.eta(a.order)
    else:
        s = theta.eisenstein(a.k, a.order)
    _series_out(s, a.format, out)


def cmd_theta_verify(a, out) -> None:
    rep = theta.verify_quasimodular_identities(a.order, a.z_order)
    rows = dict(rep.results)
    rows["product = triple product"] = theta.theta_product(a.order).mismatches(theta.theta_triple_product(a.order)) or None
    rows["theta = -i eta^-3 theta_11"] = theta.theta_classical_bridge(a.order) or None
    rows["eta pentagonal"] = theta.eta(a.order).agreement(theta.pentagonal_eta(a.order))
    for k, v in rows.items():
        out.write(f"{k}\t{'pass' if v is None else 'FAIL ' + str(v)[:80]}\n")
    if any(v is not None for v in rows.values()):
        raise DomainError("theta identity failed")


def _measure_spec(a) -> measures.MeasureSpec:
    return measures.MeasureSpec(a.measure, seed=a.seed, n=a.n, q=a.q)


def cmd_sample(a, out) -> None:
    spec = _measure_spec(a)
    draws = measures.sample_batch(spec, a.count)
    out.write("index\tsize\tpartition\n")
    for i, lam in enumerate(draws):
        out.write(f"{i}\t{lam.size()}\t{lam}\n")
    if a.emit:
        # the pillowcase measures have no limit curve here; that column is nan
        shape = {"plancherel": limits.PLANCHEREL, "uniform_q": limits.UNIFORM,
                 "uniform_exact": limits.UNIFORM}.get(a.measure)
        with open(a.emit, "w") as fh:
            fh.write("index\ts\tL_sample\tL_limit\n")
            for i, lam in enumerate(draws):
                if lam.size() == 0:
                    continue
                pts = limits.empirical_contour(lam)
                lim = shape.value(pts[:, 0]) if shape else np.full(len(pts), np.nan)
                for (s, y), z in zip(pts, lim):
                    fh.write(f"{i}\t{s:.10g}\t{y:.10g}\t{z:.10g}\n")


def cmd_limit_shape(a, out) -> None:
    shape = limits.LimitShape(a.kind)
    if a.step <= 0 or a.hi < a.lo:
        raise DomainError("need lo <= hi and step > 0")
    s = np.arange(a.lo, a.hi + a.step / 2, a.step)
    out.write("s\tL\tslope\n")
    for x, y, d in zip(s, shape.value(s), shape.slope(s)):
        out.write(f"{x:.10g}\t{y:.15g}\t{d:.15g}\n")


def cmd_moments(a, out) -> None:
    if a.scaling:
        if a.seed is None:
            raise DomainError("--scaling draws random partitions and needs --seed")
        spec = measures.MeasureSpec(a.measure, seed=a.seed, n=a.n)
        rep = limits.moment_scaling_check(spec, a.scaling, a.count)
        out.write("k\testimate\tstderr\ttarget\tprinted_target\trel_error\n")
        out.write(f"{rep.k}\t{rep.estimate:.10g}\t{rep.stderr:.3g}\t{rep.target:.10g}\t{rep.printed_target:.10g}\t{rep.rel_error:.3g}\n")
        return
    closed = limits.moments_closed_form(a.kind, a.K)
    numeric = limits.moments_numeric(limits.LimitShape(a.kind), a.K)
    out.write("k\tclosed_form\tquadrature\n")
    for k in range(a.K + 1):
        out.write(f"{k}\t{closed[k]:.15g}\t{numeric[k]:.15g}\n")


def cmd_hook_integral(a, out) -> None:
    if a.c is not None:
        out.write(f"{variational.hook_correction_c(a.c):.17g}\n")
        return
    J = variational.hook_integral(limits.LimitShape(a.kind))
    out.write(f"J\t{J:.15g}\n")
    for conv in ("display", "consistent"):
        out.write(f"typical_constant_{conv}\t{variational.typical_dimension_constant(a.kind, conv):.15g}\n")
    if a.kind == "uniform":
        for conv in ("display", "consistent"):
            out.write(f"closed_form_{conv}\t{variational.typical_dimension_closed_form(conv):.15g}\n")


def cmd_verify_all(a, out) -> None:
    criteria = None
    if a.level == "quick":
        criteria = [c for c in acceptance.CHECKS if c != 9]
    results = acceptance.run_all(criteria)
    out.write("criterion\tresult\tseconds\tname\tdetail\n")
    for r in results:
        flag = "pass" if r.passed else "FAIL"
        if r.passed and not r.within_budget:
            flag = "pass (over budget)"
        out.write(f"{r.criterion}\t{flag}\t{r.seconds:.1f}\t{r.name}\t{r.detail}\n")
    failed = [r.criterion for r in results if not r.passed]
    out.write(f"summary\t{len(results) - len(failed)}/{len(results)} passed\n")
    if failed:
        raise DomainError(f"criteria failed: {failed}")


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wedgekit", description="Partitions, characters and the infinite wedge.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("dim", help="dimension of an irreducible representation")
    s.add_argument("partition", type=_partition)
    s.add_argument("--method", choices=[*DIM_METHODS, "all"], default="hook")
    s.add_argument("--format", choices=["tsv", "json"], default="tsv")
    s.set_defaults(fn=cmd_dim)

    s = sub.add_parser("char", help="character value chi^lambda(mu)")
    s.add_argument("partition", type=_partition)
    s.add_argument("cycle_type", type=_partition)
    s.set_defaults(fn=cmd_char)

    s = sub.add_parser("table", help="character table of S_n")
    s.add_argument("n", type=int)
    s.add_argument("--format", choices=["tsv", "json"], default="tsv")
    s.set_defaults(fn=cmd_table)

    s = sub.add_parser("skew-dim", help="number of standard tableaux of lambda/mu")
    s.add_argument("outer", type=_partition)
    s.add_argument("inner", type=_partition)
    s.set_defaults(fn=cmd_skew_dim)

    s = sub.add_parser("core-quotient", help="p-core and p-quotient")
    s.add_argument("partition", type=_partition)
    s.add_argument("-p", type=int, required=True)
    s.set_defaults(fn=cmd_core_quotient)

    f = sub.add_parser("fock", help="wedge-space operators").add_subparsers(dest="fock_command", required=True)
    s = f.add_parser("apply", help="apply operators to v_lambda (rightmost first)")
    s.add_argument("partition", type=_partition)
    s.add_argument("--op", action="append", required=True,
                   help="alpha:N, bilinear:I,J (half-integers such as 11/2,-3/2), energy, pillowcase")
    s.add_argument("--cutoff", type=int, default=None)
    s.set_defaults(fn=cmd_fock_apply)
    s = f.add_parser("trace", help="q-graded trace of a vertex operator")
    s.add_argument("--minus", action="append", help="n=c for the coefficient of alpha_-n")
    s.add_argument("--plus", action="append", help="n=c for the coefficient of alpha_n")
    s.add_argument("--order", type=int, default=10)
    s.add_argument("--method", choices=["enumeration", "closed-form"], default="enumeration")
    s.add_argument("--format", choices=["tsv", "json"], default="tsv")
    s.set_defaults(fn=cmd_fock_trace)
    s = f.add_parser("verify", help="check an operator identity")
    s.add_argument("identity", choices=["boson-fermion", "one-point", "pillowcase", "series"])
    s.add_argument("--degree", type=int, default=6)
    s.add_argument("--size", type=int, default=5)
    s.add_argument("--order", type=int, default=12)
    s.set_defaults(fn=cmd_fock_verify)

    t = sub.add_parser("theta", help="theta, eta and Eisenstein series").add_subparsers(dest="theta_command", required=True)
    s = t.add_parser("dump", help="write series coefficients")
    s.add_argument("--what", choices=["product", "triple", "inverse", "eta", "eisenstein"], default="product")
    s.add_argument("--order", type=int, default=10)
    s.add_argument("--lo", type=int, default=None, help="lowest doubled u-exponent")
    s.add_argument("--hi", type=int, default=None, help="highest doubled u-exponent")
    s.add_argument("--annulus", choices=["annulus", "inside"], default="annulus")
    s.add_argument("-k", type=int, default=1, help="Eisenstein weight 2k")
    s.add_argument("--format", choices=["tsv", "json"], default="tsv")
    s.set_defaults(fn=cmd_theta_dump)
    s = t.add_parser("verify", help="check the theta and Eisenstein identities")
    s.add_argument("--order", type=int, default=20)
    s.add_argument("--z-order", type=int, default=8)
    s.set_defaults(fn=cmd_theta_verify)

    s = sub.add_parser("sample", help="draw random partitions")
    s.add_argument("--measure", choices=list(measures.KINDS), required=True)
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--q", type=float, default=None)
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--emit", default=None, help="write rescaled contours and the limit curve as TSV")
    s.set_defaults(fn=cmd_sample)

    s = sub.add_parser("limit-shape", help="tabulate a limit shape")
    s.add_argument("--kind", choices=["uniform", "plancherel"], required=True)
    s.add_argument("--lo", type=float, default=-3.0)
    s.add_argument("--hi", type=float, default=3.0)
    s.add_argument("--step", type=float, default=0.01)
    s.set_defaults(fn=cmd_limit_shape)

    s = sub.add_parser("moments", help="limit-shape moments or their Monte Carlo scaling check")
    s.add_argument("--kind", choices=["uniform", "plancherel"], default="uniform")
    s.add_argument("--K", type=int, default=6)
    s.add_argument("--scaling", type=int, default=None, help="run the scaling check for this k")
    s.add_argument("--measure", choices=["uniform_exact", "plancherel"], default="uniform_exact")
    s.add_argument("--n", type=int, default=10_000)
    s.add_argument("--count", type=int, default=50)
    s.add_argument("--seed", type=int, default=None)
    s.set_defaults(fn=cmd_moments)

    s = sub.add_parser("hook-integral", help="hook integral, typical dimension constant, c(x)")
    s.add_argument("--kind", choices=["uniform", "plancherel"], default="uniform")
    s.add_argument("--c", type=float, default=None, help="evaluate c(x) instead")
    s.set_defaults(fn=cmd_hook_integral)

    s = sub.add_parser("verify-all", help="run the acceptance checks")
    s.add_argument("--level", choices=["desk", "quick"], default="desk")
    s.set_defaults(fn=cmd_verify_all)
    return p


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.fn(args, out)
    except argparse.ArgumentTypeError as exc:
        parser.print_usage(sys.stderr)
        print(f"wedgekit: error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ValueError, OutsideWindow, ZeroDivisionError) as exc:
        print(f"wedgekit: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
