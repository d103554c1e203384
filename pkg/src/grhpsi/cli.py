"""Command line front end: ``grhpsi <subcommand> ...``."""
from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction

from . import fields, majorant, prime_bounds, psi, residue, tables, zeros
from .exact import SingularMatrixError


class DataError(Exception):
    """Input is well formed but the computation cannot go through."""


class UsageError(Exception):
    pass


def _fmt(iv) -> str:
    return f"[{iv.lo:.17g}, {iv.hi:.17g}]"


def _add_field_args(p, need_degree=True):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--field", metavar="FILE", help="field descriptor file")
    g.add_argument("--disc-exp", type=float, metavar="K", help="|d_K| = 10^K")
    g.add_argument("--disc", type=int, metavar="D", help="|d_K| as an integer")
    if need_degree:
        p.add_argument("--degree", type=int, help="n_K (with --disc/--disc-exp)")
        p.add_argument("--r2", type=int, help="number of complex places (default: worst case)")


def _signature(a) -> residue.Signature:
    if a.field:
        K = fields.load_field_file(a.field)
        return residue.Signature(K.log_disc, K.degree, K.r2)
    if a.disc_exp is None and a.disc is None:
        raise UsageError("give --field, --disc-exp or --disc")
    if a.degree is None or a.degree < 1:
        raise UsageError("--degree must be a positive integer")
    if a.disc is not None:
        if a.disc < 1:
            raise DataError("--disc must be positive")
        ld = math.log(a.disc)
    else:
        ld = a.disc_exp * math.log(10)
    if a.r2 is not None and not 0 <= 2 * a.r2 <= a.degree:
        raise DataError(f"r2 = {a.r2} impossible for degree {a.degree}")
    return residue.Signature(ld, a.degree, a.r2)


def _field(a) -> fields.FieldDescriptor:
    if getattr(a, "field", None):
        return fields.load_field_file(a.field)
    if getattr(a, "quadratic", None) is not None:
        return fields.quadratic_field(a.quadratic)
    return fields.rational_field()


def cmd_bound(a):
    s = _signature(a)
    b = residue.remainder(s, a.variant, a.N)
    print(f"{a.variant} remainder bound at N = {a.N}: {_fmt(b)}")


def cmd_least_n(a):
    s = _signature(a)
    print(residue.least_n(s, variant=a.variant, target=a.target))


def cmd_residue(a):
    K = _field(a)
    r = residue.log_residue(K, a.variant, a.target, a.refine_rk)
    print(f"variant: {r.bound_variant}")
    print(f"N: {r.N}")
    print(f"remainder bound: {r.remainder:.17g}")
    print(f"log residue: {_fmt(r.log_residue)}")
    print(f"residue: {_fmt(r.residue)}")


def cmd_tables(a):
    res = tables.compute_cells(target=a.target)
    print(tables.format_all(res), end="")
    if a.csv:
        with open(a.csv, "w") as fh:
            fh.write(tables.to_csv(res))
    if a.compare:
        ref = tables.read_reference()
        bad = [(k, res[k], ref[k]) for k in sorted(res) if res[k] != ref.get(k)]
        for (e, n, v), got, want in bad:
            print(f"differs: 10^{e} n={n} {v}: {got} (published {want}, {got - want:+d})")
        print(f"{len(res) - len(bad)} of {len(res)} cells equal to the published values")


def cmd_certify(a):
    tab = majorant.read_table(a.table, a.weight)
    w = majorant.weight(tab.weight)
    cert = majorant.certify_majorization(w, tab)
    srep = majorant.check_S_positivity(tab, a.numeric_threshold)
    print(f"weight: {tab.weight}; J = {len(tab)}; certificate polynomial degree {cert.degree}")
    print(f"certified: {str(cert.ok).lower()}; sum a_j = {float(sum(tab.a)):.10f}")
    if not cert.ok:
        print(f"majorization fails: {cert.reason}; witness t = gamma^2 = {cert.witness_t} "
              f"(gamma ~ {cert.witness_gamma:.6g})")
    print(f"S(n) > 0 for n >= 2: {str(srep.ok).lower()}; pair threshold {srep.analytic_threshold}"
          + ("" if srep.ok else f"; {srep.reason}"))
    if cert.ok and srep.ok:
        d = majorant.derived_linear_bound(tab, srep)
        b = d.bound
        print(f"sum a_j (2/s_j + 2/(s_j - 1)) = {float(d.sum_poles):.10f}")
        print(f"sum a_j psi(s_j/2) in {_fmt(d.sum_digamma_half)}")
        print(f"sum a_j psi((s_j+1)/2) in {_fmt(d.sum_digamma_half1)}")
        print(f"bound: {b.c_disc} log d_K {b.c_deg:+} n_K {b.c_const:+}")
    return 0 if cert.ok and srep.ok else 1


def _scheme(a):
    if a.points:
        ups = tuple(Fraction(x) for x in a.points.split(","))
        q = len(ups) + 1
        J = 1 + 2 * len(ups) + int(a.asymptotic)
        return majorant.ContactScheme(q, J, ups, True, a.asymptotic)
    if a.q is not None or a.ratio is not None:
        if a.q is None or a.ratio is None:
            raise UsageError("--q and --ratio go together")
        return majorant.geometric_scheme(a.q, a.ratio, a.shift, a.asymptotic)
    return majorant.default_scheme(a.weight)


def cmd_gen_coeffs(a):
    sch = _scheme(a)
    tab = majorant.generate_coefficients(a.weight, sch)
    text = majorant.format_table(tab)
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")
    if a.compare:
        ref = majorant.reference_table(a.weight)
        same = sum(x == y for x, y in zip(tab.scaled, ref.scaled))
        print(f"# {same} of {len(ref)} coefficients equal to the published table", file=sys.stderr)
        return 0 if same == len(ref) == len(tab) else 1
    return 0


def cmd_zero_sum(a):
    zs = zeros.read_zeros(a.zeros)
    r = majorant.zeta_zero_sum(zs, a.weight)
    print(f"zeros used: {r.count} (up to T = {r.T:.6f})")
    print(f"partial sum: {r.partial:.15g}")
    print(f"tail: {_fmt(r.tail)}")
    print(f"total: {_fmt(r.total)}")


def cmd_zeros(a):
    zs = zeros.find_zeros(a.count)
    zeros.write_zeros(a.out, zs)
    print(f"wrote {len(zs)} zeros to {a.out} (last {zs[-1]:.9f})")


def cmd_prime_bound(a):
    if a.kappa < 0:
        raise DataError("kappa must be nonnegative")
    s = _signature(a) if not a.field else None
    K = fields.load_field_file(a.field) if a.field else None
    ld = K.log_disc if K else s.log_disc
    kap = a.kappa + ld if a.unramified else a.kappa
    pb = prime_bounds.norm_bound(ld, kap)
    kind = "unramified degree-one" if a.unramified else "degree-one"
    print(f"L_K = {pb.L_K:.10f}")
    print(f"more than {a.kappa:g} {kind} primes of norm <= {pb.norm_bound:.10f}")
    if a.verify:
        if K is None:
            raise UsageError("--verify needs --field")
        chk = prime_bounds.verify_degree_one(K, a.kappa, pb.norm_bound, a.unramified)
        print(f"verified: {str(chk.ok).lower()}; {chk.count} found; first: "
              + ", ".join(f"{p}x{c}" for p, c in chk.witnesses[:10]))
        return 0 if chk.ok else 1
    return 0


def cmd_cyclo_check(a):
    if a.q0 < 5 or a.q1 < a.q0:
        raise UsageError("need 5 <= q0 <= q1")
    for q in range(a.q0, a.q1 + 1):
        bound, ps = prime_bounds.cyclotomic_two_primes(q)
        if not a.quiet:
            print(f"{q} {bound:.6f} {ps[0]} {ps[1]}")
    print(f"ok: two primes = 1 mod q below the bound for {a.q0} <= q <= {a.q1}")


def cmd_psi(a):
    K = _field(a)
    for x in a.x:
        v = psi.psi_m(K, a.m, x)
        if a.m == 0 or x < 3:
            print(f"x = {x:g}: psi^({a.m}) = {v:.15g}")
            continue
        b = psi.theorem_bound(K, a.m, x, a.corrected)
        err = v - x ** (a.m + 1) / (a.m + 1)
        print(f"x = {x:g}: psi^({a.m}) = {v:.15g}; error {err:.6g}; bound {b:.6g}; margin {b - abs(err):.6g}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="grhpsi", description="GRH-conditional explicit bounds.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("bound", help="remainder bound at a given N")
    _add_field_args(p)
    p.add_argument("--variant", choices=residue.VARIANTS, default="bas1")
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("least-n", help="least truncation N for a target error")
    _add_field_args(p)
    p.add_argument("--variant", choices=residue.VARIANTS, default="bas1")
    p.add_argument("--target", type=float, default=residue.HALF_LOG2)
    p.set_defaults(func=cmd_least_n)

    p = sub.add_parser("residue", help="enclosure of the residue of zeta_K at s = 1")
    p.add_argument("--field", metavar="FILE")
    p.add_argument("--quadratic", type=int, metavar="D", help="Q(sqrt D), D a fundamental discriminant")
    p.add_argument("--variant", choices=residue.VARIANTS, default="imp1")
    p.add_argument("--target", type=float, default=residue.HALF_LOG2)
    p.add_argument("--refine-rk", action="store_true")
    p.set_defaults(func=cmd_residue)

    p = sub.add_parser("tables", help="regenerate the least-N tables")
    p.add_argument("--csv", metavar="FILE")
    p.add_argument("--target", type=float, default=residue.HALF_LOG2)
    p.add_argument("--compare", action="store_true", help="diff against the published values")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("certify", help="certify a majorant coefficient table")
    p.add_argument("--table", required=True, metavar="FILE")
    p.add_argument("--weight", choices=sorted(majorant.WEIGHTS))
    p.add_argument("--numeric-threshold", type=int, default=10**6)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("gen-coeffs", help="generate majorant coefficients")
    p.add_argument("--weight", choices=sorted(majorant.WEIGHTS), required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--ratio", help="v in upsilon = {v^i - v + shift}")
    p.add_argument("--shift", default="1")
    p.add_argument("--points", help="explicit comma-separated contact points")
    p.add_argument("--asymptotic", action="store_true")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--compare", action="store_true", help="check against the shipped table")
    p.set_defaults(func=cmd_gen_coeffs)

    p = sub.add_parser("zero-sum", help="sum of a weight over zeta zeros, with tail bound")
    p.add_argument("--zeros", required=True, metavar="FILE")
    p.add_argument("--weight", choices=sorted(majorant.WEIGHTS), default="inv_rho_rho1")
    p.set_defaults(func=cmd_zero_sum)

    p = sub.add_parser("zeros", help="compute the first zeta zeros into a file")
    p.add_argument("--count", type=int, default=100000)
    p.add_argument("--out", required=True, metavar="FILE")
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("prime-bound", help="norm bound for small degree-one primes")
    _add_field_args(p)
    p.add_argument("--kappa", type=float, default=0.0)
    p.add_argument("--unramified", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_prime_bound)

    p = sub.add_parser("cyclo-check", help="two primes = 1 mod q below 1.2 (phi(q) log q)^2")
    p.add_argument("--q0", type=int, default=5)
    p.add_argument("--q1", type=int, default=5000)
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_cyclo_check)

    p = sub.add_parser("psi", help="smoothed Chebyshev functions and bound margins")
    p.add_argument("--field", metavar="FILE")
    p.add_argument("--quadratic", type=int, metavar="D")
    p.add_argument("--m", type=int, choices=(0, 1, 2), default=1)
    p.add_argument("--x", type=float, nargs="+", required=True)
    p.add_argument("--corrected", action="store_true", help="corrected constant for Q with m = 2")
    p.set_defaults(func=cmd_psi)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        rc = a.func(a)
    except UsageError as e:
        ap.print_usage(sys.stderr)
        print(f"grhpsi: error: {e}", file=sys.stderr)
        return 2
    except (DataError, fields.FieldError, ValueError, ArithmeticError, OSError,
            prime_bounds.VerificationError, zeros.ZeroSearchError, SingularMatrixError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return rc or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
