"""Command line interface: orbits, counts, ft, oracle, symbolic, verify."""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import census, counts, ftsolver, paperdata, symbolic
from . import reps as R


def canonical_json(obj):
    """The one JSON form we emit; re-serializing parsed output is byte-identical."""
    return json.dumps(obj, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_mask(rep, s):
    s = s.replace("|", "")
    if len(s) != rep.dim or any(ch not in "01" for ch in s):
        raise SystemExit(f"mask must be {rep.dim} characters of 0/1 "
                         f"(optionally split by '|'), got {s!r}")
    return tuple(int(ch) for ch in s)


def _add_common(sub, q=True):
    sub.add_argument("--rep", required=True, choices=list(R.REPS))
    if q:
        sub.add_argument("--q", type=int, required=True, help="odd prime")
    sub.add_argument("--threads", type=int, default=None)
    sub.add_argument("--enum-budget", type=int, default=None)
    sub.add_argument("--format", default="pretty",
                     choices=["pretty", "json", "csv", "latex"])
    sub.add_argument("--out", default=None)


def cmd_orbits(args):
    rep = R.get_rep(args.rep)
    from .ffield import PrimeField
    field = PrimeField(args.q)
    rep.check_prime(args.q)
    rows = []
    for lab in rep.labels:
        x = R.orbit_representative(rep, lab, field)
        rows.append({
            "orbit": lab,
            "representative": list(x),
            "size": R.orbit_size(rep, lab, args.q),
            "size_polynomial": rep.sizes[rep.label_index(lab)].pretty(),
        })
    payload = {"rep": rep.name, "q": args.q, "orbits": rows}
    if args.verify_census:
        got = census.full_census(rep, args.q, threads=args.threads,
                                 budget=args.enum_budget)
        expected = [row["size"] for row in rows]
        payload["census"] = list(got.counts)
        payload["census_ok"] = list(got.counts) == expected
        if not payload["census_ok"]:
            _emit(canonical_json(payload), args.out)
            return 1
    if args.format == "json":
        _emit(canonical_json(payload), args.out)
    elif args.format == "csv":
        lines = ["orbit,size,representative,size_polynomial"]
        for row in rows:
            lines.append(f'"{row["orbit"]}",{row["size"]},'
                         f'"{tuple(row["representative"])}","{row["size_polynomial"]}"')
        _emit("\n".join(lines) + "\n", args.out)
    else:
        width = max(len(r["orbit"]) for r in rows)
        lines = [f"{rep.name} at q={args.q}: {rep.r} orbits"]
        for row in rows:
            lines.append(f'  {row["orbit"]:<{width}}  size {row["size"]:>12}  '
                         f'rep {tuple(row["representative"])}')
        if args.verify_census:
            lines.append("census OK" if payload["census_ok"] else "census MISMATCH")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_counts(args):
    rep = R.get_rep(args.rep)
    mask = _parse_mask(rep, args.subspace)
    spec = census.SubspaceSpec(rep.name, mask=mask)
    cv = census.count_in_subspace(rep.name, args.q, spec, threads=args.threads,
                                  budget=args.enum_budget)
    payload = {"rep": rep.name, "q": args.q, "mask": "".join(map(str, mask)),
               "dim": spec.dim, "orbit_labels": list(rep.labels),
               "counts": list(cv.counts)}
    if args.format == "json":
        _emit(canonical_json(payload), args.out)
    elif args.format == "csv":
        lines = ["orbit,count"] + [f'"{lab}",{c}'
                                   for lab, c in zip(rep.labels, cv.counts)]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [f"|W ∩ O_i| for mask {args.subspace} (dim {spec.dim}) at q={args.q}:"]
        lines += [f"  {lab:<8} {c}" for lab, c in zip(rep.labels, cv.counts)]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _ft_matrix(args):
    if args.method == "oracle":
        return census.oracle_ft_matrix(args.rep, args.q, threads=args.threads,
                                       budget=args.enum_budget)
    if args.method == "subspace":
        provider = counts.EnumerationProvider(args.rep, args.q,
                                              threads=args.threads,
                                              budget=args.enum_budget)
        return ftsolver.solve_ft_matrix(args.rep, args.q, provider=provider)
    return ftsolver.solve_ft_matrix(args.rep, args.q)


def cmd_ft(args):
    ftm = _ft_matrix(args)
    if args.format == "json":
        _emit(canonical_json(ftm.to_json_dict()), args.out)
    elif args.format == "csv":
        _emit(ftm.to_csv(), args.out)
    elif args.format == "latex":
        _emit(ftm.to_latex(), args.out)
    else:
        scaled = ftm.scaled()
        width = max(len(str(x)) for row in scaled for x in row)
        lines = [f"q^{ftm.dim} * M for {ftm.rep} at q={ftm.q} (method {ftm.method}):"]
        lines += ["  [" + "  ".join(f"{str(x):>{width}}" for x in row) + "]"
                  for row in scaled]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_symbolic(args):
    primes = [int(x) for x in args.primes.split(",")] if args.primes else None
    pms = symbolic.interpolate(args.rep, primes=primes)
    pieces, failures = [], []
    for cls, pm in sorted(pms.items(), key=lambda kv: (kv[0] is None, kv[0])):
        diff = symbolic.compare_paper(pm)
        if diff:
            failures.append({"class": cls, "diff": diff})
        fmt = args.format if args.format != "pretty" else "latex"
        pieces.append(symbolic.render(pm, fmt))
    _emit("".join(pieces), args.out)
    if failures:
        sys.stderr.write(canonical_json({"paper_mismatch": failures}))
        return 1
    return 0


def _verify_battery(args):
    """The per-(rep, q) check battery; yields (name, ok, detail)."""
    rep = R.get_rep(args.rep)
    q = args.q
    ftm = ftsolver.solve_ft_matrix(rep, q)
    expected = paperdata.expected_matrix(
        rep.name, q % 3 if rep.name == "sym3-2" else None)
    scaled = ftm.scaled()
    ok = all(scaled[i][j] == expected[i][j](q)
             for i in range(rep.r) for j in range(rep.r))
    yield "matrix-vs-paper", ok, None

    rep_lemma = ftsolver.verify_lemma(ftm)
    yield "lemma-symmetry", rep_lemma.symmetric_ok, None
    yield "lemma-involution", rep_lemma.involution_ok, None

    budget = args.enum_budget if args.enum_budget else census._budget()
    if not args.slow and rep.name == "2sym2-3" and q >= 5:
        yield "census", None, "skipped (needs --slow)"
        yield "oracle-equivalence", None, "skipped (needs --slow)"
    elif q ** rep.dim > budget:
        yield "census", None, "skipped (over enumeration budget)"
        yield "oracle-equivalence", None, "skipped (over enumeration budget)"
    else:
        cv = census.full_census(rep, q, threads=args.threads, budget=budget)
        sizes = [R.orbit_size(rep, lab, q) for lab in rep.labels]
        yield "census", list(cv.counts) == sizes, None
        oracle = census.oracle_ft_matrix(rep, q, threads=args.threads, budget=budget)
        yield "oracle-equivalence", oracle.m == ftm.m, None

    ones = ftsolver.ft_apply(ftm, [1] * rep.r)
    want = [Fraction(int(i == 0)) for i in range(rep.r)]
    yield "constant-transform", list(ones) == want, None

    if rep.name in ("sym3-2", "2sym2-3"):
        hat = ftsolver.ft_apply(ftm, paperdata.singular_indicator(rep.name))
        expect = [Fraction(v(q)) / q ** rep.dim
                  for v in paperdata.expected_psi_hat(rep.name)]
        yield "singular-transform", list(hat) == expect, None
    if rep.name == "sym3-2":
        zeros = [z(q) for z in rep.zeros]
        hat = ftsolver.ft_apply(ftm, zeros)
        expect = [Fraction(v(q)) / q ** rep.dim
                  for v in paperdata.expected_root_count_hat()]
        yield "root-count-transform", list(hat) == expect, None
        quad = ftsolver.ft_apply(ftm, (0, 0, 0, 1, -1, 1))
        sign = paperdata.sym32_quad_sign(q)
        expect = [Fraction(sign * c, q * q) for c in (0, 0, 0, 1, -1, 1)]
        yield "quadratic-character", list(quad) == expect, None
        yield "quadratic-twist-pointwise", ftsolver.sym32_quadratic_twist_check(q), None
    if rep.name == "sym2-2":
        quad = ftsolver.ft_apply(ftm, (0, 0, 1, -1))
        expect = [Fraction(v(q), q ** 3)
                  for v in paperdata.expected_sym22_quad_hat()]
        yield "quadratic-character", list(quad) == expect, None


def cmd_verify(args):
    failures = 0
    results = []
    for name, ok, detail in _verify_battery(args):
        if ok is None:
            status = detail
        else:
            status = "ok" if ok else "FAIL"
            failures += 0 if ok else 1
        results.append({"check": name, "status": status})
        print(f"  {name:<26} {status}")
    if failures:
        sys.stderr.write(canonical_json(
            {"rep": args.rep, "q": args.q, "failures": failures,
             "results": results}))
    return 1 if failures else 0


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="pvsft",
        description="Exact Fourier transforms of orbit indicators on five "
                    "prehomogeneous vector spaces over F_p")
    sub = ap.add_subparsers(dest="command", required=True)

    p_orbits = sub.add_parser("orbits", help="orbit table (optionally verified)")
    _add_common(p_orbits)
    p_orbits.add_argument("--verify-census", action="store_true")
    p_orbits.set_defaults(func=cmd_orbits)

    p_counts = sub.add_parser("counts", help="|O_i ∩ W| for a coordinate mask")
    _add_common(p_counts)
    p_counts.add_argument("--subspace", required=True,
                          help="0/1 mask in coefficient order, e.g. 001011|001011")
    p_counts.set_defaults(func=cmd_counts)

    p_ft = sub.add_parser("ft", help="the Fourier matrix M at q")
    _add_common(p_ft)
    p_ft.add_argument("--method", default="table",
                      choices=["table", "subspace", "oracle"])
    p_ft.set_defaults(func=cmd_ft)

    p_oracle = sub.add_parser("oracle", help="alias for ft --method oracle")
    _add_common(p_oracle)
    p_oracle.set_defaults(func=cmd_ft, method="oracle")

    p_sym = sub.add_parser("symbolic", help="reconstruct M(q) by interpolation")
    _add_common(p_sym, q=False)
    p_sym.add_argument("--primes", default=None,
                       help="comma-separated sample primes (default: first dim+2)")
    p_sym.set_defaults(func=cmd_symbolic)

    p_verify = sub.add_parser("verify", help="full check battery at one prime")
    _add_common(p_verify)
    p_verify.add_argument("--slow", action="store_true",
                          help="include the quartic q=5 enumeration checks")
    p_verify.set_defaults(func=cmd_verify)

    args = ap.parse_args(argv)
    if args.threads is None:
        args.threads = int(os.environ.get("PVSFT_THREADS", 0)) or None
    try:
        return args.func(args)
    except (census.BudgetExceededError, ValueError) as exc:
        sys.stderr.write(canonical_json({"error": str(exc)}))
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
