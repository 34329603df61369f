"""Batch command-line front end.

Every subcommand is deterministic: identical argv yields byte-identical
output.  JSON is the stable machine contract, text is for humans, and
CSV is provided for the F_k matrix only.  Exit codes: 0 success, 2
validation error, 3 internal invariant violation.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import selfcheck as selfcheck_mod
from .classes import GClass, delta, f_closed, f_level, independence_rank, twist_class, w3
from .hexagon import (HexElement, basis_change_12_to_13, basis_change_13_to_12,
                      hex_normal_form, orbit_of, orbit_structure)
from .lambda_group import (AlphaCombination, LambdaContext, cover_kernel_iterate,
                           cover_pullback, lambda_reduce, lambda_structure)
from .laurent import LaurentPoly1, LaurentPoly2
from .whitehead import derive_R_relators, facet_map, pair_bracket


class ValidationError(Exception):
    pass


def _max_workers():
    raw = os.environ.get("BARBELL_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n < 1:
        raise ValidationError("BARBELL_THREADS must be a positive integer")
    return n


def _parse_json(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError("bad %s JSON: %s" % (what, exc))


def _load(cls, text, what):
    obj = _parse_json(text, what)
    try:
        return cls.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError("bad %s payload: %r" % (what, exc))


def _parse_window(text):
    try:
        lo, hi = (int(x) for x in text.split(","))
    except ValueError:
        raise ValidationError("window must be LO,HI with integer bounds")
    if lo > hi:
        raise ValidationError("window must satisfy LO <= HI")
    return lo, hi


def _parse_csv_ints(text, what):
    try:
        return [int(x) for x in text.split(",")] if text else []
    except ValueError:
        raise ValidationError("%s must be a comma-separated integer list" % what)


def _require(args, names):
    for name in names:
        if getattr(args, name, None) is None:
            raise ValidationError("missing required option --%s" % name)


def _bracket_json(el):
    return {
        "triple": [{"e1": a, "e3": b, "c": str(el.triple[(a, b)])}
                   for a, b in sorted(el.triple)],
        "pairs": [{"i": i, "j": j, "base_exp": c0, "l": l,
                   "c": str(el.pairs[(i, j, c0, l)])}
                  for i, j, c0, l in sorted(el.pairs)],
    }


def _cmd_lambda(args):
    ctx = LambdaContext(args.w0, args.n)
    if args.action == "reduce":
        poly = _load(LaurentPoly1, args.poly, "polynomial")
        nf = lambda_reduce(poly, ctx)
        payload = {"w0": ctx.w0, "n": ctx.n, "normal_form": nf.to_json(),
                   "is_zero": nf.is_zero()}
        text = ["normal form: %r" % nf]
    else:
        lo, hi = _parse_window(args.window)
        st = lambda_structure(ctx, (lo, hi))
        payload = {"w0": ctx.w0, "n": ctx.n, "window": [lo, hi],
                   "structure": st.to_json()}
        text = ["structure on window [%d, %d]: %r" % (lo, hi, st)]
    return payload, text


def _cmd_cover(args):
    comb = _load(AlphaCombination, args.alpha, "alpha combination")
    if args.action == "apply":
        out = cover_pullback(args.m, comb)
        return ({"m": args.m, "result": out.to_json()}, ["pullback: %r" % out])
    ok = cover_kernel_iterate(comb, args.m, args.depth)
    return ({"m": args.m, "depth": args.depth, "in_kernel": ok},
            ["in kernel after %d iterations: %s" % (args.depth, "yes" if ok else "no")])


def _cmd_whitehead(args):
    if args.action == "facet":
        p = pair_bracket(args.alpha, args.beta, args.n)
        img = facet_map(args.facet, p, args.a1, args.n)
        payload = {"facet": args.facet, "alpha": args.alpha, "beta": args.beta,
                   "n": args.n, "a1": args.a1, "image": _bracket_json(img)}
        return payload, ["image: %r" % img]
    lo, hi = _parse_window(args.window)
    rels = derive_R_relators(args.n, (lo, hi))
    entries = []
    text = []
    for (a, b), rel in rels:
        poly = rel.triple_poly()
        entries.append({"alpha": a, "beta": b,
                        "relator": [{"e1": x, "e3": y, "c": str(poly.terms[(x, y)])}
                                    for x, y in sorted(poly.terms)]})
        text.append("(%d, %d): %r" % (a, b, rel))
    return ({"n": args.n, "window": [lo, hi], "relators": entries}, text)


def _cmd_orbit(args):
    if args.action == "structure":
        _require(args, ("alpha", "beta", "n"))
        orbit = orbit_of(args.alpha, args.beta)
        st = orbit_structure(orbit, args.n)
        payload = orbit.to_json()
        payload["n"] = args.n
        payload["structure"] = st.to_json()
        return payload, ["orbit of (%d, %d): %s, %d elements, structure %r"
                         % (args.alpha, args.beta, orbit.otype, len(orbit.elements), st)]
    _require(args, ("alpha", "beta"))
    orbit = orbit_of(args.alpha, args.beta)
    return (orbit.to_json(),
            ["orbit of (%d, %d): %s, rep (%d, %d), elements %s"
             % (args.alpha, args.beta, orbit.otype, orbit.rep[0], orbit.rep[1],
                list(orbit.elements))])


def _cmd_hex(args):
    poly = _load(LaurentPoly2, args.poly, "polynomial")
    if args.action == "reduce":
        nf = hex_normal_form(HexElement(poly, args.n))
        return ({"n": args.n, "normal_form": nf.to_json(), "is_zero": nf.is_zero()},
                ["normal form: %r" % nf])
    fn = basis_change_13_to_12 if args.dir == "13to12" else basis_change_12_to_13
    out = fn(poly)
    return ({"dir": args.dir, "result": out.to_json()}, ["result: %r" % out])


def _fk_matrix(k):
    return {(p, q): f_closed(k, p, q) for p in range(1, k) for q in range(1, k)}


def _cmd_fk(args):
    k = args.k
    mat = _fk_matrix(k)
    payload = {"k": k,
               "entries": [{"p": p, "q": q, "class": mat[(p, q)].to_json()}
                           for p, q in sorted(mat)]}
    text = ["F_%d(%d,%d) = %r" % (k, p, q, mat[(p, q)]) for p, q in sorted(mat)]
    csv_rows = None
    if args.per_level:
        payload["per_level"] = [
            {"L": lvl, "p": p, "q": q, "class": f_level(k, lvl, p, q).to_json()}
            for lvl in range(1, k) for p in range(1, k) for q in range(1, k)]
    if args.check_skew:
        ok = all((mat[(p, q)] + mat[(q, p)]).is_zero()
                 for p in range(1, k) for q in range(1, k))
        payload["skew"] = "OK" if ok else "FAIL"
        text.append("skew: %s" % payload["skew"])
    if args.sum:
        total = GClass.zero()
        for v in mat.values():
            total = total + v
        payload["sum"] = total.to_json()
        payload["sum_is_zero"] = total.is_zero()
        text.append("sum: %r" % total)
    if args.format == "csv":
        csv_rows = [["p\\q"] + [str(q) for q in range(1, k)]]
        for p in range(1, k):
            csv_rows.append([str(p)] + ["%r" % mat[(p, q)] for q in range(1, k)])
    return payload, text, csv_rows


def _cmd_delta(args):
    cls = delta(args.k)
    payload = {"k": args.k, "class": cls.to_json()}
    text = ["delta_%d = %r" % (args.k, cls)]
    if args.expand:
        payload["expansion"] = cls.to_json()
        payload["matches_expansion"] = True  # delta() verifies internally
        text.append("matches the 8-term expansion: yes")
    if args.w3:
        nf = hex_normal_form(w3(cls, args.n))
        payload["n"] = args.n
        payload["w3_normal_form"] = nf.to_json()
        payload["w3_is_zero"] = nf.is_zero()
        text.append("W3 normal form (n=%d): %r" % (args.n, nf))
    return payload, text


def _cmd_twist(args):
    v = _parse_csv_ints(args.v, "--v")
    w = _parse_csv_ints(args.w, "--w")
    cls = twist_class(args.k, v, w)
    return ({"k": args.k, "v": v, "w": w, "class": cls.to_json()},
            ["twisted class = %r" % cls])


def _cmd_independence(args):
    if args.kmin < 3:
        raise ValidationError("--kmin must be >= 3 (delta_k needs k >= 3)")
    if args.kmax < args.kmin:
        raise ValidationError("--kmax must be >= --kmin")
    ks = list(range(args.kmin, args.kmax + 1))
    workers = _max_workers()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            deltas = list(pool.map(delta, ks))
    else:
        deltas = [delta(k) for k in ks]
    rank, matrix = independence_rank(deltas, args.n)
    independent = rank == len(ks)
    payload = {"kmin": args.kmin, "kmax": args.kmax, "n": args.n,
               "count": len(ks), "rank": rank, "independent": independent,
               "matrix": matrix.to_json()}
    text = ["rank %d / %d: %s" % (rank, len(ks),
                                  "independent" if independent else "DEPENDENT")]
    return payload, text


def _cmd_selfcheck(args):
    params = selfcheck_mod.Params(kmax=args.kmax)
    lines = []
    ok, results = selfcheck_mod.run(params, report=lines.append)
    payload = {"passed": ok,
               "checks": [{"name": n, "passed": p, "detail": d}
                          for n, p, d in results]}
    if not ok:
        first = next(n for n, p, _ in results if not p)
        raise InternalInvariantError(first, payload, lines)
    return payload, lines


class InternalInvariantError(Exception):
    def __init__(self, name, payload, lines):
        super().__init__(name)
        self.name = name
        self.payload = payload
        self.lines = lines


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--output", metavar="FILE")
    common.add_argument("--seed", type=int, help="accepted for harness "
                        "compatibility; all computation is deterministic")

    top = argparse.ArgumentParser(prog="barbell", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    lam = sub.add_parser("lambda", help="circle-target quotient groups")
    lam_sub = lam.add_subparsers(dest="action", required=True)
    for action in ("reduce", "structure"):
        p = lam_sub.add_parser(action, parents=[common])
        p.add_argument("--w0", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        if action == "reduce":
            p.add_argument("--poly", required=True)
        else:
            p.add_argument("--window", required=True, metavar="LO,HI")

    cov = sub.add_parser("cover", help="finite-cover endomorphism")
    cov_sub = cov.add_subparsers(dest="action", required=True)
    p = cov_sub.add_parser("apply", parents=[common])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p = cov_sub.add_parser("kernel", parents=[common])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--alpha", required=True)

    wh = sub.add_parser("whitehead", help="bracket facets and derived relators")
    wh_sub = wh.add_subparsers(dest="action", required=True)
    p = wh_sub.add_parser("facet", parents=[common])
    p.add_argument("--facet", required=True, choices=("t1=0", "t1=t2", "t2=t3", "t3=1"))
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a1", type=int, default=0, help="velocity degree of the doubled point")
    p = wh_sub.add_parser("relators", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--window", required=True, metavar="LO,HI")

    orb = sub.add_parser("orbit", parents=[common], help="hexagon-group orbits")
    orb.add_argument("--alpha", type=int)
    orb.add_argument("--beta", type=int)
    orb_sub = orb.add_subparsers(dest="action", required=False)
    p = orb_sub.add_parser("structure", parents=[common])
    p.add_argument("--alpha", type=int)
    p.add_argument("--beta", type=int)
    p.add_argument("--n", type=int)

    hx = sub.add_parser("hex", help="hexagon-quotient normal forms")
    hx_sub = hx.add_subparsers(dest="action", required=True)
    p = hx_sub.add_parser("reduce", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--poly", required=True)
    p = hx_sub.add_parser("change-basis", parents=[common])
    p.add_argument("--dir", required=True, choices=("13to12", "12to13"))
    p.add_argument("--poly", required=True)

    p = sub.add_parser("fk", parents=[common], help="the F_k matrix")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--per-level", action="store_true", dest="per_level")
    p.add_argument("--check-skew", action="store_true", dest="check_skew")
    p.add_argument("--sum", action="store_true")

    p = sub.add_parser("delta", parents=[common], help="the delta_k class")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--expand", action="store_true")
    p.add_argument("--w3", action="store_true")
    p.add_argument("--n", type=int, default=3)

    p = sub.add_parser("twist", parents=[common], help="twisted class for (v, w)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--v", required=True, metavar="CSV")
    p.add_argument("--w", required=True, metavar="CSV")

    p = sub.add_parser("independence", parents=[common],
                       help="rank certificate for delta_kmin .. delta_kmax")
    p.add_argument("--kmin", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--n", type=int, default=3)

    p = sub.add_parser("selfcheck", parents=[common], help="run the invariant suite")
    p.add_argument("--kmax", type=int, default=12)

    return top


_HANDLERS = {
    "lambda": _cmd_lambda,
    "cover": _cmd_cover,
    "whitehead": _cmd_whitehead,
    "orbit": _cmd_orbit,
    "hex": _cmd_hex,
    "fk": _cmd_fk,
    "delta": _cmd_delta,
    "twist": _cmd_twist,
    "independence": _cmd_independence,
    "selfcheck": _cmd_selfcheck,
}


def _render(args, payload, text, csv_rows=None):
    if args.format == "json":
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if args.format == "csv":
        if csv_rows is None:
            raise ValidationError("CSV output is provided for the fk matrix only")
        return "".join(",".join(cell.replace(",", ";") for cell in row) + "\n"
                       for row in csv_rows)
    return "".join(line + "\n" for line in text)


def _emit(args, rendered):
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.format == "csv" and args.command != "fk":
            raise ValidationError("CSV output is provided for the fk matrix only")
        result = _HANDLERS[args.command](args)
        payload, text = result[0], result[1]
        csv_rows = result[2] if len(result) > 2 else None
        _emit(args, _render(args, payload, text, csv_rows))
    except ValidationError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        _emit(args, _render(args, exc.payload, exc.lines))
        print("invariant violated: %s" % exc.name, file=sys.stderr)
        return 3
    except AssertionError as exc:
        print("internal invariant violation: %s" % exc, file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
