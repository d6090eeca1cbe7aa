"""Command-line front end.

Subcommands: field info, construct, verify, bounds check, search, encode,
decode, convert, demo.  Every subcommand supports --json for machine
output.  Exit codes: 0 success, 1 a verification-style property came back
false (not super-regular, infeasible parameters, mismatched demo), 2
usage or input errors.
"""

import argparse
import json
import random
import sys
from pathlib import Path

from . import __version__
from .bounds import check_char2_bound, check_divisor_bound, existence_threshold
from .codes import symbols_from_bytes, symbols_to_bytes, systematic_code
from .constructions import ConstructionRecipe, build_parity, scalars_automorphism
from .convert import convert_merge, default_convert, make_pair
from .errors import NotSuperRegular, SingularSubsystem, VandermergeError
from .galois import FieldSpec, field_spec, make_field, parse_element, prime_power
from .matrix import MatrixF, is_super_regular
from .report import render_frontier_figure, write_csv
from .search import (
    DEFAULT_BUDGET,
    empirical_min_q,
    exhaustive_search,
    prime_power_family,
    random_search,
)

EXIT_OK = 0
EXIT_PROPERTY_FALSE = 1
EXIT_USAGE = 2


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def _dump_json(obj, path=None):
    text = json.dumps(obj, indent=2)
    if path is None:
        print(text)
    else:
        Path(path).write_text(text + "\n")


def _field_from_args(args) -> FieldSpec:
    modulus = None
    if getattr(args, "modulus", None):
        s = args.modulus
        modulus = int(s, 0) if isinstance(s, str) else s
    return field_spec(args.p, args.w, modulus)


def _load_field(path) -> FieldSpec:
    return FieldSpec.from_json(_load_json(path))


def _load_matrix(args):
    obj = _load_json(args.matrix)
    if getattr(args, "field", None):
        spec = _load_field(args.field)
    elif "field" in obj:
        spec = FieldSpec.from_json(obj["field"])
    elif {"p", "w"} <= obj.keys():
        spec = FieldSpec.from_json(obj)
    else:
        raise ValueError("no field given: pass --field or embed one in the matrix file")
    ctx = make_field(spec)
    return ctx, MatrixF.from_json(ctx, obj)


def _load_codeword(path, ctx):
    raw = _load_json(path)
    return [None if v is None else parse_element(v, ctx.p) for v in raw]


def cmd_field_info(args) -> int:
    spec = _field_from_args(args)
    ctx = make_field(spec)
    theta = ctx.primitive()
    info = {
        "p": ctx.p,
        "w": ctx.w,
        "q": ctx.q,
        "modulus": list(spec.modulus),
        "primitive": theta,
        "tables": ctx._exp is not None,
    }
    if ctx.p == 2:
        info["modulus_hex"] = hex(ctx._mod_int)
    if args.json:
        _dump_json(info)
    else:
        print(f"GF({ctx.q}) = GF({ctx.p}^{ctx.w})")
        if ctx.w > 1:
            mod = info.get("modulus_hex", list(spec.modulus))
            print(f"modulus: {mod}")
        print(f"primitive element: {theta}")
        print(f"exp/log tables: {'built' if info['tables'] else 'not built'}")
    return EXIT_OK


def cmd_construct(args) -> int:
    recipe = ConstructionRecipe.from_json(_load_json(args.recipe))
    built = build_parity(recipe)
    out = built.matrix.to_json()
    out["field"] = recipe.field.to_json()
    out["scalars"] = list(built.scalars)
    out["guarantee"] = built.guarantee
    if args.out:
        _dump_json(out, args.out)
    if args.json and not args.out:
        _dump_json(out)
    elif not args.json:
        print(f"built {built.matrix.rows}x{built.matrix.cols} parity over "
              f"GF({recipe.field.q}), scalars {list(built.scalars)}")
        print(f"guarantee: {built.guarantee}")
        if args.out:
            print(f"wrote {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    ctx, m = _load_matrix(args)
    report = is_super_regular(m, use_vandermonde_reduction=not args.full)
    if args.json:
        out = {
            "super_regular": report.super_regular,
            "determinants": report.determinants,
            "witness": None,
        }
        if report.witness is not None:
            out["witness"] = {"rows": list(report.witness.rows),
                              "cols": list(report.witness.cols)}
        _dump_json(out)
    else:
        print(f"super-regular: {'true' if report.super_regular else 'false'}")
        if report.witness is not None:
            print(f"singular submatrix: rows {list(report.witness.rows)} "
                  f"cols {list(report.witness.cols)}")
    return EXIT_OK if report.super_regular else EXIT_PROPERTY_FALSE


def cmd_bounds_check(args) -> int:
    q, k, r = args.q, args.k, args.r
    verdicts = {"divisor-order": check_divisor_bound(q, k, r)}
    pw = prime_power(q)
    if pw is not None and pw[0] == 2:
        verdicts["char2-zero-sum"] = check_char2_bound(q, k, r)
    feasible = all(v.feasible for v in verdicts.values())
    out = {
        "q": q,
        "k": k,
        "r": r,
        "feasible": feasible,
        "violations": [v.to_json() for verdict in verdicts.values()
                       for v in verdict.violations],
        "existence_threshold": existence_threshold(k, r),
    }
    if args.json:
        _dump_json(out)
    else:
        print(f"q={q} k={k} r={r}: {'feasible' if feasible else 'infeasible'}")
        for v in out["violations"]:
            print(f"  violated [{v['rule']}]: {v['requires']}")
        print(f"existence guaranteed for prime powers q > {out['existence_threshold']}")
    return EXIT_OK if feasible else EXIT_PROPERTY_FALSE


def cmd_search(args) -> int:
    budget = args.budget if args.budget else DEFAULT_BUDGET
    if args.q_max:
        family = prime_power_family(args.q_max)
        rows = empirical_min_q(args.k, args.r, family, budget=budget)
    else:
        if args.p is None or args.w is None:
            raise ValueError("give --p and --w for one field, or --q-max for a sweep")
        ctx = make_field(_field_from_args(args))
        if args.trials:
            rows = [random_search(ctx, args.k, args.r, args.trials, args.seed)]
        else:
            rows = [exhaustive_search(ctx, args.k, args.r, budget=budget)]
    if args.csv:
        write_csv(rows, args.csv)
        if not args.json:
            print(f"wrote {args.csv}")
    else:
        write_csv(rows, sys.stdout)
    if args.plot:
        if not args.q_max:
            raise ValueError("--plot requires a --q-max frontier sweep")
        render_frontier_figure(rows, args.plot)
        if not args.json:
            print(f"wrote {args.plot}")
    return EXIT_OK


def cmd_encode(args) -> int:
    ctx, parity = _load_matrix(args)
    code = systematic_code(ctx, parity)
    if args.binary:
        message = symbols_from_bytes(ctx, Path(args.message).read_bytes())
    else:
        message = [parse_element(v, ctx.p) for v in _load_json(args.message)]
    cw = code.encode(message)
    if args.binary:
        Path(args.out).write_bytes(symbols_to_bytes(ctx, cw))
    else:
        _dump_json(cw, args.out)
    if not args.json:
        print(f"encoded {code.k} symbols -> {code.n}; wrote {args.out}")
    return EXIT_OK


def cmd_decode(args) -> int:
    ctx, parity = _load_matrix(args)
    code = systematic_code(ctx, parity)
    received = _load_codeword(args.infile, ctx)
    message = code.decode(received)
    if args.binary:
        Path(args.out).write_bytes(symbols_to_bytes(ctx, message))
    else:
        _dump_json(message, args.out)
    if not args.json:
        erased = sum(1 for v in received if v is None)
        print(f"decoded {code.k} symbols ({erased} erasures); wrote {args.out}")
    return EXIT_OK


def cmd_convert(args) -> int:
    obj = _load_json(args.pair)
    spec = FieldSpec.from_json(obj["field"] if "field" in obj else obj)
    ctx = make_field(spec)
    xi = [parse_element(v, ctx.p) for v in obj["xi"]]
    pair = make_pair(ctx, int(obj["kI"]), int(obj["r"]), int(obj["lambda"]),
                     xi=xi, require_mds=bool(obj.get("require_mds", True)))
    cws = [_load_codeword(p, ctx) for p in args.infiles]
    final, stats = convert_merge(pair, cws)
    if args.out:
        _dump_json(final, args.out)
    stats_obj = {
        "read": stats.symbols_read,
        "written": stats.symbols_written,
        "default_read": pair.lam * pair.k_initial,
    }
    if args.json:
        out = {"final": final if not args.out else args.out, "stats": stats_obj}
        _dump_json(out)
    else:
        if args.out:
            print(f"wrote {args.out}")
        else:
            print(f"final codeword: {final}")
        if args.stats:
            print(f"stats: read={stats_obj['read']} written={stats_obj['written']} "
                  f"(default approach reads {stats_obj['default_read']})")
    return EXIT_OK


def cmd_demo(args) -> int:
    rng = random.Random(args.seed)
    spec = _field_from_args(args)
    ctx = make_field(spec)
    xi = scalars_automorphism(ctx, 1)[:args.r] if ctx.w > 1 else None
    if xi is None:
        raise ValueError("demo needs an extension field (w >= 2)")
    pair = make_pair(ctx, args.kI, args.r, args.lam, xi=xi)
    message = [rng.randrange(ctx.q) for _ in range(pair.k_final)]
    blocks = [message[b.start:b.stop] for b in pair.initial_partition()]
    initial = [pair.initial_code.encode(b) for b in blocks]
    merged, stats = convert_merge(pair, initial)
    rebuilt, dstats = default_convert(pair, initial)
    match = merged == rebuilt == pair.final_code.encode(message)
    erase_at = sorted(rng.sample(range(pair.n_final), pair.r))
    received = [None if i in erase_at else v for i, v in enumerate(merged)]
    decoded = pair.final_code.decode(received)
    recovered = decoded == message
    out = {
        "field": {"q": ctx.q, "p": ctx.p, "w": ctx.w},
        "scalars": list(pair.xi),
        "initial_code": [pair.n_initial, pair.k_initial],
        "final_code": [pair.n_final, pair.k_final],
        "lambda": pair.lam,
        "seed": args.seed,
        "stats": {"read": stats.symbols_read, "written": stats.symbols_written,
                  "default_read": dstats.symbols_read,
                  "default_written": dstats.symbols_written},
        "conversion_matches_reencode": match,
        "erased": erase_at,
        "decoded_ok": recovered,
    }
    if args.json:
        _dump_json(out)
    else:
        print(f"field GF({ctx.q}), scalars {list(pair.xi)}")
        print(f"pair [{pair.n_initial},{pair.k_initial}] -> "
              f"[{pair.n_final},{pair.k_final}] (lambda={pair.lam})")
        print(f"conversion: read={stats.symbols_read} write={stats.symbols_written} "
              f"vs default read={dstats.symbols_read} write={dstats.symbols_written}")
        print(f"merged output equals re-encode: {str(match).lower()}")
        print(f"erased {erase_at}; decode recovers message: {str(recovered).lower()}")
    return EXIT_OK if match and recovered else EXIT_PROPERTY_FALSE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=None, help="seed for any randomness")
    common.add_argument("--budget", type=int, default=None,
                        help="determinant-evaluation budget for searches")

    parser = argparse.ArgumentParser(
        prog="vandermerge",
        description="Vandermonde-parity erasure codes, merge-regime conversion, "
                    "field-size bounds, and scalar search.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_field = sub.add_parser("field", help="field inspection")
    field_sub = p_field.add_subparsers(dest="field_command", required=True)
    p_info = field_sub.add_parser("info", parents=[common], help="describe a field")
    p_info.add_argument("--p", type=int, required=True)
    p_info.add_argument("--w", type=int, default=1)
    p_info.add_argument("--modulus", help="modulus as int/hex (base-p digit encoding)")
    p_info.set_defaults(func=cmd_field_info)

    p_con = sub.add_parser("construct", parents=[common],
                           help="build a parity matrix from a recipe file")
    p_con.add_argument("--recipe", required=True)
    p_con.add_argument("--out", help="output matrix JSON path")
    p_con.set_defaults(func=cmd_construct)

    p_ver = sub.add_parser("verify", parents=[common],
                           help="test a matrix for super-regularity")
    p_ver.add_argument("--matrix", required=True)
    p_ver.add_argument("--field", help="field JSON (if not embedded in the matrix)")
    p_ver.add_argument("--full", action="store_true",
                       help="enumerate all selectors, no row-shift reduction")
    p_ver.set_defaults(func=cmd_verify)

    p_bounds = sub.add_parser("bounds", help="feasibility bounds")
    bounds_sub = p_bounds.add_subparsers(dest="bounds_command", required=True)
    p_bc = bounds_sub.add_parser("check", parents=[common],
                                 help="feasibility verdict for (q, k, r)")
    p_bc.add_argument("--q", type=int, required=True)
    p_bc.add_argument("--k", type=int, required=True)
    p_bc.add_argument("--r", type=int, required=True)
    p_bc.set_defaults(func=cmd_bounds_check)

    p_search = sub.add_parser("search", parents=[common],
                              help="search scalar sets; CSV output")
    p_search.add_argument("--p", type=int)
    p_search.add_argument("--w", type=int, default=1)
    p_search.add_argument("--modulus")
    p_search.add_argument("--k", type=int, required=True)
    p_search.add_argument("--r", type=int, required=True)
    p_search.add_argument("--trials", type=int,
                          help="randomized draws instead of exhaustive scan")
    p_search.add_argument("--q-max", type=int, dest="q_max",
                          help="sweep all prime powers up to this size")
    p_search.add_argument("--csv", help="write the table here instead of stdout")
    p_search.add_argument("--plot", help="render the frontier figure to this path")
    p_search.set_defaults(func=cmd_search)

    p_enc = sub.add_parser("encode", parents=[common], help="systematic encode")
    p_enc.add_argument("--matrix", required=True, help="parity matrix JSON")
    p_enc.add_argument("--field", help="field JSON (if not embedded in the matrix)")
    p_enc.add_argument("--message", required=True)
    p_enc.add_argument("--out", required=True)
    p_enc.add_argument("--binary", action="store_true",
                       help="raw bytes in/out, one per symbol (p=2, w<=8)")
    p_enc.set_defaults(func=cmd_encode)

    p_dec = sub.add_parser("decode", parents=[common], help="erasure decode")
    p_dec.add_argument("--matrix", required=True, help="parity matrix JSON")
    p_dec.add_argument("--field", help="field JSON (if not embedded in the matrix)")
    p_dec.add_argument("--in", dest="infile", required=True,
                       help="codeword JSON; null marks an erasure")
    p_dec.add_argument("--out", required=True)
    p_dec.add_argument("--binary", action="store_true",
                       help="write the decoded message as raw bytes")
    p_dec.set_defaults(func=cmd_decode)

    p_cv = sub.add_parser("convert", parents=[common],
                          help="merge initial codewords into a final codeword")
    p_cv.add_argument("--pair", required=True, help="pair JSON")
    p_cv.add_argument("--in", dest="infiles", nargs="+", required=True,
                      help="initial codeword JSON files, in block order")
    p_cv.add_argument("--out", help="final codeword JSON path")
    p_cv.add_argument("--stats", action="store_true", help="print access stats")
    p_cv.set_defaults(func=cmd_convert)

    p_demo = sub.add_parser("demo", parents=[common],
                            help="end-to-end encode/convert/decode on random data")
    p_demo.add_argument("--p", type=int, default=2)
    p_demo.add_argument("--w", type=int, default=8)
    p_demo.add_argument("--modulus")
    p_demo.add_argument("--kI", type=int, default=4, dest="kI")
    p_demo.add_argument("--r", type=int, default=3)
    p_demo.add_argument("--lambda", type=int, default=2, dest="lam")
    p_demo.set_defaults(func=cmd_demo)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NotSuperRegular, SingularSubsystem) as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_PROPERTY_FALSE
    except VandermergeError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
