"""Command-line front end.

Subcommands: census, porc-fit, hall, autcount, typeof, oracle, selftest.
Output is JSON by default (counts as decimal strings, schema_version at the
top) or CSV with --format csv; --plot renders a figure next to the data.
Exit codes: 0 success, 2 usage, 3 cap refusal, 4 internal inconsistency.
"""

import argparse
import json
import os
import sys
import time

from . import __version__
from .caps import InternalInconsistencyError, RefusalError
from .census import census
from .dvr import tser, zmod
from .fields import GF, is_prime, prime_power
from .gltypes import type_of_tuple
from .linalg import is_invertible
from .modules import aut_order, aut_order_value, hall_number
from .oracle import enumerate_lie_rings
from .porcfit import PorcFormula, porc_fit

EXIT_OK = 0
EXIT_REFUSAL = 3
EXIT_INTERNAL = 4

SCHEMA_VERSION = "1"


def _parse_ints(text):
    return [int(x) for x in text.split(",") if x != ""]


def _parse_partition(text):
    if text in ("", "-"):
        return ()
    parts = tuple(int(x) for x in text.split(","))
    if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise argparse.ArgumentTypeError(f"not a partition: {text}")
    return parts


def _parse_matrix(text):
    rows = []
    for row in text.split(";"):
        rows.append(tuple(int(x) for x in row.split(",")))
    if any(len(r) != len(rows) for r in rows):
        raise argparse.ArgumentTypeError("matrix must be square")
    return tuple(rows)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="liecensus",
        description="Exact census of class-2 Lie rings with central Frattini ideal",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--out", default=None, help="write output here instead of stdout")
        p.add_argument("--cap-group-size", type=int, default=None)
        p.add_argument("--cap-module-size", type=int, default=None)

    c = sub.add_parser("census", help="count classes per (n, p)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--primes", type=_parse_ints, required=True)
    c.add_argument("--engine", choices=["typed", "naive"], default="typed")
    c.add_argument("--threads", type=int, default=1)
    c.add_argument("--plot", default=None, help="render counts figure to this file")
    common(c)

    f = sub.add_parser("porc-fit", help="fit census output to a PORC formula")
    f.add_argument("--input", required=True, help="census JSON emitted by this tool")
    f.add_argument("--n", type=int, default=None, help="restrict to one n from the input")
    f.add_argument("--modulus", type=int, default=12)
    f.add_argument("--degmax", type=int, default=2)
    f.add_argument("--plot", default=None)
    common(f)

    h = sub.add_parser("hall", help="submodule count with prescribed sub/quotient type")
    h.add_argument("--lambda", dest="lam", type=_parse_partition, required=True)
    h.add_argument("--mu", type=_parse_partition, required=True)
    h.add_argument("--nu", type=_parse_partition, required=True)
    h.add_argument("--q", type=int, required=True)
    h.add_argument("--ring", choices=["zmod", "tser"], default="zmod")
    common(h)

    a = sub.add_parser("autcount", help="order of the automorphism group of M_lambda")
    a.add_argument("--lambda", dest="lam", type=_parse_partition, required=True)
    a.add_argument("--q", type=int, required=True)
    a.add_argument("--ring", choices=["zmod", "tser"], default="zmod")
    a.add_argument("--method", choices=["stream", "formula"], default="stream")
    common(a)

    t = sub.add_parser("typeof", help="conjugacy type of a matrix tuple")
    t.add_argument("--q", type=int, required=True)
    t.add_argument(
        "--matrix",
        action="append",
        type=_parse_matrix,
        required=True,
        help="rows separated by ';', entries by ','; repeat per component",
    )
    common(t)

    o = sub.add_parser("oracle", help="brute-force census count")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--p", type=int, required=True)
    common(o)

    s = sub.add_parser("selftest", help="run the acceptance criteria")
    s.add_argument("--criteria", type=_parse_ints, default=None)
    s.add_argument("--quick", action="store_true", help="reduced grids where defined")
    common(s)
    return ap


def _apply_caps(args):
    if getattr(args, "cap_group_size", None) is not None:
        os.environ["PORC_CAP_GROUP_SIZE"] = str(args.cap_group_size)
    if getattr(args, "cap_module_size", None) is not None:
        os.environ["PORC_CAP_MODULE_SIZE"] = str(args.cap_module_size)


def _document(command, inputs, results, diagnostics):
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "diagnostics": diagnostics,
    }


def render_json(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render_csv(doc):
    command = doc["command"]
    lines = []
    if command == "census":
        lines.append("n,p,count")
        for r in doc["results"]:
            lines.append(f"{r['n']},{r['p']},{r['count']}")
    elif command == "hall":
        lines.append("lambda,mu,nu,q,ring,count")
        for r in doc["results"]:
            lines.append(
                "{},{},{},{},{},{}".format(
                    " ".join(map(str, r["lambda"])) or "-",
                    " ".join(map(str, r["mu"])) or "-",
                    " ".join(map(str, r["nu"])) or "-",
                    r["q"],
                    r["ring"],
                    r["count"],
                )
            )
    elif command == "autcount":
        lines.append("lambda,q,ring,method,count")
        for r in doc["results"]:
            lines.append(
                "{},{},{},{},{}".format(
                    " ".join(map(str, r["lambda"])) or "-",
                    r["q"],
                    r["ring"],
                    r["method"],
                    r["count"],
                )
            )
    elif command == "oracle":
        lines.append("n,p,count")
        for r in doc["results"]:
            lines.append(f"{r['n']},{r['p']},{r['count']}")
    elif command == "typeof":
        lines.append("degree,partitions")
        for r in doc["results"]:
            for col in r["columns"]:
                parts = "|".join(
                    " ".join(map(str, part)) or "-" for part in col["partitions"]
                )
                lines.append(f"{col['degree']},{parts}")
    elif command == "porc-fit":
        lines.append("residue,degree,coeffs")
        for r in doc["results"]:
            if r.get("rejected"):
                lines.append("rejected,,")
            else:
                for cls in r["classes"]:
                    lines.append(
                        "{},{},{}".format(
                            cls["residue"], cls["degree"], " ".join(cls["coeffs"])
                        )
                    )
    else:
        lines.append("key,value")
        for r in doc["results"]:
            for k, v in sorted(r.items()):
                lines.append(f"{k},{v}")
    return "\n".join(lines) + "\n"


def emit(doc, args):
    text = render_json(doc) if args.format == "json" else render_csv(doc)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _census_one(task):
    n, p, engine = task
    row = census(n, p, engine=engine)
    return {
        "n": row.n,
        "p": row.p,
        "count": str(row.count),
        "breakdown": [
            {"m": m, "lambda": list(lam), "count": str(c)}
            for (m, lam), c in sorted(row.breakdown.items())
        ],
        "engine": row.engine,
    }


def cmd_census(args):
    for p in args.primes:
        if not is_prime(p):
            raise RefusalError(f"{p} is not prime")
    tasks = [(args.n, p, args.engine) for p in args.primes]
    if args.threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.threads) as ex:
            results = list(ex.map(_census_one, tasks))
    else:
        results = [_census_one(t) for t in tasks]
    doc = _document(
        "census",
        {"n": args.n, "primes": args.primes, "engine": args.engine},
        results,
        _diag(
            engine=args.engine,
            note="counts are Lie-ring classes; the group reading needs odd p",
        ),
    )
    if args.plot:
        from .census import CensusRow
        from .plots import census_figure

        rows = [CensusRow(n=r["n"], p=r["p"], count=int(r["count"])) for r in results]
        census_figure(rows, args.plot)
        doc["diagnostics"]["plot"] = args.plot
    return doc


def cmd_porc_fit(args):
    with open(args.input) as fh:
        indoc = json.load(fh)
    samples = {}
    for r in indoc.get("results", []):
        if args.n is not None and r.get("n") != args.n:
            continue
        samples[int(r["p"])] = int(r["count"])
    if not samples:
        raise RefusalError("no usable (p, count) rows in the input document")
    result = porc_fit(samples, args.modulus, args.degmax)
    if isinstance(result, PorcFormula):
        payload = result.to_jsonable()
        payload["rejected"] = False
        results = [payload]
    else:
        results = [result.to_jsonable()]
    doc = _document(
        "porc-fit",
        {
            "input": args.input,
            "n": args.n,
            "modulus": args.modulus,
            "degmax": args.degmax,
        },
        results,
        _diag(),
    )
    if args.plot:
        from .plots import porc_figure

        formula = result if isinstance(result, PorcFormula) else None
        porc_figure(samples, formula, args.plot)
        doc["diagnostics"]["plot"] = args.plot
    return doc


def _ring_for(args):
    if args.ring == "zmod":
        if not is_prime(args.q):
            raise RefusalError("zmod needs a prime q; use --ring tser for prime powers")
        return zmod(args.q, max(args.lam[0] if args.lam else 1, 1))
    if prime_power(args.q) is None:
        raise RefusalError(f"{args.q} is not a prime power")
    return tser(args.q, max(args.lam[0] if args.lam else 1, 1))


def cmd_hall(args):
    ring = _ring_for(args)
    count = hall_number(args.lam, args.mu, args.nu, ring)
    doc = _document(
        "hall",
        {
            "lambda": list(args.lam),
            "mu": list(args.mu),
            "nu": list(args.nu),
            "q": args.q,
            "ring": args.ring,
        },
        [
            {
                "lambda": list(args.lam),
                "mu": list(args.mu),
                "nu": list(args.nu),
                "q": args.q,
                "ring": args.ring,
                "count": str(count),
            }
        ],
        _diag(),
    )
    return doc


def cmd_autcount(args):
    if args.method == "formula":
        count = aut_order_value(args.lam, args.q)
    else:
        ring = _ring_for(args)
        count = aut_order(args.lam, ring)
    return _document(
        "autcount",
        {"lambda": list(args.lam), "q": args.q, "ring": args.ring, "method": args.method},
        [
            {
                "lambda": list(args.lam),
                "q": args.q,
                "ring": args.ring,
                "method": args.method,
                "count": str(count),
            }
        ],
        _diag(),
    )


def cmd_typeof(args):
    if prime_power(args.q) is None:
        raise RefusalError(f"{args.q} is not a prime power")
    F = GF(args.q)
    mats = args.matrix
    for A in mats:
        if any(v < 0 or v >= args.q for row in A for v in row):
            raise RefusalError("matrix entries must lie in range(q)")
        if not is_invertible(F, A):
            raise RefusalError("matrix is not invertible")
    key = type_of_tuple(F, mats)
    return _document(
        "typeof",
        {"q": args.q, "components": len(mats)},
        [
            {
                "columns": [
                    {"degree": d, "partitions": [list(part) for part in parts]}
                    for d, parts in key
                ]
            }
        ],
        _diag(),
    )


def cmd_oracle(args):
    if not is_prime(args.p):
        raise RefusalError(f"{args.p} is not prime")
    count = enumerate_lie_rings(args.n, args.p)
    return _document(
        "oracle",
        {"n": args.n, "p": args.p},
        [{"n": args.n, "p": args.p, "count": str(count)}],
        _diag(engine="oracle"),
    )


def cmd_selftest(args):
    from .acceptance import run_criteria

    results, all_ok = run_criteria(args.criteria, quick=args.quick, echo=True)
    doc = _document(
        "selftest",
        {"criteria": args.criteria, "quick": args.quick},
        [
            {"criterion": num, "name": name, "status": "PASS" if ok else "FAIL", "detail": detail}
            for num, name, ok, detail in results
        ],
        _diag(),
    )
    doc["diagnostics"]["all_pass"] = all_ok
    return doc


def _diag(**extra):
    out = {"version": __version__, "wall_time_s": round(time.time() - _T0, 3)}
    out.update(extra)
    return out


_T0 = time.time()

_DISPATCH = {
    "census": cmd_census,
    "porc-fit": cmd_porc_fit,
    "hall": cmd_hall,
    "autcount": cmd_autcount,
    "typeof": cmd_typeof,
    "oracle": cmd_oracle,
    "selftest": cmd_selftest,
}


def main(argv=None):
    global _T0
    _T0 = time.time()
    ap = build_parser()
    args = ap.parse_args(argv)
    _apply_caps(args)
    try:
        doc = _DISPATCH[args.command](args)
    except RefusalError as exc:
        err = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command,
            "error": "refusal",
            "message": str(exc),
            "estimate": exc.estimate,
            "cap": exc.cap,
        }
        sys.stderr.write(render_json(err))
        return EXIT_REFUSAL
    except InternalInconsistencyError as exc:
        sys.stderr.write(f"internal inconsistency: {exc}\n")
        return EXIT_INTERNAL
    emit(doc, args)
    if args.command == "selftest" and not doc["diagnostics"]["all_pass"]:
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
