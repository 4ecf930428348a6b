"""
Command-line front end.

    kl element  --n N WORD
    kl klpoly   --n N Y W [--gamma0] [--oracle]
    kl mu       --n N Y W [--gamma0]
    kl hconst   --n N X Y Z
    kl cell     --n N Z
    kl tensor   --n N X Y [Z]
    kl verify   SCENARIO --n N [--direct] [--no-timing]
    kl cache    stats|load|save PATH --n N [--scenario S]

Elements are words ("1 4 0 w0", "x1 x4", "t[2,2,2,2] w0") or windows
("[5,4,3,2,1]"); weights are "[a1,...,an]".  --cache PATH (default
$KL_CACHE) loads a KL table before the command and saves it afterwards.

Exit codes: 0 success / all claims pass, 1 some claim fails,
2 parse or usage error, 3 resource limit.
"""

import argparse
import json
import os
import sys

from . import harness
from .cells import c0_factorize
from .hecke import h_const
from .kl import (
    CacheFormatError,
    ResourceLimitError,
    Session,
    kl_poly,
    kl_poly_gamma0,
    mu,
    r_oracle_kl,
    read_table_file,
)
from .tensor import DominantWeight, tensor_decompose, tensor_mult
from .weyl import WordError, is_gamma0, parse_element, reduced_word

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_LIMIT = 0, 1, 2, 3
BYTES_PER_ENTRY = 512


class UsageError(ValueError):
    pass


def _emit(args, data, text):
    print(json.dumps(data, indent=2) if args.json else text)


def _weight(text, n):
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise UsageError(f"weight must look like [a1,...,an], got {text!r}")
    try:
        coords = [int(a) for a in text[1:-1].split(",")]
    except ValueError:
        raise UsageError(f"bad weight {text!r}") from None
    if len(coords) != n:
        raise UsageError(f"weight needs {n} coordinates")
    return DominantWeight(coords)


def _describe(w):
    k, word = reduced_word(w)
    return {
        "window": list(w.window),
        "k": w.k,
        "length": w.length(),
        "left_descents": sorted(w.descents("left")),
        "right_descents": sorted(w.descents("right")),
        "reduced_word": {"omega": k, "word": word},
    }


def cmd_element(args, session):
    w = parse_element(args.word, args.n)
    d = _describe(w)
    text = "\n".join([
        f"window  {w!r}",
        f"k       {d['k']}",
        f"length  {d['length']}",
        f"L(w)    {d['left_descents']}",
        f"R(w)    {d['right_descents']}",
    ])
    _emit(args, d, text)
    return EXIT_OK


def cmd_klpoly(args, session):
    y = parse_element(args.y, args.n)
    w = parse_element(args.w, args.n)
    if args.gamma0:
        if not (is_gamma0(y.window) and is_gamma0(w.window)):
            raise UsageError("--gamma0 needs both elements in Gamma_0")
        p = kl_poly_gamma0(y, w, session)
    else:
        p = kl_poly(y, w, session)
    m = mu(y, w, session, gamma0=args.gamma0)
    data = {"p": str(p), "coeffs": list(p.coeffs), "mu": m}
    code = EXIT_OK
    if args.oracle:
        q = r_oracle_kl(y, w)
        data["oracle"] = str(q)
        data["oracle_agrees"] = q == p
        if q != p:
            code = EXIT_FAIL
    text = f"P = {p}\nmu = {m}"
    if args.oracle:
        text += f"\noracle {data['oracle']} ({'agrees' if data['oracle_agrees'] else 'DISAGREES'})"
    _emit(args, data, text)
    return code


def cmd_mu(args, session):
    y = parse_element(args.y, args.n)
    w = parse_element(args.w, args.n)
    if args.gamma0 and not (is_gamma0(y.window) and is_gamma0(w.window)):
        raise UsageError("--gamma0 needs both elements in Gamma_0")
    m = mu(y, w, session, gamma0=args.gamma0)
    _emit(args, {"mu": m}, str(m))
    return EXIT_OK


def cmd_hconst(args, session):
    x, y, z = (parse_element(t, args.n) for t in (args.x, args.y, args.z))
    h = h_const(x, y, z, session)
    _emit(args, {"h": h.to_json(), "text": str(h)}, str(h))
    return EXIT_OK


def cmd_cell(args, session):
    z = parse_element(args.z, args.n)
    q = c0_factorize(z)
    if q.in_c0:
        data = {"in_c0": True, "gamma0": is_gamma0(z.window),
                "factorization": q.factorization.to_json()}
        f = q.factorization
        text = (f"in c0: d_u t_x w0 d_w^-1 with u={f.u!r} x={f.x!r} w={f.w!r}"
                + ("  (in Gamma_0)" if data["gamma0"] else ""))
    else:
        data = {"in_c0": False, "gamma0": False, "factorization": None}
        text = "not in c0"
    _emit(args, data, text)
    return EXIT_OK


def cmd_tensor(args, session):
    x = _weight(args.x, args.n)
    y = _weight(args.y, args.n)
    if args.z:
        m = tensor_mult(x, y, _weight(args.z, args.n))
        _emit(args, {"m": m}, str(m))
    else:
        d = tensor_decompose(x, y)
        rows = sorted(d.items(), key=lambda t: t[0].coords, reverse=True)
        _emit(args, {repr(z): m for z, m in rows},
              "\n".join(f"{z!r}: {m}" for z, m in rows))
    return EXIT_OK


def cmd_verify(args, session):
    report = harness.run(args.scenario, args.n, session, direct=args.direct,
                         timing=not args.no_timing)
    data = report.to_json()
    print(harness.render_json(data) if args.json else harness.render_table(data))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_cache(args, session):
    path = args.path
    if args.action == "stats":
        with open(path) as fh:
            head = json.loads(fh.readline())
        count = sum(1 for _ in read_table_file(path, head.get("n")))
        data = {"path": path, "n": head.get("n"), "version": head.get("version"),
                "entry_count": count}
        _emit(args, data, f"{path}: rank {data['n']}, {count} entries")
    elif args.action == "load":
        count = session.load_cache(path)
        data = {"path": path, "loaded": count, **session.stats()}
        _emit(args, data, f"loaded {count} entries for rank {args.n}")
    else:
        if args.scenario:
            harness.run(args.scenario, args.n, session, timing=False)
        count = session.save_cache(path)
        _emit(args, {"path": path, "entry_count": count}, f"saved {count} entries to {path}")
    return EXIT_OK


COMMANDS = {
    "element": cmd_element, "klpoly": cmd_klpoly, "mu": cmd_mu,
    "hconst": cmd_hconst, "cell": cmd_cell, "tensor": cmd_tensor,
    "verify": cmd_verify, "cache": cmd_cache,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="rank of A_n (not needed for cache stats)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--cache", default=os.environ.get("KL_CACHE"),
                        help="KL table file loaded before and saved after the command")
    common.add_argument("--max-mem", type=int, default=8 << 30,
                        help="memo budget in bytes (default 8 GiB)")
    common.add_argument("--max-time", type=float, default=1800.0,
                        help="wall-clock budget in seconds (default 1800)")

    p = argparse.ArgumentParser(prog="kl", description=__doc__.split("\n\n")[0].strip())
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("element", parents=[common], help="window, length, descents")
    s.add_argument("word")

    for name in ("klpoly", "mu"):
        s = sub.add_parser(name, parents=[common],
                           help="KL polynomial and mu" if name == "klpoly" else "mu(y, w)")
        s.add_argument("y")
        s.add_argument("w")
        s.add_argument("--gamma0", action="store_true", help="Gamma_0-restricted recursion")
        if name == "klpoly":
            s.add_argument("--oracle", action="store_true",
                           help="cross-check with the R-polynomial oracle")

    s = sub.add_parser("hconst", parents=[common], help="structure constant h_{x,y,z}")
    s.add_argument("x")
    s.add_argument("y")
    s.add_argument("z")

    s = sub.add_parser("cell", parents=[common], help="lowest-cell factorization")
    s.add_argument("z")

    s = sub.add_parser("tensor", parents=[common], help="tensor multiplicities")
    s.add_argument("x")
    s.add_argument("y")
    s.add_argument("z", nargs="?")

    s = sub.add_parser("verify", parents=[common], help="run a verification scenario")
    s.add_argument("scenario", choices=harness.SCENARIOS)
    s.add_argument("--direct", action="store_true",
                   help="thm33: also compute P(x w0, v x w0) directly")
    s.add_argument("--no-timing", action="store_true",
                   help="omit elapsed time so reports are byte-identical")

    s = sub.add_parser("cache", parents=[common], help="KL table persistence")
    s.add_argument("action", choices=("stats", "load", "save"))
    s.add_argument("path")
    s.add_argument("--scenario", choices=harness.SCENARIOS,
                   help="save: run this scenario first to fill the table")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "cache" and args.action == "stats":
            return cmd_cache(args, None)
        if args.n is None:
            raise UsageError("--n is required")
        if args.n < 1:
            raise UsageError("--n must be at least 1")
        session = Session(args.n, max_nodes=args.max_mem // BYTES_PER_ENTRY,
                          max_seconds=args.max_time)
        cache = args.cache if args.command != "cache" else None
        if cache and os.path.exists(cache):
            session.load_cache(cache)
            session.reset_counters()
        code = COMMANDS[args.command](args, session)
        if cache:
            session.save_cache(cache)
        return code
    except ResourceLimitError as exc:
        print(f"kl: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (WordError, UsageError, CacheFormatError, harness.ScenarioError) as exc:
        print(f"kl: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (OSError, ValueError) as exc:
        print(f"kl: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
