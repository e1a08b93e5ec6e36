"""Command-line front end.

    kacdem datum A2~2
    kacdem weyl length --type A1~1 "rho[ca[1]]*w()"
    kacdem alcove interior --type A2~2 --facet o,1 --prime 3
    kacdem demazure --type A1~1 --weight Lam[o] --mu ca[1]
    kacdem sum --type A1~1 --weight Lam[o]+Lam[1] --mu cw[1] --mu -cw[1]
    kacdem verify --type A2~2 --weight Lam[o] --mu cw[2]
    kacdem verify --sweep --max-level 3 --max-height 3
    kacdem admissible --type A1~1 --mu cw[1] --facet o,1

Every command emits a result envelope (json by default).  Exit codes: 0 ok,
1 verification mismatch, 2 usage or parse error, 3 internal error.
"""

import argparse
from concurrent.futures import ProcessPoolExecutor
import csv
import hashlib
import io
import json
import os
import sys
import time

from ._rational import fmt_rational
from .alcove import BadPrime, EmptyY, LevelMismatch, a_Y, facet, interior_point, sigma_levi
from .cartan import InvalidType, MixedDatum, build_datum, coweight_lattice, format_weight
from .crystal import MixedHighestWeight, NotDominant, NotMinimalRep, crystal_union
from .demazure import (CharacterPoly, NegativeResult, demazure_element, dominant_coweights,
                       dominant_weights, extremal_weight, module_char, module_crystal, verify_identity)
from .parsing import (ParseError, format_facet, format_g_coweight, parse_element, parse_facet,
                      parse_g_coweight, parse_weight)
from .weyl import InfiniteParabolic, format_element, weyl_group

SCHEMA_VERSION = 1
SWEEP_TYPES = ("A1~1", "A2~1", "A2~2")

USER_ERRORS = (ParseError, InvalidType, MixedDatum, NotDominant, NotMinimalRep, MixedHighestWeight,
               LevelMismatch, EmptyY, BadPrime, InfiniteParabolic)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rat(x):
    return fmt_rational(x)


def _node(i):
    return "o" if i == 0 else str(i)


def _word(word):
    return [_node(i) for i in word]


# ---------------------------------------------------------------------------
# commands: each parses and normalizes its inputs, then returns
# (inputs, compute) where compute() gives the outputs dict


def cmd_datum(args):
    d = build_datum(args.type)
    inputs = {"type": str(d.label), "lattice": args.lattice}

    def compute():
        lat = coweight_lattice(d, args.lattice)
        return {
            "nodes": [_node(i) for i in range(d.rank + 1)],
            "cartan": [list(r) for r in d.cartan],
            "a": list(d.kac_labels),
            "a_check": list(d.dual_kac_labels),
            "symmetrizers": [_rat(x) for x in d.symmetrizers],
            "theta0": list(d.theta0),
            "theta0_check": [_rat(x) for x in d.theta0_check],
            "mu0": list(lat.from_A(d.theta0_check)),
            "lattice_basis": list(lat.basis_labels),
            "omega_order": lat.omega_order(),
        }
    return inputs, compute


def cmd_weyl(args):
    d = build_datum(args.type)
    group = weyl_group(d, args.lattice)
    elems = [parse_element(group, e) for e in args.elements]
    need = {"act": 1, "length": 1, "reduced": 1, "bruhat": 2}[args.action]
    if len(elems) != need:
        raise UsageError(f"weyl {args.action} takes {need} element(s)")
    inputs = {"type": str(d.label), "lattice": args.lattice, "action": args.action,
              "elements": [format_element(x) for x in elems]}
    lam = None
    if args.action == "act":
        if args.weight is None:
            raise UsageError("weyl act needs --weight")
        lam = parse_weight(d, args.weight)
        inputs["weight"] = format_weight(lam)
    x = elems[0]

    def compute():
        if args.action == "act":
            return {"result": format_weight(group.act(x, lam))}
        if args.action == "length":
            return {"length": group.length(x)}
        if args.action == "reduced":
            word, sigma = group.reduced_word(x)
            return {"word": _word(word), "omega": format_element(sigma), "length": len(word)}
        return {"leq": group.bruhat_leq(elems[0], elems[1])}
    return inputs, compute


def cmd_alcove(args):
    d = build_datum(args.type)
    if args.facet is None:
        raise UsageError("alcove needs --facet")
    Y = parse_facet(d, args.facet)
    inputs = {"type": str(d.label), "facet": format_facet(Y), "action": args.action, "prime": args.prime}

    def compute():
        if args.action == "facet":
            f = facet(d, Y)
            return {"a_Y": f.a_Y, "vertices": [[_rat(x) for x in v] for v in f.vertices]}
        ipd = interior_point(d, Y, args.prime)
        out = {"theta": [_rat(x) for x in ipd.theta], "m": ipd.m, "h": list(ipd.h),
               "s": list(ipd.s), "s_o": ipd.s_o, "a_Y": a_Y(d, Y)}
        if args.action == "levi":
            sl = sigma_levi(d, Y, ipd)
            out = {
                "Pi_sigma": [list(r) for r in sl.Pi_sigma],
                "roots_MY": sorted(list(r) for r in sl.roots_MY),
                "roots_Gtheta": sorted(list(r) for r in sl.roots_Gtheta),
                "theta": out["theta"],
            }
        return out
    return inputs, compute


def _weight_and_mu(args, d, group):
    if args.weight is None or not args.mu:
        raise UsageError(f"{args.command} needs --weight and --mu")
    lam = parse_weight(d, args.weight)
    mus_g = [parse_g_coweight(d, m) for m in args.mu]
    mus = []
    for m in mus_g:
        try:
            mus.append(group.lattice.from_g_omega(m))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    return lam, mus_g, mus


def cmd_demazure(args):
    d = build_datum(args.type)
    group = weyl_group(d, args.lattice)
    lam, mus_g, mus = _weight_and_mu(args, d, group)
    if len(mus) != 1:
        raise UsageError("demazure takes one --mu (use sum for several)")
    inputs = {"type": str(d.label), "lattice": args.lattice, "weight": format_weight(lam),
              "mu": format_g_coweight(mus_g[0]), "method": args.method}

    def compute():
        chi = module_char(group, lam, mus[0], args.method)
        return {
            "dim": chi.dim,
            "layers": chi.layers(),
            "character": chi.lines(),
            "element": format_element(demazure_element(group, lam, mus[0])),
            "extremal_weight": format_weight(extremal_weight(group, lam, mus[0])),
        }
    return inputs, compute


def cmd_sum(args):
    d = build_datum(args.type)
    group = weyl_group(d, args.lattice)
    lam, mus_g, mus = _weight_and_mu(args, d, group)
    inputs = {"type": str(d.label), "lattice": args.lattice, "weight": format_weight(lam),
              "mu": [format_g_coweight(m) for m in mus_g]}

    def compute():
        crystals = [module_crystal(group, lam, mu) for mu in mus]
        chi = CharacterPoly.from_paths(d.label, crystal_union(crystals))
        out = {
            "dim": chi.dim,
            "layers": chi.layers(),
            "character": chi.lines(),
            "component_dims": [len(c) for c in crystals],
        }
        if len(crystals) == 2:
            out["intersection_dim"] = len(crystals[0].paths & crystals[1].paths)
        return out
    return inputs, compute


def _verify_one(job):
    label, lam_text, mu_g, kind = job
    d = build_datum(label)
    return verify_identity(label, parse_weight(d, lam_text), mu_g, kind)


def _report_outputs(rep, full=True):
    out = rep.summary()
    out["mu"] = format_g_coweight(rep.mu)
    if full:
        out["lhs_character"] = rep.lhs_char.lines()
        out["rhs_character"] = rep.rhs_char.lines()
    return out


def sweep_jobs(types, max_level, max_height, kind="adjoint"):
    jobs = []
    for label in types:
        d = build_datum(label)
        for c in range(1, max_level + 1):
            for lam in dominant_weights(d, c):
                for mu in dominant_coweights(d.g_rank, max_height):
                    jobs.append((str(d.label), format_weight(lam), mu, kind))
    return jobs


def run_sweep(jobs, workers=1):
    """Verification reports in job order; parallel when workers > 1."""
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(_verify_one, jobs, chunksize=4))
    return [_verify_one(j) for j in jobs]


def cmd_verify(args):
    if args.sweep:
        types = [str(build_datum(t).label) for t in args.type.split(",")] if args.type else list(SWEEP_TYPES)
        inputs = {"types": types, "lattice": args.lattice, "max_level": args.max_level,
                  "max_height": args.max_height, "sweep": True}

        def compute():
            jobs = sweep_jobs(types, args.max_level, args.max_height, args.lattice)
            reports = run_sweep(jobs, args.jobs or os.cpu_count() or 1)
            results = [_report_outputs(r, full=False) for r in reports]
            bad = [r for r in results if not (r["match"] and r["full_orbit_match"])]
            return {"cases": len(results), "mismatches": len(bad),
                    "literal_twist_matches": sum(r["literal_twist_match"] for r in results),
                    "results": results}
        return inputs, compute
    if args.type is None:
        raise UsageError("verify needs --type (or --sweep)")
    d = build_datum(args.type)
    if args.weight is None or not args.mu or len(args.mu) != 1:
        raise UsageError("verify needs --weight and one --mu")
    lam = parse_weight(d, args.weight)
    mu_g = parse_g_coweight(d, args.mu[0])
    inputs = {"type": str(d.label), "lattice": args.lattice, "weight": format_weight(lam),
              "mu": format_g_coweight(mu_g)}

    def compute():
        return _report_outputs(verify_identity(d.label, lam, mu_g, args.lattice))
    return inputs, compute


def cmd_admissible(args):
    d = build_datum(args.type)
    group = weyl_group(d, args.lattice)
    if not args.mu or len(args.mu) != 1 or args.facet is None:
        raise UsageError("admissible needs one --mu and --facet")
    mu_g = parse_g_coweight(d, args.mu[0])
    try:
        mu = group.lattice.from_g_omega(mu_g)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    Y = parse_facet(d, args.facet)
    inputs = {"type": str(d.label), "lattice": args.lattice, "mu": format_g_coweight(mu_g),
              "facet": format_facet(Y)}

    def compute():
        adm = group.admissible_set(mu, Y)
        S = group.orbit_dominant_reps(mu, Y)
        return {
            "count": len(adm),
            "elements": [_admissible_entry(group, x) for x in adm],
            "S": [list(s) for s in S],
            "maxima": [format_element(group.translation(eta)) for eta in S],
        }
    return inputs, compute


def _admissible_entry(group, x):
    word, sigma = group.reduced_word(x)
    return {"element": format_element(x), "word": _word(word), "omega": format_element(sigma),
            "length": group.length(x)}


def exit_code(command, outputs):
    if command == "verify":
        if "mismatches" in outputs:
            return 1 if outputs["mismatches"] else 0
        return 0 if outputs["match"] else 1
    return 0


COMMANDS = {
    "datum": cmd_datum,
    "weyl": cmd_weyl,
    "alcove": cmd_alcove,
    "demazure": cmd_demazure,
    "sum": cmd_sum,
    "verify": cmd_verify,
    "admissible": cmd_admissible,
}


# ---------------------------------------------------------------------------
# argument parsing


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--type", help="affine type label, e.g. A2~2")
    common.add_argument("--lattice", choices=("adjoint", "simply_connected"), default="adjoint")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--out", help="write the result here instead of stdout")
    common.add_argument("--cache-dir", help="result cache directory (default $KACDEM_CACHE)")

    p = _Parser(prog="kacdem", description="Affine Demazure modules and the twisted coherence identity.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("datum", parents=[common], help="affine Cartan data")
    s.add_argument("label", nargs="?", help="type label (same as --type)")

    s = sub.add_parser("weyl", parents=[common], help="extended affine Weyl group")
    s.add_argument("action", choices=("act", "length", "reduced", "bruhat"))
    s.add_argument("elements", nargs="+", help="elements written rho[<coweight>]*w(<word>)")
    s.add_argument("--weight")

    s = sub.add_parser("alcove", parents=[common], help="facets and interior points")
    s.add_argument("action", choices=("facet", "interior", "levi"))
    s.add_argument("--facet")
    s.add_argument("--prime", type=int, default=0)

    for name, text in (("demazure", "one Demazure module"), ("sum", "sum of Demazure modules")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("--weight")
        s.add_argument("--mu", action="append")
        if name == "demazure":
            s.add_argument("--method", choices=("paths", "ops"), default="paths")

    s = sub.add_parser("verify", parents=[common], help="check the character identity")
    s.add_argument("--weight")
    s.add_argument("--mu", action="append")
    s.add_argument("--sweep", action="store_true")
    s.add_argument("--max-level", type=int, default=3)
    s.add_argument("--max-height", type=int, default=3)
    s.add_argument("--jobs", type=int, default=0, help="worker processes for --sweep (default: cpu count)")

    s = sub.add_parser("admissible", parents=[common], help="admissible set and its maxima")
    s.add_argument("--mu", action="append")
    s.add_argument("--facet")
    return p


_VALUE_FLAGS = ("--weight", "--mu", "--type", "--facet")


def _glue_negative_values(argv):
    """Let '--mu -ca[1]' through: argparse would read '-ca[1]' as an option."""
    out = []
    k = 0
    while k < len(argv):
        a = argv[k]
        if a in _VALUE_FLAGS and k + 1 < len(argv) and argv[k + 1].startswith("-") and argv[k + 1] != "--":
            out.append(f"{a}={argv[k + 1]}")
            k += 2
            continue
        out.append(a)
        k += 1
    return out


# ---------------------------------------------------------------------------
# envelopes, cache, emitters


def _cache_path(cache_dir, command, inputs):
    key = json.dumps([SCHEMA_VERSION, command, inputs], sort_keys=True)
    return os.path.join(cache_dir, hashlib.sha256(key.encode()).hexdigest() + ".json")


def _flatten(prefix, value, rows):
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else k, value[k], rows)
    else:
        rows.append((prefix, value if isinstance(value, (str, int, float, bool)) else json.dumps(value)))


def render(envelope, fmt):
    if fmt == "json":
        return json.dumps(envelope, sort_keys=True, indent=2) + "\n"
    rows = []
    _flatten("", {k: v for k, v in envelope.items()}, rows)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        w.writerows(rows)
        return buf.getvalue()
    return "".join(f"{k}: {v}\n" for k, v in rows)


def run(argv):
    """Parse argv and execute; returns (envelope, exit_code, args)."""
    args = build_parser().parse_args(_glue_negative_values(list(argv)))
    if args.command == "datum":
        args.type = args.label or args.type
    if args.type is None and not (args.command == "verify" and args.sweep):
        raise UsageError(f"{args.command} needs a type")
    cache_dir = args.cache_dir or os.environ.get("KACDEM_CACHE")
    start = time.perf_counter()
    inputs, compute = COMMANDS[args.command](args)
    env = None
    path = _cache_path(cache_dir, args.command, inputs) if cache_dir else None
    if path and os.path.exists(path):
        with open(path) as fh:
            cached = json.load(fh)
        if cached.get("schema_version") == SCHEMA_VERSION and cached.get("inputs") == inputs:
            env = {k: v for k, v in cached.items() if k != "timing_ms"}
    if env is None:
        env = {"schema_version": SCHEMA_VERSION, "command": args.command, "inputs": inputs,
               "outputs": compute()}
        if path:
            os.makedirs(cache_dir, exist_ok=True)
            tmp = path + f".{os.getpid()}.tmp"
            with open(tmp, "w") as fh:
                json.dump(env, fh, sort_keys=True)
            os.replace(tmp, path)
    code = exit_code(args.command, env["outputs"])
    env["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return env, code, args


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        env, code, args = run(argv)
    except UsageError as exc:
        print(f"kacdem: usage error: {exc}", file=sys.stderr)
        return 2
    except USER_ERRORS as exc:
        print(f"kacdem: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (NegativeResult, AssertionError, RuntimeError) as exc:
        print(f"kacdem: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    text = render(env, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
