"""Command-line entry point; every subcommand writes JSON lines to stdout.

Exit status: 0 on success, 1 when a check fails (a certificate that should
hold does not, or an internal consistency assertion trips), 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction
from typing import Iterator

from . import __version__
from .certify import appendix_bound, feasible_parameters, run_certificate_suite
from .cluster import (
    ClusterGraph,
    best_color_pair,
    c_of_h,
    classify_blue_green,
    edge_size_histogram,
    is_two_free,
    peel_blue,
    peel_upper_bound,
    two_free_witness,
)
from .counting import build_construction, count_pattern_free, exhaustive_extremal, verify_construction_identity
from .errors import (
    BudgetExceeded,
    InvariantViolation,
    K3ColoringsError,
    PrecisionExhausted,
)
from .graph import emit_graph6, parse_graph6
from .optimize import (
    build_appendix_lp,
    build_s1_lp,
    c_k,
    c_k_star,
    cbar_k,
    ctilde_k,
    int_product_max,
    solve_lp,
    table1_value,
    verify_optimality,
)
from .patterns import is_pattern_free, triangle_pattern
from .stability import AugmentedGraph, ay_find_triangle, furedi_partition

SUBCOMMANDS = ("count", "search", "construct", "cluster", "peel", "lp", "table1", "opt", "certify", "stability", "params")


class CheckFailed(Exception):
    """A result that should hold did not; maps to exit status 1."""


def _q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _read_cluster(path: str) -> ClusterGraph:
    if path == "-":
        return ClusterGraph.from_json(sys.stdin.read())
    with open(path) as fh:
        return ClusterGraph.from_json(fh.read())


# subcommands; each yields result dicts


def cmd_count(a) -> Iterator[dict]:
    g = parse_graph6(a.graph6)
    res = count_pattern_free(g, a.r, triangle_pattern(a.pattern), node_budget=a.node_budget,
                             threads=a.threads, symmetry=a.symmetry)
    yield res.to_dict()


def cmd_search(a) -> Iterator[dict]:
    yield exhaustive_extremal(a.n, a.r, triangle_pattern(a.pattern), node_budget=a.node_budget).to_dict()


def cmd_construct(a) -> Iterator[dict]:
    fam = build_construction(a.n)
    rng = random.Random(a.seed) if a.seed is not None else None
    sample = fam.sample(rng)
    ok = is_pattern_free(sample, triangle_pattern("two"))
    identity = verify_construction_identity(a.n)
    if not (ok and identity):
        raise CheckFailed("construction sample has a two-colored triangle or the size identity fails")
    yield {
        "graph6": emit_graph6(fam.host),
        "edges": fam.host.m,
        "family_size": str(fam.size),
        "turan_power": str(27 ** (a.n * a.n // 4)),
        "identity": identity,
        "sample_colors": list(sample.colors),
        "sample_two_free": ok,
    }


def cmd_cluster(a) -> Iterator[dict]:
    h = _read_cluster(a.input)
    out = {
        "histogram": {str(j): e for j, e in edge_size_histogram(h).items()},
        "c": c_of_h(h).to_dict(),
        "two_free": is_two_free(h),
        "witness": list(two_free_witness(h) or []) or None,
    }
    if 13 <= h.r <= 26 and all(len(L) >= 2 for L in h.lists):
        blue, green = classify_blue_green(h)
        out["blue"] = sorted(list(e) for e in blue)
        out["green"] = sorted(list(e) for e in green)
    if h.r <= 12 and all(len(L) >= 2 for L in h.lists):
        out["color_pair"] = best_color_pair(h).to_dict()
    yield out


def cmd_peel(a) -> Iterator[dict]:
    h = _read_cluster(a.input)
    trace = peel_blue(h)
    out = trace.to_dict()
    out["bound"] = peel_upper_bound(trace, h.r, a.alpha).to_dict()
    yield out


def cmd_lp(a) -> Iterator[dict]:
    prob = build_appendix_lp(a.r) if a.r <= 12 else build_s1_lp(a.r)
    sol = solve_lp(prob)
    verified = verify_optimality(prob, sol)
    if not verified:
        raise CheckFailed("LP optimality certificate did not verify")
    out = {"r": a.r, "lp": "appendix" if a.r <= 12 else "s1"}
    out.update(sol.to_json())
    out["optimum_interval"] = sol.optimum.interval().to_dict()
    out["verified"] = verified
    yield out


def cmd_table1(a) -> Iterator[dict]:
    for r in range(6, 13):
        y = table1_value(r)
        v = y.value()
        yield {"r": r, "Y": str(y), "factors": y.to_json(), "approx": f"{v.mid():.4f}", "interval": v.to_dict()}


def cmd_opt(a) -> Iterator[dict]:
    if a.p is not None or a.L is not None:
        if a.p is None or a.L is None:
            raise argparse.ArgumentTypeError("--p and --L go together")
        value, witness = int_product_max(a.p, a.L)
        yield {"p": a.p, "L": a.L, "max": str(value), "witness": list(witness)}
        return
    if a.k is None or a.r is None:
        raise argparse.ArgumentTypeError("opt needs --k and --r, or --p and --L")
    cb = cbar_k(a.k, a.r)
    yield {
        "k": a.k, "r": a.r,
        "c_star": str(c_k_star(a.k, a.r)),
        "c": str(c_k(a.k, a.r)),
        "cbar": _q(cb.value), "cbar_argmax": cb.argmax,
        "ctilde": _q(ctilde_k(a.k, a.r)),
    }


def cmd_certify(a) -> Iterator[dict]:
    failed = []
    for cert in run_certificate_suite(a.alpha):
        if not cert.ok:
            failed.append(cert.name)
        yield cert.to_dict()
    if failed:
        raise CheckFailed(f"certificates failed: {failed}")


def cmd_stability(a) -> Iterator[dict]:
    base = parse_graph6(a.graph6)
    if a.new_graph6 is None:
        part, internal = furedi_partition(base)
        yield {"parts": [sorted(p) for p in part.parts], "internal": internal, "t": _t(base)}
        return
    new = parse_graph6(a.new_graph6)
    if new.n != base.n:
        raise argparse.ArgumentTypeError("base and new-edge graphs need the same vertex count")
    w = ay_find_triangle(AugmentedGraph(base, new.edges))
    yield w.to_dict()


def _t(g) -> int:
    from .graph import ex_k3

    return ex_k3(g.n) - g.m if g.n else 0


def cmd_params(a) -> Iterator[dict]:
    if a.delta is None and a.xi is None:
        raise argparse.ArgumentTypeError("params needs --delta (parameter search) or --xi/--m (appendix bound)")
    if a.delta is not None:
        p = feasible_parameters(a.delta, a.r)
        if not p.ok:
            raise CheckFailed("parameter conditions did not certify")
        yield p.to_dict()
    if a.xi is not None:
        if a.m is None:
            raise argparse.ArgumentTypeError("--xi needs --m")
        yield appendix_bound(a.r, a.xi, a.m).to_dict()


HANDLERS = {name: globals()[f"cmd_{name}"] for name in SUBCOMMANDS}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent JSON output")
    common.add_argument("--no-timing", action="store_true", help="omit the ms field")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized steps")
    common.add_argument("--threads", type=int, default=1, help="worker threads for counting")

    p = argparse.ArgumentParser(prog="k3colorings", description="Edge colorings without two-colored triangles.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="cmd", required=True, metavar="{" + ",".join(SUBCOMMANDS) + "}")

    def add(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    pattern = dict(choices=["mono", "rainbow", "two"], default="two")
    budget = dict(type=int, default=10**10, dest="node_budget")

    s = add("count", "count pattern-free r-colorings of a graph")
    s.add_argument("--graph6", required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--pattern", **pattern)
    s.add_argument("--node-budget", **budget)
    s.add_argument("--symmetry", action="store_true", help="count up to color renaming")

    s = add("search", "exhaustive extremal search over n-vertex graphs")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--pattern", **pattern)
    s.add_argument("--node-budget", **budget)

    s = add("construct", "the 27-color family on T_4(n)")
    s.add_argument("--n", type=int, required=True)

    s = add("cluster", "analyze a cluster graph (JSON file or - for stdin)")
    s.add_argument("--input", required=True)

    s = add("peel", "peel blue edges and bound c(H)^(m^2)")
    s.add_argument("--input", required=True)
    s.add_argument("--alpha", type=_rational, default=Fraction(1, 1000))

    s = add("lp", "solve the linear program for r (6..12 or 13..26)")
    s.add_argument("--r", type=int, required=True)

    add("table1", "Y(r) for r = 6..12")

    s = add("opt", "integer product maxima and their closed-form bounds")
    s.add_argument("--k", type=int)
    s.add_argument("--r", type=int)
    s.add_argument("--p", type=int)
    s.add_argument("--L", type=int)

    s = add("certify", "run the inequality certificate suite")
    s.add_argument("--alpha", type=_rational, default=Fraction(1, 1000))

    s = add("stability", "bipartition check, or witness triangle with --new-graph6")
    s.add_argument("--graph6", required=True)
    s.add_argument("--new-graph6")

    s = add("params", "parameter search (--delta) and appendix bound (--xi, --m)")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--delta", type=_rational)
    s.add_argument("--xi", type=_rational)
    s.add_argument("--m", type=int)
    s.add_argument("--alpha", type=_rational, default=Fraction(1, 1000))
    return p


def _echo(a) -> dict:
    skip = {"cmd", "pretty", "no_timing"}
    out = {}
    for k, v in sorted(vars(a).items()):
        if k in skip or v is None or v is False:
            continue
        out[k] = _q(v) if isinstance(v, Fraction) else v
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    indent = 2 if a.pretty else None
    t0 = time.perf_counter()
    status = 0
    try:
        for result in HANDLERS[a.cmd](a):
            line = {"cmd": a.cmd, "input": _echo(a)}
            line.update(result)
            if a.no_timing:
                line.pop("ms", None)
            elif "ms" not in line:
                line["ms"] = int((time.perf_counter() - t0) * 1000)
            print(json.dumps(line, indent=indent), flush=True)
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head); stay quiet
        import os

        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return status
    except CheckFailed as e:
        print(json.dumps({"cmd": a.cmd, "error": "CheckFailed", "message": str(e)}), file=sys.stderr)
        status = 1
    except (InvariantViolation, AssertionError, BudgetExceeded, PrecisionExhausted) as e:
        print(json.dumps({"cmd": a.cmd, "error": type(e).__name__, "message": str(e)}), file=sys.stderr)
        status = 1
    except (K3ColoringsError, ValueError, KeyError, OSError, argparse.ArgumentTypeError) as e:
        print(json.dumps({"cmd": a.cmd, "error": type(e).__name__, "message": str(e)}), file=sys.stderr)
        parser.print_usage(sys.stderr)
        status = 2
    return status


if __name__ == "__main__":
    sys.exit(main())
