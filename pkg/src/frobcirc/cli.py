"""Command-line interface: construction, conversion, metrics, schedules,
simulation, covers, export, and batch verification.

All verbs print JSON on stdout (``--human`` switches to aligned text); exit
code 1 signals a bad request, 2 an internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict

from . import export
from .circulant import FrobeniusCirculant, bfs_distances, canonical_generator, new_frobenius
from .covers import check_cover, ej_cover_expand, quotient_circulant
from .eisenstein import (
    EJGraph,
    EJInt,
    circulant_to_ej,
    distance_distribution,
    ej_to_circulant,
    find_witness,
    iso_map,
)
from .numtheory import classify, constructible_orders
from .scheduler import (
    RoutingTable,
    broadcast_schedule,
    broadcast_time,
    build_diagram,
    build_spanning_tree,
    compute_metrics,
    forwarding_index,
    gossip_schedule,
    type_vector,
)
from .simulator import greedy_gossip_baseline, run_broadcast, run_gossip, run_gossip_relative


def _emit(data, human: bool) -> None:
    if human:
        _emit_human(data)
    else:
        json.dump(data, sys.stdout, indent=2)
        sys.stdout.write("\n")


def _emit_human(data, indent: int = 0) -> None:
    pad = "  " * indent
    if isinstance(data, dict):
        for k, v in data.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                print(f"{pad}{k}:")
                _emit_human(v, indent + 1)
            else:
                print(f"{pad}{k}: {_flat(v)}")
    elif isinstance(data, list):
        for item in data:
            _emit_human(item, indent)
    else:
        print(f"{pad}{data}")


def _is_flat(v) -> bool:
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return False


def _flat(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(str(x) for x in v) + "]"
    return str(v)


def _graph(n: int, a: int | None) -> FrobeniusCirculant:
    cls = classify(n)
    if not cls.exists:
        raise ValueError(f"no 6-valent first-kind Frobenius circulant of order {n}")
    if a is None:
        a = cls.solutions[0]
    return new_frobenius(n, a)


def cmd_classify(args) -> dict:
    c = classify(args.n)
    return {
        "n": c.n,
        "exists": c.exists,
        "solutions": list(c.solutions),
        "graph_count": c.graph_count,
        "canonical_generators": sorted({canonical_generator(c.n, a) for a in c.solutions}),
    }


def cmd_build(args) -> dict:
    g = _graph(args.n, args.a)
    ej = circulant_to_ej(g)
    return {
        "n": g.n,
        "a": g.a,
        "connection_set": list(g.connection_set),
        "canonical_generator": canonical_generator(g.n, g.a),
        "ej": {"alpha": ej.alpha.to_json(), "canonical_cd": list(ej.canonical_cd)},
    }


def cmd_convert(args) -> dict:
    g = _graph(args.n, args.a)
    ej = circulant_to_ej(g)
    witness = find_witness(g, ej.alpha)
    mapping = iso_map(g, ej)
    sample = {u: str(ej.vertices[mapping[u]]) for u in range(min(g.n, 8))}
    return {
        "n": g.n,
        "a": g.a,
        "alpha": ej.alpha.to_json(),
        "canonical_cd": list(ej.canonical_cd),
        "witness": asdict(witness),
        "iso_map_sample": sample,
    }


def cmd_convert_ej(args) -> dict:
    alpha = EJInt(args.c, args.d)
    g = ej_to_circulant(alpha)
    return {
        "alpha": alpha.to_json(),
        "norm": alpha.norm(),
        "n": g.n,
        "a": g.a,
        "connection_set": list(g.connection_set),
        "distance_distribution": distance_distribution(alpha),
    }


def cmd_metrics(args) -> dict:
    g = _graph(args.n, args.a)
    m = compute_metrics(g, exhaustive_bound=args.exact_bound)
    d = build_diagram(g)
    sched = broadcast_schedule(g, d)
    out = m.to_json()
    out["broadcast_horizon"] = sched.horizon
    ej = circulant_to_ej(g)
    c, dd = ej.canonical_cd
    from .scheduler import forwarding_index_cd_closed_form

    closed = forwarding_index_cd_closed_form(c, dd, g.n)
    out["pi_closed_form_cd"] = (
        int(closed) if closed.denominator == 1 else str(closed)
    )
    out["pi_closed_form_matches"] = closed == m.pi
    return out


def cmd_diagram(args) -> dict:
    g = _graph(args.n, args.a)
    d = build_diagram(g)
    out = d.to_json()
    mult = g.multipliers
    out["sector_rotations"] = [
        {"residue": res, "i": i, "j": j,
         "orbit": [res * m % g.n for m in mult]}
        for res, i, j in d.cells
    ]
    return out


def cmd_schedule(args) -> dict:
    g = _graph(args.n, args.a)
    d = build_diagram(g)
    if args.kind == "gossip":
        tree = build_spanning_tree(g, d)
        sched = gossip_schedule(g, tree)
        return {"n": g.n, "a": g.a, "total_steps": sched.total_steps,
                "steps": sched.to_json()}
    sched = broadcast_schedule(g, d)
    return {"n": g.n, "a": g.a, "horizon": sched.horizon,
            "assignments": sched.to_json()}


def cmd_simulate(args) -> dict:
    g = _graph(args.n, args.a)
    d = build_diagram(g)
    if args.kind == "gossip":
        tree = build_spanning_tree(g, d)
        sched = gossip_schedule(g, tree)
        report = (
            run_gossip(g, sched) if g.n <= args.explicit_limit
            else run_gossip_relative(g, sched)
        )
        out = report.to_json()
        out["expected_steps"] = (g.n - 1) // 6
        if args.baseline:
            out["flooding_baseline_steps"] = greedy_gossip_baseline(g)
        return out
    sched = broadcast_schedule(g, d)
    report = run_broadcast(g, sched)
    out = report.to_json()
    out["diameter"] = d.diameter
    bt = broadcast_time(g, exhaustive_bound=args.exact_bound)
    out["broadcast_time"] = bt.time
    out["broadcast_exact"] = bt.exact
    return out


def cmd_quotient(args) -> dict:
    g = _graph(args.n, args.a)
    base, cover = quotient_circulant(g, args.m)
    violation = check_cover(cover, g, base)
    return {
        "total": {"n": g.n, "a": g.a},
        "base": {"n": base.n, "a": base.a},
        "fold": cover.fold,
        "cover_valid": violation is None,
        "projection": cover.to_json(),
    }


def cmd_ej_cover(args) -> dict:
    alpha = EJInt(args.c, args.d)
    beta = EJInt(args.c2, args.d2)
    big, cover = ej_cover_expand(alpha, beta)
    small = EJGraph(alpha)
    violation = check_cover(cover, big, small)
    return {
        "alpha": alpha.to_json(),
        "beta": beta.to_json(),
        "product_norm": big.n,
        "fold": cover.fold,
        "cover_valid": violation is None,
        "projection": cover.to_json(),
    }


def cmd_export(args) -> dict | None:
    g = _graph(args.n, args.a)
    if args.format == "dot":
        sys.stdout.write(export.to_dot(g, name=f"TL_{g.n}"))
    else:
        sys.stdout.write(export.to_edge_list(g))
    return None


def _verify_order(n: int) -> tuple[int, list[str]]:
    """Invariant sweep for one constructible order; returns failures."""
    from .covers import verify_cover

    failures: list[str] = []
    cls = classify(n)
    gens = sorted({canonical_generator(n, a) for a in cls.solutions})
    if len(gens) != cls.graph_count:
        failures.append(f"n={n}: canonical generator count != 2^(l-1)")
    for a in gens:
        g = new_frobenius(n, a)
        d = build_diagram(g)
        dist = bfs_distances(g)
        if max(dist) != d.diameter:
            failures.append(f"n={n} a={a}: diagram diameter != BFS")
        nt = type_vector(d)
        wt = [0] * (max(dist) + 1)
        for x in dist:
            wt[x] += 1
        if list(wt[1:]) != [6 * t for t in nt]:
            failures.append(f"n={n} a={a}: type vector disagrees with BFS spheres")
        pi = forwarding_index(d)
        if sum(dist) != 3 * pi:  # ordered sum / |E| = n*sum(dist) / 3n
            failures.append(f"n={n} a={a}: pi != BFS distance sum / |E|")
        tree = build_spanning_tree(g, d)
        if any(tree.level[v] != dist[v] for v in range(n)):
            failures.append(f"n={n} a={a}: tree depth != BFS distance")
        sched = gossip_schedule(g, tree)
        rep = run_gossip_relative(g, sched)
        if not rep.valid or rep.completion_time != (n - 1) // 6:
            failures.append(f"n={n} a={a}: gossip schedule invalid: {rep.violations}")
        bsched = broadcast_schedule(g, d)
        brep = run_broadcast(g, bsched)
        if not brep.valid or bsched.horizon - d.diameter not in (2, 3):
            failures.append(f"n={n} a={a}: broadcast schedule invalid")
        ej = circulant_to_ej(g)
        back = ej_to_circulant(ej.alpha)
        if back.a != a or ej.n != n:
            failures.append(f"n={n} a={a}: EJ round trip broke")
        for m in _proper_divisors(n):
            base, cover = quotient_circulant(g, m)
            if not verify_cover(cover, g, base):
                failures.append(f"n={n} a={a}: quotient by {m} is not a cover")
    return n, failures


def _proper_divisors(n: int) -> list[int]:
    return [m for m in range(2, n) if n % m == 0]


def cmd_verify(args) -> dict:
    orders = [n for n, _ in constructible_orders(args.max)]
    workers = args.workers or int(os.environ.get("FROBCIRC_WORKERS", "1"))
    failures: list[str] = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for n, fails in pool.map(_verify_order, orders):
                failures.extend(fails)
                print(f"verified n={n}", file=sys.stderr)
    else:
        for n in orders:
            _, fails = _verify_order(n)
            failures.extend(fails)
            print(f"verified n={n}", file=sys.stderr)
    return {
        "max": args.max,
        "orders_checked": len(orders),
        "failures": failures,
        "ok": not failures,
    }


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="frobcirc",
        description="6-valent first-kind Frobenius circulants and EJ graphs",
    )
    p.add_argument("--human", action="store_true", help="aligned text instead of JSON")
    sub = p.add_subparsers(dest="verb", required=True)

    sp = sub.add_parser("classify", help="existence and solutions for an order")
    sp.add_argument("n", type=int)
    sp.set_defaults(fn=cmd_classify)

    sp = sub.add_parser("build", help="construct and summarize a graph")
    sp.add_argument("n", type=int)
    sp.add_argument("a", type=int, nargs="?", default=None)
    sp.set_defaults(fn=cmd_build)

    sp = sub.add_parser("convert", help="circulant to EJ graph with witness")
    sp.add_argument("n", type=int)
    sp.add_argument("a", type=int)
    sp.set_defaults(fn=cmd_convert)

    sp = sub.add_parser("convert-ej", help="EJ integer c+d*rho to circulant")
    sp.add_argument("c", type=int)
    sp.add_argument("d", type=int)
    sp.set_defaults(fn=cmd_convert_ej)

    sp = sub.add_parser("metrics", help="diameter, type, forwarding/Wiener/gossip/broadcast")
    sp.add_argument("n", type=int)
    sp.add_argument("a", type=int, nargs="?", default=None)
    sp.add_argument("--exact-bound", type=int, default=200,
                    help="max order for exhaustive broadcast-time search")
    sp.set_defaults(fn=cmd_metrics)

    sp = sub.add_parser("diagram", help="distance diagram profile and sector")
    sp.add_argument("n", type=int)
    sp.add_argument("a", type=int, nargs="?", default=None)
    sp.set_defaults(fn=cmd_diagram)

    sp = sub.add_parser("schedule", help="emit a schedule as JSON")
    sp.add_argument("kind", choices=["gossip", "broadcast"])
    sp.add_argument("n", type=int)
    sp.add_argument("a", type=int, nargs="?", default=None)
    sp.set_defaults(fn=cmd_schedule)

    sp = sub.add_parser("simulate", help="generate, validate and report a schedule")
    sp.add_argument("kind", choices=["gossip", "broadcast"])
    sp.add_argument("n", type=int)
    sp.add_argument("a", type=int, nargs="?", default=None)
    sp.add_argument("--explicit-limit", type=int, default=5000,
                    help="largest order simulated with the full knowledge matrix")
    sp.add_argument("--exact-bound", type=int, default=200)
    sp.add_argument("--baseline", action="store_true",
                    help="also run the flooding baseline")
    sp.set_defaults(fn=cmd_simulate)

    sp = sub.add_parser("quotient", help="quotient graph and cover map")
    sp.add_argument("n", type=int)
    sp.add_argument("a", type=int)
    sp.add_argument("m", type=int)
    sp.set_defaults(fn=cmd_quotient)

    sp = sub.add_parser("ej-cover", help="expand EJ_alpha by beta and verify the cover")
    sp.add_argument("c", type=int)
    sp.add_argument("d", type=int)
    sp.add_argument("c2", type=int)
    sp.add_argument("d2", type=int)
    sp.set_defaults(fn=cmd_ej_cover)

    sp = sub.add_parser("export", help="DOT or edge-list output")
    sp.add_argument("n", type=int)
    sp.add_argument("a", type=int, nargs="?", default=None)
    sp.add_argument("--format", choices=["dot", "edges"], default="edges")
    sp.set_defaults(fn=cmd_export)

    sp = sub.add_parser("verify", help="batch invariant suite over all orders <= max")
    sp.add_argument("--max", type=int, required=True)
    sp.add_argument("--workers", type=int, default=0,
                    help="parallel workers (default: FROBCIRC_WORKERS or 1)")
    sp.set_defaults(fn=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.fn(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2
    if result is not None:
        _emit(result, args.human)
        if args.verb == "verify" and not result["ok"]:
            return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
