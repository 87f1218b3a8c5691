#!/usr/bin/env python3
"""End-to-end walkthrough of the order-49 flagship graph TL_49(31, 30, 1).

Builds the graph, its distance diagram and both schedules, converts to the
Eisenstein-Jacobi side, and validates everything with the simulator.
A compact narrative of what the library does, printed step by step.
"""

from __future__ import annotations

from frobcirc.circulant import bfs_distances, new_frobenius
from frobcirc.eisenstein import circulant_to_ej, distance_distribution, find_witness
from frobcirc.covers import quotient_circulant, verify_cover
from frobcirc.scheduler import (
    RoutingTable,
    broadcast_schedule,
    broadcast_time,
    build_diagram,
    build_spanning_tree,
    forwarding_index,
    gossip_schedule,
    type_vector,
    wiener_index,
)
from frobcirc.simulator import greedy_gossip_baseline, run_broadcast, run_gossip


def main() -> None:
    g = new_frobenius(49, 31)
    print(f"graph: TL_49(31, 30, 1), connection set {g.connection_set}")

    d = build_diagram(g)
    print(f"diagram: sector {d.sector}, profile {d.profile}, diameter {d.diameter}")
    print(f"type vector {type_vector(d)}; BFS eccentricity {max(bfs_distances(g))}")

    pi = forwarding_index(d)
    print(f"forwarding index pi = {pi}, arc load pi/2 = {pi // 2}, "
          f"Wiener index {wiener_index(g, d)}")

    tree = build_spanning_tree(g, d)
    loads = set(RoutingTable(g, tree).arc_loads.values())
    print(f"routing loads per arc: {loads}")

    sched = gossip_schedule(g, tree)
    rep = run_gossip(g, sched)
    base = greedy_gossip_baseline(g)
    print(f"gossip: {sched.total_steps} steps scheduled; simulator says valid={rep.valid}, "
          f"complete at {rep.completion_time}; flooding baseline needs {base}")

    bsched = broadcast_schedule(g, d)
    brep = run_broadcast(g, bsched)
    bt = broadcast_time(g)
    print(f"broadcast: scheme horizon {bsched.horizon} (valid={brep.valid}); "
          f"exact b = {bt.time} (certified={bt.exact})")

    ej = circulant_to_ej(g)
    w = find_witness(g, ej.alpha)
    print(f"EJ form: alpha = {ej.alpha}, canonical (c, d) = {ej.canonical_cd}, "
          f"witness case {w.case} with (m, r, s) = ({w.m}, {w.r}, {w.s})")
    print(f"distance distribution {distance_distribution(ej.alpha)}")

    base7, cover = quotient_circulant(g, 7)
    print(f"quotient by 7: TL_7({base7.a}, {base7.a - 1}, 1), fold {cover.fold}, "
          f"cover valid: {verify_cover(cover, g, base7)}")


if __name__ == "__main__":
    main()
