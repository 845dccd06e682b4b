"""Run the k=2 and k=3 recognizers and replay every certificate they emit.

Each rejection comes with a machine-checkable witness: a hole, an induced
4-vertex path, a pair beyond the distance bound, or an unsolved gem.  The
script re-validates each one against the graph it came from.
"""

from __future__ import annotations

from lkconvex import (
    FarPair,
    GemWitness,
    HoleWitness,
    InducedPath,
    bfs_distances,
    generators,
    is_gem_solved,
    recognize_l2,
    recognize_l3,
)

samples = [
    ("triangle strip", generators.triangle_strip7()),
    ("6-cycle", generators.cycle(6)),
    ("path on 6", generators.path(6)),
    ("gem(4)", generators.gem(4)),
    ("gem(3)", generators.gem(3)),
    ("star on 7", generators.star(7)),
    ("random trivially perfect", generators.random_trivially_perfect(8, 1)),
]


def replay(g, cert) -> str:
    if isinstance(cert, HoleWitness):
        return f"hole {cert.cycle} revalidates: {cert.is_hole_in(g)}"
    if isinstance(cert, InducedPath):
        ok = cert.is_induced_in(g) and cert.length == 3
        return f"induced P4 {cert.vertices} revalidates: {ok}"
    if isinstance(cert, FarPair):
        ok = bfs_distances(g, cert.u)[cert.v] == cert.distance
        return f"far pair ({cert.u},{cert.v}) at distance {cert.distance} revalidates: {ok}"
    if isinstance(cert, GemWitness):
        ok = cert.is_valid_in(g) and not is_gem_solved(g, cert)[0]
        return f"unsolved gem base={cert.base.vertices} apex={cert.apex} revalidates: {ok}"
    return "no certificate"


for name, g in samples:
    print(f"== {name} ({g.n} vertices) ==")
    for k, recognize in ((2, recognize_l2), (3, recognize_l3)):
        verdict = recognize(g)
        if verdict.accepted:
            line = f"  k={k}: accepted"
            if verdict.solved_gems:
                line += f" ({len(verdict.solved_gems)} gems, all solved)"
            print(line)
        else:
            print(f"  k={k}: rejected [{verdict.certificate_kind}]")
            print(f"    {replay(g, verdict.certificate)}")
    print()
