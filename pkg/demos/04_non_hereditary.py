"""The k=3 geometry class is not closed under induced subgraphs.

The strip fixture passes both the recognizer and the oracle.  Delete either
of its two degree-4 interior vertices and the end pair drifts to distance 4:
the surviving graph keeps only the two ends as extreme points, their hull
stalls immediately, and both routes reject.  Deleting a different vertex
(id 2) keeps the property, so the failure is about which vertex goes.
"""

from __future__ import annotations

from lkconvex import (
    distance,
    extreme_points,
    format_vertex_set,
    generators,
    hull,
    induced_subgraph,
    recognize_l3,
    verify_geometry,
)

g = generators.triangle_strip7()
print(f"base strip: recognizer accepts={recognize_l3(g).accepted}, "
      f"oracle accepts={verify_geometry(g, 3).is_geometry}")
print(f"  distance between the ends 0 and 6: {distance(g, 0, 6)}")
print()

for victim in (1, 4, 2):
    sub = induced_subgraph(g, set(range(7)) - {victim})
    h = sub.graph
    rec = recognize_l3(h)
    orc = verify_geometry(h, 3)
    print(f"delete vertex {victim}: recognizer accepts={rec.accepted}, "
          f"oracle accepts={orc.is_geometry}")
    if rec.accepted:
        print("  the property survived this deletion")
        print()
        continue
    print(f"  rejection certificate: {rec.certificate}")
    ends = {sub.child_ids[0], sub.child_ids[6]}
    print(f"  ends now sit at distance {distance(h, *sorted(ends))}")
    ext = extreme_points(h, 3, range(h.n))
    tr = hull(h, 3, ext)
    back = sorted(sub.parent_ids[x] for x in ext)
    hull_back = sorted(sub.parent_ids[x] for x in tr.hull)
    print(f"  extreme points of the whole graph (original ids): "
          f"{format_vertex_set(back)}")
    print(f"  hull of those extremes: {format_vertex_set(hull_back)} "
          f"in {tr.steps} steps: the rest is unreachable")
    print()
