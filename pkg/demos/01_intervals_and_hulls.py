"""Walk through intervals, hulls and extreme points on the strip fixture.

The graph is seven vertices tiled by five triangles; its two degree-2 ends
are the only extreme points, and iterating the interval operator from them
recovers the whole graph in two steps.
"""

from __future__ import annotations

from lkconvex import (
    extreme_points,
    format_vertex_set,
    generators,
    hull,
    interval,
    interval_of_set,
    is_convex,
)

g = generators.triangle_strip7()
print(f"graph: {g.n} vertices, {g.m} edges")
print("edges:", g.edges())
print()

print("pair intervals with the length bound k=3:")
for u, v in [(0, 6), (0, 4), (3, 4)]:
    box = interval(g, 3, u, v)
    print(f"  I[{u},{v}] = {format_vertex_set(box)}")
print()

print("one interval-operator step on {0, 6}:",
      format_vertex_set(interval_of_set(g, 3, {0, 6})))

trace = hull(g, 3, {0, 6})
print(f"hull of {{0, 6}} reaches the fixed point in {trace.steps} steps:")
for i, stage in enumerate(trace.iterates):
    print(f"  iterate {i}: {format_vertex_set(stage)}")
print()

print("the whole vertex set is convex; its extreme points are the two ends:")
print("  extremes:", format_vertex_set(extreme_points(g, 3, range(7))))
print()

print("a tighter convex set and its extremes:")
s = {1, 2, 3, 4}
print(f"  {format_vertex_set(s)} convex: {is_convex(g, 3, s)}; "
      f"extremes: {format_vertex_set(extreme_points(g, 3, s))}")

print()
print("k=2 tells a different story: the interval of (0, 6) is just the pair,")
print("  I[0,6] at k=2 =", format_vertex_set(interval(g, 2, 0, 6)),
      "(no induced path that short)")
