"""Exhaustive convex-geometry oracle.

A graph is a convex geometry for a given k when every convex set is the hull
of its extreme points.  The oracle enumerates all subsets, keeps the convex
ones, and replays that reconstruction; the first failure (subsets scanned in
increasing size, lexicographic within a size) is returned as a certificate
holding the convex set, its extreme points, and the hull those extremes
actually generate.  Exponential by design: it is the ground truth the
polynomial recognizers are validated against, so it stays brute force.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .bits import mask_of, set_of
from .convexity import (
    DEFAULT_ENUMERATION_CAP,
    IntervalCache,
    NotConvexError,
    SizeCapError,
    _set_mask,
)
from .graph import Graph, GraphError, is_connected, simplicial_mask


@dataclass(frozen=True)
class MkmViolation:
    """A convex set that is not the hull of its extreme points."""

    convex_set: frozenset[int]
    extreme_points: frozenset[int]
    hull_of_extremes: frozenset[int]


@dataclass(frozen=True)
class GeometryVerdict:
    is_geometry: bool
    violation: MkmViolation | None

    def to_json_dict(self) -> dict:
        cert = None
        if self.violation is not None:
            cert = {
                "set": sorted(self.violation.convex_set),
                "ext": sorted(self.violation.extreme_points),
                "hull": sorted(self.violation.hull_of_extremes),
            }
        return {"geometry": self.is_geometry, "certificate": cert}


class MkmCheck(NamedTuple):
    holds: bool
    extreme_points: frozenset[int]
    hull_of_extremes: frozenset[int]


def _reconstructs(cache: IntervalCache, smask: int) -> tuple[bool, int, int]:
    ext = simplicial_mask(cache.g, smask)
    hull = cache.hull_masks(ext)[-1] if ext else 0
    return hull == smask, ext, hull


def mkm_check_set(g: Graph, k: int, vertices: Iterable[int]) -> MkmCheck:
    """Does one convex set equal the hull of its extreme points?

    Raises NotConvexError when the set is not convex in the first place.
    """
    smask = _set_mask(g, vertices)
    cache = IntervalCache(g, k)
    bad = cache.violation(smask)
    if bad is not None:
        u, v, esc = bad
        raise NotConvexError((u, v), esc)
    ok, ext, hm = _reconstructs(cache, smask)
    return MkmCheck(ok, set_of(ext), set_of(hm))


def verify_geometry(
    g: Graph, k: int, max_n: int = DEFAULT_ENUMERATION_CAP
) -> GeometryVerdict:
    """Check every convex set against its extreme-point reconstruction.

    Refuses graphs above max_n vertices (the subset scan is 2^n) and
    disconnected graphs.
    """
    if g.n > max_n:
        raise SizeCapError(
            f"refusing to scan subsets of {g.n} vertices (cap {max_n})"
        )
    if not is_connected(g):
        raise GraphError("the geometry check expects a connected graph")
    cache = IntervalCache(g, k)
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            smask = mask_of(combo)
            if cache.violation(smask) is not None:
                continue
            ok, ext, hm = _reconstructs(cache, smask)
            if not ok:
                return GeometryVerdict(
                    False,
                    MkmViolation(frozenset(combo), set_of(ext), set_of(hm)),
                )
    return GeometryVerdict(True, None)
