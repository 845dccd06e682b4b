"""Polynomial recognizers for the k=2 and k=3 convex-geometry classes.

For k=2 a connected graph is a convex geometry exactly when it is chordal
and has no induced path on four vertices.  For k=3 the characterization is:
chordal, diameter at most 3, and every induced n-gem with n >= 4 is solved.
An n-gem is an induced path x_0..x_n plus one apex adjacent to every path
vertex, and it is solved when the host graph holds an induced path of length
exactly three from x_0 to x_n that avoids the apex.  Rejections carry a
machine-checkable certificate: a hole, a four-vertex induced path, a vertex
pair beyond the distance bound, or an unsolved gem.

The general necessary-conditions filter (chordal plus diameter <= k) is also
exposed; it is sound for rejection at every k but only decides membership
for the two characterized cases above.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .bits import iter_bits
from .graph import (
    Graph,
    GraphError,
    HoleWitness,
    InducedPath,
    bfs_distances,
    contains_induced_path,
    induced_paths_between,
    is_connected,
)
from .chordal import is_chordal


@dataclass(frozen=True)
class GemWitness:
    """An induced path (the base) plus an apex adjacent to all of it."""

    base: InducedPath
    apex: int

    @property
    def n(self) -> int:
        """Edge length of the base path."""
        return self.base.length

    def is_valid_in(self, g: Graph) -> bool:
        if not self.base.is_induced_in(g) or self.base.length < 3:
            return False
        if not 0 <= self.apex < g.n or self.apex in self.base.vertices:
            return False
        return all(g._adj[self.apex] >> x & 1 for x in self.base.vertices)


@dataclass(frozen=True)
class FarPair:
    """A vertex pair whose distance exceeds the bound for the given k."""

    u: int
    v: int
    distance: int


Certificate = HoleWitness | InducedPath | FarPair | GemWitness

_KINDS = {
    HoleWitness: "hole",
    InducedPath: "p4",
    FarPair: "far_pair",
    GemWitness: "unsolved_gem",
}


@dataclass(frozen=True)
class RecognitionVerdict:
    """Acceptance flag plus, on rejection, one certificate of failure.

    For the k=3 recognizer an acceptance also carries the solved gems with
    their solving paths, so positive verdicts can be replayed too.
    """

    accepted: bool
    certificate: Certificate | None = None
    solved_gems: tuple[tuple[GemWitness, InducedPath], ...] = ()

    @property
    def certificate_kind(self) -> str | None:
        if self.certificate is None:
            return None
        return _KINDS[type(self.certificate)]

    def to_json_dict(self) -> dict:
        cert = None
        kind = self.certificate_kind
        if kind == "hole":
            cert = {"kind": kind, "cycle": list(self.certificate.cycle)}
        elif kind == "p4":
            cert = {"kind": kind, "path": list(self.certificate.vertices)}
        elif kind == "far_pair":
            c = self.certificate
            cert = {"kind": kind, "u": c.u, "v": c.v, "distance": c.distance}
        elif kind == "unsolved_gem":
            c = self.certificate
            cert = {"kind": kind, "base": list(c.base.vertices), "apex": c.apex}
        out: dict = {"accepted": self.accepted, "certificate": cert}
        if self.solved_gems:
            out["solved_gems"] = [
                {
                    "base": list(w.base.vertices),
                    "apex": w.apex,
                    "solving_path": list(p.vertices),
                }
                for w, p in self.solved_gems
            ]
        return out


def _far_pair(g: Graph, k: int) -> FarPair | None:
    """Lexicographically first pair at distance above k, or None."""
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for v in range(u + 1, g.n):
            if dist[v] > k:
                return FarPair(u, v, dist[v])
    return None


def enumerate_gems(g: Graph, min_n: int = 3) -> Iterator[GemWitness]:
    """Stream every induced n-gem with n >= min_n.

    Bases are walked depth-first in lexicographic order while carrying the
    intersection of the path vertices' neighborhoods, which is both the
    apex candidate set and a pruning test (once empty, no extension can be
    a gem base).  Each gem appears once: bases are reported in the
    orientation with the smaller first endpoint, apexes in ascending order.
    """
    if min_n < 3:
        raise GraphError(f"gems need a base of at least 3 edges, got min_n={min_n}")
    adj = g._adj
    path: list[int] = []

    def walk(last: int, blocked: int, common: int) -> Iterator[GemWitness]:
        if len(path) > min_n and path[0] < last:
            base = InducedPath(tuple(path))
            for apex in iter_bits(common):
                yield GemWitness(base, apex)
        for x in iter_bits(adj[last] & ~blocked):
            nc = common & adj[x]
            if nc:
                path.append(x)
                yield from walk(x, blocked | adj[last] | (1 << last), nc)
                path.pop()

    for s in range(g.n):
        path = [s]
        yield from walk(s, 1 << s, adj[s])


def is_gem_solved(g: Graph, witness: GemWitness) -> tuple[bool, InducedPath | None]:
    """Look for an induced path of length exactly 3 joining the base ends
    of the gem while avoiding its apex; returns it when found."""
    if not witness.is_valid_in(g):
        raise GraphError(f"not an induced gem of this graph: {witness}")
    x0 = witness.base.vertices[0]
    xn = witness.base.vertices[-1]
    for p in induced_paths_between(g, x0, xn, 3):
        if p.length == 3 and witness.apex not in p.vertices:
            return True, p
    return False, None


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphError("recognition expects a connected graph")


def recognize_l2(g: Graph) -> RecognitionVerdict:
    """Convex-geometry test for k=2: chordal with no induced four-vertex path."""
    _require_connected(g)
    ch = is_chordal(g)
    if not ch.chordal:
        return RecognitionVerdict(False, ch.hole)
    p4 = contains_induced_path(g, 4)
    if p4 is not None:
        return RecognitionVerdict(False, p4)
    return RecognitionVerdict(True)


def recognize_l3(g: Graph) -> RecognitionVerdict:
    """Convex-geometry test for k=3: chordal, diameter <= 3, all gems solved.

    Conditions are checked in that order and the first failure is returned,
    so certificates are deterministic.
    """
    _require_connected(g)
    ch = is_chordal(g)
    if not ch.chordal:
        return RecognitionVerdict(False, ch.hole)
    far = _far_pair(g, 3)
    if far is not None:
        return RecognitionVerdict(False, far)
    solved: list[tuple[GemWitness, InducedPath]] = []
    for w in enumerate_gems(g, 4):
        ok, p = is_gem_solved(g, w)
        if not ok:
            return RecognitionVerdict(False, w)
        solved.append((w, p))
    return RecognitionVerdict(True, solved_gems=tuple(solved))


def necessary_conditions(g: Graph, k: int) -> RecognitionVerdict:
    """Filter by the conditions every k-geometry satisfies: chordal, diam <= k.

    A rejection (hole or far pair) is conclusive for any k >= 2; an
    acceptance is only a 'maybe' outside the characterized cases k=2, k=3.
    """
    if k < 2:
        raise GraphError(f"path-length bound k must be at least 2, got {k}")
    _require_connected(g)
    ch = is_chordal(g)
    if not ch.chordal:
        return RecognitionVerdict(False, ch.hole)
    far = _far_pair(g, k)
    if far is not None:
        return RecognitionVerdict(False, far)
    return RecognitionVerdict(True)
