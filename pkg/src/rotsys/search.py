"""Backtracking searches for (generalized) planar rotation systems.

Candidates are assigned edge by edge in bytewise id order; cyclic
orders fix the least incidence first and permute the rest, which makes
the whole search lexicographic and its outcome machine-independent.
Pruning is twofold: a per-vertex planarity precheck of the link graph
(a sphere-union link complex is a plane embedding, so a non-planar
link kills every candidate), and an incremental sphere-union check of
each link as soon as all edges at its vertex are decided.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .complexes import EdgeId, Incidence, PreComplex, VertexId
from .errors import CapExceededError
from .links import link_graph
from .rotation import RotationSystem, sigma_candidates
from .tracing import LinkTracer, link_tracer


def _faceless_edges(c: PreComplex) -> set[EdgeId]:
    used = {ref.edge for b in c.faces.values() for ref in b.trail}
    return set(c.edges) - used


def _searchable(c: PreComplex) -> PreComplex:
    """Drop faceless edges and then-isolated vertices: they carry no
    rotation choice and never obstruct an embedding."""
    faceless = _faceless_edges(c)
    if not faceless:
        return c
    edges = {e: ends for e, ends in c.edges.items() if e not in faceless}
    used_v = {v for ends in edges.values() for v in ends}
    vertices = tuple(v for v in c.vertices if v in used_v)
    return PreComplex(c.kind, vertices, edges, dict(c.faces))


def link_planarity_precheck(c: PreComplex) -> VertexId | None:
    """Least vertex whose link graph is non-planar, or None.

    Planarity of a multigraph equals planarity of its underlying simple
    graph; loops cannot occur in link graphs built over edge-ends.
    """
    for v in sorted(c.vertices):
        lg = link_graph(c, v)
        g = nx.Graph()
        g.add_nodes_from(lg.vertices)
        for le in lg.edges:
            if le.u != le.w:
                g.add_edge(le.u, le.w)
        ok, _ = nx.check_planarity(g)
        if not ok:
            return v
    return None


@dataclass(frozen=True)
class PrsSearchResult:
    status: str  # "found" | "exhausted"
    sigma: RotationSystem | None
    count: int | None
    candidates_examined: int
    total_space: int

    def to_doc(self) -> dict:
        doc = {
            "status": self.status,
            "candidates_examined": self.candidates_examined,
            "total_space": self.total_space,
        }
        if self.count is not None:
            doc["count"] = self.count
        return doc


def search_planar_rotation_system(
    c: PreComplex, mode: str = "first", cap: int | None = None
) -> PrsSearchResult:
    """Find or count planar rotation systems of ``c``.

    mode="first" returns the lexicographically least planar system;
    mode="count" counts all of them.  ``cap`` bounds the number of
    sigma placements attempted; exceeding it raises CapExceededError
    with the progress made.
    """
    if mode not in ("first", "count"):
        raise ValueError(f"unknown mode {mode!r}")
    if cap is not None and cap < 1:
        raise ValueError("cap must be >= 1")
    c = _searchable(c)
    incidences = c.edge_incidences()
    edge_order = sorted(c.edges)
    candidates = [sigma_candidates(incidences[e]) for e in edge_order]
    total_space = 1
    for cands in candidates:
        total_space *= len(cands)

    if link_planarity_precheck(c) is not None:
        return PrsSearchResult(
            "exhausted", None, 0 if mode == "count" else None, 0, total_space
        )

    # a vertex's link is decided once the last of its edges is assigned
    last_edge_index: dict[VertexId, int] = {}
    for i, e in enumerate(edge_order):
        tail, head = c.edges[e]
        last_edge_index[tail] = max(last_edge_index.get(tail, -1), i)
        last_edge_index[head] = max(last_edge_index.get(head, -1), i)
    decided_at: list[list[VertexId]] = [[] for _ in edge_order]
    for v, i in last_edge_index.items():
        decided_at[i].append(v)
    tracers: dict[VertexId, LinkTracer] = {
        v: link_tracer(c, v, incidences) for v in c.vertices
    }

    assignment: dict[EdgeId, tuple[Incidence, ...]] = {}
    examined = 0
    found_count = 0
    first_sigma: RotationSystem | None = None

    def bump() -> None:
        nonlocal examined
        examined += 1
        if cap is not None and examined > cap:
            raise CapExceededError(
                f"candidate cap {cap} exceeded", examined - 1, found_count
            )

    def extend(i: int) -> bool:
        """DFS over edges from index i; True means stop (found, mode=first)."""
        nonlocal found_count, first_sigma
        if i == len(edge_order):
            sigma = RotationSystem(dict(assignment))
            if mode == "first":
                first_sigma = sigma
                return True
            found_count += 1
            return False
        e = edge_order[i]
        for cand in candidates[i]:
            bump()
            assignment[e] = cand
            ok = True
            for v in decided_at[i]:
                if not tracers[v].sphere_union(assignment):
                    ok = False
                    break
            if ok and extend(i + 1):
                return True
        del assignment[e]
        return False

    if not edge_order:
        # degenerate: nothing to assign, the empty system is planar
        empty = RotationSystem({})
        if mode == "first":
            return PrsSearchResult("found", empty, None, 0, 1)
        return PrsSearchResult("found", empty, 1, 0, 1)

    stopped = extend(0)
    if mode == "first":
        if stopped and first_sigma is not None:
            return PrsSearchResult("found", first_sigma, None, examined, total_space)
        return PrsSearchResult("exhausted", None, None, examined, total_space)
    status = "found" if found_count > 0 else "exhausted"
    return PrsSearchResult(status, None, found_count, examined, total_space)


@dataclass(frozen=True)
class GprsSearchResult:
    status: str  # "found" | "exhausted"
    sigma: RotationSystem | None
    red_edges: tuple[EdgeId, ...]
    candidates_examined: int

    def rotator_doc(self, c: PreComplex) -> dict:
        """The per-vertex rotators of the found assignment: for every
        link vertex, the cyclic order of its link edges (face#pos)."""
        assert self.sigma is not None
        red = frozenset(self.red_edges)
        incidences = c.edge_incidences()
        out: dict[str, dict[str, list[str]]] = {}
        for v in sorted(c.vertices):
            tracer = link_tracer(c, v, incidences)
            rotators = tracer.rotators(self.sigma, red)
            labels = tracer.link.vertex_labels()
            out[v] = {
                labels[i]: [tracer.edge_labels[d >> 1] for d in rot]
                for i, rot in enumerate(rotators)
            }
        return out

    def to_doc(self, c: PreComplex | None = None) -> dict:
        doc = {
            "status": self.status,
            "candidates_examined": self.candidates_examined,
        }
        if self.status == "found":
            doc["red_edges"] = list(self.red_edges)
            if c is not None:
                doc["rotators"] = self.rotator_doc(c)
        return doc


def _face_red_parity_possible(
    c: PreComplex, red: set[EdgeId], undecided: set[EdgeId]
) -> bool:
    """Every face must end with an even number of red edges; a face with
    no undecided edges left must already be even."""
    for boundary in c.faces.values():
        n_red = 0
        open_slots = 0
        for ref in boundary.trail:
            if ref.edge in red:
                n_red += 1
            elif ref.edge in undecided:
                open_slots += 1
        if open_slots == 0 and n_red % 2 != 0:
            return False
    return True


def search_generalized_prs(
    c: PreComplex, cap: int | None = None
) -> GprsSearchResult:
    """Search for a generalized planar rotation system.

    Per edge, a cyclic order and a color: black gives the two ends
    mutually reverse rotators as in planar systems, red gives both ends
    the same one.  Accepts when every link complex is a sphere union
    and every face has an even number of red edges.  Returns the least
    witness (cyclic orders lexicographic, black before red).
    """
    if cap is not None and cap < 1:
        raise ValueError("cap must be >= 1")
    c = _searchable(c)
    incidences = c.edge_incidences()
    edge_order = sorted(c.edges)
    candidates = [sigma_candidates(incidences[e]) for e in edge_order]

    if link_planarity_precheck(c) is not None:
        return GprsSearchResult("exhausted", None, (), 0)

    last_edge_index: dict[VertexId, int] = {}
    for i, e in enumerate(edge_order):
        tail, head = c.edges[e]
        last_edge_index[tail] = max(last_edge_index.get(tail, -1), i)
        last_edge_index[head] = max(last_edge_index.get(head, -1), i)
    decided_at: list[list[VertexId]] = [[] for _ in edge_order]
    for v, i in last_edge_index.items():
        decided_at[i].append(v)
    tracers = {v: link_tracer(c, v, incidences) for v in c.vertices}

    assignment: dict[EdgeId, tuple[Incidence, ...]] = {}
    red: set[EdgeId] = set()
    examined = 0
    result: list[tuple[RotationSystem, tuple[EdgeId, ...]]] = []

    def bump() -> None:
        nonlocal examined
        examined += 1
        if cap is not None and examined > cap:
            raise CapExceededError(f"candidate cap {cap} exceeded", examined - 1)

    def extend(i: int) -> bool:
        if i == len(edge_order):
            sigma = RotationSystem(dict(assignment))
            result.append((sigma, tuple(sorted(red))))
            return True
        e = edge_order[i]
        undecided = set(edge_order[i + 1 :])
        for cand in candidates[i]:
            for color_red in (False, True):
                bump()
                assignment[e] = cand
                if color_red:
                    red.add(e)
                ok = _face_red_parity_possible(c, red, undecided)
                if ok:
                    frozen_red = frozenset(red)
                    for v in decided_at[i]:
                        if not tracers[v].sphere_union(assignment, frozen_red):
                            ok = False
                            break
                if ok and extend(i + 1):
                    return True
                if color_red:
                    red.discard(e)
        del assignment[e]
        return False

    if not edge_order:
        return GprsSearchResult("found", RotationSystem({}), (), 0)
    if extend(0):
        sigma, red_edges = result[0]
        return GprsSearchResult("found", sigma, red_edges, examined)
    return GprsSearchResult("exhausted", None, (), examined)
