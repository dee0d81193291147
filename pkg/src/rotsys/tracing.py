"""Face tracing of cell complexes and link complexes.

Darts come in mate pairs (two per edge) and each dart "arrives" at one
vertex.  A rotator assigns every vertex the cyclic order of its
arriving darts; the tracing map sends a dart to the mate of its
successor in the rotator at its arrival vertex, and the orbits of that
map are the cells.  Each connected component realizes a closed oriented
surface, so its Euler characteristic V - E + cells is even and at most
2, with 2 exactly for spheres.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .complexes import EdgeId, Incidence, PreComplex, VertexId
from .errors import NotClosedSurfaceError, NotIncidentError
from .links import HEAD, TAIL, LinkGraph, LinkVertex, link_graph
from .rotation import RotationSystem


def _orbits_of(trace: Sequence[int]) -> list[tuple[int, ...]]:
    """Cycles of a permutation, each starting at its least element,
    enumerated from the least unused dart."""
    seen = [False] * len(trace)
    orbits = []
    for start in range(len(trace)):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        d = trace[start]
        while d != start:
            orbit.append(d)
            seen[d] = True
            d = trace[d]
        orbits.append(tuple(orbit))
    return orbits


@dataclass(frozen=True)
class CellComplex:
    """A traced multigraph: vertices, edges (dart pairs 2k / 2k+1), a
    rotator system encoded as the successor permutation, and the traced
    cells."""

    vertex_labels: tuple[str, ...]
    edge_labels: tuple[str, ...]
    dart_vertex: tuple[int, ...]
    succ: tuple[int, ...]
    cells: tuple[tuple[int, ...], ...]
    cell_labels: tuple[str, ...]

    @staticmethod
    def from_rotators(
        vertex_labels: Sequence[str],
        edge_labels: Sequence[str],
        dart_vertex: Sequence[int],
        rotators: Sequence[Sequence[int]],
        cell_labels: Sequence[str] | None = None,
    ) -> "CellComplex":
        n = len(dart_vertex)
        assert n == 2 * len(edge_labels)
        succ = [-1] * n
        placed = 0
        for vi, rot in enumerate(rotators):
            for j, d in enumerate(rot):
                if dart_vertex[d] != vi or succ[d] != -1:
                    raise ValueError("rotator does not partition the darts")
                succ[d] = rot[(j + 1) % len(rot)]
                placed += 1
        if placed != n:
            raise ValueError("rotator does not cover every dart")
        trace = [succ[d] ^ 1 for d in range(n)]
        cells = tuple(_orbits_of(trace))
        if cell_labels is None:
            cell_labels = tuple(f"c{i}" for i in range(len(cells)))
        return CellComplex(
            tuple(vertex_labels),
            tuple(edge_labels),
            tuple(dart_vertex),
            tuple(succ),
            cells,
            tuple(cell_labels),
        )

    # -- structure ----------------------------------------------------------

    def num_vertices(self) -> int:
        return len(self.vertex_labels)

    def num_edges(self) -> int:
        return len(self.edge_labels)

    def num_cells(self) -> int:
        return len(self.cells)

    def mate(self, d: int) -> int:
        return d ^ 1

    def pred(self) -> tuple[int, ...]:
        inv = [0] * len(self.succ)
        for d, s in enumerate(self.succ):
            inv[s] = d
        return tuple(inv)

    def edge_of_dart(self, d: int) -> int:
        return d >> 1

    def component_partition(self) -> list[tuple[set[int], set[int]]]:
        """Per connected component: (vertex indices, edge indices).
        Vertices without darts form singleton components."""
        parent = list(range(self.num_vertices()))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for k in range(self.num_edges()):
            a, b = find(self.dart_vertex[2 * k]), find(self.dart_vertex[2 * k + 1])
            if a != b:
                parent[b] = a
        comp_vertices: dict[int, set[int]] = {}
        for v in range(self.num_vertices()):
            comp_vertices.setdefault(find(v), set()).add(v)
        comps = []
        for root in sorted(comp_vertices, key=lambda r: min(comp_vertices[r])):
            vs = comp_vertices[root]
            es = {
                k
                for k in range(self.num_edges())
                if self.dart_vertex[2 * k] in vs
            }
            comps.append((vs, es))
        return comps

    def chi_by_component(self) -> list[int]:
        comps = self.component_partition()
        cell_home = {}
        for ci, orbit in enumerate(self.cells):
            cell_home[ci] = self.dart_vertex[orbit[0]]
        chis = []
        for vs, es in comps:
            ncells = sum(1 for ci in cell_home if cell_home[ci] in vs)
            chis.append(len(vs) - len(es) + ncells)
        return chis

    def chi(self) -> int:
        return self.num_vertices() - self.num_edges() + self.num_cells()

    def genus(self) -> int:
        """Genus of a connected traced surface; errors on anything else."""
        if len(self.component_partition()) != 1:
            raise NotClosedSurfaceError("genus of a disconnected complex")
        two_g = 2 - self.chi()
        if two_g % 2 != 0 or two_g < 0:
            raise NotClosedSurfaceError(f"impossible Euler characteristic {self.chi()}")
        return two_g // 2

    def cell_boundary_labels(self, ci: int) -> tuple[str, ...]:
        return tuple(self.edge_labels[d >> 1] for d in self.cells[ci])


def is_sphere_union(cc: CellComplex) -> bool:
    """True iff every connected component has Euler characteristic 2."""
    return all(chi == 2 for chi in cc.chi_by_component())


def surface_dual(cc: CellComplex) -> CellComplex:
    """Swap vertices and cells of a closed traced surface.

    The dual keeps the darts and mates; its rotator system is the
    tracing map of ``cc`` (the Edmonds-Hefter-Ringel principle), so its
    cells are the vertex rotators of ``cc``.
    """
    n = len(cc.dart_vertex)
    counts = [0] * cc.num_vertices()
    for v in cc.dart_vertex:
        counts[v] += 1
    if any(count == 0 for count in counts):
        raise NotClosedSurfaceError("isolated vertex; not a closed traced surface")
    dual_vertex_of_dart = [0] * n
    for ci, orbit in enumerate(cc.cells):
        for d in orbit:
            dual_vertex_of_dart[d] = ci
    dual_succ = tuple(cc.succ[d] ^ 1 for d in range(n))
    trace = tuple(dual_succ[d] ^ 1 for d in range(n))  # equals cc.succ
    cells = tuple(_orbits_of(trace))
    cell_labels = tuple(cc.vertex_labels[cc.dart_vertex[orbit[0]]] for orbit in cells)
    return CellComplex(
        cc.cell_labels,
        cc.edge_labels,
        tuple(dual_vertex_of_dart),
        dual_succ,
        cells,
        cell_labels,
    )


def maps_isomorphism(
    a: CellComplex, b: CellComplex, dart_map: Sequence[int]
) -> str | None:
    """Check a dart bijection as a cell-complex isomorphism.

    Returns "direct" if it intertwines the rotator successors, "mirror"
    if it intertwines successor with predecessor uniformly (the two
    tracing conventions differ by a global mirror), else None.
    """
    n = len(a.dart_vertex)
    if len(b.dart_vertex) != n or sorted(dart_map) != list(range(n)):
        return None
    if any(dart_map[d ^ 1] != dart_map[d] ^ 1 for d in range(n)):
        return None
    if all(dart_map[a.succ[d]] == b.succ[dart_map[d]] for d in range(n)):
        return "direct"
    b_pred = b.pred()
    if all(dart_map[a.succ[d]] == b_pred[dart_map[d]] for d in range(n)):
        return "mirror"
    return None


# -- link complexes ---------------------------------------------------------


class LinkTracer:
    """Precomputed dart structure of one link graph, retraceable cheaply
    for different rotator assignments during search."""

    def __init__(self, c: PreComplex, lg: LinkGraph, incidences: dict[EdgeId, list[Incidence]]):
        self.center = lg.center
        self.link = lg
        self.vertex_index = {lv: i for i, lv in enumerate(lg.vertices)}
        self.edge_labels = [f"{le.face}#{le.pos}" for le in lg.edges]
        self.dart_vertex: list[int] = []
        for le in lg.edges:
            self.dart_vertex.append(self.vertex_index[le.u])
            self.dart_vertex.append(self.vertex_index[le.w])
        # dart 2k arrives on the u side of link edge k, 2k+1 on the w side
        corner_index = {(le.face, le.pos): k for k, le in enumerate(lg.edges)}
        self.dart_of_incidence: list[dict[Incidence, int]] = []
        self.incidences_of_vertex: list[tuple[Incidence, ...]] = []
        for lv in lg.vertices:
            table: dict[Incidence, int] = {}
            for inc in incidences[lv.edge]:
                trail = c.faces[inc.face].trail
                s = trail[inc.pos].sign
                if (s == 1) == (lv.end == HEAD):
                    after = (inc.face, (inc.pos + 1) % len(trail))
                    table[inc] = 2 * corner_index[after]
                else:
                    table[inc] = 2 * corner_index[(inc.face, inc.pos)] + 1
            self.dart_of_incidence.append(table)
            self.incidences_of_vertex.append(tuple(sorted(table)))
        # component structure is rotator-independent
        self._components = self._component_targets()

    def _component_targets(self) -> list[tuple[frozenset[int], int]]:
        """Per component: its dart set and the cell count required for a
        sphere (2 - V + E); isolated vertices make a sphere impossible."""
        comps = []
        parent = list(range(len(self.link.vertices)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for k in range(len(self.link.edges)):
            a, b = find(self.dart_vertex[2 * k]), find(self.dart_vertex[2 * k + 1])
            if a != b:
                parent[b] = a
        groups: dict[int, list[int]] = {}
        for v in range(len(self.link.vertices)):
            groups.setdefault(find(v), []).append(v)
        for root, vs in groups.items():
            darts = frozenset(
                d for d in range(len(self.dart_vertex)) if self.dart_vertex[d] in set(vs)
            )
            n_edges = len(darts) // 2
            comps.append((darts, 2 - len(vs) + n_edges))
        return comps

    def rotators(
        self,
        sigma: "RotationSystem | dict[EdgeId, tuple[Incidence, ...]]",
        red_edges: frozenset[EdgeId] = frozenset(),
    ) -> list[list[int]]:
        """Resolve sigma to dart rotators.

        At a head end the darts follow sigma(e); at a tail end they
        follow the reverse, unless the edge is red, in which case both
        ends read sigma(e) forwards.  Single-incidence edges have empty
        sigma but still carry their one dart.  ``sigma`` may be a bare
        edge-to-cycle mapping (searches pass partial assignments).
        """
        order_map = sigma.sigma if isinstance(sigma, RotationSystem) else sigma
        out = []
        for i, lv in enumerate(self.link.vertices):
            # faceless edges (PreComplex searches) have no sigma entry
            order = order_map.get(lv.edge, ())
            if not order:
                order = self.incidences_of_vertex[i]
            elif lv.end == TAIL and lv.edge not in red_edges:
                order = tuple(reversed(order))
            table = self.dart_of_incidence[i]
            out.append([table[inc] for inc in order])
        return out

    def succ_from(self, rotators: Sequence[Sequence[int]]) -> list[int]:
        succ = [-1] * len(self.dart_vertex)
        for rot in rotators:
            for j, d in enumerate(rot):
                succ[d] = rot[(j + 1) % len(rot)]
        return succ

    def sphere_union(
        self,
        sigma: "RotationSystem | dict[EdgeId, tuple[Incidence, ...]]",
        red_edges: frozenset[EdgeId] = frozenset(),
    ) -> bool:
        """Whether every component traces to Euler characteristic 2,
        without materializing a CellComplex."""
        succ = self.succ_from(self.rotators(sigma, red_edges))
        seen = [False] * len(succ)
        for darts, target in self._components:
            if target < 0:
                return False
            orbits = 0
            for start in darts:
                if seen[start]:
                    continue
                orbits += 1
                if orbits > target:
                    return False
                d = succ[start] ^ 1
                seen[start] = True
                while d != start:
                    seen[d] = True
                    d = succ[d] ^ 1
            if orbits != target:
                return False
        return True

    def cell_complex(
        self, sigma: RotationSystem, red_edges: frozenset[EdgeId] = frozenset()
    ) -> CellComplex:
        lg = self.link
        labels = lg.vertex_labels()
        return CellComplex.from_rotators(
            labels,
            self.edge_labels,
            self.dart_vertex,
            self.rotators(sigma, red_edges),
        )


def link_tracer(
    c: PreComplex,
    v: VertexId,
    incidences: dict[EdgeId, list[Incidence]] | None = None,
) -> LinkTracer:
    if incidences is None:
        incidences = c.edge_incidences()
    return LinkTracer(c, link_graph(c, v), incidences)


def trace_link_complex(c: PreComplex, sigma: RotationSystem, v: VertexId) -> CellComplex:
    """The link complex of ``(c, sigma)`` at ``v``: the link graph with
    rotators induced by sigma, traced into cells."""
    return link_tracer(c, v).cell_complex(sigma)


def induced_rotator(
    c: PreComplex, sigma: RotationSystem, e: EdgeId, v: VertexId
) -> list[tuple[str, Incidence]]:
    """The rotator at link vertex ``e`` of the link graph at ``v``:
    sigma(e) when the edge points toward ``v``, its reverse otherwise,
    with each incidence resolved to the link edge (face traversal) it
    contributes.

    For a loop both ends lie at ``v``; the head end is reported.  The
    single-face convention leaves sigma empty, and the rotator is then
    the one dart of the single incidence.
    """
    if e not in c.edges:
        raise NotIncidentError(f"unknown edge {e!r}")
    tail, head = c.edges[e]
    if v not in (tail, head):
        raise NotIncidentError(f"vertex {v!r} is not an endpoint of edge {e!r}")
    tracer = link_tracer(c, v)
    end = HEAD if head == v else TAIL
    lv = LinkVertex(e, end)
    i = tracer.vertex_index[lv]
    order = sigma.sigma[e]
    if not order:
        order = tracer.incidences_of_vertex[i]
    elif end == TAIL:
        order = tuple(reversed(order))
    table = tracer.dart_of_incidence[i]
    return [(tracer.edge_labels[table[inc] >> 1], inc) for inc in order]


def is_planar_rotation_system(
    c: PreComplex, sigma: RotationSystem
) -> tuple[bool, VertexId | None]:
    """Whether every link complex is a disjoint union of spheres; on
    failure also the least failing vertex."""
    incidences = c.edge_incidences()
    for v in sorted(c.vertices):
        if not link_tracer(c, v, incidences).sphere_union(sigma):
            return False, v
    return True, None
