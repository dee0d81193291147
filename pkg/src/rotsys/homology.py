"""Exact homological predicates over F_p and the integers.

Boundary matrices are dense and labeled; ranks over F_p come from
Gaussian elimination with a fixed pivoting order (columns in label
order, first nonzero row), and integral torsion from a Smith normal
form computed with arbitrary-precision integers.  Instances are desk
scale, so determinism is worth more than asymptotics.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import PreComplex
from .errors import NotConnectedError, NotLocallyConnectedError, NotPrimeError
from .links import is_locally_connected
from .rotation import RotationSystem
from .surfaces import dual_complex
from .tracing import is_planar_rotation_system, link_tracer


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")


@dataclass(frozen=True)
class FpMatrix:
    """A dense matrix over F_p with row and column labels."""

    p: int
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def rank(self) -> int:
        return fp_rank(self.p, [list(r) for r in self.rows])

    def mul(self, other: "FpMatrix") -> "FpMatrix":
        assert self.col_labels == other.row_labels
        p = self.p
        out = []
        for row in self.rows:
            acc = [0] * len(other.col_labels)
            for k, coeff in enumerate(row):
                if coeff:
                    orow = other.rows[k]
                    for j in range(len(acc)):
                        acc[j] = (acc[j] + coeff * orow[j]) % p
            out.append(tuple(acc))
        return FpMatrix(p, self.row_labels, other.col_labels, tuple(out))

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in row) for row in self.rows)


def fp_rank(p: int, rows: list[list[int]]) -> int:
    """Rank by elimination; pivots scan columns left to right (labels
    ascending) and take the first row with a nonzero entry."""
    if not rows:
        return 0
    m, n = len(rows), len(rows[0])
    rank = 0
    for col in range(n):
        pivot = None
        for i in range(rank, m):
            if rows[i][col] % p != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col] % p, p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(m):
            if i != rank and rows[i][col] % p != 0:
                factor = rows[i][col] % p
                rows[i] = [
                    (a - factor * b) % p for a, b in zip(rows[i], rows[rank])
                ]
        rank += 1
        if rank == m:
            break
    return rank


def _integer_d1_d2(c: PreComplex) -> tuple[list[list[int]], list[list[int]], list[str], list[str], list[str]]:
    vertices = sorted(c.vertices)
    edges = sorted(c.edges)
    faces = sorted(c.faces)
    v_index = {v: i for i, v in enumerate(vertices)}
    e_index = {e: i for i, e in enumerate(edges)}
    d1 = []
    for e in edges:
        tail, head = c.edges[e]
        row = [0] * len(vertices)
        row[v_index[head]] += 1
        row[v_index[tail]] -= 1
        d1.append(row)
    d2 = []
    for f in faces:
        row = [0] * len(edges)
        for ref in c.faces[f].trail:
            row[e_index[ref.edge]] += ref.sign
        d2.append(row)
    return d1, d2, vertices, edges, faces


def boundary_matrices(c: PreComplex, p: int) -> tuple[FpMatrix, FpMatrix]:
    """(d1: edges x vertices, d2: faces x edges) over F_p.

    Row of d1 for edge e is head(e) - tail(e); row of d2 for face f is
    the net signed traversal count of each edge.  d2 . d1 = 0 mod p.
    """
    _require_prime(p)
    d1, d2, vertices, edges, faces = _integer_d1_d2(c)
    m1 = FpMatrix(
        p,
        tuple(edges),
        tuple(vertices),
        tuple(tuple(x % p for x in row) for row in d1),
    )
    m2 = FpMatrix(
        p,
        tuple(faces),
        tuple(edges),
        tuple(tuple(x % p for x in row) for row in d2),
    )
    return m1, m2


def cycle_space_dimension(c: PreComplex) -> int:
    """|E| - |V| + number of skeleton components (isolated vertices each
    count as a component)."""
    return len(c.edges) - len(c.vertices) + len(c.components())


@dataclass(frozen=True)
class HomologySummary:
    """F_p (or integral, p = "Z") first-homology data of a complex."""

    p: int | str
    rank_d1: int
    rank_d2: int
    z_c: int
    k_c: int
    h1_trivial: bool
    betti1: int | None = None
    torsion: tuple[int, ...] | None = None

    def to_doc(self) -> dict:
        doc = {
            "p": self.p,
            "rank_d1": self.rank_d1,
            "rank_d2": self.rank_d2,
            "Z_C": self.z_c,
            "k_C": self.k_c,
            "h1_trivial": self.h1_trivial,
        }
        if self.betti1 is not None:
            doc["betti1"] = self.betti1
            doc["torsion"] = list(self.torsion or ())
        return doc


def homology_summary(c: PreComplex, p: int) -> HomologySummary:
    _require_prime(p)
    d1, d2 = boundary_matrices(c, p)
    z_c = cycle_space_dimension(c)
    r2 = d2.rank()
    return HomologySummary(
        p=p,
        rank_d1=d1.rank(),
        rank_d2=r2,
        z_c=z_c,
        k_c=len(c.components()),
        h1_trivial=(r2 == z_c),
    )


def is_p_nullhomologous(c: PreComplex, p: int) -> bool:
    """H_1(c, F_p) trivial: the face boundaries span the cycle space."""
    _require_prime(p)
    _, d2 = boundary_matrices(c, p)
    return d2.rank() == cycle_space_dimension(c)


def snf_diagonal(rows: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix, as
    nonnegative integers in divisor-chain order.  Exact big-integer
    arithmetic throughout."""
    a = [list(row) for row in rows]
    m = len(a)
    n = len(a[0]) if a else 0
    diag: list[int] = []
    t = 0
    while t < min(m, n):
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (
                    piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])
                ):
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        a[t], a[i0] = a[i0], a[t]
        for row in a:
            row[t], row[j0] = row[j0], row[t]
        while True:
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        for j in range(t, n):
                            a[i][j] -= q * a[t][j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        for i in range(t, m):
                            a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        for i in range(t, m):
                            a[i][t], a[i][j] = a[i][j], a[i][t]
                        dirty = True
            if not dirty:
                break
        # pivot must divide every remaining entry; fold a violator in
        violator = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t] != 0:
                    violator = (i, j)
                    break
            if violator:
                break
        if violator:
            i0, j0 = violator
            for i in range(t, m):
                a[i][t] += a[i][j0]
            continue
        diag.append(abs(a[t][t]))
        t += 1
    for k in range(len(diag) - 1):
        assert diag[k + 1] % diag[k] == 0, "divisor chain broken"
    return diag


def h1_integral(c: PreComplex) -> tuple[int, list[int]]:
    """(betti1, torsion coefficients) of H_1(c, Z).

    The cycle lattice is a direct summand of the edge lattice, so the
    torsion of H_1 equals the nontrivial elementary divisors of d2
    itself; betti1 is the cycle-space dimension minus rank(d2).
    """
    _, d2, _, _, _ = _integer_d1_d2(c)
    divisors = snf_diagonal(d2)
    rank = len(divisors)
    betti1 = cycle_space_dimension(c) - rank
    torsion = [d for d in divisors if d > 1]
    return betti1, torsion


def integral_summary(c: PreComplex) -> HomologySummary:
    d1, d2, _, _, _ = _integer_d1_d2(c)
    betti1, torsion = h1_integral(c)
    z_c = cycle_space_dimension(c)
    rank_d2 = len(snf_diagonal(d2))
    return HomologySummary(
        p="Z",
        rank_d1=len(snf_diagonal(d1)),
        rank_d2=rank_d2,
        z_c=z_c,
        k_c=len(c.components()),
        h1_trivial=(betti1 == 0 and not torsion),
        betti1=betti1,
        torsion=tuple(torsion),
    )


# -- the Euler-type identities as an executable report -----------------------


@dataclass(frozen=True)
class EulerReport:
    """Every quantity of the double-counting identities, computed from
    first principles for one (complex, rotation system, prime)."""

    p: int
    lhs: int              # |V(C)| - |E| + |F| - |V(D)|
    z_c: int
    z_d: int
    a: int                # total cells over link complexes of C
    a_prime: int          # total cells over link complexes of D
    sum_deg_f: int
    sum_deg_e: int
    planar: bool
    eq1_holds: bool       # 2|V(C)| = 2|E| - sum deg(f) + a
    eq2_slack: int        # 2|V(D)| - (2|F| - sum deg(e) + a')
    cycle_space_identity_holds: bool  # lhs = Z_D - Z_C
    p_nullhomologous_c: bool
    p_nullhomologous_d: bool
    geq_applicable: bool
    geq_holds: bool
    geq_equality: bool
    geq_equality_matches_dual_null: bool
    dual_links_all_spheres: bool
    double_counting_holds: bool

    def to_doc(self) -> dict:
        return {
            "p": self.p,
            "lhs": self.lhs,
            "Z_C": self.z_c,
            "Z_D": self.z_d,
            "a": self.a,
            "a_prime": self.a_prime,
            "sum_deg_f": self.sum_deg_f,
            "sum_deg_e": self.sum_deg_e,
            "planar": self.planar,
            "eq1_holds": self.eq1_holds,
            "eq2_slack": self.eq2_slack,
            "cycle_space_identity_holds": self.cycle_space_identity_holds,
            "p_nullhomologous_C": self.p_nullhomologous_c,
            "p_nullhomologous_D": self.p_nullhomologous_d,
            "geq_applicable": self.geq_applicable,
            "geq_holds": self.geq_holds,
            "geq_equality": self.geq_equality,
            "geq_equality_matches_dual_null": self.geq_equality_matches_dual_null,
            "dual_links_all_spheres": self.dual_links_all_spheres,
            "double_counting_holds": self.double_counting_holds,
        }


def _total_link_cells(c: PreComplex, sigma: RotationSystem) -> tuple[int, bool]:
    """(total cells over all link complexes, every component a sphere)."""
    incidences = c.edge_incidences()
    total = 0
    all_spheres = True
    for v in sorted(c.vertices):
        tracer = link_tracer(c, v, incidences)
        cc = tracer.cell_complex(sigma)
        total += cc.num_cells()
        if not all(chi == 2 for chi in cc.chi_by_component()):
            all_spheres = False
    return total, all_spheres


def euler_identity_report(
    c: PreComplex, sigma: RotationSystem, p: int
) -> EulerReport:
    """Compute and check the double-counting identities for (c, sigma).

    Requires a connected, locally connected complex.  All fields are
    exact integers; the boolean flags state which identities held.
    """
    _require_prime(p)
    if not c.is_connected():
        raise NotConnectedError("the identities require a connected complex")
    loc, witness = is_locally_connected(c)
    if not loc:
        raise NotLocallyConnectedError(f"disconnected link at {witness!r}")

    dual = dual_complex(c, sigma)
    d = dual.complex
    nv, ne, nf = c.counts()
    nvd = len(d.vertices)
    lhs = nv - ne + nf - nvd
    z_c = cycle_space_dimension(c)
    z_d = cycle_space_dimension(d)
    sum_deg_f = sum(len(b.trail) for b in c.faces.values())
    sum_deg_e = sum(len(b.trail) for b in d.faces.values())
    assert sum_deg_f == sum_deg_e, "incidence count must be self-transpose"

    a, _ = _total_link_cells(c, sigma)
    a_prime, dual_links_all_spheres = _total_link_cells(d, dual.sigma_c)

    planar, _ = is_planar_rotation_system(c, sigma)
    eq1_holds = 2 * nv == 2 * ne - sum_deg_f + a
    eq2_slack = 2 * nvd - (2 * nf - sum_deg_e + a_prime)
    null_c = is_p_nullhomologous(c, p)
    null_d = is_p_nullhomologous(d, p)
    geq_applicable = planar and null_c
    return EulerReport(
        p=p,
        lhs=lhs,
        z_c=z_c,
        z_d=z_d,
        a=a,
        a_prime=a_prime,
        sum_deg_f=sum_deg_f,
        sum_deg_e=sum_deg_e,
        planar=planar,
        eq1_holds=eq1_holds,
        eq2_slack=eq2_slack,
        cycle_space_identity_holds=(lhs == z_d - z_c),
        p_nullhomologous_c=null_c,
        p_nullhomologous_d=null_d,
        geq_applicable=geq_applicable,
        geq_holds=(lhs >= 0) if geq_applicable else True,
        geq_equality=(lhs == 0),
        geq_equality_matches_dual_null=((lhs == 0) == null_d) if geq_applicable else True,
        dual_links_all_spheres=dual_links_all_spheres,
        double_counting_holds=(lhs <= 0 and (lhs == 0) == dual_links_all_spheres)
        if planar
        else True,
    )
