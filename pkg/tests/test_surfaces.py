from rotsys import (
    OrientedFace,
    dual_complex,
    iota_check,
    local_surfaces,
    surface_duality_check,
    trace_link_complex,
    validate,
)
from rotsys.rotation import canonical_rotation_system, enumerate_rotation_systems


def check_orientability(c, surfaces):
    """Every glued edge is traversed forwards by the positive-side
    member and backwards by the negative-side member."""
    from rotsys.surfaces import polygon_refs

    for s in surfaces:
        for g in s.gluings:
            pos_ref = polygon_refs(c, g.pos_member)[g.pos_side]
            neg_ref = polygon_refs(c, g.neg_member)[g.neg_side]
            assert pos_ref.edge == g.edge and pos_ref.sign == 1
            assert neg_ref.edge == g.edge and neg_ref.sign == -1


def check_gluing_multiset(c, surfaces):
    """d gluings mention an edge of degree d >= 2; one for d = 1."""
    mentions = {}
    for s in surfaces:
        for g in s.gluings:
            mentions[g.edge] = mentions.get(g.edge, 0) + 1
    for e, incs in c.edge_incidences().items():
        d = len(incs)
        expected = 1 if d == 1 else d
        assert mentions.get(e, 0) == expected, e


def test_triangle_disc(complexes):
    c = complexes["triangle"]
    (s,) = local_surfaces(c, canonical_rotation_system(c))
    assert len(s.members) == 2
    assert s.chi == 2 and s.genus == 0
    assert len(s.vertices) == 3


def test_tetrahedron_two_sphere_classes(complexes):
    c = complexes["tetrahedron"]
    surfaces = local_surfaces(c, canonical_rotation_system(c))
    assert len(surfaces) == 2
    for s in surfaces:
        assert len(s.members) == 4
        assert s.genus == 0
    # the two classes are the two orientations: no face orientation in both
    seen = set()
    for s in surfaces:
        seen |= set(s.members)
    assert len(seen) == 8


def test_rp2_orientation_double_cover(complexes):
    c = complexes["rp2-6"]
    (s,) = local_surfaces(c, canonical_rotation_system(c))
    assert len(s.members) == 20
    assert len(s.gluings) == 30
    assert len(s.vertices) == 12
    assert s.chi == 2 and s.genus == 0


def test_torus7_two_genus_one_classes(complexes):
    c = complexes["torus-7"]
    surfaces = local_surfaces(c, canonical_rotation_system(c))
    assert len(surfaces) == 2
    for s in surfaces:
        assert len(s.members) == 14
        assert s.chi == 0 and s.genus == 1


def test_invariants_on_fixtures(complexes):
    for name in ("triangle", "tetrahedron", "book3", "rp2-6", "torus-7", "bowtie"):
        c = complexes[name]
        sigma = canonical_rotation_system(c)
        surfaces = local_surfaces(c, sigma)
        check_orientability(c, surfaces)
        check_gluing_multiset(c, surfaces)
        for s in surfaces:
            # connected by construction; the traced complex agrees
            assert len(s.cell_complex().component_partition()) == 1


def test_local_surface_as_complex_is_closed(complexes):
    c = complexes["tetrahedron"]
    sigma = canonical_rotation_system(c)
    for s in local_surfaces(c, sigma):
        sc = s.as_complex()
        assert validate(sc) == []
        # closed: every edge of the surface lies in exactly two faces
        for e, incs in sc.edge_incidences().items():
            assert len(incs) == 2, e


def test_dual_counts(complexes):
    expected = {
        "tetrahedron": (2, 4, 6),
        "rp2-6": (1, 10, 15),
        "torus-7": (2, 14, 21),
        "book3": (1, 3, 7),
    }
    for name, counts in expected.items():
        c = complexes[name]
        d = dual_complex(c, canonical_rotation_system(c)).complex
        assert d.counts() == counts, name
        assert validate(d) == []


def test_dual_incidence_transpose(complexes):
    for name in ("tetrahedron", "book3", "rp2-6", "torus-7"):
        c = complexes[name]
        d = dual_complex(c, canonical_rotation_system(c)).complex
        primal = sorted(
            (ref.edge, f) for f, b in c.faces.items() for ref in b.trail
        )
        # a dual face is a primal edge; its trail runs over primal faces
        dual_inc = [
            (ref.edge, e) for e, b in d.faces.items() for ref in b.trail
        ]
        assert sorted((e, f) for f, e in dual_inc) == primal, name


def test_dual_edge_direction_rule(complexes):
    c = complexes["tetrahedron"]
    dual = dual_complex(c, canonical_rotation_system(c))
    for f in c.faces:
        tail, head = dual.complex.edges[f]
        assert dual.class_of[OrientedFace(f, 1)] == head
        assert dual.class_of[OrientedFace(f, -1)] == tail


def test_dual_sigma_is_valid_rotation_system(complexes):
    from rotsys.rotation import check_rotation_system

    for name in ("tetrahedron", "book3", "rp2-6", "torus-7"):
        c = complexes[name]
        dual = dual_complex(c, canonical_rotation_system(c))
        check_rotation_system(dual.complex, dual.sigma_c)


def test_iota_counts(complexes):
    expected = {"tetrahedron": 8, "book3": 5, "rp2-6": 12}
    for name, n in expected.items():
        c = complexes[name]
        report = iota_check(c, canonical_rotation_system(c))
        assert report.surface_vertices == n
        assert report.link_cells == n
        assert report.matched == n


def test_surface_duality_on_fixtures(complexes):
    for name in ("triangle", "tetrahedron", "book3", "rp2-6", "torus-7"):
        c = complexes[name]
        sigma = canonical_rotation_system(c)
        out = surface_duality_check(c, sigma)
        assert set(out.values()) <= {"direct", "mirror"}, name


def test_identities_across_all_book3_systems(complexes):
    c = complexes["book3"]
    for sigma in enumerate_rotation_systems(c):
        iota_check(c, sigma)
        surface_duality_check(c, sigma)


def test_dual_link_complexes_of_torus_are_tori(complexes):
    c = complexes["torus-7"]
    dual = dual_complex(c, canonical_rotation_system(c))
    from rotsys import is_sphere_union

    for s in dual.surfaces:
        cc = trace_link_complex(dual.complex, dual.sigma_c, s.id)
        assert cc.chi() == 0
        assert (cc.num_vertices(), cc.num_edges(), cc.num_cells()) == (14, 21, 7)
        assert not is_sphere_union(cc)
