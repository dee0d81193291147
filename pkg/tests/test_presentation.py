import pytest

from rotsys import h1_integral, pi1_trivial_heuristic
from rotsys.errors import NotConnectedError
from rotsys.presentation import cyclic_reduce, free_reduce, invert


def test_free_reduce():
    assert free_reduce((1, -1)) == ()
    assert free_reduce((1, 2, -2, -1)) == ()
    assert free_reduce((1, 2, -2, 3)) == (1, 3)


def test_cyclic_reduce():
    assert cyclic_reduce((1, 2, -1)) == (2,)
    assert cyclic_reduce((1, 2, 3, -1)) == (2, 3)


def test_invert():
    assert invert((1, -2, 3)) == (-3, 2, -1)


def test_tetrahedron_trivial(complexes):
    v = pi1_trivial_heuristic(complexes["tetrahedron"])
    assert v.status == "trivial"
    assert v.generators_before == 3
    assert v.relators_before == 4
    assert v.generators_after == 0
    assert v.steps_used <= v.budget


def test_triangle_and_bowtie_trivial(complexes):
    assert pi1_trivial_heuristic(complexes["triangle"]).status == "trivial"
    assert pi1_trivial_heuristic(complexes["bowtie"]).status == "trivial"
    assert pi1_trivial_heuristic(complexes["book3"]).status == "trivial"


def test_rp2_never_trivial(complexes):
    v = pi1_trivial_heuristic(complexes["rp2-6"])
    assert v.status == "unknown"


def test_torus_never_trivial(complexes):
    v = pi1_trivial_heuristic(complexes["torus-7"])
    assert v.status == "unknown"


def test_soundness_on_nontrivial_h1(complexes):
    # a trivial answer is impossible whenever integral H1 is nontrivial
    for name in ("rp2-6", "torus-7"):
        c = complexes[name]
        betti, torsion = h1_integral(c)
        assert betti > 0 or torsion
        for budget in (10, 1000, 100_000):
            assert pi1_trivial_heuristic(c, budget).status == "unknown"


def test_budget_respected(complexes):
    v = pi1_trivial_heuristic(complexes["rp2-6"], budget=5)
    assert v.status == "unknown"
    assert v.steps_used <= 5


def test_requires_connected():
    import make_fixtures

    two = make_fixtures._triangle_complex(6, [(0, 1, 2), (3, 4, 5)])
    with pytest.raises(NotConnectedError):
        pi1_trivial_heuristic(two)
