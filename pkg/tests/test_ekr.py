import pytest

from bruteforce import max_clique_brute
from qkneser.ekr import (
    is_independent,
    max_independent_set_exact,
    maximum_independent_sets,
    nest_family,
    point_pencil,
    write_vertex_set,
)
from qkneser.errors import DimMismatchError, OutOfRangeError
from qkneser.families import complete_graph, random_graph
from qkneser.gf import make_field
from qkneser.graph import build_qkneser
from qkneser.qcount import Params, alpha_formula, gauss
from qkneser.subspace import canonicalize, enumerate_subspaces
from qkneser.verify import unit_subspace


@pytest.fixture(scope="module")
def k2421():
    return build_qkneser(Params(4, 2, 1, 2))


# ---------------------------------------------------------------------------
# extremal families
# ---------------------------------------------------------------------------

def test_point_pencil_sizes(k2421):
    pencil = point_pencil(k2421, unit_subspace(2, 4, 1))
    assert pencil.bit_count() == 7 == gauss(3, 1, 2)
    assert is_independent(k2421, pencil)
    g5 = build_qkneser(Params(5, 2, 1, 2))
    pencil5 = point_pencil(g5, unit_subspace(2, 5, 1))
    assert pencil5.bit_count() == 15 == gauss(4, 1, 2)
    assert is_independent(g5, pencil5)


def test_point_pencil_any_center(k2421):
    # size and independence are invariant under the choice of t-subspace
    f2 = make_field(2)
    for t_space in enumerate_subspaces(f2, 4, 1):
        pencil = point_pencil(k2421, t_space)
        assert pencil.bit_count() == 7
        assert is_independent(k2421, pencil)


def test_point_pencil_dim_mismatch(k2421):
    with pytest.raises(DimMismatchError):
        point_pencil(k2421, unit_subspace(2, 4, 2))


def test_nest_family(k2421):
    nest = nest_family(k2421, unit_subspace(2, 4, 3))
    assert nest.bit_count() == 7 == gauss(3, 2, 2)
    assert is_independent(k2421, nest)
    g63 = build_qkneser(Params(6, 3, 2, 2))
    nest63 = nest_family(g63, unit_subspace(2, 6, 4))
    assert nest63.bit_count() == 15 == gauss(4, 3, 2)
    assert is_independent(g63, nest63)


def test_nest_family_requires_n_equals_2k():
    g = build_qkneser(Params(5, 2, 1, 2))
    with pytest.raises(OutOfRangeError):
        nest_family(g, unit_subspace(2, 5, 4))


def test_nest_family_dim_mismatch(k2421):
    with pytest.raises(DimMismatchError):
        nest_family(k2421, unit_subspace(2, 4, 2))


# ---------------------------------------------------------------------------
# independence predicate
# ---------------------------------------------------------------------------

def test_is_independent_basics(k2421):
    assert is_independent(k2421, 0)
    assert is_independent(k2421, 1 << 3)
    u = 0
    v = (k2421.rows[0] & -k2421.rows[0]).bit_length() - 1
    assert not is_independent(k2421, (1 << u) | (1 << v))


# ---------------------------------------------------------------------------
# exact solver
# ---------------------------------------------------------------------------

def test_mis_matches_alpha_formula(k2421):
    r = max_independent_set_exact(k2421)
    assert r.exact and r.size == 7 == alpha_formula(Params(4, 2, 1, 2))
    assert r.members.bit_count() == 7
    assert is_independent(k2421, r.members)


def test_mis_on_complete_graph():
    r = max_independent_set_exact(complete_graph(9))
    assert r.exact and r.size == 1


def test_mis_budget_exhaustion_is_flagged(k2421):
    r = max_independent_set_exact(k2421, node_budget=0)
    assert not r.exact
    assert 1 <= r.size <= 7
    assert is_independent(k2421, r.members)


def test_mis_agrees_with_brute_force_clique_of_complement():
    for seed, m in ((1, 18), (2, 19), (3, 20)):
        g = random_graph(m, 0.5, seed)
        r = max_independent_set_exact(g)
        assert r.exact
        assert r.size == max_clique_brute(g.complement())


# ---------------------------------------------------------------------------
# classification of all maximum independent sets at n = 2k
# ---------------------------------------------------------------------------

def test_k2421_maximum_independent_sets_are_pencils_or_nests(k2421):
    f2 = make_field(2)
    maxima = maximum_independent_sets(k2421)
    assert all(s.bit_count() == 7 for s in maxima)
    pencils = {point_pencil(k2421, t) for t in enumerate_subspaces(f2, 4, 1)}
    nests = {nest_family(k2421, w) for w in enumerate_subspaces(f2, 4, 3)}
    assert len(pencils) == 15 and len(nests) == 15
    assert not pencils & nests
    assert set(maxima) == pencils | nests
    assert len(maxima) == 30


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def test_write_vertex_set(tmp_path):
    path = tmp_path / "witness.txt"
    write_vertex_set(0b101001, path)
    assert path.read_text() == "1\n4\n6\n"
