from __future__ import annotations

import random
from collections import Counter
from itertools import combinations, product

import pytest

from leetoric import (
    Cell,
    CodeParams,
    boundary_support,
    commutation_check,
    enumerate_faces,
    face_from_index,
    face_index,
    face_owner,
    literature_params,
    minimum_distance,
    new_code_params,
    star_support,
)
from leetoric.toric import position_rank, position_unrank, qubit_cell_dim


def cell_vertices(cell: Cell, q: int) -> frozenset:
    """All corners of a cell, as torus points; independent incidence oracle."""
    verts = []
    for picks in product((0, 1), repeat=len(cell.axes)):
        p = list(cell.position)
        for bit, axis in zip(picks, cell.axes):
            p[axis] = (p[axis] + bit) % q
        verts.append(tuple(p))
    return frozenset(verts)


@pytest.mark.parametrize(
    "q,n,count", [(7, 3, 1029), (9, 4, 39366), (5, 2, 50), (3, 4, 486), (2, 3, 24)]
)
def test_face_counts(q, n, count):
    assert len(enumerate_faces(q, n)) == count


def test_enumerate_faces_validation():
    with pytest.raises(ValueError):
        enumerate_faces(1, 3)
    with pytest.raises(ValueError):
        enumerate_faces(5, 1)


@pytest.mark.parametrize("q,n", [(5, 2), (7, 3)])
def test_enumeration_order_matches_index(q, n):
    for i, face in enumerate(enumerate_faces(q, n)):
        assert face_index(q, n, face) == i


@pytest.mark.parametrize("q,n", [(7, 3), (9, 4)])
def test_index_bijection_full(q, n):
    total = len(enumerate_faces(q, n))
    for i in range(total):
        face = face_from_index(q, n, i)
        assert face_index(q, n, face) == i


def test_face_index_errors():
    with pytest.raises(ValueError):
        face_index(7, 3, Cell((0, 0, 0), (0, 3)))
    with pytest.raises(ValueError):
        face_index(7, 3, Cell((0, 0), (0, 1)))
    with pytest.raises(ValueError):
        face_from_index(7, 3, 1029)


@pytest.mark.parametrize("q,n,per_cube", [(7, 3, 3), (9, 4, 6), (5, 2, 2)])
def test_owner_partition(q, n, per_cube):
    owners = Counter(face_owner(f) for f in enumerate_faces(q, n))
    assert len(owners) == q**n
    assert set(owners.values()) == {per_cube}


def test_face_owner_is_lower_corner():
    f = Cell((1, 2, 3), (0, 1))
    assert face_owner(f) == (1, 2, 3)


@pytest.mark.parametrize(
    "q,n,star_size,boundary_size",
    [(5, 2, 4, 4), (7, 3, 4, 6), (3, 4, 6, 6), (9, 4, 6, 6)],
)
def test_support_sizes(q, n, star_size, boundary_size):
    rng = random.Random(n * 100 + q)
    k = qubit_cell_dim(n)
    total = len(list(combinations(range(n), k))) * q**n
    for _ in range(25):
        pos = tuple(rng.randrange(q) for _ in range(n))
        star_axes = tuple(sorted(rng.sample(range(n), k - 1)))
        star = star_support(q, n, Cell(pos, star_axes))
        assert star.kind == "X"
        assert len(star.support) == star_size
        assert len(set(star.support)) == star_size
        assert all(0 <= i < total for i in star.support)

        bound_axes = tuple(sorted(rng.sample(range(n), k + 1)))
        bound = boundary_support(q, n, Cell(pos, bound_axes))
        assert bound.kind == "Z"
        assert len(bound.support) == boundary_size
        assert len(set(bound.support)) == boundary_size
        assert all(0 <= i < total for i in bound.support)


@pytest.mark.parametrize("q,n", [(5, 2), (7, 3), (3, 4)])
def test_star_members_contain_anchor(q, n):
    # vertex-set incidence oracle: a qubit cell is in the star of an anchor
    # exactly when its corner set contains all the anchor's corners
    rng = random.Random(q * n)
    k = qubit_cell_dim(n)
    for _ in range(20):
        pos = tuple(rng.randrange(q) for _ in range(n))
        anchor = Cell(pos, tuple(sorted(rng.sample(range(n), k - 1))))
        anchor_verts = cell_vertices(anchor, q)
        support = star_support(q, n, anchor).support
        for idx in support:
            face = face_from_index(q, n, idx)
            assert anchor_verts <= cell_vertices(face, q)
        # completeness: no other qubit cell contains the anchor
        contained = [
            i
            for i, face in enumerate(enumerate_faces(q, n))
            if anchor_verts <= cell_vertices(face, q)
        ]
        assert sorted(support) == contained


@pytest.mark.parametrize("q,n", [(5, 2), (7, 3), (3, 4)])
def test_boundary_members_lie_on_anchor(q, n):
    rng = random.Random(q + 31 * n)
    k = qubit_cell_dim(n)
    for _ in range(20):
        pos = tuple(rng.randrange(q) for _ in range(n))
        anchor = Cell(pos, tuple(sorted(rng.sample(range(n), k + 1))))
        anchor_verts = cell_vertices(anchor, q)
        support = boundary_support(q, n, anchor).support
        for idx in support:
            face = face_from_index(q, n, idx)
            assert cell_vertices(face, q) <= anchor_verts
        contained = [
            i
            for i, face in enumerate(enumerate_faces(q, n))
            if cell_vertices(face, q) <= anchor_verts
        ]
        assert sorted(support) == contained


def test_invalid_anchor_rejected():
    with pytest.raises(ValueError, match="invalid anchor"):
        star_support(7, 3, Cell((0, 0, 0), (0, 1)))
    with pytest.raises(ValueError, match="invalid anchor"):
        star_support(7, 3, Cell((0, 0), (0,)))
    with pytest.raises(ValueError, match="invalid anchor"):
        boundary_support(7, 3, Cell((0, 0, 0), (0, 1)))
    with pytest.raises(ValueError, match="invalid anchor"):
        boundary_support(7, 3, Cell((0, 0, 0), (0, 1, 3)))
    with pytest.raises(ValueError, match="invalid anchor"):
        star_support(5, 2, Cell((0, 0), (1, 1)))


@pytest.mark.parametrize("q,n", [(5, 2), (7, 3), (3, 4), (9, 4)])
def test_commutation_check_true(q, n):
    assert commutation_check(q, n)


@pytest.mark.parametrize("q", [3, 5])
def test_commutation_matches_brute_force_2d(q):
    # re-derive the overlap parity with plain set intersections
    stars = [
        set(star_support(q, 2, Cell(pos, ())).support)
        for pos in product(range(q), repeat=2)
    ]
    bounds = [
        set(boundary_support(q, 2, Cell(pos, (0, 1))).support)
        for pos in product(range(q), repeat=2)
    ]
    parity_ok = all(
        len(s & b) % 2 == 0 for s in stars for b in bounds
    )
    assert parity_ok == commutation_check(q, 2)
    assert parity_ok


def test_literature_params_frozen():
    p3 = literature_params(7, 3)
    assert (p3.n_code, p3.k, p3.d, p3.t) == (1029, 3, 7, 3)
    p4 = literature_params(9, 4)
    assert (p4.n_code, p4.k, p4.d, p4.t) == (39366, 6, 81, 40)
    p2 = literature_params(5, 2)
    assert (p2.n_code, p2.k, p2.d, p2.t) == (50, 2, 5, 2)
    with pytest.raises(ValueError):
        literature_params(1, 3)
    with pytest.raises(ValueError):
        literature_params(7, 5)


def test_new_code_params_frozen():
    p3 = new_code_params(7, 3)
    assert (p3.n_code, p3.k, p3.d, p3.t) == (21, 3, 3, 1)
    p4 = new_code_params(9, 4)
    assert (p4.n_code, p4.k, p4.d, p4.t) == (54, 6, 3, 1)
    with pytest.raises(ValueError, match="not certified"):
        new_code_params(5, 3)


def test_new_code_distance_matches_lee_code(code3, code4):
    assert new_code_params(7, 3).d == minimum_distance(code3)
    assert new_code_params(9, 4).d == minimum_distance(code4)


def test_code_params_validation():
    with pytest.raises(ValueError):
        CodeParams(n_code=10, k=2, d=3, t=2, label="bad-t")
    with pytest.raises(ValueError):
        CodeParams(n_code=10, k=2, d=0, t=0, label="bad-d")
    with pytest.raises(ValueError):
        CodeParams(n_code=1, k=2, d=3, t=1, label="bad-k")
    with pytest.raises(ValueError):
        CodeParams(n_code=10, k=2, d=None, t=-1, label="bad-cap")
    capability_only = CodeParams(n_code=10, k=2, d=None, t=5, label="ok")
    assert capability_only.d is None and capability_only.t == 5


def test_qubit_cell_dim_convention():
    assert qubit_cell_dim(2) == 1
    assert qubit_cell_dim(3) == 2
    assert qubit_cell_dim(4) == 2
    with pytest.raises(ValueError):
        qubit_cell_dim(1)


def test_position_rank_roundtrip():
    rng = random.Random(5)
    for _ in range(50):
        q = rng.choice((2, 3, 5, 7, 9))
        n = rng.choice((1, 2, 3, 4))
        p = tuple(rng.randrange(q) for _ in range(n))
        assert position_unrank(position_rank(p, q), q, n) == p
