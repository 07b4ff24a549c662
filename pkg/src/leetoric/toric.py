"""Cell structure of the q^n torus and toric-code bookkeeping.

Cells are axis-aligned: a k-cell is a lower-corner position plus the k axes
it spans, with periodic wraparound mod q.  Qubits live on 2-cells for n >= 3;
in two dimensions the usual convention puts them on edges instead, and the
enumeration below follows that.  Stabilizers are plain index sets: X-type
operators sit on the cells one dimension below the qubit cells, Z-type on the
cells one dimension above, and commutation is just overlap parity.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional, Sequence

import numpy as np
from scipy.sparse import coo_matrix

Vec = tuple[int, ...]


@dataclass(frozen=True)
class Cell:
    """Axis-aligned k-cell: lower corner plus the k axes it spans."""

    position: Vec
    axes: tuple[int, ...]


@dataclass(frozen=True)
class CodeParams:
    """Quantum code parameter record [[n_code, k, d]] with capability t.

    d may be None for records that claim a correction capability without
    claiming a minimum distance (the interleaved codes do exactly that);
    when d is present, t must be the derived floor((d-1)/2).
    """

    n_code: int
    k: int
    d: Optional[int]
    t: int
    label: str

    def __post_init__(self) -> None:
        if not (self.n_code >= self.k >= 1):
            raise ValueError("need n_code >= k >= 1")
        if self.d is not None:
            if self.d < 1:
                raise ValueError("distance must be positive")
            if self.t != (self.d - 1) // 2:
                raise ValueError("t must equal floor((d-1)/2)")
        elif self.t < 0:
            raise ValueError("capability must be nonnegative")


@dataclass(frozen=True)
class StabilizerSupport:
    """One stabilizer generator as a set of qubit-cell indices."""

    kind: str  # "X" (star) or "Z" (boundary)
    anchor: Cell
    support: tuple[int, ...]


def qubit_cell_dim(n: int) -> int:
    """Dimension of the cells carrying qubits: 2-cells, except edges in 2D."""
    if n < 2:
        raise ValueError("torus dimension must be at least 2")
    return 2 if n >= 3 else 1


def axes_tuples(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All sorted k-subsets of the n axes, in lexicographic order."""
    return tuple(combinations(range(n), k))


def position_rank(point: Sequence[int], q: int) -> int:
    """Row-major rank of a torus point (first coordinate most significant)."""
    r = 0
    for x in point:
        r = r * q + int(x) % q
    return r


def position_unrank(rank: int, q: int, n: int) -> Vec:
    coords = []
    for _ in range(n):
        rank, x = divmod(rank, q)
        coords.append(x)
    return tuple(reversed(coords))


def enumerate_faces(q: int, n: int) -> tuple[Cell, ...]:
    """All qubit cells in index order: lexicographic axes, then position."""
    if q < 2 or n < 2:
        raise ValueError("need q >= 2 and n >= 2")
    k = qubit_cell_dim(n)
    return tuple(
        Cell(position=pos, axes=axes)
        for axes in axes_tuples(n, k)
        for pos in product(range(q), repeat=n)
    )


def face_index(q: int, n: int, cell: Cell) -> int:
    """Index of a qubit cell under the enumerate_faces order."""
    k = qubit_cell_dim(n)
    pairs = axes_tuples(n, k)
    try:
        a = pairs.index(cell.axes)
    except ValueError:
        raise ValueError("invalid face axes") from None
    if len(cell.position) != n:
        raise ValueError("invalid face position")
    return a * q**n + position_rank(cell.position, q)


def face_from_index(q: int, n: int, index: int) -> Cell:
    """Inverse of face_index."""
    k = qubit_cell_dim(n)
    pairs = axes_tuples(n, k)
    a, r = divmod(index, q**n)
    if not (0 <= a < len(pairs)) or index < 0:
        raise ValueError("face index out of range")
    return Cell(position=position_unrank(r, q, n), axes=pairs[a])


def face_owner(face: Cell) -> Vec:
    """The hypercube owning a qubit cell: the one at its lower corner."""
    return face.position


def _check_anchor(q: int, n: int, anchor: Cell, want_dim: int) -> Vec:
    axes = anchor.axes
    if len(axes) != want_dim or list(axes) != sorted(set(axes)):
        raise ValueError("invalid anchor")
    if any(a < 0 or a >= n for a in axes):
        raise ValueError("invalid anchor")
    if len(anchor.position) != n:
        raise ValueError("invalid anchor")
    return tuple(int(x) % q for x in anchor.position)


def star_support(q: int, n: int, anchor: Cell) -> StabilizerSupport:
    """X-type support: all qubit cells containing the anchor cell.

    The anchor lives one dimension below the qubit cells (a vertex in 2D, an
    edge otherwise), and each free axis contributes the two qubit cells on
    either side of it, so the support size is 2(n - k + 1).
    """
    k = qubit_cell_dim(n)
    pos = _check_anchor(q, n, anchor, k - 1)
    idx = []
    for a in range(n):
        if a in anchor.axes:
            continue
        axes = tuple(sorted(anchor.axes + (a,)))
        shifted = tuple(x - (i == a) for i, x in enumerate(pos))
        idx.append(face_index(q, n, Cell(pos, axes)))
        idx.append(face_index(q, n, Cell(tuple(x % q for x in shifted), axes)))
    return StabilizerSupport(kind="X", anchor=anchor, support=tuple(sorted(idx)))


def boundary_support(q: int, n: int, anchor: Cell) -> StabilizerSupport:
    """Z-type support: the qubit cells on the boundary of the anchor cell.

    The anchor lives one dimension above the qubit cells (a face in 2D, a
    cube or 3-cell otherwise); dropping each spanned axis gives a near and a
    far side, so the support size is 2(k + 1).
    """
    k = qubit_cell_dim(n)
    pos = _check_anchor(q, n, anchor, k + 1)
    idx = []
    for a in anchor.axes:
        axes = tuple(x for x in anchor.axes if x != a)
        shifted = tuple(x + (i == a) for i, x in enumerate(pos))
        idx.append(face_index(q, n, Cell(pos, axes)))
        idx.append(face_index(q, n, Cell(tuple(x % q for x in shifted), axes)))
    return StabilizerSupport(kind="Z", anchor=anchor, support=tuple(sorted(idx)))


def _support_matrix(q: int, n: int, kind: str) -> coo_matrix:
    # One row per anchor cell, one column per qubit cell.
    k = qubit_cell_dim(n)
    dim = k - 1 if kind == "X" else k + 1
    build = star_support if kind == "X" else boundary_support
    anchors = [
        Cell(position=pos, axes=axes)
        for axes in axes_tuples(n, dim)
        for pos in product(range(q), repeat=n)
    ]
    rows, cols = [], []
    for r, anchor in enumerate(anchors):
        for c in build(q, n, anchor).support:
            rows.append(r)
            cols.append(c)
    n_qubits = len(axes_tuples(n, k)) * q**n
    data = np.ones(len(rows), dtype=np.int64)
    return coo_matrix((data, (rows, cols)), shape=(len(anchors), n_qubits))


def commutation_check(q: int, n: int) -> bool:
    """Whether every X-type and Z-type pair overlaps on an even qubit count."""
    if q < 2 or n < 2:
        raise ValueError("need q >= 2 and n >= 2")
    hx = _support_matrix(q, n, "X").tocsr()
    hz = _support_matrix(q, n, "Z").tocsr()
    overlap = hx @ hz.T
    return not np.any(overlap.data % 2)


def literature_params(q: int, n: int) -> CodeParams:
    """Parameter record of the standard toric code on the q^n torus."""
    if q < 2:
        raise ValueError("need q >= 2")
    if n == 2:
        n_code, k, d = 2 * q**2, 2, q
    elif n == 3:
        n_code, k, d = 3 * q**3, 3, q
    elif n == 4:
        n_code, k, d = 6 * q**4, 6, q**2
    else:
        raise ValueError("unsupported dimension")
    return CodeParams(
        n_code=n_code, k=k, d=d, t=(d - 1) // 2, label=f"toric-{n}d-q{q}"
    )


def new_code_params(q: int, n: int) -> CodeParams:
    """Parameter record of the Lee-sphere-based code on the certified tori."""
    if (q, n) == (7, 3):
        n_code, k = 3 * q, 3
    elif (q, n) == (9, 4):
        n_code, k = 6 * q, 6
    else:
        raise ValueError("not certified")
    return CodeParams(n_code=n_code, k=k, d=3, t=1, label=f"lee-{n}d-q{q}")
