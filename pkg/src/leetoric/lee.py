"""Perfect radius-1 Lee-sphere codes in Z_q^n.

Codewords are the additive closure mod q of a handful of generator vectors.
Distances use the Mannheim weight (sum of absolute symmetric residues), the
sphere of radius 1 around each codeword is the cross shape {0, +/-e_i}, and
perfection means those spheres tile Z_q^n with no gaps and no overlaps.
Decoding a point of a perfect code returns its unique covering codeword plus
the offset index, which doubles as the point's cross-section label.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

Vec = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class LeeCode:
    """Group code in Z_q^n, enumerated once and immutable afterwards.

    Identity semantics (eq=False): decode tables are cached per enumerated
    instance, so hashing stays O(1) instead of rehashing the codeword tuple
    on every decode.
    """

    q: int
    n: int
    generators: tuple[Vec, ...]
    codewords: tuple[Vec, ...]

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError("modulus must be at least 2")
        if self.n < 1:
            raise ValueError("dimension must be positive")


@dataclass(frozen=True)
class LeeSphere:
    """Radius-1 sphere offsets in the fixed order (0, +e1, -e1, +e2, ...)."""

    n: int
    offsets: tuple[Vec, ...]


@dataclass(frozen=True)
class DecodeResult:
    codeword: Vec
    offset_index: int


def symmetric_residue(x: int, q: int) -> int:
    """Representative of x mod q in [-(q-1)/2, (q-1)/2], for odd q."""
    if q < 3 or q % 2 == 0:
        raise ValueError("symmetric residue undefined")
    r = x % q
    return r - q if r > (q - 1) // 2 else r


def mannheim_weight(v: Sequence[int], q: int) -> int:
    """Sum of absolute symmetric residues of the coordinates."""
    return sum(abs(symmetric_residue(x, q)) for x in v)


def enumerate_codewords(generators: Sequence[Sequence[int]], q: int, n: int) -> LeeCode:
    """Additive closure mod q of the generators, in deterministic BFS order.

    The closure of a finite set under addition mod q is the subgroup it
    generates, so the result always contains 0 (first) and is closed under
    addition.  Enumeration order is stable: breadth-first from 0, generators
    applied in the order given.
    """
    if not generators:
        raise ValueError("generators must be nonempty")
    if q < 2:
        raise ValueError("modulus must be at least 2")
    gens = []
    for g in generators:
        if len(g) != n:
            raise ValueError("generator dimension mismatch")
        gens.append(tuple(int(x) % q for x in g))
    zero = (0,) * n
    seen = {zero}
    order = [zero]
    head = 0
    while head < len(order):
        p = order[head]
        head += 1
        for g in gens:
            s = tuple((a + b) % q for a, b in zip(p, g))
            if s not in seen:
                seen.add(s)
                order.append(s)
    return LeeCode(q=q, n=n, generators=tuple(gens), codewords=tuple(order))


def minimum_distance(code: LeeCode) -> int:
    """Minimum Mannheim weight over the nonzero codewords, by full sweep.

    For a group code this equals the minimum pairwise distance.
    """
    nonzero = [c for c in code.codewords if any(c)]
    if not nonzero:
        raise ValueError("distance undefined")
    return min(mannheim_weight(c, code.q) for c in nonzero)


def lee_sphere(n: int) -> LeeSphere:
    """The 2n+1 radius-1 offsets: zero first, then +e_i, -e_i per axis."""
    if n < 1:
        raise ValueError("dimension must be positive")
    offs: list[Vec] = [(0,) * n]
    for i in range(n):
        for s in (1, -1):
            v = [0] * n
            v[i] = s
            offs.append(tuple(v))
    return LeeSphere(n=n, offsets=tuple(offs))


def _rank(point: Vec, q: int) -> int:
    r = 0
    for x in point:
        r = r * q + x
    return r


def tiling_check(code: LeeCode) -> bool:
    """True iff the radius-1 spheres around the codewords tile Z_q^n exactly."""
    q, n = code.q, code.n
    offsets = lee_sphere(n).offsets
    cover = bytearray(q**n)
    placed = 0
    for c in code.codewords:
        for o in offsets:
            r = _rank(tuple((a + b) % q for a, b in zip(c, o)), q)
            if cover[r]:
                return False
            cover[r] = 1
            placed += 1
    return placed == q**n


@lru_cache(maxsize=None)
def _decode_table(code: LeeCode) -> dict[Vec, tuple[Vec, int]]:
    # Full lookup table point -> (codeword, offset_index); building it is
    # itself the perfection check, so decode errors surface eagerly.
    q, n = code.q, code.n
    offsets = lee_sphere(n).offsets
    table: dict[Vec, tuple[Vec, int]] = {}
    for c in code.codewords:
        for j, o in enumerate(offsets):
            p = tuple((a + b) % q for a, b in zip(c, o))
            if p in table:
                raise ValueError("decoding not unique")
            table[p] = (c, j)
    if len(table) != q**n:
        raise ValueError("decoding not unique")
    return table


def decode_nearest(point: Sequence[int], code: LeeCode) -> DecodeResult:
    """Unique covering codeword and cross-section label of a point.

    Only defined for perfect codes; anything else raises, because two
    codewords would then compete for (or none would cover) some point.
    """
    if len(point) != code.n:
        raise ValueError("dimension mismatch")
    p = tuple(int(x) % code.q for x in point)
    codeword, j = _decode_table(code)[p]
    return DecodeResult(codeword=codeword, offset_index=j)
