"""Exact Cayley-graph exploration at desk scale.

Breadth-first search over a finite matrix group measures the word length
of every element with respect to a generating set (symmetrized with the
inverses), yielding the diameter, per-distance histograms, shortest-word
witnesses, transvection balls, and the maximal transvection-length of a
group containing transvections.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    BadParameters,
    CapExceeded,
    DimensionMismatch,
    FieldMismatch,
    NotExplored,
    NotFound,
    NotTransvection,
    Singular,
)
from .gf import Field
from .linalg import Mat
from .transvections import Transvection, tv_from_matrix

Word = tuple

# Default exploration budget.  Each stored element costs one bytes key of
# n^2 field entries (16 bytes at n = 4 over a one-byte field) plus the
# distance and parent entries, so 10^7 elements stay within desk memory.
DEFAULT_CAP = 10**7


def _encode(M: Mat) -> bytes:
    """Canonical element key: row-major entries, each packed little-endian
    in the minimal fixed byte width of the field."""
    q = M.F.q
    width = max(1, ((q - 1).bit_length() + 7) // 8)
    out = bytearray()
    for row in M.rows:
        for x in row:
            out += x.to_bytes(width, "little")
    return bytes(out)


def _check_generators(X: Sequence[Mat]) -> tuple[Field, int]:
    if not X:
        raise BadParameters("need at least one generator")
    F = X[0].F
    n = X[0].nrows
    for M in X:
        if M.F != F:
            raise FieldMismatch("generators over different fields")
        if M.nrows != n or M.ncols != n:
            raise DimensionMismatch("generators of different sizes")
        if M.det() == 0:
            raise Singular("generators must be invertible")
    return F, n


def _symmetrize(X: Sequence[Mat]) -> list[tuple[Mat, int, int]]:
    """The step list X followed by the inverses that are new matrices,
    each tagged (matrix, generator index, exponent)."""
    steps = [(M, i, 1) for i, M in enumerate(X)]
    keys = {_encode(M) for M in X}
    for i, M in enumerate(X):
        Minv = M.inv()
        k = _encode(Minv)
        if k not in keys:
            keys.add(k)
            steps.append((Minv, i, -1))
    return steps


@dataclass(frozen=True)
class CayleyExploration:
    """Exact distances from the identity in the Cayley graph of <X> with
    respect to X and the inverses.

    `dist` maps the canonical byte key of each element to its distance,
    `parents` to (step index, parent key) along one shortest path (None at
    the identity), and `steps` lists the symmetrized generators as
    (matrix, index into X, exponent).  The histogram counts elements per
    distance, so the diameter is len(histogram) - 1."""

    F: Field
    n: int
    X: tuple[Mat, ...]
    steps: tuple[tuple[Mat, int, int], ...]
    dist: Mapping[bytes, int]
    parents: Mapping[bytes, tuple[int, bytes] | None]
    diameter: int
    histogram: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.dist)

    def encode(self, M: Mat) -> bytes:
        return _encode(M)

    def distance(self, g: Mat) -> int:
        key = _encode(g)
        if key not in self.dist:
            raise NotExplored("element not reached by the exploration")
        return self.dist[key]

    def __contains__(self, g: Mat) -> bool:
        return _encode(g) in self.dist

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "diameter": self.diameter,
            "histogram": list(self.histogram),
        }


def bfs_explore(X: Sequence[Mat], cap: int = DEFAULT_CAP) -> CayleyExploration:
    """Layered breadth-first search of <X> from the identity.

    Distances are taken over X and the inverses, so dist(g) = dist(g^-1)
    whenever the generating set is closed enough to matter.  Expansion is
    in deterministic insertion order (frontier order, then step order);
    identical inputs give identical distance maps.  Raises CapExceeded
    with the radius reached when the group is larger than `cap`.
    """
    X = list(X)
    F, n = _check_generators(X)
    steps = _symmetrize(X)
    ident = Mat.identity(F, n)
    ikey = _encode(ident)
    dist: dict[bytes, int] = {ikey: 0}
    parents: dict[bytes, tuple[int, bytes] | None] = {ikey: None}
    frontier: list[tuple[bytes, Mat]] = [(ikey, ident)]
    histogram = [1]
    d = 0
    while frontier:
        d += 1
        nxt: list[tuple[bytes, Mat]] = []
        for key, M in frontier:
            for si, (S, _, _) in enumerate(steps):
                P = M.mul(S)
                pk = _encode(P)
                if pk not in dist:
                    if len(dist) >= cap:
                        raise CapExceeded(
                            f"exploration exceeded {cap} elements",
                            radius=d - 1, count=cap)
                    dist[pk] = d
                    parents[pk] = (si, key)
                    nxt.append((pk, P))
        if nxt:
            histogram.append(len(nxt))
        frontier = nxt
    return CayleyExploration(F, n, tuple(X), tuple(steps), dist, parents,
                             len(histogram) - 1, tuple(histogram))


def word_recover(exploration: CayleyExploration, g: Mat) -> Word:
    """A shortest word over X evaluating to g, as (index, exponent) pairs
    read left to right; the empty word at the identity."""
    key = exploration.encode(g)
    if key not in exploration.dist:
        raise NotExplored("element not reached by the exploration")
    out = []
    while True:
        p = exploration.parents[key]
        if p is None:
            break
        si, key = p
        _, i, e = exploration.steps[si]
        out.append((i, e))
    out.reverse()
    return tuple(out)


def evaluate_word(X: Sequence[Mat], word: Word) -> Mat:
    """Left-to-right product of X[i]^e over the (i, e) pairs."""
    if not X:
        raise BadParameters("need at least one generator")
    M = Mat.identity(X[0].F, X[0].nrows)
    for i, e in word:
        M = M.mul(X[i] if e == 1 else X[i].inv())
    return M


def bidirectional_distance(X: Sequence[Mat], g: Mat,
                           cap: int = DEFAULT_CAP) -> int:
    """The distance of a single element by meet-in-the-middle search.

    Grows balls around the identity and around g alternately (always
    expanding the smaller frontier) until they intersect, which reaches
    roughly the square root of the elements a full exploration would
    visit.  Raises NotFound when the search closes without meeting g.
    """
    X = list(X)
    F, n = _check_generators(X)
    if g.F != F or g.nrows != n or g.ncols != n:
        raise DimensionMismatch("element does not match the generators")
    steps = [S for S, _, _ in _symmetrize(X)]
    ident = Mat.identity(F, n)
    a: dict[bytes, int] = {_encode(ident): 0}
    b: dict[bytes, int] = {_encode(g): 0}
    fa: list[Mat] = [ident]
    fb: list[Mat] = [g]
    if _encode(g) in a:
        return 0
    da = db = 0
    while fa and fb:
        if len(fa) <= len(fb):
            side, other, frontier, d = a, b, fa, da + 1
            da = d
        else:
            side, other, frontier, d = b, a, fb, db + 1
            db = d
        nxt = []
        best = None
        for M in frontier:
            for S in steps:
                P = M.mul(S)
                pk = _encode(P)
                if pk in other:
                    cand = d + other[pk]
                    if best is None or cand < best:
                        best = cand
                if pk not in side:
                    if len(a) + len(b) >= cap:
                        raise CapExceeded(
                            f"bidirectional search exceeded {cap} elements",
                            radius=min(da, db), count=cap)
                    side[pk] = d
                    nxt.append(P)
        if best is not None:
            return best
        if side is a:
            fa = nxt
        else:
            fb = nxt
    raise NotFound("the element is not in the group generated by X")


def transvection_ball(T: Sequence[Transvection], r: int,
                      cap: int = DEFAULT_CAP) -> dict[Transvection, Word]:
    """All transvections within distance r of the identity, with one
    shortest word each.

    Explores the full ball of radius r (transvections deeper in the ball
    arise as products through non-transvections) and keeps the elements
    with a rank-one unipotent displacement.  Stops early once the whole
    group is closed, so the result is a fixed point in r from then on.
    """
    if r < 0:
        raise BadParameters("need a radius r >= 0")
    X = [t.matrix() for t in T]
    F, n = _check_generators(X)
    steps = _symmetrize(X)
    ident = Mat.identity(F, n)
    ikey = _encode(ident)
    dist: dict[bytes, int] = {ikey: 0}
    out: dict[Transvection, Word] = {}
    frontier: list[tuple[Mat, Word]] = [(ident, ())]
    d = 0
    while frontier and d < r:
        d += 1
        nxt = []
        for M, w in frontier:
            for S, i, e in steps:
                P = M.mul(S)
                pk = _encode(P)
                if pk not in dist:
                    if len(dist) >= cap:
                        raise CapExceeded(
                            f"ball exploration exceeded {cap} elements",
                            radius=d - 1, count=cap)
                    dist[pk] = d
                    w1 = w + ((i, e),)
                    try:
                        out[tv_from_matrix(P)] = w1
                    except NotTransvection:
                        pass
                    nxt.append((P, w1))
        frontier = nxt
    return out


def transvection_length_profile(G_elements, T_all,
                                cap: int = DEFAULT_CAP) -> tuple[int, tuple[int, ...]]:
    """The maximum and histogram of word lengths over the given elements
    when every transvection of the group is a generator.

    `G_elements` iterates the group (or is an enumeration with a
    .matrices() view); `T_all` lists its transvections, as Transvection or
    matrix.  Raises BadParameters when some element is not reached, i.e.
    when T_all fails to generate.
    """
    mats = [t.matrix() if isinstance(t, Transvection) else t for t in T_all]
    ex = bfs_explore(mats, cap)
    if hasattr(G_elements, "matrices"):
        G_elements = G_elements.matrices()
    best = 0
    for M in G_elements:
        key = _encode(M)
        if key not in ex.dist:
            raise BadParameters("the transvections do not generate the group")
        best = max(best, ex.dist[key])
    return best, ex.histogram


def layering_audit(exploration: CayleyExploration,
                   sample: Iterable[bytes] | None = None) -> bool:
    """Check the BFS layering invariant: every element at distance d > 0
    has a neighbor at distance d - 1 (its recorded parent)."""
    keys = sample if sample is not None else exploration.dist.keys()
    for key in keys:
        d = exploration.dist[key]
        p = exploration.parents[key]
        if d == 0:
            if p is not None:
                return False
            continue
        if p is None or exploration.dist[p[1]] != d - 1:
            return False
    return True
