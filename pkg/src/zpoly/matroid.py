"""Lattices of flats: construction from several matroid encodings and the
poset computations everything else is built on (Mobius values, characteristic
polynomials, multi-indexed Whitney numbers).

Flats are ground-set bitmasks (Python ints); the order is subset inclusion.
Since flats of a matroid are ordered by containment this is exact.  Closure
based enumeration always yields the geometric lattice of the simplification,
which is all the downstream computations care about: loops and parallel
elements need no special handling.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence, Union

from .polyarith import IntPolynomial


class FlatCapExceeded(ValueError):
    """Raised when enumeration would produce more flats than the caller allows."""


def _mask(elements: Iterable[int], n: int) -> int:
    m = 0
    for e in elements:
        e = int(e)
        if not 0 <= e < n:
            raise ValueError(f"element {e} outside ground set of size {n}")
        m |= 1 << e
    return m


def _bits(mask: int):
    e = 0
    while mask:
        if mask & 1:
            yield e
        mask >>= 1
        e += 1


@dataclass(frozen=True)
class UniformSpec:
    """Uniform matroid of rank d on m + d elements."""
    m: int
    d: int

    def __post_init__(self):
        if self.m < 0 or self.d < 0:
            raise ValueError("uniform matroid needs m >= 0 and d >= 0")


@dataclass(frozen=True)
class GraphSpec:
    """Graphic matroid; ground set is the edge list (loops and parallels allowed)."""
    vertices: int
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        for u, v in self.edges:
            if not (0 <= u < self.vertices and 0 <= v < self.vertices):
                raise ValueError(f"edge ({u},{v}) outside vertex range")


@dataclass(frozen=True)
class ExplicitBases:
    """Matroid given by its ground size and the list of bases."""
    ground: int
    bases: tuple

    def __post_init__(self):
        object.__setattr__(self, "bases", tuple(frozenset(int(e) for e in b) for b in self.bases))
        if not self.bases:
            raise ValueError("at least one basis required")


@dataclass(frozen=True)
class LinearVectors:
    """Matroid of a list of integer vectors over the rationals."""
    vectors: tuple

    def __post_init__(self):
        vecs = tuple(tuple(int(x) for x in v) for v in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        if vecs and len({len(v) for v in vecs}) != 1:
            raise ValueError("vectors must share a common dimension")


@dataclass(frozen=True)
class ExplicitFlats:
    """Lattice given directly as the list of flats (subsets of the ground set)."""
    ground: int
    flats: tuple

    def __post_init__(self):
        object.__setattr__(self, "flats", tuple(frozenset(int(e) for e in f) for f in self.flats))


MatroidSpec = Union[UniformSpec, GraphSpec, ExplicitBases, LinearVectors, ExplicitFlats]


def matroid_spec_from_json(obj: dict) -> MatroidSpec:
    """Decode the documented JSON matroid format (see README)."""
    if not isinstance(obj, dict) or "type" not in obj:
        raise ValueError("matroid JSON must be an object with a 'type' field")
    kind = obj["type"]
    try:
        if kind == "uniform":
            return UniformSpec(int(obj["m"]), int(obj["d"]))
        if kind == "graph":
            return GraphSpec(int(obj["vertices"]), tuple(tuple(e) for e in obj["edges"]))
        if kind == "bases":
            return ExplicitBases(int(obj["ground"]), tuple(obj["bases"]))
        if kind == "vectors":
            return LinearVectors(tuple(tuple(v) for v in obj["vectors"]))
        if kind == "flats":
            return ExplicitFlats(int(obj["ground"]), tuple(obj["flats"]))
    except KeyError as exc:
        raise ValueError(f"matroid JSON of type '{kind}' is missing field {exc}") from exc
    raise ValueError(f"unknown matroid type '{kind}' "
                     "(expected bases|graph|uniform|vectors|flats)")


class FlatLattice:
    """The lattice of flats of a matroid.

    flats[i] is a ground-set bitmask; ids are assigned in (rank, mask) order,
    so id 0 is the bottom flat and id n-1 the top.  Immutable after
    construction; the private cache only memoizes derived data.
    """

    __slots__ = ("flats", "ranks", "covers", "rk_total", "n_ground", "ground_mask", "_cache")

    def __init__(self, flats: Sequence[int], ranks: Sequence[int], covers: Sequence[Sequence[int]],
                 n_ground: int):
        order = sorted(range(len(flats)), key=lambda i: (ranks[i], flats[i]))
        old_to_new = [0] * len(flats)
        for new, old in enumerate(order):
            old_to_new[old] = new
        self.flats = tuple(flats[old] for old in order)
        self.ranks = tuple(ranks[old] for old in order)
        self.covers = tuple(tuple(sorted(old_to_new[c] for c in covers[old])) for old in order)
        self.rk_total = self.ranks[-1] if self.ranks else 0
        self.n_ground = n_ground
        self.ground_mask = self.flats[-1]
        self._cache = {}

    @property
    def n(self) -> int:
        return len(self.flats)

    @property
    def bottom_id(self) -> int:
        return 0

    @property
    def top_id(self) -> int:
        return len(self.flats) - 1

    def corank(self, fid: int) -> int:
        return self.rk_total - self.ranks[fid]

    def flats_of_rank(self, r: int):
        return [i for i, rk in enumerate(self.ranks) if rk == r]

    def flat_elements(self, fid: int):
        return sorted(_bits(self.flats[fid]))

    def id_of_mask(self, mask: int) -> int:
        index = self._cache.get("mask_index")
        if index is None:
            index = {m: i for i, m in enumerate(self.flats)}
            self._cache["mask_index"] = index
        return index[mask]

    def uppers(self):
        """uppers()[i] = ids of flats strictly above flat i, ascending (= by rank)."""
        ups = self._cache.get("uppers")
        if ups is not None:
            return ups
        n = self.n
        covers = self.covers
        ups = [None] * n
        seen = bytearray(n)
        for f in range(n - 1, -1, -1):
            out = []
            for c in covers[f]:
                if not seen[c]:
                    seen[c] = 1
                    out.append(c)
                for g in ups[c]:
                    if not seen[g]:
                        seen[g] = 1
                        out.append(g)
            for g in out:
                seen[g] = 0
            out.sort()
            ups[f] = out
        self._cache["uppers"] = ups
        return ups

    def validate(self):
        """Graded-lattice sanity check: cover ranks and existence of meets."""
        flats = self.flats
        ranks = self.ranks
        index = {m: i for i, m in enumerate(flats)}
        if len(index) != len(flats):
            raise ValueError("duplicate flats")
        counts = [0] * (self.rk_total + 1) if flats else []
        for i, r in enumerate(ranks):
            counts[r] += 1
        if flats and counts[0] != 1:
            raise ValueError("bottom flat is not unique")
        for f, cs in enumerate(self.covers):
            for c in cs:
                if ranks[c] != ranks[f] + 1:
                    raise ValueError(f"cover {f} -> {c} does not increase rank by 1")
                if flats[f] & flats[c] != flats[f]:
                    raise ValueError(f"cover {f} -> {c} is not an inclusion")
        for i, j in combinations(range(len(flats)), 2):
            if flats[i] & flats[j] not in index:
                raise ValueError(f"meet of flats {i} and {j} is not a flat")

    def _sublattice(self, member_ids, rank_offset: int) -> "FlatLattice":
        members = sorted(member_ids)
        old_to_new = {old: new for new, old in enumerate(members)}
        flats = [self.flats[i] for i in members]
        ranks = [self.ranks[i] - rank_offset for i in members]
        covers = [[old_to_new[c] for c in self.covers[i] if c in old_to_new] for i in members]
        return FlatLattice(flats, ranks, covers, self.n_ground)


def contraction(lat: FlatLattice, fid: int) -> FlatLattice:
    """Lattice of the contraction at a flat: the upper interval [F, top]."""
    if not 0 <= fid < lat.n:
        raise ValueError(f"invalid flat id {fid}")
    members = [fid] + list(lat.uppers()[fid])
    return lat._sublattice(members, lat.ranks[fid])


def localization(lat: FlatLattice, fid: int) -> FlatLattice:
    """Lattice of the localization at a flat: the lower interval [bottom, F]."""
    if not 0 <= fid < lat.n:
        raise ValueError(f"invalid flat id {fid}")
    fmask = lat.flats[fid]
    members = [i for i, m in enumerate(lat.flats) if m & fmask == m]
    return lat._sublattice(members, 0)


# ---------------------------------------------------------------------------
# enumeration


def enumerate_flats(spec: MatroidSpec, flat_cap: int | None = None) -> FlatLattice:
    """Enumerate all flats of the matroid described by spec.

    flat_cap aborts enumeration (FlatCapExceeded) as soon as more flats than
    allowed have been generated, before the full lattice is materialized.
    """
    if isinstance(spec, UniformSpec):
        return _enumerate_uniform(spec, flat_cap)
    if isinstance(spec, GraphSpec):
        return _enumerate_graph(spec, flat_cap)
    if isinstance(spec, ExplicitBases):
        _check_basis_exchange(spec)
        rank_fn = _bases_rank_fn(spec)
        return _enumerate_by_closure(spec.ground, rank_fn, flat_cap)
    if isinstance(spec, LinearVectors):
        rank_fn = _vectors_rank_fn(spec)
        return _enumerate_by_closure(len(spec.vectors), rank_fn, flat_cap)
    if isinstance(spec, ExplicitFlats):
        return _lattice_from_explicit_flats(spec)
    raise TypeError(f"not a matroid spec: {spec!r}")


def _check_cap(count: int, flat_cap: int | None):
    if flat_cap is not None and count > flat_cap:
        raise FlatCapExceeded(f"flat count exceeds cap {flat_cap}")


def _enumerate_uniform(spec: UniformSpec, flat_cap: int | None) -> FlatLattice:
    n = spec.m + spec.d
    d = spec.d
    full = (1 << n) - 1
    if d == 0:
        return FlatLattice([full], [0], [[]], n)
    flats, ranks, covers = [], [], []
    index = {}
    count = 0
    for size in range(d):
        for combo in combinations(range(n), size):
            m = _mask(combo, n)
            index[m] = len(flats)
            flats.append(m)
            ranks.append(size)
            covers.append([])
            count += 1
            _check_cap(count, flat_cap)
    top = len(flats)
    index[full] = top
    flats.append(full)
    ranks.append(d)
    covers.append([])
    _check_cap(count + 1, flat_cap)
    for m, i in index.items():
        if i == top:
            continue
        size = ranks[i]
        if size == d - 1:
            covers[i].append(top)
        else:
            for e in range(n):
                if not m >> e & 1:
                    covers[i].append(index[m | (1 << e)])
    return FlatLattice(flats, ranks, covers, n)


def _enumerate_graph(spec: GraphSpec, flat_cap: int | None) -> FlatLattice:
    """Flats of a graphic matroid are edge sets closed under 'edges inside
    the vertex components'; covers come from merging two components joined
    by at least one edge."""
    nv = spec.vertices
    edges = spec.edges
    ne = len(edges)
    pair_mask = [[0] * nv for _ in range(nv)]
    for idx, (u, v) in enumerate(edges):
        pair_mask[u][v] |= 1 << idx
        pair_mask[v][u] |= 1 << idx
    loops = 0
    for idx, (u, v) in enumerate(edges):
        if u == v:
            loops |= 1 << idx

    bottom_partition = tuple((v,) for v in range(nv))
    bottom = loops
    flats = [bottom]
    ranks = [0]
    covers = [[]]
    partitions = [bottom_partition]
    index = {bottom: 0}
    frontier = [0]
    while frontier:
        new_frontier = []
        for fid in frontier:
            fmask = flats[fid]
            blocks = partitions[fid]
            k = len(blocks)
            seen_here = set()
            for a in range(k):
                for b in range(a + 1, k):
                    between = 0
                    for u in blocks[a]:
                        row = pair_mask[u]
                        for v in blocks[b]:
                            between |= row[v]
                    if not between:
                        continue
                    gmask = fmask | between
                    if gmask in seen_here:
                        cid = index[gmask]
                        covers[fid].append(cid)
                        continue
                    seen_here.add(gmask)
                    cid = index.get(gmask)
                    if cid is None:
                        merged = tuple(sorted(blocks[a] + blocks[b]))
                        new_blocks = tuple(bl for i2, bl in enumerate(blocks) if i2 not in (a, b)) + (merged,)
                        cid = len(flats)
                        index[gmask] = cid
                        flats.append(gmask)
                        ranks.append(ranks[fid] + 1)
                        covers.append([])
                        partitions.append(new_blocks)
                        new_frontier.append(cid)
                        _check_cap(len(flats), flat_cap)
                    covers[fid].append(cid)
        frontier = new_frontier
    covers = [sorted(set(cs)) for cs in covers]
    return FlatLattice(flats, ranks, covers, ne)


def _enumerate_by_closure(n: int, rank_fn, flat_cap: int | None) -> FlatLattice:
    """Generic closure-algorithm enumeration from a rank oracle on bitmasks."""
    def closure(mask: int, rank: int) -> int:
        out = mask
        for e in range(n):
            b = 1 << e
            if not mask & b and rank_fn(mask | b) == rank:
                out |= b
        return out

    bottom = closure(0, rank_fn(0))
    flats = [bottom]
    ranks = [rank_fn(bottom)]
    covers = [[]]
    index = {bottom: 0}
    frontier = [0]
    while frontier:
        new_frontier = []
        for fid in frontier:
            fmask = flats[fid]
            seen_here = set()
            for e in range(n):
                b = 1 << e
                if fmask & b:
                    continue
                g = fmask | b
                gmask = closure(g, rank_fn(g))
                if gmask in seen_here:
                    covers[fid].append(index[gmask])
                    continue
                seen_here.add(gmask)
                cid = index.get(gmask)
                if cid is None:
                    cid = len(flats)
                    index[gmask] = cid
                    flats.append(gmask)
                    ranks.append(ranks[fid] + 1)
                    covers.append([])
                    new_frontier.append(cid)
                    _check_cap(len(flats), flat_cap)
                covers[fid].append(cid)
        frontier = new_frontier
    covers = [sorted(set(cs)) for cs in covers]
    return FlatLattice(flats, ranks, covers, n)


def _check_basis_exchange(spec: ExplicitBases):
    sizes = {len(b) for b in spec.bases}
    if len(sizes) != 1:
        raise ValueError(f"bases have unequal cardinalities {sorted(sizes)}")
    for b in spec.bases:
        for e in b:
            if not 0 <= e < spec.ground:
                raise ValueError(f"basis element {e} outside ground set")
    basis_set = set(spec.bases)
    for b1 in basis_set:
        for b2 in basis_set:
            for x in b1 - b2:
                if not any(b1 - {x} | {y} in basis_set for y in b2 - b1):
                    raise ValueError(
                        "basis exchange fails: B1=%s B2=%s x=%s"
                        % (sorted(b1), sorted(b2), x))


def _bases_rank_fn(spec: ExplicitBases):
    n = spec.ground
    base_masks = [_mask(b, n) for b in spec.bases]
    memo = {}

    def rank(mask: int) -> int:
        r = memo.get(mask)
        if r is None:
            r = max((mask & bm).bit_count() for bm in base_masks)
            memo[mask] = r
        return r

    return rank


def _vectors_rank_fn(spec: LinearVectors):
    vectors = spec.vectors
    memo = {}

    def rank(mask: int) -> int:
        r = memo.get(mask)
        if r is None:
            r = bareiss_rank([vectors[e] for e in _bits(mask)])
            memo[mask] = r
        return r

    return rank


def bareiss_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    All intermediate values stay integers; divisions are exact.
    """
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, nrows):
            factor = m[r][col]
            row = m[r]
            top = m[rank]
            for c in range(col + 1, ncols):
                num = row[c] * pivot - factor * top[c]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division not exact"
                row[c] = q
            row[col] = 0
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def _lattice_from_explicit_flats(spec: ExplicitFlats) -> FlatLattice:
    n = spec.ground
    masks = sorted({_mask(f, n) for f in spec.flats})
    if len(masks) != len(spec.flats):
        raise ValueError("duplicate flats in explicit list")
    full = (1 << n) - 1
    index = {m: i for i, m in enumerate(masks)}
    if full not in index:
        raise ValueError("explicit flats must contain the full ground set")
    for a, b in combinations(masks, 2):
        if a & b not in index:
            raise ValueError(
                f"explicit flats not closed under intersection: "
                f"{sorted(_bits(a))} ^ {sorted(_bits(b))}")
    # Longest-chain ranks; then check the poset is graded.
    order = sorted(range(len(masks)), key=lambda i: masks[i].bit_count())
    ranks = [0] * len(masks)
    for i in order:
        best = -1
        for j in range(len(masks)):
            if j != i and masks[j] & masks[i] == masks[j]:
                best = max(best, ranks[j])
        ranks[i] = best + 1
    covers = [[] for _ in masks]
    for i in range(len(masks)):
        for j in range(len(masks)):
            if i == j or masks[i] & masks[j] != masks[i]:
                continue
            if not any(k not in (i, j)
                       and masks[i] & masks[k] == masks[i]
                       and masks[k] & masks[j] == masks[k]
                       for k in range(len(masks))):
                if ranks[j] != ranks[i] + 1:
                    raise ValueError("explicit flats do not form a graded lattice")
                covers[i].append(j)
    if sum(1 for r in ranks if r == 0) != 1:
        raise ValueError("explicit flats must have a unique bottom")
    return FlatLattice(masks, ranks, covers, n)


# ---------------------------------------------------------------------------
# poset computations


def mobius_from_bottom(lat: FlatLattice):
    """mu(bottom, F) for every flat, by the defining recursion, cached."""
    mu = lat._cache.get("mobius")
    if mu is not None:
        return mu
    n = lat.n
    ups = lat.uppers()
    acc = [0] * n
    mu = [0] * n
    order = [lat.bottom_id] + list(ups[lat.bottom_id])
    for f in order:
        m = 1 if f == lat.bottom_id else -acc[f]
        mu[f] = m
        for g in ups[f]:
            acc[g] += m
    mu = tuple(mu)
    lat._cache["mobius"] = mu
    return mu


def characteristic_polynomial(lat: FlatLattice) -> IntPolynomial:
    """chi(t) = sum_F mu(bottom, F) t^{crk F}; monic of degree rk."""
    mu = mobius_from_bottom(lat)
    out = [0] * (lat.rk_total + 1)
    for f, m in enumerate(mu):
        out[lat.corank(f)] += m
    return IntPolynomial(out)


def _whitney_vector(lat: FlatLattice, profile: tuple):
    """counts[f] = number of multichains with the given corank profile whose
    lowest flat contains flat f.  Memoized per profile suffix; the Whitney
    recursion over contractions makes suffixes shareable."""
    memo = lat._cache.setdefault("whitney", {})
    vec = memo.get(profile)
    if vec is not None:
        return vec
    n = lat.n
    if not profile:
        vec = (1,) * n
    else:
        head, rest = profile[0], profile[1:]
        prev = _whitney_vector(lat, rest)
        ups = lat.uppers()
        cr = lat.rk_total
        ranks = lat.ranks
        out = [0] * n
        target = cr - head          # rank of flats with corank == head
        for f in range(n):
            total = 0
            if ranks[f] == target:
                total += prev[f]
            for g in ups[f]:
                if ranks[g] == target:
                    total += prev[g]
            out[f] = total
        vec = tuple(out)
    memo[profile] = vec
    return vec


def whitney_multi(lat: FlatLattice, profile) -> int:
    """Number of multichains F_r <= ... <= F_1 with crk F_j = profile[r-j].

    The profile is given corank-major, [i_r, ..., i_1]; entries may be any
    integers (impossible coranks yield 0); the empty profile counts 1.
    """
    profile = tuple(int(i) for i in profile)
    return _whitney_vector(lat, profile)[lat.bottom_id]
