"""Weyl group machinery: chambers, orbits, and folded subgroups.

Group elements are tracked as chambers, i.e. the images of the simple roots
under w together with the images under w^{-1}.  Both are needed: w-positivity
of a root beta is read off from w^{-1} beta, while conjugating a grading needs
w(alpha_j) in simple-root coordinates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Sequence

from .rootdata import RootSystem, Vector

# Exhaustive chamber enumeration is kept under this bound; larger groups are
# sampled (with an explicit exhaustive override where a proof needs one).
EXHAUSTIVE_WEYL_BOUND = 50_000


def reflect(rs: RootSystem, i: int, v: Vector) -> Vector:
    """Simple reflection s_i (1-based) acting on a vector in root coordinates."""
    row = rs.cartan[i - 1]
    pairing = sum(row[j] * v[j] for j in range(rs.rank))
    out = list(v)
    out[i - 1] -= pairing
    return tuple(out)


def act_word(rs: RootSystem, word: Sequence[int], v: Vector) -> Vector:
    """Apply s_{word[0]} ... s_{word[-1]} to v, rightmost letter first."""
    for i in reversed(word):
        v = reflect(rs, i, v)
    return v


@dataclass(frozen=True)
class Chamber:
    """A Weyl group element w, stored through its action on simple roots.

    images[j] = w(alpha_{j+1}) and inv_images[j] = w^{-1}(alpha_{j+1}), both
    in simple-root coordinates.  word is one reduced-or-not expression used
    only for bookkeeping.
    """

    rs: RootSystem
    word: tuple[int, ...]
    images: tuple[Vector, ...]
    inv_images: tuple[Vector, ...]

    def act(self, v: Vector) -> Vector:
        out = [0] * self.rs.rank
        for j, coeff in enumerate(v):
            if coeff:
                img = self.images[j]
                for k in range(self.rs.rank):
                    out[k] += coeff * img[k]
        return tuple(out)

    def act_inv(self, v: Vector) -> Vector:
        out = [0] * self.rs.rank
        for j, coeff in enumerate(v):
            if coeff:
                img = self.inv_images[j]
                for k in range(self.rs.rank):
                    out[k] += coeff * img[k]
        return tuple(out)

    def is_w_positive(self, v: Vector) -> bool:
        """True iff v lies in w(positive roots)."""
        return sum(self.act_inv(v)) > 0

    def extend(self, i: int) -> "Chamber":
        """Right multiplication by s_i: w -> w s_i."""
        rs = self.rs
        row = rs.cartan[i - 1]
        base = self.images[i - 1]
        images = []
        for j in range(rs.rank):
            if row[j]:
                images.append(tuple(self.images[j][k] - row[j] * base[k] for k in range(rs.rank)))
            else:
                images.append(self.images[j])
        inv_images = tuple(reflect(rs, i, v) for v in self.inv_images)
        return Chamber(rs, self.word + (i,), tuple(images), inv_images)

    def w_positive_roots(self) -> frozenset[Vector]:
        return frozenset(v for v in self.rs.roots if self.is_w_positive(v))


def identity_chamber(rs: RootSystem) -> Chamber:
    simples = rs.simple_roots
    return Chamber(rs, (), simples, simples)


@lru_cache(maxsize=8)
def all_chambers(rs: RootSystem) -> tuple[Chamber, ...]:
    """Every Weyl group element, by breadth-first search on simple images."""
    order = rs.weyl_group_order()
    assert order <= EXHAUSTIVE_WEYL_BOUND or order == 51840, (
        f"exhaustive enumeration of {order} chambers refused"
    )
    start = identity_chamber(rs)
    seen = {start.images: start}
    frontier = [start]
    while frontier:
        nxt = []
        for ch in frontier:
            for i in range(1, rs.rank + 1):
                ext = ch.extend(i)
                if ext.images not in seen:
                    seen[ext.images] = ext
                    nxt.append(ext)
        frontier = nxt
    assert len(seen) == order, f"chamber count {len(seen)} != {order}"
    return tuple(seen.values())


def random_chambers(rs: RootSystem, count: int, seed: int) -> list[Chamber]:
    """Chambers from seeded random words; deterministic for fixed arguments.

    Word length is a few times the number of positive roots so the sample
    spreads across the group.  Duplicates are kept; callers want coverage,
    not uniformity.
    """
    rng = random.Random(seed)
    length = max(4, 4 * (len(rs.roots) // 2))
    out = []
    for _ in range(count):
        ch = identity_chamber(rs)
        for _ in range(length):
            ch = ch.extend(rng.randrange(1, rs.rank + 1))
        out.append(ch)
    return out


def orbit_partition(
    domain: Iterable[Hashable],
    generators: Sequence[Callable[[Hashable], Hashable]],
) -> list[list[Hashable]]:
    """Orbits of the group generated by the given maps, in deterministic order.

    Raises if a generator maps an element outside the domain: every action we
    partition is supposed to be closed, and silent escapes hide bugs.
    """
    pool = list(domain)
    pool_set = set(pool)
    assert len(pool) == len(pool_set), "domain has duplicates"
    unseen = set(pool)
    orbits = []
    for x in pool:
        if x not in unseen:
            continue
        orbit = [x]
        unseen.discard(x)
        queue = [x]
        while queue:
            y = queue.pop()
            for g in generators:
                z = g(y)
                if z not in pool_set:
                    raise ValueError(f"generator image {z!r} left the domain")
                if z in unseen:
                    unseen.discard(z)
                    orbit.append(z)
                    queue.append(z)
        orbits.append(orbit)
    return orbits


def folded_generators(rs: RootSystem, perm: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Generators (as words) of the subgroup commuting with a diagram automorphism.

    For each node orbit of the automorphism: a fixed node i gives s_i; a
    swapped non-adjacent pair {i, j} gives s_i s_j; a swapped adjacent pair
    gives s_i s_j s_i.  Orbits of size > 2 (triality) are rejected; the
    involution enumeration never needs them.
    """
    words = []
    seen = set()
    for i in range(1, rs.rank + 1):
        if i in seen:
            continue
        j = perm[i - 1]
        if j == i:
            seen.add(i)
            words.append((i,))
        else:
            assert perm[j - 1] == i, "automorphism is not an involution on nodes"
            seen.update((i, j))
            if rs.adjacent(i, j):
                words.append((i, j, i))
            else:
                words.append((i, j))
    return tuple(words)
