"""Deterministic Schreier-Sims stabilizer chains for matrix groups over F_p.

The chain acts on nonzero vectors of F_p^(2g).  Base points follow a fixed
rule (lexicographically first vector moved by the current stabilizer),
orbits are explored in discovery order with generators in index order, and
no randomization is used, so the computed base and order are reproducible.

A strong generator sifted down to level d fixes the first d base points
and therefore belongs to the generating sets of every level up to d; each
level keeps a view of the global list restricted to its members.  The
exact order certificate is the product of orbit sizes once every Schreier
generator of every level sifts to the identity.  Because the generators
are symplectic the group lies in Sp(2g, p), and the partial orbit product
is always a lower bound for the order of the group generated so far, so
the completion loop may stop early as soon as the product reaches
|Sp(2g, p)|: equality pins both the group and the chain.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .symplectic import SymplecticMatrix, is_prime, sp_order

DEFAULT_ORBIT_LIMIT = 1 << 24

_BATCH = 1 << 15


class OrbitLimitExceeded(RuntimeError):
    def __init__(self, needed: int, limit: int):
        super().__init__(
            f"orbit would need up to {needed} vectors, over the limit {limit}; "
            f"raise MCGVERIFY_ORBIT_LIMIT or --orbit-limit to at least {needed}"
        )
        self.needed = needed
        self.limit = limit


@dataclass
class _Level:
    base: np.ndarray
    gen_ids: list[int] = field(default_factory=list)
    points: list[bytes] = field(default_factory=list)
    pos: dict[bytes, int] = field(default_factory=dict)
    parent: list[int] = field(default_factory=list)
    via: list[int] = field(default_factory=list)  # global generator id
    orbit_done: dict[int, int] = field(default_factory=dict)
    pair_done: dict[int, int] = field(default_factory=dict)


def _np_inverse(m: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a symplectic matrix mod p via M^-1 = -J M^T J."""
    n = m.shape[0]
    g = n // 2
    j = np.zeros((n, n), dtype=np.int64)
    for i in range(g):
        j[i, g + i] = 1
        j[g + i, i] = -1
    return (-j @ m.T @ j) % p


class StabilizerChain:
    """Stabilizer chain certifying the order of a matrix group over F_p."""

    def __init__(self, n: int, p: int, orbit_limit: int = DEFAULT_ORBIT_LIMIT):
        if not is_prime(p) or p > 127:
            raise ValueError(f"modulus must be a prime < 128, got {p}")
        self.n = n
        self.p = p
        self.orbit_limit = orbit_limit
        self.gens: list[np.ndarray] = []
        self.inv_gens: list[np.ndarray] = []
        self.levels: list[_Level] = []
        self._identity = np.eye(n, dtype=np.int64)

    # -- bookkeeping -----------------------------------------------------

    def order(self) -> int:
        out = 1
        for lev in self.levels:
            out *= len(lev.points)
        return out

    def base_points(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in lev.base) for lev in self.levels]

    def orbit_sizes(self) -> list[int]:
        return [len(lev.points) for lev in self.levels]

    def strong_generators(self) -> list[np.ndarray]:
        return list(self.gens)

    def _key(self, vec: np.ndarray) -> bytes:
        return (vec % self.p).astype(np.int8).tobytes()

    def _first_moved(self, m: np.ndarray) -> np.ndarray:
        """Lexicographically first nonzero vector moved by m (the base rule)."""
        gen = itertools.product(range(self.p), repeat=self.n)
        next(gen)  # skip the zero vector
        while True:
            block = np.array(list(itertools.islice(gen, 8192)), dtype=np.int64)
            if block.size == 0:
                raise ValueError("matrix is the identity")
            moved = ((block @ m.T) % self.p != block).any(axis=1)
            hits = np.flatnonzero(moved)
            if hits.size:
                return block[hits[0]]

    def add_generator(self, m: np.ndarray, drop: int) -> None:
        """Register a strong generator that fixes the first `drop` base points."""
        m = m % self.p
        gid = len(self.gens)
        self.gens.append(m)
        self.inv_gens.append(_np_inverse(m, self.p))
        if drop == len(self.levels):
            base = self._first_moved(m)
            lev = _Level(base)
            lev.points.append(self._key(base))
            lev.pos[lev.points[0]] = 0
            lev.parent.append(-1)
            lev.via.append(-1)
            self.levels.append(lev)
        for lev in self.levels[: drop + 1]:
            lev.gen_ids.append(gid)
            lev.orbit_done[gid] = 0
            lev.pair_done[gid] = 0

    # -- orbits ----------------------------------------------------------

    def _extend_orbit(self, li: int) -> None:
        lev = self.levels[li]
        p = self.p
        while True:
            moved = False
            for gid in lev.gen_ids:
                start, stop = lev.orbit_done[gid], len(lev.points)
                if start >= stop:
                    continue
                moved = True
                gen = self.gens[gid]
                for lo in range(start, stop, _BATCH):
                    hi = min(lo + _BATCH, stop)
                    batch = np.frombuffer(
                        b"".join(lev.points[lo:hi]), dtype=np.int8
                    ).reshape(hi - lo, self.n)
                    images = ((batch.astype(np.int64) @ gen.T) % p).astype(np.int8)
                    for k in range(images.shape[0]):
                        key = images[k].tobytes()
                        if key not in lev.pos:
                            if len(lev.points) >= self.orbit_limit:
                                raise OrbitLimitExceeded(
                                    len(lev.points) + 1, self.orbit_limit
                                )
                            lev.pos[key] = len(lev.points)
                            lev.points.append(key)
                            lev.parent.append(lo + k)
                            lev.via.append(gid)
                lev.orbit_done[gid] = stop
            if not moved:
                return

    def _extend_all(self) -> None:
        for li in range(len(self.levels)):
            self._extend_orbit(li)

    def _path_gens(self, lev: _Level, pos: int) -> list[int]:
        path = []
        while pos != 0:
            path.append(lev.via[pos])
            pos = lev.parent[pos]
        return path

    def _rep(self, lev: _Level, pos: int) -> np.ndarray:
        """Transversal element u with u(base) = points[pos]."""
        acc = self._identity
        for gid in self._path_gens(lev, pos):
            acc = (acc @ self.gens[gid]) % self.p
        return acc

    def _rep_inv(self, lev: _Level, pos: int) -> np.ndarray:
        # u = m_1 @ ... @ m_k in path order, so left-multiplying the
        # inverses while walking point-to-root yields u^-1.
        acc = self._identity
        for gid in self._path_gens(lev, pos):
            acc = (self.inv_gens[gid] @ acc) % self.p
        return acc

    # -- sifting ---------------------------------------------------------

    def sift_residue(self, m: np.ndarray, start: int = 0) -> tuple[np.ndarray, int]:
        """Strip m through the chain; returns (residue, level reached)."""
        m = m % self.p
        for li in range(start, len(self.levels)):
            lev = self.levels[li]
            key = self._key(m @ lev.base)
            if key not in lev.pos:
                return m, li
            pos = lev.pos[key]
            if pos:
                m = (self._rep_inv(lev, pos) @ m) % self.p
        return m, len(self.levels)

    def contains(self, m: np.ndarray) -> bool:
        residue, level = self.sift_residue(m)
        return level == len(self.levels) and (residue == self._identity).all()

    # -- completion ------------------------------------------------------

    def _next_pair(self, lev: _Level) -> tuple[int, int] | None:
        best = None
        for gid in lev.gen_ids:
            done = lev.pair_done[gid]
            if done < len(lev.points) and (best is None or (done, gid) < best):
                best = (done, gid)
        return best

    def complete(self, stop_at_order: int | None = None) -> None:
        """Run deterministic Schreier-Sims until the chain is verified.

        stop_at_order, when given, must be an upper bound for the group
        order (here |Sp(2g, p)|); reaching it ends the run early.
        """
        li = len(self.levels) - 1
        while li >= 0:
            self._extend_all()
            if stop_at_order is not None and self.order() == stop_at_order:
                return
            lev = self.levels[li]
            pair = self._next_pair(lev)
            if pair is None:
                li -= 1
                continue
            pos, gid = pair
            lev.pair_done[gid] = pos + 1
            schreier = (self.gens[gid] @ self._rep(lev, pos)) % self.p
            target = lev.pos[self._key(schreier @ lev.base)]
            if target:
                schreier = (self._rep_inv(lev, target) @ schreier) % self.p
            residue, drop = self.sift_residue(schreier, li + 1)
            if not (residue == self._identity).all():
                self.add_generator(residue, drop)
                li = drop


def _to_np(m: SymplecticMatrix) -> np.ndarray:
    return np.array(m.entries, dtype=np.int64)


def _validate_gens(gens: list[SymplecticMatrix]) -> tuple[int, int]:
    if not gens:
        raise ValueError("need at least one generator")
    first = gens[0]
    if first.modulus is None:
        raise ValueError("generators must be reduced mod a prime")
    for m in gens:
        if (m.genus, m.modulus) != (first.genus, first.modulus):
            raise ValueError("generators must share size and modulus")
        if not m.is_symplectic():
            raise ValueError("generator is not symplectic (hence not usable here)")
    return 2 * first.genus, first.modulus


def group_order(
    gens: list[SymplecticMatrix], orbit_limit: int = DEFAULT_ORBIT_LIMIT
) -> tuple[int, StabilizerChain]:
    """Exact order of the group generated by symplectic matrices mod p.

    Raises OrbitLimitExceeded when the full vector space is larger than
    the configured first-orbit budget.
    """
    n, p = _validate_gens(gens)
    if p ** n - 1 > orbit_limit:
        raise OrbitLimitExceeded(p ** n - 1, orbit_limit)
    chain = StabilizerChain(n, p, orbit_limit)
    bound = sp_order(n // 2, p)
    for m in gens:
        arr = _to_np(m) % p
        if not (arr == chain._identity).all():
            chain.add_generator(arr, 0)
    if not chain.levels:
        return 1, chain
    chain.complete(stop_at_order=bound)
    return chain.order(), chain


def sift(m: SymplecticMatrix, chain: StabilizerChain) -> bool:
    """Membership of m in the chain's group: True = Member."""
    arr = np.array(m.entries, dtype=np.int64)
    if arr.shape != (chain.n, chain.n):
        raise ValueError("matrix size does not match the chain")
    return chain.contains(arr)
