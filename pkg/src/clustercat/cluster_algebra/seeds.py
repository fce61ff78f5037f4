"""Seeds, mutation, and full atlases of finite type cluster algebras.

A seed couples a quiver with one Laurent polynomial per vertex.  Mutation
at k multiplies the incoming and outgoing neighbor variables, adds, and
divides exactly by the old variable.  An Atlas is the exhaustive BFS over
all seeds up to cluster identity, together with the bijection between
cluster variables and almost positive roots read off the denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Tuple

from ..errors import CapExceededError, ContractViolationError
from ..quiver import Quiver, alternating_quiver
from ..root_system import DynkinType, root_system
from .laurent import Laurent

Root = Tuple[int, ...]


@dataclass(frozen=True)
class Seed:
    quiver: Quiver
    variables: Tuple[Laurent, ...]

    def cluster_key(self) -> FrozenSet[Laurent]:
        return frozenset(self.variables)


def initial_seed(dtype) -> Seed:
    rs = root_system(dtype)
    q = alternating_quiver(rs.dtype)
    return Seed(q, tuple(Laurent.var(rs.n, i) for i in range(1, rs.n + 1)))


def exchange_terms(seed: Seed, k: int) -> Tuple[Laurent, Laurent]:
    """The two monomials whose sum is the exchange numerator at vertex k."""
    n = seed.quiver.n
    m_in = Laurent.one(n)
    m_out = Laurent.one(n)
    col = [seed.quiver.b[j][k - 1] for j in range(n)]
    for j in range(n):
        if col[j] > 0:
            m_in = m_in * seed.variables[j]
        elif col[j] < 0:
            m_out = m_out * seed.variables[j]
    return m_in, m_out


def mutate_seed(seed: Seed, k: int) -> Seed:
    m_in, m_out = exchange_terms(seed, k)
    new_var = (m_in + m_out).exact_div(seed.variables[k - 1])
    vs = list(seed.variables)
    vs[k - 1] = new_var
    return Seed(seed.quiver.mutate(k), tuple(vs))


@dataclass(frozen=True)
class AtlasEdge:
    """Exchange edge between clusters a < b; var_a lives only in a, var_b only in b."""

    a: int
    b: int
    var_a: Laurent
    var_b: Laurent


class Atlas:
    """Every cluster of one finite type algebra, reached by breadth-first mutation."""

    def __init__(self, dtype, cap: int = 10 ** 6):
        self.rs = root_system(dtype)
        self.dtype = self.rs.dtype
        n = self.rs.n
        seed0 = initial_seed(self.dtype)
        index: Dict[FrozenSet[Laurent], int] = {seed0.cluster_key(): 0}
        self.seeds: List[Seed] = [seed0]
        edge_map: Dict[FrozenSet[int], AtlasEdge] = {}
        frontier = [0]
        while frontier:
            fresh: List[int] = []
            for cid in frontier:
                s = self.seeds[cid]
                for k in range(1, n + 1):
                    s2 = mutate_seed(s, k)
                    key = s2.cluster_key()
                    oid = index.get(key)
                    if oid is None:
                        oid = len(self.seeds)
                        if oid >= cap:
                            raise CapExceededError(f"atlas exceeded cap {cap}")
                        index[key] = oid
                        self.seeds.append(s2)
                        fresh.append(oid)
                    ekey = frozenset((cid, oid))
                    if ekey not in edge_map:
                        a, b = sorted((cid, oid))
                        ka = self.seeds[a].cluster_key()
                        kb = self.seeds[b].cluster_key()
                        only_a, only_b = ka - kb, kb - ka
                        if len(only_a) != 1 or len(only_b) != 1:
                            raise ContractViolationError("adjacent clusters must differ in one variable")
                        edge_map[ekey] = AtlasEdge(a, b, next(iter(only_a)), next(iter(only_b)))
            frontier = fresh
        self.clusters: List[FrozenSet[Laurent]] = [s.cluster_key() for s in self.seeds]
        self.edges: List[AtlasEdge] = sorted(edge_map.values(), key=lambda e: (e.a, e.b))
        self._index = index
        self._check_roots()
        self._check_regularity()

    # every variable's denominator vector must be an almost positive root,
    # bijectively, with the initial variables on the negative simples
    def _check_roots(self):
        self.root_of: Dict[Laurent, Root] = {}
        for cluster in self.clusters:
            for v in cluster:
                if v not in self.root_of:
                    self.root_of[v] = v.denominator_exponents()
        roots = sorted(self.root_of.values())
        expected = sorted(self.rs.almost_positive)
        if roots != expected:
            raise ContractViolationError("denominator vectors do not hit the almost positive roots")
        self.var_of: Dict[Root, Laurent] = {r: v for v, r in self.root_of.items()}
        for i in range(1, self.rs.n + 1):
            if self.var_of[self.rs.neg_simple(i)] != Laurent.var(self.rs.n, i):
                raise ContractViolationError("initial variable mismatch at a negative simple root")

    def _check_regularity(self):
        deg = [0] * len(self.clusters)
        for e in self.edges:
            deg[e.a] += 1
            deg[e.b] += 1
        if any(d != self.rs.n for d in deg):
            raise ContractViolationError("exchange graph is not n-regular")

    # -- conveniences ---------------------------------------------------------

    def cluster_id(self, key: FrozenSet[Laurent]) -> int:
        return self._index[key]

    def cluster_roots(self, cid: int) -> FrozenSet[Root]:
        return frozenset(self.root_of[v] for v in self.clusters[cid])

    def seed_roots(self, cid: int) -> Tuple[Root, ...]:
        return tuple(self.root_of[v] for v in self.seeds[cid].variables)

    def neighbors(self, cid: int) -> List[int]:
        out = []
        for e in self.edges:
            if e.a == cid:
                out.append(e.b)
            elif e.b == cid:
                out.append(e.a)
        return sorted(out)


def rebase(atlas: Atlas, cid: int) -> Dict[Laurent, Laurent]:
    """Expand every cluster variable in the variables of cluster cid.

    Runs the atlas BFS a second time from a fresh copy of the chosen
    cluster, mutating both seeds in lockstep, and pairs up the variables.
    Slot i of the representative seed of cid becomes x_i on the right.
    """
    n = atlas.rs.n
    base = atlas.seeds[cid]
    fresh = Seed(base.quiver, tuple(Laurent.var(n, i) for i in range(1, n + 1)))
    seen = {base.cluster_key()}
    mapping: Dict[Laurent, Laurent] = {}

    def record(orig: Seed, new: Seed):
        if orig.quiver != new.quiver:
            raise ContractViolationError("lockstep quivers diverged")
        for vo, vn in zip(orig.variables, new.variables):
            prev = mapping.get(vo)
            if prev is None:
                mapping[vo] = vn
            elif prev != vn:
                raise ContractViolationError("rebased expansion is path dependent")

    record(base, fresh)
    frontier = [(base, fresh)]
    while frontier:
        nxt = []
        for orig, new in frontier:
            for k in range(1, n + 1):
                o2 = mutate_seed(orig, k)
                key = o2.cluster_key()
                if key not in seen:
                    seen.add(key)
                    n2 = mutate_seed(new, k)
                    record(o2, n2)
                    nxt.append((o2, n2))
        frontier = nxt
    if set(mapping) != set(atlas.root_of):
        raise ContractViolationError("rebase did not reach every cluster variable")
    return mapping


@lru_cache(maxsize=None)
def atlas(dtype) -> Atlas:
    return Atlas(DynkinType.parse(dtype))
