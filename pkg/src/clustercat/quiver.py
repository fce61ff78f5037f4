"""Directed quivers as skew-symmetric exchange matrices.

A quiver on vertices 1..n is stored as its integer matrix b, where
b[x][y] > 0 means b[x][y] arrows x+1 -> y+1.  Everything downstream of
mutation-class exploration assumes entries stay in {-1,0,1}; a violation
means the input was not of finite type and raises NotFiniteTypeError.
"""

from __future__ import annotations

import itertools
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

from .errors import CapExceededError, ContractViolationError, NotFiniteTypeError
from .root_system import DynkinType, root_system

Profile = Tuple[int, ...]

ALLOWED_PROFILES: FrozenSet[Profile] = frozenset(
    [(1,), (2,), (3,), (4,), (5,), (6,),
     (1, 1), (1, 2), (2, 2), (1, 3), (1, 4), (2, 3), (2, 4),
     (1, 1, 1), (1, 1, 2), (1, 2, 2)]
)
FORBIDDEN_PROFILES: FrozenSet[Profile] = frozenset(
    [(7,), (3, 3), (1, 5), (1, 1, 3), (2, 2, 2)]
)
# profile pairs that a mutation at the linked vertex may toggle between
CHANGING_PAIRS: FrozenSet[FrozenSet[Profile]] = frozenset(
    frozenset(p)
    for p in [
        ((2,), (1, 1)),
        ((3,), (1, 1, 1)),
        ((5,), (1, 2, 2)),
        ((6,), (2, 4)),
        ((4,), (1, 1, 2)),
        ((1, 3), (1, 1, 2)),
    ]
)


class Quiver:
    """Immutable quiver value; equality and hashing go through the matrix."""

    __slots__ = ("n", "b")

    def __init__(self, b: Sequence[Sequence[int]]):
        n = len(b)
        rows = tuple(tuple(int(x) for x in row) for row in b)
        for i in range(n):
            if len(rows[i]) != n:
                raise ValueError("exchange matrix must be square")
            if rows[i][i] != 0:
                raise ValueError("loops are not allowed")
            for j in range(n):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError("exchange matrix must be skew-symmetric")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "b", rows)

    def __setattr__(self, *a):
        raise AttributeError("Quiver is immutable")

    @classmethod
    def from_arrows(cls, n: int, arrows: Iterable[Tuple[int, int]]) -> "Quiver":
        b = [[0] * n for _ in range(n)]
        for s, t in arrows:
            b[s - 1][t - 1] += 1
            b[t - 1][s - 1] -= 1
        return cls(b)

    def __eq__(self, other):
        return isinstance(other, Quiver) and self.b == other.b

    def __hash__(self):
        return hash(self.b)

    def __repr__(self):
        return f"Quiver({list(map(list, self.b))})"

    # -- structure ------------------------------------------------------------

    def arrows(self) -> List[Tuple[int, int]]:
        out = []
        for i in range(self.n):
            for j in range(self.n):
                for _ in range(max(self.b[i][j], 0)):
                    out.append((i + 1, j + 1))
        return out

    def arrow_exists(self, s: int, t: int) -> bool:
        return self.b[s - 1][t - 1] > 0

    def edges(self) -> List[Tuple[int, int]]:
        """Underlying undirected edges (i < j)."""
        return [
            (i + 1, j + 1)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.b[i][j] != 0
        ]

    def neighbors(self, v: int) -> List[int]:
        return [j + 1 for j in range(self.n) if self.b[v - 1][j] != 0]

    def out_neighbors(self, v: int) -> List[int]:
        return [j + 1 for j in range(self.n) if self.b[v - 1][j] > 0]

    def in_neighbors(self, v: int) -> List[int]:
        return [j + 1 for j in range(self.n) if self.b[v - 1][j] < 0]

    def has_unit_entries(self) -> bool:
        return all(abs(x) <= 1 for row in self.b for x in row)

    def underlying_degree(self, v: int) -> int:
        return len(self.neighbors(v))

    # -- mutation -------------------------------------------------------------

    def mutate(self, k: int) -> "Quiver":
        if not 1 <= k <= self.n:
            raise ValueError(f"vertex {k} out of range")
        k -= 1
        b = self.b
        out = [[0] * self.n for _ in range(self.n)]
        for x in range(self.n):
            for y in range(self.n):
                if x == k or y == k:
                    out[x][y] = -b[x][y]
                else:
                    out[x][y] = b[x][y] + (abs(b[x][k]) * b[k][y] + b[x][k] * abs(b[k][y])) // 2
        return Quiver(out)

    # -- canonical form under vertex relabeling -------------------------------

    def _key(self) -> Tuple[int, ...]:
        return tuple(x for row in self.b for x in row)

    def canonical(self) -> "Quiver":
        best = None
        rng = range(self.n)
        for perm in itertools.permutations(rng):
            key = tuple(self.b[perm[i]][perm[j]] for i in rng for j in rng)
            if best is None or key < best:
                best = key
        mat = [list(best[i * self.n:(i + 1) * self.n]) for i in rng]
        return Quiver(mat)

    # -- export ---------------------------------------------------------------

    def to_dot(self, name: str = "quiver") -> str:
        lines = [f"digraph {name} {{"]
        for v in range(1, self.n + 1):
            lines.append(f"  {v};")
        for s, t in self.arrows():
            lines.append(f"  {s} -> {t};")
        lines.append("}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "b": [list(row) for row in self.b]}


def alternating_quiver(dtype) -> Quiver:
    """The bipartite orientation of the Dynkin diagram (sources to sinks)."""
    rs = root_system(dtype)
    return Quiver.from_arrows(rs.n, rs.alternating_arrows())


def mutation_class(q: Quiver, cap: int = 10 ** 6) -> List[Quiver]:
    """All quivers reachable by mutation, up to vertex relabeling.

    BFS over canonical forms.  The cap bounds the number of forms; hitting
    it means the input is (or is suspected to be) not of finite type.
    """
    if not q.has_unit_entries():
        raise NotFiniteTypeError("multiple arrows in the starting quiver")
    start = q.canonical()
    seen: Set[Quiver] = {start}
    frontier = [start]
    while frontier:
        fresh: List[Quiver] = []
        for cur in frontier:
            for k in range(1, cur.n + 1):
                nxt = cur.mutate(k).canonical()
                if nxt not in seen:
                    if not nxt.has_unit_entries():
                        raise NotFiniteTypeError(
                            "mutation produced a multiple arrow; not finite type"
                        )
                    seen.add(nxt)
                    fresh.append(nxt)
                    if len(seen) > cap:
                        raise CapExceededError(
                            f"mutation class exceeded cap {cap}; not finite type or cap too low"
                        )
        frontier = fresh
    return sorted(seen, key=Quiver._key)


def _induces_cycle(q: Quiver, vertices: FrozenSet[int]) -> bool:
    """The induced subgraph on the given vertices is an undirected cycle."""
    if len(vertices) < 3:
        return False
    for v in vertices:
        if len([w for w in q.neighbors(v) if w in vertices]) != 2:
            return False
    # degrees all 2: cycle iff connected
    seen = set()
    stack = [next(iter(vertices))]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(w for w in q.neighbors(v) if w in vertices and w not in seen)
    return seen == set(vertices)


def shortest_paths(q: Quiver, s: int, t: int) -> List[Tuple[int, ...]]:
    """All shortest paths from t to s across the arrow s -> t.

    A shortest path is an oriented path whose vertex set induces a cycle
    subgraph.  Returned as vertex tuples starting at t and ending at s.
    """
    if not q.arrow_exists(s, t):
        raise ValueError(f"no arrow {s} -> {t}")
    found: List[Tuple[int, ...]] = []

    def dfs(path: List[int]):
        cur = path[-1]
        if cur == s:
            if _induces_cycle(q, frozenset(path)):
                found.append(tuple(path))
            return
        for nxt in q.out_neighbors(cur):
            if nxt not in path:
                path.append(nxt)
                dfs(path)
                path.pop()

    dfs([t])
    return sorted(found)


def relations(q: Quiver) -> List[dict]:
    """Per-arrow shortest-path data and the induced relation kind."""
    out = []
    for s, t in q.arrows():
        paths = shortest_paths(q, s, t)
        if len(paths) > 2:
            raise ContractViolationError(
                f"arrow {s}->{t} has {len(paths)} shortest paths; expected at most 2"
            )
        kind = {0: "none", 1: "zero", 2: "commutativity"}[len(paths)]
        out.append({"arrow": (s, t), "paths": paths, "kind": kind})
    return out


def chordless_cycles(q: Quiver) -> List[dict]:
    """All induced cycles, each flagged oriented or not."""
    out = []
    verts = range(1, q.n + 1)
    for size in range(3, q.n + 1):
        for combo in itertools.combinations(verts, size):
            vs = frozenset(combo)
            if not _induces_cycle(q, vs):
                continue
            # walk the cycle and check all arrows run one way around
            start = combo[0]
            prev, cur = None, start
            order = [start]
            while True:
                nxts = [w for w in q.neighbors(cur) if w in vs and w != prev]
                if not nxts:
                    break
                prev, cur = cur, nxts[0]
                if cur == start:
                    break
                order.append(cur)
            forward = all(q.arrow_exists(order[i], order[(i + 1) % len(order)]) for i in range(len(order)))
            backward = all(q.arrow_exists(order[(i + 1) % len(order)], order[i]) for i in range(len(order)))
            out.append({"vertices": tuple(sorted(vs)), "oriented": forward or backward})
    return out


def link_components(q: Quiver, v: int) -> List[List[int]]:
    """Connected components of the subgraph induced on the neighbors of v."""
    nbrs = set(q.neighbors(v))
    comps: List[List[int]] = []
    left = set(nbrs)
    while left:
        stack = [left.pop()]
        comp = set(stack)
        while stack:
            x = stack.pop()
            for w in q.neighbors(x):
                if w in nbrs and w not in comp:
                    comp.add(w)
                    left.discard(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return sorted(comps)


def link_profile(q: Quiver, v: int) -> Profile:
    return tuple(sorted(len(c) for c in link_components(q, v)))


def link_is_alternating_linear(q: Quiver, v: int) -> bool:
    """Every link component is a path whose internal orientation alternates."""
    nbrs = set(q.neighbors(v))
    for comp in link_components(q, v):
        cs = set(comp)
        degs = []
        for x in comp:
            inside = [w for w in q.neighbors(x) if w in cs]
            degs.append(len(inside))
            ins = [w for w in inside if q.arrow_exists(w, x)]
            outs = [w for w in inside if q.arrow_exists(x, w)]
            if ins and outs:
                return False  # x is neither sink nor source within the component
        if len(comp) == 1:
            continue
        if sorted(degs) != [1, 1] + [2] * (len(comp) - 2):
            return False  # has a fork or a cycle, cannot be a linear tree
    return True


def appendix_report(dtype, cap: int = 10 ** 6) -> dict:
    """Structural census of one full mutation class.

    Checks, for every quiver in the class: unit entries, at most two
    shortest paths per arrow, oriented chordless cycles, link profiles in
    the allowed list (never the forbidden one), at most 3 link components,
    alternating linear links, and that mutations move profiles only along
    the permitted pairs.  Violations raise; the returned report carries
    counts for inspection.
    """
    dtype = DynkinType.parse(dtype)
    forms = mutation_class(alternating_quiver(dtype), cap=cap)
    profile_counts: Dict[Profile, int] = {}
    transitions: Set[FrozenSet[Profile]] = set()
    cycle_count = 0
    max_shortest = 0
    for q in forms:
        if not q.has_unit_entries():
            raise ContractViolationError("non-unit entry in a finite-type class")
        for s, t in q.arrows():
            cnt = len(shortest_paths(q, s, t))
            max_shortest = max(max_shortest, cnt)
            if cnt > 2:
                raise ContractViolationError(f"{cnt} shortest paths on arrow {s}->{t}")
        for c in chordless_cycles(q):
            cycle_count += 1
            if not c["oriented"]:
                raise ContractViolationError(f"unoriented chordless cycle {c['vertices']}")
        for v in range(1, q.n + 1):
            prof = link_profile(q, v)
            if q.n > 1:
                if prof in FORBIDDEN_PROFILES or prof not in ALLOWED_PROFILES:
                    raise ContractViolationError(f"disallowed link profile {prof}")
                if len(prof) > 3:
                    raise ContractViolationError(f"link of {v} has {len(prof)} components")
                if not link_is_alternating_linear(q, v):
                    raise ContractViolationError(f"link of {v} is not alternating linear")
            profile_counts[prof] = profile_counts.get(prof, 0) + 1
            after = link_profile(q.mutate(v), v)
            if after != prof:
                pair = frozenset((prof, after))
                if pair not in CHANGING_PAIRS:
                    raise ContractViolationError(
                        f"mutation changed link profile {prof} -> {after}, not a permitted pair"
                    )
                transitions.add(pair)
    return {
        "type": dtype.name,
        "class_size": len(forms),
        "profile_counts": {"|".join(map(str, k)): v for k, v in sorted(profile_counts.items())},
        "observed_transitions": sorted(
            tuple(sorted(pair)) for pair in transitions
        ),
        "chordless_cycles": cycle_count,
        "max_shortest_paths": max_shortest,
    }


def triangle_fan_quiver() -> Quiver:
    """The rank-5 cyclic-triangles quiver used as a worked example."""
    return Quiver.from_arrows(
        5, [(5, 1), (1, 2), (4, 5), (1, 4), (3, 1), (2, 3), (4, 3)]
    )
