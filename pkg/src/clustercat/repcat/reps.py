"""Representations of the bipartite Dynkin orientation over the rationals.

All public entry points expect representations whose arrows are exactly
rs.alternating_arrows(); intermediate reflection steps produce the
reversed orientation internally.  The path algebra has radical square
zero, so projectives and injectives are one layer thick.

Morphisms are dicts vertex -> matrix (shape dim_N[v] x dim_M[v]).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from ..errors import ContractViolationError
from ..exactla import Matrix, mat_mul, nullspace, rref, zeros
from ..root_system import RootSystem

Arrow = Tuple[int, int]
VMap = Dict[int, Matrix]


class Rep:
    __slots__ = ("arrows", "dims", "maps")

    def __init__(self, arrows, dims, maps: Dict[Arrow, Matrix]):
        self.arrows = tuple(arrows)
        self.dims = tuple(dims)
        self.maps = {}
        for a in self.arrows:
            s, t = a
            m = [[Fraction(x) for x in row] for row in maps[a]]
            if len(m) != self.dims[t - 1] or any(len(r) != self.dims[s - 1] for r in m):
                raise ValueError(f"map shape mismatch on arrow {a}")
            self.maps[a] = m

    def dim(self, v: int) -> int:
        return self.dims[v - 1]

    def total_dim(self) -> int:
        return sum(self.dims)

    def __eq__(self, other):
        return (
            isinstance(other, Rep)
            and self.arrows == other.arrows
            and self.dims == other.dims
            and self.maps == other.maps
        )

    def __repr__(self):
        return f"Rep(dims={self.dims})"


# -- basic builders -----------------------------------------------------------


def simple(rs: RootSystem, i: int) -> Rep:
    dims = [0] * rs.n
    dims[i - 1] = 1
    arrows = rs.alternating_arrows()
    return Rep(arrows, dims, {a: zeros(dims[a[1] - 1], dims[a[0] - 1]) for a in arrows})


def projective(rs: RootSystem, i: int) -> Rep:
    """P_i; one dimensional top, radical spread over the out-neighbors."""
    if i in rs.i_plus:
        return simple(rs, i)
    dims = [0] * rs.n
    dims[i - 1] = 1
    for j in rs.adj[i]:
        dims[j - 1] = 1
    arrows = rs.alternating_arrows()
    maps = {}
    for s, t in arrows:
        if s == i:
            maps[(s, t)] = [[Fraction(1)]]
        else:
            maps[(s, t)] = zeros(dims[t - 1], dims[s - 1])
    return Rep(arrows, dims, maps)


def injective(rs: RootSystem, i: int) -> Rep:
    """I_i; one dimensional socle, the in-neighbors sit on top."""
    if i in rs.i_minus:
        return simple(rs, i)
    dims = [0] * rs.n
    dims[i - 1] = 1
    for j in rs.adj[i]:
        dims[j - 1] = 1
    arrows = rs.alternating_arrows()
    maps = {}
    for s, t in arrows:
        if t == i:
            maps[(s, t)] = [[Fraction(1)]]
        else:
            maps[(s, t)] = zeros(dims[t - 1], dims[s - 1])
    return Rep(arrows, dims, maps)


# -- morphism helpers ---------------------------------------------------------


def zero_morphism(M: Rep, N: Rep) -> VMap:
    return {v + 1: zeros(N.dims[v], M.dims[v]) for v in range(len(M.dims))}


def identity_morphism(M: Rep) -> VMap:
    out = {}
    for v in range(1, len(M.dims) + 1):
        d = M.dim(v)
        out[v] = [[Fraction(1 if i == j else 0) for j in range(d)] for i in range(d)]
    return out


def morphism_add(f: VMap, g: VMap) -> VMap:
    return {
        v: [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(f[v], g[v])] for v in f
    }


def morphism_scale(f: VMap, c) -> VMap:
    c = Fraction(c)
    return {v: [[c * x for x in row] for row in f[v]] for v in f}


def morphism_compose(M: Rep, N: Rep, O: Rep, f: VMap, g: VMap) -> VMap:
    """g after f, where f: M -> N and g: N -> O."""
    out = {}
    for v in range(1, len(M.dims) + 1):
        if N.dim(v) == 0 or M.dim(v) == 0 or O.dim(v) == 0:
            out[v] = zeros(O.dim(v), M.dim(v))
        else:
            out[v] = mat_mul(g[v], f[v])
    return out


def is_zero_morphism(f: VMap) -> bool:
    return all(not x for m in f.values() for row in m for x in row)


def is_morphism(M: Rep, N: Rep, f: VMap) -> bool:
    for (s, t), a in M.maps.items():
        left = _safe_mul(N.maps[(s, t)], f[s], N.dim(t), N.dim(s), M.dim(s))
        right = _safe_mul(f[t], a, N.dim(t), M.dim(t), M.dim(s))
        if left != right:
            return False
    return True


def _safe_mul(a: Matrix, b: Matrix, ra: int, inner: int, cb: int) -> Matrix:
    if ra == 0 or inner == 0 or cb == 0:
        return zeros(ra, cb)
    return mat_mul(a, b)


# -- hom and ext --------------------------------------------------------------


def hom_basis(M: Rep, N: Rep) -> List[VMap]:
    """Basis of the space of representation morphisms M -> N."""
    if M.arrows != N.arrows:
        raise ValueError("orientation mismatch")
    n = len(M.dims)
    offsets = []
    total = 0
    for v in range(n):
        offsets.append(total)
        total += M.dims[v] * N.dims[v]
    if total == 0:
        return []

    def slot(v: int, p: int, q: int) -> int:
        # entry f_v[p][q], row-major
        return offsets[v - 1] + p * M.dims[v - 1] + q

    rows: List[List[Fraction]] = []
    for (s, t), a in M.maps.items():
        b = N.maps[(s, t)]
        for p in range(N.dims[t - 1]):
            for q in range(M.dims[s - 1]):
                row = [Fraction(0)] * total
                for k in range(N.dims[s - 1]):
                    if b[p][k]:
                        row[slot(s, k, q)] += b[p][k]
                for l in range(M.dims[t - 1]):
                    if a[l][q]:
                        row[slot(t, p, l)] -= a[l][q]
                if any(row):
                    rows.append(row)
    if rows:
        vectors = nullspace(rows)
    else:
        vectors = [
            [Fraction(1 if i == j else 0) for j in range(total)] for i in range(total)
        ]
    basis = []
    for vec in vectors:
        f: VMap = {}
        for v in range(1, n + 1):
            f[v] = [
                [vec[slot(v, p, q)] for q in range(M.dims[v - 1])]
                for p in range(N.dims[v - 1])
            ]
        basis.append(f)
    return basis


def hom_dim(M: Rep, N: Rep) -> int:
    return len(hom_basis(M, N))


def euler_form(rs: RootSystem, a, b) -> int:
    total = sum(x * y for x, y in zip(a, b))
    for s, t in rs.alternating_arrows():
        total -= a[s - 1] * b[t - 1]
    return total


def ext_dim(rs: RootSystem, M: Rep, N: Rep) -> int:
    """dim Ext^1(M, N); hereditary, so the Euler form computes it."""
    d = hom_dim(M, N) - euler_form(rs, M.dims, N.dims)
    if d < 0:
        raise ContractViolationError("negative ext dimension")
    return d


# -- reflection functors ------------------------------------------------------


def _coker_projection(a: Matrix, q: int) -> Tuple[Matrix, Matrix]:
    """Quotient map P and section S for k^q / colspace(a).

    The cokernel basis is the set of non-pivot coordinates of the row
    reduced image; this fixed choice is what makes the induced maps on
    cokernels strictly functorial.
    """
    gens = [[row[i] for row in a] for i in range(len(a[0]))] if a and a[0] else []
    if gens:
        red, pivots = rref(gens)
        red = red[: len(pivots)]
    else:
        red, pivots = [], []
    free = [c for c in range(q) if c not in pivots]
    p_mat = zeros(len(free), q)
    for out_row, fc in enumerate(free):
        p_mat[out_row][fc] = Fraction(1)
        for t, pc in enumerate(pivots):
            p_mat[out_row][pc] = -red[t][fc]
    s_mat = zeros(q, len(free))
    for out_row, fc in enumerate(free):
        s_mat[fc][out_row] = Fraction(1)
    return p_mat, s_mat


class _ReflectStep:
    """One source reflection, with the transport data for morphisms."""

    __slots__ = ("vertex", "nbrs", "offsets", "proj", "sect", "result")

    def __init__(self, rep: Rep, i: int):
        out_arrows = [a for a in rep.arrows if a[0] == i]
        if any(a[1] == i for a in rep.arrows):
            raise ContractViolationError(f"vertex {i} is not a source")
        self.vertex = i
        self.nbrs = sorted(t for _, t in out_arrows)
        q = sum(rep.dim(j) for j in self.nbrs)
        self.offsets = {}
        off = 0
        for j in self.nbrs:
            self.offsets[j] = off
            off += rep.dim(j)
        stacked = zeros(q, rep.dim(i))
        for j in self.nbrs:
            block = rep.maps[(i, j)]
            for r in range(rep.dim(j)):
                stacked[self.offsets[j] + r] = list(block[r])
        self.proj, self.sect = _coker_projection(stacked if rep.dim(i) else [], q)
        new_dims = list(rep.dims)
        new_dims[i - 1] = len(self.proj)
        new_arrows = tuple(
            (t, s) if s == i else (s, t) for s, t in rep.arrows
        )
        new_maps = {}
        for s, t in rep.arrows:
            if s == i:
                # column block of the projection belonging to neighbor t
                cols = range(self.offsets[t], self.offsets[t] + rep.dim(t))
                new_maps[(t, i)] = [[row[c] for c in cols] for row in self.proj]
            else:
                new_maps[(s, t)] = rep.maps[(s, t)]
        self.result = Rep(new_arrows, new_dims, new_maps)

    def transport(self, f: VMap, other: "_ReflectStep", M: Rep, N: Rep) -> VMap:
        """Induced morphism on the reflected reps; self reflects M, other N."""
        i = self.vertex
        g = zeros(sum(N.dim(j) for j in self.nbrs), len(self.proj))
        # blockdiag(f_j) applied to the section, then project on the N side
        for j in self.nbrs:
            fj = f[j]
            for r in range(N.dim(j)):
                for c in range(len(self.proj)):
                    acc = Fraction(0)
                    for k in range(M.dim(j)):
                        acc += fj[r][k] * self.sect[self.offsets[j] + k][c]
                    g[other.offsets[j] + r][c] = acc
        new_fi = _safe_mul(other.proj, g, len(other.proj), len(g), len(self.proj))
        out = dict(f)
        out[i] = new_fi
        return out


def _phase_order(rs: RootSystem) -> List[int]:
    return sorted(rs.i_minus) + sorted(rs.i_plus)


def tau_inv(rs: RootSystem, M: Rep) -> Rep:
    """Inverse translate as a composite of source reflections."""
    cur = M
    for i in _phase_order(rs):
        cur = _ReflectStep(cur, i).result
    if cur.arrows != rs.alternating_arrows():
        raise ContractViolationError("reflections did not restore the orientation")
    return cur


def tau_inv_map(rs: RootSystem, M: Rep, N: Rep, f: VMap) -> VMap:
    cm, cn, cf = M, N, f
    for i in _phase_order(rs):
        sm = _ReflectStep(cm, i)
        sn = _ReflectStep(cn, i)
        cf = sm.transport(cf, sn, cm, cn)
        cm, cn = sm.result, sn.result
    return cf


# -- the indecomposables ------------------------------------------------------


@lru_cache(maxsize=None)
def indecomposables(rs: RootSystem) -> Dict[Tuple[int, ...], Rep]:
    """One representation per positive root, generated from the projectives.

    Walks each tau-inverse orbit until the Coxeter image of the dimension
    vector leaves the positive roots (at the injectives).
    """
    table: Dict[Tuple[int, ...], Rep] = {}
    for i in range(1, rs.n + 1):
        cur = projective(rs, i)
        while True:
            root = cur.dims
            if root in table:
                break
            if not rs.is_positive_root(root):
                raise ContractViolationError("indecomposable with non-root dimension")
            table[root] = cur
            nxt = rs.coxeter_inv(root)
            if not rs.is_positive_root(nxt):
                break
            cur = tau_inv(rs, cur)
            if cur.dims != nxt:
                raise ContractViolationError("reflection dims disagree with Coxeter")
    if len(table) != rs.nu:
        raise ContractViolationError(
            f"found {len(table)} indecomposables, expected {rs.nu}"
        )
    return table
