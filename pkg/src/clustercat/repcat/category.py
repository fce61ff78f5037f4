"""The cluster category: objects, graded morphisms, translates, lifts.

Indecomposable objects are labeled by almost positive roots: a positive
root means the module with that dimension vector, a negative simple
-alpha_i means the shifted projective P_i[1].  Derived-level objects are
(module root, shift) pairs; the functor F = tau^{-1}[1] acts on those
with an explicit shift ledger, jumping by two shifts through injectives.

A morphism X -> Y is carried as two graded pieces, one into Y and one
into F Y.  Pieces between shift levels that differ by one are Ext
classes, stored as cocycles over the standard two term projective
resolution of the source; zero testing is membership in the coboundary
image.  No piece ever needs a gap of two: those target spaces vanish,
which composition asserts instead of assuming.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Tuple

from ..errors import ContractViolationError
from ..exactla import Matrix, mat_mul, rref, solve, transpose, zeros
from ..root_system import DynkinType, RootSystem, root_system
from .reps import (
    Rep,
    hom_basis,
    hom_dim,
    ext_dim,
    identity_morphism,
    indecomposables,
    injective,
    morphism_compose,
    projective,
    tau_inv_map,
)

Root = Tuple[int, ...]


class DObj(NamedTuple):
    mroot: Root
    shift: int


@dataclass(frozen=True)
class DPiece:
    """A morphism datum between two derived objects.

    kind 'vmap' for equal shifts, 'cocycle' for a shift gap of one,
    'zero' for anything structurally zero.  data is a dict keyed by
    vertex (vmap) or by arrow (cocycle).
    """

    src: DObj
    dst: DObj
    kind: str
    data: Optional[dict]


@dataclass(frozen=True)
class CMor:
    src: Root
    dst: Root
    deg0: DPiece
    deg1: DPiece


class ClusterCategory:
    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.mods: Dict[Root, Rep] = indecomposables(rs)
        self.proj_root = {i: projective(rs, i).dims for i in range(1, rs.n + 1)}
        self.inj_root = {i: injective(rs, i).dims for i in range(1, rs.n + 1)}
        self.which_proj = {r: i for i, r in self.proj_root.items()}
        self.which_inj = {r: i for i, r in self.inj_root.items()}
        self._dim_cache: Dict[Tuple[Root, Root], Tuple[int, int]] = {}
        self._basis_cache: Dict[Tuple[Root, Root], List[CMor]] = {}
        self._delta_cache: Dict[Tuple[Root, Root], Tuple[Matrix, List[Tuple]]] = {}

    # -- objects --------------------------------------------------------------

    def cobjects(self) -> List[Root]:
        return sorted(self.rs.neg_simples) + sorted(self.mods)

    def rep(self, mroot: Root) -> Rep:
        return self.mods[mroot]

    def std(self, x: Root) -> DObj:
        """Fundamental domain representative of an almost positive root."""
        i = self.rs.neg_simple_index(x)
        if i is not None:
            return DObj(self.proj_root[i], 1)
        if x not in self.mods:
            raise ValueError(f"{x} is not an almost positive root")
        return DObj(x, 0)

    def tau_C(self, x: Root) -> Root:
        i = self.rs.neg_simple_index(x)
        if i is not None:
            return self.inj_root[i]
        j = self.which_proj.get(x)
        if j is not None:
            return self.rs.neg_simple(j)
        out = tuple(self.rs.coxeter(x))
        if out not in self.mods:
            raise ContractViolationError("translate left the module roots")
        return out

    def tau_C_inv(self, x: Root) -> Root:
        inv = self.__dict__.get("_tau_inv_table")
        if inv is None:
            inv = {self.tau_C(y): y for y in self.cobjects()}
            if len(inv) != len(self.cobjects()):
                raise ContractViolationError("translate is not a bijection on objects")
            self._tau_inv_table = inv
        return inv[x]

    # -- the functor F on objects ---------------------------------------------

    def F(self, d: DObj) -> DObj:
        j = self.which_inj.get(d.mroot)
        if j is not None:
            return DObj(self.proj_root[j], d.shift + 2)
        return DObj(tuple(self.rs.coxeter_inv(d.mroot)), d.shift + 1)

    def F_inv(self, d: DObj) -> DObj:
        j = self.which_proj.get(d.mroot)
        if j is not None:
            return DObj(self.inj_root[j], d.shift - 2)
        return DObj(tuple(self.rs.coxeter(d.mroot)), d.shift - 1)

    def f_power(self, d: DObj, a: int) -> DObj:
        for _ in range(abs(a)):
            d = self.F(d) if a > 0 else self.F_inv(d)
        return d

    # -- dimensions -----------------------------------------------------------

    def hom_D_dim(self, a: DObj, b: DObj) -> int:
        gap = b.shift - a.shift
        if gap == 0:
            return hom_dim(self.rep(a.mroot), self.rep(b.mroot))
        if gap == 1:
            return ext_dim(self.rs, self.rep(a.mroot), self.rep(b.mroot))
        return 0

    def hom_C_dim(self, x: Root, y: Root) -> int:
        key = (x, y)
        if key not in self._dim_cache:
            sx, sy = self.std(x), self.std(y)
            d0 = self.hom_D_dim(sx, sy)
            d1 = self.hom_D_dim(sx, self.F(sy))
            if self.hom_D_dim(sx, self.F_inv(sy)) or self.hom_D_dim(sx, self.F(self.F(sy))):
                raise ContractViolationError("window vanishing failed")
            self._dim_cache[key] = (d0, d1)
        return sum(self._dim_cache[key])

    def ext_C_dim(self, x: Root, y: Root) -> int:
        d = self.hom_C_dim(x, self.tau_C(y))
        d_op = self.hom_C_dim(y, self.tau_C(x))
        if d != d_op:
            raise ContractViolationError(f"ext symmetry broken at {x}, {y}")
        return d

    # -- cocycle plumbing -----------------------------------------------------

    def _cocycle_slots(self, A: Rep, B: Rep) -> List[Tuple]:
        slots = []
        for (u, w) in self.rs.alternating_arrows():
            for p in range(B.dim(w)):
                for q in range(A.dim(u)):
                    slots.append(((u, w), p, q))
        return slots

    def _delta(self, aroot: Root, broot: Root):
        """Coboundary matrix from vertex maps to arrow cocycles."""
        key = (aroot, broot)
        if key in self._delta_cache:
            return self._delta_cache[key]
        A, B = self.rep(aroot), self.rep(broot)
        slots = self._cocycle_slots(A, B)
        voff, total = {}, 0
        for v in range(1, self.rs.n + 1):
            voff[v] = total
            total += A.dim(v) * B.dim(v)
        delta = zeros(len(slots), total)
        for row, ((u, w), p, q) in enumerate(slots):
            # (delta psi)_a = psi_w . A_a  -  B_a . psi_u
            a_map, b_map = A.maps[(u, w)], B.maps[(u, w)]
            for l in range(A.dim(w)):
                if a_map[l][q]:
                    delta[row][voff[w] + p * A.dim(w) + l] += a_map[l][q]
            for k in range(B.dim(u)):
                if b_map[p][k]:
                    delta[row][voff[u] + k * A.dim(u) + q] -= b_map[p][k]
        self._delta_cache[key] = (delta, slots)
        return delta, slots

    def _cocycle_vec(self, aroot: Root, broot: Root, data: dict) -> List[Fraction]:
        _, slots = self._delta(aroot, broot)
        return [Fraction(data[a][p][q]) for (a, p, q) in slots]

    def _cocycle_from_vec(self, aroot: Root, broot: Root, vec) -> dict:
        A, B = self.rep(aroot), self.rep(broot)
        _, slots = self._delta(aroot, broot)
        out = {a: zeros(B.dim(a[1]), A.dim(a[0])) for a in self.rs.alternating_arrows()}
        for val, (a, p, q) in zip(vec, slots):
            out[a][p][q] = Fraction(val)
        return out

    def _ext_reps(self, aroot: Root, broot: Root) -> List[dict]:
        """Cocycles projecting to a basis of Ext^1(A, B)."""
        delta, slots = self._delta(aroot, broot)
        if not slots:
            return []
        red, pivots = rref(transpose(delta))
        free = [c for c in range(len(slots)) if c not in pivots]
        out = []
        for c in free:
            vec = [Fraction(0)] * len(slots)
            vec[c] = Fraction(1)
            out.append(self._cocycle_from_vec(aroot, broot, vec))
        if len(out) != ext_dim(self.rs, self.rep(aroot), self.rep(broot)):
            raise ContractViolationError("ext basis size mismatch")
        return out

    def _cocycle_is_zero(self, piece: DPiece) -> bool:
        aroot, broot = piece.src.mroot, piece.dst.mroot
        vec = self._cocycle_vec(aroot, broot, piece.data)
        if not any(vec):
            return True
        delta, _ = self._delta(aroot, broot)
        return solve(delta, vec) is not None

    # -- pieces ---------------------------------------------------------------

    def zero_piece(self, src: DObj, dst: DObj) -> DPiece:
        return DPiece(src, dst, "zero", None)

    def piece_is_zero(self, p: DPiece) -> bool:
        if p.kind == "zero":
            return True
        if p.kind == "vmap":
            return all(not x for m in p.data.values() for row in m for x in row)
        return self._cocycle_is_zero(p)

    def piece_add(self, p: DPiece, q: DPiece):
        if (p.src, p.dst) != (q.src, q.dst):
            raise ValueError("piece endpoint mismatch")
        if p.kind == "zero":
            return q
        if q.kind == "zero":
            return p
        if p.kind != q.kind:
            raise ContractViolationError("adding pieces of different kinds")
        data = {
            k: [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(p.data[k], q.data[k])]
            for k in p.data
        }
        return DPiece(p.src, p.dst, p.kind, data)

    def piece_scale(self, p: DPiece, c) -> DPiece:
        if p.kind == "zero":
            return p
        c = Fraction(c)
        data = {k: [[c * x for x in row] for row in p.data[k]] for k in p.data}
        return DPiece(p.src, p.dst, p.kind, data)

    def compose_pieces(self, p: DPiece, q: DPiece) -> DPiece:
        """q after p, p: A -> B and q: B -> C in the derived category."""
        if p.dst != q.src:
            raise ValueError("pieces are not composable")
        if p.kind == "zero" or q.kind == "zero":
            return self.zero_piece(p.src, q.dst)
        A = self.rep(p.src.mroot)
        B = self.rep(p.dst.mroot)
        C = self.rep(q.dst.mroot)
        if p.kind == "vmap" and q.kind == "vmap":
            return DPiece(p.src, q.dst, "vmap", morphism_compose(A, B, C, p.data, q.data))
        if p.kind == "vmap" and q.kind == "cocycle":
            data = {}
            for (u, w) in self.rs.alternating_arrows():
                data[(u, w)] = _shaped_mul(q.data[(u, w)], p.data[u], C.dim(w), B.dim(u), A.dim(u))
            return DPiece(p.src, q.dst, "cocycle", data)
        if p.kind == "cocycle" and q.kind == "vmap":
            data = {}
            for (u, w) in self.rs.alternating_arrows():
                data[(u, w)] = _shaped_mul(q.data[w], p.data[(u, w)], C.dim(w), B.dim(w), A.dim(u))
            return DPiece(p.src, q.dst, "cocycle", data)
        # cocycle after cocycle lands two shifts up; that space must vanish
        if self.hom_D_dim(p.src, q.dst) != 0:
            raise ContractViolationError("gap-two composite in a nonvanishing space")
        return self.zero_piece(p.src, q.dst)

    def F_piece(self, p: DPiece) -> Optional[DPiece]:
        """Image of a degree-zero piece under F, where supported.

        Supported: vmaps between two non-injective modules (the tau-inverse
        functor) and vmaps between two injectives (Nakayama transport).
        Returns None otherwise; the caller must then prove the ambient
        space of its composite vanishes.
        """
        fs, fd = self.F(p.src), self.F(p.dst)
        if p.kind == "zero":
            return self.zero_piece(fs, fd)
        if p.kind != "vmap":
            return None
        sj = self.which_inj.get(p.src.mroot)
        dj = self.which_inj.get(p.dst.mroot)
        if sj is None and dj is None:
            A, B = self.rep(p.src.mroot), self.rep(p.dst.mroot)
            return DPiece(fs, fd, "vmap", tau_inv_map(self.rs, A, B, p.data))
        if sj is not None and dj is not None:
            lam = self._scalar_of(p, sj, dj)
            return self.piece_scale(self._nakayama_generator(sj, dj, fs, fd), lam)
        return None

    def _scalar_of(self, p: DPiece, sj: int, dj: int) -> Fraction:
        """Coordinate of a vmap between injectives in the canonical basis."""
        if sj == dj:
            gen = identity_morphism(self.rep(p.src.mroot))
        else:
            basis = hom_basis(self.rep(p.src.mroot), self.rep(p.dst.mroot))
            if not basis:
                return Fraction(0)
            gen = basis[0]
        for v, m in gen.items():
            for r, row in enumerate(m):
                for c, x in enumerate(row):
                    if x:
                        return Fraction(p.data[v][r][c]) / x
        return Fraction(0)

    def _nakayama_generator(self, sj: int, dj: int, fs: DObj, fd: DObj) -> DPiece:
        if sj == dj:
            return DPiece(fs, fd, "vmap", identity_morphism(self.rep(fs.mroot)))
        basis = hom_basis(self.rep(fs.mroot), self.rep(fd.mroot))
        if len(basis) != 1:
            raise ContractViolationError("projective transport needs a 1-dim space")
        return DPiece(fs, fd, "vmap", basis[0])

    # -- morphisms in the cluster category ------------------------------------

    def zero_mor(self, x: Root, y: Root) -> CMor:
        sx, sy = self.std(x), self.std(y)
        return CMor(x, y, self.zero_piece(sx, sy), self.zero_piece(sx, self.F(sy)))

    def identity_mor(self, x: Root) -> CMor:
        sx = self.std(x)
        deg0 = DPiece(sx, sx, "vmap", identity_morphism(self.rep(sx.mroot)))
        return CMor(x, x, deg0, self.zero_piece(sx, self.F(sx)))

    def _piece_basis(self, src: DObj, dst: DObj) -> List[DPiece]:
        gap = dst.shift - src.shift
        if gap == 0:
            return [
                DPiece(src, dst, "vmap", f)
                for f in hom_basis(self.rep(src.mroot), self.rep(dst.mroot))
            ]
        if gap == 1:
            return [
                DPiece(src, dst, "cocycle", c)
                for c in self._ext_reps(src.mroot, dst.mroot)
            ]
        return []

    def hom_C_basis(self, x: Root, y: Root) -> List[CMor]:
        key = (x, y)
        if key not in self._basis_cache:
            sx, sy = self.std(x), self.std(y)
            fy = self.F(sy)
            out = []
            for p in self._piece_basis(sx, sy):
                out.append(CMor(x, y, p, self.zero_piece(sx, fy)))
            for p in self._piece_basis(sx, fy):
                out.append(CMor(x, y, self.zero_piece(sx, sy), p))
            if len(out) != self.hom_C_dim(x, y):
                raise ContractViolationError("basis does not fill the hom space")
            self._basis_cache[key] = out
        return self._basis_cache[key]

    def compose(self, f: CMor, g: CMor) -> CMor:
        """g after f, f: X -> Y and g: Y -> Z."""
        if f.dst != g.src:
            raise ValueError("morphisms are not composable")
        deg0 = self.compose_pieces(f.deg0, g.deg0)
        term1 = self.compose_pieces(f.deg0, g.deg1)
        fg0 = self.F_piece(g.deg0)
        if fg0 is None:
            # F transport of g.deg0 is not materialized; sound only if the
            # piece itself is zero or its composite's target space vanishes
            if not self.piece_is_zero(g.deg0) and self.hom_D_dim(
                f.deg1.src, self.F(g.deg0.dst)
            ):
                raise ContractViolationError("unsupported F transport in nonzero space")
            term2 = self.zero_piece(term1.src, term1.dst)
        else:
            term2 = self.compose_pieces(f.deg1, fg0)
        return CMor(f.src, g.dst, deg0, self.piece_add(term1, term2))

    def is_zero(self, m: CMor) -> bool:
        return self.piece_is_zero(m.deg0) and self.piece_is_zero(m.deg1)

    def compose_path(self, objs: List[Root], mors: List[CMor]) -> CMor:
        cur = mors[0]
        for nxt in mors[1:]:
            cur = self.compose(cur, nxt)
        return cur

    # -- lifts and winding numbers --------------------------------------------

    def lift_tail(self, over_head: DObj, tail: Root) -> DObj:
        """Unique object over tail receiving a nonzero map from over_head.

        For an arrow tail -> head the witness morphism runs head -> tail;
        given a derived object over the head this finds the shift of the
        tail end.  Exactly one candidate may hit, else the one-per-orbit
        vanishing is broken.
        """
        base = self.std(tail)
        s = over_head.shift
        lo, hi = min(-6, s - 6), max(8, s + 6)
        hits = [a for a in range(lo, hi) if self.hom_D_dim(over_head, self.f_power(base, a)) != 0]
        if len(hits) != 1:
            raise ContractViolationError(f"lift found {len(hits)} candidates for {tail}")
        return self.f_power(base, hits[0])

    def winding_number(self, path: List[Root]) -> int:
        """Net F-exponent of the lift of a closed path [T_1, ..., T_k = T_1]."""
        if path[0] != path[-1]:
            raise ValueError("path is not closed")
        if len(path) == 1:
            return 0
        cur = self.std(path[-1])
        for tail in reversed(path[:-1]):
            cur = self.lift_tail(cur, tail)
        base = self.std(path[0])
        s = cur.shift
        for a in range(min(-6, s - 6), max(8, s + 6)):
            if self.f_power(base, a) == cur:
                return a
        raise ContractViolationError("lift endpoint is not over the start")


def _shaped_mul(a: Matrix, b: Matrix, ra: int, inner: int, cb: int) -> Matrix:
    if ra == 0 or inner == 0 or cb == 0:
        return zeros(ra, cb)
    return mat_mul(a, b)


@lru_cache(maxsize=None)
def _cached_category(name: str) -> ClusterCategory:
    return ClusterCategory(root_system(name))


def cluster_category(dtype) -> ClusterCategory:
    return _cached_category(DynkinType.parse(dtype).name)
