"""Simply-laced root systems in simple-root coordinates.

Roots are integer tuples giving coefficients in the basis of simple roots.
Vertices of the Dynkin diagram are numbered from 1; tuple index i-1 holds
the coefficient of the simple root at vertex i.

The diagram is bipartitioned into sources (the part containing vertex 1)
and sinks.  The piecewise-linear maps tau(+1, .) and tau(-1, .) act on the
whole lattice, restrict to the usual pair of involutions on the set of
almost positive roots, and generate a finite dihedral group whose orbits
all meet the negative simple roots.  That last fact is what makes the
reduction loops below terminate; each loop still carries a hard bound and
raises if it is exceeded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from . import exactla
from .errors import ContractViolationError, NotExchangeableError, NotFiniteTypeError

Vec = Tuple[int, ...]

_VALID_RANKS = {"A": range(1, 9), "D": range(4, 9), "E": range(6, 9)}


@dataclass(frozen=True, order=True)
class DynkinType:
    series: str
    rank: int

    def __post_init__(self):
        ranks = _VALID_RANKS.get(self.series)
        if ranks is None or self.rank not in ranks:
            raise NotFiniteTypeError(
                f"unsupported type {self.series}{self.rank}; expected A1-A8, D4-D8 or E6-E8"
            )

    @classmethod
    def parse(cls, name) -> "DynkinType":
        if isinstance(name, DynkinType):
            return name
        s = str(name).strip().upper()
        if len(s) < 2 or s[0] not in "ADE" or not s[1:].isdigit():
            raise NotFiniteTypeError(f"cannot parse Dynkin type {name!r}")
        return cls(s[0], int(s[1:]))

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    def __str__(self) -> str:
        return self.name


ALL_TYPES = tuple(
    DynkinType(series, rank) for series in "ADE" for rank in _VALID_RANKS[series]
)


def _diagram_edges(t: DynkinType) -> Tuple[Tuple[int, int], ...]:
    n = t.rank
    if t.series == "A":
        return tuple((i, i + 1) for i in range(1, n))
    if t.series == "D":
        # chain 1..n-2, then a fork to the two leaves n-1 and n
        chain = [(i, i + 1) for i in range(1, n - 2)]
        return tuple(chain + [(n - 2, n - 1), (n - 2, n)])
    # E series: chain 1-3-4-5-..., vertex 2 hangs off vertex 4
    chain = [(1, 3), (3, 4)] + [(i, i + 1) for i in range(4, n)]
    return tuple(sorted(chain + [(2, 4)]))


class RootSystem:
    """Root data, tau maps and compatibility machinery for one Dynkin type."""

    def __init__(self, dtype):
        self.dtype = DynkinType.parse(dtype)
        self.n = self.dtype.rank
        self.edges = _diagram_edges(self.dtype)
        adj: Dict[int, List[int]] = {i: [] for i in range(1, self.n + 1)}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        self.adj: Dict[int, Tuple[int, ...]] = {i: tuple(sorted(v)) for i, v in adj.items()}
        self.i_minus, self.i_plus = self._bipartition()
        self.positive_roots = self._positive_roots()
        self._positive_set = frozenset(self.positive_roots)
        self.nu = len(self.positive_roots)
        self.highest_root = max(self.positive_roots, key=lambda v: (sum(v), v))
        self.coxeter_number = sum(self.highest_root) + 1
        self.neg_simples = tuple(self.neg_simple(i) for i in range(1, self.n + 1))
        self.almost_positive = self.neg_simples + self.positive_roots
        self._almost_set = frozenset(self.almost_positive)

    # -- construction helpers -------------------------------------------------

    def _bipartition(self):
        color = {1: -1}
        stack = [1]
        while stack:
            v = stack.pop()
            for w in self.adj[v]:
                if w not in color:
                    color[w] = -color[v]
                    stack.append(w)
        if len(color) != self.n:
            raise ContractViolationError("Dynkin diagram is not connected")
        minus = frozenset(v for v, c in color.items() if c < 0)
        plus = frozenset(v for v, c in color.items() if c > 0)
        return minus, plus

    def _positive_roots(self) -> Tuple[Vec, ...]:
        roots = {self.simple(i) for i in range(1, self.n + 1)}
        frontier = list(roots)
        while frontier:
            fresh = []
            for v in frontier:
                for i in range(1, self.n + 1):
                    w = self.reflect(i, v)
                    if w not in roots:
                        roots.add(w)
                        fresh.append(w)
            frontier = fresh
        pos = sorted(v for v in roots if all(c >= 0 for c in v))
        if 2 * len(pos) != len(roots):
            raise ContractViolationError("root set is not symmetric under negation")
        return tuple(pos)

    # -- basic vectors --------------------------------------------------------

    def simple(self, i: int) -> Vec:
        return tuple(1 if j == i - 1 else 0 for j in range(self.n))

    def neg_simple(self, i: int) -> Vec:
        return tuple(-1 if j == i - 1 else 0 for j in range(self.n))

    def neg_simple_index(self, v: Sequence[int]) -> Optional[int]:
        """Vertex i when v == -simple(i), else None."""
        hit = None
        for j, c in enumerate(v):
            if c == -1 and hit is None:
                hit = j + 1
            elif c != 0:
                return None
        return hit

    def is_positive_root(self, v) -> bool:
        return tuple(v) in self._positive_set

    def is_almost_positive(self, v) -> bool:
        return tuple(v) in self._almost_set

    def vertex_sign(self, i: int) -> int:
        return 1 if i in self.i_plus else -1

    def alternating_arrows(self) -> Tuple[Tuple[int, int], ...]:
        """Each diagram edge oriented from the source part to the sink part."""
        out = []
        for a, b in self.edges:
            out.append((a, b) if a in self.i_minus else (b, a))
        return tuple(sorted(out))

    # -- reflections and tau --------------------------------------------------

    def reflect(self, i: int, v: Sequence[int]) -> Vec:
        """Simple reflection at vertex i, in simple-root coordinates."""
        out = list(v)
        out[i - 1] = -v[i - 1] + sum(v[j - 1] for j in self.adj[i])
        return tuple(out)

    def tau(self, eps: int, v: Sequence[int]) -> Vec:
        """Tropical reflection at every vertex of sign eps; an involution."""
        part = self.i_plus if eps > 0 else self.i_minus
        out = list(v)
        for i in part:
            out[i - 1] = -v[i - 1] + sum(max(v[j - 1], 0) for j in self.adj[i])
        return tuple(out)

    def tau_plus(self, v) -> Vec:
        return self.tau(+1, v)

    def tau_minus(self, v) -> Vec:
        return self.tau(-1, v)

    def coxeter(self, v) -> Vec:
        """Linear Coxeter transformation: all sink reflections, then all sources."""
        for i in sorted(self.i_plus):
            v = self.reflect(i, v)
        for i in sorted(self.i_minus):
            v = self.reflect(i, v)
        return tuple(v)

    def coxeter_inv(self, v) -> Vec:
        for i in sorted(self.i_minus):
            v = self.reflect(i, v)
        for i in sorted(self.i_plus):
            v = self.reflect(i, v)
        return tuple(v)

    # -- compatibility --------------------------------------------------------

    def _loop_bound(self) -> int:
        return 2 * (self.coxeter_number + 2) + 2

    def compatibility_degree(self, alpha, beta) -> int:
        """How strongly beta is incompatible with alpha; 0 means compatible."""
        alpha, beta = tuple(alpha), tuple(beta)
        if not self.is_almost_positive(alpha) or not self.is_almost_positive(beta):
            raise ValueError("compatibility degree needs almost positive roots")
        eps = +1
        for _ in range(self._loop_bound()):
            j = self.neg_simple_index(alpha)
            if j is not None:
                return max(beta[j - 1], 0)
            alpha = self.tau(eps, alpha)
            beta = self.tau(eps, beta)
            eps = -eps
        raise ContractViolationError("orbit did not reach a negative simple root")

    def is_compatible(self, alpha, beta) -> bool:
        return self.compatibility_degree(alpha, beta) == 0

    def is_exchangeable(self, alpha, beta) -> bool:
        return (
            tuple(alpha) != tuple(beta)
            and self.compatibility_degree(alpha, beta) == 1
            and self.compatibility_degree(beta, alpha) == 1
        )

    def sign_eps(self, beta, bprime) -> int:
        """The sign attached to an ordered exchangeable pair; skew-symmetric."""
        a, b = tuple(beta), tuple(bprime)
        if not self.is_exchangeable(a, b):
            raise NotExchangeableError(f"{a} and {b} are not exchangeable")
        sign, eps = 1, +1
        for _ in range(self._loop_bound()):
            j = self.neg_simple_index(a)
            if j is not None:
                return -sign * self.vertex_sign(j)
            j = self.neg_simple_index(b)
            if j is not None:
                return sign * self.vertex_sign(j)
            a, b = self.tau(eps, a), self.tau(eps, b)
            sign, eps = -sign, -eps
        raise ContractViolationError("sign reduction did not terminate")

    def uplus(self, beta, bprime) -> Vec:
        """Modified sum of an exchangeable pair.

        Over all alternating words w in the two tau maps, the vectors
        w^-1(w(beta) + w(bprime)) take exactly two values; one is the plain
        sum beta + bprime and the other is returned here.
        """
        beta, bprime = tuple(beta), tuple(bprime)
        if not self.is_exchangeable(beta, bprime):
            raise NotExchangeableError(f"{beta} and {bprime} are not exchangeable")
        plain = tuple(x + y for x, y in zip(beta, bprime))
        stable_len = self.coxeter_number + 2
        short, full = set(), set()
        for start in (+1, -1):
            word: List[int] = []
            for _ in range(self._loop_bound() + 1):
                a, b = beta, bprime
                for e in word:
                    a, b = self.tau(e, a), self.tau(e, b)
                s = tuple(x + y for x, y in zip(a, b))
                for e in reversed(word):
                    s = self.tau(e, s)
                full.add(s)
                if len(word) <= stable_len:
                    short.add(s)
                word.append(start if not word else -word[-1])
        if short != full:
            raise ContractViolationError("orbit sums did not stabilise")
        if len(full) != 2:
            raise ContractViolationError(f"expected two orbit sums, got {sorted(full)}")
        (other,) = full - {plain}
        return other

    # -- linear algebra over Q ------------------------------------------------

    def expand_in_basis(self, vec, basis) -> Optional[List[Fraction]]:
        """Coefficients of vec in the given basis of lattice vectors, or None."""
        cols = [tuple(b) for b in basis]
        a = [[Fraction(cols[j][i]) for j in range(len(cols))] for i in range(self.n)]
        return exactla.solve(a, [Fraction(x) for x in vec])


@lru_cache(maxsize=None)
def _cached_root_system(name: str) -> RootSystem:
    return RootSystem(name)


def root_system(dtype) -> RootSystem:
    return _cached_root_system(DynkinType.parse(dtype).name)
