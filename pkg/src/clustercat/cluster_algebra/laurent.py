"""Integer Laurent polynomials in n commuting variables.

Terms are stored sparsely as a dict from exponent tuples to nonzero int
coefficients.  Division is only ever exact here; a nonzero remainder is
reported as a contract violation because the callers rely on the Laurent
property of cluster mutation.
"""

from __future__ import annotations

from typing import Dict, Iterable, Tuple

from ..errors import ContractViolationError

Exponent = Tuple[int, ...]


class Laurent:
    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Dict[Exponent, int]):
        self.n = n
        self.terms = {e: c for e, c in terms.items() if c != 0}
        self._hash = None

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Laurent":
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> "Laurent":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def var(cls, n: int, i: int) -> "Laurent":
        """The variable x_i, 1-based."""
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def monomial(cls, n: int, exps: Iterable[int], coeff: int = 1) -> "Laurent":
        return cls(n, {tuple(exps): coeff})

    # -- ring structure -------------------------------------------------------

    def __add__(self, other: "Laurent") -> "Laurent":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Laurent(self.n, out)

    def __neg__(self) -> "Laurent":
        return Laurent(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other: "Laurent") -> "Laurent":
        out: Dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Laurent(self.n, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Laurent) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.n: 1}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- division -------------------------------------------------------------

    def exact_div(self, other: "Laurent") -> "Laurent":
        """Exact quotient self / other; raises if the division has a remainder.

        Both operands are shifted into the polynomial ring first so that
        lex order on the exponents is a well-order and the loop must stop.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return Laurent.zero(self.n)
        s_f = [-min(e[i] for e in self.terms) for i in range(self.n)]
        s_g = [-min(e[i] for e in other.terms) for i in range(self.n)]
        rem = {tuple(a + b for a, b in zip(e, s_f)): c for e, c in self.terms.items()}
        div = {tuple(a + b for a, b in zip(e, s_g)): c for e, c in other.terms.items()}
        lead = max(div)
        lead_c = div[lead]
        adjust = tuple(a - b for a, b in zip(s_g, s_f))
        quot: Dict[Exponent, int] = {}
        while rem:
            e = max(rem)
            if any(a < b for a, b in zip(e, lead)):
                raise ContractViolationError("inexact Laurent division (monomial)")
            q, r = divmod(rem[e], lead_c)
            if r != 0:
                raise ContractViolationError("inexact Laurent division (coefficient)")
            shift = tuple(a - b for a, b in zip(e, lead))
            quot[tuple(a + b for a, b in zip(shift, adjust))] = q
            for e2, c2 in div.items():
                e3 = tuple(a + b for a, b in zip(shift, e2))
                nc = rem.get(e3, 0) - q * c2
                if nc:
                    rem[e3] = nc
                else:
                    rem.pop(e3, None)
        return Laurent(self.n, quot)

    # -- denominators ---------------------------------------------------------

    def denominator_exponents(self) -> Tuple[int, ...]:
        """d with self = P / prod x_i^{d_i}, P a polynomial prime to every x_i."""
        if self.is_zero():
            raise ValueError("zero has no denominator vector")
        return tuple(-min(e[i] for e in self.terms) for i in range(self.n))

    # -- printing -------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def to_str(self, names=None) -> str:
        if self.is_zero():
            return "0"
        if names is None:
            names = [f"x{i}" for i in range(1, self.n + 1)]
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(names[i])
                elif k != 0:
                    factors.append(f"{names[i]}^{k}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        out = " + ".join(parts).replace("+ -", "- ")
        return out

    def __repr__(self):
        return f"Laurent({self.to_str()})"
