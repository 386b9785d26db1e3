"""Monomials in ``{d^k u}`` and ``{d^k u-bar}`` and the polynomial algebra on them.

A polynomial is a plain tuple of :class:`Monomial`. :func:`canonical` merges
like terms, drops exact zeros and sorts, so two expansions of the same
polynomial compare equal.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, Sequence, Tuple

Key = Tuple[Tuple[int, ...], Tuple[int, ...]]
Polynomial = Tuple["Monomial", ...]


def _orders(values: Iterable[int], label: str) -> Tuple[int, ...]:
    out = []
    for k in values:
        if int(k) != k or k < 0:
            raise ValueError(
                f"Derivative orders of {label} must be non-negative integers, got {k!r}"
            )
        out.append(int(k))
    return tuple(sorted(out))


@dataclass(frozen=True)
class Monomial:
    """``coeff * prod_k d^k u * prod_l d^l u-bar``.

    ``u`` and ``ubar`` list the derivative order of every factor, with
    multiplicity; they are stored sorted.
    """

    coeff: complex
    u: Tuple[int, ...] = ()
    ubar: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", complex(self.coeff))
        object.__setattr__(self, "u", _orders(self.u, "u"))
        object.__setattr__(self, "ubar", _orders(self.ubar, "u-bar"))
        if self.degree < 1:
            raise ValueError("A monomial needs at least one factor")

    @property
    def key(self) -> Key:
        return (self.u, self.ubar)

    @property
    def degree(self) -> int:
        return len(self.u) + len(self.ubar)

    @property
    def max_order(self) -> int:
        return max(self.u + self.ubar)

    @property
    def total_order(self) -> int:
        return sum(self.u) + sum(self.ubar)

    def scaled(self, c: complex) -> Monomial:
        return Monomial(self.coeff * c, self.u, self.ubar)

    def times(self, other: Monomial) -> Monomial:
        return Monomial(self.coeff * other.coeff, self.u + other.u, self.ubar + other.ubar)

    def conjugated(self) -> Monomial:
        """The monomial ``conj(m(u))`` written in ``u``: swap factors, conjugate the constant."""
        return Monomial(self.coeff.conjugate(), self.ubar, self.u)

    def derivative(self) -> Polynomial:
        """Leibniz rule: raise each factor's order by one in turn."""
        terms = []
        for i in range(len(self.u)):
            raised = self.u[:i] + (self.u[i] + 1,) + self.u[i + 1 :]
            terms.append(Monomial(self.coeff, raised, self.ubar))
        for i in range(len(self.ubar)):
            raised = self.ubar[:i] + (self.ubar[i] + 1,) + self.ubar[i + 1 :]
            terms.append(Monomial(self.coeff, self.u, raised))
        return canonical(terms)

    def __str__(self) -> str:
        factors = [_factor("u", k) for k in self.u] + [_factor("ubar", k) for k in self.ubar]
        return f"({self.coeff:g})*" + "*".join(factors)


def _factor(name: str, k: int) -> str:
    return name if k == 0 else f"d{k}({name})"


# ---------------------------------------------------------------------------
# Polynomial algebra
# ---------------------------------------------------------------------------


def canonical(terms: Iterable[Monomial]) -> Polynomial:
    """Merge like terms, drop exact zeros, sort by degree and exponent pattern."""
    merged: Dict[Key, complex] = defaultdict(complex)
    for t in terms:
        merged[t.key] += t.coeff
    kept = [Monomial(c, u, ub) for (u, ub), c in merged.items() if c != 0]
    return tuple(sorted(kept, key=lambda m: (m.degree, m.key)))


def term(coeff: complex, u: Sequence[int] = (), ubar: Sequence[int] = ()) -> Polynomial:
    return (Monomial(coeff, tuple(u), tuple(ubar)),)


def add(*polys: Polynomial) -> Polynomial:
    return canonical(m for p in polys for m in p)


def scale(p: Polynomial, c: complex) -> Polynomial:
    return canonical(m.scaled(c) for m in p)


def multiply(*polys: Polynomial) -> Polynomial:
    if not polys:
        raise ValueError("multiply needs at least one factor")
    result = polys[0]
    for p in polys[1:]:
        result = canonical(a.times(b) for a in result for b in p)
    return result


def differentiate(p: Polynomial, k: int = 1) -> Polynomial:
    """``d_x^k`` of a polynomial."""
    if k < 0:
        raise ValueError(f"Derivative order must be non-negative, got {k!r}")
    for _ in range(k):
        p = canonical(t for m in p for t in m.derivative())
    return p


def conjugate(p: Polynomial) -> Polynomial:
    return canonical(m.conjugated() for m in p)


def U(k: int = 0) -> Polynomial:
    """``d^k u`` as a one-term polynomial."""
    return term(1.0, (k,))


def UBAR(k: int = 0) -> Polynomial:
    return term(1.0, (), (k,))
