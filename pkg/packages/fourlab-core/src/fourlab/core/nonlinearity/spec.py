"""The nonlinearity ``G_gamma^{m,l}`` as an immutable list of monomials."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .monomial import Monomial, Polynomial, canonical

#: Derivative orders the evaluator and the index calculators support.
GAMMAS = (1, 2, 3)


@dataclass(frozen=True)
class NonlinearitySpec:
    """A polynomial nonlinearity with at most ``gamma`` derivatives per factor.

    ``m`` and ``l`` are the lowest and highest total degrees. They are
    derived from the monomials; an empty spec (the zero nonlinearity) keeps
    the degrees it was built with.
    """

    gamma: int
    monomials: Polynomial
    m: int
    l: int  # noqa: E741

    def __post_init__(self) -> None:
        object.__setattr__(self, "monomials", tuple(self.monomials))
        if self.gamma not in GAMMAS:
            raise ValueError(f"Derivative order gamma must be 1, 2 or 3, got {self.gamma!r}")
        if not 3 <= self.m <= self.l:
            raise ValueError(f"Degrees need 3 <= m <= l, got m={self.m!r}, l={self.l!r}")
        if self.monomials:
            degrees = [t.degree for t in self.monomials]
            if (min(degrees), max(degrees)) != (self.m, self.l):
                raise ValueError(
                    f"Degrees m={self.m}, l={self.l} do not match the monomials "
                    f"({min(degrees)}..{max(degrees)})"
                )
            top = max(t.max_order for t in self.monomials)
            if top > 3:
                raise ValueError(f"Derivative order {top} exceeds 3")
            if top != self.gamma:
                raise ValueError(f"gamma={self.gamma} but the highest derivative order is {top}")

    @classmethod
    def from_monomials(
        cls, monomials: Iterable[Monomial], gamma: Optional[int] = None
    ) -> NonlinearitySpec:
        """Canonicalize *monomials* and read ``gamma``, ``m`` and ``l`` off them."""
        terms = canonical(monomials)
        if not terms:
            raise ValueError("No non-zero monomials; use NonlinearitySpec.zero")
        degrees = [t.degree for t in terms]
        top = max(t.max_order for t in terms)
        return cls(top if gamma is None else gamma, terms, min(degrees), max(degrees))

    @classmethod
    def zero(
        cls, gamma: int = 1, m: int = 3, l: Optional[int] = None  # noqa: E741
    ) -> NonlinearitySpec:
        return cls(gamma, (), m, m if l is None else l)

    @property
    def is_zero(self) -> bool:
        return not self.monomials

    @property
    def orders(self) -> Tuple[int, ...]:
        """Derivative orders needed to evaluate the spec."""
        found = {k for t in self.monomials for k in t.u + t.ubar}
        return tuple(sorted(found))

    def scaled(self, c: complex) -> NonlinearitySpec:
        terms = canonical(t.scaled(c) for t in self.monomials)
        if not terms:
            return NonlinearitySpec.zero(self.gamma, self.m, self.l)
        return NonlinearitySpec(self.gamma, terms, self.m, self.l)

    def conjugated(self) -> NonlinearitySpec:
        """Spec of ``conj(G(u))`` written as a polynomial in ``u``."""
        return NonlinearitySpec(
            self.gamma, canonical(t.conjugated() for t in self.monomials), self.m, self.l
        )

    def __len__(self) -> int:
        return len(self.monomials)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(str(t) for t in self.monomials)
