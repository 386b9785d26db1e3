"""Built-in nonlinearities, expanded symbolically into monomials.

Every builtin is a small frozen dataclass; :func:`build_spec` expands it.
:func:`create_builtin` builds one from a name and keyword parameters, which
is how experiment configs refer to them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Sequence, Tuple, Union

from .monomial import U, UBAR, Monomial, Polynomial, add, differentiate, multiply, scale, term
from .spec import GAMMAS, NonlinearitySpec

CUBIC_BLOCKS = ("recursion", "displayed")


@dataclass(frozen=True)
class General:
    """An explicit list of monomials."""

    monomials: Tuple[Monomial, ...]
    gamma: int | None = None


@dataclass(frozen=True)
class GaugePower:
    """``d^gamma P_m(u, u-bar)`` with ``P_m = sum_k C_k u^k u-bar^(m-k)``.

    ``coeffs`` holds ``C_0 .. C_m``; the degree ``m`` is ``len(coeffs) - 1``.
    """

    gamma: int
    coeffs: Tuple[complex, ...]


@dataclass(frozen=True)
class PurePower:
    """``d^gamma (u^m)``."""

    gamma: int
    m: int


@dataclass(frozen=True)
class Dnls:
    """``-i d(|u|^2 u)``, the derivative NLS right-hand side."""


@dataclass(frozen=True)
class FukumotoMoffatt:
    """The vortex-filament nonlinearity of degree 3..5 with two second-order derivatives.

    The linear part that goes with it is ``nu d^4 + d^2``. It is integrable
    exactly when ``2 mu = -nu``.
    """

    mu: float
    nu: float

    @property
    def lambdas(self) -> Tuple[float, float, float, float, float]:
        mu, nu = self.mu, self.nu
        return (0.75 * mu, 2.0 * mu - 0.5 * nu, 4.0 * mu + nu, mu, 2.0 * mu - nu)

    @property
    def integrable(self) -> bool:
        return math.isclose(2.0 * self.mu, -self.nu, rel_tol=1e-12, abs_tol=1e-15)


@dataclass(frozen=True)
class DnlsHierarchyN2:
    """The integrable septic nonlinearity of the second DNLS hierarchy flow.

    ``cubic="recursion"`` uses the cubic block produced by the recursion
    operator; ``cubic="displayed"`` keeps ``-3 (du)^2 u-bar + d^2(|u|^2) u``.
    The two differ only in the cubic terms.
    """

    cubic: str = "recursion"


Builtin = Union[General, GaugePower, PurePower, Dnls, FukumotoMoffatt, DnlsHierarchyN2]


# ---------------------------------------------------------------------------
# Expansion
# ---------------------------------------------------------------------------


def _check_finite(*values: complex) -> None:
    for v in values:
        if not (math.isfinite(complex(v).real) and math.isfinite(complex(v).imag)):
            raise ValueError(f"Builtin parameters must be finite, got {v!r}")


def _check_gamma(gamma: int) -> None:
    if gamma not in GAMMAS:
        raise ValueError(f"Derivative order gamma must be 1, 2 or 3, got {gamma!r}")


def _power(p: Polynomial, k: int) -> Polynomial:
    return multiply(*([p] * k)) if k > 0 else term(1.0)


def _gauge_power(b: GaugePower) -> NonlinearitySpec:
    _check_gamma(b.gamma)
    _check_finite(*b.coeffs)
    m = len(b.coeffs) - 1
    if m < 3:
        raise ValueError(f"gauge_power needs degree m >= 3, got {m}")
    pieces = [
        scale(multiply(_power(U(), k), _power(UBAR(), m - k)), c)
        for k, c in enumerate(b.coeffs)
        if c != 0
    ]
    poly = differentiate(add(*pieces), b.gamma)
    if not poly:
        return NonlinearitySpec.zero(b.gamma, m)
    return NonlinearitySpec.from_monomials(poly, gamma=b.gamma)


def _pure_power(b: PurePower) -> NonlinearitySpec:
    if b.m < 3:
        raise ValueError(f"pure_power needs degree m >= 3, got {b.m}")
    coeffs = [0.0] * b.m + [1.0]
    return _gauge_power(GaugePower(b.gamma, tuple(coeffs)))


def _modulus_sq() -> Polynomial:
    return multiply(U(), UBAR())


def _dnls() -> NonlinearitySpec:
    return NonlinearitySpec.from_monomials(scale(differentiate(multiply(_modulus_sq(), U())), -1j))


def _fukumoto_moffatt(b: FukumotoMoffatt) -> NonlinearitySpec:
    _check_finite(b.mu, b.nu)
    if b.nu == 0.0:
        raise ValueError("The vortex-filament model needs a non-zero nu")
    l1, l2, l3, l4, l5 = b.lambdas
    q = _modulus_sq()
    poly = add(
        scale(multiply(q, U()), -0.5),
        scale(multiply(q, q, U()), l1),
        scale(multiply(U(1), U(1), UBAR()), l2),
        scale(multiply(U(1), UBAR(1), U()), l3),
        scale(multiply(U(), U(), UBAR(2)), l4),
        scale(multiply(q, U(2)), l5),
    )
    return NonlinearitySpec.from_monomials(poly, gamma=2)


def _hierarchy_n2(b: DnlsHierarchyN2) -> NonlinearitySpec:
    if b.cubic not in CUBIC_BLOCKS:
        raise ValueError(f"Unsupported cubic block: {b.cubic!r}")
    q = _modulus_sq()
    # J = u-bar du - u du-bar
    j = add(multiply(UBAR(), U(1)), scale(multiply(U(), UBAR(1)), -1.0))
    quintic = add(
        scale(differentiate(multiply(q, q, U())), 1.5),
        scale(multiply(j, q, U()), 3.0),
    )
    if b.cubic == "recursion":
        cubic = scale(
            add(
                differentiate(multiply(q, U()), 2),
                differentiate(multiply(j, U())),
                multiply(U(), differentiate(q, 2)),
                scale(multiply(U(1), UBAR(1), U()), -3.0),
            ),
            -1.0,
        )
    else:
        cubic = add(
            scale(multiply(U(1), U(1), UBAR()), -3.0),
            multiply(differentiate(q, 2), U()),
        )
    septic = scale(multiply(q, q, q, U()), 2.5j)
    poly = differentiate(add(quintic, scale(cubic, 1j), septic))
    return NonlinearitySpec.from_monomials(poly, gamma=3)


def build_spec(builtin: Builtin) -> NonlinearitySpec:
    """Expand a builtin into a canonical :class:`NonlinearitySpec`."""
    if isinstance(builtin, General):
        for t in builtin.monomials:
            _check_finite(t.coeff)
        return NonlinearitySpec.from_monomials(builtin.monomials, gamma=builtin.gamma)
    if isinstance(builtin, GaugePower):
        return _gauge_power(builtin)
    if isinstance(builtin, PurePower):
        return _pure_power(builtin)
    if isinstance(builtin, Dnls):
        return _dnls()
    if isinstance(builtin, FukumotoMoffatt):
        return _fukumoto_moffatt(builtin)
    if isinstance(builtin, DnlsHierarchyN2):
        return _hierarchy_n2(builtin)
    raise ValueError(f"Unsupported builtin: {builtin!r}")


def create_builtin(name: str, **params: Any) -> Builtin:
    """Build a builtin from its config name.

    Raises ``ValueError`` for an unknown name; wrong parameters surface as
    ``TypeError`` from the dataclass constructor and are re-raised as
    ``ValueError``.
    """
    factories = {
        "gauge_power": GaugePower,
        "pure_power": PurePower,
        "dnls": Dnls,
        "fukumoto_moffatt": FukumotoMoffatt,
        "dnls_hierarchy_n2": DnlsHierarchyN2,
    }
    if name not in factories:
        raise ValueError(f"Unsupported nonlinearity: {name!r}")
    if "coeffs" in params:
        params["coeffs"] = tuple(_as_complex(c) for c in params["coeffs"])
    try:
        return factories[name](**params)
    except TypeError as exc:
        raise ValueError(f"Bad parameters for {name!r}: {exc}") from exc


def _as_complex(value: Union[complex, float, Sequence[float]]) -> complex:
    """Accept ``[re, im]`` pairs as written in JSON configs."""
    if isinstance(value, (list, tuple)):
        re, im = value
        return complex(re, im)
    return complex(value)


def gauge_cubic(gamma: int = 1) -> NonlinearitySpec:
    """``d^gamma (|u|^2 u)``."""
    return build_spec(GaugePower(gamma, (0.0, 0.0, 1.0, 0.0)))
