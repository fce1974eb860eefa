"""One-dimensional formal group laws from logarithms, and their curves.

A logarithm is a sequence of integral coefficients ``a_1..a_M`` with
``a_1 = 1``, standing for ``l(t) = sum a_m/m t^m``.  The group law it
generates is ``G(t1, t2) = l^(-1)(l(t1) + l(t2))``; whether the law has
integral coefficients is a certificate checked after synthesis, never an
assumption.

Curves in the formal group are kept in log-coordinates ``eta = l(gamma)``:
formal-group addition becomes literal addition of series, scaling ``gamma(t)
-> gamma(at)`` multiplies the m-th coefficient by ``a^m``, ``V_k`` is the
substitution ``t -> t^k``, and ``F_k`` collapses to the reindexing

    eta = sum c_m t^m   |-->   F_k eta = sum_m' k * c_{k m'} t^m',

so no roots of unity are ever constructed.  The t-coordinate form
``gamma = l^(-1)(eta)`` is recovered on demand by series reversion.

For the multiplicative law (all ``a_m = 1``) the map ``gamma(t) ->
(1 - gamma(t))^(-1)`` identifies curves with Witt vectors and intertwines
every operator here with its Witt counterpart.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .polynomials import (
    NonIntegralError,
    Value,
    as_integral,
    is_integral,
    values_equal,
)
from .series import (
    MultiTruncatedSeries,
    TruncatedSeries,
    substitute_univariate,
)
from .witt import WittVector


class AmbientMismatchError(ValueError):
    """Two curves do not live over the same logarithm and truncation."""


class Logarithm:
    """Integral coefficient sequence ``a_1..a_M`` of a formal group logarithm."""

    __slots__ = ("ring", "coeffs", "_reversion_cache")

    def __init__(self, ring: str, coeffs: Iterable[Value]):
        if ring not in ("Z", "Z[x]"):
            raise ValueError(f"unsupported parameter ring {ring!r}")
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a logarithm needs at least the coefficient a_1")
        checked = []
        for m, a in enumerate(coeffs, start=1):
            try:
                checked.append(as_integral(a))
            except NonIntegralError as exc:
                raise ValueError(f"coefficient a_{m} must be integral: {exc}") from exc
        if not values_equal(checked[0], 1):
            raise ValueError("a logarithm requires a_1 = 1")
        self.ring = ring
        self.coeffs = tuple(checked)
        self._reversion_cache: dict[int, TruncatedSeries] = {}

    @property
    def truncation(self) -> int:
        return len(self.coeffs)

    def coefficient(self, m: int) -> Value:
        """The stored integral coefficient ``a_m`` (1-indexed)."""
        if m < 1 or m > self.truncation:
            raise ValueError(f"a_{m} is outside truncation {self.truncation}")
        return self.coeffs[m - 1]

    def series(self, order: int | None = None, variable: str = "t") -> TruncatedSeries:
        """``l(t) = sum a_m/m t^m`` as a truncated series."""
        order = self.truncation if order is None else order
        if order > self.truncation:
            raise ValueError(f"order {order} exceeds logarithm truncation {self.truncation}")
        coeffs: list[Value] = [0]
        for m in range(1, order + 1):
            coeffs.append(self.coeffs[m - 1] * Fraction(1, m))
        return TruncatedSeries(variable, coeffs, order)

    def inverse_series(self, order: int, variable: str = "t") -> TruncatedSeries:
        """Compositional inverse of the logarithm, cached per order."""
        cached = self._reversion_cache.get(order)
        if cached is None:
            cached = self.series(order, variable).reversion()
            self._reversion_cache[order] = cached
        if cached.variable != variable:
            return TruncatedSeries(variable, cached.coefficients, order)
        return cached

    def __eq__(self, other) -> bool:
        if not isinstance(other, Logarithm):
            return NotImplemented
        return self.ring == other.ring and len(self.coeffs) == len(other.coeffs) and all(
            values_equal(a, b) for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.ring, len(self.coeffs)))

    def __repr__(self):
        return f"Logarithm({self.ring!r}, {list(self.coeffs)!r})"

    def is_multiplicative(self) -> bool:
        return all(values_equal(a, 1) for a in self.coeffs)


def additive_logarithm(truncation: int) -> Logarithm:
    """l(t) = t, the additive law."""
    return Logarithm("Z", [1] + [0] * (truncation - 1))


def multiplicative_logarithm(truncation: int) -> Logarithm:
    """All coefficients 1; the law t1 + t2 - t1*t2."""
    return Logarithm("Z", [1] * truncation)


class FormalGroupLaw:
    """A synthesized two-variable law together with its source logarithm."""

    __slots__ = ("series", "logarithm")

    def __init__(self, series: MultiTruncatedSeries, logarithm: Logarithm):
        if len(series.variables) != 2:
            raise ValueError("a one-dimensional law is a series in two variables")
        self.series = series
        self.logarithm = logarithm

    @property
    def degree(self) -> int:
        return self.series.degree

    @property
    def variables(self) -> tuple[str, str]:
        return self.series.variables

    def coefficient(self, i: int, j: int) -> Value:
        return self.series.coefficient((i, j))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalGroupLaw):
            return NotImplemented
        return self.series == other.series

    def __hash__(self):
        return hash(self.series)

    def as_integral(self) -> "FormalGroupLaw":
        """The same law with coefficients certified integral (raises if not)."""
        return FormalGroupLaw(self.series.map_coefficients(as_integral), self.logarithm)


def group_law_from_logarithm(
    log: Logarithm, degree: int, variables: tuple[str, str] = ("t1", "t2")
) -> FormalGroupLaw:
    """Synthesize ``G = l^(-1)(l(t1) + l(t2))`` to the given total degree."""
    if degree > log.truncation:
        raise ValueError(
            f"total degree {degree} exceeds logarithm truncation {log.truncation}"
        )
    if degree < 1:
        raise ValueError("total degree must be >= 1")
    ell = log.series(degree)
    summed = MultiTruncatedSeries.zero(variables, degree)
    for which in (0, 1):
        terms = {}
        for m in range(1, degree + 1):
            exps = (m, 0) if which == 0 else (0, m)
            terms[exps] = ell.coefficients[m]
        summed = summed + MultiTruncatedSeries(variables, degree, terms)
    inverse = log.inverse_series(degree)
    law = substitute_univariate(inverse, summed)
    return FormalGroupLaw(law, log)


class IntegralityReport:
    """Outcome of the denominator certificate for a synthesized law."""

    __slots__ = ("passed", "failures")

    def __init__(self, failures):
        self.failures = tuple(failures)
        self.passed = not self.failures

    def __bool__(self) -> bool:
        return self.passed

    def __repr__(self):
        if self.passed:
            return "IntegralityReport(pass)"
        return f"IntegralityReport(failures={[(i, j) for i, j, _ in self.failures]})"


def integrality_report(law: FormalGroupLaw) -> IntegralityReport:
    """List every coefficient of the law that carries a denominator."""
    failures = []
    for (i, j), c in law.series.sorted_terms():
        if not is_integral(c):
            failures.append((i, j, c))
    return IntegralityReport(failures)


class Curve:
    """A formal curve, stored in log-coordinates ``eta = l(gamma)``."""

    __slots__ = ("logarithm", "eta")

    def __init__(self, logarithm: Logarithm, eta: TruncatedSeries):
        if not values_equal(eta.coefficient(0), 0):
            raise ValueError("curves have zero constant term")
        if eta.order > logarithm.truncation:
            raise ValueError(
                f"curve truncation {eta.order} exceeds logarithm truncation "
                f"{logarithm.truncation}"
            )
        self.logarithm = logarithm
        self.eta = eta

    @property
    def order(self) -> int:
        return self.eta.order

    @classmethod
    def from_gamma(cls, logarithm: Logarithm, gamma: TruncatedSeries) -> "Curve":
        """Build a curve from its t-coordinate form gamma (zero constant term)."""
        return cls(logarithm, logarithm.series(gamma.order, gamma.variable).compose(gamma))

    def gamma(self) -> TruncatedSeries:
        """Recover the t-coordinate form ``gamma = l^(-1)(eta)``."""
        return self.logarithm.inverse_series(self.order, self.eta.variable).compose(self.eta)

    def is_zero(self) -> bool:
        return all(values_equal(c, 0) for c in self.eta.coefficients)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Curve):
            return NotImplemented
        return self.logarithm == other.logarithm and self.eta == other.eta

    def __hash__(self):
        return hash((self.logarithm, self.eta))

    def __repr__(self):
        return f"Curve(order={self.order}, eta={self.eta})"


def canonical_curve(log: Logarithm, order: int | None = None) -> Curve:
    """The coordinatizing curve gamma(t) = t, i.e. eta = l(t)."""
    order = log.truncation if order is None else order
    return Curve(log, log.series(order))


def _check_ambient(c1: Curve, c2: Curve) -> None:
    if c1.logarithm != c2.logarithm or c1.order != c2.order:
        raise AmbientMismatchError(
            "curves must share a logarithm and truncation to be combined"
        )


def fg_add(c1: Curve, c2: Curve) -> Curve:
    """Formal-group addition; literal addition in log-coordinates."""
    _check_ambient(c1, c2)
    return Curve(c1.logarithm, c1.eta + c2.eta)


def fg_neg(c: Curve) -> Curve:
    return Curve(c.logarithm, -c.eta)


def curve_scale(a: Value, c: Curve) -> Curve:
    """The operator gamma(t) -> gamma(at): multiplies c_m by a^m."""
    coeffs: list[Value] = [0]
    for m in range(1, c.order + 1):
        coeffs.append(c.eta.coefficients[m] * a**m)
    return Curve(c.logarithm, TruncatedSeries(c.eta.variable, coeffs, c.order))


def curve_verschiebung(k: int, c: Curve) -> Curve:
    """The operator gamma(t) -> gamma(t^k)."""
    if k < 1:
        raise ValueError("Verschiebung index must be >= 1")
    order = min(k * c.order + k - 1, c.logarithm.truncation)
    coeffs: list[Value] = [0] * (order + 1)
    for m in range(1, c.order + 1):
        if k * m <= order:
            coeffs[k * m] = c.eta.coefficients[m]
    return Curve(c.logarithm, TruncatedSeries(c.eta.variable, coeffs, order))


def curve_frobenius(k: int, c: Curve) -> Curve:
    """F_k in log-coordinates: coefficient m' of the result is k * c_{k m'}."""
    if k < 1:
        raise ValueError("Frobenius index must be >= 1")
    order = c.order // k
    if order < 1:
        raise ValueError(
            f"curve truncation {c.order} is insufficient for F_{k}"
        )
    coeffs: list[Value] = [0] * (order + 1)
    for m in range(1, order + 1):
        coeffs[m] = k * c.eta.coefficients[k * m]
    return Curve(c.logarithm, TruncatedSeries(c.eta.variable, coeffs, order))


def frobenius_matrix_1d(log: Logarithm, k: int) -> Value:
    """Degree-1 coefficient of F_k on the canonical curve; equals ``a_k``."""
    if k < 1 or k > log.truncation:
        raise ValueError(f"index {k} outside logarithm truncation {log.truncation}")
    image = curve_frobenius(k, canonical_curve(log, k))
    return as_integral(image.eta.coefficient(1))


def witt_cartier_bridge(c: Curve) -> WittVector:
    """Identify a curve over the multiplicative law with a Witt vector.

    Sends gamma(t) to the series ``(1 - gamma(t))^(-1)`` read off as a
    length-``n`` vector, ``n`` the curve truncation.  Under this map
    formal-group addition becomes Witt addition, gamma(at) becomes
    multiplication by the multiplicative lift of ``a``, and the V_k / F_k
    operators match on both sides.
    """
    if not c.logarithm.is_multiplicative():
        raise AmbientMismatchError(
            "the Witt identification needs the multiplicative law (all a_m = 1)"
        )
    gamma = c.gamma()
    one_minus = TruncatedSeries.constant(1, gamma.variable, gamma.order) - gamma
    return WittVector.from_series(one_minus.inverse())
