"""Truncated formal power series with exact coefficients.

A :class:`TruncatedSeries` keeps coefficients for degrees ``0..order`` in one
formal variable; degrees beyond the order are unknown, never assumed zero, and
no operation ever reports one.  Mixing two series takes the minimum order, so
precision loss is always explicit.  Coefficients may be ints, Fractions, or
:class:`~wittkit.polynomials.SparsePolynomial` values.

:class:`MultiTruncatedSeries` is the several-variable analogue, truncated in
total degree.  Two formal variables is the common case (group laws), three
appear when checking associativity.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .polynomials import (
    SparsePolynomial,
    Value,
    _is_scalar,
    values_equal,
)


class TruncationError(ValueError):
    """An operation asked for coefficients beyond the truncation order."""


def _is_zero(v: Value) -> bool:
    return values_equal(v, 0)


class TruncatedSeries:
    """One-variable formal power series truncated at a stated order."""

    __slots__ = ("variable", "order", "coefficients")

    def __init__(self, variable: str, coefficients: Iterable[Value], order: int | None = None):
        coeffs = list(coefficients)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(coeffs) < order + 1:
            coeffs.extend([0] * (order + 1 - len(coeffs)))
        elif len(coeffs) > order + 1:
            raise TruncationError(
                f"{len(coeffs)} coefficients supplied for truncation order {order}"
            )
        self.variable = variable
        self.order = order
        self.coefficients = tuple(coeffs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variable: str, order: int) -> "TruncatedSeries":
        return cls(variable, [], order)

    @classmethod
    def constant(cls, value: Value, variable: str, order: int) -> "TruncatedSeries":
        return cls(variable, [value], order)

    @classmethod
    def identity(cls, variable: str, order: int) -> "TruncatedSeries":
        """The series ``t``."""
        if order < 1:
            raise ValueError("identity series needs order >= 1")
        return cls(variable, [0, 1], order)

    # -- queries -------------------------------------------------------------

    def coefficient(self, degree: int) -> Value:
        if degree < 0:
            raise IndexError("negative degree")
        if degree > self.order:
            raise TruncationError(
                f"coefficient of degree {degree} unknown at truncation order {self.order}"
            )
        return self.coefficients[degree]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise TruncationError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.variable, self.coefficients[: order + 1], order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.variable == other.variable
            and self.order == other.order
            and all(values_equal(a, b) for a, b in zip(self.coefficients, other.coefficients))
        )

    def __hash__(self):
        return hash((self.variable, self.order, len(self.coefficients)))

    def __str__(self) -> str:
        from .polynomials import format_value

        parts = []
        for k, c in enumerate(self.coefficients):
            if _is_zero(c):
                continue
            text = format_value(c)
            if k == 0:
                parts.append(text)
            else:
                parts.append(f"({text})*{self.variable}^{k}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({self.variable}^{self.order + 1})"

    __repr__ = __str__

    def _check_same_variable(self, other: "TruncatedSeries") -> None:
        if self.variable != other.variable:
            raise ValueError(
                f"series variables differ: {self.variable!r} vs {other.variable!r}"
            )

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        if _is_scalar(other) or isinstance(other, SparsePolynomial):
            coeffs = list(self.coefficients)
            coeffs[0] = coeffs[0] + other
            return TruncatedSeries(self.variable, coeffs, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_same_variable(other)
        order = min(self.order, other.order)
        return TruncatedSeries(
            self.variable,
            [self.coefficients[k] + other.coefficients[k] for k in range(order + 1)],
            order,
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.variable, [-c for c in self.coefficients], self.order)

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            return self + (-other)
        if _is_scalar(other) or isinstance(other, SparsePolynomial):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, value: Value) -> "TruncatedSeries":
        return TruncatedSeries(self.variable, [c * value for c in self.coefficients], self.order)

    def __mul__(self, other):
        if _is_scalar(other) or isinstance(other, SparsePolynomial):
            return self.scale(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_same_variable(other)
        order = min(self.order, other.order)
        coeffs: list[Value] = [0] * (order + 1)
        for i in range(order + 1):
            a = self.coefficients[i]
            if _is_zero(a):
                continue
            for j in range(order + 1 - i):
                b = other.coefficients[j]
                if _is_zero(b):
                    continue
                coeffs[i + j] = coeffs[i + j] + a * b
        return TruncatedSeries(self.variable, coeffs, order)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TruncatedSeries":
        if not isinstance(n, int) or n < 0:
            raise ValueError("series powers take nonnegative integer exponents")
        result = TruncatedSeries.constant(1, self.variable, self.order)
        for _ in range(n):
            result = result * self
        return result

    # -- the three nontrivial operations --------------------------------------

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse of a series with constant term 1.

        >>> one_minus_t = TruncatedSeries("t", [1, -1], 3)
        >>> one_minus_t.inverse().coefficients
        (1, 1, 1, 1)
        """
        if not values_equal(self.coefficients[0], 1):
            raise ValueError("series inverse requires constant term 1")
        coeffs: list[Value] = [1] + [0] * self.order
        for n in range(1, self.order + 1):
            acc: Value = 0
            for k in range(1, n + 1):
                a = self.coefficients[k]
                if _is_zero(a):
                    continue
                acc = acc + a * coeffs[n - k]
            coeffs[n] = -acc
        return TruncatedSeries(self.variable, coeffs, self.order)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Substitute ``inner`` (zero constant term) into this series."""
        if not isinstance(inner, TruncatedSeries):
            raise TypeError("compose expects a TruncatedSeries")
        if not _is_zero(inner.coefficients[0]):
            raise ValueError("composition requires the inner constant term to vanish")
        order = min(self.order, inner.order)
        inner = inner.truncate(order)
        result = TruncatedSeries.constant(self.coefficients[order], inner.variable, order)
        for k in range(order - 1, -1, -1):
            result = result * inner + self.coefficients[k]
        return result

    def reversion(self) -> "TruncatedSeries":
        """Compositional inverse of ``t + higher order``.

        Defined by ``self.compose(result) == t`` up to truncation; computed by
        filtration-contracting fixed-point iteration, so correctness rests
        only on the round-trip identity.
        """
        if self.order < 1:
            raise TruncationError("reversion needs order >= 1")
        if not _is_zero(self.coefficients[0]):
            raise ValueError("reversion requires zero constant term")
        if not values_equal(self.coefficients[1], 1):
            raise ValueError("reversion requires leading coefficient 1")
        t = TruncatedSeries.identity(self.variable, self.order)
        u = t
        for _ in range(self.order - 1):
            acc = t
            power = u
            for j in range(2, self.order + 1):
                power = power * u
                c = self.coefficients[j]
                if not _is_zero(c):
                    acc = acc - power.scale(c)
            u = acc
        return u


def series_inverse(s: TruncatedSeries) -> TruncatedSeries:
    return s.inverse()


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    return outer.compose(inner)


def series_reversion(s: TruncatedSeries) -> TruncatedSeries:
    return s.reversion()


class MultiTruncatedSeries:
    """Formal power series in several variables, truncated in total degree."""

    __slots__ = ("variables", "degree", "terms")

    def __init__(self, variables: Iterable[str], degree: int, terms=None):
        variables = tuple(variables)
        if degree < 0:
            raise ValueError("total-degree truncation must be nonnegative")
        clean: dict[tuple, Value] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise ValueError(f"exponent vector {exps!r} does not match {variables!r}")
            if sum(exps) > degree:
                raise TruncationError(
                    f"term {exps!r} exceeds total-degree truncation {degree}"
                )
            if not _is_zero(c):
                clean[exps] = clean.get(exps, 0) + c
        self.variables = variables
        self.degree = degree
        self.terms = {e: c for e, c in clean.items() if not _is_zero(c)}

    @classmethod
    def zero(cls, variables: Iterable[str], degree: int) -> "MultiTruncatedSeries":
        return cls(variables, degree, {})

    @classmethod
    def constant(cls, value: Value, variables: Iterable[str], degree: int) -> "MultiTruncatedSeries":
        variables = tuple(variables)
        return cls(variables, degree, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, name: str, variables: Iterable[str], degree: int) -> "MultiTruncatedSeries":
        variables = tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        if 1 not in exps:
            raise ValueError(f"{name!r} not among {variables!r}")
        return cls(variables, degree, {exps: 1})

    def coefficient(self, exps: Sequence[int]) -> Value:
        exps = tuple(exps)
        if sum(exps) > self.degree:
            raise TruncationError(
                f"coefficient {exps!r} unknown at total-degree truncation {self.degree}"
            )
        return self.terms.get(exps, 0)

    def sorted_terms(self) -> list[tuple[tuple, Value]]:
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def constant_coefficient(self) -> Value:
        return self.terms.get((0,) * len(self.variables), 0)

    def _check_compatible(self, other: "MultiTruncatedSeries") -> None:
        if self.variables != other.variables:
            raise ValueError(
                f"series variables differ: {self.variables!r} vs {other.variables!r}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiTruncatedSeries):
            return NotImplemented
        if self.variables != other.variables or self.degree != other.degree:
            return False
        keys = set(self.terms) | set(other.terms)
        return all(values_equal(self.terms.get(k, 0), other.terms.get(k, 0)) for k in keys)

    def __hash__(self):
        return hash((self.variables, self.degree, len(self.terms)))

    def __add__(self, other):
        if _is_scalar(other) or isinstance(other, SparsePolynomial):
            other = MultiTruncatedSeries.constant(other, self.variables, self.degree)
        if not isinstance(other, MultiTruncatedSeries):
            return NotImplemented
        self._check_compatible(other)
        degree = min(self.degree, other.degree)
        terms: dict[tuple, Value] = {}
        for source in (self.terms, other.terms):
            for e, c in source.items():
                if sum(e) <= degree:
                    terms[e] = terms.get(e, 0) + c
        return MultiTruncatedSeries(self.variables, degree, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiTruncatedSeries(
            self.variables, self.degree, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other):
        if isinstance(other, MultiTruncatedSeries):
            return self + (-other)
        return self + (-other)

    def scale(self, value: Value) -> "MultiTruncatedSeries":
        return MultiTruncatedSeries(
            self.variables, self.degree, {e: c * value for e, c in self.terms.items()}
        )

    def __mul__(self, other):
        if _is_scalar(other) or isinstance(other, SparsePolynomial):
            return self.scale(other)
        if not isinstance(other, MultiTruncatedSeries):
            return NotImplemented
        self._check_compatible(other)
        degree = min(self.degree, other.degree)
        terms: dict[tuple, Value] = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            if d1 > degree:
                continue
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > degree:
                    continue
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiTruncatedSeries(self.variables, degree, terms)

    __rmul__ = __mul__

    def map_coefficients(self, fn) -> "MultiTruncatedSeries":
        return MultiTruncatedSeries(
            self.variables, self.degree, {e: fn(c) for e, c in self.terms.items()}
        )

    def set_variable_zero(self, name: str) -> "MultiTruncatedSeries":
        """Substitute 0 for one variable, dropping it from the ring."""
        if name not in self.variables:
            raise ValueError(f"{name!r} not among {self.variables!r}")
        i = self.variables.index(name)
        rest = self.variables[:i] + self.variables[i + 1 :]
        terms = {
            e[:i] + e[i + 1 :]: c for e, c in self.terms.items() if e[i] == 0
        }
        return MultiTruncatedSeries(rest, self.degree, terms)

    def swap_variables(self, a: str, b: str) -> "MultiTruncatedSeries":
        i, j = self.variables.index(a), self.variables.index(b)
        terms = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[i], e2[j] = e2[j], e2[i]
            terms[tuple(e2)] = c
        return MultiTruncatedSeries(self.variables, self.degree, terms)

    def to_univariate(self, variable: str | None = None) -> TruncatedSeries:
        if len(self.variables) != 1:
            raise ValueError("only single-variable series convert to TruncatedSeries")
        name = variable or self.variables[0]
        coeffs = [0] * (self.degree + 1)
        for (e,), c in self.terms.items():
            coeffs[e] = c
        return TruncatedSeries(name, coeffs, self.degree)


def substitute_univariate(outer: TruncatedSeries, inner: MultiTruncatedSeries) -> MultiTruncatedSeries:
    """Evaluate a one-variable series at a multivariate argument."""
    if not _is_zero(inner.constant_coefficient()):
        raise ValueError("composition requires the inner constant term to vanish")
    degree = min(outer.order, inner.degree)
    result = MultiTruncatedSeries.constant(
        outer.coefficients[degree], inner.variables, degree
    )
    inner = MultiTruncatedSeries(
        inner.variables, degree, {e: c for e, c in inner.terms.items() if sum(e) <= degree}
    )
    for k in range(degree - 1, -1, -1):
        result = result * inner + outer.coefficients[k]
    return result


def compose_multivariate(
    f: MultiTruncatedSeries, args: Sequence[MultiTruncatedSeries]
) -> MultiTruncatedSeries:
    """Evaluate ``f(x_1, ..., x_n)`` at multivariate series arguments."""
    if len(args) != len(f.variables):
        raise ValueError("argument count does not match variable count")
    if not args:
        raise ValueError("need at least one argument")
    variables = args[0].variables
    degree = min([f.degree] + [a.degree for a in args])
    for a in args:
        if a.variables != variables:
            raise ValueError("arguments must share one variable tuple")
        if not _is_zero(a.constant_coefficient()):
            raise ValueError("composition requires zero constant terms")
    max_exp = [0] * len(f.variables)
    for e in f.terms:
        for i, x in enumerate(e):
            max_exp[i] = max(max_exp[i], x)
    powers: list[list[MultiTruncatedSeries]] = []
    for i, a in enumerate(args):
        row = [MultiTruncatedSeries.constant(1, variables, degree)]
        current = row[0]
        a = MultiTruncatedSeries(
            variables, degree, {e: c for e, c in a.terms.items() if sum(e) <= degree}
        )
        for _ in range(max_exp[i]):
            current = current * a
            row.append(current)
        powers.append(row)
    result = MultiTruncatedSeries.zero(variables, degree)
    for e, c in f.terms.items():
        term = MultiTruncatedSeries.constant(c, variables, degree)
        for i, x in enumerate(e):
            if x:
                term = term * powers[i][x]
        result = result + term
    return result
