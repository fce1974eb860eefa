"""Exact sparse multivariate polynomial arithmetic.

Coefficients are Python ints or :class:`fractions.Fraction` values; nothing in
this package ever touches floating point.  A polynomial is a map from exponent
vectors to nonzero coefficients, indexed by an ordered tuple of variable
names.  The stored form is canonical (no zero terms, exponent vectors of the
declared length), so two polynomials are equal exactly when their variable
tuples and term maps are equal.

Values are immutable after construction and every operation is a pure
function, so they are safe to share across threads.

>>> x = SparsePolynomial.variable("x")
>>> str(1 + 6 * x**3)
'1+6*x^3'
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

#: Exact rational scalars.  ``Fraction`` already maintains the canonical form
#: (gcd(|num|, den) = 1, den >= 1) required of every rational in this package.
ExactRational = Fraction

Scalar = Union[int, Fraction]
Value = Union[int, Fraction, "SparsePolynomial"]


class VariableMismatchError(ValueError):
    """An operation referenced variables a polynomial does not declare."""


class NonIntegralError(ValueError):
    """A value that must be integral has a nontrivial denominator."""


def _is_scalar(v) -> bool:
    return isinstance(v, (int, Fraction)) and not isinstance(v, bool)


class SparsePolynomial:
    """A multivariate polynomial with exact coefficients in canonical form."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple, Scalar] | None = None):
        variables = tuple(variables)
        nvars = len(variables)
        if len(set(variables)) != nvars:
            raise VariableMismatchError(f"duplicate variable names in {variables!r}")
        clean: dict[tuple, Scalar] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise VariableMismatchError(
                    f"exponent vector {exps!r} does not match variables {variables!r}"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps!r}")
            if not _is_scalar(c):
                raise TypeError(f"coefficient {c!r} is not an exact scalar")
            if c != 0:
                clean[exps] = clean.get(exps, 0) + c
        self.variables = variables
        self.terms = {e: c for e, c in clean.items() if c != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Iterable[str] = ()) -> "SparsePolynomial":
        return cls(variables, {})

    @classmethod
    def constant(cls, value: Scalar, variables: Iterable[str] = ()) -> "SparsePolynomial":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, name: str, variables: Iterable[str] | None = None) -> "SparsePolynomial":
        """The monomial ``name`` inside the ring with the given variables."""
        variables = (name,) if variables is None else tuple(variables)
        if name not in variables:
            raise VariableMismatchError(f"{name!r} not among {variables!r}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: 1})

    @classmethod
    def monomial(cls, variables: Iterable[str], exponents: Iterable[int], coefficient: Scalar = 1) -> "SparsePolynomial":
        return cls(variables, {tuple(exponents): coefficient})

    # -- basic queries -----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self) -> Scalar | None:
        """The scalar this polynomial equals, or None if it is not constant."""
        if not self.terms:
            return 0
        if self.is_constant():
            return next(iter(self.terms.values()))
        return None

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * len(self.variables), 0)

    def total_degree(self) -> int:
        """Maximum total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if name not in self.variables:
            raise VariableMismatchError(f"{name!r} not among {self.variables!r}")
        i = self.variables.index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def is_integral(self) -> bool:
        return all(not isinstance(c, Fraction) or c.denominator == 1 for c in self.terms.values())

    def is_homogeneous(self, degree: int, in_variables: Iterable[str] | None = None) -> bool:
        names = self.variables if in_variables is None else tuple(in_variables)
        idx = [self.variables.index(n) for n in names]
        return all(sum(e[i] for i in idx) == degree for e in self.terms)

    # -- arithmetic --------------------------------------------------------

    def _align(self, other) -> "tuple[SparsePolynomial, SparsePolynomial] | None":
        if _is_scalar(other):
            return self, SparsePolynomial.constant(other, self.variables)
        if not isinstance(other, SparsePolynomial):
            return None
        if other.variables == self.variables:
            return self, other
        oc = other.constant_value()
        if oc is not None:
            return self, SparsePolynomial.constant(oc, self.variables)
        sc = self.constant_value()
        if sc is not None:
            return SparsePolynomial.constant(sc, other.variables), other
        raise VariableMismatchError(
            f"cannot combine polynomials over {self.variables!r} and {other.variables!r}"
        )

    def __add__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, 0) + c
        return SparsePolynomial(a.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._align(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        terms: dict[tuple, Scalar] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return SparsePolynomial(a.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers take nonnegative integer exponents")
        result = SparsePolynomial.constant(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if _is_scalar(other):
            return self.constant_value() == other
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        if self.variables == other.variables:
            return self.terms == other.terms
        sc, oc = self.constant_value(), other.constant_value()
        return sc is not None and oc is not None and sc == oc

    def __hash__(self):
        cv = self.constant_value()
        if cv is not None:
            return hash(cv)
        return hash((self.variables, frozenset(self.terms.items())))

    # -- structural operations ---------------------------------------------

    def map_coefficients(self, fn) -> "SparsePolynomial":
        return SparsePolynomial(self.variables, {e: fn(c) for e, c in self.terms.items()})

    def coefficient_of(self, monomial: Mapping[str, int]):
        """Coefficient of the given monomial, in the remaining variables.

        ``monomial`` maps a subset of the declared variables to exponents.
        The result is a SparsePolynomial over the remaining variables, or a
        plain scalar when no variables remain.  Absent monomials give zero.

        >>> p = SparsePolynomial(("X", "Y"), {(2, 0): 1, (1, 1): 2, (0, 2): 1})
        >>> p.coefficient_of({"X": 1, "Y": 1})
        2
        """
        for name in monomial:
            if name not in self.variables:
                raise VariableMismatchError(f"{name!r} not among {self.variables!r}")
        selected = [(i, monomial[v]) for i, v in enumerate(self.variables) if v in monomial]
        remaining = [i for i, v in enumerate(self.variables) if v not in monomial]
        if not remaining:
            total = 0
            for exps, c in self.terms.items():
                if all(exps[i] == want for i, want in selected):
                    total += c
            return total
        out: dict[tuple, Scalar] = {}
        for exps, c in self.terms.items():
            if all(exps[i] == want for i, want in selected):
                key = tuple(exps[i] for i in remaining)
                out[key] = out.get(key, 0) + c
        return SparsePolynomial(tuple(self.variables[i] for i in remaining), out)

    def reduce_mod(self, modulus: int) -> "SparsePolynomial":
        """Reduce every coefficient into the canonical residue range [0, N).

        >>> str(SparsePolynomial(("x",), {(0,): 1, (3,): 24}).reduce_mod(5))
        '1+4*x^3'
        """
        if not isinstance(modulus, int) or modulus < 1:
            raise ValueError("modulus must be a positive integer")
        terms = {}
        for e, c in self.terms.items():
            terms[e] = as_integral(c) % modulus
        return SparsePolynomial(self.variables, terms)

    def evaluate(self, assignment: Mapping[str, Value]):
        """Substitute values for some variables; exact, possibly partial.

        Returns a scalar when every variable is assigned, otherwise a
        polynomial over the remaining variables.
        """
        for name in assignment:
            if name not in self.variables:
                raise VariableMismatchError(f"{name!r} not among {self.variables!r}")
        assigned = [(i, assignment[v]) for i, v in enumerate(self.variables) if v in assignment]
        remaining = [i for i, v in enumerate(self.variables) if v not in assignment]
        if not remaining:
            total: Value = 0
            for exps, c in self.terms.items():
                value = c
                for i, v in assigned:
                    if exps[i]:
                        value = value * v ** exps[i]
                total = total + value
            return total
        out: dict[tuple, Scalar] = {}
        for exps, c in self.terms.items():
            value = c
            for i, v in assigned:
                if exps[i]:
                    value = value * v ** exps[i]
            key = tuple(exps[i] for i in remaining)
            out[key] = out.get(key, 0) + value
        return SparsePolynomial(tuple(self.variables[i] for i in remaining), out)

    # -- formatting ----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, Scalar]]:
        """Terms in the canonical order: ascending total degree, then
        ascending exponent vector under the declared variable order."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def __str__(self) -> str:
        return format_value(self)

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.variables!r}, {dict(self.sorted_terms())!r})"


# -- value helpers (shared by series, Witt vectors, formal groups) ----------


def values_equal(a: Value, b: Value) -> bool:
    """Exact equality across the int / Fraction / polynomial mix."""
    if isinstance(a, SparsePolynomial) or isinstance(b, SparsePolynomial):
        if isinstance(a, SparsePolynomial):
            return a == b
        return b == a
    return a == b


def is_integral(value: Value) -> bool:
    if isinstance(value, SparsePolynomial):
        return value.is_integral()
    if isinstance(value, Fraction):
        return value.denominator == 1
    return isinstance(value, int)


def as_integral(value: Value) -> Value:
    """Convert an integral value to int coefficients; raise otherwise."""
    if isinstance(value, SparsePolynomial):
        return value.map_coefficients(as_integral)
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise NonIntegralError(f"{value} is not an integer")
        return int(value)
    if isinstance(value, int):
        return value
    raise TypeError(f"not an exact value: {value!r}")


def divide_exact(value: Value, k: int) -> Value:
    """Divide by a positive integer, insisting the division is exact."""
    if isinstance(value, int):
        q, r = divmod(value, k)
        if r:
            raise NonIntegralError(f"{value} is not divisible by {k}")
        return q
    if isinstance(value, Fraction):
        q = value / k
        if q.denominator != 1:
            raise NonIntegralError(f"{value} is not divisible by {k}")
        return int(q)
    if isinstance(value, SparsePolynomial):
        return value.map_coefficients(lambda c: divide_exact(c, k))
    raise TypeError(f"not an exact value: {value!r}")


def format_scalar(c: Scalar) -> str:
    return str(c)


def format_value(value: Value) -> str:
    """Canonical text form: terms ascending by degree, explicit * and ^.

    >>> format_value(SparsePolynomial(("x",), {(0,): 1, (5,): -120}))
    '1-120*x^5'
    """
    if _is_scalar(value):
        return format_scalar(value)
    if not value.terms:
        return "0"
    parts = []
    for exps, c in value.sorted_terms():
        mono = "*".join(
            f"{v}^{e}" for v, e in zip(value.variables, exps) if e
        )
        if not mono:
            text = format_scalar(c)
        elif c == 1:
            text = mono
        elif c == -1:
            text = "-" + mono
        else:
            text = f"{format_scalar(c)}*{mono}"
        parts.append(text)
    out = parts[0]
    for text in parts[1:]:
        out += text if text.startswith("-") else "+" + text
    return out


# -- spec-level operation names ---------------------------------------------


def coefficient_of(p: SparsePolynomial, monomial: Mapping[str, int]):
    return p.coefficient_of(monomial)


def poly_reduce_mod(p: SparsePolynomial, modulus: int) -> SparsePolynomial:
    return p.reduce_mod(modulus)
