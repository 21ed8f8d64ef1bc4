"""Exact arithmetic with integer combinations of roots of unity.

An element of the ring is a coefficient vector ``(a_0, ..., a_{r-1})``
standing for ``sum_j a_j * z**j`` with ``z = exp(2*pi*i/r)``.  The
representation is deliberately redundant: addition and multiplication are
plain vector operations on the full basis, and reduction modulo the r-th
cyclotomic polynomial happens only when equality or rationality is queried.
Coefficients are Python integers, so no precision is ever lost.

>>> root_of_unity(4, 1) * root_of_unity(4, 3) == CyclotomicInt.integer(4, 1)
True
>>> (root_of_unity(4, 1) + root_of_unity(4, 3)).is_zero()
True
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from .errors import ChdError, OrderMismatchError


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r: int) -> tuple[int, ...]:
    """Coefficients of the r-th cyclotomic polynomial, constant term first.

    Computed by exact division of ``x**r - 1`` by the cyclotomic polynomials
    of all proper divisors of ``r``.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if r < 1:
        raise ChdError(f"root order must be a positive integer, got {r}")
    poly = [-1] + [0] * (r - 1) + [1]
    for d in range(1, r):
        if r % d == 0:
            poly = _exact_polydiv(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _exact_polydiv(num: list[int], den: list[int]) -> list[int]:
    # Long division of integer polynomials; the divisor is monic and must
    # divide exactly.
    num = list(num)
    m = len(den) - 1
    quot = [0] * (len(num) - m)
    for i in range(len(num) - 1, m - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - m] = c
        for k in range(m + 1):
            num[i - m + k] -= c * den[k]
    if any(num):
        raise ChdError("polynomial division left a remainder")
    return quot


@lru_cache(maxsize=None)
def _phi_degree(r: int) -> int:
    return len(cyclotomic_polynomial(r)) - 1


def _reduce(coeffs: tuple[int, ...], r: int) -> tuple[int, ...]:
    """Remainder of sum(a_j x^j) modulo the r-th cyclotomic polynomial."""
    phi = cyclotomic_polynomial(r)
    m = len(phi) - 1
    rem = list(coeffs)
    for i in range(len(rem) - 1, m - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        rem[i] = 0
        for k in range(m):
            rem[i - m + k] -= c * phi[k]
    return tuple(rem[:m])


class CyclotomicInt:
    """An exact integer combination of the r-th roots of unity."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs) -> None:
        if order < 1:
            raise ChdError(f"root order must be a positive integer, got {order}")
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != order:
            raise ChdError(
                f"coefficient vector has length {len(coeffs)}, expected {order}"
            )
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def zero(cls, order: int) -> "CyclotomicInt":
        return cls(order, (0,) * order)

    @classmethod
    def integer(cls, order: int, value: int) -> "CyclotomicInt":
        return cls(order, (int(value),) + (0,) * (order - 1))

    def _check_order(self, other: "CyclotomicInt") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"cannot combine root orders {self.order} and {other.order}; "
                "no implicit embedding is performed"
            )

    def __add__(self, other):
        other = self._coerce(other)
        self._check_order(other)
        return CyclotomicInt(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        other = self._coerce(other)
        self._check_order(other)
        return CyclotomicInt(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        return CyclotomicInt(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.order, tuple(other * a for a in self.coeffs))
        other = self._coerce(other)
        self._check_order(other)
        r = self.order
        out = [0] * r
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[(i + j) % r] += a * b
        return CyclotomicInt(r, out)

    __rmul__ = __mul__
    __radd__ = __add__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def _coerce(self, other):
        if isinstance(other, CyclotomicInt):
            return other
        if isinstance(other, int):
            return CyclotomicInt.integer(self.order, other)
        return NotImplemented

    def shifted(self, k: int) -> "CyclotomicInt":
        """Multiplication by z**k, i.e. a cyclic shift of the coefficients."""
        r = self.order
        k %= r
        return CyclotomicInt(r, self.coeffs[-k:] + self.coeffs[:-k] if k else self.coeffs)

    def conjugate(self) -> "CyclotomicInt":
        """Complex conjugate: the coefficient of z**j moves to z**(-j)."""
        r = self.order
        out = [0] * r
        for j, a in enumerate(self.coeffs):
            out[(r - j) % r] = a
        return CyclotomicInt(r, out)

    def reduced(self) -> tuple[int, ...]:
        """Canonical coordinates in the basis 1, z, ..., z**(phi(r)-1)."""
        return _reduce(self.coeffs, self.order)

    def is_zero(self) -> bool:
        return not any(self.reduced())

    def as_rational(self):
        """The value as a Fraction if it is rational, else None.

        Rationality is decided by reducing modulo the r-th cyclotomic
        polynomial: the value is rational iff every non-constant coordinate
        of the reduced form vanishes.

        >>> s = sum((root_of_unity(5, j) for j in range(1, 5)),
        ...         root_of_unity(5, 0))
        >>> s.as_rational()
        Fraction(0, 1)
        >>> root_of_unity(3, 1).as_rational() is None
        True
        """
        rem = self.reduced()
        if any(rem[1:]):
            return None
        return Fraction(rem[0])

    def to_complex(self) -> complex:
        """Floating-point value; the cross-check oracle for the exact layer."""
        r = self.order
        return sum(
            a * cmath.exp(2j * math.pi * j / r)
            for j, a in enumerate(self.coeffs)
            if a
        ) or complex(0.0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CyclotomicInt.integer(self.order, other)
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        if self.order != other.order:
            return False
        return (self - other).is_zero()

    def __hash__(self) -> int:
        return hash((self.order, self.reduced()))

    def __repr__(self) -> str:
        terms = []
        for j, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if j == 0:
                terms.append(f"{a}")
            else:
                terms.append(f"{a}*z{j}" if a != 1 else f"z{j}")
        body = " + ".join(terms) if terms else "0"
        return f"CyclotomicInt(r={self.order}: {body})"


def root_of_unity(r: int, k: int) -> CyclotomicInt:
    """The root of unity z**k in the order-r ring (exponent taken mod r).

    >>> root_of_unity(4, 6).coeffs
    (0, 0, 1, 0)
    """
    if r < 1:
        raise ChdError(f"root order must be a positive integer, got {r}")
    out = [0] * r
    out[k % r] = 1
    return CyclotomicInt(r, out)


def arith(x: CyclotomicInt, y: CyclotomicInt, op: str) -> CyclotomicInt:
    """Dispatch form of the ring operations: op in {'add', 'sub', 'mul'}."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ChdError(f"unknown ring operation {op!r}")
