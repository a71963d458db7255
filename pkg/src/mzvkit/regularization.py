"""Decomposition of H1 into H0-coefficient polynomials in T, for both products.

A word w factors as v * e1^t with t its trailing-e1 count and v ending in e0
(or empty).  The t-fold product power of e1 hits w with coefficient t! (for
the harmonic product) or 1 (for the shuffle product applied to the plain word
e1^t), and every other term has a strictly smaller trailing-e1 count.  Solving
for w and recursing on the remainder terminates because that count decreases,
and yields the unique polynomial representation with H0 coefficients.
Specializing T to 0 gives the two regularization maps.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .algebra import Index, LinComb, Scalar, Word, harmonic, shuffle
from .errors import DomainError

_E1 = LinComb.of_word(Word(1, 1))


@dataclass(frozen=True)
class RegPolynomial:
    """A polynomial in T whose coefficients are H0-supported combinations."""

    coeffs: tuple[LinComb, ...]

    def __post_init__(self) -> None:
        coeffs = list(self.coeffs)
        while len(coeffs) > 1 and not coeffs[-1]:
            coeffs.pop()
        if not coeffs:
            coeffs = [LinComb.zero()]
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def zero(cls) -> "RegPolynomial":
        return cls((LinComb.zero(),))

    @classmethod
    def constant(cls, c: LinComb) -> "RegPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, c: LinComb, power: int) -> "RegPolynomial":
        return cls((LinComb.zero(),) * power + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and not self.coeffs[0]

    def coeff(self, i: int) -> LinComb:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else LinComb.zero()

    def __add__(self, other: "RegPolynomial") -> "RegPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return RegPolynomial(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __neg__(self) -> "RegPolynomial":
        return RegPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RegPolynomial") -> "RegPolynomial":
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> "RegPolynomial":
        return RegPolynomial(tuple(c * scalar for c in self.coeffs))

    __rmul__ = __mul__

    def serialize(self) -> list[tuple[int, list[tuple[str, str]]]]:
        """List of (exponent, serialized coefficient) pairs, ascending exponent."""
        return [(i, c.serialize()) for i, c in enumerate(self.coeffs)]

    def __str__(self) -> str:
        pieces = []
        for i, c in enumerate(self.coeffs):
            if c or (i == 0 and self.is_zero):
                term = f"({c})" if i == 0 else (f"({c})*T" if i == 1 else f"({c})*T^{i}")
                pieces.append(term)
        return " + ".join(pieces) if pieces else "0"


def poly_mul(p: RegPolynomial, q: RegPolynomial, product: Callable[[LinComb, LinComb], LinComb]) -> RegPolynomial:
    """Polynomial product with coefficient products taken by ``product``."""
    coeffs = [LinComb.zero()] * (p.degree + q.degree + 1)
    for i, ci in enumerate(p.coeffs):
        if not ci:
            continue
        for j, cj in enumerate(q.coeffs):
            if cj:
                coeffs[i + j] = coeffs[i + j] + product(ci, cj)
    return RegPolynomial(tuple(coeffs))


def _require_h1(x: LinComb, op: str) -> None:
    if not x.in_h1:
        raise DomainError(f"{op} requires support in H1")


@functools.lru_cache(maxsize=None)
def _e1_harmonic_power(t: int) -> LinComb:
    if t == 0:
        return LinComb.unit()
    return harmonic(_e1_harmonic_power(t - 1), _E1)


@functools.lru_cache(maxsize=None)
def _e1_shuffle_power(t: int) -> LinComb:
    if t == 0:
        return LinComb.unit()
    return shuffle(_e1_shuffle_power(t - 1), _E1)


@functools.lru_cache(maxsize=None)
def _star_word(w: Word) -> RegPolynomial:
    t = w.trailing_e1_count()
    if t == 0:
        return RegPolynomial.constant(LinComb.of_word(w))
    v = w.drop_last(t)
    head = harmonic(LinComb.of_word(v), _e1_harmonic_power(t))
    fact = math.factorial(t)
    remainder = head - LinComb.of_word(w, fact)
    if any(u.trailing_e1_count() >= t for u in remainder.support()):
        raise AssertionError("trailing-e1 count failed to decrease in harmonic elimination")
    return Fraction(1, fact) * (RegPolynomial.monomial(LinComb.of_word(v), t) - star_decompose(remainder))


@functools.lru_cache(maxsize=None)
def _shuffle_word(w: Word) -> RegPolynomial:
    t = w.trailing_e1_count()
    if t == 0:
        return RegPolynomial.constant(LinComb.of_word(w))
    v = w.drop_last(t)
    head = shuffle(LinComb.of_word(v), LinComb.of_word(Word((1 << t) - 1, t)))
    remainder = head - LinComb.of_word(w)
    if any(u.trailing_e1_count() >= t for u in remainder.support()):
        raise AssertionError("trailing-e1 count failed to decrease in shuffle elimination")
    return Fraction(1, math.factorial(t)) * RegPolynomial.monomial(LinComb.of_word(v), t) - shuffle_decompose(remainder)


def star_decompose(x: LinComb) -> RegPolynomial:
    """Represent an H1 element as an H0-coefficient polynomial in T, where T
    stands for e1 and polynomial structure follows the harmonic product."""
    _require_h1(x, "star_decompose")
    acc = RegPolynomial.zero()
    for w, c in x.items():
        acc = acc + c * _star_word(w)
    return acc


def shuffle_decompose(x: LinComb) -> RegPolynomial:
    """Same decomposition with the shuffle product in place of the harmonic one."""
    _require_h1(x, "shuffle_decompose")
    acc = RegPolynomial.zero()
    for w, c in x.items():
        acc = acc + c * _shuffle_word(w)
    return acc


def reg_star(x: LinComb) -> LinComb:
    """Constant coefficient of the harmonic decomposition (T set to 0)."""
    return star_decompose(x).coeff(0)


def reg_shuffle(x: LinComb) -> LinComb:
    """Constant coefficient of the shuffle decomposition (T set to 0)."""
    return shuffle_decompose(x).coeff(0)


def z_star_polynomial(k: Index) -> RegPolynomial:
    return star_decompose(LinComb.of_index(k))


def z_shuffle_polynomial(k: Index) -> RegPolynomial:
    return shuffle_decompose(LinComb.of_index(k))


def reconstruct(p: RegPolynomial, product: str = "harmonic") -> LinComb:
    """Substitute T back to e1 using the named product; inverse of decompose."""
    if product == "harmonic":
        powers, mul = _e1_harmonic_power, harmonic
    elif product == "shuffle":
        powers, mul = _e1_shuffle_power, shuffle
    else:
        raise ValueError(f"unknown product {product!r}")
    acc = LinComb.zero()
    for i, c in enumerate(p.coeffs):
        if c:
            acc = acc + mul(c, powers(i))
    return acc
