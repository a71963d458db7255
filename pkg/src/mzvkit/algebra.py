"""Words over {e0, e1}, integer indices, and the harmonic / shuffle products.

The rational span of words starting with e1 (plus the empty word) is the
algebra H1; words that additionally end with e0 span the subalgebra H0.
Both products are implemented by the standard right-recursion and extended
bilinearly to linear combinations with exact rational coefficients.

All values here are immutable and all operations are pure; the memoization
caches behind the two products are ordinary ``lru_cache`` stores, which are
safe under CPython's GIL (worst case a value is recomputed, never corrupted).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import DomainError

E0 = 0
E1 = 1

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Word:
    """A word over the two-letter alphabet, packed MSB-first into an int.

    ``bits`` holds the letters (e1 = 1, e0 = 0) with the first letter at the
    most significant position; ``length`` is the letter count.  The empty
    word (bits 0, length 0) is the algebra unit.
    """

    bits: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 0 or self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"invalid packed word: bits={self.bits}, length={self.length}")

    @classmethod
    def from_letters(cls, letters: Iterable[int]) -> "Word":
        bits = 0
        n = 0
        for letter in letters:
            if letter not in (E0, E1):
                raise ValueError(f"letters must be 0 or 1, got {letter!r}")
            bits = (bits << 1) | letter
            n += 1
        return cls(bits, n)

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse the text form: a string over {0, 1}; "" is the empty word."""
        if text and not set(text) <= {"0", "1"}:
            raise DomainError(f"word syntax is a string over {{0,1}}, got {text!r}")
        return cls(int(text, 2) if text else 0, len(text))

    @property
    def is_empty(self) -> bool:
        return self.length == 0

    @property
    def first(self) -> int:
        if self.is_empty:
            raise ValueError("empty word has no letters")
        return (self.bits >> (self.length - 1)) & 1

    @property
    def last(self) -> int:
        if self.is_empty:
            raise ValueError("empty word has no letters")
        return self.bits & 1

    @property
    def in_h1(self) -> bool:
        return self.is_empty or self.first == E1

    @property
    def in_h0(self) -> bool:
        return self.is_empty or (self.first == E1 and self.last == E0)

    def letters(self) -> tuple[int, ...]:
        return tuple((self.bits >> (self.length - 1 - i)) & 1 for i in range(self.length))

    def append(self, letter: int) -> "Word":
        return Word((self.bits << 1) | letter, self.length + 1)

    def concat(self, other: "Word") -> "Word":
        return Word((self.bits << other.length) | other.bits, self.length + other.length)

    def drop_last(self, n: int = 1) -> "Word":
        if n > self.length:
            raise ValueError("cannot drop more letters than the word has")
        return Word(self.bits >> n, self.length - n)

    def trailing_e1_count(self) -> int:
        bits, t = self.bits, 0
        while t < self.length and bits & 1:
            bits >>= 1
            t += 1
        return t

    def sort_key(self) -> tuple[int, int]:
        # length-then-lexicographic; for equal lengths the packed value is the
        # lexicographic order of the 0/1 string
        return (self.length, self.bits)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.length}b") if self.length else ""

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


EMPTY_WORD = Word(0, 0)


@dataclass(frozen=True)
class Index:
    """A finite tuple of positive integers addressing a nested zeta-type sum."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(p < 1 for p in self.parts):
            raise DomainError(f"index parts must be positive integers, got {self.parts}")

    @classmethod
    def parse(cls, text: str) -> "Index":
        """Parse the text form: comma-separated positive integers; "" is empty."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = tuple(int(piece) for piece in text.split(","))
        except ValueError as exc:
            raise DomainError(f"index syntax is comma-separated integers, got {text!r}") from exc
        return cls(parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def admissible(self) -> bool:
        return not self.parts or self.parts[-1] >= 2

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"Index(({','.join(str(p) for p in self.parts)}))"


def as_index(value: "Index | Iterable[int]") -> Index:
    """Coerce a raw tuple/list of parts to an :class:`Index`."""
    return value if isinstance(value, Index) else Index(tuple(value))


def word_of_index(k: Index) -> Word:
    """The word e1 e0^(k1-1) ... e1 e0^(kr-1) of an index."""
    bits = 0
    length = 0
    for part in k.parts:
        bits = (bits << part) | (1 << (part - 1))
        length += part
    return Word(bits, length)


def index_of_word(w: Word) -> Index:
    """Inverse of :func:`word_of_index` on H1 words."""
    if not w.in_h1:
        raise DomainError(f"word {w} starts with e0 and is not in H1")
    parts: list[int] = []
    for letter in w.letters():
        if letter == E1:
            parts.append(1)
        else:
            parts[-1] += 1
    return Index(tuple(parts))


def jset(k: Index) -> frozenset[int]:
    """Positions {1, k1+1, k1+k2+1, ...} where the word of ``k`` carries e1."""
    if not k.parts:
        raise DomainError("the empty index has no position set")
    positions = []
    total = 0
    for part in k.parts:
        positions.append(total + 1)
        total += part
    return frozenset(positions)


class LinComb:
    """A finite rational-linear combination of words, zero terms dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, Scalar] | Iterable[tuple[Word, Scalar]] = ()):
        data: dict[Word, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for word, coeff in items:
            coeff = Fraction(coeff)
            if coeff:
                new = data.get(word, Fraction(0)) + coeff
                if new:
                    data[word] = new
                else:
                    data.pop(word, None)
        object.__setattr__(self, "_terms", data)

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    @classmethod
    def unit(cls) -> "LinComb":
        return cls(((EMPTY_WORD, Fraction(1)),))

    @classmethod
    def of_word(cls, w: Word, coeff: Scalar = 1) -> "LinComb":
        return cls(((w, Fraction(coeff)),))

    @classmethod
    def of_index(cls, k: Index, coeff: Scalar = 1) -> "LinComb":
        return cls.of_word(word_of_index(k), coeff)

    def items(self) -> list[tuple[Word, Fraction]]:
        """Terms in canonical (length, packed-bits) order."""
        return sorted(self._terms.items(), key=lambda it: it[0].sort_key())

    def support(self) -> set[Word]:
        return set(self._terms)

    def coefficient(self, w: Word) -> Fraction:
        return self._terms.get(w, Fraction(0))

    @property
    def in_h1(self) -> bool:
        return all(w.in_h1 for w in self._terms)

    @property
    def in_h0(self) -> bool:
        return all(w.in_h0 for w in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        merged = dict(self._terms)
        for word, coeff in other._terms.items():
            new = merged.get(word, Fraction(0)) + coeff
            if new:
                merged[word] = new
            else:
                merged.pop(word, None)
        out = LinComb.zero()
        object.__setattr__(out, "_terms", merged)
        return out

    def __neg__(self) -> "LinComb":
        out = LinComb.zero()
        object.__setattr__(out, "_terms", {w: -c for w, c in self._terms.items()})
        return out

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> "LinComb":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        scalar = Fraction(scalar)
        if not scalar:
            return LinComb.zero()
        out = LinComb.zero()
        object.__setattr__(out, "_terms", {w: c * scalar for w, c in self._terms.items()})
        return out

    __rmul__ = __mul__

    def serialize(self) -> list[tuple[str, str]]:
        """Canonical list of ("p/q", word-string) pairs."""
        return [(f"{c.numerator}/{c.denominator}", str(w)) for w, c in self.items()]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for w, c in self.items():
            name = str(w) if w.length else "1"
            pieces.append(f"({c})*{name}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"LinComb({str(self)})"


@functools.lru_cache(maxsize=None)
def _harmonic_parts(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    # right recursion: u,v as index tuples; returns sorted ((index, mult), ...)
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    acc: dict[tuple[int, ...], int] = {}
    k1, k2 = u[-1], v[-1]
    for parts, mult in _harmonic_parts(u[:-1], v):
        key = parts + (k1,)
        acc[key] = acc.get(key, 0) + mult
    for parts, mult in _harmonic_parts(u, v[:-1]):
        key = parts + (k2,)
        acc[key] = acc.get(key, 0) + mult
    for parts, mult in _harmonic_parts(u[:-1], v[:-1]):
        key = parts + (k1 + k2,)
        acc[key] = acc.get(key, 0) + mult
    return tuple(sorted(acc.items()))


def harmonic(x: LinComb, y: LinComb) -> LinComb:
    """The harmonic (quasi-shuffle) product, defined on H1."""
    for operand in (x, y):
        if not operand.in_h1:
            raise DomainError("harmonic product operands must be supported in H1")
    acc: dict[Word, Fraction] = {}
    for wx, cx in x.items():
        u = index_of_word(wx).parts
        for wy, cy in y.items():
            v = index_of_word(wy).parts
            scale = cx * cy
            for parts, mult in _harmonic_parts(u, v):
                word = word_of_index(Index(parts))
                new = acc.get(word, Fraction(0)) + scale * mult
                if new:
                    acc[word] = new
                else:
                    acc.pop(word, None)
    out = LinComb.zero()
    object.__setattr__(out, "_terms", acc)
    return out


@functools.lru_cache(maxsize=None)
def _shuffle_words(a: Word, b: Word) -> tuple[tuple[Word, int], ...]:
    if a.is_empty:
        return ((b, 1),)
    if b.is_empty:
        return ((a, 1),)
    acc: dict[Word, int] = {}
    for prefix, mult in _shuffle_words(a.drop_last(), b):
        key = prefix.append(a.last)
        acc[key] = acc.get(key, 0) + mult
    for prefix, mult in _shuffle_words(a, b.drop_last()):
        key = prefix.append(b.last)
        acc[key] = acc.get(key, 0) + mult
    return tuple(sorted(acc.items(), key=lambda it: it[0].sort_key()))


def shuffle(x: LinComb, y: LinComb) -> LinComb:
    """The shuffle product, defined on all words."""
    acc: dict[Word, Fraction] = {}
    for wx, cx in x.items():
        for wy, cy in y.items():
            scale = cx * cy
            for word, mult in _shuffle_words(wx, wy):
                new = acc.get(word, Fraction(0)) + scale * mult
                if new:
                    acc[word] = new
                else:
                    acc.pop(word, None)
    out = LinComb.zero()
    object.__setattr__(out, "_terms", acc)
    return out


def indices_of_weight(weight: int) -> list[Index]:
    """All compositions of ``weight`` (the empty index for weight 0)."""
    if weight < 0:
        raise ValueError("weight must be non-negative")
    if weight == 0:
        return [Index(())]
    out = []
    # compositions of w correspond to subsets of the w-1 gaps
    for mask in range(1 << (weight - 1)):
        parts = []
        run = 1
        for gap in range(weight - 1):
            if mask >> gap & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(Index(tuple(parts)))
    return sorted(out, key=lambda k: k.parts)


def indices_up_to_weight(max_weight: int, *, include_empty: bool = False) -> list[Index]:
    lo = 0 if include_empty else 1
    out: list[Index] = []
    for w in range(lo, max_weight + 1):
        out.extend(indices_of_weight(w))
    return out


def admissible_indices_up_to(max_weight: int, *, include_empty: bool = False) -> list[Index]:
    return [k for k in indices_up_to_weight(max_weight, include_empty=include_empty) if k.admissible]
