"""Sparse multivariate polynomials over the six edge-weight symbols.

A monomial is an exponent vector ``(a, b, c, x, y, z)`` of non-negative
ints; a polynomial maps monomials to non-zero Python ints (exact, unbounded).
Instances are immutable and hashable.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple

SYMBOLS: Tuple[str, ...] = ("a", "b", "c", "x", "y", "z")
UNIT = "1"
_INDEX = {s: i for i, s in enumerate(SYMBOLS)}
_ZERO_EXPS = (0,) * len(SYMBOLS)

Monomial = Tuple[int, int, int, int, int, int]


def monomial(**exps: int) -> Monomial:
    """Build an exponent vector from keyword exponents, e.g. ``monomial(a=1, x=2)``."""
    vec = [0] * len(SYMBOLS)
    for name, k in exps.items():
        if name not in _INDEX:
            raise KeyError(f"unknown weight symbol {name!r}")
        if k < 0:
            raise ValueError("exponents must be non-negative")
        vec[_INDEX[name]] = int(k)
    return tuple(vec)


def _mono_mul(p: Monomial, q: Monomial) -> Monomial:
    return tuple(i + j for i, j in zip(p, q))


class Polynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: Dict[Monomial, int] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != len(SYMBOLS) or any(k < 0 for k in mono):
                raise ValueError(f"bad exponent vector {mono!r}")
            coeff = int(coeff)
            if coeff:
                clean[mono] = clean.get(mono, 0) + coeff
                if not clean[mono]:
                    del clean[mono]
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls({_ZERO_EXPS: c})

    @classmethod
    def symbol(cls, name: str) -> "Polynomial":
        """The polynomial for one weight symbol; ``"1"`` gives the constant 1."""
        if name == UNIT:
            return cls.constant(1)
        return cls({monomial(**{name: 1}): 1})

    @classmethod
    def from_counter(cls, counts: Mapping[Monomial, int]) -> "Polynomial":
        return cls(counts)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        """(monomial, coefficient) pairs in lexicographic exponent order."""
        return sorted(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def symbols_used(self) -> set:
        used = set()
        for mono in self._terms:
            used.update(s for s, k in zip(SYMBOLS, mono) if k)
        return used

    def evaluate(self, **values) -> int:
        """Substitute values for symbols; symbols not given default to 1."""
        vals = [values.get(s, 1) for s in SYMBOLS]
        total = 0
        for mono, coeff in self._terms.items():
            term = coeff
            for v, k in zip(vals, mono):
                if k:
                    term *= v ** k
            total += term
        return total

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            out[mono] = out.get(mono, 0) + coeff
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _mono_mul(m1, m2)
                out[mono] = out.get(mono, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("power must be a non-negative integer")
        result = Polynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- serialization ------------------------------------------------------

    def to_json(self) -> list:
        out = []
        for mono, coeff in self.items():
            exps = {s: k for s, k in zip(SYMBOLS, mono) if k}
            out.append({"coeff": str(coeff), "exps": exps})
        return out

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "Polynomial":
        terms: Dict[Monomial, int] = {}
        for entry in data:
            mono = monomial(**entry.get("exps", {}))
            terms[mono] = terms.get(mono, 0) + int(entry["coeff"])
        return cls(terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in sorted(self._terms.items(), reverse=True):
            factors = []
            for s, k in zip(SYMBOLS, mono):
                if k == 1:
                    factors.append(s)
                elif k:
                    factors.append(f"{s}^{k}")
            body = "*".join(factors)
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            else:
                parts.append(f"{coeff}*{body}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_pow(p: Polynomial, k: int) -> Polynomial:
    return p ** k
