"""Finite fields GF(q) and GF(q^g) with exp/log tables.

Elements are integers ``0 .. q^g - 1``; digit ``i`` (base q) is the coefficient
of ``a^i`` where ``a`` is a root of the field's primitive polynomial.  The same
encoding, read as a vector, identifies GF(q^g) with GF(q)^g, so a vector of
GF(q^g)^s flattens to the GF(q)-vector whose integer encoding is
``sum(c_j * (q^g)^j)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import product
from typing import Sequence

import numpy as np

from ._conway import CONWAY
from .errors import NonPrimeModulus, NonPrimitivePolynomial, TooLarge

MAX_ORDER = 2**20

# Published Singer-cycle data for GF(2^6) is written in terms of this polynomial.
PINNED_POLYNOMIALS = {(2, 6): (1, 1, 0, 1, 1, 0, 1)}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def digits(x: int, q: int, n: int) -> list[int]:
    """Base-q digits of ``x``, least significant first, padded to length n."""
    out = []
    for _ in range(n):
        x, r = divmod(x, q)
        out.append(r)
    return out


def undigits(ds: Sequence[int], q: int) -> int:
    x = 0
    for d in reversed(ds):
        x = x * q + (d % q)
    return x


@dataclass(frozen=True, eq=False)
class Field:
    """GF(q^g) for prime q.  Immutable; safe to share between threads."""

    q: int
    g: int
    primitive_poly: tuple[int, ...]
    exp_table: np.ndarray = dc_field(repr=False)
    log_table: np.ndarray = dc_field(repr=False)

    @property
    def order(self) -> int:
        return self.q**self.g

    @property
    def p(self) -> int:
        return self.q

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.q, self.g, self.primitive_poly)
            == (other.q, other.g, other.primitive_poly)
        )

    def __hash__(self):
        return hash((self.q, self.g, self.primitive_poly))

    # -- arithmetic -----------------------------------------------------
    def add(self, x: int, y: int) -> int:
        if self.q == 2:
            return x ^ y
        if self.g == 1:
            return (x + y) % self.q
        return int(self.add_table[x, y]) if self._small else self._add_digits(x, y, 1)

    def sub(self, x: int, y: int) -> int:
        if self.q == 2:
            return x ^ y
        if self.g == 1:
            return (x - y) % self.q
        return self._add_digits(x, y, -1)

    def neg(self, x: int) -> int:
        return self.sub(0, x)

    def _add_digits(self, x, y, sign):
        q = self.q
        out, mult = 0, 1
        for _ in range(self.g):
            x, a = divmod(x, q)
            y, b = divmod(y, q)
            out += ((a + sign * b) % q) * mult
            mult *= q
        return out

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        n = self.order - 1
        return int(self.exp_table[(int(self.log_table[x]) + int(self.log_table[y])) % n])

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        n = self.order - 1
        return int(self.exp_table[(-int(self.log_table[x])) % n])

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            return 0 if e > 0 else 1
        n = self.order - 1
        return int(self.exp_table[(int(self.log_table[x]) * e) % n])

    def exp(self, i: int) -> int:
        return int(self.exp_table[i % (self.order - 1)])

    def log(self, x: int) -> int:
        if x == 0:
            raise ValueError("log of zero")
        return int(self.log_table[x])

    @property
    def _small(self) -> bool:
        return self.order <= 1024

    @cached_property
    def add_table(self) -> np.ndarray:
        """Dense addition table; only built for q^g <= 1024."""
        if not self._small:
            raise TooLarge(f"add table for GF({self.order}) is too large")
        n = self.order
        ds = np.array([digits(x, self.q, self.g) for x in range(n)], dtype=np.int64)
        pw = self.q ** np.arange(self.g, dtype=np.int64)
        summed = (ds[:, None, :] + ds[None, :, :]) % self.q
        t = summed @ pw
        t.setflags(write=False)
        return t

    @cached_property
    def mul_table(self) -> np.ndarray:
        if not self._small:
            raise TooLarge(f"mul table for GF({self.order}) is too large")
        n = self.order
        t = np.zeros((n, n), dtype=np.int64)
        lg = self.log_table[1:]
        t[1:, 1:] = self.exp_table[(lg[:, None] + lg[None, :]) % (n - 1)]
        t.setflags(write=False)
        return t

    def subfield_elements(self) -> list[int]:
        """The prime-field constants 0..q-1 (their encoding is the integer itself)."""
        return list(range(self.q))

    def element_str(self, x: int, var: str = "a") -> str:
        """Human-readable polynomial in ``var``; digits above q/2 print as negatives."""
        if x == 0:
            return "0"
        terms = []
        for i, c in enumerate(digits(x, self.q, self.g)):
            if c == 0:
                continue
            neg = self.q > 2 and c > self.q // 2
            mag = self.q - c if neg else c
            mono = "1" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mag == 1:
                body = mono
            elif i == 0:
                body = str(mag)
            else:
                body = f"{mag}{mono}"
            terms.append(("-" if neg else "+", body))
        terms.reverse()
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f"{sign}{body}"
        return out

    def parse_element(self, text: str, var: str = "a") -> int:
        """Inverse of :meth:`element_str`; also accepts a plain integer encoding."""
        s = text.replace(" ", "")
        if s.isdigit():
            n = int(s)
            if self.g == 1:
                return n % self.q
            if not 0 <= n < self.order:
                raise ValueError(f"element encoding out of range: {text}")
            return n
        coeffs = [0] * self.g
        s = s.replace("-", "+-")
        for term in filter(None, s.split("+")):
            sign = -1 if term.startswith("-") else 1
            term = term.lstrip("-")
            if var in term:
                c_str, _, e_str = term.partition(var)
                c_str = c_str.rstrip("*")
                c = int(c_str) if c_str else 1
                e = int(e_str.lstrip("^")) if e_str else 1
            else:
                c, e = int(term), 0
            if e >= self.g:
                raise ValueError(f"power {e} exceeds degree {self.g - 1}")
            coeffs[e] += sign * c
        return undigits(coeffs, self.q)


def _mulx_table(q: int, g: int, poly: Sequence[int]) -> np.ndarray | None:
    """exp table of x modulo poly, or None if x does not generate all units."""
    n = q**g - 1
    exp = np.empty(n, dtype=np.int64)
    if q == 2:
        low = undigits(poly[:g], 2)
        top = 1 << g
        x = 1
        for i in range(n):
            exp[i] = x
            x <<= 1
            if x & top:
                x ^= top ^ low
            if x == 1 and i < n - 1:
                return None
        return exp if x == 1 else None
    low = [(-c) % q for c in poly[:g]]  # x^g = -(f_0 + ... + f_{g-1} x^{g-1})
    cur = [1] + [0] * (g - 1)
    pw = [q**i for i in range(g)]
    for i in range(n):
        exp[i] = sum(c * w for c, w in zip(cur, pw))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [(c + top * l) % q for c, l in zip(cur, low)]
        if i < n - 1 and cur[0] == 1 and not any(cur[1:]):
            return None
    return exp if cur[0] == 1 and not any(cur[1:]) else None


def find_primitive_poly(q: int, g: int) -> tuple[int, ...]:
    """Conway polynomial when tabulated, else the first primitive monic polynomial
    in lexicographic order of its low coefficients."""
    if (q, g) in PINNED_POLYNOMIALS:
        return PINNED_POLYNOMIALS[(q, g)]
    if (q, g) in CONWAY:
        return CONWAY[(q, g)]
    for low in product(range(q), repeat=g):
        if low[0] == 0:
            continue
        poly = tuple(low) + (1,)
        if _mulx_table(q, g, poly) is not None:
            return poly
    raise NonPrimitivePolynomial(f"no primitive polynomial found for ({q}, {g})")


def create_field(q: int, g: int = 1, poly: Sequence[int] | None = None) -> Field:
    """Build GF(q^g).  ``poly`` is low-degree-first and may use negative coefficients."""
    if not is_prime(q):
        raise NonPrimeModulus(f"{q} is not prime")
    if g < 1:
        raise ValueError("extension degree must be >= 1")
    if q**g > MAX_ORDER:
        raise TooLarge(f"GF({q}^{g}) exceeds 2^20 elements")
    if poly is None:
        poly = find_primitive_poly(q, g)
    poly = [int(c) % q for c in poly]
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    if len(poly) != g + 1:
        raise NonPrimitivePolynomial(f"polynomial must have degree {g}")
    lead_inv = pow(poly[-1], q - 2, q)
    poly = tuple((c * lead_inv) % q for c in poly)
    if poly[0] == 0:
        raise NonPrimitivePolynomial("polynomial is divisible by x")
    exp = _mulx_table(q, g, poly)
    if exp is None:
        raise NonPrimitivePolynomial(f"{poly} is not primitive over GF({q})")
    log = np.full(q**g, -1, dtype=np.int64)
    log[exp] = np.arange(len(exp), dtype=np.int64)
    exp.setflags(write=False)
    log.setflags(write=False)
    return Field(q, g, poly, exp, log)


@dataclass(frozen=True)
class ExtVector:
    """A vector of GF(q^g)^s."""

    coords: tuple[int, ...]
    field: Field

    @property
    def s(self) -> int:
        return len(self.coords)

    def to_int(self) -> int:
        """Integer encoding of the flattened GF(q)-vector."""
        base = self.field.order
        return sum(c * base**j for j, c in enumerate(self.coords))


def flatten(vec: ExtVector) -> tuple[int, ...]:
    f = vec.field
    out: list[int] = []
    for c in vec.coords:
        out.extend(digits(c, f.q, f.g))
    return tuple(out)


def unflatten(coords: Sequence[int], field: Field) -> ExtVector:
    g = field.g
    if len(coords) % g:
        raise ValueError(f"length {len(coords)} is not a multiple of {g}")
    return ExtVector(
        tuple(undigits(coords[i : i + g], field.q) for i in range(0, len(coords), g)), field
    )


def unflatten_int(x: int, field: Field, s: int) -> tuple[int, ...]:
    """Split a GF(q)-vector encoding into its s coordinates over GF(q^g)."""
    return tuple(digits(x, field.order, s))


def flatten_int(coords: Sequence[int], field: Field) -> int:
    return undigits(coords, field.order) if field.order > 1 else 0
