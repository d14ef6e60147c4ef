"""Arithmetic in F_q and its extension F_{q^m}.

Elements of F_{q^m} are plain Python ints: the element with polynomial-basis
coordinates ``c_0, ..., c_{m-1}`` is ``sum(c_i * q**i)``.  This is also the
canonical text encoding used by every file format in the package.

Small fields (``q**m <= TABLE_LIMIT``) use exp/log tables; larger fields
fall back to schoolbook arithmetic (carry-less for q = 2).  The Frobenius
map ``a -> a**(q**i)`` is either a log rescaling or a precomputed image
table of the basis powers, so it is never counted as a multiplication.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from iscodes import fq

TABLE_LIMIT = 1 << 16


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over F_q as coefficient lists (low degree first) ----------

def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmod(a: list[int], f: list[int], q: int) -> list[int]:
    a = _trim(list(a))
    df = len(f) - 1
    inv_lc = pow(f[-1], q - 2, q)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lc % q
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % q
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], f: list[int], q: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % q
    return _pmod(out, f, q)


def _ppowmod(a: list[int], e: int, f: list[int], q: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, q)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, q)
        base = _pmulmod(base, base, f, q)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], q: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, q)
    return a


def _psub(a: list[int], b: list[int], q: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % q for i in range(n)]
    return _trim(out)


def is_irreducible(f: Sequence[int], q: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over F_q."""
    f = _trim(list(f))
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    # x^(q^m) == x mod f
    xp = x
    for _ in range(m):
        xp = _ppowmod(xp, q, f, q)
    if _psub(xp, x, q):
        return False
    for p in prime_factors(m):
        xp = x
        for _ in range(m // p):
            xp = _ppowmod(xp, q, f, q)
        g = _pgcd(f, _psub(xp, x, q), q)
        if len(g) > 1:
            return False
    return True


def smallest_irreducible(q: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m with the smallest integer encoding."""
    for low in range(q**m):
        coeffs = fq.to_digits(low, q, m) + [1]
        if is_irreducible(coeffs, q):
            return tuple(coeffs)
    raise FieldError(f"no irreducible polynomial of degree {m} over F_{q} found")


class MulCounter:
    """Tally of F_{q^m} multiplications (an inversion counts as one)."""

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0

    def add(self, n: int) -> None:
        self.count += n

    def __repr__(self) -> str:
        return f"MulCounter({self.count})"


def tally(counter: MulCounter | None, n: int) -> None:
    if counter is not None:
        counter.count += n


@dataclass(frozen=True, eq=False)
class FieldContext:
    """The field F_{q^m} = F_q[z]/(modulus)."""

    q: int
    m: int
    modulus: tuple[int, ...]
    order: int = dc_field(init=False)
    _exp: list[int] | None = dc_field(init=False, repr=False)
    _log: list[int] | None = dc_field(init=False, repr=False)
    _frob_img: list[list[int]] = dc_field(init=False, repr=False)
    _qpow: list[int] = dc_field(init=False, repr=False)
    _mod_int: int = dc_field(init=False, repr=False)

    def __post_init__(self) -> None:
        q, m = self.q, self.m
        setattr_ = object.__setattr__
        setattr_(self, "order", q**m)
        setattr_(self, "_mod_int", fq.from_digits(self.modulus, q))
        setattr_(self, "_exp", None)
        setattr_(self, "_log", None)
        n = self.order - 1
        setattr_(self, "_qpow", [pow(q, i, n) if n > 1 else 0 for i in range(m)])
        if self.order <= TABLE_LIMIT:
            self._build_tables()
        # image of each basis power z^j under the i-th Frobenius power
        imgs = []
        base = [q**j for j in range(m)]
        cur = list(base)
        for _ in range(m):
            imgs.append(cur)
            cur = [self._pow_slow(b, q) for b in cur]
        setattr_(self, "_frob_img", imgs)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FieldContext) and self.q == other.q
                and self.m == other.m and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.q, self.m, self.modulus))

    @property
    def has_tables(self) -> bool:
        return self._exp is not None

    # --- construction helpers ---------------------------------------------

    def _mul_slow(self, a: int, b: int) -> int:
        q, m = self.q, self.m
        if q == 2:
            mod = self._mod_int
            top = 1 << m
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= mod
            return r
        pa = fq.to_digits(a, q, m)
        pb = fq.to_digits(b, q, m)
        return fq.from_digits(_pmulmod(pa, pb, list(self.modulus), q) + [], q)

    def _pow_slow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_slow(r, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return r

    def _build_tables(self) -> None:
        n = self.order - 1
        if n == 1:
            exp = [1, 1]
            log = [0, 0]
        else:
            factors = prime_factors(n)
            gen = None
            for g in range(2, self.order):
                if all(self._pow_slow(g, n // p) != 1 for p in factors):
                    gen = g
                    break
            if gen is None:
                raise FieldError("no primitive element found")
            exp = [0] * (2 * n)
            log = [0] * self.order
            x = 1
            for i in range(n):
                exp[i] = x
                log[x] = i
                x = self._mul_slow(x, gen)
            for i in range(n, 2 * n):
                exp[i] = exp[i - n]
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)

    # --- arithmetic -----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        q, m = self.q, self.m
        da, db = fq.to_digits(a, q, m), fq.to_digits(b, q, m)
        return fq.from_digits([(x + y) % q for x, y in zip(da, db)], q)

    def sub(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        q, m = self.q, self.m
        da, db = fq.to_digits(a, q, m), fq.to_digits(b, q, m)
        return fq.from_digits([(x - y) % q for x, y in zip(da, db)], q)

    def neg(self, a: int) -> int:
        if self.q == 2:
            return a
        q, m = self.q, self.m
        return fq.from_digits([(-x) % q for x in fq.to_digits(a, q, m)], q)

    def scale(self, c: int, a: int) -> int:
        """Multiply by a base-field scalar c in F_q (not an F_{q^m} product)."""
        q = self.q
        c %= q
        if c == 0:
            return 0
        if c == 1:
            return a
        return fq.from_digits([c * x % q for x in fq.to_digits(a, q, self.m)], q)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_q^m")
        if self._exp is not None:
            n = self.order - 1
            return self._exp[(n - self._log[a]) % n]
        return self._pow_slow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None:
            n = self.order - 1
            return self._exp[self._log[a] * e % n]
        return self._pow_slow(a, e)

    def frob(self, a: int, i: int = 1) -> int:
        """q-power map a^[i] = a^(q^i); any integer i, taken mod m."""
        i %= self.m
        if i == 0 or a == 0 or a == 1:
            return a
        if self._exp is not None:
            n = self.order - 1
            return self._exp[self._log[a] * self._qpow[i] % n]
        img = self._frob_img[i]
        if self.q == 2:
            r = 0
            j = 0
            while a:
                if a & 1:
                    r ^= img[j]
                a >>= 1
                j += 1
            return r
        r = 0
        for j, d in enumerate(fq.to_digits(a, self.q, self.m)):
            if d:
                r = self.add(r, self.scale(d, img[j]))
        return r

    # --- views over F_q --------------------------------------------------------

    def coords(self, a: int) -> list[int]:
        return fq.to_digits(a, self.q, self.m)

    def from_coords(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.m or any(not 0 <= c < self.q for c in coeffs):
            raise FieldError(f"expected {self.m} coordinates in [0, {self.q})")
        return fq.from_digits(coeffs, self.q)

    def random(self, rng: random.Random) -> int:
        return rng.randrange(self.order)

    def random_nonzero(self, rng: random.Random) -> int:
        return rng.randrange(1, self.order)

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise FieldError(f"{a!r} is not an element of F_{self.q}^{self.m}")
        return a

    def __repr__(self) -> str:
        terms = [f"z^{i}" if i > 1 else ("z" if i == 1 else "1")
                 for i in range(self.m, -1, -1) if self.modulus[i]]
        return f"GF({self.q}^{self.m}) mod {' + '.join(terms)}"


def make_field(q: int, m: int, modulus: Sequence[int] | None = None) -> FieldContext:
    """Build F_{q^m}; with no modulus the smallest irreducible one is chosen."""
    if not is_prime(q):
        raise FieldError(f"q={q} is not prime (prime-power base fields are not supported)")
    if m < 1:
        raise FieldError(f"extension degree m={m} must be positive")
    if modulus is None:
        mod = smallest_irreducible(q, m)
    else:
        mod = tuple(int(c) % q for c in modulus)
        if len(mod) != m + 1 or mod[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {m}")
        if not is_irreducible(mod, q):
            raise FieldError(f"modulus {mod} is reducible over F_{q}")
    return FieldContext(q, m, mod)


@dataclass(frozen=True)
class FieldElement:
    """Coordinate view of an element; the library itself passes plain ints."""

    coefficients: tuple[int, ...]

    @classmethod
    def of(cls, F: FieldContext, a: int) -> "FieldElement":
        return cls(tuple(F.coords(a)))

    def value(self, F: FieldContext) -> int:
        return F.from_coords(self.coefficients)


def rank_over_base(F: FieldContext, elements: Iterable[int]) -> int:
    """Rank over F_q of elements of F_{q^m} viewed as m-vectors."""
    return fq.rank((F.check(a) for a in elements), F.q, F.m)


def random_independent_set(F: FieldContext, n: int, rng: random.Random,
                           max_tries: int = 10**6) -> list[int]:
    """n elements linearly independent over F_q, by batch rejection."""
    if n > F.m:
        raise FieldError(f"cannot pick {n} independent elements in a space of dimension {F.m}")
    if n == 0:
        return []
    for _ in range(max_tries):
        batch = [F.random(rng) for _ in range(n)]
        if rank_over_base(F, batch) == n:
            return batch
    raise RuntimeError("rejection sampling of an independent set did not terminate")
