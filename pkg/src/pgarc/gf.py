"""Exact arithmetic in the Galois fields GF(q), q = p^h.

Elements are integer codes in [0, q): the polynomial c0 + c1*x + ... is
encoded as c0 + c1*p + c2*p^2 + ...  Code 0 is the additive zero and
code 1 the multiplicative unit.  Multiplication, inversion and the
Frobenius maps go through discrete exp/log tables for a primitive root
of the modulus; addition is digitwise mod p on the codes.  Prime fields
(h = 1) skip the table indirection and use plain modular integers.

The integer encoding gives every field a total order (plain integer
order on codes), which downstream code relies on for reproducible
lexicographic comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

# Hard cap on the field order; beyond this the table-based design stops
# making sense and construction refuses.
MAX_ORDER = 1 << 16

# Below this order the q x q flat add/mul tables are precomputed, which
# the geometry and search layers index directly.
DENSE_TABLE_LIMIT = 256


class FieldError(ValueError):
    """Base class for field construction and arithmetic failures."""


class NotPrimeError(FieldError):
    """The requested characteristic is not a prime number."""


class NotIrreducibleError(FieldError):
    """The supplied modulus factors over GF(p)."""


class NotPrimitiveError(FieldError):
    """The modulus is irreducible but its root does not generate GF(q)*."""


class DegreeMismatchError(FieldError):
    """The supplied modulus does not have the requested degree/shape."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _add_codes(a: int, b: int, p: int) -> int:
    """Digitwise base-p addition of two element codes."""
    if p == 2:
        return a ^ b
    res = 0
    weight = 1
    while a or b:
        res += ((a % p) + (b % p)) % p * weight
        a //= p
        b //= p
        weight *= p
    return res


def _neg_code(a: int, p: int) -> int:
    res = 0
    weight = 1
    while a:
        d = a % p
        if d:
            res += (p - d) * weight
        a //= p
        weight *= p
    return res


def _poly_rem(num: tuple[int, ...], den: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of num mod den over GF(p); den monic. Trimmed result."""
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            num[i] = 0
            for j in range(dd):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    while num and num[-1] == 0:
        num.pop()
    return tuple(num)


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    h = len(modulus) - 1
    for d in range(1, h // 2 + 1):
        for tail in product(range(p), repeat=d):
            if not _poly_rem(modulus, (*tail, 1), p):
                return False
    return True


def _exp_walk(p: int, h: int, modulus: tuple[int, ...]) -> list[int] | None:
    """Codes of root^k for k in [0, q-1), or None if the root's
    multiplicative order is not exactly q-1 (brute-force order check)."""
    q = p**h
    if h == 1:
        root = (-modulus[0]) % p
        if root == 0:
            return None
        exp = [1]
        cur = 1
        for _ in range(1, q - 1):
            cur = cur * root % p
            if cur == 1:
                return None
            exp.append(cur)
        return exp if cur * root % p == 1 else None
    exp = [1]
    cur = [1] + [0] * (h - 1)
    for k in range(q - 1):
        # multiply by x and reduce: x^h = -(m0 + m1 x + ... + m_{h-1} x^{h-1})
        carry = cur[-1]
        cur = [0] + cur[:-1]
        if carry:
            for i in range(h):
                cur[i] = (cur[i] - carry * modulus[i]) % p
        code = 0
        weight = 1
        for c in cur:
            code += c * weight
            weight *= p
        if k == q - 2:
            return exp if code == 1 else None
        if code <= 1:
            return None
        exp.append(code)
    return exp


@dataclass(frozen=True)
class FieldParams:
    """Defining data of GF(q): characteristic, extension degree, modulus."""

    p: int
    ext_degree: int
    modulus: tuple[int, ...]
    q: int

    def as_dict(self) -> dict:
        return {"p": self.p, "h": self.ext_degree, "modulus": list(self.modulus)}


class FieldTable:
    """Arithmetic tables for one field GF(q). Immutable after construction;
    safe to share across any number of concurrent readers."""

    def __init__(self, params: FieldParams, exp: list[int]):
        self.params = params
        self.p = params.p
        self.h = params.ext_degree
        self.q = params.q
        self.modulus = params.modulus
        q = self.q
        self.exp = exp
        log: list[int | None] = [None] * q
        for k, code in enumerate(exp):
            log[code] = k
        self.log = log
        self.neg_list = [_neg_code(a, self.p) for a in range(q)]
        inv: list[int | None] = [None] * q
        for a in range(1, q):
            inv[a] = exp[(q - 1 - log[a]) % (q - 1)]
        self.inv_list = inv
        self.frob_tables = []
        for i in range(self.h):
            e = self.p**i
            tab = [0] * q
            for a in range(1, q):
                tab[a] = exp[(log[a] * e) % (q - 1)]
            self.frob_tables.append(tab)
        if q <= DENSE_TABLE_LIMIT:
            self.add_flat = [
                _add_codes(a, b, self.p) for a in range(q) for b in range(q)
            ]
            self.mul_flat = [self.mul(a, b) for a in range(q) for b in range(q)]
        else:
            self.add_flat = None
            self.mul_flat = None

    def add(self, a: int, b: int) -> int:
        if self.h == 1:
            return (a + b) % self.p
        return _add_codes(a, b, self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg_list[b])

    def neg(self, a: int) -> int:
        return self.neg_list[a]

    def mul(self, a: int, b: int) -> int:
        if self.h == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.inv_list[a]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 1 if e == 0 else 0
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def frobenius(self, a: int, i: int) -> int:
        """a raised to the power p^i; a field automorphism for each i."""
        if not 0 <= i < self.h:
            raise ValueError(f"frobenius exponent {i} outside [0, {self.h})")
        return self.frob_tables[i][a]

    def elements(self) -> range:
        return range(self.q)

    def power_repr(self, a: int) -> str:
        """Display form of an element as a power of the modulus root.
        Never parsed back; codes are the authoritative encoding."""
        if a == 0:
            return "0"
        k = self.log[a]
        if k == 0:
            return "1"
        return "ξ" if k == 1 else f"ξ^{k}"

    def __repr__(self):
        return f"FieldTable(q={self.q}, p={self.p}, h={self.h})"


def build_field(p: int, ext_degree: int = 1, modulus="auto") -> FieldTable:
    """Construct GF(p^ext_degree).

    With modulus="auto" the lexicographically least primitive polynomial of
    the required degree (by ascending-coefficient tuple) is selected, so
    repeated runs build the identical field.  An explicit modulus must be
    monic of the stated degree, irreducible and primitive; primitivity is
    verified by brute-force computation of the root's multiplicative order.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if not isinstance(ext_degree, int) or ext_degree < 1:
        raise DegreeMismatchError(f"extension degree must be >= 1, got {ext_degree}")
    q = p**ext_degree
    if q > MAX_ORDER:
        raise FieldError(f"field order {q} exceeds supported maximum {MAX_ORDER}")

    if isinstance(modulus, str):
        if modulus != "auto":
            raise DegreeMismatchError(f"unknown modulus spec {modulus!r}")
        for tail in product(range(p), repeat=ext_degree):
            cand = (*tail, 1)
            exp = _exp_walk(p, ext_degree, cand)
            if exp is not None:
                return FieldTable(FieldParams(p, ext_degree, cand, q), exp)
        raise FieldError(f"no primitive polynomial found for GF({q})")  # unreachable

    mod = tuple(int(c) for c in modulus)
    if len(mod) != ext_degree + 1 or mod[-1] != 1:
        raise DegreeMismatchError(
            f"modulus must be monic of degree {ext_degree}, got {list(mod)}"
        )
    if any(not 0 <= c < p for c in mod):
        raise DegreeMismatchError(f"modulus coefficients must lie in [0, {p})")
    if ext_degree >= 2 and not _is_irreducible(mod, p):
        raise NotIrreducibleError(f"{list(mod)} factors over GF({p})")
    exp = _exp_walk(p, ext_degree, mod)
    if exp is None:
        raise NotPrimitiveError(
            f"root of {list(mod)} does not have multiplicative order {q - 1}"
        )
    return FieldTable(FieldParams(p, ext_degree, mod, q), exp)


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, h) with q = p^h, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            h = 0
            m = q
            while m % p == 0:
                m //= p
                h += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, h
        p += 1
    return q, 1
