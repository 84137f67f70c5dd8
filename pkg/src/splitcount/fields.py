"""Concrete finite fields F_q and irreducible moduli over them.

Field elements are plain ints in [0, q).  For a prime field the int is the
residue; for q = p^e it encodes the coefficient vector of the residue
polynomial in base p (digit i = coefficient of x^i in F_p[x]/(base_modulus)).
All arithmetic is table-driven, which keeps the row-reduction kernels
uniform across prime and prime-power fields.

Everything here is desk scale: q <= 16 and modulus degrees <= 12.
"""

from __future__ import annotations

from itertools import product

from .errors import InvalidParameters

__all__ = ["FieldSpec", "ModulusPoly", "find_irreducible"]

MAX_Q = 16

# Monic irreducible polynomials over F_p used by default for the supported
# prime-power orders (constant term first).
_DEFAULT_BASE_MODULUS = {
    4: (1, 1, 1),  # x^2 + x + 1 over F_2
    8: (1, 1, 0, 1),  # x^3 + x + 1 over F_2
    9: (1, 0, 1),  # x^2 + 1 over F_3
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1 over F_2
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_power(q: int) -> tuple[int, int]:
    """Factor q = p^e with p prime, or raise InvalidParameters."""
    if q < 2:
        raise InvalidParameters(f"field order must be >= 2, got {q}")
    for p in range(2, q + 1):
        if not _is_prime(p):
            continue
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise InvalidParameters(f"{q} is not a prime power")
            return p, e
    raise InvalidParameters(f"{q} is not a prime power")


# -- polynomial helpers over F_p (dense int lists, ascending degree) --------


def _pmod_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod_trim(out)


def _prem(a, b, p):
    """Remainder of a mod b over F_p; b need not be monic."""
    a = list(a)
    _pmod_trim(a)
    db = len(b) - 1
    lead_inv = pow(b[-1], p - 2, p) if b[-1] != 1 else 1
    while len(a) - 1 >= db and a:
        f = (a[-1] * lead_inv) % p
        shift = len(a) - 1 - db
        for j, y in enumerate(b):
            a[shift + j] = (a[shift + j] - f * y) % p
        _pmod_trim(a)
    return a


def _irreducible_over_prime(coeffs, p) -> bool:
    """Trial division by all monic polynomials of degree <= deg/2."""
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            g = list(tail) + [1]
            if not _prem(coeffs, g, p):
                return False
    return True


class FieldSpec:
    """A finite field F_q with table-driven element arithmetic.

    For e > 1 a base modulus (monic irreducible of degree e over F_p,
    constant term first) defines the representation; orders 4, 8, 9 and 16
    have built-in defaults.
    """

    def __init__(self, q: int, base_poly: tuple[int, ...] | None = None):
        p, e = _prime_power(q)
        if q > MAX_Q:
            raise InvalidParameters(f"field order {q} above desk-scale limit {MAX_Q}")
        self.q = q
        self.p = p
        self.e = e
        if e == 1:
            if base_poly is not None:
                raise InvalidParameters("base_poly is only meaningful for prime powers")
            self.base_modulus = None
        else:
            if base_poly is None:
                base_poly = _DEFAULT_BASE_MODULUS.get(q)
                if base_poly is None:
                    raise InvalidParameters(f"no default base modulus for q={q}; pass base_poly")
            base_poly = tuple(c % p for c in base_poly)
            if len(base_poly) != e + 1 or base_poly[-1] != 1:
                raise InvalidParameters(f"base modulus must be monic of degree {e} over F_{p}")
            if not _irreducible_over_prime(list(base_poly), p):
                raise InvalidParameters(f"base modulus {base_poly} is reducible over F_{p}")
            self.base_modulus = base_poly
        self._build_tables()

    def _build_tables(self):
        q, p, e = self.q, self.p, self.e
        add = bytearray(q * q)
        mul = bytearray(q * q)
        neg = bytearray(q)
        inv = bytearray(q)
        if e == 1:
            for a in range(q):
                neg[a] = (-a) % p
                for b in range(q):
                    add[a * q + b] = (a + b) % p
                    mul[a * q + b] = (a * b) % p
        else:
            mod = list(self.base_modulus)
            vecs = [self._decode(a) for a in range(q)]
            for a in range(q):
                va = vecs[a]
                neg[a] = self._encode([(-c) % p for c in va])
                for b in range(q):
                    vb = vecs[b]
                    add[a * q + b] = self._encode([(x + y) % p for x, y in zip(va, vb)])
                    prod = _prem(_pmul(va, vb, p), mod, p)
                    mul[a * q + b] = self._encode(prod)
        for a in range(1, q):
            for b in range(1, q):
                if mul[a * q + b] == 1:
                    inv[a] = b
                    break
        self.add_table = bytes(add)
        self.mul_table = bytes(mul)
        self.neg_table = bytes(neg)
        self.inv_table = bytes(inv)

    def _decode(self, a: int) -> list[int]:
        digits = []
        for _ in range(self.e):
            digits.append(a % self.p)
            a //= self.p
        return digits

    def _encode(self, vec) -> int:
        a = 0
        for c in reversed(list(vec) + [0] * (self.e - len(vec))):
            a = a * self.p + (c % self.p)
        return a

    # -- element operations --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self.add_table[a * self.q + b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a * self.q + self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a * self.q + b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.inv_table[a]

    def element_vector(self, a: int) -> tuple[int, ...]:
        """Coefficient vector of the element over F_p (length e)."""
        return tuple(self._decode(a))

    def vector_element(self, vec) -> int:
        return self._encode(vec)

    @property
    def tables(self):
        return self.add_table, self.mul_table, self.neg_table, self.inv_table

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.e, self.base_modulus) == (other.p, other.e, other.base_modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.base_modulus))

    def __repr__(self) -> str:
        if self.e == 1:
            return f"FieldSpec({self.q})"
        return f"FieldSpec({self.q}, base_poly={self.base_modulus})"


# -- polynomials with coefficients in F_q ------------------------------------


def _fpoly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _fpoly_mul(field, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = field.add(out[i + j], field.mul(x, y))
    return _fpoly_trim(out)


def _fpoly_rem(field, a, b):
    a = _fpoly_trim(list(a))
    db = len(b) - 1
    lead_inv = field.inv(b[-1])
    while a and len(a) - 1 >= db:
        f = field.mul(a[-1], lead_inv)
        shift = len(a) - 1 - db
        for j, y in enumerate(b):
            a[shift + j] = field.sub(a[shift + j], field.mul(f, y))
        _fpoly_trim(a)
    return a


def _irreducible_over_field(field, coeffs) -> bool:
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in product(range(field.q), repeat=d):
            g = list(tail) + [1]
            if not _fpoly_rem(field, coeffs, g):
                return False
    return True


class ModulusPoly:
    """Monic irreducible polynomial of degree N over F_q.

    Its residue class of x is a primitive element sigma with
    F_q(sigma) = F_{q^N}; the companion matrix of this polynomial realizes
    multiplication by sigma.  Coefficients are stored ascending (constant
    term first) and rendered textually as comma-separated values,
    e.g. "1,1,0,1" for x^3 + x + 1 over F_2.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) < 2 or coeffs[-1] != 1:
            raise InvalidParameters("modulus must be monic of degree >= 1")
        if any(not 0 <= c < field.q for c in coeffs):
            raise InvalidParameters("modulus coefficients must be field elements")
        if not _irreducible_over_field(field, list(coeffs)):
            raise InvalidParameters(f"modulus {coeffs} is reducible over F_{field.q}")
        self.field = field
        self.coeffs = coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> "ModulusPoly":
        return cls(field, tuple(int(t) for t in text.split(",")))

    def text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModulusPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"ModulusPoly(F_{self.field.q}, {self.text()!r})"


_IRREDUCIBLE_CACHE: dict[tuple[FieldSpec, int], list] = {}


def find_irreducible(field: FieldSpec, N: int, index: int = 0) -> ModulusPoly:
    """The (index+1)-th monic irreducible of degree N over F_q.

    Candidates are scanned in lexicographic order of the coefficient vector
    (c_{N-1}, ..., c_1, c_0), i.e. highest-degree coefficient most
    significant; raises IndexError if fewer irreducibles exist.
    """
    if N < 1:
        raise InvalidParameters("degree must be positive")
    if index < 0:
        raise InvalidParameters("index must be nonnegative")
    cache = _IRREDUCIBLE_CACHE.setdefault((field, N), [])
    if index < len(cache):
        return cache[index]
    cache.clear()
    for vec in product(range(field.q), repeat=N):
        coeffs = tuple(reversed(vec)) + (1,)
        if _irreducible_over_field(field, list(coeffs)):
            cache.append(ModulusPoly(field, coeffs))
            if len(cache) > index:
                return cache[index]
    raise IndexError(
        f"only {len(cache)} irreducible polynomials of degree {N} over F_{field.q}"
    )
