"""Binary polynomial arithmetic on int bitmasks, plus the cyclotomic toolkit.

Bit ``i`` of ``bits`` is the coefficient of ``x^i``.  All arithmetic is
exact; nothing here is probabilistic.  The module also owns the splitting
field machinery used to factor ``x^n - 1`` for odd ``n``: cyclotomic
cosets, a primitive element of GF(2^m) with ``m = ord_2(n)``, and the
per-coset irreducible factors.  Everything downstream (tensor squares,
coefficientwise product spans) reduces to this factorization.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import SizeGuardError
from .polytext import format_terms, parse_terms

DEGREE_GUARD_BITS = 1 << 16
FIELD_EXTENSION_LIMIT = 20


class _NegInf:
    """Degree of the zero polynomial.  Compares below every int."""

    __slots__ = ()

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("MINUS_INFINITY")

    def __repr__(self):
        return "MINUS_INFINITY"

    def __add__(self, other):
        return self

    def __radd__(self, other):
        return self


MINUS_INFINITY = _NegInf()


def _deg(bits: int) -> int:
    # valid only for bits != 0
    return bits.bit_length() - 1


def _mul2(a: int, b: int) -> int:
    r = 0
    while a:
        low = a & -a
        r ^= b << (low.bit_length() - 1)
        a ^= low
    return r


def _divmod2(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("binary polynomial division by zero")
    db = _deg(b)
    q = 0
    while a and _deg(a) >= db:
        shift = _deg(a) - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def _mod2(a: int, b: int) -> int:
    return _divmod2(a, b)[1]


def _gcd2(a: int, b: int) -> int:
    while b:
        a, b = b, _mod2(a, b)
    return a


class BinPoly:
    """Immutable polynomial over GF(2)."""

    __slots__ = ("bits",)

    def __init__(self, bits: int):
        if bits < 0:
            raise ValueError("coefficient mask must be nonnegative")
        if bits.bit_length() > DEGREE_GUARD_BITS:
            raise SizeGuardError(
                f"binary polynomial degree {bits.bit_length() - 1} exceeds guard",
                predicted=bits.bit_length(),
            )
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("BinPoly is immutable")

    @classmethod
    def from_coeffs(cls, coeffs) -> "BinPoly":
        bits = 0
        for i, c in enumerate(coeffs):
            if c % 2:
                bits |= 1 << i
        return cls(bits)

    @classmethod
    def parse(cls, text: str) -> "BinPoly":
        terms = parse_terms(text, 2)
        bits = 0
        for e in terms:
            bits |= 1 << e
        return cls(bits)

    @classmethod
    def x_pow(cls, e: int) -> "BinPoly":
        return cls(1 << e)

    @property
    def degree(self):
        return MINUS_INFINITY if self.bits == 0 else _deg(self.bits)

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    @property
    def is_one(self) -> bool:
        return self.bits == 1

    def coeffs(self) -> tuple[int, ...]:
        if self.bits == 0:
            return ()
        return tuple((self.bits >> i) & 1 for i in range(_deg(self.bits) + 1))

    def eval_at_one(self) -> int:
        return self.bits.bit_count() & 1

    def __add__(self, other: "BinPoly") -> "BinPoly":
        return BinPoly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "BinPoly") -> "BinPoly":
        return BinPoly(_mul2(self.bits, other.bits))

    def __divmod__(self, other: "BinPoly") -> tuple["BinPoly", "BinPoly"]:
        q, r = _divmod2(self.bits, other.bits)
        return BinPoly(q), BinPoly(r)

    def __floordiv__(self, other: "BinPoly") -> "BinPoly":
        return BinPoly(_divmod2(self.bits, other.bits)[0])

    def __mod__(self, other: "BinPoly") -> "BinPoly":
        return BinPoly(_mod2(self.bits, other.bits))

    def divides(self, other: "BinPoly") -> bool:
        if self.bits == 0:
            return other.bits == 0
        return _mod2(other.bits, self.bits) == 0

    def __eq__(self, other) -> bool:
        return isinstance(other, BinPoly) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(("BinPoly", self.bits))

    def __bool__(self) -> bool:
        return self.bits != 0

    def __str__(self) -> str:
        return format_terms({e: 1 for e in range(self.bits.bit_length()) if (self.bits >> e) & 1})

    def __repr__(self) -> str:
        return f"BinPoly({self})"

    def __reduce__(self):
        return (BinPoly, (self.bits,))


BIN_ZERO = BinPoly(0)
BIN_ONE = BinPoly(1)


def gcd2(a: BinPoly, b: BinPoly) -> BinPoly:
    """Over GF(2) the gcd is automatically monic; gcd(p, 0) = p."""
    return BinPoly(_gcd2(a.bits, b.bits))


def ext_gcd2(a: BinPoly, b: BinPoly) -> tuple[BinPoly, BinPoly, BinPoly]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b)."""
    r0, r1 = a.bits, b.bits
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q, r = _divmod2(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ _mul2(q, s1)
        t0, t1 = t1, t0 ^ _mul2(q, t1)
    return BinPoly(r0), BinPoly(s0), BinPoly(t0)


def invert_mod2(a: BinPoly, modulus: BinPoly) -> BinPoly:
    g, s, _ = ext_gcd2(a, modulus)
    if not g.is_one:
        raise ValueError(f"{a} is not invertible modulo {modulus}")
    return s % modulus


def xn_minus_1(n: int) -> BinPoly:
    if n < 1:
        raise ValueError("length must be positive")
    return BinPoly((1 << n) | 1)


def rotate_mask(mask: int, k: int, n: int) -> int:
    """Cyclic left shift of an n-bit mask: bit i moves to bit (i+k) mod n."""
    k %= n
    full = (1 << n) - 1
    return ((mask << k) | (mask >> (n - k))) & full if k else mask & full


@dataclass(frozen=True)
class Coset:
    """A cyclotomic coset mod n: the orbit of an exponent under doubling."""

    exps: tuple[int, ...]

    @property
    def leader(self) -> int:
        return self.exps[0]

    def __len__(self) -> int:
        return len(self.exps)


@lru_cache(maxsize=None)
def cyclotomic_cosets(n: int) -> tuple[Coset, ...]:
    if n < 1 or n % 2 == 0:
        raise ValueError("cyclotomic cosets need odd positive n")
    seen: set[int] = set()
    out = []
    for a in range(n):
        if a in seen:
            continue
        orbit = []
        x = a
        while x not in seen:
            seen.add(x)
            orbit.append(x)
            x = (2 * x) % n
        out.append(Coset(tuple(sorted(orbit))))
    return tuple(out)


@dataclass(frozen=True)
class FieldContext:
    """GF(2^m) with a fixed primitive modulus and an order-n subgroup generator.

    ``xi_pow`` holds the n distinct powers of ``xi``; ``xi_log`` inverts it.
    Only the order-n subgroup is tabulated, never the full field.
    """

    n: int
    m: int
    modulus: int
    xi: int
    xi_pow: tuple[int, ...]
    xi_log: dict[int, int]

    def mul(self, a: int, b: int) -> int:
        r = _mul2(a, b)
        while r.bit_length() > self.m:
            r ^= self.modulus << (r.bit_length() - 1 - self.m)
        return r

    def pow(self, a: int, e: int) -> int:
        r = 1
        base = a
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r


def _prime_factors(v: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= v:
        if v % d == 0:
            out.append(d)
            while v % d == 0:
                v //= d
        d += 1
    if v > 1:
        out.append(v)
    return tuple(out)


def _multiplicative_order_of_two(n: int) -> int:
    m = 1
    r = 2 % n
    while r != 1:
        r = (2 * r) % n
        m += 1
    return m


@lru_cache(maxsize=None)
def build_field(n: int) -> FieldContext:
    """Splitting field of x^n - 1 over GF(2), for odd n."""
    if n < 1 or n % 2 == 0:
        raise ValueError("splitting field construction needs odd positive n")
    m = 1 if n == 1 else _multiplicative_order_of_two(n)
    if m > FIELD_EXTENSION_LIMIT:
        raise SizeGuardError(
            f"splitting field GF(2^{m}) for n={n} exceeds the 2^{FIELD_EXTENSION_LIMIT} guard",
            predicted=1 << m,
        )
    group = (1 << m) - 1
    primes = _prime_factors(group)
    modulus = None
    for cand in range((1 << m) | 1, 1 << (m + 1), 2):
        # x has order 2^m - 1 only if cand is irreducible with x primitive
        ctx = FieldContext(n, m, cand, 0, (), {})
        if ctx.pow(2, group) != 1:
            continue
        if any(ctx.pow(2, group // q) == 1 for q in primes):
            continue
        modulus = cand
        break
    if modulus is None:
        raise AssertionError(f"no primitive modulus of degree {m}")
    ctx = FieldContext(n, m, modulus, 0, (), {})
    xi = ctx.pow(2, group // n)
    pows = [1]
    for _ in range(n - 1):
        pows.append(ctx.mul(pows[-1], xi))
    assert ctx.mul(pows[-1], xi) == 1, "xi does not have exact order n"
    logs = {v: i for i, v in enumerate(pows)}
    assert len(logs) == n, "xi powers collide"
    return FieldContext(n, m, modulus, xi, tuple(pows), logs)


@lru_cache(maxsize=None)
def factor_xn1_gf2(n: int) -> tuple[tuple[Coset, BinPoly], ...]:
    """Irreducible factors of x^n + 1 over GF(2), keyed by cyclotomic coset.

    Each factor is the product of (x + xi^k) over its coset, computed in
    the splitting field and checked to land back in GF(2).
    """
    ctx = build_field(n)
    out = []
    for coset in cyclotomic_cosets(n):
        poly = [1]
        for k in coset.exps:
            root = ctx.xi_pow[k]
            nxt = [0] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] ^= c
                nxt[i] ^= ctx.mul(c, root)
            poly = nxt
        bits = 0
        for i, c in enumerate(poly):
            if c not in (0, 1):
                raise AssertionError("coset factor has a coefficient outside GF(2)")
            bits |= c << i
        out.append((coset, BinPoly(bits)))
    prod = BIN_ONE
    for _, p in out:
        prod = prod * p
    assert prod == xn_minus_1(n), "coset factors do not multiply back to x^n + 1"
    return tuple(out)


def binary_factors(n: int) -> tuple[BinPoly, ...]:
    return tuple(p for _, p in factor_xn1_gf2(n))


def root_exponents(p: BinPoly, n: int) -> frozenset[int]:
    """Exponent set {k : p(xi^k) = 0} for a divisor p of x^n + 1."""
    s: set[int] = set()
    rem = p
    for coset, q in factor_xn1_gf2(n):
        if q.divides(p):
            s.update(coset.exps)
            rem = rem // q
    if not rem.is_one:
        raise ValueError(f"{p} does not divide x^{n} + 1")
    return frozenset(s)


def tensor_square(p: BinPoly, n: int) -> BinPoly:
    """Divisor of x^n + 1 whose roots are all products of two roots of p.

    Root exponents of the result form the sumset S + S mod n, where S is
    the root exponent set of p (i = j allowed).
    """
    s = root_exponents(p, n)
    t = {(i + j) % n for i in s for j in s}
    out = BIN_ONE
    for coset, q in factor_xn1_gf2(n):
        if set(coset.exps) <= t:
            out = out * q
    return out


def pairwise_product_span(p: BinPoly, n: int) -> BinPoly:
    """Generator of the span of coefficientwise products from the code of p.

    The length-n cyclic binary code generated by p is spanned by the n
    rotations of its mask; coefficientwise AND is bilinear over XOR, so
    the span of all pairwise products of codewords equals the span of the
    pairwise ANDs of those rotations.  That span is again cyclic and this
    returns its generator, with x^n + 1 standing for the zero code.
    """
    full = xn_minus_1(n)
    mask = (p % full).bits
    rots = [rotate_mask(mask, i, n) for i in range(n)]
    g = full.bits
    for i in range(n):
        for j in range(i, n):
            g = _gcd2(g, rots[i] & rots[j])
            if g == 1:
                return BIN_ONE
    return BinPoly(g)


def divisors_of_xn1(alpha: int, limit: int = 1 << 20) -> tuple[BinPoly, ...]:
    """All monic divisors of x^alpha + 1 over GF(2), any positive alpha.

    With alpha = odd * 2^v, x^alpha + 1 = (x^odd + 1)^(2^v), so divisors
    are products of coset factors of x^odd + 1 with multiplicities up to
    2^v.  Sorted by (degree, mask).
    """
    if alpha < 1:
        raise ValueError("length must be positive")
    v = 0
    odd = alpha
    while odd % 2 == 0:
        odd //= 2
        v += 1
    factors = binary_factors(odd)
    mult = 1 << v
    count = (mult + 1) ** len(factors)
    if count > limit:
        raise SizeGuardError(
            f"x^{alpha} + 1 has {count} divisors, above the {limit} guard",
            predicted=count,
        )
    divs = [BIN_ONE]
    for q in factors:
        grown = []
        for d in divs:
            acc = d
            grown.append(acc)
            for _ in range(mult):
                acc = acc * q
                grown.append(acc)
        divs = grown
    divs.sort(key=lambda d: (d.bits.bit_length(), d.bits))
    return tuple(divs)
