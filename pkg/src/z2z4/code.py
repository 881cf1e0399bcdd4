"""Words and additive subgroups of Z2^alpha x Z4^beta, with exact oracles.

A word is stored as three bitplanes: ``u`` for the binary block and
``lo``/``hi`` for the quaternary block, where the coordinate value is
``lo_i + 2*hi_i``.  A whole code is a sorted numpy uint64 array of
packed words, and every bulk operation (enumeration, Gray images,
membership, kernels, spans) is a few vectorized bitplane ops, so the
oracles stay exact while handling millions of words.

Structure never comes from enumeration: ``group_basis`` extracts a
basis split into order-4 and order-2 rows by exact elimination over the
mixed alphabet, and ``howell_rows`` gives a canonical matrix used for
equality tests.  Enumeration is only used by the brute-force oracles,
guarded by ``max_words``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import SizeGuardError

DEFAULT_MAX_WORDS = 1 << 24
AMBIENT_BIT_LIMIT = 62


def _u64(v: int) -> np.uint64:
    return np.uint64(v)


class Word:
    """One element of Z2^alpha x Z4^beta."""

    __slots__ = ("alpha", "beta", "u", "lo", "hi")

    def __init__(self, alpha: int, beta: int, u: int, lo: int, hi: int):
        if alpha < 0 or beta < 0 or alpha + beta == 0:
            raise ValueError("need alpha, beta >= 0 with alpha + beta > 0")
        if not (0 <= u < (1 << alpha) if alpha else u == 0):
            raise ValueError("binary block out of range")
        full = (1 << beta) - 1
        if not (0 <= lo <= full and 0 <= hi <= full):
            raise ValueError("quaternary block out of range")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def from_vectors(cls, xs, ys) -> "Word":
        xs = tuple(xs)
        ys = tuple(ys)
        u = 0
        for i, x in enumerate(xs):
            if x % 2:
                u |= 1 << i
        lo = hi = 0
        for i, y in enumerate(ys):
            y %= 4
            if y & 1:
                lo |= 1 << i
            if y & 2:
                hi |= 1 << i
        return cls(len(xs), len(ys), u, lo, hi)

    @classmethod
    def from_packed(cls, packed: int, alpha: int, beta: int) -> "Word":
        mask_a = (1 << alpha) - 1
        mask_b = (1 << beta) - 1
        return cls(
            alpha,
            beta,
            packed & mask_a,
            (packed >> alpha) & mask_b,
            (packed >> (alpha + beta)) & mask_b,
        )

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Digits with a ``|`` between blocks, leftmost digit = coordinate 0."""
        left, _, right = text.partition("|")
        xs = [int(c) for c in left.strip()]
        ys = [int(c) for c in right.strip()]
        if any(x not in (0, 1) for x in xs):
            raise ValueError("binary block digits must be 0 or 1")
        if any(y not in (0, 1, 2, 3) for y in ys):
            raise ValueError("quaternary block digits must be 0..3")
        return cls.from_vectors(xs, ys)

    @property
    def packed(self) -> int:
        return self.u | (self.lo << self.alpha) | (self.hi << (self.alpha + self.beta))

    @property
    def gray(self) -> int:
        """Image as a bitmask of length alpha + 2*beta, bit i = coordinate i."""
        return self.u | (self.hi << self.alpha) | ((self.lo ^ self.hi) << (self.alpha + self.beta))

    @property
    def is_zero(self) -> bool:
        return self.u == 0 and self.lo == 0 and self.hi == 0

    def x_vector(self) -> tuple[int, ...]:
        return tuple((self.u >> i) & 1 for i in range(self.alpha))

    def y_vector(self) -> tuple[int, ...]:
        return tuple(((self.lo >> i) & 1) + 2 * ((self.hi >> i) & 1) for i in range(self.beta))

    def __add__(self, other: "Word") -> "Word":
        self._check(other)
        return Word(
            self.alpha,
            self.beta,
            self.u ^ other.u,
            self.lo ^ other.lo,
            self.hi ^ other.hi ^ (self.lo & other.lo),
        )

    def __neg__(self) -> "Word":
        return Word(self.alpha, self.beta, self.u, self.lo, self.hi ^ self.lo)

    def __sub__(self, other: "Word") -> "Word":
        return self + (-other)

    def double(self) -> "Word":
        return Word(self.alpha, self.beta, 0, 0, self.lo)

    def __mul__(self, c: int) -> "Word":
        c %= 4
        if c == 0:
            return Word(self.alpha, self.beta, 0, 0, 0)
        if c == 1:
            return self
        if c == 2:
            return self.double()
        return self.double() + self

    __rmul__ = __mul__

    def order(self) -> int:
        if self.is_zero:
            return 1
        return 2 if self.lo == 0 else 4

    def shift(self) -> "Word":
        """Simultaneous cyclic shift: last coordinate of each block to the front."""
        a, b = self.alpha, self.beta

        def rot(m: int, n: int) -> int:
            if n <= 1:
                return m
            return ((m << 1) | (m >> (n - 1))) & ((1 << n) - 1)

        return Word(a, b, rot(self.u, a), rot(self.lo, b), rot(self.hi, b))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word)
            and (self.alpha, self.beta, self.u, self.lo, self.hi)
            == (other.alpha, other.beta, other.u, other.lo, other.hi)
        )

    def __hash__(self) -> int:
        return hash((self.alpha, self.beta, self.u, self.lo, self.hi))

    def __str__(self) -> str:
        xs = "".join(str(x) for x in self.x_vector())
        ys = "".join(str(y) for y in self.y_vector())
        return f"{xs}|{ys}"

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def _check(self, other: "Word") -> None:
        if self.alpha != other.alpha or self.beta != other.beta:
            raise ValueError("mismatched ambient spaces")

    def __reduce__(self):
        return (Word, (self.alpha, self.beta, self.u, self.lo, self.hi))


def star2(v: Word, w: Word) -> Word:
    """Twice the coordinatewise product of the odd parts: (0 | 2(v' * w')).

    Bilinear over addition in each argument, which is what lets kernel
    and linearity tests quantify over generators instead of all words.
    """
    v._check(w)
    return Word(v.alpha, v.beta, 0, 0, v.lo & w.lo)


def ungray(bits: int, alpha: int, beta: int) -> Word:
    mask_b = (1 << beta) - 1
    u = bits & ((1 << alpha) - 1)
    hi = (bits >> alpha) & mask_b
    lo = ((bits >> (alpha + beta)) & mask_b) ^ hi
    return Word(alpha, beta, u, lo, hi)


# ---------------------------------------------------------------------------
# vectorized plane helpers on packed uint64 arrays


def _split(arr: np.ndarray, alpha: int, beta: int):
    mask_a = _u64((1 << alpha) - 1)
    mask_b = _u64((1 << beta) - 1)
    u = arr & mask_a
    lo = (arr >> _u64(alpha)) & mask_b
    hi = (arr >> _u64(alpha + beta)) & mask_b
    return u, lo, hi


def _pack(u, lo, hi, alpha: int, beta: int) -> np.ndarray:
    return u | (lo << _u64(alpha)) | (hi << _u64(alpha + beta))


def _add_word(arr: np.ndarray, w: Word) -> np.ndarray:
    u, lo, hi = _split(arr, w.alpha, w.beta)
    wu, wlo, whi = _u64(w.u), _u64(w.lo), _u64(w.hi)
    return _pack(u ^ wu, lo ^ wlo, hi ^ whi ^ (lo & wlo), w.alpha, w.beta)


def gray_array(arr: np.ndarray, alpha: int, beta: int) -> np.ndarray:
    u, lo, hi = _split(arr, alpha, beta)
    return u | (hi << _u64(alpha)) | ((lo ^ hi) << _u64(alpha + beta))


def ungray_array(bits: np.ndarray, alpha: int, beta: int) -> np.ndarray:
    mask_a = _u64((1 << alpha) - 1)
    mask_b = _u64((1 << beta) - 1)
    u = bits & mask_a
    hi = (bits >> _u64(alpha)) & mask_b
    lo = ((bits >> _u64(alpha + beta)) & mask_b) ^ hi
    return _pack(u, lo, hi, alpha, beta)


def _isin_sorted(sorted_arr: np.ndarray, vals: np.ndarray) -> np.ndarray:
    idx = np.searchsorted(sorted_arr, vals)
    idx[idx == len(sorted_arr)] = 0
    return sorted_arr[idx] == vals if len(sorted_arr) else np.zeros(len(vals), dtype=bool)


# ---------------------------------------------------------------------------
# exact structure: group basis and Howell canonical form


def _word_to_coords(w: Word) -> list[int]:
    return [(w.u >> i) & 1 for i in range(w.alpha)] + [
        ((w.lo >> i) & 1) + 2 * ((w.hi >> i) & 1) for i in range(w.beta)
    ]


def _coords_to_word(alpha: int, beta: int, cs) -> Word:
    u = lo = hi = 0
    for i in range(alpha):
        if cs[i] % 2:
            u |= 1 << i
    for i in range(beta):
        y = cs[alpha + i] % 4
        if y & 1:
            lo |= 1 << i
        if y & 2:
            hi |= 1 << i
    return Word(alpha, beta, u, lo, hi)


def _row_sub(alpha: int, a: list[int], b: list[int], c: int) -> None:
    """a -= c*b in place, Z2 on the first alpha coords, Z4 after."""
    if c % 2:
        for i in range(alpha):
            a[i] ^= b[i]
    for i in range(alpha, len(a)):
        a[i] = (a[i] - c * b[i]) % 4


def _row_scale(alpha: int, a: list[int], c: int) -> None:
    # c must be a unit; units act trivially on the Z2 block
    for i in range(alpha, len(a)):
        a[i] = (a[i] * c) % 4


@dataclass(frozen=True)
class GroupBasis:
    """Basis of an additive subgroup, split by row order.

    ``rows4`` have unit pivots at distinct quaternary columns
    (``pivots4``, found scanning right to left); ``rows2`` generate the
    residual elementary 2-group and are fully reduced with pivots
    ``pivots2`` (binary columns left to right, then quaternary columns
    right to left, where the pivot value is 2).  Every word has a unique
    coefficient vector over this basis, so the group order is exactly
    4^delta * 2^gamma.
    """

    alpha: int
    beta: int
    rows4: tuple[tuple[int, ...], ...]
    pivots4: tuple[int, ...]
    rows2: tuple[tuple[int, ...], ...]
    pivots2: tuple[int, ...]

    @property
    def delta(self) -> int:
        return len(self.rows4)

    @property
    def gamma(self) -> int:
        return len(self.rows2)

    @property
    def size(self) -> int:
        return 1 << (self.gamma + 2 * self.delta)

    def words4(self) -> tuple[Word, ...]:
        return tuple(_coords_to_word(self.alpha, self.beta, r) for r in self.rows4)

    def words2(self) -> tuple[Word, ...]:
        return tuple(_coords_to_word(self.alpha, self.beta, r) for r in self.rows2)


def group_basis(alpha: int, beta: int, generators) -> GroupBasis:
    rows = [_word_to_coords(w) for w in generators]
    rows = [r for r in rows if any(r)]

    basis4: list[list[int]] = []
    pivots4: list[int] = []
    for col in range(alpha + beta - 1, alpha - 1, -1):
        hit = next((r for r in rows if r[col] % 2 == 1), None)
        if hit is None:
            continue
        rows.remove(hit)
        if hit[col] == 3:
            _row_scale(alpha, hit, 3)
        for r in rows:
            if r[col]:
                _row_sub(alpha, r, hit, r[col])
        for r in basis4:
            if r[col]:
                _row_sub(alpha, r, hit, r[col])
        basis4.append(hit)
        pivots4.append(col)
        rows = [r for r in rows if any(r)]

    # residual rows are all-even on the quaternary block: an F2 space
    basis2: list[list[int]] = []
    pivots2: list[int] = []
    col_order = list(range(alpha)) + list(range(alpha + beta - 1, alpha - 1, -1))
    for col in col_order:
        piv = 1 if col < alpha else 2
        hit = next((r for r in rows if r[col] == piv), None)
        if hit is None:
            continue
        rows.remove(hit)
        for r in rows:
            if r[col]:
                _row_sub(alpha, r, hit, 1)
        for r in basis2:
            if r[col]:
                _row_sub(alpha, r, hit, 1)
        basis2.append(hit)
        pivots2.append(col)
        rows = [r for r in rows if any(r)]

    if rows:
        raise AssertionError("nonzero residue after group elimination")

    # tidy the order-4 rows at the order-2 pivot columns
    for r2, col in zip(basis2, pivots2):
        for r4 in basis4:
            if col < alpha:
                if r4[col]:
                    _row_sub(alpha, r4, r2, 1)
            elif r4[col] >= 2:
                _row_sub(alpha, r4, r2, 1)

    return GroupBasis(
        alpha,
        beta,
        tuple(tuple(r) for r in basis4),
        tuple(pivots4),
        tuple(tuple(r) for r in basis2),
        tuple(pivots2),
    )


def howell_rows(alpha: int, beta: int, generators) -> tuple[tuple[int, ...], ...]:
    """Canonical generating rows over Z4, with Z2 coords embedded as 2*Z4.

    Two generating sets span the same subgroup iff their Howell rows are
    identical, so this is the basis-free equality certificate.  Pivot
    rows are fully reduced above and below; a row with a zero-divisor
    pivot contributes its double back to the working set.
    """
    n = alpha + beta

    def embed(w: Word) -> list[int]:
        cs = _word_to_coords(w)
        return [2 * cs[i] if i < alpha else cs[i] for i in range(n)]

    work = [r for r in (embed(w) for w in generators) if any(r)]
    out: list[list[int]] = []
    for col in range(n):
        unit = next((r for r in work if r[col] in (1, 3)), None)
        if unit is not None:
            work.remove(unit)
            if unit[col] == 3:
                unit[:] = [(3 * c) % 4 for c in unit]
            for r in work + out:
                if r[col]:
                    c = r[col]
                    r[:] = [(rc - c * uc) % 4 for rc, uc in zip(r, unit)]
            out.append(unit)
        else:
            two = next((r for r in work if r[col] == 2), None)
            if two is None:
                continue
            work.remove(two)
            for r in work:
                if r[col]:
                    r[:] = [(rc - tc) % 4 for rc, tc in zip(r, two)]
            for r in out:
                if r[col] >= 2:
                    r[:] = [(rc - tc) % 4 for rc, tc in zip(r, two)]
            work.append([(2 * c) % 4 for c in two])
            out.append(two)
        work = [r for r in work if any(r)]
    if work:
        raise AssertionError("Howell reduction left unprocessed rows")
    return tuple(tuple(r) for r in out)


@dataclass(frozen=True)
class CodeType:
    """Type parameters (alpha, beta; gamma, delta; kappa) with refinements.

    ``kappa1``/``kappa2`` and ``delta1``/``delta2`` are optional because
    only some constructions determine them; when present they must be
    consistent splits.
    """

    alpha: int
    beta: int
    gamma: int
    delta: int
    kappa: int
    kappa1: int | None = None
    kappa2: int | None = None
    delta1: int | None = None
    delta2: int | None = None

    def __post_init__(self):
        if min(self.alpha, self.beta, self.gamma, self.delta, self.kappa) < 0:
            raise ValueError("type parameters must be nonnegative")
        if self.kappa > min(self.alpha, self.gamma):
            raise ValueError("kappa exceeds min(alpha, gamma)")
        if self.alpha == 0 and self.kappa != 0:
            raise ValueError("kappa must vanish when there is no binary block")
        if self.gamma + self.delta > self.beta + self.kappa:
            raise ValueError("gamma + delta exceeds beta + kappa")
        if (self.kappa1 is None) != (self.kappa2 is None):
            raise ValueError("kappa1 and kappa2 must be set together")
        if self.kappa1 is not None and self.kappa1 + self.kappa2 != self.kappa:
            raise ValueError("kappa1 + kappa2 must equal kappa")
        if self.kappa1 is not None and min(self.kappa1, self.kappa2) < 0:
            raise ValueError("kappa split must be nonnegative")
        if (self.delta1 is None) != (self.delta2 is None):
            raise ValueError("delta1 and delta2 must be set together")
        if self.delta1 is not None and self.delta1 + self.delta2 != self.delta:
            raise ValueError("delta1 + delta2 must equal delta")
        if self.delta1 is not None and min(self.delta1, self.delta2) < 0:
            raise ValueError("delta split must be nonnegative")

    @property
    def size(self) -> int:
        return 1 << (self.gamma + 2 * self.delta)

    @property
    def gray_length(self) -> int:
        return self.alpha + 2 * self.beta

    def same_main(self, other: "CodeType") -> bool:
        return (self.alpha, self.beta, self.gamma, self.delta, self.kappa) == (
            other.alpha,
            other.beta,
            other.gamma,
            other.delta,
            other.kappa,
        )

    def __str__(self) -> str:
        return f"({self.alpha}, {self.beta}; {self.gamma}, {self.delta}; {self.kappa})"


def _bitrows_rank(rows: list[int]) -> int:
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
    return len(basis)


# ---------------------------------------------------------------------------
# binary codes (Gray images live here)


def _echelon_uint64(masks: np.ndarray, length: int) -> list[int]:
    """Row echelon pivots of a mask array, one vectorized pass per bit."""
    work = masks[masks != 0]
    out: list[int] = []
    for bit in range(length - 1, -1, -1):
        if work.size == 0:
            break
        hit = (work & _u64(1 << bit)) != 0
        if not bool(hit.any()):
            continue
        pivot = int(work[int(np.argmax(hit))])
        out.append(pivot)
        work = np.where(hit, work ^ _u64(pivot), work)
        work = work[work != 0]
    return out


@dataclass(frozen=True)
class BinaryCode:
    """A binary linear code given by its reduced row echelon basis masks."""

    length: int
    basis: tuple[int, ...]

    @classmethod
    def from_masks(cls, length: int, masks) -> "BinaryCode":
        if isinstance(masks, np.ndarray):
            masks = _echelon_uint64(masks, length)
        rows: list[int] = []
        for m in masks:
            for b in rows:
                low = b & -b
                if m & low:
                    m ^= b
            if m:
                rows.append(m)
                low = m & -m
                for i, b in enumerate(rows[:-1]):
                    if b & low:
                        rows[i] = b ^ m
        rows.sort(reverse=True)
        return cls(length, tuple(rows))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return 1 << self.dim

    def contains(self, mask: int) -> bool:
        for b in self.basis:
            if mask & (b & -b):
                mask ^= b
        return mask == 0

    def is_subcode_of(self, other: "BinaryCode") -> bool:
        return all(other.contains(b) for b in self.basis)

    def words(self, max_words: int = DEFAULT_MAX_WORDS) -> np.ndarray:
        if self.size > max_words:
            raise SizeGuardError(
                f"binary code has {self.size} words, above the {max_words} budget",
                predicted=self.size,
            )
        arr = np.zeros(1, dtype=np.uint64)
        for b in self.basis:
            arr = np.concatenate([arr, arr ^ _u64(b)])
        arr.sort()
        return arr

    def is_cyclic(self) -> bool:
        n = self.length
        full = (1 << n) - 1
        for b in self.basis:
            r = ((b << 1) | (b >> (n - 1))) & full if n > 1 else b
            if not self.contains(r):
                return False
        return True


# ---------------------------------------------------------------------------
# additive codes


class AdditiveCode:
    """An additive subgroup of Z2^alpha x Z4^beta."""

    __slots__ = ("alpha", "beta", "generators", "max_words", "_gb", "_words", "_howell")

    def __init__(self, alpha: int, beta: int, generators, max_words: int = DEFAULT_MAX_WORDS):
        if alpha < 0 or beta < 0 or alpha + beta == 0:
            raise ValueError("need alpha, beta >= 0 with alpha + beta > 0")
        if alpha + 2 * beta > AMBIENT_BIT_LIMIT:
            raise SizeGuardError(
                f"ambient space needs {alpha + 2 * beta} bits, above {AMBIENT_BIT_LIMIT}",
                predicted=1 << (alpha + 2 * beta),
            )
        gens = tuple(generators)
        for w in gens:
            if w.alpha != alpha or w.beta != beta:
                raise ValueError("generator does not live in the stated ambient space")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "max_words", max_words)
        object.__setattr__(self, "_gb", None)
        object.__setattr__(self, "_words", None)
        object.__setattr__(self, "_howell", None)

    def __setattr__(self, name, value):
        raise AttributeError("AdditiveCode is immutable; use constructors")

    @classmethod
    def from_words(
        cls, alpha: int, beta: int, packed, max_words: int = DEFAULT_MAX_WORDS
    ) -> "AdditiveCode":
        """Rebuild a code from the exact set of its packed words.

        Generators are extracted by growing a span until it covers the
        input; if the input is not additively closed this raises.
        """
        arr = np.unique(np.asarray(packed, dtype=np.uint64))
        if len(arr) == 0 or arr[0] != 0:
            raise ValueError("a code must contain the zero word")
        span = np.zeros(1, dtype=np.uint64)
        gens: list[Word] = []
        while True:
            missing = arr[~_isin_sorted(span, arr)]
            if len(missing) == 0:
                break
            w = Word.from_packed(int(missing[0]), alpha, beta)
            gens.append(w)
            parts = [span]
            for c in (1, 2, 3):
                m = w * c
                if not m.is_zero:
                    parts.append(_add_word(span, m))
            span = np.unique(np.concatenate(parts))
        if len(span) != len(arr):
            raise ValueError("word set is not additively closed")
        code = cls(alpha, beta, gens, max_words=max_words)
        object.__setattr__(code, "_words", arr)
        return code

    @property
    def basis(self) -> GroupBasis:
        if self._gb is None:
            object.__setattr__(self, "_gb", group_basis(self.alpha, self.beta, self.generators))
        return self._gb

    @property
    def size(self) -> int:
        return self.basis.size

    def basis_words(self) -> tuple[Word, ...]:
        return self.basis.words4() + self.basis.words2()

    def words(self) -> np.ndarray:
        """Sorted packed array of all words; guarded by ``max_words``."""
        if self._words is None:
            gb = self.basis
            if gb.size > self.max_words:
                raise SizeGuardError(
                    f"code has {gb.size} words, above the {self.max_words} budget",
                    predicted=gb.size,
                )
            arr = np.zeros(1, dtype=np.uint64)
            for w in gb.words4():
                arr = np.concatenate(
                    [arr, _add_word(arr, w), _add_word(arr, w * 2), _add_word(arr, w * 3)]
                )
            for w in gb.words2():
                arr = np.concatenate([arr, _add_word(arr, w)])
            arr.sort()
            if len(arr) != gb.size:
                raise AssertionError("enumeration does not match the basis order")
            object.__setattr__(self, "_words", arr)
        return self._words

    def contains(self, w: Word) -> bool:
        if w.alpha != self.alpha or w.beta != self.beta:
            return False
        gb = self.basis
        cs = _word_to_coords(w)
        for row, col in zip(gb.rows4, gb.pivots4):
            c = cs[col] % 4
            if c:
                _row_sub(self.alpha, cs, list(row), c)
        for row, col in zip(gb.rows2, gb.pivots2):
            v = cs[col]
            if col < self.alpha:
                if v:
                    _row_sub(self.alpha, cs, list(row), 1)
            else:
                if v % 2:
                    return False
                if v:
                    _row_sub(self.alpha, cs, list(row), 1)
        return not any(cs)

    def membership_mask(self, packed: np.ndarray) -> np.ndarray:
        return _isin_sorted(self.words(), packed)

    def howell(self) -> tuple[tuple[int, ...], ...]:
        if self._howell is None:
            object.__setattr__(
                self, "_howell", howell_rows(self.alpha, self.beta, self.generators)
            )
        return self._howell

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AdditiveCode)
            and self.alpha == other.alpha
            and self.beta == other.beta
            and self.howell() == other.howell()
        )

    def __hash__(self) -> int:
        return hash((self.alpha, self.beta, self.howell()))

    def is_subcode_of(self, other: "AdditiveCode") -> bool:
        return all(other.contains(w) for w in self.basis_words())

    def code_type(self) -> CodeType:
        """Type from the group basis alone, no enumeration.

        kappa is the F2 rank of the binary parts of the order-2 rows
        (doubles of order-4 rows have zero binary part), and kappa1
        counts independent order-2 combinations whose quaternary part
        vanishes: the nullity of the halved quaternary parts.
        """
        gb = self.basis
        a = self.alpha
        xrows = [int(sum(((r[i] & 1) << i) for i in range(a))) for r in gb.rows2]
        kappa = _bitrows_rank([r for r in xrows if r])
        yrows = [
            int(sum(((r[a + i] >> 1) << i) for i in range(self.beta))) for r in gb.rows2
        ]
        kappa1 = gb.gamma - _bitrows_rank([r for r in yrows if r])
        xall = xrows + [int(sum(((r[i] & 1) << i) for i in range(a))) for r in gb.rows4]
        delta1 = _bitrows_rank([r for r in xall if r]) - kappa
        return CodeType(
            self.alpha,
            self.beta,
            gb.gamma,
            gb.delta,
            kappa,
            kappa1=kappa1,
            kappa2=kappa - kappa1,
            delta1=delta1,
            delta2=gb.delta - delta1,
        )

    def is_cyclic(self) -> bool:
        return all(self.contains(w.shift()) for w in self.basis_words())

    def project_x(self) -> BinaryCode:
        return BinaryCode.from_masks(self.alpha, (w.u for w in self.basis_words()))

    def project_y(self) -> "AdditiveCode":
        if self.beta == 0:
            raise ValueError("no quaternary block to project onto")
        gens = [
            Word(0, self.beta, 0, w.lo, w.hi)
            for w in self.basis_words()
            if w.lo or w.hi
        ]
        return AdditiveCode(0, self.beta, gens, max_words=self.max_words)

    def is_separable(self) -> bool:
        if self.alpha == 0 or self.beta == 0:
            return True
        return self.size == self.project_x().size * self.project_y().size

    def order_two_subcode(self) -> "AdditiveCode":
        gb = self.basis
        gens = list(gb.words2()) + [w.double() for w in gb.words4()]
        gens = [w for w in gens if not w.is_zero]
        return AdditiveCode(self.alpha, self.beta, gens, max_words=self.max_words)

    def gray_image(self) -> BinaryCode:
        """Span of the Gray images: exact only when the code is linear."""
        return BinaryCode.from_masks(
            self.alpha + 2 * self.beta, (w.gray for w in self.basis_words())
        )


def product_code(cx: BinaryCode, cy: AdditiveCode) -> AdditiveCode:
    alpha, beta = cx.length, cy.beta
    gens = [Word(alpha, beta, m, 0, 0) for m in cx.basis] + [
        Word(alpha, beta, 0, w.lo, w.hi) for w in cy.basis_words()
    ]
    return AdditiveCode(alpha, beta, gens, max_words=cy.max_words)


def type_by_counting(code: AdditiveCode) -> CodeType:
    """Independent type oracle: read gamma, delta, kappa off the word list.

    2^(gamma+2delta) words in total, 2^(gamma+delta) of order at most
    two; kappa is the rank of the binary parts of those, kappa1 the log
    of how many have zero quaternary part.
    """
    arr = code.words()
    u, lo, hi = _split(arr, code.alpha, code.beta)
    total = len(arr)
    ord2 = lo == 0
    n_ord2 = int(np.count_nonzero(ord2))
    gamma_delta = n_ord2.bit_length() - 1
    gamma_2delta = total.bit_length() - 1
    if 1 << gamma_delta != n_ord2 or 1 << gamma_2delta != total:
        raise AssertionError("word counts are not powers of two")
    delta = gamma_2delta - gamma_delta
    gamma = gamma_delta - delta
    xparts = sorted(set(int(v) for v in u[ord2]) - {0})
    kappa = _bitrows_rank(xparts)
    n_xonly = int(np.count_nonzero(ord2 & (hi == 0)))
    kappa1 = n_xonly.bit_length() - 1
    if 1 << kappa1 != n_xonly:
        raise AssertionError("binary-only word count is not a power of two")
    delta1 = _bitrows_rank(sorted(set(int(v) for v in u) - {0})) - kappa
    return CodeType(
        code.alpha, code.beta, gamma, delta, kappa,
        kappa1=kappa1, kappa2=kappa - kappa1,
        delta1=delta1, delta2=delta - delta1,
    )


# ---------------------------------------------------------------------------
# brute-force oracles


def kernel_bruteforce(code: AdditiveCode, exhaustive: bool = False) -> AdditiveCode:
    """Words v with Phi(v) + Phi(C) inside Phi(C), found by enumeration.

    v qualifies iff 2(v * w) lands in the code for every word w; by
    bilinearity it is enough to range w over the basis rows unless
    ``exhaustive`` insists on all words.
    """
    arr = code.words()
    alpha, beta = code.alpha, code.beta
    _, lo, _ = _split(arr, alpha, beta)
    keep = np.ones(len(arr), dtype=bool)
    if exhaustive:
        witnesses = [Word.from_packed(int(p), alpha, beta) for p in arr]
    else:
        witnesses = list(code.basis_words())
    for w in witnesses:
        if w.lo == 0:
            continue
        star = (lo & _u64(w.lo)) << _u64(alpha + beta)
        keep &= code.membership_mask(star)
    return AdditiveCode.from_words(alpha, beta, arr[keep], max_words=code.max_words)


@dataclass(frozen=True)
class SpanResult:
    rank: int
    binary_span: BinaryCode
    lifted: AdditiveCode | None


def span_bruteforce(
    code: AdditiveCode, lift: bool = True, max_words: int | None = None
) -> SpanResult:
    """Linear span of the Gray image, plus its preimage as an additive code.

    The rank needs no enumeration of the span itself, only of the code;
    the lifted preimage does, so it is guarded and optional.
    """
    budget = code.max_words if max_words is None else max_words
    arr = code.words()
    masks = gray_array(arr, code.alpha, code.beta)
    span = BinaryCode.from_masks(code.alpha + 2 * code.beta, masks)
    lifted = None
    if lift:
        if span.size > budget:
            raise SizeGuardError(
                f"Gray span has {span.size} words, above the {budget} budget",
                predicted=span.size,
            )
        packed = ungray_array(span.words(max_words=budget), code.alpha, code.beta)
        lifted = AdditiveCode.from_words(code.alpha, code.beta, packed, max_words=budget)
    return SpanResult(span.dim, span, lifted)


def is_gray_linear_bruteforce(code: AdditiveCode, exhaustive: bool = False) -> bool:
    """Whether the Gray image is a linear code.

    Linearity is equivalent to closure under the doubled coordinatewise
    products, and bilinearity again reduces the check to basis pairs.
    """
    if exhaustive:
        arr = code.words()
        alpha, beta = code.alpha, code.beta
        _, lo, _ = _split(arr, alpha, beta)
        for p in arr:
            w = Word.from_packed(int(p), alpha, beta)
            if w.lo == 0:
                continue
            star = (lo & _u64(w.lo)) << _u64(alpha + beta)
            if not bool(np.all(code.membership_mask(star))):
                return False
        return True
    ws = [w for w in code.basis_words() if w.lo]
    for i, v in enumerate(ws):
        for w in ws[i:]:
            if not code.contains(star2(v, w)):
                return False
    return True


# ---------------------------------------------------------------------------
# standard generator matrix


@dataclass(frozen=True)
class StandardFormMatrix:
    """Generator matrix organized into the four canonical row blocks.

    Rows are kept in the original coordinate order; ``x_order`` and
    ``y_order`` record the column classification that exhibits the
    identity blocks: binary columns as [kappa1 pivots, kappa2 pivots,
    rest], quaternary columns as [plain, order-2 pivots, order-4
    pivots].  Row blocks come in the order kappa1, kappa2,
    gamma - kappa, delta.
    """

    alpha: int
    beta: int
    kappa1_rows: tuple[tuple[int, ...], ...]
    kappa2_rows: tuple[tuple[int, ...], ...]
    even_rows: tuple[tuple[int, ...], ...]
    quaternary_rows: tuple[tuple[int, ...], ...]
    x_order: tuple[int, ...]
    y_order: tuple[int, ...]

    @property
    def kappa1(self) -> int:
        return len(self.kappa1_rows)

    @property
    def kappa2(self) -> int:
        return len(self.kappa2_rows)

    @property
    def gamma(self) -> int:
        return self.kappa1 + self.kappa2 + len(self.even_rows)

    @property
    def delta(self) -> int:
        return len(self.quaternary_rows)

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self.kappa1_rows + self.kappa2_rows + self.even_rows + self.quaternary_rows

    def words(self) -> tuple[Word, ...]:
        return tuple(_coords_to_word(self.alpha, self.beta, r) for r in self.rows())

    def permuted_rows(self) -> tuple[tuple[int, ...], ...]:
        cols = list(self.x_order) + [self.alpha + j for j in self.y_order]
        return tuple(tuple(r[c] for c in cols) for r in self.rows())

    def c_prime_rows(self) -> tuple[tuple[int, ...], ...]:
        """Rows generating the subcode that carries the quaternary action."""
        return self.even_rows + self.quaternary_rows

    def c_prime_words(self) -> tuple[Word, ...]:
        return tuple(_coords_to_word(self.alpha, self.beta, r) for r in self.c_prime_rows())


def _f2_rref_with_trace(vectors: list[int], col_order) -> tuple[
    list[tuple[int, int, int]], list[int]
]:
    """RREF of bit-vectors with full combination tracking.

    Returns (pivot rows as (vector, trace, pivot_col)) and (zero-row
    traces); ``trace`` bit j means original vector j participates.
    """
    work = [(v, 1 << i) for i, v in enumerate(vectors)]
    pivots: list[tuple[int, int, int]] = []
    for col in col_order:
        bit = 1 << col
        hit = next(((v, t) for v, t in work if v & bit), None)
        if hit is None:
            continue
        work.remove(hit)
        hv, ht = hit
        work = [(v ^ hv, t ^ ht) if v & bit else (v, t) for v, t in work]
        pivots = [(v ^ hv, t ^ ht, p) if v & bit else (v, t, p) for v, t, p in pivots]
        pivots.append((hv, ht, col))
    zeros = [t for v, t in work if v == 0]
    if any(v for v, _ in work):
        raise AssertionError("RREF left nonzero rows outside pivots")
    return pivots, zeros


def standard_form(code: AdditiveCode) -> StandardFormMatrix:
    alpha, beta = code.alpha, code.beta
    gb = code.basis
    rows4 = [list(r) for r in gb.rows4]
    pivots4 = list(gb.pivots4)
    rows2 = [list(r) for r in gb.rows2]

    # split the order-2 rows by whether their quaternary part can be
    # cancelled: combinations with zero quaternary part give the kappa1
    # block, the rest keep independent halved quaternary parts
    yvecs = [sum(((r[alpha + i] >> 1) << i) for i in range(beta)) for r in rows2]
    pivots, zeros = _f2_rref_with_trace(yvecs, range(beta))

    def combine(trace: int) -> list[int]:
        out = [0] * (alpha + beta)
        for j in range(len(rows2)):
            if (trace >> j) & 1:
                _row_sub(alpha, out, rows2[j], 3)
        return out

    k1_rows = [combine(t) for t in zeros]
    rest_rows = [combine(t) for _, t, _ in pivots]

    # RREF the kappa1 block on its binary part
    xvecs = [sum((r[i] << i) for i in range(alpha)) for r in k1_rows]
    xp, xz = _f2_rref_with_trace(xvecs, range(alpha))
    if xz:
        raise AssertionError("dependent rows in the binary-only block")
    k1_final: list[tuple[list[int], int]] = []
    for v, t, p in sorted(xp, key=lambda it: it[2]):
        row = [0] * (alpha + beta)
        for j in range(len(k1_rows)):
            if (t >> j) & 1:
                _row_sub(alpha, row, k1_rows[j], 3)
        k1_final.append((row, p))
    k1_pivot_cols = [p for _, p in k1_final]

    # clear the kappa1 pivot columns from everything else (free: the
    # kappa1 rows have zero quaternary part)
    def clear_k1(row: list[int]) -> None:
        for r1, p in k1_final:
            if row[p]:
                _row_sub(alpha, row, r1, 1)

    for r in rest_rows:
        clear_k1(r)
    for r in rows4:
        clear_k1(r)

    # binary elimination among the remaining order-2 rows: pivot rows
    # form the kappa2 block, rows reduced to zero binary part the plain
    # even block
    k2_rows: list[tuple[list[int], int]] = []
    even_rows: list[list[int]] = []
    work = [r for r in rest_rows]
    for col in range(alpha):
        hit = next((r for r in work if r[col]), None)
        if hit is None:
            continue
        work.remove(hit)
        for r in work:
            if r[col]:
                _row_sub(alpha, r, hit, 1)
        for r, _ in k2_rows:
            if r[col]:
                _row_sub(alpha, r, hit, 1)
        k2_rows.append((hit, col))
    even_rows = work
    k2_rows.sort(key=lambda it: it[1])
    k2_pivot_cols = [p for _, p in k2_rows]

    # clear kappa2 pivot columns from the order-4 rows
    for r4 in rows4:
        for r2, p in k2_rows:
            if r4[p]:
                _row_sub(alpha, r4, r2, 1)

    # canonicalize the plain even rows on halved quaternary parts,
    # scanning right to left
    ev = [(r, sum(((r[alpha + i] >> 1) << i) for i in range(beta))) for r in even_rows]
    ev_final: list[tuple[list[int], int, int]] = []
    for j in range(beta - 1, -1, -1):
        bit = 1 << j
        hit = next((item for item in ev if item[1] & bit), None)
        if hit is None:
            continue
        ev.remove(hit)
        hr, hv = hit
        nxt = []
        for r, v in ev:
            if v & bit:
                _row_sub(alpha, r, hr, 1)
                v ^= hv
            nxt.append((r, v))
        ev = nxt
        for i, (r, v, p) in enumerate(ev_final):
            if v & bit:
                _row_sub(alpha, r, hr, 1)
                ev_final[i] = (r, v ^ hv, p)
        ev_final.append((hr, hv, j))
    if ev:
        raise AssertionError("even rows left without pivots")
    ev_final.sort(key=lambda it: it[2])
    even_pivot_cols = [p for _, _, p in ev_final]
    even_final = [r for r, _, _ in ev_final]

    # reduce every other block at the even pivots so those columns carry
    # only the identity: kappa2 rows get exact zero, order-4 rows a
    # residue in {0, 1}
    for r, _ in k2_rows:
        for er, _, p in ev_final:
            if r[alpha + p]:
                _row_sub(alpha, r, er, 1)
    for r4 in rows4:
        for er, _, p in ev_final:
            if r4[alpha + p] >= 2:
                _row_sub(alpha, r4, er, 1)

    # order-4 rows by ascending pivot column
    q = sorted(zip(rows4, pivots4), key=lambda it: it[1])
    quaternary_final = [r for r, _ in q]
    quaternary_pivot_cols = [p - alpha for _, p in q]

    x_rest = [c for c in range(alpha) if c not in set(k1_pivot_cols) | set(k2_pivot_cols)]
    y_pivots = set(even_pivot_cols) | set(quaternary_pivot_cols)
    y_rest = [c for c in range(beta) if c not in y_pivots]
    sf = StandardFormMatrix(
        alpha,
        beta,
        tuple(tuple(r) for r, _ in k1_final),
        tuple(tuple(r) for r, _ in k2_rows),
        tuple(tuple(r) for r in even_final),
        tuple(tuple(r) for r in quaternary_final),
        tuple(k1_pivot_cols + k2_pivot_cols + x_rest),
        tuple(y_rest + even_pivot_cols + quaternary_pivot_cols),
    )
    _validate_standard_form(sf, code)
    return sf


def _validate_standard_form(sf: StandardFormMatrix, code: AdditiveCode) -> None:
    alpha, beta = sf.alpha, sf.beta
    k1, k2 = sf.kappa1, sf.kappa2
    ge = len(sf.even_rows)
    d = sf.delta
    rows = sf.permuted_rows()
    nx = alpha
    plain = beta - ge - d

    def xval(r, i):
        return r[i]

    def yval(r, j):
        return r[nx + j]

    for i, r in enumerate(rows[:k1]):
        for j in range(k1):
            assert xval(r, j) == (1 if i == j else 0)
        assert all(yval(r, j) == 0 for j in range(beta))
    for i, r in enumerate(rows[k1 : k1 + k2]):
        assert all(xval(r, j) == 0 for j in range(k1))
        for j in range(k2):
            assert xval(r, k1 + j) == (1 if i == j else 0)
        assert all(yval(r, j) in (0, 2) for j in range(plain))
        assert all(yval(r, j) == 0 for j in range(plain, beta))
    for i, r in enumerate(rows[k1 + k2 : k1 + k2 + ge]):
        assert all(xval(r, j) == 0 for j in range(alpha))
        assert all(yval(r, j) in (0, 2) for j in range(plain))
        for j in range(ge):
            assert yval(r, plain + j) == (2 if i == j else 0)
        assert all(yval(r, j) == 0 for j in range(plain + ge, beta))
    for i, r in enumerate(rows[k1 + k2 + ge :]):
        assert all(xval(r, j) == 0 for j in range(k1 + k2))
        assert all(yval(r, plain + j) in (0, 1) for j in range(ge))
        for j in range(d):
            assert yval(r, plain + ge + j) == (1 if i == j else 0)

    regen = AdditiveCode(
        alpha, beta, [_coords_to_word(alpha, beta, r) for r in sf.rows()],
        max_words=code.max_words,
    )
    assert regen == code, "standard form does not regenerate the code"
