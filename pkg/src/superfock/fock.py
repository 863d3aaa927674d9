"""Sparse exact vectors in the Fock space F^L.

F^L = C[z_{s,k} | 1 <= s <= m, 1 <= k <= L] tensor C(r_{t,k}, c_k), the
c generators present only for odd N.  A vector is a sparse map

    (monomial, clifford word) -> coefficient in Q(zeta8).

Monomials are dense exponent tuples indexed by (s, k); Clifford words are
bitmasks over the generator slots in the canonical order

    r_{1,1} < ... < r_{1,L} < r_{2,1} < ... < r_{n,L} < c_1 < ... < c_L,

so normal ordering is bit arithmetic: every generator squares to 1 and
distinct generators anticommute.
"""

from __future__ import annotations

from math import factorial

from .cyclo import Cyclotomic, ONE, ZERO, cyc
from .osp import SuperDim

#: hard cap on Clifford generator slots, to bound the 2^k blowup
MAX_SITES = 24


class ShapeMismatch(ValueError):
    pass


def var_index(dim: SuperDim, L: int, s: int, k: int) -> int:
    """Flat index of the polynomial variable z_{s,k}."""
    if not (1 <= s <= dim.m and 1 <= k <= L):
        raise IndexError(f"z[{s},{k}] out of range for m={dim.m}, L={L}")
    return (s - 1) * L + (k - 1)


def r_bit(dim: SuperDim, L: int, t: int, k: int) -> int:
    """Bit position of the Clifford generator r_{t,k}."""
    if not (1 <= t <= dim.n and 1 <= k <= L):
        raise IndexError(f"r[{t},{k}] out of range for n={dim.n}, L={L}")
    return (t - 1) * L + (k - 1)


def c_bit(dim: SuperDim, L: int, k: int) -> int:
    """Bit position of the Clifford generator c_k (odd N only)."""
    if not dim.odd:
        raise IndexError("c generators exist only for odd N")
    if not (1 <= k <= L):
        raise IndexError(f"c[{k}] out of range for L={L}")
    return dim.n * L + (k - 1)


def site_count(dim: SuperDim, L: int) -> int:
    return (dim.n + (1 if dim.odd else 0)) * L


def check_size_guard(dim: SuperDim, L: int):
    if L < 0:
        raise ValueError("L must be nonnegative")
    sites = site_count(dim, L)
    if sites > MAX_SITES:
        raise ValueError(
            f"Clifford rank {sites} exceeds the guard of {MAX_SITES} "
            f"(n={dim.n}, odd={dim.odd}, L={L})")


def bit_token(dim: SuperDim, L: int, p: int) -> tuple:
    """Inverse of r_bit/c_bit: bit position -> ('r', t, k) or ('c', k)."""
    if p < dim.n * L:
        return ("r", p // L + 1, p % L + 1)
    return ("c", p - dim.n * L + 1)


def token_bit(dim: SuperDim, L: int, token: tuple) -> int:
    if token[0] == "r":
        return r_bit(dim, L, token[1], token[2])
    if token[0] == "c":
        return c_bit(dim, L, token[1])
    raise ValueError(f"unknown Clifford generator {token!r}")


def left_multiply_bit(p: int, word: int) -> tuple[int, int]:
    """(sign, word') for g_p * word with word in normal order."""
    sign = -1 if (word & ((1 << p) - 1)).bit_count() & 1 else 1
    return sign, word ^ (1 << p)


def word_multiply(w1: int, w2: int) -> tuple[int, int]:
    """(sign, word) for the product of two normal-ordered words."""
    sign = 1
    w = w1
    rest = w2
    while rest:
        p = (rest & -rest).bit_length() - 1
        # right multiplication: g_p passes the generators of w above slot p
        if (w >> (p + 1)).bit_count() & 1:
            sign = -sign
        w ^= 1 << p
        rest &= rest - 1
    return sign, w


def clifford_normalize(tokens, dim: SuperDim, L: int) -> tuple[int, int]:
    """Normal-order a sequence of generator tokens.

    Adjacent transpositions contribute -1 each; equal neighbours cancel to 1.
    Returns (sign, word bitmask).
    """
    sign, word = 1, 0
    for token in tokens:
        p = token_bit(dim, L, token)
        if (word >> (p + 1)).bit_count() & 1:
            sign = -sign
        word ^= 1 << p
    return sign, word


def word_tokens(word: int, dim: SuperDim, L: int) -> list[tuple]:
    out = []
    while word:
        p = (word & -word).bit_length() - 1
        out.append(bit_token(dim, L, p))
        word &= word - 1
    return out


def render_word(word: int, dim: SuperDim, L: int) -> str:
    if not word:
        return "1"
    parts = []
    for token in word_tokens(word, dim, L):
        if token[0] == "r":
            parts.append(f"r[{token[1]},{token[2]}]")
        else:
            parts.append(f"c[{token[1]}]")
    return "*".join(parts)


def render_monomial(mono: tuple, dim: SuperDim, L: int) -> str:
    parts = []
    for v, e in enumerate(mono):
        if not e:
            continue
        s, k = v // L + 1, v % L + 1
        parts.append(f"z[{s},{k}]" + (f"^{e}" if e > 1 else ""))
    return "*".join(parts) if parts else "1"


def monomial_factorial(mono: tuple) -> int:
    out = 1
    for e in mono:
        if e > 1:
            out *= factorial(e)
    return out


class FockVector:
    """Sparse element of F^L; immutable by convention."""

    __slots__ = ("dim", "L", "terms")

    def __init__(self, dim: SuperDim, L: int, terms: dict | None = None):
        check_size_guard(dim, L)
        self.dim = dim
        self.L = L
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, dim: SuperDim, L: int) -> FockVector:
        return cls(dim, L)

    @classmethod
    def unit(cls, dim: SuperDim, L: int) -> FockVector:
        return cls(dim, L, {((0,) * (dim.m * L), 0): ONE})

    @classmethod
    def z(cls, dim: SuperDim, L: int, s: int, k: int) -> FockVector:
        mono = [0] * (dim.m * L)
        mono[var_index(dim, L, s, k)] = 1
        return cls(dim, L, {(tuple(mono), 0): ONE})

    @classmethod
    def clifford(cls, dim: SuperDim, L: int, *tokens) -> FockVector:
        sign, word = clifford_normalize(tokens, dim, L)
        return cls(dim, L, {((0,) * (dim.m * L), word): cyc(sign)})

    # -- linear structure --------------------------------------------------

    def _check(self, other: FockVector):
        if self.dim != other.dim or self.L != other.L:
            raise ShapeMismatch("Fock vectors live in different spaces")

    def __add__(self, other: FockVector) -> FockVector:
        self._check(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            acc = terms.get(k)
            acc = v if acc is None else acc + v
            if acc:
                terms[k] = acc
            elif k in terms:
                del terms[k]
        out = FockVector.__new__(FockVector)
        out.dim, out.L, out.terms = self.dim, self.L, terms
        return out

    def __sub__(self, other: FockVector) -> FockVector:
        return self + (-other)

    def __neg__(self) -> FockVector:
        out = FockVector.__new__(FockVector)
        out.dim, out.L = self.dim, self.L
        out.terms = {k: -v for k, v in self.terms.items()}
        return out

    def scaled(self, c) -> FockVector:
        c = Cyclotomic.coerce(c)
        out = FockVector.__new__(FockVector)
        out.dim, out.L = self.dim, self.L
        out.terms = {} if not c else {k: v * c for k, v in self.terms.items()}
        return out

    def __rmul__(self, c):
        if isinstance(c, (int, Cyclotomic)):
            return self.scaled(c)
        return NotImplemented

    def __mul__(self, other):
        """Vector product: monomials multiply, Clifford words concatenate."""
        if not isinstance(other, FockVector):
            return self.scaled(other)
        self._check(other)
        terms: dict = {}
        for (m1, w1), c1 in self.terms.items():
            for (m2, w2), c2 in other.terms.items():
                sign, w = word_multiply(w1, w2)
                key = (tuple(a + b for a, b in zip(m1, m2)), w)
                c = c1 * c2
                if sign < 0:
                    c = -c
                acc = terms.get(key)
                acc = c if acc is None else acc + c
                if acc:
                    terms[key] = acc
                elif key in terms:
                    del terms[key]
        out = FockVector.__new__(FockVector)
        out.dim, out.L, out.terms = self.dim, self.L, terms
        return out

    # -- views -------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, FockVector) and self.dim == other.dim
                and self.L == other.L and self.terms == other.terms)

    def __hash__(self):
        return hash((self.dim, self.L, frozenset(self.terms.items())))

    def term_count(self) -> int:
        return len(self.terms)

    def word_parity(self) -> int | None:
        """Z2-degree if homogeneous (parity of Clifford length), else None."""
        if not self.terms:
            return 0
        parities = {w.bit_count() & 1 for (_, w) in self.terms}
        return parities.pop() if len(parities) == 1 else None

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (mono, word), coeff in self.sorted_terms():
            factors = []
            zpart = render_monomial(mono, self.dim, self.L)
            wpart = render_word(word, self.dim, self.L)
            if zpart != "1":
                factors.append(zpart)
            if wpart != "1":
                factors.append(wpart)
            if not factors:
                factors.append("1")
            bits.append(f"({coeff}) * " + "*".join(factors))
        return " + ".join(bits)

    def to_json(self):
        terms = []
        for (mono, word), coeff in self.sorted_terms():
            exps = [[v // self.L + 1, v % self.L + 1, e]
                    for v, e in enumerate(mono) if e]
            terms.append({
                "coeff": coeff.to_json(),
                "monomial": exps,
                "word": [list(t) for t in word_tokens(word, self.dim, self.L)],
            })
        return {
            "dim": {"m": self.dim.m, "n": self.dim.n, "odd": self.dim.odd},
            "L": self.L,
            "terms": terms,
        }


def inner_product(u: FockVector, v: FockVector) -> Cyclotomic:
    """Sesquilinear form, conjugate-linear in the second slot.

    Basis rule: <z^A w, z^B w'> = delta_{A,B} A! delta_{w,w'}, the factorial
    weights making z-multiplication and d/dz mutually adjoint.
    """
    u._check(v)
    acc = ZERO
    for key, cu in u.terms.items():
        cv = v.terms.get(key)
        if cv is None:
            continue
        acc = acc + cu * cv.conjugate() * monomial_factorial(key[0])
    return acc
