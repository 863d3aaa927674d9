"""Explicit primitive vectors in F^L and their weights.

The lowest-weight generators are products Lambda(i) R(j) where

    Lambda_a = det(z_{s,2k-1} + i z_{s,2k}),  m-a < s <= m, 1 <= k <= a,
    R_b(j)   = prod_{k<=j} (r_{b,2k-1} + i r_{b,2k}) prod_{k'>2j} r_{b,k'},
    C        = prod_{k<=l} (c_{2k-1} + i c_{2k})          (odd N only),

with l = floor(L/2).  Such a product is annihilated by every negative
root operator whenever 0 <= j_1 <= ... <= j_n and i_a = 0 for a > j_1;
its weight is lambda_s = sum_{a > m-s} i_a + L/2, mu_t = j_t - L/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .cyclo import I, ONE
from .fock import FockVector, check_size_guard
from .operators import negative_root_operator
from .osp import Root, SuperDim, Weight, negative_roots


class InvalidPrimitiveParams(ValueError):
    pass


@dataclass(frozen=True)
class PrimitiveParams:
    """Exponents (i_1..i_m), column counts (j_1..j_n) and the copy number L.

    L = 0 is allowed and encodes the trivial module (empty products in the
    one-dimensional Fock space).
    """

    L: int
    i: tuple[int, ...]
    j: tuple[int, ...]

    @property
    def l(self) -> int:
        return self.L // 2

    @property
    def is_trivial(self) -> bool:
        return self.L == 0

    def validate(self, dim: SuperDim):
        if self.L < 0:
            raise InvalidPrimitiveParams("L must be nonnegative")
        if len(self.i) != dim.m or len(self.j) != dim.n:
            raise InvalidPrimitiveParams("parameter lengths must be (m, n)")
        if any(x < 0 for x in self.i) or any(x < 0 for x in self.j):
            raise InvalidPrimitiveParams("entries must be nonnegative")
        if any(a > b for a, b in zip(self.j, self.j[1:])):
            raise InvalidPrimitiveParams("j must be weakly increasing")
        if self.j and self.j[-1] > self.l:
            raise InvalidPrimitiveParams(f"j entries must not exceed l = {self.l}")
        cap = min(dim.m, self.l)
        if dim.n:
            cap = min(cap, self.j[0])
        for a in range(cap, dim.m):
            if self.i[a]:
                if dim.n and a >= self.j[0]:
                    raise InvalidPrimitiveParams(
                        f"i_{a + 1} > 0 requires j_1 >= {a + 1}")
                raise InvalidPrimitiveParams(
                    f"i_{a + 1} > 0 requires min(m, l) >= {a + 1}")

    def to_json(self):
        return {"L": self.L, "i": list(self.i), "j": list(self.j)}

    def __str__(self):
        return f"L={self.L}, i={list(self.i)}, j={list(self.j)}"


def lambda_det(a: int, dim: SuperDim, L: int) -> FockVector:
    """The determinant factor of size a (polynomial part only)."""
    l = L // 2
    if not 1 <= a <= min(dim.m, l):
        raise InvalidPrimitiveParams(f"need 1 <= a <= min(m, l) = {min(dim.m, l)}")

    def cell(s: int, k: int) -> FockVector:
        return (FockVector.z(dim, L, s, 2 * k - 1)
                + FockVector.z(dim, L, s, 2 * k).scaled(I))

    total = FockVector.zero(dim, L)
    rows = range(dim.m - a + 1, dim.m + 1)
    for perm in permutations(range(1, a + 1)):
        sign = _permutation_sign(perm)
        prod = FockVector.unit(dim, L)
        for s, k in zip(rows, perm):
            prod = prod * cell(s, k)
        total = total + prod.scaled(sign)
    return total


def _permutation_sign(perm) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def r_factor(b: int, j: int, dim: SuperDim, L: int) -> FockVector:
    """R_b(j): paired factors up to column j, bare generators beyond 2j."""
    if not 1 <= b <= dim.n:
        raise InvalidPrimitiveParams(f"need 1 <= b <= n = {dim.n}")
    if not 0 <= j <= L // 2:
        raise InvalidPrimitiveParams(f"need 0 <= j <= l = {L // 2}")
    out = FockVector.unit(dim, L)
    for k in range(1, j + 1):
        out = out * (FockVector.clifford(dim, L, ("r", b, 2 * k - 1))
                     + FockVector.clifford(dim, L, ("r", b, 2 * k)).scaled(I))
    for k in range(2 * j + 1, L + 1):
        out = out * FockVector.clifford(dim, L, ("r", b, k))
    return out


def c_factor(dim: SuperDim, L: int) -> FockVector:
    """C: the paired c product over the first l columns (odd N only)."""
    if not dim.odd:
        raise InvalidPrimitiveParams("the c factor exists only for odd N")
    out = FockVector.unit(dim, L)
    for k in range(1, L // 2 + 1):
        out = out * (FockVector.clifford(dim, L, ("c", 2 * k - 1))
                     + FockVector.clifford(dim, L, ("c", 2 * k)).scaled(I))
    return out


def build_primitive(params: PrimitiveParams, dim: SuperDim) -> FockVector:
    """The product Lambda(i) R(j) (times C for odd N), exactly expanded.

    Factor order: determinant powers ascending in a, then R_1..R_n, then C;
    any other order only changes the global sign.
    """
    if dim.N < 1:
        raise InvalidPrimitiveParams("need N >= 1")
    params.validate(dim)
    check_size_guard(dim, params.L)
    out = FockVector.unit(dim, params.L)
    for a, power in enumerate(params.i, start=1):
        if power:
            factor = lambda_det(a, dim, params.L)
            for _ in range(power):
                out = out * factor
    for b, j in enumerate(params.j, start=1):
        out = out * r_factor(b, j, dim, params.L)
    if dim.odd:
        out = out * c_factor(dim, params.L)
    assert out, "primitive vector must be nonzero"
    return out


def predicted_weight(params: PrimitiveParams, dim: SuperDim) -> Weight:
    """lambda_s = sum_{a=m-s+1}^m i_a + L/2,  mu_t = j_t - L/2."""
    params.validate(dim)
    half = Fraction(params.L, 2)
    lam = tuple(sum(params.i[dim.m - s:]) + half for s in range(1, dim.m + 1))
    mu = tuple(jt - half for jt in params.j)
    return Weight(lam, mu)


@dataclass(frozen=True)
class RootCheck:
    root: Root
    killed: bool
    image_terms: int


@dataclass(frozen=True)
class PrimitivityReport:
    checks: tuple[RootCheck, ...]
    ok: bool

    def failures(self) -> list[Root]:
        return [c.root for c in self.checks if not c.killed]

    def to_json(self):
        return {
            "ok": self.ok,
            "roots": [{"root": str(c.root), "killed": c.killed,
                       "image_terms": c.image_terms} for c in self.checks],
        }


def check_primitive(vec: FockVector) -> PrimitivityReport:
    """Apply every negative root operator and record which annihilate."""
    if not vec:
        raise ValueError("cannot test the zero vector for primitivity")
    checks = []
    for alpha in negative_roots(vec.dim):
        image = negative_root_operator(alpha, vec.dim, vec.L).apply(vec)
        checks.append(RootCheck(alpha, not image, image.term_count()))
    return PrimitivityReport(tuple(checks), all(c.killed for c in checks))
