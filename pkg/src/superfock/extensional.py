"""Fast exact backend for extensional operator identities.

Operator identities (Clifford-Weyl relations, the homomorphism property,
proportionality to the lowering table) are decided by exact agreement on
the truncated basis: polynomial degree bounded, all Clifford words.  This
module realizes operators as sparse integer matrices over Z[zeta8]: each
operator carries a positive integer ``scale`` clearing all denominators
and one scipy CSR matrix per nonzero power of zeta.  Composition is
integer sparse matmul with the reduction zeta^4 = -1; equality is exact.

Raising atoms never get truncated: matrices are built from a domain basis
into a strictly larger target basis, and the graded monomial order makes
every smaller basis an index prefix of a larger one, so restriction is
column slicing.
"""

from __future__ import annotations

from functools import lru_cache
from math import lcm

import numpy as np
from scipy import sparse

from .cyclo import Cyclotomic
from .fock import site_count, check_size_guard
from .operators import FockOperator, monomials_upto
from .osp import SuperDim

_VALUE_BOUND = 1 << 55


@lru_cache(maxsize=None)
def _monomial_table(nv: int, deg: int):
    monos = monomials_upto(nv, deg)
    return monos, {mono: i for i, mono in enumerate(monos)}


class TruncatedBasis:
    """Monomials of degree <= max_degree tensor all Clifford words.

    Index layout is word-minor: index(mono, word) = mono_index * n_words
    + word.  Bases with the same (dim, L) and smaller degree are index
    prefixes of larger ones.
    """

    def __init__(self, dim: SuperDim, L: int, max_degree: int):
        check_size_guard(dim, L)
        self.dim = dim
        self.L = L
        self.max_degree = max_degree
        self.monomials, self.mono_index = _monomial_table(dim.m * L, max_degree)
        self.n_words = 1 << site_count(dim, L)
        self.size = len(self.monomials) * self.n_words

    def key_index(self, key) -> int:
        return self.mono_index[key[0]] * self.n_words + key[1]

    def key_of(self, index: int):
        return self.monomials[index // self.n_words], index % self.n_words


class IntOperatorMatrix:
    """comps[k]/scale is the coefficient matrix of zeta^k."""

    __slots__ = ("shape", "scale", "comps")

    def __init__(self, shape, scale: int, comps: dict):
        self.shape = shape
        self.scale = scale
        self.comps = {k: m for k, m in comps.items() if m.count_nonzero()}

    def restrict(self, nrows: int, ncols: int) -> IntOperatorMatrix:
        """Restriction to prefix bases.  Row truncation is only sound when
        the kept columns cannot map outside the kept rows (degree counting);
        entries beyond the prefix would be silently dropped otherwise."""
        comps = {}
        for k, m in self.comps.items():
            tail = m[nrows:, :ncols]
            if tail.count_nonzero():
                raise ValueError("restriction would truncate nonzero entries")
            comps[k] = m[:nrows, :ncols]
        return IntOperatorMatrix((nrows, ncols), self.scale, comps)

    def columns(self, ncols: int) -> IntOperatorMatrix:
        """Domain restriction to a prefix basis; always lossless."""
        return IntOperatorMatrix((self.shape[0], ncols), self.scale,
                                 {k: m[:, :ncols] for k, m in self.comps.items()})

    def matmul(self, other: IntOperatorMatrix) -> IntOperatorMatrix:
        if self.shape[1] != other.shape[0]:
            raise ValueError("matrix shapes do not compose")
        comps: dict = {}
        for i, a in self.comps.items():
            for j, b in other.comps.items():
                k = (i + j) % 4
                prod = a @ b
                if i + j >= 4:
                    prod = -prod
                comps[k] = comps.get(k) + prod if k in comps else prod
        for m in comps.values():
            if m.nnz and abs(m.data).max() >= _VALUE_BOUND:
                raise OverflowError("integer matrix entries grew too large")
        return IntOperatorMatrix((self.shape[0], other.shape[1]),
                                 self.scale * other.scale, comps)

    def minus(self, other: IntOperatorMatrix, sign: int = 1) -> IntOperatorMatrix:
        """self - sign*other; requires equal scales (as after two matmuls)."""
        if self.scale != other.scale or self.shape != other.shape:
            raise ValueError("mismatched operands")
        comps = dict(self.comps)
        for k, m in other.comps.items():
            delta = -sign * m
            comps[k] = comps.get(k) + delta if k in comps else delta
        return IntOperatorMatrix(self.shape, self.scale, comps)

    def equals(self, other: IntOperatorMatrix) -> bool:
        if self.shape != other.shape:
            return False
        for k in set(self.comps) | set(other.comps):
            a = self.comps.get(k)
            b = other.comps.get(k)
            if a is None:
                if b.count_nonzero():
                    return False
                continue
            if b is None:
                if a.count_nonzero():
                    return False
                continue
            if (a * other.scale - b * self.scale).count_nonzero():
                return False
        return True

    def is_zero(self) -> bool:
        return all(not m.count_nonzero() for m in self.comps.values())


def operator_matrix(op: FockOperator, basis_in: TruncatedBasis,
                    basis_out: TruncatedBasis) -> IntOperatorMatrix:
    """Exact matrix of ``op`` from basis_in into basis_out.

    basis_out must be deep enough to hold every image; a missing target
    monomial raises KeyError, never truncates.
    """
    nM = len(basis_in.monomials)
    nw = basis_in.n_words
    scale = 1
    for _, coeff in op.terms:
        scale = lcm(scale, coeff.denominator_lcm())
    rows_all, cols_all = [], []
    vals_all: dict[int, list] = {0: [], 1: [], 2: [], 3: []}
    col_mono = np.arange(nM, dtype=np.int64) * nw
    col_word = np.arange(nw, dtype=np.int64)
    for atoms, coeff in op.terms:
        folded = coeff
        poly_atoms = [a for a in atoms if a[0] in ("z", "d")]
        cliff_atoms = [a for a in atoms if a[0] in ("cl", "al")]
        for a in atoms:
            if a[0] == "sc":
                folded = folded * a[1]
        # polynomial transform per domain monomial
        tgt = np.empty(nM, dtype=np.int64)
        fac = np.empty(nM, dtype=np.int64)
        for idx, mono in enumerate(basis_in.monomials):
            m = None
            f = 1
            for a in reversed(poly_atoms):
                if a[0] == "d":
                    e = mono[a[1]] if m is None else m[a[1]]
                    if not e:
                        f = 0
                        break
                    if m is None:
                        m = list(mono)
                    f *= e
                    m[a[1]] -= 1
                else:
                    if m is None:
                        m = list(mono)
                    m[a[1]] += 1
            if not f:
                tgt[idx] = -1
                fac[idx] = 0
            else:
                tgt[idx] = basis_out.mono_index[mono if m is None else tuple(m)]
                fac[idx] = f
        # Clifford transform per word
        wt = np.empty(nw, dtype=np.int64)
        ws = np.empty(nw, dtype=np.int64)
        for w in range(nw):
            sign = 1
            ww = w
            for a in reversed(cliff_atoms):
                p = a[1]
                if a[0] == "cl":
                    if (ww & ((1 << p) - 1)).bit_count() & 1:
                        sign = -sign
                    ww ^= 1 << p
                else:
                    if (ww >> p) & 1:
                        sign = -sign
            wt[w] = ww
            ws[w] = sign
        alive = tgt >= 0
        if not alive.any():
            continue
        rows = (tgt[alive, None] * nw + wt[None, :]).ravel()
        cols = (col_mono[alive, None] + col_word[None, :]).ravel()
        base = (fac[alive, None] * ws[None, :]).ravel()
        rows_all.append(rows)
        cols_all.append(cols)
        for k in range(4):
            comp = coeff.c[k] if folded is coeff else folded.c[k]
            vals_all[k].append(base * int(comp * scale) if comp else
                               np.zeros(len(base), dtype=np.int64))
    shape = (basis_out.size, basis_in.size)
    if not rows_all:
        return IntOperatorMatrix(shape, scale, {})
    rows = np.concatenate(rows_all)
    cols = np.concatenate(cols_all)
    comps = {}
    for k in range(4):
        vals = np.concatenate(vals_all[k])
        if vals.any():
            mat = sparse.coo_matrix((vals, (rows, cols)), shape=shape,
                                    dtype=np.int64).tocsr()
            mat.eliminate_zeros()
            comps[k] = mat
    return IntOperatorMatrix(shape, scale, comps)


def inclusion_matrix(basis_in: TruncatedBasis, basis_out: TruncatedBasis,
                     scale: int = 1) -> IntOperatorMatrix:
    """The identity viewed as a map into a deeper basis (prefix indexing)."""
    if basis_in.size > basis_out.size:
        raise ValueError("target basis is smaller than the source")
    eye = sparse.eye(basis_in.size, dtype=np.int64, format="csr")
    pad = sparse.csr_matrix((basis_out.size - basis_in.size, basis_in.size),
                            dtype=np.int64)
    return IntOperatorMatrix((basis_out.size, basis_in.size), scale,
                             {0: sparse.vstack([eye, pad], format="csr")})


def scalar_multiple(mat: IntOperatorMatrix, c: Cyclotomic) -> IntOperatorMatrix:
    """c * mat with exact cyclotomic c."""
    extra = c.denominator_lcm()
    comps: dict = {}
    for k in range(4):
        comp = c.c[k]
        if not comp:
            continue
        ival = int(comp * extra)
        for i, m in mat.comps.items():
            j = (i + k) % 4
            prod = m * ival
            if i + k >= 4:
                prod = -prod
            comps[j] = comps.get(j) + prod if j in comps else prod
    return IntOperatorMatrix(mat.shape, mat.scale * extra, comps)


def linear_combination(items, shape, base_scale: int = 1) -> IntOperatorMatrix:
    """sum of coeff*mat for integer coefficients, normalizing scales."""
    items = [(c, m) for c, m in items if c]
    if not items:
        return IntOperatorMatrix(shape, base_scale, {})
    scale = base_scale
    for _, m in items:
        scale = lcm(scale, m.scale)
    comps: dict = {}
    for c, m in items:
        f = c * (scale // m.scale)
        for k, mm in m.comps.items():
            term = mm * f
            comps[k] = comps.get(k) + term if k in comps else term
    return IntOperatorMatrix(shape, scale, comps)


def super_bracket_matrix(ma: IntOperatorMatrix, mb: IntOperatorMatrix,
                         ma_dom: IntOperatorMatrix, mb_dom: IntOperatorMatrix,
                         sign: int) -> IntOperatorMatrix:
    """ma ∘ mb_dom - sign * mb ∘ ma_dom, the graded commutator on the domain."""
    return ma.matmul(mb_dom).minus(mb.matmul(ma_dom), sign)
