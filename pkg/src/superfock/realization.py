"""The oscillator realization: from supermatrices to Fock operators.

The Clifford-Weyl algebra on generators p_k, q_k (Weyl) and r_l, s_l, c
(Clifford) acts on F^L through

    rho(p_k) = (i*qroot/sqrt2) (z_k - d_k),   rho(q_k) = (qroot/sqrt2) (z_k + d_k),
    rho(r_l) = r_l,   rho(s_l) = i r_l alpha_l,   rho(c) = c,

one copy per tensor slot.  The quadratic elements m(x,y) = xy +
(-1)^(deg x deg y) yx span a Lie superalgebra whose adjoint action on the
generator span is exactly osp(M/N); inverting that identification and
pushing through rho (summed over the L copies) realizes an arbitrary osp
supermatrix as a Fock operator.

Verification sweeps (generator relations, the homomorphism property, the
match with the lowering-operator table) run on the integer sparse backend
and are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .cyclo import Cyclotomic, I, ONE, QROOT, SQRT2, ZERO
from .extensional import (TruncatedBasis, inclusion_matrix, linear_combination,
                          operator_matrix, scalar_multiple)
from .fock import c_bit, r_bit, var_index
from .operators import (FockOperator, basis_vector, eigenvalue_of,
                        iter_basis_keys, negative_root_operator)
from .osp import (SuperDim, SuperMatrix, basis_coordinates, basis_parities,
                  negative_roots, osp_basis, osp_dimension, osp_membership,
                  root_space_basis, super_bracket)

_INV_SQRT2 = SQRT2 * Cyclotomic.from_rational("1/2")


@dataclass(frozen=True)
class CWGenerator:
    """A Clifford-Weyl generator, optionally bound to a Fock copy.

    kind is one of 'p', 'q' (even, index 1..m), 'r', 's' (odd, index 1..n)
    or 'c' (odd, no index).  copy = 0 means unbound.
    """

    kind: str
    index: int = 0
    copy: int = 0

    @property
    def degree(self) -> int:
        return 0 if self.kind in ("p", "q") else 1

    def bound(self, copy: int) -> CWGenerator:
        return CWGenerator(self.kind, self.index, copy)

    def validate(self, dim: SuperDim):
        if self.kind in ("p", "q"):
            if not 1 <= self.index <= dim.m:
                raise IndexError(f"{self} out of range for m={dim.m}")
        elif self.kind in ("r", "s"):
            if not 1 <= self.index <= dim.n:
                raise IndexError(f"{self} out of range for n={dim.n}")
        elif self.kind == "c":
            if not dim.odd:
                raise IndexError("generator c exists only for odd N")
        else:
            raise ValueError(f"unknown generator kind {self.kind!r}")

    def __str__(self):
        tail = f"_{self.index}" if self.kind != "c" else ""
        if self.copy:
            tail += f",{self.copy}"
        return f"{self.kind}{tail}"


def generators(dim: SuperDim) -> list[CWGenerator]:
    """Unbound generators in the fixed enumeration order (p, q, r, s, c)."""
    out = [CWGenerator("p", i) for i in range(1, dim.m + 1)]
    out += [CWGenerator("q", i) for i in range(1, dim.m + 1)]
    out += [CWGenerator("r", t) for t in range(1, dim.n + 1)]
    out += [CWGenerator("s", t) for t in range(1, dim.n + 1)]
    if dim.odd:
        out.append(CWGenerator("c"))
    return out


def scalar_bracket(x: CWGenerator, y: CWGenerator) -> int:
    """The scalar xy - (-1)^(deg x deg y) yx from the defining relations.

    Nonzero cases: p_i q_i -> 1, q_i p_i -> -1, r_i r_i -> 2, s_i s_i -> 2,
    c c -> 2; everything else super-commutes.  Bound generators must also
    share the copy index.
    """
    if x.copy != y.copy:
        return 0
    a, b = x.kind, y.kind
    if a == "p" and b == "q" and x.index == y.index:
        return 1
    if a == "q" and b == "p" and x.index == y.index:
        return -1
    if a == b and a in ("r", "s") and x.index == y.index:
        return 2
    if a == b == "c":
        return 2
    return 0


def rho_generator(g: CWGenerator, dim: SuperDim, L: int) -> FockOperator:
    """The action of a single bound generator on F^L."""
    g.validate(dim)
    if not 1 <= g.copy <= L:
        raise IndexError(f"{g} has no copy index in 1..{L}")
    if g.kind == "p":
        c = I * QROOT * _INV_SQRT2
        v = var_index(dim, L, g.index, g.copy)
        return FockOperator(dim, L, [(c, (("z", v),)), (-c, (("d", v),))])
    if g.kind == "q":
        c = QROOT * _INV_SQRT2
        v = var_index(dim, L, g.index, g.copy)
        return FockOperator(dim, L, [(c, (("z", v),)), (c, (("d", v),))])
    if g.kind == "r":
        return FockOperator(dim, L, [(ONE, (("cl", r_bit(dim, L, g.index, g.copy)),))])
    if g.kind == "s":
        p = r_bit(dim, L, g.index, g.copy)
        return FockOperator(dim, L, [(I, (("cl", p), ("al", p)))])
    return FockOperator(dim, L, [(ONE, (("cl", c_bit(dim, L, g.copy)),))])


def rho_quadratic(x: CWGenerator, y: CWGenerator, dim: SuperDim, L: int) -> FockOperator:
    """rho of m(x,y) = xy + (-1)^(deg x deg y) yx.

    For bound generators this is the single-copy product; for unbound ones
    it is the L-summed version used by the matrix realization.
    """
    sign = -1 if (x.degree and y.degree) else 1
    if x.copy or y.copy:
        if not (x.copy and y.copy):
            raise ValueError("mix of bound and unbound generators")
        a = rho_generator(x, dim, L)
        b = rho_generator(y, dim, L)
        return a * b + (b * a).scaled(sign)
    total = FockOperator.zero(dim, L)
    for k in range(1, L + 1):
        a = rho_generator(x.bound(k), dim, L)
        b = rho_generator(y.bound(k), dim, L)
        total = total + a * b + (b * a).scaled(sign)
    return total


# -- the adjoint identification -------------------------------------------

def quadratic_pairs(dim: SuperDim) -> list[tuple[CWGenerator, CWGenerator]]:
    """Generator pairs whose m(x,y) span the image of osp.

    Even pairs with repetition, odd pairs without (m(x,x) is central for
    odd x), and all mixed pairs; the count matches dim osp(M/N).
    """
    gens = generators(dim)
    even = [g for g in gens if g.degree == 0]
    odd = [g for g in gens if g.degree == 1]
    pairs = [(even[a], even[b]) for a in range(len(even)) for b in range(a, len(even))]
    pairs += [(odd[a], odd[b]) for a in range(len(odd)) for b in range(a + 1, len(odd))]
    pairs += [(x, y) for x in even for y in odd]
    assert len(pairs) == osp_dimension(dim)
    return pairs


def _coordinate_columns(dim: SuperDim) -> list[tuple[CWGenerator, bool]]:
    """Generator attached to each matrix coordinate of the super space.

    Even coordinates carry p_1..p_m, q_1..q_m directly; odd coordinates are
    the unit vectors r_t/sqrt2, s_t/sqrt2 interleaved as (r_1, s_1, ...,
    r_n, s_n[, c]), the flag marking the sqrt2 rescaling.
    """
    cols = [(CWGenerator("p", i), False) for i in range(1, dim.m + 1)]
    cols += [(CWGenerator("q", i), False) for i in range(1, dim.m + 1)]
    for t in range(1, dim.n + 1):
        cols.append((CWGenerator("r", t), True))
        cols.append((CWGenerator("s", t), True))
    if dim.odd:
        cols.append((CWGenerator("c"), True))
    return cols


def ad_matrix(x: CWGenerator, y: CWGenerator, dim: SuperDim) -> SuperMatrix:
    """Matrix of ad m(x,y) on the super space, in the fixed coordinates.

    On generators, ad m(x,y) v = 2 b(y,v) x + 2 (-1)^(deg x deg y) b(x,v) y
    with b the scalar bracket; odd coordinates rescale by sqrt2 on both
    sides.  The result always lies in osp.
    """
    x.validate(dim)
    y.validate(dim)
    cols = _coordinate_columns(dim)
    rows_of = {(g.kind, g.index): i for i, (g, _) in enumerate(cols)}
    sign = -1 if (x.degree and y.degree) else 1
    entries: dict = {}

    def deposit(col, gen, coeff, col_rescaled):
        if not coeff:
            return
        row = rows_of[(gen.kind, gen.index)]
        value = Cyclotomic.from_rational(coeff)
        if col_rescaled:
            value = value * _INV_SQRT2
        if gen.degree:
            value = value * SQRT2
        key = (row, col)
        entries[key] = entries.get(key, ZERO) + value

    for col, (g, rescaled) in enumerate(cols):
        deposit(col, x, 2 * scalar_bracket(y, g), rescaled)
        deposit(col, y, 2 * sign * scalar_bracket(x, g), rescaled)
    return SuperMatrix.from_entries(dim, entries)


@lru_cache(maxsize=None)
def _pair_solver(dim: SuperDim):
    """(pairs, inverse) with inverse the matrix taking osp basis coordinates
    of X to its coefficients over the quadratic pairs."""
    pairs = quadratic_pairs(dim)
    columns = [basis_coordinates(ad_matrix(x, y, dim)) for x, y in pairs]
    square = [[columns[p][b] for p in range(len(pairs))]
              for b in range(len(pairs))]
    inverse = linalg.invert(square)  # bijectivity of the identification
    return pairs, inverse


def pair_coefficients(x: SuperMatrix, dim: SuperDim) -> list[Cyclotomic]:
    """Coefficients c with x = sum c_P ad m(x_P, y_P)."""
    pairs, inverse = _pair_solver(dim)
    coords = basis_coordinates(x)
    return [sum((row[j] * coords[j] for j in range(len(coords)) if coords[j]), ZERO)
            for row in inverse]


@lru_cache(maxsize=None)
def _quadratic_operator(dim: SuperDim, L: int, pair_index: int) -> FockOperator:
    pairs, _ = _pair_solver(dim)
    x, y = pairs[pair_index]
    return rho_quadratic(x, y, dim, L)


def rho_of_matrix(x: SuperMatrix, dim: SuperDim, L: int) -> FockOperator:
    """The realization of an osp supermatrix as a Fock operator.

    Expands x over the quadratic elements through the exact inverse of the
    adjoint identification, then applies rho copy-by-copy.
    """
    if x.dim != dim:
        raise ValueError("matrix dimension mismatch")
    if not osp_membership(x):
        raise ValueError("matrix is not orthosymplectic")
    total = FockOperator.zero(dim, L)
    for idx, c in enumerate(pair_coefficients(x, dim)):
        if c:
            total = total + _quadratic_operator(dim, L, idx).scaled(c)
    return total


# -- verification sweeps ---------------------------------------------------

def all_bound_generators(dim: SuperDim, L: int) -> list[CWGenerator]:
    return [g.bound(k) for g in generators(dim) for k in range(1, L + 1)]


def verify_cw_relations(dim: SuperDim, L: int, max_degree: int = 4) -> dict:
    """Check every generator relation extensionally on the truncated basis.

    For all bound generators g, h the graded commutator of rho(g), rho(h)
    must equal the scalar from the defining relations times the identity.
    """
    gens = all_bound_generators(dim, L)
    base = TruncatedBasis(dim, L, max_degree)
    mid = TruncatedBasis(dim, L, max_degree + 1)
    out = TruncatedBasis(dim, L, max_degree + 2)
    mats = [operator_matrix(rho_generator(g, dim, L), mid, out) for g in gens]
    doms = [m.restrict(mid.size, base.size) for m in mats]
    include = inclusion_matrix(base, out)
    checked = 0
    failures = []
    for a in range(len(gens)):
        for b in range(a, len(gens)):
            sign = -1 if (gens[a].degree and gens[b].degree) else 1
            lhs = mats[a].matmul(doms[b]).minus(mats[b].matmul(doms[a]), sign)
            beta = scalar_bracket(gens[a], gens[b])
            rhs = linear_combination([(beta, include)], lhs.shape)
            checked += 1
            if not lhs.equals(rhs):
                failures.append((str(gens[a]), str(gens[b])))
    return {"pairs_checked": checked, "failures": failures, "ok": not failures}


def basis_operator_matrices(dim: SuperDim, L: int, max_degree: int):
    """Shared machinery for the homomorphism sweep."""
    basis = osp_basis(dim)
    mid = TruncatedBasis(dim, L, max_degree + 2)
    out = TruncatedBasis(dim, L, max_degree + 4)
    base = TruncatedBasis(dim, L, max_degree)
    mats = [operator_matrix(rho_of_matrix(x, dim, L), mid, out) for x in basis]
    doms = [m.restrict(mid.size, base.size) for m in mats]
    return basis, mats, doms, base, out


def verify_homomorphism(dim: SuperDim, L: int, max_degree: int = 4) -> dict:
    """rho~([X,Y]) == [rho~ X, rho~ Y] for all osp basis pairs, exactly.

    Uses linearity: the matrix of rho~([X,Y]) is assembled from the cached
    basis matrices through the integer coordinates of the bracket.
    """
    basis, mats, doms, base, out = basis_operator_matrices(dim, L, max_degree)
    wide = [m.columns(base.size) for m in mats]
    parities = basis_parities(dim)
    checked = 0
    failures = []
    shape = (out.size, base.size)
    for a in range(len(basis)):
        for b in range(a, len(basis)):
            sign = -1 if (parities[a] and parities[b]) else 1
            lhs = mats[a].matmul(doms[b]).minus(mats[b].matmul(doms[a]), sign)
            coords = basis_coordinates(super_bracket(basis[a], basis[b]))
            items = [(int(c.rational()), wide[i]) for i, c in enumerate(coords) if c]
            rhs = linear_combination(items, shape)
            checked += 1
            if not lhs.equals(rhs):
                failures.append((a, b))
    return {"pairs_checked": checked, "failures": failures, "ok": not failures}


def ad_identification_report(dim: SuperDim) -> dict:
    """Membership of every ad image plus bijectivity of the identification."""
    pairs = quadratic_pairs(dim)
    bad = [f"m({x},{y})" for x, y in pairs
           if not osp_membership(ad_matrix(x, y, dim))]
    try:
        _pair_solver(dim)
        bijective = True
    except ValueError:
        bijective = False
    return {
        "dim": str(dim),
        "pairs": len(pairs),
        "non_osp_images": bad,
        "bijective": bijective,
        "ok": bijective and not bad,
    }


def table_proportionality(alpha, dim: SuperDim, L: int,
                          max_degree: int = 4) -> Cyclotomic | None:
    """The constant relating rho~ of the root vector to the table operator.

    Returns a nonzero scalar exactly relating the two on the truncated
    basis, or None if no such scalar exists.
    """
    via_matrix = rho_of_matrix(root_space_basis(alpha, dim), dim, L)
    table = negative_root_operator(alpha, dim, L)
    constant = None
    for key in iter_basis_keys(dim, L, 2):
        v = basis_vector(dim, L, key)
        image = table.apply(v)
        if image:
            constant = eigenvalue_of(via_matrix.apply(v), image)
            break
    if constant is None or not constant:
        return None
    base = TruncatedBasis(dim, L, max_degree)
    out = TruncatedBasis(dim, L, max_degree + 2)
    lhs = operator_matrix(via_matrix, base, out)
    rhs = scalar_multiple(operator_matrix(table, base, out), constant)
    return constant if lhs.equals(rhs) else None


def verify_root_operators(dim: SuperDim, L: int, max_degree: int = 4) -> dict:
    """Each negative-root realization is a nonzero multiple of its table row."""
    results = {}
    failures = []
    for alpha in negative_roots(dim):
        constant = table_proportionality(alpha, dim, L, max_degree)
        results[str(alpha)] = None if constant is None else str(constant)
        if constant is None:
            failures.append(str(alpha))
    return {"constants": results, "failures": failures, "ok": not failures}
