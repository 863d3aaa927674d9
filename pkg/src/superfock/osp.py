"""The matrix model of the orthosymplectic Lie superalgebra osp(M/N).

Conventions.  M = 2m and N = 2n or 2n+1.  The underlying super space has
even coordinates (p_1..p_m, q_1..q_m) and odd coordinates ordered as
(r_1, s_1, r_2, s_2, ..., r_n, s_n[, c]), so the fixed super skew form is

    B = [[0, 1_m, 0], [-1_m, 0, 0], [0, 0, 1_N]].

Membership, the standard basis, the compact Cartan subalgebra, the root
system for both parities of N and exact root-space computation all live
here.  Weights are written in coordinates (lambda_1..lambda_m; mu_1..mu_n)
through e_i(h) = i*a_i, f_j(h) = i*b_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .cyclo import Cyclotomic, I, ONE, ZERO, cyc


@dataclass(frozen=True)
class SuperDim:
    """Size parameters: M = 2m even dimensions, N = 2n (+1 if odd)."""

    m: int
    n: int
    odd: bool = False

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("m and n must be nonnegative")

    @property
    def M(self) -> int:
        return 2 * self.m

    @property
    def N(self) -> int:
        return 2 * self.n + (1 if self.odd else 0)

    @property
    def total(self) -> int:
        return self.M + self.N

    def index_parity(self, i: int) -> int:
        return 0 if i < self.M else 1

    def __str__(self):
        return f"osp({self.M}/{self.N})"


class SuperMatrix:
    """A (M+N) x (M+N) matrix over Q(zeta8) with the induced Z2-grading."""

    __slots__ = ("dim", "rows")

    def __init__(self, dim: SuperDim, rows):
        t = dim.total
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != t or any(len(r) != t for r in rows):
            raise ValueError("matrix shape does not match the super dimension")
        self.dim = dim
        self.rows = rows

    @classmethod
    def zero(cls, dim: SuperDim) -> SuperMatrix:
        t = dim.total
        return cls(dim, [[ZERO] * t for _ in range(t)])

    @classmethod
    def from_entries(cls, dim: SuperDim, entries: dict) -> SuperMatrix:
        t = dim.total
        rows = [[ZERO] * t for _ in range(t)]
        for (i, j), v in entries.items():
            rows[i][j] = cyc(v) if not isinstance(v, Cyclotomic) else v
        return cls(dim, rows)

    def entry(self, i: int, j: int) -> Cyclotomic:
        return self.rows[i][j]

    def __add__(self, other: SuperMatrix) -> SuperMatrix:
        self._check(other)
        return SuperMatrix(self.dim, [[a + b for a, b in zip(ra, rb)]
                                      for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: SuperMatrix) -> SuperMatrix:
        self._check(other)
        return SuperMatrix(self.dim, [[a - b for a, b in zip(ra, rb)]
                                      for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self) -> SuperMatrix:
        return SuperMatrix(self.dim, [[-a for a in r] for r in self.rows])

    def scaled(self, c) -> SuperMatrix:
        c = Cyclotomic.coerce(c)
        return SuperMatrix(self.dim, [[a * c for a in r] for r in self.rows])

    def matmul(self, other: SuperMatrix) -> SuperMatrix:
        self._check(other)
        t = self.dim.total
        bt = other.rows
        out = []
        for ra in self.rows:
            row = []
            for j in range(t):
                acc = ZERO
                for k in range(t):
                    a = ra[k]
                    if a:
                        b = bt[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return SuperMatrix(self.dim, out)

    def transpose(self) -> SuperMatrix:
        return SuperMatrix(self.dim, list(zip(*self.rows)))

    def part(self, parity: int) -> SuperMatrix:
        """Homogeneous component of the given Z2-degree."""
        d = self.dim
        rows = [[v if (d.index_parity(i) + d.index_parity(j)) % 2 == parity else ZERO
                 for j, v in enumerate(r)] for i, r in enumerate(self.rows)]
        return SuperMatrix(d, rows)

    def parity(self) -> int | None:
        """0 or 1 for homogeneous matrices, None for mixed or zero guesses 0."""
        has = [bool(self.part(0)), bool(self.part(1))]
        if has[0] and has[1]:
            return None
        return 1 if has[1] else 0

    def __bool__(self):
        return any(any(v for v in r) for r in self.rows)

    def __eq__(self, other):
        return (isinstance(other, SuperMatrix) and self.dim == other.dim
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.dim, self.rows))

    def _check(self, other: SuperMatrix):
        if self.dim != other.dim:
            raise ValueError("super dimension mismatch")

    def __str__(self):
        return "\n".join("[" + ", ".join(str(v) for v in r) + "]" for r in self.rows)

    def to_json(self):
        return {
            "dim": {"m": self.dim.m, "n": self.dim.n, "odd": self.dim.odd},
            "rows": [[v.to_json() for v in r] for r in self.rows],
        }


def proportionality(x: SuperMatrix, y: SuperMatrix) -> Cyclotomic | None:
    """c with x == c*y, or None if no such scalar exists."""
    if not y:
        return ZERO if not x else None
    c = None
    for rx, ry in zip(x.rows, y.rows):
        for a, b in zip(rx, ry):
            if b:
                c = a / b
                break
        if c is not None:
            break
    if c is None:
        return None
    return c if x == y.scaled(c) else None


def super_bracket(x: SuperMatrix, y: SuperMatrix) -> SuperMatrix:
    """[x, y] = xy - (-1)^(deg x * deg y) yx, extended bilinearly."""
    if x.dim != y.dim:
        raise ValueError("super dimension mismatch")
    out = SuperMatrix.zero(x.dim)
    for dx in (0, 1):
        xp = x.part(dx)
        if not xp:
            continue
        for dy in (0, 1):
            yp = y.part(dy)
            if not yp:
                continue
            prod = xp.matmul(yp)
            back = yp.matmul(xp)
            out = out + (prod + back if dx and dy else prod - back)
    return out


def form_matrix(dim: SuperDim) -> SuperMatrix:
    m, t = dim.m, dim.total
    entries = {}
    for i in range(m):
        entries[(i, m + i)] = ONE
        entries[(m + i, i)] = -ONE
    for i in range(2 * m, t):
        entries[(i, i)] = ONE
    return SuperMatrix.from_entries(dim, entries)


def osp_membership(x: SuperMatrix) -> bool:
    """Whether b(Xv,w) + (-1)^(deg X deg v) b(v,Xw) = 0 holds per part."""
    d = x.dim
    b = form_matrix(d)
    for parity in (0, 1):
        xp = x.part(parity)
        if not xp:
            continue
        left = xp.transpose().matmul(b)
        right = b.matmul(xp)
        for i in range(d.total):
            sign = -1 if parity and d.index_parity(i) else 1
            for j in range(d.total):
                if left.entry(i, j) + right.entry(i, j) * sign:
                    return False
    return True


def osp_dimension(dim: SuperDim) -> int:
    m, N = dim.m, dim.N
    return m * (2 * m + 1) + N * (N - 1) // 2 + 2 * m * N


@lru_cache(maxsize=None)
def _basis_with_readers(dim: SuperDim):
    """Standard basis plus one designated entry per element.

    The designated entries are pairwise distinct, so the coordinates of any
    member are read off directly.  Order: gl(m) part, symmetric B block,
    symmetric C block, so(N) block, P block, Q block.
    """
    m, N = dim.m, dim.N
    t = dim.total
    basis: list[SuperMatrix] = []
    readers: list[tuple[int, int]] = []
    parities: list[int] = []

    def add(entries, reader, parity):
        basis.append(SuperMatrix.from_entries(dim, entries))
        readers.append(reader)
        parities.append(parity)

    for i in range(m):          # A in gl(m), paired with -A^t
        for j in range(m):
            add({(i, j): ONE, (m + j, m + i): -ONE}, (i, j), 0)
    for i in range(m):          # symmetric B block
        for j in range(i, m):
            e = {(i, m + j): ONE}
            if i != j:
                e[(j, m + i)] = ONE
            add(e, (i, m + j), 0)
    for i in range(m):          # symmetric C block
        for j in range(i, m):
            e = {(m + i, j): ONE}
            if i != j:
                e[(m + j, i)] = ONE
            add(e, (m + i, j), 0)
    for i in range(N):          # so(N)
        for j in range(i + 1, N):
            add({(2 * m + i, 2 * m + j): ONE, (2 * m + j, 2 * m + i): -ONE},
                (2 * m + i, 2 * m + j), 0)
    for i in range(m):          # P block, mirrored by P^t
        for j in range(N):
            add({(i, 2 * m + j): ONE, (2 * m + j, m + i): ONE}, (i, 2 * m + j), 1)
    for i in range(m):          # Q block, mirrored by -Q^t
        for j in range(N):
            add({(m + i, 2 * m + j): ONE, (2 * m + j, i): -ONE}, (m + i, 2 * m + j), 1)

    assert len(basis) == osp_dimension(dim)
    assert len(set(readers)) == len(readers)
    return tuple(basis), tuple(readers), tuple(parities)


def osp_basis(dim: SuperDim) -> list[SuperMatrix]:
    return list(_basis_with_readers(dim)[0])


def basis_parities(dim: SuperDim) -> list[int]:
    return list(_basis_with_readers(dim)[2])


def basis_coordinates(x: SuperMatrix, check: bool = True) -> list[Cyclotomic]:
    """Coordinates of x in the standard basis, read from designated entries."""
    basis, readers, _ = _basis_with_readers(x.dim)
    coords = [x.entry(i, j) for (i, j) in readers]
    if check:
        recon = SuperMatrix.zero(x.dim)
        for c, b in zip(coords, basis):
            if c:
                recon = recon + b.scaled(c)
        if recon != x:
            raise ValueError("matrix is not in the span of the osp basis")
    return coords


def cartan_element(a, b, dim: SuperDim) -> SuperMatrix:
    """The Cartan element with A = diag(a), B = diag(b_1 u, ..., b_n u).

    For N odd the trailing 1x1 slot is zero: a nonzero entry there would
    not be skew-symmetric.
    """
    m, n = dim.m, dim.n
    if len(a) != m or len(b) != n:
        raise ValueError("coefficient lengths must be (m, n)")
    entries = {}
    for i, ai in enumerate(a):
        entries[(i, m + i)] = cyc(ai)
        entries[(m + i, i)] = cyc(-Fraction(ai))
    for j, bj in enumerate(b):
        r = 2 * m + 2 * j
        entries[(r, r + 1)] = cyc(bj)
        entries[(r + 1, r)] = cyc(-Fraction(bj))
    return SuperMatrix.from_entries(dim, entries)


def cartan_basis(dim: SuperDim) -> list[SuperMatrix]:
    """The elements A_1..A_m, B_1..B_n spanning the compact Cartan."""
    m, n = dim.m, dim.n
    out = []
    for i in range(m):
        a = [0] * m
        a[i] = 1
        out.append(cartan_element(a, [0] * n, dim))
    for j in range(n):
        b = [0] * n
        b[j] = 1
        out.append(cartan_element([0] * m, b, dim))
    return out


def cartan_coefficients(h: SuperMatrix) -> tuple[list[Cyclotomic], list[Cyclotomic]]:
    """(a, b) diagonal parameters of a Cartan-form matrix."""
    d = h.dim
    m, n = d.m, d.n
    a = [h.entry(i, m + i) for i in range(m)]
    b = [h.entry(2 * m + 2 * j, 2 * m + 2 * j + 1) for j in range(n)]
    return a, b


# -- roots ----------------------------------------------------------------

COMPACT = "compact"
NONCOMPACT = "noncompact"
ODD = "odd"


@dataclass(frozen=True)
class Root:
    """A root written as sum(e_coeffs[i] e_{i+1}) + sum(f_coeffs[j] f_{j+1})."""

    e: tuple[int, ...]
    f: tuple[int, ...]
    cls: str

    def negated(self) -> Root:
        return Root(tuple(-x for x in self.e), tuple(-x for x in self.f), self.cls)

    def evaluate(self, h: SuperMatrix) -> Cyclotomic:
        """alpha(h) for h in the Cartan, via e_i(h) = i a_i, f_j(h) = i b_j."""
        a, b = cartan_coefficients(h)
        acc = ZERO
        for coeff, val in zip(self.e, a):
            if coeff:
                acc = acc + val * coeff
        for coeff, val in zip(self.f, b):
            if coeff:
                acc = acc + val * coeff
        return acc * I

    def __str__(self):
        parts = []
        for coeff, sym, idx in [(c, "e", i + 1) for i, c in enumerate(self.e)] + \
                               [(c, "f", j + 1) for j, c in enumerate(self.f)]:
            if not coeff:
                continue
            mag = abs(coeff)
            text = f"{sym}{idx}" if mag == 1 else f"{mag}{sym}{idx}"
            parts.append(("-" if coeff < 0 else "+") + text)
        if not parts:
            return "0"
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out


def _unit(length: int, idx: int, value: int = 1) -> tuple[int, ...]:
    v = [0] * length
    v[idx] = value
    return tuple(v)


@lru_cache(maxsize=None)
def positive_roots(dim: SuperDim) -> tuple[Root, ...]:
    m, n = dim.m, dim.n
    roots: list[Root] = []
    zf = (0,) * n
    ze = (0,) * m
    # compact: e_i - e_j (i<j), f_i -+ f_j (i<j), and f_j when N is odd
    for i in range(m):
        for j in range(i + 1, m):
            e = [0] * m
            e[i], e[j] = 1, -1
            roots.append(Root(tuple(e), zf, COMPACT))
    for i in range(n):
        for j in range(i + 1, n):
            for sign in (-1, 1):
                f = [0] * n
                f[i], f[j] = 1, sign
                roots.append(Root(ze, tuple(f), COMPACT))
    if dim.odd:
        for j in range(n):
            roots.append(Root(ze, _unit(n, j), COMPACT))
    # noncompact: e_i + e_j (i <= j)
    for i in range(m):
        for j in range(i, m):
            e = [0] * m
            e[i] += 1
            e[j] += 1
            roots.append(Root(tuple(e), zf, NONCOMPACT))
    # odd: e_i +- f_j, and e_i when N is odd
    for i in range(m):
        for j in range(n):
            for sign in (-1, 1):
                roots.append(Root(_unit(m, i), _unit(n, j, sign), ODD))
    if dim.odd:
        for i in range(m):
            roots.append(Root(_unit(m, i), zf, ODD))
    return tuple(roots)


def negative_roots(dim: SuperDim) -> tuple[Root, ...]:
    return tuple(r.negated() for r in positive_roots(dim))


def root_system(dim: SuperDim) -> tuple[Root, ...]:
    return positive_roots(dim) + negative_roots(dim)


@lru_cache(maxsize=None)
def _cartan_bracket_table(dim: SuperDim):
    """[h_r, X_b] for every Cartan generator h_r and basis element X_b."""
    cartan = cartan_basis(dim)
    basis = osp_basis(dim)
    return tuple(tuple(super_bracket(h, x) for x in basis) for h in cartan)


def root_space_basis(alpha: Root, dim: SuperDim) -> SuperMatrix:
    """The root vector X_alpha, canonicalized to leading entry 1.

    Solves [h, X] = alpha(h) X over the osp basis exactly; the solution
    space must be one-dimensional.
    """
    if len(alpha.e) != dim.m or len(alpha.f) != dim.n:
        raise ValueError("root length does not match the super dimension")
    cartan = cartan_basis(dim)
    basis = osp_basis(dim)
    table = _cartan_bracket_table(dim)
    nb = len(basis)
    t = dim.total
    rows = []
    for r, h in enumerate(cartan):
        val = alpha.evaluate(h)
        for i in range(t):
            for j in range(t):
                row = []
                nonzero = False
                for b in range(nb):
                    entry = table[r][b].entry(i, j) - val * basis[b].entry(i, j)
                    if entry:
                        nonzero = True
                    row.append(entry)
                if nonzero:
                    rows.append(row)
    kernel = linalg.nullspace(rows, nb)
    if not kernel:
        raise ValueError(f"{alpha} is not a root of {dim}")
    if len(kernel) != 1:
        raise ValueError(f"root space of {alpha} is not one-dimensional")
    x = SuperMatrix.zero(dim)
    for c, b in zip(kernel[0], basis):
        if c:
            x = x + b.scaled(c)
    # canonicalize: first nonzero entry in row-major scan becomes 1
    lead = next(v for row in x.rows for v in row if v)
    return x.scaled(lead.inverse())


def coroot_normalized_pair(j: int, dim: SuperDim) -> tuple[SuperMatrix, SuperMatrix]:
    """Root vectors X for +-(e_j - f_1), scaled so their anticommutator H
    satisfies e_j(H) = f_1(H) = 1.

    With that normalization a weight w pairs with H as w(H) = lambda_j + mu_1.
    """
    if dim.n < 1 or not (1 <= j <= dim.m):
        raise ValueError("need n >= 1 and 1 <= j <= m")
    beta = Root(_unit(dim.m, j - 1), _unit(dim.n, 0, -1), ODD)
    xp = root_space_basis(beta, dim)
    xm = root_space_basis(beta.negated(), dim)
    h = super_bracket(xp, xm)
    a, b = cartan_coefficients(h)
    ej = a[j - 1] * I
    f1 = b[0] * I
    if not ej:
        raise ValueError("degenerate pairing for the odd root ladder")
    if ej != f1:
        raise ValueError("coroot of e_j - f_1 is not balanced")
    for k, v in enumerate(a):
        if k != j - 1 and v:
            raise ValueError("coroot has unexpected sp support")
    for k, v in enumerate(b):
        if k != 0 and v:
            raise ValueError("coroot has unexpected so support")
    return xp.scaled(ej.inverse()), xm


# -- weights --------------------------------------------------------------

@dataclass(frozen=True)
class Weight:
    """Coordinate expression (lambda_1..lambda_m; mu_1..mu_n), exact rationals."""

    lam: tuple[Fraction, ...]
    mu: tuple[Fraction, ...]

    @classmethod
    def of(cls, lam, mu) -> Weight:
        return cls(tuple(Fraction(x) for x in lam), tuple(Fraction(x) for x in mu))

    def negated(self) -> Weight:
        return Weight(tuple(-x for x in self.lam), tuple(-x for x in self.mu))

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.lam + self.mu)

    def __str__(self):
        return "({};{})".format(",".join(str(x) for x in self.lam),
                                ",".join(str(x) for x in self.mu))

    @classmethod
    def parse(cls, text: str) -> Weight:
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        if ";" not in body:
            raise ValueError('weight must look like "1,2;0,0"')
        lam_text, mu_text = body.split(";", 1)
        lam = [Fraction(x) for x in lam_text.split(",") if x.strip() != ""]
        mu = [Fraction(x) for x in mu_text.split(",") if x.strip() != ""]
        return cls(tuple(lam), tuple(mu))

    def to_json(self):
        return {
            "str": str(self),
            "lambda": [[x.numerator, x.denominator] for x in self.lam],
            "mu": [[x.numerator, x.denominator] for x in self.mu],
        }
