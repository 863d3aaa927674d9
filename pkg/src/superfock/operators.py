"""Operators on F^L: the negative-root table, weight operators, composition.

A FockOperator is a finite sum of scaled atom words.  Atoms act on one
tensor factor each: z-multiplication and z-derivative on the polynomial
part, left Clifford multiplication and the sign automorphisms alpha_{t,k}
on the Clifford part.  The rightmost atom of a word acts first.

Operator equality is always decided extensionally, by exact agreement on
the basis of bounded polynomial degree tensor all Clifford words; see
``extensional`` for the fast integer-matrix backend.
"""

from __future__ import annotations

from .cyclo import Cyclotomic, HALF, I, ONE, ZERO, cyc
from .fock import (FockVector, ShapeMismatch, c_bit, r_bit, render_word,
                   site_count, var_index)
from .osp import Root, SuperDim, Weight


class NotAWeightVector(ValueError):
    """Raised when eigenvector extraction meets a non-eigenvector."""


class FockOperator:
    """Sum of (coefficient, atom word) terms with a declared Z2-degree.

    Atom encodings: ('z', v) multiplies by z_v, ('d', v) differentiates,
    ('cl', p) left-multiplies by the Clifford generator at bit p,
    ('al', p) applies the automorphism flipping that r generator,
    ('sc', c) scales.  Words are applied right to left.
    """

    __slots__ = ("dim", "L", "degree", "terms")

    def __init__(self, dim: SuperDim, L: int, terms, degree: int | None = None):
        merged: dict = {}
        for coeff, atoms in terms:
            if not coeff:
                continue
            atoms = tuple(atoms)
            acc = merged.get(atoms)
            acc = coeff if acc is None else acc + coeff
            if acc:
                merged[atoms] = acc
            elif atoms in merged:
                del merged[atoms]
        self.dim = dim
        self.L = L
        self.terms = tuple(sorted(merged.items(), key=lambda kv: kv[0]))
        parities = {sum(1 for a in atoms if a[0] == "cl") & 1
                    for atoms, _ in self.terms}
        if len(parities) > 1:
            raise ValueError("operator mixes Z2-degrees")
        inferred = parities.pop() if parities else 0
        if degree is None:
            degree = inferred
        elif self.terms and degree != inferred:
            raise ValueError("declared degree contradicts the atom words")
        self.degree = degree

    # -- algebra -----------------------------------------------------------

    @classmethod
    def zero(cls, dim: SuperDim, L: int) -> FockOperator:
        return cls(dim, L, [])

    @classmethod
    def identity(cls, dim: SuperDim, L: int) -> FockOperator:
        return cls(dim, L, [(ONE, ())])

    def _check(self, other: FockOperator):
        if self.dim != other.dim or self.L != other.L:
            raise ShapeMismatch("operators act on different spaces")

    def __add__(self, other: FockOperator) -> FockOperator:
        self._check(other)
        return FockOperator(self.dim, self.L,
                            [(c, a) for a, c in self.terms] +
                            [(c, a) for a, c in other.terms])

    def __sub__(self, other: FockOperator) -> FockOperator:
        return self + other.scaled(-1)

    def __neg__(self) -> FockOperator:
        return self.scaled(-1)

    def scaled(self, c) -> FockOperator:
        c = Cyclotomic.coerce(c)
        return FockOperator(self.dim, self.L,
                            [(coeff * c, atoms) for atoms, coeff in self.terms],
                            degree=self.degree)

    def __mul__(self, other: FockOperator) -> FockOperator:
        """Composition: (self * other)(v) = self(other(v))."""
        self._check(other)
        terms = [(c1 * c2, a1 + a2)
                 for a1, c1 in self.terms for a2, c2 in other.terms]
        return FockOperator(self.dim, self.L, terms,
                            degree=(self.degree + other.degree) % 2 if terms else 0)

    def is_zero(self) -> bool:
        return not self.terms

    # -- action ------------------------------------------------------------

    def apply(self, vec: FockVector) -> FockVector:
        if vec.dim != self.dim or vec.L != self.L:
            raise ShapeMismatch("operator and vector shapes differ")
        out: dict = {}
        for atoms, coeff in self.terms:
            for (mono, word), vc in vec.terms.items():
                m = None
                w = word
                num = 1
                extra = None
                for a in reversed(atoms):
                    kind = a[0]
                    if kind == "d":
                        e = mono[a[1]] if m is None else m[a[1]]
                        if not e:
                            num = 0
                            break
                        if m is None:
                            m = list(mono)
                        num *= e
                        m[a[1]] -= 1
                    elif kind == "z":
                        if m is None:
                            m = list(mono)
                        m[a[1]] += 1
                    elif kind == "cl":
                        p = a[1]
                        if (w & ((1 << p) - 1)).bit_count() & 1:
                            num = -num
                        w ^= 1 << p
                    elif kind == "al":
                        if (w >> a[1]) & 1:
                            num = -num
                    else:  # 'sc'
                        extra = a[1] if extra is None else extra * a[1]
                if not num:
                    continue
                c = coeff * vc
                if num != 1:
                    c = c * num
                if extra is not None:
                    c = c * extra
                key = (mono if m is None else tuple(m), w)
                acc = out.get(key)
                acc = c if acc is None else acc + c
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        result = FockVector.__new__(FockVector)
        result.dim, result.L, result.terms = self.dim, self.L, out
        return result

    def adjoint(self) -> FockOperator:
        """Formal adjoint for the Fock inner product.

        z and d/dz swap, Clifford multiplications and the alphas are
        self-adjoint, coefficients conjugate.
        """
        swap = {"z": "d", "d": "z"}
        terms = []
        for atoms, coeff in self.terms:
            flipped = tuple((swap.get(a[0], a[0]),) + a[1:] for a in reversed(atoms))
            flipped = tuple(a if a[0] != "sc" else ("sc", a[1].conjugate())
                            for a in flipped)
            terms.append((coeff.conjugate(), flipped))
        return FockOperator(self.dim, self.L, terms, degree=self.degree)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for atoms, coeff in self.terms:
            word = "*".join(self._render_atom(a) for a in atoms) if atoms else "1"
            bits.append(f"({coeff}) * {word}")
        return " + ".join(bits)

    def _render_atom(self, a) -> str:
        kind = a[0]
        if kind in ("z", "d"):
            s, k = a[1] // self.L + 1, a[1] % self.L + 1
            return (f"z[{s},{k}]" if kind == "z" else f"dz[{s},{k}]")
        if kind == "cl":
            return render_word(1 << a[1], self.dim, self.L)
        if kind == "al":
            t, k = a[1] // self.L + 1, a[1] % self.L + 1
            return f"alpha[{t},{k}]"
        return f"({a[1]})"


# -- atom factories --------------------------------------------------------

def mul_z(dim: SuperDim, L: int, s: int, k: int) -> FockOperator:
    return FockOperator(dim, L, [(ONE, (("z", var_index(dim, L, s, k)),))])


def del_z(dim: SuperDim, L: int, s: int, k: int) -> FockOperator:
    return FockOperator(dim, L, [(ONE, (("d", var_index(dim, L, s, k)),))])


def cliff_r(dim: SuperDim, L: int, t: int, k: int) -> FockOperator:
    return FockOperator(dim, L, [(ONE, (("cl", r_bit(dim, L, t, k)),))])


def cliff_c(dim: SuperDim, L: int, k: int) -> FockOperator:
    return FockOperator(dim, L, [(ONE, (("cl", c_bit(dim, L, k)),))])


def alpha_op(dim: SuperDim, L: int, t: int, k: int) -> FockOperator:
    return FockOperator(dim, L, [(ONE, (("al", r_bit(dim, L, t, k)),))])


# -- the negative-root operator table --------------------------------------

def negative_root_operator(alpha: Root, dim: SuperDim, L: int) -> FockOperator:
    """The lowering operator attached to a negative root.

    Families, with s,t the supports of the positive counterpart:
      -(e_s +- f_t): sum_k d_{s,k} r_{t,k} (1 +- alpha_{t,k})
      -(e_s - e_t) : sum_k z_{t,k} d_{s,k}            (s < t)
      -(e_s + e_t) : sum_k d_{s,k} d_{t,k}            (s <= t)
      -(f_s +- f_t): sum_k r_{s,k} r_{t,k} (1 + alpha_{s,k})(1 +- alpha_{t,k})
      -e_s         : sum_k d_{s,k} c_k                (odd N)
      -f_s         : sum_k r_{s,k} c_k (1 + alpha_{s,k})   (odd N)
    """
    pe = [-x for x in alpha.e]
    pf = [-x for x in alpha.f]
    es = [i + 1 for i, x in enumerate(pe) if x]
    fs = [j + 1 for j, x in enumerate(pf) if x]
    terms = []

    def bad():
        return ValueError(f"{alpha} is not a negative root of {dim}")

    if len(es) == 1 and len(fs) == 1 and pe[es[0] - 1] == 1 and abs(pf[fs[0] - 1]) == 1:
        s, t = es[0], fs[0]
        sign = pf[t - 1]
        for k in range(1, L + 1):
            d = ("d", var_index(dim, L, s, k))
            r = ("cl", r_bit(dim, L, t, k))
            terms.append((ONE, (d, r)))
            terms.append((cyc(sign), (d, r, ("al", r_bit(dim, L, t, k)))))
    elif len(fs) == 0 and len(es) == 2 and sorted(pe[i - 1] for i in es) == [-1, 1]:
        s = next(i for i in es if pe[i - 1] == 1)
        t = next(i for i in es if pe[i - 1] == -1)
        if not s < t:
            raise bad()
        for k in range(1, L + 1):
            terms.append((ONE, (("z", var_index(dim, L, t, k)),
                                ("d", var_index(dim, L, s, k)))))
    elif len(fs) == 0 and sum(pe) == 2 and all(x >= 0 for x in pe) and len(es) <= 2:
        s = es[0]
        t = es[-1] if len(es) == 2 else s
        for k in range(1, L + 1):
            terms.append((ONE, (("d", var_index(dim, L, s, k)),
                                ("d", var_index(dim, L, t, k)))))
    elif len(es) == 0 and len(fs) == 2 and pf[fs[0] - 1] == 1 and abs(pf[fs[1] - 1]) == 1:
        s, t = fs
        sign = pf[t - 1]
        for k in range(1, L + 1):
            rs = ("cl", r_bit(dim, L, s, k))
            rt = ("cl", r_bit(dim, L, t, k))
            als = ("al", r_bit(dim, L, s, k))
            alt = ("al", r_bit(dim, L, t, k))
            terms.append((ONE, (rs, rt)))
            terms.append((cyc(sign), (rs, rt, alt)))
            terms.append((ONE, (rs, rt, als)))
            terms.append((cyc(sign), (rs, rt, als, alt)))
    elif len(fs) == 0 and len(es) == 1 and pe[es[0] - 1] == 1:
        if not dim.odd:
            raise ValueError(f"{alpha} requires odd N")
        s = es[0]
        for k in range(1, L + 1):
            terms.append((ONE, (("d", var_index(dim, L, s, k)),
                                ("cl", c_bit(dim, L, k)))))
    elif len(es) == 0 and len(fs) == 1 and pf[fs[0] - 1] == 1:
        if not dim.odd:
            raise ValueError(f"{alpha} requires odd N")
        s = fs[0]
        for k in range(1, L + 1):
            rs = ("cl", r_bit(dim, L, s, k))
            terms.append((ONE, (rs, ("cl", c_bit(dim, L, k)))))
            terms.append((ONE, (rs, ("cl", c_bit(dim, L, k)),
                                ("al", r_bit(dim, L, s, k)))))
    else:
        raise bad()
    return FockOperator(dim, L, terms)


def weight_operator_sp(i: int, dim: SuperDim, L: int) -> FockOperator:
    """i * sum_k (z_{i,k} d_{i,k} + 1/2), the sp-part weight operator."""
    if not 1 <= i <= dim.m:
        raise IndexError(f"sp index {i} out of range")
    terms = []
    for k in range(1, L + 1):
        v = var_index(dim, L, i, k)
        terms.append((I, (("z", v), ("d", v))))
        terms.append((I * HALF, ()))
    return FockOperator(dim, L, terms)


def weight_operator_so(j: int, dim: SuperDim, L: int) -> FockOperator:
    """(i/2) * sum_k alpha_{j,k}, the so-part weight operator."""
    if not 1 <= j <= dim.n:
        raise IndexError(f"so index {j} out of range")
    terms = [(I * HALF, (("al", r_bit(dim, L, j, k)),)) for k in range(1, L + 1)]
    return FockOperator(dim, L, terms)


def eigenvalue_of(image: FockVector, vec: FockVector) -> Cyclotomic | None:
    """c with image == c*vec, or None."""
    if not image:
        return ZERO
    key, val = next(iter(image.terms.items()))
    base = vec.terms.get(key)
    if base is None:
        return None
    c = val / base
    return c if image == vec.scaled(c) else None


def weight_of_vector(vec: FockVector) -> Weight:
    """Extract the weight of a simultaneous eigenvector of all weight operators.

    lambda_i and mu_j are the eigenvalues divided by i; raises
    NotAWeightVector naming the first operator that fails.
    """
    if not vec:
        raise NotAWeightVector("the zero vector has no weight")
    dim, L = vec.dim, vec.L
    lam = []
    for i in range(1, dim.m + 1):
        c = eigenvalue_of(weight_operator_sp(i, dim, L).apply(vec), vec)
        if c is None:
            raise NotAWeightVector(f"not an eigenvector of the sp weight operator {i}")
        lam.append((c / I).rational())
    mu = []
    for j in range(1, dim.n + 1):
        c = eigenvalue_of(weight_operator_so(j, dim, L).apply(vec), vec)
        if c is None:
            raise NotAWeightVector(f"not an eigenvector of the so weight operator {j}")
        mu.append((c / I).rational())
    return Weight(tuple(lam), tuple(mu))


def weight_of_basis_key(key, dim: SuperDim, L: int) -> Weight:
    """The weight of a single basis state z^A (x) w."""
    from fractions import Fraction
    mono, word = key
    half_L = Fraction(L, 2)
    lam = []
    for s in range(1, dim.m + 1):
        deg = sum(mono[var_index(dim, L, s, k)] for k in range(1, L + 1))
        lam.append(deg + half_L)
    mu = []
    for t in range(1, dim.n + 1):
        flipped = sum((word >> r_bit(dim, L, t, k)) & 1 for k in range(1, L + 1))
        mu.append(Fraction(L - 2 * flipped, 2))
    return Weight(tuple(lam), tuple(mu))


# -- extensional comparison -----------------------------------------------

class SuperCommutator:
    """The action v -> A(Bv) - (-1)^(deg A deg B) B(Av)."""

    def __init__(self, a: FockOperator, b: FockOperator):
        a._check(b)
        self.a = a
        self.b = b
        self.degree = (a.degree + b.degree) % 2
        self.sign = -1 if (a.degree and b.degree) else 1

    def apply(self, vec: FockVector) -> FockVector:
        first = self.a.apply(self.b.apply(vec))
        second = self.b.apply(self.a.apply(vec))
        return first - second.scaled(self.sign)


def iter_basis_keys(dim: SuperDim, L: int, max_degree: int):
    """All (monomial, word) keys with polynomial degree <= max_degree."""
    nv = dim.m * L
    nw = 1 << site_count(dim, L)
    for mono in monomials_upto(nv, max_degree):
        for word in range(nw):
            yield (mono, word)


def monomials_upto(nv: int, deg: int) -> list[tuple]:
    """Exponent tuples with total degree <= deg, graded lexicographic."""
    if nv == 0:
        return [()]
    out = []
    for d in range(deg + 1):
        out.extend(sorted(_compositions(nv, d)))
    return out


def _compositions(nv: int, d: int):
    if nv == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in _compositions(nv - 1, d - first):
            yield (first,) + rest


def basis_vector(dim: SuperDim, L: int, key) -> FockVector:
    return FockVector(dim, L, {key: ONE})


def equal_on_basis(action, other, dim: SuperDim, L: int, max_degree: int) -> bool:
    """Exact extensional equality on the truncated basis.

    Either argument may be a FockOperator or anything with ``apply``.
    """
    for key in iter_basis_keys(dim, L, max_degree):
        v = basis_vector(dim, L, key)
        if action.apply(v) != other.apply(v):
            return False
    return True
