"""Integrable super unitary lowest/highest weight classification.

A lowest weight (lambda_1..lambda_m; mu_1..mu_n) of osp(M/N;R), N >= 2,
heads an integrable irreducible super unitary representation exactly when

  dominance: -mu_n <= ... <= -mu_1 <= lambda_1 <= ... <= lambda_m with the
      so-type tail rule (|mu_n| <= -mu_{n-1} for N = 2n, read against
      lambda_1 when n = 1; mu_n <= 0 for N = 2n+1) and integer entries;
  defect bound: lambda_1 + mu_1 >= d, d = #{k : lambda_k > lambda_1}.

Passing weights with mu_n <= 0 are realized constructively: L = 2 lambda_1,
i_k = lambda_{m-k+1} - lambda_{m-k}, j_b = lambda_1 + mu_b feed the
primitive-vector factory and the weights round-trip exactly.  The module
also verifies the descent ladder v_k = X_{m-k+1} ... X_m v_0 along the
odd roots e_j - f_1, whose full descent multiplies v_0 by the exact scalar
prod_l (lambda_{m-l+1} + mu_1 - l + 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .operators import negative_root_operator, weight_of_vector
from .osp import SuperDim, Weight, coroot_normalized_pair, negative_roots
from .primitive import (PrimitiveParams, build_primitive, check_primitive,
                        predicted_weight)
from .realization import rho_of_matrix


class ClassifyPrecondition(ValueError):
    pass


def _require_dim(w: Weight, dim: SuperDim):
    if len(w.lam) != dim.m or len(w.mu) != dim.n:
        raise ClassifyPrecondition("weight length does not match the dimension")
    if dim.N < 2:
        raise ClassifyPrecondition("classification requires N >= 2")
    if dim.m < 1:
        raise ClassifyPrecondition("classification requires m >= 1")


def weight_inequality(w: Weight) -> bool:
    """|mu_t| <= lambda_s for every pair of coordinates."""
    if not w.mu:
        return True
    if not w.lam:
        return all(x == 0 for x in w.mu)
    return max(abs(x) for x in w.mu) <= min(w.lam)


def excess_count(w: Weight) -> int:
    """d = number of lambda coordinates strictly above lambda_1."""
    return sum(1 for x in w.lam if x > w.lam[0])


def lowest_dominance(w: Weight, dim: SuperDim) -> bool:
    """The lowest-side dominance and integrality condition.

    Chain -mu_n <= ... <= -mu_1 <= lambda_1 <= ... <= lambda_m; for even N
    the tail rule |mu_n| <= next chain element (-mu_{n-1}, or lambda_1 when
    n = 1); for odd N, mu_n <= 0; all coordinates integers.
    """
    _require_dim(w, dim)
    if not w.is_integral():
        return False
    chain = [-x for x in reversed(w.mu)] + list(w.lam)
    if any(a > b for a, b in zip(chain, chain[1:])):
        return False
    n = dim.n
    if dim.odd:
        return w.mu[n - 1] <= 0
    tail_bound = -w.mu[n - 2] if n >= 2 else w.lam[0]
    return abs(w.mu[n - 1]) <= tail_bound


def lowest_defect_bound(w: Weight) -> tuple[bool, int]:
    """lambda_1 + mu_1 >= d with d the excess count."""
    d = excess_count(w)
    return (w.lam[0] + w.mu[0] >= d if w.mu else True), d


def highest_dominance(w: Weight, dim: SuperDim) -> bool:
    """Mirror condition for highest weights (sign-flipped chain)."""
    _require_dim(w, dim)
    if not w.is_integral():
        return False
    chain = [-x for x in reversed(w.mu)] + list(w.lam)
    if any(a < b for a, b in zip(chain, chain[1:])):
        return False
    n = dim.n
    if dim.odd:
        return w.mu[n - 1] >= 0
    tail_bound = w.mu[n - 2] if n >= 2 else -w.lam[0]
    return abs(w.mu[n - 1]) <= tail_bound


def highest_defect_bound(w: Weight) -> tuple[bool, int]:
    """lambda_1 + mu_1 <= -d with d = #{k : lambda_k < lambda_1}."""
    d = sum(1 for x in w.lam if x < w.lam[0])
    return (w.lam[0] + w.mu[0] <= -d if w.mu else True), d


def necessary_band(w: Weight) -> bool:
    """lambda_1 + mu_1 in {d, d+1, ..., m-1} union [m-1, infinity)."""
    m = len(w.lam)
    s = w.lam[0] + w.mu[0] if w.mu else w.lam[0]
    if s >= m - 1:
        return True
    d = excess_count(w)
    return s.denominator == 1 and d <= s <= m - 1


def parameters_from_weight(w: Weight, dim: SuperDim) -> PrimitiveParams:
    """Primitive-vector parameters realizing a passing lowest weight.

    Requires dominance, the defect bound and mu_n <= 0.  The zero weight
    maps to the trivial marker (L = 0).
    """
    _require_dim(w, dim)
    if not lowest_dominance(w, dim):
        raise ClassifyPrecondition(f"weight {w} fails the dominance condition")
    ok, d = lowest_defect_bound(w)
    if not ok:
        raise ClassifyPrecondition(
            f"weight {w} fails the defect bound lambda_1 + mu_1 >= {d}")
    if w.mu and w.mu[-1] > 0:
        raise ClassifyPrecondition(
            f"weight {w} has mu_n > 0; no primitive product realizes it here")
    m = dim.m
    if w.lam[0] == 0:
        # dominance and the defect bound force the zero weight
        return PrimitiveParams(0, (0,) * m, (0,) * dim.n)
    L = int(2 * w.lam[0])
    i = tuple(int(w.lam[m - k] - w.lam[m - k - 1]) for k in range(1, m)) + (0,)
    j = tuple(int(w.lam[0] + mu) for mu in w.mu)
    params = PrimitiveParams(L, i, j)
    params.validate(dim)
    return params


def descent_product(w: Weight, k: int) -> Fraction:
    """prod_{l=1}^{k} (lambda_{m-l+1} + mu_1 - l + 1), the exact scalar
    produced by fully descending the ladder vector v_k."""
    m = len(w.lam)
    if not 1 <= k <= m - 1:
        raise ClassifyPrecondition(f"need 1 <= k <= m-1 = {m - 1}")
    out = Fraction(1)
    for l in range(1, k + 1):
        out *= w.lam[m - l] + w.mu[0] - l + 1
    return out


@dataclass(frozen=True)
class DescentReport:
    weight: Weight
    k: int
    ladder_nonzero: bool       # v_k != 0
    descended_nonzero: bool    # X_{-beta} ... v_k != 0
    product: Fraction          # the predicted scalar
    scalar_matches: bool       # descended vector == product * v_0 exactly
    even_primitive: bool       # v_k killed by all even negative roots
    ok: bool

    def to_json(self):
        return {
            "weight": self.weight.to_json(),
            "k": self.k,
            "ladder_nonzero": self.ladder_nonzero,
            "descended_nonzero": self.descended_nonzero,
            "product": [self.product.numerator, self.product.denominator],
            "scalar_matches": self.scalar_matches,
            "even_primitive": self.even_primitive,
            "ok": self.ok,
        }


def verify_descent(w: Weight, dim: SuperDim, k: int) -> DescentReport:
    """Realize the ladder v_k = X_{m-k+1} ... X_m v_0 in the Fock space.

    The root vectors for +-(e_j - f_1) are scaled so each anticommutator
    pairs weights as lambda_j + mu_1.  Checks that full descent returns
    product * v_0 exactly, that the three nonvanishing conditions (ladder,
    descended vector, scalar) agree, and that v_k stays primitive for the
    even part.  The generated submodule is taken to be irreducible, which
    these exact identities corroborate but do not prove.
    """
    _require_dim(w, dim)
    if dim.m < 2:
        raise ClassifyPrecondition("the descent ladder needs m >= 2")
    params = parameters_from_weight(w, dim)
    v0 = build_primitive(params, dim)
    L = params.L
    ups = {}
    downs = {}
    for j in range(dim.m - k + 1, dim.m + 1):
        xp, xm = coroot_normalized_pair(j, dim)
        ups[j] = rho_of_matrix(xp, dim, L)
        downs[j] = rho_of_matrix(xm, dim, L)
    vk = v0
    for j in range(dim.m, dim.m - k, -1):      # rightmost factor first
        vk = ups[j].apply(vk)
    descended = vk
    for j in range(dim.m - k + 1, dim.m + 1):
        descended = downs[j].apply(descended)
    prod = descent_product(w, k)
    matches = descended == v0.scaled(prod)
    even_ok = True
    for alpha in negative_roots(dim):
        if alpha.cls == "odd":
            continue
        if negative_root_operator(alpha, dim, L).apply(vk):
            even_ok = False
            break
    ladder_nonzero = bool(vk)
    descended_nonzero = bool(descended)
    agree = (ladder_nonzero == descended_nonzero == (prod != 0))
    return DescentReport(
        weight=w, k=k,
        ladder_nonzero=ladder_nonzero,
        descended_nonzero=descended_nonzero,
        product=prod,
        scalar_matches=matches,
        even_primitive=even_ok,
        ok=matches and agree and even_ok,
    )


@dataclass(frozen=True)
class ClassifyVerdict:
    weight: Weight
    side: str                  # 'lowest' or 'highest'
    dominance_ok: bool
    defect_ok: bool
    d: int
    band_ok: bool
    integrable: bool
    constructible: bool
    params: PrimitiveParams | None

    @property
    def passes(self) -> bool:
        return self.dominance_ok and self.defect_ok

    def to_json(self):
        return {
            "weight": self.weight.to_json(),
            "side": self.side,
            "dominance_ok": self.dominance_ok,
            "defect_ok": self.defect_ok,
            "d": self.d,
            "band_ok": self.band_ok,
            "integrable": self.integrable,
            "constructible": self.constructible,
            "params": self.params.to_json() if self.params else None,
        }


def classify_weight(w: Weight, dim: SuperDim, side: str = "lowest") -> ClassifyVerdict:
    """Full verdict for one candidate weight."""
    _require_dim(w, dim)
    if side == "lowest":
        dom = lowest_dominance(w, dim)
        defect_ok, d = lowest_defect_bound(w)
        band = necessary_band(w)
        mu_sign_ok = not w.mu or w.mu[-1] <= 0
    elif side == "highest":
        dom = highest_dominance(w, dim)
        defect_ok, d = highest_defect_bound(w)
        band = necessary_band(w.negated())
        mu_sign_ok = not w.mu or w.mu[-1] >= 0
    else:
        raise ClassifyPrecondition("side must be 'lowest' or 'highest'")
    params = None
    constructible = False
    if dom and defect_ok and mu_sign_ok:
        source = w if side == "lowest" else w.negated()
        params = parameters_from_weight(source, dim)
        constructible = True
    return ClassifyVerdict(
        weight=w, side=side,
        dominance_ok=dom, defect_ok=defect_ok, d=d, band_ok=band,
        integrable=w.is_integral(),
        constructible=constructible, params=params,
    )


def enumerate_unitary_lowest_weights(dim: SuperDim, bound: int,
                                     construct: bool = False) -> list[ClassifyVerdict]:
    """All integer lowest weights with entries bounded by ``bound`` that
    pass dominance and the defect bound, in lexicographic order.

    With ``construct``, every verdict carrying parameters is round-tripped:
    the primitive vector is built, its measured weight compared and its
    primitivity verified; a mismatch raises.
    """
    if bound < 0:
        raise ClassifyPrecondition("bound must be nonnegative")
    if dim.N < 2 or dim.m < 1:
        raise ClassifyPrecondition("enumeration requires m >= 1 and N >= 2")
    out = []
    lam_range = range(0, bound + 1)
    mu_range = range(-bound, bound + 1)
    for lam in combinations_with_replacement(lam_range, dim.m):
        for mu in combinations_with_replacement(mu_range, dim.n):
            w = Weight.of(lam, mu)
            if not (lowest_dominance(w, dim) and lowest_defect_bound(w)[0]):
                continue
            verdict = classify_weight(w, dim, "lowest")
            if construct and verdict.params is not None:
                _roundtrip(verdict, dim)
            out.append(verdict)
    out.sort(key=lambda v: (v.weight.lam, v.weight.mu))
    return out


def _roundtrip(verdict: ClassifyVerdict, dim: SuperDim):
    params = verdict.params
    vec = build_primitive(params, dim)
    measured = weight_of_vector(vec)
    if measured != verdict.weight:
        raise AssertionError(
            f"constructed weight {measured} differs from {verdict.weight}")
    if predicted_weight(params, dim) != verdict.weight:
        raise AssertionError("parameter map does not invert the weight formula")
    report = check_primitive(vec)
    if not report.ok:
        raise AssertionError(
            f"constructed vector for {verdict.weight} fails primitivity "
            f"at {[str(r) for r in report.failures()]}")
