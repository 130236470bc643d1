"""Operators on V^{⊗d} for V = C^{m|n}.

Basis vectors v_i of V^{⊗d} are ordered lexicographically in the multi-index
i (positions in the total order of I(m|n)).  Every operator here is stored as
the matrix of a linear map, column = input basis vector, unless stated
otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactlin import ExactMatrix
from .glsuper import GlElement, NilpotentData, supertrace, toeplitz_element
from .superindex import (Pyramid, all_perms, alpha, cycles, nu,
                         orbit_representatives, permute, simple)


@dataclass(frozen=True)
class TensorOperator:
    op: ExactMatrix
    filtration_degree: int | None = None

    def __matmul__(self, other):
        return TensorOperator(self.op @ other.op)

    @property
    def T(self):
        return TensorOperator(self.op.T, self.filtration_degree)


class TensorSpace:
    """V^{⊗d} with its basis, parities and V-grading."""

    def __init__(self, m: int, n: int, d: int, justify: str = "right"):
        if d < 1:
            raise ValueError("d must be >= 1")
        self.pyr = Pyramid(m, n, justify)
        self.m, self.n, self.d = m, n, d
        self.N = m + n
        self.dim = self.N ** d
        self.basis = self.pyr.multi_indices(d)
        self.par = self.pyr.parities
        self._weights = [self.N ** (d - 1 - k) for k in range(d)]

    def index(self, mi: Sequence[int]) -> int:
        return sum(a * w for a, w in zip(mi, self._weights))

    def eps(self, mi) -> tuple:
        return tuple(self.par[a] for a in mi)

    def vdeg(self, mi) -> int:
        """V-grading: deg v_i = n - col(i), summed over tensor factors."""
        return sum(self.n - self.pyr.col(a) for a in mi)

    def label(self, mi) -> str:
        return "⊗".join(self.pyr.label(a) for a in mi)

    # -- building blocks ---------------------------------------------------

    def slot_operator(self, X: ExactMatrix, slot: int, parity: int) -> ExactMatrix:
        """1^{⊗slot} ⊗ X ⊗ 1^{⊗(d-slot-1)} with the Koszul sign of X passing v's."""
        cols = {}
        for a, b, v in X.items():
            cols.setdefault(b, []).append((a, v))
        w = self._weights[slot]
        data = {}
        for mi in self.basis:
            hits = cols.get(mi[slot])
            if not hits:
                continue
            src = self.index(mi)
            sign = -1 if parity and sum(self.par[x] for x in mi[:slot]) % 2 else 1
            for a, v in hits:
                tgt = src + (a - mi[slot]) * w
                data.setdefault(tgt, {})[src] = sign * v
        return ExactMatrix._wrap(self.dim, self.dim, data)

    def super_tensor(self, factors: Sequence[tuple]) -> ExactMatrix:
        """X_1 ⊗ ... ⊗ X_d acting by α(|X|, |w|) X_1 w_1 ⊗ ... ⊗ X_d w_d.

        ``factors`` is a list of (ExactMatrix on V, parity) pairs.
        """
        if len(factors) != self.d:
            raise ValueError("need one factor per tensor slot")
        xpar = tuple(p for _, p in factors)
        colmaps = []
        for X, _ in factors:
            cm = {}
            for a, b, v in X.items():
                cm.setdefault(b, []).append((a, v))
            colmaps.append(cm)
        data = {}
        for mi in self.basis:
            partial = [((), Fraction(1))]
            for k, b in enumerate(mi):
                hits = colmaps[k].get(b)
                if not hits:
                    partial = []
                    break
                partial = [(pre + (a,), c * v) for pre, c in partial for a, v in hits]
            if not partial:
                continue
            sign = alpha(xpar, self.eps(mi))
            src = self.index(mi)
            for out, c in partial:
                tgt = self.index(out)
                row = data.setdefault(tgt, {})
                s = row.get(src, 0) + sign * c
                if s:
                    row[src] = s
                else:
                    del row[src]
        data = {r: row for r, row in data.items() if row}
        return ExactMatrix._wrap(self.dim, self.dim, data)

    def supertrace(self, L: ExactMatrix) -> Fraction:
        return sum((L[i, i] * (-1 if sum(self.eps(mi)) % 2 else 1)
                    for i, mi in enumerate(self.basis)), Fraction(0))

    def degree_profile(self, L: ExactMatrix) -> set:
        """Set of V-degree shifts deg(out) - deg(in) over nonzero entries."""
        degs = [self.vdeg(mi) for mi in self.basis]
        return {degs[r] - degs[c] for r, c, _ in L.items()}

    def degree_part(self, L: ExactMatrix, shift: int) -> ExactMatrix:
        degs = [self.vdeg(mi) for mi in self.basis]
        return ExactMatrix(self.dim, self.dim,
                           {(r, c): v for r, c, v in L.items() if degs[r] - degs[c] == shift})

    def filtration_degree(self, L: ExactMatrix):
        prof = self.degree_profile(L)
        return max(prof) if prof else None

    def leading_term(self, L: ExactMatrix) -> ExactMatrix:
        deg = self.filtration_degree(L)
        if deg is None:
            return L
        return self.degree_part(L, deg)


# ---------------------------------------------------------------------------
# the actions

def phi_d(X: GlElement, d: int, space: TensorSpace | None = None) -> TensorOperator:
    """ρ(X) on V^{⊗d}: Σ_k 1 ⊗ .. ⊗ X (slot k) ⊗ .. ⊗ 1 with Koszul signs."""
    sp = space or TensorSpace(X.m, X.n, d)
    out = ExactMatrix.zero(sp.dim)
    for parity, part in X.homogeneous_parts().items():
        for k in range(d):
            out = out + sp.slot_operator(part.matrix, k, parity)
    return TensorOperator(out, sp.filtration_degree(out))


def psi_d(sigma: Sequence[int], space: TensorSpace) -> TensorOperator:
    """Linear map of the right action v.σ = ν(ε, σ) v_{σ(1)} ⊗ ... ⊗ v_{σ(d)}."""
    sigma = tuple(sigma)
    if len(sigma) != space.d:
        raise ValueError("permutation has the wrong length")
    data = {}
    for mi in space.basis:
        out = permute(mi, sigma)
        data[space.index(out)] = {space.index(mi): Fraction(nu(space.eps(mi), sigma))}
    return TensorOperator(ExactMatrix._wrap(space.dim, space.dim, data), 0)


def psi_generators(space: TensorSpace) -> list:
    return [psi_d(simple(space.d, j), space).op for j in range(space.d - 1)]


def poly_insertion(i: int, space: TensorSpace, nilp: NilpotentData) -> TensorOperator:
    """e placed in tensor slot i (0-based); e is even so no signs arise."""
    if not 0 <= i < space.d:
        raise ValueError("slot out of range")
    op = space.slot_operator(nilp.element.matrix, i, 0)
    return TensorOperator(op, space.filtration_degree(op))


def theta_operator(space: TensorSpace, I: Sequence[int], J: Sequence[int]) -> TensorOperator:
    """Θ_{I,J} = α(ε, ε) Σ_σ ν(ε, σ) ξ_{Υ(I,J).σ}, ε = ε_I + ε_J, σ over S_d."""
    pyr = space.pyr
    K = set(pyr.triples)
    ups = pyr.Upsilon(I, J)
    if any(t not in K for t in ups):
        raise ValueError(f"pair ({I}, {J}) is not admissible")
    eps = tuple((space.par[a] + space.par[b]) % 2 for a, b in zip(I, J))
    pref = alpha(eps, eps)
    cache = {}
    out = ExactMatrix.zero(space.dim)
    for sigma in all_perms(space.d):
        key = permute(ups, sigma)
        term = cache.get(key)
        if term is None:
            factors = [(toeplitz_element(pyr, t).matrix, (t[0] + t[1]) % 2) for t in key]
            term = cache[key] = space.super_tensor(factors)
        out = out + term.scale(pref * nu(eps, sigma))
    return TensorOperator(out, space.filtration_degree(out))


def admissible_multipairs(space: TensorSpace) -> list:
    """J^d: pairs of multi-indices whose slot pairs all lie in J."""
    J = space.pyr.J
    pairs = [()]
    for _ in range(space.d):
        pairs = [p + (hk,) for p in pairs for hk in J]
    return [(tuple(h for h, _ in p), tuple(k for _, k in p)) for p in pairs]


def theta_basis(space: TensorSpace) -> dict:
    """Θ for one (I,J) per diagonal S_d-orbit of Υ-values (multisets of triples)."""
    reps = {}
    reps_by_triples = space.pyr.J_representatives
    K = space.pyr.triples
    tuples = [()]
    for _ in range(space.d):
        tuples = [t + (k,) for t in tuples for k in K]
    for rep in orbit_representatives(tuples, space.d):
        I = tuple(reps_by_triples[t][0] for t in rep)
        Jm = tuple(reps_by_triples[t][1] for t in rep)
        reps[rep] = theta_operator(space, I, Jm)
    return reps


def comodule_coeffs(space: TensorSpace, t: Sequence[int]) -> list:
    """Terms (s, Υ(s,t), c) of Δ(v_t) = Σ_s c v_s ⊗ x_{Υ(s,t)}, c = α(ε_s+ε_t, ε_t)."""
    pyr = space.pyr
    Jset = set(pyr.J)
    options = [[h for h in range(pyr.size) if (h, tk) in Jset] for tk in t]
    eps_t = space.eps(t)
    out = []
    for s in itertools.product(*options):
        eps_st = tuple((a + b) % 2 for a, b in zip(space.eps(s), eps_t))
        out.append((s, pyr.Upsilon(s, t), alpha(eps_st, eps_t)))
    return out


def theta_from_comodule(space: TensorSpace, I: Sequence[int], J: Sequence[int]) -> ExactMatrix:
    """Θ_{I,J} assembled column by column from the comodule coefficients.

    v_t ↦ Σ_s c(s,t) <ξ_{Υ(I,J)}, x_{Υ(s,t)}> v_s, where the pairing is
    α(ε,ε) Σ ν(ε,σ) over the σ with Υ(I,J).σ = Υ(s,t).
    """
    ups = space.pyr.Upsilon(I, J)
    eps = tuple((space.par[a] + space.par[b]) % 2 for a, b in zip(I, J))
    pref = alpha(eps, eps)
    pairing = {}
    for sigma in all_perms(space.d):
        key = permute(ups, sigma)
        pairing[key] = pairing.get(key, 0) + pref * nu(eps, sigma)
    data = {}
    for t in space.basis:
        col = space.index(t)
        for s, ups_st, c in comodule_coeffs(space, t):
            val = pairing.get(ups_st)
            if val:
                key = (space.index(s), col)
                data[key] = data.get(key, 0) + c * val
    return ExactMatrix(space.dim, space.dim, data)


def theta_sigma(sigma: Sequence[int], Xs: Sequence[GlElement]) -> Fraction:
    """Product over the cycles (i σ(i) σ²(i) ...) of str(X_i X_σ(i) ...)."""
    if len(sigma) != len(Xs):
        raise ValueError("need one matrix per point")
    out = Fraction(1)
    for cyc in cycles(sigma):
        P = Xs[cyc[0]]
        for k in cyc[1:]:
            P = P @ Xs[k]
        out *= supertrace(P)
    return out


def theta_sigma_trace(sigma: Sequence[int], Xs: Sequence[GlElement], space: TensorSpace) -> Fraction:
    """str on V^{⊗d} of ψ(σ) ∘ (X_1 ⊗ ... ⊗ X_d) for even X's."""
    for X in Xs:
        if X.parity not in (0, None):
            raise ValueError("trace identity is only used for even matrices")
    T = space.super_tensor([(X.matrix, 0) for X in Xs])
    P = psi_d(sigma, space).op
    return space.supertrace(P @ T)


def sergeev_generators(space: TensorSpace) -> list:
    """φ_d of the Chevalley-type generators e_{a,a±1}, e_{a,a}."""
    from .glsuper import chevalley_generators
    return [phi_d(X, space.d, space).op for X in chevalley_generators(space.m, space.n)]
