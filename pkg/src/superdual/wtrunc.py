"""A degree-truncated model of U(gl(m|n)) and the finite W-superalgebra W_χ.

PBW monomials are nondecreasing tuples of basis indices; the ordered basis
lists p = (col-degree >= 0 part) first and m_neg after it, so every monomial
factors as (p-part)(m_neg-part).  Odd basis elements appear at most once.
The projection Pr along the left ideal I_χ then just replaces the m_neg part
by the product of its χ-values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from .exactlin import ExactMatrix, _kernel_of_equations
from .glsuper import graded_decomposition
from .hecke import CharVector
from .tensoract import TensorOperator, TensorSpace


# χ(x) = CHI_SIGN * str(℘ e x) with ℘ the parity operator, i.e. tr(e x).  This
# is the choice for which Φ_{d,c}(W_χ) commutes with the Hecke operators, whose
# v_{i-ı_s} coefficient is (-1)^{|i_s|}; a global sign on str(e x) is not enough
# once both rows of the pyramid have length >= 2.
CHI_SIGN = 1
CHI_FORM = "wp"


class TruncationError(ValueError):
    pass


class UEAModel:
    """Ordered basis, structure constants and χ for a fixed (m, n, e regular).

    ``weighting`` chooses the Kazhdan degree of e_{a,b} with col-degree r:
    ``"double"`` gives 2r + 2 (e itself then sits in degree 2), ``"single"``
    gives r + 2.
    """

    def __init__(self, m: int, n: int, justify: str = "right", chi_sign: int = CHI_SIGN,
                 weighting: str = "double", chi_form: str = CHI_FORM):
        if weighting not in ("double", "single"):
            raise ValueError("weighting must be 'double' or 'single'")
        gd = graded_decomposition(m, n, justify, chi_sign, chi_form)
        self.m, self.n = m, n
        self.pyr = gd.pyramid
        self.weighting = weighting
        pairs = list(gd.p) + list(gd.m_neg)
        self.pairs = pairs
        self.index = {ab: k for k, ab in enumerate(pairs)}
        self.n_p = len(gd.p)
        self.parity = [int(a >= m) ^ int(b >= m) for a, b in pairs]
        self.col_degree = [self.pyr.col(b) - self.pyr.col(a) for a, b in pairs]
        self.chi = [Fraction(gd.chi.get(ab, 0)) for ab in pairs]
        if any(self.kazhdan_weight(k) < 2 for k in range(self.n_p)):
            raise AssertionError("a p-basis element has Kazhdan degree below 2")
        self._mul_gen = lru_cache(maxsize=None)(self._mul_gen_uncached)

    def kazhdan_weight(self, k: int) -> int:
        r = self.col_degree[k]
        return 2 * r + 2 if self.weighting == "double" else r + 2

    def in_p(self, k: int) -> bool:
        return k < self.n_p

    def label(self, k: int) -> str:
        a, b = self.pairs[k]
        return f"e[{self.pyr.label(a)},{self.pyr.label(b)}]"

    def bracket(self, h: int, g: int) -> dict:
        """[e_h, e_g] = δ_{bc} e_{ad} - (-1)^{|h||g|} δ_{da} e_{cb} for h=(a,b), g=(c,d)."""
        (a, b), (c, d) = self.pairs[h], self.pairs[g]
        out = {}
        if b == c:
            k = self.index[(a, d)]
            out[k] = out.get(k, 0) + 1
        if d == a:
            k = self.index[(c, b)]
            out[k] = out.get(k, 0) - (-1 if self.parity[h] * self.parity[g] else 1)
        return {k: v for k, v in out.items() if v}

    def _mul_gen_uncached(self, mono: tuple, g: int) -> tuple:
        """Normal form of (monomial)·e_g as a tuple of (monomial, coeff)."""
        if not mono or mono[-1] < g:
            return ((mono + (g,), Fraction(1)),)
        h = mono[-1]
        if h == g:
            if self.parity[g]:
                return ()  # e_g^2 = [e_g, e_g]/2 = 0 for odd elementary matrices
            return ((mono + (g,), Fraction(1)),)
        rest = mono[:-1]
        out = {}
        sign = -1 if self.parity[h] * self.parity[g] else 1
        # rest·h·g = ± rest·g·h + rest·[h, g]
        for mono2, c in self._mul_gen(rest, g):
            for mono3, c3 in self._mul_gen(mono2, h):
                out[mono3] = out.get(mono3, 0) + sign * c * c3
        for k, v in self.bracket(h, g).items():
            for mono2, c in self._mul_gen(rest, k):
                out[mono2] = out.get(mono2, 0) + v * c
        return tuple((k, v) for k, v in out.items() if v)

    def mono_parity(self, mono) -> int:
        return sum(self.parity[k] for k in mono) % 2

    def kazhdan(self, mono) -> int:
        return sum(self.kazhdan_weight(k) for k in mono)

    def p_monomials(self, max_kazhdan: int) -> list:
        """All PBW monomials in the p-basis with Kazhdan degree <= max_kazhdan."""
        out = [()]
        frontier = [()]
        while frontier:
            nxt = []
            for mono in frontier:
                start = mono[-1] if mono else 0
                for k in range(start, self.n_p):
                    if self.parity[k] and mono and mono[-1] == k:
                        continue
                    cand = mono + (k,)
                    if self.kazhdan(cand) <= max_kazhdan:
                        nxt.append(cand)
            out.extend(nxt)
            frontier = nxt
        return out

    def element(self, terms) -> "UEAElement":
        return UEAElement(self, {tuple(k): Fraction(v) for k, v in dict(terms).items() if v})

    def generator(self, a: int, b: int) -> "UEAElement":
        return self.element({(self.index[(a, b)],): 1})

    def one(self) -> "UEAElement":
        return self.element({(): 1})


@dataclass(frozen=True)
class UEAElement:
    model: UEAModel = field(repr=False, compare=False)
    terms: dict

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return self.model.element(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, s):
        return self.model.element({k: v * s for k, v in self.terms.items()})

    def __matmul__(self, other):
        return pbw_multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, UEAElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @property
    def degree(self) -> int:
        return max((len(k) for k in self.terms), default=0)

    @property
    def kazhdan_degree(self) -> int:
        return max((self.model.kazhdan(k) for k in self.terms), default=0)

    def parity(self):
        ps = {self.model.mono_parity(k) for k in self.terms}
        return ps.pop() if len(ps) == 1 else (None if not ps else "mixed")

    def in_p(self) -> bool:
        return all(all(self.model.in_p(g) for g in mono) for mono in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, v in sorted(self.terms.items()):
            word = "·".join(self.model.label(k) for k in mono) or "1"
            parts.append(f"{v}*{word}")
        return " + ".join(parts)


def pbw_multiply(a: UEAElement, b: UEAElement, max_degree: int | None = None) -> UEAElement:
    model = a.model
    if max_degree is not None and a.degree + b.degree > max_degree:
        raise TruncationError(f"product degree {a.degree + b.degree} exceeds the bound {max_degree}")
    out = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            cur = {ma: ca * cb}
            for g in mb:
                nxt = {}
                for mono, c in cur.items():
                    for mono2, c2 in model._mul_gen(mono, g):
                        nxt[mono2] = nxt.get(mono2, 0) + c * c2
                cur = {k: v for k, v in nxt.items() if v}
            for k, v in cur.items():
                out[k] = out.get(k, 0) + v
    return model.element(out)


def supercommutator(x: UEAElement, u: UEAElement) -> UEAElement:
    """[x, u] for homogeneous x and u."""
    px, pu = x.parity(), u.parity()
    sign = -1 if (px == 1 and pu == 1) else 1
    return pbw_multiply(x, u) - pbw_multiply(u, x).scale(sign)


def pr_projection(u: UEAElement) -> UEAElement:
    model = u.model
    out = {}
    for mono, c in u.terms.items():
        k = 0
        while k < len(mono) and model.in_p(mono[k]):
            k += 1
        val = c
        for g in mono[k:]:
            val *= model.chi[g]
            if not val:
                break
        if val:
            out[mono[:k]] = out.get(mono[:k], 0) + val
    return model.element(out)


# ---------------------------------------------------------------------------

@dataclass
class WchiBasisTrunc:
    model: UEAModel
    max_kazhdan: int
    elements: list
    kazhdan_degrees: list
    layer_dims: dict  # k -> dim of W_χ ∩ F_k (cumulative)


def _bracket_table(model: UEAModel, monos: list) -> dict:
    """Pr([x, μ]) for every m_neg basis element x and every monomial μ."""
    table = {}
    for x in range(model.n_p, len(model.pairs)):
        X = model.element({(x,): 1})
        for mono in monos:
            table[(x, mono)] = pr_projection(supercommutator(X, model.element({mono: 1}))).terms
    return table


def _solve_layer(model: UEAModel, monos: list, table: dict) -> list:
    """Basis (as dicts over monomials) of {u in span(monos) : Pr([x,u]) = 0 ∀x}."""
    var = {mono: k for k, mono in enumerate(monos)}
    eqs = {}
    for (x, mono), terms in table.items():
        if mono not in var:
            continue
        for tgt, v in terms.items():
            eqs.setdefault((x, tgt), {})[var[mono]] = v
    sols = _kernel_of_equations(list(eqs.values()), range(len(monos)))
    return [{monos[k]: v for k, v in s.items()} for s in sols]


def find_wchi(m: int, n: int, max_kazhdan: int, justify: str = "right", chi_sign: int = CHI_SIGN,
              weighting: str = "double", model: UEAModel | None = None) -> WchiBasisTrunc:
    """Echelon basis of W_χ ∩ F_D, solving even and odd parts separately."""
    model = model or UEAModel(m, n, justify, chi_sign, weighting)
    monos = model.p_monomials(max_kazhdan)
    table = _bracket_table(model, monos)
    elements, degs, layers = [], [], {}
    for k in range(max_kazhdan + 1):
        layer_total = 0
        for parity in (0, 1):
            sub = [mo for mo in monos if model.kazhdan(mo) <= k and model.mono_parity(mo) == parity]
            layer_total += len(_solve_layer(model, sub, table))
        layers[k] = layer_total
    for parity in (0, 1):
        sub = [mo for mo in monos if model.mono_parity(mo) == parity]
        for s in _solve_layer(model, sub, table):
            u = model.element(s)
            elements.append(u)
            degs.append(u.kazhdan_degree)
    order = sorted(range(len(elements)), key=lambda i: degs[i])
    return WchiBasisTrunc(model, max_kazhdan, [elements[i] for i in order],
                          [degs[i] for i in order], layers)


def is_wchi(u: UEAElement) -> bool:
    model = u.model
    if not u.in_p():
        return False
    for parity_part in _parity_parts(u):
        for x in range(model.n_p, len(model.pairs)):
            X = model.element({(x,): 1})
            if not pr_projection(supercommutator(X, parity_part)).is_zero():
                return False
    return True


def _parity_parts(u: UEAElement) -> list:
    parts = {}
    for mono, c in u.terms.items():
        parts.setdefault(u.model.mono_parity(mono), {})[mono] = c
    return [u.model.element(t) for _, t in sorted(parts.items())]


def hilbert_series(model: UEAModel, max_degree: int) -> list:
    """Coefficients of ∏_even (1 - t^w)^{-1} ∏_odd (1 + t^w) over the g_e basis."""
    from .glsuper import centralizer_combinatorial
    cb = centralizer_combinatorial(model.m, model.n, model.pyr.justify)
    poly = [0] * (max_degree + 1)
    poly[0] = 1
    for t in cb.triples:
        r = t[2]
        w = 2 * r + 2 if model.weighting == "double" else r + 2
        odd = (t[0] + t[1]) % 2
        if odd:
            poly = [poly[k] + (poly[k - w] if k >= w else 0) for k in range(max_degree + 1)]
        else:
            for k in range(w, max_degree + 1):
                poly[k] += poly[k - w]
    return poly


def wchi_hilbert_check(m: int, n: int, max_kazhdan: int, weighting: str = "double",
                       chi_sign: int = CHI_SIGN, justify: str = "right") -> tuple:
    """(ok, rows) with rows (k, layer dim from the solve, Hilbert coefficient)."""
    W = find_wchi(m, n, max_kazhdan, justify, chi_sign, weighting)
    hs = hilbert_series(W.model, max_kazhdan)
    rows = []
    prev = 0
    for k in range(max_kazhdan + 1):
        layer = W.layer_dims[k] - prev
        prev = W.layer_dims[k]
        rows.append((k, layer, hs[k]))
    return all(a == b for _, a, b in rows), rows, W


def product_closure(W: WchiBasisTrunc) -> tuple:
    """Products of pairs of basis elements whose degrees sum within the bound."""
    checked = bad = 0
    for i, u in enumerate(W.elements):
        for j, v in enumerate(W.elements):
            if W.kazhdan_degrees[i] + W.kazhdan_degrees[j] > W.max_kazhdan:
                continue
            checked += 1
            if not is_wchi(pbw_multiply(u, v)):
                bad += 1
    return checked, bad


# ---------------------------------------------------------------------------

def twisted_generator_image(model: UEAModel, k: int, space: TensorSpace, c: CharVector) -> ExactMatrix:
    """Φ_{d,c}(e_{a,b}) = φ_d(e_{a,b}) + δ_{ab} (-1)^{|a|} c_{col(a)}."""
    from .glsuper import elementary
    from .tensoract import phi_d
    a, b = model.pairs[k]
    op = phi_d(elementary(model.m, model.n, a, b), space.d, space).op
    if a == b:
        shift = c.at_col(model.pyr.col(a)) * (-1 if model.pyr.parity(a) else 1)
        if shift:
            op = op + ExactMatrix.identity(space.dim).scale(shift)
    return op


def uea_image(u: UEAElement, space: TensorSpace, c: CharVector | None = None) -> ExactMatrix:
    """The tensor representation of U(g) (twisted by η_c on the Cartan part)."""
    model = u.model
    if (space.m, space.n) != (model.m, model.n):
        raise ValueError("tensor space does not match the enveloping algebra")
    c = c if c is not None else CharVector.zero(model.n)
    gens = {}
    out = ExactMatrix.zero(space.dim)
    I = ExactMatrix.identity(space.dim)
    for mono, coeff in u.terms.items():
        P = I
        for k in mono:
            if k not in gens:
                gens[k] = twisted_generator_image(model, k, space, c)
            P = P @ gens[k]
        out = out + P.scale(coeff)
    return out


def phi_dc_image(u: UEAElement, space: TensorSpace, c: CharVector) -> TensorOperator:
    """Φ_{d,c} on U(p)."""
    if not u.in_p():
        raise ValueError("phi_dc_image is only defined on U(p)")
    return TensorOperator(uea_image(u, space, c))
