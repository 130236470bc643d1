"""Degenerate affine Hecke operators on the twisted tensor space V_c^{⊗d}.

Everything here is a *right* action.  An operator is stored as its row
matrix R with ``v_in . x = Σ_out R[in, out] v_out``; then the word ``a b``
acts by the matrix product ``R_a @ R_b`` and relations can be checked in the
order they are written.  ``as_linear`` returns the transpose, the matrix of
the same map in the column convention used by tensoract.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactlin import ExactMatrix, minimal_polynomial, poly_from_roots, q
from .tensoract import TensorOperator, TensorSpace, psi_d


@dataclass(frozen=True)
class CharVector:
    c: tuple

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(q(x) for x in self.c))

    @classmethod
    def parse(cls, text: str, n: int) -> "CharVector":
        try:
            vals = tuple(Fraction(x.strip()) for x in text.split(","))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad character vector {text!r}") from exc
        if len(vals) != n:
            raise ValueError(f"character vector {text!r} has length {len(vals)}, expected n={n}")
        return cls(vals)

    @classmethod
    def zero(cls, n: int) -> "CharVector":
        return cls((0,) * n)

    def __len__(self):
        return len(self.c)

    def at_col(self, col: int) -> Fraction:
        return self.c[col - 1]

    def __str__(self):
        return ",".join(str(x) for x in self.c)


def _check_c(space: TensorSpace, c: CharVector):
    if len(c) != space.n:
        raise ValueError(f"character vector must have length n={space.n}")


def omega_op(r: int, s: int, space: TensorSpace) -> TensorOperator:
    """Ω^{[r,s]} = Σ_{i,j} (-1)^{|j|} e_{ij} in slot r, e_{ji} in slot s (1-based slots)."""
    d = space.d
    if not 1 <= r < s <= d:
        raise ValueError(f"need 1 <= r < s <= d, got r={r}, s={s}, d={d}")
    N = space.N
    par = space.par
    out = ExactMatrix.zero(space.dim)
    for i in range(N):
        for j in range(N):
            fac = []
            for k in range(1, d + 1):
                if k == r:
                    fac.append((ExactMatrix(N, N, {(i, j): 1}), (par[i] + par[j]) % 2))
                elif k == s:
                    fac.append((ExactMatrix(N, N, {(j, i): 1}), (par[i] + par[j]) % 2))
                else:
                    fac.append((ExactMatrix.identity(N), 0))
            term = space.super_tensor(fac)
            out = out + (term.scale(-1) if par[j] else term)
    return TensorOperator(out, 0)


def _swap_sign(par, mi, a: int, b: int) -> int:
    """ν of the transposition (a b) on the parity vector of mi."""
    lo, hi = min(a, b), max(a, b)
    ps, pt = par[mi[lo]], par[mi[hi]]
    mid = sum(par[x] for x in mi[lo + 1:hi])
    return -1 if (ps * pt + (ps + pt) * mid) % 2 else 1


def hecke_x_closed(s: int, space: TensorSpace, c: CharVector, literal: bool = False) -> TensorOperator:
    """Row matrix of x_s (1-based) from the closed formula.

    v_i x_s = c_{col(i_s)} v_i + (-1)^{|i_s|} v_{i - ı_s}
              + Σ_{t<s, col(i_t) >= col(i_s)} ε_t v_{i(t s)}
              - Σ_{t>s, col(i_t) <  col(i_s)} ε_t v_{i(s t)}.

    By default ε_t is the super sign of the transposition (s t) on i.  With
    ``literal=True`` it is (-1)^{|i_t|} instead; that variant is kept only so
    it can be compared, it does not satisfy the Hecke relations.
    """
    d = space.d
    if not 1 <= s <= d:
        raise ValueError(f"need 1 <= s <= d, got s={s}")
    _check_c(space, c)
    pyr, par = space.pyr, space.par
    k = s - 1
    data = {}

    def add(r, col, v):
        row = data.setdefault(r, {})
        tot = row.get(col, 0) + v
        if tot:
            row[col] = tot
        else:
            row.pop(col, None)

    for mi in space.basis:
        r = space.index(mi)
        a = mi[k]
        ca = pyr.col(a)
        if c.at_col(ca):
            add(r, r, c.at_col(ca))
        p = pyr.pred(a)
        if p is not None:
            nb = list(mi)
            nb[k] = p
            add(r, space.index(nb), -1 if par[a] else 1)
        for t in range(d):
            if t == k:
                continue
            ct = pyr.col(mi[t])
            if t < k and ct >= ca:
                sgn = 1
            elif t > k and ct < ca:
                sgn = -1
            else:
                continue
            nb = list(mi)
            nb[t], nb[k] = nb[k], nb[t]
            eps = (-1 if par[mi[t]] else 1) if literal else _swap_sign(par, mi, t, k)
            add(r, space.index(nb), sgn * eps)
    data = {r: row for r, row in data.items() if row}
    return TensorOperator(ExactMatrix._wrap(space.dim, space.dim, data), 1)


def hecke_s(j: int, space: TensorSpace) -> TensorOperator:
    """Row matrix of s_j (1-based): the graded swap of slots j, j+1."""
    if not 1 <= j <= space.d - 1:
        raise ValueError(f"need 1 <= j <= d-1, got j={j}")
    sigma = list(range(space.d))
    sigma[j - 1], sigma[j] = sigma[j], sigma[j - 1]
    return TensorOperator(psi_d(sigma, space).op.T, 0)


def hecke_x_recursive(s: int, space: TensorSpace, c: CharVector, literal: bool = False) -> TensorOperator:
    """x_1 from the closed formula, then x_{j+1} = s_j x_j s_j + s_j."""
    if not 1 <= s <= space.d:
        raise ValueError(f"need 1 <= s <= d, got s={s}")
    X = hecke_x_closed(1, space, c, literal).op
    for j in range(1, s):
        S = hecke_s(j, space).op
        X = S @ X @ S + S
    return TensorOperator(X, 1)


@dataclass
class HeckeOperatorSet:
    space: TensorSpace
    c: CharVector
    x_ops: list
    s_ops: list
    relations: list = field(default_factory=list)

    @classmethod
    def build(cls, m: int, n: int, d: int, c: CharVector | None = None,
              justify: str = "right", check: bool = True) -> "HeckeOperatorSet":
        space = TensorSpace(m, n, d, justify)
        c = c if c is not None else CharVector.zero(n)
        _check_c(space, c)
        xs = [hecke_x_closed(s, space, c) for s in range(1, d + 1)]
        ss = [hecke_s(j, space) for j in range(1, d)]
        out = cls(space, c, xs, ss)
        if check:
            out.relations = check_dAHA_relations(out)
            bad = [r for r in out.relations if not r["pass"]]
            if bad:
                raise AssertionError(f"Hecke relations fail: {bad[0]['name']}")
        return out

    def as_linear(self) -> list:
        """All generators as column-convention matrices."""
        return [x.op.T for x in self.x_ops] + [s.op.T for s in self.s_ops]


def _max_norm(M: ExactMatrix) -> Fraction:
    return max((abs(v) for _, _, v in M.items()), default=Fraction(0))


def check_dAHA_relations(ops: HeckeOperatorSet) -> list:
    """Evaluate every defining relation; words act on the right, so a word
    a b ... is the row-matrix product in the same order."""
    X = [x.op for x in ops.x_ops]
    S = [s.op for s in ops.s_ops]
    d = len(X)
    dim = ops.space.dim
    I = ExactMatrix.identity(dim)
    out = []

    def rel(name, defect):
        out.append({"name": name, "pass": defect.is_zero(), "defect": str(_max_norm(defect))})

    for j in range(d - 1):
        rel(f"s{j+1}^2=1", S[j] @ S[j] - I)
        for k in range(j + 1, d - 1):
            if k == j + 1:
                rel(f"s{j+1}s{k+1}s{j+1}=s{k+1}s{j+1}s{k+1}",
                    S[j] @ S[k] @ S[j] - S[k] @ S[j] @ S[k])
            else:
                rel(f"s{j+1}s{k+1}=s{k+1}s{j+1}", S[j] @ S[k] - S[k] @ S[j])
    for i in range(d):
        for k in range(i + 1, d):
            rel(f"x{i+1}x{k+1}=x{k+1}x{i+1}", X[i] @ X[k] - X[k] @ X[i])
    for i in range(d):
        for j in range(d - 1):
            if i not in (j, j + 1):
                rel(f"x{i+1}s{j+1}=s{j+1}x{i+1}", X[i] @ S[j] - S[j] @ X[i])
    for j in range(d - 1):
        rel(f"x{j+2}s{j+1}-s{j+1}x{j+1}=1", X[j + 1] @ S[j] - S[j] @ X[j] - I)
    return out


def cyclotomic_minpoly(space: TensorSpace, c: CharVector) -> tuple:
    """(minimal polynomial of x_1, ∏(x - c_i), equal?) with coefficients low to high."""
    _check_c(space, c)
    mp = minimal_polynomial(hecke_x_closed(1, space, c).op)
    target = poly_from_roots(c.c)
    return mp, target, list(mp) == list(target)


def closed_vs_recursive(space: TensorSpace, c: CharVector, literal: bool = False) -> list:
    """Indices s where the closed formula and the recursion disagree."""
    return [s for s in range(1, space.d + 1)
            if hecke_x_closed(s, space, c, literal).op != hecke_x_recursive(s, space, c, literal).op]
