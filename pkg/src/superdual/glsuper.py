"""gl(m|n) as exact matrices: parity, nilpotents, supertrace, centralizers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactlin import ExactMatrix, Subspace, kernel, q
from .superindex import BAR_ROW, PLAIN_ROW, Pyramid


@dataclass(frozen=True)
class GlElement:
    m: int
    n: int
    matrix: ExactMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.m + self.n, self.m + self.n):
            raise ValueError("matrix size must be m+n")

    @property
    def size(self) -> int:
        return self.m + self.n

    def _block_parity(self, r: int, c: int) -> int:
        return int(r >= self.m) ^ int(c >= self.m)

    @property
    def parity(self):
        """0 (even), 1 (odd), None for the zero element, 'mixed' otherwise."""
        seen = {self._block_parity(r, c) for r, c, _ in self.matrix.items()}
        if not seen:
            return None
        if len(seen) == 1:
            return seen.pop()
        return "mixed"

    def homogeneous_parts(self) -> dict:
        parts = {0: {}, 1: {}}
        for r, c, v in self.matrix.items():
            parts[self._block_parity(r, c)][(r, c)] = v
        return {p: GlElement(self.m, self.n, ExactMatrix(self.size, self.size, d))
                for p, d in parts.items() if d}

    def __add__(self, other):
        return GlElement(self.m, self.n, self.matrix + other.matrix)

    def __sub__(self, other):
        return GlElement(self.m, self.n, self.matrix - other.matrix)

    def scale(self, s):
        return GlElement(self.m, self.n, self.matrix.scale(s))

    def __matmul__(self, other):
        return GlElement(self.m, self.n, self.matrix @ other.matrix)

    def bracket(self, other: "GlElement") -> "GlElement":
        """Super-commutator, extended bilinearly over homogeneous parts."""
        out = ExactMatrix.zero(self.size)
        for p, X in self.homogeneous_parts().items():
            for p2, Y in other.homogeneous_parts().items():
                sign = -1 if p * p2 else 1
                out = out + X.matrix @ Y.matrix - (Y.matrix @ X.matrix).scale(sign)
        return GlElement(self.m, self.n, out)


def elementary(m: int, n: int, a: int, b: int, coeff=1) -> GlElement:
    N = m + n
    return GlElement(m, n, ExactMatrix(N, N, {(a, b): coeff}))


def gl_basis(m: int, n: int) -> list:
    """Elementary matrices e_{a,b} in row-major order of positions."""
    N = m + n
    return [((a, b), elementary(m, n, a, b)) for a in range(N) for b in range(N)]


def chevalley_generators(m: int, n: int) -> list:
    """e_{a,a+1}, e_{a+1,a} and all e_{a,a}: they generate U(gl(m|n))."""
    N = m + n
    out = [elementary(m, n, a, a) for a in range(N)]
    for a in range(N - 1):
        out.append(elementary(m, n, a, a + 1))
        out.append(elementary(m, n, a + 1, a))
    return out


def supertrace(X: GlElement) -> Fraction:
    even = sum((X.matrix[i, i] for i in range(X.m)), Fraction(0))
    odd = sum((X.matrix[i, i] for i in range(X.m, X.size)), Fraction(0))
    return even - odd


# ---------------------------------------------------------------------------
# nilpotent data

def _check_partition(p: Sequence[int], total: int, name: str):
    if any(x <= 0 for x in p):
        raise ValueError(f"{name}: parts must be positive")
    if list(p) != sorted(p, reverse=True):
        raise ValueError(f"{name}: parts must be weakly decreasing")
    if sum(p) != total:
        raise ValueError(f"{name}: parts sum to {sum(p)}, expected {total}")


@dataclass(frozen=True)
class NilpotentData:
    lam: tuple
    mu: tuple
    element: GlElement

    @property
    def m(self):
        return self.element.m

    @property
    def n(self):
        return self.element.n

    @property
    def largest_block(self) -> int:
        return max(self.lam + self.mu, default=0)

    @property
    def is_regular(self) -> bool:
        return len(self.lam) == 1 and len(self.mu) == 1

    def label(self) -> str:
        return ",".join(map(str, self.lam)) + "|" + ",".join(map(str, self.mu))


def nilpotent_from_partitions(lam: Sequence[int], mu: Sequence[int]) -> NilpotentData:
    """Block-diagonal Jordan form: λ on the barred block, μ on the unbarred one.

    Blocks are upper triangular with 1's on the super-diagonal.
    """
    lam, mu = tuple(lam), tuple(mu)
    m, n = sum(lam), sum(mu)
    _check_partition(lam, m, "lambda")
    _check_partition(mu, n, "mu")
    entries = {}
    start = 0
    for blocks in (lam, mu):
        for b in blocks:
            for k in range(b - 1):
                entries[(start + k, start + k + 1)] = 1
            start += b
    N = m + n
    return NilpotentData(lam, mu, GlElement(m, n, ExactMatrix(N, N, entries)))


def regular_nilpotent(m: int, n: int) -> NilpotentData:
    if m > n:
        raise ValueError(f"m={m} > n={n}: swap the roles (gl(m|n) is isomorphic to gl(n|m))")
    if m < 1:
        raise ValueError("need m >= 1")
    return nilpotent_from_partitions((m,), (n,))


def parse_partitions(text: str) -> tuple:
    """Parse ``"2|1,1"`` into ((2,), (1, 1))."""
    if text.count("|") != 1:
        raise ValueError(f"partition pair {text!r} must contain exactly one '|'")
    left, right = text.split("|")

    def parts(s):
        s = s.strip()
        if not s:
            return ()
        try:
            return tuple(int(x) for x in s.split(","))
        except ValueError as exc:
            raise ValueError(f"bad partition {s!r}") from exc

    lam, mu = parts(left), parts(right)
    _check_partition(lam, sum(lam), "lambda")
    _check_partition(mu, sum(mu), "mu")
    return lam, mu


# ---------------------------------------------------------------------------
# centralizers

def centralizer_oracle(nilp: NilpotentData) -> Subspace:
    """ker(X -> eX - Xe) on the full (m+n)^2 matrix space.

    e is even, so the super-commutator with e is the ordinary commutator.
    """
    e = nilp.element.matrix
    N = e.rows
    eT = e.T
    data = {}
    for a in range(N):
        for b in range(N):
            var = a * N + b
            # (eX)[r,b] = sum_a e[r,a] X[a,b]
            for r, v in eT.row(a).items():
                data[(r * N + b, var)] = data.get((r * N + b, var), 0) + v
            # (Xe)[a,c] = sum_b X[a,b] e[b,c]
            for c, v in e.row(b).items():
                data[(a * N + c, var)] = data.get((a * N + c, var), 0) - v
    return kernel(ExactMatrix(N * N, N * N, data))


@dataclass(frozen=True)
class CentralizerBasis:
    pyramid: Pyramid
    triples: tuple
    elements: tuple  # GlElement per triple
    col_degrees: tuple
    kazhdan_degrees: tuple  # r + 2, the col-grading convention

    def span(self) -> Subspace:
        N = self.pyramid.size
        return Subspace(N * N, [E.matrix.flat() for E in self.elements])

    def __len__(self):
        return len(self.elements)


def toeplitz_element(pyr: Pyramid, triple) -> GlElement:
    N = pyr.size
    return GlElement(pyr.m, pyr.n, ExactMatrix(N, N, {hk: 1 for hk in pyr.pairs_for(triple)}))


def centralizer_combinatorial(m: int, n: int, justify: str = "right") -> CentralizerBasis:
    """e_{i,j;r} for (i,j,r) in K, checked against ker(ad e)."""
    pyr = Pyramid(m, n, justify)
    triples = tuple(pyr.triples)
    elems = tuple(toeplitz_element(pyr, t) for t in triples)
    basis = CentralizerBasis(pyr, triples, elems, tuple(t[2] for t in triples),
                             tuple(t[2] + 2 for t in triples))
    oracle = centralizer_oracle(regular_nilpotent(m, n))
    if basis.span() != oracle or len(elems) != oracle.dim:
        raise AssertionError(f"combinatorial centralizer basis disagrees with ker(ad e) at ({m},{n})")
    e = regular_nilpotent(m, n).element.matrix
    for E in elems:
        if not (e @ E.matrix - E.matrix @ e).is_zero():
            raise AssertionError("basis element does not commute with e")
    return basis


def centralizer_dimension_formula(lam: Sequence[int], mu: Sequence[int]) -> int:
    """dim of the centralizer of a Jordan matrix with blocks λ ∪ μ: Σ min(p, q)."""
    parts = list(lam) + list(mu)
    return sum(min(a, b) for a in parts for b in parts)


def grading_degree(pyr: Pyramid, a: int, b: int) -> int:
    """deg e_{a,b} = col(b) - col(a)."""
    return pyr.col(b) - pyr.col(a)


@dataclass(frozen=True)
class GradedDecomposition:
    pyramid: Pyramid
    p: tuple
    h: tuple
    m_neg: tuple
    chi: dict = field(hash=False)


def parity_twist(m: int, n: int) -> GlElement:
    """℘ = diag((-1)^{|i|}): +1 on barred, -1 on unbarred indices."""
    N = m + n
    return GlElement(m, n, ExactMatrix(N, N, {(a, a): (1 if a < m else -1) for a in range(N)}))


def chi_value(pyr: Pyramid, a: int, b: int, sign: int = 1, form: str = "str") -> Fraction:
    """χ(e_{a,b}) for the regular e, times an overall sign.

    ``form="str"`` gives str(e · e_{a,b}); ``form="wp"`` gives str(℘ e · e_{a,b}),
    which is the ordinary trace tr(e · e_{a,b}).
    """
    if form not in ("str", "wp"):
        raise ValueError("form must be 'str' or 'wp'")
    e = regular_nilpotent(pyr.m, pyr.n).element
    if form == "wp":
        e = parity_twist(pyr.m, pyr.n) @ e
    X = elementary(pyr.m, pyr.n, a, b)
    return sign * supertrace(e @ X)


def graded_decomposition(m: int, n: int, justify: str = "right", chi_sign: int = 1,
                         chi_form: str = "str") -> GradedDecomposition:
    pyr = Pyramid(m, n, justify)
    N = pyr.size
    p, h, mneg = [], [], []
    for a in range(N):
        for b in range(N):
            deg = grading_degree(pyr, a, b)
            if deg >= 0:
                p.append((a, b))
                if deg == 0:
                    h.append((a, b))
            else:
                mneg.append((a, b))
    chi = {}
    for (a, b) in mneg:
        v = chi_value(pyr, a, b, chi_sign, chi_form)
        if v:
            chi[(a, b)] = v
    return GradedDecomposition(pyr, tuple(p), tuple(h), tuple(mneg), chi)


__all__ = [
    "GlElement", "NilpotentData", "CentralizerBasis", "GradedDecomposition",
    "elementary", "gl_basis", "chevalley_generators", "supertrace",
    "nilpotent_from_partitions", "regular_nilpotent", "parse_partitions",
    "centralizer_oracle", "centralizer_combinatorial", "centralizer_dimension_formula",
    "toeplitz_element", "grading_degree", "graded_decomposition", "chi_value", "parity_twist",
    "BAR_ROW", "PLAIN_ROW", "q",
]
