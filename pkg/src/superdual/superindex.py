"""Index combinatorics for gl(m|n): I(m|n), pyramid coordinates, signs.

Indices are handled internally as positions ``0..m+n-1`` in the total order
1̄ < ... < m̄ < 1 < ... < n, so barred ``j̄`` sits at ``j-1`` and unbarred ``j``
at ``m+j-1``.  Permutations are tuples in one-line notation on ``0..d-1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

BAR_ROW = 0   # the row of barred (even) indices
PLAIN_ROW = 1  # the row of unbarred (odd) indices
ROW_LABELS = {BAR_ROW: "1̄", PLAIN_ROW: "1"}


@dataclass(frozen=True, order=True)
class SuperIndex:
    """An element of I(m|n); ``barred`` indices are even, the others odd."""

    barred: bool
    value: int

    @property
    def parity(self) -> int:
        return 0 if self.barred else 1

    def __str__(self):
        return f"{self.value}̄" if self.barred else str(self.value)

    @classmethod
    def parse(cls, text: str) -> "SuperIndex":
        text = text.strip()
        if text.endswith("̄") or text.endswith("'") or text.startswith("~"):
            return cls(True, int(text.strip("̄'~")))
        return cls(False, int(text))


class Pyramid:
    """Two-row pyramid for the regular nilpotent of gl(m|n), m <= n.

    Unbarred ``j`` sits in column ``j``; barred ``j̄`` in column ``n - m + j``
    (the short row is right-justified).  ``justify="left"`` puts ``j̄`` in
    column ``j`` instead; it is kept only so the alternative can be tested.
    """

    def __init__(self, m: int, n: int, justify: str = "right"):
        if m < 1 or n < 1:
            raise ValueError("need m, n >= 1")
        if m > n:
            raise ValueError(f"m={m} > n={n}: swap the roles (gl(m|n) is isomorphic to gl(n|m))")
        if justify not in ("right", "left"):
            raise ValueError("justify must be 'right' or 'left'")
        self.m, self.n, self.justify = m, n, justify
        self.size = m + n
        shift = n - m if justify == "right" else 0
        self._col = [shift + j + 1 for j in range(m)] + [j + 1 for j in range(n)]
        self._par = [0] * m + [1] * n
        self._row = [BAR_ROW] * m + [PLAIN_ROW] * n

    def __repr__(self):
        return f"Pyramid(m={self.m}, n={self.n}, justify={self.justify!r})"

    def __eq__(self, other):
        return isinstance(other, Pyramid) and (self.m, self.n, self.justify) == (
            other.m, other.n, other.justify)

    def __hash__(self):
        return hash((self.m, self.n, self.justify))

    # single indices

    def index(self, pos: int) -> SuperIndex:
        if pos < self.m:
            return SuperIndex(True, pos + 1)
        return SuperIndex(False, pos - self.m + 1)

    def position(self, idx: SuperIndex) -> int:
        if idx.barred:
            if not 1 <= idx.value <= self.m:
                raise ValueError(f"{idx} not in I({self.m}|{self.n})")
            return idx.value - 1
        if not 1 <= idx.value <= self.n:
            raise ValueError(f"{idx} not in I({self.m}|{self.n})")
        return self.m + idx.value - 1

    def label(self, pos: int) -> str:
        return str(self.index(pos))

    def parity(self, pos: int) -> int:
        return self._par[pos]

    @property
    def parities(self) -> list:
        return list(self._par)

    def row(self, pos: int) -> int:
        return self._row[pos]

    def col(self, pos: int) -> int:
        return self._col[pos]

    def pred(self, pos: int):
        """Left neighbour in the same row, or None for 1̄ and 1."""
        if pos == 0 or pos == self.m:
            return None
        return pos - 1

    def succ(self, pos: int):
        if pos == self.m - 1 or pos == self.size - 1:
            return None
        return pos + 1

    def row_members(self, row: int) -> list:
        return list(range(self.m)) if row == BAR_ROW else list(range(self.m, self.size))

    def at(self, row: int, col: int):
        for p in self.row_members(row):
            if self._col[p] == col:
                return p
        return None

    # pairs and triples

    def upsilon(self, h: int, k: int) -> tuple:
        """(row(h), row(k), col(k) - col(h))."""
        return (self._row[h], self._row[k], self._col[k] - self._col[h])

    def pairs_for(self, triple: tuple) -> list:
        i, j, r = triple
        return [(h, k) for h in self.row_members(i) for k in self.row_members(j)
                if self._col[k] - self._col[h] == r]

    def admissible(self, triple: tuple) -> bool:
        return triple[2] >= 0 and bool(self.pairs_for(triple))

    def candidate_triples(self) -> list:
        """All (i, j, r) with r >= 0 realised by at least one pair."""
        out = set()
        for h in range(self.size):
            for k in range(self.size):
                t = self.upsilon(h, k)
                if t[2] >= 0:
                    out.add(t)
        return sorted(out)

    @cached_property
    def triples(self) -> list:
        """K: admissible triples whose Toeplitz sum commutes with the regular e.

        The check is done directly on matrices so this set never relies on a
        hand-copied range; glsuper cross-validates it against ker(ad e).
        """
        out = []
        for t in self.candidate_triples():
            if self._toeplitz_commutes(t):
                out.append(t)
        return out

    def _toeplitz_commutes(self, triple) -> bool:
        pairs = set(self.pairs_for(triple))
        # e = sum over both rows of e_{p, succ(p)}; compare (eE)[a,b] and (Ee)[a,b]
        eE = {}
        Ee = {}
        for (h, k) in pairs:
            p = self.pred(h)
            if p is not None:  # e_{p,h} e_{h,k} = e_{p,k}
                eE[(p, k)] = eE.get((p, k), 0) + 1
            s = self.succ(k)
            if s is not None:  # e_{h,k} e_{k,s} = e_{h,s}
                Ee[(h, s)] = Ee.get((h, s), 0) + 1
        return eE == Ee

    @cached_property
    def J(self) -> list:
        """Pairs (h, k) whose triple lies in K (the support of the ξ basis)."""
        K = set(self.triples)
        return [(h, k) for h in range(self.size) for k in range(self.size)
                if self.upsilon(h, k) in K]

    @cached_property
    def J_representatives(self) -> dict:
        """One pair per triple of K (leftmost source in its row)."""
        reps = {}
        for t in self.triples:
            pairs = sorted(self.pairs_for(t), key=lambda hk: (self._col[hk[0]], hk))
            reps[t] = pairs[0]
        return reps

    # multi-indices

    def multi_indices(self, d: int) -> list:
        return list(itertools.product(range(self.size), repeat=d))

    def flat_index(self, mi: Sequence[int]) -> int:
        out = 0
        for a in mi:
            out = out * self.size + a
        return out

    def eps(self, mi: Sequence[int]) -> tuple:
        return tuple(self._par[a] for a in mi)

    def Upsilon(self, I: Sequence[int], Jm: Sequence[int]) -> tuple:
        return tuple(self.upsilon(h, k) for h, k in zip(I, Jm))


# ---------------------------------------------------------------------------
# signs and permutations

def alpha(eps: Sequence[int], delta: Sequence[int]) -> int:
    """prod_{s<t} (-1)^(delta_s eps_t)."""
    if len(eps) != len(delta):
        raise ValueError("alpha needs vectors of equal length")
    total = 0
    seen = 0  # running sum of delta_s for s < t
    for t in range(len(eps)):
        total += seen * eps[t]
        seen += delta[t]
    return -1 if total % 2 else 1


def nu(eps: Sequence[int], sigma: Sequence[int]) -> int:
    """prod over s<t with sigma^-1(s) > sigma^-1(t) of (-1)^(eps_s eps_t)."""
    inv = inverse(sigma)
    d = len(sigma)
    if len(eps) != d:
        raise ValueError("nu needs a parity vector of length d")
    total = 0
    for s in range(d):
        if not eps[s]:
            continue
        for t in range(s + 1, d):
            if eps[t] and inv[s] > inv[t]:
                total += 1
    return -1 if total % 2 else 1


def identity_perm(d: int) -> tuple:
    return tuple(range(d))


def inverse(sigma: Sequence[int]) -> tuple:
    inv = [0] * len(sigma)
    for k, s in enumerate(sigma):
        inv[s] = k
    return tuple(inv)


def compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple:
    """The product στ for the right action: (i.σ).τ = i.(στ)."""
    return tuple(sigma[tau[k]] for k in range(len(tau)))


def transposition(d: int, a: int, b: int) -> tuple:
    p = list(range(d))
    p[a], p[b] = p[b], p[a]
    return tuple(p)


def simple(d: int, j: int) -> tuple:
    """s_j swapping positions j and j+1 (0-based j)."""
    return transposition(d, j, j + 1)


def permute(seq: Sequence, sigma: Sequence[int]) -> tuple:
    """Right action i.σ = (i_σ(1), ..., i_σ(d))."""
    if len(seq) != len(sigma):
        raise ValueError("length mismatch")
    return tuple(seq[s] for s in sigma)


def all_perms(d: int) -> list:
    return list(itertools.permutations(range(d)))


def cycles(sigma: Sequence[int]) -> list:
    """Disjoint cycles (i, σ(i), σ²(i), ...) including fixed points."""
    seen = set()
    out = []
    for start in range(len(sigma)):
        if start in seen:
            continue
        cyc = []
        k = start
        while k not in seen:
            seen.add(k)
            cyc.append(k)
            k = sigma[k]
        out.append(tuple(cyc))
    return out


def orbit_representatives(domain: Iterable[Sequence], d: int) -> dict:
    """Diagonal S_d orbits on d-tuples of atoms.

    Returns ``{rep: [(element, sigma), ...]}`` where ``element = rep.sigma``
    and every element of the domain appears exactly once.  The representative
    is the sorted tuple, so two elements share an orbit iff they are
    rearrangements of each other.
    """
    perms = all_perms(d)
    out = {}
    for x in domain:
        x = tuple(x)
        rep = tuple(sorted(x))
        for sigma in perms:
            if permute(rep, sigma) == x:
                out.setdefault(rep, []).append((x, sigma))
                break
        else:  # pragma: no cover - sorting always yields a rearrangement
            raise AssertionError("no permutation maps the representative to the element")
    return out
