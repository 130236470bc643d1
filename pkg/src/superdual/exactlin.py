"""Exact rational linear algebra on sparse matrices.

Everything here works over Q with :class:`fractions.Fraction` scalars.  Dense
row reduction is delegated to FLINT (``flint.fmpq_mat``), which is exact; the
sparse bookkeeping, the splitting of systems into independent components and
the closure/commutant drivers live in Python.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import flint

ExactScalar = Fraction
Vector = dict  # sparse vector: {coordinate: Fraction}


def q(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to an exact scalar."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, flint.fmpq):
        return Fraction(int(x.p), int(x.q))
    return Fraction(x)


def _to_flint(x):
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x.numerator)
        return flint.fmpq(x.numerator, x.denominator)
    return x


class ExactMatrix:
    """Sparse exact matrix, stored as ``{row: {col: value}}`` with no zeros.

    Instances are treated as immutable values once built.
    """

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, rows: int, cols: int, data=None):
        self.rows = rows
        self.cols = cols
        clean = {}
        if data:
            items = data.items() if isinstance(data, Mapping) else data
            for key, val in items:
                if isinstance(key, tuple):
                    r, c = key
                    if not (0 <= r < rows and 0 <= c < cols):
                        raise IndexError(f"entry {key} outside {rows}x{cols}")
                    v = q(val)
                    if v:
                        row = clean.setdefault(r, {})
                        v = row.get(c, 0) + v
                        if v:
                            row[c] = v
                        else:
                            del row[c]
                            if not row:
                                del clean[r]
                else:
                    r = key
                    for c, x in val.items():
                        v = q(x)
                        if v:
                            clean.setdefault(r, {})[c] = v
        self._data = clean
        self._hash = None

    # construction helpers

    @classmethod
    def _wrap(cls, rows, cols, data):
        m = cls.__new__(cls)
        m.rows, m.cols, m._data, m._hash = rows, cols, data, None
        return m

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        one = Fraction(1)
        return cls._wrap(n, n, {i: {i: one} for i in range(n)})

    @classmethod
    def zero(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        return cls._wrap(rows, rows if cols is None else cols, {})

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        return cls(nr, nc, {(i, j): x for i, r in enumerate(rows)
                            for j, x in enumerate(r) if x})

    @classmethod
    def unit(cls, n: int, r: int, c: int) -> "ExactMatrix":
        return cls._wrap(n, n, {r: {c: Fraction(1)}})

    @classmethod
    def from_flat(cls, n: int, vec: Mapping[int, Fraction]) -> "ExactMatrix":
        data = {}
        for k, v in vec.items():
            if v:
                data.setdefault(k // n, {})[k % n] = v
        return cls._wrap(n, n, data)

    # access

    def __getitem__(self, key) -> Fraction:
        r, c = key
        return self._data.get(r, {}).get(c, Fraction(0))

    def row(self, r: int) -> dict:
        return self._data.get(r, {})

    def items(self):
        for r, row in self._data.items():
            for c, v in row.items():
                yield r, c, v

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._data.values())

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not self._data

    def is_diagonal(self) -> bool:
        return all(len(row) == 1 and r in row for r, row in self._data.items())

    def diagonal(self) -> list:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def to_dense(self) -> list:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for r, c, v in self.items():
            out[r][c] = v
        return out

    def flat(self) -> dict:
        """Row-major flattening into a sparse vector of length rows*cols."""
        n = self.cols
        return {r * n + c: v for r, row in self._data.items() for c, v in row.items()}

    # arithmetic

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        data = {r: dict(row) for r, row in self._data.items()}
        for r, row in other._data.items():
            tgt = data.setdefault(r, {})
            for c, v in row.items():
                s = tgt.get(c, 0) + v
                if s:
                    tgt[c] = s
                else:
                    tgt.pop(c, None)
            if not tgt:
                del data[r]
        return ExactMatrix._wrap(self.rows, self.cols, data)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix._wrap(self.rows, self.cols,
                                 {r: {c: -v for c, v in row.items()}
                                  for r, row in self._data.items()})

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def scale(self, s) -> "ExactMatrix":
        s = q(s)
        if not s:
            return ExactMatrix.zero(self.rows, self.cols)
        return ExactMatrix._wrap(self.rows, self.cols,
                                 {r: {c: s * v for c, v in row.items()}
                                  for r, row in self._data.items()})

    def __mul__(self, s) -> "ExactMatrix":
        return self.scale(s)

    __rmul__ = __mul__

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        odata = other._data
        data = {}
        for r, row in self._data.items():
            acc = {}
            for k, a in row.items():
                orow = odata.get(k)
                if orow is None:
                    continue
                for c, b in orow.items():
                    acc[c] = acc.get(c, 0) + a * b
            acc = {c: v for c, v in acc.items() if v}
            if acc:
                data[r] = acc
        return ExactMatrix._wrap(self.rows, other.cols, data)

    def __pow__(self, k: int) -> "ExactMatrix":
        if k < 0 or not self.is_square():
            raise ValueError("only non-negative powers of square matrices")
        out = ExactMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    @property
    def T(self) -> "ExactMatrix":
        data = {}
        for r, c, v in self.items():
            data.setdefault(c, {})[r] = v
        return ExactMatrix._wrap(self.cols, self.rows, data)

    def commutator(self, other: "ExactMatrix") -> "ExactMatrix":
        return self @ other - other @ self

    def max_abs(self) -> Fraction:
        return max((abs(v) for _, _, v in self.items()), default=Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols,
                               frozenset((r, c, v) for r, c, v in self.items())))
        return self._hash

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


# ---------------------------------------------------------------------------
# row reduction

class _DSU:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        root = x
        while p != root:
            root = p
            p = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _components(vectors: Sequence[Mapping]) -> list:
    """Group vectors whose supports are linked; returns lists of indices."""
    dsu = _DSU()
    for v in vectors:
        it = iter(v)
        first = next(it, None)
        if first is None:
            continue
        dsu.find(first)
        for k in it:
            dsu.union(first, k)
    groups = {}
    for i, v in enumerate(vectors):
        if v:
            groups.setdefault(dsu.find(next(iter(v))), []).append(i)
    return list(groups.values())


def _dense(vectors: Sequence[Mapping], cols: Sequence[int]):
    cm = {c: k for k, c in enumerate(cols)}
    w = len(cols)
    flat = [0] * (len(vectors) * w)
    for i, v in enumerate(vectors):
        base = i * w
        for c, x in v.items():
            flat[base + cm[c]] = _to_flint(x)
    return flint.fmpq_mat(len(vectors), w, flat)


def _undense(M, cols: Sequence[int], nrows: int | None = None) -> list:
    ent = M.entries()
    w = M.ncols()
    nr = M.nrows() if nrows is None else nrows
    out = []
    for i in range(nr):
        base = i * w
        row = {}
        for k in range(w):
            x = ent[base + k]
            if x:
                row[cols[k]] = Fraction(int(x.p), int(x.q))
        out.append(row)
    return out


def _normalize(v: Mapping) -> dict:
    p = min(v)
    lead = v[p]
    if lead == 1:
        return dict(v)
    return {k: x / lead for k, x in v.items()}


def rref(vectors: Iterable[Mapping]) -> list:
    """Canonical reduced echelon basis of the span of sparse vectors.

    Rows are returned sorted by pivot (the smallest coordinate of each row),
    each pivot entry equal to 1 and every pivot column zero in all other rows.
    """
    vecs = [v for v in vectors if v]
    out = []
    for group in _components(vecs):
        if len(group) == 1:
            out.append(_normalize(vecs[group[0]]))
            continue
        sub = [vecs[i] for i in group]
        cols = sorted(set().union(*sub))
        R, rank = _dense(sub, cols).rref()
        out.extend(_undense(R, cols, rank))
    out.sort(key=min)
    return out


class Subspace:
    """A subspace of Q^ambient_dim held by its canonical reduced echelon basis."""

    __slots__ = ("ambient_dim", "basis", "_key", "_pivots")

    def __init__(self, ambient_dim: int, basis: Sequence[Mapping] = (), *, canonical=False):
        self.ambient_dim = ambient_dim
        rows = list(basis) if canonical else rref(basis)
        for r in rows:
            if r and not (0 <= min(r) and max(r) < ambient_dim):
                raise ValueError("vector outside the ambient space")
        self.basis = tuple(rows)
        self._key = None
        self._pivots = None

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, (), canonical=True)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        one = Fraction(1)
        return cls(n, [{i: one} for i in range(n)], canonical=True)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    @property
    def pivots(self) -> dict:
        if self._pivots is None:
            self._pivots = {min(r): r for r in self.basis}
        return self._pivots

    def key(self):
        if self._key is None:
            self._key = tuple(tuple(sorted(r.items())) for r in self.basis)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return subspace_equal(self, other)

    def __hash__(self):
        return hash((self.ambient_dim, self.key()))

    def residual(self, v: Mapping) -> dict:
        """v minus its projection along the echelon basis (zero iff v is inside)."""
        out = dict(v)
        piv = self.pivots
        for p in sorted(k for k in v if k in piv):
            c = out.get(p)
            if not c:
                continue
            for k, a in piv[p].items():
                s = out.get(k, 0) - c * a
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    def contains(self, v: Mapping) -> bool:
        return not self.residual(v)

    def contains_matrix(self, M: ExactMatrix) -> bool:
        return self.contains(M.flat())

    def issubset(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    def matrices(self, n: int | None = None) -> list:
        """Basis vectors reshaped as n x n matrices (ambient must be n*n)."""
        if n is None:
            n = int(round(self.ambient_dim ** 0.5))
        if n * n != self.ambient_dim:
            raise ValueError("ambient dimension is not a square")
        return [ExactMatrix.from_flat(n, v) for v in self.basis]

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def span(vectors: Iterable[Mapping], ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, list(vectors))


def subspace_equal(A: Subspace, B: Subspace) -> bool:
    if A.ambient_dim != B.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {A.ambient_dim} vs {B.ambient_dim}")
    return A.key() == B.key()


# ---------------------------------------------------------------------------
# kernels

def _kernel_of_equations(equations: Sequence[Mapping], variables: Iterable[int]) -> list:
    """Null space of a sparse system restricted to ``variables``.

    The system is split into independent blocks (variables linked through a
    shared equation) and each block is reduced exactly on its own.
    """
    eqs = [e for e in equations if e]
    out = []
    seen = set()
    for group in _components(eqs):
        sub = [eqs[i] for i in group]
        cols = sorted(set().union(*sub))
        seen.update(cols)
        R, rank = _dense(sub, cols).rref()
        rows = _undense(R, cols, rank)
        pivots = {min(r): r for r in rows}
        free = [c for c in cols if c not in pivots]
        if not free:
            continue
        kern = []
        for f in free:
            v = {f: Fraction(1)}
            for p, r in pivots.items():
                a = r.get(f)
                if a:
                    v[p] = -a
            kern.append(v)
        out.extend(rref(kern))
    one = Fraction(1)
    for x in variables:
        if x not in seen:
            out.append({x: one})
    out.sort(key=min)
    return out


def kernel(M: ExactMatrix) -> Subspace:
    """Right null space {v : M v = 0} as a canonical subspace of Q^cols."""
    eqs = [dict(M.row(r)) for r in range(M.rows) if M.row(r)]
    return Subspace(M.cols, _kernel_of_equations(eqs, range(M.cols)), canonical=True)


def rank(M: ExactMatrix) -> int:
    return M.cols - kernel(M).dim


# ---------------------------------------------------------------------------
# incremental spans

class SpanBuilder:
    """Grow a span batch by batch, reporting which candidates were new."""

    def __init__(self):
        self.rows: list = []
        self._pivots: dict = {}

    @property
    def dim(self) -> int:
        return len(self.rows)

    def extend(self, candidates: Sequence[Mapping]) -> list:
        """Add candidates greedily in order; return indices of those kept."""
        cands = [(i, v) for i, v in enumerate(candidates) if v]
        if not cands:
            return []
        if len(cands) == 1 and not self.rows:
            i, v = cands[0]
            self.rows = [_normalize(v)]
            self._pivots = {min(self.rows[0]): self.rows[0]}
            return [i]
        cols_set = set()
        for _, v in cands:
            cols_set.update(v)
        pivots = self._pivots
        touched = [r for p, r in pivots.items() if p in cols_set]
        for r in touched:
            cols_set.update(r)
        cols = sorted(cols_set)
        C = _dense([v for _, v in cands], cols)
        if touched:
            piv_order = [min(r) for r in touched]
            R = _dense(touched, cols)
            cm = {c: k for k, c in enumerate(cols)}
            P = flint.fmpq_mat(len(cands), len(touched),
                               [C[i, cm[p]] for i in range(len(cands)) for p in piv_order])
            C = C - P * R
        T, rk = C.transpose().rref()
        if rk == 0:
            return []
        keep = []
        ent = T.entries()
        w = T.ncols()
        for i in range(rk):
            base = i * w
            for k in range(w):
                if ent[base + k]:
                    keep.append(k)
                    break
        new_vecs = _undense(C, cols)
        fresh = [new_vecs[k] for k in keep]
        fresh_rref = rref(fresh)
        # back-substitute the new pivots into the old rows
        new_piv = {min(r): r for r in fresh_rref}
        updated = []
        for r in self.rows:
            hits = [p for p in r if p in new_piv]
            if hits:
                r = dict(r)
                for p in hits:
                    c = r.get(p)
                    if not c:
                        continue
                    for k2, a in new_piv[p].items():
                        s = r.get(k2, 0) - c * a
                        if s:
                            r[k2] = s
                        else:
                            r.pop(k2, None)
            updated.append(r)
        self.rows = sorted(updated + fresh_rref, key=min)
        self._pivots = {min(r): r for r in self.rows}
        return [cands[k][0] for k in keep]

    def subspace(self, ambient_dim: int) -> Subspace:
        return Subspace(ambient_dim, self.rows, canonical=True)


# ---------------------------------------------------------------------------
# commutants and closures

def _check_square_family(gens: Sequence[ExactMatrix], size: int | None) -> int:
    n = size
    for g in gens:
        if not g.is_square():
            raise ValueError("generators must be square")
        if n is None:
            n = g.rows
        elif g.rows != n:
            raise ValueError(f"generator size {g.rows} does not match {n}")
    if n is None:
        raise ValueError("size is required when no generators are given")
    return n


def _diagonal_classes(diags: Sequence[ExactMatrix], n: int) -> list:
    """Joint-eigenvalue label of each basis vector under diagonal generators."""
    return [tuple(D[i, i] for D in diags) for i in range(n)]


def commutant(gens: Sequence[ExactMatrix], size: int | None = None) -> Subspace:
    """All X with XG = GX for every generator, as a subspace of Q^(N*N).

    Diagonal generators are used first: they force X to respect their joint
    eigenspaces, which shrinks the unknowns before the remaining equations are
    assembled.
    """
    n = _check_square_family(gens, size)
    diags = [g for g in gens if g.is_diagonal()]
    others = [g for g in gens if not g.is_diagonal()]
    if diags:
        labels = _diagonal_classes(diags, n)
        by_label = {}
        for i, lab in enumerate(labels):
            by_label.setdefault(lab, []).append(i)
        allowed = [r * n + c for members in by_label.values()
                   for r in members for c in members]
    else:
        labels = None
        allowed = range(n * n)
    allowed_set = set(allowed) if diags else None

    def ok(r, c):
        return labels is None or labels[r] == labels[c]

    equations = []
    for G in others:
        GT = G.T
        eqs = {}
        # (XG)[r,c] = sum_k X[r,k] G[k,c]
        for var in allowed:
            r, k = divmod(var, n)
            for c, g in G.row(k).items():
                e = eqs.setdefault(r * n + c, {})
                s = e.get(var, 0) + g
                if s:
                    e[var] = s
                else:
                    del e[var]
            # -(GX)[r',c'] with X[k',c'] = this var: r' ranges over column k' of G
            kk, c2 = r, k  # reinterpret var as X[kk, c2]
            for r2, g in GT.row(kk).items():
                e = eqs.setdefault(r2 * n + c2, {})
                s = e.get(var, 0) - g
                if s:
                    e[var] = s
                else:
                    del e[var]
        equations.extend(e for e in eqs.values() if e)
    basis = _kernel_of_equations(equations, allowed)
    return Subspace(n * n, basis, canonical=True)


def algebra_closure(gens: Sequence[ExactMatrix], include_identity: bool = True,
                    size: int | None = None) -> Subspace:
    """Span of all words in the generators (and the identity if requested).

    Words are explored breadth first by right multiplication; a candidate is
    kept only if it enlarges the span, which certifies closure once no
    frontier is left.  When diagonal generators split the space into joint
    eigenspaces and the algebra contains the corresponding projections, the
    search runs piece by piece (P_a A P_b), which is the same span.
    """
    n = _check_square_family(gens, size)
    blocks = _block_plan(gens, n, include_identity)
    if blocks is not None:
        return _closure_blocks(n, *blocks)
    return _closure_plain(gens, n, include_identity)


def _closure_plain(gens, n, include_identity) -> Subspace:
    builder = SpanBuilder()
    start = [ExactMatrix.identity(n)] if include_identity else [g for g in gens if not g.is_zero()]
    kept = builder.extend([m.flat() for m in start])
    frontier = [start[i] for i in kept]
    while frontier:
        cands = []
        for X in frontier:
            for G in gens:
                Y = X @ G
                if not Y.is_zero():
                    cands.append(Y)
        kept = builder.extend([Y.flat() for Y in cands])
        frontier = [cands[i] for i in kept]
    return builder.subspace(n * n)


def _block_plan(gens, n, include_identity):
    diags = [g for g in gens if g.is_diagonal()]
    if not diags:
        return None
    labels = _diagonal_classes(diags, n)
    zero_label = tuple(Fraction(0) for _ in diags)
    if not include_identity and zero_label in labels:
        return None
    classes = {}
    for i, lab in enumerate(labels):
        classes.setdefault(lab, []).append(i)
    cls_of = {}
    for k, (lab, members) in enumerate(sorted(classes.items())):
        for i in members:
            cls_of[i] = k
    ncls = len(classes)
    members = [[] for _ in range(ncls)]
    for i in range(n):
        members[cls_of[i]].append(i)
    moves = []  # per non-diagonal generator: {source class: target class}
    others = [g for g in gens if not g.is_diagonal()]
    for G in others:
        # as a right factor X @ G, column classes of X map through rows of G
        tmap = {}
        for r, c, _ in G.items():
            a, b = cls_of[r], cls_of[c]
            if tmap.setdefault(a, b) != b:
                return None
        moves.append(tmap)
    return members, cls_of, others, moves


def _closure_blocks(n, members, cls_of, others, moves) -> Subspace:
    ncls = len(members)
    one = Fraction(1)
    # by_source[a] = list of (generator, target class)
    by_source = [[] for _ in range(ncls)]
    for G, tmap in zip(others, moves):
        for a, b in tmap.items():
            by_source[a].append((G, b))

    if all(len(m) == 1 for m in members):
        # every piece is at most one-dimensional: X = c E_{ab}, and X G is the
        # single entry E_{a,b'} times G[b,b'], so closure is graph reachability
        reach = []
        for a in range(ncls):
            seen = {a}
            stack = [a]
            while stack:
                b = stack.pop()
                row = members[b][0]
                for G, b2 in by_source[b]:
                    if G[row, members[b2][0]] and b2 not in seen:
                        seen.add(b2)
                        stack.append(b2)
            reach.append(seen)
        vecs = [{members[a][0] * n + members[b][0]: one}
                for a in range(ncls) for b in reach[a]]
        vecs.sort(key=min)
        return Subspace(n * n, vecs, canonical=True)

    pieces = {}
    frontier = []
    for a in range(ncls):
        P = ExactMatrix._wrap(n, n, {i: {i: one} for i in members[a]})
        sb = SpanBuilder()
        sb.extend([P.flat()])
        pieces[(a, a)] = sb
        frontier.append((P, a, a))
    while frontier:
        cands = {}
        for X, a, b in frontier:
            for G, b2 in by_source[b]:
                Y = X @ G
                if not Y.is_zero():
                    cands.setdefault((a, b2), []).append(Y)
        frontier = []
        for key, ys in cands.items():
            sb = pieces.get(key)
            if sb is None:
                sb = pieces[key] = SpanBuilder()
            cap = len(members[key[0]]) * len(members[key[1]])
            if sb.dim >= cap:
                continue
            kept = sb.extend([Y.flat() for Y in ys])
            frontier.extend((ys[i], key[0], key[1]) for i in kept)
    rows = [r for sb in pieces.values() for r in sb.rows]
    rows.sort(key=min)
    return Subspace(n * n, rows, canonical=True)


# ---------------------------------------------------------------------------
# polynomials

def minimal_polynomial(M: ExactMatrix) -> list:
    """Monic minimal polynomial as coefficients [a_0, a_1, ..., 1] (low to high).

    Found as the first linear dependence among I, M, M^2, ...
    """
    if not M.is_square():
        raise ValueError("minimal polynomial needs a square matrix")
    n = M.rows
    power = ExactMatrix.identity(n)
    flats = [power.flat()]
    builder = SpanBuilder()
    builder.extend(flats)
    for k in range(1, n + 2):
        power = power @ M
        flats.append(power.flat())
        if builder.extend([flats[-1]]):
            continue
        A = ExactMatrix(n * n, k + 1, {(idx, j): v for j, col in enumerate(flats)
                                       for idx, v in col.items()})
        ker = kernel(A)
        if ker.dim != 1:
            raise ArithmeticError("dependence among powers is not one-dimensional")
        v = ker.basis[0]
        lead = v[k]
        return [v.get(j, Fraction(0)) / lead for j in range(k + 1)]
    raise ArithmeticError("no dependence found among matrix powers")


def poly_mul(a: Sequence, b: Sequence) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_from_roots(roots: Iterable) -> list:
    out = [Fraction(1)]
    for r in roots:
        out = poly_mul(out, [-q(r), Fraction(1)])
    return out


def poly_eval_matrix(coeffs: Sequence, M: ExactMatrix) -> ExactMatrix:
    n = M.rows
    acc = ExactMatrix.zero(n)
    for a in reversed(coeffs):
        acc = acc @ M + ExactMatrix.identity(n).scale(a)
    return acc


def poly_to_str(coeffs: Sequence, var: str = "x") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        a = q(coeffs[k])
        if not a:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and a == 1:
            s = mono
        elif mono and a == -1:
            s = "-" + mono
        elif mono:
            s = f"{a}*{mono}"
        else:
            s = str(a)
        terms.append(s)
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out
