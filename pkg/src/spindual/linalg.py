"""Sparse exact linear algebra over the scalar tower.

Matrices are dict-of-entries {(row, col): elem}; entries may be Scalar
(symbolic) or GaussRat (specialized) -- everything here is duck-typed over
+, *, unary -, bool (nonzero test) and .inv().
"""

from __future__ import annotations

from collections import deque

from .ring import Scalar, GaussRat, GR_ONE, ONE, PoleError, Q


class SparseMatrix:
    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, nrows: int, ncols: int, data=None):
        self.nrows = nrows
        self.ncols = ncols
        self.data = data if data is not None else {}

    @staticmethod
    def identity(n: int, one=ONE) -> "SparseMatrix":
        return SparseMatrix(n, n, {(i, i): one for i in range(n)})

    @staticmethod
    def diagonal(entries, one=ONE) -> "SparseMatrix":
        n = len(entries)
        return SparseMatrix(n, n, {(i, i): e for i, e in enumerate(entries) if e})

    def __setitem__(self, rc, val):
        if val:
            self.data[rc] = val
        elif rc in self.data:
            del self.data[rc]

    def __getitem__(self, rc):
        return self.data.get(rc)

    def is_zero(self):
        return not self.data

    def __eq__(self, other):
        return (self.nrows == other.nrows and self.ncols == other.ncols
                and self.data == other.data)

    def __add__(self, other):
        out = dict(self.data)
        for rc, v in other.data.items():
            s = out.get(rc)
            if s is None:
                out[rc] = v
            else:
                s = s + v
                if s:
                    out[rc] = s
                else:
                    del out[rc]
        return SparseMatrix(self.nrows, self.ncols, out)

    def __neg__(self):
        return SparseMatrix(self.nrows, self.ncols,
                            {rc: -v for rc, v in self.data.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return SparseMatrix(self.nrows, self.ncols, {})
        return SparseMatrix(self.nrows, self.ncols,
                            {rc: v * c for rc, v in self.data.items()})

    def __mul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        # index other by row once
        by_row = {}
        for (r, c), v in other.data.items():
            by_row.setdefault(r, []).append((c, v))
        out = {}
        for (r, k), a in self.data.items():
            row = by_row.get(k)
            if row is None:
                continue
            for c, b in row:
                rc = (r, c)
                p = a * b
                s = out.get(rc)
                if s is None:
                    out[rc] = p
                else:
                    s = s + p
                    if s:
                        out[rc] = s
                    else:
                        del out[rc]
        return SparseMatrix(self.nrows, other.ncols, out)

    def transpose(self):
        return SparseMatrix(self.ncols, self.nrows,
                            {(c, r): v for (r, c), v in self.data.items()})

    def apply(self, vec: dict) -> dict:
        """Matrix times a sparse column vector {index: elem}."""
        out = {}
        for (r, c), a in self.data.items():
            x = vec.get(c)
            if x is None:
                continue
            p = a * x
            s = out.get(r)
            if s is None:
                out[r] = p
            else:
                s = s + p
                if s:
                    out[r] = s
                else:
                    del out[r]
        return {k: v for k, v in out.items() if v}

    def kron(self, other: "SparseMatrix") -> "SparseMatrix":
        """Kronecker product; self is the leftmost (slowest-varying) factor."""
        out = {}
        n2, m2 = other.nrows, other.ncols
        for (r1, c1), a in self.data.items():
            for (r2, c2), b in other.data.items():
                out[(r1 * n2 + r2, c1 * m2 + c2)] = a * b
        return SparseMatrix(self.nrows * n2, self.ncols * m2, out)

    def is_diagonal(self):
        return all(r == c for r, c in self.data)

    def specialize(self, v0: GaussRat) -> "SparseMatrix":
        return SparseMatrix(self.nrows, self.ncols,
                            {rc: v.specialize(v0) for rc, v in self.data.items()})

    def entries(self):
        return self.data.values()

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, {len(self.data)} nz)"


def kron_all(mats) -> SparseMatrix:
    out = mats[0]
    for m in mats[1:]:
        out = out.kron(m)
    return out


def embed_factor(m: SparseMatrix, pos: int, n: int, one=ONE) -> SparseMatrix:
    """id^(pos) (x) m (x) id^(n-pos-1) on the n-fold tensor power."""
    d = m.nrows
    left = SparseMatrix.identity(d ** pos, one)
    right = SparseMatrix.identity(d ** (n - pos - 1), one)
    return left.kron(m).kron(right)


class EchelonBasis:
    """Incremental row-echelon store for sparse rows {col: elem}.

    Rows are kept with a pivot (smallest column) normalized to 1; insert()
    reduces against the stored rows and reports whether the row was new.
    """

    def __init__(self):
        self.rows = {}  # pivot col -> normalized row dict

    def __len__(self):
        return len(self.rows)

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        while row:
            p = min(row)
            piv = self.rows.get(p)
            if piv is None:
                return row
            f = row[p]
            for c, v in piv.items():
                s = row.get(c)
                pv = f * v
                if s is None:
                    row[c] = -pv
                else:
                    s = s - pv
                    if s:
                        row[c] = s
                    else:
                        del row[c]
        return row

    def insert(self, row: dict) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = row[p].inv()
        self.rows[p] = {c: v * inv for c, v in row.items()}
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)


def matrix_rank(m: SparseMatrix) -> int:
    basis = EchelonBasis()
    by_row = {}
    for (r, c), v in m.data.items():
        by_row.setdefault(r, {})[c] = v
    for row in by_row.values():
        basis.insert(row)
    return len(basis)


def nullspace(m: SparseMatrix, one=ONE) -> list:
    """Basis of the right nullspace as sparse vectors {index: elem}.

    Dense Gauss elimination on columns; intended for small spaces only.
    """
    basis = EchelonBasis()
    by_row = {}
    for (r, c), v in m.data.items():
        by_row.setdefault(r, {})[c] = v
    for row in by_row.values():
        basis.insert(row)
    pivots = set(basis.rows)
    free = [c for c in range(m.ncols) if c not in pivots]
    out = []
    for f in free:
        # back-substitution: vec[f] = 1, solve pivot entries
        vec = {f: one}
        for p in sorted(basis.rows, reverse=True):
            row = basis.rows[p]
            s = None
            for c, v in row.items():
                if c == p:
                    continue
                x = vec.get(c)
                if x is None:
                    continue
                t = v * x
                s = t if s is None else s + t
            if s is not None and s:
                vec[p] = -s
        out.append(vec)
    return out


def _flatten(m: SparseMatrix) -> dict:
    return {r * m.ncols + c: v for (r, c), v in m.data.items()}


def algebra_closure_dim(gens, dim: int, one=ONE, max_dim=None) -> int:
    """Dimension of the unital algebra generated by `gens` inside End(V).

    Breadth-first closure under left multiplication by the generators.
    """
    basis = EchelonBasis()
    stored = []
    queue = deque()
    for m in [SparseMatrix.identity(dim, one)] + list(gens):
        if basis.insert(_flatten(m)):
            stored.append(m)
            queue.append(m)
    while queue:
        b = queue.popleft()
        for g in gens:
            p = g * b
            if basis.insert(_flatten(p)):
                stored.append(p)
                queue.append(p)
                if max_dim is not None and len(basis) > max_dim:
                    return len(basis)
    return len(basis)


def commutant_dimension(gens, dim: int) -> int:
    """dim of {X : XM = MX for all generators M} in End(V).

    Diagonal generators are used first to cut the unknowns down to the
    pairs (r, c) lying in a common joint eigenspace; the remaining
    generators then contribute sparse linear constraints whose rank is
    computed incrementally.
    """
    diag = [g for g in gens if g.is_diagonal()]
    rest = [g for g in gens if not g.is_diagonal()]
    sig = {}
    for r in range(dim):
        sig[r] = tuple(repr(g.data.get((r, r))) for g in diag)
    blocks = {}
    for r in range(dim):
        blocks.setdefault(sig[r], []).append(r)
    unknowns = {}
    for rows in blocks.values():
        for r in rows:
            for c in rows:
                unknowns[(r, c)] = len(unknowns)
    basis = EchelonBasis()
    for g in rest:
        by_col = {}
        by_row = {}
        for (r, c), v in g.data.items():
            by_col.setdefault(c, []).append((r, v))
            by_row.setdefault(r, []).append((c, v))
        # constraint rows of X g - g X = 0, one per output position (a, b)
        con = {}
        for (a, k), ui in unknowns.items():     # X[a,k] * g[k,b]
            for b, v in by_row.get(k, ()):
                d = con.setdefault((a, b), {})
                d[ui] = _acc(d.get(ui), v)
        for (k, b), ui in unknowns.items():     # -g[a,k] * X[k,b]
            for a, v in by_col.get(k, ()):
                d = con.setdefault((a, b), {})
                d[ui] = _acc(d.get(ui), -v)
        for row in con.values():
            row = {i: v for i, v in row.items() if v}
            if row:
                basis.insert(row)
    return len(unknowns) - len(basis)


def _acc(cur, v):
    return v if cur is None else cur + v


class SpectrumReport:
    def __init__(self, annihilates: bool, multiplicities: dict, dim: int):
        self.annihilates = annihilates
        self.multiplicities = multiplicities
        self.dim = dim

    @property
    def complete(self):
        return self.annihilates and sum(self.multiplicities.values()) == self.dim

    def __repr__(self):
        return (f"SpectrumReport(annihilates={self.annihilates}, "
                f"mults={self.multiplicities}, dim={self.dim})")


def verify_spectrum(m: SparseMatrix, candidates, one=ONE) -> SpectrumReport:
    """Check that prod(m - c) vanishes over the candidate eigenvalues and
    read off each multiplicity as dim - rank(m - c).

    A vanishing product with distinct candidates forces diagonalizability,
    so geometric multiplicities are the multiplicities.
    """
    n = m.nrows
    ident = SparseMatrix.identity(n, one)
    prod = ident
    mults = {}
    for c in candidates:
        shifted = m - ident.scale(c)
        prod = prod * shifted
        mults[c] = n - matrix_rank(shifted)
    return SpectrumReport(prod.is_zero(), mults, n)


def random_point(rng, one_is_gauss=True) -> GaussRat:
    """Small random Gaussian-rational specialization point, nonzero and not
    a root of unity (no purely imaginary or unit-norm shortcuts taken --
    callers retry on PoleError)."""
    while True:
        a = Q(rng.randint(-9, 9), rng.randint(1, 5))
        b = Q(rng.randint(-3, 3), rng.randint(1, 5))
        p = GaussRat(a, b)
        if p and p.norm() != 1:
            return p


def specialize_all(mats, v0: GaussRat):
    return [m.specialize(v0) for m in mats]
