"""The spin representation of the quantized orthogonal algebra on the
2^k-dimensional fermionic space, for N = 2k+1 and N = 2k, together with
exact checkers for the defining relations and the balanced coproduct on
tensor powers.
"""

from __future__ import annotations

from functools import lru_cache

from .ring import Scalar, ONE, QQ, q_power, qbinom
from .linalg import SparseMatrix, kron_all
from . import clifford as cl


def rank_of(N: int) -> int:
    if N < 2:
        raise ValueError("need N >= 2")
    return N // 2


def simple_roots(N: int):
    """Simple roots in the epsilon basis, with (eps_i, eps_j) = 2 delta_ij."""
    k = rank_of(N)
    roots = []
    for i in range(1, k):
        a = [0] * k
        a[i - 1], a[i] = 1, -1
        roots.append(tuple(a))
    last = [0] * k
    if N % 2:
        last[k - 1] = 1
    else:
        if k >= 2:
            last[k - 2] = 1
        last[k - 1] = 1
    roots.append(tuple(last))
    return roots


def root_pairing(N: int, i: int, j: int) -> int:
    a, b = simple_roots(N)[i - 1], simple_roots(N)[j - 1]
    return 2 * sum(x * y for x, y in zip(a, b))


def cartan_entry(N: int, i: int, j: int) -> int:
    return 2 * root_pairing(N, i, j) // root_pairing(N, i, i)


class SpinRep:
    """Generator images K_i^{±1}, K_i^{±1/2}, E_i, F_i on the spinor space."""

    def __init__(self, N: int):
        if N < 3:
            raise ValueError("need N >= 3")
        self.N = N
        self.k = rank_of(N)
        self.dim = 1 << self.k

    def qi(self, i: int) -> Scalar:
        """q_i = q^{(alpha_i, alpha_i)/2}: q^2 for long roots, q for short."""
        return QQ ** (root_pairing(self.N, i, i) // 2)

    @lru_cache(maxsize=None)
    def K(self, i: int, power: int = 1) -> SparseMatrix:
        k, N = self.k, self.N
        if i < k:
            return cl.omega(i, k, 2 * power) * cl.omega(i + 1, k, -2 * power)
        if N % 2:
            return cl.omega(k, k, 2 * power).scale(q_power(2 * power))
        return (cl.omega(k - 1, k, 2 * power) * cl.omega(k, k, 2 * power)
                ).scale(q_power(4 * power))

    @lru_cache(maxsize=None)
    def Khalf(self, i: int, power: int = 1) -> SparseMatrix:
        """K_i^{power/2}: the entrywise monomial square root of K_i^power."""
        out = {}
        for (r, c), s in self.K(i, power).data.items():
            e = s.num.valuation()
            assert s.num.is_monomial() and e % 2 == 0
            out[(r, c)] = q_power(e // 2)
        return SparseMatrix(self.dim, self.dim, out)

    @lru_cache(maxsize=None)
    def E(self, i: int) -> SparseMatrix:
        k, N = self.k, self.N
        if i < k:
            return cl.annih(i, k) * cl.creat(i + 1, k)
        if N % 2:
            return cl.annih(k, k) * cl.parity(k, k)
        return cl.annih(k - 1, k) * cl.annih(k, k)

    @lru_cache(maxsize=None)
    def F(self, i: int) -> SparseMatrix:
        k, N = self.k, self.N
        if i < k:
            return cl.annih(i + 1, k) * cl.creat(i, k)
        if N % 2:
            return cl.parity(k, k) * cl.creat(k, k)
        return cl.creat(k, k) * cl.creat(k - 1, k)


def verify_relations(N: int) -> bool:
    """All defining relations of the quantized orthogonal algebra hold
    exactly for the spin representation: Cartan commutation, weight
    scaling of E/F, the commutator [E_i, F_j], and the quantum Serre
    relations with q_i-binomial coefficients."""
    rep = SpinRep(N)
    k, d = rep.k, rep.dim
    ident = SparseMatrix.identity(d)
    zero = SparseMatrix(d, d)
    for i in range(1, k + 1):
        if rep.K(i) * rep.K(i, -1) != ident:
            return False
        if rep.Khalf(i) * rep.Khalf(i) != rep.K(i):
            return False
        for j in range(1, k + 1):
            if rep.K(i) * rep.K(j) != rep.K(j) * rep.K(i):
                return False
            pw = root_pairing(N, i, j)
            if rep.K(i) * rep.E(j) * rep.K(i, -1) != rep.E(j).scale(q_power(2 * pw)):
                return False
            if rep.K(i) * rep.F(j) * rep.K(i, -1) != rep.F(j).scale(q_power(-2 * pw)):
                return False
            comm = rep.E(i) * rep.F(j) - rep.F(j) * rep.E(i)
            if i == j:
                qi = rep.qi(i)
                tgt = (rep.K(i) - rep.K(i, -1)).scale((qi - qi.inv()).inv())
                if comm != tgt:
                    return False
            elif not comm.is_zero():
                return False
    # quantum Serre
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            if i == j:
                continue
            m = 1 - cartan_entry(N, i, j)
            for X in (rep.E, rep.F):
                acc = zero
                term = X(j)
                for s in range(m + 1):
                    # E_i^{m-s} E_j E_i^s with sign and q_i-binomial
                    left = ident
                    for _ in range(m - s):
                        left = left * X(i)
                    right = ident
                    for _ in range(s):
                        right = right * X(i)
                    coef = qbinom(m, s, rep.qi(i))
                    piece = (left * term * right).scale(coef)
                    acc = acc + (piece if s % 2 == 0 else -piece)
                if not acc.is_zero():
                    return False
    return True


def coproduct_E(rep: SpinRep, i: int, n: int) -> SparseMatrix:
    """n-fold balanced coproduct: sum_j K^{1/2 (x)(j-1)} (x) E (x) K^{-1/2 (x)(n-j)}."""
    kp, km = rep.Khalf(i, 1), rep.Khalf(i, -1)
    acc = None
    for j in range(n):
        fac = [kp] * j + [rep.E(i)] + [km] * (n - 1 - j)
        t = kron_all(fac)
        acc = t if acc is None else acc + t
    return acc


def coproduct_F(rep: SpinRep, i: int, n: int) -> SparseMatrix:
    kp, km = rep.Khalf(i, 1), rep.Khalf(i, -1)
    acc = None
    for j in range(n):
        fac = [kp] * j + [rep.F(i)] + [km] * (n - 1 - j)
        t = kron_all(fac)
        acc = t if acc is None else acc + t
    return acc


def coproduct_K(rep: SpinRep, i: int, n: int, power: int = 1) -> SparseMatrix:
    return kron_all([rep.K(i, power)] * n)


def coproduct_generators(N: int, n: int):
    """All coproduct images on the n-fold tensor power, for commutant work."""
    rep = SpinRep(N)
    out = []
    for i in range(1, rep.k + 1):
        out.append(coproduct_K(rep, i, n))
        out.append(coproduct_E(rep, i, n))
        out.append(coproduct_F(rep, i, n))
    return out
