"""Nonstandard orthogonal coideal algebras as relation oracles, explicit
three-strand representations, the Temperley-Lieb quotient, and the duality
representation on spinor tensor powers.

The defining relations are B_i B_j = B_j B_i for |i-j| > 1 and
B_i^2 B_j - (p + p^-1) B_i B_j B_i + B_j B_i^2 = B_j for |i-j| = 1,
with deformation parameter p; the extended (full orthogonal) version adds
F with F^2 = 1, F B_1 = -B_1 F, F B_i = B_i F for i > 1.
"""

from __future__ import annotations

from .ring import (Scalar, ONE, I, V, QQ, qint, qint_plus, q_power, sc)
from .linalg import (SparseMatrix, nullspace, embed_factor,
                     algebra_closure_dim, commutant_dimension)
from . import clifford as cl
from .qgroup import rank_of
from .intertwiner import C_embedded


class CoidealRep:
    def __init__(self, n: int, param: Scalar, B: list, F: SparseMatrix = None):
        self.n = n
        self.param = param
        self.B = B
        self.F = F

    @property
    def dim(self):
        return self.B[0].nrows if self.B else (self.F.nrows if self.F else 0)


def check_coideal_relations(rep: CoidealRep) -> dict:
    """Residual matrices for every defining relation; all must be zero."""
    out = {}
    B = rep.B
    mid = rep.param + rep.param.inv()
    for i in range(len(B)):
        for j in range(len(B)):
            if abs(i - j) > 1:
                out[f"far {i+1},{j+1}"] = B[i] * B[j] - B[j] * B[i]
            elif abs(i - j) == 1:
                out[f"cubic {i+1},{j+1}"] = (
                    B[i] * B[i] * B[j] - (B[i] * B[j] * B[i]).scale(mid)
                    + B[j] * B[i] * B[i] - B[j])
    if rep.F is not None:
        d = rep.F.nrows
        out["F^2"] = rep.F * rep.F - SparseMatrix.identity(d)
        if B:
            out["FB1"] = rep.F * B[0] + B[0] * rep.F
        for i in range(1, len(B)):
            out[f"FB{i+1}"] = rep.F * B[i] - B[i] * rep.F
    return out


def residuals_zero(res: dict) -> bool:
    return all(m.is_zero() for m in res.values())


# -- explicit three-strand representations ---------------------------------

def so3_classical_rep(Nparam: int) -> CoidealRep:
    """(Nparam+1)-dimensional module with B_1 v_j = [Nparam/2 - j] v_j and
    B_2 v_j = v_{j+1} + a_{j-1,j} v_{j-1}, where
    a_{j-1,j} = [N+1-j][j] / ((q^{N/2-j} + q^{j-N/2})(q^{N/2-j+1} + q^{j-N/2-1}))."""
    N = Nparam
    d = N + 1
    B1 = SparseMatrix(d, d, {(j, j): qint((N - 2 * j, 2)) for j in range(d)
                             if N != 2 * j})
    B2 = SparseMatrix(d, d)
    for j in range(d):
        if j + 1 < d:
            B2[(j + 1, j)] = ONE
        if j >= 1:
            num = qint(N + 1 - j) * qint(j)
            den = ((q_power(N - 2 * j) + q_power(2 * j - N))
                   * (q_power(N - 2 * j + 2) + q_power(2 * j - N - 2)))
            B2[(j - 1, j)] = num / den
    return CoidealRep(3, QQ, [B1, B2])


def so3_nonclassical_rep(Nparam: int, sign: int = 1) -> CoidealRep:
    """(Nparam+1)/2-dimensional module for Nparam odd: B_1 has the shifted
    eigenvalues [Nparam/2 - j]^+, the alphas pick up minus signs in the
    denominators, and the last basis vector carries a diagonal B_2 term
    +- [(N+1)/2] / (i(q^{1/2} - q^{-1/2}))."""
    N = Nparam
    if N % 2 == 0:
        raise ValueError("nonclassical three-strand modules need odd Nparam")
    d = (N + 1) // 2
    B1 = SparseMatrix(d, d, {(j, j): qint_plus((N - 2 * j, 2)) for j in range(d)})
    B2 = SparseMatrix(d, d)
    for j in range(d):
        if j + 1 < d:
            B2[(j + 1, j)] = ONE
        if j >= 1:
            num = qint(N + 1 - j) * qint(j)
            den = ((q_power(N - 2 * j) - q_power(2 * j - N))
                   * (q_power(N - 2 * j + 2) - q_power(2 * j - N - 2)))
            B2[(j - 1, j)] = num / den
    top = d - 1   # j = (N-1)/2
    diag = qint((N + 1) // 2) / (I * (V - V.inv()))
    B2[(top, top)] = diag if sign > 0 else -diag
    return CoidealRep(3, QQ, [B1, B2])


def twist_so3(rep: CoidealRep) -> CoidealRep:
    """Replace B_1 by its alternating twist (-1)^j B_1 v_j; the result is a
    module for the coideal with negated parameter."""
    d = rep.dim
    B1 = SparseMatrix(d, d, {(r, c): (v if r % 2 == 0 else -v)
                             for (r, c), v in rep.B[0].data.items()})
    return CoidealRep(rep.n, -rep.param, [B1] + rep.B[1:], rep.F)


# -- Temperley-Lieb from the rank-one quantum group -------------------------

def _sl2_generators():
    """The rank-one quantum group on C^2 in the convention K E K^-1 = q^2 E,
    i.e. K = diag(q, q^-1) and [E, F] = (K - K^-1)/(q - q^-1).

    This is the convention the three-strand homomorphism forces: a direct
    expansion shows B = a - b*e can satisfy the cubic relation with middle
    coefficient q^2 + q^-2 only if e_1 e_2 e_1 = e_1 / (q + q^-1)^2, the
    constant realized by the trivial-summand projection below."""
    K = SparseMatrix.diagonal([QQ, QQ.inv()])
    Kh = SparseMatrix.diagonal([V, V.inv()])
    E = SparseMatrix(2, 2, {(0, 1): ONE})
    F = SparseMatrix(2, 2, {(1, 0): ONE})
    return K, Kh, E, F


def _sl2_coproduct(n: int):
    """Images of E, F, K under the n-fold balanced coproduct on (C^2)^(x)n."""
    K, Kh, E, F = _sl2_generators()
    Khi = SparseMatrix.diagonal([V.inv(), V])
    from .linalg import kron_all
    dE = dF = None
    for j in range(n):
        tE = kron_all([Kh] * j + [E] + [Khi] * (n - 1 - j))
        tF = kron_all([Kh] * j + [F] + [Khi] * (n - 1 - j))
        dE = tE if dE is None else dE + tE
        dF = tF if dF is None else dF + tF
    dK = kron_all([K] * n)
    return dE, dF, dK


def tl_generators(n: int) -> list:
    """e_i projecting tensor slots (i, i+1) onto the trivial isotypic
    component of C^2 (x) C^2, found as the joint kernel of the coproduct
    action -- nothing about the singlet is hardcoded."""
    dE, dF, dK = _sl2_coproduct(2)
    ident4 = SparseMatrix.identity(4)
    stack = SparseMatrix(12, 4)
    for b, m in enumerate((dE, dF, dK - ident4)):
        for (r, c), val in m.data.items():
            stack[(4 * b + r, c)] = val
    vecs = nullspace(stack)
    assert len(vecs) == 1
    s = vecs[0]
    stack2 = SparseMatrix(12, 4)
    for b, m in enumerate((dE, dF, dK - ident4)):
        mt = m.transpose()
        for (r, c), val in mt.data.items():
            stack2[(4 * b + r, c)] = val
    covecs = nullspace(stack2)
    assert len(covecs) == 1
    phi = covecs[0]
    pairing = None
    for idx, v in phi.items():
        x = s.get(idx)
        if x is not None:
            t = v * x
            pairing = t if pairing is None else pairing + t
    inv = pairing.inv()
    e = SparseMatrix(4, 4)
    for r, a in s.items():
        for c, b in phi.items():
            e[(r, c)] = a * b * inv
    out = []
    for i in range(1, n):
        left = SparseMatrix.identity(2 ** (i - 1))
        right = SparseMatrix.identity(2 ** (n - i - 1))
        out.append(left.kron(e).kron(right))
    return out


def tl_braid_rep(n: int) -> CoidealRep:
    """B_i = 1/(q + q^-1) - (q + q^-1) e_i, a coideal module with
    parameter -q^2."""
    two = qint(2, QQ)
    es = tl_generators(n)
    d = es[0].nrows
    ident = SparseMatrix.identity(d)
    B = [ident.scale(two.inv()) - e.scale(two) for e in es]
    return CoidealRep(n, -(QQ ** 2), B)


def tl_measured_constant(n: int = 3) -> Scalar:
    """The scalar c in e_1 e_2 e_1 = c e_1 for the constructed generators."""
    es = tl_generators(n)
    prod = es[0] * es[1] * es[0]
    for rc, val in es[0].data.items():
        return prod.data.get(rc, Scalar.from_int(0)) / val
    raise RuntimeError("e_1 is zero?")


# -- the duality representation ---------------------------------------------

def duality_rep(N: int, n: int) -> CoidealRep:
    """B_i = C_i on the n-fold spinor tensor power, parameter -q^2; for N
    even also F = f (x) 1^(n-1) with f the diagonal (-1)^{m{k}} operator."""
    k = rank_of(N)
    B = [C_embedded(N, i, n) for i in range(1, n)]
    F = None
    if N % 2 == 0:
        f = cl.parity(k, k)
        F = f.kron(SparseMatrix.identity((1 << k) ** (n - 1)))
    return CoidealRep(n, -(QQ ** 2), B, F)


def classical_duality_rep(N: int, n: int, eps: int = 1) -> CoidealRep:
    B = [C_embedded(N, i, n, classical=True, eps=eps) for i in range(1, n)]
    F = None
    if N % 2 == 0:
        k = rank_of(N)
        F = cl.parity(k, k).kron(SparseMatrix.identity((1 << k) ** (n - 1)))
    return CoidealRep(n, -ONE, B, F)
