"""Duality between Dickson monomials and admissible operations.

The Kronecker pairing <d^m, Q_J> is coefficient extraction: the
coefficient of h^J in the Borel expansion of d^m.  Per degree the
pairing matrix is unitriangular for the excess-lex order with chi_min
on the diagonal, which gives the dual-basis algorithm, its inversion,
and the straightening map rho(e_I) as a linear solve.

    >>> ctx = Context(2, 2)
    >>> [s.twice for s in admissible_basis(6, ctx)]
    [(0, 6), (4, 4)]
"""

from __future__ import annotations

from functools import lru_cache

from .arith import Context, DomainError, binom_mod_p
from .invariants import (
    chi_min,
    coeff_in_expansion,
    dickson_degree,
    dickson_monomial_degree,
)
from .opalgebra import OpPoly
from .sequences import OpSeq, compare, degree_lower, is_admissible

__all__ = [
    "DualExpansion",
    "solve_degree_diophantine",
    "admissible_basis",
    "kronecker_pair",
    "dual_of_dickson",
    "dickson_of_dual",
    "adem_via_invariants",
    "power_dual_check",
]


class DualExpansion:
    """A finite sum of dual-basis elements c_J (Q_J)^*."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: Context, terms: dict | None = None):
        self.ctx = ctx
        self.terms: dict[OpSeq, int] = {}
        if terms:
            for seq, coeff in terms.items():
                self.add_term(seq, coeff)

    def add_term(self, seq: OpSeq, coeff: int):
        assert seq.ctx == self.ctx
        assert is_admissible(seq), "dual expansions are indexed by admissibles"
        coeff %= self.ctx.p
        if not coeff:
            return
        new = (self.terms.get(seq, 0) + coeff) % self.ctx.p
        if new:
            self.terms[seq] = new
        else:
            del self.terms[seq]

    def sorted_terms(self):
        return sorted(
            self.terms.items(), key=lambda kv: (kv[0].key(), kv[0].twice, kv[0].eps)
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, DualExpansion)
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"DualExpansion({self.ctx.p},{self.ctx.n}; {len(self.terms)} terms)"


def solve_degree_diophantine(D: int, ctx: Context) -> list[tuple[int, ...]]:
    """All m with sum m_i deg(d_{n,i}) = D, by bounded lexicographic search."""
    if D < 0:
        raise DomainError("degree must be nonnegative")
    weights = [dickson_degree(i, ctx) for i in range(ctx.n)]
    out: list[tuple[int, ...]] = []

    def rec(i: int, rem: int, acc: list[int]):
        if i == ctx.n:
            if rem == 0:
                out.append(tuple(acc))
            return
        w = weights[i]
        for mi in range(rem // w + 1):
            acc.append(mi)
            rec(i + 1, rem - mi * w, acc)
            acc.pop()

    rec(0, D, [])
    return out


def admissible_basis(D: int, ctx: Context) -> list[OpSeq]:
    """All weakly increasing nonnegative integral eps = 0 sequences of
    lower degree D, ascending under compare.

    Enumerated directly (not through the Dickson side) so that the
    bijection with solve_degree_diophantine stays a real check.
    """
    if D < 0:
        raise DomainError("degree must be nonnegative")
    p, n = ctx.p, ctx.n
    # weight of entry value 1 at position t (0-based)
    wt = [(1 << t) if p == 2 else 2 * (p - 1) * p**t for t in range(n)]
    out: list[OpSeq] = []

    def rec(t: int, lo: int, rem: int, acc: list[int]):
        if t == n:
            if rem == 0:
                out.append(
                    OpSeq(ctx, tuple(2 * v for v in acc), (0,) * n)
                )
            return
        tail = sum(wt[t:])
        for v in range(lo, rem // wt[t] + 1):
            if v * tail > rem:
                break
            acc.append(v)
            rec(t + 1, v, rem - v * wt[t], acc)
            acc.pop()

    rec(0, 0, D, [])
    out.sort(key=lambda s: s.key())
    return out


def kronecker_pair(m, J: OpSeq, ctx: Context) -> int:
    """<d^m, Q_J>: the coefficient of h^J in the expansion of d^m."""
    if any(J.eps):
        raise DomainError("the pairing is implemented for eps = 0 only")
    if any(t % 2 for t in J.twice):
        return 0
    if dickson_monomial_degree(m, ctx) != degree_lower(J):
        return 0
    return coeff_in_expansion(m, tuple(t // 2 for t in J.twice), ctx)


@lru_cache(maxsize=None)
def _degree_data(D: int, ctx: Context):
    """Per-degree duality data: admissible sequences K (ascending), the
    Dickson monomials m(K), and the pairing matrix c[K][J]."""
    monos = solve_degree_diophantine(D, ctx)
    pairs = sorted(
        ((chi_min(m, ctx), m) for m in monos), key=lambda km: km[0].key()
    )
    ks = tuple(k for k, _ in pairs)
    ms = tuple(m for _, m in pairs)
    basis = admissible_basis(D, ctx)
    assert [s.twice for s in basis] == [k.twice for k in ks], (
        "chi_min is not a bijection onto the admissible basis"
    )
    c = tuple(
        tuple(kronecker_pair(ms[i], ks[j], ctx) for j in range(len(ks)))
        for i in range(len(ks))
    )
    return ks, ms, c


def dual_of_dickson(m, ctx: Context) -> DualExpansion:
    """Expand (the dual of) d^m in the dual basis: sum over admissible J
    of <d^m, Q_J> (Q_J)^*."""
    m = tuple(m)
    D = dickson_monomial_degree(m, ctx)
    out = DualExpansion(ctx)
    lead = chi_min(m, ctx)
    for J in admissible_basis(D, ctx):
        c = kronecker_pair(m, J, ctx)
        cmp = compare(J, lead)
        if cmp < 0:
            assert c == 0, "pairing below chi_min must vanish"
        elif cmp == 0 and J.twice == lead.twice:
            assert c == 1, "chi_min coefficient must be 1"
        if c:
            out.add_term(J, c)
    return out


def dickson_of_dual(J: OpSeq) -> dict[tuple[int, ...], int]:
    """The Dickson combination dual to (Q_J)^*, by forward substitution
    through the unitriangular per-degree system."""
    ctx = J.ctx
    if any(J.eps) or any(t % 2 for t in J.twice):
        raise DomainError("dickson_of_dual needs an integral eps = 0 sequence")
    if not is_admissible(J):
        raise DomainError("dickson_of_dual needs an admissible sequence")
    D = degree_lower(J)
    ks, ms, c = _degree_data(D, ctx)
    p = ctx.p
    r = len(ks)
    target = next((j for j in range(r) if ks[j].twice == J.twice), None)
    if target is None:
        raise DomainError("sequence not in the admissible basis of its degree")
    # columns ascending: sum_{i <= j} x_i c[i][j] = delta(j, target)
    x = [0] * r
    for j in range(r):
        rhs = 1 if j == target else 0
        acc = sum(x[i] * c[i][j] for i in range(j)) % p
        assert c[j][j] % p == 1, "pairing matrix must be unitriangular"
        x[j] = (rhs - acc) % p
    return {ms[j]: x[j] for j in range(r) if x[j]}


def _solve_unitriangular_sweep(c, b, p: int) -> list[int]:
    """Back-substitution assuming ones on the diagonal and zeros below."""
    r = len(b)
    a = [0] * r
    for i in range(r - 1, -1, -1):
        assert c[i][i] % p == 1
        acc = sum(c[i][j] * a[j] for j in range(i + 1, r)) % p
        a[i] = (b[i] - acc) % p
    return a


def _solve_linear_mod_p(c, b, p: int) -> list[int]:
    """Full Gauss-Jordan solve of a square system over F_p."""
    r = len(b)
    aug = [list(c[i]) + [b[i] % p] for i in range(r)]
    piv = []
    row = 0
    for col in range(r):
        sel = next((i for i in range(row, r) if aug[i][col] % p), None)
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        inv = pow(aug[row][col], p - 2, p)
        aug[row] = [v * inv % p for v in aug[row]]
        for i in range(r):
            if i != row and aug[i][col] % p:
                f = aug[i][col]
                aug[i] = [(vi - f * vr) % p for vi, vr in zip(aug[i], aug[row])]
        piv.append(col)
        row += 1
        if row == r:
            break
    for i in range(row, r):
        if aug[i][r] % p:
            raise DomainError("inconsistent pairing system")
    if row < r:
        raise DomainError("singular pairing system")
    sol = [0] * r
    for i, col in enumerate(piv):
        sol[col] = aug[i][r] % p
    return sol


def adem_via_invariants(x: OpSeq, method: str = "solve") -> OpPoly:
    """Straighten rho(e_I) through the invariant-theoretic pairing.

    Enumerates all admissible K of degree |I|, extracts b_K = coeff of
    h^I in the expansion of d^{m(K)}, and solves sum_J c_{K,J} a_J = b_K
    against the pairing matrix.  method "solve" is a full linear solve;
    "sweep" exploits unitriangularity directly and is cross-checked in
    the test suite.
    """
    ctx = x.ctx
    if any(x.eps):
        raise DomainError("invariant-theoretic straightening needs eps = 0")
    if any(t % 2 for t in x.twice):
        raise DomainError("invariant-theoretic straightening needs integral entries")
    D = degree_lower(x)
    ks, ms, c = _degree_data(D, ctx)
    exps = tuple(t // 2 for t in x.twice)
    b = [coeff_in_expansion(ms[i], exps, ctx) for i in range(len(ks))]
    if method == "solve":
        a = _solve_linear_mod_p(c, b, ctx.p)
    elif method == "sweep":
        a = _solve_unitriangular_sweep(c, b, ctx.p)
    else:
        raise DomainError(f"unknown method {method!r}")
    out = OpPoly(ctx)
    for K, aK in zip(ks, a):
        if aK:
            assert compare(K, x) <= 0, "straightening produced K above I"
            out.add_term(K.twice, K.eps, aK)
    return out


def power_dual_check(n: int, i: int, k: int, alpha_k: int, alpha_0: int, ctx: Context) -> bool:
    """Check the single-step power identity for d_{n,n-i}^(alpha_k p^k + alpha_0).

    With mu = min(alpha_k, alpha_0), the dual must contain
    Psi(d_{n,n-i}^(alpha_k p^k+alpha_0)) with coefficient 1 and, when
    mu > 0, the sequence of
    d_{n,n-i-k}^(mu p^k) d_{n,n-i}^((alpha_k-mu)p^k+(alpha_0-mu)) d_{n,n-i+k}^mu
    with coefficient C(alpha_k,mu) C(alpha_0,mu); the index-n factor
    d_{n,n} = 1 is skipped.

    The stated coefficient only matches the pairing when alpha_k <=
    alpha_0 and n-i+k <= n (the extracted coefficient is C(alpha_0,mu),
    which drops the C(alpha_k,mu) factor); outside that zone the check
    honestly reports the mismatch by returning False.
    """
    p = ctx.p
    if ctx.n != n:
        raise DomainError("context width does not match n")
    if not 1 <= i < n:
        raise DomainError("need 1 <= i < n")
    if not 1 <= k <= n - i:
        raise DomainError("need 1 <= k <= n-i")
    if alpha_k < 0 or alpha_0 < 0:
        raise DomainError("negative alpha")
    m = [0] * n
    m[n - i] = alpha_k * p**k + alpha_0
    full = dual_of_dickson(tuple(m), ctx)
    if full.terms.get(chi_min(m, ctx), 0) != 1:
        return False
    mu = min(alpha_k, alpha_0)
    if mu == 0:
        return True
    m2 = [0] * n
    m2[n - i - k] += mu * p**k
    m2[n - i] += (alpha_k - mu) * p**k + (alpha_0 - mu)
    if n - i + k < n:
        m2[n - i + k] += mu
    want = binom_mod_p(alpha_k, mu, p) * binom_mod_p(alpha_0, mu, p) % p
    return full.terms.get(chi_min(m2, ctx), 0) == want
