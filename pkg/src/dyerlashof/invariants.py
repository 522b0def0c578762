"""The polynomial side: B[n] = F_p[h_1..h_n] and the Dickson algebra.

Dickson generators d_{n,0}..d_{n,n-1} expand into B[n] three independent
ways (closed subset formula, width recursion, 0/1 matrix family); all
three must agree.  On top of the expansions sit the coefficient
extraction used by the duality algorithms, the chi_min / chi_max
extremal-monomial maps, the decomposition/inclusion identities, and a
concrete realization inside F_p[y_1..y_n] for checking Borel/GL
invariance by brute substitution.

    >>> ctx = Context(3, 2)
    >>> sorted(dickson_to_borel(1, ctx).terms.items())
    [((0, 1), 1), ((3, 0), 1)]
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from typing import NamedTuple

from . import kernels
from .arith import Context, DomainError, binom_mod_p, multinom_mod_p, padic_digits
from .sequences import OpSeq

__all__ = [
    "SparsePoly",
    "BPoly",
    "YPoly",
    "RowMatrixA",
    "h_monomial_degree",
    "dickson_degree",
    "dickson_monomial_degree",
    "dickson_to_borel",
    "dickson_to_borel_recursive",
    "enumerate_A",
    "matrix_to_monomial",
    "expand_dickson_monomial",
    "coeff_in_expansion",
    "coeff_by_multinomial",
    "chi_min",
    "chi_max",
    "psi_map",
    "psi_inverse",
    "psi_T",
    "identity_checks",
    "realize_in_y",
    "check_invariance",
    "borel_generators",
    "gl_generators",
]


class SparsePoly:
    """Sparse polynomial over F_p keyed by exponent tuples."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: Context, terms: dict | None = None):
        self.ctx = ctx
        self.terms: dict[tuple[int, ...], int] = {}
        if terms:
            for exps, coeff in terms.items():
                self.add_term(exps, coeff)

    @classmethod
    def one(cls, ctx: Context):
        return cls(ctx, {(0,) * ctx.n: 1})

    @classmethod
    def variable(cls, k: int, ctx: Context, power: int = 1):
        """The k-th variable (1-based), raised to `power`."""
        assert 1 <= k <= ctx.n
        exps = tuple(power if t == k - 1 else 0 for t in range(ctx.n))
        return cls(ctx, {exps: 1})

    def add_term(self, exps, coeff: int):
        coeff %= self.ctx.p
        if not coeff:
            return
        exps = tuple(exps)
        if any(e < 0 for e in exps):
            raise DomainError("negative exponent in polynomial")
        new = (self.terms.get(exps, 0) + coeff) % self.ctx.p
        if new:
            self.terms[exps] = new
        else:
            del self.terms[exps]

    def __add__(self, other):
        out = type(self)(self.ctx, dict(self.terms))
        for exps, coeff in other.terms.items():
            out.add_term(exps, coeff)
        return out

    def __sub__(self, other):
        out = type(self)(self.ctx, dict(self.terms))
        for exps, coeff in other.terms.items():
            out.add_term(exps, -coeff)
        return out

    def __mul__(self, other):
        out = type(self)(self.ctx)
        out.terms = kernels.poly_mul(self.terms, other.terms, self.ctx.p)
        return out

    def scaled(self, c: int):
        out = type(self)(self.ctx)
        out.terms = kernels.poly_scale(self.terms, c, self.ctx.p)
        return out

    def frobenius(self, k: int = 1):
        """Raise to the p^k power: scale all exponents (coeffs fixed)."""
        q = self.ctx.p**k
        out = type(self)(self.ctx)
        out.terms = {tuple(e * q for e in exps): c for exps, c in self.terms.items()}
        return out

    def pow(self, e: int):
        """self**e via base-p digits: Frobenius for the p^k parts, then
        at most p-1 plain multiplications per digit."""
        if e < 0:
            raise DomainError("negative power of a polynomial")
        result = type(self).one(self.ctx)
        for k, digit in enumerate(padic_digits(e, self.ctx.p)):
            if not digit:
                continue
            block = self.frobenius(k)
            for _ in range(digit):
                result = result * block
        return result

    def __eq__(self, other):
        return (
            type(self) is type(other)
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((type(self).__name__, self.ctx, tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        """Terms in reverse-lex exponent order (canonical output order)."""
        return sorted(self.terms.items(), key=lambda item: item[0][::-1])

    def __repr__(self):
        return f"{type(self).__name__}({self.ctx.p},{self.ctx.n}; {len(self.terms)} terms)"


class BPoly(SparsePoly):
    """Polynomial in the Borel invariants h_1..h_n."""


class YPoly(SparsePoly):
    """Polynomial in the underlying variables y_1..y_n."""


def h_monomial_degree(exps, ctx: Context) -> int:
    """Topological degree of h^exps: |h_t| = 2 p^(t-1) (p-1), or 2^(t-1)."""
    p = ctx.p
    if p == 2:
        return sum(e << t for t, e in enumerate(exps))
    return sum(2 * e * p**t * (p - 1) for t, e in enumerate(exps))


def dickson_degree(i: int, ctx: Context) -> int:
    """Topological degree of d_{n,i}: 2(p^n - p^i), or 2^n - 2^i."""
    p, n = ctx.p, ctx.n
    if not 0 <= i <= n - 1:
        raise DomainError(f"Dickson index must be in 0..{n - 1}, got {i}")
    if p == 2:
        return (1 << n) - (1 << i)
    return 2 * (p**n - p**i)


def dickson_monomial_degree(m, ctx: Context) -> int:
    """Topological degree of d^m."""
    return sum(mi * dickson_degree(i, ctx) for i, mi in enumerate(m) if mi)


# ---------------------------------------------------------------------------
# Three expansion oracles for d_{n,j}


def dickson_to_borel(j: int, ctx: Context) -> BPoly:
    """Expand d_{n,j} by the closed subset formula:

    d_{n,j} = sum over 1 <= j_1 < ... < j_{n-j} <= n of
              prod_s h_{j_s}^(p^(j+s-j_s)).
    """
    p, n = ctx.p, ctx.n
    if not 0 <= j <= n - 1:
        raise DomainError(f"Dickson index must be in 0..{n - 1}, got {j}")
    out = BPoly(ctx)
    for subset in combinations(range(1, n + 1), n - j):
        exps = [0] * n
        for s, js in enumerate(subset, start=1):
            exps[js - 1] = p ** (j + s - js)
        out.add_term(tuple(exps), 1)
    return out


@lru_cache(maxsize=None)
def dickson_to_borel_recursive(k: int, s: int, ctx: Context) -> BPoly:
    """Expand d_{k,s} (width k <= n) by d_{k,s} = d_{k-1,s-1}^p + d_{k-1,s} h_k."""
    if k > ctx.n:
        raise DomainError(f"width {k} exceeds n = {ctx.n}")
    if s < 0 or s > k:
        return BPoly(ctx)
    if s == k:
        return BPoly.one(ctx)
    if k == 0:
        return BPoly(ctx)
    first = dickson_to_borel_recursive(k - 1, s - 1, ctx).frobenius()
    second = dickson_to_borel_recursive(k - 1, s, ctx) * BPoly.variable(k, ctx)
    return first + second


class RowMatrixA(NamedTuple):
    """One member of the matrix family for d_{n,j}: the only nonzero
    row, with 0/1 entries summing to n - j (columns numbered from 0)."""

    j: int
    a: tuple[int, ...]


def enumerate_A(j: int, ctx: Context) -> list[RowMatrixA]:
    """All C(n, n-j) matrices of the family for d_{n,j}."""
    n = ctx.n
    if not 0 <= j <= n - 1:
        raise DomainError(f"Dickson index must be in 0..{n - 1}, got {j}")
    rows = []
    for support in combinations(range(n), n - j):
        a = tuple(1 if t in support else 0 for t in range(n))
        rows.append(RowMatrixA(j, a))
    return rows


def matrix_to_monomial(A: RowMatrixA, ctx: Context) -> tuple[int, ...]:
    """Exponent vector of the monomial encoded by one family matrix:
    b_t = a_t * p^(j-1-t+a_0+...+a_t), 0-based columns."""
    p = ctx.p
    exps = []
    partial = 0
    for t, at in enumerate(A.a):
        partial += at
        exps.append(p ** (A.j - 1 - t + partial) if at else 0)
    return tuple(exps)


# ---------------------------------------------------------------------------
# Dickson monomial expansion and coefficient extraction


@lru_cache(maxsize=None)
def expand_dickson_monomial(m: tuple[int, ...], ctx: Context) -> BPoly:
    """Expand d^m = prod d_{n,i}^(m_i) in B[n].  Cached; treat the
    result as immutable."""
    if len(m) != ctx.n:
        raise DomainError(f"expected {ctx.n} exponents, got {len(m)}")
    if any(mi < 0 for mi in m):
        raise DomainError("negative Dickson exponent")
    out = BPoly.one(ctx)
    for i, mi in enumerate(m):
        if mi:
            out = out * dickson_to_borel(i, ctx).pow(mi)
    return out


def coeff_in_expansion(m, J, ctx: Context) -> int:
    """Coefficient of h^J in d^m, by lookup in the cached expansion."""
    return expand_dickson_monomial(tuple(m), ctx).terms.get(tuple(J), 0)


def _plain_compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _plain_compositions(total - first, parts - 1):
            yield (first,) + rest


def coeff_by_multinomial(m, J, ctx: Context) -> int:
    """Coefficient of h^J in d^m by the digit/multinomial formula.

    Write each m_j in base p.  A p^alpha-th power of d_{n,j} is the
    Frobenius twist of the expansion, so its mu-th power distributes mu
    slots over the family monomials with a multinomial coefficient.
    Sum multinomial products over all slot assignments whose exponent
    vectors add up to J.
    """
    p = ctx.p
    J = tuple(J)
    vecs = [
        [matrix_to_monomial(A, ctx) for A in enumerate_A(j, ctx)]
        for j in range(ctx.n)
    ]
    items = []
    for j, mj in enumerate(m):
        for alpha, digit in enumerate(padic_digits(mj, p)):
            if digit:
                items.append((j, alpha, digit))

    def walk(idx: int, remaining: tuple[int, ...]) -> int:
        if idx == len(items):
            return 1 if not any(remaining) else 0
        j, alpha, digit = items[idx]
        q = p**alpha
        total = 0
        for pi in _plain_compositions(digit, len(vecs[j])):
            contrib = [0] * ctx.n
            for slots, vec in zip(pi, vecs[j]):
                if slots:
                    for t, e in enumerate(vec):
                        contrib[t] += slots * q * e
            nxt = tuple(r - c for r, c in zip(remaining, contrib))
            if any(x < 0 for x in nxt):
                continue
            sub = walk(idx + 1, nxt)
            if sub:
                total += multinom_mod_p(pi, p) * sub
        return total % p

    return walk(0, J)


# ---------------------------------------------------------------------------
# chi_min / chi_max and the Psi identifications


def chi_min(m, ctx: Context) -> OpSeq:
    """The lex-least support monomial of d^m, as an eps = 0 sequence:
    entry t is m_0 + ... + m_(t-1)."""
    entries = []
    run = 0
    for t in range(ctx.n):
        run += m[t] if t < len(m) else 0
        entries.append(2 * run)
    return OpSeq(ctx, tuple(entries), (0,) * ctx.n)


def chi_max(m, ctx: Context) -> OpSeq:
    """The lex-greatest support monomial of d^m: entry t is
    sum_{i <= n-t} m_i p^i."""
    p, n = ctx.p, ctx.n
    entries = tuple(
        2 * sum(m[i] * p**i for i in range(0, n - t + 1) if i < len(m))
        for t in range(1, n + 1)
    )
    return OpSeq(ctx, entries, (0,) * n)


def psi_map(m, ctx: Context) -> OpSeq:
    """Psi(d^m) = the admissible sequence chi_min(d^m)."""
    return chi_min(m, ctx)


def psi_inverse(s: OpSeq) -> tuple[int, ...]:
    """The Dickson monomial with chi_min equal to s (s admissible,
    eps = 0, integral): consecutive differences of the entries."""
    if any(s.eps):
        raise DomainError("psi_inverse needs eps = 0")
    if any(t % 2 for t in s.twice):
        raise DomainError("psi_inverse needs integral entries")
    values = [t // 2 for t in s.twice]
    m = [values[0]] + [values[t] - values[t - 1] for t in range(1, len(values))]
    if any(x < 0 for x in m):
        raise DomainError("sequence is not weakly increasing")
    return tuple(m)


def psi_T(J, ctx: Context) -> OpSeq:
    """Psi_T(h^J) = e_J: identify an exponent vector with a sequence."""
    return OpSeq(ctx, tuple(2 * e for e in J), (0,) * ctx.n)


# ---------------------------------------------------------------------------
# Identity checks


def identity_checks(kind: str, params: tuple[int, ...], ctx: Context) -> bool:
    """Verify one of the Dickson-generator identities at given indices.

    kind "decomposition", params (k, s), 0 <= s < k < n:
        d_{k,s} d_{k+1,k} - d_{k+1,s}
          = sum_{t=0}^{s-1} d_{k-t-1,s-t}^(p^t) *
              (d_{k-t-1,k-t-2}^(p^(t+2)) h_{k-t}^(p^t) + h_{k-t}^(p^t(p+1)))
            + d_{k-s,0}^(p^s) d_{k-s,k-s-1}^(p^(s+1))
        as an exact polynomial identity.

    kind "inclusion", params (k, t, s), 0 <= s < k, t >= 1, k+t <= n:
        every monomial of d_{k+t,s} occurs in d_{k,s} d_{k+t,k}, and no
        monomial of their difference is divisible by h_{k+1}...h_{k+t}.

    kind "exchange", params (k, t, s, q), additionally 0 <= q < t:
        every monomial of d_{k+q,k} d_{k+t,s} occurs in
        d_{k+q,s} d_{k+t,k}, and no monomial of the difference is
        divisible by h_{k+q+1}...h_{k+t}.
    """
    ok, _ = identity_checks_detail(kind, params, ctx)
    return ok


def identity_checks_detail(kind, params, ctx) -> tuple[bool, str]:
    """As identity_checks, but also returns an offending monomial."""

    def d(width, s):
        return dickson_to_borel_recursive(width, s, ctx)

    p = ctx.p
    if kind == "decomposition":
        k, s = params
        if not 0 <= s < k:
            raise DomainError("decomposition identity needs 0 <= s < k")
        if k + 1 > ctx.n:
            raise DomainError("decomposition identity needs n >= k+1")
        lhs = d(k, s) * d(k + 1, k) - d(k + 1, s)
        rhs = BPoly(ctx)
        for t in range(s):
            head = d(k - t - 1, s - t).pow(p**t)
            inner = d(k - t - 1, k - t - 2).pow(p ** (t + 2)) * BPoly.variable(
                k - t, ctx, p**t
            ) + BPoly.variable(k - t, ctx, p**t * (p + 1))
            rhs = rhs + head * inner
        rhs = rhs + d(k - s, 0).pow(p**s) * d(k - s, k - s - 1).pow(p ** (s + 1))
        diff = lhs - rhs
        if diff.is_zero():
            return True, ""
        exps = next(iter(diff.terms))
        return False, f"difference has monomial {exps}"

    if kind == "inclusion":
        k, t, s = params
        if not (0 <= s < k and t >= 1):
            raise DomainError("inclusion identity needs 0 <= s < k and t >= 1")
        if k + t > ctx.n:
            raise DomainError("inclusion identity needs n >= k+t")
        small = d(k + t, s)
        big = d(k, s) * d(k + t, k)
        lo, hi = k, k + t  # 0-based positions of h_{k+1}..h_{k+t}
    elif kind == "exchange":
        k, t, s, q = params
        if not (0 <= s < k and 0 <= q < t):
            raise DomainError("exchange identity needs 0 <= s < k and 0 <= q < t")
        if k + t > ctx.n:
            raise DomainError("exchange identity needs n >= k+t")
        small = d(k + q, k) * d(k + t, s)
        big = d(k + q, s) * d(k + t, k)
        lo, hi = k + q, k + t
    else:
        raise DomainError(f"unknown identity kind {kind!r}")

    for exps in small.terms:
        if exps not in big.terms:
            return False, f"monomial {exps} missing from the product"
    diff = big - small
    for exps in diff.terms:
        if all(exps[i] >= 1 for i in range(lo, hi)):
            return False, f"difference monomial {exps} divisible by the h-block"
    return True, ""


# ---------------------------------------------------------------------------
# Realization in y-variables and invariance checking


def _guard_realize(ctx: Context):
    if ctx.n > 3 or (ctx.n == 3 and ctx.p > 3):
        raise DomainError("realization limited to n <= 3 (p <= 3 when n = 3)")


@lru_cache(maxsize=None)
def _h_realized(k: int, ctx: Context) -> YPoly:
    """h_k as a y-polynomial: the span-orbit product raised to p-1.

    h_k = (prod over u in the F_p-span of y_1..y_{k-1} of (y_k - u))^(p-1)
    with the exponent dropping to 1 at p = 2.
    """
    _guard_realize(ctx)
    p, n = ctx.p, ctx.n
    out = YPoly.one(ctx)
    for coeffs in product(range(p), repeat=k - 1):
        form = YPoly(ctx)
        form.add_term(tuple(1 if t == k - 1 else 0 for t in range(n)), 1)
        for i, c in enumerate(coeffs):
            if c:
                form.add_term(tuple(1 if t == i else 0 for t in range(n)), -c)
        out = out * form
    return out.pow(p - 1)


def realize_in_y(x, ctx: Context) -> YPoly:
    """Realize a BPoly or a Dickson exponent tuple in the y-variables
    (small n only).  h-monomials enter as single-term BPoly values."""
    _guard_realize(ctx)
    if isinstance(x, tuple):
        x = expand_dickson_monomial(tuple(x), ctx)
    if isinstance(x, BPoly):
        out = YPoly(ctx)
        for exps, coeff in x.terms.items():
            mono = YPoly.one(ctx)
            for k, e in enumerate(exps, start=1):
                if e:
                    mono = mono * _h_realized(k, ctx).pow(e)
            out = out + mono.scaled(coeff)
        return out
    raise DomainError(f"cannot realize {type(x).__name__}")


def _substitute(x: YPoly, mat) -> YPoly:
    """Apply the linear substitution y_a -> sum_b mat[a][b] y_b."""
    ctx = x.ctx
    forms = []
    for a in range(ctx.n):
        form = YPoly(ctx)
        for b, c in enumerate(mat[a]):
            if c:
                form.add_term(tuple(1 if t == b else 0 for t in range(ctx.n)), c)
        forms.append(form)
    out = YPoly(ctx)
    for exps, coeff in x.terms.items():
        mono = YPoly.one(ctx)
        for a, e in enumerate(exps):
            if e:
                mono = mono * forms[a].pow(e)
        out = out + mono.scaled(coeff)
    return out


def _primitive_root(p: int) -> int:
    for g in range(2, p):
        seen = set()
        val = 1
        for _ in range(p - 1):
            val = val * g % p
            seen.add(val)
        if len(seen) == p - 1:
            return g
    return 1


def _identity_matrix(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def borel_generators(ctx: Context) -> list:
    """Lower-unitriangular transvections y_a -> y_a + y_b (b < a) and,
    for odd p, one diagonal scaling per variable by a primitive root."""
    n, p = ctx.n, ctx.p
    gens = []
    for a in range(1, n):
        for b in range(a):
            mat = _identity_matrix(n)
            mat[a][b] = 1
            gens.append(mat)
    if p > 2:
        g = _primitive_root(p)
        for a in range(n):
            mat = _identity_matrix(n)
            mat[a][a] = g
            gens.append(mat)
    return gens


def gl_generators(ctx: Context) -> list:
    """Borel generators plus the adjacent transpositions.  One swap
    suffices at n = 2; from n = 3 on a single swap only generates a
    parabolic, so all n-1 adjacent swaps are included."""
    gens = borel_generators(ctx)
    for a in range(ctx.n - 1):
        mat = _identity_matrix(ctx.n)
        mat[a][a] = mat[a + 1][a + 1] = 0
        mat[a][a + 1] = mat[a + 1][a] = 1
        gens.append(mat)
    return gens


def check_invariance(x: YPoly, group: str, ctx: Context) -> bool:
    """True when x is fixed by every generator of the chosen group."""
    if group == "borel":
        gens = borel_generators(ctx)
    elif group == "gl":
        gens = gl_generators(ctx)
    else:
        raise DomainError(f"unknown group {group!r} (use 'borel' or 'gl')")
    return all(_substitute(x, mat) == x for mat in gens)
