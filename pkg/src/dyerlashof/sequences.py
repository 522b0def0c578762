"""Index sequences for iterated mod-p Dyer-Lashof operations.

A length-n operation in lower notation is e_{j_1} e_{j_2} ... e_{j_n}
(optionally with a Bockstein in front of individual factors), where each
j_t is a non-negative integer or, for odd p, a half integer.  The same
monomial in upper notation is f^{i_1} ... f^{i_n} with

    i_t = j_t + |suffix after position t| / 2.

To keep all arithmetic exact, entries are stored doubled: the sequence
(3, 1/2) is stored as twice = (6, 1).  Bocksteins are a parallel 0/1
tuple ``eps``; eps_t = 1 means a Bockstein in front of the t-th factor.

    >>> ctx = Context(3, 2)
    >>> s = OpSeq.from_values(ctx, [0, 2])
    >>> degree(s)
    24
    >>> lower_to_upper(s).twice
    (8, 4)
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import Context, DomainError

__all__ = [
    "OpSeq",
    "UpperSeq",
    "degree",
    "degree_lower",
    "degree_upper",
    "excess",
    "excess_lower",
    "excess_upper",
    "is_admissible",
    "compare",
    "lower_to_upper",
    "upper_to_lower",
    "direct_sum",
    "family",
    "FAMILY_KINDS",
]


def _check_entries(ctx: Context, twice: tuple[int, ...], eps: tuple[int, ...]):
    if len(twice) != ctx.n:
        raise DomainError(f"expected {ctx.n} entries, got {len(twice)}")
    if len(eps) != ctx.n:
        raise DomainError(f"expected {ctx.n} eps flags, got {len(eps)}")
    if any(e not in (0, 1) for e in eps):
        raise DomainError(f"eps flags must be 0 or 1, got {eps}")
    if any(t < 0 for t in twice):
        raise DomainError(f"entries must be >= 0, got {_halves_str(twice)}")
    if ctx.p == 2:
        if any(e for e in eps):
            raise DomainError("p = 2 sequences cannot carry Bocksteins")
        if any(t % 2 for t in twice):
            raise DomainError("p = 2 entries must be integers")


def _halves_str(twice) -> str:
    return "(" + ",".join(entry_str(t) for t in twice) + ")"


def entry_str(twice_value: int) -> str:
    """Render a doubled entry as '3' or '3/2'."""
    if twice_value % 2 == 0:
        return str(twice_value // 2)
    return f"{twice_value}/2"


def entry_from_str(text: str) -> int:
    """Parse '3' or '3/2' into a doubled entry."""
    text = text.strip()
    if text.endswith("/2"):
        return int(text[:-2])
    return 2 * int(text)


@dataclass(frozen=True)
class OpSeq:
    """Lower-notation index sequence with doubled entries."""

    ctx: Context
    twice: tuple[int, ...]
    eps: tuple[int, ...]

    def __post_init__(self):
        _check_entries(self.ctx, self.twice, self.eps)

    @classmethod
    def from_values(cls, ctx: Context, values, eps=None) -> "OpSeq":
        """Build from plain values: ints, or strings like '3/2'."""
        twice = tuple(
            entry_from_str(v) if isinstance(v, str) else 2 * v for v in values
        )
        return cls(ctx, twice, _normalize_eps(ctx, eps))

    def key(self) -> tuple[int, ...]:
        """Per-position tail excess vector (2 j_t - eps_t); see compare()."""
        return tuple(t - e for t, e in zip(self.twice, self.eps))


@dataclass(frozen=True)
class UpperSeq:
    """Upper-notation index sequence with doubled entries."""

    ctx: Context
    twice: tuple[int, ...]
    eps: tuple[int, ...]

    def __post_init__(self):
        _check_entries(self.ctx, self.twice, self.eps)

    @classmethod
    def from_values(cls, ctx: Context, values, eps=None) -> "UpperSeq":
        twice = tuple(
            entry_from_str(v) if isinstance(v, str) else 2 * v for v in values
        )
        return cls(ctx, twice, _normalize_eps(ctx, eps))


def _normalize_eps(ctx: Context, eps) -> tuple[int, ...]:
    if eps is None:
        return (0,) * ctx.n
    return tuple(int(e) for e in eps)


def degree_lower(s: OpSeq) -> int:
    """Topological degree of e_{I,eps}.

    For odd p: 2(p-1) sum j_t p^(t-1) - sum eps_t p^(t-1); for p = 2:
    sum j_t 2^(t-1).  Always an integer, even with half entries.
    """
    p = s.ctx.p
    if p == 2:
        return sum((t // 2) << pos for pos, t in enumerate(s.twice))
    total = 0
    for pos, (t, e) in enumerate(zip(s.twice, s.eps)):
        total += (t * (p - 1) - e) * p**pos
    return total


def degree_upper(s: UpperSeq) -> int:
    """Topological degree of f^{I,eps}: each factor f^i contributes
    2 i (p-1) (just i for p = 2), a Bockstein subtracts 1."""
    p = s.ctx.p
    if p == 2:
        return sum(t // 2 for t in s.twice)
    return (p - 1) * sum(s.twice) - sum(s.eps)


def degree(s: OpSeq | UpperSeq) -> int:
    """Topological degree of the operation named by s (either notation)."""
    if isinstance(s, UpperSeq):
        return degree_upper(s)
    return degree_lower(s)


def excess_lower(s: OpSeq) -> int:
    """Excess 2 j_1 - eps_1, reported in doubled form (an integer)."""
    if not s.twice:
        raise DomainError("excess of the empty sequence is undefined")
    return s.twice[0] - s.eps[0]


def excess_upper(s: UpperSeq) -> int:
    """Excess i_1 - eps_1 - 2(p-1) sum_{t>=2} i_t (p=2: i_1 - sum i_t)."""
    if not s.twice:
        raise DomainError("excess of the empty sequence is undefined")
    p = s.ctx.p
    tail_twice = sum(s.twice[1:])
    if p == 2:
        return (s.twice[0] - tail_twice) // 2
    doubled = s.twice[0] - 2 * s.eps[0] - 2 * (p - 1) * tail_twice
    if doubled % 2:
        raise DomainError("upper excess is half-integral for this sequence")
    return doubled // 2


def excess(s: OpSeq | UpperSeq) -> int:
    """Excess in the matching notation (lower result is doubled)."""
    if isinstance(s, UpperSeq):
        return excess_upper(s)
    return excess_lower(s)


def is_admissible(s: OpSeq) -> bool:
    """True when 2 j_t - 2 j_{t-1} + eps_{t-1} >= 0 for t = 2..n.

    Length-1 sequences are always admissible.  With all eps zero this
    says the entries are weakly increasing.
    """
    return all(
        s.twice[t] - s.twice[t - 1] + s.eps[t - 1] >= 0 for t in range(1, len(s.twice))
    )


def compare(a: OpSeq, b: OpSeq) -> int:
    """Order sequences by their tail-excess vectors, lexicographically.

    Returns -1, 0 or 1.  This is a total preorder: sequences differing
    only in how an excess value is split between entry and Bockstein
    compare equal.
    """
    ka, kb = a.key(), b.key()
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


def lower_to_upper(s: OpSeq) -> UpperSeq:
    """Convert lower to upper notation: i_t = j_t + |suffix|/2.

    Raises DomainError if a negative upper entry would be produced.
    """
    p = s.ctx.p
    twice_up = []
    for t in range(s.ctx.n):
        suffix = _suffix_degree(s, t + 1)
        if p == 2:
            value = s.twice[t] + 2 * suffix
        else:
            value = s.twice[t] + suffix
        if value < 0:
            raise DomainError(f"upper entry {t + 1} is negative")
        twice_up.append(value)
    return UpperSeq(s.ctx, tuple(twice_up), s.eps)


def upper_to_lower(u: UpperSeq) -> OpSeq:
    """Convert upper to lower notation (inverse of lower_to_upper).

    Raises DomainError if a negative lower entry would be produced.
    """
    p = u.ctx.p
    n = u.ctx.n
    twice_low = list(u.twice)
    # peel from the right: once positions t+1..n are known in lower
    # form, their standalone degree gives the shift at position t.
    for t in range(n - 2, -1, -1):
        tail = OpSeq(
            Context(p, n - t - 1), tuple(twice_low[t + 1 :]), u.eps[t + 1 :]
        )
        shift = degree_lower(tail)
        if p == 2:
            twice_low[t] = u.twice[t] - 2 * shift
        else:
            twice_low[t] = u.twice[t] - shift
        if twice_low[t] < 0:
            raise DomainError(f"lower entry {t + 1} is negative")
    return OpSeq(u.ctx, tuple(twice_low), u.eps)


def _suffix_degree(s: OpSeq, start: int) -> int:
    """Degree of the standalone suffix s[start:], 0-based start."""
    if start >= s.ctx.n:
        return 0
    tail = OpSeq(Context(s.ctx.p, s.ctx.n - start), s.twice[start:], s.eps[start:])
    return degree_lower(tail)


def suffix_excesses(s: OpSeq) -> tuple[int, ...]:
    """The excess of each standalone suffix: just 2 j_t - eps_t."""
    return s.key()


def direct_sum(a: OpSeq, b: OpSeq) -> OpSeq:
    """Concatenate two lower sequences (the length-additive product)."""
    if a.ctx.p != b.ctx.p:
        raise DomainError("direct sum needs matching primes")
    ctx = Context(a.ctx.p, a.ctx.n + b.ctx.n)
    return OpSeq(ctx, a.twice + b.twice, a.eps + b.eps)


FAMILY_KINDS = ("I", "J", "K", "O", "J0", "K0")


def family(kind: str, params: tuple[int, ...], ctx: Context) -> OpSeq:
    """Build one of the named test families of lower sequences.

    kind "I", params (i):    i zeros then n-i ones; no Bocksteins.
    kind "J", params (i):    i halves then n-i ones; Bockstein at i+1.
    kind "K", params (s, i): s zeros, i-s halves, n-i ones; Bocksteins
                             at s+1 and i+1.
    kind "O", params (i):    a single 1 at position i, zeros elsewhere.
    kind "J0", params (i):   i-1 halves, then 1, then zeros; Bockstein
                             at position i.
    kind "K0", params (s, i): s zeros, i-s-1 halves, then 1, then
                             zeros; Bocksteins at s+1 and i.

    The J/K kinds (half entries, Bocksteins) require odd p.
    """
    n = ctx.n
    if kind not in FAMILY_KINDS:
        raise DomainError(f"unknown family kind {kind!r}")
    if kind != "I" and kind != "O" and ctx.p == 2:
        raise DomainError(f"family {kind} needs odd p")
    if kind == "I":
        (i,) = params
        if not 0 <= i <= n - 1:
            raise DomainError(f"family I needs 0 <= i <= {n - 1}")
        return OpSeq(ctx, (0,) * i + (2,) * (n - i), (0,) * n)
    if kind == "J":
        (i,) = params
        if not 0 <= i <= n - 1:
            raise DomainError(f"family J needs 0 <= i <= {n - 1}")
        eps = tuple(1 if t == i else 0 for t in range(n))
        return OpSeq(ctx, (1,) * i + (2,) * (n - i), eps)
    if kind == "K":
        s, i = params
        if not 0 <= s < i <= n - 1:
            raise DomainError(f"family K needs 0 <= s < i <= {n - 1}")
        eps = tuple(1 if t in (s, i) else 0 for t in range(n))
        return OpSeq(ctx, (0,) * s + (1,) * (i - s) + (2,) * (n - i), eps)
    if kind == "O":
        (i,) = params
        if not 1 <= i <= n:
            raise DomainError(f"family O needs 1 <= i <= {n}")
        return OpSeq(ctx, (0,) * (i - 1) + (2,) + (0,) * (n - i), (0,) * n)
    if kind == "J0":
        (i,) = params
        if not 1 <= i <= n:
            raise DomainError(f"family J0 needs 1 <= i <= {n}")
        eps = tuple(1 if t == i - 1 else 0 for t in range(n))
        return OpSeq(ctx, (1,) * (i - 1) + (2,) + (0,) * (n - i), eps)
    # K0
    s, i = params
    if not (0 <= s <= i - 2 and i <= n):
        raise DomainError(f"family K0 needs 0 <= s <= i-2 and i <= {n}")
    eps = tuple(1 if t in (s, i - 1) else 0 for t in range(n))
    return OpSeq(ctx, (0,) * s + (1,) * (i - s - 1) + (2,) + (0,) * (n - i), eps)
