"""Tests for sequence bookkeeping: degree, excess, conversion, families."""

import itertools

import pytest

from dyerlashof.arith import Context, DomainError
from dyerlashof.sequences import (
    OpSeq,
    UpperSeq,
    compare,
    degree,
    degree_lower,
    degree_upper,
    direct_sum,
    entry_from_str,
    entry_str,
    excess,
    excess_lower,
    excess_upper,
    family,
    is_admissible,
    lower_to_upper,
    upper_to_lower,
)

P3N2 = Context(3, 2)
P2N2 = Context(2, 2)


def seq(ctx, values, eps=None):
    return OpSeq.from_values(ctx, values, eps)


def test_validation():
    with pytest.raises(DomainError):
        OpSeq(P2N2, (3, 0), (0, 0))  # half entry at p=2
    with pytest.raises(DomainError):
        OpSeq(P2N2, (2, 0), (1, 0))  # Bockstein at p=2
    with pytest.raises(DomainError):
        OpSeq(P3N2, (-2, 0), (0, 0))  # negative entry
    with pytest.raises(DomainError):
        OpSeq(P3N2, (2, 0, 0), (0, 0, 0))  # wrong length
    with pytest.raises(DomainError):
        OpSeq(P3N2, (2, 0), (0, 2))  # eps not a bit
    # half entries are fine at odd p
    OpSeq(P3N2, (3, 1), (1, 1))


def test_entry_strings():
    assert entry_str(6) == "3"
    assert entry_str(3) == "3/2"
    assert entry_str(0) == "0"
    assert entry_from_str("3") == 6
    assert entry_from_str("3/2") == 3
    for twice in range(30):
        assert entry_from_str(entry_str(twice)) == twice


def test_degree_lower_examples():
    assert degree_lower(seq(P3N2, (0, 2))) == 24
    assert degree_lower(seq(P2N2, (1, 1))) == 3
    assert degree_lower(family("I", (1,), P3N2)) == 12  # 2 p^i (p^(n-i) - 1)
    assert degree_lower(seq(Context(3, 3), (0, 0, 0))) == 0


def test_degree_upper_examples():
    assert degree_upper(UpperSeq.from_values(P3N2, (4, 2))) == 24
    assert degree_upper(UpperSeq.from_values(Context(5, 3), (0, 0, 0))) == 0
    assert degree_upper(UpperSeq.from_values(P2N2, (2, 1))) == 3
    assert degree(UpperSeq.from_values(P3N2, (4, 2))) == 24


def test_excess_lower_examples():
    # reported in doubled form: 2 j_1 - eps_1
    assert excess_lower(seq(P3N2, (0, 2))) == 0
    assert excess_lower(seq(P3N2, (3, 1))) == 6
    assert excess_lower(family("J", (1,), P3N2)) == 1
    assert excess(seq(P3N2, (3, 1))) == 6


def test_excess_upper_examples():
    assert excess_upper(UpperSeq.from_values(P3N2, (4, 2))) == -4
    assert excess_upper(UpperSeq.from_values(P2N2, (4, 1))) == 3
    assert excess_upper(UpperSeq.from_values(Context(3, 1), (5,))) == 5
    assert excess_upper(UpperSeq.from_values(Context(7, 1), (0,))) == 0


def test_conversion_examples():
    up = lower_to_upper(seq(P3N2, (0, 2)))
    assert (up.twice, up.eps) == ((8, 4), (0, 0))
    zero = lower_to_upper(seq(Context(5, 3), (0, 0, 0)))
    assert zero.twice == (0, 0, 0)
    low = upper_to_lower(UpperSeq.from_values(P2N2, (4, 1)))
    assert (low.twice, low.eps) == ((6, 2), (0, 0))


def test_conversion_out_of_range():
    # upper (0, 1) at p=2 would need lower entry -1
    with pytest.raises(DomainError):
        upper_to_lower(UpperSeq.from_values(P2N2, (0, 1)))


def all_lower(ctx, max_twice):
    """Every valid lower sequence with twice entries <= max_twice."""
    n = ctx.n
    step = 2 if ctx.p == 2 else 1
    entries = range(0, max_twice + 1, step)
    eps_choices = [(0,) * n] if ctx.p == 2 else list(itertools.product((0, 1), repeat=n))
    for twice in itertools.product(entries, repeat=n):
        for eps in eps_choices:
            yield OpSeq(ctx, twice, eps)


def suffix_degrees(s):
    n = s.ctx.n
    for start in range(1, n):
        tail = OpSeq(Context(s.ctx.p, n - start), s.twice[start:], s.eps[start:])
        yield degree_lower(tail)


def test_roundtrip_exhaustive():
    # entries <= 10 (twice <= 20), n <= 3; degree agrees across notations.
    # A Bockstein-heavy suffix of negative degree (e.g. beta on e_0) has
    # no upper form; the conversion must flag exactly those.
    for p in (2, 3):
        for n in (1, 2, 3):
            ctx = Context(p, n)
            bound = 20 if n <= 2 else 8
            for s in all_lower(ctx, bound):
                try:
                    u = lower_to_upper(s)
                except DomainError:
                    assert min(suffix_degrees(s)) < 0
                    continue
                assert upper_to_lower(u) == s
                assert degree_upper(u) == degree_lower(s)


def test_admissible_examples():
    assert is_admissible(seq(P3N2, (0, 2)))
    assert not is_admissible(seq(P3N2, (3, 1)))
    assert is_admissible(seq(Context(3, 3), (1, 1, 2)))
    # Bockstein relaxes the constraint by one half step
    assert is_admissible(OpSeq(P3N2, (2, 1), (1, 0)))
    assert not is_admissible(OpSeq(P3N2, (2, 1), (0, 1)))


def test_admissible_is_monotone_for_eps_zero():
    for s in all_lower(Context(3, 3), 6):
        if any(s.eps):
            continue
        assert is_admissible(s) == (sorted(s.twice) == list(s.twice))


def test_compare_examples():
    assert compare(seq(P3N2, (0, 3)), seq(P3N2, (2, 2))) == -1
    assert compare(seq(P3N2, (2, 2)), seq(P3N2, (0, 3))) == 1
    s = seq(P3N2, (1, 2))
    assert compare(s, s) == 0
    assert compare(seq(P3N2, (1, 2)), seq(P3N2, (0, 3))) == 1


def test_compare_total_preorder():
    pool = list(all_lower(Context(3, 2), 5))
    for a in pool[:40]:
        for b in pool[:40]:
            assert compare(a, b) == -compare(b, a)
    # antisymmetry on admissibles of one fixed degree and length
    fixed = [s for s in pool if is_admissible(s) and degree_lower(s) == 24]
    for a in fixed:
        for b in fixed:
            if compare(a, b) == 0 and compare(b, a) == 0:
                assert a == b


def test_direct_sum_examples():
    one = Context(3, 1)
    s = direct_sum(seq(one, (1,)), seq(one, (2,)))
    assert (s.twice, s.eps) == ((2, 4), (0, 0))
    assert s.ctx.n == 2
    zero2 = seq(Context(3, 2), (0, 0))
    s2 = direct_sum(zero2, seq(Context(3, 2), (1, 1)))
    assert s2.twice == (0, 0, 2, 2)
    empty = OpSeq(Context(3, 0), (), ())
    s3 = direct_sum(seq(P3N2, (3, 1)), empty)
    assert s3 == seq(P3N2, (3, 1))
    with pytest.raises(DomainError):
        direct_sum(seq(one, (1,)), seq(Context(5, 1), (1,)))


def test_family_examples():
    i21 = family("I", (1,), P3N2)
    assert (i21.twice, i21.eps) == ((0, 2), (0, 0))
    o32 = family("O", (2,), Context(3, 3))
    assert (o32.twice, o32.eps) == ((0, 2, 0), (0, 0, 0))
    assert degree_lower(o32) == 12  # 2 p^(i-1) (p-1)
    k201 = family("K", (0, 1), P3N2)
    assert (k201.twice, k201.eps) == ((1, 2), (1, 1))
    assert degree_lower(k201) == 10  # 2 (p^i (p^(n-i) - 1) - p^s)


def test_family_closed_forms():
    # stated degree and excess formulas, all in-range parameters
    for p in (2, 3, 5):
        for n in (1, 2, 3):
            ctx = Context(p, n)
            for i in range(n):
                s = family("I", (i,), ctx)
                assert degree_lower(s) == 2 * p**i * (p ** (n - i) - 1) // (
                    2 if p == 2 else 1
                )
                if i >= 1:
                    assert excess_lower(s) == 0
            for i in range(1, n + 1):
                s = family("O", (i,), ctx)
                expected = 2 * p ** (i - 1) * (p - 1)
                assert degree_lower(s) == (expected // 2 if p == 2 else expected)
                if i >= 2:
                    assert excess_lower(s) == 0
            if p == 2:
                continue
            for i in range(n):
                s = family("J", (i,), ctx)
                assert degree_lower(s) == 2 * p**i * (p ** (n - i) - 1) - 1
                assert excess_lower(s) == 1
            for i in range(1, n + 1):
                s = family("J0", (i,), ctx)
                assert degree_lower(s) == 2 * p ** (i - 1) * (p - 1) - 1
                assert excess_lower(s) == 1
            for i in range(n):
                for sdx in range(i):
                    s = family("K", (sdx, i), ctx)
                    assert degree_lower(s) == 2 * (p**i * (p ** (n - i) - 1) - p**sdx)
                    assert excess_lower(s) == 0
            for i in range(2, n + 1):
                for sdx in range(i - 1):
                    s = family("K0", (sdx, i), ctx)
                    assert degree_lower(s) == 2 * (p**i - p**sdx - p ** (i - 1))
                    assert excess_lower(s) == 0


def test_family_guards():
    with pytest.raises(DomainError):
        family("I", (2,), P3N2)
    with pytest.raises(DomainError):
        family("J", (0,), P2N2)  # needs odd p
    with pytest.raises(DomainError):
        family("K", (1, 1), P3N2)  # needs s < i
    with pytest.raises(DomainError):
        family("X", (0,), P3N2)
