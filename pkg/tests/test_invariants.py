"""Tests for the Borel/Dickson polynomial side."""

import itertools

import pytest

from dyerlashof.arith import Context, DomainError
from dyerlashof.invariants import (
    BPoly,
    check_invariance,
    chi_max,
    chi_min,
    coeff_by_multinomial,
    coeff_in_expansion,
    dickson_degree,
    dickson_monomial_degree,
    dickson_to_borel,
    dickson_to_borel_recursive,
    enumerate_A,
    expand_dickson_monomial,
    h_monomial_degree,
    matrix_to_monomial,
    psi_T,
    psi_inverse,
    psi_map,
    realize_in_y,
)
from dyerlashof.sequences import OpSeq, compare

P3N2 = Context(3, 2)
P2N2 = Context(2, 2)
P2N3 = Context(2, 3)


def test_dickson_to_borel_examples():
    assert dickson_to_borel(1, P3N2).terms == {(3, 0): 1, (0, 1): 1}
    assert dickson_to_borel(0, P3N2).terms == {(1, 1): 1}
    assert dickson_to_borel(0, P2N2).terms == {(1, 1): 1}
    assert dickson_to_borel(2, P2N3).terms == {(4, 0, 0): 1, (0, 2, 0): 1, (0, 0, 1): 1}


def test_recursive_examples():
    assert dickson_to_borel_recursive(2, 1, P3N2) == dickson_to_borel(1, P3N2)
    assert dickson_to_borel_recursive(1, 0, P3N2).terms == {(1, 0): 1}
    assert dickson_to_borel_recursive(2, 2, P3N2).terms == {(0, 0): 1}
    assert dickson_to_borel_recursive(2, -1, P3N2).is_zero()


def test_matrix_family_examples():
    rows = enumerate_A(1, P3N2)
    assert sorted(r.a for r in rows) == [(0, 1), (1, 0)]
    monos = {matrix_to_monomial(r, P3N2) for r in rows}
    assert monos == {(3, 0), (0, 1)}
    rows0 = enumerate_A(0, P3N2)
    assert [r.a for r in rows0] == [(1, 1)]
    assert matrix_to_monomial(rows0[0], P3N2) == (1, 1)
    rows31 = enumerate_A(1, P2N3)
    assert sorted(r.a for r in rows31) == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
    monos31 = {matrix_to_monomial(r, P2N3) for r in rows31}
    assert monos31 == {(2, 2, 0), (2, 0, 1), (0, 1, 1)}


def test_triple_oracle_agreement():
    for p in (2, 3, 5):
        for n in (1, 2, 3, 4):
            ctx = Context(p, n)
            for j in range(n):
                closed = dickson_to_borel(j, ctx)
                recursive = dickson_to_borel_recursive(n, j, ctx)
                rows = enumerate_A(j, ctx)
                from_rows = BPoly(ctx)
                for r in rows:
                    from_rows.add_term(matrix_to_monomial(r, ctx), 1)
                assert closed == recursive == from_rows, (p, n, j)
                assert len(closed.terms) == len(rows)


def test_monomial_counts():
    import math

    for p in (2, 3, 5):
        for n in (1, 2, 3, 4):
            ctx = Context(p, n)
            for j in range(n):
                assert len(dickson_to_borel(j, ctx).terms) == math.comb(n, n - j)


def test_expand_examples():
    assert expand_dickson_monomial((0, 2), P3N2).terms == {
        (6, 0): 1,
        (3, 1): 2,
        (0, 2): 1,
    }
    assert expand_dickson_monomial((0, 3), P2N2).terms == {
        (6, 0): 1,
        (4, 1): 1,
        (2, 2): 1,
        (0, 3): 1,
    }
    assert expand_dickson_monomial((0, 0), P3N2).terms == {(0, 0): 1}


def test_coeff_examples():
    assert coeff_in_expansion((0, 2), (3, 1), P3N2) == 2
    assert coeff_in_expansion((0, 3), (2, 2), P2N2) == 1
    # (4,0) has the degree of d_{2,0} but is not in its support
    assert coeff_in_expansion((1, 0), (4, 0), P3N2) == 0
    assert coeff_by_multinomial((0, 2), (3, 1), P3N2) == 2
    assert coeff_by_multinomial((0, 3), (2, 2), P2N2) == 1
    assert coeff_by_multinomial((1, 0), (4, 0), P3N2) == 0


def monomials_up_to(n, max_sum):
    for m in itertools.product(range(max_sum + 1), repeat=n):
        if sum(m) <= max_sum:
            yield m


def test_coeff_formula_matches_expansion():
    for p in (2, 3):
        for n in (1, 2, 3):
            ctx = Context(p, n)
            for m in monomials_up_to(n, 3):
                expansion = expand_dickson_monomial(m, ctx)
                for J in expansion.terms:
                    assert coeff_by_multinomial(m, J, ctx) == expansion.terms[J], (
                        p,
                        n,
                        m,
                        J,
                    )


def test_degree_formulas():
    assert dickson_degree(0, P3N2) == 16
    assert dickson_degree(1, P3N2) == 12
    assert [dickson_degree(i, P2N3) for i in range(3)] == [7, 6, 4]
    assert dickson_monomial_degree((1, 2), P3N2) == 40
    assert h_monomial_degree((3, 1), P3N2) == 24
    assert h_monomial_degree((1, 1), P2N2) == 3


def test_homogeneity():
    for p in (2, 3):
        for n in (1, 2, 3):
            ctx = Context(p, n)
            for m in monomials_up_to(n, 4):
                want = dickson_monomial_degree(m, ctx)
                for exps in expand_dickson_monomial(m, ctx).terms:
                    assert h_monomial_degree(exps, ctx) == want


def test_frobenius_shortcut():
    for p in (2, 3):
        for n in (2, 3):
            ctx = Context(p, n)
            for m in monomials_up_to(n, 3):
                scaled = tuple(p * x for x in m)
                assert expand_dickson_monomial(scaled, ctx) == expand_dickson_monomial(
                    m, ctx
                ).frobenius(1)


def test_chi_examples():
    assert chi_min((0, 2), P3N2).twice == (0, 4)
    assert chi_min((1, 1), P3N2).twice == (2, 4)
    assert chi_max((0, 1), P3N2).twice == (6, 0)
    assert chi_max((0, 1), P2N2).twice == (4, 0)
    assert chi_min((0, 0), P3N2).twice == (0, 0)


def test_chi_extremality():
    # chi_min / chi_max are the compare-extremes of the expansion
    # support, both with coefficient 1
    for p in (2, 3):
        for n in (1, 2):
            ctx = Context(p, n)
            for m in monomials_up_to(n, 4):
                expansion = expand_dickson_monomial(m, ctx)
                seqs = sorted(
                    (psi_T(exps, ctx) for exps in expansion.terms),
                    key=lambda s: s.key(),
                )
                lo, hi = chi_min(m, ctx), chi_max(m, ctx)
                assert seqs[0].twice == lo.twice
                assert seqs[-1].twice == hi.twice
                assert expansion.terms[tuple(t // 2 for t in lo.twice)] == 1
                assert expansion.terms[tuple(t // 2 for t in hi.twice)] == 1


def test_psi_maps():
    s = psi_map((0, 2), P3N2)
    assert isinstance(s, OpSeq) and s.twice == (0, 4)
    assert psi_T((3, 1), P3N2).twice == (6, 2)
    assert psi_inverse(chi_min((2, 1, 3), Context(3, 3))) == (2, 1, 3)
    for m in monomials_up_to(3, 5):
        assert psi_inverse(chi_min(m, Context(2, 3))) == m


def test_psi_inverse_guards():
    with pytest.raises(DomainError):
        psi_inverse(OpSeq(P3N2, (2, 0), (0, 0)))  # decreasing
    with pytest.raises(DomainError):
        psi_inverse(OpSeq(P3N2, (1, 2), (0, 0)))  # half entry
    with pytest.raises(DomainError):
        psi_inverse(OpSeq(P3N2, (0, 2), (0, 1)))  # Bockstein


def test_identity_examples():
    from dyerlashof.invariants import identity_checks

    assert identity_checks("inclusion", (2, 1, 0), P2N3)
    assert identity_checks("decomposition", (1, 0), P3N2)
    assert identity_checks("exchange", (2, 1, 0, 0), P2N3)


def test_identity_guards():
    from dyerlashof.invariants import identity_checks

    with pytest.raises(DomainError):
        identity_checks("decomposition", (1, 1), P3N2)  # needs s < k
    with pytest.raises(DomainError):
        identity_checks("inclusion", (3, 1, 0), P2N3)  # width k+t > n
    with pytest.raises(DomainError):
        identity_checks("nonsense", (1, 0), P3N2)


def test_realize_examples():
    c31 = Context(3, 1)
    assert realize_in_y((1,), c31).terms == {(2,): 1}
    assert check_invariance(realize_in_y((1,), c31), "gl", c31)
    h2 = realize_in_y(BPoly.variable(2, P2N2), P2N2)
    assert h2.terms == {(0, 2): 1, (1, 1): 1}
    assert check_invariance(h2, "borel", P2N2)
    assert not check_invariance(h2, "gl", P2N2)
    d21 = realize_in_y((0, 1), P2N2)
    assert check_invariance(d21, "gl", P2N2)


def test_realize_guards():
    with pytest.raises(DomainError):
        realize_in_y((1, 0, 0, 0), Context(2, 4))
    with pytest.raises(DomainError):
        realize_in_y((1, 0, 0), Context(5, 3))
    with pytest.raises(DomainError):
        check_invariance(realize_in_y((1,), Context(3, 1)), "parabolic", Context(3, 1))


def test_realized_dicksons_are_gl_invariant():
    for p, n_max in ((2, 3), (3, 2)):
        for n in range(1, n_max + 1):
            ctx = Context(p, n)
            for i in range(n):
                m = tuple(1 if t == i else 0 for t in range(n))
                y = realize_in_y(expand_dickson_monomial(m, ctx), ctx)
                assert check_invariance(y, "gl", ctx), (p, n, i)


def test_realized_h_monomials_are_borel_invariant():
    for p, n_max in ((2, 3), (3, 2)):
        for n in range(1, n_max + 1):
            ctx = Context(p, n)
            for exps in itertools.product(range(2), repeat=n):
                y = realize_in_y(BPoly(ctx, {exps: 1}), ctx)
                assert check_invariance(y, "borel", ctx), (p, n, exps)
