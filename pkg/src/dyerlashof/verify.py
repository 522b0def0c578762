"""Verification suites behind `dyerlashof verify`.

Each suite returns (cases, failures): the number of cases checked and a
list of human-readable failure descriptions (empty on success).  Ranges
default to the documented acceptance ranges but can be narrowed through
--max-entry / --max-degree.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from math import comb

from .arith import Context, DomainError
from .correspondence import (
    _degree_data,
    adem_via_invariants,
    dickson_of_dual,
    dual_of_dickson,
)
from .invariants import (
    BPoly,
    check_invariance,
    dickson_monomial_degree,
    dickson_to_borel,
    dickson_to_borel_recursive,
    enumerate_A,
    matrix_to_monomial,
    realize_in_y,
)
from .opalgebra import OpPoly, adem_straighten_classical
from .sequences import OpSeq, compare

SUITES = (
    "oracle-equivalence",
    "dickson-oracles",
    "roundtrip",
    "triangularity",
    "identities",
    "invariance",
    "reference-vectors",
)

__all__ = ["SUITES", "thread_count", "run_suite"]


def thread_count() -> int:
    env = os.environ.get("DL_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _render_terms(x: OpPoly) -> str:
    from .textio import render_op_poly

    return render_op_poly(x)


def suite_oracle_equivalence(ctx: Context, max_entry: int = 8):
    """Classical rewriting vs invariant-theoretic solve (and the sweep
    fast path) on every eps = 0 sequence with entries <= max_entry."""
    inputs = [
        OpSeq(ctx, tuple(2 * v for v in vals), (0,) * ctx.n)
        for vals in itertools.product(range(max_entry + 1), repeat=ctx.n)
    ]

    def check(s: OpSeq):
        a = adem_via_invariants(s)
        b = adem_straighten_classical(OpPoly.from_seq(s))
        c = adem_via_invariants(s, method="sweep")
        if a == b == c:
            return None
        return (
            f"{s.twice}: invariants {_render_terms(a)} / classical "
            f"{_render_terms(b)} / sweep {_render_terms(c)}"
        )

    with ThreadPoolExecutor(max_workers=thread_count()) as pool:
        results = list(pool.map(check, inputs))
    return len(inputs), [r for r in results if r]


def suite_dickson_oracles(ctx: Context):
    """Closed formula = width recursion = matrix family, with the
    expected C(n, n-j) monomial count, for every generator."""
    failures = []
    cases = 0
    for j in range(ctx.n):
        cases += 1
        closed = dickson_to_borel(j, ctx)
        rec = dickson_to_borel_recursive(ctx.n, j, ctx)
        fam = BPoly(ctx)
        rows = enumerate_A(j, ctx)
        for A in rows:
            fam.add_term(matrix_to_monomial(A, ctx), 1)
        want = comb(ctx.n, ctx.n - j)
        if not (closed == rec == fam):
            failures.append(f"d_{{{ctx.n},{j}}}: oracle expansions disagree")
        elif len(closed.terms) != want or len(rows) != want:
            failures.append(
                f"d_{{{ctx.n},{j}}}: {len(closed.terms)} monomials, expected {want}"
            )
    return cases, failures


def _monomials_up_to(ctx: Context, max_sum: int):
    for m in itertools.product(range(max_sum + 1), repeat=ctx.n):
        if sum(m) <= max_sum:
            yield m


def suite_roundtrip(ctx: Context, max_sum: int = 6):
    """dickson_of_dual inverts dual_of_dickson on all d^m, sum m <= max_sum."""
    failures = []
    cases = 0
    for m in _monomials_up_to(ctx, max_sum):
        cases += 1
        d = dual_of_dickson(m, ctx)
        acc: dict = {}
        for J, c in d.terms.items():
            for mm, cc in dickson_of_dual(J).items():
                acc[mm] = (acc.get(mm, 0) + c * cc) % ctx.p
        acc = {k: v for k, v in acc.items() if v}
        if acc != {tuple(m): 1}:
            failures.append(f"d^{m}: round trip gave {acc}")
    return cases, failures


def suite_triangularity(ctx: Context, max_sum: int = 6):
    """Per-degree pairing matrices are unitriangular under compare."""
    failures = []
    degrees = sorted(
        {dickson_monomial_degree(m, ctx) for m in _monomials_up_to(ctx, max_sum)}
    )
    for D in degrees:
        ks, _ms, c = _degree_data(D, ctx)
        for i in range(len(ks)):
            if c[i][i] != 1:
                failures.append(f"degree {D}: diagonal entry {c[i][i]} at {ks[i].twice}")
            for j in range(len(ks)):
                if compare(ks[j], ks[i]) < 0 and c[i][j] != 0:
                    failures.append(
                        f"degree {D}: nonzero below diagonal at ({ks[i].twice},{ks[j].twice})"
                    )
    return len(degrees), failures


def suite_identities(ctx: Context):
    """Decomposition/inclusion/exchange identities at every index tuple
    that fits inside width n."""
    from .invariants import identity_checks_detail

    failures = []
    cases = 0
    n = ctx.n
    for k in range(1, n):
        for s in range(k):
            cases += 1
            ok, why = identity_checks_detail("decomposition", (k, s), ctx)
            if not ok:
                failures.append(f"decomposition k={k} s={s}: {why}")
    for k in range(1, n):
        for t in range(1, n - k + 1):
            for s in range(k):
                cases += 1
                ok, why = identity_checks_detail("inclusion", (k, t, s), ctx)
                if not ok:
                    failures.append(f"inclusion k={k} t={t} s={s}: {why}")
                for q in range(t):
                    cases += 1
                    ok, why = identity_checks_detail("exchange", (k, t, s, q), ctx)
                    if not ok:
                        failures.append(f"exchange k={k} t={t} s={s} q={q}: {why}")
    return cases, failures


def suite_invariance(ctx: Context):
    """Dickson generators are GL-invariant; Borel monomials (exponents
    up to 2) are Borel-invariant."""
    failures = []
    cases = 0
    for i in range(ctx.n):
        cases += 1
        y = realize_in_y(dickson_to_borel(i, ctx), ctx)
        if not check_invariance(y, "gl", ctx):
            failures.append(f"d_{{{ctx.n},{i}}} not GL-invariant")
    for exps in itertools.product(range(3), repeat=ctx.n):
        cases += 1
        y = realize_in_y(BPoly(ctx, {exps: 1}), ctx)
        if not check_invariance(y, "borel", ctx):
            failures.append(f"h^{exps} not Borel-invariant")
    return cases, failures


def _vec(ctx: Context, twice, eps=None) -> OpSeq:
    return OpSeq(ctx, tuple(twice), tuple(eps) if eps else (0,) * ctx.n)


def reference_vector_cases(p: int):
    """The frozen straightening vectors (length-2 relations).

    Odd p: the six eps = 0 closed-form vectors (k up to 3) plus the six
    Bockstein vectors (k up to 2, matched up to a unit).  p = 2: the
    derived pair from the even-prime oracle runs.
    """
    ctx = Context(p, 2)
    cases = []  # (label, input OpSeq, expected {(twice, eps): coeff}, up_to_unit)
    if p == 2:
        cases.append(("e[4,1]", _vec(ctx, (8, 2)), {((0, 6), (0, 0)): 1}, False))
        cases.append(("e[0,2]", _vec(ctx, (0, 4)), {((0, 4), (0, 0)): 1}, False))
        return cases
    for k in (1, 2, 3):
        q = p**k
        q1 = p ** (k - 1)
        cases.append(
            (f"e[{q},0]", _vec(ctx, (2 * q, 0)), {((0, 2 * q1), (0, 0)): 1}, False)
        )
        cases.append(
            (
                f"e[{q + 1},1]",
                _vec(ctx, (2 * q + 2, 2)),
                {((2, 2 * q1 + 2), (0, 0)): 1},
                False,
            )
        )
        if k >= 2:
            cases.append(
                (
                    f"e[{q},1]",
                    _vec(ctx, (2 * q, 2)),
                    {((0, 2 * q1 + 2), (0, 0)): 1},
                    False,
                )
            )
    cases.append(("e[1,0]", _vec(ctx, (2, 0)), {}, False))
    cases.append(("e[2,1]", _vec(ctx, (4, 2)), {}, False))
    cases.append((f"e[{p},1]", _vec(ctx, (2 * p, 2)), {((0, 4), (0, 0)): 2}, False))
    for k in (1, 2):
        q = p**k
        q1 = p ** (k - 1)
        cases.append(
            (
                f"e[{q}+1/2,1/2]",
                _vec(ctx, (2 * q + 1, 1)),
                {((1, 2 * q1 + 1), (0, 0)): 1},
                True,
            )
        )
        cases.append(
            (
                f"e[{q}]b e[1/2]",
                _vec(ctx, (2 * q, 1), (0, 1)),
                {((0, 2 * q1 + 1), (0, 1)): 1},
                True,
            )
        )
        cases.append(
            (
                f"e[{q}+1]b e[1/2]",
                _vec(ctx, (2 * q + 2, 1), (0, 1)),
                {((1, 2 * q1 + 1), (1, 0)): 1},
                True,
            )
        )
    cases.append(("e[3/2,1/2]", _vec(ctx, (3, 1)), {}, False))
    cases.append(("e[1]b e[1/2]", _vec(ctx, (2, 1), (0, 1)), {((1, 1), (1, 0)): 1}, True))
    cases.append(("e[2]b e[1/2]", _vec(ctx, (4, 1), (0, 1)), {}, False))
    return cases


def suite_reference_vectors(p: int):
    ctx = Context(p, 2)
    failures = []
    cases = reference_vector_cases(p)
    for label, s, expected_terms, up_to_unit in cases:
        expected = OpPoly(ctx)
        for (tw, ep), c in expected_terms.items():
            expected.add_term(tw, ep, c)
        got = adem_straighten_classical(OpPoly.from_seq(s))
        ok = got == expected
        if not ok and up_to_unit:
            ok = any(got == expected.scaled(u) for u in range(2, p))
        if ok and not any(s.eps) and not any(t % 2 for t in s.twice):
            ok = adem_via_invariants(s) == got
            if not ok:
                failures.append(f"{label}: engines disagree")
                continue
        if not ok:
            failures.append(
                f"{label}: got {_render_terms(got)}, expected {_render_terms(expected)}"
            )
    return len(cases), failures


def run_suite(
    name: str,
    p: int,
    n: int | None = None,
    max_entry: int | None = None,
    max_degree: int | None = None,
):
    """Dispatch one named suite; returns (cases, failures)."""
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r} (choose from {', '.join(SUITES)})")
    if name == "reference-vectors":
        return suite_reference_vectors(p)
    if n is None:
        raise DomainError(f"suite {name!r} needs --n")
    ctx = Context(p, n)
    if name == "oracle-equivalence":
        return suite_oracle_equivalence(ctx, max_entry if max_entry is not None else 8)
    if name == "dickson-oracles":
        return suite_dickson_oracles(ctx)
    if name == "roundtrip":
        return suite_roundtrip(ctx, max_degree if max_degree is not None else 6)
    if name == "triangularity":
        return suite_triangularity(ctx, max_degree if max_degree is not None else 6)
    if name == "identities":
        return suite_identities(ctx)
    return suite_invariance(ctx)
