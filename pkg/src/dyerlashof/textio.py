"""Parsing and rendering of element expressions.

Grammar: sequences `e[3,1]`, `Q[3/2,1;eps=01]` (entries are integers or
halves `k/2`, the eps block is n concatenated bits), Dickson monomials
`d1^3*d0` (indices 0..n-1), Borel monomials `h1^3*h2` (indices 1..n).
Whitespace is insignificant; parse errors carry byte offsets.

Rendering is canonical: operation terms ascend under compare, monomials
ascend in reverse-lex exponent order, coefficients sit in 1..p-1 and a
zero element renders as `0`.
"""

from __future__ import annotations

from .arith import Context, DomainError
from .correspondence import DualExpansion
from .invariants import BPoly
from .opalgebra import OpPoly, TensorPoly
from .sequences import OpSeq, UpperSeq, entry_from_str, entry_str

__all__ = [
    "ParseError",
    "parse",
    "parse_sequence",
    "parse_any_sequence",
    "parse_dickson",
    "parse_borel",
    "render_seq",
    "render_upper_seq",
    "render_op_poly",
    "render_dual",
    "render_bpoly",
    "render_dickson_combo",
    "render_tensor",
    "seq_to_json",
    "seq_from_json",
    "op_poly_to_json",
    "op_poly_from_json",
    "dual_to_json",
    "dual_from_json",
    "bpoly_to_json",
    "bpoly_from_json",
    "dickson_combo_to_json",
    "dickson_combo_from_json",
    "tensor_to_json",
    "tensor_from_json",
]


class ParseError(DomainError):
    """Syntax or range error in an element expression."""

    def __init__(self, msg: str, offset: int):
        super().__init__(f"{msg} (byte {offset})")
        self.offset = offset


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def _skip_ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self._skip_ws()
        return self.text[self.i] if self.i < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        if ch:
            self.i += 1
        return ch

    def expect(self, ch: str):
        got = self.peek()
        if got != ch:
            raise ParseError(f"expected {ch!r}, got {got!r}", self.i)
        self.i += 1

    def integer(self) -> int:
        self._skip_ws()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == start:
            raise ParseError("expected a number", start)
        return int(self.text[start : self.i])

    def done(self):
        self._skip_ws()
        if self.i < len(self.text):
            raise ParseError("trailing input", self.i)


def _parse_entry(cur: _Cursor) -> int:
    """One sequence entry, returned doubled: `3` -> 6, `3/2` -> 3."""
    value = cur.integer()
    if cur.peek() == "/":
        cur.expect("/")
        off = cur.i
        den = cur.integer()
        if den != 2:
            raise ParseError("only halves are allowed", off)
        return value
    return 2 * value


def _parse_seq_body(cur: _Cursor, ctx: Context):
    twice = [_parse_entry(cur)]
    while cur.peek() == ",":
        cur.take()
        twice.append(_parse_entry(cur))
    eps = [0] * len(twice)
    if cur.peek() == ";":
        cur.take()
        for ch in "eps=":
            cur.expect(ch)
        for t in range(len(twice)):
            off = cur.i
            bit = cur.take()
            if bit not in ("0", "1"):
                raise ParseError("eps bits must be 0 or 1", off)
            eps[t] = int(bit)
    off = cur.i
    cur.expect("]")
    cur.done()
    if len(twice) != ctx.n:
        raise ParseError(f"expected {ctx.n} entries, got {len(twice)}", off)
    return tuple(twice), tuple(eps)


def parse_sequence(text: str, ctx: Context) -> OpSeq:
    """A lower-notation sequence `e[...]` or `Q[...]`."""
    cur = _Cursor(text)
    head = cur.peek()
    if head not in ("e", "Q"):
        raise ParseError("expected 'e[' or 'Q['", cur.i)
    cur.take()
    if head == "Q" and cur.peek() == "u":
        raise ParseError("upper-notation Qu[...] is not a lower sequence", cur.i)
    cur.expect("[")
    twice, eps = _parse_seq_body(cur, ctx)
    return OpSeq(ctx, twice, eps)


def parse_any_sequence(text: str, ctx: Context) -> OpSeq | UpperSeq:
    """Lower `e[...]`/`Q[...]` or upper `E[...]`/`Qu[...]`."""
    cur = _Cursor(text)
    head = cur.peek()
    if head in ("e", "E"):
        upper = head == "E"
        cur.take()
    elif head == "Q":
        cur.take()
        upper = cur.peek() == "u"
        if upper:
            cur.take()
    else:
        raise ParseError("expected e[, Q[, E[ or Qu[", cur.i)
    cur.expect("[")
    twice, eps = _parse_seq_body(cur, ctx)
    if upper:
        return UpperSeq(ctx, twice, eps)
    return OpSeq(ctx, twice, eps)


def _parse_indexed_product(text: str, head: str, lo: int, hi: int) -> dict[int, int]:
    """Product of `<head><index>^<exp>` factors; returns index -> exponent."""
    cur = _Cursor(text)
    out: dict[int, int] = {}
    while True:
        off = cur.i
        if cur.peek() != head:
            raise ParseError(f"expected {head!r}", cur.i)
        cur.take()
        idx = cur.integer()
        if not lo <= idx <= hi:
            raise ParseError(f"index {idx} out of range {lo}..{hi}", off)
        e = 1
        if cur.peek() == "^":
            cur.take()
            e = cur.integer()
        out[idx] = out.get(idx, 0) + e
        if cur.peek() != "*":
            break
        cur.take()
    cur.done()
    return out


def parse_dickson(text: str, ctx: Context) -> tuple[int, ...]:
    """`d1^3*d0` -> exponent vector over d_{n,0}..d_{n,n-1}; `1` -> 0^n."""
    cur = _Cursor(text)
    if cur.peek() == "1":
        cur.take()
        cur.done()
        return (0,) * ctx.n
    got = _parse_indexed_product(text, "d", 0, ctx.n - 1)
    return tuple(got.get(i, 0) for i in range(ctx.n))


def parse_borel(text: str, ctx: Context) -> BPoly:
    """`h1^3*h2` -> the corresponding Borel monomial; `1` -> the unit."""
    cur = _Cursor(text)
    if cur.peek() == "1":
        cur.take()
        cur.done()
        return BPoly.one(ctx)
    got = _parse_indexed_product(text, "h", 1, ctx.n)
    exps = tuple(got.get(k, 0) for k in range(1, ctx.n + 1))
    return BPoly(ctx, {exps: 1})


def parse(text: str, ctx: Context):
    """Dispatch on the leading token: e/Q -> OpSeq, d -> DicksonMono,
    h -> BPoly."""
    cur = _Cursor(text)
    head = cur.peek()
    if head in ("e", "Q"):
        return parse_sequence(text, ctx)
    if head == "d":
        return parse_dickson(text, ctx)
    if head == "h":
        return parse_borel(text, ctx)
    raise ParseError("expected one of e[, Q[, d<i>, h<i>", cur.i)


# ---------------------------------------------------------------------------
# Text rendering


def render_seq(s: OpSeq, head: str = "Q") -> str:
    body = ",".join(entry_str(t) for t in s.twice)
    if any(s.eps):
        body += ";eps=" + "".join(str(b) for b in s.eps)
    return f"{head}[{body}]"


def render_upper_seq(u: UpperSeq, head: str = "E") -> str:
    body = ",".join(entry_str(t) for t in u.twice)
    if any(u.eps):
        body += ";eps=" + "".join(str(b) for b in u.eps)
    return f"{head}[{body}]"


def _coeff_prefix(c: int) -> str:
    return "" if c == 1 else f"{c}*"


def render_op_poly(x: OpPoly, head: str = "Q") -> str:
    terms = list(x.seq_terms())
    if not terms:
        return "0"
    return " + ".join(f"{_coeff_prefix(c)}{render_seq(s, head)}" for s, c in terms)


def render_dual(d: DualExpansion) -> str:
    terms = d.sorted_terms()
    if not terms:
        return "0"
    return " + ".join(f"{_coeff_prefix(c)}({render_seq(s)})*" for s, c in terms)


def _render_indexed_monomial(head: str, indices_exps) -> str:
    parts = [
        f"{head}{i}" + (f"^{e}" if e != 1 else "") for i, e in indices_exps if e
    ]
    return "*".join(parts) if parts else "1"


def render_bpoly(x: BPoly) -> str:
    terms = x.sorted_terms()
    if not terms:
        return "0"
    out = []
    for exps, c in terms:
        mono = _render_indexed_monomial("h", enumerate(exps, start=1))
        if mono == "1":
            out.append(str(c))
        else:
            out.append(f"{_coeff_prefix(c)}{mono}")
    return " + ".join(out)


def render_dickson_combo(x: dict[tuple[int, ...], int]) -> str:
    if not x:
        return "0"
    out = []
    for m in sorted(x, key=lambda t: t[::-1]):
        mono = _render_indexed_monomial("d", enumerate(m))
        c = x[m]
        if mono == "1":
            out.append(str(c))
        else:
            out.append(f"{_coeff_prefix(c)}{mono}")
    return " + ".join(out)


def render_dickson_monomial(m) -> str:
    return _render_indexed_monomial("d", enumerate(m))


def _render_leg(twice, eps, head: str = "Q") -> str:
    body = ",".join(entry_str(t) for t in twice)
    if any(eps):
        body += ";eps=" + "".join(str(b) for b in eps)
    return f"{head}[{body}]"


def render_tensor(t: TensorPoly) -> str:
    """Render a lower-notation tensor; legs are (twice, eps) pairs."""
    if not t.terms:
        return "0"
    out = []
    for legs, c in sorted(t.terms.items()):
        body = " (x) ".join(_render_leg(tw, ep) for tw, ep in legs)
        out.append(f"{_coeff_prefix(c)}{body}")
    return " + ".join(out)


# ---------------------------------------------------------------------------
# JSON forms (entries as decimal strings, halves as "3/2")


def seq_to_json(s: OpSeq) -> dict:
    return {"seq": [entry_str(t) for t in s.twice], "eps": list(s.eps)}


def seq_from_json(obj: dict, ctx: Context) -> OpSeq:
    twice = tuple(entry_from_str(e) for e in obj["seq"])
    eps = tuple(int(b) for b in obj.get("eps", [0] * len(twice)))
    return OpSeq(ctx, twice, eps)


def op_poly_to_json(x: OpPoly) -> list:
    return [
        {"coeff": c, **seq_to_json(s)} for s, c in x.seq_terms()
    ]


def op_poly_from_json(items: list, ctx: Context) -> OpPoly:
    out = OpPoly(ctx)
    for obj in items:
        s = seq_from_json(obj, ctx)
        out.add_term(s.twice, s.eps, int(obj["coeff"]))
    return out


def dual_to_json(d: DualExpansion) -> list:
    return [{"coeff": c, **seq_to_json(s)} for s, c in d.sorted_terms()]


def dual_from_json(items: list, ctx: Context) -> DualExpansion:
    out = DualExpansion(ctx)
    for obj in items:
        out.add_term(seq_from_json(obj, ctx), int(obj["coeff"]))
    return out


def bpoly_to_json(x: BPoly) -> list:
    return [{"coeff": c, "exps": list(exps)} for exps, c in x.sorted_terms()]


def bpoly_from_json(items: list, ctx: Context) -> BPoly:
    out = BPoly(ctx)
    for obj in items:
        out.add_term(tuple(obj["exps"]), int(obj["coeff"]))
    return out


def dickson_combo_to_json(x: dict[tuple[int, ...], int]) -> list:
    return [
        {"coeff": x[m], "m": list(m)} for m in sorted(x, key=lambda t: t[::-1])
    ]


def dickson_combo_from_json(items: list) -> dict[tuple[int, ...], int]:
    return {tuple(obj["m"]): int(obj["coeff"]) for obj in items}


def tensor_to_json(t: TensorPoly) -> list:
    return [
        {
            "coeff": c,
            "legs": [
                {"seq": [entry_str(v) for v in tw], "eps": list(ep)}
                for tw, ep in legs
            ],
        }
        for legs, c in sorted(t.terms.items())
    ]


def tensor_from_json(items: list, ctx: Context, folds: int, lower: bool = True) -> TensorPoly:
    out = TensorPoly(ctx, folds, lower=lower)
    for obj in items:
        legs = tuple(
            (
                tuple(entry_from_str(v) for v in leg["seq"]),
                tuple(int(b) for b in leg["eps"]),
            )
            for leg in obj["legs"]
        )
        out.add_term(legs, int(obj["coeff"]))
    return out
