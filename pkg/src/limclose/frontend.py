"""Session-file language, command dispatcher, renderers, and CLI.

Grammar (LL(1)):
    statement := ring-decl | seq-decl | ideal-decl | map-decl | show-stmt
    ring-decl := "ring" NAME "=" FIELD "[" vars "]" "/" "(" polys ")" ";"
    seq-decl  := "seq" NAME "=" "[" exprs "]" ";"
    ideal-decl:= "ideal" NAME "=" "(" exprs ")" ";"
    map-decl  := "map" NAME "=" NAME "->" NAME "[" NAME "->" expr, ... "]" ";"
    show-stmt := "show" COMMAND "(" args ")" ";"
with FIELD one of QQ, Fp(prime); infix polynomials over ^ * + - and
integer literals; comments run from '#' to end of line.
"""

from __future__ import annotations

import json as _json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .polycore import (
    Polynomial, GREVLEX, LEX, catalan,
    catalan_truncated_generating_poly, mod_monomial_power,
)
from .idealops import (
    Ideal, ideal_intersect, ideal_colon, ideal_colon_ideal, ideal_saturate,
    eliminate, contract, RingMapPresentation,
)
from .localring import (
    LocalRingContext, LocalOptions, SequenceInR, local_length, local_dim,
    is_sop,
)
from .limitclosure import (
    colon_step, colon_by_product, limit_closure, limit_closure_mixed,
    MixedClosureSpec, monomial_property, DEFAULT_N_MAX,
)
from .structure import (
    unmixed_component, dimension_filtration, _filtration_candidate,
    is_good_sop, ij_functions, topology_scan, multiplicity,
)
from .detmaps import express_in_terms, detmap_injective


SCHEMA_VERSION = 1


class SessionParseError(ValueError):
    def __init__(self, message, line, col):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class SessionRunError(RuntimeError):
    """A module error surfaced by a command, tagged with its location."""


# ---------------------------------------------------------------------------
# tokenizer
# ---------------------------------------------------------------------------

_SYMBOLS = ("->", "(", ")", "[", "]", ",", ";", "=", "/", "^", "*", "+", "-")


@dataclass
class _Token:
    kind: str       # name | int | symbol | eof
    value: str
    line: int
    col: int


def _tokenize(text):
    toks = []
    line, col, i = 1, 1, 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Token("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        for sym in _SYMBOLS:
            if text.startswith(sym, i):
                toks.append(_Token("symbol", sym, line, col))
                i += len(sym)
                col += len(sym)
                break
        else:
            raise SessionParseError(f"unexpected character {c!r}", line, col)
    toks.append(_Token("eof", "", line, col))
    return toks


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

COMMANDS = {
    # name: (min_args, max_args)
    "gb": (2, 2),
    "dim": (1, 2),
    "length": (2, 2),
    "mult": (2, 2),
    "colon": (3, 3),
    "intersect": (3, 3),
    "saturate": (3, 3),
    "eliminate": (3, None),
    "contract": (2, 2),
    "limclose": (2, 3),
    "limclose-mixed": (5, 5),
    "monomial-check": (2, 2),
    "unmixed": (2, 2),
    "dimfilt": (2, 2),
    "goodsop": (2, 2),
    "ij": (2, 3),
    "topo": (2, 4),
    "detmap": (3, 3),
    "sopcheck": (2, 2),
    "catalan-demo": (0, 1),
}


@dataclass
class Statement:
    kind: str       # ring | seq | ideal | map | show
    name: str       # binding name, or command name for show
    payload: dict
    line: int
    col: int


@dataclass
class Session:
    statements: list
    text: str
    bindings: dict = field(default_factory=dict)   # name -> evaluated value
    results: list = field(default_factory=list)    # command log


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def err(self, msg, tok=None):
        tok = tok or self.peek()
        raise SessionParseError(msg, tok.line, tok.col)

    def expect(self, value):
        t = self.next()
        if t.value != value or t.kind == "eof":
            self.err(f"expected {value!r}, found {t.value or 'end of input'!r}", t)
        return t

    def expect_name(self):
        t = self.next()
        if t.kind != "name":
            self.err(f"expected a name, found {t.value or 'end of input'!r}", t)
        return t

    def expect_int(self):
        t = self.next()
        if t.kind != "int":
            self.err(f"expected an integer, found {t.value or 'end of input'!r}", t)
        return int(t.value)

    # -- polynomial expressions (to a small AST; variables resolve later) ----

    def expr(self):
        node = self.term()
        while self.peek().value in ("+", "-"):
            op = self.next().value
            rhs = self.term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.peek().value == "*":
            self.next()
            node = ("mul", node, self.factor())
        return node

    def factor(self):
        if self.peek().value == "-":
            self.next()
            return ("neg", self.factor())
        node = self.atom()
        if self.peek().value == "^":
            self.next()
            node = ("pow", node, self.expect_int())
        return node

    def atom(self):
        t = self.peek()
        if t.kind == "int":
            self.next()
            return ("num", int(t.value))
        if t.kind == "name":
            self.next()
            return ("var", t.value)
        if t.value == "(":
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        self.err(f"expected a polynomial, found {t.value or 'end of input'!r}")

    def expr_list(self, closer):
        out = [self.expr()]
        while self.peek().value == ",":
            self.next()
            if self.peek().value == closer:
                self.err("trailing comma")
            out.append(self.expr())
        return out

    # -- statements ----------------------------------------------------------

    def statement(self):
        t = self.peek()
        if t.kind != "name":
            self.err(f"expected a statement, found {t.value or 'end of input'!r}")
        if t.value == "ring":
            return self.ring_decl()
        if t.value == "seq":
            return self.seq_decl()
        if t.value == "ideal":
            return self.ideal_decl()
        if t.value == "map":
            return self.map_decl()
        if t.value == "show":
            return self.show_stmt()
        self.err(f"unknown statement {t.value!r}", t)

    def ring_decl(self):
        start = self.expect("ring")
        name = self.expect_name().value
        self.expect("=")
        fld = self.expect_name()
        if fld.value == "QQ":
            field_spec = ("QQ",)
        elif fld.value == "Fp":
            self.expect("(")
            p = self.expect_int()
            self.expect(")")
            field_spec = ("Fp", p)
        else:
            self.err(f"unknown coefficient field {fld.value!r}", fld)
        self.expect("[")
        vars = [self.expect_name().value]
        while self.peek().value == ",":
            self.next()
            vars.append(self.expect_name().value)
        self.expect("]")
        self.expect("/")
        self.expect("(")
        polys = self.expr_list(")")
        self.expect(")")
        self.expect(";")
        if len(set(vars)) != len(vars):
            self.err("duplicate variable name", start)
        return Statement("ring", name,
                         {"field": field_spec, "vars": tuple(vars),
                          "polys": polys}, start.line, start.col)

    def seq_decl(self):
        start = self.expect("seq")
        name = self.expect_name().value
        self.expect("=")
        self.expect("[")
        exprs = self.expr_list("]")
        self.expect("]")
        self.expect(";")
        return Statement("seq", name, {"exprs": exprs}, start.line, start.col)

    def ideal_decl(self):
        start = self.expect("ideal")
        name = self.expect_name().value
        self.expect("=")
        self.expect("(")
        exprs = self.expr_list(")")
        self.expect(")")
        self.expect(";")
        return Statement("ideal", name, {"exprs": exprs}, start.line, start.col)

    def map_decl(self):
        start = self.expect("map")
        name = self.expect_name().value
        self.expect("=")
        source = self.expect_name().value
        self.expect("->")
        target = self.expect_name().value
        self.expect("[")
        images = []
        while True:
            v = self.expect_name().value
            self.expect("->")
            images.append((v, self.expr()))
            if self.peek().value != ",":
                break
            self.next()
            if self.peek().value == "]":
                self.err("trailing comma")
        self.expect("]")
        self.expect(";")
        return Statement("map", name,
                         {"source": source, "target": target, "images": images},
                         start.line, start.col)

    def show_stmt(self):
        start = self.expect("show")
        cmd = self.expect_name().value
        # hyphenated command names (limclose-mixed, ...) lex as name '-' name
        while self.peek().value == "-" and self.toks[self.pos + 1].kind == "name":
            self.next()
            cmd += "-" + self.next().value
        if cmd not in COMMANDS:
            self.err(f"unknown command {cmd!r}", start)
        self.expect("(")
        args = []
        if self.peek().value != ")":
            args = self.expr_list(")")
        self.expect(")")
        self.expect(";")
        lo, hi = COMMANDS[cmd]
        if len(args) < lo or (hi is not None and len(args) > hi):
            self.err(f"command {cmd!r} takes {lo}"
                     + (f"..{hi}" if hi != lo else "")
                     + f" arguments, got {len(args)}", start)
        return Statement("show", cmd, {"args": args}, start.line, start.col)


def parse_session(text):
    """Parse a session file; raises SessionParseError with line/column on
    the first error.  References are checked to resolve to earlier bindings."""
    p = _Parser(text)
    statements = []
    declared = set()
    while p.peek().kind != "eof":
        st = p.statement()
        if st.kind != "show":
            if st.name in declared:
                raise SessionParseError(
                    f"duplicate binding {st.name!r}", st.line, st.col)
            declared.add(st.name)
        elif st.kind == "show":
            # bare-name arguments may be bindings or ring variables; binding
            # references are resolved at run time against the ordered scope
            pass
        statements.append(st)
    return Session(statements=statements, text=text)


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

@dataclass
class Config:
    order: str = "grevlex"
    n_max: int = DEFAULT_N_MAX
    trunc_max: int = 64
    stab_window: int = 2
    seed: int = 0
    timeout_secs: int | None = None


@dataclass
class CommandResult:
    kind: str
    generators: list | None = None
    tables: dict | None = None
    verdict: bool | None = None
    stabilization_index: int | None = None
    value: object = None
    warnings: list = field(default_factory=list)
    elapsed: float = 0.0
    command: str = ""


@dataclass
class _RingBinding:
    name: str
    ctx: LocalRingContext
    field_spec: tuple


def _eval_poly(node, vars, where):
    kind = node[0]
    if kind == "num":
        return Polynomial.constant(node[1], vars)
    if kind == "var":
        if node[1] not in vars:
            raise SessionRunError(
                f"{where}: unknown variable {node[1]!r} (ring has {', '.join(vars)})")
        return Polynomial.variable(node[1], vars)
    if kind == "neg":
        return -_eval_poly(node[1], vars, where)
    if kind == "pow":
        return _eval_poly(node[1], vars, where) ** node[2]
    a = _eval_poly(node[1], vars, where)
    b = _eval_poly(node[2], vars, where)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise AssertionError(kind)


def _as_int(node, where):
    if node[0] == "num":
        return node[1]
    if node[0] == "neg" and node[1][0] == "num":
        return -node[1][1]
    raise SessionRunError(f"{where}: expected an integer argument")


def _binding(session, node, where):
    if node[0] == "var" and node[1] in session.bindings:
        return session.bindings[node[1]]
    return None


def _ring_arg(session, node, where):
    b = _binding(session, node, where)
    if not isinstance(b, _RingBinding):
        raise SessionRunError(f"{where}: expected a ring name")
    return b


def _seq_arg(session, node, ring, where):
    b = _binding(session, node, where)
    if b is None or not (isinstance(b, dict) and b.get("kind") == "seq"):
        raise SessionRunError(f"{where}: expected a sequence name")
    entries = [_eval_poly(e, ring.ctx.vars, where) for e in b["exprs"]]
    return SequenceInR(entries, ring.ctx)


def _ideal_arg(session, node, ring, where):
    b = _binding(session, node, where)
    if isinstance(b, dict) and b.get("kind") == "ideal":
        gens = [_eval_poly(e, ring.ctx.vars, where) for e in b["exprs"]]
        return Ideal(ring.ctx.vars, gens)
    if isinstance(b, dict) and b.get("kind") == "seq":
        gens = [_eval_poly(e, ring.ctx.vars, where) for e in b["exprs"]]
        return Ideal(ring.ctx.vars, gens)
    # inline polynomial: principal ideal
    return Ideal(ring.ctx.vars, [_eval_poly(node, ring.ctx.vars, where)])


def _poly_arg(session, node, ring, where):
    return _eval_poly(node, ring.ctx.vars, where)


def _ideal_result(kind, ideal, ctx=None, stab=None, warnings=()):
    I = ctx.adjoin(ideal) if ctx is not None else ideal
    gens = [str(g) for g in I.reduced_gens()]
    return CommandResult(kind=kind, generators=gens or ["0"],
                         stabilization_index=stab, warnings=list(warnings))


def run_command(stmt, session, config):
    """Evaluate one show-statement against the session bindings."""
    where = f"line {stmt.line}"
    cmd = stmt.name
    args = stmt.payload["args"]
    t0 = time.monotonic()
    try:
        result = _dispatch(cmd, args, session, config, where)
    except (SessionRunError, SessionParseError, TimeoutError):
        raise
    except Exception as exc:
        raise SessionRunError(f"{where}: {cmd}: {exc}") from exc
    result.elapsed = time.monotonic() - t0
    result.command = cmd
    session.results.append(result)
    return result


def _dispatch(cmd, args, session, config, where):
    order = LEX if config.order == "lex" else GREVLEX
    n_max = config.n_max

    if cmd == "catalan-demo":
        n = _as_int(args[0], where) if args else 4
        return _catalan_demo(n)

    if cmd == "contract":
        b = _binding(session, args[0], where)
        if not (isinstance(b, dict) and b.get("kind") == "map"):
            raise SessionRunError(f"{where}: expected a map name")
        rmap = b["map"]
        I = _ideal_arg(session, args[1], b["target_ring"], where)
        return _ideal_result("ideal", contract(rmap, I))

    ring = _ring_arg(session, args[0], where)
    ctx = ring.ctx

    if cmd == "gb":
        I = _ideal_arg(session, args[1], ring, where)
        gens = ctx.adjoin(I).groebner(order).generators
        return CommandResult(kind="ideal",
                             generators=[str(g) for g in gens] or ["0"])
    if cmd == "dim":
        I = _ideal_arg(session, args[1], ring, where) if len(args) > 1 \
            else ctx.zero_ideal()
        return CommandResult(kind="integer", value=local_dim(I, ctx))
    if cmd == "length":
        I = _ideal_arg(session, args[1], ring, where)
        return CommandResult(kind="integer", value=local_length(I, ctx))
    if cmd == "mult":
        s = _seq_arg(session, args[1], ring, where)
        return CommandResult(kind="integer", value=multiplicity(s))
    if cmd == "colon":
        I = _ideal_arg(session, args[1], ring, where)
        J = _ideal_arg(session, args[2], ring, where)
        return _ideal_result("ideal", ideal_colon_ideal(ctx.adjoin(I), J))
    if cmd == "intersect":
        I = _ideal_arg(session, args[1], ring, where)
        J = _ideal_arg(session, args[2], ring, where)
        return _ideal_result("ideal",
                             ideal_intersect(ctx.adjoin(I), ctx.adjoin(J)))
    if cmd == "saturate":
        I = _ideal_arg(session, args[1], ring, where)
        g = _poly_arg(session, args[2], ring, where)
        sat, k = ideal_saturate(ctx.adjoin(I), g)
        res = _ideal_result("ideal", sat)
        res.stabilization_index = k
        return res
    if cmd == "eliminate":
        I = _ideal_arg(session, args[1], ring, where)
        names = []
        for a in args[2:]:
            if a[0] != "var":
                raise SessionRunError(f"{where}: eliminate takes variable names")
            names.append(a[1])
        return _ideal_result("ideal", eliminate(ctx.adjoin(I), names))
    if cmd == "limclose":
        s = _seq_arg(session, args[1], ring, where)
        if len(args) > 2:
            n = _as_int(args[2], where)
            return _ideal_result("ideal", colon_step(s, n))
        res = limit_closure(s, n_max=n_max, window=config.stab_window)
        out = _ideal_result("ideal", res.closure)
        out.stabilization_index = res.stabilization_index
        return out
    if cmd == "limclose-mixed":
        head = _seq_arg(session, args[1], ring, where)
        npow = _as_int(args[2], where)
        tail = _seq_arg(session, args[3], ring, where)
        mpow = _as_int(args[4], where)
        spec = MixedClosureSpec(head, npow, tail, mpow)
        return _ideal_result("ideal", limit_closure_mixed(spec, n_max=n_max))
    if cmd == "monomial-check":
        s = _seq_arg(session, args[1], ring, where)
        return CommandResult(kind="verdict",
                             verdict=monomial_property(s, n_max=n_max))
    if cmd == "unmixed":
        s = _seq_arg(session, args[1], ring, where)
        res = unmixed_component(ctx, s)
        out = _ideal_result("ideal", res.component)
        out.stabilization_index = res.intersection_depth
        return out
    if cmd == "dimfilt":
        s = _seq_arg(session, args[1], ring, where)
        filt = dimension_filtration(ctx, s, seed=config.seed)
        rows = [[str(d), ", ".join(str(g) for g in D.reduced_gens()) or "0"]
                for D, d in zip(filt.chain, filt.dims)]
        warnings = [] if filt.goodness_verified else ["goodness not verified"]
        return CommandResult(kind="table",
                             tables={"columns": ["dim", "generators"],
                                     "rows": rows},
                             verdict=filt.goodness_verified, warnings=warnings)
    if cmd == "goodsop":
        s = _seq_arg(session, args[1], ring, where)
        filt = _filtration_candidate(ctx, s, 8)
        return CommandResult(kind="verdict", verdict=is_good_sop(s, filt))
    if cmd == "ij":
        s = _seq_arg(session, args[1], ring, where)
        nm = _as_int(args[2], where) if len(args) > 2 else 4
        table = ij_functions(s, n_max=nm)
        rows = [[str(c) for c in row] for row in table.rows]
        return CommandResult(
            kind="table",
            tables={"columns": ["n", "length", "e*n^d", "closure-length",
                                "I", "J"],
                    "rows": rows},
            value=table.multiplicity)
    if cmd == "topo":
        s = _seq_arg(session, args[1], ring, where)
        n0 = _as_int(args[2], where) if len(args) > 2 else 4
        vmax = _as_int(args[3], where) if len(args) > 3 else 8
        rep = topology_scan(s, n0=n0, v_max=vmax)
        rows = [[str(k), str(v) if v is not None else "-"] for k, v in rep.rows]
        warnings = []
        if not rep.success:
            warnings.append(f"failure at k={rep.failure_k}, witness {rep.witness}")
        return CommandResult(kind="table",
                             tables={"columns": ["k", "least v"], "rows": rows},
                             verdict=rep.success, warnings=warnings)
    if cmd == "detmap":
        sx = _seq_arg(session, args[1], ring, where)
        sy = _seq_arg(session, args[2], ring, where)
        problem = express_in_terms(sy, sx)
        inj = detmap_injective(problem, n_max=n_max)
        rows = [[str(a) for a in row] for row in problem.matrix]
        cols = [f"a{j + 1}" for j in range(len(sx))]
        return CommandResult(kind="table",
                             tables={"columns": cols, "rows": rows},
                             verdict=inj, value=str(problem.det))
    if cmd == "sopcheck":
        s = _seq_arg(session, args[1], ring, where)
        return CommandResult(kind="verdict", verdict=is_sop(s))
    raise SessionRunError(f"{where}: unknown command {cmd!r}")


def _catalan_demo(n_max):
    """End-to-end battery on the worked quadric example: the colon table,
    its closed-form generator, and the truncated generating-function
    identity."""
    V = ("x", "y", "u", "v")
    x, y, u, v = (Polynomial.variable(n, V) for n in V)
    f = x * y - u * x ** 2 - v * y ** 2
    ctx = LocalRingContext(V, Ideal(V, [f]))
    seq = SequenceInR([y, u, v], ctx)
    rows = []
    ok_all = True
    for n in range(1, n_max + 1):
        powered = ctx.adjoin(Ideal(V, [y ** (2 * n), u ** (2 * n), v ** (2 * n)]))
        colon = colon_by_product(powered, [y ** n, u ** n, v ** n])
        a_n = x - y * v * catalan_truncated_generating_poly("u", "v", n - 1, V)
        expected = ctx.adjoin(Ideal(V, [y ** n, u ** n, v ** n, a_n]))
        from .localring import local_equal
        match = local_equal(colon, expected, ctx)
        ok_all = ok_all and match
        rows.append([str(n), str(a_n), "ok" if match else "MISMATCH"])
    ident_ok = True
    for n in range(2, 13):
        C = catalan_truncated_generating_poly("u", "v", n - 2, V)
        lhs = (x - y * v * C) * (y - x * u * C)
        # modulo (u^n, v^n) the full generating function truncates at i <= n-1
        rhs = f * catalan_truncated_generating_poly("u", "v", n - 1, V)
        if mod_monomial_power(lhs - rhs, ("u", "v"), n).terms:
            ident_ok = False
    verdict = ok_all and ident_ok
    warnings = [] if ident_ok else ["generating-function identity failed"]
    return CommandResult(kind="table",
                         tables={"columns": ["n", "a_n", "colon row"],
                                 "rows": rows},
                         verdict=verdict, warnings=warnings)


def run_session(session, config=None):
    """Evaluate every statement in order; returns the list of (statement,
    CommandResult) pairs for show statements."""
    config = config or Config()
    out = []
    for stmt in session.statements:
        if stmt.kind == "ring":
            session.bindings[stmt.name] = _make_ring(stmt, config)
        elif stmt.kind in ("seq", "ideal"):
            session.bindings[stmt.name] = {"kind": stmt.kind,
                                           "exprs": stmt.payload["exprs"]}
        elif stmt.kind == "map":
            session.bindings[stmt.name] = _make_map(stmt, session)
        else:
            out.append((stmt, run_command(stmt, session, config)))
    return out


def _make_ring(stmt, config):
    field_spec = stmt.payload["field"]
    if field_spec[0] != "QQ":
        raise SessionRunError(
            f"line {stmt.line}: finite-field coefficients are parsed but not "
            "supported by the exact-rational kernel; use QQ")
    vars = stmt.payload["vars"]
    where = f"line {stmt.line}"
    gens = [_eval_poly(e, vars, where) for e in stmt.payload["polys"]]
    opts = LocalOptions(trunc_max=config.trunc_max, window=config.stab_window)
    ctx = LocalRingContext(vars, Ideal(vars, gens), options=opts)
    return _RingBinding(stmt.name, ctx, field_spec)


def _make_map(stmt, session):
    where = f"line {stmt.line}"
    src = session.bindings.get(stmt.payload["source"])
    tgt = session.bindings.get(stmt.payload["target"])
    if not isinstance(src, _RingBinding) or not isinstance(tgt, _RingBinding):
        raise SessionRunError(f"{where}: map endpoints must be declared rings")
    images = {}
    for v, e in stmt.payload["images"]:
        if v not in src.ctx.vars:
            raise SessionRunError(
                f"{where}: {v!r} is not a variable of {stmt.payload['source']}")
        images[v] = _eval_poly(e, tgt.ctx.vars, where)
    missing = [v for v in src.ctx.vars if v not in images]
    if missing:
        raise SessionRunError(f"{where}: no image given for {missing[0]!r}")
    rmap = RingMapPresentation(
        source_vars=src.ctx.vars, source_ideal=src.ctx.defining,
        target_vars=tgt.ctx.vars, target_ideal=tgt.ctx.defining,
        images=images)
    return {"kind": "map", "map": rmap, "source_ring": src, "target_ring": tgt}


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _jsonable(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def render(result, format="text"):
    """Render a CommandResult; json output is schema-stable and exact."""
    if format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "kind": result.kind,
            "generators": result.generators,
            "tables": _jsonable(result.tables),
            "verdict": result.verdict,
            "stabilization_index": result.stabilization_index,
            "value": _jsonable(result.value),
            "warnings": list(result.warnings),
        }
        return _json.dumps(doc, sort_keys=True)
    lines = []
    if result.kind == "verdict":
        lines.append("true" if result.verdict else "false")
    elif result.kind == "integer":
        lines.append(str(result.value))
    elif result.kind == "ideal":
        lines.append("(" + ", ".join(result.generators) + ")")
        if result.stabilization_index is not None:
            lines.append(f"stabilized at {result.stabilization_index}")
    elif result.kind == "table":
        cols = result.tables["columns"]
        rows = result.tables["rows"]
        widths = [max(len(str(c)), *(len(r[i]) for r in rows)) if rows else len(str(c))
                  for i, c in enumerate(cols)]
        lines.append("  ".join(str(c).ljust(w) for c, w in zip(cols, widths)))
        for r in rows:
            lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)))
        if result.verdict is not None:
            lines.append("verdict: " + ("true" if result.verdict else "false"))
        if result.value is not None:
            lines.append(f"value: {result.value}")
    else:
        lines.append(repr(result))
    for w in result.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------

def main(argv=None):
    import argparse
    import os
    import signal

    ap = argparse.ArgumentParser(
        prog="limclose",
        description="limit closures of parameter sequences in localized "
                    "affine rings")
    ap.add_argument("session", help="session file, or - for stdin")
    ap.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    ap.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    ap.add_argument("--trunc-max", type=int, default=64)
    ap.add_argument("--stab-window", type=int, default=2)
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--timeout-secs", type=int, default=None)
    ns = ap.parse_args(argv)

    use_color = sys.stdout.isatty() and not os.environ.get("NO_COLOR")

    if ns.session == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(ns.session) as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1

    config = Config(order=ns.order, n_max=ns.n_max, trunc_max=ns.trunc_max,
                    stab_window=ns.stab_window, seed=ns.seed,
                    timeout_secs=ns.timeout_secs)

    def on_alarm(signum, frame):
        raise TimeoutError(f"timeout after {ns.timeout_secs}s")

    if ns.timeout_secs:
        signal.signal(signal.SIGALRM, on_alarm)
        signal.alarm(ns.timeout_secs)

    try:
        session = parse_session(text)
        results = run_session(session, config)
    except SessionParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except TimeoutError as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return 3
    except (SessionRunError, ValueError, RuntimeError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        if ns.timeout_secs:
            signal.alarm(0)

    fmt = "json" if ns.json else "text"
    for stmt, result in results:
        header = f"# {stmt.name} (line {stmt.line})"
        if fmt == "text":
            if use_color:
                header = f"\x1b[1m{header}\x1b[0m"
            print(header)
        print(render(result, fmt))
    return 0


if __name__ == "__main__":
    sys.exit(main())
