"""The quantity expression language: parser, printer, evaluator.

Grammar (explicit '*' required, no unary minus, '^' binds tightest):

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := atom ("^" NAT)?
    atom   := NAT | "R" | "Rp" | "C" | "H" | IDENT "(" NAT ("," NAT)* ")" | "(" expr ")"

Parenthesised sub-expressions become Bracket nodes, so source bracketing
survives a parse/print round trip; evaluation ignores them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .quantity import MorphError, MorphPoly, div_exact


class ExprSyntaxError(MorphError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownName(MorphError):
    def __init__(self, name, position):
        super().__init__(f"unknown name {name!r} (at position {position})")
        self.name = name
        self.position = position


@dataclass(frozen=True)
class Expr:
    span: tuple = field(default=None, compare=False, repr=False, kw_only=True)


@dataclass(frozen=True)
class Nat(Expr):
    value: int


@dataclass(frozen=True)
class SymR(Expr):
    pass


@dataclass(frozen=True)
class SymRp(Expr):
    pass


@dataclass(frozen=True)
class SymC(Expr):
    pass


@dataclass(frozen=True)
class SymH(Expr):
    pass


@dataclass(frozen=True)
class CatalogCall(Expr):
    id: str
    params: tuple


@dataclass(frozen=True)
class Add(Expr):
    items: tuple


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul(Expr):
    items: tuple


@dataclass(frozen=True)
class Div(Expr):
    num: Expr
    den: Expr


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: int


@dataclass(frozen=True)
class Bracket(Expr):
    child: Expr


_TOKEN_RE = re.compile(r"\s*(?:(?P<nat>[0-9]+)|(?P<ident>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*/^(),]))")

_ATOMS = {"R": SymR, "Rp": SymRp, "C": SymC, "H": SymH}


def _tokenize(source: str):
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            stripped = source[pos:].lstrip()
            if not stripped:
                break
            at = len(source) - len(stripped)
            raise ExprSyntaxError(f"unexpected character {source[at]!r}", at)
        if m.lastgroup == "nat":
            tokens.append(("NAT", m.group("nat"), m.start("nat")))
        elif m.lastgroup == "ident":
            tokens.append(("IDENT", m.group("ident"), m.start("ident")))
        else:
            tokens.append((m.group("op"), m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("EOF", "", len(source)))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = _tokenize(source)
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, kind):
        tok = self.peek()
        if tok[0] != kind:
            raise ExprSyntaxError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return self.advance()

    def parse(self):
        expr = self.expr()
        tok = self.peek()
        if tok[0] != "EOF":
            raise ExprSyntaxError(f"unexpected trailing {tok[1]!r}", tok[2])
        return expr

    def expr(self):
        start = self.peek()[2]
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()
            right = self.term()
            end = right.span[1]
            if op[0] == "+":
                if isinstance(node, Add):
                    node = Add(items=node.items + (right,), span=(start, end))
                else:
                    node = Add(items=(node, right), span=(start, end))
            else:
                node = Sub(left=node, right=right, span=(start, end))
        return node

    def term(self):
        start = self.peek()[2]
        node = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.advance()
            right = self.factor()
            end = right.span[1]
            if op[0] == "*":
                if isinstance(node, Mul):
                    node = Mul(items=node.items + (right,), span=(start, end))
                else:
                    node = Mul(items=(node, right), span=(start, end))
            else:
                node = Div(num=node, den=right, span=(start, end))
        return node

    def factor(self):
        node = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            tok = self.expect("NAT")
            node = Pow(base=node, exponent=int(tok[1]), span=(node.span[0], tok[2] + len(tok[1])))
        return node

    def atom(self):
        tok = self.advance()
        kind, text, pos = tok
        if kind == "NAT":
            return Nat(value=int(text), span=(pos, pos + len(text)))
        if kind == "IDENT":
            if self.peek()[0] == "(":
                return self.catalog_call(text, pos)
            ctor = _ATOMS.get(text)
            if ctor is None:
                raise UnknownName(text, pos)
            return ctor(span=(pos, pos + len(text)))
        if kind == "(":
            child = self.expr()
            close = self.expect(")")
            return Bracket(child=child, span=(pos, close[2] + 1))
        raise ExprSyntaxError(f"unexpected {text or 'end of input'!r}", pos)

    def catalog_call(self, name, pos):
        from .catalog import _REGISTRY

        if name.lower() not in _REGISTRY or _REGISTRY[name.lower()].id != name:
            raise UnknownName(name, pos)
        self.expect("(")
        params = [int(self.expect("NAT")[1])]
        while self.peek()[0] == ",":
            self.advance()
            params.append(int(self.expect("NAT")[1]))
        close = self.expect(")")
        return CatalogCall(id=name, params=tuple(params), span=(pos, close[2] + 1))


def parse(source: str) -> Expr:
    return _Parser(source).parse()


def print_expr(e: Expr) -> str:
    if isinstance(e, Nat):
        return str(e.value)
    if isinstance(e, SymR):
        return "R"
    if isinstance(e, SymRp):
        return "Rp"
    if isinstance(e, SymC):
        return "C"
    if isinstance(e, SymH):
        return "H"
    if isinstance(e, CatalogCall):
        return f"{e.id}({','.join(str(p) for p in e.params)})"
    if isinstance(e, Add):
        return " + ".join(print_expr(x) for x in e.items)
    if isinstance(e, Sub):
        return f"{print_expr(e.left)} - {print_expr(e.right)}"
    if isinstance(e, Mul):
        return "*".join(print_expr(x) for x in e.items)
    if isinstance(e, Div):
        return f"{print_expr(e.num)}/{print_expr(e.den)}"
    if isinstance(e, Pow):
        return f"{print_expr(e.base)}^{e.exponent}"
    if isinstance(e, Bracket):
        return f"({print_expr(e.child)})"
    raise TypeError(f"not an expression node: {e!r}")


def eval_expr(e: Expr) -> MorphPoly:
    """Bottom-up evaluation; brackets erased; division must be exact.

    Domain errors gain a .span attribute pointing at the innermost offending
    sub-expression of the original source.
    """
    try:
        if isinstance(e, Nat):
            return MorphPoly.constant(e.value)
        if isinstance(e, SymR):
            return MorphPoly.line()
        if isinstance(e, SymRp):
            return MorphPoly.halfline()
        if isinstance(e, SymC):
            return MorphPoly.line() ** 2
        if isinstance(e, SymH):
            return MorphPoly.line() ** 4
        if isinstance(e, CatalogCall):
            from .catalog import catalog_quantity

            return catalog_quantity(e.id, e.params)
        if isinstance(e, Add):
            total = MorphPoly.zero()
            for item in e.items:
                total = total + eval_expr(item)
            return total
        if isinstance(e, Sub):
            return eval_expr(e.left) - eval_expr(e.right)
        if isinstance(e, Mul):
            total = MorphPoly.constant(1)
            for item in e.items:
                total = total * eval_expr(item)
            return total
        if isinstance(e, Div):
            return div_exact(eval_expr(e.num), eval_expr(e.den))
        if isinstance(e, Pow):
            return eval_expr(e.base) ** e.exponent
        if isinstance(e, Bracket):
            return eval_expr(e.child)
    except MorphError as exc:
        if getattr(exc, "span", None) is None:
            exc.span = e.span
        raise
    raise TypeError(f"not an expression node: {e!r}")
