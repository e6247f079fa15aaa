"""A small expression language for generating functions.

Grammar (version 1, stable public interface):

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' uint)?
    atom   := number | var | '(' expr ')' | func '(' expr ')'
    var    := 'x' | 'y' | 'a' | 'b'
    func   := 'sqrt' | 'rev'
    number := decimal integer (arbitrary precision)

Implicit multiplication is not supported; '^' takes a literal nonnegative
integer exponent; rationals are written with '/'.  ``x`` is the series
variable, y/a/b are coefficient-ring generators, ``rev`` is compositional
reversion in x and ``sqrt`` the exact series square root.

Parse errors carry the character offset of the offending token.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import QQ, QY, QAB
from .series import PowerSeries, constant, x_series, generator_series

VARIABLES = ("x", "y", "a", "b")
FUNCTIONS = ("sqrt", "rev")

GRAMMAR_VERSION = 1


class ParseError(ValueError):
    """Syntax error with the character offset where it was detected."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class GfEvalError(ValueError):
    """Evaluation error carrying the source offset of the failing node."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


# --- AST -------------------------------------------------------------------
# ``pos`` is the source offset; it never participates in equality.

@dataclass(frozen=True)
class IntLit:
    value: int
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class RatLit:
    value: Fraction
    pos: int = field(default=-1, compare=False)

    def __post_init__(self):
        if self.value.denominator == 1:
            raise ValueError("integral RatLit; use IntLit")


@dataclass(frozen=True)
class Var:
    name: str
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "Node"
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * /
    left: "Node"
    right: "Node"
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Call:
    func: str  # sqrt | rev
    arg: "Node"
    pos: int = field(default=-1, compare=False)


Node = IntLit | RatLit | Var | Neg | BinOp | Pow | Call


# --- Lexer -----------------------------------------------------------------

@dataclass(frozen=True)
class _Token:
    kind: str  # int, name, op, end
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    if not text.isascii():
        bad = next(i for i, ch in enumerate(text) if not ch.isascii())
        raise ParseError(f"non-ASCII character {text[bad]!r}", bad)
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], i))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and text[j].isalnum():
                j += 1
            tokens.append(_Token("name", text[i:j], i))
            i = j
        elif ch in "+-*/^()":
            tokens.append(_Token("op", ch, i))
            i += 1
        else:
            raise ParseError(f"illegal character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> _Token:
        tok = self.current
        if tok.kind != "op" or tok.text != op:
            shown = tok.text if tok.kind != "end" else "end of input"
            raise ParseError(f"expected {op!r}, found {shown!r}", tok.pos)
        return self.advance()

    def parse_expr(self) -> Node:
        tok = self.current
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            node: Node = Neg(self.parse_term(), pos=tok.pos)
        else:
            node = self.parse_term()
        while self.current.kind == "op" and self.current.text in "+-":
            op = self.advance()
            right = self.parse_term()
            node = BinOp(op.text, node, right, pos=op.pos)
        return node

    def parse_term(self) -> Node:
        node = self.parse_factor()
        while self.current.kind == "op" and self.current.text in "*/":
            op = self.advance()
            right = self.parse_factor()
            node = _fold_div(op.text, node, right, op.pos)
        return node

    def parse_factor(self) -> Node:
        node = self.parse_atom()
        if self.current.kind == "op" and self.current.text == "^":
            caret = self.advance()
            tok = self.current
            if tok.kind != "int":
                shown = tok.text if tok.kind != "end" else "end of input"
                raise ParseError(
                    f"exponent must be a nonnegative integer literal, found {shown!r}",
                    tok.pos,
                )
            self.advance()
            node = Pow(node, int(tok.text), pos=caret.pos)
        return node

    def parse_atom(self) -> Node:
        tok = self.current
        if tok.kind == "int":
            self.advance()
            return IntLit(int(tok.text), pos=tok.pos)
        if tok.kind == "name":
            self.advance()
            if tok.text in VARIABLES:
                return Var(tok.text, pos=tok.pos)
            if tok.text in FUNCTIONS:
                self.expect_op("(")
                arg = self.parse_expr()
                self.expect_op(")")
                return Call(tok.text, arg, pos=tok.pos)
            raise ParseError(f"unknown name {tok.text!r}", tok.pos)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            node = self.parse_expr()
            self.expect_op(")")
            return node
        shown = tok.text if tok.kind != "end" else "end of input"
        raise ParseError(f"expected a value, found {shown!r}", tok.pos)


def _fold_div(op: str, left: Node, right: Node, pos: int) -> Node:
    """Fold literal/literal into a rational literal so printing round-trips."""
    if op == "/" and isinstance(right, IntLit) and isinstance(left, (IntLit, RatLit)):
        lv = left.value if isinstance(left, RatLit) else Fraction(left.value)
        if right.value != 0:
            q = lv / right.value
            return IntLit(int(q), pos=left.pos) if q.denominator == 1 else RatLit(q, pos=left.pos)
    return BinOp(op, left, right, pos=pos)


def parse(text: str) -> Node:
    """Parse generating-function text into an AST."""
    parser = _Parser(_tokenize(text))
    node = parser.parse_expr()
    tok = parser.current
    if tok.kind != "end":
        raise ParseError(f"unexpected {tok.text!r} after expression", tok.pos)
    return node


def to_text(node: Node) -> str:
    """Render an AST back to source, fully parenthesized; reparsing yields a
    structurally identical tree."""
    if isinstance(node, IntLit):
        return str(node.value)
    if isinstance(node, RatLit):
        # parenthesized so neighbouring '*'/'/' cannot re-associate the literal
        return f"({node.value.numerator}/{node.value.denominator})"
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        return f"(-{to_text(node.operand)})"
    if isinstance(node, BinOp):
        return f"({to_text(node.left)}{node.op}{to_text(node.right)})"
    if isinstance(node, Pow):
        base = to_text(node.base)
        if isinstance(node.base, Pow):  # x^2^3 is not grammatical
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, Call):
        return f"{node.func}({to_text(node.arg)})"
    raise TypeError(f"not an AST node: {node!r}")


def variables_used(node: Node) -> set[str]:
    if isinstance(node, Var):
        return {node.name}
    if isinstance(node, Neg):
        return variables_used(node.operand)
    if isinstance(node, BinOp):
        return variables_used(node.left) | variables_used(node.right)
    if isinstance(node, Pow):
        return variables_used(node.base)
    if isinstance(node, Call):
        return variables_used(node.arg)
    return set()


def ring_for(node: Node):
    """Smallest supported coefficient ring for the variables that occur."""
    gens = variables_used(node) - {"x"}
    if not gens:
        return QQ
    if gens == {"y"}:
        return QY
    if gens <= {"a", "b"}:
        return QAB
    raise GfEvalError(f"variables {sorted(gens)} do not fit one ring (y is exclusive of a, b)", -1)


def eval_ast(node: Node, order: int, ring=None) -> PowerSeries:
    """Evaluate bottom-up to a truncated series over ``ring`` (auto-chosen
    from the variables when omitted).  Series-domain failures are re-raised
    with the source offset of the responsible node."""
    if ring is None:
        ring = ring_for(node)
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")

    def ev(n: Node) -> PowerSeries:
        try:
            if isinstance(n, IntLit):
                return constant(ring, n.value, order)
            if isinstance(n, RatLit):
                return constant(ring, n.value, order)
            if isinstance(n, Var):
                if n.name == "x":
                    if order < 2:
                        return constant(ring, 0, order)
                    return x_series(ring, order)
                return generator_series(ring, n.name, order)
            if isinstance(n, Neg):
                return -ev(n.operand)
            if isinstance(n, BinOp):
                left, right = ev(n.left), ev(n.right)
                if n.op == "+":
                    return left + right
                if n.op == "-":
                    return left - right
                if n.op == "*":
                    return left * right
                return left / right
            if isinstance(n, Pow):
                return ev(n.base) ** n.exponent
            if isinstance(n, Call):
                arg = ev(n.arg)
                return arg.sqrt() if n.func == "sqrt" else arg.revert()
        except GfEvalError:
            raise
        except (ValueError, ZeroDivisionError, KeyError, TypeError) as exc:
            raise GfEvalError(str(exc), n.pos) from exc
        raise TypeError(f"not an AST node: {n!r}")

    return ev(node)


def eval_gf(text: str, order: int, ring=None) -> PowerSeries:
    """Parse and evaluate in one step."""
    return eval_ast(parse(text), order, ring)
