"""Formula and term syntax shared by the equation checker and the logic.

Grammar, loosest binding first::

    iff   := imp ('<->' iff)?            right associative
    imp   := disj ('->' imp)?            right associative
    disj  := conj ('\\/' conj)*
    conj  := fuse ('/\\' fuse)*
    fuse  := unary ('*' unary)*
    unary := ('~' | 'B' | 'D' | 'Delta') unary | atom
    atom  := ident | '"' name '"' | '0' | '1' | '(' iff ')'

``~a`` is stored as ``a -> 0`` and ``a <-> b`` as ``(a -> b) /\\ (b -> a)``.
Identifiers match ``[a-z][a-zA-Z0-9_]*``; quoted names are used for the
fresh variables introduced by the B-translation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import FormulaSyntaxError

BINARY_OPS = ("and", "or", "mul", "imp")
UNARY_OPS = ("B", "D", "Delta")


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Const:
    value: int  # 0 or 1

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Unary:
    op: str
    arg: "Formula"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return to_text(self)


Formula = Union[Var, Const, Unary, Binary]
Term = Formula

ZERO = Const(0)
ONE = Const(1)


def var(name: str) -> Var:
    return Var(name)


def conj(a: Formula, b: Formula) -> Binary:
    return Binary("and", a, b)


def disj(a: Formula, b: Formula) -> Binary:
    return Binary("or", a, b)


def fuse(a: Formula, b: Formula) -> Binary:
    return Binary("mul", a, b)


def imp(a: Formula, b: Formula) -> Binary:
    return Binary("imp", a, b)


def neg(a: Formula) -> Binary:
    return Binary("imp", a, ZERO)


def iff(a: Formula, b: Formula) -> Binary:
    return conj(imp(a, b), imp(b, a))


def B(a: Formula) -> Unary:
    return Unary("B", a)


def D(a: Formula) -> Unary:
    return Unary("D", a)


def Delta(a: Formula) -> Unary:
    return Unary("Delta", a)


def is_neg(f: Formula) -> bool:
    return isinstance(f, Binary) and f.op == "imp" and f.right == ZERO


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Unary):
        yield from subformulas(f.arg)
    elif isinstance(f, Binary):
        yield from subformulas(f.left)
        yield from subformulas(f.right)


def variables(f: Formula) -> set[str]:
    return {g.name for g in subformulas(f) if isinstance(g, Var)}


def operators(f: Formula) -> set[str]:
    return {g.op for g in subformulas(f) if isinstance(g, (Unary, Binary))}


def substitute(f: Formula, mapping: dict[str, Formula]) -> Formula:
    if isinstance(f, Var):
        return mapping.get(f.name, f)
    if isinstance(f, Unary):
        return Unary(f.op, substitute(f.arg, mapping))
    if isinstance(f, Binary):
        return Binary(f.op, substitute(f.left, mapping), substitute(f.right, mapping))
    return f


# ---------------------------------------------------------------- printing

_PREC = {"iff": 0, "imp": 1, "or": 2, "and": 3, "mul": 4}
_UNARY_PREC = 5
_SYMBOL = {"or": "\\/", "and": "/\\", "mul": "*", "imp": "->"}
_IDENT = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")


def _prec(f: Formula) -> int:
    if isinstance(f, Binary):
        return _UNARY_PREC if is_neg(f) else _PREC[f.op]
    if isinstance(f, Unary):
        return _UNARY_PREC
    return 6


def _wrap(f: Formula, needed: int) -> str:
    text = to_text(f)
    return f"({text})" if _prec(f) < needed else text


def to_text(f: Formula) -> str:
    """Print with the fewest parentheses that parse back to the same tree."""
    if isinstance(f, Var):
        return f.name if _IDENT.match(f.name) else f'"{f.name}"'
    if isinstance(f, Const):
        return str(f.value)
    if isinstance(f, Unary):
        return f"{f.op} {_wrap(f.arg, _UNARY_PREC)}"
    if is_neg(f):
        return "~" + _wrap(f.left, _UNARY_PREC)
    p = _PREC[f.op]
    if f.op == "imp":
        left, right = _wrap(f.left, p + 1), _wrap(f.right, p)
    else:
        left, right = _wrap(f.left, p), _wrap(f.right, p + 1)
    return f"{left} {_SYMBOL[f.op]} {right}"


# ----------------------------------------------------------------- parsing

_TOKEN = re.compile(
    r"""\s*(?:
        (?P<op><->|->|/\\|\\/|<=|[~*()=])
      | (?P<kw>Delta|B|D)(?![a-zA-Z0-9_])
      | (?P<const>[01])(?![a-zA-Z0-9_])
      | (?P<ident>[a-z][a-zA-Z0-9_]*)
      | "(?P<quoted>[^"]+)"
    )""",
    re.VERBOSE,
)


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, unary_ops: frozenset[str]):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.unary_ops = unary_ops

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, value: str) -> bool:
        kind, val, _ = self.peek()
        if kind == "op" and val == value:
            self.i += 1
            return True
        return False

    def error(self, message: str):
        _, val, pos = self.peek()
        found = f"{val!r}" if val else "end of input"
        raise FormulaSyntaxError(f"{message}, found {found}", self.text, pos)

    def iff(self) -> Formula:
        left = self.imp()
        if self.accept("<->"):
            return iff(left, self.iff())
        return left

    def imp(self) -> Formula:
        left = self.disj()
        if self.accept("->"):
            return imp(left, self.imp())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.accept("\\/"):
            f = disj(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.fuse()
        while self.accept("/\\"):
            f = conj(f, self.fuse())
        return f

    def fuse(self) -> Formula:
        f = self.unary()
        while self.accept("*"):
            f = fuse(f, self.unary())
        return f

    def unary(self) -> Formula:
        kind, val, pos = self.peek()
        if kind == "op" and val == "~":
            self.take()
            return neg(self.unary())
        if kind == "kw":
            if val not in self.unary_ops:
                raise FormulaSyntaxError(f"operator {val} is not allowed here", self.text, pos)
            self.take()
            return Unary(val, self.unary())
        return self.atom()

    def atom(self) -> Formula:
        kind, val, _ = self.peek()
        if kind in ("ident", "quoted"):
            self.take()
            return Var(val)
        if kind == "const":
            self.take()
            return Const(int(val))
        if self.accept("("):
            f = self.iff()
            if not self.accept(")"):
                self.error("expected ')'")
            return f
        self.error("expected a formula")


def parse(text: str, unary_ops=("B",)) -> Formula:
    """Parse a formula. ``unary_ops`` limits which of B, D, Delta may occur."""
    p = _Parser(text, frozenset(unary_ops))
    f = p.iff()
    if p.peek()[0] != "end":
        p.error("unexpected trailing input")
    return f


def parse_term(text: str) -> Formula:
    """Parse a term that may use all of B, D and Delta."""
    return parse(text, UNARY_OPS)


def parse_relation(text: str, unary_ops=UNARY_OPS) -> tuple[Formula, str, Formula]:
    """Parse ``lhs = rhs`` or ``lhs <= rhs``; returns (lhs, "=" or "<=", rhs)."""
    p = _Parser(text, frozenset(unary_ops))
    lhs = p.iff()
    kind, val, _ = p.peek()
    if not (kind == "op" and val in ("=", "<=")):
        p.error("expected '=' or '<='")
    p.take()
    rhs = p.iff()
    if p.peek()[0] != "end":
        p.error("unexpected trailing input")
    return lhs, val, rhs
