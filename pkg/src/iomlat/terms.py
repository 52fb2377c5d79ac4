"""Term language over the signature: parsing, printing, evaluation, checking.

Surface syntax (ASCII):

    postfix '   negation/orthocomplement (tightest)
    &  |        meet-like / join-like, equal precedence, left-associative;
                mixing the two without parentheses is a syntax error
    ->          implication, right-associative (loosest)
    atoms       identifiers, the constants 0 and 1, parenthesized terms

Statements:

    term                        a bare term
    term = term                 an equation
    term REL term               an unconditional relation claim, REL one of
                                <=   <=q   <=l   C
    A1, ..., Ak |- A            a quasi-identity: if every hypothesis atom
                                holds, the conclusion atom holds; atoms are
                                equations or relation claims

`C` is reserved for the commutation relation and cannot be used as a
variable name.  Statement files carry one statement per line, with '#'
starting a comment.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Union

from .algebras import FiniteAlgebra, RelationKind
from .errors import InputError, ParseError


# -- abstract syntax --------------------------------------------------------


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: int  # 0 or 1


@dataclass(frozen=True)
class Neg:
    arg: "Term"


@dataclass(frozen=True)
class Imp:
    lhs: "Term"
    rhs: "Term"


@dataclass(frozen=True)
class Cap:
    lhs: "Term"
    rhs: "Term"


@dataclass(frozen=True)
class Cup:
    lhs: "Term"
    rhs: "Term"


Term = Union[Var, Const, Neg, Imp, Cap, Cup]


@dataclass(frozen=True)
class Equation:
    lhs: Term
    rhs: Term
    vars: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.vars:
            object.__setattr__(self, "vars", _var_order([self.lhs, self.rhs]))


@dataclass(frozen=True)
class Relation:
    kind: RelationKind
    lhs: Term
    rhs: Term


Atom = Union[Equation, Relation]


@dataclass(frozen=True)
class QuasiIdentity:
    hypotheses: tuple[Atom, ...]
    conclusion: Atom
    vars: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.vars:
            terms = []
            for atom in (*self.hypotheses, self.conclusion):
                terms.extend((atom.lhs, atom.rhs))
            object.__setattr__(self, "vars", _var_order(terms))


Statement = Union[Equation, QuasiIdentity]


def _var_order(terms) -> tuple[str, ...]:
    """Variable names in order of first occurrence, left to right."""
    seen: dict[str, None] = {}
    stack = list(reversed(terms))
    while stack:
        t = stack.pop()
        if isinstance(t, Var):
            seen.setdefault(t.name, None)
        elif isinstance(t, Neg):
            stack.append(t.arg)
        elif isinstance(t, (Imp, Cap, Cup)):
            stack.append(t.rhs)
            stack.append(t.lhs)
    return tuple(seen)


# -- tokenizer ---------------------------------------------------------------

_REL_TOKENS = {"<=": RelationKind.LE, "<=q": RelationKind.LE_Q, "<=l": RelationKind.LE_L}


def _byte_offset(text: str, i: int) -> int:
    return len(text[:i].encode("utf-8"))


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """Produce (kind, lexeme, byte offset) triples."""
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        off = _byte_offset(text, i)
        if c in "()'&,=":
            kinds = {"(": "lparen", ")": "rparen", "'": "prime", "&": "cap",
                     ",": "comma", "=": "eq"}
            tokens.append((kinds.get(c, c), c, off))
            i += 1
            continue
        if c == "|":
            if text.startswith("|-", i):
                tokens.append(("turnstile", "|-", off))
                i += 2
            else:
                tokens.append(("cup", "|", off))
                i += 1
            continue
        if text.startswith("->", i):
            tokens.append(("imp", "->", off))
            i += 2
            continue
        if c == "<":
            for lexeme in ("<=q", "<=l", "<="):
                if text.startswith(lexeme, i):
                    # a suffixed relation must not eat the head of an
                    # identifier: 'x <= qz' is the plain relation with 'qz'
                    after = i + len(lexeme)
                    if len(lexeme) == 3 and after < n and (
                        (text[after].isalnum() and text[after].isascii()) or text[after] == "_"
                    ):
                        continue
                    tokens.append(("rel", lexeme, off))
                    i += len(lexeme)
                    break
            else:
                raise ParseError("stray '<'", off)
            continue
        if c in "01":
            tokens.append(("const", c, off))
            i += 1
            continue
        if (c.isalpha() and c.isascii()) or c == "_":
            j = i + 1
            while j < n and ((text[j].isalnum() and text[j].isascii()) or text[j] == "_"):
                j += 1
            word = text[i:j]
            tokens.append(("commutes" if word == "C" else "ident", word, off))
            i = j
            continue
        raise ParseError(f"unexpected character {c!r}", off)
    tokens.append(("eof", "", _byte_offset(text, n)))
    return tokens


# -- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1] or 'end of input'!r}", tok[2])
        self.pos += 1
        return tok

    # term := junction ('->' term)?          right-associative
    def term(self) -> Term:
        lhs = self.junction()
        if self.peek()[0] == "imp":
            self.take()
            return Imp(lhs, self.term())
        return lhs

    # junction := postfix (('&' postfix)* | ('|' postfix)*)
    def junction(self) -> Term:
        lhs = self.postfix()
        op = self.peek()[0]
        if op not in ("cap", "cup"):
            return lhs
        while True:
            kind, lexeme, off = self.peek()
            if kind not in ("cap", "cup"):
                return lhs
            if kind != op:
                raise ParseError("mixing '&' and '|' requires parentheses", off)
            self.take()
            rhs = self.postfix()
            lhs = Cap(lhs, rhs) if kind == "cap" else Cup(lhs, rhs)

    def postfix(self) -> Term:
        t = self.atom()
        while self.peek()[0] == "prime":
            self.take()
            t = Neg(t)
        return t

    def atom(self) -> Term:
        kind, lexeme, off = self.peek()
        if kind == "const":
            self.take()
            return Const(int(lexeme))
        if kind == "ident":
            self.take()
            return Var(lexeme)
        if kind == "commutes":
            raise ParseError("'C' is reserved for the commutation relation", off)
        if kind == "lparen":
            self.take()
            t = self.term()
            self.take("rparen")
            return t
        raise ParseError(f"expected a term, found {lexeme or 'end of input'!r}", off)

    # element := term (('=' | rel | 'C') term)?
    def element(self):
        lhs = self.term()
        kind, lexeme, off = self.peek()
        if kind == "eq":
            self.take()
            return Equation(lhs, self.term())
        if kind == "rel":
            self.take()
            return Relation(_REL_TOKENS[lexeme], lhs, self.term())
        if kind == "commutes":
            self.take()
            return Relation(RelationKind.COMMUTES, lhs, self.term())
        return lhs

    def statement(self):
        first = self.element()
        kind, lexeme, off = self.peek()
        if kind in ("comma", "turnstile"):
            atoms = [self._require_atom(first, off)]
            while self.peek()[0] == "comma":
                self.take()
                atoms.append(self._require_atom(self.element(), self.peek()[2]))
            self.take("turnstile")
            conclusion = self._require_atom(self.element(), self.peek()[2])
            self.take("eof")
            return QuasiIdentity(tuple(atoms), conclusion)
        self.take("eof")
        if isinstance(first, Relation):
            return QuasiIdentity((), first)
        return first

    @staticmethod
    def _require_atom(elem, off) -> Atom:
        if isinstance(elem, (Equation, Relation)):
            return elem
        raise ParseError("expected an equation or relation atom", off)


def parse(text: str) -> Term | Equation | QuasiIdentity:
    """Parse one statement: a term, an equation, or a quasi-identity.

    An unconditional relation claim `t1 REL t2` parses as a quasi-identity
    with no hypotheses.
    """
    return _Parser(text).statement()


def parse_term(text: str) -> Term:
    result = parse(text)
    if not isinstance(result, (Var, Const, Neg, Imp, Cap, Cup)):
        raise ParseError("expected a bare term", 0)
    return result


def parse_statement(text: str) -> Statement:
    result = parse(text)
    if isinstance(result, (Equation, QuasiIdentity)):
        return result
    raise ParseError("expected an equation or quasi-identity", 0)


# -- printing ----------------------------------------------------------------

_REL_TEXT = {
    RelationKind.LE: "<=",
    RelationKind.LE_Q: "<=q",
    RelationKind.LE_L: "<=l",
    RelationKind.COMMUTES: "C",
}


def format_term(t: Term) -> str:
    """Canonical form: every binary node fully parenthesized."""
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return str(t.value)
    if isinstance(t, Neg):
        # binary args already carry their own parentheses
        return format_term(t.arg) + "'"
    ops = {Imp: "->", Cap: "&", Cup: "|"}
    return f"({format_term(t.lhs)} {ops[type(t)]} {format_term(t.rhs)})"


def format_atom(atom: Atom) -> str:
    if isinstance(atom, Equation):
        return f"{format_term(atom.lhs)} = {format_term(atom.rhs)}"
    return f"{format_term(atom.lhs)} {_REL_TEXT[atom.kind]} {format_term(atom.rhs)}"


def format_statement(stmt) -> str:
    if isinstance(stmt, Equation):
        return format_atom(stmt)
    if isinstance(stmt, QuasiIdentity):
        concl = format_atom(stmt.conclusion)
        if not stmt.hypotheses:
            return concl
        return ", ".join(format_atom(h) for h in stmt.hypotheses) + " |- " + concl
    return format_term(stmt)


# -- evaluation --------------------------------------------------------------


def evaluate(t: Term, alg: FiniteAlgebra, env: dict[str, int]) -> int:
    """Value of `t` in `alg` under the assignment `env` (variable -> index)."""
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise InputError(f"unbound variable {t.name!r}") from None
    if isinstance(t, Const):
        return alg.one if t.value == 1 else alg.zero
    if isinstance(t, Neg):
        return alg.neg(evaluate(t.arg, alg, env))
    a = evaluate(t.lhs, alg, env)
    b = evaluate(t.rhs, alg, env)
    if isinstance(t, Imp):
        return alg.imp(a, b)
    if isinstance(t, Cap):
        return alg.cap(a, b)
    return alg.cup(a, b)


def atom_holds(atom: Atom, alg: FiniteAlgebra, env: dict[str, int]) -> bool:
    a = evaluate(atom.lhs, alg, env)
    b = evaluate(atom.rhs, alg, env)
    if isinstance(atom, Equation):
        return a == b
    return {
        RelationKind.LE: alg.le,
        RelationKind.LE_Q: alg.le_q,
        RelationKind.LE_L: alg.le_l,
        RelationKind.COMMUTES: alg.commutes,
    }[atom.kind](a, b)


@dataclass(frozen=True)
class HoldsResult:
    ok: bool
    witness: dict[str, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def assignments(vars: tuple[str, ...], size: int) -> Iterator[dict[str, int]]:
    """All assignments in lexicographic order (vars as declared, indices ascending)."""
    for values in itertools.product(range(size), repeat=len(vars)):
        yield dict(zip(vars, values))


def holds(stmt: Statement | str, alg: FiniteAlgebra) -> HoldsResult:
    """Check a statement under every assignment of its variables.

    On failure the witness is the lexicographically first failing assignment.
    """
    if isinstance(stmt, str):
        stmt = parse_statement(stmt)
    if isinstance(stmt, Equation):
        for env in assignments(stmt.vars, alg.size):
            if not atom_holds(stmt, alg, env):
                return HoldsResult(False, env)
        return HoldsResult(True)
    if not isinstance(stmt, QuasiIdentity):
        raise InputError("holds() wants an equation or quasi-identity, not a bare term")
    for env in assignments(stmt.vars, alg.size):
        if all(atom_holds(h, alg, env) for h in stmt.hypotheses):
            if not atom_holds(stmt.conclusion, alg, env):
                return HoldsResult(False, env)
    return HoldsResult(True)


def format_witness(env: dict[str, int], alg: FiniteAlgebra, vars: tuple[str, ...] | None = None) -> str:
    order = vars if vars is not None else tuple(env)
    return " ".join(f"{v}={alg.names[env[v]]}" for v in order if v in env)


# -- statement files ---------------------------------------------------------


def iter_statement_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield (line number, source) for each non-blank, non-comment line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line
