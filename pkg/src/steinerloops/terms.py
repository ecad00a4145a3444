"""Loop words, identities between them, and brute-force identity checking.

Grammar (all whitespace ignored)::

    identity := term '=' term
    term     := factor factor*        juxtaposition is the loop product
    factor   := 'a'..'z' | '1' | '(' term ')'

Adjacency associates to the LEFT: ``xyz`` parses as ``(xy)z`` and ``x(yz)``
as a right-nested product.  This convention is a choice of this library; the
usual mathematical sources write every product fully parenthesized, so any
string copied from them parses to the intended tree either way.  ``1`` is the
only constant (the loop identity); there are no inverse symbols because in
the loops of interest every element is its own inverse.

``check_identity`` sweeps every assignment of table elements to the
identity's variables, in lexicographic order with the first-occurring
variable most significant, and reports the first failing assignment.  The
sweep itself runs in the compiled kernel when available (see ``sweeps``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from . import sweeps
from .algebra import CayleyTable, LoopTable, QuasigroupTable
from .errors import TermEvalError, TermSyntaxError

# Refuse sweeps bigger than this many assignments (order**variables).
MAX_ASSIGNMENTS = 100_000_000


class Term:
    """Base class for loop words; see Variable, One and Product."""

    __slots__ = ()

    def __str__(self) -> str:
        return print_term(self)


@dataclass(frozen=True)
class Variable(Term):
    name: str

    def __post_init__(self):
        if len(self.name) != 1 or not ("a" <= self.name <= "z"):
            raise ValueError(f"variable must be a single letter a..z, got {self.name!r}")


@dataclass(frozen=True)
class One(Term):
    """The constant identity element."""


@dataclass(frozen=True)
class Product(Term):
    left: Term
    right: Term


ONE = One()


@dataclass(frozen=True)
class Identity:
    """An equation between two terms.

    ``variables`` is derived: the union of both sides' variables in order of
    first occurrence (left side scanned first).  That order also fixes the
    assignment-enumeration order of :func:`check_identity`.
    """

    lhs: Term
    rhs: Term
    variables: tuple[str, ...] = field(init=False)

    def __post_init__(self):
        seen: dict[str, None] = {}
        for term in (self.lhs, self.rhs):
            for name in _iter_variables(term):
                seen.setdefault(name)
        object.__setattr__(self, "variables", tuple(seen))

    def __str__(self) -> str:
        return f"{print_term(self.lhs)}={print_term(self.rhs)}"


@dataclass(frozen=True)
class CheckReport:
    """Result of a brute-force check: holds, or the first counterexample.

    ``counterexample`` maps variable names to element indices;
    ``assignments_checked`` counts assignments up to and including the failing
    one (or the full sweep when the identity holds).
    """

    holds: bool
    counterexample: dict[str, int] | None
    assignments_checked: int


def _iter_variables(t: Term) -> Iterator[str]:
    if isinstance(t, Variable):
        yield t.name
    elif isinstance(t, Product):
        yield from _iter_variables(t.left)
        yield from _iter_variables(t.right)


def contains_one(t: Term) -> bool:
    if isinstance(t, One):
        return True
    if isinstance(t, Product):
        return contains_one(t.left) or contains_one(t.right)
    return False


def leaf_count(t: Term) -> int:
    if isinstance(t, Product):
        return leaf_count(t.left) + leaf_count(t.right)
    return 1


# ---------------------------------------------------------------------------
# parsing / printing


class _Parser:
    def __init__(self, text: str, base: int = 0):
        self.text = text
        self.base = base  # offset of text within the original input
        self.pos = 0

    def error(self, message: str, pos: int | None = None):
        where = self.pos if pos is None else pos
        raise TermSyntaxError(message, self.base + where)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse_term(self) -> Term:
        factors = []
        while True:
            ch = self.peek()
            if ch is None or ch == ")":
                break
            factors.append(self.parse_factor())
        if not factors:
            self.error("empty term")
        term = factors[0]
        for factor in factors[1:]:
            term = Product(term, factor)
        return term

    def parse_factor(self) -> Term:
        ch = self.peek()
        start = self.pos
        if ch == "(":
            self.pos += 1
            inner = self.parse_term()
            if self.peek() != ")":
                self.error("unbalanced parenthesis", start)
            self.pos += 1
            return inner
        if ch == "1":
            self.pos += 1
            return ONE
        if ch is not None and "a" <= ch <= "z":
            self.pos += 1
            return Variable(ch)
        self.error(f"illegal character {ch!r}")


def parse_term(text: str, _base: int = 0) -> Term:
    """Parse a loop word; raises TermSyntaxError with a byte offset."""
    parser = _Parser(text, _base)
    term = parser.parse_term()
    if parser.peek() == ")":
        parser.error("unbalanced parenthesis")
    return term


def parse_identity(text: str) -> Identity:
    """Parse ``lhs=rhs``; exactly one '=' is required."""
    count = text.count("=")
    if count == 0:
        raise TermSyntaxError("identity needs '='", len(text))
    if count > 1:
        raise TermSyntaxError("more than one '='", text.index("=", text.index("=") + 1))
    split = text.index("=")
    lhs = parse_term(text[:split])
    rhs = parse_term(text[split + 1:], _base=split + 1)
    return Identity(lhs, rhs)


def print_term(t: Term) -> str:
    """Render with minimal parentheses under the left-associative grammar.

    Left factors never need parentheses (juxtaposition already associates
    left); a right factor is parenthesized exactly when it is a product.
    ``parse_term(print_term(t)) == t`` for every term.
    """
    if isinstance(t, Variable):
        return t.name
    if isinstance(t, One):
        return "1"
    if isinstance(t, Product):
        left = print_term(t.left)
        right = print_term(t.right)
        if isinstance(t.right, Product):
            right = f"({right})"
        return left + right
    raise TypeError(f"not a term: {t!r}")


def term_key(t: Term) -> tuple[int, str]:
    """Deterministic total order on terms: leaf count, then rendering."""
    return (leaf_count(t), print_term(t))


# ---------------------------------------------------------------------------
# evaluation


def eval_term(t: Term, table: CayleyTable, assignment: Mapping[str, int]) -> int:
    """Evaluate a word over a Cayley table under a variable assignment."""
    if isinstance(t, Variable):
        try:
            return assignment[t.name]
        except KeyError:
            raise TermEvalError(f"variable {t.name!r} is not assigned") from None
    if isinstance(t, One):
        if not isinstance(table, LoopTable):
            raise TermEvalError("the constant 1 only makes sense in a loop")
        return 0
    if isinstance(t, Product):
        return table.mul(eval_term(t.left, table, assignment),
                         eval_term(t.right, table, assignment))
    raise TypeError(f"not a term: {t!r}")


def compile_rpn(t: Term, var_order: Mapping[str, int]) -> list[int]:
    """Flatten a term to postfix code for the sweep kernels.

    Opcodes: ``i >= 0`` push variable ``i``, ``-1`` push element 0 (the loop
    identity), ``-2`` pop two and push their product.
    """
    code: list[int] = []

    def emit(term: Term):
        if isinstance(term, Variable):
            code.append(var_order[term.name])
        elif isinstance(term, One):
            code.append(-1)
        else:
            emit(term.left)
            emit(term.right)
            code.append(-2)

    emit(t)
    return code


def check_identity(ident: Identity, table: CayleyTable) -> CheckReport:
    """Brute-force an identity over every assignment of table elements.

    Assignments run in lexicographic order of the identity's variable tuple
    (first variable most significant); the reported counterexample is the
    first failing assignment, so results are deterministic.
    """
    if not isinstance(table, (LoopTable, QuasigroupTable)):
        raise TypeError("check_identity expects a LoopTable or QuasigroupTable")
    if not isinstance(table, LoopTable) and (contains_one(ident.lhs) or contains_one(ident.rhs)):
        raise TermEvalError("the constant 1 only makes sense in a loop")
    n = table.order
    k = len(ident.variables)
    total = n ** k
    if total > MAX_ASSIGNMENTS:
        raise ValueError(f"assignment space too large ({n}^{k})")
    var_order = {name: i for i, name in enumerate(ident.variables)}
    lhs_code = compile_rpn(ident.lhs, var_order)
    rhs_code = compile_rpn(ident.rhs, var_order)
    idx = sweeps.first_divergence(lhs_code, rhs_code, n, table.flat(), k)
    if idx < 0:
        return CheckReport(True, None, total)
    counterexample = dict(zip(ident.variables, _decode_assignment(idx, n, k)))
    return CheckReport(False, counterexample, idx + 1)


def _decode_assignment(idx: int, n: int, k: int) -> list[int]:
    digits = [0] * k
    for pos in range(k - 1, -1, -1):
        idx, digits[pos] = divmod(idx, n)
    return digits


# ---------------------------------------------------------------------------
# builtin identities

STEINER_COMM = parse_identity("xy=yx")
STEINER_KEY = parse_identity("x(xy)=y")
IDEMPOTENT = parse_identity("xx=x")
MOUFANG = parse_identity("x(y(xz))=((xy)x)z")
ID4 = parse_identity("(xz)(((xy)z)(yz))=((xz)((xy)z))(yz)")
EXTRA10 = parse_identity("(xy)(y(xz))=x(y((xy)z))")
ASSOC = parse_identity("x(yz)=(xy)z")

BUILTIN_IDENTITIES: dict[str, Identity] = {
    "STEINER_COMM": STEINER_COMM,
    "STEINER_KEY": STEINER_KEY,
    "IDEMPOTENT": IDEMPOTENT,
    "MOUFANG": MOUFANG,
    "ID4": ID4,
    "EXTRA10": EXTRA10,
    "ASSOC": ASSOC,
}
