"""Expression language, pretty printers and JSON export.

Grammar (whitespace is insignificant between tokens)::

    expr      := term (("+" | "-") term)*
    term      := ["-"] (coeff "*")? factor ("*" factor)*      "*" is ⋄
    factor    := "P(" expr ")" | "(" expr ")" | decorated | forest
    decorated := "{" forest ";" decolist "}"
    decolist  := "1" | ident ("," ident)*
    forest    := tree+                                         juxtaposition is ⊔
    tree      := "o" | "[" forest "]"
    coeff     := signed sum of monomials in L, e.g. 2L^2-1; may be parenthesized

A lone ``0`` is the zero element.  Printing lists terms from the largest
basis element down, so the leading term comes first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .algebra import ForestSum, diamond, rb_operator
from .coeffs import ONE, LambdaPoly, format_poly, parse_poly, specialize
from .decorated import (
    DecoratedForest,
    DecoratedSum,
    check_symbol,
    diamond_decorated_sum,
    rb_operator_decorated,
)
from .errors import AlphabetError, DecorationError, ParseError
from .forest import Forest, Tree, parse_forest
from .linear import LinearCombination

__all__ = [
    "parse",
    "evaluate",
    "parse_and_evaluate",
    "format_sum",
    "format_specialized",
    "format_ast",
    "render",
    "to_json",
    "from_json",
    "dumps",
    "loads",
]

Element = Union[ForestSum, DecoratedSum]


# --------------------------------------------------------------------- AST


@dataclass(frozen=True)
class Node:
    pass


@dataclass(frozen=True)
class ForestLit(Node):
    forest: Forest


@dataclass(frozen=True)
class DecoratedLit(Node):
    forest: Forest
    decorations: tuple[str, ...]


@dataclass(frozen=True)
class Zero(Node):
    pass


@dataclass(frozen=True)
class OpApply(Node):
    arg: Node


@dataclass(frozen=True)
class Diamond(Node):
    factors: tuple[Node, ...]


@dataclass(frozen=True)
class Scale(Node):
    coeff: LambdaPoly
    arg: Node


@dataclass(frozen=True)
class Neg(Node):
    arg: Node


@dataclass(frozen=True)
class Add(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Sub(Node):
    left: Node
    right: Node


# ------------------------------------------------------------------ parser


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str, pos: Optional[int] = None):
        raise ParseError(msg, self.pos if pos is None else pos, self.text)

    def skip(self) -> None:
        t = self.text
        while self.pos < len(t) and t[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str) -> None:
        if not self.eat(ch):
            found = self.peek() or "end of input"
            self.error(f"expected {ch!r}, found {found!r}")

    def parse(self) -> Node:
        self.skip()
        if self.text[self.pos :].strip() == "0":
            return Zero()
        node = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while True:
            if self.eat("+"):
                node = Add(node, self.term())
            elif self.eat("-"):
                node = Sub(node, self.term())
            else:
                return node

    def term(self) -> Node:
        start = self.pos
        coeff = self.try_coeff()
        if coeff is not None:
            node = self.factor_chain()
            return Scale(coeff, node)
        self.pos = start
        if self.eat("-"):
            return Neg(self.term())
        return self.factor_chain()

    def factor_chain(self) -> Node:
        factors = [self.factor()]
        while self.eat("*"):
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Diamond(tuple(factors))

    def try_coeff(self) -> Optional[LambdaPoly]:
        """Coefficient followed by ``*``, or ``None`` (position then undefined)."""
        if self.peek() == "(":
            self.pos += 1
            c = self.coeff_body()
            if c is None or not self.eat(")"):
                return None
        else:
            c = self.coeff_body()
            if c is None:
                return None
        if not self.eat("*"):
            return None
        return c

    def coeff_body(self) -> Optional[LambdaPoly]:
        t = self.text
        self.skip()
        start = self.pos
        end = start
        seen_mono = False
        i = start
        # sign? digits? (L (^digits)?)? repeated with +/- between monomials
        while True:
            j = i
            while j < len(t) and t[j].isspace():
                j += 1
            if j < len(t) and t[j] in "+-":
                j += 1
                while j < len(t) and t[j].isspace():
                    j += 1
            elif seen_mono:
                break
            k = j
            while k < len(t) and t[k].isdigit():
                k += 1
            if k < len(t) and t[k] == "L":
                k += 1
                m = k
                while m < len(t) and t[m].isspace():
                    m += 1
                if m < len(t) and t[m] == "^":
                    m += 1
                    while m < len(t) and t[m].isspace():
                        m += 1
                    n = m
                    while n < len(t) and t[n].isdigit():
                        n += 1
                    if n == m:
                        return None
                    k = n
            if k == j:
                break
            seen_mono = True
            i = end = k
        if not seen_mono:
            return None
        try:
            c = parse_poly(t[start:end])
        except ValueError:
            return None
        self.pos = end
        return c

    def factor(self) -> Node:
        ch = self.peek()
        if ch == "P":
            self.pos += 1
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return OpApply(inner)
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            self.expect(")")
            return inner
        if ch == "{":
            self.pos += 1
            f = self.forest()
            self.expect(";")
            decos = self.decolist()
            self.expect("}")
            return DecoratedLit(f, decos)
        if ch in ("o", "["):
            return ForestLit(self.forest())
        self.error(f"expected a factor, found {ch or 'end of input'!r}")

    def forest(self) -> Forest:
        trees = []
        while self.peek() in ("o", "["):
            trees.append(self.tree())
        if not trees:
            self.error("expected 'o' or '['")
        return Forest(trees)

    def tree(self) -> Tree:
        if self.eat("o"):
            return Tree()
        start = self.pos
        self.expect("[")
        if self.peek() == "]":
            self.error("empty brackets", start)
        children = self.forest().trees
        self.expect("]")
        return Tree(children)

    def ident(self) -> str:
        self.skip()
        t = self.text
        start = self.pos
        while self.pos < len(t) and (t[self.pos].isalnum() or t[self.pos] == "_"):
            self.pos += 1
        word = t[start : self.pos]
        if not word:
            self.error("expected a decoration symbol")
        return word

    def decolist(self) -> tuple[str, ...]:
        start = self.pos
        first = self.ident()
        if first == "1":
            return ()
        out = [first]
        while self.eat(","):
            out.append(self.ident())
        for w in out:
            try:
                check_symbol(w)
            except AlphabetError:
                self.error(f"invalid decoration symbol {w!r}", start)
        return tuple(check_symbol(w) for w in out)


def parse(text: str) -> Node:
    """Parse an expression into an AST; raises :class:`ParseError`."""
    return _Parser(text).parse()


# --------------------------------------------------------------- evaluation


def _has_decorated(node: Node) -> bool:
    if isinstance(node, DecoratedLit):
        return True
    if isinstance(node, (Add, Sub)):
        return _has_decorated(node.left) or _has_decorated(node.right)
    if isinstance(node, (Neg, Scale, OpApply)):
        return _has_decorated(node.arg)
    if isinstance(node, Diamond):
        return any(_has_decorated(f) for f in node.factors)
    return False


def evaluate(node: Node, decorated: Optional[bool] = None) -> Element:
    """Evaluate an AST to a normalized sum.

    With ``decorated=None`` the result is a :class:`DecoratedSum` exactly
    when the expression contains a decorated literal; bare forest literals
    then must have a single leaf.
    """
    if decorated is None:
        decorated = _has_decorated(node)
    cls = DecoratedSum if decorated else ForestSum

    def ev(n: Node):
        if isinstance(n, ForestLit):
            if not decorated:
                return ForestSum._wrap({n.forest: ONE})
            if n.forest.leaves != 1:
                raise DecorationError(
                    f"forest {n.forest.code} has {n.forest.leaves} leaves; write it as a decorated literal"
                )
            return DecoratedSum._wrap({DecoratedForest._raw(n.forest, ()): ONE})
        if isinstance(n, DecoratedLit):
            if not decorated:
                raise DecorationError("decorated literal in an undecorated evaluation")
            return DecoratedSum({DecoratedForest(n.forest, n.decorations): 1})
        if isinstance(n, Zero):
            return cls.zero()
        if isinstance(n, OpApply):
            v = ev(n.arg)
            return rb_operator_decorated(v) if decorated else rb_operator(v)
        if isinstance(n, Diamond):
            v = ev(n.factors[0])
            for f in n.factors[1:]:
                w = ev(f)
                v = diamond_decorated_sum(v, w) if decorated else diamond(v, w)
            return v
        if isinstance(n, Scale):
            return ev(n.arg).scale(n.coeff)
        if isinstance(n, Neg):
            return -ev(n.arg)
        if isinstance(n, Add):
            return ev(n.left) + ev(n.right)
        if isinstance(n, Sub):
            return ev(n.left) - ev(n.right)
        raise TypeError(f"unknown node {n!r}")

    return ev(node)


def parse_and_evaluate(text: str, decorated: Optional[bool] = None) -> Element:
    return evaluate(parse(text), decorated)


# ---------------------------------------------------------------- printing


def _basis_ascii(b) -> str:
    if isinstance(b, Forest):
        return b.code
    if b.forest.leaves == 1:
        return b.forest.code
    return "{" + b.forest.code + ";" + ",".join(b.decorations) + "}"


def _tree_latex(t: Tree) -> str:
    if not t.children:
        return r"\bullet"
    return r"\lfloor " + _forest_latex(Forest(t.children)) + r" \rfloor"


def _forest_latex(f: Forest) -> str:
    return r" \sqcup ".join(_tree_latex(t) for t in f.trees)


def _basis_latex(b) -> str:
    if isinstance(b, Forest):
        return _forest_latex(b)
    if b.forest.leaves == 1:
        return _forest_latex(b.forest)
    return "(" + _forest_latex(b.forest) + "; " + r" \otimes ".join(b.decorations) + ")"


def _poly_latex(p: LambdaPoly) -> str:
    s = format_poly(p)
    out = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch == "L":
            out.append(r"\lambda")
        elif ch == "^":
            j = i + 1
            while j < len(s) and s[j].isdigit():
                j += 1
            out.append("^{" + s[i + 1 : j] + "}")
            i = j
            continue
        else:
            out.append(ch)
        i += 1
    return "".join(out)


def _split_sign(c):
    if isinstance(c, LambdaPoly):
        neg = c.leading_coefficient() < 0
    else:
        neg = c < 0
    return neg, (-c if neg else c)


def _coeff_text(c, fmt: str) -> Optional[str]:
    """Text for a positive-leading coefficient; ``None`` means 1."""
    if isinstance(c, LambdaPoly):
        if c == ONE:
            return None
        multi = len(c.terms()) > 1
        body = _poly_latex(c) if fmt == "latex" else format_poly(c)
        return f"({body})" if multi else body
    c = Fraction(c)
    if c == 1:
        return None
    if c.denominator == 1:
        return str(c.numerator)
    if fmt == "latex":
        return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"
    return f"({c.numerator}/{c.denominator})"


def _format_terms(items, fmt: str) -> str:
    if not items:
        return "0"
    basis_fn = _basis_latex if fmt == "latex" else _basis_ascii
    mul = " " if fmt == "latex" else "*"
    parts = []
    for i, (b, c) in enumerate(items):
        neg, mag = _split_sign(c)
        ct = _coeff_text(mag, fmt)
        body = basis_fn(b) if ct is None else f"{ct}{mul}{basis_fn(b)}"
        if i == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def _descending(s: LinearCombination):
    return list(reversed(s.items()))


def format_sum(s: LinearCombination, fmt: str = "ascii") -> str:
    """Canonical text of a normalized sum (``fmt`` is ``ascii`` or ``latex``)."""
    if fmt not in ("ascii", "latex"):
        raise ValueError(f"unknown format {fmt!r}")
    return _format_terms(_descending(s), fmt)


def format_specialized(s: LinearCombination, value, fmt: str = "ascii") -> str:
    """Print with every coefficient evaluated at ``L = value``."""
    items = [(b, specialize(c, value)) for b, c in _descending(s)]
    return _format_terms([(b, c) for b, c in items if c != 0], fmt)


def format_ast(node: Node, fmt: str = "ascii") -> str:
    """Unevaluated rendering of an expression tree."""
    latex = fmt == "latex"

    def go(n: Node, ctx: int) -> str:
        # ctx: 0 = expr, 1 = term, 2 = factor
        if isinstance(n, ForestLit):
            return _forest_latex(n.forest) if latex else n.forest.code
        if isinstance(n, DecoratedLit):
            d = ",".join(n.decorations) or "1"
            if latex:
                d = r" \otimes ".join(n.decorations) or "1"
                return "(" + _forest_latex(n.forest) + "; " + d + ")"
            return "{" + n.forest.code + ";" + d + "}"
        if isinstance(n, Zero):
            return "0"
        if isinstance(n, OpApply):
            return ("P(" if not latex else r"P\left(") + go(n.arg, 0) + (")" if not latex else r"\right)")
        if isinstance(n, Diamond):
            sep = r" \diamond " if latex else "*"
            s = sep.join(go(f, 2) for f in n.factors)
            return f"({s})" if ctx >= 2 else s
        if isinstance(n, Scale):
            c = _poly_latex(n.coeff) if latex else format_poly(n.coeff)
            if len(n.coeff.terms()) > 1 or n.coeff.leading_coefficient() < 0:
                c = f"({c})"
            s = f"{c}{' ' if latex else '*'}{go(n.arg, 2)}"
            return f"({s})" if ctx >= 2 else s
        if isinstance(n, Neg):
            s = "-" + go(n.arg, 2)
            return f"({s})" if ctx >= 1 else s
        if isinstance(n, (Add, Sub)):
            op = " + " if isinstance(n, Add) else " - "
            s = go(n.left, 0) + op + go(n.right, 1)
            return f"({s})" if ctx >= 1 else s
        raise TypeError(f"unknown node {n!r}")

    return go(node, 0)


def render(x: Union[Node, LinearCombination], fmt: str = "ascii") -> str:
    """Render an AST or a sum."""
    if isinstance(x, Node):
        return format_ast(x, fmt)
    return format_sum(x, fmt)


# -------------------------------------------------------------------- JSON


def to_json(s: LinearCombination) -> dict:
    terms = []
    for b, c in s.items():
        if isinstance(b, Forest):
            terms.append({"forest": b.code, "deco": [], "coeff": format_poly(c)})
        else:
            terms.append({"forest": b.forest.code, "deco": list(b.decorations), "coeff": format_poly(c)})
    return {"terms": terms}


def from_json(obj: dict, decorated: Optional[bool] = None) -> Element:
    """Inverse of :func:`to_json`.

    Without ``decorated`` the result is a :class:`DecoratedSum` iff some
    term has a nonempty ``deco`` list.
    """
    terms = obj["terms"]
    if decorated is None:
        decorated = any(t.get("deco") for t in terms)
    if decorated:
        return DecoratedSum(
            {DecoratedForest(parse_forest(t["forest"]), tuple(t.get("deco", ()))): parse_poly(t["coeff"]) for t in terms}
        )
    out: dict = {}
    for t in terms:
        if t.get("deco"):
            raise DecorationError("decorated term in an undecorated sum")
        f = parse_forest(t["forest"])
        out[f] = out.get(f, LambdaPoly()) + parse_poly(t["coeff"])
    return ForestSum(out)


def dumps(s: LinearCombination, **kwargs) -> str:
    return json.dumps(to_json(s), **kwargs)


def loads(text: str, decorated: Optional[bool] = None) -> Element:
    return from_json(json.loads(text), decorated)
