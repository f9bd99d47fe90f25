"""Textual form of elements.

    element := tuple | comb | int
    tuple   := "(" element ("," element)+ ")"
    comb    := ["-"] term (("+" | "-") term)* | "0"
    term    := [nat "*"] "x" nat

Rank-one components render as bare integers (a pair over ``Z (+) Z``
prints as ``(5, 7)``), coefficients ``1`` and ``-1`` are elided, terms are
printed in ascending generator order, and nested pairs print flat:
``((a, b), c)`` renders as ``(a, b, c)``.

Parsing is guided by the target module: the text is matched leaf-for-leaf
against the module's direct-sum tree, so flat and nested spellings are
both accepted as long as the leaves line up.
"""

from __future__ import annotations

import re

from .errors import MembershipError, ParseError
from .modules import (
    Comb,
    DirectSum,
    Element,
    FiniteFree,
    FreeModule,
    Pair,
    _comb_text,
    normalize,
)

_TOKEN = re.compile(r"\s*(?:(?P<nat>\d+)|(?P<gen>x\d+)|(?P<punct>[(),+*-]))")

_RANK_ONE = FiniteFree(1)


def format_element(element: Element, desc: FreeModule) -> str:
    """Canonical text of ``element`` as a member of ``desc``."""
    pieces: list[str] = []
    _collect(element, desc, pieces)
    if len(pieces) == 1:
        return pieces[0]
    return "(" + ", ".join(pieces) + ")"


def _collect(element, desc, out):
    if isinstance(desc, DirectSum):
        if not isinstance(element, Pair):
            raise MembershipError(f"{element!r} is not a member of {desc}")
        _collect(element.left, desc.left, out)
        _collect(element.right, desc.right, out)
        return
    desc.require(element)
    if desc == _RANK_ONE:
        out.append(str(element.coefficient(0)))
    else:
        out.append(_comb_text(element.terms))


def parse_element(text: str, desc: FreeModule) -> Element:
    """Parse ``text`` as a member of ``desc``.

    Raises ``ParseError`` for bad syntax and ``MembershipError`` when the
    shape or the generators do not fit the module.
    """
    node = _Parser(text).parse()
    leaves: list[FreeModule] = []
    _desc_leaves(desc, leaves)
    flat: list[object] = []
    _node_leaves(node, flat)
    if len(flat) != len(leaves):
        raise MembershipError(
            f"element has {len(flat)} component(s) but {desc} expects {len(leaves)}"
        )
    it = iter(flat)
    return _assemble(desc, it)


def _desc_leaves(desc, out):
    if isinstance(desc, DirectSum):
        _desc_leaves(desc.left, out)
        _desc_leaves(desc.right, out)
    else:
        out.append(desc)


def _node_leaves(node, out):
    kind, payload = node
    if kind == "tuple":
        for child in payload:
            _node_leaves(child, out)
    else:
        out.append(node)


def _assemble(desc, leaf_iter) -> Element:
    if isinstance(desc, DirectSum):
        left = _assemble(desc.left, leaf_iter)
        right = _assemble(desc.right, leaf_iter)
        return Pair(left, right)
    kind, payload = next(leaf_iter)
    if kind == "int":
        if payload == 0:
            return Comb(())
        if desc != _RANK_ONE:
            raise MembershipError(
                f"a bare integer denotes a rank-one combination, not a member of {desc}"
            )
        return normalize([(payload, 0)], desc)
    return normalize(payload, desc)


class _Parser:
    """Recursive-descent parser producing tagged nodes.

    Nodes are ``("tuple", children)``, ``("comb", terms)`` with terms a
    list of ``(coefficient, generator)`` pairs, or ``("int", value)``.
    """

    def __init__(self, text):
        self.text = text
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text):
        tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                if text[pos:].strip():
                    raise ParseError(f"unexpected character {text[pos:].strip()[0]!r}")
                break
            if m.group("nat") is not None:
                tokens.append(("nat", int(m.group("nat"))))
            elif m.group("gen") is not None:
                tokens.append(("gen", int(m.group("gen")[1:])))
            else:
                tokens.append((m.group("punct"), None))
            pos = m.end()
        return tokens

    def _peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def _next(self):
        if self.pos >= len(self.tokens):
            raise ParseError("unexpected end of element text")
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def parse(self):
        node = self._element()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input in element text {self.text!r}")
        return node

    def _element(self):
        if self._peek() == "(":
            self._next()
            children = [self._element()]
            while self._peek() == ",":
                self._next()
                children.append(self._element())
            kind, _ = self._next()
            if kind != ")":
                raise ParseError("expected ')' in element text")
            if len(children) < 2:
                raise ParseError("a tuple needs at least two components")
            return ("tuple", children)
        return self._comb_or_int()

    def _comb_or_int(self):
        sign = 1
        if self._peek() == "-":
            self._next()
            sign = -1
        kind, value = self._next()
        if kind == "nat":
            if self._peek() == "*":
                self._next()
                terms = [(sign * value, self._generator())]
            else:
                if self._peek() in ("+", "-"):
                    raise ParseError("a bare integer cannot start a combination")
                return ("int", sign * value)
        elif kind == "gen":
            terms = [(sign, value)]
        else:
            raise ParseError("expected a term or an integer")
        while self._peek() in ("+", "-"):
            term_sign = 1 if self._next()[0] == "+" else -1
            kind, value = self._next()
            if kind == "nat":
                kind2, _ = self._next()
                if kind2 != "*":
                    raise ParseError("a combination term needs an 'x' generator")
                terms.append((term_sign * value, self._generator()))
            elif kind == "gen":
                terms.append((term_sign, value))
            else:
                raise ParseError("expected a term after '+'/'-'")
        return ("comb", terms)

    def _generator(self):
        kind, value = self._next()
        if kind != "gen":
            raise ParseError("expected a generator after '*'")
        return value
