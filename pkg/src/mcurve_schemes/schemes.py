"""Curve parameters, scheme values and the bracket notation.

A real scheme ``<J, a, 1<b>>`` is the pseudo-line J, ``a`` empty exterior
ovals and one non-empty oval O holding ``b`` empty ovals.  The complex
scheme adds the sign of O and the split of both families into positive
and negative ovals, e.g. ``<J, 1+, 1-, 1-<14+, 11->>``.

Pair-sign convention: the only injective pairs are (O, interior oval), and
their balance is ``Pi+ - Pi- = -eps * (beta+ - beta-)``.  With this choice
both one-nest forms of the Rokhlin-Mishachev identity

    eps = +1:   D + 1 + (a+ - a-)     = k^2 - 2k
    eps = -1: 3 D - 1 + (a+ - a-)     = k^2 - 2k

agree with ``2 D + (Lambda+ - Lambda-) = k^2 - 2k``; no other choice does.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

from .verdicts import RuleVerdict

__all__ = [
    "DegreeError",
    "SchemeSyntaxError",
    "CurveParams",
    "RealScheme",
    "ComplexScheme",
    "NestlessScheme",
    "Balances",
    "curve_params",
    "parse_scheme",
    "format_canonical",
    "validate_m_scheme",
    "pi_balance",
    "lambda_balance",
    "balances",
]


class DegreeError(ValueError):
    """Degree outside the odd, >= 5 domain (or outside a supported range)."""


class SchemeSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} (at position {position})")

    def caret(self) -> str:
        """Two-line rendering of the input with a caret under the error."""
        return f"{self.text}\n{' ' * self.position}^"


@dataclass(frozen=True)
class CurveParams:
    m: int
    k: int
    g: int
    oval_budget: int

    @property
    def rm_rhs(self) -> int:
        """Right-hand side k^2 - 2k of the Rokhlin-Mishachev identity."""
        return self.k * self.k - 2 * self.k


def curve_params(m: int) -> CurveParams:
    if isinstance(m, bool) or not isinstance(m, int):
        raise DegreeError(f"degree must be an integer, got {m!r}")
    if m % 2 == 0 or m < 5:
        raise DegreeError(f"degree must be odd and >= 5, got {m}")
    k = (m - 1) // 2
    g = (m - 1) * (m - 2) // 2
    # L = g + 1 circles, one of which is J
    return CurveParams(m=m, k=k, g=g, oval_budget=g)


def _check_count(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {value!r}")


@dataclass(frozen=True)
class RealScheme:
    alpha: int
    beta: int

    def __post_init__(self):
        _check_count("alpha", self.alpha)
        _check_count("beta", self.beta)

    def __str__(self) -> str:
        return format_canonical(self)


@dataclass(frozen=True)
class ComplexScheme:
    eps: int
    alpha_plus: int
    alpha_minus: int
    beta_plus: int
    beta_minus: int

    def __post_init__(self):
        if self.eps not in (1, -1) or isinstance(self.eps, bool):
            raise ValueError(f"eps must be +1 or -1, got {self.eps!r}")
        for name in ("alpha_plus", "alpha_minus", "beta_plus", "beta_minus"):
            _check_count(name, getattr(self, name))

    @property
    def alpha(self) -> int:
        return self.alpha_plus + self.alpha_minus

    @property
    def beta(self) -> int:
        return self.beta_plus + self.beta_minus

    @property
    def real(self) -> RealScheme:
        return RealScheme(self.alpha, self.beta)

    def __str__(self) -> str:
        return format_canonical(self)


@dataclass(frozen=True)
class NestlessScheme:
    """``<J, n>``: only empty ovals, no nest.

    Outside the one-nest family; it exists so the knowledge base can hold
    the degree-7 scheme ``<J, 15>``.
    """

    alpha: int

    def __post_init__(self):
        _check_count("alpha", self.alpha)

    @property
    def beta(self) -> int:
        return 0

    def __str__(self) -> str:
        return format_canonical(self)


Scheme = Union[RealScheme, ComplexScheme, NestlessScheme]


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<sym>[<>,+\-J]))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # "int", a symbol character, or "eof"
    value: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            pos = len(text)
            break
        mo = _TOKEN.match(text, pos)
        if mo is None:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise SchemeSyntaxError(f"unexpected character {text[start]!r}", start, text)
        if mo.group("int") is not None:
            toks.append(_Tok("int", mo.group("int"), mo.start("int")))
        else:
            toks.append(_Tok(mo.group("sym"), mo.group("sym"), mo.start("sym")))
        pos = mo.end()
    toks.append(_Tok("eof", "", len(text)))
    return toks


@dataclass
class _Item:
    count: int
    sign: Optional[str]
    pos: int


@dataclass
class _Group(_Item):
    nest: Optional[list[_Item]] = None
    nest_pos: int = -1


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def error(self, message: str, tok: Optional[_Tok] = None) -> SchemeSyntaxError:
        tok = tok or self.peek()
        return SchemeSyntaxError(message, tok.pos, self.text)

    def expect(self, kind: str, what: str) -> _Tok:
        tok = self.peek()
        if tok.kind != kind:
            found = "end of input" if tok.kind == "eof" else repr(tok.value)
            raise self.error(f"expected {what}, found {found}")
        self.i += 1
        return tok

    def count(self) -> tuple[int, int]:
        tok = self.expect("int", "a count")
        n = int(tok.value)
        if n < 1:
            raise self.error("counts must be >= 1", tok)
        return n, tok.pos

    def sign(self) -> Optional[str]:
        if self.peek().kind in ("+", "-"):
            tok = self.toks[self.i]
            self.i += 1
            return tok.value
        return None

    def scheme(self) -> list[_Group]:
        self.expect("<", "'<'")
        self.expect("J", "'J'")
        groups = []
        while self.peek().kind == ",":
            self.i += 1
            groups.append(self.group())
        self.expect(">", "',' or '>'")
        self.expect("eof", "end of input")
        return groups

    def group(self) -> _Group:
        n, pos = self.count()
        g = _Group(n, self.sign(), pos)
        if self.peek().kind == "<":
            g.nest_pos = self.peek().pos
            g.nest = self.nest()
        return g

    def nest(self) -> list[_Item]:
        self.expect("<", "'<'")
        items: list[_Item] = []
        if self.peek().kind != ">":
            items.append(self.inner())
            while self.peek().kind == ",":
                self.i += 1
                items.append(self.inner())
        self.expect(">", "',' or '>'")
        return items

    def inner(self) -> _Item:
        n, pos = self.count()
        item = _Item(n, self.sign(), pos)
        if self.peek().kind == "<":
            raise self.error("nesting deeper than one level is not supported")
        return item


def parse_scheme(text: str, *, allow_nestless: bool = False) -> Scheme:
    """Parse bracket notation into a scheme value.

    Unsigned input gives a :class:`RealScheme`, fully signed input a
    :class:`ComplexScheme`; anything in between is rejected.  Exactly one
    group must carry a nest unless ``allow_nestless`` is set, in which case
    an unsigned scheme without a nest parses to :class:`NestlessScheme`.
    """
    p = _Parser(text)
    groups = p.scheme()

    items: list[_Item] = []
    for g in groups:
        items.append(g)
        items.extend(g.nest or [])
    items.sort(key=lambda it: it.pos)
    is_complex = bool(items) and items[0].sign is not None
    for it in items:
        if (it.sign is not None) != is_complex:
            raise SchemeSyntaxError("mixed signed and unsigned groups", it.pos, text)

    nests = [g for g in groups if g.nest is not None]
    if len(nests) > 1:
        raise SchemeSyntaxError("only one nest is allowed", nests[1].nest_pos, text)
    if not nests:
        if allow_nestless and not is_complex:
            return NestlessScheme(sum(g.count for g in groups))
        raise SchemeSyntaxError("scheme needs exactly one nest", len(text), text)
    nest = nests[0]
    if nest.count != 1:
        raise SchemeSyntaxError("the nest group must have count 1", nest.pos, text)
    exterior = [g for g in groups if g.nest is None]

    if not is_complex:
        return RealScheme(
            alpha=sum(g.count for g in exterior),
            beta=sum(it.count for it in nest.nest),
        )
    return ComplexScheme(
        eps=1 if nest.sign == "+" else -1,
        alpha_plus=sum(g.count for g in exterior if g.sign == "+"),
        alpha_minus=sum(g.count for g in exterior if g.sign == "-"),
        beta_plus=sum(it.count for it in nest.nest if it.sign == "+"),
        beta_minus=sum(it.count for it in nest.nest if it.sign == "-"),
    )


def format_canonical(s: Scheme) -> str:
    if isinstance(s, ComplexScheme):
        parts = [f"{s.alpha_plus}+"] if s.alpha_plus else []
        if s.alpha_minus:
            parts.append(f"{s.alpha_minus}-")
        inner = [f"{n}{sign}" for n, sign in ((s.beta_plus, "+"), (s.beta_minus, "-")) if n]
        parts.append(f"1{'+' if s.eps == 1 else '-'}<{', '.join(inner)}>")
    elif isinstance(s, RealScheme):
        parts = [str(s.alpha)] if s.alpha else []
        parts.append(f"1<{s.beta}>" if s.beta else "1<>")
    elif isinstance(s, NestlessScheme):
        parts = [str(s.alpha)] if s.alpha else []
    else:
        raise TypeError(f"not a scheme: {s!r}")
    return "<" + ", ".join(["J", *parts]) + ">"


# -- derived quantities ----------------------------------------------------


def validate_m_scheme(s: Scheme, p: CurveParams) -> RuleVerdict:
    """M-count rule: alpha + beta + 1 ovals must exhaust the oval budget."""
    if isinstance(s, NestlessScheme):
        total = s.alpha
        shape = f"{s.alpha}"
    else:
        if s.beta < 1:
            return RuleVerdict.fail("m-count", "the nest is empty (beta = 0); O must be non-empty")
        total = s.alpha + s.beta + 1
        shape = f"alpha + beta + 1 = {s.alpha} + {s.beta} + 1 = {total}"
    if total == p.oval_budget:
        return RuleVerdict.ok("m-count", f"{shape} = g = {p.g}")
    deficit = p.oval_budget - total
    return RuleVerdict.fail(
        "m-count",
        f"{shape} != g = {p.g} for m = {p.m} (deficit {deficit})",
    )


def pi_balance(cs: ComplexScheme) -> int:
    """Pi+ - Pi- for the pairs (O, interior oval)."""
    return -cs.eps * (cs.beta_plus - cs.beta_minus)


def lambda_balance(cs: ComplexScheme) -> int:
    return cs.eps + (cs.alpha_plus - cs.alpha_minus) + (cs.beta_plus - cs.beta_minus)


@dataclass(frozen=True)
class Balances:
    pi_balance: int
    lambda_balance: int
    pi_plus: int
    pi_minus: int


def balances(cs: ComplexScheme) -> Balances:
    d = pi_balance(cs)
    # every injective pair is (O, interior oval), so Pi+ + Pi- = beta
    return Balances(
        pi_balance=d,
        lambda_balance=lambda_balance(cs),
        pi_plus=(cs.beta + d) // 2,
        pi_minus=(cs.beta - d) // 2,
    )
