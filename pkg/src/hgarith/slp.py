"""Straight-line programs: named products of integer powers of earlier names.

A word is written as whitespace-separated factors ``NAME`` or ``NAME^EXP``
with a signed integer exponent, e.g. ``"b^-1 a b a^-1"``.  The single token
``1`` denotes the empty product.
"""

import re
from dataclasses import dataclass

from .errors import DimensionMismatch, ParseError, SingularBase, UnboundSymbol
from .exact import QMatrix

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_FACTOR_RE = re.compile(rf"^({_NAME})(?:\^([+-]?\d+))?$")
_NAME_RE = re.compile(rf"^{_NAME}$")


def parse_word(text):
    """``"B^3 A^2 B^2 A B^2"`` -> ``(("B", 3), ("A", 2), ("B", 2), ("A", 1), ("B", 2))``."""
    if text.strip() == "1":
        return ()
    factors = []
    for m in re.finditer(r"\S+", text):
        tok = m.group(0)
        fm = _FACTOR_RE.match(tok)
        if not fm:
            raise ParseError(f"bad factor {tok!r} in word {text!r}", line=1, column=m.start() + 1)
        exp = int(fm.group(2)) if fm.group(2) is not None else 1
        factors.append((fm.group(1), exp))
    if not factors:
        raise ParseError("empty word (use '1' for the identity)", line=1, column=1)
    return tuple(factors)


def format_word(word):
    if not word:
        return "1"
    return " ".join(name if e == 1 else f"{name}^{e}" for name, e in word)


def is_valid_name(name):
    return bool(_NAME_RE.match(name))


@dataclass(frozen=True)
class SLP:
    """Ordered definitions over a fixed set of base symbols.

    ``definitions`` is a tuple of ``(name, word)`` pairs where each word only
    mentions base symbols or names defined earlier.
    """

    base_symbols: tuple
    definitions: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "base_symbols", tuple(self.base_symbols))
        defs = tuple((name, tuple((s, int(e)) for s, e in word)) for name, word in self.definitions)
        object.__setattr__(self, "definitions", defs)
        known = set(self.base_symbols)
        if len(known) != len(self.base_symbols):
            raise ValueError("duplicate base symbol")
        for name, word in defs:
            if not is_valid_name(name):
                raise ValueError(f"invalid definition name {name!r}")
            if name in known:
                raise ValueError(f"name {name!r} is defined twice")
            for sym, _ in word:
                if sym not in known:
                    raise UnboundSymbol(f"{name} uses {sym!r} before it is defined")
            known.add(name)

    @classmethod
    def from_strings(cls, base_symbols, items):
        """Build from ``(name, word_string)`` pairs (or a dict in order)."""
        if isinstance(items, dict):
            items = items.items()
        return cls(tuple(base_symbols), tuple((name, parse_word(text)) for name, text in items))

    @property
    def names(self):
        return [name for name, _ in self.definitions]

    def word(self, name):
        for n, w in self.definitions:
            if n == name:
                return w
        raise KeyError(name)

    def used_base_symbols(self):
        used = {sym for _, w in self.definitions for sym, _ in w}
        return [s for s in self.base_symbols if s in used]

    def extend(self, name, word):
        return SLP(self.base_symbols, self.definitions + ((name, tuple(word)),))

    def __len__(self):
        return len(self.definitions)


def evaluate_word(word, values, inverses=None):
    """Product of ``values[name] ** exp`` over the factors, left to right."""
    inverses = {} if inverses is None else inverses
    out = None
    for name, e in word:
        if name not in values:
            raise UnboundSymbol(f"symbol {name!r} is not bound")
        if e < 0:
            if name not in inverses:
                inverses[name] = values[name].inverse()
            factor = inverses[name] ** (-e)
        else:
            factor = values[name] ** e
        out = factor if out is None else out @ factor
    return out


def evaluate_slp(slp, bindings):
    """Evaluate every definition; returns a dict containing bindings and definitions."""
    missing = [s for s in slp.used_base_symbols() if s not in bindings]
    if missing:
        raise UnboundSymbol(f"base symbol(s) not bound: {', '.join(missing)}")
    sizes = {m.n for m in bindings.values()}
    if len(sizes) > 1:
        raise DimensionMismatch(f"bound matrices have different sizes {sorted(sizes)}")
    for name, m in bindings.items():
        if m.det() == 0:
            raise SingularBase(f"base symbol {name} is bound to a singular matrix")
    values = dict(bindings)
    n = next(iter(sizes)) if sizes else None
    inverses = {}
    for name, word in slp.definitions:
        if not word:
            if n is None:
                raise UnboundSymbol("cannot size the identity without any binding")
            values[name] = QMatrix.identity(n)
        else:
            values[name] = evaluate_word(word, values, inverses)
    return values
