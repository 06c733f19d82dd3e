"""Text syntax for bundle expressions.

::

    expr    := sum '@' space
    sum     := term ('+' term)*
    term    := factor ('*' INT)?
    factor  := primary ('^*')*
    primary := atom | '0' | '(' sum ')'
             | 'ext[' sum ';' sum ']' | 'ker[' sum ';' sum ']' | 'coker[' sum ';' sum ']'
             | 'zero[' sum ']'
    atom    := 'O' tw | 'S' tw | 'Q' tw | 'L^' INT
             | 'Sym^' INT ('S'|'Q') tw | 'wedge^' INT ('S'|'Q') tw
             | 'Sigma(' INT ')' | 'Omega1P4(' INT ')' | 'TP4(' INT ')'
             | 'W(' INT (',' INT)* ')'
    tw      := ('(' INT ')')?

On P and Y', ``S`` is L^perp/L.  ``ext[A; B]`` is the non-split extension with
sub A and quotient B; ``ker[A; B]`` and ``coker[A; B]`` are the kernel of the
evaluation map and the cokernel of the coevaluation map.  ``W(...)`` gives a raw
Levi weight.
"""

from __future__ import annotations

import re
from typing import List, Optional, Tuple

from .bundles import (BundleClass, DirectSum, ExtensionObject, IrredClass, Space,
                      ZeroSectionObject, dual_class, normalize, space_from_name)


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<word>[A-Za-z][A-Za-z0-9]*)|(?P<sym>\^\*|[()\[\];,+*^]))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    out, i = [], 0
    while i < len(text):
        if text[i:].strip() == "":
            break
        m = _TOKEN.match(text, i)
        if not m or m.end() == i:
            raise ParseError("unexpected character", i, text)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        i = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, space: Space, offset: int, full: str):
        self.full = full
        self.space = space
        self.offset = offset
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> Tuple[str, str, int]:
        return self.toks[self.i]

    def fail(self, msg: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2] + self.offset, self.full)

    def take(self, value: Optional[str] = None, kind: Optional[str] = None):
        tok = self.peek()
        if value is not None and tok[1] != value:
            self.fail(f"expected {value!r}")
        if kind is not None and tok[0] != kind:
            self.fail(f"expected {kind}")
        self.i += 1
        return tok

    def integer(self) -> int:
        return int(self.take(kind="int")[1])

    def parse_sum(self):
        parts = [self.parse_term()]
        while self.peek()[1] == "+":
            self.take("+")
            parts.append(self.parse_term())
        return normalize(parts, self.space)

    def parse_term(self):
        obj = self.parse_factor()
        if self.peek()[1] == "*":
            self.take("*")
            k = self.integer()
            if k < 0:
                self.fail("multiplicity must be non-negative")
            obj = _times(obj, k, self.space)
        return obj

    def parse_factor(self):
        obj = self.parse_primary()
        while self.peek()[1] == "^*":
            self.take("^*")
            obj = dual_object(obj)
        return obj

    def twist(self) -> int:
        if self.peek()[1] == "(":
            self.take("(")
            k = self.integer()
            self.take(")")
            return k
        return 0

    def paren_int(self) -> int:
        self.take("(")
        k = self.integer()
        self.take(")")
        return k

    def power(self) -> int:
        self.take("^")
        if self.peek()[1] == "(":
            return self.paren_int()
        return self.integer()

    def bracket_pair(self):
        self.take("[")
        a = self.parse_sum()
        self.take(";")
        b = self.parse_sum()
        self.take("]")
        return a, b

    def parse_primary(self):
        tok = self.peek()
        if tok[1] == "(":
            self.take("(")
            obj = self.parse_sum()
            self.take(")")
            return obj
        if tok[0] == "int" and tok[1] == "0":
            self.take()
            return BundleClass.zero(self.space)
        if tok[0] != "word":
            self.fail("expected an atom")
        self.take()
        word = tok[1]
        sp = self.space
        try:
            if word in ("ext", "ker", "coker"):
                a, b = self.bracket_pair()
                return make_presentation(word, a, b)
            if word == "zero":
                self.take("[")
                base = self.parse_sum()
                self.take("]")
                return _zero_section(base, sp)
            if word == "O":
                return BundleClass.of(sp.line(self.twist()))
            if word == "L":
                return BundleClass.of(_l_power(sp, self.power()))
            if word in ("S", "Q"):
                return _sym_atom(sp, word, 1, self.twist())
            if word in ("Sym", "wedge"):
                q = self.power()
                which = self.take(kind="word")[1]
                if which not in ("S", "Q"):
                    self.fail("expected S or Q")
                k = self.twist()
                if word == "Sym":
                    return _sym_atom(sp, which, q, k)
                return _wedge_atom(sp, which, q, k)
            if word == "Sigma":
                from .bundles import sigma
                if sp.kind != "Yp":
                    raise ValueError("Sigma is only defined on Y'")
                return sigma(self.paren_int())
            if word in ("Omega1P4", "TP4"):
                from .bundles import omega1_p4, tangent_p4
                k = self.paren_int()
                return omega1_p4(k, sp) if word == "Omega1P4" else tangent_p4(k, sp)
            if word == "W":
                self.take("(")
                vals = [self.integer()]
                while self.peek()[1] == ",":
                    self.take(",")
                    vals.append(self.integer())
                self.take(")")
                return BundleClass.of(IrredClass(sp, tuple(vals)))
        except ParseError:
            raise
        except ValueError as exc:
            self.fail(str(exc), tok)
        self.fail(f"unknown atom {word!r} for space {sp.name}", tok)


def _times(obj, k: int, space: Space):
    if isinstance(obj, BundleClass):
        return obj.times(k)
    return normalize([obj] * k, space) if k else BundleClass.zero(space)


def _l_power(sp: Space, k: int) -> IrredClass:
    h = sp.homogeneous
    if h.kind not in ("Proj", "P3Sp"):
        raise ValueError(f"L is not defined on {sp.name}")
    return sp.line(-k)


def _sym_atom(sp: Space, which: str, m: int, k: int) -> BundleClass:
    h = sp.homogeneous
    if m < 0:
        return BundleClass.zero(sp)
    if which == "S":
        if h.kind == "Gr24":
            return BundleClass.of(IrredClass(sp, (k, k - m, 0, 0)))
        if h.kind == "LGr":
            return BundleClass.of(IrredClass(sp, (k, k - m)))
        if h.kind == "P3Sp":
            return BundleClass.of(IrredClass(sp, (k, m)))
        raise ValueError(f"S is not defined on {sp.name}; use Q or O")
    if h.kind == "Gr24":
        return BundleClass.of(IrredClass(sp, (k, k, 0, -m)))
    if h.kind == "Proj":
        return BundleClass.of(IrredClass(sp, (k,) + (0,) * (h.n - 1) + (-m,)))
    raise ValueError(f"Q is not defined on {sp.name}")


def _wedge_atom(sp: Space, which: str, q: int, k: int) -> BundleClass:
    h = sp.homogeneous
    if q == 0:
        return BundleClass.of(sp.line(k))
    if q == 1:
        return _sym_atom(sp, which, 1, k)
    if which == "S":
        if q > 2:
            return BundleClass.zero(sp)
        if h.kind == "Gr24":
            return BundleClass.of(IrredClass(sp, (k - 1, k - 1, 0, 0)))
        if h.kind == "LGr":
            return BundleClass.of(IrredClass(sp, (k - 1, k - 1)))
        if h.kind == "P3Sp":
            return BundleClass.of(sp.line(k))
        raise ValueError(f"S is not defined on {sp.name}")
    size = 2 if h.kind == "Gr24" else h.n if h.kind == "Proj" else None
    if size is None:
        raise ValueError(f"Q is not defined on {sp.name}")
    if q > size:
        return BundleClass.zero(sp)
    tail = (0,) * (size - q) + (-1,) * q
    head = (k, k) if h.kind == "Gr24" else (k,)
    return BundleClass.of(IrredClass(sp, head + tail))


def _zero_section(base: BundleClass, sp: Space) -> ZeroSectionObject:
    if not isinstance(base, BundleClass):
        raise ValueError("zero[...] takes a bundle class")
    if not sp.is_total:
        raise ValueError("zero[...] needs a total space")
    return ZeroSectionObject(sp, base.moved(sp.base))


def canonical_name(obj: ExtensionObject) -> Optional[str]:
    if not isinstance(obj.sub, BundleClass) or not isinstance(obj.quot, BundleClass):
        return None
    a, b = obj.sub.irreducible(), obj.quot.irreducible()
    if a is None or b is None:
        return None
    sp = obj.space
    lines = {sp.line(k).levi: k for k in (a.levi[0], b.levi[0])}
    if a.levi not in lines or b.levi not in lines:
        return None
    da, db = lines[a.levi], lines[b.levi]
    if obj.kind == "extension" and sp.kind == "Yp" and db == da + 3:
        return f"Sigma({da + 1})"
    if sp.homogeneous.kind == "LGr" and obj.h == 5 and db == da + 1:
        if obj.kind == "kernel":
            return f"Omega1P4({db})"
        return f"TP4({da})"
    return None


def make_presentation(word: str, a, b) -> ExtensionObject:
    if not isinstance(a, BundleClass) or not isinstance(b, BundleClass):
        raise ValueError(f"{word}[...] takes bundle classes")
    if a.is_zero or b.is_zero:
        raise ValueError(f"{word}[...] needs nonzero pieces")
    kind = {"ext": "extension", "ker": "kernel", "coker": "cokernel"}[word]
    h = 1
    if kind != "extension":
        from .homalg import hom_dim
        h = hom_dim(a, b)
        if h == 0:
            raise ValueError(f"{word}[...] needs a nonzero Hom between the pieces")
    obj = ExtensionObject(a.space, kind, a, b, h)
    return ExtensionObject(a.space, kind, a, b, h, canonical_name(obj))


def dual_object(obj):
    if isinstance(obj, BundleClass):
        return dual_class(obj)
    if isinstance(obj, ExtensionObject):
        a, b = dual_class(obj.sub), dual_class(obj.quot)
        if obj.kind == "extension":
            new = ExtensionObject(obj.space, "extension", b, a, 1)
        elif obj.kind == "kernel":
            new = ExtensionObject(obj.space, "cokernel", b, a, obj.h)
        else:
            new = ExtensionObject(obj.space, "kernel", b, a, obj.h)
        return ExtensionObject(new.space, new.kind, new.sub, new.quot, new.h, canonical_name(new))
    if isinstance(obj, DirectSum):
        return normalize([dual_object(p) for p in obj.parts], obj.space)
    raise ValueError("duals of zero-section objects are not supported")


def parse_bundle_expr(text: str):
    at = text.rfind("@")
    if at < 0:
        raise ParseError("missing '@space' suffix", len(text), text)
    try:
        space = space_from_name(text[at + 1:])
    except ValueError as exc:
        raise ParseError(str(exc), at + 1, text) from None
    p = _Parser(text[:at], space, 0, text)
    obj = p.parse_sum()
    if p.peek()[0] != "end":
        p.fail("trailing input")
    return obj


def parse_in_space(text: str, space: Space):
    """Parse an expression without suffix (or with one matching ``space``)."""
    if "@" in text:
        obj = parse_bundle_expr(text)
        if obj.space != space:
            raise ParseError(f"expression is on {obj.space.name}, expected {space.name}", text.rfind("@"), text)
        return obj
    return parse_bundle_expr(f"{text} @{space.name}")
