"""One-line region expressions.

Grammar::

    hex(a,b,c)
    dhex(a,b,c,t;[u...];[v...])
    V(a,b;[u...])  Vplus(a,b;[u...])  VplusBar(a,b;[u...])
    tube(len2,h)
    tubey(<expr>;x0,y0;h;len2;w)      w in {0,1}
    file(<path>)

Whitespace between tokens is ignored.  Syntax errors carry the byte offset
of the offending character in the UTF-8 encoding of the input.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .lattice import Region


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Hex:
    a: int
    b: int
    c: int


@dataclass(frozen=True)
class DHex:
    a: int
    b: int
    c: int
    t: int
    u: tuple[int, ...]
    v: tuple[int, ...]


@dataclass(frozen=True)
class Half:
    kind: str  # V, Vplus or VplusBar
    a: int
    b: int
    u: tuple[int, ...]


@dataclass(frozen=True)
class Tube:
    len2: int
    h: int


@dataclass(frozen=True)
class Tubey:
    core: "RegionExpr"
    x0: int
    y0: int
    h: int
    len2: int
    weighted: bool


@dataclass(frozen=True)
class FileRef:
    path: str


RegionExpr = Union[Hex, DHex, Half, Tube, Tubey, FileRef]

HALF_KINDS = ("V", "Vplus", "VplusBar")
ASCII_LETTERS = frozenset(string.ascii_letters)


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.i = 0

    def error(self, message: str, at: int | None = None):
        at = self.i if at is None else at
        raise ExprSyntaxError(message, len(self.text[:at].encode("utf-8")))

    def skip(self) -> None:
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected {ch!r}, found {found}")
        self.i += 1

    def name(self) -> str:
        self.skip()
        start = self.i
        while self.i < len(self.text) and self.text[self.i] in ASCII_LETTERS:
            self.i += 1
        if start == self.i:
            self.error("expected a constructor name")
        return self.text[start:self.i]

    def integer(self, signed: bool = False) -> int:
        self.skip()
        start = self.i
        if signed and self.peek() == "-":
            self.i += 1
        digits = self.i
        while self.i < len(self.text) and self.text[self.i] in "0123456789":
            self.i += 1
        if digits == self.i:
            self.error("expected an integer", start)
        return int(self.text[start:self.i])

    def int_list(self) -> tuple[int, ...]:
        self.expect("[")
        out: list[int] = []
        if self.peek() != "]":
            while True:
                at = self.i
                value = self.integer()
                if out and value <= out[-1]:
                    self.error("list entries must be strictly increasing", at)
                out.append(value)
                if self.peek() != ",":
                    break
                self.i += 1
        self.expect("]")
        return tuple(out)

    def ints(self, k: int, sep: str = ",") -> list[int]:
        out = [self.integer()]
        for _ in range(k - 1):
            self.expect(sep)
            out.append(self.integer())
        return out

    def expr(self) -> RegionExpr:
        start = self.i
        word = self.name()
        self.expect("(")
        if word == "hex":
            node: RegionExpr = Hex(*self.ints(3))
        elif word == "dhex":
            a, b, c, t = self.ints(4)
            self.expect(";")
            u = self.int_list()
            self.expect(";")
            v = self.int_list()
            node = DHex(a, b, c, t, u, v)
        elif word in HALF_KINDS:
            a, b = self.ints(2)
            self.expect(";")
            node = Half(word, a, b, self.int_list())
        elif word == "tube":
            node = Tube(*self.ints(2))
        elif word == "tubey":
            core = self.expr()
            self.expect(";")
            x0 = self.integer(signed=True)
            self.expect(",")
            y0 = self.integer(signed=True)
            self.expect(";")
            h = self.integer()
            self.expect(";")
            len2 = self.integer()
            self.expect(";")
            at = self.i
            w = self.integer()
            if w not in (0, 1):
                self.error("weight flag must be 0 or 1", at)
            node = Tubey(core, x0, y0, h, len2, bool(w))
        elif word == "file":
            self.skip()
            begin = self.i
            end = self.text.find(")", begin)
            if end < 0:
                self.error("unterminated file(...)")
            path = self.text[begin:end].strip()
            if not path:
                self.error("empty path", begin)
            self.i = end
            node = FileRef(path)
        else:
            self.error(f"unknown constructor {word!r}", start)
        self.expect(")")
        return node


def parse_region_expr(text: str) -> RegionExpr:
    p = _Parser(text)
    node = p.expr()
    if p.peek():
        p.error("trailing input")
    return node


def _list(xs) -> str:
    return "[" + ",".join(str(x) for x in xs) + "]"


def print_region_expr(e: RegionExpr) -> str:
    if isinstance(e, Hex):
        return f"hex({e.a},{e.b},{e.c})"
    if isinstance(e, DHex):
        return f"dhex({e.a},{e.b},{e.c},{e.t};{_list(e.u)};{_list(e.v)})"
    if isinstance(e, Half):
        return f"{e.kind}({e.a},{e.b};{_list(e.u)})"
    if isinstance(e, Tube):
        return f"tube({e.len2},{e.h})"
    if isinstance(e, Tubey):
        inner = print_region_expr(e.core)
        return f"tubey({inner};{e.x0},{e.y0};{e.h};{e.len2};{int(e.weighted)})"
    if isinstance(e, FileRef):
        return f"file({e.path})"
    raise TypeError(f"not a region expression: {e!r}")


def build(e: RegionExpr, base: Path | None = None) -> Region:
    """Evaluate an expression; dent-bound violations surface as DentError."""
    from . import regions as R
    from .fileio import load_region

    if isinstance(e, Hex):
        return R.semiregular_hexagon(e.a, e.b, e.c)
    if isinstance(e, DHex):
        return R.dented_hexagon(e.a, e.b, e.c, e.t, R.DentSpec(e.u, e.v))
    if isinstance(e, Half):
        return {"V": R.V, "Vplus": R.Vplus, "VplusBar": R.VplusBar}[e.kind](e.a, e.b, e.u)
    if isinstance(e, Tube):
        return R.tube(e.len2, e.h)
    if isinstance(e, Tubey):
        core = build(e.core, base)
        return R.tubey(R.TubeySpec(core, (e.x0, e.y0), e.h, e.len2, e.weighted))
    if isinstance(e, FileRef):
        path = Path(e.path)
        if base is not None and not path.is_absolute():
            path = base / path
        return load_region(path)
    raise TypeError(f"not a region expression: {e!r}")


def region_from_text(text: str) -> Region:
    return build(parse_region_expr(text))
