"""Text syntax for sequences and domain elements.

Sequences: ``[1,5,7,11]`` (finite), ``[3|2,4]`` (preamble 3, then the block
2,4 forever), ``[|1]`` (purely periodic).  Elements: ``x(4,11)`` and
``x(3,w)`` for column points, ``s[...]`` for plain and ``t[...]`` for starred
sequences.  Parse errors carry the byte offset of the fault.
"""

from __future__ import annotations

from .errors import ParseError
from .seq import OMEGA, Seq
from .domain import Elem, plain, starred, xpoint


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] == " ":
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        self.skip_ws()
        if self.peek() != ch:
            got = repr(self.peek()) if self.peek() else "end of input"
            raise ParseError(f"expected {ch!r}, got {got}", self.pos)
        self.pos += 1

    def number(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            got = repr(self.peek()) if self.peek() else "end of input"
            raise ParseError(f"expected a number, got {got}", start)
        value = int(self.text[start : self.pos])
        if value < 1:
            raise ParseError("entries must be positive", start)
        return value

    def number_list(self, stop_chars: str) -> list[int]:
        out = []
        self.skip_ws()
        if self.peek() in stop_chars:
            return out
        out.append(self.number())
        while True:
            self.skip_ws()
            if self.peek() == ",":
                self.pos += 1
                out.append(self.number())
            else:
                return out

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def _scan_seq(sc: _Scanner) -> Seq:
    sc.expect("[")
    head = sc.number_list(stop_chars="|]")
    sc.skip_ws()
    if sc.peek() == "|":
        sc.pos += 1
        cycle = sc.number_list(stop_chars="]")
        if not cycle:
            raise ParseError("periodic block must be nonempty", sc.pos)
        sc.expect("]")
        return Seq(tuple(head), tuple(cycle))
    sc.expect("]")
    if not head:
        raise ParseError("finite sequences must be nonempty", sc.pos - 1)
    return Seq(tuple(head))


def parse_seq(text: str) -> Seq:
    sc = _Scanner(text)
    s = _scan_seq(sc)
    if not sc.at_end():
        raise ParseError(f"trailing input {text[sc.pos:]!r}", sc.pos)
    return s


def parse_elem(text: str) -> Elem:
    sc = _Scanner(text)
    sc.skip_ws()
    tag = sc.peek()
    if tag == "x":
        sc.pos += 1
        sc.expect("(")
        m = sc.number()
        sc.expect(",")
        sc.skip_ws()
        if sc.peek() == "w":
            sc.pos += 1
            n = OMEGA
        else:
            n = sc.number()
        sc.expect(")")
        elem = xpoint(m, n)
    elif tag in ("s", "t"):
        sc.pos += 1
        payload = _scan_seq(sc)
        elem = plain(payload) if tag == "s" else starred(payload)
    else:
        got = repr(tag) if tag else "end of input"
        raise ParseError(f"expected an element tag 'x', 's' or 't', got {got}", sc.pos)
    if not sc.at_end():
        raise ParseError(f"trailing input {text[sc.pos:]!r}", sc.pos)
    return elem


def format_seq(s: Seq) -> str:
    return str(s)


def format_elem(u: Elem) -> str:
    return str(u)
