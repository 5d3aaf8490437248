"""graph6 text encoding: parser, emitter, and a line-stream reader.

Only the short form N(n) with n <= 62 is handled: one size character
(ord = 63 + n) followed by ceil(n(n-1)/2 / 6) data characters, each carrying
six upper-triangle bits (column-major, MSB first, bias 63).  The 4- and
8-byte extended size forms are rejected with a clear message; desk-scale runs
never need them.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Optional

from .graphs import Graph, from_code

HEADER = ">>graph6<<"
MAX_GRAPH6_N = 62


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the 1-based line number when known."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


def _body_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(text: str, strict: bool = False) -> Graph:
    """Decode one graph6 line into a labeled Graph.

    strict additionally rejects nonzero padding bits; the default is tolerant,
    matching the output of common generators.
    """
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    first = ord(s[0])
    if first == 126:
        raise Graph6Error("extended size formats (n > 62) are not supported")
    if not 63 <= first <= 125:
        raise Graph6Error(f"size character {s[0]!r} out of range 63..125")
    n = first - 63
    if n == 0:
        raise Graph6Error("graphs on 0 vertices are not supported")
    body = s[1:]
    need = _body_length(n)
    if len(body) < need:
        raise Graph6Error(f"truncated bit vector: need {need} characters after size, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"unexpected trailing characters: need {need} after size, got {len(body)}")
    bits = n * (n - 1) // 2
    code = 0
    for idx, ch in enumerate(body):
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise Graph6Error(f"data character {ch!r} out of range 63..126")
        for b in range(6):
            pos = 6 * idx + b
            if (c >> (5 - b)) & 1:
                if pos >= bits:
                    if strict:
                        raise Graph6Error("nonzero padding bits")
                    continue
                code |= 1 << pos
    return from_code(n, code)


def emit_graph6(g: Graph) -> str:
    """Canonical graph6 line for a labeled graph (n <= 62)."""
    if g.n > MAX_GRAPH6_N:
        raise Graph6Error(f"n={g.n} is not representable in the short graph6 form (max {MAX_GRAPH6_N})")
    return emit_code(g.n, g.to_code())


def emit_code(n: int, code: int) -> str:
    """graph6 line from a vertex count and an upper-triangle edge code."""
    bits = n * (n - 1) // 2
    chars = [chr(63 + n)]
    for idx in range(_body_length(n)):
        c = 0
        for b in range(6):
            pos = 6 * idx + b
            if pos < bits and (code >> pos) & 1:
                c |= 1 << (5 - b)
        chars.append(chr(63 + c))
    return "".join(chars)


def read_stream(
    lines: Iterable[str],
    strict: bool = False,
    on_error: Optional[Callable[[Graph6Error], None]] = None,
) -> Iterator[Graph]:
    """Lazily decode a newline stream of graph6 text.

    Blank lines are skipped and a ">>graph6<<" header is tolerated (alone on a
    line or prefixed to the first graph).  A malformed line raises when strict
    is set; otherwise it is reported to on_error (if given) with its 1-based
    line number and the stream continues.
    """
    for lineno, raw in enumerate(lines, start=1):
        s = raw.strip()
        if s.startswith(HEADER):
            s = s[len(HEADER):]
        if not s:
            continue
        try:
            yield parse_graph6(s, strict=strict)
        except Graph6Error as exc:
            err = Graph6Error(str(exc), line_number=lineno)
            if strict:
                raise err from None
            if on_error is not None:
                on_error(err)
