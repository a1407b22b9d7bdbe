from collections.abc import Iterable, Iterator
from icontract import require, ensure

from model.graph import MAX_ORDER, Graph, GraphError

HEADER = ">>graph6<<"
_BIAS = 63


class Graph6Error(ValueError):
    """
    Raised for malformed graph6 text.

    Attributes:
        offset (int): Byte offset inside the graph6 string where decoding failed.
        reason (str): Message without the position suffix.
        line_number (int | None): 1-based line in the source stream, when known.
    """

    def __init__(self, message: str, offset: int, line_number: int | None = None):
        self.reason = message
        self.offset = offset
        self.line_number = line_number
        where = f"byte {offset}" if line_number is None else f"line {line_number}, byte {offset}"
        super().__init__(f"{message} ({where})")


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    """Upper-triangle pairs in graph6 column order: (0,1),(0,2),(1,2),(0,3),..."""
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(line: str) -> Graph:
    """
    Decodes one graph6 string.

    A leading ">>graph6<<" header and surrounding whitespace are ignored.

    Args:
        line (str): graph6 text for a graph with at most 62 vertices.

    Returns:
        Graph: The decoded graph.

    Raises:
        Graph6Error: On a bad size byte, a character outside [63, 126], a
            truncated or overlong bit stream, or nonzero padding bits.
    """
    text = line.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise Graph6Error("empty graph6 string", 0)

    for offset, char in enumerate(text):
        if not _BIAS <= ord(char) <= 126:
            raise Graph6Error(f"character {char!r} is outside the graph6 range", offset)

    n = ord(text[0]) - _BIAS
    if n > MAX_ORDER:
        raise Graph6Error(f"size byte encodes an extended order; only n <= {MAX_ORDER} is supported", 0)
    if n == 0:
        raise Graph6Error("graph6 string describes a graph with no vertices", 0)

    bit_count = n * (n - 1) // 2
    expected = 1 + (bit_count + 5) // 6
    if len(text) < expected:
        raise Graph6Error(f"bit stream truncated: expected {expected} bytes, got {len(text)}", len(text))
    if len(text) > expected:
        raise Graph6Error(f"unexpected trailing data after {expected} bytes", expected)

    rows = [0] * n
    for index, (i, j) in enumerate(_pairs(n)):
        value = ord(text[1 + index // 6]) - _BIAS
        if (value >> (5 - index % 6)) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i

    padding = (6 - bit_count % 6) % 6
    if padding:
        last = ord(text[-1]) - _BIAS
        if last & ((1 << padding) - 1):
            raise Graph6Error("nonzero padding bits", len(text) - 1)

    return Graph(n, rows)


@require(lambda g: 1 <= g.n <= MAX_ORDER, "graph6 encoding supports 1 <= n <= 62", error=GraphError)
@ensure(lambda g, result: parse_graph6(result) == g, "encoding must round-trip")
def to_graph6(g: Graph) -> str:
    """
    Encodes a graph as graph6 text without header or newline.

    Args:
        g (Graph): Graph with 1..62 vertices.

    Returns:
        str: The graph6 string.
    """
    chars = [chr(g.n + _BIAS)]
    value = 0
    used = 0
    for i, j in _pairs(g.n):
        value = (value << 1) | ((g.rows[i] >> j) & 1)
        used += 1
        if used == 6:
            chars.append(chr(value + _BIAS))
            value = used = 0
    if used:
        chars.append(chr((value << (6 - used)) + _BIAS))
    return "".join(chars)


def read_graph6(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph]]:
    """
    Streams graphs from graph6 lines, one graph per line.

    Blank lines are skipped and ">>graph6<<" headers stripped.

    Args:
        lines (Iterable[str]): Source lines, e.g. an open text file.

    Yields:
        tuple[int, str, Graph]: 1-based line number, the stripped graph6 text, and the graph.

    Raises:
        Graph6Error: With line_number set, on the first malformed line.
    """
    for line_number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if text.startswith(HEADER):
            text = text[len(HEADER):]
        if not text:
            continue
        try:
            yield line_number, text, parse_graph6(text)
        except Graph6Error as e:
            raise Graph6Error(e.reason, e.offset, line_number) from e
