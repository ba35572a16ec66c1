"""Bit-exact graph6 / digraph6 encoding of Digraph objects.

graph6 packs the upper triangle of a symmetric adjacency matrix column by
column; digraph6 is '&' followed by the full matrix row by row.  The optional
``>>graph6<<`` / ``>>digraph6<<`` headers are accepted on input and never
emitted.  Padding bits must be zero.
"""

from __future__ import annotations

from .digraph import Digraph, MAX_VERTICES

G6_HEADER = ">>graph6<<"
D6_HEADER = ">>digraph6<<"


class CodecError(ValueError):
    pass


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise CodecError(f"vertex count {n} too large to encode")


def _decode_n(data: str) -> tuple[int, str]:
    if not data:
        raise CodecError("empty encoding")
    c = ord(data[0]) - 63
    if c < 0 or c > 63:
        raise CodecError(f"byte {data[0]!r} outside graph6 alphabet")
    if c < 63:
        return c, data[1:]
    if len(data) >= 4 and data[1] != "~":
        n = 0
        for ch in data[1:4]:
            v = ord(ch) - 63
            if v < 0 or v > 63:
                raise CodecError(f"byte {ch!r} outside graph6 alphabet")
            n = n << 6 | v
        return n, data[4:]
    raise CodecError("unsupported or truncated vertex-count field")


def _pack_bits(bits: list[int]) -> str:
    out = []
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def _unpack_bits(data: str, count: int) -> list[int]:
    need = (count + 5) // 6
    if len(data) != need:
        raise CodecError(f"expected {need} data bytes, found {len(data)}")
    bits: list[int] = []
    for ch in data:
        v = ord(ch) - 63
        if v < 0 or v > 63:
            raise CodecError(f"byte {ch!r} outside graph6 alphabet")
        bits.extend((v >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    if any(bits[count:]):
        raise CodecError("nonzero padding bits")
    return bits[:count]


def encode_g6(g: Digraph) -> str:
    """graph6 string of a symmetric Digraph."""
    if not g.symmetric:
        raise CodecError("graph6 requires a symmetric relation; use digraph6")
    bits = []
    for j in range(1, g.n):
        col = g.cols[j]
        bits.extend((col >> i) & 1 for i in range(j))
    return _encode_n(g.n) + _pack_bits(bits)


def encode_d6(g: Digraph) -> str:
    """digraph6 string (works for any Digraph, symmetric or not)."""
    bits = []
    for u in range(g.n):
        row = g.rows[u]
        bits.extend((row >> v) & 1 for v in range(g.n))
    return "&" + _encode_n(g.n) + _pack_bits(bits)


def encode(g: Digraph) -> str:
    """graph6 when symmetric, digraph6 otherwise."""
    return encode_g6(g) if g.symmetric else encode_d6(g)


def decode_g6(text: str) -> Digraph:
    s = text.strip()
    if s.startswith(G6_HEADER):
        s = s[len(G6_HEADER) :]
    n, rest = _decode_n(s)
    if n < 1:
        raise CodecError("graph6 with empty vertex set")
    if n > MAX_VERTICES:
        raise CodecError(f"vertex count {n} exceeds cap {MAX_VERTICES}")
    bits = _unpack_bits(rest, n * (n - 1) // 2)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Digraph(n, rows)


def decode_d6(text: str) -> Digraph:
    s = text.strip()
    if s.startswith(D6_HEADER):
        s = s[len(D6_HEADER) :]
    if not s.startswith("&"):
        raise CodecError("digraph6 strings start with '&'")
    n, rest = _decode_n(s[1:])
    if n < 1:
        raise CodecError("digraph6 with empty vertex set")
    if n > MAX_VERTICES:
        raise CodecError(f"vertex count {n} exceeds cap {MAX_VERTICES}")
    bits = _unpack_bits(rest, n * n)
    rows = [0] * n
    k = 0
    for u in range(n):
        for v in range(n):
            if bits[k]:
                if u == v:
                    raise CodecError(f"loop bit set at vertex {u}")
                rows[u] |= 1 << v
            k += 1
    return Digraph(n, rows)


def decode(text: str) -> Digraph:
    """Auto-detect graph6 vs digraph6 from the header or leading '&'."""
    s = text.strip()
    if s.startswith(D6_HEADER) or s.startswith("&"):
        return decode_d6(s)
    if s.startswith(G6_HEADER):
        return decode_g6(s)
    return decode_g6(s)


def decode_stream(text: str) -> list[Digraph]:
    """Decode a newline-separated stream of certificates."""
    return [decode(line) for line in text.splitlines() if line.strip()]
