import pytest
from hypothesis import given, settings, strategies as st

from mgrr.codec import CodecError, decode, decode_d6, decode_g6, encode, encode_d6, encode_g6
from mgrr.digraph import Digraph


def test_hand_encoded_values():
    assert encode_g6(Digraph.empty(1)) == "@"
    assert encode_g6(Digraph.complete(2)) == "A_"
    assert encode_g6(Digraph.complete(3)) == "Bw"
    p3 = Digraph.from_edges(3, [(0, 1), (1, 2)])
    assert encode_g6(p3) == "Bg"


def test_directed_gets_d6():
    g = Digraph.from_arcs(2, [(0, 1)])
    s = encode(g)
    assert s.startswith("&")
    assert decode(s) == g


def test_headers_accepted_never_emitted():
    g = Digraph.complete(3)
    assert decode(">>graph6<<Bw") == g
    assert ">>" not in encode(g)
    d = Digraph.from_arcs(2, [(0, 1)])
    assert decode(">>digraph6<<" + encode_d6(d)) == d


@given(st.data())
@settings(max_examples=300)
def test_round_trip_random(data):
    n = data.draw(st.integers(1, 30))
    directed = data.draw(st.booleans())
    pairs = [(i, j) for i in range(n) for j in range(n) if (i != j if directed else i < j)]
    sample = data.draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    g = Digraph.from_arcs(n, sample) if directed else Digraph.from_edges(n, sample)
    assert decode(encode(g)) == g


def test_large_n_three_byte_form():
    g = Digraph.empty(100)
    s = encode_g6(g)
    assert s.startswith("~")
    assert decode_g6(s) == g


def test_malformed_inputs():
    with pytest.raises(CodecError):
        decode_g6("")
    with pytest.raises(CodecError):
        decode_g6("B")  # length mismatch for n=3
    with pytest.raises(CodecError):
        decode_g6("A" + chr(200))  # outside alphabet
    with pytest.raises(CodecError):
        decode_d6("AW")  # missing '&'
    # nonzero padding: n=2 needs 1 bit; set a padding bit
    with pytest.raises(CodecError):
        decode_g6("A" + chr(63 + 1))
    # loop bit in digraph6: n=1 single bit set
    with pytest.raises(CodecError):
        decode_d6("&@" + chr(63 + 32))


def test_encode_g6_rejects_directed():
    with pytest.raises(CodecError):
        encode_g6(Digraph.from_arcs(2, [(0, 1)]))
