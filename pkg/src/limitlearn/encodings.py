"""Ground-level codecs: Cantor pairing, canonical finite sets, sequences.

Everything downstream speaks naturals. Pairing is the classic Cantor diagonal,
finite sets are bit vectors (element i present iff bit i of the index is set),
and sequences are plain tuples ordered length-first, then lexicographically.
Python ints are arbitrary precision, so none of these can overflow.
"""

from __future__ import annotations

from math import isqrt

Sequence = tuple[int, ...]

EMPTY: Sequence = ()


def _check_natural(value: int, name: str = "value") -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ValueError(f"{name} must be a natural number, got {value!r}")


def pair(x: int, y: int) -> int:
    """Cantor pairing (x+y)(x+y+1)/2 + y; strictly monotone in each argument."""
    _check_natural(x, "x")
    _check_natural(y, "y")
    s = x + y
    return s * (s + 1) // 2 + y


def unpair(z: int) -> tuple[int, int]:
    """Inverse of pair; exact via integer square root."""
    _check_natural(z, "z")
    w = (isqrt(8 * z + 1) - 1) // 2
    t = w * (w + 1) // 2
    y = z - t
    x = w - y
    return x, y


def finite_set_decode(index: int) -> frozenset[int]:
    """Canonical finite set for an index: element i present iff bit i is set."""
    _check_natural(index, "index")
    out = []
    i = 0
    n = index
    while n:
        if n & 1:
            out.append(i)
        n >>= 1
        i += 1
    return frozenset(out)


def finite_set_encode(elements: frozenset[int] | set[int]) -> int:
    """Canonical index of a finite set of naturals."""
    index = 0
    for x in elements:
        _check_natural(x, "element")
        index |= 1 << x
    return index


def content(seq: Sequence) -> frozenset[int]:
    """Set of values occurring in a sequence."""
    return frozenset(seq)


def seq_key(seq: Sequence) -> tuple[int, Sequence]:
    """Sort key realizing length-first, then lexicographic order."""
    return (len(seq), seq)


def seq_compare(a: Sequence, b: Sequence) -> int:
    """-1, 0, or 1 comparing sequences in length-lex order."""
    ka, kb = seq_key(a), seq_key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


def is_prefix(a: Sequence, b: Sequence) -> bool:
    """True iff a is an initial segment of b (every sequence extends itself)."""
    return len(a) <= len(b) and b[: len(a)] == a
