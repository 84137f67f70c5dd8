"""Set-theoretic analogue at q = 1: subsets of {1,...,N} under the cyclic shift.

Replace subspaces of F_q^N by subsets of {1,...,N}, multiplication by a
primitive element by the N-cycle shift (which preserves no proper nonempty
subset), sums by unions and the defect by |W intersect shift^-1(W)|.  Every
symbolic count specializes: evaluating the flag formula at q = 1 must give
these brute-force subset counts, and the splitting analogue is simply n.

Subsets are bitmasks (bit i-1 for element i); brute enumeration is capped
at N = 20 bits.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .errors import InvalidLabel, InvalidParameters
from .labels import validate_chain

__all__ = [
    "MAX_BITS",
    "cyclic_shift",
    "cyclic_unshift",
    "count_splitting_subsets",
    "count_pair_class_sets",
    "pair_class_set_formulas",
    "count_flag_subsets",
]

MAX_BITS = 20


def _guard_bits(n: int):
    if n > MAX_BITS:
        raise InvalidParameters(f"subset enumeration capped at N={MAX_BITS}, got {n}")
    if n < 1:
        raise InvalidParameters("N must be positive")


def cyclic_shift(mask: int, n: int) -> int:
    """Image of a subset under the cycle sending element i to i+1 (mod N)."""
    full = (1 << n) - 1
    return ((mask << 1) | (mask >> (n - 1))) & full


def cyclic_unshift(mask: int, n: int) -> int:
    full = (1 << n) - 1
    return ((mask >> 1) | (mask << (n - 1))) & full


def _set_defect(mask: int, n: int) -> int:
    return (mask & cyclic_unshift(mask, n)).bit_count()


def _masks_of_size(n: int, k: int):
    for positions in combinations(range(n), k):
        m = 0
        for p in positions:
            m |= 1 << p
        yield m


def count_splitting_subsets(m: int, n: int) -> int:
    """m-subsets of {1,...,mn} whose n shift-iterates cover everything."""
    if m < 1 or n < 1:
        raise InvalidParameters("need m, n >= 1")
    N = m * n
    _guard_bits(N)
    full = (1 << N) - 1
    total = 0
    for w in _masks_of_size(N, m):
        union = 0
        s = w
        for _ in range(n):
            union |= s
            s = cyclic_shift(s, N)
        if union == full:
            total += 1
    return total


def count_pair_class_sets(a: int, b: int, N: int) -> int:
    """|(a, b)| in the subset world: a-subsets with |W meet shift^-1 W| = b."""
    _guard_bits(N)
    if not ((a == b == 0) or N > a > b >= 0):
        raise InvalidParameters(f"need N > a > b >= 0 or a = b = 0, got ({a},{b}), N={N}")
    return sum(1 for w in _masks_of_size(N, a) if _set_defect(w, N) == b)


def pair_class_set_formulas(a: int, b: int, N: int) -> tuple[int, int]:
    """The two closed forms of |(a, b)| from the double-count arguments:

        N/(N-a) * C(N-a, a-b) * C(a-1, b)   (fixing a non-element first)
        N/a     * C(N-a-1, a-b-1) * C(a, b) (fixing an element first)

    Both are exact integers; the divisions are asserted.
    """
    if a == b == 0:
        return 1, 1
    if not N > a > b >= 0:
        raise InvalidParameters(f"need N > a > b >= 0 or a = b = 0, got ({a},{b}), N={N}")
    n1 = N * comb(N - a, a - b) * comb(a - 1, b)
    n2 = N * comb(N - a - 1, a - b - 1) * comb(a, b)
    if n1 % (N - a) or n2 % a:
        raise InvalidParameters(
            f"double-count formulas not integral at (a={a}, b={b}, N={N})"
        )
    return n1 // (N - a), n2 // a


def count_flag_subsets(label, N: int) -> int:
    """Chains (W_1,...,W_r) of subsets with |W_i| = a_i1, defect a_i2 and
    W_i containing W_{i+1} union shift(W_{i+1}), counted by brute force."""
    _guard_bits(N)
    key = validate_chain(label, N, strict=True)
    if not key:
        return 1
    a_r, b_r = key[-1]
    state: dict[int, int] = {}
    for w in _masks_of_size(N, a_r):
        if _set_defect(w, N) == b_r:
            state[w] = 1
    for a, b in reversed(key[:-1]):
        nxt: dict[int, int] = {}
        for w, mult in state.items():
            u = w | cyclic_shift(w, N)
            need = a - u.bit_count()
            if need < 0:
                continue
            rest = [i for i in range(N) if not (u >> i) & 1]
            for extra in combinations(rest, need):
                cand = u
                for p in extra:
                    cand |= 1 << p
                if _set_defect(cand, N) == b:
                    nxt[cand] = nxt.get(cand, 0) + mult
        state = nxt
        if not state:
            return 0
    return sum(state.values())
