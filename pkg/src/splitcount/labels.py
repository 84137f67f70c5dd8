"""Dimension/defect tuple labels: ordering, validity, parsing, sweeps.

A label [(a_{1,1},a_{1,2}),...,(a_{r,1},a_{r,2})] names the set of subspace
chains (W_1,...,W_r) with dim(W_i) = a_{i,1}, defect(W_i) = a_{i,2} and
W_i containing W_{i+1} + s(W_{i+1}) for the acting operator s.  Labels are
plain tuples of int pairs throughout the package.

Two validity shapes appear:
  * strict -- N > a11 > a12 >= a21 > a22 >= ... >= 0, the shape realizable
    when the operator preserves no proper subspace (defect < dimension);
  * weak   -- within-pair equality a_{i,1} = a_{i,2} allowed, the shape for
    arbitrary invertible operators, where invariant subspaces give
    defect = dimension.

Trailing (0,0) pairs never change a count and are stripped by normalize().
The nonemptiness condition a_{i-1,1} >= 2 a_{i,1} - a_{i,2} is tracked
separately: labels failing it are well formed but name empty sets.
"""

from __future__ import annotations

from typing import Iterator

from .errors import InvalidLabel

Label = tuple[tuple[int, int], ...]

__all__ = [
    "Label",
    "normalize",
    "label_key",
    "precedes",
    "validate_chain",
    "is_valid_chain",
    "satisfies_nonempty",
    "is_degenerate",
    "splitting_label",
    "parse_label",
    "format_label",
    "iter_pair_classes",
    "iter_chain_labels",
    "iter_degenerate_chains",
]


def normalize(label) -> Label:
    """Strip trailing (0,0) pairs; the empty tuple stands for [(0,0)]."""
    pairs = []
    for pair in label:
        a, b = pair
        if not (isinstance(a, int) and isinstance(b, int)):
            raise InvalidLabel(f"label entries must be integer pairs, got {pair!r}")
        pairs.append((a, b))
    while pairs and pairs[-1] == (0, 0):
        pairs.pop()
    return tuple(pairs)


def label_key(label) -> tuple:
    """Sort key realizing the tuple order.

    Pairs compare by (a, -b): larger first coordinate wins, ties broken by
    the smaller second coordinate.  Tuples compare lexicographically pair
    by pair, and any proper extension is strictly greater.
    """
    return tuple((a, -b) for a, b in normalize(label))


def precedes(x, y) -> bool:
    """True when x comes strictly before y in the tuple order."""
    return label_key(x) < label_key(y)


def is_valid_chain(label, N: int, strict: bool = True) -> bool:
    key = normalize(label)
    if N < 1:
        return False
    prev = N
    first = True
    for a, b in key:
        if first:
            if not N > a:
                return False
            first = False
        elif not prev >= a:
            return False
        if strict:
            if not a > b >= 0:
                return False
        else:
            if not a >= b >= 0 or a == 0:
                return False
        prev = b
    return True


def validate_chain(label, N: int, strict: bool = True) -> Label:
    """Normalize and validate; raises InvalidLabel on a shape violation."""
    key = normalize(label)
    if not is_valid_chain(key, N, strict=strict):
        kind = "strictly descending" if strict else "weakly descending"
        raise InvalidLabel(f"{format_label(key)} is not a {kind} chain below N={N}")
    return key


def satisfies_nonempty(label, N: int) -> bool:
    """The dimension constraint a_{i-1,1} >= 2 a_{i,1} - a_{i,2} (a_{0,1}=N).

    A chain violating it names an empty set: W_{i-1} cannot contain the
    (2 a_{i,1} - a_{i,2})-dimensional space W_i + s(W_i).
    """
    key = normalize(label)
    prev = N
    for a, b in key:
        if prev < 2 * a - b:
            return False
        prev = a
    return True


def is_degenerate(label) -> bool:
    """True when every (non-trailing-zero) pair has equal coordinates.

    Such labels name chains of invariant subspaces; the counting recursion
    reproduces them verbatim, so they act as base cases.
    """
    return all(a == b for a, b in normalize(label))


def splitting_label(m: int, n: int) -> Label:
    """The chain [((n-1)m,(n-2)m), ..., (2m,m), (m,0)] counted by splitting
    subspaces; empty for n = 1."""
    return tuple(((n - i) * m, (n - i - 1) * m) for i in range(1, n))


def parse_label(text: str) -> Label:
    """Parse "(3,1),(1,0)" (whitespace ignored) into a label tuple."""
    s = "".join(text.split())
    if not s:
        return ()
    if not (s.startswith("(") and s.endswith(")")):
        raise InvalidLabel(f"cannot parse label {text!r}")
    pairs = []
    for chunk in s[1:-1].split("),("):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise InvalidLabel(f"cannot parse label {text!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise InvalidLabel(f"cannot parse label {text!r}") from exc
    return tuple(pairs)


def format_label(label) -> str:
    key = tuple((a, b) for a, b in label)
    if not key:
        return "(0,0)"
    return ",".join(f"({a},{b})" for a, b in key)


def iter_pair_classes(N: int, strict: bool = True) -> Iterator[tuple[int, int]]:
    """All valid (a, b) pairs against ambient N, (0,0) first."""
    yield (0, 0)
    for a in range(1, N):
        for b in range(0, a if strict else a + 1):
            yield (a, b)


def iter_chain_labels(N: int, max_r: int | None = None, strict: bool = True) -> Iterator[Label]:
    """All normalized valid chain labels against ambient N, shortest first
    within each branch; starts with the empty label.

    Strict chains have strictly decreasing dimensions, so the family is
    finite without a length cap.  Weak chains may repeat (an invariant
    subspace can appear any number of times), so max_r is required there.
    """
    if not strict and max_r is None:
        raise ValueError("weak chains are unbounded; pass max_r")

    def extend(prefix: Label, bound: int) -> Iterator[Label]:
        for a in range(1, bound + 1):
            for b in range(0, a if strict else a + 1):
                chain = prefix + ((a, b),)
                yield chain
                if (max_r is None or len(chain) < max_r) and b >= 1:
                    yield from extend(chain, b)

    yield ()
    yield from extend((), N - 1)


def iter_degenerate_chains(N: int, max_r: int) -> Iterator[Label]:
    """All nonempty chains ((a1,a1),...,(ar,ar)) with N > a1 >= ... >= ar >= 1."""

    def extend(prefix: Label, bound: int) -> Iterator[Label]:
        for a in range(1, bound + 1):
            chain = prefix + ((a, a),)
            yield chain
            if len(chain) < max_r:
                yield from extend(chain, a)

    yield from extend((), N - 1)
