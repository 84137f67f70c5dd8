"""Memoized symbolic evaluation of chain-label counts from the base case.

The engine rests on a double count of the containment-linked pair chains
<[a11,a12],...,[ar1,ar2]>.  Refining each W_{i,1} by its defect k_i gives
one expansion (the "outer" sum, index box D); refining each W_{i,2} by its
defect j_i gives another (the "inner" sum, index box C):

    sum over D of |[(a11,k1),...,(ar1,kr)]| * prod gauss(ki - a_{i+1,1},
                                                         a_{i,2} - a_{i+1,1})
  = sum over C of |[(a12,j1),...,(ar2,jr)]| * prod gauss(a_{i-1,2} - (2 a_{i,2} - ji),
                                                         a_{i,1} - (2 a_{i,2} - ji))

with a_{0,2} = N and a_{r+1,*} = 0.  The outer sum contains the target
label itself (at k = (a_{1,2},...,a_{r,2}), with unit coefficient), and
every other term on either side is strictly smaller in the tuple order, so
solving for the target yields a well-founded recursion grounded at the
empty label, whose count is 1.

For the operator sigma of a degree-N field extension no subspace is
invariant, so defects are strictly below dimensions and the index boxes
run to a_{i,2}-1 and a_{i,1}-1.  For an arbitrary invertible operator,
invariant subspaces make defect = dimension possible: the boxes extend by
one, and fully degenerate labels ((a1,a1),...) reproduce themselves under
both expansions, so their counts must be supplied as base cases
(count_recursive_with_bases).
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Mapping

from .errors import MissingBaseCase
from .labels import (
    Label,
    format_label,
    is_degenerate,
    normalize,
    precedes,
    satisfies_nonempty,
    validate_chain,
)
from .qarith import ONE, QPoly, ZERO, gaussian_binomial

__all__ = [
    "normalize",
    "precedes",
    "count_recursive",
    "count_recursive_with_bases",
    "recursion_trace",
    "inner_index_ranges",
    "outer_index_ranges",
    "inner_term",
    "outer_term",
]


def inner_index_ranges(key: Label, N: int, general: bool = False) -> list[range]:
    """Per-position ranges of the inner index box (defects of the W_{i,2})."""
    out = []
    r = len(key)
    for i, (a, b) in enumerate(key):
        next_b = key[i + 1][1] if i + 1 < r else 0
        lo = max(next_b, 2 * b - a)
        hi = b if general else max(b - 1, 0)
        out.append(range(lo, hi + 1))
    return out


def outer_index_ranges(key: Label, general: bool = False) -> list[range]:
    """Per-position ranges of the outer index box (defects of the W_{i,1})."""
    return [range(b, (a if general else a - 1) + 1) for a, b in key]


def inner_term(key: Label, N: int, js) -> tuple[Label, QPoly]:
    """Sub-label and Gaussian coefficient of one inner-expansion term."""
    factor = ONE
    for i, (a, b) in enumerate(key):
        prev_b = key[i - 1][1] if i > 0 else N
        t = 2 * b - js[i]
        factor = factor * gaussian_binomial(prev_b - t, a - t)
    sub = normalize(tuple((key[i][1], js[i]) for i in range(len(key))))
    return sub, factor


def outer_term(key: Label, ks) -> tuple[Label, QPoly]:
    """Sub-label and Gaussian coefficient of one outer-expansion term."""
    factor = ONE
    r = len(key)
    for i, (a, b) in enumerate(key):
        next_a = key[i + 1][0] if i + 1 < r else 0
        factor = factor * gaussian_binomial(ks[i] - next_a, b - next_a)
    sub = normalize(tuple((key[i][0], ks[i]) for i in range(len(key))))
    return sub, factor


def _engine(
    key: Label,
    N: int,
    memo: dict[Label, QPoly],
    general: bool,
    table: Mapping[Label, QPoly] | None,
    missing_base: str,
) -> QPoly:
    if table is not None:
        hit = table.get(key)
        if hit is not None:
            return hit
    if not key:
        return ONE
    if general and is_degenerate(key):
        if missing_base == "error":
            raise MissingBaseCase(
                f"no base value for self-reproducing label {format_label(key)}"
            )
        return ZERO
    cached = memo.get(key)
    if cached is not None:
        return cached
    total = ZERO
    for js in product(*inner_index_ranges(key, N, general)):
        sub, factor = inner_term(key, N, js)
        total = total + _engine(sub, N, memo, general, table, missing_base) * factor
    skip = tuple(b for _, b in key)
    for ks in product(*outer_index_ranges(key, general)):
        if ks == skip:
            continue
        sub, factor = outer_term(key, ks)
        total = total - _engine(sub, N, memo, general, table, missing_base) * factor
    memo[key] = total
    return total


_MEMO: dict[int, dict[Label, QPoly]] = {}


def count_recursive(label, N: int) -> QPoly:
    """|[(a11,a12),...]| as a polynomial in q, by the two-way expansion.

    The label must be a strictly descending chain below N (InvalidLabel
    otherwise); chains that violate the nonemptiness dimension condition
    name empty sets and return 0.  Results are memoized per (label, N) for
    the lifetime of the process.
    """
    key = validate_chain(label, N, strict=True)
    if not satisfies_nonempty(key, N):
        return ZERO
    memo = _MEMO.setdefault(N, {})
    return _engine(key, N, memo, general=False, table=None, missing_base="zero")


def count_recursive_with_bases(
    label,
    N: int,
    base_table: Mapping | None = None,
    missing_base: str = "zero",
) -> QPoly:
    """The recursion for an arbitrary invertible operator.

    The index boxes include defect = dimension, and base_table supplies the
    counts of fully degenerate labels [(a1,a1),...], which both expansions
    reproduce verbatim and which therefore cannot be derived.  Entries are
    consulted (after normalization) before any recursion, so measured
    values for non-degenerate labels short-circuit too.  A reachable
    degenerate label absent from the table counts as 0 -- the exact value
    whenever the operator has no invariant subspaces, which is why an
    empty table reproduces count_recursive on such operators -- unless
    missing_base="error", in which case MissingBaseCase is raised.
    """
    if missing_base not in ("zero", "error"):
        raise ValueError("missing_base must be 'zero' or 'error'")
    key = validate_chain(label, N, strict=False)
    if not satisfies_nonempty(key, N):
        return ZERO
    table: dict[Label, QPoly] = {}
    for k, v in (base_table or {}).items():
        table[normalize(k)] = v if isinstance(v, QPoly) else QPoly((v,))
    memo: dict[Label, QPoly] = {}
    return _engine(key, N, memo, general=True, table=table, missing_base=missing_base)


def _children(key: Label, N: int, general: bool) -> Iterator[Label]:
    for js in product(*inner_index_ranges(key, N, general)):
        yield inner_term(key, N, js)[0]
    skip = tuple(b for _, b in key)
    for ks in product(*outer_index_ranges(key, general)):
        if ks != skip:
            yield outer_term(key, ks)[0]


def recursion_trace(label, N: int) -> list[Label]:
    """Every label the recursion visits below the given one, in first-visit
    depth-first order.  Each entry strictly precedes its parent in the
    tuple order, which is the termination argument made checkable."""
    key = validate_chain(label, N, strict=True)
    if not satisfies_nonempty(key, N):
        return []
    seen: set[Label] = set()
    order: list[Label] = []

    def visit(k: Label):
        if not k:
            return
        for sub in _children(k, N, general=False):
            if sub not in seen:
                seen.add(sub)
                order.append(sub)
                visit(sub)

    visit(key)
    return order
