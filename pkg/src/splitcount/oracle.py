"""Brute-force ground truth by exhaustive subspace enumeration.

Every count here is obtained by literally enumerating canonical subspaces
at a concrete field order and checking the defining conditions, so these
values are independent of the recursion and of the closed-form product
formulas they are used to verify.

Chains are counted innermost-first: the deepest subspace ranges over its
dimension/defect class, and each further level only ranges over subspaces
containing the forced sum W + s(W), which prunes enormously compared with
independent enumeration.  Ambient dimensions are capped by the
SPLITCOUNT_MAX_N environment variable (default 6) because the number of
subspaces grows like q^(N^2/4).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import DimensionMismatch, InvalidLabel, InvalidParameters, SingularOperator
from .fields import FieldSpec, ModulusPoly
from .labels import Label, validate_chain
from .linalg import (
    Mat,
    Subspace,
    companion_operator,
    image,
    intersect,
    preimage,
    subspace_sum,
    subspaces,
    subspaces_containing,
)
from .qarith import QPoly

__all__ = [
    "CountResult",
    "OperatorContext",
    "defect",
    "count_pair_class",
    "count_flag_tuple",
    "count_angle_tuple",
    "count_bracket",
    "count_splitting",
    "count_operator_splitting",
    "count_pair_class_for_operator",
    "count_flag_tuple_for_operator",
    "check_pair_class_bijection",
    "pair_class_members",
]

DEFAULT_MAX_N = 6


def _max_ambient() -> int:
    raw = os.environ.get("SPLITCOUNT_MAX_N", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_N
    except ValueError:
        return DEFAULT_MAX_N


def _guard_ambient(n: int):
    limit = _max_ambient()
    if n > limit:
        raise InvalidParameters(
            f"ambient dimension {n} exceeds SPLITCOUNT_MAX_N={limit}; "
            "raise the variable to enumerate anyway"
        )


@dataclass
class CountResult:
    """An exact count with its provenance, for cross-checking."""

    count: int | QPoly
    provenance: str  # "oracle" | "recursion" | "closed-form"
    parameters: dict


@dataclass
class BijectionReport:
    """Outcome of checking W -> W + s(W) between adjacent defect classes."""

    k: int
    domain_size: int
    codomain_size: int
    well_defined: bool
    injective: bool
    surjective: bool

    @property
    def ok(self) -> bool:
        return self.well_defined and self.injective and self.surjective


class OperatorContext:
    """An invertible-or-not operator on F_q^N with memoized subspace data.

    Caches per-dimension subspace streams, images, defect values and class
    member lists, which the chain counters hit heavily.
    """

    def __init__(self, op: Mat):
        if op.nrows != op.ncols:
            raise InvalidParameters("operator must be square")
        self.op = op
        self.field = op.field
        self.n = op.nrows
        try:
            self._inv = op.inverse()
        except SingularOperator:
            self._inv = None
        self._by_dim: dict[int, tuple[Subspace, ...]] = {}
        self._classes: dict[tuple[int, int], tuple[Subspace, ...]] = {}
        self._defect: dict[Subspace, int] = {}
        self._image: dict[Subspace, Subspace] = {}
        self._sum_image: dict[Subspace, Subspace] = {}

    def all_subspaces(self, k: int) -> tuple[Subspace, ...]:
        got = self._by_dim.get(k)
        if got is None:
            got = tuple(subspaces(self.field, self.n, k))
            self._by_dim[k] = got
        return got

    def image_of(self, w: Subspace) -> Subspace:
        got = self._image.get(w)
        if got is None:
            got = image(self.op, w)
            self._image[w] = got
        return got

    def sum_with_image(self, w: Subspace) -> Subspace:
        got = self._sum_image.get(w)
        if got is None:
            got = subspace_sum(w, self.image_of(w))
            self._sum_image[w] = got
        return got

    def defect_of(self, w: Subspace) -> int:
        got = self._defect.get(w)
        if got is None:
            pre = self.preimage_of(w)
            joint = subspace_sum(w, pre)
            got = w.dim + pre.dim - joint.dim
            self._defect[w] = got
        return got

    def preimage_of(self, w: Subspace) -> Subspace:
        if self._inv is not None:
            return image(self._inv, w)
        return preimage(self.op, w)

    def class_members(self, a: int, b: int) -> tuple[Subspace, ...]:
        got = self._classes.get((a, b))
        if got is None:
            got = tuple(w for w in self.all_subspaces(a) if self.defect_of(w) == b)
            self._classes[(a, b)] = got
        return got


_CONTEXTS: dict[tuple, OperatorContext] = {}


def _context_for(op: Mat) -> OperatorContext:
    key = (op.field, op.nrows, op.data)
    ctx = _CONTEXTS.get(key)
    if ctx is None:
        ctx = OperatorContext(op)
        _CONTEXTS[key] = ctx
    return ctx


def _sigma_context(field: FieldSpec, f: ModulusPoly) -> OperatorContext:
    if f.field != field:
        raise InvalidParameters("modulus does not belong to the given field")
    return _context_for(companion_operator(f))


def defect(w: Subspace, m: Mat) -> int:
    """dim(W intersected with the preimage of W under M)."""
    if m.ncols != w.ambient:
        raise DimensionMismatch("operator and subspace ambient dimensions differ")
    return intersect(w, preimage(m, w)).dim


def _validate_pair(a: int, b: int, N: int, strict: bool = True):
    ok = (a == b == 0) or (N > a > b >= 0) or (not strict and N > a >= b >= 0)
    if not ok:
        raise InvalidLabel(f"({a},{b}) is not a valid class label against N={N}")


def pair_class_members(field: FieldSpec, f: ModulusPoly, a: int, b: int):
    """The actual members of the class (a, b), as canonical subspaces."""
    _guard_ambient(f.degree)
    _validate_pair(a, b, f.degree)
    return _sigma_context(field, f).class_members(a, b)


def count_pair_class(field: FieldSpec, f: ModulusPoly, a: int, b: int) -> CountResult:
    """|(a, b)|: a-dimensional subspaces with defect b, counted directly."""
    _guard_ambient(f.degree)
    _validate_pair(a, b, f.degree)
    n = len(_sigma_context(field, f).class_members(a, b))
    return CountResult(n, "oracle", {"q": field.q, "N": f.degree, "a": a, "b": b})


def _count_flag(ctx: OperatorContext, key: Label) -> int:
    if not key:
        return 1
    a_r, b_r = key[-1]
    state: dict[Subspace, int] = {}
    for w in ctx.class_members(a_r, b_r):
        state[w] = 1
    for a, b in reversed(key[:-1]):
        nxt: dict[Subspace, int] = {}
        for w, mult in state.items():
            u = ctx.sum_with_image(w)
            if u.dim > a:
                continue
            for cand in subspaces_containing(u, a):
                if ctx.defect_of(cand) == b:
                    nxt[cand] = nxt.get(cand, 0) + mult
        state = nxt
        if not state:
            return 0
    return sum(state.values())


def count_flag_tuple(field: FieldSpec, f: ModulusPoly, label) -> CountResult:
    """|[(a11,a12),...]| for multiplication by the residue of x mod f."""
    _guard_ambient(f.degree)
    key = validate_chain(label, f.degree, strict=True)
    n = _count_flag(_sigma_context(field, f), key)
    return CountResult(
        n, "oracle", {"q": field.q, "N": f.degree, "label": key}
    )


def count_flag_tuple_for_operator(op: Mat, label) -> CountResult:
    """|[(a11,a12),...]| for an arbitrary invertible operator."""
    _guard_ambient(op.nrows)
    if not op.is_invertible():
        raise SingularOperator("flag counting requires an invertible operator")
    key = validate_chain(label, op.nrows, strict=False)
    n = _count_flag(_context_for(op), key)
    return CountResult(n, "oracle", {"q": op.field.q, "N": op.nrows, "label": key})


def count_pair_class_for_operator(op: Mat, a: int, b: int) -> CountResult:
    """|(a, b)| for an arbitrary invertible operator (defect may equal dim)."""
    _guard_ambient(op.nrows)
    if not op.is_invertible():
        raise SingularOperator("class counting requires an invertible operator")
    _validate_pair(a, b, op.nrows, strict=False)
    n = len(_context_for(op).class_members(a, b))
    return CountResult(n, "oracle", {"q": op.field.q, "N": op.nrows, "a": a, "b": b})


def _count_angle(ctx: OperatorContext, labels: Label) -> int:
    def outer_step(inner_state: dict[Subspace, int], a1: int) -> dict[Subspace, int]:
        out: dict[Subspace, int] = {}
        for w2, mult in inner_state.items():
            u = ctx.sum_with_image(w2)
            if u.dim > a1:
                continue
            for w1 in subspaces_containing(u, a1):
                out[w1] = out.get(w1, 0) + mult
        return out

    if not labels:
        return 1
    a1, a2 = labels[-1]
    state = outer_step({w: 1 for w in ctx.all_subspaces(a2)}, a1)
    for a1, a2 in reversed(labels[:-1]):
        mid: dict[Subspace, int] = {}
        for w, mult in state.items():
            if w.dim > a2:
                continue
            for w2 in subspaces_containing(w, a2):
                mid[w2] = mid.get(w2, 0) + mult
        state = outer_step(mid, a1)
        if not state:
            return 0
    return sum(state.values())


def count_angle_tuple(field: FieldSpec, f: ModulusPoly, labels) -> CountResult:
    """|<[a11,a12],...,[ar1,ar2]>|: chains of containment-linked pairs with
    dimension constraints only (defects unconstrained)."""
    _guard_ambient(f.degree)
    labels = tuple((int(a), int(b)) for a, b in labels)
    for a, b in labels:
        if not (0 <= b <= f.degree and 0 <= a <= f.degree):
            raise InvalidLabel(f"dimension pair ({a},{b}) out of range for N={f.degree}")
    n = _count_angle(_sigma_context(field, f), labels)
    return CountResult(n, "oracle", {"q": field.q, "N": f.degree, "labels": labels})


def count_bracket(field: FieldSpec, f: ModulusPoly, first, second) -> CountResult:
    """|[A, B]| where each of A, B is a dimension (int) or a class (a, b).

    Counts pairs (W1, W2) with W1 containing W2 + s(W2) and each W_i in its
    dimension or class constraint, by direct enumeration.
    """
    _guard_ambient(f.degree)
    ctx = _sigma_context(field, f)

    def members(spec):
        if isinstance(spec, int):
            return ctx.all_subspaces(spec)
        a, b = spec
        _validate_pair(a, b, f.degree)
        return ctx.class_members(a, b)

    def dim_of(spec):
        return spec if isinstance(spec, int) else spec[0]

    total = 0
    a1 = dim_of(first)
    first_is_class = not isinstance(first, int)
    for w2 in members(second):
        u = ctx.sum_with_image(w2)
        if u.dim > a1:
            continue
        for w1 in subspaces_containing(u, a1):
            if not first_is_class or ctx.defect_of(w1) == first[1]:
                total += 1
    return CountResult(
        total, "oracle", {"q": field.q, "N": f.degree, "first": first, "second": second}
    )


def _count_splitting(ctx: OperatorContext, m: int, n: int) -> int:
    total = 0
    for w in ctx.all_subspaces(m):
        s = w
        p = w
        ok = True
        for _ in range(n - 1):
            p = ctx.image_of(p)
            ns = subspace_sum(s, p)
            if ns.dim != s.dim + m:
                ok = False
                break
            s = ns
        if ok:
            total += 1
    return total


def count_splitting(field: FieldSpec, f: ModulusPoly, m: int, n: int) -> CountResult:
    """Number of m-dimensional W whose n iterates under sigma sum directly.

    With N = deg f = mn this is exactly the splitting-subspace count; for
    N > mn it counts W with dim(W + sW + ... + s^(n-1)W) = mn as a direct
    sum, matching the chain-label family this cross-checks against.
    """
    N = f.degree
    if m < 1 or n < 1 or N < m * n:
        raise InvalidParameters(f"need deg f >= m*n >= 1, got N={N}, m={m}, n={n}")
    _guard_ambient(N)
    total = _count_splitting(_sigma_context(field, f), m, n)
    return CountResult(total, "oracle", {"q": field.q, "N": N, "m": m, "n": n})


def count_operator_splitting(op: Mat, m: int, n: int) -> CountResult:
    """Splitting count for an arbitrary invertible operator in place of sigma."""
    if op.nrows != op.ncols:
        raise InvalidParameters("operator must be square")
    if not op.is_invertible():
        raise SingularOperator("splitting requires an invertible operator")
    N = op.nrows
    if m < 1 or n < 1 or N < m * n:
        raise InvalidParameters(f"need N >= m*n >= 1, got N={N}, m={m}, n={n}")
    _guard_ambient(N)
    total = _count_splitting(_context_for(op), m, n)
    return CountResult(total, "oracle", {"q": op.field.q, "N": N, "m": m, "n": n})


def check_pair_class_bijection(field: FieldSpec, f: ModulusPoly, k: int) -> BijectionReport:
    """Verify W -> W + s(W) is a bijection (k-1,k-2) -> (k,k-1)."""
    N = f.degree
    if not 2 <= k <= N - 1:
        raise InvalidParameters(f"need 2 <= k <= N-1, got k={k}, N={N}")
    _guard_ambient(N)
    ctx = _sigma_context(field, f)
    domain = ctx.class_members(k - 1, k - 2)
    codomain = set(ctx.class_members(k, k - 1))
    images = [ctx.sum_with_image(w) for w in domain]
    well_defined = all(im in codomain for im in images)
    injective = len(set(images)) == len(images)
    surjective = set(images) == codomain
    return BijectionReport(
        k=k,
        domain_size=len(domain),
        codomain_size=len(codomain),
        well_defined=well_defined,
        injective=injective,
        surjective=surjective,
    )
