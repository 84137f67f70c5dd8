"""Named cross-verification suites bundling the package's invariants.

Each suite runs one family of independent-computation agreements at desk
scale and reports per-case pass/fail.  A failing case means two routes to
the same number disagree, which is a defect of the artifact, never
something to swallow: the CLI exits 2 on any failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import closedform, oracle, q1analog, recursion
from .fields import FieldSpec, find_irreducible
from .labels import (
    format_label,
    iter_chain_labels,
    iter_degenerate_chains,
    iter_pair_classes,
    splitting_label,
)
from .linalg import Mat, companion_operator
from .qarith import evaluate, gaussian_binomial, q_integer, q_power

__all__ = ["SuiteReport", "SUITE_NAMES", "run_suite", "general_operator_fixtures"]

# (q, m, n) triples exercised by the splitting-count reproduction.
SPLITTING_CASES = [
    (2, 1, 2),
    (2, 2, 2),
    (2, 1, 3),
    (2, 3, 2),
    (2, 2, 3),
    (3, 1, 2),
    (3, 2, 2),
]


@dataclass
class SuiteReport:
    name: str
    cases: list[tuple[str, bool]]

    @property
    def total(self) -> int:
        return len(self.cases)

    @property
    def failed(self) -> list[str]:
        return [label for label, ok in self.cases if not ok]

    @property
    def ok(self) -> bool:
        return not self.failed

    def summary(self) -> str:
        return f"suite={self.name} passed={self.total - len(self.failed)}/{self.total}"


def _suite_pascal(max_n: int = 12) -> SuiteReport:
    cases = []
    for n in range(0, max_n + 1):
        for k in range(0, n + 1):
            g = gaussian_binomial(n, k)
            ok = all(c >= 0 for c in g.coeffs)
            ok = ok and g == gaussian_binomial(n, n - k)
            ok = ok and evaluate(g, 1) == comb(n, k)
            if 1 <= k <= n:
                ok = ok and g == gaussian_binomial(n - 1, k - 1) + q_power(k) * gaussian_binomial(n - 1, k)
            cases.append((f"gauss({n},{k})", ok))
    return SuiteReport("pascal", cases)


def _suite_identities(max_a: int = 10) -> SuiteReport:
    cases = []
    for A in range(1, max_a + 1):
        for B in range(1, A + 1):
            for C in range(0, B):
                for D in range(B, A + 1):
                    rep = closedform.chu_vandermonde_first(A, B, C, D)
                    cases.append((f"first(A={A},B={B},C={C},D={D})", rep.equal))
                if B < A:
                    for D in range(C, B):
                        rep = closedform.chu_vandermonde_second(A, B, C, D)
                        cases.append((f"second(A={A},B={B},C={C},D={D})", rep.equal))
    return SuiteReport("identities", cases)


def _oracle_sweep(check, max_n: int, qs, max_r=None) -> list[tuple[str, bool]]:
    cases = []
    for q in qs:
        field = FieldSpec(q)
        for N in range(2, max_n + 1):
            f = find_irreducible(field, N)
            for label in iter_chain_labels(N, max_r=max_r):
                cases.append((f"q={q},N={N},{format_label(label)}", check(field, f, label)))
    return cases


def _suite_oracle_vs_closed(max_n: int = 4, qs=(2, 3), max_r=None) -> SuiteReport:
    def check(field, f, label):
        got = oracle.count_flag_tuple(field, f, label).count
        want = evaluate(closedform.flag_count_formula(label, f.degree), field.q)
        return got == want

    return SuiteReport("oracle-vs-closed", _oracle_sweep(check, max_n, qs, max_r))


def _suite_oracle_vs_recursion(max_n: int = 4, qs=(2, 3), max_r=None) -> SuiteReport:
    def check(field, f, label):
        got = oracle.count_flag_tuple(field, f, label).count
        want = evaluate(recursion.count_recursive(label, f.degree), field.q)
        return got == want

    return SuiteReport("oracle-vs-recursion", _oracle_sweep(check, max_n, qs, max_r))


def _suite_recursion_vs_closed(max_n: int = 8, max_r: int = 3) -> SuiteReport:
    cases = []
    for N in range(2, max_n + 1):
        for label in iter_chain_labels(N, max_r=max_r):
            ok = recursion.count_recursive(label, N) == closedform.flag_count_formula(label, N)
            cases.append((f"N={N},{format_label(label)}", ok))
    return SuiteReport("recursion-vs-closed", cases)


def _suite_expand(max_n: int = 5, qs=(2, 3)) -> SuiteReport:
    cases = []
    for q in qs:
        field = FieldSpec(q)
        for N in range(2, max_n + 1):
            f = find_irreducible(field, N)
            for a, b in iter_pair_classes(N):
                if a == 0:
                    continue
                whole = oracle.count_angle_tuple(field, f, [(a, b)]).count
                by_first = sum(
                    oracle.count_bracket(field, f, (a, i), b).count
                    for i in range(b, max(a - 1, 0) + 1)
                )
                by_second = sum(
                    oracle.count_bracket(field, f, a, (b, j)).count
                    for j in range(0, max(b - 1, 0) + 1)
                )
                ok = whole == by_first == by_second
                cases.append((f"q={q},N={N},[{a},{b}]", ok))
    return SuiteReport("expand", cases)


def _suite_lr(max_n: int = 7, max_r: int = 2) -> SuiteReport:
    cases = []
    for N in range(2, max_n + 1):
        for label in iter_chain_labels(N, max_r=max_r):
            rep = closedform.verify_expansions(label, N)
            cases.append((f"N={N},{format_label(label)}", rep.equal))
    return SuiteReport("lr", cases)


def _suite_sigma_independence(cases_spec=SPLITTING_CASES, moduli: int = 2) -> SuiteReport:
    cases = []
    for q, m, n in cases_spec:
        field = FieldSpec(q)
        N = m * n
        counts = []
        for idx in range(moduli):
            try:
                f = find_irreducible(field, N, idx)
            except IndexError:
                break
            counts.append(oracle.count_splitting(field, f, m, n).count)
        ok = len(set(counts)) == 1 and counts
        tag = f"q={q},m={m},n={n},moduli={len(counts)}"
        cases.append((tag, bool(ok)))
    return SuiteReport("sigma-independence", cases)


def _suite_bijection(max_n: int = 5, qs=(2, 3)) -> SuiteReport:
    cases = []
    for q in qs:
        field = FieldSpec(q)
        for N in range(3, max_n + 1):
            f = find_irreducible(field, N)
            expected = evaluate(q_integer(N), q)
            for k in range(2, N):
                rep = oracle.check_pair_class_bijection(field, f, k)
                ok = rep.ok and rep.domain_size == expected and rep.codomain_size == expected
                cases.append((f"q={q},N={N},k={k}", ok))
    return SuiteReport("bijection", cases)


def _suite_q1(max_mn: int = 12, max_pair_n: int = 12, max_flag_n: int = 10) -> SuiteReport:
    cases = []
    for m in range(1, max_mn + 1):
        for n in range(1, max_mn // m + 1):
            got = q1analog.count_splitting_subsets(m, n)
            cases.append((f"splitting-subsets m={m},n={n}", got == n))
    for N in range(2, max_pair_n + 1):
        for a, b in iter_pair_classes(N):
            got = q1analog.count_pair_class_sets(a, b, N)
            f1, f2 = q1analog.pair_class_set_formulas(a, b, N)
            ok = got == f1 == f2
            if a > 0:
                ok = ok and got == evaluate(closedform.pair_class_formula(a, b, N), 1)
            cases.append((f"pair-sets N={N},({a},{b})", ok))
    for N in range(2, max_flag_n + 1):
        for label in iter_chain_labels(N):
            got = q1analog.count_flag_subsets(label, N)
            want = evaluate(closedform.flag_count_formula(label, N), 1)
            cases.append((f"flag-subsets N={N},{format_label(label)}", got == want))
    return SuiteReport("q1", cases)


def general_operator_fixtures(q: int = 2, N: int = 4) -> list[tuple[str, Mat]]:
    """Invertible operators on F_q^N that are not companion matrices.

    Chosen to have invariant subspaces of several kinds, so the degenerate
    base-case classes are genuinely nonzero.
    """
    field = FieldSpec(q)
    fixtures = [("identity", Mat.identity(field, N))]
    swap2 = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    fixtures.append(("double-swap", Mat.from_rows(field, swap2)))
    jordan = [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]]
    fixtures.append(("unipotent-jordan", Mat.from_rows(field, jordan)))
    c = companion_operator(find_irreducible(field, 2))
    block = [
        [c.rows[0][0], c.rows[0][1], 0, 0],
        [c.rows[1][0], c.rows[1][1], 0, 0],
        [0, 0, c.rows[0][0], c.rows[0][1]],
        [0, 0, c.rows[1][0], c.rows[1][1]],
    ]
    fixtures.append(("block-companion-pair", Mat.from_rows(field, block)))
    return fixtures


def _suite_general_t(max_r: int = 3) -> SuiteReport:
    cases = []
    N = 4
    for name, op in general_operator_fixtures(2, N):
        bases = {
            key: oracle.count_flag_tuple_for_operator(op, key).count
            for key in iter_degenerate_chains(N, max_r)
        }
        for label in iter_chain_labels(N, max_r=max_r, strict=False):
            got = evaluate(
                recursion.count_recursive_with_bases(label, N, bases), op.field.q
            )
            want = oracle.count_flag_tuple_for_operator(op, label).count
            cases.append((f"{name},{format_label(label)}", got == want))
        if name == "identity":
            for m, n in ((2, 2), (1, 4)):
                zero = oracle.count_operator_splitting(op, m, n).count
                cases.append((f"identity splitting m={m},n={n} = 0", zero == 0))
    return SuiteReport("general-T", cases)


_SUITES = {
    "pascal": _suite_pascal,
    "oracle-vs-closed": _suite_oracle_vs_closed,
    "oracle-vs-recursion": _suite_oracle_vs_recursion,
    "recursion-vs-closed": _suite_recursion_vs_closed,
    "expand": _suite_expand,
    "lr": _suite_lr,
    "identities": _suite_identities,
    "sigma-independence": _suite_sigma_independence,
    "bijection": _suite_bijection,
    "q1": _suite_q1,
    "general-T": _suite_general_t,
}

SUITE_NAMES = tuple(_SUITES)


def run_suite(name: str, **bounds) -> SuiteReport:
    """Run one named suite at its default desk-scale bounds (or overrides)."""
    try:
        fn = _SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return fn(**bounds)
