"""Formula-vs-oracle verification across parameter grids.

Each identity check walks its whole grid, collects every counterexample
(never fail-fast), and returns an IdentityReport.  The serialized record
of a report has exactly the fields identity_id, status, checked,
failures[], elapsed_ms; counts inside failures are rendered as decimal
strings so arbitrarily large values survive JSON.

Checks accept an optional replacement for the formula side, which lets
tests inject a corrupted formula and watch the counterexamples surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from time import perf_counter
from typing import Callable, Iterable, Mapping

from treecount import counting, enumeration
from treecount.core import (
    CapExceeded,
    DegreeSequence,
    OutOfRange,
    as_integer,
    binomial,
)

IDENTITY_IDS = (
    "THEOREM_1",
    "DEG_V1_TOTALITY",
    "LEMMA_1",
    "EQ_20_RECURSION",
    "DOUBLE_COUNT_PAIRS",
    "L3_EXPANSION",
    "SUPERVERTEX_MARGINAL",
    "BINOMIAL_COLLAPSE",
    "PRUFER_ROUNDTRIP",
)

# Default grid tops: enumeration-backed checks stay within the module
# caps; formula-only checks are cheap in exact arithmetic and reach 30.
DEFAULT_LIMITS: dict[str, int] = {
    "THEOREM_1": 7,
    "DEG_V1_TOTALITY": 30,
    "LEMMA_1": 8,
    "EQ_20_RECURSION": 30,
    "DOUBLE_COUNT_PAIRS": 6,
    "L3_EXPANSION": 10,
    "SUPERVERTEX_MARGINAL": 10,
    "BINOMIAL_COLLAPSE": 30,
    "PRUFER_ROUNDTRIP": 7,
}


@dataclass(frozen=True)
class Failure:
    parameters: str
    expected: object
    got: object

    def to_record(self) -> dict:
        return {
            "parameters": self.parameters,
            "expected": str(self.expected),
            "got": str(self.got),
        }


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    grid: str
    checked: int
    failures: tuple[Failure, ...]
    elapsed: float

    @property
    def status(self) -> str:
        return "PASS" if not self.failures else "FAIL"

    @property
    def elapsed_ms(self) -> int:
        return int(self.elapsed * 1000)

    def to_record(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "status": self.status,
            "checked": self.checked,
            "failures": [f.to_record() for f in self.failures],
            "elapsed_ms": self.elapsed_ms,
        }


def _ilen(stream: Iterable) -> int:
    return sum(1 for _ in stream)


def verify_theorem1(
    n_max: int = 7, *, formula: Callable[[DegreeSequence], int] | None = None
) -> IdentityReport:
    """Degree-sequence formula against filtered enumeration, for every
    valid degree sequence with n <= n_max."""
    if n_max < 2:
        raise OutOfRange(f"need n_max >= 2, got {n_max}")
    if n_max > enumeration.PRUFER_ENUM_CAP:
        raise CapExceeded(
            f"n_max={n_max} beyond the sweep cap {enumeration.PRUFER_ENUM_CAP}"
        )
    fn = formula if formula is not None else counting.count_trees_with_degrees
    start = perf_counter()
    failures = []
    checked = 0
    for n in range(2, n_max + 1):
        for comp in enumeration.enumerate_compositions(2 * n - 2, n):
            d = DegreeSequence(comp.parts)
            expected = _ilen(enumeration.enumerate_trees_with_degrees(d))
            got = fn(d)
            checked += 1
            if got != expected:
                failures.append(Failure(f"n={n},d={','.join(map(str, d.degrees))}", expected, got))
    return IdentityReport(
        "THEOREM_1", f"n=2..{n_max}", checked, tuple(failures), perf_counter() - start
    )


def verify_deg_v1_totality(
    n_max: int = 30, *, formula: Callable[[int, int], int] | None = None
) -> IdentityReport:
    """The by-degree-of-vertex-1 counts must sum to the total count."""
    if n_max < 2:
        raise OutOfRange(f"need n_max >= 2, got {n_max}")
    fn = formula if formula is not None else counting.count_trees_deg_v1
    start = perf_counter()
    failures = []
    checked = 0
    for n in range(2, n_max + 1):
        expected = counting.count_total_trees(n)
        got = sum(fn(n, k) for k in range(1, n))
        checked += 1
        if got != expected:
            failures.append(Failure(f"n={n}", expected, got))
    return IdentityReport(
        "DEG_V1_TOTALITY", f"n=2..{n_max}", checked, tuple(failures), perf_counter() - start
    )


def verify_lemma1(
    n_max: int = 8, *, lhs: Callable[[int, int], int] | None = None
) -> IdentityReport:
    """Four-way agreement at every (n, k): the composition-sum count, the
    literal rational form, the rational-free form, and (while n is within
    the sweep cap) the occurrence-counting brute force."""
    if n_max < 2:
        raise OutOfRange(f"need n_max >= 2, got {n_max}")
    fn = lhs if lhs is not None else counting.lemma1_lhs
    start = perf_counter()
    failures = []
    checked = 0
    for n in range(2, n_max + 1):
        hist = (
            enumeration.deg_v1_histogram(n)
            if n <= enumeration.PRUFER_ENUM_CAP
            else None
        )
        for k in range(1, n):
            reference = counting.count_trees_deg_v1(n, k)
            legs = {
                "composition sum": fn(n, k),
                "rational form": as_integer(counting.count_trees_deg_v1_rational(n, k)),
            }
            if hist is not None:
                legs["brute force"] = hist[k]
            checked += 1
            for name, value in legs.items():
                if value != reference:
                    failures.append(Failure(f"n={n},k={k},{name}", reference, value))
    return IdentityReport(
        "LEMMA_1", f"n=2..{n_max}", checked, tuple(failures), perf_counter() - start
    )


def verify_double_count(
    m_max: int = 6, *, assembly: Callable[[int, int], int] | None = None
) -> IdentityReport:
    """Pair enumeration against both closed form T_m * C(m-1, k-1) and the
    component-based assembly, for every m <= m_max and every k."""
    if m_max < 2:
        raise OutOfRange(f"need m_max >= 2, got {m_max}")
    if m_max > enumeration.PAIR_ENUM_CAP:
        raise CapExceeded(
            f"m_max={m_max} beyond the pair cap {enumeration.PAIR_ENUM_CAP}"
        )
    fn = assembly if assembly is not None else counting.assemble_double_count
    start = perf_counter()
    failures = []
    checked = 0
    for m in range(2, m_max + 1):
        for k in range(1, m + 1):
            expected = _ilen(enumeration.enumerate_edge_subsets_pairs(m, k))
            closed = counting.count_total_trees(m) * binomial(m - 1, k - 1)
            assembled = fn(m, k)
            checked += 1
            if closed != expected:
                failures.append(Failure(f"m={m},k={k},closed form", expected, closed))
            if assembled != expected:
                failures.append(Failure(f"m={m},k={k},assembly", expected, assembled))
    return IdentityReport(
        "DOUBLE_COUNT_PAIRS", f"m=2..{m_max}", checked, tuple(failures), perf_counter() - start
    )


def verify_recursion_and_collapse(
    n_max: int = 30, *, recursion: Callable[[int], int] | None = None
) -> IdentityReport:
    """recursion_T(n) = binomial_collapse(n) = n^(n-2) for n <= n_max."""
    if n_max < 2:
        raise OutOfRange(f"need n_max >= 2, got {n_max}")
    fn = recursion if recursion is not None else counting.recursion_T
    start = perf_counter()
    failures = []
    checked = 0
    for n in range(2, n_max + 1):
        expected = counting.count_total_trees(n)
        rec = fn(n)
        collapse = counting.binomial_collapse(n)
        checked += 1
        if rec != expected:
            failures.append(Failure(f"n={n},recursion", expected, rec))
        if collapse != expected:
            failures.append(Failure(f"n={n},collapse", expected, collapse))
    return IdentityReport(
        "EQ_20_RECURSION", f"n=2..{n_max}", checked, tuple(failures), perf_counter() - start
    )


def verify_binomial_collapse(
    n_max: int = 30, *, collapse: Callable[[int], int] | None = None
) -> IdentityReport:
    """Term-by-term binomial sum against the closed form."""
    if n_max < 2:
        raise OutOfRange(f"need n_max >= 2, got {n_max}")
    fn = collapse if collapse is not None else counting.binomial_collapse
    start = perf_counter()
    failures = []
    checked = 0
    for n in range(2, n_max + 1):
        expected = counting.count_total_trees(n)
        got = fn(n)
        checked += 1
        if got != expected:
            failures.append(Failure(f"n={n}", expected, got))
    return IdentityReport(
        "BINOMIAL_COLLAPSE", f"n=2..{n_max}", checked, tuple(failures), perf_counter() - start
    )


def verify_l3_expansion(
    m_max: int = 10, k_max: int = 5, *, expansion=None
) -> IdentityReport:
    """Multinomial expansion against m^(k-2) * prod(a_i) on every positive
    composition with k <= k_max parts and total m <= m_max."""
    if m_max < 2 or k_max < 2:
        raise OutOfRange(f"need m_max >= 2 and k_max >= 2, got {m_max}, {k_max}")
    fn = expansion if expansion is not None else counting.expand_L3
    start = perf_counter()
    failures = []
    checked = 0
    for k in range(2, k_max + 1):
        for m in range(k, m_max + 1):
            for comp in enumeration.enumerate_compositions(m, k):
                expected = m ** (k - 2)
                for a in comp.parts:
                    expected *= a
                got = fn(comp, m)
                checked += 1
                if got != expected:
                    failures.append(
                        Failure(f"m={m},a={','.join(map(str, comp.parts))}", expected, got)
                    )
    return IdentityReport(
        "L3_EXPANSION",
        f"k=2..{k_max},m<={m_max}",
        checked,
        tuple(failures),
        perf_counter() - start,
    )


def verify_supervertex_marginal(
    m_max: int = 10, k_max: int = 5, *, joiner=None
) -> IdentityReport:
    """Summing the component-joining counts over all degree sequences on k
    super vertices must reproduce the multinomial expansion."""
    if m_max < 2 or k_max < 2:
        raise OutOfRange(f"need m_max >= 2 and k_max >= 2, got {m_max}, {k_max}")
    fn = joiner if joiner is not None else counting.count_supervertex_trees
    start = perf_counter()
    failures = []
    checked = 0
    for k in range(2, k_max + 1):
        degree_choices = [
            DegreeSequence(c.parts)
            for c in enumeration.enumerate_compositions(2 * k - 2, k)
        ]
        for m in range(k, m_max + 1):
            for comp in enumeration.enumerate_compositions(m, k):
                expected = counting.expand_L3(comp, m)
                got = sum(fn(d, comp) for d in degree_choices)
                checked += 1
                if got != expected:
                    failures.append(
                        Failure(f"m={m},a={','.join(map(str, comp.parts))}", expected, got)
                    )
    return IdentityReport(
        "SUPERVERTEX_MARGINAL",
        f"k=2..{k_max},m<={m_max}",
        checked,
        tuple(failures),
        perf_counter() - start,
    )


def verify_prufer_roundtrip(n_max: int = 7) -> IdentityReport:
    """encode(decode(s)) = s over all sequences and decode(encode(t)) = t
    over all trees, for 2 <= n <= n_max."""
    if n_max < 2:
        raise OutOfRange(f"need n_max >= 2, got {n_max}")
    if n_max > enumeration.PRUFER_ENUM_CAP:
        raise CapExceeded(
            f"n_max={n_max} beyond the sweep cap {enumeration.PRUFER_ENUM_CAP}"
        )
    from itertools import product

    from treecount.core import PruferSequence

    start = perf_counter()
    failures = []
    checked = 0
    for n in range(2, n_max + 1):
        symbol_sets = product(range(1, n + 1), repeat=n - 2) if n > 2 else [()]
        for symbols in symbol_sets:
            seq = PruferSequence(n, tuple(symbols))
            tree = enumeration.prufer_decode(seq)
            back = enumeration.prufer_encode(tree)
            checked += 1
            if back != seq:
                failures.append(Failure(f"n={n},s={symbols}", seq, back))
                continue
            again = enumeration.prufer_decode(back)
            checked += 1
            if again != tree:
                failures.append(Failure(f"n={n},t={tree.edges}", tree, again))
    return IdentityReport(
        "PRUFER_ROUNDTRIP", f"n=2..{n_max}", checked, tuple(failures), perf_counter() - start
    )


_REGISTRY: dict[str, Callable[[int], IdentityReport]] = {
    "THEOREM_1": verify_theorem1,
    "DEG_V1_TOTALITY": verify_deg_v1_totality,
    "LEMMA_1": verify_lemma1,
    "EQ_20_RECURSION": verify_recursion_and_collapse,
    "DOUBLE_COUNT_PAIRS": verify_double_count,
    "L3_EXPANSION": verify_l3_expansion,
    "SUPERVERTEX_MARGINAL": verify_supervertex_marginal,
    "BINOMIAL_COLLAPSE": verify_binomial_collapse,
    "PRUFER_ROUNDTRIP": verify_prufer_roundtrip,
}


def verify_all(limits: Mapping[str, int] | None = None) -> list[IdentityReport]:
    """Run every identity check.  A check whose limit is beyond its cap is
    reported as a failed entry (got = the CapExceeded message) without
    aborting the remaining checks."""
    reports = []
    for identity_id in IDENTITY_IDS:
        limit = DEFAULT_LIMITS[identity_id]
        if limits and identity_id in limits:
            limit = limits[identity_id]
        check = _REGISTRY[identity_id]
        start = perf_counter()
        try:
            reports.append(check(limit))
        except CapExceeded as err:
            failure = Failure(f"limit={limit}", "limit within enumeration cap", f"CapExceeded: {err}")
            reports.append(
                IdentityReport(identity_id, f"limit={limit}", 0, (failure,), perf_counter() - start)
            )
    return reports
