"""Domain types, validation, exact arithmetic, and text formats.

Vertices carry labels 1..n.  A tree is stored as a sorted tuple of
(min, max) edge pairs, so structurally equal trees compare and hash
equal.  Counts are plain Python ints, which are arbitrary precision;
exact rationals are fractions.Fraction.  Every type here is immutable
and every function is pure, so all of it is safe to share between
threads.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Union

Edge = tuple[int, int]


# ---------------------------------------------------------------------------
# Errors


class TreeCountError(ValueError):
    """Base class for every validation error raised by this package."""


class BadVertex(TreeCountError):
    """A vertex label lies outside 1..n."""


class NotATree(TreeCountError):
    """Edge set is not a tree: wrong count, self-loop, cycle, or disconnected."""


class DuplicateEdge(TreeCountError):
    """The same unordered edge was given more than once."""


class OutOfRange(TreeCountError):
    """A numeric argument violates its documented range."""


class InvalidDegreeSequence(TreeCountError):
    """Degrees must be positive integers summing to 2n - 2 over n >= 2 vertices."""


class CompositionSumMismatch(TreeCountError):
    """Composition parts do not match the required sum or sign constraint."""


class NonIntegralResult(TreeCountError):
    """An exact division left a remainder where integrality is guaranteed."""


class CapExceeded(TreeCountError):
    """Requested size is beyond the configured exhaustive-enumeration cap."""


class EdgeNotInTree(TreeCountError):
    """An edge scheduled for removal is not present in the tree."""


class EdgeTextError(TreeCountError):
    """Malformed edge-list or sequence text; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


# ---------------------------------------------------------------------------
# Domain types
#
# These are plain named tuples; validation lives in the factory functions
# below and in the operations that consume them, so hot enumeration loops
# can build already-canonical values without re-checking invariants.


class LabeledTree(NamedTuple):
    """A tree on vertices 1..n with a canonical, sorted edge tuple."""

    n: int
    edges: tuple[Edge, ...]


class DegreeSequence(NamedTuple):
    """Per-vertex degrees (d_1..d_n); valid when all d_i >= 1 and sum = 2n - 2."""

    degrees: tuple[int, ...]


class Composition(NamedTuple):
    """An ordered tuple of integer parts with a prescribed total."""

    parts: tuple[int, ...]
    target_sum: int


class PruferSequence(NamedTuple):
    """A length n-2 word over 1..n; empty by convention for n <= 2."""

    n: int
    symbols: tuple[int, ...]


# ---------------------------------------------------------------------------
# Construction and validation


def _acyclic(n: int, edges: list[Edge]) -> bool:
    # union-find with path halving; n-1 acyclic edges imply connectivity
    parent = list(range(n + 1))
    for u, v in edges:
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        if u == v:
            return False
        parent[u] = v
    return True


def canonicalize_tree(n: int, raw_edges: Iterable[tuple[int, int]]) -> LabeledTree:
    """Validate and normalize an edge list into a canonical LabeledTree.

    Pairs may arrive in any order and orientation.  Raises BadVertex for
    labels outside 1..n, DuplicateEdge for a repeated unordered pair, and
    NotATree for a self-loop, wrong edge count, or a cyclic (equivalently
    disconnected) edge set.
    """
    if n < 1:
        raise OutOfRange(f"vertex count must be >= 1, got {n}")
    seen: set[Edge] = set()
    edges: list[Edge] = []
    for pair in raw_edges:
        u, v = pair
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise BadVertex(f"edge {tuple(pair)!r} references a vertex outside 1..{n}")
        if u == v:
            raise NotATree(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"edge {e!r} appears more than once")
        seen.add(e)
        edges.append(e)
    if len(edges) != n - 1:
        raise NotATree(f"a tree on {n} vertices needs {n - 1} edges, got {len(edges)}")
    if not _acyclic(n, edges):
        raise NotATree("edge set contains a cycle")
    edges.sort()
    return LabeledTree(n, tuple(edges))


def degree_of(tree: LabeledTree, v: int) -> int:
    """Number of edges of ``tree`` incident to vertex ``v``."""
    if not 1 <= v <= tree.n:
        raise BadVertex(f"vertex {v} outside 1..{tree.n}")
    return sum(1 for u, w in tree.edges if u == v or w == v)


def tree_degrees(tree: LabeledTree) -> tuple[int, ...]:
    """The full degree vector (d_1..d_n) of a tree."""
    deg = [0] * (tree.n + 1)
    for u, v in tree.edges:
        deg[u] += 1
        deg[v] += 1
    return tuple(deg[1:])


def validate_degrees(degrees: tuple[int, ...]) -> None:
    """Raise InvalidDegreeSequence unless degrees can belong to a tree."""
    n = len(degrees)
    if n < 2:
        raise InvalidDegreeSequence(f"need at least 2 vertices, got {n}")
    if any(d < 1 for d in degrees):
        raise InvalidDegreeSequence(f"degrees must be positive: {degrees}")
    if sum(degrees) != 2 * n - 2:
        raise InvalidDegreeSequence(
            f"degree sum must be {2 * n - 2} for n={n}, got {sum(degrees)}"
        )


def degree_sequence(degrees: Iterable[int]) -> DegreeSequence:
    """Build a validated DegreeSequence."""
    d = tuple(degrees)
    validate_degrees(d)
    return DegreeSequence(d)


def composition(
    parts: Iterable[int], target_sum: int | None = None, *, allow_zero: bool = False
) -> Composition:
    """Build a validated Composition.

    Parts must be positive unless ``allow_zero`` permits zeros; the total
    must equal ``target_sum`` when one is given.
    """
    p = tuple(parts)
    if not p:
        raise CompositionSumMismatch("a composition needs at least one part")
    lo = 0 if allow_zero else 1
    if any(x < lo for x in p):
        kind = "nonnegative" if allow_zero else "positive"
        raise CompositionSumMismatch(f"parts must be {kind}: {p}")
    total = sum(p)
    if target_sum is None:
        target_sum = total
    elif total != target_sum:
        raise CompositionSumMismatch(f"parts sum to {total}, expected {target_sum}")
    return Composition(p, target_sum)


def prufer_sequence(n: int, symbols: Iterable[int] = ()) -> PruferSequence:
    """Build a validated PruferSequence for ``n`` vertices."""
    if n < 1:
        raise OutOfRange(f"vertex count must be >= 1, got {n}")
    syms = tuple(symbols)
    expected = max(0, n - 2)
    if len(syms) != expected:
        raise OutOfRange(f"sequence for n={n} must have length {expected}, got {len(syms)}")
    for s in syms:
        if not 1 <= s <= n:
            raise BadVertex(f"symbol {s} outside 1..{n}")
    return PruferSequence(n, syms)


# ---------------------------------------------------------------------------
# Exact arithmetic


def factorial(n: int) -> int:
    if n < 0:
        raise OutOfRange(f"factorial of negative {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        raise OutOfRange(f"binomial({n}, {k}) needs 0 <= k <= n")
    return math.comb(n, k)


def multinomial(parts: Iterable[int]) -> int:
    """(sum parts)! / prod(parts_i!), computed as a product of binomials."""
    total = 0
    out = 1
    for p in parts:
        if p < 0:
            raise OutOfRange(f"multinomial parts must be nonnegative, got {p}")
        total += p
        out *= math.comb(total, p)
    return out


def exact_div(numerator: int, divisor: int) -> int:
    """Integer division that must be exact."""
    q, r = divmod(numerator, divisor)
    if r:
        raise NonIntegralResult(f"{numerator} is not divisible by {divisor}")
    return q


def as_integer(value: Union[int, Fraction]) -> int:
    """Convert an int or an integer-valued Fraction to int, exactly."""
    if isinstance(value, int):
        return value
    if value.denominator != 1:
        raise NonIntegralResult(f"{value} is not an integer")
    return int(value)


# ---------------------------------------------------------------------------
# Text formats
#
# Edge-list format: a header line "n <vertex-count>" followed by one edge
# per line, two space-separated labels with the smaller first, lines in
# sorted order.  A single-vertex tree is the header alone.  Sequence
# format: comma-separated symbols on one line; the empty line is the
# (empty) sequence for n = 2.


def tree_to_text(tree: LabeledTree) -> str:
    lines = [f"n {tree.n}"]
    lines.extend(f"{u} {v}" for u, v in tree.edges)
    return "\n".join(lines) + "\n"


def read_trees(lines: Iterable[str]) -> Iterator[LabeledTree]:
    """Parse a stream of edge-list blocks; blank lines between blocks are skipped."""
    numbered = enumerate(lines, start=1)
    for line_no, raw in numbered:
        text = raw.strip()
        if not text:
            continue
        fields = text.split()
        if len(fields) != 2 or fields[0] != "n":
            raise EdgeTextError(line_no, "expected header 'n <vertex-count>'")
        try:
            n = int(fields[1])
        except ValueError:
            raise EdgeTextError(line_no, f"vertex count {fields[1]!r} is not an integer") from None
        if n < 1:
            raise EdgeTextError(line_no, f"vertex count must be >= 1, got {n}")
        header_line = line_no
        raw_edges: list[Edge] = []
        for _ in range(n - 1):
            try:
                line_no, raw = next(numbered)
            except StopIteration:
                raise EdgeTextError(
                    header_line, f"expected {n - 1} edge lines, got {len(raw_edges)}"
                ) from None
            tokens = raw.split()
            if len(tokens) != 2:
                raise EdgeTextError(line_no, "expected two vertex labels")
            try:
                u, v = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise EdgeTextError(line_no, "vertex labels must be integers") from None
            raw_edges.append((u, v))
        try:
            yield canonicalize_tree(n, raw_edges)
        except TreeCountError as err:
            raise EdgeTextError(header_line, str(err)) from err


def prufer_to_text(seq: PruferSequence) -> str:
    return ",".join(str(s) for s in seq.symbols)


def read_prufer_lines(lines: Iterable[str]) -> Iterator[PruferSequence]:
    """Parse one sequence per line; an empty line is the n=2 sequence."""
    for line_no, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            yield PruferSequence(2, ())
            continue
        try:
            symbols = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise EdgeTextError(line_no, "symbols must be comma-separated integers") from None
        n = len(symbols) + 2
        try:
            yield prufer_sequence(n, symbols)
        except TreeCountError as err:
            raise EdgeTextError(line_no, str(err)) from err
