"""Pregroup type calculus and planar reduction search.

Grammatical types are sequences of basic types, each carrying an integer
adjoint order z: z = 0 is the plain type, each left adjoint decrements z and
each right adjoint increments it, so ``n^l`` is (n, -1) and ``n^r`` is
(n, +1).  A pair of adjacent simple types cancels when the right one is the
right adjoint of the left one, i.e. (b, z) followed by (b, z+1).  A sequence
reduces to a target type by repeatedly cancelling such pairs; the cancelled
pairs of a successful reduction form a planar, fully nested set of cups which
this module searches for and returns as :class:`ReductionDiagram` values.

>>> seq = parse_type("n n^r s n^l n")
>>> print(reduce(seq, parse_type("s")))
links (0,1) (3,4); through 2

All values are immutable and all functions are pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Optional

from .errors import ParseError

__all__ = [
    "BasicType",
    "SimpleType",
    "PregroupType",
    "ReductionDiagram",
    "parse_type",
    "left_adjoint",
    "right_adjoint",
    "contracts",
    "reduce",
    "enumerate_reductions",
    "is_sentence",
    "validate_diagram",
    "ascii_diagram",
]


@dataclass(frozen=True, order=True)
class BasicType:
    """A named atomic grammatical type, e.g. the noun type ``n``."""

    name: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("basic type name must be non-empty")

    def __str__(self):
        return self.name


@dataclass(frozen=True, order=True)
class SimpleType:
    """A basic type together with its adjoint order z.

    >>> n = SimpleType(BasicType("n"))
    >>> print(right_adjoint(n))
    n^r
    >>> left_adjoint(right_adjoint(n)) == n
    True
    """

    base: BasicType
    z: int = 0

    def __str__(self):
        if self.z == 0:
            return self.base.name
        mark = "l" * -self.z if self.z < 0 else "r" * self.z
        return f"{self.base.name}^{mark}"


def left_adjoint(t: SimpleType) -> SimpleType:
    """Decrement the adjoint order."""
    return SimpleType(t.base, t.z - 1)


def right_adjoint(t: SimpleType) -> SimpleType:
    """Increment the adjoint order."""
    return SimpleType(t.base, t.z + 1)


def contracts(a: SimpleType, b: SimpleType) -> bool:
    """True when the adjacent pair ``a b`` cancels to the unit.

    This single rule covers both cancellation laws: a plain type followed by
    its right adjoint, (b, 0)(b, +1), and a left adjoint followed by its
    plain type, (b, -1)(b, 0), as well as their iterated-adjoint shifts.
    """
    return a.base == b.base and b.z == a.z + 1


@dataclass(frozen=True)
class PregroupType:
    """An ordered sequence of simple types; the empty sequence is the unit.

    Concatenation via ``+`` is associative and the empty type is its unit.

    >>> tv = parse_type("n^r s n^l")
    >>> print(parse_type("n") + tv + parse_type("n"))
    n n^r s n^l n
    """

    simples: tuple[SimpleType, ...] = ()

    def __add__(self, other: "PregroupType") -> "PregroupType":
        return PregroupType(self.simples + other.simples)

    def __len__(self):
        return len(self.simples)

    def __iter__(self):
        return iter(self.simples)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return PregroupType(self.simples[key])
        return self.simples[key]

    def __bool__(self):
        return bool(self.simples)

    def __str__(self):
        return " ".join(str(t) for t in self.simples)


_TOKEN = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^([lr]+))?$")


def parse_type(text: str) -> PregroupType:
    """Parse type notation: simple types separated by whitespace or ``.``.

    Each simple type is a base name optionally followed by ``^`` and a run
    of ``l``/``r`` letters applied left to right (``n^rr`` is (n, +2)).
    An empty string denotes the unit type.
    """
    simples = []
    for token in re.split(r"[\s.]+", text.strip()):
        if not token:
            continue
        m = _TOKEN.match(token)
        if m is None:
            raise ParseError(f"malformed simple type {token!r}")
        name, marks = m.groups()
        z = 0
        for mark in marks or "":
            z += 1 if mark == "r" else -1
        simples.append(SimpleType(BasicType(name), z))
    return PregroupType(tuple(simples))


@dataclass(frozen=True)
class ReductionDiagram:
    """A planar set of cups witnessing a reduction, plus the surviving wires.

    ``links`` holds index pairs (i, j) with i < j, each a cup cancelling
    positions i and j of the reduced sequence; ``through`` lists the
    positions covered by no cup, in order.  Links never cross and are fully
    nested: everything strictly under a cup is itself cancelled under it.
    """

    length: int
    links: tuple[tuple[int, int], ...]
    through: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "links", tuple(sorted(map(tuple, self.links))))
        object.__setattr__(self, "through", tuple(self.through))

    def __str__(self):
        links = " ".join(f"({i},{j})" for i, j in self.links) or "none"
        through = " ".join(str(p) for p in self.through) or "none"
        return f"links {links}; through {through}"


def validate_diagram(
    seq: PregroupType, diagram: ReductionDiagram, target: Optional[PregroupType] = None
) -> None:
    """Check every structural invariant of a diagram against its sequence.

    Raises ``ValueError`` describing the first violation found: bad lengths,
    a position used twice, crossing or non-nested links, a link whose
    endpoint types do not cancel, or (when ``target`` is given) surviving
    wires that do not spell the target.
    """
    n = diagram.length
    if n != len(seq):
        raise ValueError(f"diagram length {n} != sequence length {len(seq)}")
    used = set()
    partner = {}
    for i, j in diagram.links:
        if not (0 <= i < j < n):
            raise ValueError(f"link ({i},{j}) out of range for length {n}")
        if i in used or j in used:
            raise ValueError(f"link ({i},{j}) reuses a position")
        used.update((i, j))
        partner[i] = j
        partner[j] = i
    for i, j in diagram.links:
        for k, l in diagram.links:
            if i < k < j < l:
                raise ValueError(f"links ({i},{j}) and ({k},{l}) cross")
        for p in range(i + 1, j):
            if p not in used or not (i < partner[p] < j):
                raise ValueError(f"position {p} under link ({i},{j}) is not nested")
        if not contracts(seq[i], seq[j]):
            raise ValueError(f"link ({i},{j}) joins {seq[i]} and {seq[j]}, which do not cancel")
    expected_through = tuple(p for p in range(n) if p not in used)
    if diagram.through != expected_through:
        raise ValueError(f"through {diagram.through} != unlinked positions {expected_through}")
    if target is not None:
        survivors = tuple(seq[p] for p in diagram.through)
        if survivors != tuple(target):
            raise ValueError(
                f"surviving wires {' '.join(map(str, survivors))!r} do not equal "
                f"target {str(target)!r}"
            )


def _balanced(seq, target) -> bool:
    # Each cup joins (b, z)(b, z+1) and contributes (-1)^z + (-1)^(z+1) = 0,
    # so the per-base alternating sum over z is invariant under reduction.
    sums: dict[BasicType, int] = {}
    for t in seq:
        sums[t.base] = sums.get(t.base, 0) + (-1) ** (t.z & 1)
    for t in target:
        sums[t.base] = sums.get(t.base, 0) - (-1) ** (t.z & 1)
    return all(v == 0 for v in sums.values())


def _tables(seq, target):
    """Interval DP tables.

    ``canc[i][j]`` says the half-open interval [i, j) cancels completely:
    it holds iff position i cups with some k in (i, j) such that (i+1, k)
    and (k+1, j) both cancel.  ``feas[p][m]`` says the suffix from p reduces
    to the target suffix from m.
    """
    n, m_len = len(seq), len(target)
    canc = [[False] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        canc[i][i] = True
    for span in range(2, n + 1, 2):
        for i in range(n - span + 1):
            j = i + span
            ti = seq[i]
            canc[i][j] = any(
                contracts(ti, seq[k]) and canc[i + 1][k] and canc[k + 1][j]
                for k in range(i + 1, j, 2)
            )
    feas = [[False] * (m_len + 1) for _ in range(n + 1)]
    feas[n][m_len] = True
    for p in range(n - 1, -1, -1):
        tp = seq[p]
        for m in range(m_len, -1, -1):
            ok = m < m_len and tp == target[m] and feas[p + 1][m + 1]
            if not ok:
                for j in range(p + 1, n, 2):
                    if contracts(tp, seq[j]) and canc[p + 1][j] and feas[j + 1][m]:
                        ok = True
                        break
            feas[p][m] = ok
    return canc, feas


def _witness_links(seq, target) -> Iterator[tuple[tuple[int, int], ...]]:
    """Yield the link sets of all witnesses in canonical order.

    A witness is emitted as a tuple of links ascending by left endpoint;
    scanning positions left to right, cups (nearest partner first) are tried
    before letting a position survive as a through wire, which makes the
    emission order exactly the lexicographic order of sorted link lists.
    """
    if not _balanced(seq, target):
        return
    canc, feas = _tables(seq, target)
    if not feas[0][0]:
        return
    n, m_len = len(seq), len(target)

    def full(i, j):
        # all cup sets cancelling [i, j) completely
        if i == j:
            yield ()
            return
        ti = seq[i]
        for k in range(i + 1, j, 2):
            if contracts(ti, seq[k]) and canc[i + 1][k] and canc[k + 1][j]:
                for inner in full(i + 1, k):
                    for rest in full(k + 1, j):
                        yield ((i, k),) + inner + rest

    def go(p, m):
        if p == n:
            if m == m_len:
                yield ()
            return
        tp = seq[p]
        for j in range(p + 1, n, 2):
            if contracts(tp, seq[j]) and canc[p + 1][j] and feas[j + 1][m]:
                for inner in full(p + 1, j):
                    for rest in go(j + 1, m):
                        yield ((p, j),) + inner + rest
        if m < m_len and tp == target[m] and feas[p + 1][m + 1]:
            yield from go(p + 1, m + 1)

    yield from go(0, 0)


def _diagram_from_links(n: int, links) -> ReductionDiagram:
    used = {p for link in links for p in link}
    through = tuple(p for p in range(n) if p not in used)
    return ReductionDiagram(n, tuple(links), through)


def reduce(seq: PregroupType, target: PregroupType) -> Optional[ReductionDiagram]:
    """Find a cancellation-only reduction of ``seq`` to ``target``.

    Returns a witnessing diagram, or ``None`` when no reduction exists.
    Among multiple witnesses the one whose sorted link list is
    lexicographically smallest is returned (leftmost, innermost cups), so
    the result is deterministic.

    >>> print(reduce(parse_type("n n^r s n^l n"), parse_type("s")))
    links (0,1) (3,4); through 2
    >>> reduce(parse_type("n n^r s n^l"), parse_type("s")) is None
    True
    """
    links = next(_witness_links(tuple(seq), tuple(target)), None)
    if links is None:
        return None
    return _diagram_from_links(len(seq), links)


def enumerate_reductions(
    seq: PregroupType, target: PregroupType, limit: int
) -> list[ReductionDiagram]:
    """List all distinct witnesses (up to ``limit``) in canonical order.

    The first element, when any exist, is exactly ``reduce(seq, target)``.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    n = len(seq)
    return [
        _diagram_from_links(n, links)
        for links in islice(_witness_links(tuple(seq), tuple(target)), limit)
    ]


def is_sentence(seq: PregroupType, sentence: Optional[PregroupType] = None) -> bool:
    """True when the sequence reduces to the sentence type (default ``s``)."""
    if sentence is None:
        sentence = PregroupType((SimpleType(BasicType("s")),))
    return reduce(seq, sentence) is not None


def ascii_diagram(seq: PregroupType, diagram: ReductionDiagram) -> str:
    r"""Render the diagram as text: the type line with cup arcs drawn below.

    Inner cups sit closest to the type line, enclosing cups below them:

    >>> seq = parse_type("n n^r s n^l n")
    >>> print(ascii_diagram(seq, reduce(seq, parse_type("s"))))
    n  n^r  s  n^l  n
    \___/       \___/
    """
    labels = [str(t) for t in seq]
    cols = []
    offset = 0
    for label in labels:
        cols.append(offset + (len(label) - 1) // 2)
        offset += len(label) + 2
    header = "  ".join(labels)

    def depth(link):
        i, j = link
        inner = [d for d in diagram.links if i < d[0] and d[1] < j]
        return 1 + max((depth(d) for d in inner), default=0)

    rows = max((depth(link) for link in diagram.links), default=0)
    grid = [[" "] * len(header) for _ in range(rows)]
    for link in diagram.links:
        i, j = link
        row = grid[depth(link) - 1]
        row[cols[i]] = "\\"
        row[cols[j]] = "/"
        for c in range(cols[i] + 1, cols[j]):
            row[c] = "_"
    return "\n".join([header] + ["".join(r).rstrip() for r in grid])
