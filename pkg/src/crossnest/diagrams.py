"""Arc diagrams of coloured permutations and set partitions.

A permutation S of [n] is drawn on vertices 1..n with an upper arc (i, S(i))
whenever S(i) >= i (an upper loop when S(i) = i) and a lower arc (S(i), i)
whenever S(i) < i, so every stored arc is left-endpoint first and fixed
points live above the line.  A set partition of [n] is drawn with an upper
arc joining each pair of consecutive elements of a block.  In a coloured
permutation position i gives its arc the colour of i; a coloured set
partition colours each arc individually.

Text formats (shared with the command line):

    permutation     "4 5 3 6 2 1 / 1 2 1 2 2 2"     word / colours
    set partition   "{1,3,6},{4,5},{2} / 1 2 1"     blocks / arc colours

The colour part may be omitted, meaning every arc takes colour 1.  Set
partition arc colours are listed in the order of arcs sorted by left
endpoint.

A k-crossing is a set of k arcs (a_1,b_1),...,(a_k,b_k) with
a_1 < ... < a_k < b_1 < ... < b_k; the enhanced statistic relaxes the
middle inequality to a_k <= b_1, which lets two arcs sharing a vertex
cross.  A k-nesting has a_1 < ... < a_k <= b_k < ... < b_1 (strict
containment; only in the enhanced sense may the innermost arc be a loop).
cr and ne of a coloured permutation take, colour by colour, the enhanced
statistic on the upper diagram and the plain statistic on the lower
diagram, and report the maximum over all colours and both diagrams; a
coloured set partition uses the plain statistic on its upper diagram.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator


class VertexKind(Enum):
    """How a vertex of a permutation diagram meets its two arcs."""

    FIXED_POINT = "fixed_point"
    OPENER = "opener"
    CLOSER = "closer"
    UPPER_TRANSITORY = "upper_transitory"
    LOWER_TRANSITORY = "lower_transitory"


@dataclass(frozen=True)
class Arc:
    """A coloured arc with 1-based endpoints, stored left endpoint first."""

    left: int
    right: int
    side: str  # "upper" or "lower"
    colour: int = 1

    def __post_init__(self) -> None:
        if self.side not in ("upper", "lower"):
            raise ValueError("arc side must be 'upper' or 'lower'")
        if not (1 <= self.left <= self.right):
            raise ValueError("arc endpoints must satisfy 1 <= left <= right")
        if self.side == "lower" and self.left == self.right:
            raise ValueError("lower diagrams have no loops")
        if self.colour < 1:
            raise ValueError("colours are 1-based")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.left, self.right)

    def is_loop(self) -> bool:
        return self.left == self.right


class Permutation:
    """A permutation of [n], stored in one-line notation.

    >>> p = Permutation((4, 5, 3, 6, 2, 1))
    >>> p.image(1), p.preimage(1)
    (4, 6)
    >>> Permutation.from_text("2 1 3").word
    (2, 1, 3)
    """

    __slots__ = ("word",)

    def __init__(self, word: Iterable[int]):
        word = tuple(word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError("not a permutation of 1..n: %r" % (word,))
        object.__setattr__(self, "word", word)

    def __setattr__(self, name, value):  # immutable on purpose
        raise AttributeError("Permutation is immutable")

    def __len__(self) -> int:
        return len(self.word)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.word == other.word

    def __hash__(self) -> int:
        return hash(("Permutation", self.word))

    def __repr__(self) -> str:
        return "Permutation(%r)" % (self.word,)

    def image(self, i: int) -> int:
        return self.word[i - 1]

    def preimage(self, i: int) -> int:
        return self.word.index(i) + 1

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        return cls(int(tok) for tok in text.split())

    def to_text(self) -> str:
        return " ".join(str(v) for v in self.word)


class ColouredPermutation:
    """A permutation together with a colour in 1..r for every position.

    >>> cp = ColouredPermutation.from_text("4 5 3 6 2 1 / 1 2 1 2 2 2")
    >>> cp.num_colours
    2
    >>> cp.to_text()
    '4 5 3 6 2 1 / 1 2 1 2 2 2'
    """

    __slots__ = ("perm", "colours", "num_colours")

    def __init__(self, word, colours=None, num_colours=None):
        perm = word if isinstance(word, Permutation) else Permutation(word)
        n = len(perm)
        if colours is None:
            colours = (1,) * n
        colours = tuple(colours)
        if len(colours) != n:
            raise ValueError("need one colour per position")
        if any(c < 1 for c in colours):
            raise ValueError("colours are 1-based")
        if num_colours is None:
            num_colours = max(colours, default=1)
        if num_colours < max(colours, default=1):
            raise ValueError("num_colours smaller than a used colour")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "colours", colours)
        object.__setattr__(self, "num_colours", num_colours)

    def __setattr__(self, name, value):
        raise AttributeError("ColouredPermutation is immutable")

    @property
    def word(self) -> tuple[int, ...]:
        return self.perm.word

    def __len__(self) -> int:
        return len(self.perm)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ColouredPermutation)
            and self.word == other.word
            and self.colours == other.colours
        )

    def __hash__(self) -> int:
        return hash(("ColouredPermutation", self.word, self.colours))

    def __repr__(self) -> str:
        return "ColouredPermutation(%r, %r)" % (self.word, self.colours)

    @classmethod
    def from_text(cls, text: str) -> "ColouredPermutation":
        if "/" in text:
            word_part, colour_part = text.split("/")
            word = [int(tok) for tok in word_part.split()]
            colours = [int(tok) for tok in colour_part.split()]
            return cls(word, colours)
        return cls([int(tok) for tok in text.split()])

    def to_text(self) -> str:
        word = " ".join(str(v) for v in self.word)
        cols = " ".join(str(c) for c in self.colours)
        return "%s / %s" % (word, cols)

    def to_json_dict(self) -> dict:
        return {
            "family": "permutation",
            "n": len(self),
            "word": list(self.word),
            "colours": list(self.colours),
        }


class ColouredSetPartition:
    """A set partition of [n] with a colour for each consecutive-pair arc.

    Blocks are kept sorted internally (each block increasing, blocks by
    least element); arc colours are aligned with ``arcs()``, which lists
    arcs sorted by left endpoint.

    >>> sp = ColouredSetPartition.from_text("{1,3,6},{4,5},{2}")
    >>> [a.pair for a in sp.arcs()]
    [(1, 3), (3, 6), (4, 5)]
    """

    __slots__ = ("blocks", "n", "arc_colours", "num_colours")

    def __init__(self, blocks, arc_colours=None, num_colours=None):
        blocks = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise ValueError("empty block")
            if seen & set(b):
                raise ValueError("blocks are not disjoint")
            seen |= set(b)
        n = len(seen)
        if seen != set(range(1, n + 1)):
            raise ValueError("blocks must partition 1..n")
        narcs = sum(len(b) - 1 for b in blocks)
        if arc_colours is None:
            arc_colours = (1,) * narcs
        arc_colours = tuple(arc_colours)
        if len(arc_colours) != narcs:
            raise ValueError("need one colour per arc (%d arcs)" % narcs)
        if any(c < 1 for c in arc_colours):
            raise ValueError("colours are 1-based")
        if num_colours is None:
            num_colours = max(arc_colours, default=1)
        if num_colours < max(arc_colours, default=1):
            raise ValueError("num_colours smaller than a used colour")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arc_colours", arc_colours)
        object.__setattr__(self, "num_colours", num_colours)

    def __setattr__(self, name, value):
        raise AttributeError("ColouredSetPartition is immutable")

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ColouredSetPartition)
            and self.blocks == other.blocks
            and self.arc_colours == other.arc_colours
        )

    def __hash__(self) -> int:
        return hash(("ColouredSetPartition", self.blocks, self.arc_colours))

    def __repr__(self) -> str:
        return "ColouredSetPartition(%r, %r)" % (self.blocks, self.arc_colours)

    def _pairs(self) -> list[tuple[int, int]]:
        pairs = []
        for b in self.blocks:
            for x, y in zip(b, b[1:]):
                pairs.append((x, y))
        pairs.sort()
        return pairs

    def arcs(self) -> tuple[Arc, ...]:
        return tuple(
            Arc(a, b, "upper", c) for (a, b), c in zip(self._pairs(), self.arc_colours)
        )

    @classmethod
    def from_text(cls, text: str) -> "ColouredSetPartition":
        if "/" in text:
            block_part, colour_part = text.split("/")
            colours = [int(tok) for tok in colour_part.split()]
        else:
            block_part, colours = text, None
        block_part = block_part.strip()
        blocks = []
        if block_part:
            if not (block_part.startswith("{") and block_part.endswith("}")):
                raise ValueError("set partition text must be {..},{..} blocks")
            for chunk in block_part[1:-1].split("},{"):
                blocks.append([int(tok) for tok in chunk.split(",")])
        return cls(blocks, colours)

    def to_text(self) -> str:
        blocks = ",".join("{%s}" % ",".join(str(v) for v in b) for b in self.blocks)
        if not blocks:
            return ""
        if self.arc_colours:
            return "%s / %s" % (blocks, " ".join(str(c) for c in self.arc_colours))
        return blocks

    def to_json_dict(self) -> dict:
        return {
            "family": "setpartition",
            "n": self.n,
            "blocks": [list(b) for b in self.blocks],
            "arc_colours": list(self.arc_colours),
        }


def diagram_from_json_dict(d: dict):
    """Inverse of the ``to_json_dict`` methods."""
    if d.get("family") == "permutation":
        return ColouredPermutation(d["word"], d["colours"])
    if d.get("family") == "setpartition":
        return ColouredSetPartition(d["blocks"], d["arc_colours"])
    raise ValueError("unknown diagram family: %r" % (d.get("family"),))


def parse_diagram(text: str):
    """Parse either text format, deciding by the presence of block braces."""
    if "{" in text:
        return ColouredSetPartition.from_text(text)
    return ColouredPermutation.from_text(text)


# ---------------------------------------------------------------------------
# vertex classification


def vertex_kind(p, i: int) -> VertexKind:
    """Classify vertex i of a permutation by its outgoing/incoming arcs.

    >>> p = Permutation((4, 5, 3, 6, 2, 1))
    >>> [vertex_kind(p, i).name for i in (1, 3, 4, 5)]
    ['OPENER', 'FIXED_POINT', 'UPPER_TRANSITORY', 'CLOSER']
    """
    if isinstance(p, ColouredPermutation):
        p = p.perm
    out = p.image(i)
    if out == i:
        return VertexKind.FIXED_POINT
    inc = p.preimage(i)
    if out > i and inc > i:
        return VertexKind.OPENER
    if out < i and inc < i:
        return VertexKind.CLOSER
    if out > i:  # and inc < i: passes through above the line
        return VertexKind.UPPER_TRANSITORY
    return VertexKind.LOWER_TRANSITORY


def openers(p) -> frozenset[int]:
    """Vertices that only start arcs (both neighbours to the right)."""
    if isinstance(p, ColouredPermutation):
        p = p.perm
    return frozenset(
        i for i in range(1, len(p) + 1) if vertex_kind(p, i) is VertexKind.OPENER
    )


def closers(p) -> frozenset[int]:
    """Vertices that only end arcs (both neighbours to the left)."""
    if isinstance(p, ColouredPermutation):
        p = p.perm
    return frozenset(
        i for i in range(1, len(p) + 1) if vertex_kind(p, i) is VertexKind.CLOSER
    )


def upper_openers(p) -> frozenset[int]:
    """Vertices starting an upper arc (loops count)."""
    if isinstance(p, ColouredPermutation):
        p = p.perm
    return frozenset(i for i in range(1, len(p) + 1) if p.image(i) >= i)


def upper_closers(p) -> frozenset[int]:
    if isinstance(p, ColouredPermutation):
        p = p.perm
    return frozenset(i for i in range(1, len(p) + 1) if p.preimage(i) >= i)


def lower_openers(p) -> frozenset[int]:
    """Vertices starting a lower arc, i.e. left endpoints below the line."""
    if isinstance(p, ColouredPermutation):
        p = p.perm
    return frozenset(i for i in range(1, len(p) + 1) if p.preimage(i) > i)


def lower_closers(p) -> frozenset[int]:
    if isinstance(p, ColouredPermutation):
        p = p.perm
    return frozenset(i for i in range(1, len(p) + 1) if p.image(i) < i)


def arc_start_vertices(arcs) -> frozenset[int]:
    """Left endpoints of an arc list (loops count as starts)."""
    return frozenset(_pair(a)[0] for a in arcs)


def arc_end_vertices(arcs) -> frozenset[int]:
    return frozenset(_pair(a)[1] for a in arcs)


def arcs_of(obj) -> tuple[tuple[Arc, ...], tuple[Arc, ...]]:
    """Split a coloured object into its (upper, lower) arc lists.

    >>> cp = ColouredPermutation.from_text("4 5 3 6 2 1 / 1 2 1 2 2 2")
    >>> [a.pair for a in arcs_of(cp)[0]]
    [(1, 4), (2, 5), (3, 3), (4, 6)]
    >>> [a.pair for a in arcs_of(cp)[1]]
    [(1, 6), (2, 5)]
    """
    if isinstance(obj, ColouredSetPartition):
        return obj.arcs(), ()
    if isinstance(obj, Permutation):
        obj = ColouredPermutation(obj)
    upper, lower = [], []
    for i, out in enumerate(obj.word, start=1):
        colour = obj.colours[i - 1]
        if out >= i:
            upper.append(Arc(i, out, "upper", colour))
        else:
            lower.append(Arc(out, i, "lower", colour))
    upper.sort(key=lambda a: a.pair)
    lower.sort(key=lambda a: a.pair)
    return tuple(upper), tuple(lower)


def enhanced_arcs(sp: ColouredSetPartition) -> tuple[Arc, ...]:
    """The enhanced view of a set partition: singleton blocks become loops.

    Only defined for single-coloured partitions when singletons are present
    (a loop born from a block has no arc to take a colour from).

    >>> [a.pair for a in enhanced_arcs(ColouredSetPartition.from_text("{1},{2,3}"))]
    [(1, 1), (2, 3)]
    """
    has_singleton = any(len(b) == 1 for b in sp.blocks)
    if has_singleton and sp.num_colours > 1:
        raise ValueError(
            "enhanced view of a multi-coloured partition with singletons is ambiguous"
        )
    arcs = list(sp.arcs())
    for b in sp.blocks:
        if len(b) == 1:
            arcs.append(Arc(b[0], b[0], "upper", 1))
    arcs.sort(key=lambda a: a.pair)
    return tuple(arcs)


# ---------------------------------------------------------------------------
# crossing / nesting statistics


def _pair(arc) -> tuple[int, int]:
    if isinstance(arc, Arc):
        return arc.pair
    left, right = arc
    return (left, right)


def _pairs(arcs, allow_loops: bool) -> list[tuple[int, int]]:
    pairs = []
    for arc in arcs:
        a, b = _pair(arc)
        if not (1 <= a <= b):
            raise ValueError("bad arc endpoints (%d, %d)" % (a, b))
        if a == b and not allow_loops:
            raise ValueError("loop (%d, %d) in a plain diagram" % (a, b))
        pairs.append((a, b))
    return pairs


def _longest_increasing_pairs(pairs: list[tuple[int, int]]) -> int:
    # Longest subset with strictly increasing lefts and rights.  Sorting by
    # (left, -right) makes equal lefts unusable twice under a strict LIS on
    # rights; a quadratic scan is fine at diagram sizes.
    seq = [b for _, b in sorted(pairs, key=lambda p: (p[0], -p[1]))]
    dp = [1] * len(seq)
    for i in range(len(seq)):
        for j in range(i):
            if seq[j] < seq[i] and dp[j] + 1 > dp[i]:
                dp[i] = dp[j] + 1
    return max(dp, default=0)


def max_crossing(arcs, enhanced: bool = False) -> int:
    """Size of the largest crossing among the arcs (0 for no arcs).

    Every arc family spanning a common point (enhanced) or gap (plain) with
    strictly increasing endpoints is a crossing, so it suffices to sweep
    candidate thresholds and take the longest strictly-increasing chain of
    (left, right) pairs among spanning arcs.

    >>> max_crossing([(1, 4), (2, 5), (3, 6)])
    3
    >>> max_crossing([(1, 3), (2, 5), (4, 7)])   # pairwise but not mutual
    2
    >>> max_crossing([(1, 3), (3, 5)]), max_crossing([(1, 3), (3, 5)], enhanced=True)
    (1, 2)
    """
    pairs = _pairs(arcs, allow_loops=enhanced)
    if not pairs:
        return 0
    best = 1
    for _, s in pairs:
        if enhanced:
            active = [p for p in pairs if p[0] <= s <= p[1]]
        else:
            g = s - 1
            active = [p for p in pairs if p[0] <= g < p[1]]
        if len(active) > best:
            best = max(best, _longest_increasing_pairs(active))
    return best


def max_nesting(arcs, enhanced: bool = False) -> int:
    """Size of the largest nesting among the arcs (0 for no arcs).

    Nestings are strict containment chains, which transitivity makes safe
    for a direct longest-chain scan.

    >>> max_nesting([(1, 6), (2, 5), (3, 4)])
    3
    >>> max_nesting([(1, 3), (2, 2)], enhanced=True)
    2
    """
    pairs = _pairs(arcs, allow_loops=enhanced)
    pairs.sort(key=lambda p: (p[0], -p[1]))
    dp = [1] * len(pairs)
    for i, (a, b) in enumerate(pairs):
        for j in range(i):
            aj, bj = pairs[j]
            if aj < a and b < bj and dp[j] + 1 > dp[i]:
                dp[i] = dp[j] + 1
    return max(dp, default=0)


def max_crossing_exhaustive(arcs, enhanced: bool = False) -> int:
    """Reference implementation checking every subset; for cross-checks."""
    pairs = _pairs(arcs, allow_loops=enhanced)
    return max(
        (len(sub) for sub in _subsets(pairs) if _is_crossing(sub, enhanced)), default=0
    )


def max_nesting_exhaustive(arcs, enhanced: bool = False) -> int:
    """Reference implementation checking every subset; for cross-checks."""
    pairs = _pairs(arcs, allow_loops=enhanced)
    return max((len(sub) for sub in _subsets(pairs) if _is_nesting(sub)), default=0)


def _subsets(pairs) -> Iterator[list[tuple[int, int]]]:
    for mask in range(1, 1 << len(pairs)):
        yield [p for i, p in enumerate(pairs) if mask >> i & 1]


def _is_crossing(sub, enhanced: bool) -> bool:
    sub = sorted(sub)
    lefts = [a for a, _ in sub]
    rights = [b for _, b in sub]
    if any(x >= y for x, y in zip(lefts, lefts[1:])):
        return False
    if any(x >= y for x, y in zip(rights, rights[1:])):
        return False
    if enhanced:
        return lefts[-1] <= rights[0]
    return lefts[-1] < rights[0]


def _is_nesting(sub) -> bool:
    sub = sorted(sub, key=lambda p: (p[0], -p[1]))
    lefts = [a for a, _ in sub]
    rights = [b for _, b in sub]
    if any(x >= y for x, y in zip(lefts, lefts[1:])):
        return False
    return all(x > y for x, y in zip(rights, rights[1:]))


def _colour_slices(obj) -> list[tuple[list[tuple[int, int]], bool]]:
    """Per-colour diagrams as (pairs, enhanced) entries, in colour order."""
    if isinstance(obj, (Permutation, ColouredPermutation)):
        if isinstance(obj, Permutation):
            obj = ColouredPermutation(obj)
        upper: list[list[tuple[int, int]]] = [[] for _ in range(obj.num_colours)]
        lower: list[list[tuple[int, int]]] = [[] for _ in range(obj.num_colours)]
        for i, out in enumerate(obj.word, start=1):
            c = obj.colours[i - 1] - 1
            if out >= i:
                upper[c].append((i, out))
            else:
                lower[c].append((out, i))
        slices: list[tuple[list[tuple[int, int]], bool]] = []
        for c in range(obj.num_colours):
            slices.append((upper[c], True))
            slices.append((lower[c], False))
        return slices
    if isinstance(obj, ColouredSetPartition):
        per: list[list[tuple[int, int]]] = [[] for _ in range(obj.num_colours)]
        for (a, b), c in zip(obj._pairs(), obj.arc_colours):
            per[c - 1].append((a, b))
        return [(pairs, False) for pairs in per]
    raise TypeError("expected a coloured permutation or set partition")


def cr(obj) -> int:
    """Largest monochromatic crossing anywhere in the object.

    >>> cr(ColouredPermutation.from_text("4 5 3 6 2 1 / 1 2 1 2 2 2"))
    2
    >>> cr(ColouredPermutation((1, 2, 3)))
    1
    """
    return max(
        (max_crossing(pairs, enhanced) for pairs, enhanced in _colour_slices(obj)),
        default=0,
    )


def ne(obj) -> int:
    """Largest monochromatic nesting anywhere in the object.

    >>> ne(ColouredPermutation.from_text("4 5 3 6 2 1 / 1 2 1 2 2 2"))
    2
    """
    return max(
        (max_nesting(pairs, enhanced) for pairs, enhanced in _colour_slices(obj)),
        default=0,
    )


def cr_ne(obj) -> tuple[int, int]:
    """Both statistics in one slicing pass."""
    slices = _colour_slices(obj)
    c = max((max_crossing(p, e) for p, e in slices), default=0)
    n = max((max_nesting(p, e) for p, e in slices), default=0)
    return (c, n)


def is_ncn(obj, j: int, k: int) -> bool:
    """True when the object has no j-crossing and no k-nesting.

    >>> is_ncn(ColouredPermutation((2, 3, 1)), 2, 2)
    False
    >>> is_ncn(ColouredPermutation((3, 1, 2)), 2, 2)
    True
    """
    if j < 2 or k < 2:
        raise ValueError("bounds j, k must be at least 2")
    for pairs, enhanced in _colour_slices(obj):
        if max_crossing(pairs, enhanced) >= j:
            return False
        if max_nesting(pairs, enhanced) >= k:
            return False
    return True


class JointHistogram:
    """Counts of objects by their (cr, ne) value pair."""

    __slots__ = ("counts",)

    def __init__(self, counts=None):
        self.counts: dict[tuple[int, int], int] = dict(counts or {})

    def add(self, key: tuple[int, int], amount: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + amount

    def total(self) -> int:
        return sum(self.counts.values())

    def is_symmetric(self) -> bool:
        """Whether swapping cr and ne leaves every count unchanged."""
        return all(
            count == self.counts.get((n, c), 0)
            for (c, n), count in self.counts.items()
        )

    def rows(self) -> list[tuple[int, int, int]]:
        return [(c, n, self.counts[(c, n)]) for c, n in sorted(self.counts)]

    def __eq__(self, other) -> bool:
        return isinstance(other, JointHistogram) and self.counts == other.counts

    def __repr__(self) -> str:
        return "JointHistogram(%r)" % (self.counts,)
