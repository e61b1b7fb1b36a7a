"""Sequences of partial standard tableaux encoding arc diagrams.

A partial standard Young tableau holds distinct positive labels, strictly
increasing along rows and down columns.  Walking an arc diagram left to
right and recording the tableau after every action produces a sequence of
shapes, all starting and ending empty; the flavour of the walk depends on
the diagram kind:

* semi-oscillating (one step per vertex, for partial matchings): an opener
  inserts the label of its future partner, a closer deletes its own label,
  an isolated vertex does nothing;
* vacillating (two half-steps per vertex, for plain diagrams): the first
  half-step deletes the vertex's own label if an arc ends here, the second
  inserts the partner label if an arc starts here — so shapes may shrink at
  odd steps and grow at even steps;
* hesitating (two half-steps per vertex, for enhanced diagrams): the first
  half-step inserts, the second deletes, which is what lets a loop at v
  insert and immediately remove its own label — shapes may grow at odd
  steps and shrink at even steps.

An oscillating flavour (every step adds or removes exactly one box) is
recognised by the validator but has no encoder here.

Insertion is ordinary row bumping.  Deletion removes the minimal label from
the top-left corner and closes the hole by jeu de taquin.  Both are
reversible from the shape difference alone, which is what `decode` uses:
a sequence of shapes of the right flavour determines the diagram with no
fillings required.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional


Shape = tuple[int, ...]
Rows = tuple[tuple[int, ...], ...]


class TableauKind(Enum):
    SEMI_OSCILLATING = "semioscillating"
    OSCILLATING = "oscillating"
    VACILLATING = "vacillating"
    HESITATING = "hesitating"


def is_partition_shape(shape) -> bool:
    """Weakly decreasing positive parts."""
    return all(p > 0 for p in shape) and all(
        a >= b for a, b in zip(shape, shape[1:])
    )


def conjugate(shape: Shape) -> Shape:
    """Transpose of a Young diagram.

    >>> conjugate((3, 1))
    (2, 1, 1)
    >>> conjugate(())
    ()
    """
    if not shape:
        return ()
    return tuple(
        sum(1 for p in shape if p > col) for col in range(shape[0])
    )


class PartialTableau:
    """An immutable partial standard Young tableau.

    >>> t = PartialTableau(((3, 5), (4,)))
    >>> t.shape
    (2, 1)
    >>> sorted(t.entries())
    [3, 4, 5]
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]] = ()):
        rows = tuple(tuple(row) for row in rows)
        for row in rows:
            if any(x >= y for x, y in zip(row, row[1:])):
                raise ValueError("rows must increase strictly")
            if any(x < 1 for x in row):
                raise ValueError("labels must be positive")
        if any(len(a) < len(b) for a, b in zip(rows, rows[1:])) or (
            rows and not rows[-1]
        ):
            raise ValueError("row lengths must decrease weakly and stay nonempty")
        for upper, lowerr in zip(rows, rows[1:]):
            if any(upper[i] >= lowerr[i] for i in range(len(lowerr))):
                raise ValueError("columns must increase strictly")
        flat = [x for row in rows for x in row]
        if len(set(flat)) != len(flat):
            raise ValueError("labels must be distinct")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("PartialTableau is immutable")

    @property
    def shape(self) -> Shape:
        return tuple(len(row) for row in self.rows)

    def entries(self) -> list[int]:
        return [x for row in self.rows for x in row]

    def __eq__(self, other) -> bool:
        return isinstance(other, PartialTableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(("PartialTableau", self.rows))

    def __repr__(self) -> str:
        return "PartialTableau(%r)" % (self.rows,)


# ---------------------------------------------------------------------------
# the four primitive moves, on mutable list-of-list rows


def _insert_rows(rows: list[list[int]], label: int) -> tuple[int, int]:
    """Row-insert `label`; return the cell the shape gained."""
    x = label
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return (r, 0)
        row = rows[r]
        pos = bisect_right(row, x)
        if pos == len(row):
            row.append(x)
            return (r, pos)
        x, row[pos] = row[pos], x
        r += 1


def _delete_min_rows(rows: list[list[int]]) -> tuple[int, int]:
    """Remove the minimal label at (0, 0), slide the hole out, return the
    vacated cell."""
    r, c = 0, 0
    while True:
        right = rows[r][c + 1] if c + 1 < len(rows[r]) else None
        below = rows[r + 1][c] if r + 1 < len(rows) and c < len(rows[r + 1]) else None
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            rows[r][c] = right
            c += 1
        else:
            rows[r][c] = below
            r += 1
    rows[r].pop()
    if not rows[r]:
        rows.pop()
    return (r, c)


def _uninsert_rows(rows: list[list[int]], cell: tuple[int, int]) -> int:
    """Undo an insertion that created `cell`; return the inserted label."""
    r, c = cell
    assert c == len(rows[r]) - 1, "can only uninsert from a row end"
    x = rows[r].pop()
    if not rows[r]:
        rows.pop()
    while r > 0:
        r -= 1
        row = rows[r]
        pos = bisect_right(row, x) - 1  # largest entry below x
        assert pos >= 0, "reverse bump found no smaller entry"
        x, row[pos] = row[pos], x
    return x


def _undelete_rows(rows: list[list[int]], cell: tuple[int, int], label: int) -> None:
    """Undo a minimal-label deletion that vacated `cell`, re-adding `label`."""
    r, c = cell
    if r == len(rows):
        rows.append([])
    assert c == len(rows[r]), "cell is not addable"
    rows[r].append(0)  # hole
    while (r, c) != (0, 0):
        above = rows[r - 1][c] if r > 0 else None
        left = rows[r][c - 1] if c > 0 else None
        if above is None or (left is not None and left > above):
            rows[r][c] = left
            c -= 1
        else:
            rows[r][c] = above
            r -= 1
    assert all(label < x for row in rows for x in row if x), (
        "re-inserted label must be the minimum"
    )
    rows[0][0] = label


def rsk_insert(t: PartialTableau, label: int) -> PartialTableau:
    """Row-insert a fresh label.

    >>> rsk_insert(PartialTableau(((3,),)), 4).rows
    ((3, 4),)
    >>> rsk_insert(PartialTableau(((4,),)), 3).rows
    ((3,), (4,))
    """
    if label in t.entries():
        raise ValueError("label %d already present" % label)
    if label < 1:
        raise ValueError("labels must be positive")
    rows = [list(row) for row in t.rows]
    _insert_rows(rows, label)
    return PartialTableau(rows)


def rsk_delete(t: PartialTableau, label: int) -> PartialTableau:
    """Delete `label`, which must be the minimal entry, at the corner.

    >>> rsk_delete(PartialTableau(((3,), (4,))), 3).rows
    ((4,),)
    >>> rsk_delete(PartialTableau(((3, 4),)), 4)
    Traceback (most recent call last):
        ...
    ValueError: label 4 is not the minimal entry
    """
    if not t.rows or t.rows[0][0] != label:
        raise ValueError("label %d is not the minimal entry" % label)
    rows = [list(row) for row in t.rows]
    _delete_min_rows(rows)
    return PartialTableau(rows)


# ---------------------------------------------------------------------------
# sequences


@dataclass(frozen=True)
class TableauSequence:
    """Shapes (and optionally fillings) visited while walking a diagram."""

    kind: TableauKind
    n: int
    shapes: tuple[Shape, ...]
    fillings: Optional[tuple[Rows, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "shapes", tuple(tuple(s) for s in self.shapes))
        if self.fillings is not None:
            object.__setattr__(
                self,
                "fillings",
                tuple(tuple(tuple(r) for r in f) for f in self.fillings),
            )

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "n": self.n,
            "shapes": [list(s) for s in self.shapes],
            "fillings": None
            if self.fillings is None
            else [[list(r) for r in f] for f in self.fillings],
        }


def _shape_step(prev: Shape, cur: Shape):
    """Classify one step: ('same', None), ('add', cell) or ('remove', cell)."""
    if prev == cur:
        return ("same", None)
    if sum(cur) == sum(prev) + 1:
        longer, shorter, tag = cur, prev, "add"
    elif sum(cur) == sum(prev) - 1:
        longer, shorter, tag = prev, cur, "remove"
    else:
        raise ValueError("consecutive shapes differ by more than one box")
    for r in range(len(longer)):
        s = shorter[r] if r < len(shorter) else 0
        if longer[r] != s:
            if longer[r] != s + 1 or longer[:r] != shorter[:r]:
                raise ValueError("consecutive shapes differ by more than one box")
            if shorter[r + 1 :] != longer[r + 1 :]:
                raise ValueError("consecutive shapes differ by more than one box")
            return (tag, (r, s))
    raise ValueError("shapes unexpectedly equal")


def validate_sequence(seq: TableauSequence) -> None:
    """Raise ValueError unless the shape sequence fits its declared kind."""
    shapes = seq.shapes
    if seq.n < 0:
        raise ValueError("n must be nonnegative")
    per_vertex = 1 if seq.kind in (TableauKind.SEMI_OSCILLATING, TableauKind.OSCILLATING) else 2
    if len(shapes) != per_vertex * seq.n + 1:
        raise ValueError(
            "expected %d shapes for %s on %d vertices, got %d"
            % (per_vertex * seq.n + 1, seq.kind.value, seq.n, len(shapes))
        )
    for s in shapes:
        if not is_partition_shape(s):
            raise ValueError("not a partition shape: %r" % (s,))
    if shapes[0] != () or shapes[-1] != ():
        raise ValueError("sequences must start and end empty")
    for i in range(1, len(shapes)):
        tag, _ = _shape_step(shapes[i - 1], shapes[i])
        if seq.kind is TableauKind.OSCILLATING and tag == "same":
            raise ValueError("oscillating steps must add or remove a box (step %d)" % i)
        elif seq.kind is TableauKind.VACILLATING:
            if i % 2 == 1 and tag == "add":
                raise ValueError("vacillating shapes may not grow at odd step %d" % i)
            if i % 2 == 0 and tag == "remove":
                raise ValueError("vacillating shapes may not shrink at even step %d" % i)
        elif seq.kind is TableauKind.HESITATING:
            if i % 2 == 1 and tag == "remove":
                raise ValueError("hesitating shapes may not shrink at odd step %d" % i)
            if i % 2 == 0 and tag == "add":
                raise ValueError("hesitating shapes may not grow at even step %d" % i)
    if seq.fillings is not None:
        if len(seq.fillings) != len(shapes):
            raise ValueError("need one filling per shape")
        for rows, shape in zip(seq.fillings, shapes):
            if PartialTableau(rows).shape != shape:
                raise ValueError("filling does not match its shape")


def _check_arcs(pairs, n, allow_loops: bool):
    starts: set[int] = set()
    ends: set[int] = set()
    cleaned = []
    for a, b in (tuple(p) for p in pairs):
        if not (1 <= a <= b <= n):
            raise ValueError("arc (%d, %d) out of range" % (a, b))
        if a == b and not allow_loops:
            raise ValueError("loops are not allowed here")
        if a in starts:
            raise ValueError("vertex %d starts two arcs" % a)
        if b in ends:
            raise ValueError("vertex %d ends two arcs" % b)
        starts.add(a)
        ends.add(b)
        cleaned.append((a, b))
    return cleaned


def encode_vacillating(pairs, n: int) -> TableauSequence:
    """Encode a loop-free arc list: delete at the first half-step of a
    vertex that closes an arc, insert at the second half-step of one that
    opens an arc.

    >>> seq = encode_vacillating([(1, 3), (3, 6), (4, 5)], 6)
    >>> seq.shapes[2], seq.shapes[8]
    ((1,), (1, 1))
    """
    arcs = _check_arcs(pairs, n, allow_loops=False)
    if any(a == b for a, b in arcs):
        raise ValueError("loops are not allowed here")
    opens = {a: b for a, b in arcs}
    closes = {b: a for a, b in arcs}
    rows: list[list[int]] = []
    shapes = [()]
    fills: list[Rows] = [()]

    def snap():
        shapes.append(tuple(len(r) for r in rows))
        fills.append(tuple(tuple(r) for r in rows))

    for v in range(1, n + 1):
        if v in closes:
            if not rows or rows[0][0] != v:
                raise ValueError("arc endpoints out of order at vertex %d" % v)
            _delete_min_rows(rows)
        snap()
        if v in opens:
            _insert_rows(rows, opens[v])
        snap()
    assert not rows
    return TableauSequence(TableauKind.VACILLATING, n, tuple(shapes), tuple(fills))


def encode_hesitating(pairs, n: int) -> TableauSequence:
    """Encode an enhanced arc list (loops welcome): insert at the first
    half-step of a vertex that opens an arc, delete at the second half-step
    of one that closes an arc; a loop does both.

    >>> seq = encode_hesitating([(1, 4), (2, 5), (3, 3), (4, 6)], 6)
    >>> seq.shapes[5], seq.shapes[7]
    ((2, 1), (3,))
    """
    arcs = _check_arcs(pairs, n, allow_loops=True)
    opens = {a: b for a, b in arcs}
    closes = {b: a for a, b in arcs}
    rows: list[list[int]] = []
    shapes = [()]
    fills: list[Rows] = [()]

    def snap():
        shapes.append(tuple(len(r) for r in rows))
        fills.append(tuple(tuple(r) for r in rows))

    for v in range(1, n + 1):
        if v in opens:
            _insert_rows(rows, opens[v])
        snap()
        if v in closes:
            if not rows or rows[0][0] != v:
                raise ValueError("arc endpoints out of order at vertex %d" % v)
            _delete_min_rows(rows)
        snap()
    assert not rows
    return TableauSequence(TableauKind.HESITATING, n, tuple(shapes), tuple(fills))


def encode_semioscillating(pairs, n: int) -> TableauSequence:
    """Encode a partial matching, one step per vertex.

    >>> seq = encode_semioscillating([(1, 6), (3, 7), (4, 5)], 7)
    >>> seq.shapes
    ((), (1,), (1,), (2,), (2, 1), (2,), (1,), ())
    """
    arcs = _check_arcs(pairs, n, allow_loops=False)
    touched: set[int] = set()
    for a, b in arcs:
        if a in touched or b in touched:
            raise ValueError("matching arcs must be vertex-disjoint")
        touched |= {a, b}
    opens = {a: b for a, b in arcs}
    closes = {b: a for a, b in arcs}
    rows: list[list[int]] = []
    shapes = [()]
    fills: list[Rows] = [()]
    for v in range(1, n + 1):
        if v in opens:
            _insert_rows(rows, opens[v])
        elif v in closes:
            if not rows or rows[0][0] != v:
                raise ValueError("arc endpoints out of order at vertex %d" % v)
            _delete_min_rows(rows)
        shapes.append(tuple(len(r) for r in rows))
        fills.append(tuple(tuple(r) for r in rows))
    assert not rows
    return TableauSequence(
        TableauKind.SEMI_OSCILLATING, n, tuple(shapes), tuple(fills)
    )


def decode(seq: TableauSequence) -> tuple[tuple[int, int], ...]:
    """Recover the arc list from a shape sequence, right to left.

    The backward pass maintains the tableau after each remaining prefix: a
    forward deletion is undone by reverse jeu de taquin (the vertex's own
    label re-enters at the top-left corner), a forward insertion is undone
    by reverse bumping, whose ejected label is the arc's right endpoint.

    >>> decode(encode_vacillating([(1, 3), (3, 6), (4, 5)], 6))
    ((1, 3), (3, 6), (4, 5))
    >>> decode(encode_hesitating([(2, 2)], 2))
    ((2, 2),)
    """
    validate_sequence(seq)
    if seq.kind is TableauKind.OSCILLATING:
        raise ValueError("no decoder is defined for the oscillating flavour")
    shapes = seq.shapes
    rows: list[list[int]] = []
    arcs: list[tuple[int, int]] = []
    semi = seq.kind is TableauKind.SEMI_OSCILLATING
    for i in range(len(shapes) - 1, 0, -1):
        if semi:
            v = i
        elif seq.kind is TableauKind.VACILLATING:
            v = (i + 1) // 2 if i % 2 == 1 else i // 2
        else:  # hesitating
            v = (i + 1) // 2 if i % 2 == 1 else i // 2
        tag, cell = _shape_step(shapes[i - 1], shapes[i])
        if tag == "same":
            continue
        if tag == "add":
            label = _uninsert_rows(rows, cell)
            if seq.kind is TableauKind.HESITATING:
                assert label >= v
            else:
                assert label > v
            arcs.append((v, label))
        else:
            _undelete_rows(rows, cell, v)
    assert not rows, "decode must drain the tableau"
    return tuple(sorted(arcs))


def transpose_sequence(seq: TableauSequence) -> TableauSequence:
    """Conjugate every shape; fillings are dropped (decode never needs them).

    >>> transpose_sequence(encode_semioscillating([(1, 2)], 2)).shapes
    ((), (1,), ())
    """
    return TableauSequence(
        seq.kind, seq.n, tuple(conjugate(s) for s in seq.shapes), None
    )
