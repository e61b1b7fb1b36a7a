"""Brute-force enumeration of coloured diagrams, used as ground truth.

The enumeration order is deterministic and documented: permutations come
from `itertools.permutations` (lexicographic one-line words) with colour
words counting up in base r (last position fastest); set partitions follow
lexicographic restricted-growth strings, with arc colour words counting up
the same way over the arcs sorted by left endpoint.

Every spec carries bound and refinement filters, all optional:

* j, k restrict to objects with cr < j and ne < k;
* openers/closers keep only objects whose opener set (and closer set) is
  exactly the given vertex set — for permutations these are the strict
  opener/closer vertices, for set partitions the arc start/end vertex sets.

Workloads are estimated before a single object is generated: n! * r^n for
permutations, sum over block counts of S(n, b) * r^(n-b) for set
partitions.  Estimates above the cap abort with CapExceeded rather than
sampling, so a passing comparison always means the whole space was
checked.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import permutations as _lex_permutations
from itertools import product
from multiprocessing import Pool
from typing import Iterator, Optional

from .diagrams import (
    ColouredPermutation,
    ColouredSetPartition,
    JointHistogram,
    arc_end_vertices,
    arc_start_vertices,
    closers,
    cr_ne,
    is_ncn,
    openers,
)
from .errors import CapExceeded

DEFAULT_MAX_OBJECTS = 10_000_000


@dataclass(frozen=True)
class EnumSpec:
    """What to enumerate and which filters to apply."""

    family: str
    n: int
    colours: int = 1
    j: Optional[int] = None
    k: Optional[int] = None
    openers: Optional[frozenset[int]] = None
    closers: Optional[frozenset[int]] = None
    max_objects: Optional[int] = None

    def __post_init__(self):
        if self.family not in ("setpartition", "permutation"):
            raise ValueError("family must be 'setpartition' or 'permutation'")
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.colours < 1:
            raise ValueError("need at least one colour")
        for bound in (self.j, self.k):
            if bound is not None and bound < 2:
                raise ValueError("bounds j, k must be at least 2")
        if self.openers is not None:
            object.__setattr__(self, "openers", frozenset(self.openers))
        if self.closers is not None:
            object.__setattr__(self, "closers", frozenset(self.closers))


def workload(spec: EnumSpec) -> int:
    """Exact number of raw objects the enumeration would visit."""
    n, r = spec.n, spec.colours
    if spec.family == "permutation":
        total = 1
        for i in range(2, n + 1):
            total *= i
        return total * r**n
    stirling = [1] + [0] * n  # S(0, b)
    for _ in range(n):
        nxt = [0] * (n + 1)
        for b in range(n):
            if stirling[b]:
                nxt[b + 1] += stirling[b]
                nxt[b] += stirling[b] * b
        stirling = nxt  # S(m+1, b) = S(m, b-1) + b*S(m, b)
    return sum(stirling[b] * r ** (n - b) for b in range(n + 1))


def _check_cap(spec: EnumSpec) -> None:
    cap = DEFAULT_MAX_OBJECTS if spec.max_objects is None else spec.max_objects
    need = workload(spec)
    if need > cap:
        raise CapExceeded(
            "enumeration needs %d objects (cap %d); refusing to sample" % (need, cap)
        )


def _admits(spec: EnumSpec, obj) -> bool:
    if spec.j is not None or spec.k is not None:
        c, n = cr_ne(obj)
        if spec.j is not None and c >= spec.j:
            return False
        if spec.k is not None and n >= spec.k:
            return False
    if spec.openers is not None or spec.closers is not None:
        if spec.family == "permutation":
            ovs, cvs = openers(obj), closers(obj)
        else:
            arcs = obj.arcs()
            ovs, cvs = arc_start_vertices(arcs), arc_end_vertices(arcs)
        if spec.openers is not None and ovs != spec.openers:
            return False
        if spec.closers is not None and cvs != spec.closers:
            return False
    return True


def _rgs_blocks(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Set partitions of [n] via restricted growth strings, lexicographic."""
    if n == 0:
        yield ()
        return
    rgs = [0] * n
    while True:
        nblocks = max(rgs) + 1
        blocks: list[list[int]] = [[] for _ in range(nblocks)]
        for v, b in enumerate(rgs, start=1):
            blocks[b].append(v)
        yield tuple(tuple(b) for b in blocks)
        i = n - 1
        while i > 0:
            if rgs[i] <= max(rgs[:i]):
                rgs[i] += 1
                for jdx in range(i + 1, n):
                    rgs[jdx] = 0
                break
            i -= 1
        else:
            return


def enumerate_objects(spec: EnumSpec) -> Iterator:
    """Stream the admissible objects in the documented order."""
    _check_cap(spec)
    yield from _enumerate_unguarded(spec, first=None)


def _enumerate_unguarded(spec: EnumSpec, first: Optional[int]) -> Iterator:
    n, r = spec.n, spec.colours
    if spec.family == "permutation":
        if first is None:
            words = _lex_permutations(range(1, n + 1))
        else:
            rest = [v for v in range(1, n + 1) if v != first]
            words = ((first,) + tail for tail in _lex_permutations(rest))
        for word in words:
            for cols in product(range(1, r + 1), repeat=n):
                obj = ColouredPermutation(word, cols)
                if _admits(spec, obj):
                    yield obj
        return
    for blocks in _rgs_blocks(n):
        narcs = sum(len(b) - 1 for b in blocks)
        for cols in product(range(1, r + 1), repeat=narcs):
            obj = ColouredSetPartition(blocks, cols)
            if _admits(spec, obj):
                yield obj


def count(spec: EnumSpec, threads: int = 1) -> int:
    """Number of admissible objects; may fan permutations out to workers."""
    _check_cap(spec)
    if threads > 1 and spec.family == "permutation" and spec.n > 1:
        with Pool(processes=threads) as pool:
            chunks = pool.map(
                _count_chunk, [(spec, v) for v in range(1, spec.n + 1)]
            )
        return sum(chunks)
    return sum(1 for _ in _enumerate_unguarded(spec, first=None))


def _count_chunk(args) -> int:
    spec, first = args
    return sum(1 for _ in _enumerate_unguarded(spec, first=first))


def joint_histogram(spec: EnumSpec) -> JointHistogram:
    """Counts of admissible objects by (cr, ne) pair."""
    hist = JointHistogram()
    for obj in enumerate_objects(spec):
        hist.add(cr_ne(obj))
    return hist


def refined_count(spec: EnumSpec, threads: int = 1) -> int:
    """Count with the opener/closer refinement; the sets must be given."""
    if spec.openers is None or spec.closers is None:
        raise ValueError("refined_count needs both openers and closers")
    return count(spec, threads=threads)


def permutation_colouring_counts(
    n: int, colours: int, j: int, k: int, max_objects: Optional[int] = None
) -> dict[tuple[int, ...], int]:
    """For each permutation word of [n], how many of its colourings pass
    the (j, k) bounds."""
    spec = EnumSpec(
        family="permutation", n=n, colours=colours, j=j, k=k, max_objects=max_objects
    )
    _check_cap(spec)
    out: dict[tuple[int, ...], int] = {}
    for obj in _enumerate_unguarded(spec, first=None):
        out[obj.word] = out.get(obj.word, 0) + 1
    return out
