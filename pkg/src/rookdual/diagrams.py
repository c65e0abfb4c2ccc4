"""Element types for the rook monoid and its dual diagram semigroups.

Two kinds of elements appear throughout the package.  A partial
injection on {1..n} is a rook-monoid element: an injective map defined
on a subset of the points.  A set partition of the 2k boundary points
1..k, 1'..k' (or of a subset of them) is a diagram: depending on which
blocks are allowed it encodes an element of the composition semigroup
on 2k points, of the dual symmetric inverse monoid, or of its partial
analogue.  All values here are immutable and canonically ordered, so
they hash, compare and print deterministically.
"""

import itertools
import math
from typing import Iterable, NamedTuple

ENUM_LIMIT_INJECTIONS = 6
ENUM_LIMIT_DUAL = 5
ENUM_LIMIT_PARTIAL_DUAL = 4


class SizeGuardError(ValueError):
    """Raised when an enumeration or a linear-algebra build would blow past
    the sizes this package is meant for.  Callers that know what they are
    doing can pass ``unguarded=True`` (CLI: ``--unsafe-no-guards``)."""


class BoundaryPoint(NamedTuple):
    """One of the 2k boundary points; ``primed`` selects the 1'..k' row.

    Tuple order (primed, index) gives the canonical point order: the
    unprimed row first, each row by ascending index.
    """

    primed: bool
    index: int

    def partner(self):
        """The mirror point on the other row."""
        return BoundaryPoint(not self.primed, self.index)

    def __str__(self):
        return f"{self.index}'" if self.primed else str(self.index)


def unprimed(i: int) -> BoundaryPoint:
    return BoundaryPoint(False, i)


def primed(i: int) -> BoundaryPoint:
    return BoundaryPoint(True, i)


class PartialInjection:
    """Injective partial map on {1..n}, stored as a target tuple.

    ``targets[d-1]`` is the image of d, or None when d is undefined.
    Text form lists the targets with ``-`` holes: ``[2,-,3,5,-]``.
    """

    __slots__ = ("n", "targets")

    def __init__(self, targets: Iterable, n: int | None = None):
        targets = tuple(targets)
        if n is None:
            n = len(targets)
        if n < 1 or len(targets) != n:
            raise ValueError(f"need exactly n={n} targets, got {len(targets)}")
        seen = set()
        for t in targets:
            if t is None:
                continue
            if not isinstance(t, int) or not 1 <= t <= n:
                raise ValueError(f"target {t!r} outside 1..{n}")
            if t in seen:
                raise ValueError(f"target {t} hit twice; map not injective")
            seen.add(t)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "targets", targets)

    def __setattr__(self, name, value):
        raise AttributeError("PartialInjection is immutable")

    @classmethod
    def identity(cls, n: int):
        return cls(range(1, n + 1))

    def __call__(self, d: int):
        if not 1 <= d <= self.n:
            raise ValueError(f"point {d} outside 1..{self.n}")
        return self.targets[d - 1]

    def domain(self) -> frozenset:
        return frozenset(d for d, t in enumerate(self.targets, 1) if t is not None)

    def image(self) -> frozenset:
        return frozenset(t for t in self.targets if t is not None)

    def rank(self) -> int:
        return sum(1 for t in self.targets if t is not None)

    def inverse(self):
        inv = [None] * self.n
        for d, t in enumerate(self.targets, 1):
            if t is not None:
                inv[t - 1] = d
        return PartialInjection(inv, self.n)

    def __mul__(self, other):
        """Right-to-left composition: (self * other)(d) = self(other(d))."""
        if not isinstance(other, PartialInjection):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("cannot compose maps on different point sets")
        out = []
        for t in other.targets:
            out.append(None if t is None else self.targets[t - 1])
        return PartialInjection(out, self.n)

    def __eq__(self, other):
        return (
            isinstance(other, PartialInjection)
            and self.n == other.n
            and self.targets == other.targets
        )

    def __hash__(self):
        return hash((PartialInjection, self.n, self.targets))

    def sort_key(self):
        return tuple(0 if t is None else t for t in self.targets)

    def __str__(self):
        return "[" + ",".join("-" if t is None else str(t) for t in self.targets) + "]"

    def __repr__(self):
        return f"PartialInjection({self})"


class SetPartition:
    """Canonical set partition of (a subset of) the 2k boundary points.

    Blocks are stored as tuples of points in canonical point order and
    the block list is ordered by least point, so equal partitions are
    identical objects structurally.  Use :func:`canonicalize` to build
    one from raw data with validation.
    """

    __slots__ = ("k", "blocks")

    def __init__(self, k: int, blocks):
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "blocks", blocks)

    def __setattr__(self, name, value):
        raise AttributeError("SetPartition is immutable")

    @classmethod
    def identity(cls, k: int):
        """The diagram pairing each i with i'."""
        return canonicalize([(unprimed(i), primed(i)) for i in range(1, k + 1)], k)

    @classmethod
    def empty(cls, k: int):
        return canonicalize([], k)

    def support(self) -> frozenset:
        return frozenset(p for block in self.blocks for p in block)

    def block_count(self) -> int:
        return len(self.blocks)

    def block_of(self) -> dict:
        """Map point -> index of its block."""
        return {p: i for i, block in enumerate(self.blocks) for p in block}

    def in_part(self, block) -> tuple:
        """Unprimed indices of a block, ascending."""
        return tuple(p.index for p in block if not p.primed)

    def out_part(self, block) -> tuple:
        """Primed indices of a block, ascending."""
        return tuple(p.index for p in block if p.primed)

    def completed(self):
        """Fill every uncovered point in as a singleton block (the
        embedding of partial diagrams into partitions of all 2k points)."""
        covered = self.support()
        extra = [
            (p,)
            for i in range(1, self.k + 1)
            for p in (unprimed(i), primed(i))
            if p not in covered
        ]
        if not extra:
            return self
        return canonicalize(list(self.blocks) + extra, self.k)

    def flip(self):
        """Exchange the rows (the inverse map in the dual monoids)."""
        return canonicalize(
            [tuple(p.partner() for p in block) for block in self.blocks], self.k
        )

    def __eq__(self, other):
        return (
            isinstance(other, SetPartition)
            and self.k == other.k
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((SetPartition, self.k, self.blocks))

    def sort_key(self):
        return (len(self.blocks), self.blocks)

    def __str__(self):
        if not self.blocks:
            return "{}"
        return "|".join(
            "{" + ",".join(str(p) for p in block) + "}" for block in self.blocks
        )

    def __repr__(self):
        return f"SetPartition({self})"


class HatElement:
    """Element of the zero-adjoined deformation: a diagram or the extra 0.

    The adjoined zero is not a diagram; it prints as ``0`` and absorbs
    every ``star_multiply`` product.
    """

    __slots__ = ("k", "diagram")

    def __init__(self, k: int, diagram: SetPartition | None):
        if diagram is not None:
            if diagram.k != k:
                raise ValueError("diagram size disagrees with k")
            if not is_partial_dual_element(diagram):
                raise ValueError("diagram is not a partial dual element")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "diagram", diagram)

    def __setattr__(self, name, value):
        raise AttributeError("HatElement is immutable")

    @classmethod
    def zero(cls, k: int):
        return cls(k, None)

    @classmethod
    def wrap(cls, diagram: SetPartition):
        return cls(diagram.k, diagram)

    @property
    def is_zero(self) -> bool:
        return self.diagram is None

    def __eq__(self, other):
        return (
            isinstance(other, HatElement)
            and self.k == other.k
            and self.diagram == other.diagram
        )

    def __hash__(self):
        return hash((HatElement, self.k, self.diagram))

    def __str__(self):
        return "0" if self.diagram is None else str(self.diagram)

    def __repr__(self):
        return f"HatElement({self})"


def canonicalize(blocks, k: int) -> SetPartition:
    """Validate raw blocks and produce the canonical SetPartition.

    Accepts any iterable of iterables of BoundaryPoints.  Rejects
    out-of-range points, duplicates (within or across blocks) and empty
    blocks; block presentation order is irrelevant.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    seen = set()
    canon = []
    for raw in blocks:
        block = tuple(sorted(raw))
        if not block:
            raise ValueError("empty block supplied")
        for p in block:
            if not isinstance(p, BoundaryPoint):
                raise ValueError(f"not a boundary point: {p!r}")
            if not 1 <= p.index <= k:
                raise ValueError(f"point {p} outside rows of size k={k}")
            if p in seen:
                raise ValueError(f"point {p} appears in two blocks")
            seen.add(p)
        canon.append(block)
    canon.sort()
    return SetPartition(k, tuple(canon))


def is_dual_element(p: SetPartition) -> bool:
    """True iff p covers all 2k points and every block meets both rows."""
    if len(p.support()) != 2 * p.k:
        return False
    return all(p.in_part(b) and p.out_part(b) for b in p.blocks)


def is_partial_dual_element(p: SetPartition) -> bool:
    """True iff every block meets both rows (coverage not required)."""
    return all(p.in_part(b) and p.out_part(b) for b in p.blocks)


def coarser_leq(alpha: SetPartition, beta: SetPartition) -> bool:
    """Merging order on equal supports: every block of beta is a union of
    blocks of alpha.  Partitions of different point sets never compare."""
    if alpha.k != beta.k:
        raise ValueError("cannot compare partitions with different k")
    if alpha.support() != beta.support():
        return False
    return block_union_leq(alpha, beta)


def block_union_leq(alpha: SetPartition, beta: SetPartition) -> bool:
    """True iff every block of beta is a union of blocks of alpha.

    Unlike :func:`coarser_leq` this allows beta to drop alpha-blocks
    entirely, which is how the deformation change-of-basis maps walk the
    semigroup's natural order.
    """
    if alpha.k != beta.k:
        raise ValueError("cannot compare partitions with different k")
    owner = alpha.block_of()
    for block in beta.blocks:
        used = set()
        for p in block:
            i = owner.get(p)
            if i is None:
                return False
            used.add(i)
        covered = sum(len(alpha.blocks[i]) for i in used)
        if covered != len(block):
            return False
    return True


def subblocks_leq(beta: SetPartition, alpha: SetPartition) -> bool:
    """True iff the blocks of beta form a sub-collection of alpha's."""
    if beta.k != alpha.k:
        raise ValueError("cannot compare partitions with different k")
    return set(beta.blocks) <= set(alpha.blocks)


def block_count_at_most(p: SetPartition, j: int) -> bool:
    """True iff the singleton completion of p has at most j blocks."""
    uncovered = 2 * p.k - len(p.support())
    return len(p.blocks) + uncovered <= j


def _set_partitions(items: tuple):
    """All set partitions of items, each a list of tuples, in a fixed
    recursive order (first element anchors the first block)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in _set_partitions(rest):
        yield [(first,)] + sub
        for i, block in enumerate(sub):
            yield sub[:i] + [(first,) + block] + sub[i + 1 :]


def _matched_partitions(left_points, right_points, k):
    """Partitions built from one partition of each side and a bijection
    between their blocks; the shared machinery of the dual enumerators."""
    out = []
    left_parts = list(_set_partitions(tuple(left_points)))
    right_parts = list(_set_partitions(tuple(right_points)))
    by_count: dict[int, list] = {}
    for q in right_parts:
        by_count.setdefault(len(q), []).append(q)
    for p in left_parts:
        for q in by_count.get(len(p), []):
            for perm in itertools.permutations(q):
                out.append(
                    canonicalize(
                        [a + b for a, b in zip(p, perm)],
                        k,
                    )
                )
    return out


def enumerate_is(n: int, unguarded: bool = False) -> list:
    """All partial injections on {1..n}, deterministically ordered."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n > ENUM_LIMIT_INJECTIONS and not unguarded:
        raise SizeGuardError(
            f"enumerate_is guard: n={n} exceeds {ENUM_LIMIT_INJECTIONS}"
        )
    points = list(range(1, n + 1))
    out = []
    for r in range(n + 1):
        for dom in itertools.combinations(points, r):
            for img in itertools.combinations(points, r):
                for perm in itertools.permutations(img):
                    targets = [None] * n
                    for d, t in zip(dom, perm):
                        targets[d - 1] = t
                    out.append(PartialInjection(targets, n))
    out.sort(key=PartialInjection.sort_key)
    return out


def enumerate_istar(k: int, unguarded: bool = False) -> list:
    """All dual elements: partitions of all 2k points, every block meeting
    both rows."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k > ENUM_LIMIT_DUAL and not unguarded:
        raise SizeGuardError(f"enumerate_istar guard: k={k} exceeds {ENUM_LIMIT_DUAL}")
    left = [unprimed(i) for i in range(1, k + 1)]
    right = [primed(i) for i in range(1, k + 1)]
    out = _matched_partitions(left, right, k)
    out.sort(key=SetPartition.sort_key)
    return out


def enumerate_pistar(k: int, unguarded: bool = False) -> list:
    """All partial dual elements: partitions of a subset of the 2k points,
    every block meeting both rows.  Includes the empty partition."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k > ENUM_LIMIT_PARTIAL_DUAL and not unguarded:
        raise SizeGuardError(
            f"enumerate_pistar guard: k={k} exceeds {ENUM_LIMIT_PARTIAL_DUAL}"
        )
    points = list(range(1, k + 1))
    out = []
    for ls in range(k + 1):
        for left_set in itertools.combinations(points, ls):
            left = [unprimed(i) for i in left_set]
            for rs in range(k + 1):
                for right_set in itertools.combinations(points, rs):
                    right = [primed(i) for i in right_set]
                    out.extend(_matched_partitions(left, right, k))
    out.sort(key=SetPartition.sort_key)
    return out


def count_is(n: int) -> int:
    """Closed-form size of the rook monoid on n points."""
    return sum(math.comb(n, r) ** 2 * math.factorial(r) for r in range(n + 1))


def count_istar(k: int) -> int:
    """Closed-form size of the dual symmetric inverse monoid."""
    return sum(_stirling2(k, m) ** 2 * math.factorial(m) for m in range(1, k + 1))


def _stirling2(n: int, m: int) -> int:
    if m == 0:
        return 1 if n == 0 else 0
    return sum(
        (-1) ** (m - j) * math.comb(m, j) * j**n for j in range(m + 1)
    ) // math.factorial(m)
