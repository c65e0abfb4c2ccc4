"""Actions on tensor powers of the defining spaces.

V has basis e_1..e_n; U adjoins e_0.  A tensor index is a plain tuple
of k digits, ordered mixed-radix with the first digit most significant,
and its position in that order is the matrix coordinate.  Every matrix
built here is {0,1}-entried: a diagram either transports a basis vector
to another one (or a sum of them, for composition elements with free
output blocks) or kills it.

Diagrams act through match sets: the set of output indices compatible
with a given input index under the block constraints.  The plain,
deformed-hat and deformed-tilde variants differ only in which block
values are admissible (zero allowed or not, distinctness across
blocks).  Diagram actions are right actions, so the matrix of a
product composes in reverse order; partial injections act on the left
with the usual order.
"""

import itertools

from .diagrams import (
    HatElement,
    PartialInjection,
    SetPartition,
    SizeGuardError,
    is_partial_dual_element,
)
from .exact_linalg import ExactMatrix

TensorIndex = tuple[int, ...]

DIMENSION_LIMIT = 4096


class ActionSpace:
    """Tensor power of V (digits 1..n) or U (digits 0..n)."""

    __slots__ = ("kind", "n", "k", "low", "dimension")

    def __init__(self, kind: str, n: int, k: int):
        if kind not in ("V", "U"):
            raise ValueError("kind must be 'V' or 'U'")
        if n < 1 or k < 1:
            raise ValueError("n and k must be positive")
        base = n if kind == "V" else n + 1
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "low", 1 if kind == "V" else 0)
        object.__setattr__(self, "dimension", base**k)

    def __setattr__(self, name, value):
        raise AttributeError("ActionSpace is immutable")

    def guard(self, unguarded: bool = False):
        if self.dimension > DIMENSION_LIMIT and not unguarded:
            raise SizeGuardError(
                f"action space dimension {self.dimension} exceeds {DIMENSION_LIMIT}"
            )
        return self

    def indices(self):
        """All tensor indices in ordinal (most-significant-first) order."""
        return itertools.product(range(self.low, self.n + 1), repeat=self.k)

    def ordinal(self, index: TensorIndex) -> int:
        base = self.n + 1 - self.low
        o = 0
        for digit in index:
            if not self.low <= digit <= self.n:
                raise ValueError(f"digit {digit} outside {self.low}..{self.n}")
            o = o * base + (digit - self.low)
        return o

    def index_at(self, ordinal: int) -> TensorIndex:
        base = self.n + 1 - self.low
        digits = []
        for _ in range(self.k):
            ordinal, d = divmod(ordinal, base)
            digits.append(d + self.low)
        return tuple(reversed(digits))


def match_set_c(alpha: SetPartition, i: TensorIndex, n: int) -> set:
    """Output indices compatible with input i under a partition of all
    2k points: each block carries one digit shared by all its input
    positions and imposed on all its output positions; blocks with no
    input position range over every digit 1..n."""
    alpha = alpha.completed()
    k = alpha.k
    out = [0] * k
    free = []
    for block in alpha.blocks:
        ins = alpha.in_part(block)
        outs = alpha.out_part(block)
        if ins:
            v = i[ins[0] - 1]
            if any(i[a - 1] != v for a in ins[1:]):
                return set()
            for b in outs:
                out[b - 1] = v
        elif outs:
            free.append(outs)
    if not free:
        return {tuple(out)}
    results = set()
    for assignment in itertools.product(range(1, n + 1), repeat=len(free)):
        filled = list(out)
        for outs, v in zip(free, assignment):
            for b in outs:
                filled[b - 1] = v
        results.add(tuple(filled))
    return results


def _block_values(alpha: SetPartition, i: TensorIndex):
    """Per-block digit forced by the input positions, or None on clash;
    also the input positions left uncovered."""
    values = []
    for block in alpha.blocks:
        ins = alpha.in_part(block)
        v = i[ins[0] - 1]
        if any(i[a - 1] != v for a in ins[1:]):
            return None
        values.append(v)
    return values


def _uncovered_inputs_zero(alpha: SetPartition, i: TensorIndex) -> bool:
    covered = {p.index for block in alpha.blocks for p in block if not p.primed}
    return all(
        i[a - 1] == 0 for a in range(1, alpha.k + 1) if a not in covered
    )


def _assemble_output(alpha: SetPartition, values) -> TensorIndex:
    out = [0] * alpha.k
    for block, v in zip(alpha.blocks, values):
        for b in alpha.out_part(block):
            out[b - 1] = v
    return tuple(out)


def match_set_partial(alpha: SetPartition, i: TensorIndex, n: int) -> set:
    """Plain U-action match set of a partial dual element: block digits
    may be anything (zero included), uncovered positions must read zero.
    At most one output index survives."""
    if not is_partial_dual_element(alpha):
        raise ValueError("match_set_partial needs a partial dual element")
    values = _block_values(alpha, i)
    if values is None or not _uncovered_inputs_zero(alpha, i):
        return set()
    return {_assemble_output(alpha, values)}


def match_set_hat(a: HatElement, i: TensorIndex, n: int) -> set:
    """Deformed match set: the adjoined zero matches nothing; block
    digits must be non-zero and pairwise distinct."""
    if a.is_zero:
        return set()
    alpha = a.diagram
    values = _block_values(alpha, i)
    if values is None or not _uncovered_inputs_zero(alpha, i):
        return set()
    if 0 in values or len(set(values)) != len(values):
        return set()
    return {_assemble_output(alpha, values)}


def match_set_tilde(alpha: SetPartition, i: TensorIndex, n: int) -> set:
    """Tilde match set: zero digits allowed on blocks, distinctness
    enforced only among the non-zero block digits."""
    if not is_partial_dual_element(alpha):
        raise ValueError("match_set_tilde needs a partial dual element")
    values = _block_values(alpha, i)
    if values is None or not _uncovered_inputs_zero(alpha, i):
        return set()
    nonzero = [v for v in values if v]
    if len(set(nonzero)) != len(nonzero):
        return set()
    return {_assemble_output(alpha, values)}


def _matrix_from_match(space: ActionSpace, match) -> ExactMatrix:
    entries = {}
    for col, i in enumerate(space.indices()):
        for l in match(i):
            entries[(space.ordinal(l), col)] = 1
    return ExactMatrix(space.dimension, space.dimension, entries)


def action_matrix_V(
    alpha: SetPartition, space: ActionSpace, unguarded: bool = False
) -> ExactMatrix:
    """Matrix of a composition/dual element on V^k (columns = inputs)."""
    if space.kind != "V":
        raise ValueError("action_matrix_V needs a V space")
    if alpha.k != space.k:
        raise ValueError("diagram size disagrees with the space")
    space.guard(unguarded)
    return _matrix_from_match(space, lambda i: match_set_c(alpha, i, space.n))


def rook_action_matrix(
    pi: PartialInjection, space: ActionSpace, unguarded: bool = False
) -> ExactMatrix:
    """Entrywise action of a partial injection on V^k or U^k: digits map
    through pi (0 is fixed on U); any undefined digit kills the vector."""
    if pi.n != space.n:
        raise ValueError("injection size disagrees with the space")
    space.guard(unguarded)

    def match(i):
        out = []
        for digit in i:
            if digit == 0:
                out.append(0)
                continue
            t = pi.targets[digit - 1]
            if t is None:
                return set()
            out.append(t)
        return {tuple(out)}

    return _matrix_from_match(space, match)


def action_matrix_U(
    element, space: ActionSpace, variant: str = "plain", unguarded: bool = False
) -> ExactMatrix:
    """Matrix of a partial dual element (or hat element) on U^k."""
    if space.kind != "U":
        raise ValueError("action_matrix_U needs a U space")
    space.guard(unguarded)
    if variant == "plain":
        if element.k != space.k:
            raise ValueError("diagram size disagrees with the space")
        return _matrix_from_match(
            space, lambda i: match_set_partial(element, i, space.n)
        )
    if variant == "hat":
        hat = element if isinstance(element, HatElement) else HatElement.wrap(element)
        if hat.k != space.k:
            raise ValueError("diagram size disagrees with the space")
        return _matrix_from_match(space, lambda i: match_set_hat(hat, i, space.n))
    if variant == "tilde":
        if element.k != space.k:
            raise ValueError("diagram size disagrees with the space")
        return _matrix_from_match(
            space, lambda i: match_set_tilde(element, i, space.n)
        )
    raise ValueError(f"unknown variant {variant!r}")
