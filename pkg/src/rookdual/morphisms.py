"""Change-of-basis maps between the plain and deformed diagram algebras.

Two triangular linear maps on the span of partial dual elements carry
the plain product and the tilde product onto the star product of the
zero-adjoined deformation:

* the coarsening sum sends a diagram to the sum of everything above it
  in the natural order (all diagrams obtained by merging blocks and
  dropping blocks);
* the block subset sum sends a diagram to the sum over sub-collections
  of its blocks.

Both are unitriangular, hence invertible over the integers.  The
inverse of the coarsening sum has a closed form: the Moebius function
of the merge-and-drop order, a product of partition-lattice factors
(-1)^(m-1) (m-1)! over merged groups times (-1)^D D! for D dropped
blocks.  A generic triangular solve is kept alongside as an
independent route to the same coefficients.
"""

import itertools
import math
import random
from dataclasses import dataclass

from .diagrams import (
    HatElement,
    SetPartition,
    _set_partitions,
    block_union_leq,
    canonicalize,
    enumerate_pistar,
)
from .exact_linalg import AlgebraElement
from .semigroups import bullet_multiply, multiply_pistar, star_multiply
from .tensor_actions import (
    ActionSpace,
    action_matrix_U,
    match_set_hat,
    match_set_partial,
)


def _pistar_carrier(k: int) -> str:
    return f"pistar[{k}]"


def _hat_carrier(k: int) -> str:
    return f"hat[{k}]"


def _tilde_carrier(k: int) -> str:
    return f"tilde[{k}]"


def natural_upper_set(alpha: SetPartition) -> list:
    """Every diagram whose blocks are unions of alpha's blocks, i.e. the
    up-set of alpha in the natural order: merge any groups of blocks,
    drop any others.  Includes alpha itself and the empty diagram."""
    atoms = alpha.blocks
    out = []
    for r in range(len(atoms) + 1):
        for subset in itertools.combinations(range(len(atoms)), r):
            for grouping in _set_partitions(subset):
                blocks = [
                    tuple(p for i in group for p in atoms[i]) for group in grouping
                ]
                out.append(canonicalize(blocks, alpha.k))
    return out


def mobius_merge_drop(alpha: SetPartition, beta: SetPartition) -> int:
    """Moebius function of the natural order between alpha and a diagram
    above it: product over beta's blocks of (-1)^(m-1)(m-1)! where m
    counts the alpha-blocks merged into that block, times (-1)^D D! for
    the D alpha-blocks beta drops."""
    if not block_union_leq(alpha, beta):
        raise ValueError("beta is not above alpha in the natural order")
    owner = alpha.block_of()
    used = 0
    value = 1
    for block in beta.blocks:
        m = len({owner[p] for p in block})
        used += m
        value *= (-1) ** (m - 1) * math.factorial(m - 1)
    dropped = len(alpha.blocks) - used
    return value * (-1) ** dropped * math.factorial(dropped)


def coarsening_sum(alpha: SetPartition) -> AlgebraElement:
    """The unitriangular map carrying the plain product to star."""
    return AlgebraElement(
        _hat_carrier(alpha.k), {beta: 1 for beta in natural_upper_set(alpha)}
    )


def coarsening_sum_inverse(alpha: SetPartition) -> AlgebraElement:
    """Closed-form inverse via the merge-and-drop Moebius function."""
    return AlgebraElement(
        _pistar_carrier(alpha.k),
        {beta: mobius_merge_drop(alpha, beta) for beta in natural_upper_set(alpha)},
    )


def coarsening_sum_inverse_by_solve(alpha: SetPartition) -> AlgebraElement:
    """Inverse computed by the generic triangular recursion instead of
    the closed form; the two must agree on every element."""
    carrier = _pistar_carrier(alpha.k)
    cache: dict = {}

    def solve(gamma: SetPartition) -> AlgebraElement:
        hit = cache.get(gamma)
        if hit is not None:
            return hit
        total = AlgebraElement.basis(carrier, gamma)
        for beta in natural_upper_set(gamma):
            if beta != gamma:
                total = total - solve(beta)
        cache[gamma] = total
        return total

    return solve(alpha)


def block_subset_sum(alpha: SetPartition) -> AlgebraElement:
    """The unitriangular map carrying the tilde product to star: sum
    over all sub-collections of alpha's blocks."""
    terms = {}
    atoms = alpha.blocks
    for r in range(len(atoms) + 1):
        for subset in itertools.combinations(atoms, r):
            terms[canonicalize(subset, alpha.k)] = 1
    return AlgebraElement(_hat_carrier(alpha.k), terms)


def block_subset_sum_inverse(alpha: SetPartition) -> AlgebraElement:
    """Inverse of the block subset sum: alternating signs by dropped
    block count (Moebius function of the Boolean lattice)."""
    terms = {}
    atoms = alpha.blocks
    for r in range(len(atoms) + 1):
        for subset in itertools.combinations(atoms, r):
            terms[canonicalize(subset, alpha.k)] = (-1) ** (len(atoms) - r)
    return AlgebraElement(_tilde_carrier(alpha.k), terms)


def extend_linearly(func, x: AlgebraElement) -> AlgebraElement:
    """Apply an element-to-algebra map to every term of x."""
    total = None
    for element, coeff in x.terms.items():
        piece = coeff * func(element)
        total = piece if total is None else total + piece
    if total is None:
        raise ValueError("cannot extend over the zero element without a carrier")
    return total


def star_product(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear star product on spans of diagrams; products that hit the
    adjoined zero vanish (the contracted algebra)."""
    k = _carrier_k(x, y)
    out: dict = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            p = star_multiply(HatElement.wrap(a), HatElement.wrap(b))
            if p.is_zero:
                continue
            out[p.diagram] = out.get(p.diagram, 0) + ca * cb
    return AlgebraElement(x.carrier, out)


def pistar_product(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    _carrier_k(x, y)
    out: dict = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            p = multiply_pistar(a, b)
            out[p] = out.get(p, 0) + ca * cb
    return AlgebraElement(x.carrier, out)


def bullet_product(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    _carrier_k(x, y)
    out: dict = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            p = bullet_multiply(a, b)
            out[p] = out.get(p, 0) + ca * cb
    return AlgebraElement(x.carrier, out)


def _carrier_k(x: AlgebraElement, y: AlgebraElement) -> int:
    if x.carrier != y.carrier:
        raise ValueError("carriers disagree")
    return int(x.carrier.rsplit("[", 1)[1].rstrip("]"))


@dataclass(frozen=True)
class MorphismReport:
    k: int
    map_name: str
    pairs_checked: int
    homomorphism_ok: bool
    inverse_ok: bool

    def to_json_dict(self):
        return {
            "k": self.k,
            "map_name": self.map_name,
            "pairs_checked": self.pairs_checked,
            "homomorphism_ok": self.homomorphism_ok,
            "inverse_ok": self.inverse_ok,
        }


def morphism_report(
    map_name: str, k: int, sample_pairs: int | None = None, seed: int = 2024
) -> MorphismReport:
    """Check one change-of-basis map end to end.

    ``map_name`` is ``coarsening_sum`` (plain product to star) or
    ``block_subset_sum`` (tilde product to star).  All element pairs are
    checked when ``sample_pairs`` is None; otherwise that many pairs are
    drawn with a fixed seed.  ``inverse_ok`` also requires the two
    inverse routes of the coarsening sum to agree."""
    elements = enumerate_pistar(k)
    if map_name == "coarsening_sum":
        forward, multiply = coarsening_sum, multiply_pistar
    elif map_name == "block_subset_sum":
        forward, multiply = block_subset_sum, bullet_multiply
    else:
        raise ValueError(f"unknown map {map_name!r}")

    images = {alpha: forward(alpha) for alpha in elements}
    star_cache: dict = {}

    def cached_star(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        out: dict = {}
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                key = (a, b)
                p = star_cache.get(key)
                if p is None:
                    p = star_multiply(HatElement.wrap(a), HatElement.wrap(b))
                    star_cache[key] = p
                if p.is_zero:
                    continue
                out[p.diagram] = out.get(p.diagram, 0) + ca * cb
        return AlgebraElement(x.carrier, out)

    if sample_pairs is None:
        pairs = [(a, b) for a in elements for b in elements]
    else:
        rng = random.Random(seed)
        pairs = [
            (rng.choice(elements), rng.choice(elements)) for _ in range(sample_pairs)
        ]

    hom_ok = True
    for a, b in pairs:
        lhs = forward(multiply(a, b))
        rhs = cached_star(images[a], images[b])
        if lhs != rhs:
            hom_ok = False
            break

    inverse_ok = True
    for alpha in elements:
        if map_name == "coarsening_sum":
            inv = coarsening_sum_inverse(alpha)
            if inv != coarsening_sum_inverse_by_solve(alpha):
                inverse_ok = False
                break
            roundtrip = extend_linearly(coarsening_sum, inv)
        else:
            inv = block_subset_sum_inverse(alpha)
            roundtrip = extend_linearly(block_subset_sum, inv)
        if roundtrip != AlgebraElement.basis(_hat_carrier(k), alpha):
            inverse_ok = False
            break

    return MorphismReport(
        k=k,
        map_name=map_name,
        pairs_checked=len(pairs),
        homomorphism_ok=hom_ok,
        inverse_ok=inverse_ok,
    )


def verify_hat_consistency(n: int, k: int) -> MorphismReport:
    """Tie the plain and deformed U-actions together, three ways.

    For every partial dual element alpha and every input index: (a) if
    the plain action kills the vector, so does the deformed action of
    everything above alpha; (b) if the plain action keeps it, exactly
    one diagram above alpha keeps it under the deformed action.  And
    (c) the deformed matrix of alpha equals the plain matrix of the
    inverse coarsening sum of alpha, extended linearly."""
    space = ActionSpace("U", n, k)
    elements = enumerate_pistar(k)
    pairs = 0
    zero_ok = True
    unique_ok = True
    for alpha in elements:
        uppers = natural_upper_set(alpha)
        for i in space.indices():
            pairs += 1
            plain = match_set_partial(alpha, i, n)
            live = [
                beta
                for beta in uppers
                if match_set_hat(HatElement.wrap(beta), i, n)
            ]
            if not plain:
                if live:
                    zero_ok = False
            else:
                if len(live) != 1:
                    unique_ok = False
    matrix_ok = True
    for alpha in elements:
        hat = action_matrix_U(HatElement.wrap(alpha), space, variant="hat")
        inv = coarsening_sum_inverse(alpha)
        total = None
        for beta, coeff in inv.terms.items():
            piece = action_matrix_U(beta, space, variant="plain").scale(coeff)
            total = piece if total is None else total + piece
        if total != hat:
            matrix_ok = False
    return MorphismReport(
        k=k,
        map_name="hat_consistency",
        pairs_checked=pairs,
        homomorphism_ok=zero_ok and unique_ok and matrix_ok,
        inverse_ok=all(
            extend_linearly(coarsening_sum, coarsening_sum_inverse(alpha))
            == AlgebraElement.basis(_hat_carrier(k), alpha)
            for alpha in elements
        ),
    )


def verify_tilde_factorization(n: int, k: int) -> MorphismReport:
    """The tilde action of a diagram equals the deformed action of its
    block subset sum, as an exact matrix identity on U^k."""
    space = ActionSpace("U", n, k)
    elements = enumerate_pistar(k)
    ok = True
    for alpha in elements:
        tilde = action_matrix_U(alpha, space, variant="tilde")
        total = None
        for beta, coeff in block_subset_sum(alpha).terms.items():
            piece = action_matrix_U(
                HatElement.wrap(beta), space, variant="hat"
            ).scale(coeff)
            total = piece if total is None else total + piece
        if total != tilde:
            ok = False
    inverse_ok = all(
        extend_linearly(block_subset_sum, block_subset_sum_inverse(alpha))
        == AlgebraElement.basis(_hat_carrier(k), alpha)
        for alpha in elements
    )
    return MorphismReport(
        k=k,
        map_name="tilde_factorization",
        pairs_checked=len(elements),
        homomorphism_ok=ok,
        inverse_ok=inverse_ok,
    )
