"""Double-centralizer verification between the rook monoid and the dual
diagram semigroups.

On V^k the rook monoid acts on the left and the dual symmetric inverse
monoid acts on the right; on U^k the rook monoid pairs with the partial
dual elements under the plain action.  For each guarded size the
package checks, with exact arithmetic: that the two actions commute,
that each image algebra is the full commutant of the other, and that
the semigroup and algebra representations are faithful exactly when the
size predicates say they should be.
"""

from dataclasses import dataclass

from .diagrams import enumerate_is, enumerate_istar, enumerate_pistar
from .exact_linalg import RowSpace, commutant_basis, span_dimension
from .semigroups import is_generators
from .tensor_actions import ActionSpace, action_matrix_U, action_matrix_V, rook_action_matrix

SEMIGROUP_KINDS = ("is_on_V", "istar_on_V", "is_on_U", "pistar_on_U")
ALGEBRA_KINDS = ("contracted_is_on_V", "istar_on_V", "is_on_U", "pistar_on_U")

V_FULL_CELLS = tuple((n, k) for n in (1, 2, 3) for k in (1, 2, 3))
V_SPAN_CELLS = ((4, 2), (2, 4), (4, 4))
U_FULL_CELLS = tuple((n, k) for n in (1, 2) for k in (1, 2))
U_SPAN_CELLS = ((3, 2), (2, 3))


def _space(space: str, n: int, k: int) -> ActionSpace:
    return ActionSpace(space, n, k)


def left_generator_matrices(n: int, k: int, space: str, unguarded=False) -> list:
    """Rook-monoid generator matrices (with the identity) on the space."""
    sp = _space(space, n, k)
    gens = is_generators(n)
    from .diagrams import PartialInjection

    ident = PartialInjection.identity(n)
    if ident not in gens:
        gens = [ident] + gens
    return [rook_action_matrix(g, sp, unguarded) for g in gens]


def left_element_matrices(n: int, k: int, space: str, unguarded=False) -> list:
    sp = _space(space, n, k)
    return [rook_action_matrix(g, sp, unguarded) for g in enumerate_is(n)]


def right_element_matrices(n: int, k: int, space: str, unguarded=False) -> list:
    sp = _space(space, n, k)
    if space == "V":
        return [action_matrix_V(a, sp, unguarded) for a in enumerate_istar(k)]
    return [
        action_matrix_U(a, sp, variant="plain", unguarded=unguarded)
        for a in enumerate_pistar(k)
    ]


def verify_commutation(n: int, k: int, space: str, unguarded=False) -> bool:
    """Exact commutation of the two actions: every generator matrix of
    the rook monoid commutes with every diagram matrix."""
    lefts = left_generator_matrices(n, k, space, unguarded)
    rights = right_element_matrices(n, k, space, unguarded)
    return all(g * a == a * g for g in lefts for a in rights)


@dataclass(frozen=True)
class CentralizerData:
    dim_commutant_of_left: int
    dim_span_of_right: int
    dim_commutant_of_right: int
    dim_span_of_left: int
    right_matches_left_commutant: bool
    left_matches_right_commutant: bool

    @property
    def dims(self):
        return (
            self.dim_commutant_of_left,
            self.dim_span_of_right,
            self.dim_commutant_of_right,
            self.dim_span_of_left,
        )

    @property
    def ok(self) -> bool:
        return (
            self.dim_commutant_of_left == self.dim_span_of_right
            and self.dim_commutant_of_right == self.dim_span_of_left
            and self.right_matches_left_commutant
            and self.left_matches_right_commutant
        )


def _mutual_span_equal(basis_a: list, basis_b: list) -> bool:
    """Span equality via mutual membership, exactly."""
    space_a = RowSpace()
    for m in basis_a:
        space_a.add(m.vectorize())
    space_b = RowSpace()
    for m in basis_b:
        space_b.add(m.vectorize())
    return all(space_a.contains(m.vectorize()) for m in basis_b) and all(
        space_b.contains(m.vectorize()) for m in basis_a
    )


def centralizer_data(n: int, k: int, space: str, unguarded=False) -> CentralizerData:
    """Both directions of the double-centralizer check at one size."""
    sp = _space(space, n, k)
    d = sp.dimension
    left_gens = left_generator_matrices(n, k, space, unguarded)
    rights = right_element_matrices(n, k, space, unguarded)
    lefts = left_element_matrices(n, k, space, unguarded)

    comm_left = commutant_basis(left_gens, d, unguarded)
    comm_right = commutant_basis(rights, d, unguarded)

    return CentralizerData(
        dim_commutant_of_left=len(comm_left),
        dim_span_of_right=span_dimension(rights),
        dim_commutant_of_right=len(comm_right),
        dim_span_of_left=span_dimension(lefts),
        right_matches_left_commutant=_mutual_span_equal(comm_left, rights),
        left_matches_right_commutant=_mutual_span_equal(comm_right, lefts),
    )


def verify_centralizer(n: int, k: int, space: str, unguarded=False):
    """4-tuple of the left-direction check: commutant dimension,
    right span dimension, and the two span inclusions."""
    sp = _space(space, n, k)
    left_gens = left_generator_matrices(n, k, space, unguarded)
    rights = right_element_matrices(n, k, space, unguarded)
    comm = commutant_basis(left_gens, sp.dimension, unguarded)
    comm_space = RowSpace()
    for m in comm:
        comm_space.add(m.vectorize())
    right_space = RowSpace()
    for m in rights:
        right_space.add(m.vectorize())
    return (
        len(comm),
        right_space.dimension,
        all(comm_space.contains(m.vectorize()) for m in rights),
        all(right_space.contains(m.vectorize()) for m in comm),
    )


def verify_semigroup_faithfulness(n: int, k: int, which: str, unguarded=False) -> bool:
    """True iff element -> matrix is injective for the named action."""
    if which not in SEMIGROUP_KINDS:
        raise ValueError(f"unknown action {which!r}")
    if which == "is_on_V":
        mats = left_element_matrices(n, k, "V", unguarded)
    elif which == "is_on_U":
        mats = left_element_matrices(n, k, "U", unguarded)
    elif which == "istar_on_V":
        mats = right_element_matrices(n, k, "V", unguarded)
    else:
        mats = right_element_matrices(n, k, "U", unguarded)
    return len(set(mats)) == len(mats)


def verify_algebra_faithfulness(n: int, k: int, which: str, unguarded=False) -> bool:
    """True iff the element matrices are linearly independent (for the
    contracted rook algebra on V, the all-undefined element maps to the
    zero matrix and is excluded from the basis)."""
    if which not in ALGEBRA_KINDS:
        raise ValueError(f"unknown algebra {which!r}")
    if which == "contracted_is_on_V":
        sp = _space("V", n, k)
        elements = [e for e in enumerate_is(n) if e.rank() > 0]
        mats = [rook_action_matrix(e, sp, unguarded) for e in elements]
    elif which == "is_on_U":
        mats = left_element_matrices(n, k, "U", unguarded)
    elif which == "istar_on_V":
        mats = right_element_matrices(n, k, "V", unguarded)
    else:
        mats = right_element_matrices(n, k, "U", unguarded)
    return span_dimension(mats) == len(mats)


def predicted_semigroup_faithful(n: int, k: int, which: str) -> bool:
    if which in ("is_on_V", "is_on_U", "pistar_on_U"):
        return True
    return n >= 2 or k == 1  # istar_on_V


def predicted_algebra_faithful(n: int, k: int, which: str) -> bool:
    if which in ("contracted_is_on_V", "is_on_U"):
        return k >= n
    return k <= n  # istar_on_V, pistar_on_U


@dataclass(frozen=True)
class DualityReport:
    """Everything checked at one (n, k, space) cell, with predictions."""

    n: int
    k: int
    space: str
    commute_ok: bool
    centralizer_dims: tuple | None
    centralizer_ok: bool | None
    semigroup_faithful_left: bool
    semigroup_faithful_right: bool
    algebra_faithful_left: bool
    algebra_faithful_right: bool
    predicted_semigroup_faithful_left: bool
    predicted_semigroup_faithful_right: bool
    predicted_algebra_faithful_left: bool
    predicted_algebra_faithful_right: bool
    match: bool

    def to_json_dict(self):
        return {
            "n": self.n,
            "k": self.k,
            "space": self.space,
            "commute_ok": self.commute_ok,
            "centralizer_dims": (
                list(self.centralizer_dims) if self.centralizer_dims else None
            ),
            "centralizer_ok": self.centralizer_ok,
            "semigroup_faithful_left": self.semigroup_faithful_left,
            "semigroup_faithful_right": self.semigroup_faithful_right,
            "algebra_faithful_left": self.algebra_faithful_left,
            "algebra_faithful_right": self.algebra_faithful_right,
            "predicted_semigroup_faithful_left": self.predicted_semigroup_faithful_left,
            "predicted_semigroup_faithful_right": self.predicted_semigroup_faithful_right,
            "predicted_algebra_faithful_left": self.predicted_algebra_faithful_left,
            "predicted_algebra_faithful_right": self.predicted_algebra_faithful_right,
            "match": self.match,
        }


def run_full_report(
    n: int, k: int, space: str, with_commutant: bool = True, unguarded=False
) -> DualityReport:
    """Run every check at one cell and compare against the predictions.

    ``with_commutant=False`` skips the two commutant solves (used on the
    outlying grid cells where only spans and faithfulness are needed)."""
    if space == "V":
        sgrp_left, sgrp_right = "is_on_V", "istar_on_V"
        alg_left, alg_right = "contracted_is_on_V", "istar_on_V"
    else:
        sgrp_left, sgrp_right = "is_on_U", "pistar_on_U"
        alg_left, alg_right = "is_on_U", "pistar_on_U"

    commute_ok = verify_commutation(n, k, space, unguarded)
    if with_commutant:
        data = centralizer_data(n, k, space, unguarded)
        centralizer_dims, centralizer_ok = data.dims, data.ok
    else:
        centralizer_dims, centralizer_ok = None, None

    computed = {
        "sl": verify_semigroup_faithfulness(n, k, sgrp_left, unguarded),
        "sr": verify_semigroup_faithfulness(n, k, sgrp_right, unguarded),
        "al": verify_algebra_faithfulness(n, k, alg_left, unguarded),
        "ar": verify_algebra_faithfulness(n, k, alg_right, unguarded),
    }
    predicted = {
        "sl": predicted_semigroup_faithful(n, k, sgrp_left),
        "sr": predicted_semigroup_faithful(n, k, sgrp_right),
        "al": predicted_algebra_faithful(n, k, alg_left),
        "ar": predicted_algebra_faithful(n, k, alg_right),
    }
    match = (
        commute_ok
        and (centralizer_ok is None or centralizer_ok)
        and computed == predicted
    )
    return DualityReport(
        n=n,
        k=k,
        space=space,
        commute_ok=commute_ok,
        centralizer_dims=centralizer_dims,
        centralizer_ok=centralizer_ok,
        semigroup_faithful_left=computed["sl"],
        semigroup_faithful_right=computed["sr"],
        algebra_faithful_left=computed["al"],
        algebra_faithful_right=computed["ar"],
        predicted_semigroup_faithful_left=predicted["sl"],
        predicted_semigroup_faithful_right=predicted["sr"],
        predicted_algebra_faithful_left=predicted["al"],
        predicted_algebra_faithful_right=predicted["ar"],
        match=match,
    )


def default_grid(spaces=("V", "U")) -> list:
    """The guarded verification grid: full checks on the core cells,
    span-and-faithfulness only on the outliers."""
    grid = []
    if "V" in spaces:
        grid += [("V", n, k, True) for n, k in V_FULL_CELLS]
        grid += [("V", n, k, False) for n, k in V_SPAN_CELLS]
    if "U" in spaces:
        grid += [("U", n, k, True) for n, k in U_FULL_CELLS]
        grid += [("U", n, k, False) for n, k in U_SPAN_CELLS]
    return grid


def run_grid(
    spaces=("V", "U"), max_n: int | None = None, max_k: int | None = None
) -> list:
    """Reports for every default grid cell within the requested bounds."""
    reports = []
    for space, n, k, with_commutant in default_grid(spaces):
        if max_n is not None and n > max_n:
            continue
        if max_k is not None and k > max_k:
            continue
        reports.append(run_full_report(n, k, space, with_commutant))
    return reports
