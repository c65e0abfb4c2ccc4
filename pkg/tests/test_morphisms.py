"""The two change-of-basis maps into the zero-adjoined algebra, their
inverses, and the exact matrix identities tying the three U-actions
together."""

from fractions import Fraction

import pytest

from rookdual import (
    AlgebraElement,
    HatElement,
    SetPartition,
    block_subset_sum,
    block_subset_sum_inverse,
    block_union_leq,
    canonicalize,
    coarsening_sum,
    coarsening_sum_inverse,
    coarsening_sum_inverse_by_solve,
    enumerate_pistar,
    extend_linearly,
    mobius_merge_drop,
    morphism_report,
    natural_upper_set,
    parse_element,
    primed,
    star_product,
    unprimed,
    verify_hat_consistency,
    verify_tilde_factorization,
)


def by_text(x: AlgebraElement) -> dict:
    return {str(e): c for e, c in x.terms.items()}


def test_natural_upper_set_equals_order_filter():
    """The constructive merge enumeration must agree with filtering the
    full element list through the order predicate."""
    for k in (1, 2, 3):
        elements = enumerate_pistar(k)
        for alpha in elements:
            constructed = set(natural_upper_set(alpha))
            filtered = {b for b in elements if block_union_leq(alpha, b)}
            assert constructed == filtered


def test_coarsening_sum_of_identity():
    phi = coarsening_sum(SetPartition.identity(2))
    assert by_text(phi) == {
        "{1,1'}|{2,2'}": 1,
        "{1,1'}": 1,
        "{2,2'}": 1,
        "{1,2,1',2'}": 1,
        "{}": 1,
    }


def test_coarsening_sum_of_empty_is_itself():
    phi = coarsening_sum(SetPartition.empty(2))
    assert by_text(phi) == {"{}": 1}


def test_coarsening_sum_inverse_of_identity():
    inv = coarsening_sum_inverse(SetPartition.identity(2))
    assert by_text(inv) == {
        "{1,1'}|{2,2'}": 1,
        "{1,1'}": -1,
        "{2,2'}": -1,
        "{1,2,1',2'}": -1,
        "{}": 2,
    }


def test_mobius_values():
    ident = SetPartition.identity(2)
    top = parse_element("{1,2,1',2'}", "pistar", 2)
    one = parse_element("{1,1'}", "pistar", 2)
    empty = SetPartition.empty(2)
    assert mobius_merge_drop(ident, ident) == 1
    assert mobius_merge_drop(ident, top) == -1
    assert mobius_merge_drop(ident, one) == -1
    assert mobius_merge_drop(ident, empty) == 2
    assert mobius_merge_drop(one, empty) == -1
    with pytest.raises(ValueError):
        mobius_merge_drop(top, ident)


def test_mobius_inverts_zeta_directly():
    """Summing the Mobius function over every closed interval gives the
    delta function; this pins the inverse independent of the maps."""
    for k in (1, 2):
        elements = enumerate_pistar(k)
        for alpha in elements:
            for gamma in natural_upper_set(alpha):
                total = sum(
                    mobius_merge_drop(beta, gamma)
                    for beta in natural_upper_set(alpha)
                    if block_union_leq(beta, gamma)
                )
                assert total == (1 if alpha == gamma else 0)


def test_two_inverse_routes_agree():
    for k in (1, 2, 3):
        for alpha in enumerate_pistar(k):
            assert coarsening_sum_inverse(alpha) == coarsening_sum_inverse_by_solve(
                alpha
            )


def test_coarsening_round_trips():
    """Forward-then-back is the identity on the deformed algebra;
    back-then-forward is the identity on the plain one."""
    for k in (1, 2, 3):
        for alpha in enumerate_pistar(k):
            assert extend_linearly(
                coarsening_sum, coarsening_sum_inverse(alpha)
            ) == AlgebraElement.basis(f"hat[{k}]", alpha)
            assert extend_linearly(
                coarsening_sum_inverse, coarsening_sum(alpha)
            ) == AlgebraElement.basis(f"pistar[{k}]", alpha)


def test_block_subset_sum_of_identity():
    psi = block_subset_sum(SetPartition.identity(2))
    assert by_text(psi) == {
        "{1,1'}|{2,2'}": 1,
        "{1,1'}": 1,
        "{2,2'}": 1,
        "{}": 1,
    }


def test_block_subset_sum_inverse_signs():
    inv = block_subset_sum_inverse(SetPartition.identity(2))
    assert by_text(inv) == {
        "{1,1'}|{2,2'}": 1,
        "{1,1'}": -1,
        "{2,2'}": -1,
        "{}": 1,
    }


def test_block_subset_round_trips():
    for k in (1, 2, 3):
        for alpha in enumerate_pistar(k):
            assert extend_linearly(
                block_subset_sum, block_subset_sum_inverse(alpha)
            ) == AlgebraElement.basis(f"hat[{k}]", alpha)
            assert extend_linearly(
                block_subset_sum_inverse, block_subset_sum(alpha)
            ) == AlgebraElement.basis(f"tilde[{k}]", alpha)


def test_extend_linearly_is_linear():
    a, b = enumerate_pistar(2)[:2]
    carrier = coarsening_sum(a).carrier
    x = AlgebraElement(carrier.replace("hat", "pistar"), {a: Fraction(2), b: Fraction(-1)})
    lhs = extend_linearly(coarsening_sum, x)
    rhs = 2 * coarsening_sum(a) + (-1) * coarsening_sum(b)
    assert lhs == rhs


def test_star_product_is_bilinear():
    elements = enumerate_pistar(2)
    images = [coarsening_sum(a) for a in elements[:4]]
    x, y, w = images[0], images[1], images[2]
    assert star_product(x + y, w) == star_product(x, w) + star_product(y, w)
    assert star_product(w, x + y) == star_product(w, x) + star_product(w, y)
    assert star_product(2 * x, w) == 2 * star_product(x, w)


def test_homomorphism_reports_exhaustive():
    for k in (1, 2):
        for name in ("coarsening_sum", "block_subset_sum"):
            report = morphism_report(name, k)
            assert report.homomorphism_ok and report.inverse_ok
            assert report.pairs_checked == len(enumerate_pistar(k)) ** 2
    assert morphism_report("coarsening_sum", 2).pairs_checked == 144


def test_homomorphism_reports_sampled_k3():
    for name in ("coarsening_sum", "block_subset_sum"):
        report = morphism_report(name, 3, sample_pairs=2000, seed=7)
        assert report.homomorphism_ok and report.inverse_ok
        assert report.pairs_checked == 2000


def test_morphism_report_rejects_unknown_map():
    with pytest.raises(ValueError):
        morphism_report("zeta", 2)


def test_sampling_is_seed_deterministic():
    a = morphism_report("coarsening_sum", 3, sample_pairs=100, seed=3)
    b = morphism_report("coarsening_sum", 3, sample_pairs=100, seed=3)
    assert a == b


@pytest.mark.parametrize("n,k", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2)])
def test_hat_consistency(n, k):
    report = verify_hat_consistency(n, k)
    assert report.homomorphism_ok
    assert report.inverse_ok
    assert report.pairs_checked == len(enumerate_pistar(k)) * (n + 1) ** k


@pytest.mark.parametrize("n,k", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2)])
def test_tilde_factorization(n, k):
    report = verify_tilde_factorization(n, k)
    assert report.homomorphism_ok
    assert report.inverse_ok


def test_report_serialization():
    report = morphism_report("block_subset_sum", 1)
    d = report.to_json_dict()
    assert d["map_name"] == "block_subset_sum"
    assert d["k"] == 1
    assert d["homomorphism_ok"] is True
