"""Rota-Baxter operators, paired modules, and their constructions."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfrb.exactlin import (
    InternalError,
    RATIONAL,
    apply_mat,
    identity,
    mat,
    mat_mul,
    mat_scale,
    vec_scale,
    zeros_mat,
)
from hopfrb.structures import PreconditionError
from hopfrb.actions import regular_action
from hopfrb.rbcore import (
    RbpInstance,
    atkinson_solvable,
    atkinson_witness,
    check_rb_operator,
    check_rbp_module,
    classify_generic,
    commutant_subalgebra,
    direct_sum,
    double_construction,
    idempotent_identities,
    image_closed_under_p_action,
    is_quasi_idempotent,
    random_operator,
    scale_weight,
    tilde_pair,
)
from hopfrb.catalog import get, get_instance, list_instances, normalized_group_integral

Q = RATIONAL
MINUS_ONE = -Q.one


def _mat2():
    return get("mat2-rational").payload


# -- the operator identity ----------------------------------------------------


def test_projection_multiplication_is_rb():
    mat2 = _mat2()
    p = mat2.left_mult(mat2.basis(0))  # E11 . -
    assert check_rb_operator(mat2, p, MINUS_ONE).ok


def test_nilpotent_multiplication_is_not_rb():
    mat2 = _mat2()
    p = mat2.left_mult(mat2.basis(1))  # E12 . -
    rep = check_rb_operator(mat2, p, MINUS_ONE)
    assert not rep.ok
    assert rep.violations[0].axiom == "rb-identity"
    assert rep.violations[0].delta is not None


def test_left_mult_verdict_matches_idempotency():
    # r . - is Rota-Baxter at weight -1 exactly when r^2 = r
    mat2 = _mat2()
    for bits in range(16):
        r = tuple(Q.of((bits >> i) & 1) for i in range(4))
        expected = mat2.mul(r, r) == r
        assert check_rb_operator(mat2, mat2.left_mult(r), MINUS_ONE).ok == expected


def test_identity_and_zero_operators():
    mat2 = _mat2()
    assert check_rb_operator(mat2, identity(Q, 4), MINUS_ONE).ok
    assert check_rb_operator(mat2, zeros_mat(Q, 4, 4), Q.of(3)).ok
    assert not check_rb_operator(mat2, identity(Q, 4), Q.one).ok


# -- paired modules -----------------------------------------------------------


def test_all_catalog_instances_verify():
    for name in list_instances():
        inst = get_instance(name)
        assert check_rbp_module(inst).ok, name
        assert inst.verified == "pass"


def test_failed_instance_keeps_witness():
    mat2 = _mat2()
    left = regular_action(mat2, "left")
    bad = RbpInstance(mat2, left, mat2.left_mult(mat2.basis(0)),
                      mat2.left_mult(mat2.basis(1)), MINUS_ONE)
    rep = check_rbp_module(bad)
    assert not rep.ok
    assert bad.verified == "fail"
    assert bad.witness is not None


def test_p_need_not_be_rb_for_pairing():
    # generic T accepts any P, including ones failing the operator identity
    c2 = get("group-algebra-c2").payload
    module = get("c2-regular-module").payload
    t = module.matrix(normalized_group_integral(c2))
    p = mat(Q, [[1, 2], [3, 4]])
    assert not check_rb_operator(c2.algebra, p, MINUS_ONE).ok
    inst = RbpInstance(c2.algebra, module, p, t, MINUS_ONE)
    assert check_rbp_module(inst).ok


# -- classification -----------------------------------------------------------


def test_integral_operator_is_generic():
    c2 = get("group-algebra-c2").payload
    module = get("c2-regular-module").payload
    t = module.matrix(normalized_group_integral(c2))
    v = classify_generic(module, t, MINUS_ONE, trials=30, seed="t")
    assert v.a_linear and v.quasi_idempotent and v.generic is True
    assert v.failures == 0 and v.trials == 30


def test_doubled_identity_is_not_generic():
    module = get("c2-regular-module").payload
    t = mat_scale(Q.of(2), identity(Q, 2))
    v = classify_generic(module, t, MINUS_ONE, trials=30, seed="t")
    assert v.a_linear and not v.quasi_idempotent and v.generic is False
    assert v.failures == 30


def test_non_linear_operator_is_unclassified():
    module = get("c2-regular-module").payload
    t = mat(Q, [[1, 0], [0, 0]])  # not kC2-linear
    v = classify_generic(module, t, MINUS_ONE, trials=10, seed="t")
    assert not v.a_linear
    assert v.generic is None
    assert 0 < v.failures <= 10


def test_commutant_of_matrix_action():
    mat2 = _mat2()
    left = regular_action(mat2, "left")
    # [L_e11, L_a] = 0 iff a commutes with e11: the diagonal subalgebra
    cm = commutant_subalgebra(left, mat2.left_mult(mat2.basis(0)))
    assert len(cm) == 2
    cm_full = commutant_subalgebra(left, identity(Q, 4))
    assert len(cm_full) == 4


def test_quasi_idempotent_variants():
    assert is_quasi_idempotent(identity(Q, 2), MINUS_ONE)
    assert is_quasi_idempotent(zeros_mat(Q, 2, 2), Q.of(5))
    assert not is_quasi_idempotent(mat_scale(Q.of(2), identity(Q, 2)), MINUS_ONE)
    # T^2 = -2T at weight 2
    assert is_quasi_idempotent(mat_scale(Q.of(-2), identity(Q, 2)), Q.of(2))


# -- the mirrored pair --------------------------------------------------------


small = st.integers(min_value=-4, max_value=4)


@given(st.lists(st.lists(small, min_size=2, max_size=2), min_size=2, max_size=2),
       st.lists(st.lists(small, min_size=2, max_size=2), min_size=2, max_size=2))
def test_tilde_is_an_involution(prows, trows):
    p, t = mat(Q, prows), mat(Q, trows)
    pt, tt = tilde_pair(p, t, MINUS_ONE)
    assert tilde_pair(pt, tt, MINUS_ONE) == (p, t)


@settings(deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_tilde_preserves_verification(trial):
    c2 = get("group-algebra-c2").payload
    module = get("c2-regular-module").payload
    t = module.matrix(normalized_group_integral(c2))
    p = random_operator(Q, 2, "tilde-fuzz", trial)
    inst = RbpInstance(c2.algebra, module, p, t, MINUS_ONE)
    assert check_rbp_module(inst).ok
    pt, tt = tilde_pair(p, t, MINUS_ONE)
    assert check_rbp_module(RbpInstance(c2.algebra, module, pt, tt, MINUS_ONE)).ok


def test_tilde_on_all_catalog_instances():
    for name in list_instances():
        inst = get_instance(name)
        pt, tt = tilde_pair(inst.p, inst.t, inst.weight)
        mirrored = RbpInstance(inst.algebra, inst.module, pt, tt, inst.weight)
        assert check_rbp_module(mirrored).ok, name


# -- factorization ------------------------------------------------------------


def test_atkinson_witness_identities():
    inst = get_instance("mat2-proj")
    a, m = inst.algebra, inst.module
    pt, tt = tilde_pair(inst.p, inst.t, inst.weight)
    for i in range(a.dim):
        for j in range(m.dim):
            av, mv = a.basis(i), m.basis(j)
            n = atkinson_witness(inst, av, mv)
            lhs = m.apply(apply_mat(inst.p, av), apply_mat(inst.t, mv))
            assert lhs == apply_mat(inst.t, n)
            lhs2 = m.apply(apply_mat(pt, av), apply_mat(tt, mv))
            assert lhs2 == vec_scale(MINUS_ONE, apply_mat(tt, n))


def test_atkinson_needs_nonzero_weight():
    inst = get_instance("mat2-proj")
    zero_weight = RbpInstance(inst.algebra, inst.module,
                              zeros_mat(Q, 4, 4), zeros_mat(Q, 4, 4), Q.zero)
    assert check_rbp_module(zero_weight).ok
    with pytest.raises(PreconditionError):
        atkinson_witness(zero_weight, inst.algebra.basis(0), inst.module.basis(0))


def test_atkinson_solvability_tracks_verification():
    inst = get_instance("mat2-proj")
    assert atkinson_solvable(inst.algebra, inst.module, inst.p, inst.t, inst.weight)
    bad_t = inst.algebra.left_mult(inst.algebra.basis(1))
    assert not atkinson_solvable(inst.algebra, inst.module, inst.p, bad_t, inst.weight)


# -- constructions ------------------------------------------------------------


def test_direct_sum_blocks():
    inst = get_instance("mat2-proj")
    doubled = direct_sum([inst, inst])
    assert doubled.module.dim == 8
    assert check_rbp_module(doubled).ok


def test_direct_sum_rejects_mixed_weights():
    inst = get_instance("mat2-proj")
    other = scale_weight(inst, Q.of(2))
    with pytest.raises(Exception):
        direct_sum([inst, other])


def test_scale_weight():
    inst = get_instance("c2-integral-proj")
    scaled = scale_weight(inst, Q.of(3))
    assert scaled.weight == Q.of(-3)
    assert scaled.verified == "pass"


def test_double_construction_star_is_nonunital():
    mat2 = _mat2()
    module = get("mat2-regular-module").payload
    p = mat2.left_mult(mat2.basis(0))
    star, tri, inst = double_construction(mat2, p, module, p, MINUS_ONE)
    assert star.unit is None
    assert inst.verified == "pass"
    # star product of E22 with itself: E22 * E22 = 2 E22 P(E22) + lam E22^2
    e22 = star.basis(3)
    assert star.mul(e22, e22) == vec_scale(MINUS_ONE, mat2.basis(3))


def test_double_construction_needs_rb_hypothesis():
    mat2 = _mat2()
    module = get("mat2-regular-module").payload
    bad_p = mat2.left_mult(mat2.basis(1))
    with pytest.raises(PreconditionError):
        double_construction(mat2, bad_p, module, bad_p, MINUS_ONE)


def test_idempotent_identities_on_projection():
    rep = idempotent_identities(get_instance("mat2-proj"))
    assert rep.ok
    assert "T-after-T-vanishes" in rep.checked


def test_idempotent_identities_skip_without_idempotency():
    c2 = get("group-algebra-c2").payload
    module = get("c2-regular-module").payload
    t = mat_scale(Q.of(2), module.matrix(normalized_group_integral(c2)))
    p = mat_scale(Q.of(2), identity(Q, 2))
    inst = RbpInstance(c2.algebra, module, p, t, Q.of(-2))
    assert check_rbp_module(inst).ok
    rep = idempotent_identities(inst)
    assert "T-after-T-vanishes" in rep.skipped


def test_image_closure():
    for name in list_instances():
        assert image_closed_under_p_action(get_instance(name)), name


def test_unverified_instances_are_rejected_by_constructions():
    mat2 = _mat2()
    left = regular_action(mat2, "left")
    bad = RbpInstance(mat2, left, identity(Q, 4), mat2.left_mult(mat2.basis(1)),
                      MINUS_ONE)
    with pytest.raises(PreconditionError):
        atkinson_witness(bad, mat2.basis(0), mat2.basis(0))


def test_random_operator_is_seed_deterministic():
    a = random_operator(Q, 3, "s", 7)
    b = random_operator(Q, 3, "s", 7)
    c = random_operator(Q, 3, "s", 8)
    assert a == b
    assert a != c
