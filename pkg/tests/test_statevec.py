"""Exact state vectors: amplitudes, eigenvalue relations, spans, stabilizers."""

import itertools

import pytest

from qbh.bh import BhMatrix, kron_fourier, linear_rows_check
from qbh.errors import BudgetExceeded, DimensionMismatch, LengthMismatch
from qbh.gf import field_make
from qbh.lincode import code_make, codewords, dual
from qbh.functional import table_make, table_matrix
from qbh.pauli import PauliElement, identity, psi, x_op, z_op
from qbh.construct import build
from qbh.statevec import (
    LABEL_BUDGET,
    CycAmp,
    StateVector,
    apply,
    big_phi,
    big_phi_from_matrix,
    equal_sum_states,
    fix_dim,
    inner,
    norm_sq,
    phi,
    phi_from_matrix,
    span_equal,
    stab_of_span,
    state_make,
    state_to_text,
    tensor,
)

import helpers
import oracles

F2 = field_make(2, 1)
F3 = field_make(3, 1)
F4 = field_make(2, 2)

ONE2 = CycAmp.one(2)
MINUS2 = CycAmp.root(2, 2)


def shor_setup():
    c, d = helpers.shor_pair()
    return c, d, table_make(c, d.field)


# -- CycAmp

def test_cycamp_odd_canonical_form():
    # subtracting the all-ones relation: (2,1,1) and (1,0,0) are the same number
    assert CycAmp(3, (2, 1, 1)) == CycAmp(3, (1, 0, 0))
    assert CycAmp.one(3) + CycAmp.root(3, 1) + CycAmp.root(3, 2) == CycAmp.zero(3)


def test_cycamp_binary_is_gaussian():
    i = CycAmp.root(2, 1)
    assert i * i == MINUS2
    assert MINUS2 * MINUS2 == ONE2
    assert (ONE2 + i).conj() == ONE2 - i


def test_cycamp_rot():
    a = CycAmp.one(3)
    assert a.rot(1) == CycAmp.root(3, 1)
    assert a.rot(3) == a
    b = CycAmp.one(2)
    assert b.rot(2) == MINUS2
    assert b.rot(4) == b


def test_cycamp_as_int():
    assert (CycAmp.one(3) + CycAmp.one(3)).as_int() == 2
    assert MINUS2.as_int() == -1
    with pytest.raises(ValueError):
        CycAmp.root(3, 1).as_int()


def test_cycamp_conj_multiplicative_norm():
    for e in range(3):
        z = CycAmp.root(3, e)
        assert (z * z.conj()).as_int() == 1


# -- StateVector basics

def test_state_drops_zero_amplitudes():
    v = state_make(F2, 1, {(0,): ONE2, (1,): CycAmp.zero(2)})
    assert v.support == {(0,)}


def test_state_make_checks_label_length():
    with pytest.raises(LengthMismatch):
        state_make(F2, 2, {(0,): ONE2})


def test_state_equality_includes_scale():
    a = state_make(F2, 1, {(0,): ONE2}, scale=0)
    b = state_make(F2, 1, {(0,): ONE2}, scale=2)
    assert a != b
    assert a == state_make(F2, 1, {(0,): ONE2})


def test_state_to_text_lists_support():
    v = state_make(F2, 2, {(1, 0): ONE2})
    text = state_to_text(v)
    assert "1" in text and isinstance(text, str)


# -- phi and big_phi

def test_phi_shor_rows():
    c, _, t = shor_setup()
    v0 = phi(c, t, 0)
    assert v0.amps == {(0, 0, 0): ONE2, (1, 1, 1): ONE2}
    assert v0.scale == 1
    v1 = phi(c, t, 1)
    assert v1.amps == {(0, 0, 0): ONE2, (1, 1, 1): MINUS2}


def test_phi_ternary_row():
    c, d = helpers.nine_qutrit_pair()
    t = table_make(c, d.field)
    v1 = phi(c, t, 1)
    assert v1.amps == {
        (0, 0, 0): CycAmp.one(3),
        (1, 1, 1): CycAmp.root(3, 1),
        (2, 2, 2): CycAmp.root(3, 2),
    }


def test_phi_matches_matrix_reading():
    c = code_make(F4, [(1, 0, 2), (0, 1, 3)])
    t = table_make(c, field_make(2, 4))
    m = table_matrix(t)
    for lam in t.scalars.elements():
        assert phi(c, t, lam) == phi_from_matrix(m, c, lam)


def test_big_phi_shor_logical_states():
    c, d, t = shor_setup()
    v = big_phi(c, d, t, (0, 0, 0))
    assert v.scale == 3
    assert len(v.amps) == 8
    assert all(a == ONE2 for a in v.amps.values())
    w = big_phi(c, d, t, (1, 1, 1))
    for label, amp in w.amps.items():
        blocks = sum(1 for i in range(3) if label[3 * i] == 1)
        assert amp == (ONE2 if blocks % 2 == 0 else MINUS2)


def test_big_phi_four_one_uniform():
    c, d = helpers.four_one_pair()
    t = table_make(c, d.field)
    v = big_phi(c, d, t, (0, 0))
    assert v.support == {(x1, x1, x2, x2) for x1 in (0, 1) for x2 in (0, 1)}
    assert all(a == ONE2 for a in v.amps.values())


def test_big_phi_rejects_non_codeword():
    c, d, t = shor_setup()
    from qbh.errors import NotACodeword
    with pytest.raises(NotACodeword):
        big_phi(c, d, t, (1, 0, 0))


def test_tensor_scale_and_inner_multiplicativity():
    c, _, t = shor_setup()
    states = [phi(c, t, 0), phi(c, t, 1)]
    for u in states:
        for v in states:
            tuv = tensor(u, v)
            assert tuv.scale == u.scale + v.scale
            for u2 in states:
                for v2 in states:
                    lhs = inner(tensor(u2, v2), tuv)
                    rhs = inner(u2, u) * inner(v2, v)
                    assert lhs == rhs


# -- apply

def test_apply_identity():
    c, _, t = shor_setup()
    v = phi(c, t, 1)
    assert apply(identity(F2, 3), v) == v


def test_apply_z_on_one():
    v = state_make(F2, 1, {(1,): ONE2})
    w = apply(z_op(F2, (1,)), v)
    assert w.amps == {(1,): MINUS2}


def test_apply_block_x_gives_eigenvalue():
    c, d, t = shor_setup()
    v = big_phi(c, d, t, (1, 1, 1))
    e = x_op(F2, (1, 1, 1, 0, 0, 0, 0, 0, 0))
    w = apply(e, v)
    expected = StateVector(F2, 9, {l: a.rot(2) for l, a in v.amps.items()}, v.scale)
    assert w == expected


def test_apply_generators_fix_logical_states():
    c, d = helpers.four_one_pair()
    sc = build(c, d)
    t = table_make(c, d.field)
    for lam_word in codewords(d):
        v = big_phi(c, d, t, lam_word)
        for g in sc.generators:
            assert apply(g, v) == v


def test_apply_checks_dimensions():
    v = state_make(F2, 1, {(0,): ONE2})
    with pytest.raises(LengthMismatch):
        apply(identity(F2, 2), v)
    with pytest.raises(DimensionMismatch):
        apply(identity(F3, 1), v)


# -- inner products

def test_phi_rows_are_orthogonal():
    c = code_make(F3, [(1, 0, 1), (0, 1, 2)])
    t = table_make(c, field_make(3, 2))
    states = {lam: phi(c, t, lam) for lam in t.scalars.elements()}
    for lam, u in states.items():
        for mu, v in states.items():
            got = inner(u, v)
            if lam == mu:
                assert got.as_int() == c.size
            else:
                assert got.is_zero


def test_norm_sq_shor():
    c, d, t = shor_setup()
    v = big_phi(c, d, t, (0, 0, 0))
    assert norm_sq(v) == (8, 3)


# -- spans

def test_span_shor_block_change_of_basis():
    c, _, t = shor_setup()
    phis = [phi(c, t, 0), phi(c, t, 1)]
    kets = [
        state_make(F2, 3, {(0, 0, 0): ONE2}),
        state_make(F2, 3, {(1, 1, 1): ONE2}),
    ]
    assert span_equal(phis, kets)
    assert span_equal(phis, phis)


def test_span_distinct_logical_states_differ():
    c, d, t = shor_setup()
    a = [big_phi(c, d, t, (0, 0, 0))]
    b = [big_phi(c, d, t, (1, 1, 1))]
    assert not span_equal(a, b)


def test_span_budget_guard():
    n = 14
    labels = list(itertools.product((0, 1), repeat=n))[:130]
    many = [state_make(F2, n, {lab: ONE2}) for lab in labels]
    with pytest.raises(BudgetExceeded):
        span_equal(many, many)


def test_span_row_equivalent_matrices_same_span():
    f3 = F3
    c = code_make(f3, [(1, 0, 1), (0, 1, 2)])
    h = kron_fourier(3, 2)
    perm = (4, 0, 7, 2, 8, 1, 5, 3, 6)
    shifts = (1, 0, 2, 2, 0, 1, 0, 1, 2)
    rows2 = tuple(
        tuple((h.rows[perm[i]][col] + shifts[i]) % 3 for col in range(9))
        for i in range(9)
    )
    h2 = BhMatrix(9, 3, rows2, h.row_labels, h.col_labels)
    qa = [big_phi_from_matrix(h, c, (r, r)) for r in range(9)]
    qb = [big_phi_from_matrix(h2, c, (r, r)) for r in range(9)]
    assert span_equal(qa, qb)


def test_span_scrambled_matrix_changes_span():
    f3 = F3
    c = code_make(f3, [(1, 0, 1), (0, 1, 2)])
    h = kron_fourier(3, 2)
    rows = tuple(
        tuple(r[3] if col == 1 else (r[1] if col == 3 else r[col]) for col in range(9))
        for r in h.rows
    )
    h3 = BhMatrix(9, 3, rows, h.row_labels, h.col_labels)
    qa = [big_phi_from_matrix(h, c, (r, r)) for r in range(9)]
    qb = [big_phi_from_matrix(h3, c, (r, r)) for r in range(9)]
    assert not span_equal(qa, qb)


def test_equal_sum_states_span_the_logical_space():
    c, d = helpers.four_one_pair()
    t = table_make(c, d.field)
    q = [big_phi(c, d, t, w) for w in codewords(d)]
    assert span_equal(q, equal_sum_states(c, 2))


# -- stab_of_span and fix_dim

def test_stab_of_computational_basis_state():
    v = state_make(F2, 1, {(0,): ONE2})
    group = stab_of_span([v])
    assert set(group) == {identity(F2, 1), z_op(F2, (1,))}


def test_stab_of_four_one_matches_generators():
    c, d = helpers.four_one_pair()
    sc = build(c, d)
    t = table_make(c, d.field)
    q = [big_phi(c, d, t, w) for w in codewords(d)]
    group = stab_of_span(q)
    assert len(group) == 2 ** len(sc.generators)
    for e in group:
        assert e.phase == 0
        assert sc.contains_symplectic(e.a, e.b)


def test_stab_of_scrambled_order_four_matrix_keeps_full_group():
    # every column scramble of the order-4 matrix leaves all rows affine,
    # so the span never moves and the stabilizer stays at full size
    c = code_make(F2, [(1, 1, 0), (0, 1, 1)])
    h = kron_fourier(2, 2)
    rows = tuple(
        tuple(r[1] if col == 0 else (r[0] if col == 1 else r[col]) for col in range(4))
        for r in h.rows
    )
    hs = BhMatrix(4, 2, rows, h.row_labels, h.col_labels)
    assert linear_rows_check(hs) is False
    q_scr = [big_phi_from_matrix(hs, c, (r, r)) for r in range(4)]
    q_std = [big_phi_from_matrix(h, c, (r, r)) for r in range(4)]
    assert span_equal(q_scr, q_std)
    group = stab_of_span(q_scr)
    assert len(group) == 16  # 2^(nm - ks) with n=3, k=2, m=2, s=1


def test_fix_dim_counts_match_group_order_oracle():
    v = state_make(F2, 1, {(0,): ONE2})
    gens = [z_op(F2, (1,))]
    assert fix_dim(gens) == 1
    assert oracles.fix_dim_by_counting(F2, 1, gens) == 1

    c, d = helpers.four_one_pair()
    sc = build(c, d)
    assert fix_dim(sc) == 2
    assert oracles.fix_dim_by_counting(F2, 4, sc.generators) == 2


def test_fix_dim_shor_and_ternary():
    sc = build(*helpers.shor_pair())
    assert fix_dim(sc) == 2
    assert oracles.fix_dim_by_counting(F2, 9, sc.generators) == 2
    sc3 = build(*helpers.nine_qutrit_pair())
    assert fix_dim(sc3) == 3


def test_fix_dim_budget_guard():
    gens = [z_op(F2, (1,) + (0,) * 16)]
    with pytest.raises(BudgetExceeded):
        fix_dim(gens)
    assert LABEL_BUDGET == 1 << 16
