import itertools

import pytest

from gl2diamond.tuples import (
    ID0_ALPHABET,
    MU_ALPHABET,
    P_ALPHABET,
    RD_ALPHABET,
    P1MX,
    P2MX,
    P3MX,
    Sym,
    X,
    XM1,
    XP1,
    J_of_lambda,
    S_of_lambda,
    S_of_mu,
    all_candidate_tuples,
    compatible,
    compose_tuples,
    delta_irr,
    delta_red,
    e_of_lambda,
    enumerate_ID,
    enumerate_Imu,
    enumerate_P,
    enumerate_RD,
    eval_tuple,
    is_valid_ID,
    is_valid_MU,
    is_valid_P,
    is_valid_RD,
    lambda_of_S,
    mu_of_lambda,
)


def test_symbol_evaluation_and_composition():
    p = 7
    assert X.value(3, p) == 3
    assert XM1.value(0, p) == -1
    assert P2MX.value(3, p) == 2
    assert P1MX.value(0, p) == 6
    for outer in MU_ALPHABET:
        for inner in RD_ALPHABET:
            comp = outer.compose(inner)
            for x in range(p):
                assert comp.value(x, p) == outer.value(inner.value(x, p), p)


@pytest.mark.parametrize("f", [1, 2, 3, 4, 5])
def test_enumeration_counts(f):
    assert len(enumerate_P(f)) == 2 ** f
    assert len(enumerate_RD(f)) == 2 ** f
    assert len(enumerate_ID(f)) == 2 ** f


@pytest.mark.parametrize("f", [1, 2, 3])
def test_imu_counts_match_brute_force(f):
    got = set(enumerate_Imu(f))
    if f == 1:
        assert len(got) == 3
    else:
        brute = {t for t in all_candidate_tuples(f, MU_ALPHABET) if is_valid_MU(t)}
        assert got == brute
    # the identity tuple is always there
    assert (Sym(1, 0),) * f in got


@pytest.mark.parametrize(
    "f,family,alphabet,valid",
    [
        (2, enumerate_P, P_ALPHABET, is_valid_P),
        (3, enumerate_P, P_ALPHABET, is_valid_P),
        (2, enumerate_RD, RD_ALPHABET, is_valid_RD),
        (3, enumerate_RD, RD_ALPHABET, is_valid_RD),
    ],
)
def test_enumeration_equals_rule_filter(f, family, alphabet, valid):
    brute = {t for t in all_candidate_tuples(f, alphabet) if valid(t)}
    assert set(family(f)) == brute


@pytest.mark.parametrize("f", [2, 3, 4])
def test_id_enumeration_equals_rule_filter(f):
    alphabet = set(ID0_ALPHABET) | set(RD_ALPHABET)
    brute = {t for t in all_candidate_tuples(f, tuple(alphabet)) if is_valid_ID(t)}
    assert set(enumerate_ID(f)) == brute


def test_family_f1_contents():
    assert enumerate_P(1) == ((X,), (P1MX,))
    assert enumerate_RD(1) == ((X,), (P3MX,))
    assert enumerate_ID(1) == ((X,), (P1MX,))
    assert len(enumerate_Imu(1)) == 3


def test_eval_tuple_and_filtering():
    p = 7
    tpl = (XM1, P2MX)
    assert eval_tuple(tpl, (0, 3), p) == (-1, 2)
    assert eval_tuple(tpl, (5, 0), p) == (4, 5)


@pytest.mark.parametrize("f", [1, 2, 3])
def test_e_of_lambda_parity_everywhere(f):
    p = 5
    for fam in (enumerate_P(f), enumerate_RD(f), enumerate_ID(f)):
        for tpl in fam:
            for r in itertools.product(range(p), repeat=f):
                e_of_lambda(tpl, r, p)  # raises on a parity failure


def test_e_of_lambda_values():
    p = 5
    assert e_of_lambda((X,), (2,), p) == 0
    assert e_of_lambda((P1MX,), (2,), p) == 2  # principal-series branch
    # the identity branch for moved tuples
    assert e_of_lambda((XM1, P2MX), (2, 1), 7) == ((1) + 7 * (2 * 1 + 2 - 7) + 48) // 2


def test_J_and_S_subsets():
    f = 3
    assert J_of_lambda((X, X, X)) == frozenset()
    assert J_of_lambda((P1MX, P1MX, P1MX)) == frozenset({0, 1, 2})
    assert J_of_lambda((X, P2MX, P1MX)) == frozenset({1, 2})
    for f in (1, 2, 3, 4):
        for reducible in (True, False):
            fam = enumerate_RD(f) if reducible else enumerate_ID(f)
            subsets = {S_of_lambda(t, reducible) for t in fam}
            assert len(subsets) == 2 ** f
            for t in fam:
                assert lambda_of_S(S_of_lambda(t, reducible), f, reducible) == t


def test_mu_of_lambda_rules():
    # constant rules on the reducible side
    assert mu_of_lambda((X, X), True) == (P1MX, P1MX)
    assert mu_of_lambda((XP1, P2MX), True) == (P3MX, P3MX)
    # the alternating tuple from the even-f construction
    f = 4
    lam = tuple(XP1 if i % 2 == 0 else P2MX for i in range(f))
    assert mu_of_lambda(lam, True) == (P3MX,) * f
    # shifted rule at index 0 on the irreducible side
    assert mu_of_lambda((X, X), False) == (P3MX, P1MX)
    assert mu_of_lambda((XM1, P2MX), False) == (P1MX, P3MX)


def test_compatibility():
    f = 2
    idt = (Sym(1, 0),) * f
    assert compatible(idt, idt)
    assert not compatible((Sym(1, 1), Sym(1, 0)), (Sym(1, -1), Sym(1, 0)))
    # p-2-y sits in both classes, so a constant p-2-y tuple never blocks
    for mu in enumerate_Imu(f):
        assert compatible((P2MX,) * f, mu)


def test_S_of_mu():
    f = 3
    assert S_of_mu((Sym(1, 0),) * f) == frozenset()
    assert S_of_mu((P1MX,) * f) == frozenset(range(f))
    # matching entries propagate membership of the next index
    for mu in enumerate_Imu(2):
        for mu2 in enumerate_Imu(2):
            for i in range(2):
                if mu[i] == mu2[i]:
                    nxt = (i + 1) % 2
                    assert (nxt in S_of_mu(mu)) == (nxt in S_of_mu(mu2))


def test_delta_maps():
    for f in (1, 2, 3, 4):
        subsets = [frozenset(s) for n in range(f + 1) for s in itertools.combinations(range(f), n)]
        assert len({delta_red(S, f) for S in subsets}) == 2 ** f
        assert len({delta_irr(S, f) for S in subsets}) == 2 ** f
    assert delta_red(frozenset(), 3) == frozenset()
    assert delta_red(frozenset({0}), 3) == frozenset({2})
    assert 0 in delta_irr(frozenset(), 3)


def test_compose_tuples():
    f = 2
    lam = (XM1, P2MX)
    mu = (P1MX, Sym(1, 1))
    comp = compose_tuples(mu, lam)
    p = 7
    for r in itertools.product(range(p), repeat=f):
        vals = eval_tuple(comp, r, p)
        direct = tuple(m.value(l.value(x, p), p) for m, l, x in zip(mu, lam, r))
        assert vals == direct
