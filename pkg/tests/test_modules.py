import random

import pytest

from jetforge.hsmodules import (HSModulePresentation, ModulePresentation,
                                TwistedMatrix, base_change_check,
                                cotangent_theorem_check, delta_apply,
                                free_dual_zigzag_check, hs_module_presentation,
                                kaehler_presentation, sym_presentation,
                                sym_theorem_check, twisted_action_matrix)
from jetforge.jets import (AlgebraMorphism, AlgebraPresentation, hs_components,
                           jet_presentation)
from jetforge.poly import JetVar, Poly
from jetforge.scalars import QQ

X0 = Poly.var(JetVar("x", 0, 0))
Y0 = Poly.var(JetVar("y", 1, 0))


def jx(i):
    return Poly.var(JetVar("x", 0, i))


def jy(i):
    return Poly.var(JetVar("y", 1, i))


def cusp():
    return AlgebraPresentation(["x", "y"], [Y0 ** 2 - X0 ** 3])


def free_xy():
    return AlgebraPresentation(["x", "y"], [])


# -- twisted matrices -------------------------------------------------


def test_twisted_identity():
    t = twisted_action_matrix(Poly.constant(1), 3)
    for j in range(4):
        for i in range(4):
            assert t.entries[j][i] == (Poly.constant(1) if i == j else Poly.zero())


def test_twisted_of_x():
    t = twisted_action_matrix(X0, 2)
    want = [[jx(0), jx(1), jx(2)],
            [Poly.zero(), jx(0), jx(1)],
            [Poly.zero(), Poly.zero(), jx(0)]]
    assert t.entries == want


def test_twisted_multiplicative():
    tx = twisted_action_matrix(X0, 1)
    ty = twisted_action_matrix(Y0, 1)
    assert tx.matmul(ty) == twisted_action_matrix(X0 * Y0, 1)


def test_twisted_ring_hom_random():
    rng = random.Random(13)
    for _ in range(15):
        p = X0 ** rng.randint(0, 2) * rng.randint(-4, 4) + Y0 * rng.randint(-4, 4)
        q = Y0 ** rng.randint(0, 2) - rng.randint(0, 3) * X0
        n = rng.randint(0, 4)
        tp, tq = twisted_action_matrix(p, n), twisted_action_matrix(q, n)
        assert tp.matmul(tq) == twisted_action_matrix(p * q, n)
        sums = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(tp.entries, tq.entries)]
        assert sums == twisted_action_matrix(p + q, n).entries


# -- Hasse-Schmidt module presentations -------------------------------


def test_free_module_stays_free():
    M = ModulePresentation(free_xy(), 1, [])
    hm = hs_module_presentation(M, 3)
    assert hm.relation_matrix == []
    assert len(hm.col_index) == 4


def test_rank2_single_relation():
    M = ModulePresentation(free_xy(), 2, [[X0, Y0]])
    hm = hs_module_presentation(M, 1)
    # row (0, i) has entry d_{i-j}(p_l) at column (l, j)
    assert [p.render() for p in hm.relation_matrix[0]] == ["x_0", "0", "y_0", "0"]
    assert [p.render() for p in hm.relation_matrix[1]] == ["x_1", "x_0", "y_1", "y_0"]
    assert hm.basis_labels() == ["e0_0", "e0_1", "e1_0", "e1_1"]


def test_level0_is_module_itself():
    M = ModulePresentation(free_xy(), 2, [[X0, Y0 ** 2]])
    hm = hs_module_presentation(M, 0)
    assert [[p.render() for p in row] for row in hm.relation_matrix] == [["x_0", "y_0^2"]]


def test_delta_apply():
    M = ModulePresentation(free_xy(), 1, [])
    vec = delta_apply(Poly.constant(1), 0, 1, M, 1)
    assert [p.render() for p in vec] == ["0", "1"]
    vec = delta_apply(X0, 0, 1, M, 1)
    assert [p.render() for p in vec] == ["x_1", "x_0"]
    vec = delta_apply(Poly.constant(5), 0, 0, M, 1)
    assert [p.render() for p in vec] == ["5", "0"]
    with pytest.raises(IndexError):
        delta_apply(X0, 1, 0, M, 1)


# -- Kaehler ----------------------------------------------------------


def test_kaehler_of_cusp():
    kp = kaehler_presentation(cusp())
    assert kp.rank == 2
    assert [[p.render() for p in row] for row in kp.relation_matrix] == [["-3*x_0^2", "2*y_0"]]


def test_kaehler_free():
    assert kaehler_presentation(free_xy()).relation_matrix == []


def test_kaehler_of_jet_cusp():
    kp = kaehler_presentation(jet_presentation(cusp(), 1))
    assert [[p.render() for p in row] for row in kp.relation_matrix] == [
        ["-3*x_0^2", "0", "2*y_0", "0"],
        ["-6*x_0*x_1", "-3*x_0^2", "2*y_1", "2*y_0"]]


def test_cotangent_theorem():
    assert cotangent_theorem_check(cusp(), 1)[0]
    assert cotangent_theorem_check(free_xy(), 3)[0]
    assert cotangent_theorem_check(cusp(), 0)[0]


def test_jacobian_identity_entrywise_random():
    rng = random.Random(17)
    for _ in range(10):
        f = X0 ** rng.randint(0, 3) * rng.randint(-4, 4) + Y0 ** 2 * rng.randint(-4, 4)
        n = rng.randint(0, 3)
        comps = hs_components(f, n)
        for v in (JetVar("x", 0, 0), JetVar("y", 1, 0)):
            dcomps = hs_components(f.partial(v), n)
            for i in range(n + 1):
                for j in range(n + 1):
                    got = comps[i].partial(JetVar(v.name, v.index, j))
                    want = dcomps[i - j] if j <= i else Poly.zero(QQ)
                    assert got == want


# -- Sym --------------------------------------------------------------


def test_sym_of_free_module():
    M = ModulePresentation(AlgebraPresentation(["x"], []), 2, [])
    sp = sym_presentation(M)
    assert sp.algebra.vars == ["x", "e1", "e2"]
    assert sp.algebra.relations == []
    assert sp.algebra.grading == {"x": 0, "e1": 1, "e2": 1}


def test_sym_adds_degree1_relation():
    M = ModulePresentation(free_xy(), 2, [[X0, Y0]])
    sp = sym_presentation(M)
    assert sp.algebra.homogeneous_degree(sp.algebra.relations[-1]) == 1


def test_sym_of_zero_module():
    M = ModulePresentation(cusp(), 0, [])
    sp = sym_presentation(M)
    assert sp.algebra.vars == ["x", "y"]
    assert len(sp.algebra.relations) == 1


def test_sym_theorem():
    M = ModulePresentation(free_xy(), 2, [[X0, Y0]])
    assert sym_theorem_check(M, 1)[0]
    assert sym_theorem_check(M, 0)[0]
    assert sym_theorem_check(ModulePresentation(free_xy(), 2, []), 3)[0]
    over_cusp = ModulePresentation(cusp(), 2, [[X0 * Y0, Y0 ** 2 - X0]])
    assert sym_theorem_check(over_cusp, 2)[0]


# -- base change and zigzag -------------------------------------------


def test_base_change():
    src = AlgebraPresentation(["x"], [])
    tgt = AlgebraPresentation(["u"], [])
    u0 = Poly.var(JetVar("u", 0, 0))
    phi = AlgebraMorphism(src, tgt, {JetVar("x", 0, 0): u0 ** 2})
    M = ModulePresentation(src, 1, [[Poly.var(JetVar("x", 0, 0))]])
    assert base_change_check(phi, M, 1)
    assert base_change_check(AlgebraMorphism.identity(src), M, 2)
    const_mod = ModulePresentation(src, 1, [[Poly.constant(3)]])
    assert base_change_check(phi, const_mod, 2)


def test_zigzag():
    for n in range(7):
        assert free_dual_zigzag_check(n)
