import random

from xq.crossed import (CrossedComplex3, GroupAction, PreCrossedModule,
                        XC3Homotopy, XC3Morphism, check_crossed,
                        check_precrossed, peiffer_commutator,
                        verify_xc3_homotopy, xc3_check, xc3_homotopic,
                        xc3_homotopy_decision, xc3_morphism_check)
from xq.groups import (FgAbelianGroup, FreeAbelianGroup, FreeNil2Group,
                       GroupHom)


def conjugation_module():
    g = FreeNil2Group(2)
    return PreCrossedModule(g, g, GroupHom.identity(g),
                            GroupAction.conjugation(g))


def zero_boundary_module():
    g = FreeNil2Group(2)
    return PreCrossedModule(g, g, GroupHom.zero(g, g),
                            GroupAction.trivial(g, g))


def test_conjugation_module_is_crossed():
    rep = check_crossed(conjugation_module(), samples=300, seed=1)
    assert rep.ok, rep.text()


def test_zero_boundary_trivial_action_is_precrossed_only():
    m = zero_boundary_module()
    assert check_precrossed(m, samples=200, seed=1).ok
    rep = check_crossed(m, samples=200, seed=1)
    assert not rep.ok
    fail = [c for c in rep.failed()]
    assert [c.check_id for c in fail] == ["peiffer_commutators_vanish"]
    # the witness names the offending generator pair
    assert "<g0, g1>" in fail[0].witness
    # and indeed the Peiffer commutator there is the basic commutator
    g = m.m2
    assert g.eq(peiffer_commutator(m, g.gen(0), g.gen(1)),
                g.commutator(g.gen(0), g.gen(1)))


def test_action_axioms_catch_relation_violation():
    # Z/2 cannot act on Z by doubling: the square of the endomorphism is x4
    acting = FgAbelianGroup(1, [[2]])
    acted = FreeAbelianGroup(1)
    action = GroupAction(acting, acted, kind="table",
                         table=[[acted.pow(acted.gen(0), 2)]],
                         inverse_table=[[acted.gen(0)]])
    rep = action.check(random.Random(3), 200)
    assert not rep.ok


def test_action_table_round_trip():
    acting = FreeAbelianGroup(1)
    acted = FreeAbelianGroup(2)
    swap = GroupAction(acting, acted, kind="table",
                       table=[[acted.gen(1)], [acted.gen(0)]])
    assert acted.eq(swap.apply(acted.gen(0), acting.gen(0)), acted.gen(1))
    # inverse letters derived automatically for abelian acted groups
    assert acted.eq(swap.apply(acted.gen(0), acting.inv(acting.gen(0))),
                    acted.gen(1))
    rebuilt = GroupAction.from_json(acting, acted, swap.to_json())
    assert acted.eq(rebuilt.apply(acted.gen(1), acting.gen(0)), acted.gen(0))
    assert rebuilt.check(random.Random(4), 100).ok


def small_xc3(under2=()):
    """M3 = Z --x2--> M2 = Z --0--> M1 = Z with trivial actions."""
    m1 = FreeNil2Group(1, names=("a",))
    m2 = FreeNil2Group(1, names=("x",))
    m3 = FreeAbelianGroup(1, names=("t",))
    d2 = GroupHom.zero(m2, m1)
    d3 = GroupHom(m3, m2, [m2.pow(m2.gen(0), 2)])
    return CrossedComplex3(m1, m2, m3, d2, d3,
                           GroupAction.trivial(m1, m2),
                           GroupAction.trivial(m1, m3),
                           under2=under2)


def test_small_xc3_passes_checks():
    rep = xc3_check(small_xc3(), samples=200, seed=2)
    assert rep.ok, rep.text()


def scale_morphism(x, k):
    """(id, x(1+2k), x(1+2k)) is a morphism of the small complex."""
    m1, m2, m3 = x.m1, x.m2, x.m3
    return XC3Morphism(x, x, GroupHom.identity(m1),
                       GroupHom(m2, m2, [m2.pow(m2.gen(0), 1 + 2 * k)]),
                       GroupHom(m3, m3, [m3.pow(m3.gen(0), 1 + 2 * k)]))


def test_xc3_morphism_check():
    x = small_xc3()
    assert xc3_morphism_check(scale_morphism(x, 0), samples=50, seed=0).ok
    assert xc3_morphism_check(scale_morphism(x, 2), samples=50, seed=0).ok
    # breaking the d3 square is caught
    bad = XC3Morphism(x, x, GroupHom.identity(x.m1),
                      GroupHom.identity(x.m2),
                      GroupHom(x.m3, x.m3, [x.m3.pow(x.m3.gen(0), 2)]))
    rep = xc3_morphism_check(bad, samples=50, seed=0)
    assert not rep.ok


def test_xc3_homotopy_found_and_verified():
    x = small_xc3()
    f = scale_morphism(x, 0)
    for k in (-2, -1, 1, 3):
        g = scale_morphism(x, k)
        h, rep = xc3_homotopy_decision(f, g)
        assert h is not None, rep.text()
        # the witness is unique here: alpha(x) = k t
        assert x.m3.eq(h.alpha[0], x.m3.pow(x.m3.gen(0), k))
        assert verify_xc3_homotopy(f, g, h).ok
        assert xc3_homotopic(g, f) is not None  # symmetric case solves too


def test_xc3_homotopy_reflexive_witness_is_zero():
    x = small_xc3()
    f = scale_morphism(x, 1)
    h, _ = xc3_homotopy_decision(f, f)
    assert h is not None and x.m3.is_identity(h.alpha[0])


def test_xc3_no_homotopy_for_even_difference():
    x = small_xc3()
    f = scale_morphism(x, 0)
    g = XC3Morphism(x, x, GroupHom.identity(x.m1),
                    GroupHom(x.m2, x.m2, [x.m2.pow(x.m2.gen(0), 2)]),
                    GroupHom(x.m3, x.m3, [x.m3.pow(x.m3.gen(0), 2)]))
    assert xc3_morphism_check(g, samples=50, seed=0).ok
    h, rep = xc3_homotopy_decision(f, g)
    assert h is None
    assert not rep.ok
    assert rep.obstructions or rep.failed()


def test_xc3_under_object_constrains_alpha():
    # with the degree-2 generator marked as under the cofibration, only the
    # zero witness survives, so scaled morphisms are no longer homotopic
    x = small_xc3(under2=(FreeNil2Group(1, names=("x",)).gen(0),))
    f = scale_morphism(x, 0)
    g = scale_morphism(x, 1)
    h, _ = xc3_homotopy_decision(f, f)
    assert h is not None and x.m3.is_identity(h.alpha[0])
    h, rep = xc3_homotopy_decision(f, g)
    assert h is None and not rep.ok


def test_verify_rejects_wrong_witness():
    x = small_xc3()
    f = scale_morphism(x, 0)
    g = scale_morphism(x, 1)
    wrong = XC3Homotopy((x.m3.pow(x.m3.gen(0), 2),))
    rep = verify_xc3_homotopy(f, g, wrong)
    assert not rep.ok
