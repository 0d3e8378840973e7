import pytest

from homreg.corealg import CertificationError, parse_presentation
from homreg.regularity import (
    BoundedValue,
    CMEvidence,
    HarnessCase,
    as_regularity,
    binomial_pattern_note,
    build_artifacts,
    cm_regularity,
    concavity_certificate,
    hilbert_criterion,
    inequality_harness,
    invariant_ring_obstruction,
    koszul_verdict,
    ta_tc_pairs,
    tor_regularity,
)
from homreg.constructions import concavity_witness


def test_bounded_value_arithmetic():
    e = BoundedValue.exact(3)
    a = BoundedValue.at_least(2)
    u = BoundedValue.unknown()
    assert e.add(e).kind == "exact" and e.add(e).value == 6
    assert e.add(a).kind == "at_least" and e.add(a).value == 5
    assert a.add(a).value == 4
    assert e.add(u).kind == "unknown"
    assert e.add_int(-1).value == 2
    assert str(a) == ">=2"


def test_tor_regularity_values(golden):
    assert golden["T"].resolve_torreg() == BoundedValue.exact(
        1, golden["T"].resolve_torreg().note
    )
    assert golden["plane"].resolve_torreg().value == 0
    a3 = golden["A3"].resolve_torreg()
    assert a3.kind == "at_least" and a3.value >= 2  # true value is infinite


def test_tor_regularity_table_level(golden):
    bv = tor_regularity(golden["T"].betti_k())
    assert bv.is_exact and bv.value == 1
    bv3 = tor_regularity(golden["A3"].betti_k())
    assert bv3.kind == "at_least"


def test_koszul_verdicts(golden):
    assert koszul_verdict(golden["plane"].betti_k()).status == "yes"
    assert koszul_verdict(golden["T"].betti_k()).status == "no"
    assert koszul_verdict(golden["T"].betti_k()).witness == (2, 3)
    assert koszul_verdict(golden["B"].betti_k()).status == "no"
    # A(2) is linear through the window; the report upgrades it to certified
    # yes through the quotient upper bound
    assert golden["A2"].report().koszul.status == "yes"


def test_cm_regularity_cases(golden):
    # finite-dimensional: CMreg = top degree
    for d in (2, 3):
        art = build_artifacts(
            parse_presentation("field Q; gens x:1; rels x^%d" % d, label="A%d" % d)
        )
        bv = cm_regularity(art, CMEvidence("finite_dimensional"))
        assert bv.is_exact and bv.value == d - 1
    # AS regular: d - l
    bv = cm_regularity(golden["T"], CMEvidence("as_regular", (3, 4)))
    assert bv.value == -1
    # asserted CM degree s: s + deg h
    bv = cm_regularity(golden["B"], CMEvidence("cm_asserted", (2,)))
    assert bv.value == 0
    # normal quotient: parent + a - 1
    bv = cm_regularity(golden["B"], CMEvidence("normal_quotient", (BoundedValue.exact(-1), 2)))
    assert bv.value == 0
    # inconsistent evidence is rejected
    with pytest.raises(CertificationError, match="does not terminate"):
        cm_regularity(golden["T"], CMEvidence("finite_dimensional"))


def test_as_regularity_sum():
    assert as_regularity(BoundedValue.exact(1), BoundedValue.exact(-1)).value == 0
    assert as_regularity(BoundedValue.at_least(1), BoundedValue.exact(0)).kind == "at_least"
    assert as_regularity(BoundedValue.exact(1), BoundedValue.unknown()).kind == "unknown"


def test_as_regular_verdicts(golden):
    v = golden["plane"].as_regular_verdict()
    assert (v.status, v.dim, v.index) == ("yes", 2, 2)
    v = golden["T"].as_regular_verdict()
    assert (v.status, v.dim, v.index) == ("yes", 3, 4)
    assert golden["B"].as_regular_verdict().status == "no"
    assert golden["A2"].as_regular_verdict().status == "no"
    assert golden["k[u2]"].as_regular_verdict().status == "yes"
    assert golden["k[u2]"].as_regular_verdict().index == 2


def test_reports_golden_values(golden):
    repT = golden["T"].report()
    assert (repT.torreg_k.value, repT.cmreg.value, repT.asreg.value) == (1, -1, 0)
    assert repT.gldim.value == 3 and repT.as_index.value == 4
    assert (str(repT.ta_pair[0]), str(repT.ta_pair[1])) == ("1", "0")
    assert (str(repT.tc_pair[0]), str(repT.tc_pair[1])) == ("1", "-1")

    repB = golden["B"].report()
    assert (repB.torreg_k.value, repB.cmreg.value, repB.asreg.value) == (1, 0, 1)
    assert repB.torreg_k.is_exact and repB.cmreg.is_exact
    assert repB.as_regular.status == "no"

    repC = golden["Tcomm"].report()
    assert repC.torreg_k.is_exact and repC.torreg_k.value == 0
    assert repC.as_regular.status == "yes"

    repA2 = golden["A2"].report()
    assert (str(repA2.ta_pair[0]), str(repA2.ta_pair[1])) == ("0", "1")


def test_hilbert_criterion(golden):
    r = hilbert_criterion(golden["plane"], 2)
    assert r.verdict == "yes" and r.h_degree == -2

    r = hilbert_criterion(golden["A3"], 0)
    assert r.verdict == "no" and r.h_degree == 2

    # B satisfies the numerical test with s = 2, but no witness qualifies:
    # the only available finite map comes from a non-Koszul algebra, and
    # the report must surface that the hypotheses fail
    wT = concavity_witness(
        golden["T"],
        [golden["B"].presentation.parse_poly("x"), golden["B"].presentation.parse_poly("y")],
        golden["B"],
    )
    r = hilbert_criterion(golden["B"], 2, witnesses=[wT])
    assert r.verdict == "yes"
    assert any("does NOT satisfy" in n for n in r.witness_notes)
    assert any("conditional" in n for n in r.witness_notes)
    assert any("user assertion" in a for a in r.assertions)


def test_ta_tc_validation(golden):
    rep = golden["T"].report()
    ta, tc = ta_tc_pairs(rep)
    assert ta[0].value == 1 and ta[1].value == 0
    assert tc[0].value == 1 and tc[1].value == -1


def test_concavity_self_witness(golden):
    bound = concavity_certificate(golden["T"], [])
    assert bound.exact and bound.upper.value == 1
    assert bound.c_minus.value == 0  # AS regular: normalized concavity 0

    bound = concavity_certificate(golden["plane"], [])
    assert bound.exact and bound.upper.value == 0


def test_concavity_gap_one_dichotomy(golden):
    wT = concavity_witness(
        golden["T"],
        [golden["B"].presentation.parse_poly("x"), golden["B"].presentation.parse_poly("y")],
        golden["B"],
    )
    bound = concavity_certificate(golden["B"], [wT])
    assert bound.exact and bound.upper.value == 1
    assert bound.c_minus.is_exact and bound.c_minus.value == 1


def test_concavity_zero_upper_is_exact(golden):
    w = concavity_witness(golden["k[x]"], ["x"], golden["hyp"])
    bound = concavity_certificate(golden["hyp"], [w])
    assert bound.exact and bound.upper.value == 0


def test_concavity_without_witness_is_open(golden):
    bound = concavity_certificate(golden["A3"], [])
    assert not bound.exact
    assert bound.upper.kind == "unknown"


def test_obstruction_hypersurface(golden):
    w = concavity_witness(golden["k[x]"], ["x"], golden["hyp"])
    bound = concavity_certificate(golden["hyp"], [w])
    verdict = invariant_ring_obstruction(golden["hyp"], bound)
    assert verdict.status == "obstructed"
    assert verdict.beta1 == 2
    assert "c = 0 < 1" in verdict.inequality


def test_obstruction_no_conclusion_on_plane(golden):
    bound = concavity_certificate(golden["plane"], [])
    verdict = invariant_ring_obstruction(golden["plane"], bound)
    assert verdict.status == "no conclusion"  # c = 0 >= beta_1 - 1 = 0


def test_obstruction_family_m1_n2():
    # two degree-1 variables, one degree-2 variable, t^2 = (xy)^2
    src = (
        "field Q; gens x:1 y:1 t:2; "
        "rels x*y - y*x, x*t - t*x, y*t - t*y, t^2 - x^2*y^2"
    )
    art = build_artifacts(parse_presentation(src, label="inv-family"))
    witness_pres = parse_presentation("field Q; gens x:1 y:1; rels x*y - y*x", label="kxy")
    wart = build_artifacts(witness_pres)
    w = concavity_witness(wart, ["x", "y"], art)
    assert w.finite_ok and w.as_regular_ok
    bound = concavity_certificate(art, [w])
    assert bound.exact and bound.upper.value == 0
    verdict = invariant_ring_obstruction(art, bound)
    assert verdict.status == "obstructed"


def test_obstruction_beta2_branch(golden):
    # synthetic use of the relation-degree test with a user-supplied range
    w = concavity_witness(golden["k[x]"], ["x"], golden["hyp"])
    bound = concavity_certificate(golden["hyp"], [w])
    verdict = invariant_ring_obstruction(golden["hyp"], bound, cmreg_T_range=range(-1, 1))
    assert verdict.status == "obstructed"  # beta_1 branch already fires


def test_harness_semantics():
    results = inequality_harness(
        [
            HarnessCase("ok", "leq", BoundedValue.exact(1), BoundedValue.exact(2)),
            HarnessCase("violated", "leq", BoundedValue.exact(3), BoundedValue.exact(2)),
            HarnessCase("lower-bound-violation", "leq", BoundedValue.at_least(5), BoundedValue.exact(2)),
            HarnessCase("insufficient", "leq", BoundedValue.unknown(), BoundedValue.exact(2)),
            HarnessCase("rhs-not-exact", "eq", BoundedValue.exact(1), BoundedValue.at_least(1)),
            HarnessCase("fact", "true", True),
        ]
    )
    statuses = {r.name: r.status for r in results}
    assert statuses == {
        "ok": "pass",
        "violated": "fail",
        "lower-bound-violation": "fail",
        "insufficient": "skip",
        "rhs-not-exact": "skip",
        "fact": "pass",
    }
    skips = {r.name: r.detail for r in results if r.status == "skip"}
    assert all(d for d in skips.values())  # skipped always carries a reason


def test_weighted_polynomial_ring_type_2_3():
    # k[x, u] with deg u = 2: AS regular of type (2, 3), so CMreg = -1,
    # Torreg(k) = 1, ASreg = 0, Stanley sign (+1) with shift 3
    from homreg.series import stanley_check

    art = build_artifacts(
        parse_presentation("field Q; gens x:1 u:2; rels x*u - u*x", label="k[x,u2]")
    )
    rep = art.report()
    assert rep.as_regular.status == "yes"
    assert (rep.as_regular.dim, rep.as_regular.index) == (2, 3)
    assert rep.torreg_k.value == 1 and rep.cmreg.value == -1 and rep.asreg.value == 0
    assert art.betti_k().t_values() == [0, 2, 3]
    v = stanley_check(art.hilbert_or_none())
    assert v.satisfied and v.sign == 1 and v.shift == 3
    # identity witness: concavity exactly 1, normalized concavity 0
    bound = concavity_certificate(art, [])
    assert bound.exact and bound.upper.value == 1 and bound.c_minus.value == 0


def test_torreg_shift_covariance(golden):
    # Torreg(k(1)) = Torreg(k) - 1
    from homreg.resolution import betti_table, minimal_resolution, shift_module, trivial_module

    T = golden["T"]
    k1 = shift_module(trivial_module(T.presentation), 1)
    R = minimal_resolution(T.gb(), k1, 6, 10, algebra_hilbert=T.hilbert_or_none())
    shifted = tor_regularity(betti_table(R))
    assert shifted.is_exact and shifted.value == T.resolve_torreg().value - 1


def test_binomial_pattern_note(golden):
    from homreg.resolution import betti_table, minimal_resolution, module_via_map

    # k[x] over k[u2] along u -> x^2: free of rank 2, shifts {0, 1}: no pattern
    presU = golden["k[u2]"]
    presX = golden["k[x]"]
    m = module_via_map(presU.gb(), [presX.presentation.parse_poly("x^2")], presX.gb(), 10)
    R = minimal_resolution(
        presU.gb(), m, 4, 10,
        algebra_hilbert=presU.hilbert_or_none(), module_hilbert=presX.hilbert_or_none(),
    )
    assert binomial_pattern_note(betti_table(R), 1) is None

    # k[y] over the plane: shifts {0} and {1}: binomial pattern with d' = 1
    presP, presY = golden["plane"], golden["k[y]"]
    images = [presY.presentation.gen_poly(i) for i in range(2)]
    m = module_via_map(presP.gb(), images, presY.gb(), 10)
    R = minimal_resolution(
        presP.gb(), m, 4, 10,
        algebra_hilbert=presP.hilbert_or_none(), module_hilbert=presY.hilbert_or_none(),
    )
    note = binomial_pattern_note(betti_table(R), 2)
    assert note is not None and "d' = 1" in note
