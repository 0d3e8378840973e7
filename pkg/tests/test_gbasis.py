import random

import pytest

from homreg.corealg import CertificationError, Poly, PresentationError, parse_presentation
from homreg.gbasis import (
    buchberger_truncated,
    groebner,
    load_basis,
    normal_form,
    normal_words,
    save_basis,
)

from oracles import brute_algebra_dim


def plane():
    return parse_presentation("field Q; gens x:1 y:1; rels x*y - y*x", label="plane")


def t34():
    return parse_presentation(
        "field Q; gens x:1 y:1; rels x^2*y - y*x^2, x*y^2 - y^2*x", label="T"
    )


def test_plane_basis_complete():
    G = buchberger_truncated(plane(), 8)
    assert G.complete
    assert len(G.elements) == 1
    assert G.elements[0] == plane().parse_poly("x*y - y*x")


def test_t34_basis_complete_with_zero_overlap():
    # oracle: the single overlap word x^2y^2 must reduce to zero by degree 6
    pres = t34()
    G = buchberger_truncated(pres, 8)
    assert G.complete
    assert set(G.elements) == {
        pres.parse_poly("x^2*y - y*x^2"),
        pres.parse_poly("x*y^2 - y^2*x"),
    }
    g1 = pres.parse_poly("x^2*y - y*x^2")
    g2 = pres.parse_poly("x*y^2 - y^2*x")
    s_poly = g1 * pres.parse_poly("y") - pres.parse_poly("x") * g2
    assert G.normal_form(s_poly).is_zero()


def test_monomial_ideal_basis():
    pres = parse_presentation("field Q; gens x:1; rels x^3", label="A3")
    G = buchberger_truncated(pres, 6)
    assert G.complete
    assert [g.degree for g in G.elements] == [3]


def test_truncation_below_relation_degree_rejected():
    with pytest.raises(PresentationError, match="below the maximal relation degree"):
        buchberger_truncated(t34(), 2)


def test_incomplete_flag_when_overlaps_exceed_window():
    # x^3 self-overlaps live in degrees 4 and 5; d_gb = 3 cannot certify them
    pres = parse_presentation("field Q; gens x:1; rels x^3")
    G = buchberger_truncated(pres, 3)
    assert not G.complete
    with pytest.raises(CertificationError):
        G.normal_words(4)
    with pytest.raises(CertificationError):
        normal_form(G, pres.parse_poly("x^4"))


def test_normal_form_examples():
    G = buchberger_truncated(plane(), 8)
    p = plane().parse_poly("x*y")
    assert normal_form(G, p) == plane().parse_poly("y*x")
    assert normal_form(G, plane().parse_poly("y*x")) == plane().parse_poly("y*x")

    GT = buchberger_truncated(t34(), 8)
    assert normal_form(GT, t34().parse_poly("x^2*y")) == t34().parse_poly("y*x^2")


def test_normal_form_linear_and_idempotent():
    pres = t34()
    G = buchberger_truncated(pres, 8)
    rng = random.Random(3)
    words4 = G.presentation
    from oracles import free_words

    all4 = free_words(pres.gen_degs, 4)
    for _ in range(20):
        def rand_poly():
            terms = {}
            for w in rng.sample(all4, 5):
                c = rng.randrange(-3, 4)
                if c:
                    terms[w] = pres.field.from_int(c)
            return Poly.make(terms, pres.gen_degs)

        p, q = rand_poly(), rand_poly()
        a = pres.field.from_int(rng.randrange(1, 5))
        b = pres.field.from_int(rng.randrange(1, 5))
        lhs = G.normal_form(p.scale(a) + q.scale(b))
        rhs = G.normal_form(p).scale(a) + G.normal_form(q).scale(b)
        assert lhs == rhs
        nf = G.normal_form(p)
        assert G.normal_form(nf) == nf


def test_normal_words_examples():
    G = buchberger_truncated(plane(), 8)
    basis = normal_words(G, 2)
    assert basis.degree == 2
    assert len(basis.words) == 3  # dim k[x,y]_2

    presB = parse_presentation("field Q; gens x:1 y:1; rels x^2, x*y^2 - y^2*x", label="B")
    GB = buchberger_truncated(presB, 8)
    assert len(GB.normal_words(3)) == 4  # dim B_3 = 4, h_B = 1/(1-t)^2

    presA3 = parse_presentation("field Q; gens x:1; rels x^3")
    GA3 = buchberger_truncated(presA3, 8)
    assert GA3.normal_words(3) == ()


def test_determinism():
    pres = t34()
    G1 = buchberger_truncated(pres, 10)
    G2 = buchberger_truncated(pres, 10)
    assert G1.elements == G2.elements
    assert G1.complete == G2.complete


def test_dimension_consistency_against_brute_force():
    cases = [
        plane(),
        t34(),
        parse_presentation("field Q; gens x:1 y:1; rels x^2, x*y^2 - y^2*x"),
        parse_presentation("field Q; gens x:1 t:2; rels x*t - t*x, t^2 - x^4"),
    ]
    for pres in cases:
        G = buchberger_truncated(pres, 6)
        for j in range(6):
            assert G.dim(j) == brute_algebra_dim(pres, j), (pres.label, j)


def test_random_presentations_over_f101():
    rng = random.Random(2024)
    from oracles import free_words

    for trial in range(10):
        n_gens = rng.choice([2, 3])
        gens = " ".join("g%d:1" % i for i in range(n_gens))
        pres = parse_presentation("field F101; gens %s" % gens, label="rand%d" % trial)
        rels = []
        for _ in range(rng.choice([1, 2])):
            deg = rng.choice([2, 3])
            terms = {}
            for w in free_words(pres.gen_degs, deg):
                c = rng.randrange(101) if rng.random() < 0.4 else 0
                if c:
                    terms[w] = pres.field.from_int(c)
            if terms:
                rels.append(Poly.make(terms, pres.gen_degs))
        if not rels:
            continue
        from homreg.corealg import make_presentation

        pres = make_presentation(
            pres.field, [("g%d" % i, 1) for i in range(n_gens)], rels, label=pres.label
        )
        G = buchberger_truncated(pres, 6, element_limit=300)
        for j in range(6):
            if not G.complete and j > G.d_gb:
                break
            assert G.dim(j) == brute_algebra_dim(pres, j), (trial, j)
        # normal form properties at degree <= 5
        all3 = free_words(pres.gen_degs, 3)
        for _ in range(5):
            terms = {w: pres.field.from_int(rng.randrange(1, 101)) for w in rng.sample(all3, 3)}
            p = Poly.make(terms, pres.gen_degs)
            nf = G.normal_form(p)
            assert G.normal_form(nf) == nf


def test_cache_round_trip(tmp_path):
    pres = t34()
    G = buchberger_truncated(pres, 10)
    save_basis(G, str(tmp_path))
    loaded = load_basis(pres, 10, str(tmp_path))
    assert loaded is not None
    assert loaded.elements == G.elements
    assert loaded.complete == G.complete
    # load_or_compute path
    G2 = groebner(pres, 10, str(tmp_path))
    assert G2.elements == G.elements
    # a different truncation misses the cache and recomputes
    G3 = groebner(pres, 9, str(tmp_path))
    assert G3.elements == G.elements
