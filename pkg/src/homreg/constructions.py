"""Algebra-level constructions: tensor products, normal quotients, finite maps.

Tensor products are built by presentation (disjoint generators plus
cross-commutators) but their invariants travel the additive shortcuts:
Hilbert series multiply, Betti tables of k convolve, Torreg and the
CM-evidence add.  Direct Groebner/resolution computation on the product
presentation stays available for cross-checking on small windows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corealg import (
    PresentationError,
    Poly,
    make_presentation,
)
from . import linalg
from .regularity import (
    AlgebraArtifacts,
    BoundedValue,
    CMEvidence,
    ConcavityWitness,
)
from .resolution import BettiTable
from .series import series_product


# ---------------------------------------------------------------------------
# tensor products


def _renamed(names, taken):
    out = []
    for n in names:
        candidate = n
        k = 2
        while candidate in taken or candidate in out:
            candidate = "%s%d" % (n, k)
            k += 1
        out.append(candidate)
    return out


def tensor_presentation(A, B, label=""):
    """Presentation of A (x) B: both relation sets plus cross-commutators."""
    if A.field != B.field:
        raise PresentationError("tensor factors must share the base field")
    b_names = _renamed(B.gen_names, set(A.gen_names))
    gens = list(zip(A.gen_names, A.gen_degs)) + list(zip(b_names, B.gen_degs))
    nA = A.n_gens
    field = A.field
    degs = tuple(d for _, d in gens)
    rels = []
    for r in A.relations:
        rels.append(Poly(dict(r.terms), r.degree))
    for r in B.relations:
        rels.append(Poly({tuple(g + nA for g in w): c for w, c in r.terms.items()}, r.degree))
    one = field.one()
    for i in range(nA):
        for jj in range(B.n_gens):
            j = nA + jj
            terms = {(i, j): one, (j, i): -one}
            rels.append(Poly.make(terms, degs))
    return make_presentation(
        field, gens, rels, label=label or "%s(x)%s" % (A.label or "A", B.label or "B")
    )


def convolve_betti(tA, tB, i_max, d_max, label=""):
    """Kunneth convolution of two Betti tables of k on the common window."""
    entries = {}
    for (p, j1), r1 in tA.entries.items():
        for (q, j2), r2 in tB.entries.items():
            i, j = p + q, j1 + j2
            if i <= i_max and j <= d_max:
                entries[(i, j)] = entries.get((i, j), 0) + r1 * r2
    total = (tA.termination_step if tA.terminated else tA.steps_computed) + (
        tB.termination_step if tB.terminated else tB.steps_computed
    )
    terminated = tA.terminated and tB.terminated and total <= i_max
    steps = min(total, i_max)
    return BettiTable(
        entries=entries,
        steps_computed=steps,
        i_max=i_max,
        d_max=d_max,
        terminated=terminated,
        termination_step=steps if terminated else None,
        side="left",
        label=label,
    )


def tensor_product(artA, artB, label=""):
    """Artifacts of A (x) B with additive evidence attached.

    Torreg and CMreg add over the factors; the Betti table of k is the
    convolution of the factor tables (recorded as such in provenance); the
    Hilbert series is the exact product when both factors have one.
    """
    pres = tensor_presentation(artA.presentation, artB.presentation, label=label)
    art = AlgebraArtifacts(
        pres,
        i_max=min(artA.i_max, artB.i_max),
        d_max=min(artA.d_max, artB.d_max),
        d_gb=min(artA.d_gb, artB.d_gb),
        cache_dir=artA.cache_dir,
    )
    hA, hB = artA.hilbert_or_none(), artB.hilbert_or_none()
    if hA is not None and hB is not None:
        art.known_hilbert = series_product(hA, hB)
    art.known_betti_k = convolve_betti(
        artA.betti_for_report(), artB.betti_for_report(), art.i_max, art.d_max, art.label
    )
    art.betti_provenance = "kunneth convolution of %s and %s" % (artA.label, artB.label)
    tA = artA.resolve_torreg()
    tB = artB.resolve_torreg()
    if tA.is_exact and tB.is_exact:
        art.torreg_known = BoundedValue.exact(
            tA.value + tB.value, "Torreg additive over tensor factors"
        )
    def upper_bound(factor_art, factor_torreg):
        if factor_torreg.is_exact:
            return (factor_torreg.value, "exact factor value")
        return factor_art.torreg_upper

    upA = upper_bound(artA, tA)
    upB = upper_bound(artB, tB)
    if upA is not None and upB is not None:
        art.torreg_upper = (upA[0] + upB[0], "sum of factor upper bounds")
    cmA, evA = artA.resolve_cmreg()
    cmB, evB = artB.resolve_cmreg()
    if evA is not None and evB is not None:
        art.cm_evidence = CMEvidence(
            "tensor_additive",
            (cmA, cmB),
            tuple(sorted(set(evA.assertions) | set(evB.assertions))),
        )
    art.assertions = list(
        dict.fromkeys(
            list(artA.assertions)
            + list(artB.assertions)
            + ["noetherianity of the tensor product: assumed, not verified"]
        )
    )
    return art


# ---------------------------------------------------------------------------
# quotients by normal regular elements


@dataclass(frozen=True)
class NormalElementCertificate:
    element_text: str
    degree: int
    left_witnesses: tuple  # per generator g: q_g with g*Omega = Omega*q_g mod I
    right_witnesses: tuple  # per generator g: p_g with Omega*g = p_g*Omega mod I
    normal_ok: bool
    regular_ok: bool
    checked_to: int
    notes: tuple = ()


def _solve_witness(G, omega, g_poly, left):
    """Solve g*Omega = Omega*q (left=True) or Omega*g = p*Omega for q/p."""
    pres = G.presentation
    field = pres.field
    dg = g_poly.degree
    target_poly = G.normal_form(g_poly * omega if left else omega * g_poly)
    j = omega.degree + dg
    words = G.normal_words(dg)
    basis = G.word_index(j)
    cols = []
    for w in words:
        wp = pres.word_poly(w)
        q = G.normal_form(omega * wp if left else wp * omega)
        col = [field.zero()] * len(basis)
        for u, c in q.terms.items():
            col[basis[u]] = col[basis[u]] + c
        cols.append(col)
    rhs = [field.zero()] * len(basis)
    for u, c in target_poly.terms.items():
        rhs[basis[u]] = rhs[basis[u]] + c
    rows = [[cols[c][t] for c in range(len(cols))] for t in range(len(basis))]
    sol = linalg.solve(rows, len(cols), rhs, field)
    if sol is None:
        return None
    terms = {w: c for w, c in zip(words, sol) if c}
    return Poly.make(terms, pres.gen_degs) if terms else Poly.zero()


def quotient_by_normal_element(artA, omega, d_max=None, label=""):
    """B = A/(Omega) with a normality/regularity certificate.

    Normality witnesses are solved degreewise by exact linear algebra;
    regularity (non-zerodivisor) is certified by dim (Omega*A)_j =
    dim A_{j-a} for every j up to the bound.  When A carries an exact CM
    regularity with AS-regular or normal-quotient evidence, B inherits the
    normal-quotient evidence CMreg(B) = CMreg(A) + deg(Omega) - 1, and for
    deg(Omega) <= 2 a certified Torreg(k) upper bound propagates.
    """
    A = artA.presentation
    G = artA.gb()
    if isinstance(omega, str):
        omega_text = omega
        omega = A.parse_poly(omega)
    else:
        omega_text = A.format_poly(omega)
    if omega.is_zero() or omega.degree < 1:
        raise PresentationError("the quotient element must be homogeneous of degree >= 1")
    d_max = artA.d_max if d_max is None else d_max
    nf_omega = G.normal_form(omega)
    if nf_omega.is_zero():
        raise PresentationError("element reduces to zero modulo the ideal; not a regular candidate")
    omega = nf_omega.monic(A.order)
    a = omega.degree

    left_w, right_w = [], []
    normal_ok = True
    failing = None
    for g in range(A.n_gens):
        gp = A.gen_poly(g)
        q = _solve_witness(G, omega, gp, left=True)
        p = _solve_witness(G, omega, gp, left=False)
        left_w.append(q)
        right_w.append(p)
        if q is None or p is None:
            normal_ok = False
            failing = A.gen_names[g]
    if not normal_ok:
        raise PresentationError(
            "normality fails for generator %s: no witness polynomial exists" % failing
        )

    # regularity up to the bound: dim (Omega A)_j == dim A_{j-a}
    field = A.field
    regular_ok = True
    for j in range(a, d_max + 1):
        basis = G.word_index(j)
        ech = linalg.Echelon(len(basis), field)
        for w in G.normal_words(j - a):
            q = G.normal_form(omega.rmul_word(w, j - a))
            vec = [field.zero()] * len(basis)
            for u, c in q.terms.items():
                vec[basis[u]] = vec[basis[u]] + c
            ech.add(vec)
        if ech.rank != G.dim(j - a):
            regular_ok = False
            break

    cert = NormalElementCertificate(
        element_text=omega_text,
        degree=a,
        left_witnesses=tuple(left_w),
        right_witnesses=tuple(right_w),
        normal_ok=normal_ok,
        regular_ok=regular_ok,
        checked_to=d_max,
        notes=("regularity certified up to degree %d only" % d_max,),
    )

    rels = list(A.relations) + [omega]
    presB = make_presentation(
        A.field,
        list(zip(A.gen_names, A.gen_degs)),
        rels,
        precedence=A.order.precedence,
        label=label or (A.label + "/(%s)" % omega_text),
    )
    artB = AlgebraArtifacts(presB, artA.i_max, artA.d_max, artA.d_gb, artA.cache_dir)
    artB.assertions = list(artA.assertions)
    if regular_ok:
        cmA, evA = artA.resolve_cmreg()
        if cmA.is_exact and evA is not None and evA.case in ("as_regular", "normal_quotient"):
            artB.cm_evidence = CMEvidence(
                "normal_quotient", (cmA, a), evA.assertions
            )
            if evA.case == "as_regular":
                d, l = evA.data
                artB.as_gorenstein_hint = (
                    (d - 1, l - a),
                    "quotient of an AS regular algebra by a normal regular element",
                )
                artB.cm_degree_hint = (
                    d - 1,
                    "Cohen-Macaulay degree inherited from the AS regular parent",
                )
        if a <= 2:
            tA = artA.resolve_torreg()
            upper = None
            if tA.is_exact:
                upper = (tA.value, "Torreg does not grow under quotients by degree<=2 normal regular elements")
            elif artA.torreg_upper is not None:
                upper = (
                    artA.torreg_upper[0],
                    "inherited upper bound: " + artA.torreg_upper[1],
                )
            if upper is not None:
                artB.torreg_upper = upper
    return artB, cert


# ---------------------------------------------------------------------------
# finite maps


@dataclass(frozen=True)
class FiniteMapCertificate:
    images_text: tuple
    left_cokernel: tuple  # dims of A / f(T_{>=1}) A per degree
    right_cokernel: tuple  # dims of A / A f(T_{>=1}) per degree
    verdict: str  # "finite" | "not_finite_up_to_bound" | "inconclusive"
    top_degree: object
    window: int

    @property
    def finite(self):
        return self.verdict == "finite"


def _cokernel_dims(G_A, images, d_max, side_left):
    field = G_A.presentation.field
    dims = []
    for j in range(d_max + 1):
        basis = G_A.word_index(j)
        ech = linalg.Echelon(len(basis), field)
        for fg in images:
            dg = fg.degree
            if j - dg < 0:
                continue
            for w in G_A.normal_words(j - dg):
                prod = fg.rmul_word(w, j - dg) if side_left else fg.lmul_word(w, j - dg)
                q = G_A.normal_form(prod)
                vec = [field.zero()] * len(basis)
                for u, c in q.terms.items():
                    vec[basis[u]] = vec[basis[u]] + c
                ech.add(vec)
        dims.append(G_A.dim(j) - ech.rank)
    return tuple(dims)


def finite_map_check(artT, images, artA, d_max=None):
    """Certify finiteness of a graded map T -> A by cokernel dimensions.

    Both module sides are checked.  The verdict is `finite` only when the
    cokernels vanish on a trailing window at least as wide as the largest
    generator degree of A, so no module generator can hide above the
    bound; a nonzero cokernel at the top of the window is reported as
    `not_finite_up_to_bound`, anything else as `inconclusive`.
    """
    T = artT.presentation
    A = artA.presentation
    G_A = artA.gb()
    d_max = artA.d_max if d_max is None else d_max
    if isinstance(images, dict):
        images = [images[name] for name in T.gen_names]
    images = [A.parse_poly(p) if isinstance(p, str) else p for p in images]
    if len(images) != T.n_gens:
        raise PresentationError("need one image per source generator")
    for i, p in enumerate(images):
        if p.is_zero() or p.degree != T.gen_degs[i]:
            raise PresentationError(
                "image of %s must be homogeneous of degree %d" % (T.gen_names[i], T.gen_degs[i])
            )
    left = _cokernel_dims(G_A, images, d_max, side_left=True)
    right = _cokernel_dims(G_A, images, d_max, side_left=False)
    width = A.max_gen_degree()
    nonzero = [j for j in range(d_max + 1) if left[j] or right[j]]
    top = max(nonzero) if nonzero else 0
    if top + width <= d_max and all(
        left[j] == right[j] == 0 for j in range(top + 1, d_max + 1)
    ):
        verdict = "finite"
    elif left[d_max] or right[d_max]:
        verdict = "not_finite_up_to_bound"
    else:
        verdict = "inconclusive"
    return FiniteMapCertificate(
        images_text=tuple(A.format_poly(p) for p in images),
        left_cokernel=left,
        right_cokernel=right,
        verdict=verdict,
        top_degree=top,
        window=d_max,
    )


def concavity_witness(artT, images, artA, d_max=None):
    """Package a candidate finite map from an AS regular algebra as a witness."""
    cert = finite_map_check(artT, images, artA, d_max)
    verdict = artT.as_regular_verdict()
    torregT = artT.resolve_torreg()
    koszul_ok = torregT.is_exact and torregT.value == 0
    neg_cm = (verdict.index - verdict.dim) if verdict.status == "yes" else 0
    return ConcavityWitness(
        label=artT.label,
        neg_cmreg=neg_cm,
        as_regular_ok=verdict.status == "yes",
        finite_ok=cert.finite,
        koszul_ok=koszul_ok,
        note="finite map verdict: %s" % cert.verdict,
    )
