"""Numerical regularity invariants, verdicts and reports.

Every reported number carries a qualifier: Exact values come with a
termination or rational-form certificate, AtLeast values are witnessed by
nonzero entries inside the truncation window, and Unknown absorbs
everything else.  Hypotheses the tool cannot decide (noetherianity,
dualizing-complex conditions, Cohen-Macaulayness) are carried as explicit
assertion strings and surface in every report that uses them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .corealg import (
    CertificationError,
    NEG_INF,
    opposite_presentation,
)
from . import gbasis as gb_mod
from . import resolution as res_mod
from . import series as series_mod

DEFAULT_I_MAX = 8
DEFAULT_D_MAX = 12
DEFAULT_D_GB = 12

DUALIZING_ASSERTION = "dualizing-complex hypotheses: user assertion (not machine-checkable)"
NOETHERIAN_ASSERTION = "noetherian: user assertion"


# ---------------------------------------------------------------------------
# bounded values


@dataclass(frozen=True)
class BoundedValue:
    """An integer invariant with a truncation-aware qualifier."""

    kind: str  # "exact" | "at_least" | "unknown"
    value: object
    note: str = ""

    @staticmethod
    def exact(v, note=""):
        return BoundedValue("exact", v, note)

    @staticmethod
    def at_least(v, note=""):
        return BoundedValue("at_least", v, note)

    @staticmethod
    def unknown(note=""):
        return BoundedValue("unknown", None, note)

    @property
    def is_exact(self):
        return self.kind == "exact"

    def add(self, other, note=""):
        """Sum with qualifier propagation; Unknown absorbs, AtLeast persists."""
        if self.kind == "unknown" or other.kind == "unknown":
            return BoundedValue.unknown(note)
        kind = "exact" if self.kind == other.kind == "exact" else "at_least"
        return BoundedValue(kind, self.value + other.value, note)

    def add_int(self, n, note=""):
        if self.kind == "unknown":
            return BoundedValue.unknown(note)
        return BoundedValue(self.kind, self.value + n, note)

    def __str__(self):
        if self.kind == "exact":
            return str(self.value)
        if self.kind == "at_least":
            return ">=%s" % self.value
        return "unknown"

    def record(self):
        return {"kind": self.kind, "value": self.value, "note": self.note}


@dataclass(frozen=True)
class CMEvidence:
    """Which special-case formula justifies a CM-regularity value.

    Cases: finite_dimensional (CMreg = top degree), as_regular (d - l),
    cm_asserted (s + deg h, with s a user assertion), normal_quotient
    (parent + deg Omega - 1), tensor_additive (sum over factors).
    """

    case: str
    data: tuple = ()
    assertions: tuple = ()

    def describe(self):
        return self.case


@dataclass(frozen=True)
class KoszulVerdict:
    status: str  # "yes" | "no" | "unknown"
    caveat: str = ""
    witness: object = None

    def text(self):
        if self.status == "yes":
            return "yes" + (" (%s)" % self.caveat if self.caveat else "")
        if self.status == "no":
            return "no (beta_%d,%d != 0)" % self.witness if self.witness else "no"
        return "unknown to bound"


@dataclass(frozen=True)
class ASRegularVerdict:
    status: str  # "yes" | "no" | "unknown"
    dim: object = None
    index: object = None
    reason: str = ""
    assertions: tuple = ()

    def text(self):
        if self.status == "yes":
            return "yes, type (%d, %d)" % (self.dim, self.index)
        if self.status == "no":
            return "no (%s)" % self.reason
        return "unknown to bound"


# ---------------------------------------------------------------------------
# artifacts: everything computed about one algebra presentation


class AlgebraArtifacts:
    """Lazy bundle of the computable artifacts of one presentation.

    Construction operations (tensor products, quotients) may pre-populate
    evidence slots: a known Hilbert series, a known Betti table with its
    provenance, an evidence-based Torreg value or upper bound, and a CM
    evidence case.  Reports consume these with full provenance.
    """

    def __init__(self, presentation, i_max=DEFAULT_I_MAX, d_max=DEFAULT_D_MAX,
                 d_gb=DEFAULT_D_GB, cache_dir=None, element_limit=2000):
        self.presentation = presentation
        self.i_max = i_max
        self.d_max = d_max
        self.d_gb = d_gb
        self.cache_dir = cache_dir
        self.element_limit = element_limit
        self.label = presentation.label or "algebra"
        # evidence slots, populated by constructions
        self.known_hilbert = None
        self.known_betti_k = None
        self.betti_provenance = "direct"
        self.torreg_known = None
        self.torreg_upper = None  # (value, note)
        self.cm_evidence = None
        self.cm_degree_hint = None  # (s, note)
        self.as_gorenstein_hint = None  # ((d, l), note)
        self.assertions = []
        # caches
        self._gb = None
        self._hilbert = None
        self._res_k = None
        self._betti_k = None
        self._ext_k = None
        self._opposite = None
        self._verdict = None

    # -- base artifacts -----------------------------------------------------

    def gb(self):
        if self._gb is None:
            self._gb = gb_mod.groebner(
                self.presentation, self.d_gb, self.cache_dir, self.element_limit
            )
        return self._gb

    def hilbert_or_none(self):
        """Exact rational Hilbert series, or None when not certified."""
        if self.known_hilbert is not None:
            return self.known_hilbert
        if self._hilbert is None:
            G = self.gb()
            self._hilbert = series_mod.hilbert_rational(G) if G.complete else False
        return self._hilbert or None

    def hilbert(self):
        h = self.hilbert_or_none()
        if h is None:
            raise CertificationError(
                "no exact rational Hilbert series for %s (incomplete Groebner basis)" % self.label
            )
        return h

    def hilbert_truncated(self, upto=None):
        return series_mod.hilbert_truncated(self.gb(), self.d_max if upto is None else upto)

    def resolution_k(self):
        if self._res_k is None:
            self._res_k = res_mod.minimal_resolution(
                self.gb(),
                res_mod.trivial_module(self.presentation),
                self.i_max,
                self.d_max,
                algebra_hilbert=self.hilbert_or_none(),
                label=self.label,
            )
        return self._res_k

    def betti_k(self):
        if self._betti_k is None:
            self._betti_k = res_mod.betti_table(self.resolution_k())
        return self._betti_k

    def betti_for_report(self):
        if self.known_betti_k is not None:
            return self.known_betti_k
        return self.betti_k()

    def ext_k(self):
        if self._ext_k is None:
            self._ext_k = res_mod.ext_into_algebra(self.resolution_k(), self.gb())
        return self._ext_k

    def opposite(self):
        if self._opposite is None:
            self._opposite = AlgebraArtifacts(
                opposite_presentation(self.presentation),
                self.i_max,
                self.d_max,
                self.d_gb,
                self.cache_dir,
                self.element_limit,
            )
        return self._opposite

    # -- resolved invariants --------------------------------------------------

    def resolve_torreg(self):
        """Torreg(k) merging the window lower bound with any certified upper bound."""
        if self.torreg_known is not None:
            return self.torreg_known
        bv = tor_regularity(self.betti_for_report())
        if bv.kind == "at_least" and self.torreg_upper is not None:
            u, unote = self.torreg_upper
            if bv.value > u:
                raise CertificationError(
                    "internal inconsistency: witnessed Torreg %d exceeds certified upper bound %d (%s)"
                    % (bv.value, u, unote)
                )
            if bv.value == u:
                return BoundedValue.exact(u, "window lower bound meets upper bound: " + unote)
            return BoundedValue.at_least(bv.value, "%s; upper bound %d (%s)" % (bv.note, u, unote))
        return bv

    def resolve_cm_evidence(self, allow_as_regular=True):
        if self.cm_evidence is not None:
            return self.cm_evidence
        if allow_as_regular:
            v = self.as_regular_verdict()
            if v.status == "yes":
                return CMEvidence("as_regular", (v.dim, v.index))
        h = self.hilbert_or_none()
        if h is not None and h.is_polynomial():
            return CMEvidence("finite_dimensional")
        if self.cm_degree_hint is not None and h is not None:
            s, note = self.cm_degree_hint
            return CMEvidence("cm_asserted", (s,), (note,))
        return None

    def resolve_cmreg(self, allow_as_regular=True):
        ev = self.resolve_cm_evidence(allow_as_regular)
        if ev is None:
            return BoundedValue.unknown("no applicable CM-regularity evidence case"), None
        return cm_regularity(self, ev), ev

    def as_regular_verdict(self):
        if self._verdict is None:
            self._verdict = as_regular_verdict(self)
        return self._verdict

    def report(self):
        return build_report(self)


def build_artifacts(presentation, i_max=DEFAULT_I_MAX, d_max=DEFAULT_D_MAX,
                    d_gb=DEFAULT_D_GB, cache_dir=None):
    return AlgebraArtifacts(presentation, i_max, d_max, d_gb, cache_dir)


# ---------------------------------------------------------------------------
# core invariant operations


def tor_regularity(table):
    """sup (j - i) over certified Betti entries; Exact only on termination."""
    if not table.entries:
        return BoundedValue.unknown("empty Betti table")
    v = max(j - i for (i, j) in table.entries)
    if table.terminated:
        return BoundedValue.exact(
            v, "resolution terminated at step %s" % table.termination_step
        )
    return BoundedValue.at_least(v, "window (i<=%d, j<=%d)" % (table.i_max, table.d_max))


def koszul_verdict(table):
    """Linearity of the resolution of k, with an explicit window caveat."""
    off = sorted((i, j) for (i, j) in table.entries if j != i)
    if off:
        return KoszulVerdict("no", witness=off[0])
    if table.terminated:
        return KoszulVerdict("yes")
    if table.steps_computed >= 1:
        return KoszulVerdict(
            "yes", caveat="linear through window (i<=%d, j<=%d)" % (table.i_max, table.d_max)
        )
    return KoszulVerdict("unknown")


def cm_regularity(art, evidence):
    """CM regularity through one of the evidence-case formulas."""
    case = evidence.case
    if case == "finite_dimensional":
        h = art.hilbert_or_none()
        if h is None or not h.is_polynomial():
            raise CertificationError(
                "finite-dimensional evidence inconsistent: the Hilbert series of %s does not terminate"
                % art.label
            )
        return BoundedValue.exact(h.degree, "CMreg = top degree (finite-dimensional)")
    if case == "as_regular":
        d, l = evidence.data
        return BoundedValue.exact(d - l, "CMreg = d - l for AS type (%d, %d)" % (d, l))
    if case == "cm_asserted":
        (s,) = evidence.data
        h = art.hilbert_or_none()
        if h is None:
            raise CertificationError("CM-asserted evidence needs an exact rational Hilbert series")
        return BoundedValue.exact(
            s + h.degree, "CMreg = s + deg h with s = %d (user-asserted Cohen-Macaulay degree)" % s
        )
    if case == "normal_quotient":
        parent_value, a = evidence.data
        return parent_value.add_int(
            a - 1, "CMreg = parent CMreg + (deg Omega - 1), deg Omega = %d" % a
        )
    if case == "tensor_additive":
        acc = BoundedValue.exact(0)
        for v in evidence.data:
            acc = acc.add(v)
        return BoundedValue(acc.kind, acc.value, "CMreg additive over tensor factors")
    raise CertificationError("unknown CM evidence case %r" % case)


def as_regularity(torreg_k, cmreg):
    """Numerical AS regularity Torreg(k) + CMreg with qualifier propagation."""
    return torreg_k.add(cmreg, "Torreg(k) + CMreg")


def as_regular_verdict(art):
    """Certificate-backed AS-regularity verdict.

    Yes: the resolution of k terminates at step d and the Ext table into
    the algebra (both sides) is concentrated in homological degree d with
    a one-dimensional top, reading off the type (d, l).  No: either the
    top fails concentration in a certified range, or the numerical AS
    regularity is certified >= 1.  Everything else: unknown to the bound.
    """
    assertions = (NOETHERIAN_ASSERTION, DUALIZING_ASSERTION)
    if art.known_betti_k is None:
        res = art.resolution_k()
        if res.terminated:
            d = res.termination_step
            ext = art.ext_k()
            off = sorted(i for (i, _) in ext.entries if i != d)
            if off:
                return ASRegularVerdict(
                    "no",
                    reason="Ext^%d(k, A) is nonzero away from the top step %d" % (off[0], d),
                    assertions=assertions,
                )
            top = sorted((j, r) for (i, j), r in ext.entries.items() if i == d)
            if len(top) == 1 and top[0][1] == 1:
                ell = -top[0][0]
                op = art.opposite()
                res_op = op.resolution_k()
                ext_op = op.ext_k()
                mirror = sorted(ext_op.entries.items())
                if (
                    res_op.terminated
                    and res_op.termination_step == d
                    and mirror == [((d, -ell), 1)]
                ):
                    return ASRegularVerdict("yes", dim=d, index=ell, assertions=assertions)
                return ASRegularVerdict(
                    "no", reason="left/right Ext tables disagree", assertions=assertions
                )
            return ASRegularVerdict(
                "no",
                reason="top Ext is not one-dimensional in the certified window",
                assertions=assertions,
            )
    # numerical route: ASreg >= 1 certified excludes AS regularity
    torreg = art.resolve_torreg()
    cmreg, _ = art.resolve_cmreg(allow_as_regular=False)
    if cmreg.is_exact and torreg.kind in ("exact", "at_least"):
        low = torreg.value + cmreg.value
        if low >= 1:
            return ASRegularVerdict(
                "no",
                reason="numerical AS regularity >= %d > 0" % low,
                assertions=assertions,
            )
    return ASRegularVerdict("unknown", reason="window too small", assertions=assertions)


# ---------------------------------------------------------------------------
# Hilbert-series criterion


@dataclass(frozen=True)
class HilbertCriterionResult:
    verdict: str  # "yes" | "no"
    h_degree: int
    s: int
    assertions: tuple
    witness_notes: tuple

    def text(self):
        return "%s (deg h = %d, -s = %d)" % (self.verdict, self.h_degree, -self.s)


def hilbert_criterion(art, s, witnesses=()):
    """AS regularity via deg h_A = -s, under explicitly recorded hypotheses.

    `witnesses` may supply candidate finite maps from Koszul AS regular
    algebras; each is annotated with whether its certificates actually
    support the criterion's hypotheses.
    """
    h = art.hilbert_or_none()
    if h is None:
        raise CertificationError("Hilbert-series criterion needs an exact rational form")
    assertions = [
        "Cohen-Macaulay of degree s = %d: user assertion" % s,
        NOETHERIAN_ASSERTION,
        "existence of a finite map from a Koszul AS regular algebra: hypothesis",
    ]
    notes = []
    qualified = 0
    for w in witnesses:
        ok = w.as_regular_ok and w.finite_ok and w.koszul_ok
        notes.append(
            "%s: AS regular %s, finite %s, Koszul %s -> %s"
            % (
                w.label,
                "yes" if w.as_regular_ok else "no/unknown",
                "yes" if w.finite_ok else "no/unknown",
                "yes" if w.koszul_ok else "no/unknown",
                "qualifies" if ok else "does NOT satisfy the hypotheses",
            )
        )
        qualified += ok
    if witnesses and not qualified:
        notes.append("no supplied witness satisfies the hypotheses; the verdict is conditional")
    verdict = "yes" if h.degree == -s else "no"
    return HilbertCriterionResult(verdict, h.degree, s, tuple(assertions), tuple(notes))


# ---------------------------------------------------------------------------
# concavity


@dataclass(frozen=True)
class ConcavityWitness:
    """A certified finite map from an AS regular algebra.

    `neg_cmreg` is -CMreg(T) = Torreg of T's trivial module; the flags
    record the certificates gathered by the constructions layer.
    """

    label: str
    neg_cmreg: int
    as_regular_ok: bool
    finite_ok: bool
    koszul_ok: bool = False
    note: str = ""


@dataclass(frozen=True)
class ConcavityBound:
    upper: BoundedValue
    exact: bool
    c_minus: BoundedValue
    witnesses: tuple
    notes: tuple

    def text(self):
        c = ("%s" if self.exact else "<= %s") % self.upper.value
        return "c = %s, c_minus = %s" % (c, self.c_minus)


def concavity_certificate(art, witnesses=(), include_self=True):
    """Upper bound on the concavity, with exactness certificates.

    Exactness routes: the algebra is itself AS regular (identity witness);
    the bound is 0 (concavity is nonnegative by definition); or the gap to
    the normalized lower bound is closed by the regularity dichotomy
    (normalized concavity 0 forces AS regularity, so a certified
    non-AS-regular algebra with bound gap 1 sits at the top).
    """
    usable = [w for w in witnesses if w.as_regular_ok and w.finite_ok]
    notes = []
    cmreg, _ = art.resolve_cmreg()
    verdict = art.as_regular_verdict()
    if include_self and verdict.status == "yes":
        own = -(verdict.dim - verdict.index)
        usable.append(
            ConcavityWitness(art.label + " (identity)", own, True, True, note="identity witness")
        )
        notes.append("algebra is AS regular: c = -CMreg exactly (identity witness)")
    if not usable:
        return ConcavityBound(
            BoundedValue.unknown("no certified witness"), False,
            BoundedValue.at_least(0, "normalized concavity is nonnegative"),
            (), ("no witness passed both certificates",),
        )
    upper = min(w.neg_cmreg for w in usable)
    exact = False
    if verdict.status == "yes":
        exact = True
        upper = min(upper, -(verdict.dim - verdict.index))
    elif upper == 0:
        exact = True
        notes.append("bound 0 is exact: concavity is nonnegative by definition")
    elif cmreg.is_exact:
        lower = -cmreg.value
        if upper == lower:
            exact = True
            notes.append("upper bound meets the normalized lower bound -CMreg")
        elif upper == lower + 1 and verdict.status == "no":
            exact = True
            notes.append(
                "gap-one dichotomy: normalized concavity 0 would force AS regularity, "
                "which is excluded (%s)" % verdict.reason
            )
    if exact and cmreg.is_exact:
        c_minus = BoundedValue.exact(upper + cmreg.value, "c + CMreg")
    elif cmreg.is_exact:
        c_minus = BoundedValue.at_least(0, "normalized concavity is nonnegative")
    else:
        c_minus = BoundedValue.unknown("CMreg not exact")
    witness_names = ", ".join(w.label for w in usable)
    upper_bv = BoundedValue.exact(upper, "min over certified witnesses: %s" % witness_names)
    return ConcavityBound(upper_bv, exact, c_minus, tuple(usable), tuple(notes))


# ---------------------------------------------------------------------------
# invariant-subring obstruction


@dataclass(frozen=True)
class ObstructionVerdict:
    status: str  # "obstructed" | "no conclusion"
    inequality: str
    beta1: object
    beta2: object
    notes: tuple = ()

    def text(self):
        return "%s: %s" % (self.status, self.inequality)


def invariant_ring_obstruction(art, cbound, cmreg_T_range=None):
    """Generator/relation-degree lower bounds on the concavity of invariant rings.

    When the certified concavity falls below beta_1 - 1, the algebra cannot
    be an invariant subring of a semisimple Hopf action on an AS regular
    algebra.  The relation-degree test runs against a user-supplied range
    of candidate CMreg(T) values.
    """
    table = art.betti_for_report()
    beta1 = table.t(1)
    beta2 = table.t(2)
    if not cbound.exact:
        return ObstructionVerdict(
            "no conclusion", "concavity bound is not exact", beta1, beta2
        )
    c = cbound.upper.value
    if beta1 is not NEG_INF and c < beta1 - 1:
        return ObstructionVerdict(
            "obstructed",
            "c = %d < %d = beta_1 - 1" % (c, beta1 - 1),
            beta1,
            beta2,
            ("not an invariant subring of a semisimple Hopf action on an AS regular algebra",),
        )
    notes = []
    if cmreg_T_range is not None and beta2 is not NEG_INF:
        violated_all = True
        for cm_T in cmreg_T_range:
            bound = min(
                Fraction(beta2, 2) - cm_T,
                Fraction(beta2 - cm_T - 1, 2),
                Fraction(beta2 - 2),
            )
            if Fraction(c) >= bound:
                violated_all = False
        if violated_all:
            return ObstructionVerdict(
                "obstructed",
                "c = %d violates the relation-degree bound for every CMreg(T) in %s"
                % (c, list(cmreg_T_range)),
                beta1,
                beta2,
            )
        notes.append("relation-degree test inconclusive on the supplied CMreg(T) range")
    return ObstructionVerdict(
        "no conclusion", "c = %d >= beta_1 - 1 = %d" % (c, (beta1 - 1) if beta1 is not NEG_INF else 0),
        beta1, beta2, tuple(notes),
    )


# ---------------------------------------------------------------------------
# pairs and report assembly


def ta_tc_pairs(report):
    """((Torreg k, ASreg), (Torreg k, CMreg)); validates CMreg >= -Torreg."""
    ta = (report.torreg_k, report.asreg)
    tc = (report.torreg_k, report.cmreg)
    if report.torreg_k.is_exact and report.cmreg.is_exact:
        if report.cmreg.value < -report.torreg_k.value:
            raise CertificationError(
                "internal inconsistency: CMreg < -Torreg(k) on exact values"
            )
    return ta, tc


@dataclass
class RegularityReport:
    label: str
    window: tuple  # (i_max, d_max, d_gb)
    torreg_k: BoundedValue
    cmreg: BoundedValue
    cm_evidence: object
    asreg: BoundedValue
    koszul: KoszulVerdict
    as_regular: ASRegularVerdict
    gldim: BoundedValue
    as_index: BoundedValue
    ta_pair: tuple
    tc_pair: tuple
    stanley: object
    extreg_note: str
    betti_provenance: str
    annotations: tuple
    assertions: tuple

    def records(self):
        out = []

        def rec(name, bv, evidence=""):
            out.append(
                {
                    "invariant": name,
                    "kind": bv.kind,
                    "value": bv.value,
                    "window": list(self.window),
                    "evidence": evidence or bv.note,
                    "assertions": list(self.assertions),
                }
            )

        rec("torreg_k", self.torreg_k)
        rec("cmreg", self.cmreg, self.cm_evidence.describe() if self.cm_evidence else "none")
        rec("asreg", self.asreg)
        rec("gldim", self.gldim)
        rec("as_index", self.as_index)
        out.append(
            {
                "invariant": "koszul",
                "kind": "verdict",
                "value": self.koszul.status,
                "window": list(self.window),
                "evidence": self.koszul.caveat,
                "assertions": list(self.assertions),
            }
        )
        out.append(
            {
                "invariant": "as_regular",
                "kind": "verdict",
                "value": self.as_regular.status,
                "window": list(self.window),
                "evidence": self.as_regular.reason
                or (
                    "type (%s, %s)" % (self.as_regular.dim, self.as_regular.index)
                    if self.as_regular.status == "yes"
                    else ""
                ),
                "assertions": list(self.assertions),
            }
        )
        if self.stanley is not None:
            out.append(
                {
                    "invariant": "stanley",
                    "kind": "verdict",
                    "value": self.stanley.text(),
                    "window": list(self.window),
                    "evidence": "functional equation on the exact rational form",
                    "assertions": list(self.assertions),
                }
            )
        return out

    def to_text(self):
        lines = ["regularity report: %s" % self.label]
        lines.append("  window: i_max=%d d_max=%d d_gb=%d" % self.window)
        lines.append("  Torreg(k) : %s" % self.torreg_k)
        lines.append(
            "  CMreg     : %s  [%s]"
            % (self.cmreg, self.cm_evidence.describe() if self.cm_evidence else "no evidence")
        )
        lines.append("  ASreg     : %s" % self.asreg)
        lines.append("  Koszul    : %s" % self.koszul.text())
        lines.append("  AS regular: %s" % self.as_regular.text())
        lines.append("  gldim     : %s" % self.gldim)
        lines.append("  AS index  : %s" % self.as_index)
        lines.append("  ta pair   : (%s, %s)" % self.ta_pair)
        lines.append("  tc pair   : (%s, %s)" % self.tc_pair)
        if self.stanley is not None:
            lines.append("  Stanley   : %s" % self.stanley.text())
        lines.append("  note      : %s" % self.extreg_note)
        lines.append("  betti via : %s" % self.betti_provenance)
        for a in self.annotations:
            lines.append("  annotation: %s" % a)
        for a in self.assertions:
            lines.append("  assertion : %s" % a)
        return "\n".join(lines)


def _growth_annotation(table):
    """Note when t_i - i is nondecreasing and increasing across the window."""
    ts = []
    top = table.termination_step if table.terminated else table.steps_computed
    for i in range(top + 1):
        t = table.t(i)
        if t is NEG_INF:
            return None
        ts.append(t - i)
    if len(ts) < 3 or table.terminated:
        return None
    nondecreasing = all(a <= b for a, b in zip(ts, ts[1:]))
    increasing = ts[-1] > ts[0]
    if nondecreasing and increasing:
        return (
            "growth: t_i - i is nondecreasing and increases across the window "
            "(consistent with an infinite value; never promoted)"
        )
    return None


def build_report(art):
    torreg = art.resolve_torreg()
    cmreg, cm_evidence = art.resolve_cmreg()
    asreg = as_regularity(torreg, cmreg)
    table = art.betti_for_report()
    koszul = koszul_verdict(table)
    if torreg.is_exact:
        if torreg.value == 0:
            koszul = KoszulVerdict("yes", caveat="Torreg(k) = 0 certified")
        elif torreg.value > 0 and koszul.status != "no":
            koszul = KoszulVerdict("no", witness=None, caveat="Torreg(k) > 0 certified")
    verdict = art.as_regular_verdict()
    if art.known_betti_k is None:
        res = art.resolution_k()
        if res.terminated:
            gldim = BoundedValue.exact(
                res.termination_step, "resolution of k terminated (%s)" % res.certificate
            )
        else:
            gldim = BoundedValue.at_least(res.steps_computed, "window i<=%d" % art.i_max)
    else:
        if table.terminated:
            gldim = BoundedValue.exact(table.termination_step, art.betti_provenance)
        else:
            gldim = BoundedValue.at_least(table.steps_computed, art.betti_provenance)
    as_index = (
        BoundedValue.exact(verdict.index, "from the Ext table")
        if verdict.status == "yes"
        else BoundedValue.unknown("not certified AS regular")
    )
    h = art.hilbert_or_none()
    stanley = series_mod.stanley_check(h) if h is not None else None
    annotations = []
    growth = _growth_annotation(table) if not torreg.is_exact else None
    if growth:
        annotations.append(growth)
    if h is not None and h.denom_exponents is not None and not h.is_polynomial():
        annotations.append(
            "series pole order %d at t=1 (finite growth annotation only)"
            % sum(1 for _ in h.denom_exponents)
        )
    assertions = list(dict.fromkeys(list(art.assertions) + list(verdict.assertions)))
    report = RegularityReport(
        label=art.label,
        window=(art.i_max, art.d_max, art.d_gb),
        torreg_k=torreg,
        cmreg=cmreg,
        cm_evidence=cm_evidence,
        asreg=asreg,
        koszul=koszul,
        as_regular=verdict,
        gldim=gldim,
        as_index=as_index,
        ta_pair=(torreg, asreg),
        tc_pair=(torreg, cmreg),
        stanley=stanley,
        extreg_note="Ext-regularity equals Tor-regularity for finitely generated modules",
        betti_provenance=art.betti_provenance,
        annotations=tuple(annotations),
        assertions=tuple(assertions),
    )
    ta_tc_pairs(report)  # validates the tc constraint
    if report.asreg.is_exact and report.asreg.value < 0:
        raise CertificationError("internal inconsistency: exact ASreg < 0")
    return report


# ---------------------------------------------------------------------------
# binomial resolution annotation


def binomial_pattern_note(table, ambient_gldim):
    """Annotation when Tor_i(T-module) matches binomial(d', i) at shift i."""
    from math import comb

    top = table.termination_step if table.terminated else table.steps_computed
    if any(j != i for (i, j) in table.entries):
        return None
    ranks = [table.total_rank(i) for i in range(top + 1)]
    for dprime in range(0, ambient_gldim + 1):
        want = [comb(dprime, i) for i in range(top + 1)]
        if ranks == want and (table.terminated and top == dprime or not table.terminated):
            return (
                "module resolution matches the binomial pattern with d' = %d: "
                "target algebra is AS regular and Koszul with h = (1-t)^-(d-d')" % dprime
            )
    return None


# ---------------------------------------------------------------------------
# inequality harness


@dataclass(frozen=True)
class HarnessCase:
    """One check: kind 'leq'/'eq' compare values, 'true' asserts a fact."""

    name: str
    kind: str
    lhs: object = None
    rhs: object = None
    detail: str = ""


@dataclass(frozen=True)
class HarnessResult:
    name: str
    status: str  # "pass" | "fail" | "skip"
    detail: str


def _as_bounded(v):
    if isinstance(v, BoundedValue):
        return v
    return BoundedValue.exact(v)


def inequality_harness(cases):
    """Evaluate comparison cases with truncation-aware semantics.

    A case passes when the certified data proves it, fails when the data
    certifies a violation, and is skipped (with the reason) when the
    qualifiers cannot settle it.  Certified failures falsify the
    implementation, not the statements being checked.
    """
    results = []
    for case in cases:
        if case.kind == "true":
            ok = bool(case.lhs)
            results.append(
                HarnessResult(case.name, "pass" if ok else "fail", case.detail)
            )
            continue
        lhs = _as_bounded(case.lhs)
        rhs = _as_bounded(case.rhs)
        if case.kind == "leq":
            if lhs.kind == "unknown" or rhs.kind == "unknown":
                results.append(HarnessResult(case.name, "skip", "unknown side"))
            elif rhs.kind == "exact":
                ok = lhs.value <= rhs.value
                detail = "%s <= %s%s" % (lhs, rhs, (" | " + case.detail) if case.detail else "")
                results.append(HarnessResult(case.name, "pass" if ok else "fail", detail))
            else:
                # rhs is only a lower bound: a certified violation is impossible
                results.append(
                    HarnessResult(case.name, "skip", "right side not exact (%s)" % rhs)
                )
        elif case.kind == "eq":
            if lhs.is_exact and rhs.is_exact:
                ok = lhs.value == rhs.value
                detail = "%s == %s%s" % (lhs, rhs, (" | " + case.detail) if case.detail else "")
                results.append(HarnessResult(case.name, "pass" if ok else "fail", detail))
            else:
                results.append(
                    HarnessResult(case.name, "skip", "both sides must be exact (%s vs %s)" % (lhs, rhs))
                )
        else:
            results.append(HarnessResult(case.name, "skip", "unknown case kind %r" % case.kind))
    return results
