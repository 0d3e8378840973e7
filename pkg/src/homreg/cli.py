"""Command-line front end: file IO, reports, cache management, harness.

Machine-readable output is line-delimited JSON with a versioned schema;
identical inputs produce byte-identical records.  Exit codes: 0 success,
1 input error, 2 certification failure, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .corealg import (
    CertificationError,
    PresentationError,
    ResourceLimitError,
    convert_field,
    make_module_presentation,
    parse_field,
    parse_module,
    parse_presentation,
)
from . import constructions as cons_mod
from . import gbasis as gb_mod
from . import regularity as reg_mod
from . import resolution as res_mod
from . import series as series_mod
from .regularity import BoundedValue, HarnessCase, inequality_harness

SCHEMA = "homreg/1"

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CERTIFICATION = 2
EXIT_RESOURCES = 3


class Emitter:
    def __init__(self, fmt, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout

    def record(self, rtype, payload, text=None):
        if self.fmt == "jsonl":
            rec = {"schema": SCHEMA, "type": rtype}
            rec.update(payload)
            self.out.write(json.dumps(rec, sort_keys=True) + "\n")
        else:
            self.out.write((text if text is not None else "%s: %s" % (rtype, payload)) + "\n")

    def text_block(self, text):
        if self.fmt != "jsonl":
            self.out.write(text + "\n")


def _load_presentation(path, args):
    with open(path) as fh:
        text = fh.read()
    label = os.path.splitext(os.path.basename(path))[0]
    pres = parse_presentation(text, label=label)
    if getattr(args, "field", None):
        pres = convert_field(pres, parse_field(args.field))
    return pres


def _cache_dir(args):
    if args.no_cache:
        return None
    if args.cache_dir:
        return args.cache_dir
    env = os.environ.get(gb_mod.CACHE_ENV_VAR)
    if env:
        return env
    return os.path.expanduser("~/.cache/homreg")


def _artifacts(path, args):
    pres = _load_presentation(path, args)
    art = reg_mod.AlgebraArtifacts(
        pres,
        i_max=args.imax,
        d_max=args.dmax,
        d_gb=args.dgb,
        cache_dir=_cache_dir(args),
        element_limit=getattr(args, "element_limit", 2000),
    )
    if args.assert_noetherian:
        art.assertions.append("noetherian: asserted on the command line")
    if args.assert_balanced:
        art.assertions.append("balanced dualizing complex: asserted on the command line")
    if args.assert_cm is not None:
        art.cm_degree_hint = (args.assert_cm, "Cohen-Macaulay degree asserted on the command line")
        art.assertions.append("Cohen-Macaulay of degree %d: asserted on the command line" % args.assert_cm)
    return art


def _images_for(source_pres, target_pres, map_args):
    """Generator images: name-matched identity by default, --map overrides."""
    overrides = {}
    for item in map_args or ():
        name, _, expr = item.partition("=")
        if not expr:
            raise PresentationError("--map expects name=polynomial, got %r" % item)
        overrides[name.strip()] = expr.strip()
    images = []
    for name in source_pres.gen_names:
        if name in overrides:
            images.append(target_pres.parse_poly(overrides[name]))
        else:
            images.append(target_pres.parse_poly(name))
    return images


# ---------------------------------------------------------------------------
# subcommands


def cmd_gb(args, emit):
    art = _artifacts(args.file, args)
    G = art.gb()
    pres = art.presentation
    emit.record(
        "groebner",
        {
            "label": art.label,
            "complete": G.complete,
            "d_gb": G.d_gb,
            "elements": [pres.format_poly(g) for g in G.elements],
        },
        text="Groebner basis of %s (%s):\n  %s"
        % (
            art.label,
            "complete" if G.complete else "complete up to degree %d" % G.d_gb,
            "\n  ".join(pres.format_poly(g) for g in G.elements),
        ),
    )
    return EXIT_OK


def cmd_hilbert(args, emit):
    art = _artifacts(args.file, args)
    ts = art.hilbert_truncated(args.truncate)
    emit.record(
        "hilbert_truncated",
        {"label": art.label, "coefficients": list(ts.coefficients), "truncation": ts.truncation},
        text="h_%s = %s" % (art.label, ts.text()),
    )
    h = art.hilbert_or_none()
    if h is not None:
        payload = {"label": art.label}
        payload.update(h.record())
        emit.record("hilbert_rational", payload, text="rational form: %s   (degree %d)" % (h.text(), h.degree))
    else:
        emit.record(
            "hilbert_rational_unavailable",
            {"label": art.label, "reason": "Groebner basis incomplete"},
            text="rational form refused: Groebner basis incomplete (truncated series above)",
        )
    return EXIT_OK


def cmd_resolve(args, emit):
    art = _artifacts(args.file, args)
    if args.module:
        with open(args.module) as fh:
            mpres = parse_module(fh.read(), art.presentation)
        if mpres.side == "right":
            from .corealg import opposite_module

            mpres = opposite_module(mpres)
            G = art.opposite().gb()
        else:
            G = art.gb()
        R = res_mod.minimal_resolution(
            G, mpres, art.i_max, art.d_max, algebra_hilbert=art.hilbert_or_none(), label=art.label
        )
        table = res_mod.betti_table(R)
    else:
        table = art.betti_k()
        R = art.resolution_k()
    emit.record(
        "betti",
        {
            "label": art.label,
            "entries": table.records(),
            "terminated": table.terminated,
            "termination_step": table.termination_step,
            "certificate": R.certificate,
            "window": [table.i_max, table.d_max],
        },
        text="Betti table of %s (terminated: %s%s)\n%s"
        % (
            art.label,
            table.terminated,
            ", certificate: %s" % R.certificate if R.certificate else "",
            table.to_grid_text(),
        ),
    )
    return EXIT_OK


def cmd_regularity(args, emit):
    art = _artifacts(args.file, args)
    report = art.report()
    if emit.fmt == "jsonl":
        for rec in report.records():
            emit.record("regularity", rec)
    emit.text_block(report.to_text())
    return EXIT_OK


def cmd_koszul(args, emit):
    art = _artifacts(args.file, args)
    report = art.report()
    emit.record(
        "koszul",
        {"label": art.label, "verdict": report.koszul.status, "caveat": report.koszul.caveat},
        text="Koszul verdict for %s: %s" % (art.label, report.koszul.text()),
    )
    return EXIT_OK


def cmd_stanley(args, emit):
    art = _artifacts(args.file, args)
    v = series_mod.stanley_check(art.hilbert())
    emit.record(
        "stanley",
        {"label": art.label, "satisfied": v.satisfied, "sign": v.sign, "shift": v.shift},
        text="Stanley functional equation for %s: %s" % (art.label, v.text()),
    )
    return EXIT_OK


def cmd_tensor(args, emit):
    artA = _artifacts(args.file_a, args)
    artB = _artifacts(args.file_b, args)
    art = cons_mod.tensor_product(artA, artB)
    emit.record(
        "presentation",
        {"label": art.label, "text": art.presentation.to_text()},
        text=art.presentation.to_text().rstrip(),
    )
    report = art.report()
    if emit.fmt == "jsonl":
        for rec in report.records():
            emit.record("regularity", rec)
    emit.text_block(report.to_text())
    return EXIT_OK


def cmd_quotient(args, emit):
    art = _artifacts(args.file, args)
    artB, cert = cons_mod.quotient_by_normal_element(art, args.omega)
    emit.record(
        "normal_element_certificate",
        {
            "label": artB.label,
            "element": cert.element_text,
            "degree": cert.degree,
            "normal": cert.normal_ok,
            "regular_up_to": cert.checked_to,
            "witnesses": [
                art.presentation.format_poly(w) for w in cert.left_witnesses
            ],
        },
        text="normal element %s (degree %d): normal yes, regular up to degree %d"
        % (cert.element_text, cert.degree, cert.checked_to),
    )
    emit.record(
        "presentation",
        {"label": artB.label, "text": artB.presentation.to_text()},
        text=artB.presentation.to_text().rstrip(),
    )
    report = artB.report()
    if emit.fmt == "jsonl":
        for rec in report.records():
            emit.record("regularity", rec)
    emit.text_block(report.to_text())
    return EXIT_OK


def cmd_finitemap(args, emit):
    artT = _artifacts(args.file_t, args)
    artA = _artifacts(args.file_a, args)
    images = _images_for(artT.presentation, artA.presentation, args.map)
    cert = cons_mod.finite_map_check(artT, images, artA)
    emit.record(
        "finite_map",
        {
            "source": artT.label,
            "target": artA.label,
            "images": list(cert.images_text),
            "verdict": cert.verdict,
            "left_cokernel": list(cert.left_cokernel),
            "right_cokernel": list(cert.right_cokernel),
        },
        text="finite map %s -> %s: %s (left cokernel %s)"
        % (artT.label, artA.label, cert.verdict, list(cert.left_cokernel)),
    )
    return EXIT_OK


def _witnesses(args, artA):
    out = []
    for wpath in args.witness or ():
        artT = _artifacts(wpath, args)
        images = _images_for(artT.presentation, artA.presentation, args.map)
        out.append(cons_mod.concavity_witness(artT, images, artA))
    return out


def cmd_concavity(args, emit):
    art = _artifacts(args.file, args)
    witnesses = _witnesses(args, art)
    bound = reg_mod.concavity_certificate(art, witnesses)
    emit.record(
        "concavity",
        {
            "label": art.label,
            "upper": bound.upper.record(),
            "exact": bound.exact,
            "c_minus": bound.c_minus.record(),
            "witnesses": [w.label for w in bound.witnesses],
            "notes": list(bound.notes),
        },
        text="concavity of %s: %s" % (art.label, bound.text()),
    )
    return EXIT_OK


def cmd_obstruct(args, emit):
    art = _artifacts(args.file, args)
    witnesses = _witnesses(args, art)
    bound = reg_mod.concavity_certificate(art, witnesses)
    verdict = reg_mod.invariant_ring_obstruction(art, bound)
    emit.record(
        "obstruction",
        {
            "label": art.label,
            "status": verdict.status,
            "inequality": verdict.inequality,
            "beta1": verdict.beta1,
            "beta2": verdict.beta2,
        },
        text="invariant-subring obstruction for %s: %s" % (art.label, verdict.text()),
    )
    return EXIT_OK


def cmd_harness(args, emit):
    cases = build_golden_cases(args.imax, args.dmax, args.dgb, _cache_dir(args))
    results = inequality_harness(cases)
    failures = 0
    for r in results:
        failures += r.status == "fail"
        emit.record(
            "harness",
            {"name": r.name, "status": r.status, "detail": r.detail},
            text="[%s] %s  %s" % (r.status.upper(), r.name, r.detail),
        )
    emit.record(
        "harness_summary",
        {
            "total": len(results),
            "passed": sum(r.status == "pass" for r in results),
            "failed": failures,
            "skipped": sum(r.status == "skip" for r in results),
        },
        text="harness: %d checks, %d failed" % (len(results), failures),
    )
    return EXIT_OK if failures == 0 else EXIT_CERTIFICATION


# ---------------------------------------------------------------------------
# golden suite shared by `harness` and the acceptance tests

GOLDEN_SOURCES = {
    "k[x]": "field Q; gens x:1",
    "k[u2]": "field Q; gens u:2",
    "plane": "field Q; gens x:1 y:1; rels x*y - y*x",
    "T": "field Q; gens x:1 y:1; rels x^2*y - y*x^2, x*y^2 - y^2*x",
    "A3": "field Q; gens x:1; rels x^3",
    "hyp": "field Q; gens x:1 t:2; rels x*t - t*x, t^2 - x^4",
    "stanley_violator": "field Q; gens x:1 y:1; rels x*y - y*x, x^2, x*y, y^2",
}


def golden_artifacts(i_max=8, d_max=12, d_gb=12, cache_dir=None):
    """The golden algebras plus derived quotients and tensor products."""
    arts = {}
    for label, src in GOLDEN_SOURCES.items():
        arts[label] = reg_mod.build_artifacts(
            parse_presentation(src, label=label), i_max, d_max, d_gb, cache_dir
        )
    quotients = {}
    arts["A2"], quotients["A2"] = cons_mod.quotient_by_normal_element(
        arts["k[x]"], "x^2", label="A2"
    )
    arts["B"], quotients["B"] = cons_mod.quotient_by_normal_element(
        arts["T"], "x^2", label="B"
    )
    arts["Tcomm"], quotients["Tcomm"] = cons_mod.quotient_by_normal_element(
        arts["T"], "x*y - y*x", label="Tcomm"
    )
    arts["k[y]"], quotients["k[y]"] = cons_mod.quotient_by_normal_element(
        arts["plane"], "x", label="k[y]"
    )
    arts["A2xT"] = cons_mod.tensor_product(arts["A2"], arts["T"], label="A2xT")
    arts["A2xA2"] = cons_mod.tensor_product(arts["A2"], arts["A2"], label="A2xA2")
    return arts, quotients


def _quotient_module_torreg(artA, artB):
    """Torreg of B as a module over A along the quotient map."""
    images = [artB.presentation.gen_poly(i) for i in range(artB.presentation.n_gens)]
    mpres = res_mod.module_via_map(artA.gb(), images, artB.gb(), artA.d_max)
    R = res_mod.minimal_resolution(
        artA.gb(),
        mpres,
        artA.i_max,
        artA.d_max,
        algebra_hilbert=artA.hilbert_or_none(),
        module_hilbert=artB.hilbert_or_none(),
        label="%s as %s-module" % (artB.label, artA.label),
    )
    return reg_mod.tor_regularity(res_mod.betti_table(R))


def _semisimple_module(pres, degrees):
    """Direct sum of shifted trivial modules: k(-d_1) (+) ... (+) k(-d_r)."""
    rows = []
    for r in range(len(degrees)):
        for g in range(pres.n_gens):
            row = [pres.gen_poly(g) if s == r else None for s in range(len(degrees))]
            rows.append(row)
    return make_module_presentation(pres, "left", degrees, rows)


def build_golden_cases(i_max=8, d_max=12, d_gb=12, cache_dir=None):
    """The golden inequality/equality checks run by `homreg harness`."""
    arts, _ = golden_artifacts(i_max, d_max, d_gb, cache_dir)
    reports = {k: a.report() for k, a in arts.items()}
    cases = []

    # Torreg(M) <= CMreg(M) + Torreg(k) on a finite-dimensional module over T
    T = arts["T"]
    M = _semisimple_module(T.presentation, (2, 0))
    RM = res_mod.minimal_resolution(
        T.gb(), M, i_max, d_max, algebra_hilbert=T.hilbert_or_none(), label="k(-2)+k over T"
    )
    tM = reg_mod.tor_regularity(res_mod.betti_table(RM))
    degM = 2  # top degree of the module, = CMreg for finite-dimensional modules
    cases.append(
        HarnessCase(
            "torreg<=cmreg+torreg_k on k(-2)+k over T",
            "leq",
            tM,
            reports["T"].torreg_k.add_int(degM),
            "finite-dimensional module case: CMreg(M) = deg(M) = 2",
        )
    )

    # quotient equality: CMreg(B) - CMreg(A) = deg(Omega) - 1 = Torreg(_A B)
    for child, parent, a in (("B", "T", 2), ("Tcomm", "T", 2), ("k[y]", "plane", 1)):
        t_mod = _quotient_module_torreg(arts[parent], arts[child])
        lhs = reports[child].cmreg.add(
            BoundedValue.exact(-reports[parent].cmreg.value)
            if reports[parent].cmreg.is_exact
            else BoundedValue.unknown()
        )
        cases.append(
            HarnessCase(
                "cmreg(%s) - cmreg(%s) == deg(Omega) - 1" % (child, parent),
                "eq",
                lhs,
                a - 1,
            )
        )
        cases.append(
            HarnessCase(
                "torreg(%s as %s-module) == deg(Omega) - 1" % (child, parent),
                "eq",
                t_mod,
                a - 1,
            )
        )

    # tensor additivity of Torreg, CMreg, ASreg
    for prod, f1, f2 in (("A2xT", "A2", "T"), ("A2xA2", "A2", "A2")):
        for inv in ("torreg_k", "cmreg", "asreg"):
            cases.append(
                HarnessCase(
                    "%s additive on %s" % (inv, prod),
                    "eq",
                    getattr(reports[prod], inv),
                    getattr(reports[f1], inv).add(getattr(reports[f2], inv)),
                )
            )

    # Torreg does not grow under quotients by normal regular elements of degree <= 2
    for child, parent in (("B", "T"), ("Tcomm", "T"), ("k[y]", "plane"), ("A2", "k[x]")):
        cases.append(
            HarnessCase(
                "torreg_k(%s) <= torreg_k(%s) (normal quotient, deg <= 2)" % (child, parent),
                "leq",
                reports[child].torreg_k,
                reports[parent].torreg_k,
            )
        )

    # t_i <= Torreg + i on certified tables
    for label in ("T", "plane", "B", "A2xT"):
        table = arts[label].betti_for_report()
        tr = reports[label].torreg_k
        if not tr.is_exact:
            continue
        ok = all(j - i <= tr.value for (i, j) in table.entries)
        cases.append(
            HarnessCase("t_i <= Torreg + i on %s" % label, "true", ok, detail="window table")
        )

    # Koszul descent along non-surjective finite maps with Torreg(T-side k) = 1
    ku, kx = arts["k[u2]"], arts["k[x]"]
    cert = cons_mod.finite_map_check(ku, [kx.presentation.parse_poly("x^2")], kx)
    cases.append(
        HarnessCase(
            "non-surjective finite map from Torreg-1 source forces Koszul target",
            "true",
            cert.finite
            and reports["k[u2]"].torreg_k.is_exact
            and reports["k[u2]"].torreg_k.value == 1
            and cert.left_cokernel[1] > 0  # degree-1 cokernel: not surjective
            and reports["k[x]"].koszul.status == "yes",
            detail="k[u2] -> k[x], u |-> x^2",
        )
    )

    # finite map with linear finite-pd module: AS regularity transfers
    cases.append(
        HarnessCase(
            "AS regularity transfers along plane -> k[y]",
            "true",
            reports["plane"].as_regular.status == "yes"
            and reports["k[y]"].as_regular.status == "yes",
            detail="quotient by a degree-1 normal regular element",
        )
    )

    # concavity monotonicity along composition of finite maps
    w_direct = cons_mod.concavity_witness(kx, ["x"], arts["hyp"])
    w_composed = cons_mod.concavity_witness(ku, ["x^2"], arts["hyp"])
    cases.append(
        HarnessCase(
            "composing finite maps never lowers the witness -CMreg",
            "leq",
            w_direct.neg_cmreg,
            w_composed.neg_cmreg,
            "k[u2] -> k[x] -> hyp",
        )
    )

    # c(S) = -CMreg(S) for AS regular S; Koszul iff c = 0
    for label in ("T", "plane", "k[x]", "k[u2]"):
        bound = reg_mod.concavity_certificate(arts[label], [])
        cases.append(
            HarnessCase(
                "c(%s) == -CMreg(%s)" % (label, label),
                "eq",
                bound.upper if bound.exact else BoundedValue.unknown(),
                BoundedValue.exact(-reports[label].cmreg.value)
                if reports[label].cmreg.is_exact
                else BoundedValue.unknown(),
            )
        )
        cases.append(
            HarnessCase(
                "Koszul iff c = 0 on %s" % label,
                "true",
                (reports[label].koszul.status == "yes") == (bound.exact and bound.upper.value == 0),
            )
        )

    # normalized concavity: nonnegative, zero exactly on AS regular algebras
    wT = cons_mod.concavity_witness(
        arts["T"],
        [arts["B"].presentation.parse_poly("x"), arts["B"].presentation.parse_poly("y")],
        arts["B"],
    )
    boundB = reg_mod.concavity_certificate(arts["B"], [wT])
    cases.append(HarnessCase("c_minus(B) >= 0", "leq", 0, boundB.c_minus))
    cases.append(
        HarnessCase(
            "c_minus(B) = 0 iff B AS regular",
            "true",
            (boundB.c_minus.is_exact and boundB.c_minus.value == 0)
            == (reports["B"].as_regular.status == "yes"),
        )
    )
    cases.append(HarnessCase("c(B) == 1", "eq", boundB.upper if boundB.exact else BoundedValue.unknown(), 1))

    # ASreg >= 0 on every exact report; ASreg = 0 iff AS regular on decided cases
    for label, rep in sorted(reports.items()):
        if rep.asreg.is_exact:
            cases.append(HarnessCase("asreg(%s) >= 0" % label, "leq", 0, rep.asreg))
            if rep.as_regular.status in ("yes", "no"):
                cases.append(
                    HarnessCase(
                        "asreg(%s) = 0 iff AS regular" % label,
                        "true",
                        (rep.asreg.value == 0) == (rep.as_regular.status == "yes"),
                    )
                )
    return cases


# ---------------------------------------------------------------------------
# entry point


def make_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--imax", type=int, default=reg_mod.DEFAULT_I_MAX)
    common.add_argument("--dmax", type=int, default=reg_mod.DEFAULT_D_MAX)
    common.add_argument("--dgb", type=int, default=reg_mod.DEFAULT_D_GB)
    common.add_argument("--field", help="override the base field (Q or F<p>)")
    common.add_argument("--format", choices=("text", "jsonl"), default="text")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--cache-dir")
    common.add_argument("--assert-cm", type=int, default=None, metavar="S")
    common.add_argument("--assert-noetherian", action="store_true")
    common.add_argument("--assert-balanced", action="store_true")
    common.add_argument(
        "--element-limit", type=int, default=2000,
        help="Groebner completion budget (element count)",
    )

    parser = argparse.ArgumentParser(
        prog="homreg",
        description="Regularity workbench for finitely presented connected graded algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", parents=[common], help="Groebner basis")
    p.add_argument("file")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert series")
    p.add_argument("file")
    p.add_argument("--truncate", type=int, default=None)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("resolve", parents=[common], help="Betti table")
    p.add_argument("file")
    p.add_argument("--module", help="module file (.mod) over the algebra")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("regularity", parents=[common], help="full regularity report")
    p.add_argument("file")
    p.set_defaults(func=cmd_regularity)

    p = sub.add_parser("koszul", parents=[common], help="Koszul verdict")
    p.add_argument("file")
    p.set_defaults(func=cmd_koszul)

    p = sub.add_parser("stanley", parents=[common], help="Stanley functional equation")
    p.add_argument("file")
    p.set_defaults(func=cmd_stanley)

    p = sub.add_parser("tensor", parents=[common], help="tensor product report")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("quotient", parents=[common], help="quotient by a normal regular element")
    p.add_argument("file")
    p.add_argument("--omega", required=True, help="homogeneous element, e.g. 'x^2'")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("finitemap", parents=[common], help="finite-map certificate")
    p.add_argument("file_t")
    p.add_argument("file_a")
    p.add_argument("--map", action="append", help="generator image name=poly (repeatable)")
    p.set_defaults(func=cmd_finitemap)

    p = sub.add_parser("concavity", parents=[common], help="concavity certificate")
    p.add_argument("file")
    p.add_argument("--witness", action="append", help="witness presentation file (repeatable)")
    p.add_argument("--map", action="append", help="generator image name=poly (repeatable)")
    p.set_defaults(func=cmd_concavity)

    p = sub.add_parser("obstruct", parents=[common], help="invariant-subring obstruction")
    p.add_argument("file")
    p.add_argument("--witness", action="append")
    p.add_argument("--map", action="append")
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("harness", parents=[common], help="golden inequality suite")
    p.set_defaults(func=cmd_harness)
    return parser


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    emit = Emitter(args.format)
    try:
        return args.func(args, emit)
    except (PresentationError, FileNotFoundError) as exc:
        emit.record("error", {"class": "input", "message": str(exc)}, text="input error: %s" % exc)
        return EXIT_INPUT
    except CertificationError as exc:
        emit.record(
            "error", {"class": "certification", "message": str(exc)}, text="certification error: %s" % exc
        )
        return EXIT_CERTIFICATION
    except ResourceLimitError as exc:
        emit.record(
            "error", {"class": "resources", "message": str(exc)}, text="resource limit: %s" % exc
        )
        return EXIT_RESOURCES


if __name__ == "__main__":
    sys.exit(main())
