"""Degree-truncated reduced two-sided Groebner bases in the free algebra.

Completion is overlap-based (diamond lemma style) and processed strictly
by increasing degree; since the ideal is homogeneous, an obstruction at
degree d can only produce new elements of degree d, so the set of basis
elements below the current degree is final when that degree is reached.
A basis is Complete when every overlap word among the final elements has
degree <= D_gb and every S-polynomial reduced to zero: all overlaps of
elements of maximal degree m live in degrees < 2m, so nothing can appear
later.  Otherwise the basis is certified only up to D_gb.
"""

from __future__ import annotations

import hashlib
import heapq
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction

from .corealg import (
    CertificationError,
    Poly,
    PresentationError,
    ResourceLimitError,
)

GB_FORMAT_VERSION = 1


class GroebnerBasis:
    """A reduced (possibly degree-truncated) two-sided Groebner basis."""

    def __init__(self, presentation, elements, d_gb, complete):
        self.presentation = presentation
        self.order = presentation.order
        self.elements = tuple(
            sorted(elements, key=lambda g: self.order.key(g.lead_word(self.order)))
        )
        self.d_gb = d_gb
        self.complete = complete
        self._leads = tuple(g.lead_word(self.order) for g in self.elements)
        self._lead_lens = tuple(len(u) for u in self._leads)
        self._normal_words = {}
        self._nf_words = {}

    @property
    def lead_words(self):
        return self._leads

    def certified_degree(self):
        return float("inf") if self.complete else self.d_gb

    def check_degree(self, d, what="computation"):
        if not self.complete and d > self.d_gb:
            raise CertificationError(
                "%s at degree %d exceeds the certified range (basis complete only up to %d)"
                % (what, d, self.d_gb)
            )

    # -- reduction ---------------------------------------------------------

    def _find_reduction(self, word):
        leads = self._leads
        lens = self._lead_lens
        n = len(word)
        for pos in range(n):
            rest = n - pos
            for i, u in enumerate(leads):
                lu = lens[i]
                if lu <= rest and word[pos : pos + lu] == u:
                    return pos, i
        return None

    def normal_form(self, p):
        """The unique reduced representative of `p` modulo the ideal."""
        if p.is_zero():
            return p
        self.check_degree(p.degree, "normal form")
        return self._reduce_terms(dict(p.terms), p.degree)

    def _reduce_terms(self, pending, degree):
        order = self.order
        elements = self.elements
        leads = self._leads
        lens = self._lead_lens
        out = {}
        while pending:
            w = max(pending, key=order.key)
            c = pending.pop(w)
            if not c:
                continue
            hit = self._find_reduction(w)
            if hit is None:
                out[w] = c
                continue
            pos, i = hit
            g = elements[i]
            lu = lens[i]
            left, right = w[:pos], w[pos + lu :]
            lead = leads[i]
            for u, a in g.terms.items():
                if u == lead:
                    continue
                w2 = left + u + right
                s = pending.get(w2)
                s = -c * a if s is None else s - c * a
                if s:
                    pending[w2] = s
                elif w2 in pending:
                    del pending[w2]
        if not out:
            return Poly.zero()
        return Poly(out, degree)

    def nf_word(self, word):
        """Memoized normal form of a single word (hot path for resolutions)."""
        p = self._nf_words.get(word)
        if p is None:
            p = self.normal_form(self.presentation.word_poly(word))
            self._nf_words[word] = p
        return p

    def is_normal_word(self, word):
        leads = self._leads
        lens = self._lead_lens
        n = len(word)
        for i, u in enumerate(leads):
            lu = lens[i]
            if lu > n:
                continue
            for pos in range(n - lu + 1):
                if word[pos : pos + lu] == u:
                    return False
        return True

    def _ends_in_lead(self, word):
        n = len(word)
        for i, u in enumerate(self._leads):
            lu = self._lead_lens[i]
            if lu <= n and word[n - lu :] == u:
                return True
        return False

    # -- normal words ------------------------------------------------------

    def normal_words(self, j):
        """All degree-j words avoiding leading words, sorted by the order."""
        if j < 0:
            return ()
        self.check_degree(j, "normal words")
        cached = self._normal_words.get(j)
        if cached is not None:
            return cached
        degs = self.presentation.gen_degs
        n = self.presentation.n_gens
        out = []
        stack = [((), j)]
        while stack:
            word, rem = stack.pop()
            if rem == 0:
                out.append(word)
                continue
            for g in range(n):
                dg = degs[g]
                if dg > rem:
                    continue
                w2 = word + (g,)
                if not self._ends_in_lead(w2):
                    stack.append((w2, rem - dg))
        out.sort(key=self.order.key)
        out = tuple(out)
        self._normal_words[j] = out
        return out

    def dim(self, j):
        """dim_k A_j, from the normal-word count."""
        return len(self.normal_words(j))

    def word_index(self, j):
        """Map word -> position in the degree-j normal basis."""
        return {w: i for i, w in enumerate(self.normal_words(j))}


@dataclass(frozen=True)
class NormalWordBasis:
    degree: int
    words: tuple


def normal_form(G, p):
    return G.normal_form(p)


def normal_words(G, j):
    return NormalWordBasis(j, G.normal_words(j))


# ---------------------------------------------------------------------------
# completion


def _overlap_words(u, v):
    """Proper overlaps: suffix of u of length j equals prefix of v.

    Yields (overlap word, left cofactor of v's copy).  Inclusion overlaps
    cannot occur between inter-reduced leading words.
    """
    top = min(len(u), len(v))
    for j in range(1, top):
        if u[len(u) - j :] == v[:j]:
            yield u + v[j:], u[: len(u) - j]


def buchberger_truncated(presentation, d_gb, element_limit=2000):
    """Reduced Groebner basis certified through internal degree `d_gb`.

    Deterministic for a fixed presentation and order: obstructions are
    processed in increasing degree, tie-broken by overlap-word order.
    Raises ResourceLimitError if the element budget is exhausted.
    """
    order = presentation.order
    relations = [r for r in presentation.relations if not r.is_zero()]
    if relations:
        max_rel = max(r.degree for r in relations)
        if d_gb < max_rel:
            raise PresentationError(
                "truncation degree %d is below the maximal relation degree %d" % (d_gb, max_rel)
            )

    heap = []
    seq = 0
    for r in relations:
        key = order.key(r.lead_word(order))
        heapq.heappush(heap, (r.degree, key, seq, r))
        seq += 1

    basis = GroebnerBasis(presentation, [], d_gb, True)

    def push_overlaps(g, h):
        nonlocal seq
        u = g.lead_word(order)
        v = h.lead_word(order)
        udeg = g.degree
        for w, left in _overlap_words(u, v):
            wdeg = presentation.word_degree(w)
            if wdeg > d_gb:
                continue
            # S-poly: g * (tail of w after u)  -  left * h
            right = w[len(u) :]
            s = g.rmul_word(right, wdeg - udeg) - h.lmul_word(left, wdeg - h.degree)
            heapq.heappush(heap, (wdeg, order.key(w), seq, s))
            seq += 1

    elements = []
    while heap:
        d, _, _, p = heapq.heappop(heap)
        r = basis._reduce_terms(dict(p.terms), p.degree) if elements else p
        if r.is_zero():
            continue
        r = r.monic(order)
        elements.append(r)
        if len(elements) > element_limit:
            raise ResourceLimitError(
                "Groebner completion exceeded %d elements at degree %d" % (element_limit, d)
            )
        basis = GroebnerBasis(presentation, elements, d_gb, True)
        for g in elements:
            push_overlaps(r, g)
            if g is not r:
                push_overlaps(g, r)

    # tail-reduce for canonical output (leading words are already final)
    reduced = []
    for g in elements:
        lead = g.lead_word(order)
        tail_terms = {w: c for w, c in g.terms.items() if w != lead}
        if tail_terms:
            tail_terms = dict(basis._reduce_terms(tail_terms, g.degree).terms)
        tail_terms[lead] = presentation.field.one()
        reduced.append(Poly(tail_terms, g.degree))
    basis = GroebnerBasis(presentation, reduced, d_gb, True)

    # completeness: every overlap among final elements must fit under d_gb
    complete = True
    for g in basis.elements:
        for h in basis.elements:
            u = g.lead_word(order)
            v = h.lead_word(order)
            for w, _ in _overlap_words(u, v):
                if presentation.word_degree(w) > d_gb:
                    complete = False
    return GroebnerBasis(presentation, basis.elements, d_gb, complete)


# ---------------------------------------------------------------------------
# content-addressed cache

CACHE_ENV_VAR = "HOMREG_CACHE_DIR"


def basis_fingerprint(presentation, d_gb):
    text = presentation.to_text() + "d_gb %d\nversion %d\n" % (d_gb, GB_FORMAT_VERSION)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _serialize_basis(G):
    lines = ["homreg-gb %d" % GB_FORMAT_VERSION]
    lines.append("fingerprint %s" % basis_fingerprint(G.presentation, G.d_gb))
    lines.append("complete %d" % (1 if G.complete else 0))
    lines.append("elements %d" % len(G.elements))
    for g in G.elements:
        parts = []
        for w in sorted(g.terms, key=G.order.key, reverse=True):
            c = g.terms[w]
            parts.append("%s@%s" % (c, ".".join(str(i) for i in w)))
        lines.append("poly " + " ".join(parts))
    return "\n".join(lines) + "\n"


def _deserialize_basis(text, presentation, d_gb):
    lines = text.splitlines()
    if not lines or not lines[0].startswith("homreg-gb "):
        return None
    if int(lines[0].split()[1]) != GB_FORMAT_VERSION:
        return None
    if lines[1].split()[1] != basis_fingerprint(presentation, d_gb):
        return None
    complete = bool(int(lines[2].split()[1]))
    count = int(lines[3].split()[1])
    field = presentation.field
    elements = []
    for line in lines[4 : 4 + count]:
        body = line[len("poly ") :]
        terms = {}
        for part in body.split():
            cs, _, ws = part.partition("@")
            word = tuple(int(i) for i in ws.split(".")) if ws else ()
            if field.name == "Q":
                c = Fraction(cs)
            else:
                c = field.from_int(int(cs))
            terms[word] = c
        elements.append(Poly.make(terms, presentation.gen_degs))
    return GroebnerBasis(presentation, elements, d_gb, complete)


def save_basis(G, directory):
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, basis_fingerprint(G.presentation, G.d_gb) + ".gb")
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(_serialize_basis(G))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def load_basis(presentation, d_gb, directory):
    path = os.path.join(directory, basis_fingerprint(presentation, d_gb) + ".gb")
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        return _deserialize_basis(fh.read(), presentation, d_gb)


def groebner(presentation, d_gb, cache_dir=None, element_limit=2000):
    """Cached entry point: load the basis if present, else compute and store."""
    if cache_dir:
        G = load_basis(presentation, d_gb, cache_dir)
        if G is not None:
            return G
    G = buchberger_truncated(presentation, d_gb, element_limit=element_limit)
    if cache_dir:
        save_basis(G, cache_dir)
    return G
