"""Hilbert series: truncated coefficients, exact rational forms, Stanley test.

Rational forms are computed only from complete Groebner bases, via the
finite automaton of normal words (states are proper prefixes of leading
words).  The denominator det(I - M(t)) is found by exact evaluation and
Lagrange interpolation, the numerator by multiplying the truncated
coefficient series back in; both steps are exact and the product is
verified to be a polynomial before anything is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .corealg import CertificationError

# -- small exact polynomial kit (coefficient lists, ascending) --------------


def _ptrim(c):
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return c


def _pdeg(c):
    return len(c) - 1


def _padd(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _ptrim(out)


def _pneg(a):
    return [-x for x in a]


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return _ptrim(out)


def _pdivmod(a, b):
    a = _ptrim([Fraction(x) for x in a])
    b = _ptrim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return [], []
    db = _pdeg(b)
    lead = b[-1]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = list(a)
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        f = r[-1] / lead
        q[k] = f
        for i in range(len(b)):
            r[i + k] -= f * b[i]
        r.pop()  # the leading coefficient cancels exactly
        r = _ptrim(r)
    return _ptrim(q), _ptrim(r)


def _pgcd(a, b):
    a, b = _ptrim([Fraction(x) for x in a]), _ptrim([Fraction(x) for x in b])
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [x / lead for x in a]
    return a


def _peval(c, x):
    acc = Fraction(0)
    for coef in reversed(c):
        acc = acc * x + coef
    return acc


def _to_int_poly(c):
    out = []
    for x in c:
        f = Fraction(x)
        if f.denominator != 1:
            raise ArithmeticError("expected integer polynomial, found %s" % f)
        out.append(int(f))
    return tuple(out)


# -- normal-word automaton ---------------------------------------------------


@dataclass(frozen=True)
class Automaton:
    states: tuple  # proper prefixes of leading words; states[0] == ()
    transitions: tuple  # per state: tuple of (letter, target state index)


def build_automaton(lead_words, n_gens):
    prefixes = {()}
    for u in lead_words:
        for k in range(1, len(u)):
            prefixes.add(u[:k])
    states = sorted(prefixes, key=lambda w: (len(w), w))
    index = {w: i for i, w in enumerate(states)}
    max_len = max(len(p) for p in prefixes)
    transitions = []
    for s in states:
        row = []
        for a in range(n_gens):
            w = s + (a,)
            n = len(w)
            if any(len(u) <= n and w[n - len(u) :] == u for u in lead_words):
                continue  # completing a forbidden word kills the path
            for k in range(min(n, max_len), -1, -1):
                suffix = w[n - k :] if k else ()
                if suffix in index:
                    row.append((a, index[suffix]))
                    break
        transitions.append(tuple(row))
    return Automaton(tuple(states), tuple(transitions))


def automaton_dims(aut, gen_degs, upto):
    """Weighted path counts from the root: dim A_d for d = 0..upto."""
    nst = len(aut.states)
    counts = [[0] * nst for _ in range(upto + 1)]
    counts[0][0] = 1
    for d in range(1, upto + 1):
        row = counts[d]
        for s0 in range(nst):
            for a, s1 in aut.transitions[s0]:
                da = gen_degs[a]
                if da <= d:
                    c = counts[d - da][s0]
                    if c:
                        row[s1] += c
    return [sum(counts[d]) for d in range(upto + 1)]


# -- series types -------------------------------------------------------------


@dataclass(frozen=True)
class TruncatedSeries:
    coefficients: tuple
    truncation: int

    def coefficient(self, j):
        if j > self.truncation:
            raise CertificationError("coefficient %d beyond truncation %d" % (j, self.truncation))
        return self.coefficients[j] if 0 <= j <= self.truncation else 0

    def text(self):
        return "[" + ", ".join(str(c) for c in self.coefficients) + ", ...]"


@dataclass(frozen=True)
class RationalSeries:
    """An exact rational Hilbert series numerator / prod (1 - t^e_i).

    `denominator` is the expanded denominator polynomial (constant term 1);
    `denom_exponents` is the multiset {e_i} when such a factorization
    exists, else None.  `degree` is the t-degree as a rational function,
    i.e. the a-invariant when this is h_A.
    """

    numerator: tuple
    denominator: tuple
    denom_exponents: tuple
    degree: int

    def is_polynomial(self):
        return self.denominator == (1,)

    def expand(self, upto):
        """Power-series coefficients c_0..c_upto of numerator/denominator."""
        num, den = self.numerator, self.denominator
        out = []
        for k in range(upto + 1):
            acc = Fraction(num[k]) if k < len(num) else Fraction(0)
            for i in range(1, min(k, len(den) - 1) + 1):
                if den[i]:
                    acc -= den[i] * out[k - i]
            if acc.denominator != 1:
                raise ArithmeticError("non-integral series expansion")
            out.append(int(acc))
        return out

    def text(self):
        num = _format_poly(self.numerator)
        if self.is_polynomial():
            return num
        if self.denom_exponents is not None:
            den = "".join("(1-t^%d)" % e if e != 1 else "(1-t)" for e in self.denom_exponents)
        else:
            den = "(" + _format_poly(self.denominator) + ")"
        return "(%s) / %s" % (num, den)

    def record(self):
        return {
            "numerator": list(self.numerator),
            "denominator": list(self.denominator),
            "denominator_exponents": list(self.denom_exponents) if self.denom_exponents is not None else None,
            "degree": self.degree,
        }


def _format_poly(coeffs):
    bits = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if i == 0:
            bits.append(str(c))
        else:
            mono = "t" if i == 1 else "t^%d" % i
            if c == 1:
                bits.append("+ " + mono if bits else mono)
            elif c == -1:
                bits.append("- " + mono if bits else "-" + mono)
            else:
                s = str(c)
                if s.startswith("-"):
                    bits.append(("- %s*" % s[1:]) + mono if bits else s + "*" + mono)
                else:
                    bits.append(("+ %s*" % s) + mono if bits else s + "*" + mono)
    return " ".join(bits) if bits else "0"


def _one_minus_t_power(e):
    c = [Fraction(0)] * (e + 1)
    c[0] = Fraction(1)
    c[e] = Fraction(-1)
    return c


def _factor_denominator(den):
    """Express `den` as prod (1 - t^e_i), smallest exponents first, or None."""
    den = _ptrim([Fraction(x) for x in den])
    if den == [Fraction(1)]:
        return ()
    deg = _pdeg(den)
    for e in range(1, deg + 1):
        q, r = _pdivmod(den, _one_minus_t_power(e))
        if not r:
            rest = _factor_denominator(q)
            if rest is not None:
                return tuple(sorted((e,) + rest))
    return None


def make_rational(numerator, denominator):
    """Normalize an exact rational series: cancel, scale, factor, grade."""
    num = _ptrim([Fraction(x) for x in numerator])
    den = _ptrim([Fraction(x) for x in denominator])
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return RationalSeries((0,), (1,), (), float("-inf"))
    g = _pgcd(num, den)
    if _pdeg(g) >= 1:
        num, _ = _pdivmod(num, g)
        den, _ = _pdivmod(den, g)
    # scale so the denominator has constant term 1
    c0 = den[0]
    if not c0:
        raise ArithmeticError("denominator vanishes at t = 0")
    num = [x / c0 for x in num]
    den = [x / c0 for x in den]
    n = _to_int_poly(num)
    d = _to_int_poly(den)
    exps = _factor_denominator(d)
    return RationalSeries(n, d, exps, _pdeg(list(n)) - _pdeg(list(d)))


def rational_from_exponents(numerator, exponents):
    """Helper: numerator / prod(1 - t^e) for a list of exponents."""
    den = [Fraction(1)]
    for e in exponents:
        den = _pmul(den, _one_minus_t_power(e))
    return make_rational(numerator, den)


# -- the three series operations ---------------------------------------------


def hilbert_truncated(G, upto):
    """Coefficients dim A_j for j <= upto, from normal-word counts."""
    G.check_degree(upto, "Hilbert coefficients")
    aut = build_automaton(G.lead_words, G.presentation.n_gens)
    dims = automaton_dims(aut, G.presentation.gen_degs, upto)
    return TruncatedSeries(tuple(dims), upto)


def hilbert_rational(G):
    """Exact rational Hilbert series from a complete Groebner basis."""
    if not G.complete:
        raise CertificationError(
            "rational Hilbert series requires a complete Groebner basis "
            "(basis certified only up to degree %d); use hilbert_truncated instead" % G.d_gb
        )
    pres = G.presentation
    aut = build_automaton(G.lead_words, pres.n_gens)
    nst = len(aut.states)
    e_max = pres.max_gen_degree() if pres.n_gens else 1
    bound = nst * e_max

    # denominator det(I - M(t)) by evaluation / interpolation
    def det_at(t0):
        m = [[Fraction(0)] * nst for _ in range(nst)]
        for s0 in range(nst):
            for a, s1 in aut.transitions[s0]:
                m[s0][s1] += t0 ** pres.gen_degs[a]
        for i in range(nst):
            for j in range(nst):
                m[i][j] = (Fraction(1) if i == j else Fraction(0)) - m[i][j]
        det = Fraction(1)
        for c in range(nst):
            piv = None
            for r in range(c, nst):
                if m[r][c]:
                    piv = r
                    break
            if piv is None:
                return Fraction(0)
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                det = -det
            det *= m[c][c]
            inv = 1 / m[c][c]
            for r in range(c + 1, nst):
                f = m[r][c] * inv
                if f:
                    for k in range(c, nst):
                        m[r][k] -= f * m[c][k]
        return det

    points = [Fraction(i) for i in range(bound + 1)]
    values = [det_at(x) for x in points]
    den = _interpolate(points, values)

    upto = 2 * (bound + 1)
    dims = automaton_dims(aut, pres.gen_degs, upto)
    prod = _pmul([Fraction(c) for c in dims], den)
    num = _ptrim(prod[: bound + 1])
    for k in range(bound + 1, min(len(prod), upto + 1)):
        if prod[k]:
            raise ArithmeticError("internal error: numerator not polynomial")
    return make_rational(num, den)


def _interpolate(xs, ys):
    """Exact Lagrange interpolation through (xs, ys)."""
    result = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi:
            continue
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = _pmul(basis, [-xj, Fraction(1)])
            denom *= xi - xj
        result = _padd(result, [yi / denom * b for b in basis])
    return _ptrim(result)


def series_product(h1, h2):
    """h_{A (x) B} = h_A * h_B; rational x rational stays rational."""
    if isinstance(h1, RationalSeries) and isinstance(h2, RationalSeries):
        num = _pmul([Fraction(c) for c in h1.numerator], [Fraction(c) for c in h2.numerator])
        den = _pmul([Fraction(c) for c in h1.denominator], [Fraction(c) for c in h2.denominator])
        return make_rational(num, den)
    upto1 = h1.truncation if isinstance(h1, TruncatedSeries) else None
    upto2 = h2.truncation if isinstance(h2, TruncatedSeries) else None
    upto = min(u for u in (upto1, upto2) if u is not None)
    c1 = list(h1.coefficients[: upto + 1]) if upto1 is not None else h1.expand(upto)
    c2 = list(h2.coefficients[: upto + 1]) if upto2 is not None else h2.expand(upto)
    out = [0] * (upto + 1)
    for i, x in enumerate(c1):
        if not x:
            continue
        for j in range(0, upto + 1 - i):
            y = c2[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries(tuple(out), upto)


# -- Stanley's functional equation --------------------------------------------


@dataclass(frozen=True)
class StanleyVerdict:
    satisfied: bool
    sign: int = None
    shift: int = None

    def text(self):
        if not self.satisfied:
            return "violated"
        return "satisfied(%+d, l=%d)" % (self.sign, self.shift)


def stanley_check(h):
    """Decide h(1/t) = sign * t^l * h(t) as rational functions.

    Substituting 1/t gives h(1/t) = t^(deg D - deg N) * rev(N)/rev(D); the
    equation holds iff rev(N)*D equals sign * t^m * N*rev(D) for a monomial
    shift, which is settled by exact polynomial comparison.  The (sign, l)
    pair is unique when it exists.
    """
    num = [Fraction(c) for c in h.numerator]
    den = [Fraction(c) for c in h.denominator]
    if not _ptrim(num):
        return StanleyVerdict(False)
    rev_n = list(reversed(num))
    rev_d = list(reversed(den))
    lhs = _ptrim(_pmul(rev_n, den))
    rhs = _ptrim(_pmul(num, rev_d))
    val_l = next(i for i, c in enumerate(lhs) if c)
    val_r = next(i for i, c in enumerate(rhs) if c)
    m = val_l - val_r
    if _pdeg(lhs) - _pdeg(rhs) != m:
        return StanleyVerdict(False)
    ratio = lhs[val_l] / rhs[val_r]
    if ratio == 1:
        sign = 1
    elif ratio == -1:
        sign = -1
    else:
        return StanleyVerdict(False)
    shifted = [Fraction(0)] * m + [sign * c for c in rhs]
    if _ptrim(shifted) != lhs:
        return StanleyVerdict(False)
    # h(1/t) = t^(degD - degN) revN/revD = sign t^(m + degD - degN) h(t)
    ell = m + (_pdeg(den) - _pdeg(num))
    return StanleyVerdict(True, sign, ell)
