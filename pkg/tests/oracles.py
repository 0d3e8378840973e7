"""Independent brute-force oracles used to freeze expected test values.

Nothing here goes through the Groebner/normal-form machinery: ideal slice
dimensions are computed as ranks of explicit spanning sets over the full
free-word basis, and series are expanded by naive convolution, so these
can certify the production code paths.
"""

from fractions import Fraction

from homreg.corealg import make_module_presentation


def free_words(gen_degs, degree):
    """All words over the generators with the given total weighted degree."""
    out = []

    def extend(word, rem):
        if rem == 0:
            out.append(tuple(word))
            return
        for g, dg in enumerate(gen_degs):
            if dg <= rem:
                word.append(g)
                extend(word, rem - dg)
                word.pop()

    extend([], degree)
    return out


def ideal_slice_dim(pres, j):
    """dim of the degree-j slice of the two-sided ideal, by brute force.

    The slice is spanned by u * r * v over all relations r and all free
    words u, v with matching degrees; the rank is an exact row reduction
    over the full degree-j free-word basis.
    """
    basis = {w: i for i, w in enumerate(free_words(pres.gen_degs, j))}
    field = pres.field
    rows = []
    for r in pres.relations:
        rem = j - r.degree
        if rem < 0:
            continue
        for du in range(rem + 1):
            for u in free_words(pres.gen_degs, du):
                for v in free_words(pres.gen_degs, rem - du):
                    vec = [field.zero()] * len(basis)
                    for w, c in r.terms.items():
                        vec[basis[u + w + v]] = vec[basis[u + w + v]] + c
                    rows.append(vec)
    # plain forward elimination, kept separate from homreg.linalg
    rank = 0
    pivots = {}
    for row in rows:
        row = list(row)
        for p in sorted(pivots):
            if row[p]:
                f = row[p]
                prow = pivots[p]
                for k in range(p, len(row)):
                    if prow[k]:
                        row[k] = row[k] - f * prow[k]
        lead = next((k for k, x in enumerate(row) if x), None)
        if lead is not None:
            inv = 1 / row[lead] if isinstance(row[lead], Fraction) else row[lead].__rtruediv__(1)
            pivots[lead] = [x * inv for x in row]
            rank += 1
    return rank


def brute_algebra_dim(pres, j):
    """dim A_j = (# free words of degree j) - (ideal slice dimension)."""
    return len(free_words(pres.gen_degs, j)) - ideal_slice_dim(pres, j)


def expand_quotient(numerator, denom_exponents, upto):
    """Coefficients of numerator / prod(1 - t^e), by direct convolution."""
    den = [1]
    for e in denom_exponents:
        new = [0] * (len(den) + e)
        for i, c in enumerate(den):
            new[i] += c
            new[i + e] -= c
        den = new
    out = []
    for k in range(upto + 1):
        acc = Fraction(numerator[k] if k < len(numerator) else 0)
        for i in range(1, min(k, len(den) - 1) + 1):
            acc -= den[i] * out[k - i]
        assert acc.denominator == 1
        out.append(int(acc))
    return out


def eval_rational(rs, t0):
    """Evaluate a RationalSeries exactly at a rational point."""
    num = sum(Fraction(c) * t0**i for i, c in enumerate(rs.numerator))
    den = sum(Fraction(c) * t0**i for i, c in enumerate(rs.denominator))
    return num / den


def semisimple_module(pres, degrees):
    """k(-d_1) (+) ... (+) k(-d_r): every algebra generator acts as zero."""
    rows = []
    for r in range(len(degrees)):
        for g in range(pres.n_gens):
            row = [pres.gen_poly(g) if s == r else None for s in range(len(degrees))]
            rows.append(row)
    return make_module_presentation(pres, "left", degrees, rows)


def random_fdim_module(pres, G, rng, n_gens=2, cutoff=3):
    """A random module presentation that is provably finite dimensional.

    Random generators in degrees 0..1 and a few random relation rows, then
    a killing band wide enough that all pieces above the cutoff vanish.
    """
    degrees = [0] + [rng.choice([0, 1]) for _ in range(n_gens - 1)]
    field = pres.field
    rows = []
    for _ in range(rng.randrange(0, 3)):
        rdeg = rng.choice([1, 2])
        row = []
        for a in degrees:
            e = rdeg - a
            words = list(G.normal_words(e)) if e >= 0 else []
            terms = {}
            for w in words:
                c = rng.randrange(-2, 3)
                if c:
                    terms[w] = field.from_int(c)
            from homreg.corealg import Poly

            row.append(Poly.make(terms, pres.gen_degs) if terms else Poly.zero())
        if any(p for p in row):
            rows.append(row)
    width = pres.max_gen_degree()
    for j in range(cutoff, cutoff + width + 1):
        for r, a in enumerate(degrees):
            if j - a < 0:
                continue
            for w in G.normal_words(j - a):
                row = [
                    pres.word_poly(w) if s == r else None for s in range(len(degrees))
                ]
                rows.append(row)
    return make_module_presentation(pres, "left", degrees, rows)
