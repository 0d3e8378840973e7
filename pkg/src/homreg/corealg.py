"""Core objects: exact scalars, words, homogeneous polynomials, presentations.

Words are tuples of generator indices.  A polynomial is a finite map from
words to nonzero scalars and is kept homogeneous at all times; the zero
polynomial has degree NEG_INF, matching the convention deg(0) = -infinity.
All values are immutable after construction and safe to share.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

NEG_INF = float("-inf")


class PresentationError(ValueError):
    """Malformed or inconsistent presentation input."""


class CertificationError(RuntimeError):
    """A value was requested outside its certified degree range."""


class ResourceLimitError(RuntimeError):
    """A computation exceeded its configured budget."""


# ---------------------------------------------------------------------------
# scalar fields


class RationalField:
    """The rationals; elements are `fractions.Fraction` (arbitrary precision)."""

    name = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, num, den=1):
        return Fraction(num, den)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("field:Q")

    def __repr__(self):
        return "Q"


QQ = RationalField()


class FpElement:
    """An element of F_p, stored as the reduced representative in [0, p)."""

    __slots__ = ("p", "v")

    def __init__(self, p, v):
        self.p = p
        self.v = v % p

    def _val(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError("mixed prime fields F_%d and F_%d" % (self.p, other.p))
            return other.v
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        v = self._val(other)
        if v is None:
            return NotImplemented
        return FpElement(self.p, self.v + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._val(other)
        if v is None:
            return NotImplemented
        return FpElement(self.p, self.v - v)

    def __rsub__(self, other):
        v = self._val(other)
        if v is None:
            return NotImplemented
        return FpElement(self.p, v - self.v)

    def __mul__(self, other):
        v = self._val(other)
        if v is None:
            return NotImplemented
        return FpElement(self.p, self.v * v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._val(other)
        if v is None:
            return NotImplemented
        return FpElement(self.p, self.v * pow(v, -1, self.p))

    def __rtruediv__(self, other):
        v = self._val(other)
        if v is None:
            return NotImplemented
        return FpElement(self.p, v * pow(self.v, -1, self.p))

    def __neg__(self):
        return FpElement(self.p, -self.v)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        v = self._val(other)
        if v is None:
            return NotImplemented
        return self.v == v % self.p

    def __hash__(self):
        return hash((self.p, self.v))

    def __repr__(self):
        return str(self.v)


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The prime field F_p."""

    def __init__(self, p):
        if not _is_prime(p):
            raise PresentationError("unsupported field F%d: %d is not prime" % (p, p))
        self.p = p
        self.name = "F%d" % p

    def zero(self):
        return FpElement(self.p, 0)

    def one(self):
        return FpElement(self.p, 1)

    def from_int(self, n):
        return FpElement(self.p, n)

    def from_fraction(self, num, den=1):
        return FpElement(self.p, num * pow(den, -1, self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("field:Fp", self.p))

    def __repr__(self):
        return self.name


def parse_field(name):
    """Resolve a field descriptor token: `Q` or `F<p>` with p prime."""
    name = name.strip()
    if name == "Q":
        return QQ
    m = re.fullmatch(r"F(\d+)", name)
    if m:
        return PrimeField(int(m.group(1)))
    raise PresentationError("unsupported field %r (expected Q or F<p>)" % name)


# ---------------------------------------------------------------------------
# words and the monomial order

# A Word is a tuple of generator indices; the empty tuple is the identity.


def word_degree(word, gen_degs):
    return sum(gen_degs[g] for g in word)


class MonomialOrder:
    """Weighted-degree-then-lexicographic order on words.

    `precedence` lists generator indices from highest to lowest; words of
    equal weighted degree compare lexicographically on precedence rank.
    The order is total, degree-compatible and multiplicative (two words of
    equal degree are never proper prefixes of each other, so plain tuple
    comparison of the rank sequences is unambiguous).
    """

    __slots__ = ("gen_degs", "precedence", "_rank")

    def __init__(self, gen_degs, precedence=None):
        n = len(gen_degs)
        if precedence is None:
            precedence = tuple(range(n))
        precedence = tuple(precedence)
        if sorted(precedence) != list(range(n)):
            raise PresentationError("order must be a permutation of all generators")
        self.gen_degs = tuple(gen_degs)
        self.precedence = precedence
        rank = [0] * n
        for pos, g in enumerate(precedence):
            rank[g] = n - 1 - pos
        self._rank = tuple(rank)

    def key(self, word):
        rank = self._rank
        degs = self.gen_degs
        return (sum(degs[g] for g in word), tuple(rank[g] for g in word))

    def greater(self, u, v):
        return self.key(u) > self.key(v)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and other.gen_degs == self.gen_degs
            and other.precedence == self.precedence
        )

    def __hash__(self):
        return hash((self.gen_degs, self.precedence))


# ---------------------------------------------------------------------------
# homogeneous noncommutative polynomials


class Poly:
    """A homogeneous noncommutative polynomial (word -> nonzero scalar)."""

    __slots__ = ("terms", "degree")

    def __init__(self, terms, degree):
        # Internal constructor; use Poly.make or presentation helpers, which
        # validate homogeneity and drop zero coefficients.
        self.terms = terms
        self.degree = degree

    @staticmethod
    def zero():
        return Poly({}, NEG_INF)

    @staticmethod
    def make(terms, gen_degs):
        clean = {w: c for w, c in terms.items() if c}
        if not clean:
            return Poly.zero()
        degs = {word_degree(w, gen_degs) for w in clean}
        if len(degs) != 1:
            raise PresentationError(
                "inhomogeneous polynomial: term degrees %s" % sorted(degs)
            )
        return Poly(clean, degs.pop())

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Poly) and other.terms == self.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not self.terms:
            return other
        if not other.terms:
            return self
        if self.degree != other.degree:
            raise PresentationError(
                "cannot add polynomials of degrees %s and %s" % (self.degree, other.degree)
            )
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms.get(w)
            s = c if s is None else s + c
            if s:
                terms[w] = s
            elif w in terms:
                del terms[w]
        return Poly(terms, self.degree) if terms else Poly.zero()

    def __neg__(self):
        return Poly({w: -c for w, c in self.terms.items()}, self.degree)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.terms or not other.terms:
            return Poly.zero()
        terms = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                c = a * b
                s = terms.get(w)
                s = c if s is None else s + c
                if s:
                    terms[w] = s
                elif w in terms:
                    del terms[w]
        if not terms:
            return Poly.zero()
        return Poly(terms, self.degree + other.degree)

    def scale(self, c):
        if not c or not self.terms:
            return Poly.zero()
        return Poly({w: c * a for w, a in self.terms.items()}, self.degree)

    def lmul_word(self, w, wdeg):
        """Multiply by the word `w` of degree `wdeg` on the left."""
        if not self.terms:
            return self
        return Poly({w + u: c for u, c in self.terms.items()}, self.degree + wdeg)

    def rmul_word(self, w, wdeg):
        if not self.terms:
            return self
        return Poly({u + w: c for u, c in self.terms.items()}, self.degree + wdeg)

    def lead_word(self, order):
        return max(self.terms, key=order.key)

    def lead_coeff(self, order):
        return self.terms[self.lead_word(order)]

    def monic(self, order):
        c = self.terms[self.lead_word(order)]
        if c == 1:
            return self
        inv = 1 / c if isinstance(c, Fraction) else c.__rtruediv__(1)
        return self.scale(inv)

    def reversed_words(self):
        """The polynomial with every word reversed (opposite algebra image)."""
        if not self.terms:
            return self
        return Poly({tuple(reversed(w)): c for w, c in self.terms.items()}, self.degree)

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        bits = []
        for w in sorted(self.terms):
            bits.append("%s:%s" % ("".join("g%d" % g for g in w) or "1", self.terms[w]))
        return "Poly(%s)" % ", ".join(bits)


def poly_multiply(p, q):
    """Free-algebra product of two homogeneous polynomials."""
    return p * q


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class AlgebraPresentation:
    """A finite presentation of a connected graded algebra.

    Generators carry positive integer degrees; relations are homogeneous
    nonzero polynomials in the free algebra on the generators.
    """

    field: object
    gen_names: tuple
    gen_degs: tuple
    relations: tuple
    order: MonomialOrder
    label: str = ""

    @property
    def n_gens(self):
        return len(self.gen_names)

    def gen_index(self, name):
        try:
            return self.gen_names.index(name)
        except ValueError:
            raise PresentationError("unknown symbol %r" % name) from None

    def gen_poly(self, i):
        return Poly({(i,): self.field.one()}, self.gen_degs[i])

    def word_degree(self, word):
        return word_degree(word, self.gen_degs)

    def word_poly(self, word):
        return Poly({tuple(word): self.field.one()}, self.word_degree(word))

    def one(self):
        return Poly({(): self.field.one()}, 0)

    def parse_poly(self, text):
        return _parse_poly_text(text, self)

    def max_gen_degree(self):
        return max(self.gen_degs) if self.gen_degs else 0

    def format_word(self, word):
        if not word:
            return "1"
        runs = []
        for g in word:
            if runs and runs[-1][0] == g:
                runs[-1][1] += 1
            else:
                runs.append([g, 1])
        return "*".join(
            self.gen_names[g] + ("^%d" % e if e > 1 else "") for g, e in runs
        )

    def format_poly(self, p):
        if not p.terms:
            return "0"
        words = sorted(p.terms, key=self.order.key, reverse=True)
        out = []
        for w in words:
            c = p.terms[w]
            cs = str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            ws = self.format_word(w)
            if cs == "1" and w:
                body = ws
            elif w:
                body = "%s*%s" % (cs, ws)
            else:
                body = cs
            if not out:
                out.append("-" + body if neg else body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)

    def to_text(self):
        """Canonical presentation-grammar serialization (stable for hashing)."""
        lines = ["field %s" % self.field.name]
        lines.append(
            "gens " + " ".join("%s:%d" % (n, d) for n, d in zip(self.gen_names, self.gen_degs))
        )
        lines.append("order " + " ".join(self.gen_names[g] for g in self.order.precedence))
        if self.relations:
            rels = sorted(self.relations, key=lambda r: (r.degree, self.order.key(r.lead_word(self.order))))
            lines.append("rels " + ", ".join(self.format_poly(r) for r in rels))
        return "\n".join(lines) + "\n"


def make_presentation(field, gens, relations, precedence=None, label="", normalize=True):
    """Validate and assemble an AlgebraPresentation.

    `gens` is a list of (name, degree) pairs, `relations` a list of Poly.
    With `normalize` the relations are made monic under the order.
    """
    names = tuple(n for n, _ in gens)
    degs = tuple(d for _, d in gens)
    if len(set(names)) != len(names):
        raise PresentationError("duplicate generator names")
    for n, d in gens:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", n):
            raise PresentationError("bad generator name %r" % n)
        if not isinstance(d, int) or d < 1:
            raise PresentationError(
                "generator %s has degree %r; connected graded input needs degree >= 1" % (n, d)
            )
    order = MonomialOrder(degs, precedence)
    rels = []
    for r in relations:
        if r.is_zero():
            raise PresentationError("zero relation")
        if r.degree < 1:
            raise PresentationError("relation of degree %s is a nonzero scalar" % r.degree)
        rels.append(r.monic(order) if normalize else r)
    return AlgebraPresentation(field, names, degs, tuple(rels), order, label)


def convert_field(pres, field):
    """The same presentation with coefficients mapped into another field."""
    if pres.field == field:
        return pres

    def conv(c):
        if isinstance(c, Fraction):
            return field.from_fraction(c.numerator, c.denominator)
        return field.from_int(c.v)

    rels = []
    for r in pres.relations:
        rels.append(Poly.make({w: conv(c) for w, c in r.terms.items()}, pres.gen_degs))
    return make_presentation(
        field,
        list(zip(pres.gen_names, pres.gen_degs)),
        rels,
        precedence=pres.order.precedence,
        label=pres.label,
    )


def opposite_presentation(pres):
    """The opposite presentation: every relation word reversed, verbatim terms.

    Applying twice returns the original presentation term-for-term, so no
    monic renormalization is performed here.
    """
    label = pres.label[:-3] if pres.label.endswith("^op") else pres.label + "^op"
    return AlgebraPresentation(
        pres.field,
        pres.gen_names,
        pres.gen_degs,
        tuple(r.reversed_words() for r in pres.relations),
        pres.order,
        label,
    )


# ---------------------------------------------------------------------------
# module presentations


@dataclass(frozen=True)
class ModulePresentation:
    """A presented graded module over an algebra presentation.

    `gen_degs` are the internal degrees a_r of the free cover generators;
    each relation row is a homogeneous element of the free module, stored
    as a tuple of Poly (entry r has degree row_degree - a_r, or is zero).
    """

    algebra: AlgebraPresentation
    side: str
    gen_degs: tuple
    rows: tuple
    row_degrees: tuple
    certified_to: object = None

    @property
    def n_gens(self):
        return len(self.gen_degs)


def make_module_presentation(algebra, side, gen_degs, rows, certified_to=None):
    if side not in ("left", "right"):
        raise PresentationError("module side must be 'left' or 'right'")
    gen_degs = tuple(int(d) for d in gen_degs)
    clean_rows = []
    row_degrees = []
    for row in rows:
        row = tuple(row)
        if len(row) != len(gen_degs):
            raise PresentationError("relation row length does not match generator count")
        degs = {gen_degs[r] + p.degree for r, p in enumerate(row) if p and not p.is_zero()}
        if not degs:
            raise PresentationError("zero relation row")
        if len(degs) != 1:
            raise PresentationError("inhomogeneous relation row: degrees %s" % sorted(degs))
        clean_rows.append(tuple(p if p else Poly.zero() for p in row))
        row_degrees.append(degs.pop())
    return ModulePresentation(
        algebra, side, gen_degs, tuple(clean_rows), tuple(row_degrees), certified_to
    )


def opposite_module(mpres):
    """View a right module as a left module over the opposite algebra."""
    op = opposite_presentation(mpres.algebra)
    side = "left" if mpres.side == "right" else "right"
    rows = tuple(tuple(p.reversed_words() for p in row) for row in mpres.rows)
    return ModulePresentation(op, side, mpres.gen_degs, rows, mpres.row_degrees, mpres.certified_to)


# ---------------------------------------------------------------------------
# parsing


_TOKEN_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*|\d+|[\^*+/,:-])|(\S)")


def _tokenize(text):
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        if m.group(2):
            raise PresentationError("unexpected character %r" % m.group(2))
        tokens.append(m.group(1))
    return tokens


class _TokenStream:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        t = self.peek()
        self.pos += 1
        return t

    def expect(self, tok):
        t = self.next()
        if t != tok:
            raise PresentationError("expected %r, found %r" % (tok, t))
        return t


def _parse_coefficient(ts, field):
    num = int(ts.next())
    if ts.peek() == "/":
        ts.next()
        den_tok = ts.next()
        if den_tok is None or not den_tok.isdigit():
            raise PresentationError("expected integer denominator")
        return field.from_fraction(num, int(den_tok))
    return field.from_int(num)


def _parse_term(ts, pres):
    """One signed term: [coef] [* name[^k] [* name[^k] ...]]."""
    field = pres.field
    coeff = field.one()
    letters = []
    saw_factor = False
    t = ts.peek()
    if t is not None and t.isdigit():
        coeff = _parse_coefficient(ts, field)
        saw_factor = True
        if ts.peek() == "*":
            ts.next()
        else:
            return coeff, tuple(letters)
    while True:
        t = ts.peek()
        if t is None or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", t):
            if not saw_factor:
                raise PresentationError("expected a term, found %r" % t)
            break
        ts.next()
        idx = pres.gen_index(t)
        power = 1
        if ts.peek() == "^":
            ts.next()
            e = ts.next()
            if e is None or not e.isdigit():
                raise PresentationError("expected integer exponent after '^'")
            power = int(e)
        letters.extend([idx] * power)
        saw_factor = True
        if ts.peek() == "*":
            ts.next()
            continue
        break
    return coeff, tuple(letters)


def _parse_poly_stream(ts, pres):
    terms = {}
    sign = 1
    t = ts.peek()
    if t in ("+", "-"):
        ts.next()
        sign = -1 if t == "-" else 1
    while True:
        coeff, word = _parse_term(ts, pres)
        if sign < 0:
            coeff = -coeff
        prev = terms.get(word)
        s = coeff if prev is None else prev + coeff
        if s:
            terms[word] = s
        elif word in terms:
            del terms[word]
        t = ts.peek()
        if t in ("+", "-"):
            ts.next()
            sign = -1 if t == "-" else 1
            continue
        break
    return Poly.make(terms, pres.gen_degs)


def _parse_poly_text(text, pres):
    ts = _TokenStream(_tokenize(text))
    p = _parse_poly_stream(ts, pres)
    if ts.peek() is not None:
        raise PresentationError("trailing input %r in polynomial" % ts.peek())
    return p


def _split_statements(text):
    out = []
    for raw_line in text.splitlines():
        line = raw_line.split("#", 1)[0]
        for stmt in line.split(";"):
            stmt = stmt.strip()
            if stmt:
                out.append(stmt)
    return out


def parse_presentation(text, label=""):
    """Parse the presentation grammar.

    Grammar (UTF-8 text, statements split on ';' or newlines, '#' comments):
        field Q|F<p>
        gens <name>:<deg> ...
        order <name list>          (optional; highest precedence first)
        rels <poly>, <poly>, ...   (optional; '*' concatenation, '^' powers)
    """
    field = None
    gens = []
    rel_sources = []
    order_names = None
    for stmt in _split_statements(text):
        head, _, rest = stmt.partition(" ")
        rest = rest.strip()
        if head == "field":
            field = parse_field(rest)
        elif head == "gens":
            for item in rest.split():
                name, _, deg = item.partition(":")
                if not deg:
                    raise PresentationError("generator %r needs a degree, e.g. x:1" % item)
                try:
                    d = int(deg)
                except ValueError:
                    raise PresentationError("bad degree %r for generator %r" % (deg, name)) from None
                gens.append((name, d))
        elif head == "rels":
            rel_sources.append(rest)
        elif head == "order":
            order_names = rest.split()
        else:
            raise PresentationError("unknown directive %r" % head)
    if field is None:
        raise PresentationError("missing 'field' directive")
    if not gens:
        raise PresentationError("missing 'gens' directive")
    # a provisional presentation provides name resolution for relation parsing
    proto = make_presentation(field, gens, [], label=label)
    precedence = None
    if order_names is not None:
        precedence = tuple(proto.gen_index(n) for n in order_names)
    relations = []
    for source in rel_sources:
        ts = _TokenStream(_tokenize(source))
        while ts.peek() is not None:
            start = ts.pos
            p = _parse_poly_stream(ts, proto)
            if p.is_zero():
                raise PresentationError("zero relation in %r" % source)
            if p.degree < 1:
                raise PresentationError("relation %r is a nonzero scalar" % source)
            try:
                relations.append(p)
            finally:
                del start
            if ts.peek() == ",":
                ts.next()
                continue
            if ts.peek() is not None:
                raise PresentationError("expected ',' between relations, found %r" % ts.peek())
    return make_presentation(field, gens, relations, precedence=precedence, label=label)


def parse_module(text, algebra):
    """Parse the module-file grammar over a given algebra.

    Statements:
        side left|right
        gens <deg> <deg> ...       (internal degrees of the free generators)
        rels <row>, <row>, ...     (rows are sums of <poly>*e<k> terms)
    """
    side = "left"
    gen_degs = None
    row_sources = []
    for stmt in _split_statements(text):
        head, _, rest = stmt.partition(" ")
        rest = rest.strip()
        if head == "side":
            side = rest
        elif head == "gens":
            try:
                gen_degs = [int(t) for t in rest.split()]
            except ValueError:
                raise PresentationError("module generator degrees must be integers") from None
        elif head == "rels":
            row_sources.append(rest)
        else:
            raise PresentationError("unknown module directive %r" % head)
    if gen_degs is None:
        raise PresentationError("missing module 'gens' directive")
    rows = []
    for source in row_sources:
        for chunk in source.split(","):
            chunk = chunk.strip()
            if chunk:
                rows.append(_parse_module_row(chunk, algebra, len(gen_degs)))
    return make_module_presentation(algebra, side, gen_degs, rows)


def _parse_module_row(text, pres, n_gens):
    ts = _TokenStream(_tokenize(text))
    entries = [Poly.zero() for _ in range(n_gens)]
    sign = 1
    t = ts.peek()
    if t in ("+", "-"):
        ts.next()
        sign = -1 if t == "-" else 1
    while True:
        coeff = pres.field.one()
        letters = []
        t = ts.peek()
        if t is not None and t.isdigit():
            coeff = _parse_coefficient(ts, pres.field)
            ts.expect("*")
        while True:
            t = ts.peek()
            if t is None:
                raise PresentationError("module term must end in a basis symbol e<k>")
            m = re.fullmatch(r"e(\d+)", t)
            if m:
                ts.next()
                slot = int(m.group(1))
                break
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", t):
                raise PresentationError("unexpected token %r in module row" % t)
            ts.next()
            idx = pres.gen_index(t)
            power = 1
            if ts.peek() == "^":
                ts.next()
                e = ts.next()
                power = int(e)
            letters.extend([idx] * power)
            ts.expect("*")
        if slot >= n_gens:
            raise PresentationError("basis symbol e%d out of range" % slot)
        if sign < 0:
            coeff = -coeff
        p = Poly.make({tuple(letters): coeff}, pres.gen_degs)
        entries[slot] = entries[slot] + p
        t = ts.peek()
        if t in ("+", "-"):
            ts.next()
            sign = -1 if t == "-" else 1
            continue
        if t is None:
            break
        raise PresentationError("trailing input %r in module row" % t)
    return entries
