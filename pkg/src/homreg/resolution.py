"""Minimal graded free resolutions by degreewise syzygy computation.

The engine works one internal degree at a time: the map at each step is
evaluated on the normal-word basis of its graded piece, the kernel is an
exact nullspace computation, and minimal new generators are extracted as
a complement of the span of lower-degree syzygies under the algebra
action.  Everything below the truncation bound (i_max, d_max) is exact;
nothing above it is ever guessed.

Termination (a zero kernel, hence finite projective dimension) is only
declared with a certificate:

  * "socle-window"  - the algebra is finite dimensional with top degree D
    and the window clears max-shift + D, so a nonzero kernel would show a
    socle element inside the window;
  * "euler-exact"   - the alternating sum of shift polynomials times the
    exact rational Hilbert series of the algebra equals the module's
    Hilbert series as rational functions;
  * "window"        - the kernel is empty through d_max and the previous
    step's generators sit low enough that no syzygy generator of an
    element inside the window could hide above it.  This is the weakest
    certificate and is recorded as a caveat.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .corealg import (
    NEG_INF,
    ModulePresentation,
    Poly,
    PresentationError,
    make_module_presentation,
)
from .series import RationalSeries, _pmul, _ptrim


# ---------------------------------------------------------------------------
# graded module views


class FreeLayer:
    """Graded pieces of a free module (+)_r A(-a_r) over normal words."""

    def __init__(self, G, shifts):
        self.G = G
        self.shifts = tuple(shifts)
        self.field = G.presentation.field
        self._basis = {}
        self._index = {}

    def min_degree(self):
        return min(self.shifts) if self.shifts else 0

    def basis(self, j):
        b = self._basis.get(j)
        if b is None:
            b = []
            for r, a in enumerate(self.shifts):
                if j - a >= 0:
                    for w in self.G.normal_words(j - a):
                        b.append((r, w))
            b = tuple(b)
            self._basis[j] = b
            self._index[j] = {x: i for i, x in enumerate(b)}
        return b

    def index(self, j):
        self.basis(j)
        return self._index[j]

    def dim(self, j):
        return len(self.basis(j))

    def act(self, g, j, vec):
        """Left multiplication by generator g on a degree-j coordinate vector."""
        dg = self.G.presentation.gen_degs[g]
        target = self.index(j + dg)
        src = self.basis(j)
        out = [self.field.zero()] * len(target)
        for idx, c in enumerate(vec):
            if not c:
                continue
            r, u = src[idx]
            p = self.G.nf_word((g,) + u)
            for u2, c2 in p.terms.items():
                out[target[(r, u2)]] = out[target[(r, u2)]] + c * c2
        return out


class PresentedModuleView:
    """Graded pieces of a presented module F/N in canonical coordinates.

    Coordinates at each degree are the non-pivot columns of the reduced
    relation span N_j inside the ambient free piece F_j, so every basis
    choice downstream is deterministic.
    """

    def __init__(self, G, mpres, d_max):
        if mpres.side != "left":
            raise PresentationError(
                "the resolution engine takes left modules; convert with opposite_module"
            )
        self.G = G
        self.pres = mpres
        self.d_max = d_max
        self.field = G.presentation.field
        self.ambient = FreeLayer(G, mpres.gen_degs)
        self.min_degree = min(mpres.gen_degs) if mpres.gen_degs else 0
        self._echelon = {}
        self._free_cols = {}
        self._act_cols = {}
        for j in range(self.min_degree, d_max + 1):
            self._build_degree(j)

    def _build_degree(self, j):
        basis = self.ambient.basis(j)
        ech = linalg.Echelon(len(basis), self.field)
        index = self.ambient.index(j)
        zero = self.field.zero()
        for row, rdeg in zip(self.pres.rows, self.pres.row_degrees):
            if j - rdeg < 0:
                continue
            for w in self.G.normal_words(j - rdeg):
                vec = [zero] * len(basis)
                wdeg = j - rdeg
                for r, p in enumerate(row):
                    if not p:
                        continue
                    q = self.G.normal_form(p.lmul_word(w, wdeg))
                    for u, c in q.terms.items():
                        vec[index[(r, u)]] = vec[index[(r, u)]] + c
                ech.add(vec)
        self._echelon[j] = ech
        pivots = set(ech.pivot_of_row)
        self._free_cols[j] = tuple(c for c in range(len(basis)) if c not in pivots)

    def dim(self, j):
        if j < self.min_degree or j > self.d_max:
            return 0
        return len(self._free_cols[j])

    def _project(self, j, ambient_vec):
        res = self._echelon[j].residue(ambient_vec)
        return [res[c] for c in self._free_cols[j]]

    def act_columns(self, g, j):
        """Images of the degree-j basis under generator g, as columns."""
        key = (g, j)
        cols = self._act_cols.get(key)
        if cols is not None:
            return cols
        dg = self.G.presentation.gen_degs[g]
        zero = self.field.zero()
        nfree = self.dim(j)
        cols = []
        for b in range(nfree):
            amb = [zero] * len(self.ambient.basis(j))
            amb[self._free_cols[j][b]] = self.field.one()
            img = self.ambient.act(g, j, amb)
            cols.append(self._project(j + dg, img))
        self._act_cols[key] = cols
        return cols

    def act_vec(self, g, j, vec):
        dg = self.G.presentation.gen_degs[g]
        out = [self.field.zero()] * self.dim(j + dg)
        cols = self.act_columns(g, j)
        for b, c in enumerate(vec):
            if not c:
                continue
            col = cols[b]
            for t in range(len(out)):
                if col[t]:
                    out[t] = out[t] + c * col[t]
        return out

    def dims(self):
        return [self.dim(j) for j in range(min(self.min_degree, 0), self.d_max + 1)]

    def hilbert_if_finite(self):
        """Exact polynomial Hilbert series when finite-dimensionality certifies.

        A trailing zero band of width max(algebra generator degree) above
        both the top nonzero degree and the top module generator degree
        forces all higher pieces to vanish.
        """
        lo = min(self.min_degree, 0)
        dims = {j: self.dim(j) for j in range(lo, self.d_max + 1)}
        nonzero = [j for j, d in dims.items() if d]
        if not nonzero:
            return RationalSeries((0,), (1,), (), NEG_INF)
        top = max(nonzero)
        if self.pres.gen_degs:
            top = max(top, max(self.pres.gen_degs))
        width = self.G.presentation.max_gen_degree()
        if top + width > self.d_max:
            return None
        if any(dims[j] for j in range(max(nonzero) + 1, top + width + 1)):
            return None
        if lo < 0:
            return None  # negatively graded pieces: leave uncertified
        coeffs = tuple(dims[j] for j in range(0, max(nonzero) + 1))
        return RationalSeries(coeffs, (1,), (), max(nonzero))


class MappedAlgebraView:
    """An algebra A as a graded left T-module through generator images."""

    def __init__(self, G_T, images, G_A, d_max):
        self.G = G_T
        self.G_A = G_A
        self.images = tuple(images)
        self.d_max = d_max
        self.field = G_T.presentation.field
        self.min_degree = 0
        degs = G_T.presentation.gen_degs
        for i, p in enumerate(self.images):
            if p.is_zero() or p.degree != degs[i]:
                raise PresentationError(
                    "image of generator %d must be homogeneous of degree %d"
                    % (i, degs[i])
                )
        self._act_cols = {}

    def dim(self, j):
        if j < 0 or j > self.d_max:
            return 0
        return self.G_A.dim(j)

    def act_columns(self, g, j):
        key = (g, j)
        cols = self._act_cols.get(key)
        if cols is not None:
            return cols
        dg = self.G.presentation.gen_degs[g]
        fg = self.images[g]
        words = self.G_A.normal_words(j)
        target = self.G_A.word_index(j + dg)
        zero = self.field.zero()
        cols = []
        for w in words:
            q = self.G_A.normal_form(fg.rmul_word(w, j))
            col = [zero] * len(target)
            for u, c in q.terms.items():
                col[target[u]] = col[target[u]] + c
            cols.append(col)
        self._act_cols[key] = cols
        return cols

    def act_vec(self, g, j, vec):
        dg = self.G.presentation.gen_degs[g]
        out = [self.field.zero()] * self.dim(j + dg)
        cols = self.act_columns(g, j)
        for b, c in enumerate(vec):
            if not c:
                continue
            col = cols[b]
            for t in range(len(out)):
                if col[t]:
                    out[t] = out[t] + c * col[t]
        return out

    def hilbert_if_finite(self):
        return None


# ---------------------------------------------------------------------------
# resolution data


@dataclass(frozen=True)
class FreeModuleMap:
    """A graded map between free modules: entry (r, s) has degree b_s - a_r."""

    target_shifts: tuple
    source_shifts: tuple
    entries: tuple  # entries[r][s]: Poly (zero polynomial allowed)


@dataclass
class Resolution:
    label: str
    side: str
    shifts: tuple  # shifts[i]: sorted generator degrees of F_i
    maps: tuple  # maps[i]: F_{i+1} -> F_i as FreeModuleMap, i = 0..len-1
    i_max: int
    d_max: int
    terminated: bool
    termination_step: object
    certificate: object
    more_steps_exist: bool

    @property
    def steps_computed(self):
        return len(self.shifts) - 1

    def projective_dimension(self):
        return self.termination_step if self.terminated else None


@dataclass
class BettiTable:
    """Ranks beta_{i,j} of a minimal resolution, truncated to (i_max, d_max)."""

    entries: dict
    steps_computed: int
    i_max: int
    d_max: int
    terminated: bool
    termination_step: object
    side: str
    label: str

    def betti(self, i, j):
        return self.entries.get((i, j), 0)

    def t(self, i):
        """t_i = deg Tor_i, i.e. the top shift at step i (NEG_INF when zero)."""
        js = [j for (ii, j) in self.entries if ii == i]
        if js:
            return max(js)
        return NEG_INF

    def t_values(self):
        top = self.termination_step if self.terminated else self.steps_computed
        return [self.t(i) for i in range(top + 1)]

    def total_rank(self, i):
        return sum(r for (ii, _), r in self.entries.items() if ii == i)

    def alternating_shift_poly(self):
        """Sum_i (-1)^i sum_j beta_{i,j} t^j as an integer coefficient list."""
        if not self.entries:
            return [0]
        top = max(j for (_, j) in self.entries)
        out = [0] * (top + 1)
        for (i, j), rank in self.entries.items():
            out[j] += rank if i % 2 == 0 else -rank
        return out

    def records(self):
        recs = []
        for (i, j), rank in sorted(self.entries.items()):
            recs.append({"i": i, "j": j, "rank": rank, "certified": True})
        return recs

    def to_grid_text(self):
        if not self.entries:
            return "(zero table)"
        imax = max(i for (i, _) in self.entries)
        jmax = max(j for (_, j) in self.entries)
        jmin = min(min(j for (_, j) in self.entries), 0)
        lines = ["i\\j " + " ".join("%4d" % j for j in range(jmin, jmax + 1))]
        for i in range(imax + 1):
            row = ["%4d" % self.betti(i, j) if self.betti(i, j) else "   ." for j in range(jmin, jmax + 1)]
            lines.append("%3d " % i + " ".join(row))
        return "\n".join(lines)


@dataclass
class ExtTable:
    """Ranks of Ext^i(k, A) per internal degree on a certified window.

    `windows[i]` is the certified internal-degree interval (j_lo, j_hi)
    for homological degree i; entries outside it were not computed.
    """

    entries: dict
    i_top: int
    windows: dict
    complete: bool  # True when the resolution terminated (all i certified)
    label: str

    def rank(self, i, j):
        return self.entries.get((i, j), 0)

    def nonzero_homological_degrees(self):
        return sorted({i for (i, _) in self.entries})

    def records(self):
        return [
            {"i": i, "j": j, "rank": r} for (i, j), r in sorted(self.entries.items())
        ]


# ---------------------------------------------------------------------------
# engine internals


def _unit_vectors(n, field):
    one = field.one()
    zero = field.zero()
    out = []
    for i in range(n):
        v = [zero] * n
        v[i] = one
        out.append(v)
    return out


def _minimal_cover(G, view, d_max):
    """Minimal generators of a graded module: degrees and coordinate vectors."""
    pres = G.presentation
    field = pres.field
    shifts = []
    vecs = []
    for j in range(view.min_degree, d_max + 1):
        dim = view.dim(j)
        if dim == 0:
            continue
        span = []
        for g in range(pres.n_gens):
            j0 = j - pres.gen_degs[g]
            if j0 < view.min_degree:
                continue
            if view.dim(j0):
                span.extend(view.act_columns(g, j0))
        new = linalg.complement_basis(span, _unit_vectors(dim, field), dim, field)
        for v in new:
            shifts.append(j)
            vecs.append((j, v))
    return shifts, vecs


def _kernel_of_cover(G, view, layer, gen_vecs, d_max):
    """Kernel of (+)_r A(-a_r) -> M per degree, by recursive evaluation."""
    field = G.presentation.field
    degs = G.presentation.gen_degs
    ev = {}
    K = {}
    if not layer.shifts:
        return K
    for j in range(layer.min_degree(), d_max + 1):
        basis = layer.basis(j)
        cols = []
        for r, w in basis:
            if not w:
                vec = gen_vecs[r][1]
            else:
                g = w[0]
                j0 = j - degs[g]
                prev = ev[j0][layer.index(j0)[(r, w[1:])]]
                vec = view.act_vec(g, j0, prev)
            cols.append(vec)
        ev[j] = cols
        tdim = view.dim(j)
        rows = [[cols[c][t] for c in range(len(cols))] for t in range(tdim)]
        K[j] = linalg.row_reduce(rows, len(cols), field).kernel
    return K


def _kernel_minimal_generators(G, layer, K, d_max):
    """Minimal generators of a kernel submodule K of the free layer."""
    pres = G.presentation
    field = pres.field
    shifts = []
    vecs = []
    for j in range(layer.min_degree(), d_max + 1):
        kj = K.get(j, [])
        if not kj:
            continue
        span = []
        for g in range(pres.n_gens):
            j0 = j - pres.gen_degs[g]
            for kappa in K.get(j0, []):
                span.append(layer.act(g, j0, kappa))
        new = linalg.complement_basis(span, kj, len(layer.basis(j)), field)
        for v in new:
            shifts.append(j)
            vecs.append((j, v))
    return shifts, vecs


def _vectors_to_map(G, layer, target_shifts, shifts, vecs):
    """Package kernel generators as a FreeModuleMap with Poly entries."""
    field = G.presentation.field
    n_target = len(target_shifts)
    columns = []
    for j, v in vecs:
        basis = layer.basis(j)
        col = [dict() for _ in range(n_target)]
        for idx, c in enumerate(v):
            if not c:
                continue
            r, u = basis[idx]
            col[r][u] = col[r].get(u, field.zero()) + c
        columns.append(
            [
                Poly.make(terms, G.presentation.gen_degs) if terms else Poly.zero()
                for terms in col
            ]
        )
    entries = tuple(
        tuple(columns[s][r] for s in range(len(vecs))) for r in range(n_target)
    )
    return FreeModuleMap(tuple(target_shifts), tuple(shifts), entries)


def _kernel_of_map(G, src_layer, tgt_layer, fmap, vecs, d_max):
    """Kernel of a free-to-free map, reusing kernel generator columns."""
    field = G.presentation.field
    degs = G.presentation.gen_degs
    ev = {}
    K = {}
    for j in range(src_layer.min_degree(), d_max + 1):
        basis = src_layer.basis(j)
        cols = []
        for s, w in basis:
            if not w:
                # the column of phi at e_s is the kernel vector itself,
                # already expressed in target-layer coordinates
                jsrc, v = vecs[s]
                vec = list(v)
            else:
                g = w[0]
                j0 = j - degs[g]
                prev = ev[j0][src_layer.index(j0)[(s, w[1:])]]
                vec = tgt_layer.act(g, j0, prev)
            cols.append(vec)
        ev[j] = cols
        tdim = tgt_layer.dim(j)
        rows = [[cols[c][t] for c in range(len(cols))] for t in range(tdim)]
        K[j] = linalg.row_reduce(rows, len(cols), field).kernel
    return K


def _algebra_top_degree(G, probe):
    """Top degree of a certified finite-dimensional algebra, else None."""
    width = G.presentation.max_gen_degree()
    limit = probe
    if not G.complete:
        limit = min(limit, G.d_gb)
    dims = [G.dim(j) for j in range(limit + 1)]
    nonzero = [j for j, d in enumerate(dims) if d]
    top = max(nonzero)
    if top + width > limit:
        return None
    if any(dims[j] for j in range(top + 1, top + width + 1)):
        return None
    return top


def _certify_termination(G, prev_shifts, shifts_all, d_max, algebra_hilbert, module_hilbert):
    max_b = max(prev_shifts)
    width = G.presentation.max_gen_degree()
    top = _algebra_top_degree(G, d_max + width)
    if top is not None and max_b + top <= d_max:
        return "socle-window"
    if algebra_hilbert is not None and module_hilbert is not None:
        balt = [0]
        for i, step in enumerate(shifts_all):
            for b in step:
                while len(balt) <= b:
                    balt.append(0)
                balt[b] += 1 if i % 2 == 0 else -1
        lhs = _pmul(_pmul(balt, list(algebra_hilbert.numerator)), list(module_hilbert.denominator))
        rhs = _pmul(list(module_hilbert.numerator), list(algebra_hilbert.denominator))
        if _ptrim(lhs) == _ptrim(rhs):
            return "euler-exact"
    if max_b <= d_max - width:
        return "window"
    return None


# ---------------------------------------------------------------------------
# public operations


def trivial_module(A):
    """The trivial module k = A/A_{>=1}: one generator, killed by every generator."""
    rows = [(A.gen_poly(g),) for g in range(A.n_gens)]
    return make_module_presentation(A, "left", (0,), rows)


def shift_module(mpres, ell):
    """M(ell): generator and relation degrees all drop by ell."""
    return ModulePresentation(
        mpres.algebra,
        mpres.side,
        tuple(d - ell for d in mpres.gen_degs),
        mpres.rows,
        tuple(d - ell for d in mpres.row_degrees),
        mpres.certified_to,
    )


def minimal_resolution(
    G, module, i_max, d_max, algebra_hilbert=None, module_hilbert=None, label=""
):
    """Minimal free resolution of a left module, truncated to (i_max, d_max)."""
    if isinstance(module, ModulePresentation):
        view = PresentedModuleView(G, module, d_max)
        side = module.side
    else:
        view = module
        side = "left"
    if module_hilbert is None:
        module_hilbert = view.hilbert_if_finite()

    shifts0, gen_vecs = _minimal_cover(G, view, d_max)
    if not shifts0:
        raise PresentationError("cannot resolve the zero module")
    layer = FreeLayer(G, tuple(shifts0))
    shifts_all = [tuple(sorted(shifts0))]
    maps = []
    K = _kernel_of_cover(G, view, layer, gen_vecs, d_max)

    terminated = False
    termination_step = None
    certificate = None
    more_steps = False
    for i in range(1, i_max + 2):
        new_shifts, new_vecs = _kernel_minimal_generators(G, layer, K, d_max)
        if not new_shifts:
            certificate = _certify_termination(
                G, shifts_all[-1], shifts_all, d_max, algebra_hilbert, module_hilbert
            )
            if certificate is not None:
                terminated = True
                termination_step = i - 1
            break
        if i == i_max + 1:
            more_steps = True
            break
        # syzygy generators have no scalar entries over a minimal cover
        for j, v in new_vecs:
            basis = layer.basis(j)
            assert all(
                basis[idx][1] for idx, c in enumerate(v) if c
            ), "minimality violated: scalar entry in a syzygy generator"
        fmap = _vectors_to_map(G, layer, shifts_all[-1], tuple(new_shifts), new_vecs)
        maps.append(fmap)
        shifts_all.append(tuple(new_shifts))
        new_layer = FreeLayer(G, tuple(new_shifts))
        K = _kernel_of_map(G, new_layer, layer, fmap, new_vecs, d_max)
        layer = new_layer

    return Resolution(
        label=label,
        side=side,
        shifts=tuple(shifts_all),
        maps=tuple(maps),
        i_max=i_max,
        d_max=d_max,
        terminated=terminated,
        termination_step=termination_step,
        certificate=certificate,
        more_steps_exist=more_steps,
    )


def betti_table(R):
    """beta_{i,j} read off the computed resolution shifts."""
    entries = {}
    for i, step in enumerate(R.shifts):
        for b in step:
            entries[(i, b)] = entries.get((i, b), 0) + 1
    return BettiTable(
        entries=entries,
        steps_computed=R.steps_computed,
        i_max=R.i_max,
        d_max=R.d_max,
        terminated=R.terminated,
        termination_step=R.termination_step,
        side=R.side,
        label=R.label,
    )


def ext_into_algebra(R, G, j_hi=None):
    """Cohomology ranks of Hom(F_*, A): Ext^i(k, A)_j on a certified window.

    Dualizing turns each A(-b) into A(b) with the right-module structure;
    the dual differential is left multiplication by the transposed entry
    matrix, evaluated degreewise by exact linear algebra.
    """
    field = G.presentation.field
    i_top = R.steps_computed if R.terminated else R.steps_computed - 1
    if i_top < 0:
        raise PresentationError("resolution too short to dualize")

    def max_shift(i):
        return max(R.shifts[i]) if R.shifts[i] else 0

    windows = {}
    for i in range(i_top + 1):
        neighbors = [max_shift(k) for k in range(max(0, i - 1), min(R.steps_computed, i + 1) + 1)]
        top = max(neighbors)
        lo = -max_shift(i)
        # the ranks at degree j touch normal words up to degree j + top
        hi = R.d_max - top if j_hi is None else j_hi
        windows[i] = (lo, hi)

    def cobasis(i, j):
        out = []
        for r, b in enumerate(R.shifts[i]):
            if j + b >= 0:
                for w in G.normal_words(j + b):
                    out.append((r, w))
        return out

    def dual_rank(i, j):
        # rank of d^i: C^i_j -> C^{i+1}_j, d^i(xi)_s = sum_r m_{rs} * xi_r
        if i >= len(R.maps):
            return 0
        fmap = R.maps[i]
        src = cobasis(i, j)
        tgt = cobasis(i + 1, j)
        if not src or not tgt:
            return 0
        tindex = {x: k for k, x in enumerate(tgt)}
        rows = []
        for r, w in src:
            out = [field.zero()] * len(tgt)
            for s in range(len(fmap.source_shifts)):
                p = fmap.entries[r][s]
                if not p:
                    continue
                q = G.normal_form(p.rmul_word(w, G.presentation.word_degree(w)))
                for u, c in q.terms.items():
                    out[tindex[(s, u)]] = out[tindex[(s, u)]] + c
            rows.append(out)
        # rank of the map = rank of the matrix in either orientation
        return linalg.row_reduce(rows, len(tgt), field).rank

    entries = {}
    rank_cache = {}
    for i in range(0, i_top + 1):
        lo, hi = windows[i]
        for j in range(lo, hi + 1):
            dim = len(cobasis(i, j))
            if not dim:
                continue
            if (i, j) not in rank_cache:
                rank_cache[(i, j)] = dual_rank(i, j)
            prev = rank_cache.get((i - 1, j))
            if prev is None:
                prev = dual_rank(i - 1, j) if i > 0 else 0
                rank_cache[(i - 1, j)] = prev
            ext = dim - rank_cache[(i, j)] - prev
            if ext:
                entries[(i, j)] = ext
    return ExtTable(
        entries=entries,
        i_top=i_top,
        windows=windows,
        complete=R.terminated,
        label=R.label,
    )


def module_via_map(G_T, images, G_A, d_max, side="left", label=""):
    """A as a graded T-module along generator images, presented up to d_max.

    Generators are a minimal homogeneous generating set found degreewise;
    relations are the minimal first syzygies of the cover.  Only the left
    side is handled here; for the right side convert both algebras and the
    images to the opposite presentation first.
    """
    if side != "left":
        raise PresentationError(
            "module_via_map computes left modules; use opposite presentations for the right side"
        )
    view = MappedAlgebraView(G_T, images, G_A, d_max)
    shifts0, gen_vecs = _minimal_cover(G_T, view, d_max)
    layer = FreeLayer(G_T, tuple(shifts0))
    K = _kernel_of_cover(G_T, view, layer, gen_vecs, d_max)
    rel_shifts, rel_vecs = _kernel_minimal_generators(G_T, layer, K, d_max)
    rows = []
    for j, v in rel_vecs:
        basis = layer.basis(j)
        entries = [dict() for _ in shifts0]
        for idx, c in enumerate(v):
            if not c:
                continue
            r, u = basis[idx]
            entries[r][u] = entries[r].get(u, G_T.presentation.field.zero()) + c
        rows.append(
            tuple(
                Poly.make(terms, G_T.presentation.gen_degs) if terms else Poly.zero()
                for terms in entries
            )
        )
    return make_module_presentation(
        G_T.presentation, "left", tuple(shifts0), rows, certified_to=d_max
    )
