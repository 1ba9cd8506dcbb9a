"""Exact asymptotics of powers of non-negative integer matrices.

The central object is the block decomposition: for any non-negative
square matrix M there is a least power p (the cyclicity) such that M^p
is permutation-similar to a block triangular matrix whose diagonal
blocks are primitive or the 1x1 zero block.  Entry (i, j) of M^{pn+r}
is then either ultimately zero or grows like Theta(n^d lambda^n) with
lambda the Perron root of some diagonal block of M^p: the largest block
radius seen along an admissible block path, with d + 1 the largest
number of blocks of that radius a single path can visit.

Growth rates are kept as exact algebraic numbers: a defining block, its
integer characteristic polynomial, and a refinable rational enclosure.
Comparisons are decided exactly (enclosure refinement, with a
gcd-plus-Sturm certificate for equality), never by tolerance.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import words
from .errors import DomainMismatchError, NotPrimitiveError
from .graphs import component_period, is_trivial_component, strongly_connected_components
from .intmat import IncidenceMatrix, charpoly, identity, mat_pow, submatrix
from .polytools import (
    LargestRootLocator,
    count_roots_closed,
    count_roots_halfopen,
    nth_root_bounds,
    poly_gcd,
    rational_nth_root_exact,
    rational_roots_of_monic_int,
    squarefree,
    sturm_chain,
    trim,
)

DEFAULT_WIDTH = Fraction(1, 10**9)


def _adjacency(rows):
    n = len(rows)
    return [[j for j in range(n) if rows[i][j] > 0] for i in range(n)]


def cyclicity(matrix):
    """Least p such that M^p is permutation-similar to block triangular form
    with primitive or zero diagonal blocks.

    Equals the lcm over non-trivial strongly connected components of the
    gcd of their cycle lengths; 1 when the digraph has no cycles at all.
    """
    rows = matrix.rows if isinstance(matrix, IncidenceMatrix) else matrix
    adj = _adjacency(rows)
    p = 1
    for comp in strongly_connected_components(len(rows), adj):
        if not is_trivial_component(comp, adj):
            p = lcm(p, component_period(comp, adj))
    return p


def scc_periods(rows):
    """Periods of the non-trivial strongly connected components of G(rows)."""
    if isinstance(rows, IncidenceMatrix):
        rows = rows.rows
    adj = _adjacency(rows)
    return [
        component_period(comp, adj)
        for comp in strongly_connected_components(len(rows), adj)
        if not is_trivial_component(comp, adj)
    ]


def _locator_for_block(block, poly):
    hi = Fraction(max(sum(row) for row in block))
    if hi <= 0:
        hi = Fraction(1)
    return LargestRootLocator(poly, Fraction(-1), hi)


class AlgebraicRadius:
    """Exact handle on a value r^(1/step), r the dominant real root of `poly`.

    `block` is the non-negative matrix whose characteristic polynomial
    defines r (its Perron root); `step` records that the matrix arose as a
    step-th power, so the per-step rate is the step-th root.  The zero
    radius (for ultimately vanishing quantities) is represented with
    block None.  Enclosure refinement is memoised behind a per-instance
    lock so concurrent readers can share one object; no two locks are
    ever held at once.
    """

    __slots__ = ("block", "poly", "step", "_locator", "_powers", "_lock")

    def __init__(self, block, step=1):
        if step < 1:
            raise DomainMismatchError("step must be positive")
        if block is not None:
            block = tuple(tuple(x for x in row) for row in block)
            poly = tuple(charpoly(block))
        else:
            poly = (0, 1)
        object.__setattr__(self, "block", block)
        object.__setattr__(self, "step", step)
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "_locator", None)
        object.__setattr__(self, "_powers", {})
        object.__setattr__(self, "_lock", threading.Lock())

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraicRadius is immutable")

    @classmethod
    def zero(cls):
        return cls(None)

    @classmethod
    def from_block(cls, block, step=1):
        return cls(block, step)

    @classmethod
    def from_rational(cls, value, step=1):
        value = Fraction(value)
        if value < 0:
            raise DomainMismatchError("radii are non-negative")
        if value == 0:
            return cls.zero()
        return cls(((value,),), step)

    @property
    def is_zero(self):
        return self.block is None

    # -- refinement (all locator mutation happens under self._lock) -----------

    def _own_locator(self):
        with self._lock:
            if self._locator is None:
                object.__setattr__(self, "_locator", _locator_for_block(self.block, self.poly))
            return self._locator

    def _powered(self, e):
        """(poly, locator) for the dominant root of block^e."""
        if e == 1:
            return list(self.poly), self._own_locator()
        with self._lock:
            cached = self._powers.get(e)
            if cached is None:
                block = mat_pow(self.block, e)
                poly = charpoly(block)
                cached = (poly, _locator_for_block(block, poly))
                self._powers[e] = cached
            return cached

    def _refine(self, locator, width):
        with self._lock:
            return locator.refine(width)

    def _isolated(self, locator):
        with self._lock:
            return locator.isolated()

    def root_enclosure(self, width=DEFAULT_WIDTH):
        """Rational interval around the defining root r (not the step-th root)."""
        if self.is_zero:
            return Fraction(0), Fraction(0)
        return self._refine(self._own_locator(), width)

    def value_enclosure(self, width=DEFAULT_WIDTH):
        """Rational interval of width <= `width` around r^(1/step).

        When the value is provably >= 1 (every non-zero block radius of a
        decomposition is) the lower bound is clamped to 1.
        """
        if self.is_zero:
            return Fraction(0), Fraction(0)
        width = Fraction(width)
        if self.step == 1:
            vlo, vhi = self.root_enclosure(width)
        else:
            inner = width
            while True:
                lo, hi = self.root_enclosure(inner)
                vlo = nth_root_bounds(max(lo, Fraction(0)), self.step, width / 4)[0]
                vhi = nth_root_bounds(max(hi, Fraction(0)), self.step, width / 4)[1]
                if vhi - vlo <= width:
                    break
                inner /= 16
        if vlo < 1 <= vhi and self.compare(1) >= 0:
            vlo = Fraction(1)
        return vlo, vhi

    def value_float(self):
        lo, hi = self.value_enclosure(Fraction(1, 10**12))
        mid = (lo + hi) / 2
        return mid.numerator / mid.denominator

    def _rational_root(self):
        """The defining root r as a Fraction when it is rational, else None."""
        if self.is_zero:
            return Fraction(0)
        poly = trim(list(self.poly))
        if len(poly) == 2:
            return Fraction(poly[0], poly[1]) * -1
        if not all(isinstance(c, int) for c in poly) or poly[-1] != 1:
            return None
        candidates = rational_roots_of_monic_int(poly)
        if not candidates:
            return None
        best = max(candidates)
        # the dominant root is `best` exactly when no real root lies above it
        chain = sturm_chain(poly)
        hi = Fraction(max(sum(row) for row in self.block)) + 1
        if count_roots_halfopen(chain, Fraction(best), hi) == 0:
            return Fraction(best)
        return None

    def exact_rational_value(self):
        """r^(1/step) as a Fraction when that value is rational, else None."""
        if self.is_zero:
            return Fraction(0)
        root = self._rational_root()
        if root is None:
            return None
        return rational_nth_root_exact(root, self.step)

    # -- exact comparison ------------------------------------------------------

    def compare(self, other):
        """Exact trichotomy: -1, 0 or 1 as self <, =, > other.

        Rescales both sides to a common exponent with integer block
        powers, then refines enclosures until they separate; equality is
        certified by locating a common root (a root of the polynomial gcd)
        inside the overlap once each enclosure isolates its own root.
        """
        if not isinstance(other, AlgebraicRadius):
            other = AlgebraicRadius.from_rational(other)
        if self.is_zero and other.is_zero:
            return 0
        if self.is_zero:
            return -1
        if other.is_zero:
            return 1
        common = lcm(self.step, other.step)
        pa, la = self._powered(common // self.step)
        pb, lb = other._powered(common // other.step)
        g = poly_gcd(squarefree(pa), squarefree(pb))
        g_chain = sturm_chain(g) if len(trim(g)) > 1 else None
        width = Fraction(1, 16)
        while True:
            alo, ahi = self._refine(la, width)
            blo, bhi = other._refine(lb, width)
            if ahi <= blo:
                return -1
            if bhi <= alo:
                return 1
            if g_chain is not None and self._isolated(la) and other._isolated(lb):
                ilo = max(alo, blo)
                ihi = min(ahi, bhi)
                if count_roots_closed(g, g_chain, ilo, ihi) >= 1:
                    return 0
            width /= 16

    def is_root_of(self, poly):
        """Exactly decide whether the defining root r is a root of `poly`."""
        poly = trim(list(poly))
        if self.is_zero:
            return bool(poly) and Fraction(poly[0]) == 0
        g = poly_gcd(squarefree(list(self.poly)), squarefree(poly))
        if len(trim(g)) <= 1:
            return False
        g_chain = sturm_chain(g)
        loc = self._own_locator()
        width = Fraction(1, 16)
        while True:
            lo, hi = self._refine(loc, width)
            if self._isolated(loc):
                return count_roots_closed(g, g_chain, lo, hi) >= 1
            width /= 16

    def __eq__(self, other):
        if not isinstance(other, (AlgebraicRadius, int, Fraction)):
            return NotImplemented
        return self.compare(other) == 0

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    __hash__ = None

    def describe(self):
        """Exact rendering when possible, decimal approximation otherwise."""
        if self.is_zero:
            return "0"
        exact = self.exact_rational_value()
        if exact is not None:
            return str(exact)
        root = self._rational_root()
        if root is not None:
            return f"{root}^(1/{self.step})"
        return f"~{self.value_float():.12g}"

    def __repr__(self):
        return f"AlgebraicRadius({self.describe()})"


@dataclass(frozen=True)
class GrowthType:
    """Exact asymptotic class Theta(n^degree * rate^n)."""

    rate: AlgebraicRadius
    degree: int

    @property
    def is_vanishing(self):
        return self.rate.is_zero

    @property
    def is_unbounded(self):
        if self.rate.is_zero:
            return False
        return self.degree >= 1 or self.rate.compare(1) > 0

    def rate_float(self):
        return self.rate.value_float()

    def __eq__(self, other):
        if not isinstance(other, GrowthType):
            return NotImplemented
        return self.degree == other.degree and self.rate.compare(other.rate) == 0

    __hash__ = None

    def __repr__(self):
        return f"GrowthType(rate={self.rate.describe()}, degree={self.degree})"


PRIMITIVE = "primitive"
ZERO = "zero"


class _RadiusKey:
    __slots__ = ("radius",)

    def __init__(self, radius):
        self.radius = radius

    def __lt__(self, other):
        return self.radius.compare(other.radius) < 0


class BlockDecomposition:
    """Structure of M^p for p = cyclicity(M): blocks, radii, reachability.

    Blocks are the strongly connected components of the digraph of M^p in
    topological order (edges run from earlier blocks to later ones), so
    reordering vertices block by block puts M^p in upper block triangular
    form.  Each block is primitive or the 1x1 zero block.
    """

    def __init__(self, matrix):
        if not isinstance(matrix, IncidenceMatrix):
            matrix = IncidenceMatrix(matrix)
        self.matrix = matrix
        self.p = cyclicity(matrix)
        self.power_rows = mat_pow(matrix.rows, self.p)
        n = matrix.size
        adj = _adjacency(self.power_rows)
        self.blocks = tuple(strongly_connected_components(n, adj))
        kinds = []
        for comp in self.blocks:
            if is_trivial_component(comp, adj):
                kinds.append(ZERO)
            else:
                # the defining property of p: cyclic components of M^p are primitive
                assert component_period(comp, adj) == 1
                kinds.append(PRIMITIVE)
        self.kinds = tuple(kinds)
        block_of = [None] * n
        for b, comp in enumerate(self.blocks):
            for v in comp:
                block_of[v] = b
        self.block_of = tuple(block_of)
        self.block_matrices = tuple(submatrix(self.power_rows, comp) for comp in self.blocks)
        self.radii = tuple(
            AlgebraicRadius.from_block(bm, self.p) if kind == PRIMITIVE else AlgebraicRadius.zero()
            for bm, kind in zip(self.block_matrices, self.kinds)
        )
        self._assign_radius_classes()
        self._build_reachability(adj)
        self._power_cache = {0: identity(n), 1: matrix.rows}
        self._lock = threading.Lock()

    orientation = "upper"

    def _assign_radius_classes(self):
        """Group blocks by exactly equal radius; class ids ascend with the radius."""
        reps = []
        for b, radius in enumerate(self.radii):
            for rep in reps:
                if rep[0].compare(radius) == 0:
                    rep[1].append(b)
                    break
            else:
                reps.append((radius, [b]))
        reps.sort(key=lambda rep: _RadiusKey(rep[0]))
        class_of = [None] * len(self.radii)
        for cid, (_, members) in enumerate(reps):
            for b in members:
                class_of[b] = cid
        self.class_of_block = tuple(class_of)
        self.class_radii = tuple(r for r, _ in reps)

    def _build_reachability(self, adj):
        nb = len(self.blocks)
        out_edges = [set() for _ in range(nb)]
        for u in range(len(adj)):
            bu = self.block_of[u]
            for v in adj[u]:
                bv = self.block_of[v]
                if bu != bv:
                    out_edges[bu].add(bv)
        self.cond_out = tuple(tuple(sorted(s)) for s in out_edges)
        in_edges = [set() for _ in range(nb)]
        for u in range(nb):
            for v in self.cond_out[u]:
                in_edges[v].add(u)
        self.cond_in = tuple(tuple(sorted(s)) for s in in_edges)
        reach = [[False] * nb for _ in range(nb)]
        for b in range(nb - 1, -1, -1):
            reach[b][b] = True
            for c in self.cond_out[b]:
                row_c = reach[c]
                row_b = reach[b]
                for t in range(nb):
                    if row_c[t]:
                        row_b[t] = True
        self.block_reach = tuple(tuple(row) for row in reach)
        prim = [k == PRIMITIVE for k in self.kinds]
        through = [
            [
                self.block_reach[s][t]
                and any(prim[m] and self.block_reach[s][m] and self.block_reach[m][t] for m in range(nb))
                for t in range(nb)
            ]
            for s in range(nb)
        ]
        self.through_primitive = tuple(tuple(row) for row in through)

    # -- views ------------------------------------------------------------------

    @property
    def size(self):
        return self.matrix.size

    def vertex_order(self):
        return tuple(v for comp in self.blocks for v in comp)

    def permuted_power_matrix(self):
        order = self.vertex_order()
        return tuple(tuple(self.power_rows[i][j] for j in order) for i in order)

    def block_letters(self, b):
        return tuple(self.matrix.labels[v] for v in self.blocks[b])

    def spectral_radius(self):
        return self.class_radii[-1] if self.class_radii else AlgebraicRadius.zero()

    def matrix_power(self, e):
        with self._lock:
            cached = self._power_cache.get(e)
            if cached is None:
                cached = mat_pow(self.matrix.rows, e)
                self._power_cache[e] = cached
            return cached

    def _resolve(self, index):
        if isinstance(index, str):
            return self.matrix.index_of(index)
        if not 0 <= index < self.size:
            raise DomainMismatchError(f"index {index} out of range")
        return index

    # -- growth ------------------------------------------------------------------

    def _best_class_between(self, s, t):
        reach = self.block_reach
        best = -1
        for m in range(len(self.blocks)):
            if reach[s][m] and reach[m][t]:
                cid = self.class_of_block[m]
                if cid > best:
                    best = cid
        return best

    def _max_count_source_to_target(self, s, t, cid):
        """Max number of class-cid blocks on one block path from s to t."""
        reach = self.block_reach
        members = [m for m in range(len(self.blocks)) if reach[s][m] and reach[m][t]]
        member_set = set(members)
        dp = {}
        for m in members:  # block indices ascend topologically
            base = 1 if self.class_of_block[m] == cid else 0
            if m == s:
                dp[m] = base
            else:
                dp[m] = base + max((dp[u] for u in self.cond_in[m] if u in member_set), default=0)
        return dp[t]

    def _entry_lambda_d(self, i, k):
        """(class id, degree) for (M^{pn})_{i,k}, or None when ultimately zero."""
        s = self.block_of[i]
        t = self.block_of[k]
        if not self.through_primitive[s][t]:
            return None
        cid = self._best_class_between(s, t)
        if self.class_radii[cid].is_zero:
            return None
        return cid, self._max_count_source_to_target(s, t, cid) - 1

    def entry_growth(self, i, j, r=0):
        """Growth type of (M^{pn+r})_{i,j} as n grows.

        The rate is reported per single application of M: the defining
        block lives in M^p and carries the 1/p root marker.
        """
        i = self._resolve(i)
        j = self._resolve(j)
        if not 0 <= r < self.p:
            raise DomainMismatchError(f"residue must lie in [0, {self.p})")
        mr = self.matrix_power(r)
        candidates = []
        for k in range(self.size):
            if mr[k][j] > 0:
                ld = self._entry_lambda_d(i, k)
                if ld is not None:
                    candidates.append(ld)
        result = self._combine(candidates)
        self._check_vanishing(i, j, r, result.is_vanishing)
        return result

    def column_growth(self, j):
        """Growth of the j-th column sum of M^n, valid for every n.

        The maximising residue-free form: the rate is the largest radius
        among blocks that reach block(j), and d + 1 the longest chain of
        such maximal blocks on one path into block(j).
        """
        j = self._resolve(j)
        t = self.block_of[j]
        members = [b for b in range(len(self.blocks)) if self.block_reach[b][t]]
        best = max(self.class_of_block[b] for b in members)
        if self.class_radii[best].is_zero:
            return GrowthType(AlgebraicRadius.zero(), 0)
        member_set = set(members)
        dp = {}
        for b in reversed(members):  # successors first
            base = 1 if self.class_of_block[b] == best else 0
            if b == t:
                dp[b] = base
            else:
                dp[b] = base + max((dp[u] for u in self.cond_out[b] if u in member_set), default=0)
        return GrowthType(self.class_radii[best], max(dp.values()) - 1)

    def row_growth(self, i):
        """Growth of the i-th row sum of M^n, valid for every n."""
        i = self._resolve(i)
        s = self.block_of[i]
        members = [b for b in range(len(self.blocks)) if self.block_reach[s][b]]
        best = max(self.class_of_block[b] for b in members)
        if self.class_radii[best].is_zero:
            return GrowthType(AlgebraicRadius.zero(), 0)
        member_set = set(members)
        dp = {}
        for b in members:  # predecessors first
            base = 1 if self.class_of_block[b] == best else 0
            if b == s:
                dp[b] = base
            else:
                dp[b] = base + max((dp[u] for u in self.cond_in[b] if u in member_set), default=0)
        return GrowthType(self.class_radii[best], max(dp.values()) - 1)

    def _combine(self, candidates):
        if not candidates:
            return GrowthType(AlgebraicRadius.zero(), 0)
        best = max(c for c, _ in candidates)
        degree = max(d for c, d in candidates if c == best)
        return GrowthType(self.class_radii[best], degree)

    def _check_vanishing(self, i, j, r, vanishing):
        """Cross-check the combinatorial verdict against exact small powers.

        An ultimately-zero entry must be zero at every exponent pn + r
        with pn + r >= m + 1 (checked up to n = m + 1); a non-vanishing
        entry must show a positive value at some pn + r with n <= m + 1.
        """
        m = self.size
        lower = max(0, -(-(m + 1 - r) // self.p))
        window = [self.matrix_power(self.p * n + r)[i][j] for n in range(m + 2)]
        if vanishing:
            assert all(window[n] == 0 for n in range(lower, m + 2)), "vanishing entry has a late positive value"
        else:
            assert any(window), "growing entry lacks a short positive witness"

    def blocks_as_json(self, width=DEFAULT_WIDTH):
        out = []
        for b in range(len(self.blocks)):
            radius = self.radii[b]
            lo, hi = radius.root_enclosure(width)
            out.append(
                {
                    "letters": list(self.block_letters(b)),
                    "kind": self.kinds[b],
                    "radius": {
                        "poly": [c if isinstance(c, int) else str(c) for c in radius.poly],
                        "enclosure": [str(lo), str(hi)],
                    },
                }
            )
        return out


_DECOMP_CACHE = {}
_DECOMP_LOCK = threading.Lock()


def decompose(matrix):
    """Block decomposition of a matrix, memoised per (labels, entries)."""
    if not isinstance(matrix, IncidenceMatrix):
        matrix = IncidenceMatrix(matrix)
    key = (matrix.labels, matrix.rows)
    with _DECOMP_LOCK:
        cached = _DECOMP_CACHE.get(key)
    if cached is None:
        built = BlockDecomposition(matrix)
        with _DECOMP_LOCK:
            cached = _DECOMP_CACHE.setdefault(key, built)
    return cached


def block_decompose(matrix):
    """Alias of decompose(), matching the operation vocabulary."""
    return decompose(matrix)


def is_primitive(rows):
    """Strongly connected with cycle-length gcd 1 (so some power is positive)."""
    if isinstance(rows, IncidenceMatrix):
        rows = rows.rows
    n = len(rows)
    if n == 0:
        return False
    adj = _adjacency(rows)
    comps = strongly_connected_components(n, adj)
    if len(comps) != 1 or is_trivial_component(comps[0], adj):
        return False
    return component_period(comps[0], adj) == 1


def perron_enclosure(block, width=Fraction(1, 10**6), max_power_iterations=200):
    """Certified rational interval around the Perron root of a primitive block.

    Iterates the Collatz-Wielandt bounds min_i (Px)_i/x_i <= rho(P) <=
    max_i (Px)_i/x_i with x replaced by Px (rescaled) in exact rational
    arithmetic.  If the iteration converges slowly the remaining gap is
    closed by Sturm bisection of the characteristic polynomial inside the
    current bracket.  A 1x1 block gives an exact point interval.
    """
    rows = block.rows if isinstance(block, IncidenceMatrix) else tuple(tuple(r) for r in block)
    width = Fraction(width)
    n = len(rows)
    if n == 1:
        v = Fraction(rows[0][0])
        return v, v
    if not is_primitive(rows):
        raise NotPrimitiveError("Collatz-Wielandt bounds need a primitive matrix")
    x = [Fraction(1)] * n
    lo = Fraction(0)
    hi = Fraction(max(sum(row) for row in rows))
    for _ in range(max_power_iterations):
        y = [sum(Fraction(rows[i][j]) * x[j] for j in range(n) if rows[i][j]) for i in range(n)]
        ratios = [y[i] / x[i] for i in range(n)]
        lo = max(lo, min(ratios))
        hi = min(hi, max(ratios))
        if hi - lo <= width:
            return lo, hi
        top = max(y)
        x = [v / top for v in y]
    locator = LargestRootLocator(charpoly(rows), lo - 1, hi)
    blo, bhi = locator.refine(width)
    return max(blo, lo), min(bhi, hi)


def spectral_radius_enclosure(rows, width=DEFAULT_WIDTH):
    """Enclosure of rho(M) for any non-negative integer matrix.

    For non-negative M the spectral radius is itself an eigenvalue, hence
    the largest real root of the characteristic polynomial; no block
    structure is needed.
    """
    if isinstance(rows, IncidenceMatrix):
        rows = rows.rows
    width = Fraction(width)
    poly = charpoly(rows)
    hi = Fraction(max((sum(row) for row in rows), default=0))
    locator = LargestRootLocator(poly, Fraction(-1), max(hi, Fraction(1)))
    lo, hi = locator.refine(width)
    return max(lo, Fraction(0)), hi


def radius_compare(a, b):
    """Exact trichotomy between two radii: -1, 0 or 1."""
    if not isinstance(a, AlgebraicRadius):
        a = AlgebraicRadius.from_rational(a)
    return a.compare(b)


def entry_growth(matrix, i, j, r=0):
    return decompose(matrix).entry_growth(i, j, r)


def column_growth(matrix, j):
    return decompose(matrix).column_growth(j)


def row_growth(matrix, i):
    return decompose(matrix).row_growth(i)


def letter_growth(f, letter):
    """Growth type of |f^n(letter)|, i.e. the column growth at that letter."""
    matrix = words.incidence_matrix(f)
    return decompose(matrix).column_growth(matrix.index_of(letter))


def perron_eigenvalue(f):
    """rho(Mat_f) as an exact radius: the largest diagonal-block radius."""
    matrix = words.incidence_matrix(f)
    return decompose(matrix).spectral_radius()


def analyze_morphism(f, width=DEFAULT_WIDTH):
    """JSON-ready spectral report for an endomorphism."""
    matrix = words.incidence_matrix(f)
    dec = decompose(matrix)
    growth = {}
    for letter in f.domain:
        g = dec.column_growth(matrix.index_of(letter))
        growth[letter] = {"lambda_per_step": g.rate.describe(), "d": g.degree}
    return {
        "p": dec.p,
        "blocks": dec.blocks_as_json(width),
        "letter_growth": growth,
    }
