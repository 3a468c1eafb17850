"""Buchberger's algorithm for submodules of free modules with shifts.

Elements live in F = (+)_k S(-shift_k); the order is position-over-term
(generator 0 largest, ties broken by the polynomial order).  All input is
bihomogeneous, so every S-pair and normal form stays bihomogeneous and the
shift bookkeeping for Schreyer syzygies is automatic.

The classical coprimality (product) criterion is only valid here when both
elements are supported in their common lead position: with cross-position
tails the S-pair of coprime leads need not reduce to zero, e.g.
f = x1*e1 + y1*e2, g = y1*e1 + x1*e2 leaves the syzygy (y1^2 - x1^2)*e2.
"""

import heapq
from dataclasses import dataclass

from .errors import NotBihomogeneousError, RingMismatchError
from .poly import (
    Bidegree,
    Polynomial,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_key,
    mono_lcm,
    mono_mul,
    monomial_basis,
    piece_dim,
)


@dataclass(frozen=True)
class FreeModule:
    """F = (+)_k S(-shift_k); shifts[k] is the bidegree of generator k."""

    ring: object
    shifts: tuple

    def __post_init__(self):
        object.__setattr__(self, "shifts",
                           tuple(Bidegree(*s) for s in self.shifts))

    @property
    def rank(self):
        return len(self.shifts)

    def dim_at(self, d):
        d = Bidegree(*d)
        return sum(piece_dim(self.ring, d - s) for s in self.shifts)

    def basis_at(self, d):
        """Ordered basis of the graded piece: (generator index, monomial),
        generators ascending, monomials descending."""
        d = Bidegree(*d)
        out = []
        for k, s in enumerate(self.shifts):
            for mono in monomial_basis(self.ring, d - s):
                out.append((k, mono))
        return out

    def zero_element(self):
        z = self.ring.zero()
        return ModuleElement(self, (z,) * self.rank)

    def unit_element(self, k):
        coords = [self.ring.zero()] * self.rank
        coords[k] = self.ring.one()
        return ModuleElement(self, tuple(coords))


class ModuleElement:
    """Element of a FreeModule: one polynomial coordinate per generator."""

    __slots__ = ("module", "coords", "_hash")

    def __init__(self, module, coords):
        if len(coords) != module.rank:
            raise ValueError("coordinate count != rank")
        self.module = module
        self.coords = tuple(coords)
        self._hash = None

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def __bool__(self):
        return not self.is_zero()

    def _check(self, other):
        if self.module != other.module:
            raise RingMismatchError("elements of different free modules")

    def __add__(self, other):
        self._check(other)
        return ModuleElement(self.module,
                             tuple(a + b for a, b in
                                   zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return ModuleElement(self.module,
                             tuple(a - b for a, b in
                                   zip(self.coords, other.coords)))

    def __neg__(self):
        return ModuleElement(self.module, tuple(-a for a in self.coords))

    def scale(self, c):
        return ModuleElement(self.module,
                             tuple(a.scale(c) for a in self.coords))

    def poly_mul(self, f):
        return ModuleElement(self.module, tuple(f * a for a in self.coords))

    def term_mul(self, coeff, mono):
        return ModuleElement(self.module,
                             tuple(a.term_mul(coeff, mono)
                                   for a in self.coords))

    def lead(self):
        """Largest term (position k, monomial, coefficient) under POT."""
        best = None
        best_key = None
        for k, poly in enumerate(self.coords):
            if poly.is_zero():
                continue
            mono, coeff = poly.lead()
            key = (-k, mono_key(mono))
            if best_key is None or key > best_key:
                best_key = key
                best = (k, mono, coeff)
        if best is None:
            raise ValueError("zero element has no lead term")
        return best

    def bidegree(self):
        """Common bidegree d: coordinate k is bihomogeneous of d - shift_k."""
        deg = None
        for k, poly in enumerate(self.coords):
            if poly.is_zero():
                continue
            d = poly.bidegree() + self.module.shifts[k]
            if deg is None:
                deg = d
            elif deg != d:
                raise NotBihomogeneousError(
                    f"coordinates of bidegrees {deg} and {d}")
        return deg  # None for the zero element

    def is_bihomogeneous(self):
        try:
            self.bidegree()
            return True
        except NotBihomogeneousError:
            return False

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.module == other.module and self.coords == other.coords

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.module, self.coords))
        return self._hash

    def __str__(self):
        parts = [f"({poly})*e{k}" for k, poly in enumerate(self.coords)
                 if not poly.is_zero()]
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, interreduced, canonically sorted."""

    module: FreeModule
    elements: tuple

    def lead_terms(self):
        return [g.lead() for g in self.elements]

    def contains(self, v):
        return normal_form(v, self).is_zero()


def _element_sort_key(g):
    k, mono, _ = g.lead()
    return (-k, mono_key(mono))


def _pot_heap_key(k, mono):
    """Min-heap entry ordering that pops terms in descending POT order."""
    return (k, -sum(mono), tuple(reversed(mono)))


def _divide(v, elements):
    """Full division of v by a list of monic elements.

    Returns (quotients, remainder): v = sum q_i * elements[i] + remainder,
    no remainder term divisible by any lead term of the divisors.  Works on
    a flat {(position, monomial): coeff} dict with a lazy-deletion heap, so
    each reduction step costs O(divisor size), not a full renormalization.
    """
    module = v.module
    ring = module.ring
    p = ring.p
    leads = [g.lead() for g in elements]
    gterms = [[(k, mono, coeff) for k, poly in enumerate(g.coords)
               for mono, coeff in poly.terms] for g in elements]
    work = {}
    heap = []
    for k, poly in enumerate(v.coords):
        for mono, coeff in poly.terms:
            work[(k, mono)] = coeff
            heap.append(_pot_heap_key(k, mono) + ((k, mono),))
    heapq.heapify(heap)
    quotients = [dict() for _ in elements]
    remainder = {}
    while heap:
        entry = heapq.heappop(heap)
        key = entry[-1]
        coeff = work.get(key)
        if not coeff:
            continue
        k, mono = key
        hit = None
        for i, (gk, gmono, _) in enumerate(leads):
            if gk == k and mono_divides(gmono, mono):
                hit = i
                break
        if hit is None:
            remainder[key] = coeff
            del work[key]
            continue
        u = mono_div(mono, leads[hit][1])
        qd = quotients[hit]
        qd[u] = (qd.get(u, 0) + coeff) % p
        for gk, gmono, gc in gterms[hit]:
            tkey = (gk, mono_mul(gmono, u))
            new = (work.get(tkey, 0) - coeff * gc) % p
            if new:
                if tkey not in work:
                    heapq.heappush(heap, _pot_heap_key(*tkey) + (tkey,))
                work[tkey] = new
            else:
                work.pop(tkey, None)
    quot_polys = [Polynomial.from_dict(ring, qd) for qd in quotients]
    rem_coords = [dict() for _ in range(module.rank)]
    for (k, mono), coeff in remainder.items():
        rem_coords[k][mono] = coeff
    rem = ModuleElement(module, tuple(Polynomial.from_dict(ring, d)
                                      for d in rem_coords))
    return quot_polys, rem


def normal_form(v: ModuleElement, G) -> ModuleElement:
    """Remainder of v on division by G; no term divisible by a lead of G."""
    elements = G.elements if isinstance(G, GroebnerBasis) else tuple(G)
    if not elements:
        return v
    if elements[0].module != v.module:
        raise RingMismatchError("element and basis in different modules")
    return _divide(v, elements)[1]


def _make_monic(g):
    _, _, coeff = g.lead()
    inv = pow(coeff, -1, g.module.ring.p)
    return g.scale(inv)


def _spair_data(f, g):
    """For lead terms in the same position: the monomial multipliers
    (uf, ug) with uf*lt(f) = ug*lt(g) = lcm."""
    fk, fm, _ = f.lead()
    gk, gm, _ = g.lead()
    if fk != gk:
        return None
    w = mono_lcm(fm, gm)
    return mono_div(w, fm), mono_div(w, gm)


def _single_position(g):
    return sum(1 for c in g.coords if not c.is_zero()) == 1


def _pair_entry(basis, i, j):
    """Heap entry for the normal selection strategy: S-pairs in ascending
    lcm degree.  None when the lead positions differ (no S-pair)."""
    fk, fm, _ = basis[i].lead()
    gk, gm, _ = basis[j].lead()
    if fk != gk:
        return None
    return (sum(mono_lcm(fm, gm)), i, j)


def buchberger(gens, module=None) -> GroebnerBasis:
    """Groebner basis of the submodule generated by bihomogeneous gens."""
    gens = [g for g in gens if g]
    if module is None:
        if not gens:
            raise ValueError("no generators and no ambient module given")
        module = gens[0].module
    for g in gens:
        g.bidegree()  # raises NotBihomogeneousError if mixed
    basis = [_make_monic(g) for g in gens]
    pairs = []
    for i in range(len(basis)):
        for j in range(i):
            entry = _pair_entry(basis, i, j)
            if entry is not None:
                pairs.append(entry)
    heapq.heapify(pairs)
    while pairs:
        _, i, j = heapq.heappop(pairs)
        f, g = basis[i], basis[j]
        uf, ug = _spair_data(f, g)
        _, fm, _ = f.lead()
        _, gm, _ = g.lead()
        if mono_coprime(fm, gm) and _single_position(f) and _single_position(g):
            continue  # product criterion, valid for single-position elements
        spair = f.term_mul(1, uf) - g.term_mul(1, ug)
        nf = normal_form(spair, basis)
        if nf:
            nf = _make_monic(nf)
            basis.append(nf)
            new = len(basis) - 1
            for t in range(new):
                entry = _pair_entry(basis, new, t)
                if entry is not None:
                    heapq.heappush(pairs, entry)
    return _reduce_basis(module, basis)


def _reduce_basis(module, basis):
    """Interreduce to the unique reduced (monic) Groebner basis."""
    # drop elements whose lead term is divisible by another's
    kept = []
    leads = [g.lead() for g in basis]
    for i, g in enumerate(basis):
        k, m, _ = leads[i]
        redundant = False
        for j, (k2, m2, _) in enumerate(leads):
            if i == j or not mono_divides(m2, m) or k2 != k:
                continue
            if m2 == m and k2 == k and j > i:
                continue  # identical leads: keep the earlier one
            redundant = True
            break
        if not redundant:
            kept.append(g)
    # tail-reduce each against the others until stable
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1:]
            if not others:
                continue
            r = normal_form(kept[i], others)
            if r.is_zero():
                kept.pop(i)
                changed = True
                break
            r = _make_monic(r)
            if r != kept[i]:
                kept[i] = r
                changed = True
    kept.sort(key=_element_sort_key, reverse=True)
    return GroebnerBasis(module, tuple(kept))


def syzygies(G: GroebnerBasis):
    """Schreyer generators of the syzygy module of G.

    Returns elements of a fresh free module with one generator per basis
    element, shifted by its bidegree, so every syzygy is bihomogeneous.
    """
    elems = G.elements
    if not elems:
        return []
    ring = G.module.ring
    shifts = []
    for g in elems:
        d = g.bidegree()
        if d is None:
            raise ValueError("zero element in Groebner basis")
        shifts.append(d)
    syz_module = FreeModule(ring, tuple(shifts))
    out = []
    for i in range(len(elems)):
        for j in range(i):
            data = _spair_data(elems[i], elems[j])
            if data is None:
                continue
            ui, uj = data
            spair = elems[i].term_mul(1, ui) - elems[j].term_mul(1, uj)
            quotients, rem = _divide(spair, list(elems))
            if not rem.is_zero():
                raise ValueError("S-pair of a Groebner basis did not reduce")
            coords = [-q for q in quotients]
            coords[i] = coords[i] + Polynomial(ring, ((ui, 1),))
            coords[j] = coords[j] - Polynomial(ring, ((uj, 1),))
            s = ModuleElement(syz_module, tuple(coords))
            if s:
                out.append(s)
    return out


# ---------------------------------------------------------------------------
# kernels and membership via the graph construction
#
# For a map phi: F_src -> F_tgt with columns c_l, run Buchberger on the
# elements (c_l, e_l) of F_tgt (+) F_src.  Positions of F_tgt dominate, so
# the basis elements with vanishing F_tgt block generate ker phi, and normal
# forms of (v, 0) express membership of v in the column span.


class SpanSolver:
    """Kernel and membership queries against a fixed list of columns,
    sharing one Groebner basis of the graph module."""

    def __init__(self, columns, src: FreeModule):
        self.columns = list(columns)
        self.src = src
        self.ring = src.ring
        self.tgt = self.columns[0].module if self.columns else None
        self._gb = None

    def _basis(self):
        if self._gb is None:
            rt = self.tgt.rank
            big = FreeModule(self.ring, self.tgt.shifts + self.src.shifts)
            graph = []
            for l, col in enumerate(self.columns):
                coords = list(col.coords) + [self.ring.zero()] * self.src.rank
                coords[rt + l] = self.ring.one()
                graph.append(ModuleElement(big, tuple(coords)))
            self._gb = buchberger(graph, module=big)
        return self._gb

    def kernel(self):
        """Generators of ker(phi) in F_src."""
        if not self.columns:
            return []
        if all(c.is_zero() for c in self.columns):
            return [self.src.unit_element(l) for l in range(self.src.rank)]
        rt = self.tgt.rank
        kernel = []
        for g in self._basis().elements:
            if all(c.is_zero() for c in g.coords[:rt]):
                kernel.append(ModuleElement(self.src, g.coords[rt:]))
        kernel.sort(key=_element_sort_key, reverse=True)
        return kernel

    def express(self, v: ModuleElement):
        """Coefficients q with v = sum q_l * columns[l]; None if v is
        outside the span."""
        if v.is_zero():
            return [self.ring.zero()] * len(self.columns)
        if not self.columns:
            return None
        gb = self._basis()
        rt = self.tgt.rank
        lifted = ModuleElement(
            gb.module, tuple(v.coords) + (self.ring.zero(),) * self.src.rank)
        rem = normal_form(lifted, gb)
        if any(not c.is_zero() for c in rem.coords[:rt]):
            return None
        return [-c for c in rem.coords[rt:]]


def graph_kernel(columns, src: FreeModule):
    return SpanSolver(columns, src).kernel()


def express_in_span(v: ModuleElement, columns, src: FreeModule):
    return SpanSolver(columns, src).express(v)
