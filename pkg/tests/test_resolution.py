import pytest

from bicoh.errors import DegreeMismatchError, ZeroModuleError
from bicoh.groebner import FreeModule, ModuleElement
from bicoh.poly import Bidegree, RingSpec, parse_poly
from bicoh.resolution import (
    Presentation,
    free_presentation,
    hilbert_dim,
    hilbert_table,
    is_zero_module,
    kernel_presentation,
    krull_dim,
    minimal_presentation,
    profile,
    quotient_by_polys,
    quotient_presentation,
    resolve,
    zero_presentation,
)
from bicoh.tables import Window


def test_presentation_validates_degrees(ring):
    f = parse_poly("x1*x2", ring)
    with pytest.raises(DegreeMismatchError):
        Presentation(ring, ((0, 0),), ((1, 1),), ((f,),))


def test_resolution_of_free_module(S):
    res = resolve(S)
    assert res.length == 0
    assert res.minimal


def test_resolution_of_hypersurface(hypersurface):
    res = resolve(hypersurface)
    assert res.length == 1
    assert res.modules[1].shifts == (Bidegree(1, 1),)


def test_resolution_two_relations(two_relations):
    # 0 <- M <- S <- S(-1,-1)^2 <- S(-1,-2) <- 0
    res = resolve(two_relations)
    assert res.length == 2
    assert sorted(res.modules[1].shifts) == [Bidegree(1, 1), Bidegree(1, 1)]
    assert res.modules[2].shifts == (Bidegree(1, 2),)


def test_resolution_composites_vanish(two_relations, ring):
    res = resolve(two_relations)
    for i in range(1, res.length):
        upper = res.maps[i]
        lower = res.maps[i - 1]
        rows = res.modules[i - 1].rank
        mid = res.modules[i].rank
        cols = res.modules[i + 1].rank
        for r in range(rows):
            for c in range(cols):
                acc = ring.zero()
                for k in range(mid):
                    acc = acc + lower[r][k] * upper[k][c]
                assert acc.is_zero()


def test_resolution_length_bound(ring, xy):
    x1, x2, y1, y2 = xy
    modules = [
        quotient_by_polys(ring, [x1, x2, y1, y2]),
        quotient_by_polys(ring, [x1 * y1, x2 * y2]),
        quotient_by_polys(ring, [x1 * y1, x1 * y2, x2 * y1, x2 * y2]),
    ]
    for M in modules:
        assert resolve(M).length <= ring.nvars


def test_no_unit_entries_in_minimal_resolution(ring, xy):
    x1, x2, y1, y2 = xy
    M = quotient_by_polys(ring, [x1 * y1 + x2 * y2, x1 * y2, x2 * y1])
    res = resolve(M)
    for A in res.maps:
        for row in A:
            for entry in row:
                if not entry.is_zero():
                    assert entry.bidegree() != Bidegree(0, 0)


def test_hilbert_table_of_ring(S):
    table = hilbert_table(S, Window(0, 3, 0, 3))
    for a in range(4):
        for b in range(4):
            assert table[(a, b)] == (a + 1) * (b + 1)


def test_hilbert_hypersurface_cell(hypersurface):
    assert hilbert_dim(hypersurface, (1, 1)) == 3


def test_hilbert_shifted_free(ring):
    F = free_presentation(ring, [(1, 2)])
    assert hilbert_dim(F, (1, 2)) == 1
    assert hilbert_dim(F, (0, 2)) == 0


def test_hilbert_window_independence(two_relations):
    small = hilbert_table(two_relations, Window(0, 2, 0, 2))
    large = hilbert_table(two_relations, Window(-1, 4, -1, 4))
    assert small.agrees_with(large)


def test_alternating_sums_match_hilbert(ring, xy, two_relations):
    x1, x2, y1, y2 = xy
    fixtures = [two_relations,
                quotient_by_polys(ring, [x1 * y1 + x2 * y2, x1 * x2]),
                quotient_by_polys(ring, [y1 * y2, x1 * y1])]
    for M in fixtures:
        res = resolve(M)
        for d in Window(-1, 4, -1, 4).cells():
            assert res.alternating_dim(d) == hilbert_dim(M, d)


def test_resolution_degreewise_exactness_random(ring):
    # ker(d_i) = im(d_(i+1)) at every bidegree, including ker d_last = 0;
    # this exercises the unit-elimination surgery on awkward chains
    from bicoh.fixtures import random_quotients
    from bicoh.linalg import DenseMatrix, homology_dim
    from bicoh.resolution import restrict_matrix

    for M in random_quotients(ring, 4, seed=913):
        res = resolve(M)
        for i in range(1, res.length + 1):
            src, tgt, matrix = res.map_data(i)
            for d in Window(-1, 3, -1, 3).cells():
                B = DenseMatrix(
                    restrict_matrix(ring, tgt, src, matrix, d), ring.p)
                if i < res.length:
                    up_src, up_tgt, up_matrix = res.map_data(i + 1)
                    A = DenseMatrix(
                        restrict_matrix(ring, up_tgt, up_src, up_matrix, d),
                        ring.p)
                else:
                    A = DenseMatrix.zeros(B.cols, 0, ring.p)
                assert homology_dim(A, B) == 0, (i, tuple(d))


def test_profile_of_ring(S):
    prof = profile(S)
    assert (prof.dim, prof.depth, prof.pd) == (4, 4, 0)
    assert prof.is_cm


def test_profile_hypersurface(hypersurface):
    prof = profile(hypersurface)
    assert (prof.dim, prof.depth, prof.pd) == (3, 3, 1)
    assert prof.is_cm


def test_profile_two_relations(two_relations):
    prof = profile(two_relations)
    assert (prof.dim, prof.depth, prof.pd) == (3, 2, 2)
    assert not prof.is_cm and not prof.is_gencm


def test_profile_gencm_fixture(ring, xy):
    x1, x2, y1, y2 = xy
    M = quotient_by_polys(ring, [x1 * y1, x1 * y2, x2 * y1, x2 * y2])
    prof = profile(M)
    assert (prof.dim, prof.depth) == (2, 1)
    assert prof.is_gencm and not prof.is_cm


def test_auslander_buchsbaum_everywhere(ring, xy, S, hypersurface,
                                        two_relations, q_torsion):
    for M in (S, hypersurface, two_relations, q_torsion):
        prof = profile(M)
        assert prof.pd + prof.depth == ring.nvars
        assert prof.depth <= prof.dim


def test_zero_module_rejected():
    ring = RingSpec(2, 2)
    with pytest.raises(ZeroModuleError):
        profile(zero_presentation(ring))
    one = parse_poly("1", ring)
    killed = Presentation(ring, ((0, 0),), ((0, 0),), ((one,),))
    assert is_zero_module(killed)
    with pytest.raises(ZeroModuleError):
        profile(killed)


def test_krull_dim_examples(ring, xy, S, q_torsion):
    x1, x2, y1, y2 = xy
    assert krull_dim(S) == 4
    assert krull_dim(q_torsion) == 2
    assert krull_dim(quotient_by_polys(ring, [x1, x2, y1, y2])) == 0
    assert krull_dim(zero_presentation(ring)) == -1


def test_kernel_of_injective_map_is_zero(ring):
    src = FreeModule(ring, ((1, 0),))
    tgt = FreeModule(ring, ((0, 0),))
    P = kernel_presentation(src, tgt, ((parse_poly("x1", ring),),))
    assert is_zero_module(P)


def test_kernel_of_koszul_pair(ring):
    src = FreeModule(ring, ((1, 0), (0, 1)))
    tgt = FreeModule(ring, ((0, 0),))
    matrix = ((parse_poly("x1", ring), parse_poly("y1", ring)),)
    P = kernel_presentation(src, tgt, matrix)
    assert len(P.gens) == 1
    assert P.gens[0] == Bidegree(1, 1)
    assert not P.rels


def test_quotient_presentation_dims(ring, hypersurface):
    tgt = FreeModule(ring, ((0, 0),))
    sub = [ModuleElement(tgt, (parse_poly("x1*y1", ring),))]
    full = [tgt.unit_element(0)]
    P = quotient_presentation(sub, full, tgt)
    assert hilbert_dim(P, (1, 1)) == 3
    for d in Window(0, 3, 0, 3).cells():
        assert hilbert_dim(P, d) == hilbert_dim(hypersurface, d)


def test_minimal_presentation_drops_units(ring):
    one = parse_poly("1", ring)
    x1 = parse_poly("x1", ring)
    # two generators, one of them redundant through a unit relation
    P = Presentation(ring, ((0, 0), (0, 0)), ((0, 0), (1, 0)),
                     ((one, x1), (one, ring.zero())))
    minimal = minimal_presentation(P)
    assert len(minimal.gens) == 1
    for d in Window(0, 2, 0, 2).cells():
        assert hilbert_dim(minimal, d) == hilbert_dim(P, d)
