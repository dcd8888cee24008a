"""Tests for the curated real-locus CW models."""

from __future__ import annotations

from math import comb

import pytest

from msym import (
    RealLocusDecomposition,
    betti,
    build_B,
    build_half_surface,
    build_sym2_circle,
    build_sym3_circle,
    build_Y,
    circle,
    closed_form_sym2,
    closed_form_sym3,
    euler_char,
    is_nullhomologous,
    label_subcomplex,
    product,
    real_sym2_decomposition,
    real_sym3_decomposition,
)


# --- half surface ---------------------------------------------------------------


@pytest.mark.parametrize("g,expected", [(0, (1, 0, 0)), (1, (1, 1, 0)), (2, (1, 2, 0))])
def test_half_surface_betti(g, expected):
    surf = build_half_surface(g)
    assert betti(surf.complex) == expected
    assert euler_char(surf.complex) == 1 - g


def test_half_surface_boundary_circles():
    for g in range(5):
        surf = build_half_surface(g)
        assert len(surf.boundary_labels) == g + 1
        for lab in surf.boundary_labels:
            ring = label_subcomplex(surf.complex, lab)
            assert ring.n_cells(0) == 1 and ring.n_cells(1) == 1
            assert betti(ring) == (1, 1)


def test_half_surface_is_connected():
    for g in range(5):
        assert betti(build_half_surface(g).complex)[0] == 1


# --- circle pairs (Möbius band) ---------------------------------------------------


def test_sym2_circle_is_a_mobius_band():
    band = build_sym2_circle()
    assert betti(band) == (1, 1, 0)
    assert euler_char(band) == 0
    assert betti(label_subcomplex(band, "diagonal")) == (1, 1)


def test_sym2_circle_boundary_class_vanishes():
    band = build_sym2_circle()
    diag_edges = [c for c in band.label("diagonal") if band.dim_of(c) == 1]
    assert is_nullhomologous(band, 1, diag_edges)
    core_edges = [c for c in band.label("core") if band.dim_of(c) == 1]
    assert not is_nullhomologous(band, 1, core_edges)


# --- circle triples (solid torus) --------------------------------------------------


def test_sym3_circle_is_a_solid_torus():
    solid = build_sym3_circle()
    assert betti(solid) == (1, 1, 0, 0)
    assert euler_char(solid) == 0
    assert betti(label_subcomplex(solid, "torus")) == (1, 2, 1)


def test_sym3_circle_interface_classes():
    solid = build_sym3_circle()
    assert is_nullhomologous(solid, 1, ["mer"])  # fiber boundary dies
    assert not is_nullhomologous(solid, 1, ["lon"])  # section generates


# --- capped surface Y ---------------------------------------------------------------


@pytest.mark.parametrize("g", range(7))
def test_Y_betti(g):
    y = build_Y(g)
    b = betti(y)
    assert b == (1, g + 1, 1)
    assert sum(b) == 3 + g
    assert euler_char(y) == 1 - g


def test_Y_examples():
    assert betti(build_Y(0)) == (1, 1, 1)  # projective plane
    assert betti(build_Y(1)) == (1, 2, 1)  # Klein bottle
    assert sum(betti(build_Y(3))) == 6


def test_Y_consumes_all_gluing_interfaces():
    y = build_Y(2)
    assert not [name for name in y.labels if name.endswith("diagonal")]
    b = betti(y)
    assert b == tuple(reversed(b))


# --- the 3-manifold block B ----------------------------------------------------------


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_B_structure(g):
    b = betti(build_B(g))
    assert b == (1, g + 1, g + 1, 1)
    assert b == tuple(reversed(b))
    assert sum(b) == 2 * (g + 2)
    assert euler_char(build_B(g)) == 0


def test_B_first_homology_matches_circle_times_half_surface():
    for g in range(1, 5):
        base = product(circle(), build_half_surface(g).complex)
        assert betti(build_B(g))[1] == betti(base)[1] == g + 1


def test_B_intermediate_gluings_keep_first_homology():
    for g in range(1, 5):
        partial = betti(build_B(g, glue_sym3=False))
        assert partial[1] == g + 1


def test_B_examples():
    assert betti(build_B(1)) == (1, 2, 2, 1)
    assert sum(betti(build_B(2))) == 8
    assert betti(build_B(3)) == (1, 4, 4, 1)


def test_B_genus_zero_edge_case():
    # solid torus capped onto circle x disc: mod-2 homology of real
    # projective 3-space
    assert betti(build_B(0)) == (1, 1, 1, 1)


# --- decompositions -------------------------------------------------------------------


def test_sym2_decomposition_pieces():
    dec = real_sym2_decomposition(1)
    names = {name: mult for name, _, mult in dec.pieces}
    assert names == {"Y": 1, "torus": 1}
    assert dec.total_betti_sum() == 8

    only_y = real_sym2_decomposition(0)
    assert [name for name, _, _ in only_y.pieces] == ["Y"]
    assert only_y.total_betti_sum() == 3

    assert real_sym2_decomposition(2).total_betti_sum() == 17


def test_sym3_decomposition_pieces():
    dec = real_sym3_decomposition(1)
    names = {name: mult for name, _, mult in dec.pieces}
    assert names == {"B": 2}  # no three-torus below genus 2
    assert dec.total_betti_sum() == 12

    dec = real_sym3_decomposition(2)
    names = {name: mult for name, _, mult in dec.pieces}
    assert names == {"3-torus": 1, "B": 3}
    assert dec.total_betti_sum() == 8 + 24

    assert real_sym3_decomposition(3).total_betti_sum() == 4 * 8 + 4 * 10


def test_sym2_decomposition_matches_closed_form():
    for g in range(7):
        assert real_sym2_decomposition(g).total_betti_sum() == closed_form_sym2(g)


def test_sym3_decomposition_matches_closed_form():
    for g in range(1, 5):
        assert real_sym3_decomposition(g).total_betti_sum() == closed_form_sym3(g)


def test_decomposition_piece_formula():
    for g in range(1, 5):
        dec = real_sym3_decomposition(g)
        assert dec.total_betti_sum() == 8 * comb(g + 1, 3) + 2 * (g + 2) * (g + 1)


def test_decomposition_rejects_zero_multiplicity():
    with pytest.raises(ValueError, match="multiplicity"):
        RealLocusDecomposition(n=2, g=0, pieces=(("loop", circle(), 0),))


def test_betti_by_piece_reports_vectors():
    dec = real_sym2_decomposition(1)
    by_piece = dict((name, (mult, b)) for name, mult, b in dec.betti_by_piece())
    assert by_piece["Y"] == (1, (1, 2, 1))
    assert by_piece["torus"] == (1, (1, 2, 1))
