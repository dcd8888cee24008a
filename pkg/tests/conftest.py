"""Shared fixtures: a zoo of curated models and refinement utilities."""

from __future__ import annotations

import pytest

from msym import (
    ChainComplexF2,
    build_B,
    build_half_surface,
    build_sym2_circle,
    build_sym3_circle,
    build_Y,
    circle,
    disc,
    glue,
    point,
    product,
)


def subdivided_circle(k: int) -> ChainComplexF2:
    """Circle cellulated with k vertices and k edges (k >= 1)."""
    verts = [f"p{i}" for i in range(k)]
    edges = [f"q{i}" for i in range(k)]
    bnd = {}
    for i in range(k):
        a, b = f"p{i}", f"p{(i + 1) % k}"
        bnd[f"q{i}"] = [] if a == b else [a, b]
    return ChainComplexF2({0: verts, 1: edges}, bnd)


def wide_mobius() -> ChainComplexF2:
    """Möbius band as a square with a flip identification; its boundary
    circle has two vertices and two edges (label ``rim``)."""
    return ChainComplexF2(
        {0: ["u", "w"], 1: ["seam", "top", "bot"], 2: ["sq"]},
        {"seam": ["u", "w"], "top": ["u", "w"], "bot": ["u", "w"], "sq": ["top", "bot"]},
        {"rim": ["u", "w", "top", "bot"]},
    )


def with_elementary_expansions(c: ChainComplexF2) -> ChainComplexF2:
    """Double every cell by an elementary expansion.

    For each cell s a copy s+dup with the same boundary is added, together
    with a bridge cell one dimension up whose boundary is {s, s+dup}; each
    such pair collapses away, so the result is homotopy equivalent to c.
    """
    cells: dict[int, list[str]] = {d: list(c.cells_of(d)) for d in range(c.dim + 1)}
    bnd: dict[str, list[str]] = {}
    for d in range(1, c.dim + 1):
        for cid in c.cells_of(d):
            bnd[cid] = list(c.boundary_of(cid))
    for d, cid in list(c.all_cells()):
        dup = f"{cid}+dup"
        bridge = f"{cid}+bridge"
        cells.setdefault(d, []).append(dup)
        cells.setdefault(d + 1, []).append(bridge)
        if d >= 1:
            bnd[dup] = list(c.boundary_of(cid))
        bnd[bridge] = [cid, dup]
    return ChainComplexF2(cells, bnd, c.labels)


def two_torus() -> ChainComplexF2:
    return product(circle(), circle())


def three_torus() -> ChainComplexF2:
    return product(product(circle(), circle()), circle())


def sphere() -> ChainComplexF2:
    cap = disc()
    return glue(cap, "boundary", disc(), "boundary", {"v": "v", "e": "e"}, prefix="cap")


def klein_bottle() -> ChainComplexF2:
    band = build_sym2_circle()
    return glue(
        band,
        "diagonal",
        build_sym2_circle(),
        "diagonal",
        {"bd_v": "bd_v", "bd_e": "bd_e"},
        prefix="other",
    )


@pytest.fixture(scope="session")
def zoo() -> dict[str, ChainComplexF2]:
    return {
        "point": point(),
        "circle": circle(),
        "disc": disc(),
        "mobius": build_sym2_circle(),
        "solid_torus": build_sym3_circle(),
        "torus": two_torus(),
        "three_torus": three_torus(),
        "sphere": sphere(),
        "klein": klein_bottle(),
        "rp2": build_Y(0),
        "half2": build_half_surface(2).complex,
        "Y2": build_Y(2),
        "B1": build_B(1),
    }
