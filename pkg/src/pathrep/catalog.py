"""Stock presentations used across the test suites and example files.

The loop category (one vertex, one loop squaring to zero) models differential
modules; the truncated line with consecutive composites zero models bounded
chain complexes; the cyclic version is its self-injective cousin where the
rotation gives a Serre structure at every vertex.
"""

from __future__ import annotations

from .pathcat import Arrow, QuiverPresentation, SerreData, build_path_category


def jordan_presentation() -> QuiverPresentation:
    """One vertex, one loop eps with eps^2 = 0."""
    serre = SerreData(
        perm={"star": "star"},
        arrow_images={"eps": [(1, ("eps",))]},
        trace={"star": {"eps": 1}},
    )
    return QuiverPresentation(
        vertices=["star"],
        arrows=[Arrow("eps", "star", "star")],
        relations=[[(1, ("eps", "eps"))]],
        bound=2,
        serre=serre,
    )


def line_presentation(n: int = 6) -> QuiverPresentation:
    """Vertices v1 -> ... -> vn with consecutive composites zero.

    The shift v_i -> v_{i+1} is a Serre structure away from the right end
    only, so no serre block is attached; interior duality data is built in
    the tests where needed.
    """
    vertices = [f"v{i}" for i in range(1, n + 1)]
    arrows = [Arrow(f"d{i}", f"v{i}", f"v{i+1}") for i in range(1, n)]
    relations = [
        [(1, (f"d{i+1}", f"d{i}"))] for i in range(1, n - 1)
    ]
    return QuiverPresentation(vertices, arrows, relations, bound=2)


def cycle_presentation(n: int = 3) -> QuiverPresentation:
    """Cyclic quiver on n >= 2 vertices with all length-2 composites zero;
    the forward rotation is a Serre permutation."""
    vertices = [f"c{i}" for i in range(1, n + 1)]
    arrows = [
        Arrow(f"a{i}", f"c{i}", f"c{i % n + 1}") for i in range(1, n + 1)
    ]
    relations = [
        [(1, (f"a{i % n + 1}", f"a{i}"))] for i in range(1, n + 1)
    ]
    perm = {f"c{i}": f"c{i % n + 1}" for i in range(1, n + 1)}
    arrow_images = {
        f"a{i}": [(1, (f"a{i % n + 1}",))] for i in range(1, n + 1)
    }
    trace = {f"c{i}": {f"a{i}": 1} for i in range(1, n + 1)}
    return QuiverPresentation(
        vertices, arrows, relations, bound=2, serre=SerreData(perm, arrow_images, trace)
    )


def single_vertex_presentation() -> QuiverPresentation:
    serre = SerreData(perm={"pt": "pt"}, arrow_images={}, trace={"pt": {"id": 1}})
    return QuiverPresentation(["pt"], [], [], bound=1, serre=serre)


def build(pres: QuiverPresentation, fieldobj):
    return build_path_category(pres, fieldobj)
