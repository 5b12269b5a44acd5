"""Merging the last vertex into its predecessor, and the inverse section.

`psi` removes all bonds joining the last two vertices and reattaches the
remaining bonds of the last vertex to its predecessor.  Restricted to
non-crossing diagrams it is a bijection onto the union, over all
even-triangle-compatible merged degrees, of the non-crossing diagrams one
vertex down; `psi_section` constructs the unique non-crossing preimage.
This pair of maps is exactly what drives the counting recurrence.
"""
from __future__ import annotations

from dataclasses import dataclass

from .counting import binomial, even_triangle, triangle_range
from .diagrams import (
    Edge,
    RumerDiagram,
    ValenceScheme,
    enumerate_rumer_by_multidegree,
    enumerate_valence_schemes_by_multidegree,
    is_rumer,
)


@dataclass(frozen=True)
class PsiResult:
    """Outcome of merging: the smaller scheme, the merged vertex's new degree,
    and the number of removed joining bonds.

    Bookkeeping invariant: mu_n = m_n + m_{n+1} - 2 * m_join, and
    (m_n, m_{n+1}, mu_n) always form an even triangle.
    """

    scheme: ValenceScheme
    mu_n: int
    m_join: int


def psi(scheme: ValenceScheme) -> PsiResult:
    """Merge the last vertex into its predecessor.

    All bonds between the last two vertices are dropped; every other bond at
    the last vertex keeps its far endpoint and is reattached to the
    predecessor.  Non-crossing schemes map to non-crossing schemes because
    the two merged vertices are circle neighbours.
    """
    top = scheme.n
    if top < 2:
        raise ValueError("merging needs at least two vertices")
    target = top - 1
    join = Edge(target, top)
    m_n = scheme.degree(target)
    m_n1 = scheme.degree(top)
    m_join = 0
    new_edges = []
    for e in scheme.edges:
        if e == join:
            m_join += 1
        elif e.j == top:
            new_edges.append(Edge(e.i, target))
        else:
            new_edges.append(e)
    merged = ValenceScheme(target, new_edges)
    return PsiResult(merged, mu_n=m_n + m_n1 - 2 * m_join, m_join=m_join)


def psi_section(diagram: RumerDiagram, m_n: int, m_n1: int) -> RumerDiagram:
    """The unique non-crossing preimage of a Rumer diagram under psi.

    The bond ends at the last vertex are ordered by their far endpoint,
    ascending from vertex 1 (clockwise from the inserted vertex); the first
    m_{n+1} - r of them move to the new last vertex, the remaining m_n - r
    stay, and r parallel joining bonds are added, where
    r = (m_n + m_{n+1} - mu_n) / 2.

    Raises ValueError unless (m_n, m_{n+1}, mu_n) form an even triangle,
    mu_n being the diagram's current degree at its last vertex.
    """
    if m_n < 0 or m_n1 < 0:
        raise ValueError(f"target degrees must be nonnegative, got ({m_n},{m_n1})")
    scheme = diagram.scheme
    nv = scheme.n
    mu = scheme.degree(nv)
    if not even_triangle(m_n, m_n1, mu):
        raise ValueError(
            f"targets ({m_n},{m_n1}) and current degree {mu} do not form an even triangle"
        )
    r = (m_n + m_n1 - mu) // 2
    new_vertex = nv + 1
    far_ends = sorted(e.other(nv) for e in scheme.edges if e.touches(nv))
    moved, kept = far_ends[: m_n1 - r], far_ends[m_n1 - r :]
    edges = [e for e in scheme.edges if not e.touches(nv)]
    edges.extend(Edge(v, nv) for v in kept)
    edges.extend(Edge(v, new_vertex) for v in moved)
    edges.extend([Edge(nv, new_vertex)] * r)
    return RumerDiagram(ValenceScheme(new_vertex, edges))


def verify_psi_bijection(degrees) -> dict:
    """Exhaustively check the merge bijection for one degree prescription.

    For every non-crossing diagram with the given degrees: the merged scheme
    must be non-crossing, carry the bookkept degrees, be hit exactly once,
    and be inverted by psi_section.  The merged images must be exactly the
    union of the non-crossing sets over the even-triangle range, and over
    all valence schemes (crossings allowed) every merged scheme must be hit
    at least once and at most C(mu_n, m_{n+1} - r) times.

    Failures are report contents, never exceptions.
    """
    d = tuple(int(x) for x in degrees)
    if len(d) < 2:
        raise ValueError("need at least two degree entries to merge")
    if any(x < 0 for x in d):
        raise ValueError(f"degrees must be nonnegative, got {d}")
    m_n, m_n1 = d[-2], d[-1]
    prefix = d[:-2]
    counterexamples: list[dict] = []

    images: dict[ValenceScheme, RumerDiagram] = {}
    for diagram in enumerate_rumer_by_multidegree(d):
        result = psi(diagram.scheme)
        text = diagram.scheme.to_text()
        if result.mu_n != m_n + m_n1 - 2 * result.m_join:
            counterexamples.append({"diagram": text, "reason": "degree bookkeeping broken"})
            continue
        if not even_triangle(m_n, m_n1, result.mu_n):
            counterexamples.append({"diagram": text, "reason": "merged degree not even-triangle"})
            continue
        if not is_rumer(result.scheme):
            counterexamples.append({"diagram": text, "reason": "merged scheme crosses"})
            continue
        if result.scheme.multidegree() != prefix + (result.mu_n,):
            counterexamples.append({"diagram": text, "reason": "merged multidegree wrong"})
            continue
        if result.scheme in images:
            counterexamples.append(
                {"diagram": text, "reason": f"collides with {images[result.scheme]}"}
            )
            continue
        images[result.scheme] = diagram
        back = psi_section(RumerDiagram(result.scheme), m_n, m_n1)
        if back != diagram:
            counterexamples.append(
                {"diagram": text, "reason": f"section returned {back.scheme.to_text()}"}
            )

    expected = {
        diagram.scheme
        for mu in triangle_range(m_n, m_n1)
        for diagram in enumerate_rumer_by_multidegree(prefix + (mu,))
    }
    if expected != set(images):
        missing = sorted(s.to_text() for s in expected - set(images))
        extra = sorted(s.to_text() for s in set(images) - expected)
        counterexamples.append(
            {"reason": "image is not the even-triangle union", "missing": missing, "extra": extra}
        )

    preimage_count: dict[ValenceScheme, int] = {}
    for scheme in enumerate_valence_schemes_by_multidegree(d):
        merged = psi(scheme).scheme
        preimage_count[merged] = preimage_count.get(merged, 0) + 1
    for mu in triangle_range(m_n, m_n1):
        r = (m_n + m_n1 - mu) // 2
        bound = binomial(mu, m_n1 - r)
        for scheme in enumerate_valence_schemes_by_multidegree(prefix + (mu,)):
            hits = preimage_count.get(scheme, 0)
            if hits == 0:
                counterexamples.append(
                    {"scheme": scheme.to_text(), "reason": "not hit by any valence scheme"}
                )
            elif hits > bound:
                counterexamples.append(
                    {"scheme": scheme.to_text(), "reason": f"{hits} preimages exceed bound {bound}"}
                )

    return {
        "multidegree": list(d),
        "bijection_ok": not counterexamples,
        "counterexamples": counterexamples,
    }
