"""The cone of a chain morphism and its reduction.

For a chain morphism ``alpha: CC -> CC'`` the cone has degree-``i`` module
``M(i) (+) M'(i+1)`` and twisted differential

    d''(i)(x, x') = (-d(i)(x), d'(i+1)(x') + alpha(i+1)(x)).

Given reductions of both complexes and a morphism ``alpha`` between their
tops, the cone of ``alpha`` reduces onto the cone of the induced bottom
morphism ``alpha' = f' . alpha . g``; the degree bookkeeping of the three
reduction morphisms is fixed here so that every composite is built over
matching module descriptions, and a mismatch raises when the degree
component is constructed, not when it is first applied to an element.

``cone_contraction`` ships the homotopy k(i)(x, y) = (g(i+1)(y) - h(i)(x), 0)
witnessing that the cone of a reduction's own f is acyclic.  The formula
is a derived obligation: the test suite validates it against an
independent term-by-term expansion of d.k + k.d through the five
reduction laws before trusting the sampled contraction check.
"""

from __future__ import annotations

from .complexes import ChainComplex, ChainMorphism, FiniteTypeEvidence
from .modules import DirectSum
from .morphisms import pair, proj1, proj2, zero_map
from .reduction import (
    EffectiveHomology,
    HomotopyOperator,
    Reduction,
    effective_homology,
)


def cone(alpha: ChainMorphism) -> ChainComplex:
    """The mapping cone of ``alpha``."""
    src, tgt = alpha.source, alpha.target

    def module_at(i):
        return DirectSum(src.module_at(i), tgt.module_at(i + 1))

    def diff(i):
        domain = module_at(i + 1)
        p1, p2 = proj1(domain), proj2(domain)
        first = -(src.diff_at(i) * p1)
        second = tgt.diff_at(i + 1) * p2 + alpha.at(i + 1) * p1
        return pair(first, second)

    return ChainComplex(
        module_at,
        diff,
        declared_finite_type=src.declared_finite_type and tgt.declared_finite_type,
    )


def bottom_morphism(
    r1: Reduction, r2: Reduction, alpha: ChainMorphism
) -> ChainMorphism:
    """The induced morphism between the bottoms: f' . alpha . g, degreewise."""
    return ChainMorphism(
        r1.bottom,
        r2.bottom,
        lambda i: r2.f.at(i) * alpha.at(i) * r1.g.at(i),
    )


def cone_reduction(r1: Reduction, r2: Reduction, alpha: ChainMorphism) -> Reduction:
    """Reduce the cone of ``alpha`` onto the cone of the induced bottom map."""
    top = cone(alpha)
    bottom = cone(bottom_morphism(r1, r2, alpha))

    def f_at(i):
        domain = top.module_at(i)
        p1, p2 = proj1(domain), proj2(domain)
        first = r1.f.at(i) * p1
        via_h = r2.f.at(i + 1) * alpha.at(i + 1) * r1.h.at(i) * p1
        second = via_h + r2.f.at(i + 1) * p2
        return pair(first, second)

    def g_at(i):
        domain = bottom.module_at(i)
        p1, p2 = proj1(domain), proj2(domain)
        lift = r1.g.at(i) * p1
        first = lift
        via_h = -(r2.h.at(i) * alpha.at(i) * lift)
        second = via_h + r2.g.at(i + 1) * p2
        return pair(first, second)

    def h_at(i):
        domain = top.module_at(i)
        p1, p2 = proj1(domain), proj2(domain)
        lift = r1.h.at(i) * p1
        first = -lift
        second = r2.h.at(i + 1) * alpha.at(i + 1) * lift + r2.h.at(i + 1) * p2
        return pair(first, second)

    return Reduction(
        top,
        bottom,
        ChainMorphism(top, bottom, f_at),
        ChainMorphism(bottom, top, g_at),
        HomotopyOperator(top, h_at),
    )


def cone_effective_homology(
    eh1: EffectiveHomology, eh2: EffectiveHomology, alpha: ChainMorphism
) -> EffectiveHomology:
    """Effective homology of the cone of a morphism between the two tops.

    The bottom of the produced reduction is the cone of the induced bottom
    morphism; its finite-type evidence is derived from the two bottom
    evidences, since a direct sum of finite-type modules is finite type.
    """
    reduction = cone_reduction(eh1.reduction, eh2.reduction, alpha)
    e1, e2 = eh1.bottom_finite_type, eh2.bottom_finite_type
    # Cone degree i uses bottom1 at i and bottom2 at i+1.
    lo, hi = max(e1.lo, e2.lo - 1), min(e1.hi, e2.hi - 1)
    if lo > hi:
        return effective_homology(reduction)
    evidence = FiniteTypeEvidence(
        finite=e1.finite and e2.finite,
        declared=e1.declared and e2.declared,
        lo=lo,
        hi=hi,
    )
    return EffectiveHomology(reduction, evidence)


def cone_contraction(r: Reduction) -> HomotopyOperator:
    """Contracting homotopy on the cone of ``r.f``.

    k(i)(x, y) = (g(i+1)(y) - h(i)(x), 0), raising cone degree i to i+1.
    """
    over = cone(r.f)

    def k_at(i):
        domain = over.module_at(i)
        p1, p2 = proj1(domain), proj2(domain)
        first = r.g.at(i + 1) * p2 - r.h.at(i) * p1
        second = zero_map(domain, r.bottom.module_at(i + 2))
        return pair(first, second)

    return HomotopyOperator(over, k_at)
