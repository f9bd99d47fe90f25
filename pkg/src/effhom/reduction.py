"""Reductions, effective homology, and contracting homotopies.

A reduction connects a top complex to a (typically smaller) bottom
complex through chain morphisms f (top to bottom), g (bottom to top) and
a degree-raising homotopy operator h on the top, subject to five laws:

    1. f . g = id              on the bottom
    2. d.h + h.d + g.f = id    on the top
    3. f . h = 0
    4. h . g = 0
    5. h . h = 0

Values are constructible without proof; validity is established by the
sampled checkers, and a reduction whose bottom is free of finite type is
an effective homology: homological questions about the top transfer to
plain integer linear algebra on the bottom.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .complexes import (
    ChainComplex,
    ChainMorphism,
    FiniteTypeEvidence,
    is_finite_type_complex,
    null_complex,
)
from .errors import (
    LawViolationError,
    NotACycleError,
    NotFiniteTypeError,
    PreimageVerificationError,
    ShapeMismatchError,
)
from .grammar import format_element
from .laws import LawReport, run_law
from .modules import Element
from .morphisms import ModMorphism, zero_map
from .sampling import Sampler

#: Default degree window for sampled checks: covers both parities and all
#: the degrees exercised by the shipped instances.
DEFAULT_DEGREES = range(-8, 9)


@dataclass(frozen=True, eq=False)
class HomotopyOperator:
    """Degree-raising family h(i): M(i) -> M(i+1) over one complex."""

    over: ChainComplex
    family: Callable[[int], ModMorphism]

    def at(self, i: int) -> ModMorphism:
        h = self.family(i)
        if h.source != self.over.module_at(i) or h.target != self.over.module_at(i + 1):
            raise ShapeMismatchError(
                f"homotopy component at degree {i} has shape {h.source} -> {h.target},"
                f" expected {self.over.module_at(i)} -> {self.over.module_at(i + 1)}"
            )
        return h


def zero_homotopy(cc: ChainComplex) -> HomotopyOperator:
    return HomotopyOperator(
        cc, lambda i: zero_map(cc.module_at(i), cc.module_at(i + 1))
    )


@dataclass(frozen=True, eq=False)
class Reduction:
    top: ChainComplex
    bottom: ChainComplex
    f: ChainMorphism
    g: ChainMorphism
    h: HomotopyOperator


@dataclass(frozen=True, eq=False)
class EffectiveHomology:
    """A reduction together with finite-type evidence for its bottom."""

    reduction: Reduction
    bottom_finite_type: FiniteTypeEvidence


def effective_homology(
    reduction: Reduction, witness_degrees=DEFAULT_DEGREES
) -> EffectiveHomology:
    """Package a reduction whose bottom passes the finite-type check."""
    evidence = is_finite_type_complex(reduction.bottom, witness_degrees)
    if not evidence:
        raise NotFiniteTypeError(
            f"bottom complex is infinite type at degrees {evidence.infinite_degrees}"
        )
    return EffectiveHomology(reduction, evidence)


def check_reduction_laws(r: Reduction, degrees, sampler: Sampler) -> LawReport:
    """Sample the five reduction laws; one report section per law."""
    top, bottom, f, g, h = r.top, r.bottom, r.f, r.g, r.h

    def law_fg(i):
        fi, gi = f.at(i), g.at(i)
        domain = bottom.module_at(i)

        def check(y):
            out = fi(gi(y))
            if out == y:
                return True, None
            return False, (format_element(y, domain), format_element(out, domain))

        return domain, check

    def law_homotopy(i):
        # Elements live in top degree i+1, matching d(i+1).h(i+1) + h(i).d(i).
        d_high = top.diff_at(i + 1)
        d_low = top.diff_at(i)
        h_high = h.at(i + 1)
        h_low = h.at(i)
        gi, fi = g.at(i + 1), f.at(i + 1)
        domain = top.module_at(i + 1)

        def check(a):
            out = d_high(h_high(a)) + h_low(d_low(a)) + gi(fi(a))
            if out == a:
                return True, None
            return False, (format_element(a, domain), format_element(out, domain))

        return domain, check

    def law_fh(i):
        hi = h.at(i)
        fi = f.at(i + 1)
        domain = top.module_at(i)
        zero = bottom.module_at(i + 1).zero()

        def check(a):
            out = fi(hi(a))
            if out == zero:
                return True, None
            return False, (format_element(a, domain), format_element(out, fi.target))

        return domain, check

    def law_hg(i):
        gi = g.at(i)
        hi = h.at(i)
        domain = bottom.module_at(i)
        zero = top.module_at(i + 1).zero()

        def check(y):
            out = hi(gi(y))
            if out == zero:
                return True, None
            return False, (format_element(y, domain), format_element(out, hi.target))

        return domain, check

    def law_hh(i):
        h_low = h.at(i)
        h_high = h.at(i + 1)
        domain = top.module_at(i)
        zero = top.module_at(i + 2).zero()

        def check(a):
            out = h_high(h_low(a))
            if out == zero:
                return True, None
            return False, (
                format_element(a, domain),
                format_element(out, h_high.target),
            )

        return domain, check

    return LawReport(
        (
            run_law("fg=id", degrees, sampler, law_fg),
            run_law("dh+hd+gf=id", degrees, sampler, law_homotopy),
            run_law("fh=0", degrees, sampler, law_fh),
            run_law("hg=0", degrees, sampler, law_hg),
            run_law("hh=0", degrees, sampler, law_hh),
        )
    )


def check_contracting(
    cc: ChainComplex, h: HomotopyOperator, degrees, sampler: Sampler
) -> LawReport:
    """Sample d(i).h(i) + h(i-1).d(i-1) = id on elements at degree i."""

    def at_degree(i):
        d_here = cc.diff_at(i)
        d_below = cc.diff_at(i - 1)
        h_here = h.at(i)
        h_below = h.at(i - 1)
        domain = cc.module_at(i)

        def check(a):
            out = d_here(h_here(a)) + h_below(d_below(a))
            if out == a:
                return True, None
            return False, (format_element(a, domain), format_element(out, domain))

        return domain, check

    return LawReport((run_law("dh+hd=id", degrees, sampler, at_degree),))


def check_homotopy_squares_to_zero(
    cc: ChainComplex, h: HomotopyOperator, degrees, sampler: Sampler
) -> LawReport:
    """Sample h(i+1).h(i) = 0 on elements at degree i."""

    def at_degree(i):
        h_low = h.at(i)
        h_high = h.at(i + 1)
        domain = cc.module_at(i)
        zero = cc.module_at(i + 2).zero()

        def check(a):
            out = h_high(h_low(a))
            if out == zero:
                return True, None
            return False, (
                format_element(a, domain),
                format_element(out, h_high.target),
            )

        return domain, check

    return LawReport((run_law("hh=0", degrees, sampler, at_degree),))


def perturb_homotopy(r: Reduction, h_bottom: HomotopyOperator) -> HomotopyOperator:
    """Transport a bottom homotopy through a reduction.

    Returns i -> r.h(i) + r.g(i+1) . h_bottom(i) . r.f(i); g is taken at
    degree i+1 because the bottom homotopy raises the degree.
    """
    return HomotopyOperator(
        r.top,
        lambda i: r.h.at(i) + r.g.at(i + 1) * h_bottom.at(i) * r.f.at(i),
    )


def is_cycle(cc: ChainComplex, i: int, x: Element) -> bool:
    """True when the differential at index ``i`` kills ``x``.

    ``x`` must live in degree ``i + 1``, the domain of ``diff_at(i)``.
    """
    d = cc.diff_at(i)
    return d(x) == cc.module_at(i).zero()


def preimage(cc: ChainComplex, h: HomotopyOperator, i: int, x: Element) -> Element:
    """A z at degree ``i + 1`` with d(z) = x, obtained as z = h(x).

    ``x`` must be a cycle at degree ``i``.  The output is verified: if
    d(h(x)) differs from x the homotopy is not contracting at this point
    and a ``PreimageVerificationError`` reports both z and d(z).
    """
    boundary = cc.diff_at(i - 1)(x)
    if boundary != cc.module_at(i - 1).zero():
        raise NotACycleError(
            f"element at degree {i} has nonzero boundary "
            f"{format_element(boundary, cc.module_at(i - 1))}",
            boundary,
        )
    z = h.at(i)(x)
    dz = cc.diff_at(i)(z)
    if dz != x:
        raise PreimageVerificationError(
            "homotopy is not contracting at this element: d(h(x)) != x", z, dz
        )
    return z


def acyclic_to_null_effective_homology(
    cc: ChainComplex,
    h: HomotopyOperator,
    degrees=DEFAULT_DEGREES,
    sampler: Sampler | None = None,
) -> EffectiveHomology:
    """Package a contracting homotopy as an effective homology to ``null``.

    Both d.h + h.d = id and h.h = 0 are sampled first: the second law is
    needed for reduction law 5 once f and g are the zero morphisms, and it
    is an extra obligation on top of the contraction identity itself.
    """
    sampler = sampler or Sampler()
    report = check_contracting(cc, h, degrees, sampler).merged(
        check_homotopy_squares_to_zero(cc, h, degrees, sampler)
    )
    if not report.ok:
        raise LawViolationError(
            f"homotopy fails on {report.violations} sample(s); "
            "not a contracting homotopy",
            report,
        )
    null = null_complex()
    f = ChainMorphism(cc, null, lambda i: zero_map(cc.module_at(i), null.module_at(i)))
    g = ChainMorphism(null, cc, lambda i: zero_map(null.module_at(i), cc.module_at(i)))
    reduction = Reduction(cc, null, f, g, h)
    return effective_homology(reduction)
