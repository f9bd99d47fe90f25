"""Chain complexes graded over all the integers.

A complex is a total family of module descriptions ``module_at(i)``
together with differentials ``diff_at(i)`` mapping degree ``i+1`` to
degree ``i``.  Negative degrees are first-class: nothing here assumes the
complex is bounded.  Nilpotency (d followed by d is zero) and the chain
morphism commutation law are checked by sampling, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Callable

from .errors import ShapeMismatchError
from .grammar import format_element
from .laws import LawReport, run_law
from .modules import ZERO, DirectSum, FreeModule
from .morphisms import ModMorphism, direct_sum_map, identity, zero_map
from .sampling import Sampler


@dataclass(frozen=True, eq=False)
class ChainComplex:
    """Graded module plus differential family, both total over the integers.

    ``declared_finite_type`` is instance-supplied evidence that every degree
    is finite type; structural finiteness can only be verified on a window
    (see ``is_finite_type_complex``).
    """

    module_family: Callable[[int], FreeModule]
    diff_family: Callable[[int], ModMorphism]
    declared_finite_type: bool = False

    def module_at(self, i: int) -> FreeModule:
        return self.module_family(i)

    def diff_at(self, i: int) -> ModMorphism:
        """The differential from degree ``i + 1`` down to degree ``i``."""
        d = self.diff_family(i)
        if d.source != self.module_at(i + 1) or d.target != self.module_at(i):
            raise ShapeMismatchError(
                f"differential at index {i} has shape {d.source} -> {d.target}, "
                f"expected {self.module_at(i + 1)} -> {self.module_at(i)}"
            )
        return d


@dataclass(frozen=True, eq=False)
class ChainMorphism:
    """Degree-preserving family of module maps between two complexes."""

    source: ChainComplex
    target: ChainComplex
    family: Callable[[int], ModMorphism]

    def at(self, i: int) -> ModMorphism:
        f = self.family(i)
        if f.source != self.source.module_at(i) or f.target != self.target.module_at(i):
            raise ShapeMismatchError(
                f"chain morphism component at degree {i} has shape "
                f"{f.source} -> {f.target}, expected "
                f"{self.source.module_at(i)} -> {self.target.module_at(i)}"
            )
        return f


@cache
def null_complex() -> ChainComplex:
    """The zero module in every degree with the zero differential."""
    return ChainComplex(
        lambda i: ZERO, lambda i: zero_map(ZERO, ZERO), declared_finite_type=True
    )


def identity_chain_morphism(cc: ChainComplex) -> ChainMorphism:
    return ChainMorphism(cc, cc, lambda i: identity(cc.module_at(i)))


def zero_chain_morphism(source: ChainComplex, target: ChainComplex) -> ChainMorphism:
    return ChainMorphism(
        source, target, lambda i: zero_map(source.module_at(i), target.module_at(i))
    )


def direct_sum_complex(cc1: ChainComplex, cc2: ChainComplex) -> ChainComplex:
    """Degreewise direct sum with the componentwise differential."""
    return ChainComplex(
        lambda i: DirectSum(cc1.module_at(i), cc2.module_at(i)),
        lambda i: direct_sum_map(cc1.diff_at(i), cc2.diff_at(i)),
        declared_finite_type=cc1.declared_finite_type and cc2.declared_finite_type,
    )


@dataclass(frozen=True)
class FiniteTypeEvidence:
    """Outcome of a finite-type check over a degree window."""

    finite: bool
    declared: bool
    lo: int
    hi: int
    infinite_degrees: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.finite


def is_finite_type_complex(cc: ChainComplex, degrees) -> FiniteTypeEvidence:
    """Check structural finiteness on a witness window.

    The family is total over all integers, so this is evidence, not proof;
    instances may add a declared uniform flag, which is reported alongside.
    """
    window = sorted(set(degrees))
    if not window:
        raise ValueError("witness window must be nonempty")
    bad = tuple(i for i in window if not cc.module_at(i).is_finite_type())
    return FiniteTypeEvidence(
        finite=not bad,
        declared=cc.declared_finite_type,
        lo=window[0],
        hi=window[-1],
        infinite_degrees=bad,
    )


def check_nilpotency(cc: ChainComplex, degrees, sampler: Sampler) -> LawReport:
    """Sample d(i) after d(i+1) at every degree in the window."""

    def at_degree(i):
        d_low = cc.diff_at(i)
        d_high = cc.diff_at(i + 1)
        domain = cc.module_at(i + 2)
        zero = cc.module_at(i).zero()

        def check(a):
            out = d_low(d_high(a))
            if out == zero:
                return True, None
            return False, (format_element(a, domain), format_element(out, d_low.target))

        return domain, check

    return LawReport((run_law("dd=0", degrees, sampler, at_degree),))


def check_chain_morphism(
    morphism: ChainMorphism, degrees, sampler: Sampler, law: str = "fd=df"
) -> LawReport:
    """Sample the commutation f(i) . d(i) = d'(i) . f(i+1)."""
    src, tgt = morphism.source, morphism.target

    def at_degree(i):
        f_low = morphism.at(i)
        f_high = morphism.at(i + 1)
        d_src = src.diff_at(i)
        d_tgt = tgt.diff_at(i)
        domain = src.module_at(i + 1)

        def check(a):
            lhs = f_low(d_src(a))
            rhs = d_tgt(f_high(a))
            if lhs == rhs:
                return True, None
            return False, (
                format_element(a, domain),
                format_element(lhs - rhs, tgt.module_at(i)),
            )

        return domain, check

    return LawReport((run_law(law, degrees, sampler, at_degree),))
