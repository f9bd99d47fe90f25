"""Linear maps between free modules.

A morphism packages a source and a target description with a pure action
on elements.  Every application validates membership on both ends, so a
bad generator image or a shape mistake surfaces as a ``MembershipError``
at application time.  Composition is written ``g * f`` (first apply ``f``),
addition ``f + g`` and negation ``-f``; all three check the descriptions
when the morphism is built, not when it is first applied.

Equality of morphisms is deliberately not provided: over an infinite
generator family it is undecidable, so the law checkers compare morphisms
pointwise on sampled elements instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import ShapeMismatchError
from .modules import Comb, DirectSum, Element, FreeModule, Pair


@dataclass(frozen=True, eq=False)
class ModMorphism:
    """A linear map ``source -> target`` given by a pure action."""

    source: FreeModule
    target: FreeModule
    action: Callable[[Element], Element]

    def __call__(self, element: Element) -> Element:
        self.source.require(element)
        image = self.action(element)
        self.target.require(image)
        return image

    def __mul__(self, other: "ModMorphism") -> "ModMorphism":
        if not isinstance(other, ModMorphism):
            return NotImplemented
        if other.target != self.source:
            raise ShapeMismatchError(
                f"cannot compose: inner target {other.target} != outer source {self.source}"
            )
        return ModMorphism(other.source, self.target, lambda e: self(other(e)))

    def __add__(self, other: "ModMorphism") -> "ModMorphism":
        if not isinstance(other, ModMorphism):
            return NotImplemented
        if self.source != other.source or self.target != other.target:
            raise ShapeMismatchError("cannot add morphisms with different shapes")
        return ModMorphism(self.source, self.target, lambda e: self(e) + other(e))

    def __neg__(self) -> "ModMorphism":
        return ModMorphism(self.source, self.target, lambda e: -self(e))

    def __sub__(self, other: "ModMorphism") -> "ModMorphism":
        return self + (-other)


def identity(desc: FreeModule) -> ModMorphism:
    return ModMorphism(desc, desc, lambda e: e)


def zero_map(source: FreeModule, target: FreeModule) -> ModMorphism:
    return ModMorphism(source, target, lambda e: target.zero())


def scaling(desc: FreeModule, factor: int) -> ModMorphism:
    """Multiplication by a fixed integer."""
    return ModMorphism(desc, desc, lambda e: factor * e)


def from_generator_images(
    source: FreeModule,
    target: FreeModule,
    images: Callable[[int], Element],
) -> ModMorphism:
    """The linear extension of a map defined on generators.

    ``source`` must be combination-shaped; the image of a combination is
    the coefficient-weighted sum of the generator images, canonicalized.
    """
    if isinstance(source, DirectSum):
        raise ShapeMismatchError("generator images need a combination-shaped source")

    def act(element: Element) -> Element:
        assert isinstance(element, Comb)
        out = target.zero()
        for g, c in element.terms:
            out = out + c * images(g)
        return out

    return ModMorphism(source, target, act)


def proj1(desc: DirectSum) -> ModMorphism:
    _require_sum(desc)
    return ModMorphism(desc, desc.left, lambda e: e.left)


def proj2(desc: DirectSum) -> ModMorphism:
    _require_sum(desc)
    return ModMorphism(desc, desc.right, lambda e: e.right)


def inj1(desc: DirectSum) -> ModMorphism:
    _require_sum(desc)
    return ModMorphism(desc.left, desc, lambda e: Pair(e, desc.right.zero()))


def inj2(desc: DirectSum) -> ModMorphism:
    _require_sum(desc)
    return ModMorphism(desc.right, desc, lambda e: Pair(desc.left.zero(), e))


def pair(f: ModMorphism, g: ModMorphism) -> ModMorphism:
    """The map ``e -> (f(e), g(e))`` into the direct sum of the targets."""
    if f.source != g.source:
        raise ShapeMismatchError("paired morphisms must share their source")
    target = DirectSum(f.target, g.target)
    return ModMorphism(f.source, target, lambda e: Pair(f(e), g(e)))


def direct_sum_map(f: ModMorphism, g: ModMorphism) -> ModMorphism:
    """Componentwise action on a direct sum: ``(a, b) -> (f(a), g(b))``."""
    source = DirectSum(f.source, g.source)
    target = DirectSum(f.target, g.target)
    return ModMorphism(source, target, lambda e: Pair(f(e.left), g(e.right)))


def _require_sum(desc: FreeModule) -> None:
    if not isinstance(desc, DirectSum):
        raise ShapeMismatchError(f"{desc} is not a direct sum")
