"""Homology groups of finite-type complexes by integer diagonalization.

The group at degree i is ker d(i-1) / im d(i).  The kernel basis comes
from the Smith normal form of the incoming matrix, the outgoing matrix is
rewritten in kernel coordinates (an exact unimodular solve), and a second
normal form of that induced matrix yields the free rank and the torsion.
For a complex that reduces onto a finite-type bottom, the homology of the
top *is* the homology of the bottom: that transfer is the whole point of
an effective homology.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import ChainComplex
from .errors import HomAlgError, NotFiniteTypeError
from .modules import (
    Comb,
    DirectSum,
    Element,
    FiniteFree,
    FreeModule,
    Pair,
    generator,
)
from .reduction import EffectiveHomology
from .snf import IntMatrix, smith_normal_form


@dataclass(frozen=True)
class HomologyGroup:
    """Finitely generated abelian group: free rank plus invariant factors.

    Torsion entries are > 1 and each divides the next.
    """

    betti_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.betti_rank < 0:
            raise ValueError("the free rank is a natural number")
        prev = None
        for t in self.torsion:
            if t <= 1:
                raise ValueError("torsion entries are greater than one")
            if prev is not None and t % prev:
                raise ValueError("torsion entries must form a divisibility chain")
            prev = t

    def is_trivial(self) -> bool:
        return self.betti_rank == 0 and not self.torsion

    def __str__(self):
        if self.is_trivial():
            return "0"
        parts = []
        if self.betti_rank == 1:
            parts.append("Z")
        elif self.betti_rank > 1:
            parts.append(f"Z^{self.betti_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts)


def module_rank(desc: FreeModule) -> int:
    if isinstance(desc, FiniteFree):
        return desc.rank
    if isinstance(desc, DirectSum):
        return module_rank(desc.left) + module_rank(desc.right)
    raise NotFiniteTypeError(f"{desc} is not of finite type")


def enumerate_basis(desc: FreeModule) -> list[Element]:
    """Ordered basis of a finite-type module.

    A finite free module lists x0 .. x{k-1}; a direct sum lists the left
    basis injected on the left, then the right basis injected on the
    right.
    """
    if isinstance(desc, FiniteFree):
        return [generator(i) for i in range(desc.rank)]
    if isinstance(desc, DirectSum):
        lz, rz = desc.left.zero(), desc.right.zero()
        basis = [Pair(e, rz) for e in enumerate_basis(desc.left)]
        basis.extend(Pair(lz, e) for e in enumerate_basis(desc.right))
        return basis
    raise NotFiniteTypeError(f"{desc} is not of finite type")


def element_coordinates(element: Element, desc: FreeModule) -> list[int]:
    """Dense coordinates of a member of a finite-type module."""
    if isinstance(desc, FiniteFree):
        assert isinstance(element, Comb)
        return [element.coefficient(i) for i in range(desc.rank)]
    if isinstance(desc, DirectSum):
        assert isinstance(element, Pair)
        coords = element_coordinates(element.left, desc.left)
        coords.extend(element_coordinates(element.right, desc.right))
        return coords
    raise NotFiniteTypeError(f"{desc} is not of finite type")


def differential_matrix(cc: ChainComplex, i: int) -> IntMatrix:
    """Matrix of d(i) with column j the image of the j-th basis element."""
    source = cc.module_at(i + 1)
    target = cc.module_at(i)
    d = cc.diff_at(i)
    columns = [element_coordinates(d(b), target) for b in enumerate_basis(source)]
    rows_n, cols_n = module_rank(target), module_rank(source)
    rows = [[columns[j][r] for j in range(cols_n)] for r in range(rows_n)]
    return IntMatrix.from_rows(rows, rows_n, cols_n)


def homology_at(cc: ChainComplex, i: int) -> HomologyGroup:
    """ker d(i-1) / im d(i), requiring finite type at degrees i-1, i, i+1."""
    for j in (i - 1, i, i + 1):
        if not cc.module_at(j).is_finite_type():
            raise NotFiniteTypeError(
                f"module at degree {j} is not of finite type; "
                "compute through an effective homology instead"
            )
    incoming = differential_matrix(cc, i - 1)
    outgoing = differential_matrix(cc, i)
    snf_in = smith_normal_form(incoming)
    rank_in = len(snf_in.invariant_factors)
    nullity = incoming.cols - rank_in
    # Rewrite the outgoing image in the kernel basis: the last `nullity`
    # columns of V span ker d(i-1).
    w = _solve_unimodular(snf_in.V, outgoing)
    for r in range(rank_in):
        if any(w[r]):
            raise HomAlgError(
                f"differentials do not compose to zero around degree {i}"
            )
    induced = IntMatrix.from_rows(w[rank_in:], nullity, outgoing.cols)
    factors = smith_normal_form(induced).invariant_factors
    return HomologyGroup(
        betti_rank=nullity - len(factors),
        torsion=tuple(f for f in factors if f > 1),
    )


def homology_via_effective_homology(eh: EffectiveHomology, i: int) -> HomologyGroup:
    """Homology of the top complex, computed on the finite-type bottom."""
    return homology_at(eh.reduction.bottom, i)


def _solve_unimodular(v: IntMatrix, b: IntMatrix) -> list[list[int]]:
    """Solve V * W = B exactly; V unimodular guarantees an integer W."""
    n = v.rows
    if b.rows != n:
        raise ValueError("shapes do not match")
    aug = [
        [Fraction(x) for x in v.row(i)] + [Fraction(x) for x in b.row(i)]
        for i in range(n)
    ]
    width = n + b.cols
    for col in range(n):
        pivot_row = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        inv = aug[col][col]
        aug[col] = [x / inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                row = aug[r]
                aug[r] = [row[k] - f * aug[col][k] for k in range(width)]
    out = []
    for r in range(n):
        row = []
        for k in range(b.cols):
            value = aug[r][n + k]
            if value.denominator != 1:
                raise HomAlgError("unimodular solve produced a non-integer")
            row.append(int(value))
        out.append(row)
    return out
