"""Nilpotent orbits of GL(n) as partitions, and Lusztig-Spaltenstein induction."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .rootdata import Parabolic, dim_a, parabolics_between


class SizeMismatch(ValueError):
    pass


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts if p != 0)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not weakly decreasing")
        return super().__new__(cls, parts)

    @classmethod
    def sorted(cls, parts: Iterable[int]) -> "Partition":
        return cls(sorted((p for p in parts if p), reverse=True))

    @classmethod
    def zero(cls, n: int) -> "Partition":
        return cls([1] * n)

    @classmethod
    def rectangle(cls, r: int, d: int) -> "Partition":
        """d parts equal to r: d Jordan blocks of size r."""
        return cls([r] * d)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, j: int) -> int:
        return self[j] if j < len(self) else 0

    def __repr__(self):
        return f"Partition{tuple(self)}"


def transpose(lam: Sequence[int]) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def ls_induce(levi_sizes: Sequence[int], parts: Sequence[Sequence[int]]) -> Partition:
    """Induced orbit from a block-diagonal Levi: the componentwise sum of partitions."""
    if len(levi_sizes) != len(parts):
        raise SizeMismatch("one partition per Levi block is required")
    for size, lam in zip(levi_sizes, parts):
        if sum(lam) != size:
            raise SizeMismatch(f"partition {tuple(lam)} does not have size {size}")
    width = max((len(lam) for lam in parts), default=0)
    return Partition(sum(lam[j] if j < len(lam) else 0 for lam in parts) for j in range(width))


def richardson(P: Parabolic | Sequence[int]) -> Partition:
    """The orbit induced from the zero orbit of the Levi of P."""
    sizes = P.sizes if isinstance(P, Parabolic) else tuple(P)
    return ls_induce(sizes, [Partition.zero(s) for s in sizes])


def dim_orbit(lam: Sequence[int]) -> int:
    n = sum(lam)
    return n * n - sum(c * c for c in transpose(lam))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """lam >= mu in dominance order (closure order of orbits); sizes must match."""
    if sum(lam) != sum(mu):
        raise SizeMismatch("dominance compares partitions of the same size")
    a = b = 0
    for j in range(max(len(lam), len(mu))):
        a += lam[j] if j < len(lam) else 0
        b += mu[j] if j < len(mu) else 0
        if a < b:
            return False
    return True


@dataclass(frozen=True)
class BlockNilpotent:
    """A nilpotent element of a Levi, recorded as one partition per Levi block."""

    levi: Parabolic
    parts: tuple[Partition, ...]

    def __post_init__(self):
        if len(self.parts) != len(self.levi.blocks):
            raise SizeMismatch("one partition per block is required")
        for block, lam in zip(self.levi.blocks, self.parts):
            if sum(lam) != len(block):
                raise SizeMismatch(f"partition {tuple(lam)} does not fit block {block}")

    @classmethod
    def zero(cls, levi: Parabolic) -> "BlockNilpotent":
        return cls(levi, tuple(Partition.zero(len(b)) for b in levi.blocks))

    def by_block(self) -> Mapping[frozenset, Partition]:
        return {frozenset(b): lam for b, lam in zip(self.levi.blocks, self.parts)}


def _gather(P: Parabolic, X: BlockNilpotent) -> list[Partition]:
    """Orbit of X in each block of P: X's partitions inside that block, concatenated."""
    out = []
    for block in P.blocks:
        inside = [lam for b, lam in zip(X.levi.blocks, X.parts) if set(b) <= set(block)]
        if sum(sum(lam) for lam in inside) != len(block):
            raise ValueError(f"Levi of X does not refine the block {block} of {P}")
        out.append(Partition.sorted(itertools.chain.from_iterable(inside)))
    return out


def induce_from_parabolic(P: Parabolic, X: BlockNilpotent, Q: Parabolic) -> list[Partition]:
    """The orbit I_P^Q(X) in the Levi of Q, one partition per block of Q.

    Within each block of Q, the blocks of P it contains are taken in the
    order P lists them and induction is the componentwise sum.
    """
    if not P.contained_in(Q):
        raise ValueError(f"{P} is not contained in {Q}")
    inner = _gather(P, X)
    out = []
    for qblock in Q.blocks:
        members = [(b, lam) for b, lam in zip(P.blocks, inner) if set(b) <= set(qblock)]
        out.append(ls_induce([len(b) for b, _ in members], [lam for _, lam in members]))
    return out


def induce_to_group(P: Parabolic, X: BlockNilpotent) -> Partition:
    """I_P^G(X)."""
    return induce_from_parabolic(P, X, Parabolic.whole(P.n))[0]


def xi_sum(P1: Parabolic, P2: Parabolic, O: Sequence[int], X: BlockNilpotent) -> int:
    """Sum over P1 in P in P2 with I_P^G(X) = O of (-1)^{dim a_P^G}."""
    if not P1.contained_in(P2):
        raise ValueError(f"{P1} is not contained in {P2}")
    target = Partition(O)
    G = Parabolic.whole(P1.n)
    return sum(
        (-1) ** dim_a(P, G)
        for P in parabolics_between(P1, P2)
        if induce_to_group(P, X) == target
    )


def xi_closure_sum(P1: Parabolic, P2: Parabolic, O: Sequence[int], X: BlockNilpotent) -> int:
    """Same sum over the P with I_P^G(X) in the closure of O (dominated by O)."""
    if not P1.contained_in(P2):
        raise ValueError(f"{P1} is not contained in {P2}")
    G = Parabolic.whole(P1.n)
    return sum(
        (-1) ** dim_a(P, G)
        for P in parabolics_between(P1, P2)
        if dominates(O, induce_to_group(P, X))
    )


def minimal_inducing(P: Parabolic, O: Sequence[int], X: BlockNilpotent) -> list[Parabolic]:
    """Minimal R containing P whose induced orbit lies in the closure of O."""
    G = Parabolic.whole(P.n)
    hits = [R for R in parabolics_between(P, G) if dominates(O, induce_to_group(R, X))]
    return [R for R in hits if not any(S != R and S.contained_in(R) for S in hits)]


def common_maximal_parabolic(P: Parabolic, parabolics: Sequence[Parabolic]) -> Parabolic | None:
    """A maximal parabolic containing P and every given parabolic, if one exists."""
    G = Parabolic.whole(P.n)
    for Q in parabolics_between(P, G):
        if dim_a(Q, G) == 1 and all(R.contained_in(Q) for R in parabolics):
            return Q
    return None
