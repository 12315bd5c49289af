"""Semi-standard parabolic subgroups of GL(n) and their root combinatorics.

A parabolic is an ordered set partition of {1..n}.  Its Levi is the unordered
partition, and P is contained in Q when Q's blocks are obtained by merging runs
of consecutive blocks of P.  Vectors are tuples of Fractions in Q^n with the
Euclidean pairing; a_P is the subspace of vectors constant on the blocks of P.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor
from typing import Iterable, Sequence

from .exactmath import RadicalRational

Vec = tuple  # tuple of Fraction


class NotContained(ValueError):
    pass


class LeviMismatch(ValueError):
    pass


# ------------------------------------------------------------------ vectors


def vec(values: Iterable) -> Vec:
    return tuple(Fraction(x) for x in values)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence, v: Sequence) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> Vec:
    return tuple(c * a for a in v)


def zero(n: int) -> Vec:
    return (Fraction(0),) * n


def combination(coeffs: Sequence, vectors: Sequence[Vec], n: int) -> Vec:
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                out[i] += c * x
    return tuple(out)


def solve(matrix: list[list[Fraction]], rhs: list[list[Fraction]]) -> list[list[Fraction]]:
    """Solve matrix * X = rhs exactly (matrix square and invertible)."""
    k = len(matrix)
    a = [list(row) + list(r) for row, r in zip(matrix, rhs)]
    for col in range(k):
        pivot = next((i for i in range(col, k) if a[i][col] != 0), None)
        if pivot is None:
            raise ValueError("singular system")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(k):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[k:] for row in a]


def determinant(matrix: list[list[Fraction]]) -> Fraction:
    a = [list(row) for row in matrix]
    k = len(a)
    det = Fraction(1)
    for col in range(k):
        pivot = next((i for i in range(col, k) if a[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for i in range(col + 1, k):
            if a[i][col] != 0:
                f = a[i][col] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return det


def gram(basis: Sequence[Vec]) -> list[list[Fraction]]:
    return [[dot(u, v) for v in basis] for u in basis]


def dual_basis(basis: Sequence[Vec]) -> list[Vec]:
    """The basis of span(basis) dual to ``basis`` under the Euclidean pairing."""
    if not basis:
        return []
    n = len(basis[0])
    k = len(basis)
    inv = solve(gram(basis), [[Fraction(int(i == j)) for j in range(k)] for i in range(k)])
    return [combination(inv[i], basis, n) for i in range(k)]


def coordinates(v: Vec, basis: Sequence[Vec]) -> list[Fraction] | None:
    """Coefficients of v in ``basis``, or None when v is outside the span."""
    if not basis:
        return [] if not any(v) else None
    duals = dual_basis(basis)
    coeffs = [dot(v, w) for w in duals]
    if combination(coeffs, basis, len(v)) != tuple(v):
        return None
    return coeffs


# ---------------------------------------------------------------- parabolics


class Parabolic:
    """An ordered set partition of {1..n}."""

    __slots__ = ("blocks", "n", "_hash")

    def __init__(self, blocks: Iterable[Iterable[int]]):
        blocks = tuple(tuple(sorted(b)) for b in blocks)
        flat = sorted(x for b in blocks for x in b)
        if any(not b for b in blocks) or flat != list(range(1, len(flat) + 1)):
            raise ValueError(f"not an ordered set partition of 1..n: {blocks}")
        self.blocks = blocks
        self.n = len(flat)
        self._hash = hash(blocks)

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> "Parabolic":
        """The standard parabolic with consecutive interval blocks of the given sizes."""
        blocks, start = [], 1
        for s in sizes:
            blocks.append(range(start, start + s))
            start += s
        return cls(blocks)

    @classmethod
    def borel(cls, n: int) -> "Parabolic":
        return cls.from_sizes([1] * n)

    @classmethod
    def whole(cls, n: int) -> "Parabolic":
        return cls.from_sizes([n])

    @property
    def levi(self) -> frozenset:
        return frozenset(frozenset(b) for b in self.blocks)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def rank(self) -> int:
        """Number of blocks, i.e. dim a_P."""
        return len(self.blocks)

    def is_standard(self) -> bool:
        flat = [x for b in self.blocks for x in b]
        return flat == list(range(1, self.n + 1))

    def contained_in(self, other: "Parabolic") -> bool:
        if self.n != other.n:
            return False
        i = 0
        for qb in other.blocks:
            acc: set[int] = set()
            target = set(qb)
            while acc != target:
                if i >= len(self.blocks) or not set(self.blocks[i]) <= target:
                    return False
                acc |= set(self.blocks[i])
                i += 1
        return i == len(self.blocks)

    def __le__(self, other: "Parabolic") -> bool:
        return self.contained_in(other)

    def __lt__(self, other: "Parabolic") -> bool:
        return self != other and self.contained_in(other)

    def __eq__(self, other):
        return isinstance(other, Parabolic) and self.blocks == other.blocks

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "P[" + "|".join(",".join(map(str, b)) for b in self.blocks) + "]"

    def runs_in(self, other: "Parabolic") -> list[list[int]]:
        """For each block of ``other``, the indices of the blocks of self inside it."""
        if not self.contained_in(other):
            raise NotContained(f"{self} is not contained in {other}")
        runs, i = [], 0
        for qb in other.blocks:
            run, size = [], 0
            while size < len(qb):
                run.append(i)
                size += len(self.blocks[i])
                i += 1
            runs.append(run)
        return runs


def dim_a(P: Parabolic, R: Parabolic) -> int:
    """dim a_P^R for P contained in R."""
    return P.rank - R.rank


def compositions(n: int):
    for cuts in itertools.product((0, 1), repeat=n - 1):
        sizes, run = [], 1
        for c in cuts:
            if c:
                sizes.append(run)
                run = 1
            else:
                run += 1
        sizes.append(run)
        yield tuple(sizes)


def standard_parabolics(n: int) -> list[Parabolic]:
    return [Parabolic.from_sizes(c) for c in compositions(n)]


def _set_partitions(items: list[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def all_parabolics(n: int) -> list[Parabolic]:
    """Every semi-standard parabolic, i.e. every ordered set partition."""
    out = []
    for part in _set_partitions(list(range(1, n + 1))):
        for order in itertools.permutations(part):
            out.append(Parabolic(order))
    return out


def parabolics_with_levi(M) -> list[Parabolic]:
    """All parabolics whose Levi is M (given as blocks, or as a Parabolic)."""
    blocks = M.blocks if isinstance(M, Parabolic) else [tuple(sorted(b)) for b in M]
    blocks = sorted(blocks)
    return [Parabolic(order) for order in itertools.permutations(blocks)]


def parabolics_between(P: Parabolic, Q: Parabolic) -> list[Parabolic]:
    """All R with P contained in R contained in Q."""
    runs = P.runs_in(Q)
    joints = [(r, k) for r, run in enumerate(runs) for k in range(len(run) - 1)]
    out = []
    for cuts in itertools.product((False, True), repeat=len(joints)):
        merge = dict(zip(joints, cuts))
        blocks = []
        for r, run in enumerate(runs):
            cur = list(P.blocks[run[0]])
            for k in range(len(run) - 1):
                if merge[(r, k)]:
                    cur += P.blocks[run[k + 1]]
                else:
                    blocks.append(cur)
                    cur = list(P.blocks[run[k + 1]])
            blocks.append(cur)
        out.append(Parabolic(blocks))
    return out


def parabolics_containing(P: Parabolic) -> list[Parabolic]:
    return parabolics_between(P, Parabolic.whole(P.n))


# ------------------------------------------------------------ root sets


def block_mean(v: Sequence, P: Parabolic) -> Vec:
    """Orthogonal projection onto a_P (replace each block by its mean)."""
    out = [Fraction(0)] * P.n
    for b in P.blocks:
        m = sum((v[i - 1] for i in b), Fraction(0)) / len(b)
        for i in b:
            out[i - 1] = m
    return tuple(out)


def project(v: Sequence, P: Parabolic, Q: Parabolic) -> Vec:
    """Orthogonal projection onto a_P^Q, the span of the coroots of P in Q."""
    if not P.contained_in(Q):
        raise NotContained(f"{P} is not contained in {Q}")
    return sub(block_mean(v, P), block_mean(v, Q))


def levi_part(v: Sequence, Q: Parabolic) -> Vec:
    """The component of v orthogonal to a_Q (the projection written lambda^Q)."""
    return sub(tuple(Fraction(x) for x in v), block_mean(v, Q))


def _pair_vector(P: Parabolic, i: int) -> Vec:
    out = [Fraction(0)] * P.n
    left, right = P.blocks[i], P.blocks[i + 1]
    for a in left:
        out[a - 1] = Fraction(1, len(left))
    for a in right:
        out[a - 1] = Fraction(-1, len(right))
    return tuple(out)


@dataclass(frozen=True)
class RootSets:
    """Simple roots, coroots and their dual bases for a pair P in Q.

    ``labels[i]`` is the index j of the adjacent pair (block j, block j+1) of P
    carrying the i-th root, so the sets of different Q can be matched.
    """

    labels: tuple[int, ...]
    roots: tuple[Vec, ...]
    coroots: tuple[Vec, ...]
    coweights: tuple[Vec, ...]
    weights: tuple[Vec, ...]


@lru_cache(maxsize=None)
def root_sets(P: Parabolic, Q: Parabolic) -> RootSets:
    runs = P.runs_in(Q)
    labels = tuple(run[k] for run in runs for k in range(len(run) - 1))
    roots = tuple(_pair_vector(P, j) for j in labels)
    # with the Euclidean product the projected coroot is the same vector
    coroots = roots
    coweights = tuple(dual_basis(list(roots)))
    weights = tuple(dual_basis(list(coroots)))
    return RootSets(labels, roots, coroots, coweights, weights)


def simple_roots(P: Parabolic) -> tuple[Vec, ...]:
    return root_sets(P, Parabolic.whole(P.n)).roots


def tau(P: Parabolic, Q: Parabolic, H: Sequence) -> int:
    return int(all(dot(a, H) > 0 for a in root_sets(P, Q).roots))


def tau_hat(P: Parabolic, Q: Parabolic, H: Sequence) -> int:
    return int(all(dot(w, H) > 0 for w in root_sets(P, Q).weights))


def covolume(basis: Sequence[Vec]) -> RadicalRational:
    """Covolume of the lattice spanned by ``basis`` inside its real span."""
    if not basis:
        return RadicalRational.of(1)
    det = determinant(gram(basis))
    if det == 0:
        raise ValueError("covolume of a dependent family")
    return RadicalRational.sqrt(det)


def co_adjacent(P1: Parabolic, P2: Parabolic) -> Vec | None:
    """Witness coweight for a co-adjacent pair, or None."""
    if P1.levi != P2.levi:
        raise LeviMismatch(f"{P1} and {P2} have different Levi subgroups")
    if P1 == P2:
        return None
    G = Parabolic.whole(P1.n)
    s1, s2 = root_sets(P1, G), root_sets(P2, G)
    common = set(s1.roots) & set(s2.roots)
    missing = [i for i, a in enumerate(s1.roots) if a not in common]
    if len(missing) != 1:
        return None
    witness = s1.coweights[missing[0]]
    if scale(-1, witness) not in set(s2.coweights):
        return None
    return witness


def xi_bracket(xi: Sequence, P: Parabolic, Q: Parabolic) -> Vec:
    """Sum over coroots of (floor(<weight, xi_P^Q>) + 1) times the coroot."""
    rs = root_sets(P, Q)
    x = project(xi, P, Q)
    coeffs = [floor(dot(w, x)) + 1 for w in rs.weights]
    return combination(coeffs, rs.coroots, P.n)


# ------------------------------------------------------------------ Weyl action


def _block_map(w: Sequence[int], M: Parabolic) -> dict[int, int]:
    if sorted(w) != list(range(len(M.blocks))):
        raise ValueError("w must be a permutation of the block indices")
    mapping = {}
    for i, b in enumerate(M.blocks):
        target = M.blocks[w[i]]
        if len(target) != len(b):
            raise ValueError("w must permute blocks of equal size")
        for a, t in zip(b, target):
            mapping[a] = t
    return mapping


def weyl_act(w: Sequence[int], v, M: Parabolic):
    """Move block i of the reference Levi M onto block w[i].

    Acts on vectors by moving coordinates and on parabolics by relabelling.
    """
    mapping = _block_map(w, M)
    if isinstance(v, Parabolic):
        return Parabolic([[mapping[a] for a in b] for b in v.blocks])
    out = [Fraction(0)] * M.n
    for a, t in mapping.items():
        out[t - 1] = Fraction(v[a - 1])
    return tuple(out)
