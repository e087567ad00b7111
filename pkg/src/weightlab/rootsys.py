"""Irreducible root systems of types A-G and their combinatorics.

Roots are plain tuples of ints: the coordinates n_gamma^tau in the
simple-root basis of the reference base Delta.  Coordinates with respect
to any other base are recomputed on demand by exact linear solve.  The
bilinear form is normalized so that short roots have squared length 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg

Root = tuple[int, ...]

_MAX_RANK = 8
_GENERATION_LEVEL_CAP = 64

#: classical |Phi| per type, as a function of the rank
_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}

_RANK_RANGE = {
    "A": (1, _MAX_RANK),
    "B": (2, _MAX_RANK),
    "C": (2, _MAX_RANK),
    "D": (4, _MAX_RANK),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


def classical_root_count(letter: str, rank: int) -> int:
    return _ROOT_COUNTS[letter](rank)


def weyl_order(letter: str, rank: int) -> int:
    if letter == "A":
        return math.factorial(rank + 1)
    if letter in ("B", "C"):
        return 2**rank * math.factorial(rank)
    if letter == "D":
        return 2 ** (rank - 1) * math.factorial(rank)
    if letter == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[rank]
    if letter == "F":
        return 1152
    if letter == "G":
        return 12
    raise ValueError(f"unknown type {letter}")


def _gram_matrix(letter: str, rank: int) -> list[list[int]]:
    """Symmetric matrix (alpha_i, alpha_j), short roots of squared length 2."""
    n = rank
    g = [[0] * n for _ in range(n)]

    def chain(scale: int, upto: int) -> None:
        for i in range(upto):
            g[i][i] = 2 * scale
        for i in range(upto - 1):
            g[i][i + 1] = g[i + 1][i] = -scale

    if letter == "A":
        chain(1, n)
    elif letter == "B":  # alpha_1..alpha_{n-1} long, alpha_n short
        chain(2, n)
        g[n - 1][n - 1] = 2
    elif letter == "C":  # alpha_1..alpha_{n-1} short, alpha_n long
        chain(1, n)
        g[n - 1][n - 1] = 4
        g[n - 2][n - 1] = g[n - 1][n - 2] = -2
    elif letter == "D":  # alpha_n attached to alpha_{n-2}
        chain(1, n - 1)
        g[n - 1][n - 1] = 2
        g[n - 3][n - 1] = g[n - 1][n - 3] = -1
    elif letter == "E":  # Bourbaki: chain 1-3-4-...-n with node 2 on node 4
        chain(1, n)
        g[0][1] = g[1][0] = 0
        g[1][2] = g[2][1] = 0
        g[0][2] = g[2][0] = -1
        g[1][3] = g[3][1] = -1
    elif letter == "F":  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        g = [[4, -2, 0, 0], [-2, 4, -2, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    elif letter == "G":  # alpha_1 short, alpha_2 long
        g = [[2, -3], [-3, 6]]
    else:
        raise ValueError(f"unknown type {letter}")
    return g


class RootSystem:
    """Immutable container for one irreducible root system.

    cartan[i][j] = <alpha_j, alpha_i^vee>, so the fundamental-weight
    coordinates of a root are cartan times its simple-root coordinates.
    """

    def __init__(self, letter, rank, cartan, symmetrizer, positive):
        self.letter = letter
        self.rank = rank
        self.cartan = cartan
        self.symmetrizer = symmetrizer
        self.positive = positive
        negative = tuple(tuple(-x for x in r) for r in positive)
        self.roots = tuple(sorted(positive + negative))
        self.highest = max(positive, key=lambda r: (sum(r), r))
        self.simples = tuple(
            tuple(int(i == j) for j in range(rank)) for i in range(rank)
        )
        self._index = {r: i for i, r in enumerate(self.roots)}
        self._neg = tuple(
            self._index[tuple(-x for x in r)] for r in self.roots
        )
        self._sum_table: list[list[int]] | None = None
        self._base_data: list[_BaseData] | None = None
        self._base_coords: dict[Base, dict[Root, tuple[int, ...]]] = {}

    def __repr__(self) -> str:
        return f"RootSystem({self.letter}{self.rank})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RootSystem)
            and self.letter == other.letter
            and self.rank == other.rank
            and self.cartan == other.cartan
        )

    def __hash__(self) -> int:
        return hash((self.letter, self.rank, self.cartan))

    @property
    def name(self) -> str:
        return f"{self.letter}{self.rank}"

    def index(self, root: Root) -> int:
        return self._index[root]

    def negative_index(self, i: int) -> int:
        return self._neg[i]

    def fundamental_coords(self, v) -> tuple:
        """Coordinates <v, alpha_i^vee> in the fundamental-weight basis."""
        return tuple(
            sum(a * x for a, x in zip(row, v)) for row in self.cartan
        )

    def sum_table(self) -> list[list[int]]:
        """sum_table[i][j] = index of roots[i]+roots[j], or -1 if not a root."""
        if self._sum_table is None:
            n = len(self.roots)
            table = [[-1] * n for _ in range(n)]
            for i, a in enumerate(self.roots):
                for j, b in enumerate(self.roots):
                    s = tuple(x + y for x, y in zip(a, b))
                    table[i][j] = self._index.get(s, -1)
            self._sum_table = table
        return self._sum_table


@dataclass(frozen=True)
class Base:
    """A base of simple roots, stored sorted for canonical hashing."""

    simples: tuple[Root, ...]

    @staticmethod
    def of(roots) -> "Base":
        return Base(tuple(sorted(roots)))


@dataclass(frozen=True)
class _BaseData:
    base: Base
    perm: tuple[int, ...]  # root index -> index of w(root)
    inv: tuple[int, ...]
    positive_indices: frozenset[int]


@dataclass(frozen=True)
class GammaReport:
    system: str
    passed: bool
    bases_checked: int
    triples_checked: int
    counterexample: tuple[Base, Root, Root] | None


def from_name(name: str) -> RootSystem:
    """Parse a label like "A2" or "G2" and build the system."""
    name = name.strip()
    if len(name) < 2 or not name[1:].isdigit():
        raise ValueError(f"bad root system label {name!r}; expected e.g. A2")
    return build_root_system(name[0], int(name[1:]))


def build_root_system(letter: str, rank: int) -> RootSystem:
    """Construct the irreducible system of the given type and rank."""
    letter = letter.upper()
    if letter not in _RANK_RANGE:
        raise ValueError(f"unknown type letter {letter!r}")
    lo, hi = _RANK_RANGE[letter]
    if not lo <= rank <= hi:
        raise ValueError(f"{letter}{rank} is not a valid irreducible type (rank {lo}..{hi})")
    gram = _gram_matrix(letter, rank)
    cartan = tuple(
        tuple(2 * gram[i][j] // gram[i][i] for j in range(rank)) for i in range(rank)
    )
    symmetrizer = tuple(Fraction(gram[i][i], 2) for i in range(rank))
    rs = _from_cartan(letter, rank, cartan, symmetrizer)
    count = classical_root_count(letter, rank)
    if len(rs.roots) != count:
        raise AssertionError(
            f"{letter}{rank}: generated {len(rs.roots)} roots, expected {count}"
        )
    return rs


def _from_cartan(letter, rank, cartan, symmetrizer) -> RootSystem:
    """Generate positive roots by root-string closure from the simples."""
    simples = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    positive = set(simples)
    level = [list(simples)]
    while level[-1] and len(level) < _GENERATION_LEVEL_CAP:
        nxt = []
        for beta in level[-1]:
            pairing = [sum(a * x for a, x in zip(row, beta)) for row in cartan]
            for i in range(rank):
                p = 0
                cur = tuple(b - s for b, s in zip(beta, simples[i]))
                while cur in positive:
                    p += 1
                    cur = tuple(c - s for c, s in zip(cur, simples[i]))
                if p - pairing[i] >= 1:
                    cand = tuple(b + s for b, s in zip(beta, simples[i]))
                    if cand not in positive:
                        positive.add(cand)
                        nxt.append(cand)
        level.append(nxt)
    if level[-1]:
        raise AssertionError("root generation did not terminate")
    ordered = tuple(sorted(positive, key=lambda r: (sum(r), r)))
    return RootSystem(letter, rank, cartan, symmetrizer, ordered)


def is_root(rs: RootSystem, v) -> bool:
    v = tuple(v)
    return len(v) == rs.rank and v in rs._index


def inner_product(rs: RootSystem, a, b) -> Fraction:
    """Symmetrized Cartan pairing (a, b); short roots have (a, a) = 2."""
    total = Fraction(0)
    for i, ai in enumerate(a):
        if ai:
            di = rs.symmetrizer[i]
            row = rs.cartan[i]
            total += ai * di * sum(row[j] * b[j] for j in range(rs.rank))
    return total


def _reflect(rs: RootSystem, root_idx: int, simple_i: int) -> int:
    root = rs.roots[root_idx]
    pair = sum(rs.cartan[simple_i][j] * root[j] for j in range(rs.rank))
    img = list(root)
    img[simple_i] -= pair
    return rs._index[tuple(img)]


def _enumerate_base_data(rs: RootSystem, max_bases: int = 2000) -> list[_BaseData]:
    """All bases w(Delta) with the permutation realizing w, BFS order."""
    expected = weyl_order(rs.letter, rs.rank)
    if expected > max_bases:
        raise ValueError(
            f"Weyl group of {rs.name} has order {expected} > cap {max_bases}"
        )
    if rs._base_data is not None:
        return rs._base_data
    n = len(rs.roots)
    gens = [
        tuple(_reflect(rs, k, i) for k in range(n)) for i in range(rs.rank)
    ]
    simple_idx = [rs._index[s] for s in rs.simples]
    pos_idx = [rs._index[r] for r in rs.positive]
    identity = tuple(range(n))

    def data_for(perm: tuple[int, ...]) -> _BaseData:
        base = Base.of(rs.roots[perm[i]] for i in simple_idx)
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        return _BaseData(base, perm, tuple(inv), frozenset(perm[i] for i in pos_idx))

    seen = {identity}
    queue = [identity]
    out = [data_for(identity)]
    while queue:
        w = queue.pop(0)
        for g in gens:
            nw = tuple(g[w[i]] for i in range(n))
            if nw not in seen:
                seen.add(nw)
                queue.append(nw)
                out.append(data_for(nw))
    rs._base_data = out
    return out


def enumerate_bases(rs: RootSystem, max_bases: int = 2000) -> list[Base]:
    """All bases of the system: the Weyl orbit of Delta, without duplicates."""
    return [d.base for d in _enumerate_base_data(rs, max_bases)]


def base_coordinates(rs: RootSystem, base: Base) -> dict[Root, tuple[int, ...]]:
    """Integer coordinates of every root with respect to base.simples."""
    if base in rs._base_coords:
        return rs._base_coords[base]
    cols = base.simples
    mat = [[cols[j][i] for j in range(rs.rank)] for i in range(rs.rank)]
    inv = linalg.inverse(mat)
    coords = {}
    for root in rs.roots:
        vec = linalg.mat_vec(inv, root)
        if any(x.denominator != 1 for x in vec):
            raise ValueError("not a base: some root has non-integer coordinates")
        coords[root] = tuple(int(x) for x in vec)
    rs._base_coords[base] = coords
    return coords


def positive_roots_of_base(rs: RootSystem, base: Base) -> frozenset[Root]:
    coords = base_coordinates(rs, base)
    return frozenset(r for r in rs.roots if all(c >= 0 for c in coords[r]))


def is_convex(rs: RootSystem, subset) -> bool:
    """True iff subset equals Phi intersected with its nonnegative cone."""
    return convexity_witness(rs, subset) is None


def convexity_witness(rs: RootSystem, subset) -> Root | None:
    """A root in cone(subset) minus subset, or None when subset is convex."""
    t = {tuple(r) for r in subset}
    gens = sorted(t)
    for root in rs.roots:
        if root in t:
            continue
        if linalg.in_cone(gens, root) is not None:
            return root
    return None


def is_ideal(rs: RootSystem, inner, outer) -> bool:
    """True iff inner is an ideal of outer: sums falling in Phi stay in inner."""
    inner = {tuple(r) for r in inner}
    outer = {tuple(r) for r in outer}
    if not inner <= outer:
        raise ValueError("inner must be a subset of outer")
    for a in inner:
        for b in outer:
            s = tuple(x + y for x, y in zip(a, b))
            if s in rs._index and s not in inner:
                return False
    return True


def minus_alpha_ideal(rs: RootSystem, base: Base, alpha: Root) -> frozenset[Root]:
    """Roots whose alpha-coordinate with respect to base is negative."""
    if alpha not in base.simples:
        raise ValueError(f"{alpha} is not simple in the given base")
    k = base.simples.index(alpha)
    coords = base_coordinates(rs, base)
    return frozenset(r for r in rs.roots if coords[r][k] < 0)


def chain_to_highest_root(rs: RootSystem, base: Base, alpha: Root) -> list[Root]:
    """Root chain alpha = mu_0 < mu_1 < ... < theta_B, steps in the base.

    Returns the lexicographically first chain, where chains are compared
    by their sequences of base-element steps in sorted base order.
    """
    if alpha not in base.simples:
        raise ValueError(f"{alpha} is not simple in the given base")
    coords = base_coordinates(rs, base)
    theta = max(rs.roots, key=lambda r: (sum(coords[r]), r))

    def extend(chain: list[Root]) -> list[Root] | None:
        cur = chain[-1]
        if cur == theta:
            return chain
        for step in base.simples:
            nxt = tuple(c + s for c, s in zip(cur, step))
            if nxt in rs._index:
                found = extend(chain + [nxt])
                if found is not None:
                    return found
        return None

    result = extend([alpha])
    if result is None:
        raise AssertionError("no chain to the highest root; base is corrupt")
    return result


def verify_gamma_lemma(rs: RootSystem, max_bases: int = 2000) -> GammaReport:
    """Exhaustive check: for every base B, simple alpha, and root beta
    outside +-<-alpha>, some gamma in <-alpha> has beta+gamma in <-alpha>.
    """
    n = len(rs.roots)
    triples = 0
    for bd in _enumerate_base_data(rs, max_bases):
        # Coordinates w.r.t. the base w(Delta): row k of the Delta
        # coordinates of w^{-1}(root).
        coords = [rs.roots[bd.inv[i]] for i in range(n)]
        for k in range(rs.rank):
            ideal = {i for i in range(n) if coords[i][k] < 0}
            excluded = ideal | {rs._neg[i] for i in ideal}
            ideal_roots = [rs.roots[i] for i in ideal]
            ideal_set = {rs.roots[i] for i in ideal}
            for b in range(n):
                if b in excluded:
                    continue
                beta = rs.roots[b]
                triples += 1
                ok = False
                for gamma in ideal_roots:
                    s = tuple(x + y for x, y in zip(beta, gamma))
                    if s in ideal_set:
                        ok = True
                        break
                if not ok:
                    alpha = rs.roots[bd.perm[rs._index[rs.simples[k]]]]
                    return GammaReport(rs.name, False, 0, triples, (bd.base, alpha, beta))
    bases = len(_enumerate_base_data(rs, max_bases))
    return GammaReport(rs.name, True, bases, triples, None)
