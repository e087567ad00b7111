"""Universal central extension data for sl2 tensor a finite algebra.

The center is the quotient (S (x) S)/Q with Q spanned by the symmetric
and cyclic relations; for finite-dimensional S it is computed by exact
rank over the rationals.  The extended bracket

    [x(x)a + z1, y(x)b + z2] = [x,y](x)(ab) + kappa(x,y) <a,b>

is implemented over sl2, whose Killing form has kappa(e,f) = 4 and
kappa(h,h) = 8.  An independent cross-check for the center's dimension
comes from the Kaehler-differential presentation (Omega^1 modulo exact
differentials), computed by a separate rank.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import evaluation, linalg
from .evaluation import EvaluationDescriptor

_SL2_BRACKET = {
    ("e", "f"): (("h", 1),),
    ("f", "e"): (("h", -1),),
    ("h", "e"): (("e", 2),),
    ("e", "h"): (("e", -2),),
    ("h", "f"): (("f", -2),),
    ("f", "h"): (("f", 2),),
}

_KILLING = {("e", "f"): 4, ("f", "e"): 4, ("h", "h"): 8}


@dataclass(frozen=True)
class FiniteAlgebra:
    """Commutative associative unital algebra by structure constants.

    table[i][j] holds the coordinates of e_i * e_j in the basis; unit
    holds the coordinates of 1.  Validation is separate so that corrupt
    tables can still be probed by the Jacobi checker.
    """

    labels: tuple[str, ...]
    table: tuple[tuple[tuple[Fraction, ...], ...], ...]
    unit: tuple[Fraction, ...]

    @property
    def dim(self) -> int:
        return len(self.labels)

    def product(self, a, b) -> tuple[Fraction, ...]:
        d = self.dim
        out = [Fraction(0)] * d
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                if cb == 0:
                    continue
                for k, m in enumerate(self.table[i][j]):
                    if m:
                        out[k] += ca * cb * m
        return tuple(out)

    def basis_vector(self, i: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(j == i)) for j in range(self.dim))


def finite_algebra(labels, table, unit) -> FiniteAlgebra:
    labels = tuple(labels)
    d = len(labels)
    tab = tuple(
        tuple(tuple(Fraction(x) for x in table[i][j]) for j in range(d))
        for i in range(d)
    )
    return FiniteAlgebra(labels, tab, tuple(Fraction(x) for x in unit))


def validate_algebra(a: FiniteAlgebra) -> None:
    """Raise unless the table is commutative, associative, and unital."""
    d = a.dim
    for i in range(d):
        for j in range(d):
            if a.table[i][j] != a.table[j][i]:
                raise ValueError(f"not commutative at basis pair ({i}, {j})")
    for i in range(d):
        ei = a.basis_vector(i)
        if a.product(a.unit, ei) != ei:
            raise ValueError(f"unit fails on basis element {i}")
    for i in range(d):
        for j in range(d):
            for k in range(d):
                left = a.product(a.table[i][j], a.basis_vector(k))
                right = a.product(a.basis_vector(i), a.table[j][k])
                if left != right:
                    raise ValueError(f"not associative at triple ({i}, {j}, {k})")


def truncated_polynomial_algebra(m: int) -> FiniteAlgebra:
    """k[t]/(t^m) in the basis 1, t, ..., t^(m-1)."""
    labels = tuple("1" if i == 0 else f"t^{i}" if i > 1 else "t" for i in range(m))
    table = [
        [
            tuple(Fraction(int(k == i + j)) for k in range(m))
            for j in range(m)
        ]
        for i in range(m)
    ]
    unit = tuple(Fraction(int(i == 0)) for i in range(m))
    return FiniteAlgebra(labels, tuple(tuple(r) for r in table), unit)


def product_algebra(m: int) -> FiniteAlgebra:
    """k^m in the idempotent basis."""
    labels = tuple(f"e{i+1}" for i in range(m))
    table = [
        [
            tuple(Fraction(int(i == j and k == i)) for k in range(m))
            for j in range(m)
        ]
        for i in range(m)
    ]
    unit = tuple(Fraction(1) for _ in range(m))
    return FiniteAlgebra(labels, tuple(tuple(r) for r in table), unit)


def double_cover_algebra() -> FiniteAlgebra:
    """k[x]/(x^2 - 1), isomorphic to k x k."""
    return finite_algebra(
        ("1", "x"), [[(1, 0), (0, 1)], [(0, 1), (1, 0)]], (1, 0)
    )


def fat_point_algebra() -> FiniteAlgebra:
    """k[x,y]/(x^2, xy, y^2): the center does not vanish here."""
    z = (0, 0, 0)
    return finite_algebra(
        ("1", "x", "y"),
        [[(1, 0, 0), (0, 1, 0), (0, 0, 1)], [(0, 1, 0), z, z], [(0, 0, 1), z, z]],
        (1, 0, 0),
    )


@dataclass(frozen=True)
class CentralSpace:
    """(S (x) S)/Q with an explicit projection to quotient coordinates."""

    algebra: FiniteAlgebra
    quotient_dim: int
    _rows: tuple[tuple[Fraction, ...], ...]  # RREF of the relation span
    _pivots: tuple[int, ...]
    _free: tuple[int, ...]

    def project(self, vec) -> tuple[Fraction, ...]:
        v = [Fraction(x) for x in vec]
        for row, p in zip(self._rows, self._pivots):
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return tuple(v[c] for c in self._free)

    def pair(self, r, s) -> tuple[Fraction, ...]:
        """Quotient coordinates of <r, s> for algebra elements r, s."""
        d = self.algebra.dim
        vec = [Fraction(0)] * (d * d)
        for i, cr in enumerate(r):
            if cr == 0:
                continue
            for j, cs in enumerate(s):
                if cs:
                    vec[i * d + j] += cr * cs
        return self.project(vec)

    def zero(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(0) for _ in range(self.quotient_dim))


def central_space(a: FiniteAlgebra) -> CentralSpace:
    """Compute (S (x) S)/Q by exact rank over the rationals."""
    validate_algebra(a)
    d = a.dim
    relations: list[list[Fraction]] = []
    for i in range(d):
        for j in range(i, d):
            row = [Fraction(0)] * (d * d)
            row[i * d + j] += 1
            row[j * d + i] += 1
            relations.append(row)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                row = [Fraction(0)] * (d * d)
                for m, c in enumerate(a.table[i][j]):
                    if c:
                        row[m * d + k] += c
                for m, c in enumerate(a.table[j][k]):
                    if c:
                        row[m * d + i] += c
                for m, c in enumerate(a.table[k][i]):
                    if c:
                        row[m * d + j] += c
                if any(x != 0 for x in row):
                    relations.append(row)
    red, pivots = linalg.rref(relations)
    rows = tuple(tuple(r) for r in red[: len(pivots)])
    free = tuple(c for c in range(d * d) if c not in set(pivots))
    return CentralSpace(a, len(free), rows, tuple(pivots), free)


def kaehler_quotient_dim(a: FiniteAlgebra) -> int:
    """dim of Omega^1 modulo exact differentials; the center's oracle.

    Presents Omega^1 on generators e_b de_k with the Leibniz relations
    multiplied through by every basis element, then quotients by the
    span of the d(e_k).
    """
    validate_algebra(a)
    d = a.dim
    rows: list[list[Fraction]] = []

    def entry(b: int, k: int) -> int:
        return b * d + k

    for amul in range(d):
        ea = a.basis_vector(amul)
        for i in range(d):
            for j in range(i, d):
                row = [Fraction(0)] * (d * d)
                for k, c in enumerate(a.table[i][j]):
                    if c:
                        for b, u in enumerate(ea):
                            if u:
                                row[entry(b, k)] += c * u
                prod_ai = a.product(ea, a.basis_vector(i))
                prod_aj = a.product(ea, a.basis_vector(j))
                for b, c in enumerate(prod_ai):
                    if c:
                        row[entry(b, j)] -= c
                for b, c in enumerate(prod_aj):
                    if c:
                        row[entry(b, i)] -= c
                if any(x != 0 for x in row):
                    rows.append(row)
    for k in range(d):
        row = [Fraction(0)] * (d * d)
        for b, u in enumerate(a.unit):
            if u:
                row[entry(b, k)] += u
        rows.append(row)
    return d * d - linalg.rank(rows)


@dataclass(frozen=True)
class UcexElement:
    """Element of (sl2 (x) S) + <S,S>: g-part plus central coordinates."""

    space: CentralSpace
    g_part: tuple[tuple[tuple[str, int], Fraction], ...]
    central: tuple[Fraction, ...]

    def g_dict(self) -> dict[tuple[str, int], Fraction]:
        return dict(self.g_part)

    def is_zero(self) -> bool:
        return not self.g_part and all(c == 0 for c in self.central)

    def __add__(self, other: "UcexElement") -> "UcexElement":
        terms = self.g_dict()
        for key, c in other.g_part:
            v = terms.get(key, Fraction(0)) + c
            if v == 0:
                terms.pop(key, None)
            else:
                terms[key] = v
        central = tuple(x + y for x, y in zip(self.central, other.central))
        return UcexElement(self.space, tuple(sorted(terms.items())), central)


def tensor_element(cs: CentralSpace, generator: str, coeffs) -> UcexElement:
    """x (x) a for an sl2 generator tag and algebra coordinates."""
    if generator not in ("e", "h", "f"):
        raise ValueError(f"unknown sl2 generator {generator!r}")
    terms = tuple(
        ((generator, i), Fraction(c)) for i, c in enumerate(coeffs) if Fraction(c) != 0
    )
    return UcexElement(cs, terms, cs.zero())


def central_element(cs: CentralSpace, r, s) -> UcexElement:
    """The central element <r, s>."""
    return UcexElement(cs, (), cs.pair(r, s))


def extended_bracket(x: UcexElement, y: UcexElement) -> UcexElement:
    """[x (x) a + z, y (x) b + z'] = [x,y] (x) ab + kappa(x,y) <a,b>."""
    cs = x.space
    a = cs.algebra
    terms: dict[tuple[str, int], Fraction] = {}
    central = list(cs.zero())
    for (g1, i), c1 in x.g_part:
        for (g2, j), c2 in y.g_part:
            coeff = c1 * c2
            prod = a.table[i][j]
            for g3, c3 in _SL2_BRACKET.get((g1, g2), ()):
                for k, m in enumerate(prod):
                    if m:
                        key = (g3, k)
                        v = terms.get(key, Fraction(0)) + coeff * c3 * m
                        if v == 0:
                            terms.pop(key, None)
                        else:
                            terms[key] = v
            kappa = _KILLING.get((g1, g2), 0)
            if kappa:
                pair = cs.pair(a.basis_vector(i), a.basis_vector(j))
                for t, value in enumerate(pair):
                    central[t] += coeff * kappa * value
    return UcexElement(cs, tuple(sorted(terms.items())), tuple(central))


def verify_jacobi(
    a: FiniteAlgebra, samples: int, seed: int = 0
) -> tuple[bool, tuple | None]:
    """Jacobi identity on random basis triples of the extension.

    The algebra is deliberately not validated first, so corrupt tables
    surface as Jacobi failures with a witness triple.
    """
    cs = _central_space_unchecked(a)
    rng = random.Random(seed)
    gens = ("e", "h", "f")
    for _ in range(samples):
        triple = tuple(
            (rng.choice(gens), rng.randrange(a.dim)) for _ in range(3)
        )
        xs = [
            tensor_element(cs, g, a.basis_vector(i)) for g, i in triple
        ]
        total = (
            extended_bracket(extended_bracket(xs[0], xs[1]), xs[2])
            + extended_bracket(extended_bracket(xs[1], xs[2]), xs[0])
            + extended_bracket(extended_bracket(xs[2], xs[0]), xs[1])
        )
        if not total.is_zero():
            return False, triple
    return True, None


def _central_space_unchecked(a: FiniteAlgebra) -> CentralSpace:
    d = a.dim
    relations: list[list[Fraction]] = []
    for i in range(d):
        for j in range(i, d):
            row = [Fraction(0)] * (d * d)
            row[i * d + j] += 1
            row[j * d + i] += 1
            relations.append(row)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                row = [Fraction(0)] * (d * d)
                for m, c in enumerate(a.table[i][j]):
                    if c:
                        row[m * d + k] += c
                for m, c in enumerate(a.table[j][k]):
                    if c:
                        row[m * d + i] += c
                for m, c in enumerate(a.table[k][i]):
                    if c:
                        row[m * d + j] += c
                if any(x != 0 for x in row):
                    relations.append(row)
    red, pivots = linalg.rref(relations)
    rows = tuple(tuple(r) for r in red[: len(pivots)])
    free = tuple(c for c in range(d * d) if c not in set(pivots))
    return CentralSpace(a, len(free), rows, tuple(pivots), free)


def trace_identity_check(
    d: EvaluationDescriptor, r, s, weight, window: int | None = None
) -> bool:
    """Trace of [(h (x) r), (h (x) s)] on one weight space is exactly zero.

    The commutator equals a central element of the extension, which acts
    trivially on evaluation modules; computing the matrix through the
    explicit action and taking its trace makes that checkable.
    """
    basis = evaluation.basis_at_weight(d, weight)
    if window is not None:
        dense_pos = [
            i
            for i, (_, m) in enumerate(d.factors)
            if not hasattr(m, "highest")
        ]
        basis = [
            b
            for b in basis
            if all(abs(b[i]) <= window for i in dense_pos)
        ]
    index = {b: i for i, b in enumerate(basis)}
    n = len(basis)

    def matrix_of(poly) -> list[list[Fraction]]:
        mat = [[Fraction(0)] * n for _ in range(n)]
        for col, b in enumerate(basis):
            for target, c in evaluation.evaluation_action(d, "h", poly, b).items():
                row = index.get(target)
                if row is None:
                    raise AssertionError("weight-zero operator left the weight space")
                mat[row][col] += c
        return mat

    mr = matrix_of(r)
    ms = matrix_of(s)

    def matmul(a, b):
        return [
            [
                sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0))
                for j in range(n)
            ]
            for i in range(n)
        ]

    comm_trace = Fraction(0)
    rs_m = matmul(mr, ms)
    sr_m = matmul(ms, mr)
    for i in range(n):
        comm_trace += rs_m[i][i] - sr_m[i][i]
    return comm_trace == 0


def algebra_from_json(obj: dict) -> FiniteAlgebra:
    labels = tuple(obj["labels"])
    table = [
        [[Fraction(str(x)) for x in cell] for cell in row] for row in obj["table"]
    ]
    unit = [Fraction(str(x)) for x in obj["unit"]]
    return finite_algebra(labels, table, unit)


def killing_form_from_adjoint() -> dict[tuple[str, str], int]:
    """Recompute the sl2 Killing values from the adjoint representation."""
    basis = ("e", "h", "f")

    def ad(g: str) -> list[list[int]]:
        mat = [[0] * 3 for _ in range(3)]
        for col, x in enumerate(basis):
            for g3, c in _SL2_BRACKET.get((g, x), ()):
                mat[basis.index(g3)][col] += c
        return mat

    out = {}
    for g1 in basis:
        for g2 in basis:
            m1, m2 = ad(g1), ad(g2)
            out[(g1, g2)] = sum(
                m1[i][k] * m2[k][i] for i in range(3) for k in range(3)
            )
    return out
