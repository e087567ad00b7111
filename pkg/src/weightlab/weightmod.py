"""Concrete weight-module building blocks.

Two families of simple sl2-or-higher modules appear in evaluation
descriptors: finite-dimensional simples L(lambda), whose weight
multiplicities come out of the Freudenthal recursion, and the dense sl2
family with basis {v_i | i in Z} and action

    h v_i = (mu + 2i) v_i,   f v_i = v_{i-1},   e v_i = tau_i v_{i+1},
    tau_i = tau0 - i*mu - i(i+1).

Weights live in fundamental-weight coordinates: length-rank tuples, a
single entry for sl2.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .rootsys import RootSystem


@dataclass(frozen=True)
class Trivial:
    """The one-dimensional module with zero weight."""


@dataclass(frozen=True)
class FiniteDim:
    system: RootSystem
    highest: tuple[int, ...]

    def __post_init__(self):
        if len(self.highest) != self.system.rank or any(
            not isinstance(c, int) or c < 0 for c in self.highest
        ):
            raise ValueError("highest weight must be dominant integral")


@dataclass(frozen=True)
class DenseSL2:
    mu: Fraction
    tau0: Fraction

    def __post_init__(self):
        object.__setattr__(self, "mu", Fraction(self.mu))
        object.__setattr__(self, "tau0", Fraction(self.tau0))


WeightModule = Trivial | FiniteDim | DenseSL2


@dataclass
class MultiplicityFunction:
    """Sparse weight -> multiplicity map.

    infinite entries are only ever a truncation: when infinite is set, a
    window bound must document which part of the support was enumerated.
    """

    coset: tuple[Fraction, ...]
    entries: dict[tuple, int]
    infinite: bool = False
    window: int | None = None

    def __post_init__(self):
        if self.infinite and self.window is None:
            raise ValueError("infinite multiplicity functions need a window")

    def get(self, weight) -> int:
        return self.entries.get(tuple(weight), 0)

    def total_dimension(self) -> int | None:
        return None if self.infinite else sum(self.entries.values())


def _pairing(symmetrizer, simple_coords, fund_coords) -> int:
    """(x, alpha) for a weight x (fundamental coords) and root alpha."""
    total = 0
    for j, c in enumerate(simple_coords):
        if c:
            total += c * int(symmetrizer[j]) * fund_coords[j]
    return total


def _fold_dominant(rs: RootSystem, v: tuple[int, ...]) -> tuple[int, ...]:
    """Dominant Weyl conjugate, by reflecting away negative coordinates."""
    v = list(v)
    while True:
        k = next((i for i, x in enumerate(v) if x < 0), None)
        if k is None:
            return tuple(v)
        vk = v[k]
        for i in range(rs.rank):
            v[i] -= vk * rs.cartan[i][k]


def _antidominant(rs: RootSystem, v: tuple[int, ...]) -> tuple[int, ...]:
    v = list(v)
    while True:
        k = next((i for i, x in enumerate(v) if x > 0), None)
        if k is None:
            return tuple(v)
        vk = v[k]
        for i in range(rs.rank):
            v[i] -= vk * rs.cartan[i][k]


def _to_simple_coords(rs: RootSystem, fund: tuple[int, ...]) -> tuple[int, ...]:
    sol = linalg.solve([list(row) for row in rs.cartan], fund)
    if sol is None or any(x.denominator != 1 for x in sol):
        raise ValueError("weight difference is not in the root lattice")
    return tuple(int(x) for x in sol)


def weyl_orbit(rs: RootSystem, v: tuple[int, ...]) -> set[tuple[int, ...]]:
    seen = {tuple(v)}
    stack = [tuple(v)]
    while stack:
        w = stack.pop()
        for k in range(rs.rank):
            if w[k] == 0:
                continue
            img = tuple(
                w[i] - w[k] * rs.cartan[i][k] for i in range(rs.rank)
            )
            if img not in seen:
                seen.add(img)
                stack.append(img)
    return seen


_freudenthal_cache: dict[tuple, MultiplicityFunction] = {}
_cache_lock = threading.Lock()


def freudenthal(rs: RootSystem, highest) -> MultiplicityFunction:
    """Exact weight multiplicities of the simple module L(highest).

    Implements the Freudenthal recursion on dominant weights (folding
    arguments back into the dominant chamber) and expands Weyl orbits to
    fill in the full, saturated support.  All arithmetic is integral.
    """
    lam = tuple(int(c) for c in highest)
    if len(lam) != rs.rank or any(Fraction(c) != int(c) or c < 0 for c in highest):
        raise ValueError("highest weight must be dominant integral")
    key = (rs, lam)
    with _cache_lock:
        hit = _freudenthal_cache.get(key)
    if hit is not None:
        return hit

    sym = rs.symmetrizer
    pos_simple = rs.positive
    pos_fund = [rs.fundamental_coords(a) for a in pos_simple]
    rho2 = tuple(x + 2 for x in lam)  # lam + 2*rho in fundamental coords

    kmax = _to_simple_coords(
        rs, tuple(a - b for a, b in zip(lam, _antidominant(rs, lam)))
    )

    # simple-root coordinates of lam - mu, per dominant mu in the box
    dominant: dict[tuple[int, ...], tuple[int, ...]] = {}

    def descend(idx: int, kvec: list[int], fund: list[int]):
        if idx == rs.rank:
            if all(x >= 0 for x in fund):
                dominant[tuple(fund)] = tuple(kvec)
            return
        alpha_f = rs.fundamental_coords(
            tuple(int(i == idx) for i in range(rs.rank))
        )
        for k in range(kmax[idx] + 1):
            descend(
                idx + 1,
                kvec + [k],
                [x - k * a for x, a in zip(fund, alpha_f)],
            )

    descend(0, [], list(lam))

    mult: dict[tuple[int, ...], int] = {}

    def mult_of(fund: tuple[int, ...]) -> int:
        dom = _fold_dominant(rs, fund)
        if dom not in dominant:
            return 0
        return mult_dom(dom)

    def mult_dom(mu: tuple[int, ...]) -> int:
        if mu == lam:
            return 1
        got = mult.get(mu)
        if got is not None:
            return got
        kvec = dominant[mu]
        numer = 0
        for alpha_s, alpha_f in zip(pos_simple, pos_fund):
            nu = list(mu)
            knu = list(kvec)
            while True:
                nu = [x + a for x, a in zip(nu, alpha_f)]
                knu = [x - a for x, a in zip(knu, alpha_s)]
                if any(x < 0 for x in knu):
                    break
                m = mult_of(tuple(nu))
                if m == 0:
                    break
                numer += m * _pairing(sym, alpha_s, nu)
        denom = sum(
            k * int(sym[i]) * (mu[i] + rho2[i])
            for i, k in enumerate(kvec)
        )
        value, rem = divmod(2 * numer, denom)
        if rem:
            raise AssertionError("Freudenthal recursion produced a non-integer")
        mult[mu] = value
        return value

    entries: dict[tuple, int] = {}
    for mu in sorted(dominant, reverse=True):
        m = mult_dom(mu)
        if m > 0:
            for w in weyl_orbit(rs, mu):
                entries[w] = m

    result = MultiplicityFunction(
        coset=tuple(Fraction(0) for _ in range(rs.rank)), entries=entries
    )
    with _cache_lock:
        _freudenthal_cache[key] = result
    return result


def weyl_dimension(rs: RootSystem, highest) -> int:
    """dim L(highest) by the Weyl product formula; the Freudenthal oracle."""
    lam = tuple(int(c) for c in highest)
    if len(lam) != rs.rank or any(Fraction(c) != int(c) or c < 0 for c in highest):
        raise ValueError("highest weight must be dominant integral")
    sym = rs.symmetrizer
    num = 1
    den = 1
    lam_rho = tuple(x + 1 for x in lam)
    rho = tuple(1 for _ in lam)
    for alpha in rs.positive:
        num *= _pairing(sym, alpha, lam_rho)
        den *= _pairing(sym, alpha, rho)
    q, r = divmod(num, den)
    if r:
        raise AssertionError("Weyl dimension product is not an integer")
    return q


def dense_tau(mu, tau0, i: int) -> Fraction:
    return Fraction(tau0) - i * Fraction(mu) - i * (i + 1)


def dense_action(mu, tau0, generator: str, i: int) -> tuple[Fraction, int]:
    """Coefficient and target index of e, f, or h applied to v_i."""
    if generator == "h":
        return Fraction(mu) + 2 * i, i
    if generator == "e":
        return dense_tau(mu, tau0, i), i + 1
    if generator == "f":
        return Fraction(1), i - 1
    raise ValueError(f"unknown sl2 generator {generator!r}")


def is_simple_dense(mu, tau0) -> bool:
    """True iff tau_i never vanishes at an integer index.

    tau_i = 0 is the quadratic i^2 + (mu+1) i - tau0 = 0; the module is
    simple exactly when it has no integer root.
    """
    mu, tau0 = Fraction(mu), Fraction(tau0)
    disc = (mu + 1) ** 2 + 4 * tau0
    if disc < 0:
        return True
    num, den = disc.numerator, disc.denominator
    rn, rd = _isqrt_exact(num), _isqrt_exact(den)
    if rn is None or rd is None:
        return True
    sqrt = Fraction(rn, rd)
    for sign in (1, -1):
        root = (-(mu + 1) + sign * sqrt) / 2
        if root.denominator == 1:
            return False
    return True


def _isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = int(n**0.5)
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand * cand == n:
            return cand
    return None


def casimir_invariant(mu, tau0) -> Fraction:
    """Scalar of ef + fe + h^2/2 on the dense family: 2*tau0 + mu + mu^2/2."""
    mu, tau0 = Fraction(mu), Fraction(tau0)
    return 2 * tau0 + mu + mu * mu / 2


def verify_sl2_relations(mu, tau0, window: int) -> bool:
    """Check [h,e]=2e, [h,f]=-2f, [e,f]=h on v_i for |i| <= window, exactly."""
    if window < 1:
        raise ValueError("window must be >= 1")
    for i in range(-window, window + 1):
        he, ihe = _compose(mu, tau0, "h", "e", i)
        eh, ieh = _compose(mu, tau0, "e", "h", i)
        ce, ice = dense_action(mu, tau0, "e", i)
        if ihe != ieh or ihe != ice or he - eh != 2 * ce:
            return False
        hf, ihf = _compose(mu, tau0, "h", "f", i)
        fh, ifh = _compose(mu, tau0, "f", "h", i)
        cf, icf = dense_action(mu, tau0, "f", i)
        if ihf != ifh or ihf != icf or hf - fh != -2 * cf:
            return False
        ef, ief = _compose(mu, tau0, "e", "f", i)
        fe, ife = _compose(mu, tau0, "f", "e", i)
        ch, ich = dense_action(mu, tau0, "h", i)
        if ief != ife or ief != ich or ef - fe != ch:
            return False
    return True


def _compose(mu, tau0, outer: str, inner: str, i: int) -> tuple[Fraction, int]:
    c1, j = dense_action(mu, tau0, inner, i)
    c2, k = dense_action(mu, tau0, outer, j)
    return c1 * c2, k


def is_infinite(module: WeightModule) -> bool:
    return isinstance(module, DenseSL2)


def dimension(module: WeightModule) -> int | None:
    """Module dimension; None for the infinite dense family."""
    if isinstance(module, Trivial):
        return 1
    if isinstance(module, FiniteDim):
        return weyl_dimension(module.system, module.highest)
    return None


def weight_support(module: WeightModule, rank: int) -> dict[tuple, int]:
    """Full weight -> multiplicity table; finite modules only."""
    if isinstance(module, Trivial):
        return {tuple(0 for _ in range(rank)): 1}
    if isinstance(module, FiniteDim):
        return dict(freudenthal(module.system, module.highest).entries)
    raise ValueError("the dense family has infinite support")


def multiplicity(module: WeightModule, weight) -> int:
    """Multiplicity of one weight (fundamental coordinates)."""
    weight = tuple(Fraction(w) for w in weight)
    if isinstance(module, Trivial):
        return 1 if all(w == 0 for w in weight) else 0
    if isinstance(module, FiniteDim):
        if len(weight) != module.system.rank:
            raise ValueError("weight has the wrong length for this system")
        if any(w.denominator != 1 for w in weight):
            return 0
        return freudenthal(module.system, module.highest).get(
            tuple(int(w) for w in weight)
        )
    if len(weight) != 1:
        raise ValueError("dense sl2 weights are single coordinates")
    step = weight[0] - module.mu
    return 1 if step.denominator == 1 and step.numerator % 2 == 0 else 0
