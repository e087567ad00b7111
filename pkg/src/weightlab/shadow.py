"""T/N partitions of a root system and brute-force lemma verification.

A simple weight module casts a "shadow" on the root system: the set T of
roots acting injectively and the set N of roots acting locally
nilpotently.  This module enumerates all candidate shadows (convex T
with N the complement), filters them through the structural properties
such partitions are known to satisfy, and checks the sum-not-a-root
lemma on every survivor.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import convex, rootsys
from .rootsys import Base, Root, RootSystem


@dataclass(frozen=True)
class TNPartition:
    system: RootSystem
    T: frozenset[Root]
    N: frozenset[Root]
    T_s: frozenset[Root]
    T_a: frozenset[Root]
    N_s: frozenset[Root]
    N_a: frozenset[Root]


@dataclass(frozen=True)
class BBLReport:
    base: Base
    t_s_subsystem: bool
    n_s_subsystem: bool
    n_a_ideal_of_positive: bool
    t_a_ideal_of_negative: bool
    base_meets_t_s_as_base: bool

    @property
    def all_pass(self) -> bool:
        return (
            self.t_s_subsystem
            and self.n_s_subsystem
            and self.n_a_ideal_of_positive
            and self.t_a_ideal_of_negative
            and self.base_meets_t_s_as_base
        )


@dataclass(frozen=True)
class ShadowSummary:
    system: str
    total: int
    filtered: int
    verified: int
    counterexamples: tuple
    sampled: bool = False


def make_partition(rs: RootSystem, T) -> TNPartition:
    """Split Phi as T and its complement; T must be a convex subset."""
    t = frozenset(tuple(r) for r in T)
    for r in t:
        if r not in rs._index:
            raise ValueError(f"{r} is not a root of {rs.name}")
    witness = rootsys.convexity_witness(rs, t)
    if witness is not None:
        raise ValueError(f"T is not convex: {witness} lies in cone(T) but not in T")
    n = frozenset(rs.roots) - t
    neg_t = frozenset(tuple(-x for x in r) for r in t)
    neg_n = frozenset(tuple(-x for x in r) for r in n)
    t_s = t & neg_t
    n_s = n & neg_n
    return TNPartition(rs, t, n, t_s, t - t_s, n_s, n - n_s)


def find_positive_base(p: TNPartition) -> Base | None:
    """First base (in Weyl-orbit BFS order) making every N_a root positive."""
    rs = p.system
    for bd in rootsys._enumerate_base_data(rs):
        positive = {rs.roots[i] for i in bd.positive_indices}
        if p.N_a <= positive:
            return bd.base
    return None


def _closed_under_sums(rs: RootSystem, xs: frozenset[Root]) -> bool:
    for a in xs:
        for b in xs:
            s = tuple(x + y for x, y in zip(a, b))
            if s in rs._index and s not in xs:
                return False
    return True


def check_bbl_properties(p: TNPartition, base: Base | None = None) -> BBLReport:
    """Check the structural properties of module shadows for one base."""
    rs = p.system
    if base is None:
        base = find_positive_base(p)
        if base is None:
            raise ValueError("no base renders N_a positive")
    positive = rootsys.positive_roots_of_base(rs, base)
    negative = frozenset(rs.roots) - positive
    coords = rootsys.base_coordinates(rs, base)
    simple_positions = {b: i for i, b in enumerate(base.simples)}
    in_t_s = {simple_positions[b] for b in base.simples if b in p.T_s}
    spans = all(
        all(c == 0 or i in in_t_s for i, c in enumerate(coords[tau]))
        for tau in p.T_s
    )
    return BBLReport(
        base=base,
        t_s_subsystem=_closed_under_sums(rs, p.T_s),
        n_s_subsystem=_closed_under_sums(rs, p.N_s),
        n_a_ideal_of_positive=rootsys.is_ideal(rs, p.N_a, positive),
        t_a_ideal_of_negative=rootsys.is_ideal(rs, p.T_a, negative),
        base_meets_t_s_as_base=spans,
    )


def verify_sum_not_root(p: TNPartition) -> tuple[bool, tuple[Root, Root] | None]:
    """Check that alpha+beta is never a root for alpha in N_s, beta in T_s."""
    rs = p.system
    for alpha in sorted(p.N_s):
        for beta in sorted(p.T_s):
            s = tuple(x + y for x, y in zip(alpha, beta))
            if s in rs._index:
                return False, (alpha, beta)
    return True, None


def partition_from_mask(rs: RootSystem, mask: int) -> TNPartition:
    t = frozenset(rs.roots[i] for i in range(len(rs.roots)) if mask >> i & 1)
    n = frozenset(rs.roots) - t
    neg_t = frozenset(tuple(-x for x in r) for r in t)
    neg_n = frozenset(tuple(-x for x in r) for r in n)
    t_s = t & neg_t
    n_s = n & neg_n
    return TNPartition(rs, t, n, t_s, t - t_s, n_s, n - n_s)


def enumerate_and_verify(
    rs: RootSystem,
    backend: str = "auto",
    sample: int | None = None,
    seed: int = 0,
) -> ShadowSummary:
    """Run the full shadow battery for one system.

    Enumerates convex subsets T (exhaustively for |Phi| <= 18, by random
    closure sampling otherwise), keeps the partitions that admit a base
    with N_a positive and pass the structural checks, and verifies the
    sum-not-a-root lemma on each.  Counts and any counterexamples are
    returned; the lemma holding means counterexamples stay empty.
    """
    n = len(rs.roots)
    if sample is None:
        masks = convex.enumerate_convex_masks(rs, backend)
        sampled = False
    else:
        witnesses = convex.witness_masks(rs)
        rng = random.Random(seed)
        found = set()
        for _ in range(sample):
            size = rng.randint(0, n)
            bits = rng.sample(range(n), size)
            m = 0
            for b in bits:
                m |= 1 << b
            found.add(convex.cone_closure(rs, m, witnesses))
        masks = sorted(found)
        sampled = True

    neg = rs._neg
    sums = rs.sum_table()
    base_data = rootsys._enumerate_base_data(rs)
    pos_masks = []
    for bd in base_data:
        m = 0
        for i in bd.positive_indices:
            m |= 1 << i
        pos_masks.append(m)
    full = (1 << n) - 1
    simple_idx = [rs._index[s] for s in rs.simples]

    def bits_of(mask: int) -> list[int]:
        return [i for i in range(n) if mask >> i & 1]

    def closed(mask: int) -> bool:
        idx = bits_of(mask)
        for i in idx:
            row = sums[i]
            for j in idx:
                s = row[j]
                if s >= 0 and not mask >> s & 1:
                    return False
        return True

    def ideal(inner: int, outer: int) -> bool:
        for i in bits_of(inner):
            row = sums[i]
            for j in bits_of(outer):
                s = row[j]
                if s >= 0 and not inner >> s & 1:
                    return False
        return True

    total = len(masks)
    filtered = 0
    verified = 0
    counterexamples = []
    for t_mask in masks:
        n_mask = full & ~t_mask
        t_s = 0
        for i in bits_of(t_mask):
            if t_mask >> neg[i] & 1:
                t_s |= 1 << i
        n_s = 0
        for i in bits_of(n_mask):
            if n_mask >> neg[i] & 1:
                n_s |= 1 << i
        t_a = t_mask & ~t_s
        n_a = n_mask & ~n_s

        found_bd = None
        for bd, pm in zip(base_data, pos_masks):
            if n_a & ~pm == 0:
                found_bd = (bd, pm)
                break
        if found_bd is None:
            continue
        bd, pm = found_bd
        if not (closed(t_s) and closed(n_s)):
            continue
        if not (ideal(n_a, pm) and ideal(t_a, full & ~pm)):
            continue
        base_in_t_s = {
            k for k in range(rs.rank) if t_s >> bd.perm[simple_idx[k]] & 1
        }
        spans = True
        for i in bits_of(t_s):
            coords = rs.roots[bd.inv[i]]
            if any(c != 0 and k not in base_in_t_s for k, c in enumerate(coords)):
                spans = False
                break
        if not spans:
            continue

        filtered += 1
        ok = True
        for i in bits_of(n_s):
            row = sums[i]
            for j in bits_of(t_s):
                if row[j] >= 0:
                    ok = False
                    counterexamples.append((t_mask, rs.roots[i], rs.roots[j]))
                    break
            if not ok:
                break
        if ok:
            verified += 1

    return ShadowSummary(rs.name, total, filtered, verified, tuple(counterexamples), sampled)
