"""The admissibility classifier and its growth witnesses.

A tensor of simple factors has uniformly bounded weight multiplicities
exactly when at most one factor is infinite dimensional.  The bounded
side gets an exact bound from the weight convolution; the unbounded side
gets a constructive witness: a family of weights whose multiplicities
grow without bound, verified here by honest enumeration.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import evaluation
from .evaluation import EvaluationDescriptor, InfiniteMultiplicity
from .weightmod import DenseSL2


class Reason(enum.Enum):
    OPPOSITE_DIRECTIONS = "opposite-directions"
    SAME_DIRECTION = "same-direction"
    TWO_INFINITE_FACTORS = "two-infinite-factors"


@dataclass(frozen=True)
class GrowthWitness:
    """weight_family[n] has verified multiplicity >= lower_bound[n]."""

    weight_family: dict[int, tuple[Fraction, ...]]
    lower_bound: dict[int, int]
    checked_up_to: int
    infinite: bool = False


@dataclass(frozen=True)
class Admissible:
    bound: int


@dataclass(frozen=True)
class NotAdmissible:
    reason: Reason
    witness: GrowthWitness


Verdict = Admissible | NotAdmissible


def _exact_bound(d: EvaluationDescriptor) -> int:
    """Largest weight multiplicity, exactly, for <= 1 dense factor.

    With a dense factor present the multiplicity of a weight w is the
    sum of the finite-convolution values over the residue class
    w - mu mod 2; the bound is the larger class total.
    """
    conv = evaluation._finite_convolution(d)
    dense = [m for _, m in d.factors if isinstance(m, DenseSL2)]
    if not dense:
        return max(conv.values())
    classes: dict[int, int] = {}
    for wf, m in conv.items():
        x = wf[0]
        if x.denominator != 1:
            continue  # never on the dense coset: finite weights are integral
        classes[x.numerator % 2] = classes.get(x.numerator % 2, 0) + m
    return max(classes.values())


def classify_admissible(d: EvaluationDescriptor, check_window: int = 30) -> Verdict:
    """Apply the tensor-product admissibility criterion to a descriptor.

    At most one infinite-dimensional factor means admissible, with the
    exact multiplicity bound; otherwise the verdict carries a growth
    witness checked by enumeration up to check_window.
    """
    dense = [m for _, m in d.factors if isinstance(m, DenseSL2)]
    if len(dense) <= 1:
        return Admissible(_exact_bound(d))
    # Dense sl2 factors have both root vectors injective, so the
    # opposite-directions growth family always applies.
    witness = _opposite_witness_for(d, check_window)
    return NotAdmissible(Reason.OPPOSITE_DIRECTIONS, witness)


def _opposite_witness_for(d: EvaluationDescriptor, window: int) -> GrowthWitness:
    dense = [m for _, m in d.factors if isinstance(m, DenseSL2)]
    finite_top = sum(
        (Fraction(m.highest[0]) for _, m in d.factors if not isinstance(m, DenseSL2)),
        Fraction(0),
    )
    target = (sum((m.mu for m in dense), finite_top),)
    family: dict[int, tuple[Fraction, ...]] = {}
    bounds: dict[int, int] = {}
    for n in range(window + 1):
        counted = evaluation.tensor_multiplicity(d, target, window=n)
        count = (
            counted.windowed_count
            if isinstance(counted, InfiniteMultiplicity)
            else counted
        )
        need = 2 * n + 1
        if count < need:
            raise AssertionError(
                f"growth witness failed at window {n}: {count} < {need}"
            )
        family[n] = target
        bounds[n] = need
    return GrowthWitness(family, bounds, window, infinite=True)


def growth_witness_opposite(d1: DenseSL2, d2: DenseSL2, window: int) -> GrowthWitness:
    """Unbounded family at the fixed weight mu1+mu2: pairs (i, m-i).

    The weight space of the two-factor tensor at mu1+mu2 contains
    v_i (x) v_(-i) for every i, so the count within window n is 2n+1.
    """
    target = (d1.mu + d2.mu,)
    family: dict[int, tuple[Fraction, ...]] = {}
    bounds: dict[int, int] = {}
    for n in range(window + 1):
        count = sum(
            1
            for i in range(-n, n + 1)
            for j in range(-n, n + 1)
            if (d1.mu + 2 * i) + (d2.mu + 2 * j) == target[0]
        )
        if count != 2 * n + 1:
            raise AssertionError("opposite-direction enumeration miscounted")
        family[n] = target
        bounds[n] = count
    return GrowthWitness(family, bounds, window, infinite=True)


def growth_witness_same(
    d1: DenseSL2, d2: DenseSL2, n: int
) -> tuple[tuple[Fraction, ...], int]:
    """Weight mu1+mu2+2n and its enumerated count, at least n+1."""
    target = d1.mu + d2.mu + 2 * n
    count = 0
    for ell in range(n + 1):
        w1 = d1.mu + 2 * ell
        w2 = d2.mu + 2 * (n - ell)
        if w1 + w2 == target:
            count += 1
    if count < n + 1:
        raise AssertionError("same-direction enumeration miscounted")
    return (target,), count


def empirical_max_multiplicity(
    d: EvaluationDescriptor, window: int
) -> tuple[tuple[Fraction, ...], int]:
    """Maximal windowed multiplicity and the smallest weight attaining it."""
    conv = evaluation._finite_convolution(d)
    dense = [m for _, m in d.factors if isinstance(m, DenseSL2)]
    for m in dense:
        nxt: dict[tuple, int] = {}
        for wf, c in conv.items():
            for i in range(-window, window + 1):
                w = (wf[0] + m.mu + 2 * i,)
                nxt[w] = nxt.get(w, 0) + c
        conv = nxt
    best = max(conv.values())
    weight = min(w for w, c in conv.items() if c == best)
    return weight, best
