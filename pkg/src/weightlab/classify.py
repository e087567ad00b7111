"""Canonical labels and isomorphism testing for evaluation descriptors.

Isomorphism classes correspond to finitely supported maps from points to
module classes: sorting the support and replacing each factor by an
isomorphism invariant gives a canonical form.  For the dense sl2 family
the invariant is the weight coset mod 2 together with the Casimir
scalar, validated against an explicit basis-intertwiner search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import weightmod
from .evaluation import EvaluationDescriptor, Point
from .weightmod import DenseSL2, FiniteDim


@dataclass(frozen=True)
class FiniteClass:
    highest: tuple[int, ...]


@dataclass(frozen=True)
class DenseClass:
    coset: Fraction  # representative of mu mod 2 in [0, 2)
    casimir: Fraction


IsoClassLabel = FiniteClass | DenseClass


@dataclass(frozen=True)
class PsiMap:
    support: tuple[tuple[Point, IsoClassLabel], ...]


def dense_label(module: DenseSL2) -> DenseClass:
    coset = module.mu - 2 * math.floor(module.mu / 2)
    return DenseClass(coset, weightmod.casimir_invariant(module.mu, module.tau0))


def canonical_form(d: EvaluationDescriptor) -> PsiMap:
    """Sorted support with factor modules replaced by class labels."""
    support = []
    for point, module in d.factors:
        if isinstance(module, FiniteDim):
            label: IsoClassLabel = FiniteClass(module.highest)
        else:
            label = dense_label(module)
        support.append((point, label))
    support.sort(key=lambda pl: pl[0].coords)
    return PsiMap(tuple(support))


def is_isomorphic(d1: EvaluationDescriptor, d2: EvaluationDescriptor) -> bool:
    """Compare canonical forms; descriptors must share ring and system."""
    if d1.ring != d2.ring:
        raise ValueError("descriptors live over different rings")
    if d1.system != d2.system:
        raise ValueError("descriptors have different underlying simple algebras")
    return canonical_form(d1) == canonical_form(d2)


def dense_iso_oracle(m1: DenseSL2, m2: DenseSL2, window: int) -> bool:
    """Search index shifts intertwining the two dense modules exactly.

    v_i -> w_(i+s) intertwines f for free; it intertwines h iff
    mu1 = mu2 + 2s and e iff tau1_i = tau2_(i+s) on the whole window.
    Independent of the (coset, casimir) labels by construction.
    """
    for s in range(-window, window + 1):
        if m1.mu != m2.mu + 2 * s:
            continue
        if all(
            weightmod.dense_tau(m1.mu, m1.tau0, i)
            == weightmod.dense_tau(m2.mu, m2.tau0, i + s)
            for i in range(-window, window + 1)
        ):
            return True
    return False


def psi_map_to_json(psi: PsiMap) -> dict:
    support = []
    for point, label in psi.support:
        if isinstance(label, FiniteClass):
            lab = {"kind": "finite", "lambda": list(label.highest)}
        else:
            lab = {
                "kind": "dense",
                "coset": str(label.coset),
                "casimir": str(label.casimir),
            }
        support.append({"point": [str(c) for c in point.coords], "label": lab})
    return {"support": support}
