"""Fast enumeration of convex root subsets.

A subset T of Phi is convex when no further root lies in the nonnegative
rational cone over T.  By conic Caratheodory, a root rho lies in cone(T)
iff it lies in the cone of some linearly independent S subseteq T with
|S| <= rank and rho not in S.  Enumerating all such "witness" sets once
per root system turns every cone-membership query into a handful of
bitmask tests, which is what makes the 2^|Phi| subset scan feasible.

Two interchangeable kernels walk the subsets:

* ``_convexcore`` (Cython) scans all 2^n bitmasks directly;
* a pure-Python fallback runs a BFS over the closure lattice, visiting
  only the convex subsets themselves.

``benchmarks/bench_convex.py`` compares the two.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from . import linalg
from .rootsys import RootSystem

try:
    from . import _convexcore
except ImportError:  # extension not built; pure fallback takes over
    _convexcore = None

HAVE_COMPILED_KERNEL = _convexcore is not None

_FULL_SCAN_CAP = 18  # 2^18 masks; matches the enumeration resource guard

_witness_cache: dict[RootSystem, list[list[int]]] = {}


def witness_masks(rs: RootSystem) -> list[list[int]]:
    """witness_masks(rs)[r] lists bitmasks S with roots[r] in cone(S).

    Masks are inclusion-minimal, exclude r itself, and have at most
    ``rs.rank`` bits, so ``roots[r] in cone(T)`` for any T not containing
    r is equivalent to some mask being a subset of T's mask.
    """
    cached = _witness_cache.get(rs)
    if cached is not None:
        return cached
    n = len(rs.roots)
    out: list[list[int]] = [[] for _ in range(n)]
    for size in range(2, rs.rank + 1):
        for combo in combinations(range(n), size):
            cols = [rs.roots[i] for i in combo]
            mat = [[cols[j][d] for j in range(size)] for d in range(rs.rank)]
            if linalg.rank(mat) < size:
                continue
            mask = 0
            for i in combo:
                mask |= 1 << i
            for r in range(n):
                if r in combo:
                    continue
                sol = linalg.solve(mat, rs.roots[r])
                if sol is None or any(c <= 0 for c in sol):
                    continue
                if _exact_match(mat, sol, rs.roots[r]):
                    out[r].append(mask)
    for lst in out:
        lst.sort()
    _witness_cache[rs] = out
    return out


def _exact_match(mat, sol, target) -> bool:
    for d, row in enumerate(mat):
        if sum(Fraction(a) * c for a, c in zip(row, sol)) != target[d]:
            return False
    return True


def cone_closure(rs: RootSystem, mask: int, witnesses=None) -> int:
    """Bitmask of cone(mask-subset) intersected with Phi."""
    if witnesses is None:
        witnesses = witness_masks(rs)
    out = mask
    for r in range(len(rs.roots)):
        bit = 1 << r
        if out & bit:
            continue
        for w in witnesses[r]:
            if w & mask == w:
                out |= bit
                break
    return out


def _enumerate_pure(n: int, witnesses) -> list[int]:
    """BFS over the closure lattice; visits each convex subset once."""

    def closure(mask: int) -> int:
        out = mask
        for r in range(n):
            bit = 1 << r
            if out & bit:
                continue
            for w in witnesses[r]:
                if w & mask == w:
                    out |= bit
                    break
        return out

    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for r in range(n):
            bit = 1 << r
            if x & bit:
                continue
            y = closure(x | bit)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return sorted(seen)


def enumerate_convex_masks(rs: RootSystem, backend: str = "auto") -> list[int]:
    """All bitmasks of convex subsets of Phi, ascending.

    backend: "auto" prefers the compiled kernel, "compiled" requires it,
    "pure" forces the fallback.
    """
    n = len(rs.roots)
    if n > _FULL_SCAN_CAP:
        raise ValueError(
            f"{rs.name} has {n} roots; full convex enumeration is capped at {_FULL_SCAN_CAP}"
        )
    witnesses = witness_masks(rs)
    if backend == "compiled" and _convexcore is None:
        raise RuntimeError("compiled kernel requested but weightlab._convexcore is not built")
    if backend not in ("auto", "compiled", "pure"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend != "pure" and _convexcore is not None:
        return _convexcore.enumerate_masks(n, witnesses)
    return _enumerate_pure(n, witnesses)
