"""Evaluation modules: points of a coordinate ring acting on tensor factors.

An evaluation descriptor is a list of (point, module) pairs over one
ring and one simple Lie algebra: the module obtained by evaluating each
current-algebra element at the points and acting factorwise.  The action
itself is implemented for sl2, where both in-scope module families have
explicit basis coefficients; weight multiplicities of the tensor product
are computed by exact sparse convolution for any rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import poly, weightmod
from .poly import Polynomial
from .rootsys import RootSystem
from .weightmod import DenseSL2, FiniteDim, Trivial, WeightModule

MAX_FACTORS = 8


@dataclass(frozen=True)
class CoordinateRing:
    num_vars: int
    ideal_gens: tuple[Polynomial, ...]
    var_names: tuple[str, ...]

    def parse(self, text: str) -> Polynomial:
        return poly.parse(text, self.var_names)


def coordinate_ring(num_vars: int, ideal=(), var_names=None) -> CoordinateRing:
    names = tuple(var_names) if var_names else poly.default_names(num_vars)
    if len(names) != num_vars:
        raise ValueError("need one name per variable")
    gens = tuple(
        g if isinstance(g, Polynomial) else poly.parse(g, names) for g in ideal
    )
    return CoordinateRing(num_vars, gens, names)


@dataclass(frozen=True)
class Point:
    coords: tuple[Fraction, ...]


def validate_point(ring: CoordinateRing, coords) -> Point:
    """Check that every ideal generator vanishes at the coordinates."""
    c = tuple(Fraction(x) for x in coords)
    if len(c) != ring.num_vars:
        raise ValueError(f"expected {ring.num_vars} coordinates, got {len(c)}")
    for g in ring.ideal_gens:
        value = g.evaluate(c)
        if value != 0:
            raise ValueError(
                f"not a point of the ring: {g.to_string(ring.var_names)} "
                f"evaluates to {value} at {tuple(map(str, c))}"
            )
    return Point(c)


def eval_at(ring: CoordinateRing, s, point: Point) -> Fraction:
    """Residue of s at a point; well defined on cosets of the ideal."""
    if isinstance(s, str):
        s = ring.parse(s)
    return s.evaluate(point.coords)


def _monomials_of_degree_at_most(nvars: int, degree: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slots - 1)

    for d in range(degree + 1):
        exact: list[tuple[int, ...]] = []

        def rec_exact(prefix, remaining, slots):
            if slots == 1:
                exact.append(tuple(prefix + [remaining]))
                return
            for e in range(remaining + 1):
                rec_exact(prefix + [e], remaining - e, slots - 1)

        rec_exact([], d, nvars)
        out.extend(sorted(exact, reverse=True))
    return out


def crt_idempotents(
    ring: CoordinateRing, points: list[Point], degree_cap: int | None = None
) -> list[Polynomial]:
    """Polynomials s_i with s_i(p_j) = delta_ij, by exact interpolation.

    The monomial degree is raised until the evaluation matrix has full
    row rank; degree r-1 always suffices for r distinct points.
    """
    r = len(points)
    if r == 0:
        return []
    seen = set()
    for p in points:
        if p.coords in seen:
            raise ValueError(f"points must be pairwise distinct: {p.coords}")
        seen.add(p.coords)
    cap = degree_cap if degree_cap is not None else max(r - 1, 0)
    from . import linalg

    for degree in range(cap + 1):
        monos = _monomials_of_degree_at_most(ring.num_vars, degree)
        rows = [
            [
                Polynomial(ring.num_vars, {m: Fraction(1)}).evaluate(p.coords)
                for m in monos
            ]
            for p in points
        ]
        sols = []
        for i in range(r):
            target = [Fraction(int(j == i)) for j in range(r)]
            sol = linalg.solve(rows, target)
            if sol is None:
                break
            sols.append(sol)
        if len(sols) == r:
            return [
                Polynomial(ring.num_vars, dict(zip(monos, sol))) for sol in sols
            ]
    raise ValueError(
        f"no interpolating idempotents up to degree {cap}; raise degree_cap"
    )


@dataclass(frozen=True)
class EvaluationDescriptor:
    """Pairwise-distinct points and the module each copy of g acts by.

    Trivial tensor factors are dropped on construction; dense factors
    are only allowed over sl2 and must be simple.
    """

    ring: CoordinateRing
    system: RootSystem
    factors: tuple[tuple[Point, WeightModule], ...]

    def __post_init__(self):
        kept = []
        for point, module in self.factors:
            if isinstance(module, Trivial):
                continue
            if isinstance(module, FiniteDim):
                if all(c == 0 for c in module.highest):
                    continue
                if module.system != self.system:
                    raise ValueError("factor system differs from the descriptor system")
            elif isinstance(module, DenseSL2):
                if self.system.name != "A1":
                    raise ValueError("dense factors only exist over A1")
                if not weightmod.is_simple_dense(module.mu, module.tau0):
                    raise ValueError(
                        f"dense factor (mu={module.mu}, tau0={module.tau0}) is not simple"
                    )
            else:
                raise ValueError(f"unsupported module kind {module!r}")
            kept.append((point, module))
        if len(self.factors) > MAX_FACTORS:
            raise ValueError(f"at most {MAX_FACTORS} factors supported")
        pts = [p.coords for p, _ in kept]
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        object.__setattr__(self, "factors", tuple(kept))

    def residues(self, s) -> list[Fraction]:
        return [eval_at(self.ring, s, p) for p, _ in self.factors]

    def dense_count(self) -> int:
        return sum(1 for _, m in self.factors if isinstance(m, DenseSL2))


@dataclass(frozen=True)
class InfiniteMultiplicity:
    """Marker for an infinite weight space, with the windowed evidence."""

    windowed_count: int
    window: int
    witness: str


def _sl2_factor_action(
    module: WeightModule, generator: str, index: int
) -> tuple[Fraction, int] | None:
    """(coefficient, new index) or None when the generator kills the vector."""
    if isinstance(module, DenseSL2):
        coeff, j = weightmod.dense_action(module.mu, module.tau0, generator, index)
        return (coeff, j) if coeff != 0 else None
    lam = module.highest[0]
    if not 0 <= index <= lam:
        raise ValueError(f"basis index {index} out of range for L({lam})")
    if generator == "h":
        return Fraction(lam - 2 * index), index
    if generator == "e":
        if index == 0:
            return None
        return Fraction(index * (lam - index + 1)), index - 1
    if generator == "f":
        if index == lam:
            return None
        return Fraction(1), index + 1
    raise ValueError(f"unknown sl2 generator {generator!r}")


def factor_weight(module: WeightModule, index: int) -> Fraction:
    """h-eigenvalue of the sl2 basis vector with the given index."""
    if isinstance(module, DenseSL2):
        return module.mu + 2 * index
    lam = module.highest[0]
    if not 0 <= index <= lam:
        raise ValueError(f"basis index {index} out of range for L({lam})")
    return Fraction(lam - 2 * index)


def evaluation_action(
    d: EvaluationDescriptor, generator: str, s, basis_elt
) -> dict[tuple[int, ...], Fraction]:
    """(x tensor s) applied to a tensor basis vector, as an exact combination.

    Implements sum_i s(p_i) w_1 x ... x (x w_i) x ... x w_r over sl2.
    """
    if d.system.name != "A1":
        raise ValueError("the explicit action is implemented for A1 only")
    elt = tuple(basis_elt)
    if len(elt) != len(d.factors):
        raise ValueError("basis element length must match the factor count")
    residues = d.residues(s)
    out: dict[tuple[int, ...], Fraction] = {}
    for i, ((_, module), res) in enumerate(zip(d.factors, residues)):
        if res == 0:
            continue
        hit = _sl2_factor_action(module, generator, elt[i])
        if hit is None:
            continue
        coeff, j = hit
        target = elt[:i] + (j,) + elt[i + 1 :]
        value = out.get(target, Fraction(0)) + res * coeff
        if value == 0:
            out.pop(target, None)
        else:
            out[target] = value
    return out


def _finite_convolution(d: EvaluationDescriptor) -> dict[tuple, int]:
    rank = d.system.rank
    conv: dict[tuple, int] = {tuple(Fraction(0) for _ in range(rank)): 1}
    for _, module in d.factors:
        if isinstance(module, DenseSL2):
            continue
        support = weightmod.weight_support(module, rank)
        nxt: dict[tuple, int] = {}
        for w1, m1 in conv.items():
            for w2, m2 in support.items():
                w = tuple(a + Fraction(b) for a, b in zip(w1, w2))
                nxt[w] = nxt.get(w, 0) + m1 * m2
        conv = nxt
    return conv


def tensor_multiplicity(
    d: EvaluationDescriptor, weight, window: int | None = None
) -> int | InfiniteMultiplicity:
    """Multiplicity of one weight in the tensor product of the factors.

    All-finite descriptors get the exact convolution count.  Dense
    factors require a window bounding their basis indices; with two or
    more dense factors any reachable weight space is infinite
    dimensional, and the windowed count plus a witness family is
    returned instead of a number.
    """
    weight = tuple(Fraction(w) for w in weight)
    if len(weight) != d.system.rank:
        raise ValueError("weight has the wrong length for this system")
    conv = _finite_convolution(d)
    dense = [m for _, m in d.factors if isinstance(m, DenseSL2)]
    if not dense:
        return conv.get(weight, 0)
    if window is None:
        raise ValueError("a window is required when an infinite-support factor is present")

    dconv: dict[Fraction, int] = {Fraction(0): 1}
    for m in dense:
        nxt: dict[Fraction, int] = {}
        for w1, c in dconv.items():
            for i in range(-window, window + 1):
                w = w1 + m.mu + 2 * i
                nxt[w] = nxt.get(w, 0) + c
        dconv = nxt

    target = weight[0]
    count = 0
    reachable = False
    for wf, mf in conv.items():
        rest = target - wf[0] - sum(m.mu for m in dense)
        if rest.denominator == 1 and rest.numerator % 2 == 0:
            reachable = True
        count += mf * dconv.get(target - wf[0], 0)

    if len(dense) >= 2 and reachable:
        m1, m2 = dense[0], dense[1]
        witness = (
            f"v_i (x) v_(m-i) over the first two dense factors "
            f"(mu = {m1.mu} and {m2.mu}); |i| <= {window}"
        )
        return InfiniteMultiplicity(count, window, witness)
    return count


def basis_at_weight(d: EvaluationDescriptor, weight) -> list[tuple[int, ...]]:
    """All tensor basis index tuples of one weight; finite spaces only."""
    if d.system.name != "A1":
        raise ValueError("basis enumeration is implemented for A1 only")
    target = Fraction(tuple(Fraction(w) for w in weight)[0])
    if d.dense_count() >= 2:
        raise ValueError("weight space is infinite dimensional (two dense factors)")
    dense_pos = next(
        (i for i, (_, m) in enumerate(d.factors) if isinstance(m, DenseSL2)), None
    )
    finite_choices = [()]
    for i, (_, module) in enumerate(d.factors):
        if i == dense_pos:
            continue
        finite_choices = [
            c + (idx,) for c in finite_choices for idx in range(module.highest[0] + 1)
        ]
    out: list[tuple[int, ...]] = []
    for choice in finite_choices:
        total = Fraction(0)
        it = iter(choice)
        for i, (_, module) in enumerate(d.factors):
            if i != dense_pos:
                total += factor_weight(module, next(it))
        if dense_pos is None:
            if total == target:
                out.append(choice)
            continue
        step = target - total - d.factors[dense_pos][1].mu
        if step.denominator == 1 and step.numerator % 2 == 0:
            it = iter(choice)
            elt = tuple(
                step.numerator // 2 if i == dense_pos else next(it)
                for i in range(len(d.factors))
            )
            out.append(elt)
    return sorted(out)


def descriptor_to_json(d: EvaluationDescriptor) -> dict:
    ring = {
        "vars": d.ring.num_vars,
        "ideal": [g.to_string(d.ring.var_names) for g in d.ring.ideal_gens],
        "varnames": list(d.ring.var_names),
    }
    factors = []
    for point, module in d.factors:
        if isinstance(module, FiniteDim):
            mod = {"kind": "finite", "lambda": list(module.highest)}
        elif isinstance(module, DenseSL2):
            mod = {"kind": "dense", "mu": str(module.mu), "tau0": str(module.tau0)}
        else:
            mod = {"kind": "trivial"}
        factors.append({"point": [str(c) for c in point.coords], "module": mod})
    return {"ring": ring, "g": d.system.name, "factors": factors}


def descriptor_from_json(obj: dict) -> EvaluationDescriptor:
    from . import rootsys

    ring_obj = obj.get("ring", {"vars": 1, "ideal": []})
    ring = coordinate_ring(
        int(ring_obj.get("vars", 1)),
        ring_obj.get("ideal", []),
        ring_obj.get("varnames"),
    )
    system = rootsys.from_name(obj.get("g", "A1"))
    factors = []
    for f in obj.get("factors", []):
        point = validate_point(ring, [Fraction(str(c)) for c in f["point"]])
        mod = f["module"]
        kind = mod.get("kind")
        if kind == "trivial":
            module: WeightModule = Trivial()
        elif kind == "finite":
            module = FiniteDim(system, tuple(int(c) for c in mod["lambda"]))
        elif kind == "dense":
            module = DenseSL2(Fraction(str(mod["mu"])), Fraction(str(mod["tau0"])))
        else:
            raise ValueError(f"unknown module kind {kind!r}")
        factors.append((point, module))
    return EvaluationDescriptor(ring, system, tuple(factors))
