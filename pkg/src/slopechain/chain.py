"""The slope filtration: a canonical tower {0} = H_0 < H_1 < ... < H_r = G.

For a connected subgroup K the weighted rank functional is

    phi(K) = sum_j (rk(Gamma_j cap K) - rk(Gamma_{j-1} cap K)) * log S_j,

kept as an integer exponent vector over the multiset {log S_j}: logarithms
are never evaluated, and every comparison reduces to an exact rational
power-product comparison, because the equality cases carry structure that
floating point would destroy.

The tower is the unique chain such that each H_{i+1} maximizes the slope
(phi(K) - phi(H_i)) / (dim K - dim H_i) over subgroups K of larger dimension,
ties broken by maximal dimension.  Equivalently, the points (dim K, phi(K))
all lie on or below the convex polygon through the (dim H_i, phi(H_i)), and
a point lands on an edge only when H_i <= K <= H_{i+1}.

Two constructions are implemented and cross-checked:

* a closed form for rational models, where rk(Gamma_j cap K) equals
  dim(K cap span Gamma_j) and the maximal phi per dimension is the concave
  profile f(d) = sum_j min(r_j, d) log(S_j / S_{j+1});
* the greedy maximal-slope construction over a candidate set (prefix
  closures and the full group), which is the definitional route and the one
  used for symbolic models.

`verify_chain` then checks the defining inequality exactly against an
exhaustive family of candidate subgroups and fails loudly with the witness
when anything is off.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import log

from . import linalg
from .errors import (
    AmbiguousCandidates,
    CertificateViolation,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidScale,
    NotNested,
    SlopechainError,
)
from .model import (
    GroupModel,
    RankProfile,
    Subgroup,
    closure,
    enumerate_closures,
    rank_profile,
    span_contains,
)
from .polys import Poly, SymbolicScalar, as_fraction


# ---------------------------------------------------------------------------
# exact values built on exponent vectors


@dataclass(frozen=True)
class PhiValue:
    """sum_j exponents[j] * log S_j, exact."""

    exponents: tuple[int, ...]

    def __add__(self, other):
        return PhiValue(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __sub__(self, other):
        return PhiValue(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def scaled(self, k: int):
        return PhiValue(tuple(k * e for e in self.exponents))

    def approx(self, scales) -> float:
        return float(sum(e * log(float(s)) for e, s in zip(self.exponents, scales) if e))


def power_product(scales, exponents) -> Fraction:
    prod = Fraction(1)
    for s, e in zip(scales, exponents):
        if e and s != 1:
            prod *= Fraction(s) ** e
    return prod


def phi_sign(scales, value: PhiValue) -> int:
    """Sign of sum e_j log S_j, decided by comparing prod S_j^{e_j} with 1."""
    prod = power_product(scales, value.exponents)
    return (prod > 1) - (prod < 1)


@dataclass(frozen=True)
class SlopeValue:
    """A phi difference divided by a positive dimension difference."""

    numerator: PhiValue
    denominator: int

    def approx(self, scales) -> float:
        return self.numerator.approx(scales) / self.denominator


def compare_slopes(model: GroupModel, a: SlopeValue, b: SlopeValue) -> int:
    """-1 / 0 / +1 as a < b, a = b, a > b; exact."""
    diff = a.numerator.scaled(b.denominator) - b.numerator.scaled(a.denominator)
    return phi_sign(model.scales, diff)


@dataclass(frozen=True)
class RootedRational:
    """radicand ** (1/root) with radicand a positive rational."""

    radicand: Fraction
    root: int

    def compare(self, other: "RootedRational") -> int:
        left = self.radicand ** other.root
        right = other.radicand ** self.root
        return (left > right) - (left < right)

    def compare_fraction(self, value: Fraction) -> int:
        value = as_fraction(value)
        right = value ** self.root
        return (self.radicand > right) - (self.radicand < right)

    def approx(self) -> float:
        return float(self.radicand) ** (1.0 / self.root)


# ---------------------------------------------------------------------------
# phi and the chain


def phi(model: GroupModel, subgroup: Subgroup) -> PhiValue:
    """Exponent vector of phi(H); the per-j rank jumps of the profile.

    Computed both as successive differences and through the S_{l+1} = 1
    rewriting sum_j rk(Gamma_j cap H) log(S_j/S_{j+1}); the two must agree.
    """
    profile = rank_profile(model, subgroup)
    return phi_from_profile(model, profile)


def phi_from_profile(model: GroupModel, profile: RankProfile) -> PhiValue:
    ranks = (0,) + profile.gamma_ranks
    jumps = tuple(ranks[j] - ranks[j - 1] for j in range(1, model.l + 1))
    alt = [0] * model.l
    for j in range(1, model.l + 1):
        alt[j - 1] += ranks[j]
        if j < model.l:
            alt[j] -= ranks[j]
    if tuple(alt) != jumps:
        raise AssertionError("the two phi computations disagree")
    return PhiValue(jumps)


@dataclass(frozen=True)
class ChainNode:
    subgroup: Subgroup
    dim: int
    phi: PhiValue


@dataclass(frozen=True)
class ChainStep:
    frak_s: RootedRational
    slope: SlopeValue


@dataclass(frozen=True)
class Chain:
    nodes: tuple[ChainNode, ...]
    steps: tuple[ChainStep, ...]

    @property
    def r(self) -> int:
        return len(self.steps)

    @property
    def subgroups(self):
        return tuple(node.subgroup for node in self.nodes)

    def dims(self):
        return tuple(node.dim for node in self.nodes)


def _frak(model, node_lo: ChainNode, node_hi: ChainNode,
          prof_lo: RankProfile, prof_hi: RankProfile) -> RootedRational:
    """frak_S for one step, computed from the double-quotient rank jumps and
    re-derived from exp of the slope; both must coincide."""
    lo = (0,) + prof_lo.gamma_ranks
    hi = (0,) + prof_hi.gamma_ranks
    jumps = tuple(
        (hi[j] - lo[j]) - (hi[j - 1] - lo[j - 1]) for j in range(1, model.l + 1)
    )
    root = node_hi.dim - node_lo.dim
    radicand = power_product(model.scales, jumps)
    via_slope = power_product(model.scales, (node_hi.phi - node_lo.phi).exponents)
    if radicand != via_slope:
        raise AssertionError("frak_S formulas disagree")
    return RootedRational(radicand, root)


def _assemble(model: GroupModel, subgroups) -> Chain:
    nodes = []
    profiles = []
    for sub in subgroups:
        profile = rank_profile(model, sub)
        nodes.append(ChainNode(sub, sub.dim, phi_from_profile(model, profile)))
        profiles.append(profile)
    steps = []
    for i in range(len(nodes) - 1):
        lo, hi = nodes[i], nodes[i + 1]
        if hi.dim <= lo.dim:
            raise AssertionError("chain dimensions must strictly increase")
        slope = SlopeValue(hi.phi - lo.phi, hi.dim - lo.dim)
        steps.append(ChainStep(_frak(model, lo, hi, profiles[i], profiles[i + 1]), slope))
    for i in range(len(steps) - 1):
        if compare_slopes(model, steps[i].slope, steps[i + 1].slope) <= 0:
            raise AssertionError("chain slopes must strictly decrease")
    return Chain(tuple(nodes), tuple(steps))


def _build_chain_fast(model: GroupModel) -> Chain:
    """Closed form for rational models.

    The best phi among dimension-d subgroups is f(d) = sum_j min(r_j, d) c_j
    with r_j = rk Gamma_j and c_j = log(S_j/S_{j+1}) >= 0 (S_{l+1} = 1); the
    chain dimensions are the vertices where the exact slope of f strictly
    drops, and the vertex subgroup is the closure of the prefix lattice
    realizing that rank.
    """
    n, l = model.n, model.l
    full = model.full_subgroup()
    r = (0,) + rank_profile(model, full).gamma_ranks

    def f_exponents(d):
        return tuple(min(r[j], d) - min(r[j - 1], d) for j in range(1, l + 1))

    slopes = [
        PhiValue(tuple(b - a for a, b in zip(f_exponents(d), f_exponents(d + 1))))
        for d in range(n)
    ]
    vertices = [0]
    for d in range(1, n):
        if phi_sign(model.scales, slopes[d - 1] - slopes[d]) > 0:
            vertices.append(d)
    vertices.append(n)

    scales = model.scales + (Fraction(1),)
    subgroups = []
    for d in vertices:
        if d == 0:
            subgroups.append(model.zero_subgroup())
        elif d == n:
            subgroups.append(full)
        else:
            j = next(
                j for j in range(1, l + 1) if r[j] == d and scales[j - 1] > scales[j]
            )
            vertex = closure(model, model.prefix_lattice(j))
            if vertex.dim != d:
                raise AssertionError("prefix closure has unexpected dimension")
            subgroups.append(vertex)
    return _assemble(model, subgroups)


def _prefix_candidates(model: GroupModel):
    seen = {}
    for j in range(model.l + 1):
        sub = closure(model, model.prefix_lattice(j))
        seen.setdefault((sub.dim, sub.coeff.rows), sub)
    full = model.full_subgroup()
    seen.setdefault((full.dim, full.coeff.rows), full)
    return list(seen.values())


def build_chain_greedy(model: GroupModel, extra_candidates=()) -> Chain:
    """The definitional construction: from H_i pick the candidate of larger
    dimension with maximal slope, breaking ties by maximal dimension.  Raises
    AmbiguousCandidates when two distinct subgroups survive both criteria,
    which would contradict uniqueness and must reach the caller."""
    candidates = _prefix_candidates(model)
    for sub in extra_candidates:
        if all(
            (sub.dim, sub.coeff.rows) != (c.dim, c.coeff.rows) for c in candidates
        ):
            candidates.append(sub)
    info = [(c, phi(model, c)) for c in candidates]

    current = model.zero_subgroup()
    current_phi = phi(model, current)
    subgroups = [current]
    while current.dim < model.n:
        best = []
        best_slope = None
        for cand, cand_phi in info:
            if cand.dim <= current.dim:
                continue
            slope = SlopeValue(cand_phi - current_phi, cand.dim - current.dim)
            if best_slope is None:
                best, best_slope = [(cand, cand_phi)], slope
                continue
            cmp = compare_slopes(model, slope, best_slope)
            if cmp > 0:
                best, best_slope = [(cand, cand_phi)], slope
            elif cmp == 0:
                best.append((cand, cand_phi))
        dmax = max(c.dim for c, _ in best)
        top = [(c, p) for c, p in best if c.dim == dmax]
        distinct = {(c.dim, c.coeff.rows) for c, _ in top}
        if len(distinct) > 1:
            raise AmbiguousCandidates(
                "two distinct maximal-dimension slope maximizers",
                top[0][0].coeff.rows,
                top[1][0].coeff.rows,
            )
        current, current_phi = top[0]
        subgroups.append(current)
    return _assemble(model, subgroups)


def build_chain(model: GroupModel) -> Chain:
    """Rational models take the closed form; symbolic models the greedy
    construction over prefix closures.  The two agree wherever both apply
    (enforced by the test suite and the certificate)."""
    if model.m == 0:
        return _build_chain_fast(model)
    return build_chain_greedy(model)


def frak_S(model: GroupModel, chain: Chain, i: int) -> RootedRational:
    if not 0 <= i <= chain.r - 1:
        raise IndexOutOfRange(f"step {i} outside 0..{chain.r - 1}")
    return chain.steps[i].frak_s


# ---------------------------------------------------------------------------
# mu exponents (equal scales)


@dataclass(frozen=True)
class MuReport:
    mu: Fraction
    mu_star: Fraction
    mu_list: tuple[Fraction, ...]
    well_distributed: bool
    chain: Chain


def mu_exponents(model: GroupModel) -> MuReport:
    """Build the chain at one common scale (the subgroups are scale-free) and
    read off the per-step rank-jump / dimension-jump ratios.  mu* is the
    first, mu the last; a single step means the generators are spread as
    evenly as possible."""
    equal = model.equal_scale_model()
    chain = build_chain(equal)
    mu_list = []
    for i in range(chain.r):
        jump = chain.nodes[i + 1].phi - chain.nodes[i].phi
        ddim = chain.nodes[i + 1].dim - chain.nodes[i].dim
        mu_list.append(Fraction(sum(jump.exponents), ddim))
    return MuReport(
        mu=mu_list[-1],
        mu_star=mu_list[0],
        mu_list=tuple(mu_list),
        well_distributed=(chain.r == 1),
        chain=chain,
    )


# ---------------------------------------------------------------------------
# the closed-form count predictor


def n_formula(model: GroupModel, h_prime: Subgroup, h_dprime: Subgroup) -> Fraction:
    """prod S_j ** e_j with e_j the rank jumps of (Gamma_j cap H')/(Gamma_j
    cap H''); the closed-form predictor of box-point counts in H' mod H''."""
    if not h_prime.coeff.contains_lattice(h_dprime.coeff):
        raise NotNested("H'' is not contained in H' (coefficient lattices)")
    hp = (0,) + rank_profile(model, h_prime).gamma_ranks
    hdp = (0,) + rank_profile(model, h_dprime).gamma_ranks
    jumps = tuple(
        (hp[j] - hdp[j]) - (hp[j - 1] - hdp[j - 1]) for j in range(1, model.l + 1)
    )
    return power_product(model.scales, jumps)


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class CandidateCheck:
    lattice: tuple[tuple[int, ...], ...]
    dim: int
    gamma_ranks: tuple[int, ...]
    chi_exponents: tuple[tuple[int, ...], ...]
    chi_signs: tuple[int, ...]
    equality_steps: tuple[int, ...]


@dataclass(frozen=True)
class ChainCertificate:
    candidates: tuple[CandidateCheck, ...]
    equality_witnesses: tuple[tuple[int, tuple[tuple[int, ...], ...]], ...]
    scaling_alphas: tuple[int, ...]
    psi_injective: bool
    telescoping_ok: bool
    slopes_strictly_decreasing: bool


@dataclass(frozen=True)
class VerifyOptions:
    height: int = 2
    random_count: int = 0
    seed: int = 0
    alphas: tuple[int, ...] = (2, 3)
    max_candidates: int | None = None


def _chi(dim_k: int, phi_k: PhiValue, lo: ChainNode, hi: ChainNode) -> PhiValue:
    """Left side of the segment inequality for one step: <= 0 always, with
    equality exactly on the segment through (dim, phi) of the two nodes."""
    ddim = hi.dim - lo.dim
    dphi = hi.phi - lo.phi
    const = hi.phi.scaled(lo.dim) - lo.phi.scaled(hi.dim)
    return phi_k.scaled(ddim) - dphi.scaled(dim_k) + const


def _random_lattice_closures(model, options):
    rng = random.Random(options.seed)
    out = []
    for _ in range(options.random_count):
        k = rng.randint(1, max(1, model.l))
        rows = [
            [rng.randint(-2 * options.height, 2 * options.height) for _ in range(model.l)]
            for _ in range(k)
        ]
        out.append(closure(model, rows))
    return out


def verify_chain(model: GroupModel, chain: Chain, options: VerifyOptions | None = None) -> ChainCertificate:
    """Exact certificate for a chain.

    Candidates are every distinct closure of a sublattice generated by
    vectors of entry height <= options.height, plus optional random lattices,
    the chain members and the full group.  For each candidate K and step i
    the segment excess is checked to be <= 0 exactly, with the sandwich
    H_i <= K <= H_{i+1} on equality; the rank-profile map is checked to
    separate chain members from every candidate; the chain must be invariant
    under S_j -> S_j^alpha; and the product of the step radicands must
    telescope to prod S_j^{rk Gamma_j - rk Gamma_{j-1}}.

    Any failure raises CertificateViolation carrying the offending candidate
    and step; with honest inputs that means either a bug or, for symbolic
    models, a candidate family the prefix-closure construction missed.
    """
    options = options or VerifyOptions()
    pool = list(enumerate_closures(model, options.height, options.max_candidates))
    pool.extend(_random_lattice_closures(model, options))
    pool.extend(chain.subgroups)
    pool.append(model.full_subgroup())
    candidates = {}
    for sub in pool:
        candidates.setdefault((sub.dim, sub.coeff.rows), sub)

    chain_keys = [(s.dim, s.coeff.rows) for s in chain.subgroups]
    chain_profiles = [rank_profile(model, s) for s in chain.subgroups]

    checks = []
    equality_witnesses = []
    psi_ok = True
    for key, cand in sorted(candidates.items()):
        profile = rank_profile(model, cand)
        phi_k = phi_from_profile(model, profile)
        chi_exps = []
        chi_signs = []
        equal_steps = []
        for i in range(chain.r):
            lo, hi = chain.nodes[i], chain.nodes[i + 1]
            chi = _chi(cand.dim, phi_k, lo, hi)
            sign = phi_sign(model.scales, chi)
            chi_exps.append(chi.exponents)
            chi_signs.append(sign)
            if sign > 0:
                raise CertificateViolation(
                    "chi_positive",
                    f"candidate {key[1]} lies above segment {i}",
                    step=i,
                    witness=key[1],
                )
            if sign == 0:
                equal_steps.append(i)
                if not (
                    span_contains(model, cand, lo.subgroup)
                    and span_contains(model, hi.subgroup, cand)
                ):
                    raise CertificateViolation(
                        "equality_sandwich",
                        f"candidate {key[1]} is on segment {i} but not between "
                        "its endpoints",
                        step=i,
                        witness=key[1],
                    )
                equality_witnesses.append((i, key[1]))
        for idx, (ck, cp) in enumerate(zip(chain_keys, chain_profiles)):
            if profile == cp and key != ck:
                psi_ok = False
                raise CertificateViolation(
                    "psi_injectivity",
                    f"candidate {key[1]} shares the rank profile of chain "
                    f"member {idx}",
                    step=idx,
                    witness=key[1],
                )
        checks.append(
            CandidateCheck(
                lattice=key[1],
                dim=cand.dim,
                gamma_ranks=profile.gamma_ranks,
                chi_exponents=tuple(chi_exps),
                chi_signs=tuple(chi_signs),
                equality_steps=tuple(equal_steps),
            )
        )

    for i in range(chain.r - 1):
        if compare_slopes(model, chain.steps[i].slope, chain.steps[i + 1].slope) <= 0:
            raise CertificateViolation(
                "slope_order", f"slope does not strictly decrease at step {i}", step=i
            )
    for i in range(chain.r - 1):
        if chain.steps[i].frak_s.compare(chain.steps[i + 1].frak_s) <= 0:
            raise CertificateViolation(
                "frak_order", f"frak_S does not strictly decrease at step {i}", step=i
            )
    if chain.steps and chain.steps[-1].frak_s.compare_fraction(Fraction(1)) < 0:
        raise CertificateViolation("frak_order", "last frak_S is below 1", step=chain.r - 1)

    for alpha in options.alphas:
        rebuilt = build_chain(model.powered(alpha))
        if [(s.dim, s.coeff.rows) for s in rebuilt.subgroups] != chain_keys:
            raise CertificateViolation(
                "scaling", f"chain changed under S -> S^{alpha}"
            )

    full_ranks = (0,) + rank_profile(model, model.full_subgroup()).gamma_ranks
    expected = power_product(
        model.scales,
        tuple(full_ranks[j] - full_ranks[j - 1] for j in range(1, model.l + 1)),
    )
    actual = Fraction(1)
    for step in chain.steps:
        actual *= step.frak_s.radicand
    if actual != expected:
        raise CertificateViolation(
            "telescoping",
            f"product of radicands {actual} != {expected}",
        )

    return ChainCertificate(
        candidates=tuple(checks),
        equality_witnesses=tuple(equality_witnesses),
        scaling_alphas=tuple(options.alphas),
        psi_injective=psi_ok,
        telescoping_ok=True,
        slopes_strictly_decreasing=True,
    )


# ---------------------------------------------------------------------------
# the two-flag functional (evaluation exact; chain construction heuristic)


@dataclass(frozen=True)
class PhiST:
    s_exponents: tuple[int, ...]
    t_exponents: tuple[int, ...]


def _flag_rows(model, rows):
    out = []
    for row in rows:
        if len(row) != model.n:
            raise DimensionMismatch(
                f"derivation vector has {len(row)} entries, expected {model.n}"
            )
        out.append(tuple(row))
    return out


def phi_st(model: GroupModel, subgroup: Subgroup, derivations, t_orders) -> PhiST:
    """Exponent vectors of the two-flag functional: the usual rank jumps over
    the S_j plus per-step jumps of dim(W_j cap H) over the T_j, where W_j is
    the span of the first j derivation rows."""
    rows = _flag_rows(model, derivations)
    t_orders = [as_fraction(t) for t in t_orders]
    if len(t_orders) != len(rows):
        raise DimensionMismatch(
            f"{len(t_orders)} orders for {len(rows)} derivation vectors"
        )
    for a, b in zip(t_orders, t_orders[1:]):
        if a < b:
            raise InvalidScale("derivation orders must be non-increasing")
    if t_orders and t_orders[-1] < 1:
        raise InvalidScale("derivation orders must be >= 1")

    def to_matrix(vecs):
        if model.m == 0:
            return [[as_fraction(x) for x in v] for v in vecs]
        out = []
        for v in vecs:
            out.append(
                [
                    x if isinstance(x, Poly)
                    else x.to_poly(model.m) if isinstance(x, SymbolicScalar)
                    else Poly.const(x, model.m)
                    for x in v
                ]
            )
        return out

    span_rows = to_matrix(subgroup.span) if subgroup.dim < model.n else None
    inter_dims = [0]
    for j in range(1, len(rows) + 1):
        w = to_matrix(rows[:j])
        rank_w = linalg.rank(w)
        if subgroup.dim == model.n:
            inter = rank_w
        elif subgroup.dim == 0:
            inter = 0
        else:
            stacked = w + span_rows
            inter = rank_w + subgroup.dim - linalg.rank(stacked)
        inter_dims.append(inter)
    t_exp = tuple(
        inter_dims[j] - inter_dims[j - 1] for j in range(1, len(rows) + 1)
    )
    return PhiST(phi(model, subgroup).exponents, t_exp)


@dataclass(frozen=True)
class STNode:
    subgroup: Subgroup
    dim: int
    value: PhiST


@dataclass(frozen=True)
class STChain:
    nodes: tuple[STNode, ...]


def build_chain_st(model: GroupModel, derivations, t_orders, experimental=False) -> STChain:
    """Greedy maximal-slope tower for the two-flag functional.

    This is a heuristic over the prefix-closure candidate set; no certificate
    is offered, hence the mandatory flag.
    """
    if not experimental:
        raise SlopechainError(
            "two-flag chain construction is heuristic; pass experimental=True"
        )
    rows = _flag_rows(model, derivations)
    t_orders = tuple(as_fraction(t) for t in t_orders)
    scales_ext = model.scales + t_orders
    candidates = _prefix_candidates(model)
    info = [(c, phi_st(model, c, rows, t_orders)) for c in candidates]

    def combined(v: PhiST):
        return PhiValue(v.s_exponents + v.t_exponents)

    current = model.zero_subgroup()
    current_val = combined(phi_st(model, current, rows, t_orders))
    nodes = [STNode(current, 0, phi_st(model, current, rows, t_orders))]
    while current.dim < model.n:
        best = []
        best_slope = None
        for cand, val in info:
            if cand.dim <= current.dim:
                continue
            slope = SlopeValue(combined(val) - current_val, cand.dim - current.dim)
            if best_slope is None:
                best, best_slope = [(cand, val)], slope
                continue
            diff = slope.numerator.scaled(best_slope.denominator) - best_slope.numerator.scaled(slope.denominator)
            cmp = phi_sign(scales_ext, diff)
            if cmp > 0:
                best, best_slope = [(cand, val)], slope
            elif cmp == 0:
                best.append((cand, val))
        dmax = max(c.dim for c, _ in best)
        top = [(c, v) for c, v in best if c.dim == dmax]
        distinct = {(c.dim, c.coeff.rows) for c, _ in top}
        if len(distinct) > 1:
            raise AmbiguousCandidates(
                "two distinct maximal-dimension slope maximizers",
                top[0][0].coeff.rows,
                top[1][0].coeff.rows,
            )
        cand, val = top[0]
        current, current_val = cand, combined(val)
        nodes.append(STNode(cand, cand.dim, val))
    return STChain(tuple(nodes))


# ---------------------------------------------------------------------------
# polygon export


def polygon_rows(model: GroupModel, chain: Chain):
    """(dim, display phi, exact exponents) per chain node: the vertices of
    the convex polygon swept by (dim K, phi(K))."""
    rows = []
    for node in chain.nodes:
        rows.append((node.dim, node.phi.approx(model.scales), node.phi.exponents))
    return rows
