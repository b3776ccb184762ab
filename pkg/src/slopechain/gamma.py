"""Box point sets: enumeration of Gamma(S), coset counting, sum/difference
sets, and the empirical side of the counting and distribution estimates.

Gamma(lambda S) is the image of the integer box |n_j| < lambda*S_j under
iota.  Members are group points, not coefficient tuples: tuples are reduced
modulo the relation lattice iota^{-1}(0) to canonical coset representatives,
so dependent or repeated generators never inflate a count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product

from .chain import Chain, RootedRational, build_chain, n_formula
from .errors import CertificateViolation, EnumerationTooLarge, NotNested
from .model import GroupModel, Subgroup, enumerate_closures, rank_profile, span_contains
from .polys import as_fraction


@dataclass(frozen=True)
class GammaSet:
    """Deduplicated box points with one in-box witness tuple per point.

    `entries` is sorted by canonical representative; each entry is
    (representative mod kernel, witness coefficient tuple, point).
    """

    lam: Fraction
    scale_used: tuple
    entries: tuple

    @property
    def points(self):
        return tuple(e[2] for e in self.entries)

    @property
    def witnesses(self):
        return tuple(e[1] for e in self.entries)

    def __len__(self):
        return len(self.entries)


def box_bound(scale, lam) -> int:
    """Largest allowed |n_j| for |n_j| < lam * S_j: ceil(lam S_j) - 1."""
    return math.ceil(lam * scale) - 1


def enumerate_gamma(model: GroupModel, lam=Fraction(1), limit=10 ** 7) -> GammaSet:
    lam = as_fraction(lam)
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    bounds = [box_bound(s, lam) for s in model.scales]
    size = 1
    for b in bounds:
        size *= 2 * b + 1
    if size > limit:
        raise EnumerationTooLarge(
            f"box of {size} tuples exceeds the limit {limit}"
        )
    kernel = model.kernel_lattice()
    seen = {}
    for witness in product(*(range(-b, b + 1) for b in bounds)):
        rep = kernel.reduce(witness)
        if rep not in seen:
            seen[rep] = witness
    entries = tuple(
        (rep, witness, model.point_of(witness))
        for rep, witness in sorted(seen.items())
    )
    return GammaSet(lam, model.scales, entries)


def gamma_from_vectors(model: GroupModel, vectors, lam=Fraction(1)) -> GammaSet:
    """Build a GammaSet from explicit coefficient tuples (mostly for tests)."""
    kernel = model.kernel_lattice()
    seen = {}
    for witness in vectors:
        witness = tuple(int(x) for x in witness)
        rep = kernel.reduce(witness)
        if rep not in seen:
            seen[rep] = witness
    entries = tuple(
        (rep, witness, model.point_of(witness))
        for rep, witness in sorted(seen.items())
    )
    return GammaSet(as_fraction(lam), model.scales, entries)


def card_mod(model: GroupModel, omega: GammaSet, h_prime: Subgroup, h_dprime: Subgroup) -> int:
    """Card of (omega intersect H') mod H'': witnesses landing in H',
    identified when their difference lies in the H'' lattice."""
    if not h_prime.coeff.contains_lattice(h_dprime.coeff):
        raise NotNested("H'' is not contained in H' (coefficient lattices)")
    classes = set()
    for _, witness, _ in omega.entries:
        if h_prime.coeff.contains(witness):
            classes.add(h_dprime.coeff.reduce(witness))
    return len(classes)


def card_translate(model: GroupModel, omega: GammaSet, x_vector, h: Subgroup) -> int:
    """Card of omega intersect (x + H) for x = iota(x_vector)."""
    x_vector = tuple(int(v) for v in x_vector)
    count = 0
    for _, witness, _ in omega.entries:
        diff = tuple(w - x for w, x in zip(witness, x_vector))
        if h.coeff.contains(diff):
            count += 1
    return count


def combine(model: GroupModel, omega: GammaSet, count: int, mode: str, limit=10 ** 7):
    """All sums of exactly `count` elements (sumset) or the difference set of
    that sumset (diffset).  Returns points, deduplicated as group elements
    and ordered by canonical representative."""
    if mode not in ("sumset", "diffset"):
        raise ValueError(f"mode must be sumset or diffset, got {mode!r}")
    if count < 1:
        raise ValueError(f"need at least one summand, got {count}")
    base = len(omega.entries)
    n_sums = math.comb(base + count - 1, count) if base else 0
    if n_sums > limit:
        raise EnumerationTooLarge(f"{n_sums} sums exceed the limit {limit}")
    kernel = model.kernel_lattice()
    sums = {}
    for combo in combinations_with_replacement(omega.witnesses, count):
        total = tuple(sum(col) for col in zip(*combo)) if combo else ()
        rep = kernel.reduce(total)
        if rep not in sums:
            sums[rep] = total
    if mode == "sumset":
        return tuple(model.point_of(w) for _, w in sorted(sums.items()))
    if len(sums) ** 2 > limit:
        raise EnumerationTooLarge(
            f"{len(sums) ** 2} differences exceed the limit {limit}"
        )
    diffs = {}
    for wa in sums.values():
        for wb in sums.values():
            d = tuple(a - b for a, b in zip(wa, wb))
            rep = kernel.reduce(d)
            if rep not in diffs:
                diffs[rep] = d
    return tuple(model.point_of(w) for _, w in sorted(diffs.items()))


# ---------------------------------------------------------------------------
# the counting estimate, empirically


@dataclass(frozen=True)
class CountReport:
    raw_count: int
    n_formula_value: Fraction
    ratio: Fraction
    sweep: tuple                       # (lambda, count, exact ratio) per lambda
    rank: int                          # rk of (Gamma cap H')/(Gamma cap H'')
    fitted_exponent: float | None
    ratio_bounds: tuple


def counting_check(model: GroupModel, h_prime: Subgroup, h_dprime: Subgroup,
                   lambdas, limit=10 ** 7, gamma_sets=None) -> CountReport:
    """Counts against the closed-form predictor across a lambda sweep.

    Per lambda the exact ratio count / (lambda^rk * N) is recorded; the
    min/max bracket plays the role of the unknowable constants.  The growth
    exponent is also fitted on log(count) vs log(lambda) and must round to
    the exact rank.
    """
    lambdas = [as_fraction(x) for x in lambdas]
    nval = n_formula(model, h_prime, h_dprime)
    rk_hi = rank_profile(model, h_prime).gamma_ranks
    rk_lo = rank_profile(model, h_dprime).gamma_ranks
    rank = (rk_hi[-1] - rk_lo[-1]) if model.l else 0

    sweep = []
    counts = []
    for lam in lambdas:
        if gamma_sets is not None and lam in gamma_sets:
            omega = gamma_sets[lam]
        else:
            omega = enumerate_gamma(model, lam, limit)
        c = card_mod(model, omega, h_prime, h_dprime)
        ratio = Fraction(c) / (lam ** rank * nval)
        sweep.append((lam, c, ratio))
        counts.append(c)

    fitted = None
    distinct = sorted(set(lambdas))
    if len(distinct) >= 2:
        xs = [math.log(float(lam)) for lam in lambdas]
        ys = [math.log(c) for c in counts]
        xbar = sum(xs) / len(xs)
        ybar = sum(ys) / len(ys)
        sxx = sum((x - xbar) ** 2 for x in xs)
        sxy = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
        fitted = sxy / sxx
        if round(fitted) != rank:
            raise CertificateViolation(
                "lambda_exponent",
                f"fitted growth exponent {fitted:.3f} does not round to rank {rank}",
            )

    ratios = [entry[2] for entry in sweep]
    base = next((e for e in sweep if e[0] == 1), sweep[0])
    return CountReport(
        raw_count=base[1],
        n_formula_value=nval,
        ratio=base[2],
        sweep=tuple(sweep),
        rank=rank,
        fitted_exponent=fitted,
        ratio_bounds=(min(ratios), max(ratios)),
    )


# ---------------------------------------------------------------------------
# distribution of the box points against the chain


@dataclass(frozen=True)
class DistributionEntry:
    step: int
    candidate: tuple
    count: int
    ratio: RootedRational


@dataclass(frozen=True)
class DistributionReport:
    upper: dict
    lower: dict
    bracket: Fraction
    bracket_ok: bool


def _ratio(count: int, frak: RootedRational, k: int) -> RootedRational:
    return RootedRational(Fraction(count ** frak.root) / frak.radicand ** k, frak.root)


def _compare_scaled(a: RootedRational, factor: Fraction, b: RootedRational) -> int:
    """Sign of a - factor * b for positive quantities."""
    left = a.radicand ** b.root
    right = factor ** (a.root * b.root) * b.radicand ** a.root
    return (left > right) - (left < right)


def distribution_checks(model: GroupModel, chain: Chain, epsilon,
                        scale_factor=2, height=2, bracket=Fraction(8),
                        limit=10 ** 7) -> DistributionReport:
    """Empirical form of the two distribution estimates.

    Upper side, per step i and candidate H strictly above H_i: the count of
    Gamma(2n S) in H mod H_i, divided by frak_S_i to the dimension gap, must
    stay within a fixed multiplicative bracket when S is replaced by
    S^scale_factor.  Lower side, per step i and candidate H strictly below
    H_i: same for Gamma(eps/dim H_i * S) in H_i mod H, against
    frak_S_{i-1}, reported as a minimum and required positive.
    """
    epsilon = as_fraction(epsilon)
    bracket = as_fraction(bracket)
    # Z^0 has no sublattices, so a generator-free model has no candidates
    candidates = enumerate_closures(model, height) if model.l else ()
    alphas = (1, scale_factor)
    per_alpha = {}
    for alpha in alphas:
        powered = model.powered(alpha)
        pchain = build_chain(powered)
        if [(s.dim, s.coeff.rows) for s in pchain.subgroups] != [
            (s.dim, s.coeff.rows) for s in chain.subgroups
        ]:
            raise CertificateViolation(
                "scaling", f"chain changed under S -> S^{alpha}"
            )
        omega_big = enumerate_gamma(powered, Fraction(2 * model.n), limit)
        upper = {}
        for i in range(pchain.r):
            node = pchain.nodes[i].subgroup
            frak = pchain.steps[i].frak_s
            entries = []
            for cand in candidates:
                if cand.dim <= node.dim or not span_contains(model, cand, node):
                    continue
                count = card_mod(powered, omega_big, cand, node)
                entries.append(
                    DistributionEntry(
                        i, cand.coeff.rows, count,
                        _ratio(count, frak, cand.dim - node.dim),
                    )
                )
            upper[i] = tuple(entries)
        lower = {}
        cache = {}
        for i in range(1, pchain.r + 1):
            node = pchain.nodes[i].subgroup
            frak = pchain.steps[i - 1].frak_s
            lam = epsilon / node.dim
            if lam not in cache:
                cache[lam] = enumerate_gamma(powered, lam, limit)
            omega_small = cache[lam]
            entries = []
            for cand in candidates:
                if cand.dim >= node.dim or not span_contains(model, node, cand):
                    continue
                count = card_mod(powered, omega_small, node, cand)
                entries.append(
                    DistributionEntry(
                        i, cand.coeff.rows, count,
                        _ratio(count, frak, node.dim - cand.dim),
                    )
                )
            lower[i] = tuple(entries)
        per_alpha[alpha] = (upper, lower)

    def extreme(entries, biggest):
        best = None
        for e in entries:
            if best is None or (e.ratio.compare(best) > 0) == biggest:
                best = e.ratio
        return best

    ok = True
    base_upper, base_lower = per_alpha[1]
    pow_upper, pow_lower = per_alpha[scale_factor]
    for i in base_upper:
        a = extreme(base_upper[i], True)
        b = extreme(pow_upper[i], True)
        if a is None or b is None:
            continue
        if _compare_scaled(b, bracket, a) > 0 or _compare_scaled(a, bracket, b) > 0:
            ok = False
            raise CertificateViolation(
                "distribution_bracket",
                f"upper ratio at step {i} moved beyond the bracket {bracket}",
                step=i,
            )
    for i in base_lower:
        a = extreme(base_lower[i], False)
        b = extreme(pow_lower[i], False)
        if a is None or b is None:
            continue
        if a.radicand <= 0 or b.radicand <= 0:
            raise CertificateViolation(
                "distribution_positive", f"lower ratio at step {i} is not positive",
                step=i,
            )
        if _compare_scaled(b, bracket, a) > 0 or _compare_scaled(a, bracket, b) > 0:
            ok = False
            raise CertificateViolation(
                "distribution_bracket",
                f"lower ratio at step {i} moved beyond the bracket {bracket}",
                step=i,
            )
    return DistributionReport(
        upper={alpha: per_alpha[alpha][0] for alpha in alphas},
        lower={alpha: per_alpha[alpha][1] for alpha in alphas},
        bracket=bracket,
        bracket_ok=ok,
    )
