"""Walkthrough: jets, kernels, and the degree thresholds of the base locus.

Sections of degree D on the affine chart are polynomials of total degree
<= D; imposing vanishing to order T at the box points Gamma(S) is a linear
system whose rows are Hasse-derivative evaluations.  The base locus (common
zeros of the kernel) interpolates, as D grows, between the whole group and
Gamma(S) itself, stepping down along the chain subgroups; the transition
degrees track T * frak_S_i.

Run:  python3 demos/04_base_locus.py
"""

from fractions import Fraction

import slopechain as sc

# Univariate warm-up: 3 points, simple vanishing.  Degree 3 is the first
# degree with a section: x^3 - x, whose zeros are exactly the points.
line = sc.build_model(sc.ModelConfig(n=1, generators=((1,),), scales=("2",)))
pts = sc.enumerate_gamma(line).points
for d in (2, 3, 6):
    kb = sc.kernel_basis(line, pts, 1, d)
    print(f"D={d}: kernel dimension {len(kb.vectors)}",
          "(empty: locus is everything)" if not kb.vectors else "")
kb3 = sc.kernel_basis(line, pts, 1, 3)
print("kernel section at D=3 (coefficients of 1, x, x^2, x^3):", kb3.vectors[0])
print("x=2 in locus?", sc.in_base_locus(kb3, (Fraction(2),)),
      "| x=1 in locus?", sc.in_base_locus(kb3, (Fraction(1),)))

# Double vanishing doubles the Hermite count: 2*3 = 6 conditions.
r = sc.eval_rank(line, pts, 2, 5)
print("\nT=2, D=5 evaluation map:", r)

# Translation is substitution on a vector group; degrees never grow.
basis = sc.monomial_basis(1, 2)
shifted = sc.translate_section(basis, (Fraction(0), Fraction(0), Fraction(1)), (Fraction(1),))
print("x^2 translated by 1:", shifted, " (coefficients of 1, x, x^2)")

# The planar showcase: 15 grid points, three regimes as D sweeps 1..6.
plane = sc.build_model(sc.ModelConfig(
    n=2, generators=((1, 0), (0, 1)), scales=("3", "2"),
))
chain = sc.build_chain(plane)
print("\nplanar chain dims:", chain.dims(),
      "| frak_S:", [str(s.frak_s.radicand) for s in chain.steps])

report = sc.threshold_sweep(plane, chain, 1, range(1, 7), Fraction(1, 2),
                            samples=100, seed=3)
print("D  rank nullity  verdicts (lower/upper per step)  regime")
names = {2: "locus = G", 1: "locus = Gamma(S) + x-axis", 0: "locus = Gamma(S)"}
for row in report.rows:
    marks = " ".join(
        ("T" if lo else "F") + ("-" if up is None else ("T" if up else "F"))
        for lo, up in row.verdicts
    )
    print(f"{row.degree}   {row.rank:3d}  {row.nullity:4d}    {marks}"
          f"             {names[row.i_star]}")
print("transitions:", report.transitions)
print("exact thresholds T*frak_S_i:",
      [(i, f"{e.radicand}^(1/{e.root})") for i, e, _ in report.thresholds])

# The same sweep is available from the command line:
#   slopechain locus sweep -c config.json
# with config keys n/generators/scales/T/D_range/epsilon/seed; see README.
