"""Tour of the number families: triangles, degenerations, cross-checks.

Run top to bottom:  python demos/triangles_and_families.py
"""

from fractions import Fraction

from stirlingkit import FamilySpec, ValueTable, family_value, format_rational


def show_triangle(spec, nmax, label=None):
    print("\n%s" % (label or spec.describe()))
    table = ValueTable(spec)
    for n in range(nmax + 1):
        row = "  ".join(format_rational(table.value(n, k)) for k in range(n + 1))
        print("  n=%d: %s" % (n, row))


# The classic triangle: partitions of an n-set into k non-empty blocks.
show_triangle(FamilySpec("classic"), 6, "classic Stirling triangle")

# Capping block sizes at 2 thins the triangle out; a cap of 1 leaves only
# the all-singletons partition on the diagonal.
show_triangle(FamilySpec("restricted", ell=2), 6, "blocks of size at most 2")
show_triangle(FamilySpec("restricted", ell=1), 4, "blocks of size at most 1")

# Forcing blocks to hold at least 2 elements empties the diagonal instead.
show_triangle(FamilySpec("associated", ell=2), 6, "blocks of size at least 2")

# The degenerate deformation: lam = 0 is classic, lam = 1 collapses to the
# identity matrix, and rational lam interpolates exactly.
show_triangle(FamilySpec("degenerate", lam=1), 4, "degenerate at lam=1 (identity)")
show_triangle(FamilySpec("degenerate", lam=Fraction(1, 2)), 5, "degenerate at lam=1/2")

# Three-parameter generalized numbers: the weighted mixed-partition model.
show_triangle(
    FamilySpec("generalized", alpha=1, beta=3, gamma=2), 5, "generalized (1,3,2)"
)

# The same values four independent ways.
spec = FamilySpec("generalized", alpha=1, beta=3, gamma=2)
print("\ncross-method check at (n,k)=(6,3):")
for method in ("egf", "recurrence", "explicit", "oracle"):
    print("  %-10s %s" % (method, format_rational(family_value(spec, 6, 3, method))))

# The headline hybrid: free special set, weighted small blocks, free large
# blocks, all in one family.
show_triangle(
    FamilySpec("partial_degenerate", gamma=2, alpha=1, beta=3, ell=2),
    5,
    "mixed free/weighted cells (gamma=2, alpha=1, beta=3, ell=2)",
)

# Singleton blocks in s colors, an r-compartment special set.
show_triangle(FamilySpec("colored_singleton", r=1, s=2), 5, "colored singletons (r=1, s=2)")
