"""Large-parameter estimates with exact error accounting.

For block count k large and a fixed offset d = n - k, the scaled number
k! S(k+d, k) / (k+d)! is the coefficient [t^d] of psi(t)^k for a fixed
series psi, and a partition-indexed expansion in falling factorials of
k approximates it.  Everything below is an exact rational, including
the relative errors.

Run top to bottom:  python demos/asymptotic_sweep.py
"""

from stirlingkit import asymptotic_partial, format_rational
from stirlingkit.asymptotics import decimal_str

GAMMA, ALPHA, BETA, ELL = 1, 1, 2, 2

print("offset d=5, truncation depth m varies, k doubles:")
print("%4s %4s %14s %14s" % ("m", "k", "rel error", "(decimal)"))
for m in (1, 2, 3, 4):
    for k in (20, 40, 80, 160):
        row = asymptotic_partial(5, k, GAMMA, ALPHA, BETA, ELL, m)
        print(
            "%4d %4d %14s %14s"
            % (m, k, format_rational(row.rel_error), decimal_str(row.rel_error, 10))
        )
    print()

print("the error falls by roughly another power of k per extra term;")
print("at m >= d the expansion is no longer truncated and the error is 0:")
row = asymptotic_partial(5, 40, GAMMA, ALPHA, BETA, ELL, 5)
print("  d=5, k=40, m=5: estimate %s = exact %s" % (row.estimate, row.exact))

print()
print("exact values behind one row (d=4, k=20, m=3):")
row = asymptotic_partial(4, 20, GAMMA, ALPHA, BETA, ELL, 3)
print("  total n = %d" % row.n_total)
print("  estimate  = %s" % format_rational(row.estimate))
print("  exact     = %s" % format_rational(row.exact))
print("  rel error = %s" % format_rational(row.rel_error))

print()
print("the uncorrected normalization (literal mode) is kept for the record;")
print("rows where it is undefined are flagged, not skipped:")
for k in (4, 20):
    row = asymptotic_partial(4, k, GAMMA, ALPHA, BETA, ELL, 3, mode="literal")
    print(
        "  k=%-3d estimate=%s exact=%s note=%s"
        % (
            k,
            "-" if row.estimate is None else format_rational(row.estimate),
            "-" if row.exact is None else format_rational(row.exact),
            row.note or "",
        )
    )
