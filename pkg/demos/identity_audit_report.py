"""The identity audit: score literal vs corrected forms of each identity.

Recurrences for these families circulate with typo-level defects:
shifted indices, impossible summation bounds, a dropped symmetry
factor, weights on the wrong side of a threshold.  The audit evaluates
every identity in both readings over exact grids and prints a verdict
per form, so nothing is corrected silently.

Run top to bottom:  python demos/identity_audit_report.py
"""

from stirlingkit import run_all
from stirlingkit.audit import report_text

findings = run_all(nmax=6)
print(report_text(findings))

print()
print("reading the table:")
print("  - 'literal' rows evaluate each identity exactly as it circulates;")
print("    a FAIL there documents the defect, with the first counterexample.")
print("  - 'corrected' and 'as printed' rows must all PASS; they are the")
print("    forms the library actually computes with.")
print("  - the lone 'report' row is informational: it maps out where the")
print("    colored-singleton numbers coincide with the threshold family.")
