"""
Fine numbers next to F_d
========================

Fine numbers count Dyck paths with no hill.  They are computed by brute
force and by a height dynamic program, then listed beside F_n.  No identity
between the two sequences is assumed.
"""

# %%
from abelquad.sequences import fine, fine_comparison_report, fine_oracle

print([fine_oracle(n) for n in range(11)])
print([fine(n) for n in range(11)])

# %%
for row in fine_comparison_report(10):
    print(row["n"], row["F_n"], row["fine_n"])
