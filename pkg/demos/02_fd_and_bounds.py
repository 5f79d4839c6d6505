"""
The sequence F_d and the counting bound
=======================================

``F_d`` is the top normal-bundle coefficient of an abelian d-fold inside a
2d-dimensional quadric.  It is computed two ways and compared with the
factorial growth coming from Riemann-Roch.
"""

# %%
from abelquad.chow import chern_total_normal, f_closed, f_series

for d in range(1, 9):
    print(d, f_closed(d), f_series(d), chern_total_normal(d).coeffs)

# %%
# Degrees must satisfy 2(d+1)! <= deg <= 2 F_d once d > 2.  The crude
# estimate F_d <= 2^(3d+1) is overtaken by (d+1)! from d = 17 on, and the
# exact values already lose from d = 4.
from abelquad.sequences import bound_report, counting_crossover

print("crossover:", counting_crossover(200))
for d in (3, 4, 5, 16, 17):
    r = bound_report(d)
    print(d, r.f_d, r.factorial_next, r.crude, r.factorial_wins_exact, r.factorial_wins_crude)

# %%
# Large d is cheap: the closed sum is linear in d.
print(len(str(f_closed(2000))), "digits in F_2000")
