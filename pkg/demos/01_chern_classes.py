"""
Chern classes of quadrics
=========================

Total Chern classes live in a truncated polynomial ring in the hyperplane
class ``h``.  Everything below is exact integer arithmetic.
"""

# %%
# Truncated series: (1 + 2h)^-1 is the alternating geometric series.
from abelquad.series import series_binom_power, series_from_coeffs, series_invert

x = series_from_coeffs([1, 2], 5)
print(series_invert(x))
print(x * series_invert(x))

# %%
# The ambient projective space contributes (1 + h)^(n+2).
print(series_binom_power(1, 6, 4))

# %%
# Dividing by the normal bundle 1 + 2h gives c(T_Q).  For the quadric
# surface P^1 x P^1 the top class is 2h^2; with deg Q = 2 that is Euler
# characteristic 4.
from abelquad.chow import chern_total_tangent_quadric

for n in range(1, 7):
    print(n, chern_total_tangent_quadric(n).coeffs)

# %%
# The first Chern class of an n-dimensional quadric is always n*h.
assert all(chern_total_tangent_quadric(n).coeffs[1] == n for n in range(1, 65))
