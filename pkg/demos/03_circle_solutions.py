"""
Integer points on the self-intersection circle
==============================================

A class a*alpha + b*beta can only carry an abelian d-fold if
``a^2 + b^2 = F_d (a + b)``.  The points are enumerated exactly.
"""

# %%
from abelquad.chow import MiddleClass, f_closed, self_intersection_check
from abelquad.feasibility import circle_solutions, max_degree

for d in (1, 2, 3, 5):
    F = f_closed(d)
    print(d, F, circle_solutions(F))

# %%
# Negative coordinates do occur (d = 5); they are not effective classes.
F5 = f_closed(5)
print([p for p in circle_solutions(F5) if min(p) < 0])

# %%
# The degree a + b peaks at (F, F).
print(max_degree(f_closed(2)))
print(self_intersection_check(MiddleClass(7, 7, 2)), self_intersection_check(MiddleClass(1, 1, 2)))
