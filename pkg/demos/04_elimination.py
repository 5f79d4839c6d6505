"""
Eliminating each dimension
==========================

``eliminate`` runs the whole argument for one dimension and keeps an audit
record.  Only d = 1, an elliptic curve of bidegree (2,2), survives.
"""

# %%
from abelquad.feasibility import eliminate, explain

for d in (1, 2, 3, 4):
    print("\n".join(explain(eliminate(d))))
    print()

# %%
# The threefold case enumerates three polarization types of h0 = 8.  Two are
# struck by cited results; (2,2,2) is reported, and the optional Kummer rule
# disposes of it.
rec = eliminate(3)
print(rec.surviving_candidates[0].paper_omitted)
print([a.rule_id for a in eliminate(3, include_extra_rules=True).rules_applied])

# %%
# Verdicts for the first 30 dimensions.
from collections import Counter

print(Counter(eliminate(d).verdict.value for d in range(1, 31)))

# %%
# Records serialize to plain dictionaries (used by the CLI JSON output).
import json

print(json.dumps(eliminate(2).to_dict(), indent=1)[:400])
