"""
A seeded corpus experiment
==========================

Generate a reproducible batch of random ideals, run the full check on
each, and tabulate how much slack the exact Stanley depth leaves over
the size invariant and over the recursive bound.
"""

from collections import Counter

from stanley import CorpusSpec, check_size_inequality, generate_corpus

spec = CorpusSpec(seed=42, count=40, family="general",
                  n_range=(2, 4), gens_range=(2, 4), max_exponent=3)
ideals = generate_corpus(spec)

size_slack = Counter()
bound_slack = Counter()
violations = 0
for I in ideals:
    rep = check_size_inequality(I)
    size_slack[rep.sdepth_exact - rep.size.size] += 1
    bound_slack[rep.sdepth_exact - rep.bound.value] += 1
    if not rep.ok:
        violations += 1
        print("VIOLATION:", I.render())

print(f"{len(ideals)} ideals, {violations} violations")
print("sdepth - size  :", dict(sorted(size_slack.items())))
print("sdepth - bound :", dict(sorted(bound_slack.items())))
