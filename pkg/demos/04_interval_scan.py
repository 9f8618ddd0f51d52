"""
Every multistar sits close to a dipole
======================================

For each partition, compare the exact multistar expectation with the
dipole value on the same number of non-leaf edges.
"""

from collections import Counter

from randembed import interval_scan

worst = {}
outside = Counter()
for r in interval_scan(16):
    n = r.reduced_n
    ratio = abs(r.gap) / r.half_width
    if ratio > worst.get(n, (0, None))[0]:
        worst[n] = (ratio, r.partition)
    outside[n] += not r.inside

for n in sorted(worst):
    ratio, lam = worst[n]
    print(f"n'={n:2d}  worst |gap|/half-width = {float(ratio):.3f} at {lam}   outside: {outside[n]}")
