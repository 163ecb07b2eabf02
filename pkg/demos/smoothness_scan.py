"""Count rationally smooth permutations two ways.

For each symmetric group up to S6, tally the w with trivial full
Kazhdan-Lusztig column P_1,w = 1 and, independently, the w avoiding the
patterns 4231 and 3412.  The two counts agree group by group; the
sequence 1, 2, 6, 22, 88, 366 is the classical one.

    python demos/smoothness_scan.py
"""

from klbounds import get_system, kl_polynomial
from klbounds.patterns import avoids_patterns
from klbounds.polynomials import ONE

SMOOTHNESS_PATTERNS = ("4231", "3412")

print(f"{'group':>6} {'order':>6} {'P_1,w = 1':>10} {'avoiders':>9}")
for rank in range(1, 6):
    system = get_system(f"A{rank}")
    e = system.identity
    by_kl = 0
    by_patterns = 0
    for w in system.elements():
        if kl_polynomial(system, e, w) == ONE:
            by_kl += 1
        if avoids_patterns(system.to_oneline(w), SMOOTHNESS_PATTERNS):
            by_patterns += 1
    name = f"S{rank + 1}"
    mark = "" if by_kl == by_patterns else "   MISMATCH"
    print(f"{name:>6} {len(system.elements()):>6} {by_kl:>10} "
          f"{by_patterns:>9}{mark}")
