"""
MDS symbol-pair codes in the family
===================================

A symbol-pair code of size M meets the Singleton bound when
M = q^(n - d_p + 2); for these codes (M = q^(n-i)) that is the integer
identity d_p = i + 2.  For length p (e = 1) the first p - 1 exponents
all qualify.  For e >= 2 the identity holds at i = 0, 1, 2, at the
dimension-2 exponent i = p^e - 2 (where d_p reaches n), and at
i = 4 in the special family (p, e) = (3, 2).
"""

from paircodes import CodeSpec, closed_form_pair_distance, is_mds_pair
from paircodes.oracle import min_pair_weight_bruteforce

for p, e in [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (5, 2)]:
    mds = [i for i in range(p**e) if is_mds_pair(CodeSpec(p, 1, e, i))]
    print(f"p={p} e={e} (n={p**e:>3}): MDS symbol-pair at i in {mds}")
print()

# Cross-check one family against the brute-force oracle: the flagged
# exponents are exactly those whose *measured* minimum pair distance
# equals i + 2.
p, e = 3, 2
oracle_mds = []
for i in range(p**e):
    d_p, witness = min_pair_weight_bruteforce(CodeSpec(p, 1, e, i))
    assert d_p == closed_form_pair_distance(CodeSpec(p, 1, e, i))
    if d_p == i + 2:
        oracle_mds.append(i)
print(f"oracle-confirmed MDS set for p=3, e=2: {oracle_mds}")
