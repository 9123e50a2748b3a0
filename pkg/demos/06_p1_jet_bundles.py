"""
Jet bundles of line bundles on the projective line
==================================================

Cover P^1 by two affine charts with coordinates t0, t1 = 1/t0.  The
line bundle O(d) has transition function t1^d; its level-n jet bundle
has transition matrix T(t1^d), the twisted action matrix, with entries
written over the overlap (denominators are powers of t0^(0)).

The cocycle condition -- that the transitions for O(d) and O(-d)
multiply to the identity -- holds exactly, via truncated-series
inversion in the localized ring.

For O(1) the jet bundle is globally generated: each chart basis vector
e_i^(j) extends across the other chart with denominator-free
coefficients, giving 2(n+1) global sections.
"""
from jetforge import cocycle_check, global_sections, p1_transition

for n in (1, 2):
    m = p1_transition(1, n, "overlap")
    print("transition of O(1)_%d over the overlap:" % n)
    for row in m.to_rows():
        print("  [ " + " ; ".join(row) + " ]")

for d in range(-2, 3):
    ok = all(cocycle_check(d, n) for n in range(4))
    print("cocycle for O(%d), levels 0..3:" % d, "ok" if ok else "FAILED")

for n in range(3):
    secs = global_sections(1, n)
    labels = " ".join(s.label for s in secs)
    regular = all(s.is_global for s in secs)
    print("O(1)_%d: %d global sections (%s)%s"
          % (n, len(secs), labels, "" if regular else "  NOT REGULAR"))
