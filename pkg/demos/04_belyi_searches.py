"""Violation searches for two-exponent families.

The integrality criterion for the pair (d, e) asks for
W(d,e,x,y) >= 3/2 at all nonzero x, y and V(x) + V(-(d+e)x) >= 1/2 at all
nonzero x.  ``belyi_search`` sweeps all classes with denominator dividing
p^r - 1 level by level and reports the deterministic first violation; a
full sweep with no violation is bounded evidence of integrality, never a
proof.  The binomial criterion gets the same treatment with the bound 1/2.
"""

from monodromy import belyi_search, binomial_search, default_max_r

print("Violated pairs (first witness in search order):")
for p, pair, max_r in [(2, (3, 10), 5), (7, (2, 2), 2), (3, (2, 5), 4), (2, (129, 3), 6)]:
    res = belyi_search(p, pair, max_r=max_r)
    w = res.violation
    print(f"  p={p} {pair}: W({w.x}, {w.y}) = {w.w_value} < {w.bound}")

print("\nA one-variable witness (the monomial side fails first):")
res = belyi_search(2, (6, 1), max_r=4)
w = res.violation
print(f"  p=2 (6,1): {w.criterion} at x={w.x}, V-sum {w.w_value} < {w.bound}")

print("\nIntegral pairs survive full-depth sweeps:")
for p, pair in [(2, (1, 1)), (2, (3, 2)), (3, (2, 2)), (5, (2, 1))]:
    res = belyi_search(p, pair)
    assert not res.found
    print(f"  p={p} {pair}: no violation up to the default r={res.max_r}")

print(f"\nPer-prime default depths (grid guard 10^8 points): "
      f"{[(p, default_max_r(p)) for p in (2, 3, 5, 7)]}")

print("\nBinomial criterion (bound 1/2, zeros allowed one at a time):")
for p, pair, max_r in [(2, (5, 3), 6), (2, (7, 3), 6), (5, (7, 7), 4)]:
    res = binomial_search(p, pair, max_r=max_r)
    if res.found:
        w = res.violation
        print(f"  p={p} {pair}: violated at (x,y)=({w.x},{w.y}), sum {w.w_value}")
    else:
        print(f"  p={p} {pair}: no violation up to r={max_r}")

print("\nReversing the pair never changes the verdict:")
for p, pair in [(2, (3, 10)), (2, (2, 3))]:
    a = belyi_search(p, pair, max_r=6).found
    b = belyi_search(p, pair[::-1], max_r=6).found
    print(f"  p={p}: {pair} -> {a}, {pair[::-1]} -> {b}")
