"""Re-evaluating the built-in table of W values.

W_p(d,e,x,y) = V(x) + V(y) + V(y-(d+e)x) + V(ex-y) + V(-ex).  A value below
3/2 at any nonzero (x, y) certifies that the two-exponent family (d, e) is
not integral.  The table collects every such certificate quoted in the
classification's case analysis; each row must reproduce exactly in rational
arithmetic.
"""

from monodromy import w_value
from monodromy.criteria import WITNESS_TABLE, verify_witness_table

results = verify_witness_table()
assert all(row["ok"] for row in results)

print(f"{len(results)} rows, all exact.  A sample:\n")
print(f"{'p':>2} {'d':>4} {'e':>4} {'x':>8} {'y':>8} {'W':>6}  item")
for row in results[::6]:
    print(
        f"{row['p']:>2} {row['d']:>4} {row['e']:>4} {row['x']:>8} {row['y']:>8} "
        f"{row['computed']:>6}  #{row['item']}"
    )

from fractions import Fraction

values = sorted({Fraction(row["computed"]) for row in results})
assert all(v < Fraction(3, 2) for v in values)
print(f"\ndistinct W values, all below 3/2: {[str(v) for v in values]}")

p, d, e, x, y = 2, 5, 12, "19/127", "69/127"
print(f"\nClosest call in the table: W_{p}({d},{e},{x},{y}) = {w_value(p, (d, e), x, y)} (10/7 = 1.4286...)")
