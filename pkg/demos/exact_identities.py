"""The exact combinatorics behind the averages.

sigma_n counts the length-n toss strings in which the pattern never
appears; tau_n counts those where it appears exactly once, at the very
end.  Three identities tie these to the waiting time, and all of them
hold on the nose in integer arithmetic, at any horizon.
"""

from coinwait import (
    expected_waiting_time,
    fibonacci,
    mean_via_sigma_series,
    occurrence_counts,
    parse_pattern,
    verify_identities,
)

p = parse_pattern("110")
counts = occurrence_counts(p, 12)
print(f"pattern {p}:")
print(f"  sigma: {counts.sigma}")
print(f"  tau:   {counts.tau}")

# doubling: appending one toss either keeps a string avoiding or ends it
n = 9
print(f"  2*sigma_{n-1} = {2 * counts.sigma[n - 1]}"
      f" = sigma_{n} + tau_{n} = {counts.sigma[n]} + {counts.tau[n]}")

# Fibonacci in disguise: tau_n for 110 is F_n - 1
print("  tau_n vs F_n - 1:",
      all(counts.tau[n] == fibonacci(n) - 1 for n in range(1, 13)))
print()

# the identity report runs doubling, overlap expansion and the exact
# telescoping of probability mass, at every index up to the horizon
for text in ["11", "1011", "10101", "111111"]:
    report = verify_identities(parse_pattern(text), 64)
    print(f"identities for {text} up to horizon 64: "
          f"{'all hold' if report.all_hold else 'BROKEN'}")
print()

# the waiting time is also the series sum of sigma_n / 2^n; partial sums
# climb toward it and the exact residual is always known
p = parse_pattern("10101")
exact = expected_waiting_time(p)
print(f"N({p}) = {exact}; series partial sums:")
for horizon in [10, 50, 200, 800]:
    partial = mean_via_sigma_series(p, horizon)
    gap = exact - partial.as_fraction()
    print(f"  horizon {horizon:>4}: {str(partial)[:40]:40s}"
          f" residual {float(gap):.3e}")
print("Constant patterns converge far more slowly: their avoidance counts")
print("shrink like 0.99^n, so this series is a cross-check, not the way")
print("anyone should actually compute N.")
