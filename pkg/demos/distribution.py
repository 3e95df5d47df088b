"""When exactly does a game end?  The full first-occurrence distribution.

Probabilities on a fair coin are dyadic rationals, so everything here is
exact: numerators over powers of two, rendered with terminating decimals.
No floating point is involved until the final column formatting.
"""

from coinwait import (
    DyadicRational,
    first_occurrence_distribution,
    occurrence_counts,
    parse_pattern,
)

for text in ["11", "10101"]:
    p = parse_pattern(text)
    horizon = 16
    dist = first_occurrence_distribution(p, horizon)
    counts = occurrence_counts(p, horizon)

    print(f"pattern {p} ({p.heads_tails()}): P(game ends on toss n)")
    total = DyadicRational(0)
    for n in range(len(p), horizon + 1):
        total = total + dist[n]
        bar = "#" * round(200 * float(dist[n].as_fraction()))
        print(f"  n={n:>2}  {dist[n].fraction_str():>9}  {bar}")

    residual = DyadicRational(counts.sigma[horizon], horizon)
    print(f"  still running after toss {horizon}: {residual.fraction_str()}"
          f" = {residual.decimal_str()}")
    # the two pieces partition all outcomes, exactly
    assert total + residual == 1
    print()

print("The mass beyond any horizon is sigma_N / 2^N, which is why the")
print("expected game length can also be summed as a series of exactly")
print("those terms; see exact_identities.py.")
