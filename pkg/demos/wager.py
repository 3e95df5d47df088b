"""The five-euro game.

A casino offers this wager: pay five euros, name a two-toss pattern, then
watch a fair coin until your pattern shows up.  You get one euro back per
toss.  Most people reason that all patterns of the same length are alike.
They are not, and the difference is exactly the pattern's self-overlaps.
"""

from coinwait import parse_pattern, waiting_time_report

for text in ["HT", "HH"]:
    r = waiting_time_report(parse_pattern(text), stake=5)
    p = r.pattern
    print(f"pattern {p.heads_tails()}:")
    print(f"  self-overlap lengths: {r.correlation.overlap_lengths()}")
    print(f"  expected tosses:      {r.expected_tosses}")
    print(f"  expected profit:      {r.expected_profit:+d} euros per game")
    print()

print("Why the gap?  After the partial progress H, a miss hurts HT less:")
print("HT needs a T next; tossing H instead keeps the H as fresh progress.")
print("HH needs another H; tossing T throws all progress away.  Overlap")
print("structure turns that intuition into an exact even integer:")
print()

# every waiting time is a sum of distinct powers of two, one per overlap
for text in ["HT", "HH", "HTHTH", "HHHHHH"]:
    r = waiting_time_report(parse_pattern(text))
    powers = " + ".join(f"2^{j}" for j in r.correlation.overlap_lengths())
    print(f"  N({text:7s}) = {powers} = {r.expected_tosses}")

print()
print("The bounds are sharp at every length: a pattern with no overlap")
print("except itself sits at 2^m, the constant pattern at 2^(m+1) - 2.")
for m in range(2, 7):
    r = waiting_time_report(parse_pattern("1" + "0" * (m - 1)))
    print(f"  length {m}: bounds {r.lower_bound}..{r.upper_bound}")
