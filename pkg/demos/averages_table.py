"""Every pattern up to length six, grouped by its exact average.

Complementary patterns (swap heads and tails) behave identically, so only
the representatives starting with heads are listed.  The spread within one
length is striking: at length six the averages run from 64 to 126 tosses.
"""

from coinwait import waiting_time_table

rows = waiting_time_table(range(2, 7))

current = None
for row in rows:
    label = f"{row.length}" if row.length != current else " "
    current = row.length
    print(f"{label}  {row.average:>4}  {' '.join(row.patterns)}")

print()
print("Group sizes at length 6:",
      [len(r.patterns) for r in rows if r.length == 6])

# density of the extremes: most patterns cluster at the fast end
fast = sum(len(r.patterns) for r in rows if r.average == 1 << r.length)
print(f"patterns achieving the 2^m minimum across lengths 2..6: {fast}")
