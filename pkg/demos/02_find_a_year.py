"""Which years are sums of squares of consecutive primes?

2020 = 17^2 + 19^2 + 23^2 + 29^2 is the motivating example; this walks
every year of the current century through find_representations.

Run:  python demos/02_find_a_year.py
"""

from math import isqrt

from cpsq import find_representations, sieve_primes

table = sieve_primes(isqrt(2100))

hits = 0
for year in range(2000, 2100):
    reps = find_representations(year, table)
    if not reps:
        continue
    hits += 1
    for rep in reps:
        i = rep.start_index - 1
        run = table.primes[i : i + rep.length]
        terms = " + ".join(f"{int(p)}^2" for p in run)
        print(f"{year} = {terms}   (p_{rep.start_index}, length {rep.length})")

print(f"\nrepresentable years in 2000-2099: {hits}")
