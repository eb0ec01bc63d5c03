# All homology signatures of small genus, with the classical bounds checked.

import time

from riemann_homology.catalog import check_bounds, enumerate_homology_signatures, to_csv

t0 = time.perf_counter()
entries = enumerate_homology_signatures(2, 4)
print(f"{len(entries)} signatures in {time.perf_counter() - t0:.2f} s")
for e in entries:
    print(f"g={e.genus}  {str(e.signature):<18} {str(e.group):<14} {e.orbifold}")

print("bounds ok:", check_bounds(entries).ok)
print(to_csv(entries[:3]))
