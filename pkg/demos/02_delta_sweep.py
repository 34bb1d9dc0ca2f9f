# coding: utf-8

# # How the attractor fragments as delta shrinks
#
# The symmetric system 3x/10, 3x/10 + 7/10 is swept over 64 log-spaced
# values of delta between 0.006 and 0.1. Small delta means the attractor
# is close to the first-generation Cantor set, so more gaps survive.

# In[1]:

import sys
from pathlib import Path

from ifs2 import FirstGenIFS, SecondGenIFS, delta_grid, run_sweep
from ifs2.serialize import serialize_result

HERE = Path(__file__).resolve().parent
ifs = FirstGenIFS.load(HERE / "data" / "symmetric_030.json")
rows = run_sweep(SecondGenIFS(0.1, ifs), delta_grid(0.006, 0.1, 64))


# In[2]:

print(" delta     iterations  intervals")
for row in rows[::9]:
    print(f" {row.delta:.5f}   {row.iterations:>5}       {len(row.attractor):>3}")
print("all converged:", all(r.converged for r in rows))


# Only the endpoints are ordered. In between the count jumps around,
# since a gap survives or closes depending on how delta lines up with
# the first-generation gap lengths at several levels at once.

# In[3]:

counts = [len(r.attractor) for r in rows]
print("distinct counts:", sorted(set(counts), reverse=True))


# The whole sweep as CSV, ready for any plotting tool. Only the first rows
# are shown; pass a path argument to save everything.

# In[4]:

payload = serialize_result(rows, "csv").decode()
if len(sys.argv) > 1:
    Path(sys.argv[1]).write_text(payload)
print("\n".join(payload.splitlines()[:8]))
