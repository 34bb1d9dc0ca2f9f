# coding: utf-8

# # A certified interval
#
# When both first-generation ratios are below 1/3, a finite number N of
# rescaled copies of the Cantor set already sums to a set containing an
# interval. N depends only on the smallest ratio a.

# In[1]:

import numpy as np

from ifs2 import (CertificatePreconditionError, FirstGenIFS, SecondGenIFS, certify,
                  iterate_attractor, minimal_summand_count)

for a in (0.1, 0.2, 0.25, 0.3, 0.33):
    print(f"a = {a:<5} N = {minimal_summand_count(a)}")


# For the symmetric system a = 0.3 and N = 4, so [0, (1 - delta) delta^3]
# must lie inside the attractor for every delta. Check it on a grid.

# In[2]:

ifs = FirstGenIFS.from_pairs([(0.3, 0.0), (0.3, 1.0)])
for delta in np.geomspace(0.006, 0.1, 5):
    system = SecondGenIFS(float(delta), ifs)
    cert = certify(system, iterate_attractor(system).attractor)
    print(f"delta {delta:.4f}  interval [0, {cert.certified_interval.hi:.3e}]  contained {cert.contained}")


# Exact arithmetic gives the endpoint as a fraction.

# In[3]:

system = SecondGenIFS(0.1, ifs).to_rational()
print(certify(system, iterate_attractor(system).attractor).to_json())


# The x/5, 2x/5 + 3/5 system has a ratio above 1/3, so no certificate exists.

# In[4]:

worked = SecondGenIFS(0.085, FirstGenIFS.from_pairs([(0.2, 0.0), (0.4, 1.0)]))
try:
    certify(worked, iterate_attractor(worked).attractor)
except CertificatePreconditionError as exc:
    print("rejected:", exc)
