# coding: utf-8

# # Flows on the quantum group C_q[SU2]
#
# Elements live in the basis a^n b^r c^s (or d^n b^r c^s).  The vector field
# X = gamma e_+ + delta e_- moves each generator into its partner with a
# cosh/sinh profile.

import numpy as np

from hopfexp import qsu2
from hopfexp.qsu2 import QSU2Element

q = 0.9
a, b, c, d = (QSU2Element.generator(g, q) for g in "abcd")

# In[1]:

print(a * d - q * b * c)            # the q-determinant, 1
print(qsu2.coproduct(b))

# In[2]:

gamma = 0.6 + 0.3j
delta = qsu2.real_delta(gamma, q)
for t in (0.0, 0.5, 1.5):
    m = qsu2.evolve_generator("a", gamma, delta, t, q)
    series = qsu2.evolve_series(a, gamma, delta, t)
    print(t, m, m.max_abs_diff(series))

# For the real field the state phi(m h m*) at h = 1 does not move.

# In[3]:

one = QSU2Element.one(q)
for t in np.linspace(0, 3, 4):
    m = qsu2.evolve_generator("a", gamma, delta, t, q)
    print(t, qsu2.state_value(m, one).real, q * q / (1 + q * q))

# The nu_0 flow multiplies each monomial by a phase set by its grade.

# In[4]:

m0 = a + 2 * d * b + a * a
print(qsu2.evolve_nu0(m0, 0.8))
