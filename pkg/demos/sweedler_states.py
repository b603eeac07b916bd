# coding: utf-8

# # The Sweedler-Taft algebra
#
# Four dimensions, basis 1, t, x, tx with t^2 = 1, x^2 = 0, xt = -tx.  Here
# X o omega squares to a multiple of itself, so its exponential is a two-term
# expression.

import numpy as np

from hopfexp import sweedler as sw

E = sw.SweedlerElement
t, x = E.basis("t"), E.basis("x")

# In[1]:

a, b = 0.3 + 1j, -0.5 + 0.2j
v = sw.x_circ_omega_st(a, b)
print(v * v, -a * v)

# In[2]:

for s in (0.0, 0.5, 1.0):
    print(s, np.abs(sw.exp_closed(a, b, s).coeffs - sw.exp_series(a, b, s).coeffs).max())

# Evolving m(0) = t + x and reading off the functional h -> phi(m h m*):

# In[3]:

lam = 1j
for s in (0.0, 0.5, 1.0):
    m = sw.evolve(t + x, a, b, s)
    print(s, m, sw.state_functional(m, lam))
