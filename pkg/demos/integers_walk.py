# coding: utf-8

# # Nearest-neighbour fields on the integers
#
# With X = X+ e_{+1} + X- e_{-1} the exponential has a closed form in terms of
# 0F1, i.e. Bessel functions.  The real field gives a quantum walk, the
# imaginary one gives the discrete heat equation.

import numpy as np
import scipy.special as sp

from hopfexp.expmap import first_amplitude_zero, z_diffusion, z_state_weights
from hopfexp.groups import IntWindow

window = IntWindow(64)
N = window.radius

# In[1]:

# quantum walk weights w_n(t) for -4 <= n <= 4
for t in (0.0, 1.0, 2.5, 5.0):
    w = z_state_weights(1.0, -1.0, t, window).weights
    print(t, np.round(w[N - 4:N + 5], 4), w.sum())

# w_0(1) should be J0(2)^2:

# In[2]:

print(z_state_weights(1.0, -1.0, 1.0, window).weights[N], sp.j0(2.0) ** 2)

# The amplitude at the origin first vanishes at half the first zero of J0.

# In[3]:

print(first_amplitude_zero(), sp.jn_zeros(0, 1)[0] / 2)

# In[4]:

# heat kernel: mass is conserved and the peak decays monotonically
for t in (0.0, 0.5, 2.0, 5.0):
    f = z_diffusion(1.0, t, window).coeffs
    print(t, round(f[N].real, 6), f.sum().real)

# Past t |X+| of about 10 the 0F1 sums cancel badly; the closed route refuses
# and the banded matrix route still works on a wide enough window.

# In[5]:

big = IntWindow(96)
try:
    z_state_weights(1.0, -1.0, 30.0, big, route="closed")
except Exception as exc:
    print(type(exc).__name__, exc)
print(z_state_weights(1.0, -1.0, 30.0, big, route="matrix").weights.sum())
