# coding: utf-8

# # A quantum walk on S3 driven by an invariant vector field
#
# The calculus on S3 comes from the three transpositions u, v, w.  A real
# vector field is X = i p e_u + i q e_v + i r e_w, and its exponential in the
# dual convolution algebra gives a path of states that stays normalised.

import numpy as np

from hopfexp.expmap import (s3_closed_form, s3_field, state_density, transfer_matrix,
                            matexp_apply)
from hopfexp.hopf import counit_vector

# In[1]:

p, q, r = 1.0, 1 / 3, 1 / 2
X = s3_field(p, q, r)
T = transfer_matrix(X)
print(np.round(T.entries, 3))

# The closed form against the matrix exponential, at a few times.

# In[2]:

eps = counit_vector(X.calculus.group)
for t in (0.5, 2.0, 7.0):
    closed = s3_closed_form(p, q, r, t).coeffs
    mat = matexp_apply(T, t, eps).coeffs
    print(t, np.abs(closed - mat).max(), np.linalg.norm(closed))

# Weights of the state density over time.  The six columns are
# e, (1,2,3), (1,3,2), u, v, w and each row sums to one.

# In[3]:

times = np.linspace(0, 7, 8)
weights = np.array([state_density(X, t).weights for t in times])
print(np.round(weights, 4))
print(weights.sum(axis=1))
