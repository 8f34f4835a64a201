"""
Rotations, the hat map, and the group exponential
=================================================

A quick tour of the primitives everything else is built on: the
correspondence between 3-vectors and antisymmetric matrices, the
orthonormal basis of the algebra, and the closed-form exponential.
"""

import numpy as np

from liemc import so3

np.set_printoptions(precision=4, suppress=True)

# The hat map sends a 3-vector to the antisymmetric matrix that acts as
# the cross product: hat(a) @ b == a x b.
a = np.array([1.0, 2.0, 3.0])
b = np.array([0.5, -1.0, 0.25])
print("hat(a) =\n", so3.hat(a))
print("hat(a) @ b =", so3.hat(a) @ b)
print("a x b      =", np.cross(a, b))

# The basis used throughout is xi_i = hat(e_i)/sqrt(2), which is
# orthonormal under <A, B> = Tr(A^T B).  That normalization is what
# makes the kinetic energy in coordinates exactly |v|^2 / 2.
xis = so3.basis()
gram = np.einsum("iab,jab->ij", xis, xis)
print("\nGram matrix of the basis (should be I):\n", gram)
print("kinetic energy of v = (1, 1, 1):", so3.kinetic_energy(np.ones(3)))

# Exponentiating algebra coordinates gives a rotation.  Coordinates
# (0, 0, theta*sqrt(2)) rotate by theta about the z axis.
theta = np.pi / 6
g = so3.exp(np.array([0.0, 0.0, theta * np.sqrt(2.0)]))
print("\nrotation by 30 degrees about z:\n", g)
print("orthogonality defect:", so3.orthogonality_defect(g))

# haar_sample draws uniformly distributed rotations.  Uniformity shows
# up as E[Tr(g)] = 0.
rng = np.random.default_rng(0)
gs = so3.haar_sample(rng, size=20_000)
print("\nmean trace of 20k Haar rotations:",
      float(np.mean(np.trace(gs, axis1=1, axis2=2))))
