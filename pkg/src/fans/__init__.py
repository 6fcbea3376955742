# Cones and equivariant fans
