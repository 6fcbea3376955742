# Integer lattices with involution
