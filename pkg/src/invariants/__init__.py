# Census polynomials and topological invariants
