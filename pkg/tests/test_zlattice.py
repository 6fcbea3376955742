"""
Tests for integer normal forms, F2 elimination and lattices with involution.
"""
import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

import numpy as np
import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf
from sympy.polys.domains import ZZ

from utils.errors import InvalidInvolution, NotAntiInvariant, NotInKernel, NotPrimitive, NotStable
from zlattice.cohomology import canonical_twist, class_of, cohomology, extension_invariants, in_image_test
from zlattice.gf2 import gf2_complete_basis, gf2_in_span, gf2_rank, gf2_solve
from zlattice.involution import (
    InvolutiveLattice,
    TypeSignature,
    canonical_involution,
    decompose,
    fixed_sublattice,
    quotient_projection,
    sub_quotient,
    sublattice_involution,
    winding_group,
)
from zlattice.normal_forms import (
    determinant,
    extend_to_basis,
    hermite_normal_form,
    int_matrix,
    kernel_basis,
    mat_mul,
    same_lattice,
    saturate,
    smith_invariants,
    smith_normal_form,
    solve_integer,
    unimodular_inverse,
)

SWAP = [[0, 1], [1, 0]]


def as_lists(A):
    return [[int(x) for x in row] for row in A]


def test_smith_normal_form_goldens():
    """Smith form of small matrices, with U A V = D."""
    print("\n" + "=" * 60)
    print("TEST 1: Smith Normal Form")
    print("=" * 60)

    A = int_matrix([[2, 0], [0, 3]])
    U, D, V = smith_normal_form(A)
    assert as_lists(D) == [[1, 0], [0, 6]], f"unexpected Smith form {as_lists(D)}"
    assert np.array_equal(mat_mul(U, A, V), D), "U A V must equal D"
    assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1, "transforms must be unimodular"

    U, D, V = smith_normal_form(int_matrix([[0]]))
    assert as_lists(D) == [[0]]

    U, D, V = smith_normal_form(int_matrix([[1, 0], [0, 1]]))
    assert as_lists(D) == [[1, 0], [0, 1]]

    print(f"✅ diag(2, 3) -> {smith_invariants(A)}")


def test_smith_invariants_match_sympy():
    rng = np.random.default_rng(7)
    for _ in range(25):
        rows, cols = rng.integers(1, 5, size=2)
        data = rng.integers(-6, 7, size=(rows, cols)).tolist()
        ours = [abs(d) for d in smith_invariants(int_matrix(data))]
        ref = sympy_snf(sympy.Matrix(data), domain=ZZ)
        theirs = [abs(int(ref[i, i])) for i in range(min(ref.shape)) if ref[i, i] != 0]
        assert ours == theirs, f"Smith invariants differ for {data}: {ours} vs {theirs}"


def test_hermite_normal_form_and_lattices():
    A = int_matrix([[2, 4, 1], [0, 6, 3]])
    H, V, pivots = hermite_normal_form(A)
    assert np.array_equal(mat_mul(A, V), H), "H must be A V"
    assert abs(determinant(V)) == 1
    assert pivots, "a nonzero matrix has pivots"

    K = kernel_basis(A)
    assert K.shape[1] == 1
    assert not mat_mul(A, K).any(), "kernel vectors must be annihilated"

    # <(2, 0), (0, 2)> saturates to Z^2
    assert same_lattice(saturate(int_matrix([[2, 0], [0, 2]])), int_matrix([[1, 0], [0, 1]]))

    x = solve_integer(int_matrix([[2, 0], [0, 3]]), [4, 9])
    assert [int(v) for v in x] == [2, 3]
    assert solve_integer(int_matrix([[2, 0], [0, 3]]), [1, 0]) is None

    B = int_matrix([[1], [1], [0]])
    M = extend_to_basis(B)
    assert abs(determinant(M)) == 1 and np.array_equal(M[:, :1], B)
    assert np.array_equal(mat_mul(M, unimodular_inverse(M)), int_matrix(np.eye(3, dtype=int)))


def test_gf2_elimination():
    A = np.array([[1, 1, 0], [0, 1, 1]], dtype=np.uint8)
    assert gf2_rank(A) == 2
    x = gf2_solve(A, np.array([1, 0], dtype=np.uint8))
    assert x is not None and np.array_equal(A.dot(x) % 2, [1, 0])
    assert gf2_solve(np.array([[1, 1], [1, 1]], dtype=np.uint8), np.array([1, 0], dtype=np.uint8)) is None
    assert gf2_in_span([np.array([1, 1, 0]), np.array([0, 1, 1])], np.array([1, 0, 1]))
    assert not gf2_in_span([np.array([1, 1, 0])], np.array([1, 0, 0]))
    extra = gf2_complete_basis(np.array([[1, 1, 0]], dtype=np.uint8), 3)
    assert len(extra) == 2


def test_involution_validation():
    with pytest.raises(InvalidInvolution):
        InvolutiveLattice.from_rows([[1, 1], [0, 1]])
    with pytest.raises(InvalidInvolution):
        InvolutiveLattice.from_rows([[1, 0, 0], [0, 1, 0]])


def test_type_signature():
    """Types (p;q)_r of the basic involutions."""
    print("\n" + "=" * 60)
    print("TEST 2: Type Signatures")
    print("=" * 60)

    cases = [
        (np.eye(3, dtype=int).tolist(), TypeSignature(3, 0, 0)),
        (SWAP, TypeSignature(1, 1, 1)),
        ([[1, 0], [2, -1]], TypeSignature(1, 1, 0)),
        ([[1, 0, 0], [0, 0, 1], [0, 1, 0]], TypeSignature(2, 1, 1)),
    ]
    for tau, expected in cases:
        L = InvolutiveLattice.from_rows(tau)
        assert L.signature == expected, f"{tau}: got {L.signature}, expected {expected}"
        print(f"✅ {tau} -> {L.signature}")
    assert str(TypeSignature(1, 1, 1)) == "(1;1)_1"


def test_fixed_sublattices_and_winding_group():
    L = InvolutiveLattice.from_rows(SWAP)
    assert same_lattice(fixed_sublattice(L, 1), int_matrix([[1], [1]]))
    assert same_lattice(fixed_sublattice(L, -1), int_matrix([[1], [-1]]))

    gamma = winding_group(L)
    assert gamma.dim == 1
    assert gamma.d1.shape == (1, 1) and gamma.d1[0, 0] == 1
    assert gamma.d0.shape == (1, 1) and gamma.d0[0, 0] == 1

    identity3 = InvolutiveLattice.from_rows(np.eye(3, dtype=int).tolist())
    assert same_lattice(fixed_sublattice(identity3, 1), int_matrix(np.eye(3, dtype=int)))
    assert winding_group(identity3).dim == 0
    assert winding_group(InvolutiveLattice.from_rows([[1, 0, 0], [0, 0, 1], [0, 1, 0]])).dim == 1


@pytest.mark.parametrize("tau", [
    SWAP,
    [[1, 0], [2, -1]],
    [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
    [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]],
    [[-1, 0, 0], [2, 1, 0], [0, 0, -1]],
])
def test_decompose_gives_canonical_form(tau):
    L = InvolutiveLattice.from_rows(tau)
    d = decompose(L)
    U = d.basis_change
    assert abs(determinant(U)) == 1, "basis change must be unimodular"
    assert np.array_equal(mat_mul(unimodular_inverse(U), L.tau, U), canonical_involution(d.signature))
    assert d.signature == L.signature


def test_decompose_examples():
    assert decompose(InvolutiveLattice.from_rows(SWAP)).signature == TypeSignature(1, 1, 1)
    assert decompose(InvolutiveLattice.from_rows([[1, 0], [2, -1]])).signature == TypeSignature(1, 1, 0)


def test_cohomology_dimensions():
    """H^1 and H^2 of Z[tau], Z[-1] and Z[1]."""
    print("\n" + "=" * 60)
    print("TEST 3: Group Cohomology")
    print("=" * 60)

    swap = InvolutiveLattice.from_rows(SWAP)
    minus = InvolutiveLattice.from_rows([[-1]])
    plus = InvolutiveLattice.from_rows([[1]])
    assert (cohomology(swap, 1).dim, cohomology(swap, 2).dim) == (0, 0)
    assert (cohomology(minus, 1).dim, cohomology(minus, 2).dim) == (1, 0)
    assert (cohomology(plus, 1).dim, cohomology(plus, 2).dim) == (0, 1)
    # only the parity of the degree matters
    assert cohomology(minus, 3).dim == 1 and cohomology(minus, 3).degree == 3
    print("✅ Z[tau]: (0, 0), Z[-1]: (1, 0), Z[1]: (0, 1)")


def test_class_of_and_twists():
    minus = InvolutiveLattice.from_rows([[-1]])
    assert class_of(minus, [1], 1).tolist() == [1]
    assert class_of(minus, [2], 1).tolist() == [0]
    assert class_of(minus, [0], 1).tolist() == [0]
    with pytest.raises(NotInKernel):
        class_of(InvolutiveLattice.from_rows(SWAP), [1, 0], 1)

    # twists differing by (1 - tau) N share a representative
    assert canonical_twist(minus, [3]).tolist() == canonical_twist(minus, [1]).tolist()
    with pytest.raises(NotAntiInvariant):
        canonical_twist(InvolutiveLattice.from_rows([[1]]), [1])


def test_in_image_test():
    minus = InvolutiveLattice.from_rows([[-1]])
    assert in_image_test(minus, np.zeros((1, 0), dtype=object), [0])
    assert not in_image_test(minus, np.zeros((1, 0), dtype=object), [1])

    fake = InvolutiveLattice.from_rows([[1, 0], [0, -1]])
    assert in_image_test(fake, int_matrix([[1, 0], [0, 1]]), [0, 1])
    assert not in_image_test(fake, int_matrix([[1], [0]]), [0, 1])


def test_quotients():
    swap = InvolutiveLattice.from_rows(SWAP)
    Q = sub_quotient(swap, int_matrix([[1], [1]]))
    assert Q.rank == 1 and as_lists(Q.tau) == [[-1]]

    Q, P, lift = quotient_projection(swap, np.zeros((2, 0), dtype=object))
    assert Q.signature == swap.signature

    assert sub_quotient(swap, int_matrix([[1, 0], [0, 1]])).rank == 0

    with pytest.raises(NotStable):
        sub_quotient(swap, int_matrix([[1], [0]]))
    with pytest.raises(NotPrimitive):
        sub_quotient(swap, int_matrix([[2], [2]]))

    S, basis = sublattice_involution(swap, int_matrix([[1], [1]]))
    assert as_lists(S.tau) == [[1]]


def test_extension_invariants():
    swap = InvolutiveLattice.from_rows(SWAP)
    plus = InvolutiveLattice.from_rows([[1]])
    minus = InvolutiveLattice.from_rows([[-1]])
    assert extension_invariants(plus, swap, int_matrix([[1], [1]])) == (1, 0)
    assert extension_invariants(minus, swap, int_matrix([[1], [-1]])) == (0, 1)
    split = InvolutiveLattice.from_rows([[1, 0], [0, -1]])
    assert extension_invariants(plus, split, int_matrix([[1], [0]])) == (0, 0)


if __name__ == "__main__":
    pytest.main([__file__, "-v", "-s"])
