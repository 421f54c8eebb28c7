#pragma once

#include <span>
#include <vector>

#include "qsep/partition.hpp"
#include "qsep/types.hpp"

namespace qsep {

/// Kronecker product: (a (x) b)[(i*rb + k), (j*cb + l)] = a[i,j] * b[k,l].
Mat kron(const Mat& a, const Mat& b);
/// Left-to-right Kronecker product of a list.
Mat kron_all(std::span<const Mat> factors);

/// I (x) ... (x) op (x) ... (x) I with `op` at the given party slot.
Mat embed_local(const Mat& op, int party, const PartitionSpec& spec);

/// Operator on the full space with `local` at the slot `party` and `rest`
/// (a joint operator on all remaining parties, in ascending party order)
/// filling the other slots.
Mat kron_at(const Mat& local, int party, const Mat& rest, const PartitionSpec& spec);

/// Reduced operator on the kept parties (ascending order), tracing out the rest.
Mat partial_trace(const Mat& m, const PartitionSpec& spec, std::span<const int> keep);

/// Transpose the indices of the selected parties only.
Mat partial_transpose(const Mat& m, const PartitionSpec& spec, std::span<const int> parties);

struct HermitianEig {
  RealVec values;  // ascending
  Mat vectors;     // orthonormal columns, matching order
};

/// Eigendecomposition of a Hermitian matrix. Rejects inputs whose
/// anti-Hermitian part exceeds the gate tolerance.
HermitianEig hermitian_eig(const Mat& m);

struct GeneralEig {
  Vec values;           // sorted by descending modulus
  Mat right;            // columns r_k (unit Euclidean norm up to gauge)
  Mat left;             // columns l_k with l_j^dag r_k = delta_jk
  bool diagonalizable;  // false when the eigenvector matrix is ill-conditioned
  double condition;     // cond_2 of the eigenvector matrix (inf when defective)
};

/// Eigendecomposition of a general square matrix. Eigenvalues always come
/// from a spectrum-preserving triangularization; eigenvectors and the
/// biorthogonal left family are only meaningful when `diagonalizable`.
GeneralEig general_eig(const Mat& m);

/// Largest singular value.
double operator_norm(const Mat& m);
/// Sum of singular values.
double trace_norm(const Mat& m);
/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Mat& hermitian);

/// ||m - m^dag||_op.
double hermiticity_defect(const Mat& m);

}  // namespace qsep
