#include "qsep/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "qsep/tolerances.hpp"

namespace qsep {

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat kron_all(std::span<const Mat> factors) {
  if (factors.empty()) return Mat::Identity(1, 1);
  Mat out = factors[0];
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

Mat embed_local(const Mat& op, int party, const PartitionSpec& spec) {
  if (party < 0 || party >= spec.parties()) throw ConfigError("party index out of range");
  int d = spec.dim(party);
  if (op.rows() != d || op.cols() != d)
    throw ConfigError("local operator dimension does not match the party");
  int left = 1, right = 1;
  for (int j = 0; j < party; ++j) left *= spec.dim(j);
  for (int j = party + 1; j < spec.parties(); ++j) right *= spec.dim(j);
  return kron(kron(Mat::Identity(left, left), op), Mat::Identity(right, right));
}

Mat kron_at(const Mat& local, int party, const Mat& rest, const PartitionSpec& spec) {
  if (party < 0 || party >= spec.parties()) throw ConfigError("party index out of range");
  int d = spec.dim(party);
  if (local.rows() != d || local.cols() != d)
    throw ConfigError("local operator dimension does not match the party");
  std::vector<int> others = spec.complement(std::span<const int>(&party, 1));
  int rest_dim = 1;
  for (int j : others) rest_dim *= spec.dim(j);
  if (rest.rows() != rest_dim || rest.cols() != rest_dim)
    throw ConfigError("rest operator dimension does not match the remaining parties");

  int n = spec.total_dim();
  PartitionSpec rest_spec = others.empty() ? PartitionSpec({2}) : spec.sub(others);
  Mat out(n, n);
  std::vector<int> row_idx(static_cast<std::size_t>(spec.parties()));
  std::vector<int> col_idx(static_cast<std::size_t>(spec.parties()));
  std::vector<int> row_rest(others.size()), col_rest(others.size());
  for (int r = 0; r < n; ++r) {
    spec.unflat(r, row_idx);
    for (std::size_t k = 0; k < others.size(); ++k)
      row_rest[k] = row_idx[static_cast<std::size_t>(others[k])];
    int rr = others.empty() ? 0 : rest_spec.flat(row_rest);
    for (int c = 0; c < n; ++c) {
      spec.unflat(c, col_idx);
      for (std::size_t k = 0; k < others.size(); ++k)
        col_rest[k] = col_idx[static_cast<std::size_t>(others[k])];
      int cc = others.empty() ? 0 : rest_spec.flat(col_rest);
      cplx rest_entry = others.empty() ? rest(0, 0) : rest(rr, cc);
      out(r, c) = local(row_idx[static_cast<std::size_t>(party)],
                        col_idx[static_cast<std::size_t>(party)]) *
                  rest_entry;
    }
  }
  return out;
}

Mat partial_trace(const Mat& m, const PartitionSpec& spec, std::span<const int> keep) {
  if (keep.empty()) throw ConfigError("cannot trace out everything");
  if (m.rows() != spec.total_dim() || m.cols() != spec.total_dim())
    throw ConfigError("matrix dimension does not match the partition");
  std::vector<int> keep_sorted(keep.begin(), keep.end());
  std::sort(keep_sorted.begin(), keep_sorted.end());
  if (std::adjacent_find(keep_sorted.begin(), keep_sorted.end()) != keep_sorted.end())
    throw ConfigError("duplicate party in keep set");
  std::vector<int> traced = spec.complement(keep_sorted);

  PartitionSpec out_spec = spec.sub(keep_sorted);
  int out_dim = out_spec.total_dim();
  int traced_dim = 1;
  for (int j : traced) traced_dim *= spec.dim(j);

  // Strides of the kept / traced parties inside the full flat index.
  std::vector<int> keep_strides, traced_strides, traced_dims;
  for (int j : keep_sorted) keep_strides.push_back(spec.stride(j));
  for (int j : traced) {
    traced_strides.push_back(spec.stride(j));
    traced_dims.push_back(spec.dim(j));
  }

  // Offset of each kept flat index / traced flat index inside the full index.
  std::vector<int> keep_offset(static_cast<std::size_t>(out_dim));
  {
    std::vector<int> idx(keep_sorted.size());
    for (int a = 0; a < out_dim; ++a) {
      out_spec.unflat(a, idx);
      int off = 0;
      for (std::size_t k = 0; k < idx.size(); ++k) off += idx[k] * keep_strides[k];
      keep_offset[static_cast<std::size_t>(a)] = off;
    }
  }
  std::vector<int> traced_offset(static_cast<std::size_t>(traced_dim));
  {
    std::vector<int> idx(traced.size(), 0);
    for (int c = 0; c < traced_dim; ++c) {
      int off = 0;
      for (std::size_t k = 0; k < idx.size(); ++k) off += idx[k] * traced_strides[k];
      traced_offset[static_cast<std::size_t>(c)] = off;
      for (int k = static_cast<int>(idx.size()) - 1; k >= 0; --k) {
        if (++idx[static_cast<std::size_t>(k)] < traced_dims[static_cast<std::size_t>(k)]) break;
        idx[static_cast<std::size_t>(k)] = 0;
      }
    }
  }

  Mat out = Mat::Zero(out_dim, out_dim);
  for (int a = 0; a < out_dim; ++a)
    for (int b = 0; b < out_dim; ++b) {
      cplx sum = 0.0;
      for (int c = 0; c < traced_dim; ++c)
        sum += m(keep_offset[static_cast<std::size_t>(a)] + traced_offset[static_cast<std::size_t>(c)],
                 keep_offset[static_cast<std::size_t>(b)] + traced_offset[static_cast<std::size_t>(c)]);
      out(a, b) = sum;
    }
  return out;
}

Mat partial_transpose(const Mat& m, const PartitionSpec& spec, std::span<const int> parties) {
  if (m.rows() != spec.total_dim() || m.cols() != spec.total_dim())
    throw ConfigError("matrix dimension does not match the partition");
  std::vector<bool> flip(static_cast<std::size_t>(spec.parties()), false);
  for (int p : parties) {
    if (p < 0 || p >= spec.parties()) throw ConfigError("party index out of range");
    flip[static_cast<std::size_t>(p)] = true;
  }
  int n = spec.total_dim();
  Mat out(n, n);
  std::vector<int> ri(static_cast<std::size_t>(spec.parties()));
  std::vector<int> ci(static_cast<std::size_t>(spec.parties()));
  for (int r = 0; r < n; ++r) {
    spec.unflat(r, ri);
    for (int c = 0; c < n; ++c) {
      spec.unflat(c, ci);
      int src_r = 0, src_c = 0;
      for (int j = 0; j < spec.parties(); ++j) {
        int a = ri[static_cast<std::size_t>(j)];
        int b = ci[static_cast<std::size_t>(j)];
        if (flip[static_cast<std::size_t>(j)]) std::swap(a, b);
        src_r += a * spec.stride(j);
        src_c += b * spec.stride(j);
      }
      out(r, c) = m(src_r, src_c);
    }
  }
  return out;
}

double hermiticity_defect(const Mat& m) {
  Mat diff = m - m.adjoint();
  double fro = diff.norm();
  if (fro <= tol::kHermitianInput) return fro;  // op-norm <= Frobenius
  return operator_norm(diff);
}

HermitianEig hermitian_eig(const Mat& m) {
  if (m.rows() != m.cols()) throw ConfigError("hermitian_eig needs a square matrix");
  if (hermiticity_defect(m) > tol::kHermitianInput)
    throw ConfigError("hermitian_eig: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> solver((m + m.adjoint()) / 2.0);
  if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

GeneralEig general_eig(const Mat& m) {
  if (m.rows() != m.cols()) throw ConfigError("general_eig needs a square matrix");
  const Eigen::Index n = m.rows();

  // Eigenvalues via Schur triangularization: valid even for defective input.
  Eigen::ComplexSchur<Mat> schur(m, /*computeU=*/false);
  if (schur.info() != Eigen::Success) throw std::runtime_error("Schur decomposition failed");
  Vec values(n);
  for (Eigen::Index i = 0; i < n; ++i) values(i) = schur.matrixT()(i, i);

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);

  GeneralEig out;
  out.right = Mat::Zero(n, n);
  out.left = Mat::Zero(n, n);
  out.diagonalizable = false;
  out.condition = std::numeric_limits<double>::infinity();

  Eigen::ComplexEigenSolver<Mat> solver(m, /*computeEigenvectors=*/true);
  bool have_vectors = solver.info() == Eigen::Success && solver.eigenvectors().allFinite();
  if (have_vectors) {
    // Use the solver's eigenvalues so vectors and values stay matched.
    values = solver.eigenvalues();
  }
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    double ma = std::abs(values(a)), mb = std::abs(values(b));
    if (ma != mb) return ma > mb;
    double ra = values(a).real(), rb = values(b).real();
    if (ra != rb) return ra > rb;
    return values(a).imag() > values(b).imag();
  });
  Vec sorted_values(n);
  for (Eigen::Index i = 0; i < n; ++i) sorted_values(i) = values(order[static_cast<std::size_t>(i)]);
  out.values = sorted_values;

  if (!have_vectors) return out;

  Mat v(n, n);
  for (Eigen::Index i = 0; i < n; ++i) v.col(i) = solver.eigenvectors().col(order[static_cast<std::size_t>(i)]);

  Eigen::JacobiSVD<Mat> svd(v);
  double smin = svd.singularValues()(n - 1);
  double smax = svd.singularValues()(0);
  if (smin <= 0.0 || !std::isfinite(smin)) return out;
  out.condition = smax / smin;
  if (out.condition > tol::kDefectiveCondition) return out;

  out.right = v;
  // Rows of V^-1 are the biorthogonal left duals: l_j^dag = (V^-1)_j.
  Mat vinv = v.inverse();
  out.left = vinv.adjoint();
  out.diagonalizable = true;
  return out;
}

double operator_norm(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

double trace_norm(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues().sum();
}

double min_eigenvalue(const Mat& hermitian) {
  Eigen::SelfAdjointEigenSolver<Mat> solver((hermitian + hermitian.adjoint()) / 2.0,
                                            Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian eigensolver failed");
  return solver.eigenvalues()(0);
}

}  // namespace qsep
