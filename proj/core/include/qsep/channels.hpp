#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qsep/density.hpp"
#include "qsep/linalg.hpp"
#include "qsep/partition.hpp"
#include "qsep/types.hpp"

namespace qsep {

/// Completely positive trace-preserving map in Kraus form. Construction
/// checks the completeness relation sum K^dag K = I.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Mat> kraus_ops);

  int dim() const { return dim_; }
  const std::vector<Mat>& kraus() const { return kraus_; }

  /// sum_k K_k x K_k^dag on an arbitrary operator.
  Mat apply_matrix(const Mat& x) const;
  DensityMatrix apply(const DensityMatrix& rho) const;

  /// Channel acting on one tensor factor of a multiparty operator.
  Mat apply_local_matrix(const Mat& x, int party, const PartitionSpec& spec) const;
  DensityMatrix apply_local(const DensityMatrix& rho, int party) const;

 private:
  std::vector<Mat> kraus_;
  int dim_;
};

/// d^2 x d^2 matrix form acting on column-vectorized operators,
/// vec(|i><j|) = |j> (x) |i>.
class Superoperator {
 public:
  Superoperator(Mat m, int dim);
  static Superoperator from_kraus(const KrausChannel& ch);

  const Mat& mat() const { return mat_; }
  int dim() const { return dim_; }

  Mat apply_matrix(const Mat& x) const;
  Superoperator power(int t) const;

 private:
  Mat mat_;
  int dim_;
};

Mat vectorize(const Mat& x);
Mat unvectorize(const Vec& v, int dim);

/// Identity map on a d-dimensional party.
KrausChannel identity_channel(int d);
/// rho -> p rho + (1-p) I/d Tr[rho], realized by weighted Weyl operators.
KrausChannel depolarizing(int d, double p);
/// Qubit amplitude damping (pure, rank-deficient fixed point for gamma > 0).
KrausChannel amplitude_damping(double gamma);
/// Haar-random channel from an isometry with `num_kraus` blocks.
KrausChannel random_channel(int d, int num_kraus, std::uint64_t seed);
/// Global channel on N qudits: cyclic shift of party contents (j -> j+1)
/// followed by full depolarization at site 0.
KrausChannel shift_depolarize_ring(int n_parties, int d);

/// a after b: Kraus set {A_i B_j}.
KrausChannel compose(const KrausChannel& a, const KrausChannel& b);

/// Channel raised to an integer power. The Kraus form is kept only while
/// the operator count stays within dim^4; the superoperator form is always
/// available.
class PoweredChannel {
 public:
  PoweredChannel(const KrausChannel& ch, int t);

  int t() const { return t_; }
  const Superoperator& sop() const { return sop_; }
  const std::optional<KrausChannel>& kraus() const { return kraus_; }

  Mat apply_matrix(const Mat& x) const;
  DensityMatrix apply(const DensityMatrix& rho) const;

 private:
  Superoperator sop_;
  std::optional<KrausChannel> kraus_;
  int t_;
};

PoweredChannel power(const KrausChannel& ch, int t);

/// One local channel per party; the global map is their tensor product.
class TensorChannel {
 public:
  TensorChannel(std::vector<KrausChannel> locals, PartitionSpec spec);

  const PartitionSpec& spec() const { return spec_; }
  const KrausChannel& local(int party) const { return locals_.at(static_cast<std::size_t>(party)); }
  int parties() const { return static_cast<int>(locals_.size()); }

  Mat apply_matrix(const Mat& x) const;
  DensityMatrix apply(const DensityMatrix& rho) const;
  DensityMatrix apply_iterated(const DensityMatrix& rho, int t) const;

 private:
  std::vector<KrausChannel> locals_;
  PartitionSpec spec_;
};

/// Relaxation data of a channel: fixed point, its smallest eigenvalue, the
/// damping gap, and the qualitative flags the separability theorem needs.
struct SpectralProfile {
  Mat fixed_point;       // Hermitian, unit trace
  double lambda_min;     // smallest eigenvalue of the fixed point
  double gap_mu;         // second largest eigenvalue modulus of the superoperator
  bool unique;           // eigenvalue 1 is simple
  bool full_rank;        // lambda_min above tolerance
  bool diagonalizable;   // superoperator has a well-conditioned eigenbasis
};

SpectralProfile spectral_profile(const KrausChannel& ch);

/// Superoperator spectrum in the tensor-product Weyl operator basis.
/// When the channel permutes that basis (each basis operator maps to at
/// most one other, as for shift+depolarize rings), eigenvalues are read
/// exactly from the cycle structure; otherwise dense triangularization.
std::vector<cplx> superoperator_spectrum(const KrausChannel& ch, const PartitionSpec& spec);

enum class EnvelopeMode { SpectralRigorous, Empirical };

/// Constants (c, kappa) certifying ||E^t(rho) - pi||_op <= c e^{-kappa t}
/// for every input state and every t >= 1.
struct ConvergenceEnvelope {
  double c = 0.0;
  double kappa = 0.0;
  EnvelopeMode mode = EnvelopeMode::Empirical;
  int t_window = 0;  // validation horizon
};

struct EnvelopeOptions {
  double delta = 0.05;   // empirical kappa = (1 - delta) * (-ln mu)
  double safety = 2.0;   // empirical c multiplier
  int haar_probes = 200;
  std::uint64_t probe_seed = 0x9d5ab5u;
};

ConvergenceEnvelope convergence_envelope(const KrausChannel& ch, EnvelopeMode mode,
                                         int t_window = 60,
                                         const EnvelopeOptions& options = {});

struct ContractionViolation {
  int t;
  int probe;
  double lhs;
  double rhs;
};

/// Re-validate an envelope: empty result means no probe at any t in
/// 1..t_max exceeds the bound.
std::vector<ContractionViolation> check_contraction(const KrausChannel& ch,
                                                    const SpectralProfile& profile,
                                                    const ConvergenceEnvelope& env,
                                                    std::span<const DensityMatrix> probes,
                                                    int t_max);

}  // namespace qsep
