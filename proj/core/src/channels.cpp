#include "qsep/channels.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "qsep/designs.hpp"
#include "qsep/rng.hpp"
#include "qsep/tolerances.hpp"

namespace qsep {

namespace {

void check_square_same_dim(const std::vector<Mat>& ops) {
  if (ops.empty()) throw ConfigError("channel needs at least one Kraus operator");
  Eigen::Index d = ops.front().rows();
  for (const Mat& k : ops)
    if (k.rows() != d || k.cols() != d)
      throw ConfigError("all Kraus operators must be square with equal dimension");
}

// Weyl (generalized Pauli) operators W_{kl} = X^k Z^l on dimension d.
Mat weyl_operator(int d, int k, int l) {
  Mat w = Mat::Zero(d, d);
  cplx omega = std::exp(cplx(0.0, 2.0 * std::numbers::pi / static_cast<double>(d)));
  for (int n = 0; n < d; ++n) w((n + k) % d, n) = std::pow(omega, static_cast<double>(l * n));
  return w;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<Mat> kraus_ops) : kraus_(std::move(kraus_ops)) {
  check_square_same_dim(kraus_);
  dim_ = static_cast<int>(kraus_.front().rows());
  Mat completeness = Mat::Zero(dim_, dim_);
  for (const Mat& k : kraus_) completeness += k.adjoint() * k;
  completeness -= Mat::Identity(dim_, dim_);
  if (operator_norm(completeness) > tol::kKrausCompleteness)
    throw ConfigError("Kraus operators do not satisfy sum K^dag K = I");
}

Mat KrausChannel::apply_matrix(const Mat& x) const {
  if (x.rows() != dim_ || x.cols() != dim_) throw ConfigError("operator dimension mismatch");
  Mat out = Mat::Zero(dim_, dim_);
  for (const Mat& k : kraus_) out += k * x * k.adjoint();
  return out;
}

DensityMatrix KrausChannel::apply(const DensityMatrix& rho) const {
  return DensityMatrix(apply_matrix(rho.mat()), rho.spec());
}

Mat KrausChannel::apply_local_matrix(const Mat& x, int party, const PartitionSpec& spec) const {
  if (party < 0 || party >= spec.parties()) throw ConfigError("party index out of range");
  if (spec.dim(party) != dim_) throw ConfigError("channel dimension does not match the party");
  if (x.rows() != spec.total_dim() || x.cols() != spec.total_dim())
    throw ConfigError("operator dimension does not match the partition");

  // Contract only the party's index block: with the flat index split as
  // (left, j, right), left-multiplying by I (x) K (x) I touches j alone.
  int left = 1, right = 1;
  for (int j = 0; j < party; ++j) left *= spec.dim(j);
  for (int j = party + 1; j < spec.parties(); ++j) right *= spec.dim(j);
  const int d = dim_;
  const int n = spec.total_dim();

  Mat out = Mat::Zero(n, n);
  Mat tmp(n, n);
  for (const Mat& k : kraus_) {
    tmp.setZero();
    // tmp = (I (x) K (x) I) * x
    for (int a = 0; a < left; ++a)
      for (int i = 0; i < d; ++i)
        for (int ip = 0; ip < d; ++ip) {
          cplx kii = k(i, ip);
          if (kii == cplx(0.0)) continue;
          int row_out = (a * d + i) * right;
          int row_in = (a * d + ip) * right;
          tmp.middleRows(row_out, right) += kii * x.middleRows(row_in, right);
        }
    // out += tmp * (I (x) K^dag (x) I)
    for (int a = 0; a < left; ++a)
      for (int jp = 0; jp < d; ++jp)
        for (int j = 0; j < d; ++j) {
          cplx kjj = std::conj(k(j, jp));
          if (kjj == cplx(0.0)) continue;
          int col_out = (a * d + j) * right;
          int col_in = (a * d + jp) * right;
          out.middleCols(col_out, right) += kjj * tmp.middleCols(col_in, right);
        }
  }
  return out;
}

DensityMatrix KrausChannel::apply_local(const DensityMatrix& rho, int party) const {
  return DensityMatrix(apply_local_matrix(rho.mat(), party, rho.spec()), rho.spec());
}

Superoperator::Superoperator(Mat m, int dim) : mat_(std::move(m)), dim_(dim) {
  if (mat_.rows() != mat_.cols() || mat_.rows() != static_cast<Eigen::Index>(dim) * dim)
    throw ConfigError("superoperator must be d^2 x d^2");
}

Superoperator Superoperator::from_kraus(const KrausChannel& ch) {
  int d = ch.dim();
  Mat s = Mat::Zero(d * d, d * d);
  // vec(K x K^dag) = (conj(K) (x) K) vec(x) under column vectorization
  for (const Mat& k : ch.kraus()) s += kron(k.conjugate(), k);
  return Superoperator(std::move(s), d);
}

Mat vectorize(const Mat& x) {
  Mat v(x.rows() * x.cols(), 1);
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    v.block(j * x.rows(), 0, x.rows(), 1) = x.col(j);
  return v;
}

Mat unvectorize(const Vec& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim)
    throw ConfigError("vector length is not dim^2");
  Mat x(dim, dim);
  for (int j = 0; j < dim; ++j) x.col(j) = v.segment(static_cast<Eigen::Index>(j) * dim, dim);
  return x;
}

Mat Superoperator::apply_matrix(const Mat& x) const {
  if (x.rows() != dim_ || x.cols() != dim_) throw ConfigError("operator dimension mismatch");
  Vec v = mat_ * vectorize(x);
  return unvectorize(v, dim_);
}

Superoperator Superoperator::power(int t) const {
  if (t < 0) throw ConfigError("power needs t >= 0");
  Mat acc = Mat::Identity(mat_.rows(), mat_.cols());
  Mat base = mat_;
  int e = t;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return Superoperator(std::move(acc), dim_);
}

KrausChannel identity_channel(int d) {
  if (d < 2) throw ConfigError("dimension must be >= 2");
  return KrausChannel({Mat::Identity(d, d)});
}

KrausChannel depolarizing(int d, double p) {
  if (d < 2) throw ConfigError("dimension must be >= 2");
  if (p < 0.0 || p > 1.0) throw ConfigError("depolarization strength p must lie in [0, 1]");
  // p rho + (1-p) I/d Tr[rho] as a Weyl twirl: weight (1-p)/d^2 on every
  // W_{kl}, plus the extra p on the identity.
  std::vector<Mat> ops;
  double w = (1.0 - p) / static_cast<double>(d * d);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      double weight = (k == 0 && l == 0) ? p + w : w;
      if (weight <= 0.0) continue;
      ops.push_back(std::sqrt(weight) * weyl_operator(d, k, l));
    }
  return KrausChannel(std::move(ops));
}

KrausChannel amplitude_damping(double gamma) {
  if (gamma < 0.0 || gamma > 1.0) throw ConfigError("damping rate must lie in [0, 1]");
  Mat k0 = Mat::Zero(2, 2), k1 = Mat::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  k1(0, 1) = std::sqrt(gamma);
  return KrausChannel({k0, k1});
}

KrausChannel random_channel(int d, int num_kraus, std::uint64_t seed) {
  if (d < 2) throw ConfigError("dimension must be >= 2");
  if (num_kraus < 1) throw ConfigError("need at least one Kraus operator");
  Rng rng(seed);
  Mat g(static_cast<Eigen::Index>(d) * num_kraus, d);
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = rng.complex_gaussian();
  // Haar isometry: QR with the phase convention that makes R's diagonal
  // real positive.
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(g.rows(), d);
  Mat r = qr.matrixQR().topRows(d).triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    cplx rjj = r(j, j);
    cplx phase = std::abs(rjj) > 0.0 ? rjj / std::abs(rjj) : cplx(1.0);
    q.col(j) *= phase;
  }
  std::vector<Mat> ops;
  ops.reserve(static_cast<std::size_t>(num_kraus));
  for (int k = 0; k < num_kraus; ++k)
    ops.push_back(q.middleRows(static_cast<Eigen::Index>(k) * d, d));
  return KrausChannel(std::move(ops));
}

KrausChannel shift_depolarize_ring(int n_parties, int d) {
  if (n_parties < 3) throw ConfigError("ring needs at least 3 parties");
  if (d < 2) throw ConfigError("dimension must be >= 2");
  PartitionSpec spec = PartitionSpec::uniform(n_parties, d);
  int n = spec.total_dim();

  // Shift unitary: contents of party j move to party j+1 (mod N).
  Mat shift = Mat::Zero(n, n);
  std::vector<int> idx(static_cast<std::size_t>(n_parties));
  std::vector<int> out_idx(static_cast<std::size_t>(n_parties));
  for (int f = 0; f < n; ++f) {
    spec.unflat(f, idx);
    for (int j = 0; j < n_parties; ++j)
      out_idx[static_cast<std::size_t>((j + 1) % n_parties)] = idx[static_cast<std::size_t>(j)];
    shift(spec.flat(out_idx), f) = 1.0;
  }

  // Full depolarization (p = 0) at site 0: Kraus (1/sqrt d) |a><b| (x) I.
  int rest = n / d;
  std::vector<Mat> ops;
  ops.reserve(static_cast<std::size_t>(d) * d);
  double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Mat e = Mat::Zero(d, d);
      e(a, b) = inv_sqrt_d;
      ops.push_back(kron(e, Mat::Identity(rest, rest)) * shift);
    }
  return KrausChannel(std::move(ops));
}

KrausChannel compose(const KrausChannel& a, const KrausChannel& b) {
  if (a.dim() != b.dim()) throw ConfigError("cannot compose channels of different dimension");
  std::vector<Mat> ops;
  ops.reserve(a.kraus().size() * b.kraus().size());
  for (const Mat& ka : a.kraus())
    for (const Mat& kb : b.kraus()) ops.push_back(ka * kb);
  return KrausChannel(std::move(ops));
}

PoweredChannel::PoweredChannel(const KrausChannel& ch, int t)
    : sop_(Superoperator::from_kraus(ch).power(t)), t_(t) {
  if (t < 0) throw ConfigError("power needs t >= 0");
  double budget = std::pow(static_cast<double>(ch.dim()), 4.0);
  double count = 1.0;
  for (int i = 0; i < t; ++i) {
    count *= static_cast<double>(ch.kraus().size());
    if (count > budget) break;
  }
  if (count <= budget) {
    KrausChannel acc = identity_channel(ch.dim());
    for (int i = 0; i < t; ++i) acc = compose(ch, acc);
    kraus_ = std::move(acc);
  }
}

Mat PoweredChannel::apply_matrix(const Mat& x) const {
  if (kraus_) return kraus_->apply_matrix(x);
  return sop_.apply_matrix(x);
}

DensityMatrix PoweredChannel::apply(const DensityMatrix& rho) const {
  return DensityMatrix(apply_matrix(rho.mat()), rho.spec());
}

PoweredChannel power(const KrausChannel& ch, int t) { return PoweredChannel(ch, t); }

TensorChannel::TensorChannel(std::vector<KrausChannel> locals, PartitionSpec spec)
    : locals_(std::move(locals)), spec_(std::move(spec)) {
  if (static_cast<int>(locals_.size()) != spec_.parties())
    throw ConfigError("need exactly one local channel per party");
  for (int j = 0; j < spec_.parties(); ++j)
    if (locals_[static_cast<std::size_t>(j)].dim() != spec_.dim(j))
      throw ConfigError("local channel dimension does not match its party");
}

Mat TensorChannel::apply_matrix(const Mat& x) const {
  Mat out = x;
  for (int j = 0; j < parties(); ++j)
    out = locals_[static_cast<std::size_t>(j)].apply_local_matrix(out, j, spec_);
  return out;
}

DensityMatrix TensorChannel::apply(const DensityMatrix& rho) const {
  if (!(rho.spec() == spec_)) throw ConfigError("state partition does not match the channel");
  return DensityMatrix(apply_matrix(rho.mat()), spec_);
}

DensityMatrix TensorChannel::apply_iterated(const DensityMatrix& rho, int t) const {
  if (t < 0) throw ConfigError("time must be >= 0");
  DensityMatrix out = rho;
  for (int i = 0; i < t; ++i) out = apply(out);
  return out;
}

SpectralProfile spectral_profile(const KrausChannel& ch) {
  int d = ch.dim();
  Superoperator sop = Superoperator::from_kraus(ch);
  GeneralEig eig = general_eig(sop.mat());

  // Eigenvalues are sorted by descending modulus; the channel spectrum lies
  // in the closed unit disk with at least one eigenvalue at 1.
  int n_modes = static_cast<int>(eig.values.size());
  int near_one = 0;
  int fixed_idx = 0;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_modes; ++i) {
    double dist = std::abs(eig.values(i) - cplx(1.0));
    if (dist < best) {
      best = dist;
      fixed_idx = i;
    }
    if (dist <= tol::kUnitEigenvalue) ++near_one;
  }

  SpectralProfile profile;
  profile.unique = near_one == 1;
  profile.diagonalizable = eig.diagonalizable;

  // Second largest modulus: drop one eigenvalue closest to 1.
  double mu = 0.0;
  for (int i = 0; i < n_modes; ++i) {
    if (i == fixed_idx) continue;
    mu = std::max(mu, std::abs(eig.values(i)));
  }
  profile.gap_mu = mu;

  // Fixed point from the eigenvalue-1 eigenvector: Hermitize and normalize
  // (numerical eigenvectors carry an arbitrary complex phase).
  Mat x;
  if (eig.diagonalizable) {
    x = unvectorize(eig.right.col(fixed_idx), d);
  } else {
    // Defective superoperator: recover the fixed point by inverse-iteration
    // style projection — average of E^t over a short window applied to I/d.
    x = Mat::Identity(d, d) / static_cast<double>(d);
    Mat acc = Mat::Zero(d, d);
    int window = 64;
    for (int i = 0; i < window; ++i) {
      x = ch.apply_matrix(x);
      acc += x;
    }
    x = acc / static_cast<double>(window);
  }
  x = (x + x.adjoint()) / 2.0;
  double tr = x.trace().real();
  if (std::abs(tr) < 1e-14) throw HypothesisError("fixed-point extraction failed: zero trace");
  x /= tr;

  profile.fixed_point = x;
  profile.lambda_min = min_eigenvalue(x);
  profile.full_rank = profile.lambda_min > tol::kFullRank;

  if (operator_norm(ch.apply_matrix(x) - x) > tol::kFixedPointResidual && profile.unique)
    throw HypothesisError("fixed-point residual exceeds tolerance");
  return profile;
}

std::vector<cplx> superoperator_spectrum(const KrausChannel& ch, const PartitionSpec& spec) {
  if (spec.total_dim() != ch.dim())
    throw ConfigError("partition does not match the channel dimension");

  // Orthonormal operator basis of tensor-product Weyl strings.
  std::vector<std::vector<Mat>> site_basis;
  for (int j = 0; j < spec.parties(); ++j) {
    std::vector<Mat> ops;
    int d = spec.dim(j);
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l)
        ops.push_back(weyl_operator(d, k, l) / std::sqrt(static_cast<double>(d)));
    site_basis.push_back(std::move(ops));
  }
  int n = spec.total_dim();
  long long m_ll = static_cast<long long>(n) * n;
  int m = static_cast<int>(m_ll);

  std::vector<int> radix(static_cast<std::size_t>(spec.parties()));
  for (int j = 0; j < spec.parties(); ++j)
    radix[static_cast<std::size_t>(j)] = spec.dim(j) * spec.dim(j);
  auto string_op = [&](int code) {
    Mat s = Mat::Identity(1, 1);
    for (int j = spec.parties() - 1; j >= 0; --j) {
      int r = radix[static_cast<std::size_t>(j)];
      int digit = code % r;
      code /= r;
      s = kron(site_basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(digit)], s);
    }
    return s;
  };

  // Column images: T[, col] = coefficients of E(string_col) in the basis.
  // Detect the partial-permutation case on the fly.
  Mat t_mat = Mat::Zero(m, m);
  bool partial_permutation = true;
  std::vector<int> target(static_cast<std::size_t>(m), -1);
  std::vector<cplx> weight(static_cast<std::size_t>(m), 0.0);
  for (int col = 0; col < m; ++col) {
    Mat image = ch.apply_matrix(string_op(col));
    int nonzeros = 0;
    for (int row = 0; row < m; ++row) {
      cplx coeff = (string_op(row).adjoint() * image).trace();
      t_mat(row, col) = coeff;
      if (std::abs(coeff) > 1e-12) {
        ++nonzeros;
        target[static_cast<std::size_t>(col)] = row;
        weight[static_cast<std::size_t>(col)] = coeff;
      }
    }
    if (nonzeros > 1) partial_permutation = false;
  }

  std::vector<cplx> values;
  values.reserve(static_cast<std::size_t>(m));
  if (partial_permutation) {
    // Eigenvalues of a weighted functional graph: each cycle of length L
    // with entry product w contributes the L-th roots of w; every node not
    // on a cycle contributes an exact zero.
    std::vector<int> state(static_cast<std::size_t>(m), 0);  // 0 new, 1 active, 2 done
    std::vector<int> position(static_cast<std::size_t>(m), -1);
    for (int start = 0; start < m; ++start) {
      if (state[static_cast<std::size_t>(start)] != 0) continue;
      std::vector<int> path;
      int node = start;
      while (node != -1 && state[static_cast<std::size_t>(node)] == 0) {
        state[static_cast<std::size_t>(node)] = 1;
        position[static_cast<std::size_t>(node)] = static_cast<int>(path.size());
        path.push_back(node);
        node = target[static_cast<std::size_t>(node)];
      }
      if (node != -1 && state[static_cast<std::size_t>(node)] == 1) {
        // Closed a cycle within this walk.
        int cycle_start = position[static_cast<std::size_t>(node)];
        int len = static_cast<int>(path.size()) - cycle_start;
        cplx prod = 1.0;
        for (int i = cycle_start; i < static_cast<int>(path.size()); ++i)
          prod *= weight[static_cast<std::size_t>(path[static_cast<std::size_t>(i)])];
        double mod = std::pow(std::abs(prod), 1.0 / len);
        double arg = std::arg(prod) / len;
        for (int r = 0; r < len; ++r) {
          double theta = arg + 2.0 * std::numbers::pi * r / len;
          values.push_back(std::polar(mod, theta));
        }
        for (int i = 0; i < cycle_start; ++i) values.push_back(0.0);
      } else {
        // Walk ended in annihilation or in an already-finished region:
        // every node on this path is a tail node.
        for (std::size_t i = 0; i < path.size(); ++i) values.push_back(0.0);
      }
      for (int p : path) state[static_cast<std::size_t>(p)] = 2;
    }
  } else {
    Eigen::ComplexSchur<Mat> schur(t_mat, /*computeU=*/false);
    if (schur.info() != Eigen::Success) throw std::runtime_error("Schur decomposition failed");
    for (int i = 0; i < m; ++i) values.push_back(schur.matrixT()(i, i));
  }
  std::sort(values.begin(), values.end(),
            [](const cplx& a, const cplx& b) { return std::abs(a) > std::abs(b); });
  return values;
}

namespace {

// Probe family for empirical envelope calibration: design projectors (plus
// the certification states built from them), Haar pure states, and the
// eigenstates of the slowest decaying mode.
std::vector<Mat> envelope_probes(const KrausChannel& ch, const SpectralProfile& profile,
                                 const EnvelopeOptions& options) {
  int d = ch.dim();
  std::vector<Mat> probes;

  if (has_design_for_dimension(d)) {
    ProjectiveDesign design = design_for_dimension(d);
    for (const Mat& proj : design.projectors()) {
      probes.push_back(proj);
      // State the positivity argument feeds to the bound for this design
      // direction: (||h|| pi + lambda h)/(||h|| + lambda), h = (d+1)P - I.
      Mat h = static_cast<double>(d + 1) * proj - Mat::Identity(d, d);
      double hn = operator_norm(h);
      double lam = std::max(profile.lambda_min, 0.0);
      Mat rho_h = (hn * profile.fixed_point + lam * h) / (hn + lam);
      rho_h = (rho_h + rho_h.adjoint()) / 2.0;
      if (min_eigenvalue(rho_h) >= -tol::kPsd) probes.push_back(rho_h);
    }
  }

  Rng rng(options.probe_seed);
  for (int i = 0; i < options.haar_probes; ++i) {
    Vec psi(d);
    for (int k = 0; k < d; ++k) psi(k) = rng.complex_gaussian();
    psi /= psi.norm();
    probes.push_back(psi * psi.adjoint());
  }

  // Eigenstates of the slowest mode's Hermitian components.
  Superoperator sop = Superoperator::from_kraus(ch);
  GeneralEig eig = general_eig(sop.mat());
  if (eig.diagonalizable && eig.values.size() >= 2) {
    Mat slow = unvectorize(Vec(eig.right.col(1)), d);
    for (const Mat& herm : {Mat((slow + slow.adjoint()) / 2.0),
                            Mat((slow - slow.adjoint()) / cplx(0.0, 2.0))}) {
      if (herm.norm() < 1e-12) continue;
      HermitianEig he = hermitian_eig(herm);
      for (int k = 0; k < d; ++k) {
        Vec v = he.vectors.col(k);
        probes.push_back(v * v.adjoint());
      }
    }
  }
  return probes;
}

}  // namespace

ConvergenceEnvelope convergence_envelope(const KrausChannel& ch, EnvelopeMode mode, int t_window,
                                         const EnvelopeOptions& options) {
  SpectralProfile profile = spectral_profile(ch);
  if (!profile.unique) throw HypothesisError("fixed point is not unique");
  if (!profile.full_rank) throw HypothesisError("steady state not full rank");
  if (profile.gap_mu >= 1.0 - 1e-9) throw HypothesisError("no damping gap");
  if (t_window < 1) throw ConfigError("validation window must be >= 1");

  ConvergenceEnvelope env;
  env.mode = mode;
  env.t_window = t_window;

  if (mode == EnvelopeMode::SpectralRigorous) {
    if (!profile.diagonalizable)
      throw HypothesisError(
          "channel is not diagonalizable; spectral-rigorous envelope unavailable, use the "
          "empirical mode");
    env.kappa = -std::log(profile.gap_mu);
    // c = sum over decaying modes of ||r||_op ||l||_op for a biorthogonal
    // eigen-operator family; |Tr[l^dag rho]| <= ||l||_op for any state.
    Superoperator sop = Superoperator::from_kraus(ch);
    GeneralEig eig = general_eig(sop.mat());
    int fixed_idx = 0;
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
      double dist = std::abs(eig.values(i) - cplx(1.0));
      if (dist < best) {
        best = dist;
        fixed_idx = static_cast<int>(i);
      }
    }
    double c = 0.0;
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
      if (i == fixed_idx) continue;
      Mat r = unvectorize(eig.right.col(i), ch.dim());
      Mat l = unvectorize(eig.left.col(i), ch.dim());
      c += operator_norm(r) * operator_norm(l);
    }
    env.c = c;
  } else {
    env.kappa = -(1.0 - options.delta) * std::log(profile.gap_mu);
    std::vector<Mat> probes = envelope_probes(ch, profile, options);
    double worst = 0.0;
    for (const Mat& probe : probes) {
      Mat state = probe;
      for (int t = 1; t <= t_window; ++t) {
        state = ch.apply_matrix(state);
        double dist = operator_norm(state - profile.fixed_point);
        worst = std::max(worst, std::exp(env.kappa * t) * dist);
      }
    }
    env.c = options.safety * worst;
  }

  if (env.kappa > -std::log(profile.gap_mu) + 1e-12)
    throw std::logic_error("envelope decay rate exceeds the damping gap");
  return env;
}

std::vector<ContractionViolation> check_contraction(const KrausChannel& ch,
                                                    const SpectralProfile& profile,
                                                    const ConvergenceEnvelope& env,
                                                    std::span<const DensityMatrix> probes,
                                                    int t_max) {
  std::vector<ContractionViolation> violations;
  for (std::size_t p = 0; p < probes.size(); ++p) {
    if (probes[p].dim() != ch.dim()) throw ConfigError("probe dimension mismatch");
    Mat state = probes[p].mat();
    // Bound quoted for evolution steps t >= 1; t = 0 is excluded.
    for (int t = 1; t <= t_max; ++t) {
      state = ch.apply_matrix(state);
      double lhs = operator_norm(state - profile.fixed_point);
      double rhs = env.c * std::exp(-env.kappa * t);
      if (lhs > rhs * (1.0 + 1e-9) + tol::kContractionSlack)
        violations.push_back({t, static_cast<int>(p), lhs, rhs});
    }
  }
  return violations;
}

}  // namespace qsep
