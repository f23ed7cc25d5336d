#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lshmm/hap_cache.hpp"
#include "lshmm/matrix.hpp"

namespace lshmm {

enum class MuKind { Scalar, Vector };
enum class PiKind { Uniform, Dense };

// rho[l] = 1 - exp(-s * (cm_gaps[l]/100)^gamma), evaluated via expm1 so tiny
// map distances do not underflow. Input gaps are in centimorgans; the /100
// conversion to Morgans happens here.
std::vector<double> calc_rho(std::span<const double> cm_gaps, double s = 1.0,
                             double gamma = 1.0);

struct ParameterOptions {
  std::vector<double> rho;  // length L-1; empty -> all zeros
  std::vector<double> mu;   // size 1 -> scalar, size L -> per-variant; empty -> {1e-8}
  MatrixD pi;               // empty -> uniform 1/(N-1); else N x N column-stochastic,
                            // zero diagonal, entry (row j, col i) = prior that i copies j
  bool check_rho = true;
  bool use_speidel = false;  // accepted for interface fidelity; must be false
};

// Immutable LS model parameter set. rho is stored with L entries, the last
// being the sentinel value 1 so kernels can index rho[l] uniformly; a legal
// propagation step never reads the sentinel. A SHA-256 digest of the
// canonical little-endian byte encoding of (rho, mu, pi, flags) fingerprints
// the set so tables cannot be propagated under mismatched parameters.
class Parameters {
public:
  static Parameters make(const HaplotypeCache& cache, ParameterOptions opts = {});

  std::size_t n_haps() const { return n_; }
  std::size_t n_variants() const { return l_; }

  std::span<const double> rho() const { return rho_; }

  MuKind mu_kind() const { return mu_kind_; }
  double mu_scalar() const { return mu_[0]; }
  std::span<const double> mu_vector() const { return mu_; }
  double mu_at(std::size_t variant) const {
    return mu_kind_ == MuKind::Scalar ? mu_[0] : mu_[variant];
  }

  PiKind pi_kind() const { return pi_kind_; }
  double pi_uniform() const { return pi_uniform_; }
  // Column i (N entries, contiguous); only valid for dense Pi.
  const double* pi_column(std::size_t i) const { return pi_.data() + i * n_; }

  bool check_rho() const { return check_rho_; }
  bool use_speidel() const { return use_speidel_; }

  const std::array<std::uint8_t, 32>& hash() const { return hash_; }
  std::string hash_hex() const;

  const std::vector<std::string>& warnings() const { return warnings_; }

  // Console-style description: first/last rho entries, mu, Pi value.
  std::string describe() const;

private:
  Parameters() = default;

  std::size_t n_ = 0, l_ = 0;
  std::vector<double> rho_;  // length L, rho_[L-1] == 1 sentinel
  std::vector<double> mu_;   // length 1 or L
  MuKind mu_kind_ = MuKind::Scalar;
  PiKind pi_kind_ = PiKind::Uniform;
  double pi_uniform_ = 0.0;
  std::vector<double> pi_;  // column-major N x N when dense
  bool check_rho_ = true;
  bool use_speidel_ = false;
  std::array<std::uint8_t, 32> hash_{};
  std::vector<std::string> warnings_;

  void compute_hash();
};

}  // namespace lshmm
