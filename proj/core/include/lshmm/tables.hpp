#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lshmm/aligned.hpp"
#include "lshmm/params.hpp"

namespace lshmm {

inline constexpr std::int64_t kUninitializedVariant = -1;

// Per-recipient-column numeric health, set during propagation when a
// column's scaling sum hits exactly 0 (total underflow) or +inf (total
// overflow). The column's entries are NaN from the next step on (except the
// diagonal, which stays 0); decoding maps such columns to epsilon semantics.
enum ColumnFlag : std::uint8_t {
  kColumnOk = 0,
  kColumnUnderflow = 1,
  kColumnOverflow = 2,
};

namespace detail {

// Shared slab storage for forward/backward tables: an N x W column-major
// matrix (rows = donors, columns = recipients within [from, to]), one
// scaling constant per column, and provenance metadata.
class TableBase {
public:
  std::size_t n_haps() const { return n_; }
  std::uint32_t from_recipient() const { return from_; }
  std::uint32_t to_recipient() const { return to_; }
  std::uint32_t width() const { return to_ - from_ + 1; }
  bool full_window() const { return from_ == 0 && to_ + 1 == n_; }

  std::int64_t variant() const { return l_; }
  bool initialized() const { return l_ != kUninitializedVariant; }

  const std::array<std::uint8_t, 32>& pars_hash() const { return pars_hash_; }

  std::span<const double> slab() const { return {slab_.data(), slab_.size()}; }
  std::span<const double> column(std::uint32_t c) const {
    return {slab_.data() + std::size_t(c) * n_, n_};
  }
  std::span<const double> scale() const { return {scale_.data(), scale_.size()}; }
  std::span<const std::uint8_t> column_flags() const {
    return {flags_.data(), flags_.size()};
  }
  bool any_flagged() const;

  std::size_t slab_bytes() const { return slab_.size() * sizeof(double); }
  // Slab plus scaling vector; the honest footprint of the numeric payload.
  std::size_t reported_bytes() const {
    return slab_bytes() + scale_.size() * sizeof(double);
  }
  static std::size_t predicted_bytes(std::size_t n, std::uint32_t from,
                                     std::uint32_t to) {
    const std::size_t w = std::size_t(to) - from + 1;
    return 8 * n * w + 8 * w;
  }

  // Mutable access for the propagation kernels and file readers.
  double* slab_data() { return slab_.data(); }
  double* scale_data() { return scale_.data(); }
  std::uint8_t* flags_data() { return flags_.data(); }
  void set_variant(std::int64_t l) { l_ = l; }

protected:
  TableBase() = default;
  TableBase(const Parameters& pars, std::uint32_t from, std::uint32_t to);

  void reset_state();
  void assign_from(const TableBase& src, const char* kind);

  std::size_t n_ = 0;
  std::uint32_t from_ = 0, to_ = 0;
  std::int64_t l_ = kUninitializedVariant;
  std::array<std::uint8_t, 32> pars_hash_{};
  std::vector<double, AlignedAllocator<double>> slab_;  // n_ * width, column-major
  std::vector<double> scale_;                           // width
  std::vector<std::uint8_t> flags_;                     // width
};

}  // namespace detail

// alpha[j, i]: rescaled forward probabilities for donor j, recipient i.
// scale() holds the running column sums F used to normalize the next step.
// 0 <= alpha <= 2 after any propagation; the diagonal entry is exactly 0.
class ForwardTable : public detail::TableBase {
public:
  explicit ForwardTable(const Parameters& pars);
  ForwardTable(const Parameters& pars, std::uint32_t from, std::uint32_t to);

  static ForwardTable from_parts(std::size_t n, std::uint32_t from, std::uint32_t to,
                                 std::int64_t l,
                                 const std::array<std::uint8_t, 32>& pars_hash,
                                 std::vector<double> scale,
                                 std::vector<double> slab);

  std::string describe() const;
};

// beta[j, i]: rescaled backward probabilities. scale() holds the G sums
// (sum_j beta * theta * pi) of the last executed step. beta_theta is carried
// for format fidelity and is always false: tables live in rescaled
// probability space.
class BackwardTable : public detail::TableBase {
public:
  explicit BackwardTable(const Parameters& pars);
  BackwardTable(const Parameters& pars, std::uint32_t from, std::uint32_t to);

  static BackwardTable from_parts(std::size_t n, std::uint32_t from, std::uint32_t to,
                                  std::int64_t l,
                                  const std::array<std::uint8_t, 32>& pars_hash,
                                  std::vector<double> scale,
                                  std::vector<double> slab);

  bool beta_theta() const { return false; }

  std::string describe() const;
};

// Deep value copy between existing tables of the same kind, dimensions and
// window. dst is afterwards fully independent of src.
void copy_table(ForwardTable& dst, const ForwardTable& src);
void copy_table(BackwardTable& dst, const BackwardTable& src);

// Marks the table uninitialized for reuse; numeric contents are not wiped
// (the initialization step overwrites every entry) but the table behaves
// exactly as freshly made. Window bounds and parameter hash are preserved.
void reset_table(ForwardTable& t);
void reset_table(BackwardTable& t);

}  // namespace lshmm
