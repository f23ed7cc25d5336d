#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lshmm {

// Row-major L x N matrix of 0/1 alleles: rows are variants, columns are
// haplotypes. This is the interchange type between file readers, the packed
// cache and tests; the engine itself never iterates it.
struct BinaryMatrix {
  std::size_t n_variants = 0;  // L
  std::size_t n_haps = 0;      // N

  std::vector<std::uint8_t> data;  // n_variants * n_haps

  BinaryMatrix() = default;
  BinaryMatrix(std::size_t l, std::size_t n)
      : n_variants(l), n_haps(n), data(l * n, 0) {}

  std::uint8_t& at(std::size_t variant, std::size_t hap) {
    return data[variant * n_haps + hap];
  }
  std::uint8_t at(std::size_t variant, std::size_t hap) const {
    return data[variant * n_haps + hap];
  }

  bool operator==(const BinaryMatrix&) const = default;
};

// Small row-major double matrix used for dense copying priors read from
// disk and for decoded distance blocks.
struct MatrixD {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  MatrixD() = default;
  MatrixD(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

}  // namespace lshmm
