#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lshmm/aligned.hpp"
#include "lshmm/matrix.hpp"

namespace lshmm {

struct CacheSummary {
  bool loaded = false;
  std::size_t n_haps = 0;
  std::size_t n_variants = 0;
  std::size_t bytes = 0;          // packed payload incl. alignment padding
  std::size_t payload_bytes = 0;  // packed payload without padding
  std::size_t singleton_count = 0;

  std::string to_string() const;
};

// One variant's alleles widened to doubles (exactly 0.0 or 1.0), ready for
// numeric kernels and cross-checks.
struct VariantLaneBuffer {
  std::int64_t variant = -1;
  std::vector<double> values;  // length N
};

// Bit-packed variant-major haplotype store. Within each variant row,
// haplotype j lives at bit (j % 32) of 32-bit word (j / 32), LSB-first;
// each row is padded so the next row starts on a 32-byte boundary. Bits at
// positions >= N in the last occupied word are zero. Instances are
// immutable once built and safe for concurrent reads.
class HaplotypeCache {
public:
  HaplotypeCache() = default;

  // Packs an L x N matrix of 0/1 entries. Rejects non-binary entries (with
  // coordinates), L < 1 and N < 2. Detects singleton variants (minor allele
  // count 1, i.e. row sum in {1, N-1}) and records a warning for them.
  static HaplotypeCache from_matrix(const BinaryMatrix& m);

  // Reassembles a cache from already-packed words (native file reader).
  // Validates stride/padding invariants.
  static HaplotypeCache from_words(std::size_t n_haps, std::size_t n_variants,
                                   std::size_t stride_words,
                                   std::vector<std::uint32_t> words);

  bool empty() const { return n_variants_ == 0; }
  std::size_t n_haps() const { return n_haps_; }
  std::size_t n_variants() const { return n_variants_; }
  std::size_t words_per_variant() const { return words_per_variant_; }
  std::size_t stride_words() const { return stride_words_; }

  const std::uint32_t* variant_words(std::size_t variant) const {
    return words_.data() + variant * stride_words_;
  }
  std::span<const std::uint32_t> words() const { return {words_.data(), words_.size()}; }

  int bit(std::size_t variant, std::size_t hap) const {
    const std::uint32_t w = variant_words(variant)[hap >> 5];
    return int((w >> (hap & 31u)) & 1u);
  }

  // Submatrix extraction; indices are 0-based and may repeat / reorder.
  BinaryMatrix query() const;
  BinaryMatrix query(std::span<const std::size_t> variants,
                     std::span<const std::size_t> haps) const;

  VariantLaneBuffer unpack_variant(std::size_t variant) const;

  CacheSummary summary() const;
  const std::vector<std::size_t>& singleton_variants() const { return singletons_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  // Optional identifiers carried over from HDF5 inputs.
  void set_ids(std::vector<std::string> hap_ids, std::vector<std::string> loci_ids);
  const std::vector<std::string>& hap_ids() const { return hap_ids_; }
  const std::vector<std::string>& loci_ids() const { return loci_ids_; }
  std::optional<std::size_t> variant_index_of(const std::string& loci_id) const;

private:
  std::size_t n_haps_ = 0;
  std::size_t n_variants_ = 0;
  std::size_t words_per_variant_ = 0;
  std::size_t stride_words_ = 0;
  std::vector<std::uint32_t, AlignedAllocator<std::uint32_t>> words_;
  std::vector<std::size_t> singletons_;
  std::vector<std::string> warnings_;
  std::vector<std::string> hap_ids_;
  std::vector<std::string> loci_ids_;

  void compute_singletons();
};

// The single in-process haplotype store. Loading replaces any previously
// held data set; readers see the cache as immutable. Concurrent load and
// read is a caller contract violation (loads are serialized against each
// other, not against readers).
class CacheStore {
public:
  static CacheStore& instance();

  const HaplotypeCache& load(BinaryMatrix m);
  const HaplotypeCache& load(HaplotypeCache cache);
  void clear();

  // nullptr when nothing is loaded.
  const HaplotypeCache* current() const;
  CacheSummary summary() const;

private:
  CacheStore() = default;
  mutable std::mutex load_mutex_;
  std::shared_ptr<const HaplotypeCache> cache_;
};

}  // namespace lshmm
