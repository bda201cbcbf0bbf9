// Bit-packed linear algebra over the two-element field.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace catsl11 {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  BitVec& operator^=(const BitVec& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  // Index of the lowest set bit, or size() when zero.
  std::size_t lowest() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[k]));
    return n_;
  }
  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool operator==(const BitVec& o) const { return n_ == o.n_ && words_ == o.words_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Row-echelon basis of a subspace, pivots at the lowest set bit of each row.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t n) : n_(n), pivot_row_(n, -1) {}
  // Reduces v in place against the basis.
  void reduce(BitVec& v) const;
  // Returns true when v was independent of the current rows (and adds it).
  bool insert(BitVec v);
  std::size_t rank() const { return rows_.size(); }
  bool contains(BitVec v) const {
    reduce(v);
    return !v.any();
  }

 private:
  std::size_t n_;
  std::vector<BitVec> rows_;
  std::vector<int> pivot_row_;
};

std::size_t gf2_rank(const std::vector<BitVec>& rows, std::size_t width);

// Kernel of the linear map sending basis vector i to images[i] (all of width `width`).
// Returned vectors live in the source space of dimension images.size().
std::vector<BitVec> gf2_kernel(const std::vector<BitVec>& images, std::size_t width);

}  // namespace catsl11
