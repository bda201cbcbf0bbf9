#include "catsl11/gf2.hpp"

namespace catsl11 {

void EchelonBasis::reduce(BitVec& v) const {
  // Rows only carry bits at or above their pivot, so one upward sweep suffices.
  for (std::size_t p = v.lowest(); p < n_; ++p)
    if (v.get(p) && pivot_row_[p] >= 0) v ^= rows_[static_cast<std::size_t>(pivot_row_[p])];
}

bool EchelonBasis::insert(BitVec v) {
  // Full reduction so that the lowest remaining bit is a fresh pivot.
  std::size_t p = v.lowest();
  while (p < n_ && pivot_row_[p] >= 0) {
    v ^= rows_[static_cast<std::size_t>(pivot_row_[p])];
    p = v.lowest();
  }
  if (p >= n_) return false;
  pivot_row_[p] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

std::size_t gf2_rank(const std::vector<BitVec>& rows, std::size_t width) {
  EchelonBasis b(width);
  for (const auto& r : rows) b.insert(r);
  return b.rank();
}

std::vector<BitVec> gf2_kernel(const std::vector<BitVec>& images, std::size_t width) {
  const std::size_t m = images.size();
  std::vector<BitVec> img_rows, combo_rows;
  std::vector<int> pivot_row(width, -1);
  std::vector<BitVec> kernel;
  for (std::size_t i = 0; i < m; ++i) {
    BitVec v = images[i];
    BitVec combo(m);
    combo.set(i);
    std::size_t p = v.lowest();
    while (p < width && pivot_row[p] >= 0) {
      const auto r = static_cast<std::size_t>(pivot_row[p]);
      v ^= img_rows[r];
      combo ^= combo_rows[r];
      p = v.lowest();
    }
    if (p >= width) {
      kernel.push_back(std::move(combo));
    } else {
      pivot_row[p] = static_cast<int>(img_rows.size());
      img_rows.push_back(std::move(v));
      combo_rows.push_back(std::move(combo));
    }
  }
  return kernel;
}

}  // namespace catsl11
