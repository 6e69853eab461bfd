#include "rosi/bitset.hpp"

#include <bit>

namespace rosi {

std::size_t DenseBitset::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool DenseBitset::any() const {
  for (auto w : w_)
    if (w) return true;
  return false;
}

bool DenseBitset::subset_of(const DenseBitset& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

bool DenseBitset::intersects(const DenseBitset& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

DenseBitset DenseBitset::and_with(const DenseBitset& o) const {
  DenseBitset r(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
  return r;
}

DenseBitset DenseBitset::or_with(const DenseBitset& o) const {
  DenseBitset r(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
  return r;
}

std::vector<std::uint32_t> DenseBitset::members() const {
  std::vector<std::uint32_t> v;
  v.reserve(count());
  for (std::size_t k = 0; k < w_.size(); ++k) {
    std::uint64_t w = w_[k];
    while (w) {
      int b = std::countr_zero(w);
      v.push_back(static_cast<std::uint32_t>(k * 64 + static_cast<std::size_t>(b)));
      w &= w - 1;
    }
  }
  return v;
}

bool DenseBitset::member_lex_less(const DenseBitset& o) const {
  // With equal counts, the set whose lowest differing element is present
  // comes first in ascending-member lexicographic order.
  for (std::size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t d = w_[i] ^ o.w_[i];
    if (d) {
      std::uint64_t low = d & (~d + 1);
      return (w_[i] & low) != 0;
    }
  }
  return false;
}

std::size_t DenseBitset::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto w : w_) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace rosi
