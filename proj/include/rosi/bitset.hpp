#ifndef ROSI_BITSET_HPP
#define ROSI_BITSET_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace rosi {

// Fixed-size bitset over {0,...,n-1}, used for element sets of subgroups.
class DenseBitset {
public:
  DenseBitset() : n_(0) {}
  explicit DenseBitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const;
  bool any() const;
  bool subset_of(const DenseBitset& o) const;
  bool intersects(const DenseBitset& o) const;

  DenseBitset and_with(const DenseBitset& o) const;
  DenseBitset or_with(const DenseBitset& o) const;

  std::vector<std::uint32_t> members() const;

  bool operator==(const DenseBitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const DenseBitset& o) const { return !(*this == o); }

  // Order by ascending member sequence; only meaningful for equal counts.
  bool member_lex_less(const DenseBitset& o) const;

  std::size_t hash() const;

private:
  std::size_t n_;
  std::vector<std::uint64_t> w_;
};

struct DenseBitsetHash {
  std::size_t operator()(const DenseBitset& b) const { return b.hash(); }
};

} // namespace rosi

#endif
