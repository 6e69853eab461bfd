#ifndef ROSI_PERM_HPP
#define ROSI_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rosi {

// Permutation of {0,...,degree-1}, stored as the image vector.
// Products are composed left-to-right: (a*b) means "apply a, then b".
struct Perm {
  std::vector<std::uint32_t> img;

  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images) : img(std::move(images)) {}

  static Perm identity(std::size_t degree);

  std::size_t degree() const { return img.size(); }
  std::uint32_t operator[](std::size_t i) const { return img[i]; }
  bool is_identity() const;
  bool is_valid() const;

  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator!=(const Perm& o) const { return img != o.img; }
};

Perm compose(const Perm& a, const Perm& b); // x -> b[a[x]]
Perm inverse(const Perm& a);
int perm_order(const Perm& a);
std::size_t moved_points(const Perm& a);

// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; "()" is the identity.
std::string to_cycle_string(const Perm& a);
Perm parse_cycles(const std::string& s, std::size_t degree);

// Group text format: first line the degree, then one generator per line.
struct GroupText {
  std::size_t degree = 0;
  std::vector<Perm> generators;
};
GroupText parse_group_text(const std::string& text);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

} // namespace rosi

#endif
