#include "rosi/perm.hpp"

#include <algorithm>
#include <sstream>

#include "rosi/error.hpp"

namespace rosi {

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint32_t> v(degree);
  for (std::size_t i = 0; i < degree; ++i) v[i] = static_cast<std::uint32_t>(i);
  return Perm(std::move(v));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img.size(); ++i)
    if (img[i] != i) return false;
  return true;
}

bool Perm::is_valid() const {
  std::vector<char> seen(img.size(), 0);
  for (auto v : img) {
    if (v >= img.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Perm compose(const Perm& a, const Perm& b) {
  std::vector<std::uint32_t> v(a.img.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = b.img[a.img[i]];
  return Perm(std::move(v));
}

Perm inverse(const Perm& a) {
  std::vector<std::uint32_t> v(a.img.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[a.img[i]] = static_cast<std::uint32_t>(i);
  return Perm(std::move(v));
}

int perm_order(const Perm& a) {
  // lcm of cycle lengths
  std::vector<char> seen(a.img.size(), 0);
  long long ord = 1;
  for (std::size_t i = 0; i < a.img.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = a.img[j];
      ++len;
    }
    long long g = std::__gcd(ord, len);
    ord = ord / g * len;
  }
  return static_cast<int>(ord);
}

std::size_t moved_points(const Perm& a) {
  std::size_t m = 0;
  for (std::size_t i = 0; i < a.img.size(); ++i)
    if (a.img[i] != i) ++m;
  return m;
}

std::string to_cycle_string(const Perm& a) {
  std::vector<char> seen(a.img.size(), 0);
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < a.img.size(); ++i) {
    if (seen[i] || a.img[i] == i) {
      seen[i] = 1;
      continue;
    }
    any = true;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
      j = a.img[j];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm parse_cycles(const std::string& s, std::size_t degree) {
  Perm result = Perm::identity(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == ',')) ++i;
  };
  skip_ws();
  while (i < s.size()) {
    if (s[i] != '(')
      throw Error(Err::ParseError, "expected '(' in cycle notation: " + s);
    ++i;
    std::vector<std::uint32_t> cycle;
    skip_ws();
    while (i < s.size() && s[i] != ')') {
      if (!isdigit(static_cast<unsigned char>(s[i])))
        throw Error(Err::ParseError, "expected point number in cycle: " + s);
      std::uint64_t v = 0;
      while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree)
        throw Error(Err::ParseError, "point out of range in cycle: " + s);
      cycle.push_back(static_cast<std::uint32_t>(v - 1));
      skip_ws();
    }
    if (i >= s.size())
      throw Error(Err::ParseError, "unterminated cycle: " + s);
    ++i; // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      std::uint32_t from = cycle[k];
      std::uint32_t to = cycle[(k + 1) % cycle.size()];
      if (result.img[from] != from)
        throw Error(Err::ParseError, "point repeated across cycles: " + s);
      result.img[from] = to;
    }
    skip_ws();
  }
  if (!result.is_valid())
    throw Error(Err::ParseError, "cycles do not define a permutation: " + s);
  return result;
}

GroupText parse_group_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  GroupText gt;
  bool haveDegree = false;
  while (std::getline(in, line)) {
    std::size_t a = line.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r\n");
    std::string body = line.substr(a, b - a + 1);
    if (body.empty() || body[0] == '#') continue;
    if (!haveDegree) {
      try {
        gt.degree = std::stoul(body);
      } catch (...) {
        throw Error(Err::ParseError, "first line must be the degree: " + body);
      }
      if (gt.degree == 0)
        throw Error(Err::ParseError, "degree must be positive");
      haveDegree = true;
    } else {
      gt.generators.push_back(parse_cycles(body, gt.degree));
    }
  }
  if (!haveDegree)
    throw Error(Err::ParseError, "empty group description");
  return gt;
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.img) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace rosi
