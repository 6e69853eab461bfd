#include "rosi/builtins.hpp"

#include <cctype>

#include "rosi/error.hpp"

namespace rosi {

namespace {

Group checked(Group g, std::uint64_t expected, const std::string& name) {
  if (g.order() != expected)
    throw Error(Err::UnknownBuiltin,
                "builtin " + name + " has wrong order (internal)");
  return g;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

Perm cycle(std::size_t degree, const std::vector<std::uint32_t>& pts) {
  Perm p = Perm::identity(degree);
  for (std::size_t i = 0; i < pts.size(); ++i)
    p.img[pts[i]] = pts[(i + 1) % pts.size()];
  return p;
}

Group symmetric(int n) {
  if (n < 1) throw Error(Err::UnknownBuiltin, "Sn needs n >= 1");
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(cycle(n, {0, 1}));
    std::vector<std::uint32_t> all(n);
    for (int i = 0; i < n; ++i) all[i] = static_cast<std::uint32_t>(i);
    gens.push_back(cycle(n, all));
  }
  return checked(Group::closure(n, gens), factorial(n), "S" + std::to_string(n));
}

Group alternating(int n) {
  if (n < 3) {
    return checked(Group::closure(std::max(n, 1), {}), 1, "A" + std::to_string(n));
  }
  std::vector<Perm> gens;
  gens.push_back(cycle(n, {0, 1, 2}));
  if (n > 3) {
    std::vector<std::uint32_t> pts;
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) pts.push_back(static_cast<std::uint32_t>(i));
    } else {
      for (int i = 1; i < n; ++i) pts.push_back(static_cast<std::uint32_t>(i));
    }
    gens.push_back(cycle(n, pts));
  }
  return checked(Group::closure(n, gens), factorial(n) / 2, "A" + std::to_string(n));
}

Group cyclic(int n) {
  std::vector<std::uint32_t> all(n);
  for (int i = 0; i < n; ++i) all[i] = static_cast<std::uint32_t>(i);
  return checked(Group::closure(n, {cycle(n, all)}), n, "C" + std::to_string(n));
}

Group dihedral8() {
  return checked(Group::closure(4, {cycle(4, {0, 1, 2, 3}), cycle(4, {0, 2})}), 8,
                 "D8");
}

Group quaternion8() {
  // regular action on {1,-1,i,-i,j,-j,k,-k}
  Perm i(std::vector<std::uint32_t>{2, 3, 1, 0, 7, 6, 4, 5});
  Perm j(std::vector<std::uint32_t>{4, 5, 6, 7, 1, 0, 3, 2});
  return checked(Group::closure(8, {i, j}), 8, "Q8");
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// (Z/p x Z/p) : SL2(p) acting on the affine plane over F_p.
Group qd(int p) {
  if (!is_prime(p))
    throw Error(Err::UnknownBuiltin, "Qd(p) needs a prime p");
  std::size_t deg = static_cast<std::size_t>(p) * static_cast<std::size_t>(p);
  auto pt = [&](int x, int y) {
    return static_cast<std::uint32_t>(((x % p + p) % p) * p + ((y % p + p) % p));
  };
  auto mk = [&](auto&& f) {
    std::vector<std::uint32_t> img(deg);
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y) img[pt(x, y)] = f(x, y);
    return Perm(std::move(img));
  };
  Perm t1 = mk([&](int x, int y) { return pt(x + 1, y); });
  Perm t2 = mk([&](int x, int y) { return pt(x, y + 1); });
  Perm s = mk([&](int x, int y) { return pt(-y, x); });      // [[0,-1],[1,0]]
  Perm t = mk([&](int x, int y) { return pt(x + y, y); });   // [[1,1],[0,1]]
  std::uint64_t pp = static_cast<std::uint64_t>(p);
  std::uint64_t expected = pp * pp * pp * (pp * pp - 1);
  return checked(Group::closure(deg, {t1, t2, s, t}), expected,
                 "Qd" + std::to_string(p));
}

} // namespace

Group make_builtin(const std::string& rawName) {
  std::string name;
  for (char c : rawName)
    if (!isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '_')
      name.push_back(c);
  if (name.empty()) throw Error(Err::UnknownBuiltin, "empty builtin name");

  if (name == "D8") return dihedral8();
  if (name == "Q8") return quaternion8();
  if (name.size() >= 3 && name[0] == 'Q' && name[1] == 'd') {
    try {
      return qd(std::stoi(name.substr(2)));
    } catch (const Error&) {
      throw;
    } catch (...) {
      throw Error(Err::UnknownBuiltin, "bad Qd parameter: " + rawName);
    }
  }
  char k = name[0];
  if (k == 'S' || k == 'A' || k == 'C') {
    int n = 0;
    try {
      n = std::stoi(name.substr(1));
    } catch (...) {
      throw Error(Err::UnknownBuiltin, "unknown builtin: " + rawName);
    }
    if (n < 1 || n > 12)
      throw Error(Err::UnknownBuiltin, "builtin parameter out of range: " + rawName);
    if (k == 'S') return symmetric(n);
    if (k == 'A') return alternating(n);
    return cyclic(n);
  }
  throw Error(Err::UnknownBuiltin, "unknown builtin: " + rawName);
}

} // namespace rosi
