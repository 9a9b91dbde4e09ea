#include "strata/group.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace strata {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::string triple_message(const GroupTable& g, int a, int b, int c) {
  return "associativity fails at triple (" + std::to_string(a) + ", " + std::to_string(b) +
         ", " + std::to_string(c) + "): (a*b)*c = " + std::to_string(g.op(g.op(a, b), c)) +
         " but a*(b*c) = " + std::to_string(g.op(a, g.op(b, c)));
}

}  // namespace

int FamilySpec::order() const {
  switch (family) {
    case Family::Cyclic: return parameter;
    case Family::Dihedral: return parameter;
    case Family::V8k: return 8 * parameter;
    case Family::SL2: return parameter * parameter * parameter - parameter;
  }
  return 0;
}

std::string FamilySpec::name() const {
  switch (family) {
    case Family::Cyclic: return "Z" + std::to_string(parameter);
    case Family::Dihedral: return "D" + std::to_string(parameter);
    case Family::V8k: return "V" + std::to_string(8 * parameter);
    case Family::SL2: return "SL(2," + std::to_string(parameter) + ")";
  }
  return "?";
}

void validate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Cyclic:
      if (spec.parameter < 1)
        throw std::invalid_argument("cyclic group order must be positive, got " +
                                    std::to_string(spec.parameter));
      break;
    case Family::Dihedral:
      if (spec.parameter < 2 || spec.parameter % 2 != 0)
        throw std::invalid_argument("dihedral order must be an even integer >= 2, got " +
                                    std::to_string(spec.parameter));
      break;
    case Family::V8k:
      if (spec.parameter < 1 || spec.parameter % 2 == 0)
        throw std::invalid_argument("V8k requires an odd k >= 1, got k = " +
                                    std::to_string(spec.parameter));
      break;
    case Family::SL2:
      if (!is_prime(spec.parameter))
        throw std::invalid_argument("SL2 requires a prime modulus, got " +
                                    std::to_string(spec.parameter));
      break;
  }
}

int dihedral_index(int s, bool reflected, int power) {
  return (reflected ? s : 0) + ((power % s) + s) % s;
}

int v8k_index(int k, int a_power, int b_power) {
  const int n2 = 2 * k;
  const int i = ((a_power % n2) + n2) % n2;
  const int j = ((b_power % 4) + 4) % 4;
  return j * n2 + i;
}

namespace {

GroupTable finalize(int n, std::vector<int> mul) {
  GroupTable g;
  g.n = n;
  g.mul = std::move(mul);
  g.identity = 0;
  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.op(a, b) == g.identity) g.inv[a] = b;
  return g;
}

GroupTable build_cyclic(int n) {
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return finalize(n, std::move(mul));
}

// Elements a^i and b a^i with b a^i b^-1 = a^-i.
GroupTable build_dihedral(int order) {
  const int s = order / 2;
  const int n = order;
  auto dec = [s](int x) { return std::pair<int, int>{x / s, x % s}; };
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    auto [e1, i1] = dec(x);
    for (int y = 0; y < n; ++y) {
      auto [e2, i2] = dec(y);
      int e = e1 ^ e2;
      int i = e2 ? (i2 - i1 + s) % s : (i1 + i2) % s;
      mul[static_cast<std::size_t>(x) * n + y] = dihedral_index(s, e != 0, i);
    }
  }
  return finalize(n, std::move(mul));
}

// Normal form a^i b^j, 0 <= i < 2k, 0 <= j < 4, using
// b a^i = a^-i b        (i even)
// b a^i = a^-i b^3      (i odd)
// so that b^2 is central.
GroupTable build_v8k(int k) {
  const int n2 = 2 * k;
  const int n = 8 * k;
  auto dec = [n2](int x) { return std::pair<int, int>{x % n2, x / n2}; };
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    auto [i1, j1] = dec(x);
    for (int y = 0; y < n; ++y) {
      auto [i2, j2] = dec(y);
      int i, j;
      if (j1 % 2 == 0) {
        i = (i1 + i2) % n2;
        j = (j1 + j2) % 4;
      } else {
        i = (i1 - i2 + n2) % n2;
        j = (j1 + (i2 % 2 ? 2 : 0) + j2) % 4;
      }
      mul[static_cast<std::size_t>(x) * n + y] = v8k_index(k, i, j);
    }
  }
  return finalize(n, std::move(mul));
}

std::vector<std::array<int, 4>> sl2_elements(int p) {
  std::vector<std::array<int, 4>> mats;
  mats.push_back({1, 0, 0, 1});
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          if (((a * d - b * c) % p + p) % p != 1) continue;
          std::array<int, 4> m{a, b, c, d};
          if (m != std::array<int, 4>{1, 0, 0, 1}) mats.push_back(m);
        }
  return mats;
}

GroupTable build_sl2(int p) {
  const auto mats = sl2_elements(p);
  const int n = static_cast<int>(mats.size());
  std::vector<int> index_of(static_cast<std::size_t>(p) * p * p * p, -1);
  auto key = [p](const std::array<int, 4>& m) {
    return ((m[0] * p + m[1]) * p + m[2]) * p + m[3];
  };
  for (int t = 0; t < n; ++t) index_of[key(mats[t])] = t;
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    const auto& u = mats[x];
    for (int y = 0; y < n; ++y) {
      const auto& v = mats[y];
      std::array<int, 4> w{(u[0] * v[0] + u[1] * v[2]) % p, (u[0] * v[1] + u[1] * v[3]) % p,
                           (u[2] * v[0] + u[3] * v[2]) % p, (u[2] * v[1] + u[3] * v[3]) % p};
      mul[static_cast<std::size_t>(x) * n + y] = index_of[key(w)];
    }
  }
  return finalize(n, std::move(mul));
}

}  // namespace

int sl2_index(int p, int a, int b, int c, int d) {
  auto norm = [p](int v) { return ((v % p) + p) % p; };
  const std::array<int, 4> m{norm(a), norm(b), norm(c), norm(d)};
  const auto mats = sl2_elements(p);
  for (int t = 0; t < static_cast<int>(mats.size()); ++t)
    if (mats[t] == m) return t;
  throw std::invalid_argument("matrix is not in SL(2," + std::to_string(p) + ")");
}

GroupTable build_family(const FamilySpec& spec) {
  validate(spec);
  GroupTable g;
  switch (spec.family) {
    case Family::Cyclic: g = build_cyclic(spec.parameter); break;
    case Family::Dihedral: g = build_dihedral(spec.parameter); break;
    case Family::V8k: g = build_v8k(spec.parameter); break;
    case Family::SL2: g = build_sl2(spec.parameter); break;
  }
  validate_group_table(g);
  return g;
}

void validate_group_table(const GroupTable& g) {
  const int n = g.n;
  if (n <= 0 || static_cast<int>(g.mul.size()) != n * n)
    throw std::invalid_argument("multiplication table has wrong shape");
  for (int v : g.mul)
    if (v < 0 || v >= n)
      throw std::invalid_argument("table entry " + std::to_string(v) + " out of range [0, " +
                                  std::to_string(n) + ")");

  const int e = g.identity;
  for (int x = 0; x < n; ++x)
    if (g.op(e, x) != x || g.op(x, e) != x)
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " is not a two-sided identity (fails at " + std::to_string(x) +
                                  ")");

  // Latin square: each row and column is a permutation.
  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int v = g.op(r, c);
      if (seen[v])
        throw std::invalid_argument("row " + std::to_string(r) + " repeats value " +
                                    std::to_string(v) + ": not a Latin square");
      seen[v] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int v = g.op(r, c);
      if (seen[v])
        throw std::invalid_argument("column " + std::to_string(c) + " repeats value " +
                                    std::to_string(v) + ": not a Latin square");
      seen[v] = 1;
    }
  }

  for (int x = 0; x < n; ++x) {
    if (g.inv[x] < 0 || g.inv[x] >= n || g.op(x, g.inv[x]) != e || g.op(g.inv[x], x) != e)
      throw std::invalid_argument("element " + std::to_string(x) +
                                  " has no two-sided inverse");
  }

  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
            throw std::invalid_argument(triple_message(g, a, b, c));
  } else {
    std::mt19937_64 rng(0x5742a11e5ULL);
    std::uniform_int_distribution<int> pick(0, n - 1);
    const long long samples = 10LL * n * n;
    for (long long s = 0; s < samples; ++s) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
        throw std::invalid_argument(triple_message(g, a, b, c));
    }
  }
}

GroupTable load_table(const std::vector<std::vector<int>>& raw) {
  const int n = static_cast<int>(raw.size());
  if (n == 0) throw std::invalid_argument("empty multiplication table");
  for (int r = 0; r < n; ++r)
    if (static_cast<int>(raw[r].size()) != n)
      throw std::invalid_argument("table is not square: row " + std::to_string(r) + " has " +
                                  std::to_string(raw[r].size()) + " entries, expected " +
                                  std::to_string(n));

  GroupTable g;
  g.n = n;
  g.mul.resize(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int v = raw[r][c];
      if (v < 0 || v >= n)
        throw std::invalid_argument("table entry " + std::to_string(v) + " at (" +
                                    std::to_string(r) + ", " + std::to_string(c) +
                                    ") out of range [0, " + std::to_string(n) + ")");
      g.mul[static_cast<std::size_t>(r) * n + c] = v;
    }

  g.identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = g.op(e, x) == x && g.op(x, e) == x;
    if (ok) {
      g.identity = e;
      break;
    }
  }
  if (g.identity < 0) throw std::invalid_argument("table has no two-sided identity element");

  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.op(a, b) == g.identity && g.op(b, a) == g.identity) g.inv[a] = b;

  validate_group_table(g);
  return g;
}

ConjugacyPartition conjugacy_classes(const GroupTable& g) {
  const int n = g.n;
  ConjugacyPartition p;
  std::vector<char> assigned(n, 0);
  for (int x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    std::set<int> orbit;
    for (int h = 0; h < n; ++h) orbit.insert(g.op(g.op(h, x), g.inverse(h)));
    std::vector<int> cls(orbit.begin(), orbit.end());
    for (int y : cls) assigned[y] = 1;
    p.classes.push_back(std::move(cls));
  }

  std::sort(p.classes.begin(), p.classes.end(),
            [&g](const std::vector<int>& a, const std::vector<int>& b) {
              const bool ia = a.front() == g.identity || std::count(a.begin(), a.end(), g.identity);
              const bool ib = b.front() == g.identity || std::count(b.begin(), b.end(), g.identity);
              if (ia != ib) return ia;
              if (a.size() != b.size()) return a.size() < b.size();
              return a.front() < b.front();
            });

  p.class_of.assign(n, -1);
  for (int ci = 0; ci < p.count(); ++ci) {
    p.representatives.push_back(p.classes[ci].front());
    p.sizes.push_back(static_cast<int>(p.classes[ci].size()));
    for (int y : p.classes[ci]) p.class_of[y] = ci;
  }
  p.dual = inverse_class_map(g, p);
  return p;
}

std::vector<int> inverse_class_map(const GroupTable& g, const ConjugacyPartition& p) {
  std::vector<int> dual(p.count());
  for (int ci = 0; ci < p.count(); ++ci)
    dual[ci] = p.class_of[g.inverse(p.representatives[ci])];
  return dual;
}

bool ambivalent(const ConjugacyPartition& p) {
  for (int ci = 0; ci < p.count(); ++ci)
    if (p.dual[ci] != ci) return false;
  return true;
}

}  // namespace strata
