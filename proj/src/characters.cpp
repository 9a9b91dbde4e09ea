#include "strata/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace strata {

namespace {

using cd = std::complex<double>;
constexpr double kOrthTol = 1e-9;
constexpr double kIntTol = 1e-6;

cd unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace

void validate(const CharacterTable& ct) {
  const int c = ct.classes;
  const auto& chi = ct.chi;

  long long dim_sq = 0;
  for (int l = 0; l < c; ++l) {
    dim_sq += static_cast<long long>(ct.dims[l]) * ct.dims[l];
    if (std::abs(chi(l, 0) - cd(ct.dims[l], 0)) > kOrthTol)
      throw std::runtime_error("character row " + std::to_string(l) +
                               " does not open with its dimension");
  }
  if (dim_sq != ct.n)
    throw std::runtime_error("sum of squared dimensions is " + std::to_string(dim_sq) +
                             ", expected " + std::to_string(ct.n));

  for (int l = 0; l < c; ++l)
    for (int l2 = 0; l2 < c; ++l2) {
      cd s = 0;
      for (int m = 0; m < c; ++m)
        s += static_cast<double>(ct.kappa[m]) * chi(l, m) * std::conj(chi(l2, m));
      const cd want = (l == l2) ? cd(ct.n, 0) : cd(0, 0);
      if (std::abs(s - want) > kOrthTol)
        throw std::runtime_error("row orthogonality fails for rows (" + std::to_string(l) +
                                 ", " + std::to_string(l2) + "), residual " +
                                 std::to_string(std::abs(s - want)));
    }

  for (int m = 0; m < c; ++m)
    for (int m2 = 0; m2 < c; ++m2) {
      cd s = 0;
      for (int l = 0; l < c; ++l) s += chi(l, m) * std::conj(chi(l, m2));
      const cd want = (m == m2) ? cd(static_cast<double>(ct.n) / ct.kappa[m], 0) : cd(0, 0);
      if (std::abs(s - want) > kOrthTol)
        throw std::runtime_error("column orthogonality fails for classes (" +
                                 std::to_string(m) + ", " + std::to_string(m2) +
                                 "), residual " + std::to_string(std::abs(s - want)));
    }

  for (int l = 0; l < c; ++l)
    for (int m = 0; m < c; ++m)
      if (std::abs(chi(l, ct.col_dual[m]) - std::conj(chi(l, m))) > kOrthTol)
        throw std::runtime_error("inverse-class column " + std::to_string(m) +
                                 " is not the conjugate of its dual");

  for (int l = 0; l < c; ++l) {
    const int ld = ct.row_dual[l];
    for (int m = 0; m < c; ++m)
      if (std::abs(chi(ld, m) - std::conj(chi(l, m))) > kOrthTol)
        throw std::runtime_error("row " + std::to_string(ld) +
                                 " is not the conjugate of row " + std::to_string(l));
  }
}

IntersectionTensor intersection_numbers_by_counting(const GroupTable& g,
                                                    const ConjugacyPartition& p,
                                                    std::uint64_t seed, int checks) {
  const int c = p.count();
  const int n = g.n;
  IntersectionTensor t;
  t.classes = c;
  t.values.assign(static_cast<std::size_t>(c) * c * c, 0);

  auto count_for_pair = [&](int alpha, int beta, int k, std::vector<int>& out) {
    std::fill(out.begin(), out.end(), 0);
    for (int gamma = 0; gamma < n; ++gamma) {
      const int i = p.class_of[g.op(alpha, g.inverse(gamma))];
      const int j = p.class_of[g.op(gamma, g.inverse(beta))];
      out[i * c + j] += 0 * k;  // k fixed by the (alpha, beta) choice
      out[i * c + j] += 1;
    }
  };

  std::vector<int> counts(static_cast<std::size_t>(c) * c);
  for (int k = 0; k < c; ++k) {
    // (alpha, beta) = (rep_k, identity) satisfies alpha beta^-1 in C_k.
    count_for_pair(p.representatives[k], g.identity, k, counts);
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j) t.at(i, j, k) = counts[i * c + j];
  }

  // Constancy over the relation: re-count at random pairs per k.
  std::mt19937_64 rng(seed ^ 0xa5c3u);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> recount(static_cast<std::size_t>(c) * c);
  for (int k = 0; k < c; ++k) {
    for (int rep = 0; rep < checks; ++rep) {
      const int beta = pick(rng);
      const auto& cls = p.classes[k];
      const int cmem = cls[pick(rng) % static_cast<int>(cls.size())];
      const int alpha = g.op(cmem, beta);  // alpha beta^-1 = cmem in C_k
      count_for_pair(alpha, beta, k, recount);
      for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
          if (recount[i * c + j] != t.at(i, j, k))
            throw std::runtime_error(
                "intersection count depends on the chosen pair at (i, j, k) = (" +
                std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) +
                "): the relation set is not an association scheme");
    }
  }
  return t;
}

namespace {

void fill_duals(CharacterTable& ct) {
  const int c = ct.classes;
  ct.row_dual.assign(c, -1);
  for (int l = 0; l < c; ++l) {
    for (int l2 = 0; l2 < c; ++l2) {
      bool match = true;
      for (int m = 0; m < c && match; ++m)
        match = std::abs(std::conj(ct.chi(l, m)) - ct.chi(l2, m)) < kOrthTol;
      if (match) {
        ct.row_dual[l] = l2;
        break;
      }
    }
    if (ct.row_dual[l] < 0)
      throw std::runtime_error("no conjugate row found for irreducible " + std::to_string(l));
  }
}

CharacterTable assemble(int n, const std::vector<int>& kappa, const std::vector<int>& col_dual,
                        Eigen::MatrixXcd chi, std::vector<int> dims) {
  CharacterTable ct;
  ct.classes = static_cast<int>(kappa.size());
  ct.n = n;
  ct.chi = std::move(chi);
  ct.dims = std::move(dims);
  ct.kappa = kappa;
  ct.col_dual = col_dual;
  fill_duals(ct);
  validate(ct);
  return ct;
}

CharacterTable cyclic_table(int n, const ConjugacyPartition& p) {
  Eigen::MatrixXcd chi(n, n);
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m) chi(l, m) = unit_phase(2.0 * std::numbers::pi * l * m / n);
  return assemble(n, p.sizes, p.dual, std::move(chi), std::vector<int>(n, 1));
}

CharacterTable dihedral_table(int order, const GroupTable& g, const ConjugacyPartition& p) {
  const int s = order / 2;
  const int c = p.count();
  std::vector<std::vector<cd>> rows;
  std::vector<int> dims;

  // Class representatives decoded as (reflected, power of a).
  std::vector<std::pair<bool, int>> rep(c);
  for (int m = 0; m < c; ++m) {
    const int r = p.representatives[m];
    rep[m] = {r >= s, r % s};
  }

  auto linear = [&](int sign_a, int sign_b) {
    std::vector<cd> row(c);
    for (int m = 0; m < c; ++m) {
      auto [refl, i] = rep[m];
      double v = (sign_a == -1 && i % 2) ? -1.0 : 1.0;
      if (refl && sign_b == -1) v = -v;
      row[m] = v;
    }
    rows.push_back(row);
    dims.push_back(1);
  };

  linear(1, 1);
  linear(1, -1);
  if (s % 2 == 0) {
    linear(-1, 1);
    linear(-1, -1);
  }
  const int two_dim = (s % 2 == 0) ? s / 2 - 1 : (s - 1) / 2;
  for (int j = 1; j <= two_dim; ++j) {
    std::vector<cd> row(c);
    for (int m = 0; m < c; ++m) {
      auto [refl, i] = rep[m];
      row[m] = refl ? 0.0 : 2.0 * std::cos(2.0 * std::numbers::pi * j * i / s);
    }
    rows.push_back(row);
    dims.push_back(2);
  }

  Eigen::MatrixXcd chi(c, c);
  for (int l = 0; l < c; ++l)
    for (int m = 0; m < c; ++m) chi(l, m) = rows[l][m];
  return assemble(g.n, p.sizes, p.dual, std::move(chi), std::move(dims));
}

// Class labels for V8k: identity, the central involution b^2, classes
// {a^m, a^-m b^2} for odd m, {a^2s, a^-2s} and {a^2s b^2, a^-2s b^2} for
// even powers, and the two reflection-like classes of b and ab.
struct V8kLabel {
  enum Kind { E, B2, Odd, Even, EvenB2, B, AB } kind;
  int param;  // odd power m, or s for the even kinds
};

std::vector<V8kLabel> v8k_labels(int k, const ConjugacyPartition& p) {
  const int n2 = 2 * k;
  auto decode = [n2](int x) { return std::pair<int, int>{x % n2, x / n2}; };
  const int c = p.count();
  std::vector<V8kLabel> lab(c);
  const int b_index = v8k_index(k, 0, 1);
  const int ab_index = v8k_index(k, 1, 1);
  for (int m = 0; m < c; ++m) {
    const auto& cls = p.classes[m];
    if (cls.size() == 1 && cls[0] == 0) {
      lab[m] = {V8kLabel::E, 0};
      continue;
    }
    if (cls.size() == 1) {
      lab[m] = {V8kLabel::B2, 0};
      continue;
    }
    if (std::count(cls.begin(), cls.end(), b_index)) {
      lab[m] = {V8kLabel::B, 0};
      continue;
    }
    if (std::count(cls.begin(), cls.end(), ab_index)) {
      lab[m] = {V8kLabel::AB, 0};
      continue;
    }
    int pure = -1, pure_b2 = -1;
    for (int x : cls) {
      auto [i, j] = decode(x);
      if (j == 0) pure = i;
      if (j == 2) pure_b2 = i;
    }
    if (pure >= 0 && pure % 2 == 1)
      lab[m] = {V8kLabel::Odd, pure};
    else if (pure >= 0)
      lab[m] = {V8kLabel::Even, std::min(pure, n2 - pure) / 2};
    else
      lab[m] = {V8kLabel::EvenB2, std::min(pure_b2, n2 - pure_b2) / 2};
  }
  return lab;
}

CharacterTable v8k_table(int k, const GroupTable& g, const ConjugacyPartition& p) {
  const int c = p.count();
  const auto lab = v8k_labels(k, p);
  const double pi_k = std::numbers::pi / k;

  std::vector<std::vector<cd>> rows;
  std::vector<int> dims;
  auto linear = [&](int sign_a, int sign_b) {
    std::vector<cd> row(c);
    for (int m = 0; m < c; ++m) {
      switch (lab[m].kind) {
        case V8kLabel::E:
        case V8kLabel::B2: row[m] = 1.0; break;
        case V8kLabel::B: row[m] = sign_b; break;
        case V8kLabel::AB: row[m] = sign_a * sign_b; break;
        case V8kLabel::Odd: row[m] = (lab[m].param % 2) ? sign_a : 1; break;
        default: row[m] = 1.0; break;  // even powers of a
      }
    }
    rows.push_back(row);
    dims.push_back(1);
  };
  linear(1, 1);
  linear(1, -1);
  linear(-1, 1);
  linear(-1, -1);

  for (int j = 0; j < k; ++j) {  // faithful two-dimensional representations
    std::vector<cd> row(c);
    for (int m = 0; m < c; ++m) {
      switch (lab[m].kind) {
        case V8kLabel::E: row[m] = 2.0; break;
        case V8kLabel::B2: row[m] = -2.0; break;
        case V8kLabel::B:
        case V8kLabel::AB: row[m] = 0.0; break;
        case V8kLabel::Odd:
          row[m] = unit_phase(2 * j * lab[m].param * pi_k) -
                   unit_phase(-2 * j * lab[m].param * pi_k);
          break;
        case V8kLabel::Even: row[m] = 2.0 * std::cos(4 * j * lab[m].param * pi_k); break;
        case V8kLabel::EvenB2: row[m] = -2.0 * std::cos(4 * j * lab[m].param * pi_k); break;
      }
    }
    rows.push_back(row);
    dims.push_back(2);
  }
  for (int j = 1; j < k; ++j) {  // lifts of the dihedral quotient's 2-dim irreducibles
    std::vector<cd> row(c);
    for (int m = 0; m < c; ++m) {
      switch (lab[m].kind) {
        case V8kLabel::E:
        case V8kLabel::B2: row[m] = 2.0; break;
        case V8kLabel::B:
        case V8kLabel::AB: row[m] = 0.0; break;
        case V8kLabel::Odd: row[m] = 2.0 * std::cos(j * lab[m].param * pi_k); break;
        case V8kLabel::Even:
        case V8kLabel::EvenB2: row[m] = 2.0 * std::cos(2 * j * lab[m].param * pi_k); break;
      }
    }
    rows.push_back(row);
    dims.push_back(2);
  }

  Eigen::MatrixXcd chi(c, c);
  for (int l = 0; l < c; ++l)
    for (int m = 0; m < c; ++m) chi(l, m) = rows[l][m];
  return assemble(g.n, p.sizes, p.dual, std::move(chi), std::move(dims));
}

CharacterTable sl23_table(const GroupTable& g, const ConjugacyPartition& p) {
  const cd w = unit_phase(2.0 * std::numbers::pi / 3);
  const cd w2 = w * w;
  // Column labels: e, -e, the order-4 class, the two order-3 classes
  // (unipotent u = [[1,1],[0,1]] and its inverse class), and their
  // negatives (order 6).
  const int col_e = 0;
  const int col_minus = p.class_of[sl2_index(3, 2, 0, 0, 2)];
  const int col_four = p.class_of[sl2_index(3, 0, 1, 2, 0)];
  const int col_u = p.class_of[sl2_index(3, 1, 1, 0, 1)];
  const int col_ui = p.class_of[sl2_index(3, 1, 2, 0, 1)];
  const int col_mui = p.class_of[sl2_index(3, 2, 1, 0, 2)];
  const int col_mu = p.class_of[sl2_index(3, 2, 2, 0, 2)];
  const std::vector<int> order = {col_e, col_minus, col_four, col_u, col_ui, col_mui, col_mu};

  const std::vector<std::vector<cd>> vals = {
      {1, 1, 1, 1, 1, 1, 1},
      {1, 1, 1, w, w2, w2, w},
      {1, 1, 1, w2, w, w, w2},
      {3, 3, -1, 0, 0, 0, 0},
      {2, -2, 0, -w2, -w, w, w2},
      {2, -2, 0, -w, -w2, w2, w},
      {2, -2, 0, -1, -1, 1, 1}};
  Eigen::MatrixXcd chi(7, 7);
  for (int l = 0; l < 7; ++l)
    for (int t = 0; t < 7; ++t) chi(l, order[t]) = vals[l][t];
  return assemble(g.n, p.sizes, p.dual, std::move(chi), {1, 1, 1, 3, 2, 2, 2});
}

}  // namespace

CharacterTable family_character_table(const FamilySpec& spec) {
  validate(spec);
  const GroupTable g = build_family(spec);
  const ConjugacyPartition p = conjugacy_classes(g);
  switch (spec.family) {
    case Family::Cyclic: return cyclic_table(g.n, p);
    case Family::Dihedral: return dihedral_table(spec.parameter, g, p);
    case Family::V8k: return v8k_table(spec.parameter, g, p);
    case Family::SL2:
      if (spec.parameter == 3) return sl23_table(g, p);
      // No closed form is wired up for other primes; recover numerically.
      return character_table_numeric(intersection_numbers_by_counting(g, p), p.sizes, g.n);
  }
  throw std::invalid_argument("unknown family");
}

CharacterTable character_table_numeric(const IntersectionTensor& t,
                                       const std::vector<int>& kappa, int n,
                                       std::uint64_t seed) {
  const int c = t.classes;
  if (static_cast<int>(kappa.size()) != c)
    throw std::invalid_argument("kappa length does not match the tensor");

  // Right eigenvectors of B_i with (B_i)(j, k) = p(i, j, k) are the central
  // character vectors u_k = kappa_k chi_l(g_k) / d_l, normalized to u_0 = 1.
  std::vector<Eigen::MatrixXd> B(c, Eigen::MatrixXd::Zero(c, c));
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      for (int k = 0; k < c; ++k) B[i](j, k) = t.at(i, j, k);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  Eigen::MatrixXcd vectors;
  bool separated = false;
  for (int attempt = 0; attempt < 8 && !separated; ++attempt) {
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(c, c);
    for (int i = 0; i < c; ++i) combo += gauss(rng) * B[i];
    Eigen::EigenSolver<Eigen::MatrixXd> es(combo);
    if (es.info() != Eigen::Success) continue;
    const Eigen::VectorXcd ev = es.eigenvalues();
    double scale = 1.0;
    for (int i = 0; i < c; ++i) scale = std::max(scale, std::abs(ev(i)));
    separated = true;
    for (int i = 0; i < c && separated; ++i)
      for (int j = i + 1; j < c && separated; ++j)
        if (std::abs(ev(i) - ev(j)) < 1e-6 * scale) separated = false;
    if (separated) vectors = es.eigenvectors();
  }
  if (!separated)
    throw std::runtime_error(
        "could not separate the class-algebra eigenvalues after 8 random combinations");

  Eigen::MatrixXcd chi(c, c);
  std::vector<int> dims(c);
  for (int l = 0; l < c; ++l) {
    Eigen::VectorXcd v = vectors.col(l);
    v /= v(0);
    double norm = 0;
    for (int m = 0; m < c; ++m) norm += std::norm(v(m)) / kappa[m];
    const double d = std::sqrt(static_cast<double>(n) / norm);
    const int di = static_cast<int>(std::lround(d));
    if (std::abs(d - di) > kIntTol)
      throw std::runtime_error("non-integral irreducible dimension " + std::to_string(d));
    dims[l] = di;
    for (int m = 0; m < c; ++m) chi(l, m) = static_cast<double>(di) * v(m) / kappa[m];
  }

  // Deterministic row order: dimension, then entries snapped to a grid;
  // the trivial character lands first.
  std::vector<int> order(c);
  for (int l = 0; l < c; ++l) order[l] = l;
  auto snap = [](double x) { return std::lround(x * 1e6); };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (dims[a] != dims[b]) return dims[a] < dims[b];
    for (int m = 0; m < c; ++m) {
      const auto ra = snap(chi(a, m).real()), rb = snap(chi(b, m).real());
      if (ra != rb) return ra > rb;
      const auto ia = snap(chi(a, m).imag()), ib = snap(chi(b, m).imag());
      if (ia != ib) return ia > ib;
    }
    return false;
  });
  for (int l = 0; l < c; ++l)
    if (dims[order[l]] == 1) {
      bool trivial = true;
      for (int m = 0; m < c && trivial; ++m)
        trivial = std::abs(chi(order[l], m) - cd(1, 0)) < 1e-6;
      if (trivial) {
        std::rotate(order.begin(), order.begin() + l, order.begin() + l + 1);
        break;
      }
    }

  Eigen::MatrixXcd sorted(c, c);
  std::vector<int> sorted_dims(c);
  for (int l = 0; l < c; ++l) {
    sorted.row(l) = chi.row(order[l]);
    sorted_dims[l] = dims[order[l]];
  }

  // Inverse-class map recovered from p(i, j, 0) = kappa_i [j == dual(i)].
  std::vector<int> col_dual(c, -1);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      if (t.at(i, j, 0) > 0) col_dual[i] = j;

  return assemble(n, kappa, col_dual, std::move(sorted), std::move(sorted_dims));
}

EigenMatrices eigenmatrices(const CharacterTable& ct) {
  const int c = ct.classes;
  EigenMatrices em;
  em.P.resize(c, c);
  em.Q.resize(c, c);
  for (int l = 0; l < c; ++l)
    for (int m = 0; m < c; ++m) {
      em.P(l, m) = static_cast<double>(ct.kappa[m]) / ct.dims[l] * ct.chi(l, m);
      em.Q(m, l) = static_cast<double>(ct.dims[l]) * std::conj(ct.chi(l, m));
    }

  const Eigen::MatrixXcd nI = static_cast<double>(ct.n) * Eigen::MatrixXcd::Identity(c, c);
  const double r1 = (em.P * em.Q - nI).cwiseAbs().maxCoeff();
  const double r2 = (em.Q * em.P - nI).cwiseAbs().maxCoeff();
  if (std::max(r1, r2) > kOrthTol) {
    Eigen::Index wi, wj;
    (em.P * em.Q - nI).cwiseAbs().maxCoeff(&wi, &wj);
    throw std::runtime_error("P*Q != n*I, worst residual " + std::to_string(std::max(r1, r2)) +
                             " at (" + std::to_string(wi) + ", " + std::to_string(wj) + ")");
  }
  return em;
}

IntersectionTensor intersection_numbers_by_characters(const CharacterTable& ct) {
  const int c = ct.classes;
  IntersectionTensor t;
  t.classes = c;
  t.values.assign(static_cast<std::size_t>(c) * c * c, 0);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      for (int k = 0; k < c; ++k) {
        cd s = 0;
        for (int l = 0; l < c; ++l)
          s += ct.chi(l, i) * ct.chi(l, j) * std::conj(ct.chi(l, k)) /
               static_cast<double>(ct.dims[l]);
        s *= static_cast<double>(ct.kappa[i]) * ct.kappa[j] / ct.n;
        const long v = std::lround(s.real());
        if (std::abs(s.real() - v) > kIntTol || std::abs(s.imag()) > kIntTol || v < 0)
          throw std::runtime_error("intersection number at (" + std::to_string(i) + ", " +
                                   std::to_string(j) + ", " + std::to_string(k) +
                                   ") is not a non-negative integer: " +
                                   std::to_string(s.real()));
        t.at(i, j, k) = static_cast<int>(v);
      }
  return t;
}

ZetaTable zeta_table(const CharacterTable& ct) {
  const int c = ct.classes;
  ZetaTable z;
  z.n = ct.n;
  z.original_classes = c;

  for (int l = 0; l < c; ++l) {
    if (ct.row_dual[l] == l) ++z.real_rows;
    if (ct.row_dual[l] >= l)
      z.row_members.push_back(ct.row_dual[l] == l ? std::vector<int>{l}
                                                  : std::vector<int>{l, ct.row_dual[l]});
  }
  for (int m = 0; m < c; ++m) {
    if (ct.col_dual[m] != m) ++z.complex_columns;
    if (ct.col_dual[m] >= m)
      z.col_members.push_back(ct.col_dual[m] == m ? std::vector<int>{m}
                                                  : std::vector<int>{m, ct.col_dual[m]});
  }
  z.size = static_cast<int>(z.row_members.size());
  if (z.size != static_cast<int>(z.col_members.size()))
    throw std::runtime_error("retained rows and merged columns disagree: " +
                             std::to_string(z.size) + " vs " +
                             std::to_string(z.col_members.size()));

  z.zeta.resize(z.size, z.size);
  z.xi.resize(z.size, z.size);
  z.dims.resize(z.size);
  z.merged_kappa.resize(z.size);
  for (int mc = 0; mc < z.size; ++mc) {
    int kap = 0;
    for (int m : z.col_members[mc]) kap += ct.kappa[m];
    z.merged_kappa[mc] = kap;
  }
  for (int lr = 0; lr < z.size; ++lr) {
    const int l = z.row_members[lr].front();
    z.dims[lr] = ct.dims[l];
    for (int mc = 0; mc < z.size; ++mc) {
      const int m = z.col_members[mc].front();
      cd v = ct.chi(l, m);
      if (z.row_members[lr].size() == 2) v += std::conj(v);
      if (std::abs(v.imag()) > kOrthTol)
        throw std::runtime_error("zeta entry at retained row " + std::to_string(l) +
                                 ", class " + std::to_string(m) +
                                 " has residual imaginary part " + std::to_string(v.imag()));
      z.zeta(lr, mc) = v.real();
      z.xi(mc, lr) = v.real() < 0 ? std::numbers::pi / 2 : 0.0;
    }
  }
  return z;
}

std::vector<int> presentation_class_order(const FamilySpec& spec, const GroupTable& g,
                                          const ConjugacyPartition& p) {
  const int c = p.count();
  std::vector<int> order;
  order.reserve(c);
  switch (spec.family) {
    case Family::Cyclic:
      for (int m = 0; m < c; ++m) order.push_back(m);
      break;
    case Family::Dihedral: {
      const int s = spec.parameter / 2;
      std::vector<std::pair<int, int>> rot;  // (power, class)
      std::vector<int> refl;
      for (int m = 0; m < c; ++m) {
        const int r = p.representatives[m];
        if (r < s)
          rot.emplace_back(r, m);
        else
          refl.push_back(m);
      }
      std::sort(rot.begin(), rot.end());
      std::sort(refl.begin(), refl.end(), [&p](int a, int b) {
        return p.representatives[a] < p.representatives[b];
      });
      for (auto& [pw, m] : rot) order.push_back(m);
      for (int m : refl) order.push_back(m);
      break;
    }
    case Family::V8k: {
      const int k = spec.parameter;
      const auto lab = v8k_labels(k, p);
      auto find = [&](V8kLabel::Kind kind, int param) {
        for (int m = 0; m < c; ++m)
          if (lab[m].kind == kind && lab[m].param == param) return m;
        throw std::runtime_error("V8k class labeling is incomplete");
      };
      order.push_back(find(V8kLabel::E, 0));
      order.push_back(find(V8kLabel::B2, 0));
      for (int r = 0; r < k; ++r) order.push_back(find(V8kLabel::Odd, 2 * r + 1));
      for (int s = 1; s <= (k - 1) / 2; ++s) order.push_back(find(V8kLabel::Even, s));
      for (int s = 1; s <= (k - 1) / 2; ++s) order.push_back(find(V8kLabel::EvenB2, s));
      order.push_back(find(V8kLabel::B, 0));
      order.push_back(find(V8kLabel::AB, 0));
      break;
    }
    case Family::SL2: {
      if (spec.parameter != 3) {
        for (int m = 0; m < c; ++m) order.push_back(m);
        break;
      }
      order = {0,
               p.class_of[sl2_index(3, 2, 0, 0, 2)],
               p.class_of[sl2_index(3, 0, 1, 2, 0)],
               p.class_of[sl2_index(3, 1, 1, 0, 1)],
               p.class_of[sl2_index(3, 1, 2, 0, 1)],
               p.class_of[sl2_index(3, 2, 1, 0, 2)],
               p.class_of[sl2_index(3, 2, 2, 0, 2)]};
      break;
    }
  }
  (void)g;
  return order;
}

}  // namespace strata
