#ifndef STRATA_CHARACTERS_HPP
#define STRATA_CHARACTERS_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "strata/group.hpp"

namespace strata {

/// Complex irreducible character values chi(l, m): row l = irreducible,
/// column m = conjugacy class (in the canonical class order of
/// conjugacy_classes).  Row 0 is always the trivial character.
struct CharacterTable {
  int classes = 0;  // number of classes == number of irreducibles
  int n = 0;        // group order
  Eigen::MatrixXcd chi;
  std::vector<int> dims;      // chi_l(identity)
  std::vector<int> kappa;     // class sizes
  std::vector<int> row_dual;  // index of the complex-conjugate row
  std::vector<int> col_dual;  // index of the inverse class
};

/// Orthogonality relations, integral dimensions with sum of squares n, and
/// conjugate-duality of columns, all within 1e-9.  Throws std::runtime_error
/// with the worst offender on failure.
void validate(const CharacterTable& ct);

/// Change-of-basis matrices between the adjacency and idempotent bases:
///   P(l, j) = kappa_j * chi_l(g_j) / d_l   (eigenvalue of A_j on isotype l)
///   Q(m, l) = d_l * conj(chi_l(g_m))
/// satisfying P*Q = Q*P = n*I.
struct EigenMatrices {
  Eigen::MatrixXcd P, Q;
};

/// Real square table obtained from a complex character table by keeping one
/// row per conjugate-row pair and identifying each class with its inverse
/// class.  A retained real row keeps its value chi_l(g_m); a retained row
/// from a conjugate pair carries chi_l(g_m) + conj(chi_l(g_m)), so that the
/// single-excitation amplitudes written over this table with one phase per
/// retained row reproduce the full character sum exactly under the
/// dual-coupling constraint.
struct ZetaTable {
  int size = 0;              // d' + 1
  int n = 0;                 // group order
  int original_classes = 0;  // d + 1
  Eigen::MatrixXd zeta;      // (row = retained irreducible, col = merged class)
  std::vector<int> dims;
  std::vector<int> merged_kappa;
  std::vector<std::vector<int>> row_members;  // original row indices, size 1 or 2
  std::vector<std::vector<int>> col_members;  // original class indices, size 1 or 2
  Eigen::MatrixXd xi;  // xi(m, l) = arg(zeta(l, m)) / 2, either 0 or pi/2
  int real_rows = 0;
  int complex_columns = 0;
};

/// Structure constants p(i, j, k) of the class algebra:
/// A_i A_j = sum_k p(i, j, k) A_k.
struct IntersectionTensor {
  int classes = 0;
  std::vector<int> values;

  int at(int i, int j, int k) const {
    return values[(static_cast<std::size_t>(i) * classes + j) * classes + k];
  }
  int& at(int i, int j, int k) {
    return values[(static_cast<std::size_t>(i) * classes + j) * classes + k];
  }
};

/// Counts p(i, j, k) = |{gamma : alpha gamma^-1 in C_i, gamma beta^-1 in C_j}|
/// for a fixed pair with alpha beta^-1 in C_k, then re-counts at `checks`
/// random pairs per k to confirm the count is independent of the pair choice.
IntersectionTensor intersection_numbers_by_counting(const GroupTable& g,
                                                    const ConjugacyPartition& p,
                                                    std::uint64_t seed = 0, int checks = 3);

/// The closed-form character table of a built-in family, columns in the
/// canonical class order.  SL2 has a closed form only for modulus 3; other
/// primes fall back to the numeric method.
CharacterTable family_character_table(const FamilySpec& spec);

/// Recovers all irreducible characters from the intersection tensor as the
/// simultaneous eigenvectors of the class-multiplication matrices,
/// eigen-separated by a random real combination (resampled on collision,
/// at most 8 attempts).  Rows are sorted by (dimension, entries) with the
/// trivial character first.
CharacterTable character_table_numeric(const IntersectionTensor& t,
                                       const std::vector<int>& kappa, int n,
                                       std::uint64_t seed = 0);

EigenMatrices eigenmatrices(const CharacterTable& ct);

/// p(i, j, k) = (kappa_i kappa_j / n) sum_l chi_l(g_i) chi_l(g_j)
///              conj(chi_l(g_k)) / d_l, rounded after an integrality check.
IntersectionTensor intersection_numbers_by_characters(const CharacterTable& ct);

ZetaTable zeta_table(const CharacterTable& ct);

/// Canonical class indices listed in the order the family's classes are
/// conventionally presented (identity, then powers of the generator, ...).
/// Used to compare tables against published reference layouts.
std::vector<int> presentation_class_order(const FamilySpec& spec, const GroupTable& g,
                                          const ConjugacyPartition& p);

}  // namespace strata

#endif
