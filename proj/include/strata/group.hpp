#ifndef STRATA_GROUP_HPP
#define STRATA_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace strata {

/// A finite group given as an explicit multiplication table.
/// Elements are indices in [0, n); mul is stored row-major.
struct GroupTable {
  int n = 0;
  std::vector<int> mul;
  int identity = 0;
  std::vector<int> inv;

  int op(int a, int b) const { return mul[static_cast<std::size_t>(a) * n + b]; }
  int inverse(int a) const { return inv[static_cast<std::size_t>(a)]; }
};

enum class Family { Cyclic, Dihedral, V8k, SL2 };

/// One of the built-in group families.
///
/// The parameter means: Cyclic(n) group order n; Dihedral(m) group order m
/// (m = 2s even, generators a of order s and an involution b);
/// V8k(k) the order-8k group <a,b : a^{2k} = b^4 = 1, ba = a^-1 b^-1,
/// b^-1 a = a^-1 b> with k odd; SL2(p) the 2x2 determinant-one matrices
/// over Z_p with p prime.
struct FamilySpec {
  Family family = Family::Cyclic;
  int parameter = 1;

  static FamilySpec cyclic(int n) { return {Family::Cyclic, n}; }
  static FamilySpec dihedral(int order) { return {Family::Dihedral, order}; }
  static FamilySpec v8k(int k) { return {Family::V8k, k}; }
  static FamilySpec sl2(int p) { return {Family::SL2, p}; }

  int order() const;
  std::string name() const;
};

/// Throws std::invalid_argument when the parameter is out of range
/// (non-positive, odd Dihedral order, even k for V8k, composite p for SL2).
void validate(const FamilySpec& spec);

/// Canonical element enumerations, fixed so that downstream indices are
/// reproducible:
///   Cyclic(n):    a^i -> i
///   Dihedral(2s): a^i -> i,  b a^i -> s + i
///   V8k(k):       a^i b^j -> j*2k + i
///   SL2(p):       identity first, then matrices (a,b,c,d) in
///                 lexicographic order.
GroupTable build_family(const FamilySpec& spec);

int dihedral_index(int s, bool reflected, int power);
int v8k_index(int k, int a_power, int b_power);
int sl2_index(int p, int a, int b, int c, int d);

/// Builds a GroupTable from a raw square table, locating the identity and
/// inverses and verifying the full set of group axioms.  Throws
/// std::invalid_argument naming the first violation found.
GroupTable load_table(const std::vector<std::vector<int>>& raw);

/// Checks identity, inverses, the Latin-square property and associativity.
/// Associativity is exhaustive for n <= 64 and sampled (>= 10 n^2 seeded
/// random triples) above that.
void validate_group_table(const GroupTable& g);

/// Conjugacy classes together with the inverse-class (dual) structure.
/// Class 0 is the identity class; the rest are ordered by (size, smallest
/// member index).
struct ConjugacyPartition {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  std::vector<int> representatives;
  std::vector<int> sizes;
  std::vector<int> dual;

  int count() const { return static_cast<int>(classes.size()); }
};

ConjugacyPartition conjugacy_classes(const GroupTable& g);

/// dual[i] is the class holding the inverses of class i's elements.
std::vector<int> inverse_class_map(const GroupTable& g, const ConjugacyPartition& p);

/// True when every class is its own dual (equivalently, every character is
/// real-valued).
bool ambivalent(const ConjugacyPartition& p);

}  // namespace strata

#endif
