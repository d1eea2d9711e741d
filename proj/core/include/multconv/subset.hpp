#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace multconv {

/* Subset of [n] = {1, ..., n} stored as a bit pattern: coordinate i (1-based)
 * is bit i - 1. In lifted dimension n + 1 the prepended coordinate 0 is bit 0
 * and coordinate i moves to bit i. */
struct SubsetMask {
  std::uint64_t bits = 0;
  int dim = 0;

  static constexpr int max_dim = 63;

  static SubsetMask empty(int n);
  static SubsetMask full(int n);
  static SubsetMask singleton(int n, int index);                      // 1-based index
  static SubsetMask from_indices(int n, const std::vector<int>& idx);  // 1-based indices

  bool contains(int index) const { return (bits >> (index - 1)) & 1U; }  // 1-based
  bool is_empty() const { return bits == 0; }
  int size() const;
  bool subset_of(const SubsetMask& other) const { return (bits & ~other.bits) == 0; }
  std::vector<int> indices() const;  // sorted, 1-based

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
  friend std::strong_ordering operator<=>(const SubsetMask& a, const SubsetMask& b) {
    if (auto c = a.dim <=> b.dim; c != 0) return c;
    return a.bits <=> b.bits;
  }
};

SubsetMask symdiff(const SubsetMask& a, const SubsetMask& b);
SubsetMask intersect(const SubsetMask& a, const SubsetMask& b);
SubsetMask unite(const SubsetMask& a, const SubsetMask& b);
SubsetMask complement(const SubsetMask& a);

/// Lexicographic order on the sorted 1-based index lists; ties between
/// different lengths put the prefix first.
bool lex_less(const SubsetMask& a, const SubsetMask& b);

/// "{1,3}" style rendering.
std::string to_string(const SubsetMask& s);

using Family = std::set<SubsetMask>;

/// All 2^|e| subsets of e, in increasing bit order.
std::vector<SubsetMask> subsets_of(const SubsetMask& e);
/// The power set P_n as a family.
Family power_set(int n);

bool is_subgroup(const Family& g, int n);
/// Smallest subgroup of (P_n, symmetric difference) containing f; {empty} for f = {}.
Family generated_group(const Family& f, int n);

/* (F_e, F_o): prescribed even and odd reflections. An empty odds family differs
 * from odds = {empty}; the latter is never proper. */
struct GeneratingPair {
  Family evens;
  Family odds;
  int dim = 0;

  friend bool operator==(const GeneratingPair&, const GeneratingPair&) = default;
};

/* (G_e, G_o): even and odd parts of the group generated by F_e u F_o. */
struct SymmetryPair {
  Family evens;
  Family odds;
  bool proper = true;
  int dim = 0;

  GeneratingPair as_generating() const { return {evens, odds, dim}; }
  friend bool operator==(const SymmetryPair&, const SymmetryPair&) = default;
};

/* Checks the three closure laws of a symmetry pair; does not require properness. */
bool satisfies_symmetry_pair_laws(const GeneratingPair& p);

SymmetryPair gamma(const GeneratingPair& pair);
bool is_proper(const GeneratingPair& pair);

GeneratingPair restrict_pair(const GeneratingPair& pair, const SubsetMask& e);
Family restrict_family(const Family& f, const SubsetMask& e);

/// J(E; F_e, F_o): J subset of E with |J n F| even on F_e and odd on F_o.
std::vector<SubsetMask> index_set(const SubsetMask& e, const GeneratingPair& pair);
/// J(G, {}) for a subgroup G; throws ErrorKind::Precondition if g is not a group.
Family j_dual(const Family& g, int n);

/// E -> E_L = {0} u E in dimension n + 1.
SubsetMask lift_set(const SubsetMask& e);
/// E -> E without the prepended coordinate, kept in dimension n + 1.
SubsetMask embed_set(const SubsetMask& e);
/// (F_e, F_o) -> (F_e u {[n]_L}, F_o) in dimension n + 1.
GeneratingPair lift_pair(const GeneratingPair& pair);
/// L_E(F) = {F, F delta E_L : F in F}, for F on E lifted to dimension n + 1.
Family script_lift(const Family& f, const SubsetMask& e);

/// Canonical symmetric/antisymmetric/unconditional/free pairs on [n].
GeneratingPair no_symmetry_pair(int n);
GeneratingPair symmetric_pair(int n);
GeneratingPair antisymmetric_pair(int n);
GeneratingPair unconditional_pair(int n);

}  // namespace multconv
