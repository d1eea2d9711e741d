#include "multconv/subset.hpp"

#include "multconv/error.hpp"

#include <bit>
#include <deque>
#include <map>
#include <sstream>

namespace multconv {

namespace {

void check_dim(int n) {
  if (n < 0 || n > SubsetMask::max_dim) fail(ErrorKind::BoundExceeded, "subset dimension out of range: " + std::to_string(n));
}

std::uint64_t low_bits(int n) { return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1); }

}  // namespace

SubsetMask SubsetMask::empty(int n) {
  check_dim(n);
  return {0, n};
}

SubsetMask SubsetMask::full(int n) {
  check_dim(n);
  return {low_bits(n), n};
}

SubsetMask SubsetMask::singleton(int n, int index) {
  check_dim(n);
  if (index < 1 || index > n) fail(ErrorKind::Precondition, "subset index " + std::to_string(index) + " outside [1, " + std::to_string(n) + "]");
  return {std::uint64_t{1} << (index - 1), n};
}

SubsetMask SubsetMask::from_indices(int n, const std::vector<int>& idx) {
  SubsetMask s = empty(n);
  for (int i : idx) s.bits |= singleton(n, i).bits;
  return s;
}

int SubsetMask::size() const { return std::popcount(bits); }

std::vector<int> SubsetMask::indices() const {
  std::vector<int> out;
  for (int i = 0; i < dim; ++i) {
    if ((bits >> i) & 1U) out.push_back(i + 1);
  }
  return out;
}

SubsetMask symdiff(const SubsetMask& a, const SubsetMask& b) {
  require_same_dim(a.dim, b.dim, "symdiff");
  return {a.bits ^ b.bits, a.dim};
}

SubsetMask intersect(const SubsetMask& a, const SubsetMask& b) {
  require_same_dim(a.dim, b.dim, "intersect");
  return {a.bits & b.bits, a.dim};
}

SubsetMask unite(const SubsetMask& a, const SubsetMask& b) {
  require_same_dim(a.dim, b.dim, "unite");
  return {a.bits | b.bits, a.dim};
}

SubsetMask complement(const SubsetMask& a) { return {~a.bits & low_bits(a.dim), a.dim}; }

bool lex_less(const SubsetMask& a, const SubsetMask& b) {
  const auto x = a.indices();
  const auto y = b.indices();
  return x < y;
}

std::string to_string(const SubsetMask& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out << ",";
    out << i;
    first = false;
  }
  out << "}";
  return out.str();
}

std::vector<SubsetMask> subsets_of(const SubsetMask& e) {
  std::vector<SubsetMask> out;
  out.reserve(std::size_t{1} << e.size());
  // Enumerate submasks in increasing order.
  std::uint64_t sub = 0;
  while (true) {
    out.push_back({sub, e.dim});
    if (sub == e.bits) break;
    sub = (sub - e.bits) & e.bits;
  }
  return out;
}

Family power_set(int n) {
  const auto all = subsets_of(SubsetMask::full(n));
  return Family(all.begin(), all.end());
}

bool is_subgroup(const Family& g, int n) {
  if (!g.contains(SubsetMask::empty(n))) return false;
  for (const auto& a : g) {
    if (a.dim != n) return false;
    for (const auto& b : g) {
      if (!g.contains(symdiff(a, b))) return false;
    }
  }
  return true;
}

Family generated_group(const Family& f, int n) {
  GeneratingPair p{f, {}, n};
  return gamma(p).evens;
}

bool satisfies_symmetry_pair_laws(const GeneratingPair& p) {
  if (!is_subgroup(p.evens, p.dim)) return false;
  for (const auto& a : p.odds) {
    for (const auto& b : p.odds) {
      if (!p.evens.contains(symdiff(a, b))) return false;
    }
  }
  for (const auto& a : p.evens) {
    for (const auto& b : p.odds) {
      if (!p.odds.contains(symdiff(a, b))) return false;
    }
  }
  return true;
}

SymmetryPair gamma(const GeneratingPair& pair) {
  const int n = pair.dim;
  check_dim(n);
  // Breadth-first closure over (element, parity of odd generators used).
  std::vector<std::pair<SubsetMask, int>> generators;
  for (const auto& f : pair.evens) generators.emplace_back(f, 0);
  for (const auto& f : pair.odds) generators.emplace_back(f, 1);

  std::map<SubsetMask, unsigned> labels;  // bit 0: even label, bit 1: odd label
  std::deque<std::pair<SubsetMask, int>> queue;
  labels[SubsetMask::empty(n)] = 1U;
  queue.emplace_back(SubsetMask::empty(n), 0);
  while (!queue.empty()) {
    auto [g, parity] = queue.front();
    queue.pop_front();
    for (const auto& [f, fp] : generators) {
      require_same_dim(f.dim, n, "gamma");
      const SubsetMask h = symdiff(g, f);
      const int hp = parity ^ fp;
      unsigned& lab = labels[h];
      const unsigned bit = 1U << hp;
      if ((lab & bit) == 0) {
        lab |= bit;
        queue.emplace_back(h, hp);
      }
    }
  }

  SymmetryPair out;
  out.dim = n;
  for (const auto& [g, lab] : labels) {
    if (lab & 1U) out.evens.insert(g);
    if (lab & 2U) out.odds.insert(g);
    if (lab == 3U) out.proper = false;
  }
  return out;
}

bool is_proper(const GeneratingPair& pair) { return gamma(pair).proper; }

Family restrict_family(const Family& f, const SubsetMask& e) {
  Family out;
  for (const auto& s : f) out.insert(intersect(s, e));
  return out;
}

GeneratingPair restrict_pair(const GeneratingPair& pair, const SubsetMask& e) {
  require_same_dim(pair.dim, e.dim, "restrict_pair");
  return {restrict_family(pair.evens, e), restrict_family(pair.odds, e), pair.dim};
}

std::vector<SubsetMask> index_set(const SubsetMask& e, const GeneratingPair& pair) {
  require_same_dim(pair.dim, e.dim, "index_set");
  std::vector<SubsetMask> out;
  for (const auto& j : subsets_of(e)) {
    bool ok = true;
    for (const auto& f : pair.evens) {
      if (std::popcount(j.bits & f.bits) % 2 != 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (const auto& f : pair.odds) {
      if (std::popcount(j.bits & f.bits) % 2 != 1) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(j);
  }
  return out;
}

Family j_dual(const Family& g, int n) {
  if (!is_subgroup(g, n)) fail(ErrorKind::Precondition, "j_dual: input family is not a subgroup of P_n");
  const auto js = index_set(SubsetMask::full(n), GeneratingPair{g, {}, n});
  return Family(js.begin(), js.end());
}

SubsetMask lift_set(const SubsetMask& e) {
  check_dim(e.dim + 1);
  return {(e.bits << 1) | 1U, e.dim + 1};
}

SubsetMask embed_set(const SubsetMask& e) {
  check_dim(e.dim + 1);
  return {e.bits << 1, e.dim + 1};
}

GeneratingPair lift_pair(const GeneratingPair& pair) {
  GeneratingPair out;
  out.dim = pair.dim + 1;
  check_dim(out.dim);
  for (const auto& f : pair.evens) out.evens.insert(embed_set(f));
  for (const auto& f : pair.odds) out.odds.insert(embed_set(f));
  out.evens.insert(lift_set(SubsetMask::full(pair.dim)));
  return out;
}

Family script_lift(const Family& f, const SubsetMask& e) {
  const SubsetMask el = lift_set(e);
  Family out;
  for (const auto& s : f) {
    const SubsetMask lifted = embed_set(s);
    out.insert(lifted);
    out.insert(symdiff(lifted, el));
  }
  return out;
}

GeneratingPair no_symmetry_pair(int n) { return {{}, {}, n}; }
GeneratingPair symmetric_pair(int n) { return {{SubsetMask::full(n)}, {}, n}; }
GeneratingPair antisymmetric_pair(int n) { return {{}, {SubsetMask::full(n)}, n}; }
GeneratingPair unconditional_pair(int n) { return {power_set(n), {}, n}; }

}  // namespace multconv
