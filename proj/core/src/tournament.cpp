#include "wsne/tournament.hpp"

#include "wsne/parallel.hpp"
#include "wsne/subsets.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace wsne {

NodeSet::NodeSet(std::vector<int> ids) : ids_(std::move(ids)) {
  for (size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] < 0) throw std::invalid_argument("NodeSet: negative index");
    if (i > 0 && ids_[i] <= ids_[i - 1])
      throw std::invalid_argument("NodeSet: indices must be strictly increasing");
  }
}

NodeSet NodeSet::from_unsorted(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return NodeSet(std::move(ids));
}

bool NodeSet::contains(int v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

void Tournament::finish_in_matrix() {
  // Row u of in_ lists the in-neighbours of u: for u != v, !arc(u,v) is arc(v,u).
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (u != v && !out_.get(u, v)) in_.set(u, v);
}

Tournament Tournament::random(int n, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random tournament: n must be positive");
  Tournament t(n, GeneratorInfo{GeneratorInfo::Kind::random, seed, std::nullopt});
  std::mt19937_64 rng(seed);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rng() & 1u)
        t.out_.set(i, j);
      else
        t.out_.set(j, i);
    }
  t.finish_in_matrix();
  return t;
}

namespace {
bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; static_cast<long>(d) * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}
}  // namespace

Tournament Tournament::paley(int q) {
  if (!is_prime(q) || q % 4 != 3)
    throw std::invalid_argument("paley tournament: q must be a prime = 3 (mod 4)");
  std::vector<char> residue(q, 0);
  for (int x = 1; x < q; ++x)
    residue[static_cast<int>((static_cast<long>(x) * x) % q)] = 1;
  Tournament t(q, GeneratorInfo{GeneratorInfo::Kind::paley, std::nullopt, q});
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      if (i != j && residue[((j - i) % q + q) % q]) t.out_.set(i, j);
  t.finish_in_matrix();
  return t;
}

Tournament Tournament::from_orientation(int n, const std::string& bits, GeneratorInfo gen) {
  if (n < 1) throw std::invalid_argument("tournament: n must be positive");
  size_t expect = static_cast<size_t>(n) * (n - 1) / 2;
  if (bits.size() != expect)
    throw std::invalid_argument("tournament: orientation string has wrong length");
  Tournament t(n, gen);
  size_t p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++p) {
      char c = bits[p];
      if (c == '1')
        t.out_.set(i, j);
      else if (c == '0')
        t.out_.set(j, i);
      else
        throw std::invalid_argument("tournament: orientation must be '0'/'1'");
    }
  t.finish_in_matrix();
  return t;
}

std::string Tournament::orientation_string() const {
  std::string s;
  s.reserve(static_cast<size_t>(n_) * (n_ - 1) / 2);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) s.push_back(arc(i, j) ? '1' : '0');
  return s;
}

bool dominates(const Tournament& t, int u, const NodeSet& s) {
  if (u < 0 || u >= t.size()) throw std::invalid_argument("dominates: node out of range");
  if (s.max_id() >= t.size()) throw std::invalid_argument("dominates: set out of range");
  if (s.contains(u)) return false;
  for (int v : s.ids())
    if (!t.arc(u, v)) return false;
  return true;
}

std::optional<int> find_dominator(const Tournament& t, const NodeSet& s) {
  if (s.empty()) throw std::invalid_argument("find_dominator: empty set");
  if (s.max_id() >= t.size()) throw std::invalid_argument("find_dominator: set out of range");
  // Dominators of S are exactly the intersection of the in-neighbourhoods of
  // its members (u -> v iff u is an in-neighbour of v); members drop out on
  // their own because v never lies in in(v).
  std::vector<uint64_t> cand(t.in_neighbors(s.ids()[0]).begin(),
                             t.in_neighbors(s.ids()[0]).end());
  for (size_t i = 1; i < s.ids().size(); ++i)
    and_into(cand, t.in_neighbors(s.ids()[i]));
  int u = first_bit(cand);
  if (u < 0) return std::nullopt;
  return u;
}

DominationResult is_m_dominated(const Tournament& t, int m, int jobs) {
  int n = t.size();
  if (m < 1 || m >= n)
    throw std::invalid_argument("is_m_dominated: require 1 <= m < n");
  for (int size = 1; size <= m; ++size) {
    uint64_t total = binom_sat(n, size);
    auto chunk = [&](IndexRange r) -> std::optional<uint64_t> {
      if (r.begin >= r.end) return std::nullopt;
      std::vector<int> s = subset_unrank_lex(r.begin, n, size);
      std::vector<uint64_t> acc(t.in_neighbors(0).size());
      for (uint64_t rank = r.begin; rank < r.end; ++rank) {
        acc.assign(t.in_neighbors(s[0]).begin(), t.in_neighbors(s[0]).end());
        for (int i = 1; i < size; ++i) and_into(acc, t.in_neighbors(s[i]));
        if (!any_bit(acc)) return rank;
        next_subset_lex(s, n);
      }
      return std::nullopt;
    };
    auto found = map_ranges(total, jobs, chunk);
    for (auto& f : found)
      if (f) return {false, NodeSet(subset_unrank_lex(*f, n, size))};
  }
  return {true, std::nullopt};
}

}  // namespace wsne
