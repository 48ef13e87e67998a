#include "wsne/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace wsne {

namespace {

json rat_json(const Rat& r) { return rat_to_string(r); }

std::vector<Rat> rat_vector_from_json(const json& j) {
  std::vector<Rat> v;
  for (const auto& e : j) v.push_back(rat_from_string(e.get<std::string>()));
  return v;
}

json rat_vector_json(const std::vector<Rat>& v) {
  json a = json::array();
  for (const Rat& r : v) a.push_back(rat_json(r));
  return a;
}

BitMatrix bitmatrix_from_json(const json& rows, int m, int n) {
  BitMatrix b(m, n);
  if (static_cast<int>(rows.size()) != m)
    throw std::invalid_argument("bit matrix: row count mismatch");
  for (int i = 0; i < m; ++i) {
    const std::string s = rows[i].get<std::string>();
    if (static_cast<int>(s.size()) != n)
      throw std::invalid_argument("bit matrix: row length mismatch");
    for (int c = 0; c < n; ++c) {
      if (s[c] == '1')
        b.set(i, c);
      else if (s[c] != '0')
        throw std::invalid_argument("bit matrix: rows must be '0'/'1' strings");
    }
  }
  return b;
}

json bitmatrix_json(const BitMatrix& b) {
  json rows = json::array();
  for (int i = 0; i < b.rows(); ++i) rows.push_back(b.row_string(i));
  return rows;
}

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

}  // namespace

void to_json(json& j, const Tournament& t) {
  json gen;
  switch (t.generator().kind) {
    case GeneratorInfo::Kind::random:
      gen["kind"] = "random";
      if (t.generator().seed) gen["seed"] = *t.generator().seed;
      break;
    case GeneratorInfo::Kind::paley:
      gen["kind"] = "paley";
      if (t.generator().q) gen["q"] = *t.generator().q;
      break;
    case GeneratorInfo::Kind::explicit_:
      gen["kind"] = "explicit";
      break;
  }
  j = json{{"n", t.size()}, {"orientation", t.orientation_string()}, {"generator", gen}};
}

Tournament tournament_from_json(const json& j) {
  GeneratorInfo gen;
  if (j.contains("generator")) {
    const auto& g = j.at("generator");
    std::string kind = g.value("kind", "explicit");
    if (kind == "random") {
      gen.kind = GeneratorInfo::Kind::random;
      if (g.contains("seed")) gen.seed = g.at("seed").get<uint64_t>();
    } else if (kind == "paley") {
      gen.kind = GeneratorInfo::Kind::paley;
      if (g.contains("q")) gen.q = g.at("q").get<int>();
    }
  }
  return Tournament::from_orientation(j.at("n").get<int>(),
                                      j.at("orientation").get<std::string>(), gen);
}

void to_json(json& j, const WinLoseGame& g) {
  j = json{{"m", g.m}, {"n", g.n}, {"A", bitmatrix_json(g.A)}, {"B", bitmatrix_json(g.B)}};
}

WinLoseGame game_from_json(const json& j) {
  int m = j.at("m").get<int>(), n = j.at("n").get<int>();
  if (m < 1 || n < 1) throw std::invalid_argument("game: dimensions must be positive");
  WinLoseGame g(m, n);
  g.A = bitmatrix_from_json(j.at("A"), m, n);
  g.B = bitmatrix_from_json(j.at("B"), m, n);
  return g;
}

void to_json(json& j, const BipartiteDigraph& d) {
  j = json{{"left_size", d.left_size},
           {"right_size", d.right_size},
           {"arcs_lr", bitmatrix_json(d.lr)},
           {"arcs_rl", bitmatrix_json(d.rl)}};
}

BipartiteDigraph digraph_from_json(const json& j) {
  int l = j.at("left_size").get<int>(), r = j.at("right_size").get<int>();
  if (l < 0 || r < 0) throw std::invalid_argument("digraph: negative side size");
  BipartiteDigraph d(l, r);
  d.lr = bitmatrix_from_json(j.at("arcs_lr"), l, r);
  d.rl = bitmatrix_from_json(j.at("arcs_rl"), r, l);
  return d;
}

void to_json(json& j, const GeneralDigraph& d) {
  json arcs = json::array();
  for (int u = 0; u < d.n; ++u)
    for (int v = 0; v < d.n; ++v)
      if (d.arcs.get(u, v)) arcs.push_back(json::array({u, v}));
  j = json{{"n", d.n}, {"arcs", arcs}};
}

GeneralDigraph general_digraph_from_json(const json& j) {
  GeneralDigraph d(j.at("n").get<int>());
  for (const auto& a : j.at("arcs")) d.add_arc(a.at(0).get<int>(), a.at(1).get<int>());
  return d;
}

void to_json(json& j, const WeightedBipartiteDigraph& w) {
  j = json{{"graph", w.graph},
           {"left_weights", rat_vector_json(w.left_weights)},
           {"right_weights", rat_vector_json(w.right_weights)}};
}

WeightedBipartiteDigraph weighted_digraph_from_json(const json& j) {
  WeightedBipartiteDigraph w;
  w.graph = digraph_from_json(j.at("graph"));
  w.left_weights = rat_vector_from_json(j.at("left_weights"));
  w.right_weights = rat_vector_from_json(j.at("right_weights"));
  validate_weighted(w);
  return w;
}

void to_json(json& j, const BVertex& v) {
  j = json{{"side", side_name(v.side)}, {"index", v.index}};
}

void to_json(json& j, const VertexSet& vs) {
  j = json{{"side", side_name(vs.side)}, {"indices", vs.indices}};
}

void to_json(json& j, const MixedStrategy& s) { j = rat_vector_json(s.probs()); }

MixedStrategy strategy_from_json(const json& j) {
  return MixedStrategy(rat_vector_from_json(j));
}

void to_json(json& j, const Profile& p) {
  j = json{{"p", p.row}, {"q", p.col}};
}

Profile profile_from_json(const json& j) {
  return Profile{strategy_from_json(j.at("p")), strategy_from_json(j.at("q"))};
}

void to_json(json& j, const SupportPair& sp) {
  j = json{{"rows", sp.rows}, {"cols", sp.cols}};
}

SupportPair support_pair_from_json(const json& j) {
  return SupportPair{j.at("rows").get<std::vector<int>>(),
                     j.at("cols").get<std::vector<int>>()};
}

void to_json(json& j, const EpsResult& r) {
  j = json{{"eps", rat_json(r.eps)}, {"witness", r.witness}, {"supports", r.supports}};
}

void to_json(json& j, const SearchResult& r) {
  j = json{{"best", r.best},
           {"exhaustive", r.exhaustive},
           {"inspected", r.inspected},
           {"total", r.total}};
}

void to_json(json& j, const NeighborhoodDecomposition& nd) {
  j = json{{"pivot", nd.pivot},   {"a1", nd.a1},
           {"b1", nd.b1},         {"b2", nd.b2},
           {"c1", nd.c1},         {"alpha1", rat_json(nd.alpha1)},
           {"beta1", rat_json(nd.beta1)}, {"beta2", rat_json(nd.beta2)},
           {"gamma1", rat_json(nd.gamma1)}};
}

void to_json(json& j, const ConjectureResult& r) {
  switch (r.verdict) {
    case ConjectureVerdict::holds_via_cycle:
      j = json{{"verdict", "holds_via_cycle"}, {"cycle", r.cycle}};
      break;
    case ConjectureVerdict::holds_via_undominated_triple:
      j = json{{"verdict", "holds_via_undominated_triple"}, {"triple", r.triple}};
      break;
    case ConjectureVerdict::counterexample:
      j = json{{"verdict", "counterexample"}};
      break;
  }
}

void to_json(json& j, const ChResult& r) {
  j = json{{"inspected", r.inspected}, {"total", r.total}};
  switch (r.verdict) {
    case ChVerdict::holds:
      j["verdict"] = "holds";
      break;
    case ChVerdict::counterexample:
      j["verdict"] = "counterexample";
      j["counterexample"] = *r.counterexample;
      break;
    case ChVerdict::budget_exceeded:
      j["verdict"] = "budget_exceeded";
      break;
  }
}

json coverage_certificate(const KCoverageResult& r, int k) {
  json j{{"property", "k-covered"}, {"k", k}, {"mode", r.mode}};
  switch (r.status) {
    case CoverageStatus::covered:
      j["status"] = "covered";
      j["holds"] = true;
      break;
    case CoverageStatus::uncovered:
      j["status"] = "uncovered";
      j["holds"] = false;
      break;
    case CoverageStatus::inconclusive:
      j["status"] = "inconclusive";
      j["holds"] = false;
      break;
    case CoverageStatus::budget_exceeded:
      j["status"] = "budget_exceeded";
      j["holds"] = false;
      j["mode"] = "budget_exceeded";
      break;
  }
  if (r.witness) j["witness"] = *r.witness;
  if (r.domination_witness) j["domination_witness"] = r.domination_witness->ids();
  if (!r.note.empty()) j["note"] = r.note;
  if (r.total) {
    j["inspected"] = r.inspected;
    j["total"] = r.total;
  }
  return j;
}

void to_json(json& j, const NoSmallWsneCertificate& c) {
  json cov = json::array();
  for (size_t i = 0; i < c.coverage.size(); ++i)
    cov.push_back(coverage_certificate(c.coverage[i], static_cast<int>(i) + 1));
  j = json{{"certified", c.certified},
           {"s", c.s},
           {"eps_lower_bound", rat_json(c.threshold)},
           {"coverage", cov}};
  if (c.digon) j["digon"] = json::array({c.digon->first, c.digon->second});
  if (c.short_cycle) j["short_cycle"] = *c.short_cycle;
  if (!c.failure.empty()) j["failure"] = c.failure;
}

std::string fnv1a64_hex(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace wsne
