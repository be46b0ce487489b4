#include "klr/serialize.hpp"

#include <limits>
#include <sstream>

namespace klr {

namespace {

Json bigint_json(const BigInt& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return static_cast<long long>(c);
  return c.str();
}

Json word_json(const Word& w) { return Json(w); }

const char* dir_name(Direction d) { return d == Direction::Restrict ? "e" : "f"; }

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = bigint_json(c);
  return j;
}

Json to_json(const Partition& mu) { return Json(mu.parts()); }

Json to_json(const Node& n) { return Json::array({n.row, n.col}); }

Json to_json(const Tableau& t) {
  return Json{{"shape", to_json(t.shape())}, {"rows", t.rows()}};
}

Json to_json(const ContentVector& c) {
  Json j = Json::object();
  for (int i = 0; i < c.p(); ++i)
    if (c[i] != 0) j[std::to_string(i)] = c[i];
  return j;
}

Json to_json(const FormalCharacter& ch) {
  Json arr = Json::array();
  for (const auto& [w, c] : ch.terms()) arr.push_back(Json{{"word", word_json(w)}, {"coeff", to_json(c)}});
  return arr;
}

Json to_json(const SignatureReport& s) {
  Json nodes = Json::array();
  for (const auto& n : s.nodes) nodes.push_back(to_json(n));
  auto signs = [](const std::vector<int>& v) {
    std::string out;
    for (int x : v) out += x > 0 ? '+' : (x < 0 ? '-' : '0');
    return out;
  };
  Json normal = Json::array(), conormal = Json::array();
  for (int k : s.normal) normal.push_back(to_json(s.nodes[static_cast<std::size_t>(k)]));
  for (int k : s.conormal) conormal.push_back(to_json(s.nodes[static_cast<std::size_t>(k)]));
  return Json{{"i", s.i},          {"nodes", nodes},       {"raw", signs(s.raw)},
              {"reduced", signs(s.reduced)}, {"normal", normal}, {"conormal", conormal},
              {"epsilon", s.epsilon()}, {"phi", s.phi()}};
}

Json to_json(const BranchTable& t) {
  Json entries = Json::array();
  BigInt ungraded = 0;
  for (const auto& e : t.entries) {
    entries.push_back(Json{{"target", to_json(e.target)},
                           {"multiplicity", to_json(e.multiplicity)},
                           {"provenance", e.provenance},
                           {"confirmed_by_both", e.confirmed_by_both}});
    ungraded += e.multiplicity.at_one();
  }
  Json homs = Json::array();
  for (const auto& h : t.homs)
    homs.push_back(Json{{"target", to_json(h.target)}, {"dim_q", to_json(h.dim)}, {"specht_only", h.specht_only}});
  return Json{{"source", to_json(t.source)},
              {"i", t.i},
              {"dir", dir_name(t.direction)},
              {"epsilon", t.epsilon},
              {"phi", t.phi},
              {"vanishes", t.vanishes},
              {"label", "known factors (lower bound)"},
              {"entries", entries},
              {"ungraded_total", bigint_json(ungraded)},
              {"homs", homs}};
}

Json to_json(const SoclePrediction& s) {
  return Json{{"target", to_json(s.target)},
              {"socle_shift", s.socle_shift},
              {"head_shift", s.head_shift},
              {"top_multiplicity", to_json(s.top_multiplicity)},
              {"endomorphism_dim", s.endomorphism_dim},
              {"irreducible", s.irreducible}};
}

Json to_json(const GarnirData& g) {
  Json belt = Json::array();
  for (const auto& n : g.belt) belt.push_back(to_json(n));
  Json bricks = Json::array();
  for (const auto& b : g.bricks) {
    Json nodes = Json::array();
    for (const auto& n : b) nodes.push_back(to_json(n));
    bricks.push_back(nodes);
  }
  Json gens = Json::array();
  for (const auto& w : g.generators) gens.push_back(w.one_line());
  Json gar = Json::array();
  for (const auto& t : g.gar_set) gar.push_back(t.rows());
  return Json{{"shape", to_json(g.shape)},
              {"node", to_json(g.node)},
              {"belt", belt},
              {"u", g.u},
              {"v", g.v},
              {"garnir_tableau", g.garnir_tableau.rows()},
              {"bricks", bricks},
              {"k", g.k},
              {"f", g.f},
              {"d", g.d ? Json(*g.d) : Json()},
              {"generators", gens},
              {"minimal_tableau", g.minimal_tableau.rows()},
              {"coset_reps", g.coset_reps},
              {"gar_set", gar}};
}

Json to_json(const GarnirElement& e) {
  Json terms = Json::array();
  for (const auto& t : e.terms) {
    Json tau = Json::array();
    for (const auto& f : t.tau)
      tau.push_back(Json{{"index", f.index}, {"psi_word", f.psi_word}, {"degree", f.degree}});
    terms.push_back(Json{{"tau", tau},
                         {"psi_tableau_word", t.psi_tableau_word},
                         {"psi_tableau_degree", t.psi_tableau_degree},
                         {"idempotent", word_json(t.idempotent)}});
  }
  return Json{{"node", to_json(e.node)}, {"terms", terms}};
}

Json to_json(const SpechtPresentation& sp) {
  Json garnir = Json::array();
  for (const auto& g : sp.garnir) garnir.push_back(to_json(g));
  return Json{{"shape", to_json(sp.shape)},
              {"generator_degree", sp.generator_degree},
              {"idempotent", word_json(sp.idempotent)},
              {"y_killed", sp.y_killed},
              {"psi_killed", sp.psi_killed},
              {"garnir", garnir}};
}

namespace {

Json matrix_json(const SparseMatrix& m) {
  Json entries = Json::array();
  for (int c = 0; c < m.dim(); ++c)
    for (const auto& [r, v] : m.column(c)) entries.push_back(Json::array({r, c, v}));
  return entries;
}

}  // namespace

Json to_json(const GradedModule& m) {
  Json basis = Json::array();
  for (const auto& b : m.basis) basis.push_back(Json{{"label", b.label}, {"word", word_json(b.word)}, {"degree", b.degree}});
  Json y = Json::array(), psi = Json::array();
  for (const auto& mat : m.y) y.push_back(matrix_json(mat));
  for (const auto& mat : m.psi) psi.push_back(matrix_json(mat));
  return Json{{"n", m.n}, {"dim", m.dim()}, {"basis", basis}, {"y", y}, {"psi", psi}};
}

Json to_json(const RelationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"relation", f.relation}, {"word", word_json(f.word)}, {"detail", f.detail}});
  return Json{{"passed", r.passed()}, {"checks", r.checks}, {"failures", failures}};
}

Json to_json(const AffineRoot& r, const Arith& a) {
  return Json{{"root", r.to_string()}, {"content", to_json(r.content(a))}, {"height", r.height(a)}};
}

Json to_json(const RootPartition& rp, const Arith& a) {
  Json real = Json::array();
  for (const auto& [root, m] : rp.real_mults) {
    Json j = to_json(root, a);
    j["mult"] = m;
    real.push_back(j);
  }
  Json mp = Json::array();
  for (const auto& mu : rp.multipartition) mp.push_back(to_json(mu));
  return Json{{"real", real}, {"m_delta", rp.m_delta()}, {"multipartition", mp}, {"text", rp.to_string()}};
}

Json to_json(const CrystalGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices) vertices.push_back(to_json(v));
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"color", e.color}});
  return Json{{"vertices", vertices}, {"edges", edges}};
}

std::string to_dot(const CrystalGraph& g) {
  static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    const auto& v = g.vertices[k];
    os << "  v" << k << " [label=\"" << (v.empty() ? "\xE2\x88\x85" : v.to_exp_string()) << "\"];\n";
  }
  for (const auto& e : g.edges)
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.color << "\", color=" << palette[e.color % 8] << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace klr
