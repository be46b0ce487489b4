#include "klr/cli.hpp"

#include "klr/error.hpp"
#include "klr/mullineux.hpp"
#include "klr/selftest.hpp"
#include "klr/serialize.hpp"

#include <CLI11.hpp>

#include <sstream>

namespace klr::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Word parse_word(const Arith& a, const std::string& text) {
  Word w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int x = 0;
    try {
      std::size_t used = 0;
      x = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("words must be comma-separated residues", text);
    }
    if (x < 0 || x >= a.p()) throw DomainError("word letters must lie in [0, p)", text);
    w.push_back(x);
  }
  return w;
}

FormalCharacter parse_character(const Arith& a, const std::string& text) {
  FormalCharacter ch;
  std::stringstream ss(text);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ';')) {
    ch.add(parse_word(a, item), 1);
    any = true;
  }
  if (!any) ch.add({}, 1);
  return ch;
}

std::vector<int> parse_ints(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError(std::string(what) + " must be comma-separated integers", text);
    }
  }
  return out;
}

Node parse_node(const std::string& text) {
  auto v = parse_ints(text, "node");
  if (v.size() != 2) throw DomainError("node must look like r,s", text);
  return {v[0], v[1]};
}

Json envelope(const char* command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded combinatorics of symmetric group blocks and cyclotomic KLR algebras", "klrw"};
  app.require_subcommand(1);
  app.fallthrough();

  int p = 0;
  std::string eps = "default";
  std::string format = "json";
  std::uint64_t seed = 0;
  app.add_option("--p", p, "quantum characteristic (>= 2)");
  app.add_option("--eps", eps, "sign convention: default | custom:i-j=+1,...");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
  auto* seed_opt = app.add_option("--seed", seed, "seed for randomized choices");

  auto* crystal = app.add_subcommand("crystal", "crystal graph on p-restricted partitions");
  int n_max = 0;
  crystal->add_option("--n", n_max, "largest partition size")->required();

  auto* mull = app.add_subcommand("mullineux", "Mullineux involution");
  std::string shape;
  std::string algo = "both";
  mull->add_option("--shape", shape, "partition, e.g. 3,2^2,1")->required();
  mull->add_option("--algo", algo, "crystal | xu | both")->check(CLI::IsMember({"crystal", "xu", "both"}));

  auto* dim = app.add_subcommand("dim", "graded dimensions");
  dim->require_subcommand(1);
  auto* dim_specht = dim->add_subcommand("specht", "graded dimension of a Specht module");
  dim_specht->add_option("--shape", shape)->required();
  std::string alpha, word_i, word_j;
  auto* dim_block = dim->add_subcommand("block", "graded dimension of a block");
  dim_block->add_option("--alpha", alpha, "content i:count,...")->required();
  auto* dim_idem = dim->add_subcommand("idem", "graded dimension of 1_i H 1_j");
  dim_idem->add_option("--alpha", alpha)->required();
  dim_idem->add_option("--i", word_i, "word, e.g. 0,1,2")->required();
  dim_idem->add_option("--j", word_j)->required();

  auto* branch = app.add_subcommand("branch", "branching multiplicities from normal nodes");
  int residue_i = 0;
  std::string dir = "e";
  branch->add_option("--shape", shape)->required();
  branch->add_option("--i", residue_i, "residue")->required();
  branch->add_option("--dir", dir, "e (restriction) | f (induction)")->check(CLI::IsMember({"e", "f"}));

  auto* garnir = app.add_subcommand("garnir", "Garnir data and the Specht presentation");
  std::string node_text;
  garnir->add_option("--shape", shape)->required();
  garnir->add_option("--node", node_text, "Garnir node r,s (default: all)");

  auto* module = app.add_subcommand("module", "homogeneous KLR modules");
  module->require_subcommand(1);
  bool check = false;
  int color = 1;
  std::string seed_word;
  auto* mod_hook = module->add_subcommand("hook", "minuscule module on chi^i");
  mod_hook->add_option("--i", color)->required();
  mod_hook->add_flag("--check", check, "run the relation checker");
  auto* mod_comp = module->add_subcommand("component", "module on a word-graph component");
  mod_comp->add_option("--word", seed_word, "seed word")->required();
  mod_comp->add_flag("--check", check);
  auto* mod_homog = module->add_subcommand("homogeneous", "module on p-standard tableaux");
  mod_homog->add_option("--shape", shape)->required();
  mod_homog->add_flag("--check", check);

  auto* chr = app.add_subcommand("char", "formal characters");
  chr->require_subcommand(1);
  std::string left, right, composition, base_text;
  int col_n = 0;
  auto* ch_shuffle = chr->add_subcommand("shuffle", "quantum shuffle of two word sums");
  ch_shuffle->add_option("--left", left, "words separated by ';'")->required();
  ch_shuffle->add_option("--right", right)->required();
  auto* ch_column = chr->add_subcommand("column", "column character ch Delta(1^n)");
  ch_column->add_option("--n", col_n)->required();
  ch_column->add_option("--color", color);
  auto* ch_jt = chr->add_subcommand("jacobi-trudi", "shuffle determinant for mu");
  ch_jt->add_option("--shape", shape)->required();
  ch_jt->add_option("--color", color);
  auto* ch_gg = chr->add_subcommand("gg", "Gelfand-Graev coefficient of ch Delta(1^n)");
  ch_gg->add_option("--n", col_n)->required();
  ch_gg->add_option("--color", color);
  ch_gg->add_option("--composition", composition)->required();
  ch_gg->add_option("--base", base_text, "base word (default: canonical for the color)");

  auto* rootpart = app.add_subcommand("rootpart", "root partitions of a content");
  int variant = 0;
  rootpart->add_option("--alpha", alpha)->required();
  rootpart->add_option("--variant", variant, "convex preorder variant");

  auto* selftest = app.add_subcommand("selftest", "run the golden examples");

  for (auto* sub : {crystal, mull, dim, dim_specht, dim_block, dim_idem, branch, garnir, module, mod_hook, mod_comp,
                    mod_homog, chr, ch_shuffle, ch_column, ch_jt, ch_gg, rootpart, selftest})
    sub->fallthrough();

  std::vector<const char*> argv{"klrw"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (selftest->parsed()) return run_selftest(out) == 0 ? 0 : 1;

    if (p == 0) throw UsageError("--p is required");
    const Arith a(p);
    if (!a.is_prime()) err << "warning: p = " << p << " is not prime; the symmetric group interpretation needs prime p\n";
    const SignChoice signs = SignChoice::parse(a, eps);

    if (crystal->parsed()) {
      const auto g = crystal_graph(a, n_max);
      if (format == "dot") {
        out << to_dot(g);
      } else {
        Json j = envelope("crystal");
        j["p"] = p;
        j["graph"] = to_json(g);
        emit(out, j);
      }
      return 0;
    }

    if (mull->parsed()) {
      const Partition mu = Partition::parse(shape);
      Json j = envelope("mullineux");
      j["input"] = to_json(mu);
      if (algo == "crystal") {
        if (seed_opt->count() > 0) {
          std::mt19937_64 rng(seed);
          j["result"] = to_json(mullineux_crystal(a, mu, rng));
        } else {
          j["result"] = to_json(mullineux_crystal(a, mu));
        }
      } else if (algo == "xu") {
        j["result"] = to_json(mullineux_xu(a, mu));
      } else {
        const Partition x = mullineux_xu(a, mu);
        const Partition c = mullineux_crystal(a, mu);
        j["result"] = to_json(x);
        j["agree"] = x == c;
        if (x != c) {
          j["crystal"] = to_json(c);
          emit(out, j);
          return 1;
        }
      }
      emit(out, j);
      return 0;
    }

    if (dim->parsed()) {
      Json j = envelope("dim");
      if (dim_specht->parsed()) {
        const Partition mu = Partition::parse(shape);
        const LaurentPoly d = specht_graded_dim(a, mu);
        j["shape"] = to_json(mu);
        j["dim_q"] = to_json(d);
        j["text"] = d.to_string();
      } else if (dim_block->parsed()) {
        const ContentVector c = ContentVector::parse(a, alpha);
        const LaurentPoly d = block_graded_dim(a, c);
        j["alpha"] = to_json(c);
        j["dim_q"] = to_json(d);
        j["text"] = d.to_string();
      } else {
        const ContentVector c = ContentVector::parse(a, alpha);
        const LaurentPoly d = idempotent_graded_dim(a, c, parse_word(a, word_i), parse_word(a, word_j));
        j["alpha"] = to_json(c);
        j["dim_q"] = to_json(d);
        j["text"] = d.to_string();
      }
      emit(out, j);
      return 0;
    }

    if (branch->parsed()) {
      const Partition mu = Partition::parse(shape);
      const Direction d = dir == "e" ? Direction::Restrict : Direction::Induce;
      Json j = envelope("branch");
      j["table"] = to_json(branch_table(a, mu, residue_i, d));
      const auto soc = socle_prediction(a, mu, residue_i, d);
      j["socle"] = soc ? to_json(*soc) : Json();
      emit(out, j);
      return 0;
    }

    if (garnir->parsed()) {
      const Partition mu = Partition::parse(shape);
      Json j = envelope("garnir");
      if (!node_text.empty()) {
        const Node A = parse_node(node_text);
        j["data"] = to_json(garnir_data(a, mu, A));
        j["element"] = to_json(garnir_element_symbolic(a, mu, A));
      } else {
        Json all = Json::array();
        for (const Node& A : garnir_nodes(mu)) all.push_back(to_json(garnir_data(a, mu, A)));
        j["data"] = all;
        j["presentation"] = to_json(specht_presentation(a, mu));
      }
      emit(out, j);
      return 0;
    }

    if (module->parsed()) {
      GradedModule m;
      bool cyclotomic = true;
      if (mod_hook->parsed()) {
        m = hook_module(a, color);
      } else if (mod_homog->parsed()) {
        m = homogeneous_module(a, Partition::parse(shape));
      } else {
        m = component_module(a, signs, word_graph_component(a, parse_word(a, seed_word)));
        cyclotomic = false;
      }
      Json j = envelope("module");
      j["module"] = to_json(m);
      j["character"] = to_json(character(m));
      if (check) {
        const RelationReport rep = check_relations(a, signs, m, cyclotomic);
        j["cyclotomic"] = cyclotomic;
        j["relations"] = to_json(rep);
        emit(out, j);
        return rep.passed() ? 0 : 1;
      }
      emit(out, j);
      return 0;
    }

    if (chr->parsed()) {
      Json j = envelope("char");
      FormalCharacter ch;
      if (ch_shuffle->parsed()) {
        ch = shuffle(a, parse_character(a, left), parse_character(a, right));
      } else if (ch_column->parsed()) {
        ch = column_char(a, col_n, color);
      } else if (ch_jt->parsed()) {
        ch = jacobi_trudi(a, Partition::parse(shape), color);
      } else {
        const FormalCharacter v = column_char(a, col_n, color);
        const Word base = base_text.empty() ? canonical_base_word(a, color) : parse_word(a, base_text);
        const auto comp = parse_ints(composition, "composition");
        const LaurentPoly m = gg_coefficient(a, v, base, comp);
        j["word"] = gg_word(base, comp);
        j["coefficient"] = to_json(m);
        emit(out, j);
        return 0;
      }
      j["character"] = to_json(ch);
      j["text"] = ch.to_string();
      emit(out, j);
      return 0;
    }

    if (rootpart->parsed()) {
      const ContentVector c = ContentVector::parse(a, alpha);
      const auto order = ConvexPreorder::variant(a, std::max(c.height(), 1), variant);
      Json arr = Json::array();
      for (const auto& rp : root_partitions(a, c, order)) arr.push_back(to_json(rp, a));
      Json j = envelope("rootpart");
      j["alpha"] = to_json(c);
      j["root_partitions"] = arr;
      emit(out, j);
      return 0;
    }
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    Json j;
    j["schema"] = kSchema;
    j["error"] = Json{{"precondition", e.precondition()}, {"value", e.value()}};
    err << j.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json j;
    j["schema"] = kSchema;
    j["error"] = Json{{"precondition", "computation failed"}, {"value", e.what()}};
    err << j.dump() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace klr::cli
