// matroidlab command line: info, hvector, lsop, nbc, gen, verify.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "matroidlab/acceptance.hpp"
#include "matroidlab/bc_complex.hpp"
#include "matroidlab/constructions.hpp"
#include "matroidlab/error.hpp"
#include "matroidlab/io.hpp"
#include "matroidlab/nbc.hpp"
#include "matroidlab/search.hpp"

using namespace matroidlab;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadParams, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(Errc::BadParams, "cannot write " + out);
  f << j.dump(2) << "\n";
}

Ordering pick_ordering(const MatroidDocument& doc, const std::string& text) {
  if (!text.empty()) return Ordering::parse(doc.matroid, text);
  if (doc.ordering) return *doc.ordering;
  return Ordering::natural(doc.matroid.size());
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream s(text);
  std::string part;
  while (std::getline(s, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoul(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw Error(Errc::Parse, "sizes must look like 3,3,4");
    }
  }
  return out;
}

std::size_t default_workers() {
  if (const char* env = std::getenv("MATROIDLAB_WORKERS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1;
}

BasisPath parse_path(const std::string& s) {
  if (s == "groebner") return BasisPath::Groebner;
  if (s == "macaulay") return BasisPath::Macaulay;
  throw Error(Errc::Parse, "path is groebner or macaulay");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Broken circuit complexes and NBC bases of regular matroids"};
  app.require_subcommand(1);
  int code = 0;

  std::string input, ordering_text, field_text = "gf2", out_path, path_text = "groebner";
  bool timing = false;

  auto* info = app.add_subcommand("info", "Basic invariants of a matroid");
  info->add_option("--input,-i", input, "matroid JSON (default stdin)");

  auto* hvec = app.add_subcommand("hvector", "f and h vectors of the broken circuit complex");
  hvec->add_option("--input,-i", input, "matroid JSON (default stdin)");
  hvec->add_option("--ordering", ordering_text, "comma separated labels");

  auto* lsop_cmd = app.add_subcommand("lsop", "The distinguished linear system of parameters");
  lsop_cmd->add_option("--input,-i", input, "matroid JSON (default stdin)");
  lsop_cmd->add_option("--ordering", ordering_text, "standard ordering, comma separated labels");
  lsop_cmd->add_option("--field", field_text, "gf2, gf<p> or Q");

  auto* nbc = app.add_subcommand("nbc", "NBC basis check and search");
  nbc->require_subcommand(1);
  auto* check = nbc->add_subcommand("check", "Decide one standard ordering");
  check->add_option("--input,-i", input, "matroid JSON (default stdin)");
  check->add_option("--ordering", ordering_text, "standard ordering, comma separated labels");
  check->add_option("--field", field_text, "gf2, gf<p> or Q");
  check->add_option("--path", path_text, "groebner or macaulay");
  check->add_flag("--timing", timing, "include wall time in the report");

  std::string policy_text = "exhaustive", shard_text = "0/1", resume;
  std::size_t workers = default_workers(), window = 2048;
  auto* search = nbc->add_subcommand("search", "Search the standard orderings");
  search->add_option("--input,-i", input, "matroid JSON (default stdin)");
  search->add_option("--policy", policy_text, "exhaustive, sample:N:SEED or first-hit");
  search->add_option("--workers", workers, "worker threads (default $MATROIDLAB_WORKERS or 1)");
  search->add_option("--shard", shard_text, "i/m, 0-based");
  search->add_option("--resume", resume, "checkpoint file, loaded if present");
  search->add_option("--window", window, "orderings between checkpoints");
  std::size_t max_windows = 0;
  search->add_option("--max-windows", max_windows, "stop after this many windows");
  search->add_option("--field", field_text, "gf2, gf<p> or Q");
  search->add_flag("--timing", timing, "include wall time in the report");

  auto* gen = app.add_subcommand("gen", "Generate fixtures");
  gen->require_subcommand(1);
  std::string sizes_text, name;
  std::size_t urank = 0, usize = 0;
  auto* gen_theta = gen->add_subcommand("theta", "Theta matroid with theta labelling");
  gen_theta->add_option("sizes", sizes_text, "n_1,...,n_t")->required();
  auto* gen_phi = gen->add_subcommand("phi", "Phi matroid with phi labelling");
  gen_phi->add_option("sizes", sizes_text, "n_1,...,n_t")->required();
  auto* gen_named = gen->add_subcommand("named", "Named fixture");
  gen_named->add_option("name", name, "R10, DualK33, K33, K4, U24, Fano")->required();
  auto* gen_uniform = gen->add_subcommand("uniform", "Uniform matroid U(r,n)");
  gen_uniform->add_option("rank", urank)->required();
  gen_uniform->add_option("size", usize)->required();
  auto* gen_graph = gen->add_subcommand("graph", "Graphic matroid from an edge list");
  gen_graph->add_option("--input,-i", input, "lines 'u v [label]' (default stdin)");
  for (auto* g : {gen_theta, gen_phi, gen_named, gen_uniform, gen_graph})
    g->add_option("--out,-o", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Reproduction runs");
  verify->require_subcommand(1);
  bool exhaustive = false;
  auto* verify_paper = verify->add_subcommand("paper", "Run every acceptance criterion");
  verify_paper->add_flag("--exhaustive", exhaustive, "also search all R10 orderings");
  verify_paper->add_option("--workers", workers, "worker threads for the R10 search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*info) {
      MatroidDocument doc = read_matroid(slurp(input));
      const Matroid& m = doc.matroid;
      json j;
      j["kind"] = m.kind_name();
      j["labels"] = m.labels();
      j["size"] = m.size();
      j["rank"] = m.rank();
      j["bases"] = m.bases().size();
      j["circuits"] = m.circuits().size();
      j["cocircuits"] = m.cocircuits().size();
      j["components"] = m.connected_components().size();
      j["binary"] = m.is_binary();
      j["regular"] = m.signed_representation().has_value();
      j["standard_orderings"] = standard_ordering_count(m);
      emit(j, "");
    } else if (*hvec) {
      MatroidDocument doc = read_matroid(slurp(input));
      emit(to_json(f_h_vectors(doc.matroid, pick_ordering(doc, ordering_text))), "");
    } else if (*lsop_cmd) {
      MatroidDocument doc = read_matroid(slurp(input));
      StandardOrdering so = StandardOrdering::make(doc.matroid, pick_ordering(doc, ordering_text));
      ThetaSystem th = lsop(doc.matroid, so, FieldTag::parse(field_text));
      emit(to_json(doc.matroid, th, validate_lsop(doc.matroid, th)), "");
    } else if (*check) {
      MatroidDocument doc = read_matroid(slurp(input));
      StandardOrdering so = StandardOrdering::make(doc.matroid, pick_ordering(doc, ordering_text));
      NbcOptions opt;
      opt.path = parse_path(path_text);
      NbcReport rep = nbc_check(doc.matroid, so, FieldTag::parse(field_text), opt);
      emit(to_json(rep, timing), "");
      code = rep.basis ? 0 : 1;
    } else if (*search) {
      MatroidDocument doc = read_matroid(slurp(input));
      SearchOptions opt;
      opt.field = FieldTag::parse(field_text);
      opt.workers = workers;
      opt.shard = Shard::parse(shard_text);
      opt.window = window;
      opt.max_windows = max_windows;
      if (!resume.empty()) opt.resume_path = resume;
      SearchReport rep = search_orderings(doc.matroid, SearchPolicy::parse(policy_text), opt);
      emit(to_json(rep, timing), "");
      code = rep.basis > 0 ? 0 : 1;
    } else if (*gen_theta || *gen_phi) {
      auto sizes = parse_sizes(sizes_text);
      LabelledMatroid lm = *gen_theta ? theta_matroid(sizes) : phi_matroid(sizes);
      emit(matroid_to_json(lm.matroid, lm.ordering.ordering), out_path);
    } else if (*gen_named) {
      NamedMatroid nm = named_matroid(name);
      emit(matroid_to_json(nm.matroid, nm.ordering), out_path);
    } else if (*gen_uniform) {
      emit(matroid_to_json(Matroid::uniform(urank, usize)), out_path);
    } else if (*gen_graph) {
      std::vector<std::string> labels;
      auto edges = parse_edge_list(slurp(input), &labels);
      emit(matroid_to_json(Matroid::from_graph(edges, labels)), out_path);
    } else if (*verify_paper) {
      AcceptanceOptions opt;
      opt.exhaustive = exhaustive;
      opt.workers = workers;
      bool all = true;
      run_acceptance(opt, [&](const CriterionResult& r) {
        std::cout << format_result(r) << std::endl;
        all = all && r.pass;
      });
      code = all ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "matroidlab: " << e.what() << "\n";
    return 2;
  }
  return code;
}
