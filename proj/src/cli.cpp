#include "hmjoin/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hmjoin/cospectral.hpp"
#include "hmjoin/errors.hpp"
#include "hmjoin/families.hpp"
#include "hmjoin/io.hpp"
#include "hmjoin/join.hpp"
#include "hmjoin/spectra.hpp"

namespace hmjoin {

namespace {

struct InputError : Error {
  using Error::Error;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AnySpec load_spec(const std::string& path) {
  try {
    return parse_spec(parse_json_text(read_source(path), path));
  } catch (const SpecError& e) {
    if (e.pointer().rfind(path, 0) == 0) throw;
    throw SpecError(path + ": " + (e.pointer().empty() ? "/" : e.pointer()), e.message());
  }
}

JoinSpec load_join_spec(const std::string& path) {
  auto spec = load_spec(path);
  if (auto* j = std::get_if<JoinSpec>(&spec)) return *j;
  throw InputError(path + ": this command needs an H_m-join spec (with \"m\" and \"indexing\")");
}

GeneralizedJoinSpec load_generalized(const std::string& path) {
  auto spec = load_spec(path);
  if (auto* g = std::get_if<GeneralizedJoinSpec>(&spec)) return *g;
  throw InputError(path + ": this command needs a generalized-join spec (with \"subsets\")");
}

class Sink {
 public:
  Sink(std::string path, std::ostream& fallback) : path_(std::move(path)), fallback_(fallback) {}
  void write(const std::string& text) {
    if (path_.empty() || path_ == "-") {
      fallback_ << text;
      return;
    }
    std::ofstream f(path_, std::ios::binary);
    if (!f) throw InputError(path_ + ": cannot write");
    f << text;
  }

 private:
  std::string path_;
  std::ostream& fallback_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra of H_m-joins of graphs", "hmjoin"};
  app.require_subcommand(1, 1);
  std::string output;
  app.add_option("-o,--output", output, "Write the report here instead of standard output");

  std::string spec_path, second_path, preset, mode = "neighbor-exclusive", kind_name = "A", family_name, catalog_path;
  std::vector<std::string> family_args;
  bool edge_list = false, with_charpoly = false, search = false;
  int budget = SearchOptions{}.subset_budget;

  auto* join = app.add_subcommand("join", "Build the join graph of a spec");
  join->add_option("spec", spec_path, "Spec file or -")->required();
  join->add_flag("--edge-list", edge_list, "Emit a plain edge list instead of JSON");

  auto* charpoly_cmd = app.add_subcommand("charpoly", "Characteristic polynomial through the block factorization");
  charpoly_cmd->add_option("spec", spec_path)->required();
  charpoly_cmd->add_option("--preset", preset, "A, L, Q, seidel or Aalpha:<r>");

  auto* classify = app.add_subcommand("classify", "E-main classification of every factor's eigenvalues");
  classify->add_option("spec", spec_path)->required();

  auto* verify = app.add_subcommand("verify", "Check the factorization identity and the carry-forward ledger");
  verify->add_option("spec", spec_path)->required();
  verify->add_option("--preset", preset);

  auto* reduce = app.add_subcommand("reduce", "Delete removable labels");
  reduce->add_option("spec", spec_path)->required();
  reduce->add_option("--mode", mode, "unused, global-exclusive or neighbor-exclusive");

  auto* family = app.add_subcommand("family", "Build a graph family member directly and as a join");
  family->add_option("name", family_name, "petersen, helm, web, lollipop, tadpole or product")->required();
  family->add_option("args", family_args, "Family parameters");
  family->add_flag("--charpoly", with_charpoly, "Also run the block factorization");

  auto* universal = app.add_subcommand("universal", "Universal-matrix charpoly");
  universal->add_option("spec", spec_path)->required();
  universal->add_option("--preset", preset);

  auto* cospectral = app.add_subcommand("cospectral", "Certify or search for cospectral generalized joins");
  cospectral->add_option("first", spec_path);
  cospectral->add_option("second", second_path);
  cospectral->add_option("--kind", kind_name, "A, S, L or U");
  cospectral->add_option("--preset", preset, "Parameters for kind U searches");
  cospectral->add_flag("--search", search, "Search the catalog instead of checking two specs");
  cospectral->add_option("--catalog", catalog_path, "JSON array of graphs (default: built-in catalog)");
  cospectral->add_option("--budget", budget, "Subsets tried per catalog graph");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  Sink sink(output, out);
  try {
    if (*join) {
      auto spec = load_spec(spec_path);
      const Graph g = std::holds_alternative<JoinSpec>(spec) ? hm_join(std::get<JoinSpec>(spec))
                                                             : std::get<GeneralizedJoinSpec>(spec).graph();
      if (edge_list) {
        std::ostringstream ss;
        write_edge_list(ss, g);
        sink.write(ss.str());
      } else {
        sink.write(dump(graph_to_json(g)));
      }
    } else if (*charpoly_cmd || *verify || *universal) {
      auto spec = load_spec(spec_path);
      if (auto* gs = std::get_if<GeneralizedJoinSpec>(&spec)) {
        if (!preset.empty()) gs->params = preset_from_name(preset);
        sink.write(dump(generalized_factorization_to_json(generalized_universal_factorization(*gs))));
      } else {
        const auto& js = std::get<JoinSpec>(spec);
        const auto p = preset.empty() ? UniversalParams::adjacency() : preset_from_name(preset);
        auto report = universal_block_charpoly(js, p);
        Json j = report_to_json(report);
        if (*verify) {
          j = {{"identity", "charpoly_direct * prod g_i^m = prod phi_i * Phi"},
               {"identity_holds", true},
               {"ledger_holds", true},
               {"ledger", j["ledger"]},
               {"combined", j["combined"]},
               {"charpoly", j["charpoly_direct"]}};
        }
        sink.write(dump(j));
      }
    } else if (*classify) {
      const auto spec = load_join_spec(spec_path);
      Json factors = Json::array();
      for (std::size_t i = 0; i < spec.k(); ++i) {
        const QMatrix a = spec.factors[i].adjacency_matrix();
        const QMatrix e = indexing_matrix(spec.factors[i], spec.indexing[i]);
        Json classes = Json::array();
        for (const auto& c : classify_e_main(a, e)) {
          Json row = eigen_class_to_json(c);
          if (c.value) row["numeric_flag"] = numeric_is_e_main(a, e, c.value->get_d()) ? "main" : "non-main";
          classes.push_back(std::move(row));
        }
        factors.push_back({{"factor", i}, {"classes", classes}});
      }
      sink.write(dump({{"factors", factors}}));
    } else if (*reduce) {
      const auto spec = load_join_spec(spec_path);
      const auto m = reduction_mode_from_name(mode);
      const auto report = reduce_labels(spec, m);
      if (blockwise_adjacency(report.reduced) != blockwise_adjacency(spec))
        throw InvariantViolation("blockwise adjacency changed under reduction");
      sink.write(dump(reduction_to_json(report, m)));
    } else if (*family) {
      const auto r = make_family(family_name, family_args);
      if (!realization_matches(r)) throw InvariantViolation("adjacency(direct) != adjacency(hm_join(spec))");
      Json j = realization_to_json(r);
      j["order"] = r.direct.order();
      j["edge_count"] = r.direct.edge_count();
      j["regular"] = r.direct.is_regular();
      j["degrees"] = r.direct.degrees();
      if (with_charpoly) j["report"] = report_to_json(block_charpoly(r.spec));
      sink.write(dump(j));
    } else if (*cospectral) {
      const auto kind = cospectral_kind_from_name(kind_name);
      if (search) {
        SearchOptions opts;
        opts.subset_budget = budget;
        if (!preset.empty()) opts.params = preset_from_name(preset);
        std::vector<Graph> catalog = default_catalog();
        if (!catalog_path.empty()) {
          catalog.clear();
          const Json doc = parse_json_text(read_source(catalog_path), catalog_path);
          if (!doc.is_array()) throw SpecError(catalog_path + ": /", "expected an array of graphs");
          for (std::size_t i = 0; i < doc.size(); ++i) catalog.push_back(graph_from_json(doc[i], "/" + std::to_string(i)));
        }
        Json certs = Json::array();
        for (const auto& c : search_pairs(catalog, kind, opts)) {
          if (!reverify(c)) throw InvariantViolation("certificate failed re-verification");
          certs.push_back(certificate_to_json(c));
        }
        sink.write(dump({{"kind", kind_name}, {"certificates", certs}}));
      } else {
        if (spec_path.empty() || second_path.empty()) throw InputError("cospectral needs two spec files or --search");
        const auto a = load_generalized(spec_path);
        const auto b = load_generalized(second_path);
        sink.write(dump(certificate_to_json(check_cospectral_conditions(a, b, kind))));
      }
    }
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const HypothesisNotMet& e) {
    err << "hypothesis not met: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const InexactDivision& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace hmjoin
