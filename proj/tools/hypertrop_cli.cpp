// Command-line front end. Every command prints one JSON document on stdout.
// Exit status: 0 computed, 2 invalid input, 3 unsupported range.

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>

#include "hypertrop/divisors.hpp"
#include "hypertrop/errors.hpp"
#include "hypertrop/harmonic.hpp"
#include "hypertrop/moduli.hpp"
#include "hypertrop/newton.hpp"

using namespace hypertrop;

namespace {

constexpr int kInvalid = 2;
constexpr int kRange = 3;

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInputError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInputError("cannot write '" + path + "'");
  out << text;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json check(const std::string& path, bool oracle) {
  const Model m = model_from_json(read_json(path));
  const HyperellipticDecision d = is_hyperelliptic(m);
  Json out{{"hyperelliptic", d.hyperelliptic}, {"two_vertex", d.two_vertex}};
  if (d.involution) out["involution"] = to_json(d.model, *d.involution);
  if (d.quotient) out["quotient"] = {{"tree", to_json(d.quotient->model)}, {"morphism", to_json(d.quotient->morphism)}};
  if (oracle) {
    const RankHyperellipticity r = is_hyperelliptic_by_rank(m);
    out["oracle_agrees"] = r.hyperelliptic == d.hyperelliptic;
    if (r.witness) {
      out["rank_witness"] = Json::array({r.model.graph().vertex_id(r.witness->first),
                                         r.model.graph().vertex_id(r.witness->second)});
    }
  }
  return out;
}

Json rank_cmd(const std::string& graph_path, const std::string& divisor_path) {
  const Model m = model_from_json(read_json(graph_path));
  const Subdivision s = subdivide(canonical_loopless_model(add_weight_loops(m)), 1);
  const Divisor d = divisor_from_json(s, read_json(divisor_path));
  return {{"degree", degree(d)}, {"rank", rank(s, d)}, {"reduced", divisor_to_json(s, reduce(s, d, 0).divisor)}};
}

Json ladders_cmd(int g) {
  const auto cells = maximal_cells(g);
  Json list = Json::array();
  for (const Tree& t : trees_max_deg3(g - 1)) {
    const Cell c = make_cell(ladder(t));
    list.push_back({{"tree", to_json(t)}, {"ladder", to_json(c.type)}, {"dimension", c.dimension}});
  }
  return {{"genus", g}, {"count", cells.size()}, {"ladders", list}};
}

struct NewtonOptions {
  int genus = 3;
  bool count_only = false;
  bool certify = false;
  bool curves = false;
  int sample = 0;
  unsigned seed = 1;
  std::string out;
};

Json newton_cmd(const NewtonOptions& o) {
  Json result{{"genus", o.genus}};
  if (o.count_only) {
    const CensusCounts c = count_bridgeless_core_triangulations(o.genus);
    result.update({{"neither", c.neither}, {"one", c.one}, {"both", c.both}, {"total", c.total()}});
    return result;
  }
  const auto census = bridgeless_core_triangulations(o.genus);
  CensusCounts c;
  for (const auto& t : census) {
    (t.uses_e1 && t.uses_e2 ? c.both : (t.uses_e1 || t.uses_e2 ? c.one : c.neither)) += 1;
  }
  result.update({{"neither", c.neither}, {"one", c.one}, {"both", c.both}, {"total", c.total()}});

  std::vector<std::size_t> picked(census.size());
  std::iota(picked.begin(), picked.end(), 0);
  if (o.sample > 0 && static_cast<std::size_t>(o.sample) < census.size()) {
    std::mt19937 rng(o.seed);
    std::shuffle(picked.begin(), picked.end(), rng);
    picked.resize(o.sample);
    std::sort(picked.begin(), picked.end());
  }

  if (!o.certify) {
    Json list = Json::array();
    for (std::size_t i : picked) list.push_back(to_json(census[i]));
    result["triangulations"] = list;
    return result;
  }
  Json certs = Json::array();
  bool all = true;
  int non_regular = 0;
  for (std::size_t i : picked) {
    const auto& t = census[i];
    Json entry{{"index", i}, {"staircase", t.staircase}, {"uses_e1", t.uses_e1}, {"uses_e2", t.uses_e2}};
    const RegularLift lift = regular_lift(t);
    entry["regular"] = lift.regular;
    if (!lift.regular) {
      ++non_regular;
      all = false;
      certs.push_back(entry);
      continue;
    }
    const EmbeddedCurve curve = dual_curve(t, lift.heights);
    const Core k = core(curve);
    const LadderCertificate cert = certify_standard_ladder(curve, k, o.genus);
    entry["certificate"] = to_json(cert);
    if (o.curves) entry["curve"] = to_json(curve);
    all = all && cert.ok();
    if (!o.out.empty() && i == picked.front()) write_file(o.out, to_svg(curve, k));
    certs.push_back(entry);
  }
  result["checked"] = picked.size();
  result["non_regular"] = non_regular;
  result["all_standard_ladders"] = all;
  result["certificates"] = certs;
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperelliptic tropical curves: decision procedures, moduli cells, Newton census"};
  app.require_subcommand(1);

  std::string graph_path;
  bool oracle = false;
  auto* check_cmd = app.add_subcommand("check", "Decide hyperellipticity of a metric graph");
  check_cmd->add_option("graph", graph_path, "Graph JSON file")->required();
  check_cmd->add_flag("--oracle", oracle, "Also run the divisor-rank oracle");

  std::string divisor_path;
  auto* rank_sub = app.add_subcommand("rank", "Rank of a divisor on a metric graph");
  rank_sub->add_option("graph", graph_path, "Graph JSON file")->required();
  rank_sub->add_option("divisor", divisor_path, "Divisor JSON file")->required();

  int genus = 3;
  bool two_ec = false;
  std::string format = "json";
  std::string out;
  auto* moduli_cmd = app.add_subcommand("moduli", "Cells of the hyperelliptic locus");
  moduli_cmd->add_option("--genus", genus, "Genus")->required();
  moduli_cmd->add_flag("--two-edge-connected", two_ec, "Only 2-edge-connected types");
  moduli_cmd->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  moduli_cmd->add_option("--out", out, "Write the output here instead of stdout");

  auto* ladders_sub = app.add_subcommand("ladders", "Maximal cells as ladders of trees");
  ladders_sub->add_option("--genus", genus, "Genus")->required();

  NewtonOptions nopt;
  auto* newton_sub = app.add_subcommand("newton", "Triangulations of the hyperelliptic Newton triangle");
  newton_sub->add_option("--genus", nopt.genus, "Genus")->required();
  newton_sub->add_flag("--count-only", nopt.count_only, "Only count by case");
  newton_sub->add_flag("--certify", nopt.certify, "Certify every member's core");
  newton_sub->add_flag("--curves", nopt.curves, "Include each dual curve with --certify");
  newton_sub->add_option("--sample", nopt.sample, "Restrict to this many random members");
  newton_sub->add_option("--seed", nopt.seed, "Seed for --sample");
  newton_sub->add_option("--out", nopt.out, "SVG of the first certified curve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*check_cmd) {
      emit(check(graph_path, oracle));
    } else if (*rank_sub) {
      emit(rank_cmd(graph_path, divisor_path));
    } else if (*moduli_cmd) {
      const CellPoset p = two_ec ? enumerate_H2(genus) : enumerate_H(genus);
      const std::string text = format == "dot" ? to_dot(p) : to_json(p).dump(2) + "\n";
      if (out.empty()) {
        std::cout << text;
      } else {
        write_file(out, text);
        emit({{"written", out}, {"f_vector", p.f_vector}, {"num_cells", p.cells.size()}});
      }
    } else if (*ladders_sub) {
      emit(ladders_cmd(genus));
    } else if (*newton_sub) {
      emit(newton_cmd(nopt));
    }
  } catch (const UnsupportedRangeError& e) {
    std::cerr << "unsupported range: " << e.what() << "\n";
    return kRange;
  } catch (const InvalidInputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
