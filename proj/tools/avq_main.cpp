#include "avq/catalog/builtin.hpp"
#include "avq/catalog/lattices.hpp"
#include "avq/catalog/sporadic.hpp"
#include "avq/smooth/tables.hpp"
#include "avq/groups/kernels.hpp"
#include "avq/smooth/audit.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <set>
#include <iostream>
#include <sstream>

using namespace avq;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kCap = 3 };

struct Selector {
  std::string scenario;
  std::string data_file;
  std::string sporadic;
  std::string lattice = "root";
  std::string data_dir;

  void add_to(CLI::App *app) {
    app->add_option("--scenario", scenario, "builtin scenario label");
    app->add_option("--data", data_file, "sporadic data file (JSON)");
    app->add_option("--sporadic", sporadic, "sporadic data name under <data-dir>/sporadic, e.g. st04");
    app->add_option("--lattice", lattice, "intermediate lattice spec for sporadic data (e.g. d1@1)");
    app->add_option("--data-dir", data_dir, "data directory (default $AVQ_DATA_DIR)");
  }

  std::filesystem::path dir() const { return data_dir.empty() ? default_data_dir() : std::filesystem::path(data_dir); }

  // Unknown selectors are rejected before any computation.
  Scenario resolve() const {
    int picked = !scenario.empty() + !data_file.empty() + !sporadic.empty();
    if (picked != 1)
      throw CLI::ValidationError("select exactly one of --scenario, --data, --sporadic");
    if (!scenario.empty()) {
      return builtin_scenario(scenario);
    }
    std::filesystem::path path = !data_file.empty() ? std::filesystem::path(data_file)
                                                    : dir() / "sporadic" / (sporadic + ".json");
    Scenario s = load_sporadic(path);
    if (lattice != "root")
      s = rebase(s, lattice_from_spec(s, lattice), s.label + "[" + lattice + "]");
    return s;
  }
};

std::string element_str(const LinearElement &g) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < g.dim(); ++i) {
    os << (i ? ";" : "");
    for (std::size_t j = 0; j < g.dim(); ++j)
      os << (j ? "," : "") << g(i, j);
  }
  os << ']';
  return os.str();
}

std::string affine_str(const AffineElement &a) {
  if (a.translation.is_zero())
    return element_str(a.linear);
  return "(" + a.translation.str() + ", " + element_str(a.linear) + ")";
}

json affine_json(const AffineElement &a) {
  json m = json::array();
  for (std::size_t i = 0; i < a.linear.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.linear.dim(); ++j)
      row.push_back(a.linear(i, j));
    m.push_back(row);
  }
  return {{"linear", m}, {"translation", a.translation.str()}};
}

json stratum_json(const Stratum &s) {
  json gens = json::array();
  for (const auto &g : s.generic_stabilizer)
    if (!g.linear.is_identity() || !g.translation.is_zero())
      gens.push_back(affine_json(g));
  return {{"base", s.base.str()},         {"direction", s.direction.key()}, {"complex_dim", s.complex_dim()},
          {"level", s.level},             {"h_order", s.h_order()},         {"p0_order", s.p0_order},
          {"depth", s.depth},             {"stabilizer", gens}};
}

void print_report(const StabilizerReport &r, const std::string &format, bool details) {
  if (format == "json") {
    json gens = json::array(), refl = json::array();
    for (const auto &g : r.generators)
      gens.push_back(affine_json(g));
    for (const auto &g : r.pseudoreflections)
      refl.push_back(affine_json(g));
    std::cout << json{{"point", r.point.str()},
                      {"s0", r.s0_order},
                      {"p0", r.p0_order},
                      {"smooth", r.smooth()},
                      {"generators", gens},
                      {"pseudoreflections", refl}}
                     .dump(1)
              << "\n";
    return;
  }
  std::cout << r.s0_order << "\t" << r.p0_order << "\n";
  if (details) {
    std::cout << "point\t" << r.point.str() << "\n";
    std::cout << "smooth\t" << (r.smooth() ? "yes" : "no") << "\n";
    for (const auto &g : r.generators)
      std::cout << "generator\t" << affine_str(g) << "\t" << (g.linear.fixed_codim() == 2 ? "reflection" : "") << "\n";
  }
}

int run_audit(const Selector &sel, int depth, std::vector<int> torsion, std::uint64_t cap, const std::string &format,
              const std::string &expect, bool sample) {
  Scenario s = sel.resolve();
  AuditOptions o = AuditOptions::defaults_for(s);
  if (depth >= 0)
    o.depth = static_cast<std::size_t>(depth);
  if (!torsion.empty())
    o.torsion_levels = torsion;
  if (cap)
    o.torsion_cap = cap;
  o.sample_check = sample;
  AuditVerdict v = smoothness_audit(s, o);
  if (format == "json") {
    json ns = json::array();
    for (const auto &st : v.nonsmooth_strata)
      ns.push_back(stratum_json(st));
    json j{{"scenario", s.label},
           {"verdict", v.verdict_name()},
           {"complete", v.complete},
           {"coverage", v.coverage()},
           {"nonsmooth_strata", ns},
           {"torsion_nonsmooth_orbits", v.torsion_nonsmooth}};
    if (v.witness)
      j["witness"] = stratum_json(*v.witness);
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << v.verdict_name() << "\n";
    std::cout << "scenario\t" << s.label << "\n";
    std::cout << "chart\t" << v.chart << "\n";
    std::cout << "coverage\t" << v.coverage() << "\n";
    std::cout << "nonsmooth_strata\t" << v.nonsmooth_strata.size() << "\n";
    std::cout << "nonsmooth_torsion_orbits\t" << v.torsion_nonsmooth << "\n";
    if (v.witness) {
      const auto &w = *v.witness;
      std::cout << "witness\t" << w.base.str() << " + " << w.direction.key() << "\tdim " << w.complex_dim() << "\t|H| "
                << w.h_order() << "\t|P0| " << w.p0_order << "\n";
      auto gens = w.generic_stabilizer;
      for (const auto &g : gens)
        if (!g.linear.is_identity())
          std::cout << "witness_element\t" << affine_str(g) << "\n";
    }
    if (v.point_witness)
      std::cout << "point_witness\t" << v.point_witness->point.str() << "\t" << v.point_witness->s0_order << "\t"
                << v.point_witness->p0_order << "\n";
  }
  if (expect == "smooth" && !v.smooth)
    return kMismatch;
  if (expect == "not-smooth" && v.smooth)
    return kMismatch;
  return kOk;
}

int run_info(const Selector &sel, std::size_t cap) {
  Scenario s = sel.resolve();
  std::cout << "label\t" << s.label << "\n";
  std::cout << "real_rank\t" << s.dim() << "\n";
  std::cout << "generators\t" << s.group.generators().size() << "\n";
  if (auto d = s.group.declared_order())
    std::cout << "declared_order\t" << *d << "\n";
  if (!s.group.declared_order() || *s.group.declared_order() <= cap) {
    const auto &els = s.group.elements(cap);
    std::cout << "order\t" << els.size() << "\n";
    std::cout << "pseudoreflections\t" << pseudoreflections(els).size() << "\n";
  }
  if (s.delta)
    std::cout << "delta_order\t" << s.delta->order().get_str() << "\n";
  if (!s.is_affine()) {
    auto rl = root_lattice(s, cap);
    std::cout << "root_lines\t" << rl.root_lines << "\n";
    std::cout << "root_lattice_index\t" << rl.index.get_str() << "\n";
  }
  for (const auto &[k, v] : s.named_vectors) {
    std::cout << "vector\t" << k << "\t(";
    for (std::size_t i = 0; i < v.size(); ++i)
      std::cout << (i ? "," : "") << v[i].get_str();
    std::cout << ")\n";
  }
  return kOk;
}

int run_lattices(const Selector &sel, bool check_generation) {
  Scenario s = sel.resolve();
  auto r = s_matrix_and_intermediate_lattices(s, check_generation);
  std::cout << "det_S_real\t" << r.det_real.get_str() << "\n";
  std::cout << "quotient\t";
  if (r.quotient_factors.empty())
    std::cout << "trivial";
  for (std::size_t i = 0; i < r.quotient_factors.size(); ++i)
    std::cout << (i ? "x" : "") << "Z/" << r.quotient_factors[i].get_str();
  std::cout << "\n";
  std::cout << "action_trivial\t" << (r.action_trivial ? "yes" : "no") << "\n";
  std::cout << "lattices\t" << r.lattices.size() << "\n";
  for (const auto &l : r.lattices) {
    std::cout << l.label << "\t" << l.index.get_str() << "\t";
    for (std::size_t j = 0; j < l.basis.cols(); ++j) {
      std::cout << (j ? " " : "") << "(";
      for (std::size_t i = 0; i < l.basis.rows(); ++i)
        std::cout << (i ? "," : "") << l.basis(i, j).get_str();
      std::cout << ")";
    }
    std::cout << "\n";
  }
  return kOk;
}

int run_remark_search(const Selector &sel, std::size_t cap, std::size_t limit) {
  Scenario s = sel.resolve();
  const auto &els = s.group.elements(cap);
  MatQ q = hermitian_invariant_form(s.torus, s.group);
  // Class representatives by conjugation with the generators.
  std::vector<char> seen(els.size(), 0);
  std::vector<LinearElement> reps;
  auto index_of = [&](const LinearElement &g) {
    return static_cast<std::size_t>(std::lower_bound(els.begin(), els.end(), g) - els.begin());
  };
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (seen[i])
      continue;
    reps.push_back(els[i]);
    std::vector<std::size_t> queue{i};
    seen[i] = 1;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const auto &h : s.group.generators()) {
        auto c = h * els[queue[k]] * h.inverse();
        auto j = index_of(c);
        if (!seen[j]) {
          seen[j] = 1;
          queue.push_back(j);
        }
      }
  }
  std::set<TorsionPoint> done;
  std::size_t shown = 0;
  std::cout << "class\tpoint\tS0\tP0\tsmooth\n";
  for (std::size_t c = 0; c < reps.size(); ++c) {
    if (reps[c].is_identity())
      continue;
    for (const auto &x : remark_candidates(s, reps[c], q)) {
      if (!done.insert(x).second)
        continue;
      auto r = point_stabilizer_report(s, x);
      std::cout << c << "\t" << x.str() << "\t" << r.s0_order << "\t" << r.p0_order << "\t"
                << (r.smooth() ? "yes" : "no") << "\n";
      if (limit && ++shown >= limit)
        return kOk;
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Smoothness of quotients of complex tori by finite groups"};
  app.require_subcommand(1);
  int jobs = 0;
  std::string format = "tsv";
  app.add_option("--jobs", jobs, "OpenMP threads (0 = runtime default, 1 = serial kernels)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"tsv", "json"}));

  Selector sel;
  int depth = -1;
  std::vector<int> torsion;
  std::uint64_t cap = 0;
  std::string expect;
  bool sample = false;
  auto *audit = app.add_subcommand("audit", "strata and torsion audit of A/G");
  sel.add_to(audit);
  audit->add_option("--depth", depth, "strata intersection depth")->check(CLI::NonNegativeNumber);
  audit->add_option("--torsion", torsion, "torsion levels N checked exhaustively");
  audit->add_option("--cap", cap, "cap on |A[N]| for the torsion pass");
  audit->add_option("--expect", expect, "exit 1 unless the verdict matches")
      ->check(CLI::IsMember({"smooth", "not-smooth"}));
  audit->add_flag("--sample-check", sample, "compare generic stabilizers with sampled points");

  std::string point;
  bool details = false;
  auto *report = app.add_subcommand("report", "stabilizer of one point");
  sel.add_to(report);
  report->add_option("--point", point, "point in lattice coordinates, e.g. (1/2,0,0,0)")->required();
  report->add_flag("--details", details, "list generators");

  std::size_t group_cap = kDefaultClosureCap;
  auto *info = app.add_subcommand("info", "group order, pseudoreflections, root lattice");
  sel.add_to(info);
  info->add_option("--cap", group_cap, "closure cap");

  bool no_gen_check = false;
  auto *lat = app.add_subcommand("lattices", "S matrix and intermediate lattices");
  sel.add_to(lat);
  lat->add_flag("--no-generation-check", no_gen_check, "skip checking that the designated reflections generate G");

  std::size_t limit = 0;
  auto *remark = app.add_subcommand("remark-search", "fixed points off the identity component, per class");
  sel.add_to(remark);
  remark->add_option("--cap", group_cap, "closure cap");
  remark->add_option("--limit", limit, "stop after this many candidates");

  std::string which, tables_dir;
  bool large = false, update = false;
  auto *tables = app.add_subcommand("tables", "regenerate a table and diff against the golden baseline");
  tables->add_option("which", which)->required()->check(CLI::IsMember(table_names()));
  tables->add_option("--data-dir", tables_dir, "data directory");
  tables->add_flag("--large", large, "include long-running rows");
  tables->add_flag("--update", update, "rewrite the golden file instead of diffing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  if (jobs == 1)
    kernels::set_parallel(false);
  else if (jobs > 1)
    kernels::set_jobs(jobs);

  try {
    if (*audit)
      return run_audit(sel, depth, torsion, cap, format, expect, sample);
    if (*report) {
      Scenario s = sel.resolve();
      print_report(point_stabilizer_report(s, parse_point(point)), format, details);
      return kOk;
    }
    if (*info)
      return run_info(sel, group_cap);
    if (*lat)
      return run_lattices(sel, !no_gen_check);
    if (*remark)
      return run_remark_search(sel, group_cap, limit);
    if (*tables) {
      TableOptions o;
      o.data_dir = tables_dir.empty() ? default_data_dir() : std::filesystem::path(tables_dir);
      o.large = large;
      o.progress = &std::cerr;
      auto result = run_table(which, o);
      print_table(result, std::cout);
      if (update) {
        write_golden(result, o.data_dir);
        return kOk;
      }
      return result.clean() ? kOk : kMismatch;
    }
  } catch (const CapExceeded &e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const CLI::ValidationError &e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError &e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kOk;
}
