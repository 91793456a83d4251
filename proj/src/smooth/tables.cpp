#include "avq/smooth/tables.hpp"

#include "avq/catalog/builtin.hpp"
#include "avq/catalog/lattices.hpp"
#include "avq/catalog/sporadic.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <array>
#include <sstream>

namespace avq {

std::vector<std::string> table_names() { return {"paper1", "paper2", "prop33", "prop36"}; }

bool TableResult::clean() const {
  for (const auto &r : rows)
    if (!r.ok())
      return false;
  return true;
}

std::vector<std::vector<std::string>> read_tsv(const std::filesystem::path &path, std::vector<std::string> *header) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot open golden file " + path.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  auto split = [](const std::string &l) {
    std::vector<std::string> cells;
    std::stringstream ss(l);
    std::string c;
    while (std::getline(ss, c, '\t'))
      cells.push_back(c);
    return cells;
  };
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    if (line[0] == '#') {
      if (header && header->empty())
        *header = split(line.substr(1));
      continue;
    }
    rows.push_back(split(line));
  }
  return rows;
}

namespace {

int zeta_exponent(const MatZ &block, int m) {
  MatZ z = zeta_block(m), p = MatZ::identity(2);
  for (int a = 0; a < m; ++a) {
    if (p == block)
      return a;
    p = p * z;
  }
  return -1;
}

std::filesystem::path golden_path(const std::filesystem::path &dir, const std::string &name) {
  return dir / "golden" / (name + ".tsv");
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::string> golden_or_empty(const std::filesystem::path &path, std::size_t i) {
  if (!std::filesystem::exists(path))
    return {};
  auto rows = read_tsv(path);
  return i < rows.size() ? rows[i] : std::vector<std::string>{};
}

TableResult sporadic_table(const std::string &name, const TableOptions &opt) {
  TableResult t;
  t.name = name;
  t.golden = golden_path(opt.data_dir, name);
  auto rows = read_tsv(t.golden, &t.header);
  for (const auto &cells : rows) {
    TableRow r;
    if (cells.size() < 8)
      throw ValidationError(t.golden.string() + ": expected 8 columns");
    r.expected.assign(cells.begin(), cells.begin() + 7);
    r.computed.assign(cells.begin(), cells.begin() + 5);
    const std::string &tier = cells[7];
    if (tier != "default" && !opt.large) {
      r.skipped = true;
      r.computed.insert(r.computed.end(), {"-", "-"});
      t.rows.push_back(std::move(r));
      continue;
    }
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto rep = sporadic_row_report(opt.data_dir, {cells[2], cells[3], cells[4]});
      r.computed.push_back(std::to_string(rep.s0_order));
      r.computed.push_back(std::to_string(rep.p0_order));
    } catch (const std::exception &e) {
      r.error = e.what();
      r.computed.insert(r.computed.end(), {"error", "error"});
    }
    r.seconds = since(t0);
    if (opt.progress)
      *opt.progress << name << " #" << cells[0] << " " << cells[1] << ": " << r.computed[5] << " " << r.computed[6]
                    << " (" << std::fixed << std::setprecision(1) << r.seconds << "s)\n";
    t.rows.push_back(std::move(r));
  }
  return t;
}

std::string expected_list(const std::vector<AffineElement> &els, int m) {
  std::string s;
  for (std::size_t i = 0; i < els.size(); ++i)
    s += (i ? " " : "") + affine_monomial_str(els[i], m);
  return s;
}

// Elements of the stabilizer generated by the expected elements, compared by
// linear part (the translation is determined by it on a stabilizer).
std::string generated_flag(const std::vector<AffineElement> &stab, const std::vector<AffineElement> &expected,
                           std::size_t dim) {
  for (const auto &e : expected) {
    bool found = false;
    for (const auto &s : stab)
      if (s.linear == e.linear && s.translation == e.translation)
        found = true;
    if (!found)
      return "missing";
  }
  return generated_order(expected, dim) == stab.size() ? "yes" : "proper";
}

TableResult prop_table(const std::string &name, const TableOptions &opt) {
  TableResult t;
  t.name = name;
  t.golden = golden_path(opt.data_dir, name);
  std::vector<std::array<int, 3>> params;
  if (name == "prop33") {
    t.header = {"m", "p", "n", "base", "tail_rank", "S0", "P0", "first_codim", "generated", "generators"};
    for (auto [m, p] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {4, 2}, {4, 4}, {6, 2}, {6, 3}, {6, 6}})
      params.push_back({m, p, 3});
  } else {
    t.header = {"m", "p", "n", "point", "S0", "P0", "first_reflection", "generated", "generators"};
    params = {{2, 1, 4}, {2, 2, 4}, {2, 1, 3}, {3, 1, 3}, {3, 3, 3}, {4, 1, 3}, {4, 2, 3}, {4, 4, 3}};
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    auto [m, p, n] = params[i];
    TableRow r;
    r.expected = golden_or_empty(t.golden, i);
    auto t0 = std::chrono::steady_clock::now();
    try {
      WitnessCase w = witness_points(m, p, n, name);
      r.computed = {std::to_string(m), std::to_string(p), std::to_string(n), w.base.str()};
      const std::size_t dim = w.scenario.dim();
      if (name == "prop33") {
        auto stab = stratum_generic_stabilizer(w.scenario, w.base, w.direction);
        std::vector<AffineElement> refl;
        for (const auto &g : stab)
          if (g.linear.fixed_codim() == 2)
            refl.push_back(g);
        r.computed.push_back(std::to_string(w.direction.rank()));
        r.computed.push_back(std::to_string(stab.size()));
        r.computed.push_back(std::to_string(generated_order(refl, dim)));
        r.computed.push_back(std::to_string(w.expected.front().linear.fixed_codim()));
        r.computed.push_back(generated_flag(stab, w.expected, dim));
      } else {
        auto rep = point_stabilizer_report(w.scenario, w.base);
        r.computed.push_back(std::to_string(rep.s0_order));
        r.computed.push_back(std::to_string(rep.p0_order));
        r.computed.push_back(is_affine_pseudoreflection(w.expected.front()) ? "yes" : "no");
        r.computed.push_back(generated_flag(rep.elements, w.expected, dim));
      }
      r.computed.push_back(expected_list(w.expected, m));
    } catch (const std::exception &e) {
      r.error = e.what();
    }
    r.seconds = since(t0);
    if (r.expected.empty())
      r.error = r.error.empty() ? "no golden row" : r.error;
    t.rows.push_back(std::move(r));
  }
  return t;
}

}  // namespace

std::string monomial_str(const LinearElement &g, int m) {
  const std::size_t n = g.dim() / 2;
  std::vector<int> exps(n, -1), perm(n, -1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      MatZ b(2, 2);
      bool nz = false;
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t c = 0; c < 2; ++c) {
          b(a, c) = g(2 * i + a, 2 * j + c);
          nz = nz || g(2 * i + a, 2 * j + c) != 0;
        }
      if (nz) {
        if (perm[j] != -1)
          return "non-monomial";
        perm[j] = static_cast<int>(i);
        exps[i] = zeta_exponent(b, m);
        if (exps[i] < 0)
          return "non-monomial";
      }
    }
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < n; ++i) {
    os << (i ? "," : "");
    int a = exps[i];
    if (a == 0)
      os << '1';
    else if (m == 2)
      os << "-1";
    else if (a == 1)
      os << 'z';
    else
      os << "z^" << a;
  }
  os << ')';
  bool id = true;
  for (std::size_t j = 0; j < n; ++j)
    id = id && perm[j] == static_cast<int>(j);
  if (!id) {
    os << '[';
    for (std::size_t j = 0; j < n; ++j)
      os << (j ? "," : "") << perm[j] + 1;
    os << ']';
  }
  return os.str();
}

std::string affine_monomial_str(const AffineElement &a, int m) {
  if (a.translation.is_zero())
    return monomial_str(a.linear, m);
  return "(" + a.translation.str() + ";" + monomial_str(a.linear, m) + ")";
}

StabilizerReport sporadic_row_report(const std::filesystem::path &data_dir, const SporadicRow &row) {
  Scenario s = load_sporadic(data_dir / "sporadic" / (row.data + ".json"));
  if (row.lattice_spec != "root")
    s = rebase(s, lattice_from_spec(s, row.lattice_spec), s.label + "[" + row.lattice_spec + "]");
  return point_stabilizer_report(s, parse_point(row.point));
}

TableResult run_table(const std::string &which, const TableOptions &opt) {
  if (which == "paper1" || which == "paper2")
    return sporadic_table(which, opt);
  if (which == "prop33" || which == "prop36")
    return prop_table(which, opt);
  throw ValidationError("unknown table '" + which + "'");
}

void print_table(const TableResult &t, std::ostream &os) {
  os << "#";
  for (std::size_t i = 0; i < t.header.size(); ++i)
    os << (i ? "\t" : "") << t.header[i];
  os << "\tstatus\n";
  for (const auto &r : t.rows) {
    for (std::size_t i = 0; i < r.computed.size(); ++i)
      os << (i ? "\t" : "") << r.computed[i];
    if (r.skipped)
      os << "\tskipped";
    else if (!r.error.empty())
      os << "\tERROR " << r.error;
    else if (r.ok())
      os << "\tok";
    else {
      os << "\tDIFF expected";
      for (const auto &c : r.expected)
        os << " " << c;
    }
    os << "\n";
  }
}

void write_golden(const TableResult &t, const std::filesystem::path &data_dir) {
  if (t.name == "paper1" || t.name == "paper2")
    throw ValidationError("paper1/paper2 golden files are hand-entered; refusing to overwrite " + t.golden.string());
  std::ofstream out(golden_path(data_dir, t.name));
  out << "#";
  for (std::size_t i = 0; i < t.header.size(); ++i)
    out << (i ? "\t" : "") << t.header[i];
  out << "\n";
  for (const auto &r : t.rows) {
    for (std::size_t i = 0; i < r.computed.size(); ++i)
      out << (i ? "\t" : "") << r.computed[i];
    out << "\n";
  }
}

}  // namespace avq
