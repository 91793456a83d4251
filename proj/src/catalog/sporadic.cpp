#include "avq/catalog/sporadic.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace avq {

namespace {

using json = nlohmann::json;

Cyclotomic parse_cyc(unsigned k, const json &j, const std::string &where) {
  if (!j.is_array())
    throw ValidationError(where + ": expected a coefficient vector");
  VecQ c;
  for (const auto &x : j)
    c.push_back(parse_rat(x.get<std::string>()));
  return Cyclotomic(k, std::move(c));
}

CycVector parse_vector(unsigned k, std::size_t n, const json &j, const std::string &where) {
  if (!j.is_array() || j.size() != n)
    throw ValidationError(where + ": expected " + std::to_string(n) + " entries");
  CycVector v;
  for (const auto &x : j)
    v.push_back(parse_cyc(k, x, where));
  return v;
}

MatQ realified_columns(const std::vector<CycVector> &vs) {
  const std::size_t rows = realify(vs.front()).size();
  MatQ m(rows, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j) {
    VecQ r = realify(vs[j]);
    for (std::size_t i = 0; i < rows; ++i)
      m(i, j) = r[i];
  }
  return m;
}

// Matrix of x -> f(x) on the lattice basis; throws unless integral.
template <class F>
MatQ on_lattice(const SporadicData &d, const MatQ &basis, F f, const std::string &what) {
  std::vector<CycVector> images;
  for (const auto &b : d.lattice)
    images.push_back(f(b));
  auto x = solve(basis, realified_columns(images));
  if (!x)
    throw ValidationError("st" + std::to_string(d.st_number) + ": " + what + " leaves the span of the lattice");
  return *x;
}

}  // namespace

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SporadicData load_sporadic_data(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot open data file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception &e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  SporadicData d;
  d.source = path.string();
  try {
    if (j.contains("checksum")) {
      d.checksum = j["checksum"].get<std::string>();
      json body = j;
      body.erase("checksum");
      if (fnv1a_hex(body.dump()) != d.checksum)
        throw ValidationError(path.string() + ": checksum mismatch");
    }
    d.st_number = j.at("st_number").get<int>();
    d.n = j.at("n").get<std::size_t>();
    d.conductor = j.at("conductor").get<unsigned>();
    d.order = j.value("order", std::uint64_t{0});
    const std::string tag = "st" + std::to_string(d.st_number);
    for (const auto &g : j.at("generators")) {
      if (g.size() != d.n)
        throw ValidationError(tag + ": generator is not " + std::to_string(d.n) + "x" + std::to_string(d.n));
      CycMatrix m;
      for (const auto &row : g)
        m.push_back(parse_vector(d.conductor, d.n, row, tag + " generator"));
      d.generators.push_back(std::move(m));
    }
    for (const auto &v : j.at("lattice"))
      d.lattice.push_back(parse_vector(d.conductor, d.n, v, tag + " lattice"));
    if (d.lattice.size() != 2 * d.n)
      throw ValidationError(tag + ": lattice needs " + std::to_string(2 * d.n) + " vectors");
    d.complex_unit = parse_cyc(d.conductor, j.at("complex_unit"), tag + " complex_unit");
    if (j.contains("extra_vectors"))
      for (const auto &[name, v] : j["extra_vectors"].items()) {
        VecQ c;
        for (const auto &x : v)
          c.push_back(parse_rat(x.get<std::string>()));
        if (c.size() != 2 * d.n)
          throw ValidationError(tag + ": extra vector " + name + " has wrong length");
        d.extra_vectors[name] = std::move(c);
      }
    for (const auto &i : j.at("designated_reflections")) {
      auto idx = i.get<std::size_t>();
      if (idx >= d.generators.size())
        throw ValidationError(tag + ": designated reflection index out of range");
      d.designated_reflections.push_back(idx);
    }
  } catch (const json::exception &e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  return d;
}

Scenario sporadic_scenario(const SporadicData &d) {
  const std::string tag = "st" + std::to_string(d.st_number);
  MatQ basis = realified_columns(d.lattice);
  if (rank(basis) != 2 * d.n)
    throw ValidationError(tag + ": lattice vectors are dependent over Q");

  std::vector<LinearElement> gens;
  for (std::size_t i = 0; i < d.generators.size(); ++i) {
    MatQ m = on_lattice(d, basis, [&](const CycVector &b) { return apply(d.generators[i], b); },
                        "generator " + std::to_string(i));
    if (!is_integral(m))
      throw ValidationError(tag + ": generator " + std::to_string(i) + " does not preserve the lattice");
    MatZ mz = to_integer(m);
    if (abs(determinant(mz)) != 1)
      throw ValidationError(tag + ": generator " + std::to_string(i) + " is not unimodular");
    gens.push_back(LinearElement::from_matrix(mz));
  }

  Cyclotomic u2 = d.complex_unit * d.complex_unit;
  for (std::size_t i = 1; i < u2.degree(); ++i)
    if (u2.coefficients()[i] != 0)
      throw ValidationError(tag + ": complex_unit squared is not rational");
  Rat c = -u2.coefficients()[0];
  if (c <= 0 || !is_integer(c))
    throw ValidationError(tag + ": complex_unit squared must be a negative integer");
  MatQ k = on_lattice(
      d, basis,
      [&](const CycVector &b) {
        CycVector out;
        for (const auto &x : b)
          out.push_back(d.complex_unit * x);
        return out;
      },
      "complex_unit");

  Scenario s;
  s.label = tag;
  s.st_number = d.st_number;
  s.n = static_cast<int>(d.n);
  s.torus = ComplexTorus(k, c.get_num(), 0);
  s.group = FiniteMatrixGroup(2 * d.n, std::move(gens), "ST" + std::to_string(d.st_number));
  if (d.order)
    s.group.set_declared_order(d.order);
  s.designated_reflections = d.designated_reflections;
  s.named_vectors = d.extra_vectors;
  s.basis_note = "lattice basis e_1..e_n, tau_i e_i of " + d.source;
  return s;
}

Scenario load_sporadic(const std::filesystem::path &path) {
  Scenario s = sporadic_scenario(load_sporadic_data(path));
  s.validate();
  return s;
}

std::filesystem::path default_data_dir() {
  if (const char *env = std::getenv("AVQ_DATA_DIR"); env && *env)
    return env;
  return AVQ_DATA_DIR;
}

std::filesystem::path sporadic_path(const std::filesystem::path &data_dir, int st_number) {
  char name[32];
  std::snprintf(name, sizeof name, "st%02d.json", st_number);
  return data_dir / "sporadic" / name;
}

}  // namespace avq
