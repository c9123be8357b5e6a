#include "conelab/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "conelab/errors.hpp"

namespace conelab::io {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, "missing \"" + key + "\"");
  return *it;
}

std::int64_t integer_from(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t count_from(const Json& j, const std::string& where) {
  const std::int64_t v = integer_from(j, where);
  if (v < 0) fail(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

std::vector<Rational> vector_from(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Rational> vector_from(const Json& j, std::size_t expected, const std::string& where) {
  auto out = vector_from(j, where);
  if (out.size() != expected) {
    fail(where, "expected " + std::to_string(expected) + " entries, got " + std::to_string(out.size()));
  }
  return out;
}

Json vector_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

std::string pair_key(std::size_t k, std::size_t j) {
  return k < 10 ? "d" + std::to_string(k) + std::to_string(j) : "d" + std::to_string(k) + "_" + std::to_string(j);
}

/// 1-based (k, j) of a pair entry, checked against the rank.
std::pair<std::size_t, std::size_t> pair_from(const Json& entry, std::size_t rank, const std::string& where) {
  const std::size_t k = count_from(field(entry, "k", where), where + ".k");
  const std::size_t j = count_from(field(entry, "j", where), where + ".j");
  if (j < 1 || j >= k || k > rank) {
    fail(where, "pair (" + std::to_string(k) + ", " + std::to_string(j) + ") outside 1 <= j < k <= " +
                    std::to_string(rank));
  }
  return {k - 1, j - 1};
}

Json pairs_json(const std::vector<std::vector<Rational>>& coords, std::size_t rank) {
  Json out = Json::array();
  for (std::size_t k = 1; k < rank; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      out.push_back({{"k", k + 1}, {"j", j + 1}, {"coords", vector_json(coords[pair_index(k, j)])}});
    }
  }
  return out;
}

std::vector<std::vector<Rational>> pairs_from(const Json& j, const Realization& v, const std::string& where) {
  std::vector<std::vector<Rational>> out(pair_count(v.rank()));
  for (std::size_t k = 1; k < v.rank(); ++k) {
    for (std::size_t i = 0; i < k; ++i) out[pair_index(k, i)].assign(v.dim(k, i), Rational(0));
  }
  if (!j.is_array()) fail(where, "expected an array");
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string at = where + "[" + std::to_string(e) + "]";
    const auto [k, i] = pair_from(j[e], v.rank(), at);
    out[pair_index(k, i)] = vector_from(field(j[e], "coords", at), v.dim(k, i), at + ".coords");
  }
  return out;
}

Json condition_json(const ConditionResult& c) {
  Json out{{"passed", c.passed}, {"checked", c.checked}};
  if (c.first) out["counterexample"] = c.first->describe();
  return out;
}

}  // namespace

Json to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  if (!j.is_string()) fail(where, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.dense()) rows.push_back(vector_json(row));
  return rows;
}

Json to_sparse_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& e : m.row(i)) entries.push_back({i + 1, e.index + 1, to_json(e.value)});
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  if (j.is_object()) {
    const std::size_t rows = count_from(field(j, "rows", where), where + ".rows");
    const std::size_t cols = count_from(field(j, "cols", where), where + ".cols");
    const Json& entries = field(j, "entries", where);
    if (!entries.is_array()) fail(where + ".entries", "expected an array");
    Matrix m(rows, cols);
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const std::string at = where + ".entries[" + std::to_string(e) + "]";
      const Json& entry = entries[e];
      if (!entry.is_array() || entry.size() != 3) fail(at, "expected [i, j, value]");
      const std::size_t i = count_from(entry[0], at);
      const std::size_t k = count_from(entry[1], at);
      if (i < 1 || i > rows || k < 1 || k > cols) fail(at, "entry index out of range");
      m.set(i - 1, k - 1, rational_from_json(entry[2], at));
    }
    return m;
  }
  if (!j.is_array()) fail(where, "expected a matrix");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(vector_from(j[i], where + "[" + std::to_string(i) + "]"));
    if (rows.back().size() != rows.front().size()) fail(where, "rows of different lengths");
  }
  if (rows.empty()) fail(where, "empty matrix");
  return Matrix::from_rows(rows);
}

Json to_json(const Realization& v) {
  Json spaces = Json::array();
  for (std::size_t k = 1; k < v.rank(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Json basis = Json::array();
      for (const auto& e : v.basis(k, j)) basis.push_back(to_sparse_json(e));
      spaces.push_back({{"k", k + 1}, {"j", j + 1}, {"basis", basis}});
    }
  }
  return {{"partition", v.partition().sizes()}, {"spaces", spaces}};
}

Realization realization_from_json(const Json& j) {
  const Json& partition = field(j, "partition", "realization");
  if (!partition.is_array()) fail("realization.partition", "expected an array");
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    sizes.push_back(count_from(partition[i], "realization.partition[" + std::to_string(i) + "]"));
  }
  BlockPartition p(std::move(sizes));
  std::vector<std::vector<Matrix>> bases(pair_count(p.rank()));
  const Json& spaces = field(j, "spaces", "realization");
  if (!spaces.is_array()) fail("realization.spaces", "expected an array");
  for (std::size_t e = 0; e < spaces.size(); ++e) {
    const std::string at = "realization.spaces[" + std::to_string(e) + "]";
    const auto [k, i] = pair_from(spaces[e], p.rank(), at);
    const Json& basis = field(spaces[e], "basis", at);
    if (!basis.is_array()) fail(at + ".basis", "expected an array");
    auto& target = bases[pair_index(k, i)];
    target.clear();
    for (std::size_t b = 0; b < basis.size(); ++b) {
      target.push_back(matrix_from_json(basis[b], at + ".basis[" + std::to_string(b) + "]"));
    }
  }
  return Realization(std::move(p), std::move(bases));
}

Json to_json(const ConeElement& x) {
  return {{"diag", vector_json(x.diag)}, {"off", pairs_json(x.off, x.diag.size())}};
}

ConeElement cone_element_from_json(const Json& j, const Realization& v) {
  ConeElement x;
  x.diag = vector_from(field(j, "diag", "point"), v.rank(), "point.diag");
  x.off = j.contains("off") ? pairs_from(j["off"], v, "point.off") : v.zero_element().off;
  return x;
}

Json to_json(const GroupElement& h) {
  return {{"diag", vector_json(h.diag)}, {"lower", pairs_json(h.lower, h.diag.size())}};
}

GroupElement group_element_from_json(const Json& j, const Realization& v) {
  GroupElement h;
  h.diag = vector_from(field(j, "diag", "group"), v.rank(), "group.diag");
  for (std::size_t i = 0; i < h.diag.size(); ++i) {
    if (h.diag[i] == 0) fail("group.diag[" + std::to_string(i) + "]", "diagonal entries must be nonzero");
  }
  h.lower = j.contains("lower") ? pairs_from(j["lower"], v, "group.lower") : v.identity_group().lower;
  return h;
}

Json to_json(const DimTable& d) {
  Json dims = Json::object();
  for (std::size_t k = 1; k < d.rank(); ++k) {
    for (std::size_t j = 0; j < k; ++j) dims[pair_key(k + 1, j + 1)] = d.at(k, j);
  }
  return {{"r", d.rank()}, {"dims", dims}};
}

DimTable dim_table_from_json(const Json& j) {
  const std::size_t rank = count_from(field(j, "r", "dims"), "dims.r");
  if (rank < 1) fail("dims.r", "rank must be at least 1");
  DimTable table(rank);
  std::vector<bool> seen(pair_count(rank), false);
  const Json& dims = j.contains("dims") ? j["dims"] : Json::object();
  if (!dims.is_object()) fail("dims.dims", "expected an object");
  for (const auto& [key, value] : dims.items()) {
    const std::string at = "dims.dims." + key;
    std::size_t k = 0, i = 0;
    const auto underscore = key.find('_');
    try {
      if (key.size() < 3 || key[0] != 'd') throw std::invalid_argument(key);
      std::size_t used = 0;
      if (underscore != std::string::npos) {
        k = std::stoul(key.substr(1, underscore - 1), &used);
        if (used != underscore - 1) throw std::invalid_argument(key);
        i = std::stoul(key.substr(underscore + 1), &used);
        if (used != key.size() - underscore - 1) throw std::invalid_argument(key);
      } else {
        if (key.size() != 3 || !std::isdigit(key[1]) || !std::isdigit(key[2])) throw std::invalid_argument(key);
        k = static_cast<std::size_t>(key[1] - '0');
        i = static_cast<std::size_t>(key[2] - '0');
      }
    } catch (const std::logic_error&) {
      fail(at, "keys look like d21 or d10_3");
    }
    if (i < 1 || i >= k || k > rank) fail(at, "pair outside 1 <= j < k <= r");
    const std::int64_t d = integer_from(value, at);
    if (d < 0) fail(at, "dimension must be nonnegative");
    table.set(k - 1, i - 1, d);
    seen[pair_index(k - 1, i - 1)] = true;
  }
  for (std::size_t k = 1; k < rank; ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!seen[pair_index(k, i)]) fail("dims.dims", "missing \"" + pair_key(k + 1, i + 1) + "\"");
    }
  }
  return table;
}

Json to_json(const SigmaMatrix& sigma) {
  return {{"sigma", sigma.entries},
          {"degrees", degrees_from_sigma(sigma)},
          {"trace", {{"l", sigma.trace.l}, {"epsilon", sigma.trace.epsilon}}}};
}

Json to_json(const VerificationReport& report) {
  return {{"passed", report.passed()},
          {"V1", condition_json(report.v1)},
          {"V2", condition_json(report.v2)},
          {"V3", condition_json(report.v3)}};
}

Json to_json(const LdlResult& ldl, bool approx) {
  Json out{{"member", ldl.is_member},
           {"in_closure", ldl.in_closure()},
           {"status", ldl.status == LdlStatus::complete ? "complete" : "breakdown"},
           {"pivots", vector_json(ldl.pivots)}};
  if (approx) {
    Json column = Json::array();
    for (const auto& d : ldl.pivots) column.push_back(to_decimal(d));
    out["pivots_approx"] = column;
  }
  return out;
}

Json to_json(const rank3::CompositionFamily& f) {
  Json a = Json::array();
  for (const auto& m : f.matrices()) a.push_back(to_json(m));
  return {{"r", f.r()}, {"s", f.s()}, {"n", f.n()}, {"A", a}};
}

rank3::CompositionFamily family_from_json(const Json& j) {
  const std::int64_t r = integer_from(field(j, "r", "family"), "family.r");
  const std::int64_t s = integer_from(field(j, "s", "family"), "family.s");
  const std::int64_t n = integer_from(field(j, "n", "family"), "family.n");
  const Json& a = field(j, "A", "family");
  if (!a.is_array()) fail("family.A", "expected an array of matrices");
  std::vector<Matrix> matrices;
  for (std::size_t i = 0; i < a.size(); ++i) {
    matrices.push_back(matrix_from_json(a[i], "family.A[" + std::to_string(i) + "]"));
  }
  try {
    return rank3::CompositionFamily(r, s, n, std::move(matrices));
  } catch (const StructuralError& e) {
    fail("family", e.what());
  }
}

Json to_json(const rank3::Rank3Element& x) {
  return {{"x11", to_json(x.x11)}, {"x22", to_json(x.x22)}, {"x33", to_json(x.x33)},
          {"x", vector_json(x.x)},   {"y", vector_json(x.y)},     {"z", vector_json(x.z)}};
}

rank3::Rank3Element rank3_element_from_json(const Json& j, const rank3::CompositionFamily& f) {
  rank3::Rank3Element x;
  x.x11 = rational_from_json(field(j, "x11", "point"), "point.x11");
  x.x22 = rational_from_json(field(j, "x22", "point"), "point.x22");
  x.x33 = rational_from_json(field(j, "x33", "point"), "point.x33");
  x.x = vector_from(field(j, "x", "point"), static_cast<std::size_t>(f.r()), "point.x");
  x.y = vector_from(field(j, "y", "point"), static_cast<std::size_t>(f.s()), "point.y");
  x.z = vector_from(field(j, "z", "point"), static_cast<std::size_t>(f.n()), "point.z");
  return x;
}

Json to_json(const rank3::DualRank3Element& xi) {
  return {{"xi11", to_json(xi.xi11)}, {"xi22", to_json(xi.xi22)}, {"xi33", to_json(xi.xi33)},
          {"xi", vector_json(xi.xi)},   {"eta", vector_json(xi.eta)},   {"zeta", vector_json(xi.zeta)}};
}

rank3::DualRank3Element dual_rank3_element_from_json(const Json& j, const rank3::CompositionFamily& f) {
  rank3::DualRank3Element xi;
  xi.xi11 = rational_from_json(field(j, "xi11", "point"), "point.xi11");
  xi.xi22 = rational_from_json(field(j, "xi22", "point"), "point.xi22");
  xi.xi33 = rational_from_json(field(j, "xi33", "point"), "point.xi33");
  xi.xi = vector_from(field(j, "xi", "point"), static_cast<std::size_t>(f.r()), "point.xi");
  xi.eta = vector_from(field(j, "eta", "point"), static_cast<std::size_t>(f.s()), "point.eta");
  xi.zeta = vector_from(field(j, "zeta", "point"), static_cast<std::size_t>(f.n()), "point.zeta");
  return xi;
}

Json to_json(const rank3::DegreeClassification& c) {
  Json out{{"case", c.case_number},
           {"swapped", c.swapped},
           {"normalized", c.normalized},
           {"primal", c.primal},
           {"dual", c.dual}};
  if (!c.condition.empty()) out["condition"] = c.condition;
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument(path.string() + ": cannot write");
  out << dump(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace conelab::io
