#include "thetalgr/json_io.hpp"

#include <string>

#include "thetalgr/error.hpp"

namespace thetalgr {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw_parse("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw_parse(std::string("missing field \"") + key + "\"");
  return *it;
}

long integer_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw_parse(std::string("field \"") + key + "\" must be an integer");
  return v.get<long>();
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw_parse(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw_parse("expected a rational string or integer");
}

Json to_json(const Matrix& m) {
  Json data = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const Json& j) {
  const long rows = integer_field(j, "rows");
  const long cols = integer_field(j, "cols");
  if (rows < 0 || cols < 0) throw_parse("matrix dimensions must be nonnegative");
  const Json& data = field(j, "data");
  if (!data.is_array() || data.size() != static_cast<std::size_t>(rows)) {
    throw_parse("matrix data must be an array of " + std::to_string(rows) + " rows");
  }
  Matrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Json& row = data[i];
    if (!row.is_array() || row.size() != m.cols()) {
      throw_parse("matrix row " + std::to_string(i) + " must have " + std::to_string(cols) +
                  " entries");
    }
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = rational_from_json(row[c]);
  }
  return m;
}

Json to_json(const LagrangianPoint& p) { return {{"n", p.rank()}, {"rep", to_json(p.rep())}}; }

LagrangianPoint point_from_json(const Json& j) {
  const long n = integer_field(j, "n");
  Matrix rep = matrix_from_json(field(j, "rep"));
  if (n < 1 || rep.rows() != 2 * static_cast<std::size_t>(n) ||
      rep.cols() != static_cast<std::size_t>(n)) {
    throw_parse("point representative must be 2n x n with n = " + std::to_string(n));
  }
  return LagrangianPoint(std::move(rep));
}

Json to_json(const Subset& s) { return s.elements(); }

Subset subset_from_json(const Json& j) {
  if (!j.is_array()) throw_parse("expected an integer array");
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw_parse("expected an integer array");
    v.push_back(x.get<int>());
  }
  try {
    return Subset(std::move(v));
  } catch (const Error& e) {
    throw_parse(e.what());
  }
}

Json to_json(const StratumSignature& s) {
  return {{"k", s.k}, {"l", s.l}, {"K_plus", to_json(s.k_plus)}, {"K_minus", to_json(s.k_minus)}};
}

Json to_json(const PluckerVector& v) {
  Json out = Json::object();
  for (const auto& [key, x] : v.coords) out[key.to_string()] = to_string(x);
  return out;
}

Json to_json(const UStarParams& p) {
  Json a = Json::object();
  for (const auto& [key, x] : p.values()) {
    a[std::to_string(key.first) + "," + std::to_string(key.second)] = to_string(x);
  }
  return {{"n", p.rank()}, {"a", std::move(a)}};
}

UStarParams ustar_from_json(const Json& j) {
  const long n = integer_field(j, "n");
  if (n < 1) throw_parse("n must be at least 1");
  const Json& a = field(j, "a");
  if (!a.is_object()) throw_parse("field \"a\" must be an object");
  UStarParams p(static_cast<int>(n));
  for (const auto& [key, value] : a.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw_parse("parameter key must be \"p,q\": " + key);
    try {
      std::size_t used = 0;
      const int pp = std::stoi(key.substr(0, comma), &used);
      if (used != comma) throw_parse("bad parameter key " + key);
      const std::string rest = key.substr(comma + 1);
      const int qq = std::stoi(rest, &used);
      if (used != rest.size()) throw_parse("bad parameter key " + key);
      p.set(pp, qq, rational_from_json(value));
    } catch (const std::logic_error&) {
      throw_parse("bad parameter key " + key);
    }
  }
  return p;
}

Json to_json(const SignedPermutation& w) { return w.image(); }

SignedPermutation perm_from_json(const Json& j) {
  if (!j.is_array()) throw_parse("expected a signed integer array");
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw_parse("expected a signed integer array");
    v.push_back(x.get<int>());
  }
  return SignedPermutation(std::move(v));
}

Json to_json(const LdlFactorization& f) {
  Json d = Json::array();
  for (const auto& x : f.diag) d.push_back(to_string(x));
  return {{"L", to_json(f.unit_lower)}, {"D", std::move(d)}, {"support", to_json(f.support)}};
}

}  // namespace thetalgr
