#include "majorana/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "majorana/errors.hpp"

namespace majorana::io {

namespace {

void dump_into(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ", ";
        first = false;
        out += Json(key).dump();
        out += ": ";
        dump_into(value, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        dump_into(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      out += format_number(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

void require_keys(const Json& j, const std::set<std::string>& keys, const std::string& what) {
  if (!j.is_object()) throw SchemaError(what + ": expected an object");
  for (const auto& k : keys) {
    if (!j.contains(k)) throw SchemaError(what + ": missing key \"" + k + "\"");
  }
  for (const auto& [k, v] : j.items()) {
    if (!keys.count(k)) throw SchemaError(what + ": unexpected key \"" + k + "\"");
  }
}

int parse_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
  return j.get<int>();
}

double parse_double(const Json& j, const std::string& where) {
  if (!j.is_number()) throw SchemaError(where + ": expected a number");
  return j.get<double>();
}

const Json& require_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array");
  return j;
}

bool has_keys(const Json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object()) return false;
  for (const char* k : keys) {
    if (!j.contains(k)) return false;
  }
  return true;
}

}  // namespace

std::string format_number(double x) {
  if (!std::isfinite(x)) throw SchemaError("cannot serialize a non-finite number");
  if (x == 0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dump(const Json& j) {
  std::string out;
  dump_into(j, out);
  return out;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Json complex_pair(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

std::complex<double> parse_complex(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw SchemaError(where + ": expected [re, im]");
  const double re = parse_double(j[0], where), im = parse_double(j[1], where);
  if (!std::isfinite(re) || !std::isfinite(im)) throw SchemaError(where + ": non-finite value");
  return {re, im};
}

Json state_document(const SymmetricStated& s) {
  Json j = Json::object();
  j["n"] = s.n();
  j["dicke"] = Json::array();
  for (int k = 0; k <= s.n(); ++k) j["dicke"].push_back(complex_pair(s[k]));
  return j;
}

SymmetricStated parse_state(const Json& j) {
  require_keys(j, {"n", "dicke"}, "state document");
  const int n = parse_int(j["n"], "state.n");
  if (n < 1) throw SchemaError("state.n: must be at least 1");
  const auto& dicke = require_array(j["dicke"], "state.dicke");
  if (static_cast<int>(dicke.size()) != n + 1) throw SchemaError("state.dicke: expected n+1 amplitudes");
  Amplitudes<double> a(n + 1);
  for (int k = 0; k <= n; ++k) a(k) = parse_complex(dicke[k], "state.dicke[" + std::to_string(k) + "]");
  if (a.cwiseAbs().maxCoeff() == 0) throw SchemaError("state.dicke: all amplitudes are zero");
  return SymmetricStated(a);
}

Json roots_document(const RootMultisetd& r) {
  Json j = Json::object();
  j["n"] = r.n();
  j["roots"] = Json::array();
  for (const auto& z : r.finite_roots()) j["roots"].push_back(complex_pair(z));
  j["at_infinity"] = r.infinity_count();
  return j;
}

RootMultisetd parse_roots(const Json& j) {
  require_keys(j, {"n", "roots", "at_infinity"}, "roots document");
  const int n = parse_int(j["n"], "roots.n");
  const int inf = parse_int(j["at_infinity"], "roots.at_infinity");
  const auto& roots = require_array(j["roots"], "roots.roots");
  if (n < 1) throw SchemaError("roots.n: must be at least 1");
  if (inf < 0 || static_cast<int>(roots.size()) + inf != n) {
    throw SchemaError("roots: finite roots plus at_infinity must equal n");
  }
  std::vector<std::complex<double>> finite;
  for (size_t i = 0; i < roots.size(); ++i) {
    finite.push_back(parse_complex(roots[i], "roots.roots[" + std::to_string(i) + "]"));
  }
  return RootMultisetd(n, std::move(finite), inf);
}

Json matrix_document(const Eigen::Matrix2cd& m) {
  Json j = Json::object();
  j["matrix"] = Json::array({complex_pair(m(0, 0)), complex_pair(m(0, 1)), complex_pair(m(1, 0)), complex_pair(m(1, 1))});
  return j;
}

Eigen::Matrix2cd parse_matrix(const Json& j) {
  require_keys(j, {"matrix"}, "matrix document");
  const auto& entries = require_array(j["matrix"], "matrix.matrix");
  if (entries.size() != 4) throw SchemaError("matrix.matrix: expected four entries");
  Eigen::Matrix2cd m;
  for (int i = 0; i < 4; ++i) m(i / 2, i % 2) = parse_complex(entries[i], "matrix.matrix[" + std::to_string(i) + "]");
  return m;
}

Json canonical_document(const CanonicalForm& f) {
  Json j = Json::object();
  j["n"] = f.n;
  j["partition"] = f.partition;
  j["params"] = Json::array();
  for (double p : f.params) j["params"].push_back(p);
  j["state"] = state_document(f.state);
  return j;
}

CanonicalForm parse_canonical(const Json& j) {
  require_keys(j, {"n", "partition", "params", "state"}, "canonical document");
  CanonicalForm f;
  f.n = parse_int(j["n"], "canonical.n");
  for (const auto& p : require_array(j["partition"], "canonical.partition")) {
    const int m = parse_int(p, "canonical.partition");
    if (m < 1) throw SchemaError("canonical.partition: parts must be positive");
    f.partition.push_back(m);
  }
  for (const auto& p : require_array(j["params"], "canonical.params")) f.params.push_back(parse_double(p, "canonical.params"));
  if (f.params.size() != 0 && f.params.size() != 2 && f.params.size() != 4) {
    throw SchemaError("canonical.params: expected 0, 2 or 4 values");
  }
  f.state = parse_state(j["state"]);
  if (f.state.n() != f.n) throw SchemaError("canonical: state n differs from n");
  int total = 0;
  for (int m : f.partition) total += m;
  if (total != f.n) throw SchemaError("canonical.partition: parts must sum to n");
  f.unique = f.params.size() != 4;
  return f;
}

SymmetricStated parse_any_state(const Json& j) {
  if (has_keys(j, {"partition", "state"})) return parse_canonical(j).state;
  if (has_keys(j, {"roots"})) return state_from_roots(parse_roots(j));
  if (has_keys(j, {"dicke"})) return parse_state(j);
  throw SchemaError("expected a state, roots or canonical document");
}

}  // namespace majorana::io
