// io.cpp -- JSON/CSV serialization.  Emission is hand-rolled through one
// %.17g formatter so identical inputs give byte-identical files; parsing
// uses nlohmann::json and reports malformed input as std::invalid_argument.

#include "gaborforge/io.hpp"

#include "internal.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gf {

using detail::require;
using njson = nlohmann::json;

std::string format_double(double x) {
  require(std::isfinite(x), "non-finite value cannot be serialized");
  if (x == 0.0) return "0";  // collapse the sign of zero for canonical output
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

void append_complex(std::string& out, const cplx& v) {
  out += '[';
  out += format_double(v.real());
  out += ',';
  out += format_double(v.imag());
  out += ']';
}

void append_complex_array(std::string& out, const cvec& values) {
  out += '[';
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    append_complex(out, values[i]);
  }
  out += ']';
}

njson parse_json(const std::string& text) {
  try {
    return njson::parse(text);
  } catch (const njson::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

long get_long(const njson& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw std::invalid_argument(std::string("missing or non-integer field: ") +
                                key);
  return j[key].get<long>();
}

cplx parse_complex(const njson& j, const char* key) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number())
    throw std::invalid_argument(
        std::string("field must hold [re,im] pairs: ") + key);
  return {j[0].get<double>(), j[1].get<double>()};
}

cvec parse_complex_array(const njson& j, const char* key) {
  if (!j.is_array())
    throw std::invalid_argument(std::string("field must be an array: ") + key);
  cvec out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(parse_complex(e, key));
  return out;
}

}  // namespace

std::string sequence_to_json(const Sequence& phi) {
  require(phi.n >= 1 && static_cast<long>(phi.entries.size()) == phi.n,
          "sequence entries must have length N >= 1");
  std::string out = "{\"n\":" + std::to_string(phi.n) + ",\"family\":\"" +
                    family_name(phi.family) + "\",\"params\":{";
  switch (phi.family) {
    case Family::wiener:
      out += "\"s\":" + std::to_string(phi.params.s);
      break;
    case Family::bjorck:
      out += "\"p\":" + std::to_string(phi.params.p);
      break;
    case Family::bjorck_saffari_sq: {
      out += "\"c\":";
      append_complex_array(out, phi.params.c);
      out += ",\"inner_n\":" + std::to_string(phi.params.inner_n);
      out += ",\"sigma\":[";
      for (size_t i = 0; i < phi.params.sigma.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(phi.params.sigma[i]);
      }
      out += ']';
      break;
    }
    case Family::milewski:
      out += "\"inner_n\":" + std::to_string(phi.params.inner_n);
      out += ",\"v\":";
      append_complex_array(out, phi.params.v);
      break;
    case Family::kronecker:
      out += "\"u\":";
      append_complex_array(out, phi.params.u);
      out += ",\"v\":";
      append_complex_array(out, phi.params.v);
      break;
    default:
      break;
  }
  out += "},\"entries\":";
  append_complex_array(out, phi.entries);
  out += '}';
  return out;
}

Sequence sequence_from_json(const std::string& text) {
  const njson j = parse_json(text);
  if (!j.is_object()) throw std::invalid_argument("sequence JSON must be an object");
  Sequence phi;
  phi.n = get_long(j, "n");
  if (phi.n < 1) throw std::invalid_argument("n must be >= 1");
  if (!j.contains("family") || !j["family"].is_string())
    throw std::invalid_argument("missing or non-string field: family");
  phi.family = family_from_name(j["family"].get<std::string>());
  if (j.contains("params") && j["params"].is_object()) {
    const njson& p = j["params"];
    if (p.contains("s")) phi.params.s = get_long(p, "s");
    if (p.contains("p")) phi.params.p = get_long(p, "p");
    if (p.contains("inner_n")) phi.params.inner_n = get_long(p, "inner_n");
    if (p.contains("c")) phi.params.c = parse_complex_array(p["c"], "c");
    if (p.contains("u")) phi.params.u = parse_complex_array(p["u"], "u");
    if (p.contains("v")) phi.params.v = parse_complex_array(p["v"], "v");
    if (p.contains("sigma")) {
      if (!p["sigma"].is_array())
        throw std::invalid_argument("field must be an array: sigma");
      for (const auto& e : p["sigma"]) {
        if (!e.is_number_integer())
          throw std::invalid_argument("sigma entries must be integers");
        phi.params.sigma.push_back(e.get<long>());
      }
    }
  }
  if (!j.contains("entries"))
    throw std::invalid_argument("missing field: entries");
  phi.entries = parse_complex_array(j["entries"], "entries");
  if (static_cast<long>(phi.entries.size()) != phi.n)
    throw std::invalid_argument("entries length must equal n");
  return phi;
}

std::string subgroup_to_json(const TFSubgroup& lambda) {
  std::string out = "{\"n\":" + std::to_string(lambda.n) + ",\"elements\":[";
  for (size_t i = 0; i < lambda.elements.size(); ++i) {
    if (i) out += ',';
    out += '[' + std::to_string(lambda.elements[i].first) + ',' +
           std::to_string(lambda.elements[i].second) + ']';
  }
  out += "]}";
  return out;
}

TFSubgroup subgroup_from_json(const std::string& text) {
  const njson j = parse_json(text);
  if (!j.is_object())
    throw std::invalid_argument("subgroup JSON must be an object");
  const long n = get_long(j, "n");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!j.contains("elements") || !j["elements"].is_array())
    throw std::invalid_argument("missing or non-array field: elements");
  std::vector<std::pair<long, long>> elems;
  for (const auto& e : j["elements"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument("elements must hold [k,l] integer pairs");
    elems.emplace_back(e[0].get<long>(), e[1].get<long>());
  }
  // validates closure; user-supplied lists that are not subgroups error here
  return explicit_subgroup(n, std::move(elems));
}

std::string dpaf_to_json(const DPAFMatrix& a) {
  require(a.n >= 1 && static_cast<long>(a.values.size()) == a.n,
          "DPAF table must be N x N");
  std::string out = "{\"n\":" + std::to_string(a.n) + ",\"values\":[";
  for (long m = 0; m < a.n; ++m) {
    if (m) out += ',';
    append_complex_array(out, a.values[static_cast<size_t>(m)]);
  }
  out += "]}";
  return out;
}

std::string dpaf_magnitude_csv(const DPAFMatrix& a) {
  require(a.n >= 1 && static_cast<long>(a.values.size()) == a.n,
          "DPAF table must be N x N");
  std::string out;
  for (long m = 0; m < a.n; ++m) {
    for (long n = 0; n < a.n; ++n) {
      if (n) out += ',';
      out += format_double(
          std::abs(a.values[static_cast<size_t>(m)][static_cast<size_t>(n)]));
    }
    out += '\n';
  }
  return out;
}

std::string tightness_report_to_json(const TightnessReport& report) {
  std::string out = std::string("{\"method\":\"") +
                    method_name(report.method) + "\"";
  out += ",\"is_frame\":";
  out += report.is_frame ? "true" : "false";
  out += ",\"is_tight\":";
  out += report.is_tight ? "true" : "false";
  out += ",\"frame_bound\":" + format_double(report.frame_bound);
  out += ",\"witnesses\":[";
  for (size_t i = 0; i < report.witnesses.size(); ++i) {
    if (i) out += ',';
    const Witness& w = report.witnesses[i];
    out += '[' + std::to_string(w.m) + ',' + std::to_string(w.n) + ',' +
           format_double(w.value.real()) + ',' +
           format_double(w.value.imag()) + ']';
  }
  out += "],\"gram_rank\":";
  out += report.gram_rank ? std::to_string(*report.gram_rank) : "null";
  out += ",\"bounds\":";
  if (report.bounds) {
    out += '[' + format_double(report.bounds->first) + ',' +
           format_double(report.bounds->second) + ']';
  } else {
    out += "null";
  }
  out += '}';
  return out;
}

std::string gram_support_csv(const GramMatrix& gram, double threshold) {
  require(gram.size >= 1 && gram.entries.rows() == gram.size &&
              gram.entries.cols() == gram.size,
          "Gram matrix must be square and nonempty");
  std::string out;
  for (long i = 0; i < gram.size; ++i) {
    for (long j = 0; j < gram.size; ++j) {
      if (j) out += ',';
      out += std::abs(gram.entries(i, j)) > threshold ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::string cyclic_root_to_json(const CyclicRoot& root) {
  require(root.n >= 1 && static_cast<long>(root.z.size()) == root.n,
          "cyclic root must have length N >= 1");
  std::string out = "{\"n\":" + std::to_string(root.n) + ",\"z\":";
  append_complex_array(out, root.z);
  out += '}';
  return out;
}

CyclicRoot cyclic_root_from_json(const std::string& text) {
  const njson j = parse_json(text);
  if (!j.is_object())
    throw std::invalid_argument("cyclic root JSON must be an object");
  CyclicRoot root;
  root.n = get_long(j, "n");
  if (root.n < 1) throw std::invalid_argument("n must be >= 1");
  if (!j.contains("z")) throw std::invalid_argument("missing field: z");
  root.z = parse_complex_array(j["z"], "z");
  if (static_cast<long>(root.z.size()) != root.n)
    throw std::invalid_argument("z length must equal n");
  return root;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
  if (!out.good()) throw std::invalid_argument("write failed: " + path);
}

}  // namespace gf
