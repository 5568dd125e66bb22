#include "geninv/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace geninv::io {

namespace {

std::string where(const std::string& path, const std::string& msg) { return path + ": " + msg; }

std::string literal(const json& node, const std::string& path) {
  if (node.is_string()) return node.get<std::string>();
  if (node.is_number_integer()) return node.dump();
  if (node.is_number_float()) {
    throw Error(Errc::Parse, where(path, "floating-point JSON numbers are inexact; quote the literal"));
  }
  throw Error(Errc::Parse, where(path, "expected a number literal"));
}

Rational rational_at(const json& node, const std::string& path) {
  const std::string text = literal(node, path);
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    if (text == "inf" || text == "+inf" || text == "-inf") {
      throw Error(Errc::Parse, where(path, "infinite values are only allowed in extended files"));
    }
    throw Error(e.code(), where(path, e.detail()));
  }
}

ExtReal ext_at(const json& node, const std::string& path) {
  const std::string text = literal(node, path);
  try {
    return parse_ext_real(text);
  } catch (const Error& e) {
    throw Error(e.code(), where(path, e.detail()));
  }
}

const json& member(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw Error(Errc::Parse, where(path, "expected an object"));
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(Errc::Parse, where(path, std::string("missing \"") + key + "\""));
  return *it;
}

const json& array_member(const json& obj, const char* key) {
  const json& arr = member(obj, key, "$");
  if (!arr.is_array()) throw Error(Errc::Parse, where(std::string("$.") + key, "expected an array"));
  return arr;
}

std::string item_path(const char* key, std::size_t i, const char* field) {
  return std::string("$.") + key + "[" + std::to_string(i) + "]." + field;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, e.what());
  }
}

ExtSegment ext_segment_at(const json& node, std::size_t i) {
  const Rational slope = rational_at(member(node, "slope", item_path("segments", i, "")), item_path("segments", i, "slope"));
  const ExtReal intercept = ext_at(member(node, "intercept", item_path("segments", i, "")), item_path("segments", i, "intercept"));
  if (intercept.is_finite()) return Segment{slope, intercept.value()};
  if (sgn(slope) != 0) {
    throw Error(Errc::Parse, where(item_path("segments", i, "slope"), "an infinite piece must have slope 0"));
  }
  return ExtSegment::constant(intercept);
}

json segment_json(const ExtSegment& s) {
  if (s.is_infinite()) return {{"slope", "0"}, {"intercept", to_string(s.at(0))}};
  return {{"slope", to_string(s.law().slope)}, {"intercept", to_string(s.law().intercept)}};
}

}  // namespace

json to_json(const PiecewiseMonotone& f) {
  json doc{{"breakpoints", json::array()}, {"segments", json::array()}};
  for (const auto& bp : f.breakpoints()) doc["breakpoints"].push_back({{"x", to_string(bp.x)}, {"value", to_string(bp.value)}});
  for (const auto& s : f.segments()) {
    doc["segments"].push_back({{"slope", to_string(s.slope)}, {"intercept", to_string(s.intercept)}});
  }
  return doc;
}

json to_json(const ExtPiecewise& f) {
  json doc{{"breakpoints", json::array()}, {"segments", json::array()}};
  for (const auto& bp : f.breakpoints()) doc["breakpoints"].push_back({{"x", to_string(bp.x)}, {"value", to_string(bp.value)}});
  for (const auto& s : f.segments()) {
    doc["segments"].push_back(segment_json(s));
  }
  return doc;
}

json to_json(const Violation& v) {
  return {{"case", v.case_index},
          {"function", to_json(v.function)},
          {"witness", v.witness},
          {"expected", v.expected},
          {"got", v.got}};
}

json to_json(const PropertyResult& r) {
  json out{{"id", r.property_id},
           {"implication", r.implication},
           {"cases_run", r.cases_run},
           {"checks", r.checks},
           {"hypothesis_hits", r.hypothesis_hits},
           {"skipped", r.skipped},
           {"violations", r.violation_count},
           {"passed", r.passed()},
           {"witnesses", json::array()}};
  for (const auto& v : r.violations) out["witnesses"].push_back(to_json(v));
  return out;
}

json to_json(const Interval& interval) {
  return {{"lo", to_string(interval.lo)},
          {"hi", to_string(interval.hi)},
          {"lo_closed", interval.lo_closed},
          {"hi_closed", interval.hi_closed},
          {"text", to_string(interval)}};
}

json to_json(const CompositionReport& report) {
  json out{{"composition", report.composition},
           {"ok", report.ok()},
           {"predicted", json::array()},
           {"excluded", json::array()},
           {"edges", json::array()},
           {"mismatches", json::array()},
           {"actual", to_json(report.actual)}};
  for (const auto& p : report.predicted) out["predicted"].push_back({{"where", to_json(p.where)}, {"law", segment_json(p.law)}});
  for (const auto& e : report.excluded) out["excluded"].push_back(to_json(e));
  for (const auto& e : report.edges) out["edges"].push_back({{"point", to_string(e.point)}, {"actual", to_string(e.actual)}});
  for (const auto& m : report.mismatches) {
    out["mismatches"].push_back(
        {{"point", to_string(m.point)}, {"predicted", to_string(m.predicted)}, {"actual", to_string(m.actual)}});
  }
  return out;
}

PiecewiseMonotone function_from_json(const json& doc) {
  RawFunction raw;
  const json& bps = array_member(doc, "breakpoints");
  const json& segs = array_member(doc, "segments");
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const std::string p = item_path("breakpoints", i, "");
    raw.breakpoints.push_back({rational_at(member(bps[i], "x", p), item_path("breakpoints", i, "x")),
                               rational_at(member(bps[i], "value", p), item_path("breakpoints", i, "value"))});
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::string p = item_path("segments", i, "");
    raw.segments.push_back({rational_at(member(segs[i], "slope", p), item_path("segments", i, "slope")),
                            rational_at(member(segs[i], "intercept", p), item_path("segments", i, "intercept"))});
  }
  return validate(std::move(raw));
}

ExtPiecewise ext_function_from_json(const json& doc) {
  RawExtFunction raw;
  const json& bps = array_member(doc, "breakpoints");
  const json& segs = array_member(doc, "segments");
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const std::string p = item_path("breakpoints", i, "");
    raw.breakpoints.push_back({rational_at(member(bps[i], "x", p), item_path("breakpoints", i, "x")),
                               ext_at(member(bps[i], "value", p), item_path("breakpoints", i, "value"))});
  }
  for (std::size_t i = 0; i < segs.size(); ++i) raw.segments.push_back(ext_segment_at(segs[i], i));
  return validate(std::move(raw));
}

PiecewiseMonotone parse_function(std::string_view text) { return function_from_json(parse_document(text)); }
ExtPiecewise parse_ext_function(std::string_view text) { return ext_function_from_json(parse_document(text)); }

std::string emit(const PiecewiseMonotone& f) { return to_json(f).dump(2); }
std::string emit(const ExtPiecewise& f) { return to_json(f).dump(2); }

std::string read_text(const std::filesystem::path& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Rational> read_samples(std::istream& in) {
  std::vector<Rational> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    try {
      out.push_back(parse_rational(std::string_view(line).substr(first, last - first + 1)));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.detail());
    }
  }
  return out;
}

void write_samples(std::ostream& out, const std::vector<Rational>& values) {
  for (const auto& v : values) out << to_string(v) << '\n';
}

}  // namespace geninv::io
