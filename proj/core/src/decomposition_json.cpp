#include <cstdio>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cutreg/regularity.hpp"

namespace cutreg {

namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void append_set(std::string& out, const VertexSet& s) {
  out += '[';
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(v);
  });
  out += ']';
}

}  // namespace

std::string decomposition_to_json(const Decomposition& d) {
  std::string out = "{\"epsilon\":" + fmt_double(d.epsilon) +
                    ",\"k\":" + fmt_double(d.k) + ",\"cuts\":[";
  for (std::size_t i = 0; i < d.cuts.size(); ++i) {
    if (i) out += ',';
    out += "{\"S\":";
    append_set(out, d.cuts[i].s);
    out += ",\"T\":";
    append_set(out, d.cuts[i].t);
    out += ",\"alpha\":" + fmt_double(d.cuts[i].alpha) + "}";
  }
  out += "],\"certified_residual\":";
  out += d.certified_residual ? fmt_double(*d.certified_residual) : "null";
  out += "}";
  return out;
}

Decomposition decomposition_from_json(const std::string& text, int n) {
  nlohmann::json j = nlohmann::json::parse(text);
  Decomposition d;
  d.epsilon = j.at("epsilon").get<double>();
  d.k = j.at("k").get<double>();
  for (const auto& c : j.at("cuts")) {
    CutMatrix cm;
    cm.s = VertexSet(n);
    cm.t = VertexSet(n);
    for (int v : c.at("S").get<std::vector<int>>()) cm.s.insert(v);
    for (int v : c.at("T").get<std::vector<int>>()) cm.t.insert(v);
    cm.alpha = c.at("alpha").get<double>();
    d.cuts.push_back(std::move(cm));
  }
  const auto& cert = j.at("certified_residual");
  if (cert.is_null()) {
    d.certified_residual = std::nullopt;
    d.uncertified = true;
  } else {
    d.certified_residual = cert.get<double>();
    d.uncertified = false;
  }
  return d;
}

}  // namespace cutreg
