#pragma once

// JSON and aligned-text forms of a DimensionReport. Both carry the same
// numeric fields and both parse back.

#include "tmdim/dimension.hpp"

#include "json.hpp"

#include <cstdio>
#include <map>
#include <sstream>
#include <string>

namespace tmdim {

struct AnalysisResult {
  SplineSpaceSpec spec;
  DimensionReport report;
  friend bool operator==(const AnalysisResult& a, const AnalysisResult& b) {
    return a.spec.d1() == b.spec.d1() && a.spec.d2() == b.spec.d2() && a.spec.alpha() == b.spec.alpha() &&
           a.spec.beta() == b.spec.beta() && a.report.counts == b.report.counts && a.report.rank == b.report.rank &&
           a.report.nullity == b.report.nullity && a.report.dimension == b.report.dimension &&
           a.report.diagonalizable == b.report.diagonalizable && a.report.stability == b.report.stability &&
           a.report.removed_vanished == b.report.removed_vanished &&
           a.report.residual_vanished == b.report.residual_vanished &&
           a.report.generic_rank.has_value() == b.report.generic_rank.has_value() &&
           (!a.report.generic_rank || (a.report.generic_rank->rank == b.report.generic_rank->rank &&
                                       a.report.generic_rank->trials == b.report.generic_rank->trials &&
                                       a.report.generic_rank->seed == b.report.generic_rank->seed));
  }
};

namespace detail {

// Integer fields shared by both formats, in output order.
template <class R, class F>
void visit_counts(R& c, F&& f) {
  f("F", c.F);
  f("E_h", c.E_h);
  f("E_v", c.E_v);
  f("V", c.V);
  f("C_h", c.C_h);
  f("C_v", c.C_v);
  f("T_h", c.T_h);
  f("T_v", c.T_v);
  f("n_e", c.n_e);
  f("V_plus", c.V_plus);
  f("n_c", c.n_c);
  f("n_r", c.n_r);
}

inline Stability parse_stability(const std::string& s) {
  if (s == "stable") return Stability::Stable;
  if (s == "unstable") return Stability::UnstableAtGivenKnots;
  if (s == "unknown") return Stability::Unknown;
  throw ParseError("unknown stability '" + s + "'");
}

}  // namespace detail

inline nlohmann::ordered_json report_json(const AnalysisResult& a) {
  const auto& r = a.report;
  nlohmann::ordered_json j;
  j["spec"] = {{"d1", a.spec.d1()}, {"d2", a.spec.d2()}, {"alpha", a.spec.alpha()}, {"beta", a.spec.beta()}};
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  detail::visit_counts(r.counts, [&](const char* k, auto v) { counts[k] = v; });
  j["counts"] = counts;
  j["rank"] = r.rank;
  j["nullity"] = r.nullity;
  j["dimension"] = r.dimension;
  j["removed_vanished"] = r.removed_vanished;
  j["residual_vanished"] = r.residual_vanished;
  j["diagonalizable"] = r.diagonalizable ? nlohmann::ordered_json(*r.diagonalizable) : nlohmann::ordered_json(nullptr);
  j["stability"] = to_string(r.stability);
  if (r.generic_rank)
    j["generic_rank"] = {{"rank", r.generic_rank->rank}, {"trials", r.generic_rank->trials}, {"seed", r.generic_rank->seed}};
  else
    j["generic_rank"] = nullptr;
  return j;
}

inline AnalysisResult parse_report_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    const auto& sp = j.at("spec");
    AnalysisResult a{SplineSpaceSpec(sp.at("d1"), sp.at("d2"), sp.at("alpha"), sp.at("beta")), {}};
    auto& r = a.report;
    detail::visit_counts(r.counts, [&](const char* k, auto& v) { v = j.at("counts").at(k).get<std::decay_t<decltype(v)>>(); });
    r.rank = j.at("rank");
    r.nullity = j.at("nullity");
    r.dimension = j.at("dimension");
    r.removed_vanished = j.at("removed_vanished");
    r.residual_vanished = j.at("residual_vanished");
    if (!j.at("diagonalizable").is_null()) r.diagonalizable = j.at("diagonalizable").get<std::vector<int>>();
    r.stability = detail::parse_stability(j.at("stability"));
    if (!j.at("generic_rank").is_null()) {
      const auto& g = j.at("generic_rank");
      r.generic_rank = GenericRankInfo{g.at("rank"), g.at("trials"), g.at("seed")};
    }
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

inline std::string report_text(const AnalysisResult& a) {
  const auto& r = a.report;
  std::ostringstream os;
  auto line = [&](const std::string& k, const auto& v) {
    char key[32];
    std::snprintf(key, sizeof key, "%-18s", k.c_str());
    os << key << ' ' << v << '\n';
  };
  line("spec", a.spec.str());
  detail::visit_counts(r.counts, [&](const char* k, auto v) { line(k, v); });
  line("rank", r.rank);
  line("nullity", r.nullity);
  line("dimension", r.dimension);
  line("removed_vanished", r.removed_vanished);
  line("residual_vanished", r.residual_vanished);
  if (r.diagonalizable) {
    std::string order;
    for (int id : *r.diagonalizable) order += (order.empty() ? "" : " ") + std::to_string(id);
    line("diagonalizable", "yes");
    line("order", order.empty() ? "-" : order);
  } else {
    line("diagonalizable", "no");
  }
  line("stability", to_string(r.stability));
  if (r.generic_rank) {
    line("generic_rank", r.generic_rank->rank);
    line("trials", r.generic_rank->trials);
    line("seed", r.generic_rank->seed);
  }
  return os.str();
}

inline AnalysisResult parse_report_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream is(text);
  std::string l;
  while (std::getline(is, l)) {
    if (l.empty()) continue;
    const auto sp = l.find(' ');
    if (sp == std::string::npos) throw ParseError("malformed report line: " + l);
    const auto vs = l.find_first_not_of(' ', sp);
    kv[l.substr(0, sp)] = vs == std::string::npos ? "" : l.substr(vs);
  }
  auto get = [&](const std::string& k) -> const std::string& {
    auto it = kv.find(k);
    if (it == kv.end()) throw ParseError("report is missing '" + k + "'");
    return it->second;
  };
  auto num = [&](const std::string& k) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(get(k), &used);
      if (used != get(k).size()) throw ParseError("bad number for '" + k + "'");
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("bad number for '" + k + "'");
    }
  };
  int d1, d2, al, be;
  if (std::sscanf(get("spec").c_str(), "(%d,%d,%d,%d)", &d1, &d2, &al, &be) != 4) throw ParseError("bad spec line");
  AnalysisResult a{SplineSpaceSpec(d1, d2, al, be), {}};
  auto& r = a.report;
  detail::visit_counts(r.counts, [&](const char* k, auto& v) { v = static_cast<std::decay_t<decltype(v)>>(num(k)); });
  r.rank = static_cast<std::size_t>(num("rank"));
  r.nullity = static_cast<std::size_t>(num("nullity"));
  r.dimension = num("dimension");
  r.removed_vanished = static_cast<int>(num("removed_vanished"));
  r.residual_vanished = static_cast<int>(num("residual_vanished"));
  if (get("diagonalizable") == "yes") {
    std::vector<int> order;
    if (get("order") != "-") {
      std::istringstream os(get("order"));
      int id;
      while (os >> id) order.push_back(id);
    }
    r.diagonalizable = order;
  } else if (get("diagonalizable") != "no") {
    throw ParseError("bad diagonalizable line");
  }
  r.stability = detail::parse_stability(get("stability"));
  if (kv.count("generic_rank"))
    r.generic_rank = GenericRankInfo{static_cast<std::size_t>(num("generic_rank")), static_cast<int>(num("trials")),
                                     static_cast<std::uint64_t>(num("seed"))};
  return a;
}

}  // namespace tmdim
