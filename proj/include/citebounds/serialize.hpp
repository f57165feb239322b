#pragma once

// JSON, markdown and CSV renderings of every report type. JSON field names are
// part of the output contract; keys are emitted in insertion order.

#include "citebounds/audit.hpp"
#include "citebounds/bounds.hpp"
#include "citebounds/indices.hpp"
#include "citebounds/profile.hpp"
#include "citebounds/rational.hpp"
#include "citebounds/reconstruct.hpp"
#include "citebounds/tables.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace citebounds {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(std::span<const Count> counts) { return Json(std::vector<Count>(counts.begin(), counts.end())); }

inline Json to_json(const IndexReport& r) {
  return Json{{"h", r.h},
              {"g", r.g},
              {"e_squared", r.e_squared},
              {"e_ceil", r.e_ceil},
              {"P", r.papers},
              {"total_citations", r.total_citations},
              {"impact_factor", to_json(r.impact_factor)},
              {"impact_factor_display", to_fixed2(r.impact_factor)},
              {"g_convention", std::string(to_string(r.g_convention))}};
}

inline Json to_json(const PartialSums& s) {
  return Json{{"s_top", s.s_top},           {"s_h_to_P", s.s_h_to_P},     {"s_h_to_g", s.s_h_to_g},
              {"s_g_to_P", s.s_g_to_P},     {"bound_Ph", s.bound_Ph},     {"bound_gh_h", s.bound_gh_h},
              {"bound_gh_g", s.bound_gh_g}, {"bound_Pg_h", s.bound_Pg_h}, {"bound_Pg_g", s.bound_Pg_g},
              {"g2_plus_tail", s.g2_plus_tail}};
}

namespace detail {

inline Json bound_json(const IntBound& b, BoundKind kind) {
  Json j{{"kind", std::string(to_string(kind))}};
  j["value"] = b.value ? Json(*b.value) : Json(nullptr);
  j["holds"] = b.holds;
  j["slack"] = b.slack ? Json(*b.slack) : Json(nullptr);
  return j;
}

}  // namespace detail

inline Json to_json(const BoundReport& b) {
  Json thm3 = detail::bound_json(b.thm3_upper_g_display, BoundKind::exact);
  thm3["exact_holds"] = b.thm3_exact_holds;
  return Json{{"thm1_lower_h", detail::bound_json(b.thm1_lower_h, BoundKind::exact)},
              {"thm2_lower_h", detail::bound_json(b.thm2_lower_h, BoundKind::exact)},
              {"thm4_lower_h", detail::bound_json(b.thm4_lower_h, BoundKind::heuristic)},
              {"lemma1_upper_g", detail::bound_json(b.lemma1_upper_g, BoundKind::exact)},
              {"thm3_upper_g", thm3},
              {"lemma2_lower_g",
               Json{{"kind", "heuristic"},
                    {"value", to_json(b.lemma2_lower_g.value)},
                    {"holds", b.lemma2_lower_g.holds},
                    {"slack", to_json(b.lemma2_lower_g.slack)}}}};
}

inline Json to_json(const AuditSummary& s) {
  Json space;
  if (const auto* ex = std::get_if<ExhaustiveSpace>(&s.search_space)) {
    space = Json{{"mode", "exhaustive"}, {"p_max", ex->p_max}, {"c_max", ex->c_max}};
  } else {
    const auto& rc = std::get<RandomAuditConfig>(s.search_space);
    std::ostringstream alpha;
    alpha << rc.alpha;
    space = Json{{"mode", "random"},    {"alpha", alpha.str()}, {"c_max", rc.c_max},
                 {"p_max", rc.p_max},   {"seed", rc.seed},      {"samples", rc.samples}};
  }
  Json ids = Json::array();
  for (const auto& a : s.per_id) {
    Json j{{"id", std::string(to_string(a.id))},
           {"kind", std::string(to_string(kind_of(a.id)))},
           {"profiles_checked", a.profiles_checked},
           {"violations", a.violations}};
    j["first_counterexample"] = a.first_counterexample ? to_json(*a.first_counterexample) : Json(nullptr);
    j["max_violation_slack"] = a.max_violation_slack ? to_json(*a.max_violation_slack) : Json(nullptr);
    ids.push_back(std::move(j));
  }
  return Json{{"search_space", space},
              {"g_convention", std::string(to_string(s.g_convention))},
              {"exact_violation", s.exact_violation()},
              {"inequalities", ids}};
}

inline Json to_json(const ConsistencyVerdict& v) {
  Json checks = Json::array();
  for (const auto& c : v.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"relation", c.expression},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"residual", c.residual},
                          {"satisfied", c.satisfied()}});
  }
  return Json{{"consistent", v.consistent}, {"checks", checks}};
}

inline Json to_json(const Reconstruction& r) {
  Json j{{"feasible", r.feasible()}};
  j["witness"] = r.witness ? to_json(r.witness->counts()) : Json(nullptr);
  j["reason"] = r.reason.empty() ? Json(nullptr) : Json(r.reason);
  return j;
}

inline Json to_json(const RenderedTable& t) {
  Json cols = Json::array();
  for (const auto& c : t.columns) cols.push_back(Json{{"key", c.key}, {"header", c.header}});
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json cells = Json::array();
    for (const auto& cell : row) {
      Json jc{{"value", cell.text}, {"flag", std::string(to_string(cell.flag))}};
      if (cell.flag == CellFlag::mismatch) jc["paper"] = *cell.paper;
      cells.push_back(std::move(jc));
    }
    rows.push_back(std::move(cells));
  }
  return Json{{"table", t.id}, {"caption", t.caption}, {"columns", cols}, {"rows", rows}};
}

/// Markdown table; a mismatching cell reads "computed (paper: printed) !".
inline std::string to_markdown(const RenderedTable& t) {
  std::ostringstream out;
  out << "### " << t.id << ": " << t.caption << "\n\n|";
  for (const auto& c : t.columns) out << ' ' << c.header << " |";
  out << "\n|";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i == 0 ? " :-- |" : " --: |");
  out << '\n';
  for (const auto& row : t.rows) {
    out << '|';
    for (const auto& cell : row) {
      out << ' ' << cell.text;
      if (cell.flag == CellFlag::mismatch) out << " (paper: " << *cell.paper << ") !";
      out << " |";
    }
    out << '\n';
  }
  return out.str();
}

/// Long-form CSV: one line per cell.
inline std::string tables_to_csv(const std::vector<RenderedTable>& tables) {
  std::ostringstream out;
  out << "table,author,column,value,paper,flag\n";
  for (const auto& t : tables) {
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      for (std::size_t c = 1; c < t.columns.size(); ++c) {
        const auto& cell = t.rows[r][c];
        out << t.id << ',' << t.authors[r] << ',' << t.columns[c].key << ',' << cell.text << ','
            << (cell.paper ? *cell.paper : "") << ',' << to_string(cell.flag) << '\n';
      }
    }
  }
  return out.str();
}

/// Wide CSV: figure,series,1..n.
inline std::string figures_to_csv(const std::vector<FigureSeries>& series) {
  std::ostringstream out;
  const std::size_t n = series.empty() ? 0 : series.front().values.size();
  out << "figure,series";
  for (std::size_t i = 1; i <= n; ++i) out << ',' << i;
  out << '\n';
  for (const auto& s : series) {
    out << s.figure << ',' << s.series;
    for (const auto& v : s.values) out << ',' << v;
    out << '\n';
  }
  return out.str();
}

inline Json to_json(const std::vector<FigureSeries>& series) {
  Json out = Json::array();
  for (const auto& s : series) out.push_back(Json{{"figure", s.figure}, {"series", s.series}, {"values", s.values}});
  return out;
}

inline std::string to_markdown(const AuditSummary& s) {
  std::ostringstream out;
  if (const auto* ex = std::get_if<ExhaustiveSpace>(&s.search_space)) {
    out << "Exhaustive audit, p_max=" << ex->p_max << ", c_max=" << ex->c_max;
  } else {
    const auto& rc = std::get<RandomAuditConfig>(s.search_space);
    out << "Random audit, samples=" << rc.samples << ", alpha=" << rc.alpha << ", c_max=" << rc.c_max
        << ", p_max=" << rc.p_max << ", seed=" << rc.seed;
  }
  out << ", g convention " << to_string(s.g_convention) << "\n\n";
  out << "| inequality | kind | checked | violations | first counterexample | max overshoot |\n";
  out << "| :-- | :-- | --: | --: | :-- | --: |\n";
  for (const auto& a : s.per_id) {
    out << "| " << to_string(a.id) << " | " << to_string(kind_of(a.id)) << " | " << a.profiles_checked << " | "
        << a.violations << " | " << (a.first_counterexample ? to_string(*a.first_counterexample) : "-") << " | "
        << (a.max_violation_slack ? to_string(*a.max_violation_slack) : "-") << " |\n";
  }
  return out.str();
}

}  // namespace citebounds
