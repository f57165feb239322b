#pragma once

#include "citebounds/bounds.hpp"
#include "citebounds/csv.hpp"
#include "citebounds/error.hpp"
#include "citebounds/indices.hpp"
#include "citebounds/profile.hpp"
#include "citebounds/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace citebounds {

/// A published summary row: index aggregates plus optional segment sums.
/// Fields are taken as given; they may contradict each other.
struct AggregateRecord {
  std::string author;
  std::int64_t h = 0;
  std::int64_t g = 0;
  Count e_squared = 0;
  std::int64_t papers = 0;
  Count total = 0;
  std::optional<Count> s_h_to_P;
  std::optional<Count> s_h_to_g;
  std::optional<Count> s_g_to_P;

  bool has_segments() const { return s_h_to_P || s_h_to_g || s_g_to_P; }

  IndexReport report(GConvention c = GConvention::capped) const {
    return report_from_aggregates(h, g, e_squared, papers, total, c);
  }

  friend bool operator==(const AggregateRecord&, const AggregateRecord&) = default;
};

/// Aggregates of a real profile, with all three segment sums filled in.
inline AggregateRecord extract_aggregates(const CitationProfile& p, std::string author = {}) {
  const auto r = index_report(p, GConvention::capped);
  const auto s = partial_sums(p, r);
  return {std::move(author), r.h, r.g, r.e_squared, r.papers, r.total_citations, s.s_h_to_P, s.s_h_to_g, s.s_g_to_P};
}

enum class Relation { eq, le, ge };

inline std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::eq: return "=";
    case Relation::le: return "<=";
    case Relation::ge: return ">=";
  }
  return "?";
}

/// One checked relation `lhs <rel> rhs`. The residual is 0 when it holds;
/// otherwise lhs - rhs for equalities and the (negative) shortfall for inequalities.
struct ConstraintCheck {
  std::string name;
  std::string expression;
  Relation relation = Relation::eq;
  Count lhs = 0;
  Count rhs = 0;
  Count residual = 0;

  bool satisfied() const { return residual == 0; }
};

struct ConsistencyVerdict {
  bool consistent = true;
  std::vector<ConstraintCheck> checks;

  const ConstraintCheck* find(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  std::vector<ConstraintCheck> violations() const {
    std::vector<ConstraintCheck> out;
    std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const auto& c) { return !c.satisfied(); });
    return out;
  }
};

namespace detail {

/// Middle/tail sums implied by a record: given directly or by difference from the rest.
struct SegmentView {
  Count head;                 ///< h^2 + e^2
  Count rest;                 ///< s_h_to_P, or C - head when not given
  std::optional<Count> mid;   ///< s_h_to_g
  std::optional<Count> tail;  ///< s_g_to_P
};

inline SegmentView segments_of(const AggregateRecord& rec) {
  SegmentView v;
  v.head = rec.h * rec.h + rec.e_squared;
  v.rest = rec.s_h_to_P.value_or(rec.total - v.head);
  v.mid = rec.s_h_to_g;
  v.tail = rec.s_g_to_P;
  if (!v.mid && v.tail && rec.s_h_to_P) v.mid = v.rest - *v.tail;
  if (!v.tail && v.mid && rec.s_h_to_P) v.tail = v.rest - *v.mid;
  return v;
}

}  // namespace detail

/// Checks every relation between the record's fields that the definitions of
/// h, g and e^2 force on any real profile. Segment relations are only checked
/// when the record carries segment sums.
inline ConsistencyVerdict check_aggregate_consistency(const AggregateRecord& rec) {
  ConsistencyVerdict v;
  auto add = [&](std::string name, std::string expr, Relation rel, Count lhs, Count rhs) {
    Count residual = 0;
    switch (rel) {
      case Relation::eq: residual = lhs - rhs; break;
      case Relation::le: residual = std::min<Count>(0, rhs - lhs); break;
      case Relation::ge: residual = std::min<Count>(0, lhs - rhs); break;
    }
    if (residual != 0) v.consistent = false;
    v.checks.push_back({std::move(name), std::move(expr), rel, lhs, rhs, residual});
  };

  const auto seg = detail::segments_of(rec);
  const Count h = rec.h, g = rec.g, P = rec.papers;

  add("h_le_g", "h <= g", Relation::le, h, g);
  add("g_le_P", "g <= P", Relation::le, g, P);
  add("h_le_P", "h <= P", Relation::le, h, P);
  if (h == 0) add("empty_core", "e^2 = 0 when h = 0", Relation::eq, rec.e_squared, 0);
  add("core_le_total", "h^2 + e^2 <= C", Relation::le, seg.head, rec.total);
  add("g_le_total", "g^2 <= C", Relation::le, g * g, rec.total);
  add("g_reachable", "g^2 <= h^2 + e^2 + (g - h) h", Relation::le, g * g,
      seg.head + std::max<Count>(g - h, 0) * h);
  add("rest_cap", "s_h_to_P <= (P - h) h", Relation::le, seg.rest, std::max<Count>(P - h, 0) * h);

  if (rec.s_h_to_P) add("total_decomposition", "h^2 + e^2 + s_h_to_P = C", Relation::eq, seg.head + *rec.s_h_to_P, rec.total);
  if (rec.s_h_to_P && rec.s_h_to_g && rec.s_g_to_P) {
    add("tail_decomposition", "s_h_to_g + s_g_to_P = s_h_to_P", Relation::eq, *rec.s_h_to_g + *rec.s_g_to_P,
        *rec.s_h_to_P);
  }
  if (seg.mid) {
    add("g_threshold", "h^2 + e^2 + s_h_to_g >= g^2", Relation::ge, seg.head + *seg.mid, g * g);
    add("mid_cap", "s_h_to_g <= (g - h) h", Relation::le, *seg.mid, std::max<Count>(g - h, 0) * h);
    add("mid_nonnegative", "s_h_to_g >= 0", Relation::ge, *seg.mid, 0);
  }
  if (seg.tail) {
    add("tail_cap", "s_g_to_P <= (P - g) h", Relation::le, *seg.tail, std::max<Count>(P - g, 0) * h);
    add("tail_nonnegative", "s_g_to_P >= 0", Relation::ge, *seg.tail, 0);
  }
  if (seg.mid && seg.tail && g < P && *seg.tail >= 0) {
    // c_{g+1} is at least the tail average, and the prefix through g+1 must stay below (g+1)^2.
    const Count pivot = ceil_div(*seg.tail, P - g);
    add("g_maximal", "h^2 + e^2 + s_h_to_g + ceil(s_g_to_P / (P - g)) <= (g + 1)^2 - 1", Relation::le,
        seg.head + *seg.mid + pivot, (g + 1) * (g + 1) - 1);
    add("mid_dominates_tail", "(g - h) ceil(s_g_to_P / (P - g)) <= s_h_to_g", Relation::le,
        std::max<Count>(g - h, 0) * pivot, *seg.mid);
  }
  return v;
}

/// True iff recomputing from the profile (capped g) reproduces every populated field.
inline bool verify_witness(const CitationProfile& p, const AggregateRecord& rec) {
  const auto r = index_report(p, GConvention::capped);
  if (r.h != rec.h || r.g != rec.g || r.e_squared != rec.e_squared || r.papers != rec.papers ||
      r.total_citations != rec.total) {
    return false;
  }
  const auto s = partial_sums(p, r);
  if (rec.s_h_to_P && *rec.s_h_to_P != s.s_h_to_P) return false;
  if (rec.s_h_to_g && *rec.s_h_to_g != s.s_h_to_g) return false;
  if (rec.s_g_to_P && *rec.s_g_to_P != s.s_g_to_P) return false;
  return true;
}

struct Reconstruction {
  std::optional<CitationProfile> witness;
  std::optional<ConstraintCheck> violated;  ///< first failed consistency relation, when that is the cause
  std::string reason;                       ///< empty on success

  bool feasible() const { return witness.has_value(); }
};

namespace detail {

/// `count` values summing to `sum`, as level as possible, largest first.
inline void level_fill(std::vector<Count>& out, std::int64_t count, Count sum) {
  if (count <= 0) return;
  const Count base = sum / count;
  const Count extra = sum % count;
  for (std::int64_t i = 0; i < count; ++i) out.push_back(base + (i < extra ? 1 : 0));
}

}  // namespace detail

/// Builds a profile realizing the record, or explains why none exists.
///
/// Head: c_1 takes the whole excess e^2, c_2..c_h = h. Middle (ranks h+1..g):
/// the middle sum spread level under the cap h. Tail: c_{g+1} = x, the rest of
/// the tail spread level under x. The pivot x (and the middle sum, when the
/// record does not fix it) is searched exhaustively over its feasible window,
/// so a witness is found whenever one of this shape exists.
inline Reconstruction reconstruct_profile(const AggregateRecord& rec) {
  Reconstruction out;
  if (rec.papers < 1) {
    out.reason = "P must be at least 1";
    return out;
  }
  if (rec.h < 0 || rec.g < 0 || rec.e_squared < 0 || rec.total < 0) {
    out.reason = "aggregate values must be non-negative";
    return out;
  }
  const auto verdict = check_aggregate_consistency(rec);
  if (!verdict.consistent) {
    out.violated = verdict.violations().front();
    out.reason = "inconsistent: " + out.violated->name + " (" + out.violated->expression + ")";
    return out;
  }

  const auto seg = detail::segments_of(rec);
  const Count h = rec.h, g = rec.g, P = rec.papers;
  const Count mid_len = g - h, tail_len = P - g;
  const Count g_ceiling = (g + 1) * (g + 1) - 1;  // prefix through g+1 must not reach (g+1)^2

  std::optional<std::pair<Count, Count>> choice;  // (middle sum, pivot)
  for (Count x = 0; x <= h && !choice; ++x) {
    if (tail_len == 0 && x > 0) break;
    // Window for the middle sum given pivot x.
    Count lo = std::max<Count>({0, g * g - seg.head, mid_len * x});
    Count hi = std::min<Count>(mid_len * h, seg.rest);
    if (tail_len > 0) {
      hi = std::min({hi, g_ceiling - seg.head - x, seg.rest - x});
      lo = std::max(lo, seg.rest - x * tail_len);
    } else {
      lo = std::max(lo, seg.rest);
      hi = std::min(hi, seg.rest);
    }
    if (seg.mid) {
      lo = std::max(lo, *seg.mid);
      hi = std::min(hi, *seg.mid);
    }
    if (seg.tail) {
      lo = std::max(lo, seg.rest - *seg.tail);
      hi = std::min(hi, seg.rest - *seg.tail);
    }
    if (lo <= hi) choice = std::pair{lo, x};
  }
  if (!choice) {
    out.reason = "no split of the citations outside the h-core fits the h and g definitions";
    return out;
  }

  const auto [mid_sum, pivot] = *choice;
  std::vector<Count> counts;
  counts.reserve(static_cast<std::size_t>(P));
  if (h > 0) {
    counts.push_back(seg.head - h * (h - 1));
    for (Count i = 1; i < h; ++i) counts.push_back(h);
  }
  detail::level_fill(counts, mid_len, mid_sum);
  if (tail_len > 0) {
    counts.push_back(pivot);
    detail::level_fill(counts, tail_len - 1, seg.rest - mid_sum - pivot);
  }

  auto profile = CitationProfile::normalize(std::move(counts), rec.author.empty() ? std::nullopt
                                                                                  : std::optional{rec.author});
  if (!verify_witness(profile, rec)) {
    out.reason = "constructed profile failed verification";
    return out;
  }
  out.witness = std::move(profile);
  return out;
}

/// Header of the aggregate dataset format.
inline constexpr std::string_view kAggregateHeader = "author,h,g,e2,P,C,s_h_to_P,s_h_to_g,s_g_to_P";

/// Parses the aggregate CSV. Segment columns may be left empty.
inline std::vector<AggregateRecord> parse_aggregates(std::string_view document) {
  const auto all = csv::lines(document);
  if (all.empty() || csv::trim(all[0]) != kAggregateHeader) {
    throw InputError("line 1: expected header '" + std::string(kAggregateHeader) + "'");
  }
  std::vector<AggregateRecord> out;
  for (std::size_t n = 1; n < all.size(); ++n) {
    const std::size_t line_no = n + 1;
    if (csv::trim(all[n]).empty()) continue;
    const auto f = csv::split_record(all[n], line_no);
    if (f.size() != 9) {
      throw InputError("line " + std::to_string(line_no) + ": expected 9 fields, found " + std::to_string(f.size()));
    }
    if (f[0].empty()) throw InputError("line " + std::to_string(line_no) + ": missing author");
    auto required = [&](std::size_t i, std::string_view name) {
      if (f[i].empty()) throw InputError("line " + std::to_string(line_no) + ": missing field " + std::string(name));
      const auto v = csv::parse_int(f[i], line_no, name);
      if (v < 0) throw InputError("line " + std::to_string(line_no) + ": " + std::string(name) + " is negative");
      return v;
    };
    auto optional = [&](std::size_t i, std::string_view name) -> std::optional<Count> {
      if (f[i].empty()) return std::nullopt;
      return required(i, name);
    };
    AggregateRecord r;
    r.author = f[0];
    r.h = required(1, "h");
    r.g = required(2, "g");
    r.e_squared = required(3, "e2");
    r.papers = required(4, "P");
    if (r.papers < 1) throw InputError("line " + std::to_string(line_no) + ": P must be at least 1");
    r.total = required(5, "C");
    r.s_h_to_P = optional(6, "s_h_to_P");
    r.s_h_to_g = optional(7, "s_h_to_g");
    r.s_g_to_P = optional(8, "s_g_to_P");
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace citebounds
