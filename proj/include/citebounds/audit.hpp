#pragma once

#include "citebounds/bounds.hpp"
#include "citebounds/enumerate.hpp"
#include "citebounds/error.hpp"
#include "citebounds/generator.hpp"
#include "citebounds/indices.hpp"
#include "citebounds/profile.hpp"
#include "citebounds/rational.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

namespace citebounds {

/// Every inequality the auditor checks.
enum class InequalityId {
  THM1_H,        ///< h >= floor((C - e^2) / P)
  THM2_H,        ///< h >= floor((g^2 - e^2) / g), g >= 1
  THM4_H,        ///< h >= floor((C - g^2) / (P - g)), P > g  (heuristic)
  LEMMA1_G,      ///< g <= ceil((h^2 + e^2) / h), h >= 1
  THM3_G,        ///< g <= h or (g - h)^2 <= e^2
  LEMMA2_G,      ///< g >= C / P  (heuristic)
  EQ11_TAIL,     ///< s_h_to_P <= (P - h) h
  EQ22_MID,      ///< s_h_to_g <= (g - h) h
  EQ45_TAIL,     ///< s_g_to_P <= (P - g) h
  G_GE_H,        ///< g >= h
  EQ4_IDENTITY,  ///< c_1 + ... + c_h == h^2 + e^2
};

inline constexpr std::size_t kInequalityCount = 11;

inline constexpr std::array<InequalityId, kInequalityCount> kAllInequalities = {
    InequalityId::THM1_H,   InequalityId::THM2_H,    InequalityId::THM4_H,   InequalityId::LEMMA1_G,
    InequalityId::THM3_G,   InequalityId::LEMMA2_G,  InequalityId::EQ11_TAIL, InequalityId::EQ22_MID,
    InequalityId::EQ45_TAIL, InequalityId::G_GE_H,   InequalityId::EQ4_IDENTITY,
};

inline std::string_view to_string(InequalityId id) {
  switch (id) {
    case InequalityId::THM1_H: return "THM1_H";
    case InequalityId::THM2_H: return "THM2_H";
    case InequalityId::THM4_H: return "THM4_H";
    case InequalityId::LEMMA1_G: return "LEMMA1_G";
    case InequalityId::THM3_G: return "THM3_G";
    case InequalityId::LEMMA2_G: return "LEMMA2_G";
    case InequalityId::EQ11_TAIL: return "EQ11_TAIL";
    case InequalityId::EQ22_MID: return "EQ22_MID";
    case InequalityId::EQ45_TAIL: return "EQ45_TAIL";
    case InequalityId::G_GE_H: return "G_GE_H";
    case InequalityId::EQ4_IDENTITY: return "EQ4_IDENTITY";
  }
  return "?";
}

inline InequalityId parse_inequality_id(std::string_view s) {
  for (auto id : kAllInequalities) {
    if (to_string(id) == s) return id;
  }
  throw InputError("unknown inequality id '" + std::string(s) + "'");
}

inline BoundKind kind_of(InequalityId id) {
  return id == InequalityId::THM4_H || id == InequalityId::LEMMA2_G ? BoundKind::heuristic : BoundKind::exact;
}

/// Everything derived from one profile, plus how far each inequality is overshot
/// (empty when it holds).
struct Evaluation {
  IndexReport report;
  PartialSums sums;
  BoundReport bounds;
  std::array<std::optional<Rational>, kInequalityCount> overshoot;

  const std::optional<Rational>& violation(InequalityId id) const { return overshoot[static_cast<std::size_t>(id)]; }
};

inline Evaluation evaluate(std::span<const Count> counts, GConvention convention) {
  Evaluation ev;
  ev.report = index_report(counts, convention);
  ev.sums = partial_sums(counts, ev.report);
  ev.bounds = bound_report(ev.report);
  const auto& r = ev.report;
  const auto& s = ev.sums;
  const auto& b = ev.bounds;
  auto set = [&](InequalityId id, Rational amount) { ev.overshoot[static_cast<std::size_t>(id)] = amount; };
  auto int_bound = [&](InequalityId id, const IntBound& bound) {
    if (bound.value && !bound.holds) set(id, Rational(-*bound.slack));
  };

  int_bound(InequalityId::THM1_H, b.thm1_lower_h);
  int_bound(InequalityId::THM2_H, b.thm2_lower_h);
  int_bound(InequalityId::THM4_H, b.thm4_lower_h);
  int_bound(InequalityId::LEMMA1_G, b.lemma1_upper_g);
  if (!b.thm3_exact_holds) set(InequalityId::THM3_G, Rational((r.g - r.h) * (r.g - r.h) - r.e_squared));
  if (!b.lemma2_lower_g.holds) set(InequalityId::LEMMA2_G, -b.lemma2_lower_g.slack);
  if (s.s_h_to_P > s.bound_Ph) set(InequalityId::EQ11_TAIL, Rational(s.s_h_to_P - s.bound_Ph));
  if (s.s_h_to_g > s.bound_gh_h) set(InequalityId::EQ22_MID, Rational(s.s_h_to_g - s.bound_gh_h));
  if (s.s_g_to_P > s.bound_Pg_h) set(InequalityId::EQ45_TAIL, Rational(s.s_g_to_P - s.bound_Pg_h));
  if (r.g < r.h) set(InequalityId::G_GE_H, Rational(r.h - r.g));
  const Count identity_gap = s.s_top - (r.h * r.h + r.e_squared);
  if (identity_gap != 0) set(InequalityId::EQ4_IDENTITY, Rational(identity_gap < 0 ? -identity_gap : identity_gap));
  return ev;
}

inline Evaluation evaluate(const CitationProfile& p, GConvention convention) { return evaluate(p.counts(), convention); }

struct InequalityAudit {
  InequalityId id = InequalityId::THM1_H;
  std::int64_t profiles_checked = 0;
  std::int64_t violations = 0;
  std::optional<std::vector<Count>> first_counterexample;  ///< canonical-order minimal violator
  std::optional<Rational> max_violation_slack;

  friend bool operator==(const InequalityAudit&, const InequalityAudit&) = default;
};

struct ExhaustiveSpace {
  std::int64_t p_max = 0;
  Count c_max = 0;
  friend bool operator==(const ExhaustiveSpace&, const ExhaustiveSpace&) = default;
};

/// Profiles with P uniform in 1..p_max and counts from PowerLawSampler(alpha, c_max).
struct RandomAuditConfig {
  double alpha = 2.0;
  Count c_max = 50;
  std::int64_t p_max = 30;
  std::uint64_t seed = 1;
  std::int64_t samples = 1000;
  friend bool operator==(const RandomAuditConfig&, const RandomAuditConfig&) = default;
};

struct AuditSummary {
  std::variant<ExhaustiveSpace, RandomAuditConfig> search_space;
  GConvention g_convention = GConvention::capped;
  std::array<InequalityAudit, kInequalityCount> per_id{};

  const InequalityAudit& operator[](InequalityId id) const { return per_id[static_cast<std::size_t>(id)]; }

  /// True when any definitional (exact) inequality was violated.
  bool exact_violation() const {
    return std::any_of(per_id.begin(), per_id.end(), [](const InequalityAudit& a) {
      return kind_of(a.id) == BoundKind::exact && a.violations > 0;
    });
  }

  friend bool operator==(const AuditSummary&, const AuditSummary&) = default;
};

/// Running per-inequality counts for one partition of the search space.
/// merge() is associative and commutative.
class AuditTally {
 public:
  AuditTally() {
    for (std::size_t i = 0; i < kInequalityCount; ++i) entries_[i].id = kAllInequalities[i];
  }

  void record(std::span<const Count> counts, const Evaluation& ev) {
    for (auto& e : entries_) {
      ++e.profiles_checked;
      const auto& over = ev.overshoot[static_cast<std::size_t>(e.id)];
      if (!over) continue;
      ++e.violations;
      if (!e.first_counterexample || canonical_less(counts, *e.first_counterexample)) {
        e.first_counterexample = std::vector<Count>(counts.begin(), counts.end());
      }
      if (!e.max_violation_slack || *e.max_violation_slack < *over) e.max_violation_slack = *over;
    }
  }

  void merge(const AuditTally& other) {
    for (std::size_t i = 0; i < kInequalityCount; ++i) {
      auto& a = entries_[i];
      const auto& b = other.entries_[i];
      a.profiles_checked += b.profiles_checked;
      a.violations += b.violations;
      if (b.first_counterexample &&
          (!a.first_counterexample || canonical_less(*b.first_counterexample, *a.first_counterexample))) {
        a.first_counterexample = b.first_counterexample;
      }
      if (b.max_violation_slack && (!a.max_violation_slack || *a.max_violation_slack < *b.max_violation_slack)) {
        a.max_violation_slack = b.max_violation_slack;
      }
    }
  }

  const std::array<InequalityAudit, kInequalityCount>& entries() const noexcept { return entries_; }

 private:
  std::array<InequalityAudit, kInequalityCount> entries_{};
};

struct AuditOptions {
  /// Worker threads; 0 picks hardware concurrency, 1 runs inline.
  unsigned threads = 1;
  /// Largest number of profiles an exhaustive run may visit.
  std::int64_t max_profiles = 200'000'000;
};

/// Checks every inequality on every profile of length 1..p_max with counts in 0..c_max.
/// The result does not depend on options.threads.
inline AuditSummary audit_exhaustive(std::int64_t p_max, Count c_max, GConvention convention,
                                     AuditOptions options = {}) {
  if (p_max < 1) throw InputError("p_max must be at least 1");
  if (c_max < 0) throw InputError("c_max must be non-negative");
  const auto size = count_profiles(p_max, c_max);
  if (!size) throw CapacityError(p_max, c_max, "profile count overflows 64 bits");
  if (*size > options.max_profiles) {
    throw CapacityError(p_max, c_max,
                        std::to_string(*size) + " profiles > budget " + std::to_string(options.max_profiles));
  }

  const auto cells = enumeration_cells(p_max, c_max);
  std::vector<AuditTally> per_cell(cells.size());
  auto run_cell = [&](std::size_t i) {
    auto& tally = per_cell[i];
    for_each_in_cell(cells[i], c_max,
                     [&](std::span<const Count> counts) { tally.record(counts, evaluate(counts, convention)); });
  };

  unsigned workers = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, cells.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) run_cell(i);
      });
    }
  }

  AuditTally total;
  for (const auto& t : per_cell) total.merge(t);
  return {ExhaustiveSpace{p_max, c_max}, convention, total.entries()};
}

/// Same checks over profiles sampled from a truncated power law; deterministic for a fixed seed.
inline AuditSummary audit_random(const RandomAuditConfig& config, GConvention convention) {
  if (config.samples < 1) throw InputError("samples must be at least 1");
  if (config.p_max < 1) throw InputError("p_max must be at least 1");
  PowerLawSampler sampler(config.alpha, config.c_max);
  std::mt19937_64 engine(config.seed);
  AuditTally tally;
  const auto span_p = static_cast<std::uint64_t>(config.p_max);
  for (std::int64_t s = 0; s < config.samples; ++s) {
    const auto papers = static_cast<std::int64_t>(1 + engine() % span_p);
    const auto profile = draw_profile(sampler, papers, engine);
    tally.record(profile.counts(), evaluate(profile.counts(), convention));
  }
  return {config, convention, tally.entries()};
}

/// Canonical-order first profile violating `id` within (p_max, c_max), if any.
inline std::optional<CitationProfile> minimal_counterexample(InequalityId id, std::int64_t p_max, Count c_max,
                                                             GConvention convention) {
  std::optional<CitationProfile> found;
  for (const auto& cell : enumeration_cells(p_max, c_max)) {
    for_each_in_cell(cell, c_max, [&](std::span<const Count> counts) {
      if (found) return;
      if (evaluate(counts, convention).violation(id)) {
        found = CitationProfile::from_sorted(std::vector<Count>(counts.begin(), counts.end()));
      }
    });
    if (found) break;
  }
  return found;
}

}  // namespace citebounds
