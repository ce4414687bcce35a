#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "domtriple/domination.hpp"

namespace domtriple {

/// The nine catalogued relations between γ, γ_t and γ_c.
///   B1  γ ≤ γ_t ≤ 2γ                 isolated-free
///   B2  γ ≤ γ_c ≤ 3γ − 2             connected
///   B3  γ_t ≤ γ_c                    connected, isolated-free, γ > 1
///   B4  γ_t ≤ γ + γ_c/2              connected, isolated-free, γ > 1
///   B5  γ_t ≤ 5γ − γ_c − 2           connected, isolated-free
///   B6  γ_t ≤ ⌈2(γ + γ_c)/3⌉         connected, isolated-free
///   B7  γ_t ≥ 2γ − γ_c               connected, isolated-free
///   B8  γ_t ≥ ⌈(3γ + 2γ_c)/6⌉        connected, isolated-free (conjectured)
///   B9  γ_t ≥ ⌈(3γ + γ_c)/6⌉         connected, isolated-free
enum class BoundId { B1 = 1, B2, B3, B4, B5, B6, B7, B8, B9 };

inline constexpr std::array<BoundId, 9> kAllBounds = {
    BoundId::B1, BoundId::B2, BoundId::B3, BoundId::B4, BoundId::B5,
    BoundId::B6, BoundId::B7, BoundId::B8, BoundId::B9};

std::string_view to_string(BoundId b);
/// "B1".."B9" (case-insensitive); nullopt otherwise.
std::optional<BoundId> parse_bound_id(std::string_view text);
/// Proved results; a violation of any of these means the solver is wrong.
constexpr bool is_theorem(BoundId b) { return b != BoundId::B8; }
constexpr int index_of(BoundId b) { return static_cast<int>(b) - 1; }

enum class BoundStatus { holds, tight, violated, not_applicable };
std::string_view to_string(BoundStatus s);

/// One side of an inequality. `slack` is rhs − lhs for an upper bound on the
/// left side and lhs − rhs for a lower bound, so a negative slack is a violation.
struct Comparison {
  long lhs = 0;
  long rhs = 0;
  long slack = 0;
  bool operator==(const Comparison&) const = default;
};

struct BoundVerdict {
  BoundId bound = BoundId::B1;
  BoundStatus status = BoundStatus::not_applicable;
  /// The headline inequality: the upper half of B1/B2, the whole relation
  /// otherwise. Unset when not applicable.
  std::optional<Comparison> main;
  /// Lower half of the chains B1 (γ ≤ γ_t) and B2 (γ ≤ γ_c).
  std::optional<Comparison> chain;
  /// B4 compares 2γ_t with 2γ + γ_c; lhs, rhs and slack are all doubled.
  bool doubled = false;

  /// tight means main.slack == 0 with nothing violated; chain tightness is
  /// reported separately.
  bool chain_tight() const { return chain && chain->slack == 0; }
};

BoundVerdict evaluate_bound(BoundId b, const ParameterTriple& t);
/// One verdict per bound, B1..B9 in order.
std::vector<BoundVerdict> evaluate_all(const ParameterTriple& t);

enum class LemmaStatus { confirmed, refuted, not_applicable };
std::string_view to_string(LemmaStatus s);
/// γ = 2 implies γ_t = γ_c on connected isolated-free graphs.
LemmaStatus check_lemma_gamma2(const ParameterTriple& t);

enum class Theorem9Case { case_a, case_b, neither };
std::string_view to_string(Theorem9Case c);
/// case_a: γ_t = γ_c; case_b: γ_t = γ_c − 1. Both settle B8.
Theorem9Case check_theorem9_cases(const ParameterTriple& t);

/// ⌈num/den⌉ for num >= 0, den > 0.
constexpr long ceil_div(long num, long den) { return (num + den - 1) / den; }

}  // namespace domtriple
