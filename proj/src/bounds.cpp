#include "domtriple/bounds.hpp"

#include <cctype>

namespace domtriple {

std::string_view to_string(BoundId b) {
  static constexpr std::string_view names[] = {"B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "B9"};
  return names[index_of(b)];
}

std::optional<BoundId> parse_bound_id(std::string_view text) {
  if (text.size() != 2 || std::toupper(static_cast<unsigned char>(text[0])) != 'B') return std::nullopt;
  if (text[1] < '1' || text[1] > '9') return std::nullopt;
  return static_cast<BoundId>(text[1] - '0');
}

std::string_view to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::holds: return "holds";
    case BoundStatus::tight: return "tight";
    case BoundStatus::violated: return "violated";
    case BoundStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

std::string_view to_string(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::confirmed: return "confirmed";
    case LemmaStatus::refuted: return "refuted";
    case LemmaStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

std::string_view to_string(Theorem9Case c) {
  switch (c) {
    case Theorem9Case::case_a: return "case_a";
    case Theorem9Case::case_b: return "case_b";
    case Theorem9Case::neither: return "neither";
  }
  return "?";
}

namespace {

Comparison upper(long lhs, long rhs) { return {lhs, rhs, rhs - lhs}; }
Comparison lower(long lhs, long rhs) { return {lhs, rhs, lhs - rhs}; }

BoundVerdict finish(BoundVerdict v) {
  const bool broken = v.main->slack < 0 || (v.chain && v.chain->slack < 0);
  v.status = broken ? BoundStatus::violated
             : v.main->slack == 0 ? BoundStatus::tight
                                  : BoundStatus::holds;
  return v;
}

}  // namespace

BoundVerdict evaluate_bound(BoundId b, const ParameterTriple& t) {
  BoundVerdict v;
  v.bound = b;
  const long g = t.gamma;

  if (b == BoundId::B1) {
    if (!t.gamma_t) return v;
    v.main = upper(*t.gamma_t, 2 * g);
    v.chain = lower(*t.gamma_t, g);
    return finish(v);
  }
  if (b == BoundId::B2) {
    if (!t.gamma_c) return v;
    v.main = upper(*t.gamma_c, 3 * g - 2);
    v.chain = lower(*t.gamma_c, g);
    return finish(v);
  }

  // Everything else needs a connected isolated-free graph.
  if (!t.gamma_t || !t.gamma_c) return v;
  const long gt = *t.gamma_t;
  const long gc = *t.gamma_c;
  switch (b) {
    case BoundId::B3:
      if (g <= 1) return v;
      v.main = upper(gt, gc);
      break;
    case BoundId::B4:
      if (g <= 1) return v;
      v.main = upper(2 * gt, 2 * g + gc);
      v.doubled = true;
      break;
    case BoundId::B5: v.main = upper(gt, 5 * g - gc - 2); break;
    case BoundId::B6: v.main = upper(gt, ceil_div(2 * (g + gc), 3)); break;
    case BoundId::B7: v.main = lower(gt, 2 * g - gc); break;
    case BoundId::B8: v.main = lower(gt, ceil_div(3 * g + 2 * gc, 6)); break;
    case BoundId::B9: v.main = lower(gt, ceil_div(3 * g + gc, 6)); break;
    default: return v;
  }
  return finish(v);
}

std::vector<BoundVerdict> evaluate_all(const ParameterTriple& t) {
  std::vector<BoundVerdict> out;
  out.reserve(kAllBounds.size());
  for (auto b : kAllBounds) out.push_back(evaluate_bound(b, t));
  return out;
}

LemmaStatus check_lemma_gamma2(const ParameterTriple& t) {
  if (t.gamma != 2 || !t.gamma_t || !t.gamma_c) return LemmaStatus::not_applicable;
  return *t.gamma_t == *t.gamma_c ? LemmaStatus::confirmed : LemmaStatus::refuted;
}

Theorem9Case check_theorem9_cases(const ParameterTriple& t) {
  if (!t.gamma_t || !t.gamma_c) return Theorem9Case::neither;
  if (*t.gamma_t == *t.gamma_c) return Theorem9Case::case_a;
  if (*t.gamma_t == *t.gamma_c - 1) return Theorem9Case::case_b;
  return Theorem9Case::neither;
}

}  // namespace domtriple
