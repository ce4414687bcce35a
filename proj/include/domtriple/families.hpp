#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domtriple/domination.hpp"
#include "domtriple/graph.hpp"

namespace domtriple {

// Constructors. Each throws RangeError outside its validity range.

/// C_n, n >= 3; vertex i adjacent to i±1 mod n.
Graph cycle(int n);
/// P_n, n >= 1; vertices 0-1-...-(n-1).
Graph path(int n);
/// K_n, n >= 1.
Graph complete(int n);
/// K_{1,n}: center 0 with n leaves 1..n.
Graph star(int n);

/// G□H. Vertex (u, v) is index u·|V(h)| + v, so g supplies the rows.
Graph cartesian_product(const Graph& g, const Graph& h);
/// P_3□P_n and P_4□P_n, row-major with the short path as rows.
Graph grid_p3(int n);
Graph grid_p4(int n);

/// 15-vertex tree: spine a(0)–b(1)–c(2); pendant paths 0–3–4, 1–5–6, 2–7–8;
/// arms 1–9–10–11 and 1–12–13–14.
Graph figure_H();
/// Once-subdivided triangle plus the triangle on the subdivision vertices.
/// Corners 0, 1, 2 (degree 2); midpoints 3 (of 0–1), 4 (of 1–2), 5 (of 2–0).
Graph figure_Gprime();

// Closed forms. Each throws RangeError below its stated validity threshold.

int gamma_cycle(int n);    ///< ⌈n/3⌉, n >= 3
int gamma_c_cycle(int n);  ///< n − 2, n >= 3
int gamma_t_cycle(int n);  ///< n/2, (n+2)/2 or (n+1)/2 by n mod 4; n >= 3
int gamma_p4grid(int n);   ///< γ(P_4□P_n), n >= 1
int gamma_t_p4grid(int n); ///< γ_t(P_4□P_n), n >= 4
int gamma_c_p4grid(int n); ///< γ_c(P_4□P_n) = 2n − ⌊n/3⌋, n >= 4
int gamma_t_p3grid(int n); ///< n, n >= 3
int gamma_c_p3grid(int n); ///< n, n >= 3

enum class Family { cycle, path, complete, star, grid_p3, grid_p4, figure_H, figure_Gprime, cartesian_product };

/// A named graph. `factors` is used only by cartesian_product.
struct FamilySpec {
  Family family = Family::path;
  int n = 0;
  std::vector<FamilySpec> factors;

  /// Accepts "cycle:9", "grid_p4:5", "figure_H", "figure_Gprime" and
  /// products "path:3*cycle:4" (left factor supplies rows). Throws RangeError.
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
  Graph build() const;
};

/// True when `text` names a family rather than a graph6 code.
bool looks_like_family_spec(std::string_view text);

/// One closed-form-versus-solver comparison.
struct FormulaCheck {
  std::string graph;      ///< e.g. "grid_p4:5"
  std::string parameter;  ///< "gamma", "gamma_t" or "gamma_c"
  int expected = 0;       ///< closed form or published value
  std::optional<int> solved;  ///< absent if the solver ran out of time
  double seconds = 0;
  bool matches() const { return solved && *solved == expected; }
};

/// Cycles 3..12, P_3□P_n for 3 <= n <= 6, P_4□P_n for n in {4, 5} (γ also
/// for 1..3), and the two figure graphs. `budget_seconds` applies per solve.
std::vector<FormulaCheck> cross_check_families(double budget_seconds = 10.0);

}  // namespace domtriple
