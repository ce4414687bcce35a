#include "domtriple/families.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <string>
#include <tuple>

#include "domtriple/error.hpp"

namespace domtriple {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw RangeError(what);
}

std::string arg(int n) { return std::to_string(n); }

}  // namespace

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3, got " + arg(n));
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, es);
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1, got " + arg(n));
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1, got " + arg(n));
  std::vector<Edge> es;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) es.emplace_back(i, j);
  return Graph(n, es);
}

Graph star(int n) {
  require(n >= 1 && n < kMaxVertices, "star needs 1 <= n <= 63 leaves, got " + arg(n));
  std::vector<Edge> es;
  for (int leaf = 1; leaf <= n; ++leaf) es.emplace_back(0, leaf);
  return Graph(n + 1, es);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int rows = g.order();
  const int cols = h.order();
  require(rows * cols <= kMaxVertices,
          "product of " + arg(rows) + " and " + arg(cols) + " vertices exceeds 64");
  std::vector<Edge> es;
  for (int u = 0; u < rows; ++u) {
    for (auto [a, b] : h.edges()) es.emplace_back(u * cols + a, u * cols + b);
  }
  for (auto [a, b] : g.edges()) {
    for (int v = 0; v < cols; ++v) es.emplace_back(a * cols + v, b * cols + v);
  }
  return Graph(rows * cols, es);
}

Graph grid_p3(int n) { return cartesian_product(path(3), path(n)); }
Graph grid_p4(int n) { return cartesian_product(path(4), path(n)); }

Graph figure_H() {
  return Graph(15, {{0, 1}, {1, 2},                       // spine a–b–c
                    {0, 3}, {3, 4},                       // below a
                    {1, 5}, {5, 6},                       // below b
                    {2, 7}, {7, 8},                       // below c
                    {1, 9}, {9, 10}, {10, 11},            // right arm at b
                    {1, 12}, {12, 13}, {13, 14}});        // left arm at b
}

Graph figure_Gprime() {
  return Graph(6, {{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0},  // subdivided sides
                   {3, 4}, {4, 5}, {5, 3}});                        // inner triangle
}

int gamma_cycle(int n) {
  require(n >= 3, "gamma_cycle needs n >= 3, got " + arg(n));
  return (n + 2) / 3;
}

int gamma_c_cycle(int n) {
  require(n >= 3, "gamma_c_cycle needs n >= 3, got " + arg(n));
  return n - 2;
}

int gamma_t_cycle(int n) {
  require(n >= 3, "gamma_t_cycle needs n >= 3, got " + arg(n));
  switch (n % 4) {
    case 0: return n / 2;
    case 2: return (n + 2) / 2;
    default: return (n + 1) / 2;
  }
}

int gamma_p4grid(int n) {
  require(n >= 1, "gamma_p4grid needs n >= 1, got " + arg(n));
  switch (n) {
    case 1: case 2: case 3: case 5: case 6: case 9: return n + 1;
    default: return n;
  }
}

int gamma_t_p4grid(int n) {
  require(n >= 4, "gamma_t_p4grid needs n >= 4, got " + arg(n));
  const int base = (6 * n + 8) / 5;
  const int r = n % 5;
  return (r == 0 || r == 3) ? base + 1 : base;
}

int gamma_c_p4grid(int n) {
  require(n >= 4, "gamma_c_p4grid needs n >= 4, got " + arg(n));
  return 2 * n - n / 3;
}

int gamma_t_p3grid(int n) {
  require(n >= 3, "gamma_t_p3grid needs n >= 3, got " + arg(n));
  return n;
}

int gamma_c_p3grid(int n) {
  require(n >= 3, "gamma_c_p3grid needs n >= 3, got " + arg(n));
  return n;
}

namespace {

struct NamedFamily {
  std::string_view name;
  Family family;
  bool sized;
};

constexpr NamedFamily kFamilies[] = {
    {"cycle", Family::cycle, true},       {"path", Family::path, true},
    {"complete", Family::complete, true}, {"star", Family::star, true},
    {"grid_p3", Family::grid_p3, true},   {"grid_p4", Family::grid_p4, true},
    {"figure_H", Family::figure_H, false}, {"figure_Gprime", Family::figure_Gprime, false},
};

FamilySpec parse_factor(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  for (const auto& f : kFamilies) {
    if (f.name != name) continue;
    FamilySpec spec;
    spec.family = f.family;
    if (!f.sized) {
      require(colon == std::string_view::npos, std::string(name) + " takes no size");
      return spec;
    }
    require(colon != std::string_view::npos, std::string(name) + " needs a size, e.g. " +
                                                 std::string(name) + ":5");
    const std::string_view digits = text.substr(colon + 1);
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), spec.n);
    require(ec == std::errc{} && end == digits.data() + digits.size(),
            "bad size in family spec '" + std::string(text) + "'");
    return spec;
  }
  throw RangeError("unknown family '" + std::string(name) + "'");
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto star_pos = text.find('*');
  if (star_pos == std::string_view::npos) return parse_factor(text);
  FamilySpec spec;
  spec.family = Family::cartesian_product;
  spec.factors.push_back(parse_factor(text.substr(0, star_pos)));
  spec.factors.push_back(parse(text.substr(star_pos + 1)));
  return spec;
}

std::string FamilySpec::to_string() const {
  if (family == Family::cartesian_product) {
    return factors.at(0).to_string() + "*" + factors.at(1).to_string();
  }
  for (const auto& f : kFamilies) {
    if (f.family == family) return f.sized ? std::string(f.name) + ":" + arg(n) : std::string(f.name);
  }
  return "?";
}

Graph FamilySpec::build() const {
  switch (family) {
    case Family::cycle: return cycle(n);
    case Family::path: return path(n);
    case Family::complete: return complete(n);
    case Family::star: return star(n);
    case Family::grid_p3: return grid_p3(n);
    case Family::grid_p4: return grid_p4(n);
    case Family::figure_H: return figure_H();
    case Family::figure_Gprime: return figure_Gprime();
    case Family::cartesian_product:
      require(factors.size() == 2, "cartesian product needs two factors");
      return cartesian_product(factors[0].build(), factors[1].build());
  }
  throw RangeError("unknown family");
}

bool looks_like_family_spec(std::string_view text) {
  const auto name = text.substr(0, text.find_first_of(":*"));
  for (const auto& f : kFamilies) {
    if (f.name == name) return true;
  }
  return false;
}

std::vector<FormulaCheck> cross_check_families(double budget_seconds) {
  std::vector<FormulaCheck> out;
  auto run = [&](const std::string& label, const Graph& g, Variant variant,
                 std::string_view parameter, int expected) {
    FormulaCheck check;
    check.graph = label;
    check.parameter = parameter;
    check.expected = expected;
    const auto start = std::chrono::steady_clock::now();
    try {
      check.solved = minimum_set(variant, g, Deadline::after(std::chrono::duration<double>(budget_seconds))).value;
    } catch (const SearchTimeout&) {
    }
    check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(check));
  };

  for (int n = 3; n <= 12; ++n) {
    const auto label = "cycle:" + arg(n);
    const Graph g = cycle(n);
    run(label, g, Variant::plain, "gamma", gamma_cycle(n));
    run(label, g, Variant::total, "gamma_t", gamma_t_cycle(n));
    run(label, g, Variant::connected, "gamma_c", gamma_c_cycle(n));
  }
  for (int n = 3; n <= 6; ++n) {
    const auto label = "grid_p3:" + arg(n);
    const Graph g = grid_p3(n);
    run(label, g, Variant::total, "gamma_t", gamma_t_p3grid(n));
    run(label, g, Variant::connected, "gamma_c", gamma_c_p3grid(n));
  }
  for (int n = 1; n <= 5; ++n) {
    const auto label = "grid_p4:" + arg(n);
    const Graph g = grid_p4(n);
    run(label, g, Variant::plain, "gamma", gamma_p4grid(n));
    if (n >= 4) {
      run(label, g, Variant::total, "gamma_t", gamma_t_p4grid(n));
      run(label, g, Variant::connected, "gamma_c", gamma_c_p4grid(n));
    }
  }
  for (auto [label, g, triple] : {std::tuple{"figure_H", figure_H(), std::array{5, 10, 10}},
                                  std::tuple{"figure_Gprime", figure_Gprime(), std::array{2, 2, 2}}}) {
    run(label, g, Variant::plain, "gamma", triple[0]);
    run(label, g, Variant::total, "gamma_t", triple[1]);
    run(label, g, Variant::connected, "gamma_c", triple[2]);
  }
  return out;
}

}  // namespace domtriple
