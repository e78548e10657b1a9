#include "xora/games.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <stdexcept>

namespace xora {

namespace {

constexpr double kDistributionTol = 1e-12;

std::vector<std::string> default_labels(Eigen::Index n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

void check_labels(const std::vector<std::string>& labels, Eigen::Index expected,
                  const char* side) {
  if (static_cast<Eigen::Index>(labels.size()) != expected) {
    throw std::invalid_argument(std::string("game: ") + side + " label count " +
                                std::to_string(labels.size()) + " does not match dimension " +
                                std::to_string(expected));
  }
  for (const auto& l : labels) {
    if (l.find(kLabelSeparator) != std::string::npos) {
      throw std::invalid_argument(std::string("game: label '") + l +
                                  "' contains the reserved separator '" + kLabelSeparator + "'");
    }
  }
}

std::vector<std::string> join_labels(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + kLabelSeparator + y);
  return out;
}

}  // namespace

void XorGame::validate() const {
  if (cost.rows() < 1 || cost.cols() < 1) {
    throw std::invalid_argument("XorGame: cost matrix must have dimensions >= 1");
  }
  if (!cost.allFinite()) {
    throw std::invalid_argument("XorGame: cost matrix has non-finite entries");
  }
  check_labels(s_labels, cost.rows(), "Alice");
  check_labels(t_labels, cost.cols(), "Bob");
  const double abs_sum = cost.cwiseAbs().sum();
  if (std::abs(abs_sum - 1.0) > kDistributionTol) {
    throw std::invalid_argument("XorGame: |cost| entries sum to " + std::to_string(abs_sum) +
                                ", expected 1");
  }
}

void BinaryGame::validate() const {
  if (pi.rows() < 1 || pi.cols() < 1) {
    throw std::invalid_argument("BinaryGame: pi must have dimensions >= 1");
  }
  if (a_arity < 1 || b_arity < 1) {
    throw std::invalid_argument("BinaryGame: answer arities must be >= 1");
  }
  if (!pi.allFinite() || pi.minCoeff() < 0.0) {
    throw std::invalid_argument("BinaryGame: pi entries must be finite and nonnegative");
  }
  check_labels(s_labels, pi.rows(), "Alice");
  check_labels(t_labels, pi.cols(), "Bob");
  if (std::abs(pi.sum() - 1.0) > kDistributionTol) {
    throw std::invalid_argument("BinaryGame: pi sums to " + std::to_string(pi.sum()) +
                                ", expected 1");
  }
  const std::size_t expected =
      static_cast<std::size_t>(a_arity) * b_arity * pi.rows() * pi.cols();
  if (predicate.size() != expected) {
    throw std::invalid_argument("BinaryGame: predicate table has wrong size");
  }
  for (auto e : predicate) {
    if (e != 0 && e != 1) {
      throw std::invalid_argument("BinaryGame: predicate entries must be 0 or 1");
    }
  }
}

Eigen::Index ConjunctionGame::rows() const {
  Eigen::Index r = 1;
  for (const auto& g : components) r *= g.rows();
  return r;
}

Eigen::Index ConjunctionGame::cols() const {
  Eigen::Index c = 1;
  for (const auto& g : components) c *= g.cols();
  return c;
}

std::vector<Eigen::Index> ConjunctionGame::split_row(Eigen::Index s) const {
  std::vector<Eigen::Index> radices;
  radices.reserve(components.size());
  for (const auto& g : components) radices.push_back(g.rows());
  return mixed_radix_decode(s, radices);
}

std::vector<Eigen::Index> ConjunctionGame::split_col(Eigen::Index t) const {
  std::vector<Eigen::Index> radices;
  radices.reserve(components.size());
  for (const auto& g : components) radices.push_back(g.cols());
  return mixed_radix_decode(t, radices);
}

double ConjunctionGame::pi(Eigen::Index s, Eigen::Index t) const {
  const auto ss = split_row(s);
  const auto ts = split_col(t);
  double p = 1.0;
  for (int j = 0; j < n(); ++j) p *= components[j].pi(ss[j], ts[j]);
  return p;
}

int ConjunctionGame::target_bits(Eigen::Index s, Eigen::Index t) const {
  const auto ss = split_row(s);
  const auto ts = split_col(t);
  int bits = 0;
  for (int j = 0; j < n(); ++j) {
    bits = (bits << 1) | components[j].f(ss[j], ts[j]);
  }
  return bits;
}

bool ConjunctionGame::wins(int a, int b, Eigen::Index s, Eigen::Index t) const {
  return (a ^ b) == target_bits(s, t);
}

void ConjunctionGame::validate() const {
  if (components.empty()) {
    throw std::invalid_argument("ConjunctionGame: component list must be nonempty");
  }
  for (const auto& g : components) g.validate();
}

XorGame xor_game_from_tables(const Eigen::MatrixXd& pi, const Eigen::MatrixXi& f) {
  if (pi.rows() != f.rows() || pi.cols() != f.cols()) {
    throw std::invalid_argument("xor_game_from_tables: pi and f shapes differ");
  }
  if (pi.size() > 0 && pi.minCoeff() < 0.0) {
    throw std::invalid_argument("xor_game_from_tables: pi has negative entries");
  }
  Eigen::MatrixXd cost(pi.rows(), pi.cols());
  for (Eigen::Index s = 0; s < pi.rows(); ++s) {
    for (Eigen::Index t = 0; t < pi.cols(); ++t) {
      const int bit = f(s, t);
      if (bit != 0 && bit != 1) {
        throw std::invalid_argument("xor_game_from_tables: f entries must be 0 or 1");
      }
      cost(s, t) = bit ? -pi(s, t) : pi(s, t);
    }
  }
  return xor_game_from_cost(std::move(cost));
}

XorGame xor_game_from_cost(const Eigen::MatrixXd& cost, std::vector<std::string> s_labels,
                           std::vector<std::string> t_labels) {
  XorGame g;
  g.cost = cost;
  g.s_labels = s_labels.empty() ? default_labels(cost.rows()) : std::move(s_labels);
  g.t_labels = t_labels.empty() ? default_labels(cost.cols()) : std::move(t_labels);
  g.validate();
  return g;
}

XorGame xor_sum(const XorGame& g1, const XorGame& g2) {
  g1.validate();
  g2.validate();
  XorGame g;
  g.cost = Eigen::kroneckerProduct(g1.cost, g2.cost);
  g.s_labels = join_labels(g1.s_labels, g2.s_labels);
  g.t_labels = join_labels(g1.t_labels, g2.t_labels);
  g.validate();
  return g;
}

XorGame xor_sum_subset(const std::vector<XorGame>& games, std::uint32_t subset_mask) {
  XorGame acc = xor_game_from_cost(Eigen::MatrixXd::Ones(1, 1));
  for (std::size_t j = 0; j < games.size(); ++j) {
    if (subset_mask & (1u << j)) acc = xor_sum(acc, games[j]);
  }
  return acc;
}

ConjunctionGame conjunction(std::vector<XorGame> games) {
  ConjunctionGame c{std::move(games)};
  c.validate();
  return c;
}

XorGame convex_combine(double lambda, const XorGame& g1, const XorGame& g2) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("convex_combine: lambda must lie in [0, 1]");
  }
  g1.validate();
  g2.validate();
  const Eigen::Index m1 = g1.rows(), n1 = g1.cols();
  const Eigen::Index m2 = g2.rows(), n2 = g2.cols();
  // Block cost matrix [[0, lambda*A1], [(1-lambda)*A2, 0]]; Alice rows are
  // S1 then T2', Bob columns are S2' then T1 (the two sub-games keep their
  // own question sets, players learn which game is on from the block).
  Eigen::MatrixXd cost = Eigen::MatrixXd::Zero(m1 + m2, n2 + n1);
  cost.topRightCorner(m1, n1) = lambda * g1.cost;
  cost.bottomLeftCorner(m2, n2) = (1.0 - lambda) * g2.cost;

  XorGame g;
  g.cost = std::move(cost);
  g.s_labels.reserve(static_cast<std::size_t>(m1 + m2));
  for (const auto& l : g1.s_labels) g.s_labels.push_back("a" + l);
  for (const auto& l : g2.s_labels) g.s_labels.push_back("b" + l);
  g.t_labels.reserve(static_cast<std::size_t>(n2 + n1));
  for (const auto& l : g2.t_labels) g.t_labels.push_back("b" + l);
  for (const auto& l : g1.t_labels) g.t_labels.push_back("a" + l);
  g.validate();
  return g;
}

XorGame transpose(const XorGame& g) {
  g.validate();
  XorGame out;
  out.cost = g.cost.transpose();
  out.s_labels = g.t_labels;
  out.t_labels = g.s_labels;
  return out;
}

double parity_play_probability(double w1, double w2) {
  if (!(w1 >= 0.0 && w1 <= 1.0 && w2 >= 0.0 && w2 <= 1.0)) {
    throw std::invalid_argument("parity_play_probability: arguments must lie in [0, 1]");
  }
  return w1 * w2 + (1.0 - w1) * (1.0 - w2);
}

Game catalog(const std::string& name) {
  if (name == "chsh") {
    // S = T = {0,1}, uniform pi, f(s,t) = s AND t.
    Eigen::MatrixXd pi = Eigen::MatrixXd::Constant(2, 2, 0.25);
    Eigen::MatrixXi f(2, 2);
    f << 0, 0, 0, 1;
    return xor_game_from_tables(pi, f);
  }
  if (name == "watrous") {
    // Questions uniform on {(0,0),(0,1),(1,0)}; accept iff s|a != t|b.
    BinaryGame g;
    g.s_labels = {"0", "1"};
    g.t_labels = {"0", "1"};
    g.a_arity = g.b_arity = 2;
    g.pi = Eigen::MatrixXd::Zero(2, 2);
    g.pi(0, 0) = g.pi(0, 1) = g.pi(1, 0) = 1.0 / 3.0;
    g.predicate.assign(16, 0);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int s = 0; s < 2; ++s)
          for (int t = 0; t < 2; ++t) g.v(a, b, s, t) = ((s | a) != (t | b)) ? 1 : 0;
    g.validate();
    return g;
  }
  throw std::invalid_argument("catalog: unknown game '" + name + "' (known: chsh, watrous)");
}

BinaryGame binary_conjunction(const BinaryGame& g1, const BinaryGame& g2) {
  g1.validate();
  g2.validate();
  BinaryGame g;
  g.s_labels = join_labels(g1.s_labels, g2.s_labels);
  g.t_labels = join_labels(g1.t_labels, g2.t_labels);
  g.a_arity = g1.a_arity * g2.a_arity;
  g.b_arity = g1.b_arity * g2.b_arity;
  g.pi = Eigen::kroneckerProduct(g1.pi, g2.pi);
  g.predicate.assign(
      static_cast<std::size_t>(g.a_arity) * g.b_arity * g.pi.rows() * g.pi.cols(), 0);
  for (int a1 = 0; a1 < g1.a_arity; ++a1)
    for (int a2 = 0; a2 < g2.a_arity; ++a2)
      for (int b1 = 0; b1 < g1.b_arity; ++b1)
        for (int b2 = 0; b2 < g2.b_arity; ++b2)
          for (Eigen::Index s1 = 0; s1 < g1.rows(); ++s1)
            for (Eigen::Index s2 = 0; s2 < g2.rows(); ++s2)
              for (Eigen::Index t1 = 0; t1 < g1.cols(); ++t1)
                for (Eigen::Index t2 = 0; t2 < g2.cols(); ++t2) {
                  g.v(a1 * g2.a_arity + a2, b1 * g2.b_arity + b2, s1 * g2.rows() + s2,
                      t1 * g2.cols() + t2) =
                      g1.v(a1, b1, s1, t1) & g2.v(a2, b2, s2, t2);
                }
  g.validate();
  return g;
}

namespace {

template <typename GameT>
std::vector<std::string> zero_line_diagnostics(const GameT& g, const Eigen::MatrixXd& pi) {
  std::vector<std::string> notes;
  for (Eigen::Index s = 0; s < pi.rows(); ++s) {
    if (pi.row(s).cwiseAbs().sum() == 0.0) {
      notes.push_back("question '" + g.s_labels[static_cast<std::size_t>(s)] +
                      "' is never asked of Alice (all-zero row)");
    }
  }
  for (Eigen::Index t = 0; t < pi.cols(); ++t) {
    if (pi.col(t).cwiseAbs().sum() == 0.0) {
      notes.push_back("question '" + g.t_labels[static_cast<std::size_t>(t)] +
                      "' is never asked of Bob (all-zero column)");
    }
  }
  return notes;
}

}  // namespace

std::vector<std::string> game_diagnostics(const XorGame& g) {
  return zero_line_diagnostics(g, g.cost.cwiseAbs());
}

std::vector<std::string> game_diagnostics(const BinaryGame& g) {
  return zero_line_diagnostics(g, g.pi);
}

Eigen::Index mixed_radix_encode(const std::vector<Eigen::Index>& digits,
                                const std::vector<Eigen::Index>& radices) {
  if (digits.size() != radices.size()) {
    throw std::invalid_argument("mixed_radix_encode: digit/radix count mismatch");
  }
  Eigen::Index v = 0;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    if (digits[j] < 0 || digits[j] >= radices[j]) {
      throw std::invalid_argument("mixed_radix_encode: digit out of range");
    }
    v = v * radices[j] + digits[j];
  }
  return v;
}

std::vector<Eigen::Index> mixed_radix_decode(Eigen::Index value,
                                             const std::vector<Eigen::Index>& radices) {
  std::vector<Eigen::Index> digits(radices.size(), 0);
  for (std::size_t j = radices.size(); j-- > 0;) {
    digits[j] = value % radices[j];
    value /= radices[j];
  }
  if (value != 0) {
    throw std::invalid_argument("mixed_radix_decode: value out of range");
  }
  return digits;
}

}  // namespace xora
