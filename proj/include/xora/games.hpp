// Game representations and the composition algebra: XOR games as signed cost
// matrices, general binary games as predicate tables, conjunctions as
// structured lists of components.
#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace xora {

// Separator used when composing question labels into tuples; labels supplied
// by users must not contain it.
inline constexpr char kLabelSeparator = ',';

// A two-prover XOR game stored as its cost matrix A with
// A(s,t) = pi(s,t) * (-1)^{f(s,t)}.  pi and f are derived views:
// pi = |A|, f = [A < 0].  The absolute values of the entries sum to 1.
struct XorGame {
  std::vector<std::string> s_labels;
  std::vector<std::string> t_labels;
  Eigen::MatrixXd cost;

  Eigen::Index rows() const { return cost.rows(); }
  Eigen::Index cols() const { return cost.cols(); }
  double pi(Eigen::Index s, Eigen::Index t) const { return std::abs(cost(s, t)); }
  int f(Eigen::Index s, Eigen::Index t) const { return cost(s, t) < 0.0 ? 1 : 0; }
  Eigen::MatrixXd pi_matrix() const { return cost.cwiseAbs(); }

  /// Validates labels, shape, finiteness and that sum |A| = 1 within 1e-12.
  void validate() const;
};

// A two-prover game with finite answer sets and an arbitrary 0/1 predicate
// V(a,b|s,t).  The predicate is stored flat in [a][b][s][t] order.
struct BinaryGame {
  std::vector<std::string> s_labels;
  std::vector<std::string> t_labels;
  int a_arity = 2;
  int b_arity = 2;
  Eigen::MatrixXd pi;
  std::vector<std::uint8_t> predicate;  // size a_arity*b_arity*|S|*|T|

  Eigen::Index rows() const { return pi.rows(); }
  Eigen::Index cols() const { return pi.cols(); }
  std::uint8_t v(int a, int b, Eigen::Index s, Eigen::Index t) const {
    return predicate[((static_cast<std::size_t>(a) * b_arity + b) * rows() + s) * cols() + t];
  }
  std::uint8_t& v(int a, int b, Eigen::Index s, Eigen::Index t) {
    return predicate[((static_cast<std::size_t>(a) * b_arity + b) * rows() + s) * cols() + t];
  }

  void validate() const;
};

// Conjunction of XOR games, kept as the list of components.  The product
// question space and the per-coordinate win predicates are derived on demand;
// the exponentially large product tables are never materialized.
struct ConjunctionGame {
  std::vector<XorGame> components;

  int n() const { return static_cast<int>(components.size()); }
  /// Product question-space sizes (Alice, Bob).
  Eigen::Index rows() const;
  Eigen::Index cols() const;
  /// Number of answers per player: 2^n.
  int answers() const { return 1 << n(); }

  /// Decodes a product question index into per-component indices
  /// (big-endian: component 0 is the most significant digit).
  std::vector<Eigen::Index> split_row(Eigen::Index s) const;
  std::vector<Eigen::Index> split_col(Eigen::Index t) const;

  /// Joint question distribution value for a product pair.
  double pi(Eigen::Index s, Eigen::Index t) const;
  /// True iff answers a, b (bit j of each = component j, MSB-first) win every
  /// coordinate of the product pair (s, t).
  bool wins(int a, int b, Eigen::Index s, Eigen::Index t) const;
  /// Bitmask of target parities: bit j = f_j(s_j, t_j), MSB-first.
  int target_bits(Eigen::Index s, Eigen::Index t) const;

  void validate() const;
};

using Game = std::variant<XorGame, BinaryGame>;

// ---- construction and composition ----

/// Builds an XOR game from a probability table and a predicate bit table.
XorGame xor_game_from_tables(const Eigen::MatrixXd& pi, const Eigen::MatrixXi& f);

/// Builds an XOR game directly from a signed cost matrix; labels are
/// auto-generated ("0", "1", ...) unless provided.
XorGame xor_game_from_cost(const Eigen::MatrixXd& cost,
                           std::vector<std::string> s_labels = {},
                           std::vector<std::string> t_labels = {});

/// Sum modulo 2 of two XOR games: cost(g1 (+) g2) = cost(g1) (x) cost(g2).
XorGame xor_sum(const XorGame& g1, const XorGame& g2);

/// XOR of a subset of games (ascending index order); the empty subset yields
/// the trivial single-question game with cost [[1]] (bias 1 convention).
XorGame xor_sum_subset(const std::vector<XorGame>& games, std::uint32_t subset_mask);

ConjunctionGame conjunction(std::vector<XorGame> games);

/// Convex combination: block cost matrix [[0, lambda*A1], [(1-lambda)*A2, 0]].
XorGame convex_combine(double lambda, const XorGame& g1, const XorGame& g2);

/// Alice and Bob switch places: cost -> cost^T.
XorGame transpose(const XorGame& g);

/// Success probability of playing two games separately and XOR-ing the
/// outputs: w1*w2 + (1-w1)*(1-w2).
double parity_play_probability(double w1, double w2);

/// Built-in games: "chsh" (XOR) and "watrous" (binary).
Game catalog(const std::string& name);

/// Conjunction of two general binary games as an explicit BinaryGame
/// (answer indices compose mixed-radix, first component most significant).
BinaryGame binary_conjunction(const BinaryGame& g1, const BinaryGame& g2);

/// Non-fatal oddities worth surfacing (e.g. all-zero question rows/columns,
/// which make a question unreachable but do not invalidate the game).
std::vector<std::string> game_diagnostics(const XorGame& g);
std::vector<std::string> game_diagnostics(const BinaryGame& g);

// ---- mixed-radix index helpers shared by composition consumers ----

/// Encodes digits (MSB-first) against the given radices.
Eigen::Index mixed_radix_encode(const std::vector<Eigen::Index>& digits,
                                const std::vector<Eigen::Index>& radices);
std::vector<Eigen::Index> mixed_radix_decode(Eigen::Index value,
                                             const std::vector<Eigen::Index>& radices);

}  // namespace xora
