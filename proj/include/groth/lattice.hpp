#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "groth/combinatorics.hpp"
#include "groth/scalar.hpp"

namespace groth {

/// Spin-chain basis string: bit (s-1) is the occupation of site s.
using Basis = std::uint32_t;

inline constexpr int kMaxChainLength = 16;

Basis occupation(const PositionVector& x);
/// "0110..." listing sites 1..length left to right.
std::string basis_string(Basis b, int length);

/// 4x4 weight matrix on W_a (x) W_b, basis |00>,|01>,|10>,|11> with the
/// first factor as the high bit.
class RMatrix {
 public:
  /// u - qw on |00>,|11>; q(u-w) and u-w on the diagonal of the one-particle
  /// block; (1-q)u at <01|R|10> and (1-q)w at <10|R|01>.
  static RMatrix six_vertex(const Scalar& u, const Scalar& w, const Scalar& q);
  /// Hard-coded q = 0 table, kept independent of six_vertex.
  static RMatrix five_vertex(const Scalar& u, const Scalar& w);

  /// <out|R|in> with out/in in 0..3.
  const Scalar& operator()(int out, int in) const { return entries_[out * 4 + in]; }
  /// <gamma delta|R|alpha beta>.
  const Scalar& element(int gamma, int delta, int alpha, int beta) const {
    return (*this)(2 * gamma + delta, 2 * alpha + beta);
  }

  /// Entry <gamma delta|R|alpha beta> vanishes unless alpha+beta = gamma+delta.
  bool satisfies_ice_rule() const;

  friend bool operator==(const RMatrix&, const RMatrix&) = default;

 private:
  std::array<Scalar, 16> entries_{};
};

/// Sparse vector (or covector) on the 2^L-dimensional chain; zero
/// amplitudes are never stored.
class SpinState {
 public:
  explicit SpinState(int length = 0);
  static SpinState vacuum(int length) { return basis(length, 0); }
  static SpinState basis(int length, Basis b);

  int length() const { return length_; }
  const std::map<Basis, Scalar>& amplitudes() const { return amplitudes_; }
  Scalar amplitude(Basis b) const;
  bool is_zero() const { return amplitudes_.empty(); }

  void add(Basis b, const Scalar& c);
  SpinState& operator+=(const SpinState& rhs);
  SpinState& operator*=(const Scalar& c);
  friend SpinState operator+(SpinState a, const SpinState& b) { return a += b; }
  friend SpinState operator*(const Scalar& c, SpinState a) { return a *= c; }

  /// Pairing <bra|this>; `bra` is read as a covector.
  Scalar pair_with(const SpinState& bra) const;

  friend bool operator==(const SpinState&, const SpinState&) = default;

 private:
  int length_ = 0;
  std::map<Basis, Scalar> amplitudes_;
};

/// Dual action of sigma^+ at `site`: <0|sigma^+ = <1|, <1|sigma^+ = 0.
SpinState raise_dual(const SpinState& bra, int site);

/// <Omega| prod_j sigma^+_{x_j}.
SpinState configuration_bra(const PositionVector& x);

/// Exact linear operator stored column by column (input basis string ->
/// sparse output column). Composition is ordinary matrix product.
class SpinOperator {
 public:
  explicit SpinOperator(int length = 0);
  static SpinOperator identity(int length);

  int length() const { return length_; }
  const std::map<Basis, Scalar>& column(Basis in) const { return columns_[in]; }
  Scalar element(Basis out, Basis in) const;
  void set_column(Basis in, const SpinState& image);

  SpinState apply(const SpinState& v) const;
  /// Covector times operator.
  SpinState apply_dual(const SpinState& bra) const;

  SpinOperator& operator+=(const SpinOperator& rhs);
  SpinOperator& operator*=(const Scalar& c);
  friend SpinOperator operator+(SpinOperator a, const SpinOperator& b) { return a += b; }
  friend SpinOperator operator-(SpinOperator a, const SpinOperator& b) { return a += Scalar(-1) * SpinOperator(b); }
  friend SpinOperator operator*(const Scalar& c, SpinOperator a) { return a *= c; }
  /// (a * b)(v) = a(b(v)).
  friend SpinOperator operator*(const SpinOperator& a, const SpinOperator& b);

  struct Difference {
    Basis out;
    Basis in;
    Scalar lhs;
    Scalar rhs;
  };
  /// First differing matrix element in (in, out) order, if any.
  std::optional<Difference> first_difference(const SpinOperator& other) const;

  friend bool operator==(const SpinOperator& a, const SpinOperator& b) { return !a.first_difference(b); }

 private:
  int length_ = 0;
  std::vector<std::map<Basis, Scalar>> columns_;
};

/// sigma^+|1> = |0>, sigma^-|0> = |1> acting at `site` (1-based).
SpinOperator sigma_plus(int length, int site);
SpinOperator sigma_minus(int length, int site);

/// R acting on sites (first_site, second_site) of a length-`length` chain,
/// with first_site as the R-matrix's first tensor factor.
SpinOperator embed(const RMatrix& r, int length, int first_site, int second_site);

enum class MonodromyEntry { A, B, C, D };

/// Product of R-matrices threaded through a two-dimensional auxiliary
/// space; site 1 is the rightmost factor and therefore acts first.
class Monodromy {
 public:
  /// T_a(u|w_1..w_L) = R_{a,L}(u,w_L) ... R_{a,1}(u,w_1); the auxiliary
  /// space is each R-matrix's first factor.
  static Monodromy row(const Scalar& u, std::span<const Scalar> w, const Scalar& q);
  /// Tbar_j(w|u_1..u_n) = R_{a_n j}(u_n,w) ... R_{a_1 j}(u_1,w); the
  /// auxiliary space j is each R-matrix's second factor.
  static Monodromy column(const Scalar& w, std::span<const Scalar> u, const Scalar& q);

  int length() const { return static_cast<int>(sites_.size()); }
  const std::vector<RMatrix>& sites() const { return sites_; }

  /// A = <0|T|0>, B = <0|T|1>, C = <1|T|0>, D = <1|T|1> applied to v
  /// without materializing the operator.
  SpinState apply(MonodromyEntry entry, const SpinState& v) const;
  SpinOperator element(MonodromyEntry entry) const;

 private:
  Monodromy(std::vector<RMatrix> sites, bool aux_first);

  std::vector<RMatrix> sites_;
  bool aux_first_ = true;
};

SpinOperator monodromy_element(MonodromyEntry entry, const Scalar& u, std::span<const Scalar> w, const Scalar& q);
SpinOperator barred_monodromy_element(MonodromyEntry entry, const Scalar& w, std::span<const Scalar> u, const Scalar& q);

/// <x_1..x_n| B(u_n) ... B(u_1) |Omega> on the chain of length w.size().
Scalar wavefunction(std::span<const Scalar> u, std::span<const Scalar> w, const PositionVector& x, const Scalar& q);

/// <1..1| (ordered A/B string) |0..0> on the w_bar.size()-site chain: row j
/// (applied in order j = 1..n) carries B(u_j) when j is in y, else A(u_j).
Scalar barred_wavefunction(std::span<const Scalar> w_bar, std::span<const Scalar> u, const PositionVector& y,
                           const Scalar& q);

/// Yang-Baxter sides R_ab(u,v) R_ac(u,w) R_bc(v,w) and
/// R_bc(v,w) R_ac(u,w) R_ab(u,v) as operators on three sites a=1, b=2, c=3.
std::pair<SpinOperator, SpinOperator> yang_baxter_sides(const Scalar& u, const Scalar& v, const Scalar& w, const Scalar& q);

}  // namespace groth
