#pragma once

#include <string>
#include <vector>

#include "groth/scalar.hpp"

namespace groth {

/// Weakly decreasing sequence of nonnegative integers with an explicit
/// length: trailing zeros are significant (G depends on the variable count).
class Partition {
 public:
  Partition() = default;
  /// Throws Error(InvalidArgument) unless weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);

  /// (value^count).
  static Partition rectangle(int value, int count);

  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[i]; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int size() const;
  const std::vector<int>& parts() const { return parts_; }

  /// Concatenation; InvalidArgument if the result is not weakly decreasing.
  Partition followed_by(const Partition& tail) const;

  /// "(2,1,0)".
  std::string to_string() const;
  /// "2,1,0" (CLI and report parameter form).
  std::string to_list() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Strictly increasing particle positions 1 <= x_1 < ... < x_n <= L.
class PositionVector {
 public:
  PositionVector() = default;
  /// Throws Error(InvalidArgument) on non-increasing or out-of-range entries.
  PositionVector(std::vector<int> positions, int chain_length);

  int count() const { return static_cast<int>(positions_.size()); }
  int chain_length() const { return chain_length_; }
  int operator[](int i) const { return positions_[i]; }
  const std::vector<int>& positions() const { return positions_; }
  bool contains(int site) const;

  std::string to_string() const;

  friend bool operator==(const PositionVector&, const PositionVector&) = default;

 private:
  std::vector<int> positions_;
  int chain_length_ = 0;
};

/// A k-subset of [N] together with its complement, both sorted, 1-based.
struct SubsetSplit {
  std::vector<int> chosen;
  std::vector<int> complement;

  friend bool operator==(const SubsetSplit&, const SubsetSplit&) = default;
};

/// x_i = lambda_{n-i+1} + i. Throws Error(BoxOverflow) when lambda_1 + n > L + 1.
PositionVector positions_from_partition(const Partition& lambda, int chain_length);

/// Inverse of positions_from_partition: subtract 1..n and reverse.
Partition partition_from_positions(const PositionVector& x);

/// mu = ((m-k)^{n-k}, lambda_1, ..., lambda_k) with k = lambda.length().
/// Throws Error(ProfileViolation) when lambda_1 > m - k, and
/// Error(InvalidArgument) when k > n or k > m.
Partition build_mu(const Partition& lambda, int m, int n);

/// All k-subsets of [N] in lexicographic order of the chosen set.
std::vector<SubsetSplit> k_subsets(int n, int k);

/// All strictly increasing k-tuples in [1, L] in lexicographic order.
std::vector<PositionVector> all_positions(int count, int chain_length);

/// Partitions with `length` parts (trailing zeros included), each part at
/// most `max_part`, in reverse lexicographic order.
std::vector<Partition> partitions_in_box(int length, int max_part);

enum class VariableMap { ZToU, UToZ, AlphaToW, WToAlpha };

/// z -> u = 1/(1-z), u -> z = 1 - 1/u, alpha -> w = 1 - alpha, w -> alpha = 1 - w.
/// Throws Error(SingularMap) at z = 1 or u = 0.
Scalar variable_map(VariableMap direction, const Scalar& v);

/// Parses "2,1,0" (empty string -> empty partition).
Partition parse_partition(const std::string& text);

std::vector<int> parse_int_list(const std::string& text);

}  // namespace groth
