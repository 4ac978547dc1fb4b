#include "groth/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "groth/errors.hpp"

namespace groth {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error(ErrorKind::InvalidArgument, "negative part in " + to_string());
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error(ErrorKind::InvalidArgument, to_string() + " is not weakly decreasing");
  }
}

Partition Partition::rectangle(int value, int count) { return Partition(std::vector<int>(std::max(count, 0), value)); }

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::followed_by(const Partition& tail) const {
  std::vector<int> all = parts_;
  all.insert(all.end(), tail.parts_.begin(), tail.parts_.end());
  return Partition(std::move(all));
}

std::string Partition::to_string() const { return "(" + to_list() + ")"; }

std::string Partition::to_list() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + std::to_string(parts_[i]);
  return out;
}

PositionVector::PositionVector(std::vector<int> positions, int chain_length)
    : positions_(std::move(positions)), chain_length_(chain_length) {
  for (size_t i = 0; i < positions_.size(); ++i) {
    if (positions_[i] < 1 || positions_[i] > chain_length_) {
      throw Error(ErrorKind::InvalidArgument, "position " + std::to_string(positions_[i]) + " outside [1," +
                                                  std::to_string(chain_length_) + "]");
    }
    if (i > 0 && positions_[i] <= positions_[i - 1]) {
      throw Error(ErrorKind::InvalidArgument, to_string() + " is not strictly increasing");
    }
  }
}

bool PositionVector::contains(int site) const {
  return std::binary_search(positions_.begin(), positions_.end(), site);
}

std::string PositionVector::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < positions_.size(); ++i) out += (i ? "," : "") + std::to_string(positions_[i]);
  return out + ")";
}

PositionVector positions_from_partition(const Partition& lambda, int chain_length) {
  const int n = lambda.length();
  if (lambda.largest() + n > chain_length + 1) {
    throw Error(ErrorKind::BoxOverflow, lambda.to_string() + " does not fit a chain of length " + std::to_string(chain_length));
  }
  std::vector<int> x(n);
  for (int i = 1; i <= n; ++i) x[i - 1] = lambda[n - i] + i;
  return PositionVector(std::move(x), chain_length);
}

Partition partition_from_positions(const PositionVector& x) {
  const int n = x.count();
  std::vector<int> parts(n);
  for (int j = 1; j <= n; ++j) parts[j - 1] = x[n - j] - (n - j + 1);
  return Partition(std::move(parts));
}

Partition build_mu(const Partition& lambda, int m, int n) {
  const int k = lambda.length();
  if (k > n || k > m) {
    throw Error(ErrorKind::InvalidArgument, "need k <= n and k <= m (k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                                                ", m=" + std::to_string(m) + ")");
  }
  if (lambda.largest() > m - k) {
    throw Error(ErrorKind::ProfileViolation, "lambda_1 = " + std::to_string(lambda.largest()) + " > m - k = " + std::to_string(m - k));
  }
  return Partition::rectangle(m - k, n - k).followed_by(lambda);
}

std::vector<SubsetSplit> k_subsets(int n, int k) {
  if (k < 0 || k > n) throw Error(ErrorKind::InvalidArgument, "k-subsets need 0 <= k <= N");
  std::vector<SubsetSplit> out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    SubsetSplit split;
    split.chosen = idx;
    for (int v = 1, pos = 0; v <= n; ++v) {
      if (pos < k && idx[pos] == v) {
        ++pos;
      } else {
        split.complement.push_back(v);
      }
    }
    out.push_back(std::move(split));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<PositionVector> all_positions(int count, int chain_length) {
  std::vector<PositionVector> out;
  for (auto& split : k_subsets(chain_length, count)) out.emplace_back(std::move(split.chosen), chain_length);
  return out;
}

std::vector<Partition> partitions_in_box(int length, int max_part) {
  std::vector<Partition> out;
  std::vector<int> parts(length);
  std::function<void(int, int)> fill = [&](int i, int bound) {
    if (i == length) {
      out.emplace_back(parts);
      return;
    }
    for (int v = bound; v >= 0; --v) {
      parts[i] = v;
      fill(i + 1, v);
    }
  };
  fill(0, max_part);
  return out;
}

Scalar variable_map(VariableMap direction, const Scalar& v) {
  switch (direction) {
    case VariableMap::ZToU:
      if (v.is_one()) throw Error(ErrorKind::SingularMap, "z = 1 has no u image");
      return (Scalar(1) - v).inverse();
    case VariableMap::UToZ:
      if (v.is_zero()) throw Error(ErrorKind::SingularMap, "u = 0 has no z image");
      return Scalar(1) - v.inverse();
    case VariableMap::AlphaToW:
    case VariableMap::WToAlpha:
      return Scalar(1) - v;
  }
  return v;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "not an integer list: '" + text + "'");
    }
  }
  return out;
}

Partition parse_partition(const std::string& text) { return Partition(parse_int_list(text)); }

}  // namespace groth
