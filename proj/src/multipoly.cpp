#include "groth/multipoly.hpp"

#include <algorithm>
#include <set>

#include "groth/errors.hpp"

namespace groth {

namespace {

std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {
  std::set<std::string> unique(variables_.begin(), variables_.end());
  if (unique.size() != variables_.size()) throw Error(ErrorKind::InvalidArgument, "repeated variable name");
}

MultiPoly::MultiPoly(std::vector<std::string> variables, const TermMap& terms) : MultiPoly(std::move(variables)) {
  for (const auto& [e, c] : terms) {
    if (e.size() != variables_.size()) throw Error(ErrorKind::InvalidArgument, "exponent vector length mismatch");
    add_term(e, c);
  }
}

MultiPoly MultiPoly::constant(const Scalar& c) {
  MultiPoly p;
  p.add_term({}, c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p({name});
  p.add_term({1}, Scalar(1));
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::over(const std::vector<std::string>& order) const {
  std::vector<int> slot(variables_.size(), -1);
  for (size_t i = 0; i < variables_.size(); ++i) {
    auto it = std::find(order.begin(), order.end(), variables_[i]);
    if (it != order.end()) slot[i] = static_cast<int>(it - order.begin());
  }
  MultiPoly out(order);
  for (const auto& [e, c] : terms_) {
    Exponents ne(order.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (slot[i] < 0) throw Error(ErrorKind::InvalidArgument, "variable '" + variables_[i] + "' missing from order");
      ne[slot[i]] = e[i];
    }
    out.add_term(ne, c);
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  auto order = merged(variables_, rhs.variables_);
  if (order.size() != variables_.size()) *this = over(order);
  MultiPoly r = rhs.over(order);
  for (const auto& [e, c] : r.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this += -rhs; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  auto order = merged(variables_, rhs.variables_);
  MultiPoly a = over(order);
  MultiPoly b = rhs.over(order);
  MultiPoly out(order);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(order.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(Scalar(1));
  MultiPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Scalar MultiPoly::evaluate(const EvaluationPoint& point) const {
  std::vector<std::optional<Scalar>> values(variables_.size());
  for (size_t i = 0; i < variables_.size(); ++i) values[i] = point.find(variables_[i]);
  Scalar total;
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!values[i]) throw Error(ErrorKind::UnboundVariable, "no value for '" + variables_[i] + "'");
      term *= values[i]->pow(static_cast<int>(e[i]));
    }
    total += term;
  }
  return total;
}

unsigned MultiPoly::degree_in(const std::string& var) const {
  auto it = std::find(variables_.begin(), variables_.end(), var);
  if (it == variables_.end()) return 0;
  size_t idx = it - variables_.begin();
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

std::string MultiPoly::to_string(const std::vector<std::string>& order) const {
  if (terms_.empty()) return "0";
  MultiPoly p = over(order);
  std::string out;
  bool first = true;
  for (auto it = p.terms_.rbegin(); it != p.terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string monomial;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += order[i];
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    Scalar mag = c.sign() < 0 ? -c : c;
    std::string body;
    if (monomial.empty()) {
      body = mag.to_string();
    } else if (mag.is_one()) {
      body = monomial;
    } else {
      body = mag.to_string() + "*" + monomial;
    }
    if (first) {
      out = (c.sign() < 0 ? "-" : "") + body;
    } else {
      out += (c.sign() < 0 ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  auto order = merged(a.variables_, b.variables_);
  return a.over(order).terms_ == b.over(order).terms_;
}

MultiPoly divide_by_difference(const MultiPoly& p, const std::string& a, const std::string& b) {
  if (a == b) throw Error(ErrorKind::InvalidArgument, "division by " + a + " - " + b + " = 0");
  auto order = merged(merged(p.variables(), {a}), {b});
  MultiPoly q = p.over(order);
  size_t ia = std::find(order.begin(), order.end(), a) - order.begin();

  // Split into coefficients of a^d, each free of a.
  unsigned top = q.degree_in(a);
  std::vector<MultiPoly> coeff(top + 1, MultiPoly(order));
  for (const auto& [e, c] : q.terms()) {
    MultiPoly::Exponents stripped = e;
    stripped[ia] = 0;
    coeff[e[ia]] += MultiPoly(order, {{stripped, c}});
  }

  // Synthetic division by the root a = b.
  MultiPoly root = MultiPoly::variable(b);
  std::vector<MultiPoly> quot(top + 1, MultiPoly(order));
  MultiPoly carry(order);
  for (int d = static_cast<int>(top); d >= 1; --d) {
    carry = coeff[d] + root * carry;
    quot[d - 1] = carry;
  }
  MultiPoly remainder = coeff[0] + root * carry;
  if (!remainder.is_zero()) {
    throw Error(ErrorKind::InexactDivision, "remainder " + remainder.to_string() + " dividing by " + a + " - " + b);
  }

  MultiPoly out(order);
  MultiPoly var_a = MultiPoly::variable(a);
  for (int d = static_cast<int>(top) - 1; d >= 0; --d) out = out * var_a + quot[d];
  return out.over(order);
}

std::vector<Scalar> interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw Error(ErrorKind::InvalidArgument, "interpolation needs matching nonempty data");
  const size_t n = xs.size();
  // Newton divided differences.
  std::vector<Scalar> dd = ys;
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = n - 1; i >= level; --i) {
      Scalar gap = xs[i] - xs[i - level];
      if (gap.is_zero()) throw Error(ErrorKind::CoincidentVariables, "repeated interpolation node");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  // Horner-style expansion of the Newton form into monomial coefficients.
  std::vector<Scalar> coeffs(n);
  for (size_t k = n; k-- > 0;) {
    // coeffs <- coeffs * (x - xs[k]) + dd[k]
    for (size_t i = n - 1; i >= 1; --i) coeffs[i] = coeffs[i - 1] - xs[k] * coeffs[i];
    coeffs[0] = dd[k] - xs[k] * coeffs[0];
  }
  return coeffs;
}

}  // namespace groth
