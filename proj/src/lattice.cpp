#include "groth/lattice.hpp"

#include "groth/errors.hpp"

namespace groth {

namespace {

void check_length(int length) {
  if (length < 0 || length > kMaxChainLength) {
    throw Error(ErrorKind::InvalidArgument, "chain length " + std::to_string(length) + " outside [0," +
                                                std::to_string(kMaxChainLength) + "]");
  }
}

void check_same_length(int a, int b) {
  if (a != b) throw Error(ErrorKind::InvalidArgument, "chain lengths differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

int bit(Basis b, int index) { return static_cast<int>((b >> index) & 1u); }

// (aux_in, aux_out) for each monodromy entry.
std::pair<int, int> aux_boundary(MonodromyEntry entry) {
  switch (entry) {
    case MonodromyEntry::A: return {0, 0};
    case MonodromyEntry::B: return {1, 0};
    case MonodromyEntry::C: return {0, 1};
    case MonodromyEntry::D: return {1, 1};
  }
  return {0, 0};
}

}  // namespace

Basis occupation(const PositionVector& x) {
  Basis b = 0;
  for (int p : x.positions()) b |= Basis{1} << (p - 1);
  return b;
}

std::string basis_string(Basis b, int length) {
  std::string out(length, '0');
  for (int s = 0; s < length; ++s) {
    if (bit(b, s)) out[s] = '1';
  }
  return out;
}

// ---------------------------------------------------------------------------
// RMatrix

RMatrix RMatrix::six_vertex(const Scalar& u, const Scalar& w, const Scalar& q) {
  RMatrix r;
  const Scalar one(1);
  r.entries_[0 * 4 + 0] = u - q * w;
  r.entries_[1 * 4 + 1] = q * (u - w);
  r.entries_[1 * 4 + 2] = (one - q) * u;
  r.entries_[2 * 4 + 1] = (one - q) * w;
  r.entries_[2 * 4 + 2] = u - w;
  r.entries_[3 * 4 + 3] = u - q * w;
  return r;
}

RMatrix RMatrix::five_vertex(const Scalar& u, const Scalar& w) {
  RMatrix r;
  r.entries_[0] = u;
  r.entries_[6] = u;
  r.entries_[9] = w;
  r.entries_[10] = u - w;
  r.entries_[15] = u;
  return r;
}

bool RMatrix::satisfies_ice_rule() const {
  for (int out = 0; out < 4; ++out) {
    for (int in = 0; in < 4; ++in) {
      int out_particles = (out >> 1) + (out & 1);
      int in_particles = (in >> 1) + (in & 1);
      if (out_particles != in_particles && !(*this)(out, in).is_zero()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// SpinState

SpinState::SpinState(int length) : length_(length) { check_length(length); }

SpinState SpinState::basis(int length, Basis b) {
  SpinState s(length);
  s.add(b, Scalar(1));
  return s;
}

Scalar SpinState::amplitude(Basis b) const {
  auto it = amplitudes_.find(b);
  return it == amplitudes_.end() ? Scalar(0) : it->second;
}

void SpinState::add(Basis b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = amplitudes_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) amplitudes_.erase(it);
  }
}

SpinState& SpinState::operator+=(const SpinState& rhs) {
  check_same_length(length_, rhs.length_);
  for (const auto& [b, c] : rhs.amplitudes_) add(b, c);
  return *this;
}

SpinState& SpinState::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    amplitudes_.clear();
    return *this;
  }
  for (auto& [b, a] : amplitudes_) a *= c;
  return *this;
}

Scalar SpinState::pair_with(const SpinState& bra) const {
  check_same_length(length_, bra.length_);
  Scalar total;
  for (const auto& [b, c] : bra.amplitudes_) {
    auto it = amplitudes_.find(b);
    if (it != amplitudes_.end()) total += c * it->second;
  }
  return total;
}

SpinState raise_dual(const SpinState& bra, int site) {
  if (site < 1 || site > bra.length()) throw Error(ErrorKind::InvalidArgument, "site out of range");
  const Basis mask = Basis{1} << (site - 1);
  SpinState out(bra.length());
  for (const auto& [b, c] : bra.amplitudes()) {
    if (!(b & mask)) out.add(b | mask, c);
  }
  return out;
}

SpinState configuration_bra(const PositionVector& x) {
  SpinState bra = SpinState::vacuum(x.chain_length());
  for (int p : x.positions()) bra = raise_dual(bra, p);
  return bra;
}

// ---------------------------------------------------------------------------
// SpinOperator

SpinOperator::SpinOperator(int length) : length_(length) {
  check_length(length);
  columns_.resize(std::size_t{1} << length);
}

SpinOperator SpinOperator::identity(int length) {
  SpinOperator op(length);
  for (Basis b = 0; b < op.columns_.size(); ++b) op.columns_[b].emplace(b, Scalar(1));
  return op;
}

Scalar SpinOperator::element(Basis out, Basis in) const {
  const auto& col = columns_.at(in);
  auto it = col.find(out);
  return it == col.end() ? Scalar(0) : it->second;
}

void SpinOperator::set_column(Basis in, const SpinState& image) {
  check_same_length(length_, image.length());
  columns_.at(in) = image.amplitudes();
}

SpinState SpinOperator::apply(const SpinState& v) const {
  check_same_length(length_, v.length());
  SpinState out(length_);
  for (const auto& [in, c] : v.amplitudes()) {
    for (const auto& [b, a] : columns_[in]) out.add(b, c * a);
  }
  return out;
}

SpinState SpinOperator::apply_dual(const SpinState& bra) const {
  check_same_length(length_, bra.length());
  SpinState out(length_);
  for (Basis in = 0; in < columns_.size(); ++in) {
    Scalar total;
    for (const auto& [b, a] : columns_[in]) total += bra.amplitude(b) * a;
    out.add(in, total);
  }
  return out;
}

SpinOperator& SpinOperator::operator+=(const SpinOperator& rhs) {
  check_same_length(length_, rhs.length_);
  for (Basis in = 0; in < columns_.size(); ++in) {
    for (const auto& [b, a] : rhs.columns_[in]) {
      auto [it, inserted] = columns_[in].emplace(b, a);
      if (!inserted) {
        it->second += a;
        if (it->second.is_zero()) columns_[in].erase(it);
      }
    }
  }
  return *this;
}

SpinOperator& SpinOperator::operator*=(const Scalar& c) {
  for (auto& col : columns_) {
    if (c.is_zero()) {
      col.clear();
      continue;
    }
    for (auto& [b, a] : col) a *= c;
  }
  return *this;
}

SpinOperator operator*(const SpinOperator& a, const SpinOperator& b) {
  check_same_length(a.length_, b.length_);
  SpinOperator out(a.length_);
  for (Basis in = 0; in < b.columns_.size(); ++in) {
    SpinState image(a.length_);
    for (const auto& [mid, cb] : b.columns_[in]) {
      for (const auto& [o, ca] : a.columns_[mid]) image.add(o, ca * cb);
    }
    out.columns_[in] = image.amplitudes();
  }
  return out;
}

std::optional<SpinOperator::Difference> SpinOperator::first_difference(const SpinOperator& other) const {
  check_same_length(length_, other.length_);
  for (Basis in = 0; in < columns_.size(); ++in) {
    if (columns_[in] == other.columns_[in]) continue;
    for (Basis out = 0; out < columns_.size(); ++out) {
      Scalar l = element(out, in);
      Scalar r = other.element(out, in);
      if (l != r) return Difference{out, in, l, r};
    }
  }
  return std::nullopt;
}

SpinOperator sigma_plus(int length, int site) {
  SpinOperator op(length);
  const Basis mask = Basis{1} << (site - 1);
  for (Basis b = 0; b < (Basis{1} << length); ++b) {
    if (b & mask) op.set_column(b, SpinState::basis(length, b & ~mask));
  }
  return op;
}

SpinOperator sigma_minus(int length, int site) {
  SpinOperator op(length);
  const Basis mask = Basis{1} << (site - 1);
  for (Basis b = 0; b < (Basis{1} << length); ++b) {
    if (!(b & mask)) op.set_column(b, SpinState::basis(length, b | mask));
  }
  return op;
}

SpinOperator embed(const RMatrix& r, int length, int first_site, int second_site) {
  if (first_site == second_site || first_site < 1 || second_site < 1 || first_site > length || second_site > length) {
    throw Error(ErrorKind::InvalidArgument, "bad embedding sites");
  }
  const int fa = first_site - 1;
  const int fb = second_site - 1;
  SpinOperator op(length);
  for (Basis b = 0; b < (Basis{1} << length); ++b) {
    const int in = 2 * bit(b, fa) + bit(b, fb);
    const Basis rest = b & ~((Basis{1} << fa) | (Basis{1} << fb));
    SpinState image(length);
    for (int out = 0; out < 4; ++out) {
      const Scalar& w = r(out, in);
      if (w.is_zero()) continue;
      Basis ob = rest | (Basis(out >> 1) << fa) | (Basis(out & 1) << fb);
      image.add(ob, w);
    }
    op.set_column(b, image);
  }
  return op;
}

// ---------------------------------------------------------------------------
// Monodromy

Monodromy::Monodromy(std::vector<RMatrix> sites, bool aux_first) : sites_(std::move(sites)), aux_first_(aux_first) {
  check_length(static_cast<int>(sites_.size()));
  for (const auto& r : sites_) {
    if (!r.satisfies_ice_rule()) throw Error(ErrorKind::InvalidArgument, "R-matrix violates the ice rule");
  }
}

Monodromy Monodromy::row(const Scalar& u, std::span<const Scalar> w, const Scalar& q) {
  std::vector<RMatrix> sites;
  sites.reserve(w.size());
  for (const auto& wi : w) sites.push_back(RMatrix::six_vertex(u, wi, q));
  return Monodromy(std::move(sites), true);
}

Monodromy Monodromy::column(const Scalar& w, std::span<const Scalar> u, const Scalar& q) {
  std::vector<RMatrix> sites;
  sites.reserve(u.size());
  for (const auto& ui : u) sites.push_back(RMatrix::six_vertex(ui, w, q));
  return Monodromy(std::move(sites), false);
}

SpinState Monodromy::apply(MonodromyEntry entry, const SpinState& v) const {
  check_same_length(length(), v.length());
  const auto [aux_in, aux_out] = aux_boundary(entry);
  SpinState out(length());
  // Partial contraction keyed by (auxiliary state, output bits so far).
  using Partial = std::map<std::pair<int, Basis>, Scalar>;
  for (const auto& [in_bits, coeff] : v.amplitudes()) {
    Partial cur{{{aux_in, Basis{0}}, coeff}};
    for (int s = 0; s < length(); ++s) {
      const RMatrix& r = sites_[s];
      const int site_in = bit(in_bits, s);
      Partial next;
      for (const auto& [key, c] : cur) {
        const auto [aux, bits] = key;
        const int col = aux_first_ ? 2 * aux + site_in : 2 * site_in + aux;
        for (int row = 0; row < 4; ++row) {
          const Scalar& weight = r(row, col);
          if (weight.is_zero()) continue;
          const int first = row >> 1;
          const int second = row & 1;
          const int new_aux = aux_first_ ? first : second;
          const int site_out = aux_first_ ? second : first;
          auto [it, inserted] = next.emplace(std::make_pair(new_aux, bits | (Basis(site_out) << s)), c * weight);
          if (!inserted) it->second += c * weight;
        }
      }
      cur = std::move(next);
    }
    for (const auto& [key, c] : cur) {
      if (key.first == aux_out) out.add(key.second, c);
    }
  }
  return out;
}

SpinOperator Monodromy::element(MonodromyEntry entry) const {
  SpinOperator op(length());
  for (Basis b = 0; b < (Basis{1} << length()); ++b) op.set_column(b, apply(entry, SpinState::basis(length(), b)));
  return op;
}

SpinOperator monodromy_element(MonodromyEntry entry, const Scalar& u, std::span<const Scalar> w, const Scalar& q) {
  return Monodromy::row(u, w, q).element(entry);
}

SpinOperator barred_monodromy_element(MonodromyEntry entry, const Scalar& w, std::span<const Scalar> u, const Scalar& q) {
  return Monodromy::column(w, u, q).element(entry);
}

Scalar wavefunction(std::span<const Scalar> u, std::span<const Scalar> w, const PositionVector& x, const Scalar& q) {
  const int length = static_cast<int>(w.size());
  if (x.chain_length() != length || x.count() != static_cast<int>(u.size())) {
    throw Error(ErrorKind::InvalidArgument, "wavefunction needs |x| = |u| and chain length |w|");
  }
  SpinState state = SpinState::vacuum(length);
  for (const auto& uj : u) state = Monodromy::row(uj, w, q).apply(MonodromyEntry::B, state);
  return state.pair_with(configuration_bra(x));
}

Scalar barred_wavefunction(std::span<const Scalar> w_bar, std::span<const Scalar> u, const PositionVector& y,
                           const Scalar& q) {
  const int length = static_cast<int>(w_bar.size());
  if (y.count() != length || y.chain_length() != static_cast<int>(u.size())) {
    throw Error(ErrorKind::InvalidArgument, "barred wavefunction needs |y| = |w_bar| and y within [1, |u|]");
  }
  SpinState state = SpinState::vacuum(length);
  for (int j = 1; j <= static_cast<int>(u.size()); ++j) {
    const auto entry = y.contains(j) ? MonodromyEntry::B : MonodromyEntry::A;
    state = Monodromy::row(u[j - 1], w_bar, q).apply(entry, state);
  }
  const Basis full = (Basis{1} << length) - 1;
  return state.amplitude(full);
}

std::pair<SpinOperator, SpinOperator> yang_baxter_sides(const Scalar& u, const Scalar& v, const Scalar& w, const Scalar& q) {
  SpinOperator ab = embed(RMatrix::six_vertex(u, v, q), 3, 1, 2);
  SpinOperator ac = embed(RMatrix::six_vertex(u, w, q), 3, 1, 3);
  SpinOperator bc = embed(RMatrix::six_vertex(v, w, q), 3, 2, 3);
  return {ab * ac * bc, bc * ac * ab};
}

}  // namespace groth
