#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "groth/combinatorics.hpp"
#include "groth/grothendieck.hpp"
#include "groth/multipoly.hpp"
#include "groth/sampling.hpp"
#include "groth/scalar.hpp"

namespace groth {

using NamedValues = std::vector<std::pair<std::string, std::string>>;

struct Failure {
  NamedValues assignment;  // variable -> "p/q"
  std::string lhs;
  std::string rhs;
  std::string check;  // which sub-check of the identity disagreed
  friend bool operator==(const Failure&, const Failure&) = default;
};

enum class Verdict { Verified, Failed };

std::string_view verdict_name(Verdict v);

/// Outcome of checking one identity for one parameter cell.
struct IdentityReport {
  std::string identity;
  NamedValues params;
  int points = 0;
  std::vector<Failure> failures;

  Verdict verdict() const { return failures.empty() && points >= 1 ? Verdict::Verified : Verdict::Failed; }
  bool verified() const { return verdict() == Verdict::Verified; }

  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

struct VerifyOptions {
  int points = 25;
  std::uint64_t seed = 0;
};

// --- Closed-form sides shared by the determinantal identities -------------

/// sum over k-subsets S of [n] of G_lambda(z_S) prod_{S}(1+beta z_i)^{n-k}
/// prod_{not S}[z_j|alpha]^m / prod_{i in S, j not in S}(z_j - z_i).
Scalar guo_sun_rhs(const Partition& lambda, std::span<const Scalar> z, const FactorialAlphabet& alphabet, int m);

/// Rectangular-shape expansion at beta = -1: sum over k-subsets S of [m] of
/// prod_{S}(1-alpha_i)^{m-k} prod_{j not in S} prod_i (z_i (+) alpha_j)
/// / prod_{i in S, j not in S}(alpha_j - alpha_i). Uses alpha_1..alpha_m.
Scalar rectangular_rhs(std::span<const Scalar> z, std::span<const Scalar> alpha, int m, int k);

/// The z-side of the duality formula at beta = -1 (the Guo-Sun right-hand
/// side with lambda = 0^k).
Scalar duality_z_side(std::span<const Scalar> z, std::span<const Scalar> alpha, int m, int k);

/// Symbolic expansion of rectangular_rhs in z1..zn, a1..am.
MultiPoly rectangular_rhs_symbolic(int n, int m, int k);

/// (a1 a2 - a1 - a2 + 1)(z1 + z2 - z1 z2) + a1 + a2 - a1 a2.
MultiPoly worked_example_closed_form();

/// One term of the nested sum over (a_1, ..., a_{n-k}) that expands the
/// mixed D/B string: its coefficient and the removed row indices.
struct NestedTerm {
  Scalar coefficient;
  std::vector<int> removed;  // a_1..a_{n-k}, 1-based, in selection order
};

/// Expansion of <.| prod B ... D(u_{y_j}) ... B |Omega>_m for the chain
/// w_1..w_m into B-only strings with the listed coefficients.
std::vector<NestedTerm> nested_expansion(std::span<const Scalar> u, std::span<const Scalar> w, const PositionVector& y,
                                         const Scalar& q);

// --- Identity verifiers ---------------------------------------------------

/// G_mu = guo_sun_rhs for mu = ((m-k)^{n-k}, lambda), k = lambda.length().
IdentityReport verify_guo_sun(const Partition& lambda, int n, int m, const Scalar& beta, const VerifyOptions& opts);

enum class Mode { Numeric, Symbolic };

/// G_{((m-k)^{n-k},0^k)} = rectangular_rhs.
IdentityReport verify_rectangular(int n, int m, int k, const VerifyOptions& opts, Mode mode = Mode::Numeric);

IdentityReport verify_duality(int n, int m, int k, const VerifyOptions& opts);

/// Determinant, Guo-Sun side (lambda = 0^k, beta = -1), rectangular side and
/// both duality sides all coincide at each point.
IdentityReport verify_consistency_triangle(int n, int m, int k, const VerifyOptions& opts);

/// q-deformed expansion of F at positions (x, m+1..m+n-k) over y-vectors,
/// nested index tuples, F_bar and the reduced F; the left side is also
/// cross-checked against the lattice wavefunction.
IdentityReport verify_q_deformed(int n, int m, int k, const PositionVector& x, const VerifyOptions& opts);

enum class Relation {
  DB3_4, DB3_5, BB3_6, DD3_7, Multi3_8, DVacuum3_11,
  AC4_6, AC4_7, AA4_8, CC4_9, Multi4_10, AVacuum4_11, Frozen4_13,
  DB5_11, BB5_12, DVacuum5_13, State5_14, State5_15,
};

std::string relation_label(Relation r);
/// "3.8" -> Relation::Multi3_8; InvalidArgument on unknown labels.
Relation parse_relation(const std::string& label);
std::vector<Relation> all_relations();

struct RelationSizes {
  int length = 3;  // chain length for two-operator relations
  int n = 3;       // rows (number of u's / auxiliary a-spaces)
  int k = 1;
  int m = 3;       // chain length (row picture) or number of w's (column picture)
  int ell = 2;     // B count for the single-D state relation
};

IdentityReport verify_commutation(Relation relation, const RelationSizes& sizes, const VerifyOptions& opts);

enum class Correspondence { C2_10, C2_12, C3_1, C3_13, C4_3, C5_1, C5_4, C5_16 };

std::string correspondence_label(Correspondence c);
Correspondence parse_correspondence(const std::string& label);

struct CorrespondenceSizes {
  int n = 2;
  int m = 2;
  int k = 1;
  int length = 4;                         // chain length for 2.10 / 2.12
  std::optional<Partition> lambda;        // fixed shape; sweep all when absent
  std::optional<PositionVector> x;        // fixed positions; sweep all when absent
};

IdentityReport verify_correspondence(Correspondence which, const CorrespondenceSizes& sizes, const VerifyOptions& opts);

/// One report per (clause, route) for routes "lattice" and "symfunc".
std::vector<IdentityReport> verify_prop51(int n, int k, int m, const VerifyOptions& opts);

/// R_ab R_ac R_bc = R_bc R_ac R_ab on three sites at sampled (u, v, w, q).
IdentityReport verify_yang_baxter(const VerifyOptions& opts);

/// Ice rule on sampled six-vertex R-matrices and their q=0, q=1, u=w
/// degenerations; also checks the q=0 substitution against the hard-coded
/// five-vertex table.
IdentityReport verify_ice_rule(const VerifyOptions& opts);

/// Symbolic rectangular right-hand side at n=2, k=1, m=2 against the closed
/// form and against the symbolic determinant G_{(1,0)}.
IdentityReport verify_worked_example();

}  // namespace groth
