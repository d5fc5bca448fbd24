#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twocat/twovect.hpp"

// 2-biproducts of objects in 2Vect.
//
// The box product of n and m is n + m. Projections and injections are 0/1
// grids whose off-diagonal entries hold a single zero-dimensional component,
// so composites such as p_A i_A carry zero-dimensional summands and every
// weakening 2-isomorphism is a genuine (non-identity-typed) normalization.
namespace twocat::biproduct {

std::size_t box_obj(std::size_t n, std::size_t m);
/// p_A : n + m -> n (first) or p_B : n + m -> m (second).
OneMor box_proj(std::size_t n, std::size_t m, Side side);
/// i_A : n -> n + m (first) or i_B : m -> n + m (second).
OneMor box_inj(std::size_t n, std::size_t m, Side side);

struct Witness {
  std::size_t n = 0;
  std::size_t m = 0;
  OneMor p_a, p_b, i_a, i_b;
  TwoMor theta_a;   ///< p_A i_A => id_n
  TwoMor theta_b;   ///< p_B i_B => id_m
  TwoMor theta_ab;  ///< p_A i_B => 0 (m -> n)
  TwoMor theta_ba;  ///< p_B i_A => 0 (n -> m)
  TwoMor theta_p;   ///< i_A p_A (+) i_B p_B => id_{n+m}

  /// i_A p_A (+) i_B p_B
  OneMor l() const;
};

Witness make_witness(std::size_t n, std::size_t m);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  ///< first failing entry, empty on success
};

struct Report {
  std::vector<CheckResult> checks;
  bool ok() const;
};

/// Invertibility of every theta, the two matrix-form conditions relating
/// theta_P to theta_A and theta_B, the whiskering symmetry of theta_A and
/// theta_B, and the vanishing of theta_AB, theta_BA, 1_{p_A i_B}, 1_{p_B i_A}.
Report check_biproduct_conditions(const Witness& w);

/// Cone (X, f : X -> n, g : X -> m).
struct Cone {
  std::size_t apex = 0;
  OneMor f;
  OneMor g;
};

struct Mediator {
  OneMor b;     ///< i_A f (+) i_B g
  TwoMor xi_a;  ///< p_A b => f
  TwoMor xi_b;  ///< p_B b => g
};

/// Mediating 1-morphism of a cone with its weakening 2-isomorphisms. Throws
/// ShapeError if the cone does not fit the witness.
Mediator product_mediator(const Witness& w, const Cone& c);

/// The mediating 2-morphism gamma : b => b' induced by
/// sigma_a : f => f' and sigma_b : g => g', in block form
/// diag(i_A sigma_a, i_B sigma_b).
TwoMor mediator_gamma(const Witness& w, const Cone& c, const Cone& c_prime, const TwoMor& sigma_a,
                      const TwoMor& sigma_b);

/// Same 2-morphism written as nu_1 . i_A sigma_a . pi_1 + nu_2 . i_B sigma_b . pi_2.
TwoMor mediator_gamma_explicit(const Witness& w, const Cone& c, const Cone& c_prime,
                               const TwoMor& sigma_a, const TwoMor& sigma_b);

/// Residual of the universal condition for one projection:
/// compares p gamma with xi'^{-1} . sigma . xi. Returns the first difference.
std::optional<std::string> universal_condition_failure(const Witness& w, const Mediator& med,
                                                       const Mediator& med_prime,
                                                       const TwoMor& gamma, const TwoMor& sigma,
                                                       Side side);

/// (theta_P h') . (l gamma') . (theta_P^{-1} h) for gamma' : h => h'.
TwoMor reconstruct_gamma(const Witness& w, const TwoMor& gamma_prime);

/// The two restrictions of theta_P h along nu_1 and nu_2, each compared with
/// nu . (i theta f) . (structural transport) . pi.
Report check_theta_p_expansion(const Witness& w, const Cone& c);

struct SigmaRows {
  TwoMor sigma_a;   ///< p_A l => p_A
  TwoMor sigma_b;   ///< p_B l => p_B
  TwoMor lambda_a;  ///< diag(theta_A p_A, theta_AB p_B)
  TwoMor lambda_b;  ///< diag(theta_BA p_A, theta_B p_B)
  TwoMor split_a;   ///< p_A l => (p_A i_A) p_A (+) (p_A i_B) p_B
  TwoMor split_b;   ///< p_B l => (p_B i_A) p_A (+) (p_B i_B) p_B
};

/// Sigma_A = pi_1 . lambda_a . split_a and Sigma_B = pi_2 . lambda_b . split_b.
SigmaRows sigma_rows(const Witness& w);

struct EquivalenceWitness {
  OneMor r;          ///< canonical 1-morphism A + B -> A x B
  OneMor r_prime;    ///< i_A p_A (+) i_B p_B
  TwoMor xi_prod;    ///< r r' => id
  TwoMor xi_coprod;  ///< id => r' r
  /// xi_{k,j} : p_k r i_j => delta_kj id, indexed [k][j] with 0 = A, 1 = B.
  TwoMor xi_kj[2][2];
};

EquivalenceWitness canonical_equiv(std::size_t n, std::size_t m);

/// Both zigzag identities, and p_A xi_prod = pi_1 . lambda with
/// lambda = diag(xi_AA p_A, xi_AB p_B) (and the B analogue).
Report check_equivalence(const Witness& w, const EquivalenceWitness& eq);

/// The unique gamma : b => b' with p_A gamma = sigma_a and p_B gamma = sigma_b.
/// Throws NotInvertible if either sigma is not a 2-isomorphism and ShapeError
/// on mismatched types.
TwoMor monic_mediator(const Witness& w, const OneMor& b, const OneMor& b_prime,
                      const TwoMor& sigma_a, const TwoMor& sigma_b);

}  // namespace twocat::biproduct
