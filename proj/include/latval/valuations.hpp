#pragma once

#include "latval/angles.hpp"
#include "latval/ehrfit.hpp"
#include "latval/lattice.hpp"
#include "latval/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latval {

enum class Family { L, A, Ak, Gk, Vk };

std::string to_string(Family f);
Family parse_family(const std::string& s);
/// Families with an index k.
bool family_has_k(Family f);

struct ValuationOptions {
  McOptions mc;
  AngleRoute route = AngleRoute::Auto;
};

struct ValuationValue {
  Family family = Family::L;
  int k = -1;
  std::int64_t dilate = 1;
  bool exact = false;  // no sampling involved
  std::optional<Rat> rational;  // set when the value is an exact rational
  double value = 0.0;
  double se = 0.0;
};

/// det(nP)·|nP ∩ Z^d|; the raw count for full-dimensional P.
ValuationValue eval_L(const Polytope& P, std::int64_t n);
/// Σ_{v ∈ nP ∩ Z^d} α(T_v(nP)); 0 when dim P < d.
ValuationValue eval_A(const Polytope& P, std::int64_t n, const ValuationOptions& opt = {});
/// Σ_v Σ_{F ∈ F_k} 1[v ∈ F] det(F) υ_k(T_F(P)) α(T_v(F)) on nP.
ValuationValue eval_Ak(const Polytope& P, int k, std::int64_t n, const ValuationOptions& opt = {});
/// Σ_{v ∈ nP ∩ Z^d} α_k(T_v(nP)).
ValuationValue eval_Gk(const Polytope& P, int k, std::int64_t n, const ValuationOptions& opt = {});
/// Σ_{F ∈ F_k} υ_k(T_F(P)) |F|.
ValuationValue eval_Vk(const Polytope& P, int k, const ValuationOptions& opt = {});

/// Dispatch on the family. L here is the raw lattice count, which is the
/// valuation used in the additivity and relative-interior identities.
ValuationValue evaluate(Family f, const Polytope& P, int k, std::int64_t n, const ValuationOptions& opt = {});

/// φ(relint Δ) = Σ_F (-1)^{dim Δ - dim F} φ(F), F over the nonempty faces.
ValuationValue relint_valuation(Family f, const Polytope& P, int k, const ValuationOptions& opt = {});

struct AxiomCheck {
  double residual = 0.0;  // |φ(P∪Q) + φ(P∩Q) - φ(P) - φ(Q)|
  double se = 0.0;
  bool exact = false;
  bool passed(double nsigma = 4.0, double floor = 1e-9) const {
    return exact && residual == 0.0 ? true : residual <= nsigma * se + floor;
  }
};

/// Splits `whole` by the hyperplane <a, x> = b into P = {<a,x> <= b} and
/// Q = {<a,x> >= b} and checks inclusion-exclusion. Throws InvalidArgument if
/// the cut does not produce lattice polytopes on both sides.
AxiomCheck check_valuation_axiom(Family f, int k, const Polytope& whole, const IntVec& a, std::int64_t b,
                                 const ValuationOptions& opt = {});

/// φ(tP) as a polynomial in t, assembled face by face from the exact
/// relative-interior Ehrhart polynomials and one angle estimate per face.
/// For L this is the exact raw-count Ehrhart polynomial.
FittedPolynomial valuation_polynomial(Family f, const Polytope& P, int k, const ValuationOptions& opt = {});

/// Exact Ehrhart polynomial of relint(F) for every face F of P.
std::vector<FittedPolynomial> relint_ehrhart(const Polytope& P);

}  // namespace latval
