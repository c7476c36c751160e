#ifndef APX_MAPS_HPP_
#define APX_MAPS_HPP_

#include <optional>

#include "apx/quotient.hpp"
#include "apx/setoid_map.hpp"

namespace apx {

// Quotient-plus-factorization bundle produced by the isomorphism theorems.
// `factorization_ok` states f = phi . pi pointwise modulo the codomain
// equality.
struct IsoWitness {
  QuotientWitness quotient;
  SetoidMap phi;
  bool factorization_ok = false;
  MapClassification phi_class;
  Certificate checks;
};

// Quotient by the kernel; phi is the unique injective map through which f
// factors. Apartness plays no role on this path.
IsoWitness first_iso_classical(const SetoidMap& f);

// Factoring through an equivalence contained in the kernel. Throws
// Error{"NotContainedInKernel"} with the least witness pair.
SetoidMap factor_through(const SetoidMap& f, const Rel& eps);

// Quotient by the kernel with the apartness defined by the co-kernel; phi is
// an a-injective se-injection. Throws Error{"NotSe"}.
IsoWitness first_apartness_iso(const SetoidMap& f);

struct SecondIsoWitness {
  IsoWitness iso;
  bool phi_se = false;
  bool phi_a_injective = false;
};

// Generalised factorization: a supplied co-equivalence disjoint from the
// kernel defines the quotient apartness; whether phi is se (a-injective)
// is equivalent to one containment between kappa and the co-kernel, and both
// equivalences are verified on the instance. Throws
// Error{"KappaMeetsKernel"}.
SecondIsoWitness second_apartness_iso(const SetoidMap& f, const Rel& kappa);

struct OrderedIsoWitness {
  Rel eta;  // relation induced on the domain by the codomain order
  IsoWitness iso;
  // Factorization through a supplied quasiorder contained in eta.
  std::optional<QuotientWitness> rho_quotient;
  std::optional<SetoidMap> phi_rho;
};

// First isomorphism theorem for ordered codomains. Throws
// Error{"CodomainNotOrdered"}; with rho supplied, also
// Error{"NotAQuasiorder"} or Error{"RhoNotContainedInEta"}.
OrderedIsoWitness ordered_iso_classical(const SetoidMap& f, const Rel& dom_rel,
                                        const Rel& cod_rel,
                                        const Rel* rho = nullptr);

struct CoOrderFactorization {
  Rel mu;     // pullback of sigma along f
  Rel kappa;  // mu united with its inverse
  QuotientWitness domain_quotient;  // carries the induced co-order
  QuotientWitness target_quotient;  // codomain quotient by sigma
  SetoidMap psi;  // between the two co-ordered quotients
  Certificate checks;
  // Tight-codomain variant: factorization of f through a co-quasiorder
  // containing mu.
  std::optional<SetoidMap> phi_tight;
};

// Factorization of an se-map through the co-order quotients induced by a
// co-quasiorder on the codomain. Throws Error{"NotSe"},
// Error{"SigmaNotCoquasiorder"}; the tau variant also Error{"NotACoquasiorder"},
// Error{"MuNotContained"} and Error{"CodomainNotTight"}.
CoOrderFactorization co_order_factorization(const SetoidMap& f,
                                            const Rel& sigma,
                                            const Rel* tau = nullptr);

}  // namespace apx

#endif  // APX_MAPS_HPP_
