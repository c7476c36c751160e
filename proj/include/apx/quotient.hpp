#ifndef APX_QUOTIENT_HPP_
#define APX_QUOTIENT_HPP_

#include <optional>
#include <vector>

#include "apx/certificate.hpp"
#include "apx/relcalc.hpp"
#include "apx/setoid_map.hpp"

namespace apx {

// A constructed quotient bundled with the checks that certify it. Classes
// partition the carrier, are unions of eq-classes, and are listed by least
// member; the class label is the least member's label in brackets.
struct QuotientWitness {
  ApartnessSet source;
  std::vector<std::vector<Index>> classes;
  std::vector<Index> class_of;
  ApartnessSet quotient;  // apartness is empty on the classical paths
  bool has_induced_ap = false;
  std::optional<Rel> induced_rel;  // factor relation on classes, when built
  SetoidMap projection;
  Certificate certificate;
};

// Classical quotient by an equivalence containing eq; no induced apartness.
// Throws Error{"NotAnEquivalence"} or Error{"EqNotRefined"}.
QuotientWitness quotient_by_equivalence(const ApartnessSet& a, const Rel& eps);

struct InducedRelation {
  Rel theta;          // existential factor relation on classes
  bool well_defined;  // existential and universal readings coincide
};

InducedRelation induced_quotient_relation(const QuotientWitness& q,
                                          const Rel& rho);

// Quasiorder-to-order quotient: the greatest equivalence inside rho gives a
// quotient carrying an order, with an isotone and reverse isotone projection.
QuotientWitness birkhoff_classical(const ApartnessSet& a, const Rel& rho);

// Quotient by a co-equivalence: the complement partition inherits an
// apartness. Throws Error{"NotACoequivalence"}.
QuotientWitness quotient_by_coequivalence(const ApartnessSet& a,
                                          const Rel& kappa);

struct DefinesApartness {
  bool ok;  // eps and kappa are disjoint
  std::vector<Index> witness;
  std::optional<QuotientWitness> quotient;
};

// Whether kappa defines an apartness on the quotient by eps, and the
// certified quotient when it does.
DefinesApartness defines_apartness_check(const ApartnessSet& a, const Rel& eps,
                                         const Rel& kappa);

// Co-quasiorder-to-co-order quotient. Throws Error{"NotACoquasiorder"}.
QuotientWitness birkhoff_constructive(const ApartnessSet& a, const Rel& tau);

// Shared plumbing, also used by the semigroup quotients.
namespace detail {

struct Partition {
  std::vector<std::vector<Index>> classes;
  std::vector<Index> class_of;
};

Partition partition_from_equivalence(const Rel& eq_like);

Carrier class_carrier(const ApartnessSet& source, const Partition& p);

// Class-level image of a source relation taken at least representatives,
// plus the check that all representative choices agree.
struct ClassRelation {
  Rel rel;
  bool representative_independent;
  std::vector<Index> witness;
};

ClassRelation push_relation(const Partition& p, const Rel& rel);

}  // namespace detail

}  // namespace apx

#endif  // APX_QUOTIENT_HPP_
