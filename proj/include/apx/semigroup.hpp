#ifndef APX_SEMIGROUP_HPP_
#define APX_SEMIGROUP_HPP_

#include <optional>
#include <unordered_map>
#include <vector>

#include "apx/maps.hpp"
#include "apx/quotient.hpp"

namespace apx {

// A semigroup with apartness: a validated set with apartness plus a Cayley
// table that is well-defined modulo eq, associative, and strongly extensional
// (apart products force apart arguments).
class ApartnessSemigroup {
 public:
  static AxiomReport check(const ApartnessSet& base,
                           const std::vector<Index>& table);
  static std::optional<ApartnessSemigroup> make(ApartnessSet base,
                                                std::vector<Index> table,
                                                AxiomReport* report = nullptr);
  static ApartnessSemigroup validated(ApartnessSet base,
                                      std::vector<Index> table);

  const ApartnessSet& base() const { return base_; }
  std::size_t size() const { return base_.size(); }
  const std::vector<Index>& table() const { return table_; }
  Index mul(Index a, Index b) const { return table_[a * size() + b]; }

 private:
  ApartnessSemigroup(ApartnessSet base, std::vector<Index> table)
      : base_(std::move(base)), table_(std::move(table)) {}

  ApartnessSet base_;
  std::vector<Index> table_;
};

struct CompatibilityFlags {
  PropertyFlag left, right, full;
  PropertyFlag co_left, co_right, co_full;
};

CompatibilityFlags check_compatibility(const ApartnessSemigroup& sg,
                                       const Rel& rel);

struct SemigroupQuotient {
  ApartnessSemigroup quotient;
  QuotientWitness witness;
};

// Classical path: compatible equivalence, apartness dropped.
SemigroupQuotient quotient_semigroup_by_congruence(const ApartnessSemigroup& sg,
                                                   const Rel& eps);
// Constructive path: co-compatible co-equivalence defines the apartness.
SemigroupQuotient quotient_semigroup_by_cocongruence(
    const ApartnessSemigroup& sg, const Rel& kappa);
// Mixed path: congruence for the classes, disjoint co-congruence for the
// apartness.
SemigroupQuotient quotient_semigroup_mixed(const ApartnessSemigroup& sg,
                                           const Rel& mu, const Rel& kappa);

struct SemigroupIso {
  IsoWitness iso;
  ApartnessSemigroup quotient;  // kernel quotient with multiplication
};

// Isomorphism theorems for semigroup homomorphisms. `classical` ignores
// apartness; `kappa` switches to the generalised factorization. Throws
// Error{"NotHomomorphism"}, Error{"NotSe"}, Error{"KappaMeetsKernel"}.
SemigroupIso semigroup_iso_theorems(const ApartnessSemigroup& dom,
                                    const ApartnessSemigroup& cod,
                                    const SetoidMap& f,
                                    const Rel* kappa = nullptr,
                                    bool classical = false);

// All strongly extensional self-maps of a set with apartness, with pointwise
// equality, existential apartness and composition. Elements are kept as index
// vectors; the apartness-set and semigroup views are materialized on demand.
class SeTransformationSemigroup {
 public:
  // Enumerates the n^n self-maps. Throws Error{"CarrierTooLarge"} for n > 6.
  static SeTransformationSemigroup build(const ApartnessSet& x);

  const ApartnessSet& base_set() const { return base_; }
  std::size_t element_count() const { return elements_.size(); }
  const std::vector<Index>& element(Index f) const { return elements_[f]; }

  bool elem_eq(Index f, Index g) const;
  bool elem_apart(Index f, Index g) const;
  std::optional<Index> find(const std::vector<Index>& map) const;
  // Index of the composite x -> f(g(x)).
  Index compose_elems(Index f, Index g) const;

  // Closure of composition plus the strong extensionality of composition,
  // verified exhaustively. The se-operation entry is present only when the
  // close-pair budget allows an exact scan.
  const Certificate& verification() const { return verification_; }

  ApartnessSet as_apartness_set() const;
  // Full axiom scan; throws Error{"CarrierTooLarge"} above 256 elements.
  ApartnessSemigroup as_semigroup() const;

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<Index>& v) const;
  };

  ApartnessSet base_;
  std::vector<std::vector<Index>> elements_;
  std::unordered_map<std::vector<Index>, Index, VecHash> index_;
  Certificate verification_;
};

struct CayleyWitness {
  ApartnessSemigroup extended;         // the base with a fresh identity
  SeTransformationSemigroup target;    // se self-maps of the extension
  SetoidMap phi;                       // element to its left translation
  Certificate checks;                  // homomorphism, se, injective
};

// Embeds the semigroup into the se self-maps of its identity extension.
// Throws Error{"CarrierTooLarge"} for |S| > 5; a failed certificate is a
// hard Error{"CertificateFailure"}.
CayleyWitness cayley_embedding(const ApartnessSemigroup& sg);

// Quasiorder-to-ordered-semigroup quotient (compatible quasiorder) and its
// co-quasiorder counterpart. Throws Error{"NotCompatible"} /
// Error{"NotCoCompatible"} with the least witness quadruple.
SemigroupQuotient ordered_semigroup_birkhoff_classical(
    const ApartnessSemigroup& sg, const Rel& rho);
SemigroupQuotient ordered_semigroup_birkhoff_constructive(
    const ApartnessSemigroup& sg, const Rel& tau);

struct OrderedSemigroupIso {
  OrderedIsoWitness ordered;
  Certificate checks;
};

// Homomorphic-image factorization for ordered semigroups.
OrderedSemigroupIso ordered_semigroup_iso(const ApartnessSemigroup& dom,
                                          const ApartnessSemigroup& cod,
                                          const SetoidMap& f,
                                          const Rel& dom_order,
                                          const Rel& cod_order,
                                          const Rel* rho = nullptr);

struct CoOrderedSemigroupFactorization {
  CoOrderFactorization fact;
  ApartnessSemigroup domain_quotient;
  ApartnessSemigroup target_quotient;
  Certificate checks;
};

// Co-order factorization along an se-homomorphism, with the quotient
// semigroup structure on both sides; tau adds the tight-codomain variant.
CoOrderedSemigroupFactorization co_ordered_semigroup_factorization(
    const ApartnessSemigroup& dom, const ApartnessSemigroup& cod,
    const SetoidMap& f, const Rel& sigma, const Rel* tau = nullptr);

}  // namespace apx

#endif  // APX_SEMIGROUP_HPP_
