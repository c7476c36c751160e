#ifndef APX_RELCALC_HPP_
#define APX_RELCALC_HPP_

#include <optional>
#include <string>
#include <vector>

#include "apx/carrier.hpp"

namespace apx {

// One property judgement; when it fails, `witness` holds the lexicographically
// least tuple exhibiting the failure.
struct PropertyFlag {
  bool holds = false;
  std::vector<Index> witness;
};

struct RelProperties {
  PropertyFlag reflexive;
  PropertyFlag symmetric;
  PropertyFlag antisymmetric;        // judged modulo eq
  PropertyFlag transitive;
  PropertyFlag irreflexive;          // contained in the co-diagonal
  PropertyFlag strongly_irreflexive; // contained in the apartness
  PropertyFlag cotransitive;
  PropertyFlag coantisymmetric;      // apartness contained in rel or inverse
};

enum class RelKind {
  kQuasiorder,
  kEquivalence,
  kOrder,
  kCoQuasiorder,
  kCoEquivalence,
  kCoOrder,
  kNone,
};

std::string to_string(RelKind kind);

struct RelClass {
  RelKind kind = RelKind::kNone;
  RelProperties props;
};

// Composition: (x,z) related iff some y has (x,y) in alpha and (y,z) in beta.
Rel compose(const Rel& alpha, const Rel& beta);

// Co-composition: (x,z) related iff every y has (x,y) in alpha or (y,z) in
// beta. The universal reading; it is the one under which cotransitivity of a
// relation coincides with containment in its own co-composition.
Rel cocompose(const Rel& alpha, const Rel& beta);

struct RelComplements {
  Rel logical;
  Rel apart;  // complement under the product apartness on pairs
};

RelComplements rel_complements(const ApartnessSet& a, const Rel& alpha);

RelProperties check_properties(const ApartnessSet& a, const Rel& alpha);

// Most specific kind whose defining conjunction holds, co-side preferred.
RelClass classify(const ApartnessSet& a, const Rel& alpha);

// alpha is associated with beta: alpha(x,y) and beta(y,z) imply alpha(x,z).
bool associated_with(const Rel& alpha, const Rel& beta);

// Convenience judgements used as preconditions throughout.
bool is_equivalence(const Rel& rel);
bool is_quasiorder(const Rel& rel);
bool is_order(const ApartnessSet& a, const Rel& rel);
bool is_coquasiorder(const ApartnessSet& a, const Rel& rel);
bool is_coequivalence(const ApartnessSet& a, const Rel& rel);
bool is_coorder(const ApartnessSet& a, const Rel& rel);

// Co-diagonal: pairs not related by eq.
Rel codiagonal(const ApartnessSet& a);

}  // namespace apx

#endif  // APX_RELCALC_HPP_
