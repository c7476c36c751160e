#ifndef APX_CARRIER_HPP_
#define APX_CARRIER_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace apx {

using Index = std::uint32_t;

// Domain error with a stable machine-readable code and an optional witness
// tuple of carrier indices.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what,
        std::vector<Index> witness = {})
      : std::runtime_error(what),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  const std::string& code() const { return code_; }
  const std::vector<Index>& witness() const { return witness_; }

 private:
  std::string code_;
  std::vector<Index> witness_;
};

// Finite inhabited carrier. Label order is the canonical total order used
// everywhere for deterministic tie-breaking and witness reporting.
class Carrier {
 public:
  explicit Carrier(std::vector<std::string> labels);
  static Carrier numbered(std::size_t n, std::string_view stem = "x");

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Index i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Index> index_of(std::string_view label) const;

  bool operator==(const Carrier& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
};

// Binary relation on a carrier of size n, stored as a row-major bit matrix.
// Arbitrary relations are legal values; classified relations are judgements
// produced elsewhere.
class Rel {
 public:
  Rel() = default;
  explicit Rel(std::size_t n);

  static Rel diagonal(std::size_t n);
  static Rel full(std::size_t n);
  static Rel from_pairs(std::size_t n,
                        const std::vector<std::pair<Index, Index>>& pairs);

  std::size_t size() const { return n_; }

  bool contains(Index i, Index j) const {
    std::size_t b = bit(i, j);
    return (words_[b >> 6] >> (b & 63)) & 1u;
  }
  void insert(Index i, Index j) {
    std::size_t b = bit(i, j);
    words_[b >> 6] |= std::uint64_t{1} << (b & 63);
  }
  void erase(Index i, Index j) {
    std::size_t b = bit(i, j);
    words_[b >> 6] &= ~(std::uint64_t{1} << (b & 63));
  }

  Rel inverse() const;
  Rel united(const Rel& other) const;
  Rel intersected(const Rel& other) const;
  // Logical complement within the full relation on the carrier.
  Rel complement() const;

  bool subset_of(const Rel& other) const;
  bool empty() const;
  std::size_t pair_count() const;

  // Pairs in row-major (lexicographic) order.
  std::vector<std::pair<Index, Index>> pairs() const;

  bool operator==(const Rel& other) const {
    return n_ == other.n_ && words_ == other.words_;
  }
  bool operator!=(const Rel& other) const { return !(*this == other); }

 private:
  std::size_t bit(Index i, Index j) const { return std::size_t{i} * n_ + j; }
  void trim();

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

void require_same_size(const Rel& a, const Rel& b);

struct AxiomViolation {
  std::string axiom;            // e.g. "eq-transitive", "Ap2", "S"
  std::vector<Index> witness;   // lexicographically least witness tuple
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string describe(const Carrier& carrier) const;
};

// A finite set with apartness: carrier, equality (an equivalence, possibly
// coarser than label identity) and an apartness relation satisfying the
// irreflexivity, symmetry, cotransitivity and extensionality axioms.
// Construction always runs the full axiom scan; `tight` is computed, never
// assumed.
class ApartnessSet {
 public:
  static AxiomReport check(const Carrier& carrier, const Rel& eq,
                           const Rel& ap);
  static std::optional<ApartnessSet> make(Carrier carrier, Rel eq, Rel ap,
                                          AxiomReport* report = nullptr);
  // Throws Error{"AxiomViolation"} with the first violation on failure.
  static ApartnessSet validated(Carrier carrier, Rel eq, Rel ap);

  // Diagonal equality over explicit apartness pairs; the common fixture shape.
  static ApartnessSet over_diagonal(
      std::vector<std::string> labels,
      const std::vector<std::pair<Index, Index>>& apart_pairs);

  const Carrier& carrier() const { return carrier_; }
  const Rel& eq() const { return eq_; }
  const Rel& ap() const { return ap_; }
  std::size_t size() const { return carrier_.size(); }
  bool tight() const { return tight_; }

  bool equal(Index x, Index y) const { return eq_.contains(x, y); }
  bool apart(Index x, Index y) const { return ap_.contains(x, y); }

  bool operator==(const ApartnessSet& other) const {
    return carrier_ == other.carrier_ && eq_ == other.eq_ && ap_ == other.ap_;
  }

 private:
  friend class SeTransformationSemigroup;

  ApartnessSet(Carrier carrier, Rel eq, Rel ap, bool tight)
      : carrier_(std::move(carrier)),
        eq_(std::move(eq)),
        ap_(std::move(ap)),
        tight_(tight) {}

  // For constructions whose validity is a closure property of an already
  // validated input (the se-map structure over a set with apartness). The
  // axiom scan is still run whenever the result is small enough.
  static ApartnessSet trusted(Carrier carrier, Rel eq, Rel ap);

  static bool compute_tight(const Rel& eq, const Rel& ap);

  Carrier carrier_;
  Rel eq_;
  Rel ap_;
  bool tight_;
};

bool is_tight(const ApartnessSet& a);

// Subset of a carrier as a membership vector. Extensionality with respect to
// the parent equality is a precondition of the complement operations.
class Subset {
 public:
  explicit Subset(std::size_t n) : member_(n, false) {}
  static Subset of(std::size_t n, const std::vector<Index>& members);

  std::size_t size() const { return member_.size(); }
  bool contains(Index x) const { return member_[x]; }
  void insert(Index x) { member_[x] = true; }

  std::vector<Index> members() const;
  bool operator==(const Subset& other) const {
    return member_ == other.member_;
  }

 private:
  std::vector<bool> member_;
};

bool is_extensional(const ApartnessSet& a, const Subset& y);

struct SubsetComplements {
  Subset logical;  // elements not in Y
  Subset apart;    // elements apart from every element of Y
};

// Throws Error{"NonExtensionalSubset"} if y is not extensional.
SubsetComplements complements(const ApartnessSet& a, const Subset& y);

struct Detachability {
  bool d;   // x in Y or x in logical complement, evaluated literally
  bool sd;  // x in Y or x in apartness complement
  bool qd;  // for all y in Y: x in Y or x apart from y
};

Detachability classify_detachability(const ApartnessSet& a, const Subset& y);

// Set of ordered pairs with componentwise equality and disjunctive apartness.
// Labels are "(x,y)" in row-major order.
ApartnessSet product_apartness(const ApartnessSet& a, const ApartnessSet& b);

// Index of the pair (i,j) in the row-major product carrier.
inline Index product_index(const ApartnessSet& a, const ApartnessSet& b,
                           Index i, Index j) {
  (void)a;
  return static_cast<Index>(std::size_t{i} * b.size() + j);
}

}  // namespace apx

#endif  // APX_CARRIER_HPP_
