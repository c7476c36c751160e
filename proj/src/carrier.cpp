#include "apx/carrier.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

namespace apx {

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw Error("EmptyCarrier", "carrier must be inhabited");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw Error("DuplicateLabel", "duplicate carrier label: " + l);
    }
  }
}

Carrier Carrier::numbered(std::size_t n, std::string_view stem) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::string(stem) + std::to_string(i));
  }
  return Carrier(std::move(labels));
}

std::optional<Index> Carrier::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Index>(i);
  }
  return std::nullopt;
}

Rel::Rel(std::size_t n) : n_(n), words_((n * n + 63) / 64, 0) {}

Rel Rel::diagonal(std::size_t n) {
  Rel r(n);
  for (Index i = 0; i < n; ++i) r.insert(i, i);
  return r;
}

Rel Rel::full(std::size_t n) {
  Rel r(n);
  for (auto& w : r.words_) w = ~std::uint64_t{0};
  r.trim();
  return r;
}

Rel Rel::from_pairs(std::size_t n,
                    const std::vector<std::pair<Index, Index>>& pairs) {
  Rel r(n);
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) {
      throw Error("IndexOutOfRange", "relation pair index out of range");
    }
    r.insert(i, j);
  }
  return r;
}

void Rel::trim() {
  std::size_t used = n_ * n_;
  if (words_.empty()) return;
  std::size_t tail = used & 63;
  if (tail != 0) {
    words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
}

Rel Rel::inverse() const {
  Rel r(n_);
  for (Index i = 0; i < n_; ++i) {
    for (Index j = 0; j < n_; ++j) {
      if (contains(i, j)) r.insert(j, i);
    }
  }
  return r;
}

Rel Rel::united(const Rel& other) const {
  require_same_size(*this, other);
  Rel r = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] |= other.words_[w];
  return r;
}

Rel Rel::intersected(const Rel& other) const {
  require_same_size(*this, other);
  Rel r = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= other.words_[w];
  return r;
}

Rel Rel::complement() const {
  Rel r = *this;
  for (auto& w : r.words_) w = ~w;
  r.trim();
  return r;
}

bool Rel::subset_of(const Rel& other) const {
  require_same_size(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

bool Rel::empty() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t Rel::pair_count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::pair<Index, Index>> Rel::pairs() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index i = 0; i < n_; ++i) {
    for (Index j = 0; j < n_; ++j) {
      if (contains(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

void require_same_size(const Rel& a, const Rel& b) {
  if (a.size() != b.size()) {
    throw Error("CarrierMismatch", "relations live on different carriers");
  }
}

std::string AxiomReport::describe(const Carrier& carrier) const {
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.axiom << " violated at (";
    for (std::size_t k = 0; k < v.witness.size(); ++k) {
      if (k) os << ",";
      os << carrier.label(v.witness[k]);
    }
    os << ")\n";
  }
  return os.str();
}

namespace {

// Least-witness scans; each axiom reports at most one violation, the
// lexicographically least tuple in index order.

void check_equivalence_axioms(const Rel& eq, AxiomReport& report) {
  std::size_t n = eq.size();
  for (Index x = 0; x < n; ++x) {
    if (!eq.contains(x, x)) {
      report.violations.push_back({"eq-reflexive", {x}});
      break;
    }
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (eq.contains(x, y) && !eq.contains(y, x)) {
        report.violations.push_back({"eq-symmetric", {x, y}});
        goto sym_done;
      }
    }
  }
sym_done:
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!eq.contains(x, y)) continue;
      for (Index z = 0; z < n; ++z) {
        if (eq.contains(y, z) && !eq.contains(x, z)) {
          report.violations.push_back({"eq-transitive", {x, y, z}});
          return;
        }
      }
    }
  }
}

void check_apartness_axioms(const Rel& eq, const Rel& ap, AxiomReport& report) {
  std::size_t n = ap.size();
  for (Index x = 0; x < n; ++x) {
    if (ap.contains(x, x)) {
      report.violations.push_back({"Ap1", {x}});
      break;
    }
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (ap.contains(x, y) && !ap.contains(y, x)) {
        report.violations.push_back({"Ap2", {x, y}});
        goto ap2_done;
      }
    }
  }
ap2_done:
  for (Index x = 0; x < n; ++x) {
    for (Index z = 0; z < n; ++z) {
      if (!ap.contains(x, z)) continue;
      for (Index y = 0; y < n; ++y) {
        if (!ap.contains(x, y) && !ap.contains(y, z)) {
          report.violations.push_back({"Ap3", {x, z, y}});
          goto ap3_done;
        }
      }
    }
  }
ap3_done:
  // Extensionality; a violation of the derived law eq(x,y) => not ap(x,y)
  // surfaces here with witness (x,y,x).
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!ap.contains(x, y)) continue;
      for (Index z = 0; z < n; ++z) {
        if (eq.contains(y, z) && !ap.contains(x, z)) {
          report.violations.push_back({"Ap5", {x, y, z}});
          return;
        }
      }
    }
  }
}

}  // namespace

AxiomReport ApartnessSet::check(const Carrier& carrier, const Rel& eq,
                                const Rel& ap) {
  AxiomReport report;
  if (eq.size() != carrier.size() || ap.size() != carrier.size()) {
    throw Error("CarrierMismatch", "eq/ap size does not match carrier");
  }
  check_equivalence_axioms(eq, report);
  check_apartness_axioms(eq, ap, report);
  return report;
}

bool ApartnessSet::compute_tight(const Rel& eq, const Rel& ap) {
  std::size_t n = eq.size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!ap.contains(x, y) && !eq.contains(x, y)) return false;
    }
  }
  return true;
}

std::optional<ApartnessSet> ApartnessSet::make(Carrier carrier, Rel eq, Rel ap,
                                               AxiomReport* report) {
  AxiomReport local = check(carrier, eq, ap);
  if (report) *report = local;
  if (!local.ok()) return std::nullopt;
  bool tight = compute_tight(eq, ap);
  return ApartnessSet(std::move(carrier), std::move(eq), std::move(ap), tight);
}

ApartnessSet ApartnessSet::validated(Carrier carrier, Rel eq, Rel ap) {
  AxiomReport report;
  auto set = make(std::move(carrier), std::move(eq), std::move(ap), &report);
  if (!set) {
    const auto& v = report.violations.front();
    throw Error("AxiomViolation", "axiom " + v.axiom + " violated", v.witness);
  }
  return *std::move(set);
}

ApartnessSet ApartnessSet::over_diagonal(
    std::vector<std::string> labels,
    const std::vector<std::pair<Index, Index>>& apart_pairs) {
  std::size_t n = labels.size();
  return validated(Carrier(std::move(labels)), Rel::diagonal(n),
                   Rel::from_pairs(n, apart_pairs));
}

ApartnessSet ApartnessSet::trusted(Carrier carrier, Rel eq, Rel ap) {
  // Full scan only while the cotransitivity pass is affordable.
  constexpr std::size_t kScanLimit = 300;
  if (carrier.size() <= kScanLimit) {
    return validated(std::move(carrier), std::move(eq), std::move(ap));
  }
  bool tight = compute_tight(eq, ap);
  return ApartnessSet(std::move(carrier), std::move(eq), std::move(ap), tight);
}

bool is_tight(const ApartnessSet& a) { return a.tight(); }

Subset Subset::of(std::size_t n, const std::vector<Index>& members) {
  Subset s(n);
  for (Index x : members) {
    if (x >= n) throw Error("IndexOutOfRange", "subset member out of range");
    s.insert(x);
  }
  return s;
}

std::vector<Index> Subset::members() const {
  std::vector<Index> out;
  for (Index x = 0; x < member_.size(); ++x) {
    if (member_[x]) out.push_back(x);
  }
  return out;
}

bool is_extensional(const ApartnessSet& a, const Subset& y) {
  std::size_t n = a.size();
  for (Index x = 0; x < n; ++x) {
    if (!y.contains(x)) continue;
    for (Index x2 = 0; x2 < n; ++x2) {
      if (a.equal(x, x2) && !y.contains(x2)) return false;
    }
  }
  return true;
}

SubsetComplements complements(const ApartnessSet& a, const Subset& y) {
  if (y.size() != a.size()) {
    throw Error("CarrierMismatch", "subset size does not match carrier");
  }
  if (!is_extensional(a, y)) {
    throw Error("NonExtensionalSubset", "subset is not extensional");
  }
  std::size_t n = a.size();
  SubsetComplements out{Subset(n), Subset(n)};
  for (Index x = 0; x < n; ++x) {
    if (!y.contains(x)) out.logical.insert(x);
    bool apart_from_all = true;
    for (Index v = 0; v < n; ++v) {
      if (y.contains(v) && !a.apart(x, v)) {
        apart_from_all = false;
        break;
      }
    }
    if (apart_from_all) out.apart.insert(x);
  }
  return out;
}

Detachability classify_detachability(const ApartnessSet& a, const Subset& y) {
  auto comp = complements(a, y);
  std::size_t n = a.size();
  Detachability out{true, true, true};
  for (Index x = 0; x < n; ++x) {
    if (!y.contains(x) && !comp.logical.contains(x)) out.d = false;
    if (!y.contains(x) && !comp.apart.contains(x)) out.sd = false;
    for (Index v = 0; v < n; ++v) {
      if (y.contains(v) && !y.contains(x) && !a.apart(x, v)) out.qd = false;
    }
  }
  return out;
}

ApartnessSet product_apartness(const ApartnessSet& a, const ApartnessSet& b) {
  std::size_t na = a.size(), nb = b.size(), n = na * nb;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Index i = 0; i < na; ++i) {
    for (Index j = 0; j < nb; ++j) {
      labels.push_back("(" + a.carrier().label(i) + "," +
                       b.carrier().label(j) + ")");
    }
  }
  Rel eq(n), ap(n);
  for (Index i = 0; i < na; ++i) {
    for (Index j = 0; j < nb; ++j) {
      Index p = static_cast<Index>(std::size_t{i} * nb + j);
      for (Index u = 0; u < na; ++u) {
        for (Index v = 0; v < nb; ++v) {
          Index q = static_cast<Index>(std::size_t{u} * nb + v);
          if (a.equal(i, u) && b.equal(j, v)) eq.insert(p, q);
          if (a.apart(i, u) || b.apart(j, v)) ap.insert(p, q);
        }
      }
    }
  }
  return ApartnessSet::validated(Carrier(std::move(labels)), std::move(eq),
                                 std::move(ap));
}

}  // namespace apx
