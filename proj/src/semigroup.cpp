#include "apx/semigroup.hpp"

#include <algorithm>

namespace apx {

namespace {

// Pairs not related by ap, the only candidates that can violate strong
// extensionality. Scanning their products keeps the check exact while
// avoiding the full quadruple loop on dense apartness.
std::vector<std::pair<Index, Index>> close_pairs(const ApartnessSet& a) {
  std::vector<std::pair<Index, Index>> out;
  for (Index x = 0; x < a.size(); ++x) {
    for (Index y = 0; y < a.size(); ++y) {
      if (!a.apart(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace

AxiomReport ApartnessSemigroup::check(const ApartnessSet& base,
                                      const std::vector<Index>& table) {
  std::size_t n = base.size();
  if (table.size() != n * n) {
    throw Error("ShapeError", "multiplication table must be n by n");
  }
  for (Index v : table) {
    if (v >= n) throw Error("IndexOutOfRange", "table entry out of range");
  }
  AxiomReport report;
  auto mul = [&](Index a, Index b) { return table[a * n + b]; };

  // Well-definedness modulo eq.
  std::vector<std::pair<Index, Index>> eq_pairs;
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (base.equal(x, y)) eq_pairs.emplace_back(x, y);
    }
  }
  for (auto [x, x2] : eq_pairs) {
    for (auto [y, y2] : eq_pairs) {
      if (!base.equal(mul(x, y), mul(x2, y2))) {
        report.violations.push_back({"well-defined", {x, x2, y, y2}});
        goto wd_done;
      }
    }
  }
wd_done:
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) {
        if (!base.equal(mul(mul(x, y), z), mul(x, mul(y, z)))) {
          report.violations.push_back({"A", {x, y, z}});
          goto assoc_done;
        }
      }
    }
  }
assoc_done:
  if (!base.ap().empty()) {
    auto close = close_pairs(base);
    for (auto [x, y] : close) {
      for (auto [u, v] : close) {
        if (base.apart(mul(x, u), mul(y, v))) {
          report.violations.push_back({"S", {x, u, y, v}});
          goto se_done;
        }
      }
    }
  }
se_done:
  return report;
}

std::optional<ApartnessSemigroup> ApartnessSemigroup::make(
    ApartnessSet base, std::vector<Index> table, AxiomReport* report) {
  AxiomReport local = check(base, table);
  if (report) *report = local;
  if (!local.ok()) return std::nullopt;
  return ApartnessSemigroup(std::move(base), std::move(table));
}

ApartnessSemigroup ApartnessSemigroup::validated(ApartnessSet base,
                                                 std::vector<Index> table) {
  AxiomReport report;
  auto sg = make(std::move(base), std::move(table), &report);
  if (!sg) {
    const auto& v = report.violations.front();
    std::string code = v.axiom == "A"   ? "NotAssociative"
                       : v.axiom == "S" ? "NotStronglyExtensional"
                                        : "NotWellDefined";
    throw Error(code, "semigroup axiom " + v.axiom + " violated", v.witness);
  }
  return *std::move(sg);
}

CompatibilityFlags check_compatibility(const ApartnessSemigroup& sg,
                                       const Rel& rel) {
  if (rel.size() != sg.size()) {
    throw Error("CarrierMismatch", "relation does not live on the carrier");
  }
  std::size_t n = sg.size();
  CompatibilityFlags f;
  f.left.holds = f.right.holds = f.full.holds = true;
  f.co_left.holds = f.co_right.holds = f.co_full.holds = true;

  for (Index z = 0; z < n; ++z) {
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        if (rel.contains(x, y)) {
          if (f.left.holds && !rel.contains(sg.mul(z, x), sg.mul(z, y))) {
            f.left = {false, {z, x, y}};
          }
          if (f.right.holds && !rel.contains(sg.mul(x, z), sg.mul(y, z))) {
            f.right = {false, {x, y, z}};
          }
        }
        if (rel.contains(sg.mul(z, x), sg.mul(z, y)) && !rel.contains(x, y) &&
            f.co_left.holds) {
          f.co_left = {false, {z, x, y}};
        }
        if (rel.contains(sg.mul(x, z), sg.mul(y, z)) && !rel.contains(x, y) &&
            f.co_right.holds) {
          f.co_right = {false, {x, y, z}};
        }
      }
    }
  }
  for (Index x = 0; x < n && f.full.holds; ++x) {
    for (Index y = 0; y < n && f.full.holds; ++y) {
      if (!rel.contains(x, y)) continue;
      for (Index s = 0; s < n && f.full.holds; ++s) {
        for (Index t = 0; t < n; ++t) {
          if (rel.contains(s, t) &&
              !rel.contains(sg.mul(x, s), sg.mul(y, t))) {
            f.full = {false, {x, y, s, t}};
            break;
          }
        }
      }
    }
  }
  for (Index x = 0; x < n && f.co_full.holds; ++x) {
    for (Index z = 0; z < n && f.co_full.holds; ++z) {
      for (Index y = 0; y < n && f.co_full.holds; ++y) {
        for (Index t = 0; t < n; ++t) {
          if (rel.contains(sg.mul(x, z), sg.mul(y, t)) &&
              !rel.contains(x, y) && !rel.contains(z, t)) {
            f.co_full = {false, {x, z, y, t}};
            break;
          }
        }
      }
    }
  }
  return f;
}

namespace {

// Multiplication on quotient classes via least representatives, with the
// representative-independence scan that certifies it.
struct ClassTable {
  std::vector<Index> table;
  bool well_defined;
  std::vector<Index> witness;
};

ClassTable class_table(const ApartnessSemigroup& sg,
                       const QuotientWitness& q) {
  std::size_t m = q.classes.size();
  ClassTable out{std::vector<Index>(m * m), true, {}};
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      Index rep = sg.mul(q.classes[i].front(), q.classes[j].front());
      out.table[i * m + j] = q.class_of[rep];
      for (Index x : q.classes[i]) {
        for (Index y : q.classes[j]) {
          if (q.class_of[sg.mul(x, y)] != q.class_of[rep] &&
              out.well_defined) {
            out.well_defined = false;
            out.witness = {x, y, q.classes[i].front(), q.classes[j].front()};
          }
        }
      }
    }
  }
  return out;
}

SemigroupQuotient finish_semigroup_quotient(const ApartnessSemigroup& sg,
                                            QuotientWitness q) {
  ClassTable ct = class_table(sg, q);
  add_check(q.certificate, "multiplication-representative-independent",
            ct.well_defined, ct.witness);
  if (!ct.well_defined) {
    throw Error("CertificateFailure",
                "quotient multiplication depends on representatives",
                ct.witness);
  }
  AxiomReport report;
  auto qsg = ApartnessSemigroup::make(q.quotient, ct.table, &report);
  add_check(q.certificate, "quotient-semigroup-axioms", report.ok(),
            report.ok() ? std::vector<Index>{}
                        : report.violations.front().witness);
  if (!qsg) {
    throw Error("CertificateFailure", "quotient fails the semigroup axioms",
                report.violations.front().witness);
  }
  // The projection is a homomorphism by construction of the class table.
  bool pi_hom = true;
  for (Index x = 0; x < sg.size() && pi_hom; ++x) {
    for (Index y = 0; y < sg.size(); ++y) {
      if (q.class_of[sg.mul(x, y)] !=
          qsg->mul(q.class_of[x], q.class_of[y])) {
        pi_hom = false;
        break;
      }
    }
  }
  add_check(q.certificate, "projection-homomorphism", pi_hom);
  return SemigroupQuotient{*std::move(qsg), std::move(q)};
}

}  // namespace

SemigroupQuotient quotient_semigroup_by_congruence(const ApartnessSemigroup& sg,
                                                   const Rel& eps) {
  if (!is_equivalence(eps)) {
    throw Error("NotCongruence", "relation is not an equivalence");
  }
  auto compat = check_compatibility(sg, eps);
  if (!compat.full.holds) {
    throw Error("NotCongruence", "equivalence is not compatible",
                compat.full.witness);
  }
  QuotientWitness q = quotient_by_equivalence(sg.base(), eps);
  add_check(q.certificate, "eps-compatible", true);
  return finish_semigroup_quotient(sg, std::move(q));
}

SemigroupQuotient quotient_semigroup_by_cocongruence(
    const ApartnessSemigroup& sg, const Rel& kappa) {
  if (!is_coequivalence(sg.base(), kappa)) {
    throw Error("NotCocongruence", "relation is not a co-equivalence");
  }
  auto compat = check_compatibility(sg, kappa);
  if (!compat.co_full.holds) {
    throw Error("NotCocongruence", "co-equivalence is not co-compatible",
                compat.co_full.witness);
  }
  QuotientWitness q = quotient_by_coequivalence(sg.base(), kappa);
  add_check(q.certificate, "kappa-co-compatible", true);
  return finish_semigroup_quotient(sg, std::move(q));
}

SemigroupQuotient quotient_semigroup_mixed(const ApartnessSemigroup& sg,
                                           const Rel& mu, const Rel& kappa) {
  if (!is_equivalence(mu)) {
    throw Error("NotCongruence", "relation is not an equivalence");
  }
  auto mu_compat = check_compatibility(sg, mu);
  if (!mu_compat.full.holds) {
    throw Error("NotCongruence", "equivalence is not compatible",
                mu_compat.full.witness);
  }
  if (!is_coequivalence(sg.base(), kappa)) {
    throw Error("NotCocongruence", "relation is not a co-equivalence");
  }
  auto k_compat = check_compatibility(sg, kappa);
  if (!k_compat.co_full.holds) {
    throw Error("NotCocongruence", "co-equivalence is not co-compatible",
                k_compat.co_full.witness);
  }
  DefinesApartness d = defines_apartness_check(sg.base(), mu, kappa);
  if (!d.ok) {
    throw Error("DisjointnessFailure",
                "congruence and co-congruence are not disjoint", d.witness);
  }
  return finish_semigroup_quotient(sg, *std::move(d.quotient));
}

namespace {

bool is_homomorphism(const ApartnessSemigroup& dom,
                     const ApartnessSemigroup& cod, const SetoidMap& f,
                     std::vector<Index>* witness) {
  for (Index x = 0; x < dom.size(); ++x) {
    for (Index y = 0; y < dom.size(); ++y) {
      if (!cod.base().equal(f.apply(dom.mul(x, y)),
                            cod.mul(f.apply(x), f.apply(y)))) {
        if (witness) *witness = {x, y};
        return false;
      }
    }
  }
  return true;
}

}  // namespace

SemigroupIso semigroup_iso_theorems(const ApartnessSemigroup& dom,
                                    const ApartnessSemigroup& cod,
                                    const SetoidMap& f, const Rel* kappa,
                                    bool classical) {
  if (!(f.domain() == dom.base()) || !(f.codomain() == cod.base())) {
    throw Error("CarrierMismatch",
                "map endpoints do not match the semigroups");
  }
  std::vector<Index> hom_witness;
  if (!is_homomorphism(dom, cod, f, &hom_witness)) {
    throw Error("NotHomomorphism", "map is not a homomorphism", hom_witness);
  }

  IsoWitness iso;
  if (classical) {
    iso = first_iso_classical(f);
  } else if (kappa != nullptr) {
    auto second = second_apartness_iso(f, *kappa);
    iso = std::move(second.iso);
  } else {
    iso = first_apartness_iso(f);
  }

  KernelPair kp = kernel_cokernel(f);
  add_check(iso.checks, "ker-congruence",
            check_compatibility(dom, kp.ker).full.holds);
  if (!classical) {
    add_check(iso.checks, "coker-cocongruence",
              is_coequivalence(dom.base(), kp.coker) &&
                  check_compatibility(dom, kp.coker).co_full.holds);
  }

  SemigroupQuotient sq =
      finish_semigroup_quotient(dom, std::move(iso.quotient));
  iso.quotient = std::move(sq.witness);

  bool phi_hom = true;
  for (Index i = 0; i < sq.quotient.size() && phi_hom; ++i) {
    for (Index j = 0; j < sq.quotient.size(); ++j) {
      if (!cod.base().equal(iso.phi.apply(sq.quotient.mul(i, j)),
                            cod.mul(iso.phi.apply(i), iso.phi.apply(j)))) {
        phi_hom = false;
        break;
      }
    }
  }
  add_check(iso.checks, "phi-homomorphism", phi_hom);
  if (!classical && kappa == nullptr) {
    add_check(iso.checks, "phi-apartness-embedding",
              iso.phi.injective() && iso.phi.se() && iso.phi.a_injective());
    if (f.surjective()) {
      add_check(iso.checks, "phi-apartness-isomorphism",
                iso.phi.surjective() && iso.phi.injective() && iso.phi.se() &&
                    iso.phi.a_injective());
    }
  }
  return SemigroupIso{std::move(iso), std::move(sq.quotient)};
}

std::size_t SeTransformationSemigroup::VecHash::operator()(
    const std::vector<Index>& v) const {
  std::size_t h = 1469598103934665603ull;
  for (Index x : v) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

SeTransformationSemigroup SeTransformationSemigroup::build(
    const ApartnessSet& x) {
  std::size_t n = x.size();
  if (n > 6) {
    throw Error("CarrierTooLarge",
                "self-map enumeration is limited to carriers of size 6");
  }
  SeTransformationSemigroup t;
  t.base_ = x;

  std::vector<Index> map(n, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      map[n - 1 - i] = static_cast<Index>(c % n);
      c /= n;
    }
    bool keep = true;
    for (Index a = 0; a < n && keep; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (x.equal(a, b) && !x.equal(map[a], map[b])) {
          keep = false;
          break;
        }
        if (x.apart(map[a], map[b]) && !x.apart(a, b)) {
          keep = false;
          break;
        }
      }
    }
    if (keep) {
      t.index_.emplace(map, static_cast<Index>(t.elements_.size()));
      t.elements_.push_back(map);
    }
  }

  // Every element strongly extensional (rechecked after the filter).
  bool all_se = true;
  for (const auto& f : t.elements_) {
    for (Index a = 0; a < n && all_se; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (x.apart(f[a], f[b]) && !x.apart(a, b)) {
          all_se = false;
          break;
        }
      }
    }
  }
  add_check(t.verification_, "elements-se", all_se);

  // Closure under composition. When every extensional map was kept the
  // composite is present by construction.
  std::size_t m = t.elements_.size();
  bool closed = true;
  std::size_t extensional_total = 0;
  {
    std::size_t count = 0;
    std::vector<Index> probe(n, 0);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i) {
        probe[n - 1 - i] = static_cast<Index>(c % n);
        c /= n;
      }
      bool ext = true;
      for (Index a = 0; a < n && ext; ++a) {
        for (Index b = 0; b < n; ++b) {
          if (x.equal(a, b) && !x.equal(probe[a], probe[b])) {
            ext = false;
            break;
          }
        }
      }
      if (ext) ++count;
    }
    extensional_total = count;
  }
  if (m != extensional_total) {
    std::vector<Index> comp(n);
    for (Index fi = 0; fi < m && closed; ++fi) {
      for (Index gi = 0; gi < m; ++gi) {
        for (Index a = 0; a < n; ++a) {
          comp[a] = t.elements_[fi][t.elements_[gi][a]];
        }
        if (t.index_.find(comp) == t.index_.end()) {
          closed = false;
          break;
        }
      }
    }
  }
  add_check(t.verification_, "closed-under-composition", closed);

  // Strong extensionality of composition, exact while the close-pair budget
  // holds. An empty element apartness makes it vacuous.
  bool have_apart = false;
  for (Index fi = 0; fi < m && !have_apart; ++fi) {
    for (Index gi = 0; gi < m; ++gi) {
      if (t.elem_apart(fi, gi)) {
        have_apart = true;
        break;
      }
    }
  }
  if (!have_apart) {
    add_check(t.verification_, "se-operation", true);
  } else {
    constexpr std::size_t kClosePairBudget = 20000;
    std::vector<std::pair<Index, Index>> close;
    bool within_budget = true;
    for (Index fi = 0; fi < m && within_budget; ++fi) {
      for (Index gi = 0; gi < m; ++gi) {
        if (!t.elem_apart(fi, gi)) {
          close.emplace_back(fi, gi);
          if (close.size() > kClosePairBudget) {
            within_budget = false;
            break;
          }
        }
      }
    }
    if (within_budget) {
      bool se_op = true;
      std::vector<Index> witness;
      for (auto [f1, g1] : close) {
        for (auto [f2, g2] : close) {
          Index left = t.compose_elems(f1, f2);
          Index right = t.compose_elems(g1, g2);
          if (t.elem_apart(left, right)) {
            se_op = false;
            witness = {f1, f2, g1, g2};
            break;
          }
        }
        if (!se_op) break;
      }
      add_check(t.verification_, "se-operation", se_op, witness);
    }
  }
  return t;
}

bool SeTransformationSemigroup::elem_eq(Index f, Index g) const {
  const auto& a = elements_[f];
  const auto& b = elements_[g];
  for (Index i = 0; i < a.size(); ++i) {
    if (!base_.equal(a[i], b[i])) return false;
  }
  return true;
}

bool SeTransformationSemigroup::elem_apart(Index f, Index g) const {
  const auto& a = elements_[f];
  const auto& b = elements_[g];
  for (Index i = 0; i < a.size(); ++i) {
    if (base_.apart(a[i], b[i])) return true;
  }
  return false;
}

std::optional<Index> SeTransformationSemigroup::find(
    const std::vector<Index>& map) const {
  auto it = index_.find(map);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index SeTransformationSemigroup::compose_elems(Index f, Index g) const {
  std::vector<Index> comp(base_.size());
  for (Index a = 0; a < base_.size(); ++a) {
    comp[a] = elements_[f][elements_[g][a]];
  }
  auto it = index_.find(comp);
  if (it == index_.end()) {
    throw Error("CertificateFailure",
                "composite of se-maps missing from the enumeration");
  }
  return it->second;
}

ApartnessSet SeTransformationSemigroup::as_apartness_set() const {
  std::size_t m = elements_.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& f : elements_) {
    std::string l = "<";
    for (Index i = 0; i < f.size(); ++i) {
      if (i) l += ",";
      l += base_.carrier().label(f[i]);
    }
    l += ">";
    labels.push_back(std::move(l));
  }
  Rel eq(m), ap(m);
  for (Index f = 0; f < m; ++f) {
    for (Index g = 0; g < m; ++g) {
      if (elem_eq(f, g)) eq.insert(f, g);
      if (elem_apart(f, g)) ap.insert(f, g);
    }
  }
  return ApartnessSet::trusted(Carrier(std::move(labels)), std::move(eq),
                               std::move(ap));
}

ApartnessSemigroup SeTransformationSemigroup::as_semigroup() const {
  std::size_t m = elements_.size();
  if (m > 256) {
    throw Error("CarrierTooLarge",
                "materializing the full multiplication table is limited to "
                "256 elements");
  }
  std::vector<Index> table(m * m);
  for (Index f = 0; f < m; ++f) {
    for (Index g = 0; g < m; ++g) {
      table[f * m + g] = compose_elems(f, g);
    }
  }
  return ApartnessSemigroup::validated(as_apartness_set(), std::move(table));
}

CayleyWitness cayley_embedding(const ApartnessSemigroup& sg) {
  std::size_t n = sg.size();
  if (n > 5) {
    throw Error("CarrierTooLarge",
                "identity extension enumeration is limited to 5 elements");
  }

  // Fresh identity label.
  std::string one = "1";
  while (sg.base().carrier().index_of(one)) one += "'";
  std::vector<std::string> labels = sg.base().carrier().labels();
  labels.push_back(one);

  std::size_t n1 = n + 1;
  Rel eq1(n1), ap1(n1);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (sg.base().equal(x, y)) eq1.insert(x, y);
      if (sg.base().apart(x, y)) ap1.insert(x, y);
    }
  }
  eq1.insert(static_cast<Index>(n), static_cast<Index>(n));
  for (Index x = 0; x < n; ++x) {
    ap1.insert(x, static_cast<Index>(n));
    ap1.insert(static_cast<Index>(n), x);
  }

  std::vector<Index> table(n1 * n1);
  for (Index x = 0; x < n1; ++x) {
    for (Index y = 0; y < n1; ++y) {
      Index v;
      if (x == n) {
        v = y;
      } else if (y == n) {
        v = x;
      } else {
        v = sg.mul(x, y);
      }
      table[x * n1 + y] = v;
    }
  }

  Certificate checks;
  ApartnessSet base1 =
      ApartnessSet::validated(Carrier(std::move(labels)), eq1, ap1);
  AxiomReport report;
  auto ext = ApartnessSemigroup::make(base1, table, &report);
  add_check(checks, "extension-semigroup-axioms", report.ok(),
            report.ok() ? std::vector<Index>{}
                        : report.violations.front().witness);
  if (!ext) {
    throw Error("CertificateFailure",
                "identity extension failed the semigroup axioms",
                report.violations.front().witness);
  }

  SeTransformationSemigroup target = SeTransformationSemigroup::build(base1);

  // Left translations, each strongly extensional, each present among the
  // enumerated se-maps.
  std::vector<Index> phi_graph(n1);
  bool translations_se = true;
  for (Index a = 0; a < n1; ++a) {
    std::vector<Index> fa(n1);
    for (Index xx = 0; xx < n1; ++xx) fa[xx] = ext->mul(a, xx);
    for (Index xx = 0; xx < n1 && translations_se; ++xx) {
      for (Index yy = 0; yy < n1; ++yy) {
        if (base1.apart(fa[xx], fa[yy]) && !base1.apart(xx, yy)) {
          translations_se = false;
          break;
        }
      }
    }
    auto idx = target.find(fa);
    if (!idx) {
      throw Error("CertificateFailure",
                  "left translation missing from the se-map enumeration",
                  {a});
    }
    phi_graph[a] = *idx;
  }
  add_check(checks, "translations-se", translations_se);

  SetoidMap phi =
      SetoidMap::make(base1, target.as_apartness_set(), std::move(phi_graph));

  bool hom = true;
  for (Index a = 0; a < n1 && hom; ++a) {
    for (Index b = 0; b < n1; ++b) {
      Index lhs = phi.apply(ext->mul(a, b));
      Index rhs = target.compose_elems(phi.apply(a), phi.apply(b));
      if (!target.elem_eq(lhs, rhs)) {
        hom = false;
        break;
      }
    }
  }
  add_check(checks, "phi-homomorphism", hom);
  add_check(checks, "phi-se", phi.se());
  add_check(checks, "phi-injective", phi.injective());

  if (!all_passed(checks)) {
    throw Error("CertificateFailure", "embedding certificate failed");
  }
  return CayleyWitness{*std::move(ext), std::move(target), std::move(phi),
                       std::move(checks)};
}

SemigroupQuotient ordered_semigroup_birkhoff_classical(
    const ApartnessSemigroup& sg, const Rel& rho) {
  if (!is_quasiorder(rho)) {
    throw Error("NotAQuasiorder", "relation is not reflexive and transitive");
  }
  auto compat = check_compatibility(sg, rho);
  if (!compat.full.holds) {
    throw Error("NotCompatible", "quasiorder is not compatible",
                compat.full.witness);
  }
  QuotientWitness q = birkhoff_classical(sg.base(), rho);
  SemigroupQuotient sq = finish_semigroup_quotient(sg, std::move(q));
  auto ind = check_compatibility(sq.quotient, *sq.witness.induced_rel);
  add_check(sq.witness.certificate, "induced-order-compatible",
            ind.full.holds, ind.full.witness);
  return sq;
}

SemigroupQuotient ordered_semigroup_birkhoff_constructive(
    const ApartnessSemigroup& sg, const Rel& tau) {
  if (!is_coquasiorder(sg.base(), tau)) {
    throw Error("NotACoquasiorder", "relation is not a co-quasiorder");
  }
  auto compat = check_compatibility(sg, tau);
  if (!compat.co_full.holds) {
    throw Error("NotCoCompatible", "co-quasiorder is not co-compatible",
                compat.co_full.witness);
  }
  QuotientWitness q = birkhoff_constructive(sg.base(), tau);
  SemigroupQuotient sq = finish_semigroup_quotient(sg, std::move(q));
  auto ind = check_compatibility(sq.quotient, *sq.witness.induced_rel);
  add_check(sq.witness.certificate, "induced-coorder-co-compatible",
            ind.co_full.holds, ind.co_full.witness);
  return sq;
}

OrderedSemigroupIso ordered_semigroup_iso(const ApartnessSemigroup& dom,
                                          const ApartnessSemigroup& cod,
                                          const SetoidMap& f,
                                          const Rel& dom_order,
                                          const Rel& cod_order,
                                          const Rel* rho) {
  std::vector<Index> hom_witness;
  if (!is_homomorphism(dom, cod, f, &hom_witness)) {
    throw Error("NotHomomorphism", "map is not a homomorphism", hom_witness);
  }
  OrderedSemigroupIso out{ordered_iso_classical(f, dom_order, cod_order, rho),
                          {}};
  add_check(out.checks, "f-homomorphism", true);
  add_check(out.checks, "ker-congruence",
            check_compatibility(dom, kernel_cokernel(f).ker).full.holds);
  return out;
}

CoOrderedSemigroupFactorization co_ordered_semigroup_factorization(
    const ApartnessSemigroup& dom, const ApartnessSemigroup& cod,
    const SetoidMap& f, const Rel& sigma, const Rel* tau) {
  std::vector<Index> hom_witness;
  if (!is_homomorphism(dom, cod, f, &hom_witness)) {
    throw Error("NotHomomorphism", "map is not a homomorphism", hom_witness);
  }
  auto sigma_compat = check_compatibility(cod, sigma);
  if (!sigma_compat.co_full.holds) {
    throw Error("NotCoCompatible",
                "codomain co-quasiorder is not co-compatible",
                sigma_compat.co_full.witness);
  }
  CoOrderFactorization fact = co_order_factorization(f, sigma, tau);

  Certificate checks;
  add_check(checks, "mu-co-compatible",
            check_compatibility(dom, fact.mu).co_full.holds);
  add_check(checks, "kappa-cocongruence",
            is_coequivalence(dom.base(), fact.kappa) &&
                check_compatibility(dom, fact.kappa).co_full.holds);

  SemigroupQuotient dq = quotient_semigroup_by_cocongruence(dom, fact.kappa);
  Rel kappa_sigma = sigma.united(sigma.inverse());
  SemigroupQuotient tq = quotient_semigroup_by_cocongruence(cod, kappa_sigma);

  bool psi_hom = true;
  for (Index i = 0; i < dq.quotient.size() && psi_hom; ++i) {
    for (Index j = 0; j < dq.quotient.size(); ++j) {
      if (fact.psi.apply(dq.quotient.mul(i, j)) !=
          tq.quotient.mul(fact.psi.apply(i), fact.psi.apply(j))) {
        psi_hom = false;
        break;
      }
    }
  }
  add_check(checks, "psi-homomorphism", psi_hom);

  if (tau != nullptr && fact.phi_tight) {
    bool phi_hom = true;
    const SetoidMap& phi = *fact.phi_tight;
    QuotientWitness tauq = birkhoff_constructive(dom.base(), *tau);
    ClassTable ct = class_table(dom, tauq);
    for (Index i = 0; i < tauq.classes.size() && phi_hom; ++i) {
      for (Index j = 0; j < tauq.classes.size(); ++j) {
        Index prod = ct.table[i * tauq.classes.size() + j];
        if (!cod.base().equal(phi.apply(prod),
                              cod.mul(phi.apply(i), phi.apply(j)))) {
          phi_hom = false;
          break;
        }
      }
    }
    add_check(checks, "phi-homomorphism", phi_hom);
  }

  return CoOrderedSemigroupFactorization{std::move(fact),
                                         std::move(dq.quotient),
                                         std::move(tq.quotient),
                                         std::move(checks)};
}

}  // namespace apx
