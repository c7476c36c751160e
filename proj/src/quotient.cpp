#include "apx/quotient.hpp"

#include <algorithm>

namespace apx {

namespace detail {

Partition partition_from_equivalence(const Rel& eq_like) {
  std::size_t n = eq_like.size();
  Partition p;
  p.class_of.assign(n, static_cast<Index>(n));
  for (Index x = 0; x < n; ++x) {
    if (p.class_of[x] != n) continue;
    Index id = static_cast<Index>(p.classes.size());
    std::vector<Index> members;
    for (Index y = x; y < n; ++y) {
      if (eq_like.contains(x, y)) {
        members.push_back(y);
        p.class_of[y] = id;
      }
    }
    p.classes.push_back(std::move(members));
  }
  return p;
}

Carrier class_carrier(const ApartnessSet& source, const Partition& p) {
  std::vector<std::string> labels;
  labels.reserve(p.classes.size());
  for (const auto& cls : p.classes) {
    labels.push_back("[" + source.carrier().label(cls.front()) + "]");
  }
  return Carrier(std::move(labels));
}

ClassRelation push_relation(const Partition& p, const Rel& rel) {
  std::size_t m = p.classes.size();
  ClassRelation out{Rel(m), true, {}};
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      bool value = rel.contains(p.classes[i].front(), p.classes[j].front());
      if (value) out.rel.insert(i, j);
      for (Index x : p.classes[i]) {
        for (Index y : p.classes[j]) {
          if (rel.contains(x, y) != value && out.representative_independent) {
            out.representative_independent = false;
            out.witness = {x, y};
          }
        }
      }
    }
  }
  return out;
}

}  // namespace detail

namespace {

using detail::Partition;

// Builds the witness skeleton shared by every quotient construction.
QuotientWitness assemble(const ApartnessSet& a, Partition p,
                         std::optional<Rel> class_ap, Certificate cert) {
  Carrier qc = detail::class_carrier(a, p);
  std::size_t m = p.classes.size();
  Rel q_eq = Rel::diagonal(m);
  Rel q_ap = class_ap ? *class_ap : Rel(m);
  bool has_ap = class_ap.has_value();

  AxiomReport report;
  auto qset = ApartnessSet::make(qc, q_eq, q_ap, &report);
  add_check(cert, "quotient-apartness-axioms", qset.has_value(),
            report.ok() ? std::vector<Index>{}
                        : report.violations.front().witness);
  if (!qset) {
    // Fall back to an empty apartness so the witness stays inspectable; the
    // failed certificate entry records the defect.
    qset = ApartnessSet::validated(qc, q_eq, Rel(m));
    has_ap = false;
  }

  std::vector<Index> graph(a.size());
  for (Index x = 0; x < a.size(); ++x) graph[x] = p.class_of[x];
  SetoidMap pi = SetoidMap::make(a, *qset, std::move(graph));
  add_check(cert, "projection-surjective", pi.surjective());
  add_check(cert, "projection-se", pi.se());

  QuotientWitness w{a,
                    std::move(p.classes),
                    std::move(p.class_of),
                    *std::move(qset),
                    has_ap,
                    std::nullopt,
                    std::move(pi),
                    std::move(cert)};
  return w;
}

void require_refines(const ApartnessSet& a, const Rel& eps) {
  std::size_t n = a.size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (a.equal(x, y) && !eps.contains(x, y)) {
        throw Error("EqNotRefined", "equivalence does not contain eq", {x, y});
      }
    }
  }
}

}  // namespace

QuotientWitness quotient_by_equivalence(const ApartnessSet& a,
                                        const Rel& eps) {
  if (eps.size() != a.size()) {
    throw Error("CarrierMismatch", "relation does not live on the carrier");
  }
  if (!is_equivalence(eps)) {
    throw Error("NotAnEquivalence", "relation is not an equivalence");
  }
  require_refines(a, eps);
  Certificate cert;
  add_check(cert, "eps-equivalence", true);
  return assemble(a, detail::partition_from_equivalence(eps), std::nullopt,
                  std::move(cert));
}

InducedRelation induced_quotient_relation(const QuotientWitness& q,
                                          const Rel& rho) {
  if (rho.size() != q.source.size()) {
    throw Error("CarrierMismatch", "relation does not live on the source");
  }
  std::size_t m = q.classes.size();
  InducedRelation out{Rel(m), true};
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      bool some = false, all = true;
      for (Index x : q.classes[i]) {
        for (Index y : q.classes[j]) {
          if (rho.contains(x, y)) {
            some = true;
          } else {
            all = false;
          }
        }
      }
      if (some) out.theta.insert(i, j);
      if (some != all) out.well_defined = false;
    }
  }
  return out;
}

QuotientWitness birkhoff_classical(const ApartnessSet& a, const Rel& rho) {
  if (rho.size() != a.size()) {
    throw Error("CarrierMismatch", "relation does not live on the carrier");
  }
  if (!is_quasiorder(rho)) {
    throw Error("NotAQuasiorder", "relation is not reflexive and transitive");
  }
  Rel eps = rho.intersected(rho.inverse());
  require_refines(a, eps);

  Certificate cert;
  add_check(cert, "eps-equivalence", is_equivalence(eps));
  Partition p = detail::partition_from_equivalence(eps);
  auto pushed = detail::push_relation(p, rho);
  add_check(cert, "theta-representative-independent",
            pushed.representative_independent, pushed.witness);

  QuotientWitness w = assemble(a, std::move(p), std::nullopt, std::move(cert));
  add_check(w.certificate, "theta-order", is_order(w.quotient, pushed.rel));

  auto cls = classify_map(w.projection, &rho, &pushed.rel);
  add_check(w.certificate, "projection-isotone", cls.isotone.value_or(false));
  add_check(w.certificate, "projection-reverse-isotone",
            cls.reverse_isotone.value_or(false));
  w.induced_rel = std::move(pushed.rel);
  return w;
}

QuotientWitness quotient_by_coequivalence(const ApartnessSet& a,
                                          const Rel& kappa) {
  if (kappa.size() != a.size()) {
    throw Error("CarrierMismatch", "relation does not live on the carrier");
  }
  if (!is_coequivalence(a, kappa)) {
    throw Error("NotACoequivalence", "relation is not a co-equivalence");
  }
  Certificate cert;
  add_check(cert, "kappa-coequivalence", true);

  Rel logical = kappa.complement();
  Rel apart = rel_complements(a, kappa).apart;
  add_check(cert, "apartness-complement-equals-logical", apart == logical);
  if (apart != logical) {
    // Contradicts the complement law for co-quasiorders; abort loudly.
    throw Error("CertificateFailure",
                "apartness and logical complements of the co-equivalence "
                "disagree");
  }
  add_check(cert, "complement-equivalence", is_equivalence(logical));
  add_check(cert, "kappa-associated-with-complement",
            associated_with(kappa, logical));

  Partition p = detail::partition_from_equivalence(logical);
  auto class_ap = detail::push_relation(p, kappa);
  add_check(cert, "induced-apartness-representative-independent",
            class_ap.representative_independent, class_ap.witness);

  QuotientWitness w =
      assemble(a, std::move(p), std::move(class_ap.rel), std::move(cert));

  // Class equality must coincide with the apartness complement on the source.
  bool eq_matches = true;
  std::vector<Index> eq_witness;
  for (Index x = 0; x < a.size() && eq_matches; ++x) {
    for (Index y = 0; y < a.size(); ++y) {
      bool same = w.class_of[x] == w.class_of[y];
      if (same != logical.contains(x, y)) {
        eq_matches = false;
        eq_witness = {x, y};
        break;
      }
    }
  }
  add_check(w.certificate, "class-equality-matches-complement", eq_matches,
            eq_witness);
  return w;
}

DefinesApartness defines_apartness_check(const ApartnessSet& a, const Rel& eps,
                                         const Rel& kappa) {
  if (eps.size() != a.size() || kappa.size() != a.size()) {
    throw Error("CarrierMismatch", "relation does not live on the carrier");
  }
  if (!is_equivalence(eps)) {
    throw Error("NotAnEquivalence", "first relation must be an equivalence");
  }
  if (!is_coequivalence(a, kappa)) {
    throw Error("NotACoequivalence",
                "second relation must be a co-equivalence");
  }
  require_refines(a, eps);

  DefinesApartness out{true, {}, std::nullopt};
  Rel meet = eps.intersected(kappa);
  if (!meet.empty()) {
    auto w = meet.pairs().front();
    out.ok = false;
    out.witness = {w.first, w.second};
    return out;
  }

  Certificate cert;
  add_check(cert, "eps-kappa-disjoint", true);

  // The well-definedness transfer: related arguments see the same kappa
  // verdict.
  bool ap6_prime = true;
  std::vector<Index> ap6_witness;
  std::size_t n = a.size();
  for (Index x = 0; x < n && ap6_prime; ++x) {
    for (Index u = 0; u < n && ap6_prime; ++u) {
      if (!eps.contains(x, u)) continue;
      for (Index y = 0; y < n && ap6_prime; ++y) {
        for (Index v = 0; v < n; ++v) {
          if (!eps.contains(y, v)) continue;
          if (kappa.contains(x, y) != kappa.contains(u, v)) {
            ap6_prime = false;
            ap6_witness = {x, y, u, v};
            break;
          }
        }
      }
    }
  }
  add_check(cert, "ap6-prime", ap6_prime, ap6_witness);

  Partition p = detail::partition_from_equivalence(eps);
  auto class_ap = detail::push_relation(p, kappa);
  add_check(cert, "induced-apartness-representative-independent",
            class_ap.representative_independent, class_ap.witness);
  out.quotient =
      assemble(a, std::move(p), std::move(class_ap.rel), std::move(cert));
  return out;
}

QuotientWitness birkhoff_constructive(const ApartnessSet& a, const Rel& tau) {
  if (tau.size() != a.size()) {
    throw Error("CarrierMismatch", "relation does not live on the carrier");
  }
  if (!is_coquasiorder(a, tau)) {
    throw Error("NotACoquasiorder", "relation is not a co-quasiorder");
  }
  Rel kappa = tau.united(tau.inverse());
  Certificate pre;
  add_check(pre, "tau-coquasiorder", true);
  add_check(pre, "kappa-coequivalence", is_coequivalence(a, kappa));

  QuotientWitness w = quotient_by_coequivalence(a, kappa);
  w.certificate.insert(w.certificate.begin(), pre.begin(), pre.end());

  Partition p{w.classes, w.class_of};
  auto upsilon = detail::push_relation(p, tau);
  add_check(w.certificate, "upsilon-representative-independent",
            upsilon.representative_independent, upsilon.witness);
  add_check(w.certificate, "upsilon-coorder",
            is_coorder(w.quotient, upsilon.rel));

  auto cls = classify_map(w.projection, &tau, &upsilon.rel);
  add_check(w.certificate, "projection-isotone", cls.isotone.value_or(false));
  add_check(w.certificate, "projection-reverse-isotone",
            cls.reverse_isotone.value_or(false));
  w.induced_rel = std::move(upsilon.rel);
  return w;
}

}  // namespace apx
