#include "apx/maps.hpp"

namespace apx {

namespace {

// phi on quotient classes via least representatives; representative
// independence is the caller's concern (certified or guaranteed).
SetoidMap class_map(const QuotientWitness& q, const SetoidMap& f) {
  std::vector<Index> graph(q.classes.size());
  for (Index i = 0; i < q.classes.size(); ++i) {
    graph[i] = f.apply(q.classes[i].front());
  }
  return SetoidMap::make(q.quotient, f.codomain(), std::move(graph));
}

bool factors(const SetoidMap& f, const QuotientWitness& q,
             const SetoidMap& phi) {
  for (Index x = 0; x < f.domain().size(); ++x) {
    if (!f.codomain().equal(phi.apply(q.class_of[x]), f.apply(x))) {
      return false;
    }
  }
  return true;
}

bool representative_independent(const QuotientWitness& q, const SetoidMap& f,
                                std::vector<Index>* witness) {
  for (const auto& cls : q.classes) {
    for (Index m : cls) {
      if (!f.codomain().equal(f.apply(m), f.apply(cls.front()))) {
        if (witness) *witness = {cls.front(), m};
        return false;
      }
    }
  }
  return true;
}

}  // namespace

IsoWitness first_iso_classical(const SetoidMap& f) {
  KernelPair kp = kernel_cokernel(f);
  QuotientWitness q = quotient_by_equivalence(f.domain(), kp.ker);
  SetoidMap phi = class_map(q, f);

  IsoWitness w{std::move(q), std::move(phi), false, {}, {}};
  w.factorization_ok = factors(f, w.quotient, w.phi);
  w.phi_class = classify_map(w.phi);
  add_check(w.checks, "phi-injective", w.phi.injective());
  add_check(w.checks, "factorization", w.factorization_ok);
  add_check(w.checks, "phi-surjective-iff-f-surjective",
            w.phi.surjective() == f.surjective());
  return w;
}

SetoidMap factor_through(const SetoidMap& f, const Rel& eps) {
  KernelPair kp = kernel_cokernel(f);
  if (!eps.subset_of(kp.ker)) {
    Rel excess = eps.intersected(kp.ker.complement());
    auto p = excess.pairs().front();
    throw Error("NotContainedInKernel",
                "equivalence is not contained in the kernel",
                {p.first, p.second});
  }
  QuotientWitness q = quotient_by_equivalence(f.domain(), eps);
  return class_map(q, f);
}

IsoWitness first_apartness_iso(const SetoidMap& f) {
  if (!f.se()) {
    throw Error("NotSe", "map is not strongly extensional");
  }
  KernelPair kp = kernel_cokernel(f);
  Certificate checks;
  add_check(checks, "coker-coequivalence",
            is_coequivalence(f.domain(), kp.coker));
  add_check(checks, "coker-associated-with-ker",
            associated_with(kp.coker, kp.ker));
  add_check(checks, "ker-in-coker-logical-complement",
            kp.ker.subset_of(kp.coker.complement()));

  DefinesApartness d = defines_apartness_check(f.domain(), kp.ker, kp.coker);
  add_check(checks, "coker-defines-apartness-on-kernel-quotient", d.ok,
            d.witness);
  if (!d.quotient) {
    throw Error("CertificateFailure",
                "kernel and co-kernel fail to define a quotient apartness",
                d.witness);
  }
  QuotientWitness q = *std::move(d.quotient);
  checks.insert(checks.end(), q.certificate.begin(), q.certificate.end());
  q.certificate.clear();

  SetoidMap phi = class_map(q, f);
  IsoWitness w{std::move(q), std::move(phi), false, {}, std::move(checks)};
  w.factorization_ok = factors(f, w.quotient, w.phi);
  w.phi_class = classify_map(w.phi);
  add_check(w.checks, "phi-injective", w.phi.injective());
  add_check(w.checks, "phi-a-injective", w.phi.a_injective());
  add_check(w.checks, "phi-se", w.phi.se());
  add_check(w.checks, "factorization", w.factorization_ok);
  if (f.surjective()) {
    add_check(w.checks, "phi-apartness-bijection",
              w.phi.surjective() && w.phi.injective() && w.phi.se() &&
                  w.phi.a_injective());
  }
  return w;
}

SecondIsoWitness second_apartness_iso(const SetoidMap& f, const Rel& kappa) {
  KernelPair kp = kernel_cokernel(f);
  Rel meet = kappa.intersected(kp.ker);
  if (!meet.empty()) {
    auto p = meet.pairs().front();
    throw Error("KappaMeetsKernel",
                "co-equivalence meets the kernel", {p.first, p.second});
  }
  DefinesApartness d = defines_apartness_check(f.domain(), kp.ker, kappa);
  Certificate checks;
  add_check(checks, "kappa-defines-apartness-on-kernel-quotient", d.ok,
            d.witness);
  if (!d.quotient) {
    throw Error("CertificateFailure",
                "disjoint kernel and co-equivalence failed to define an "
                "apartness",
                d.witness);
  }
  QuotientWitness q = *std::move(d.quotient);
  checks.insert(checks.end(), q.certificate.begin(), q.certificate.end());
  q.certificate.clear();

  SetoidMap phi = class_map(q, f);
  SecondIsoWitness out;
  out.phi_se = phi.se();
  out.phi_a_injective = phi.a_injective();

  bool coker_in_kappa = kp.coker.subset_of(kappa);
  bool kappa_in_coker = kappa.subset_of(kp.coker);
  add_check(checks, "phi-se-iff-coker-in-kappa",
            out.phi_se == coker_in_kappa);
  add_check(checks, "phi-a-injective-iff-kappa-in-coker",
            out.phi_a_injective == kappa_in_coker);
  add_check(checks, "phi-se-implies-f-se", !out.phi_se || f.se());

  out.iso = IsoWitness{std::move(q), std::move(phi), false, {},
                       std::move(checks)};
  out.iso.factorization_ok = factors(f, out.iso.quotient, out.iso.phi);
  out.iso.phi_class = classify_map(out.iso.phi);
  add_check(out.iso.checks, "phi-injective", out.iso.phi.injective());
  add_check(out.iso.checks, "factorization", out.iso.factorization_ok);
  return out;
}

OrderedIsoWitness ordered_iso_classical(const SetoidMap& f, const Rel& dom_rel,
                                        const Rel& cod_rel, const Rel* rho) {
  if (dom_rel.size() != f.domain().size()) {
    throw Error("CarrierMismatch", "domain relation has wrong size");
  }
  if (!is_order(f.codomain(), cod_rel)) {
    throw Error("CodomainNotOrdered", "codomain relation is not an order");
  }
  Rel eta = pullback_relation(f, cod_rel);
  Certificate checks;
  add_check(checks, "eta-quasiorder", is_quasiorder(eta));

  KernelPair kp = kernel_cokernel(f);
  Rel eps = eta.intersected(eta.inverse());
  add_check(checks, "ker-equals-eta-meet-inverse", kp.ker == eps);

  QuotientWitness q = birkhoff_classical(f.domain(), eta);
  checks.insert(checks.end(), q.certificate.begin(), q.certificate.end());
  q.certificate.clear();

  SetoidMap phi = class_map(q, f);
  Rel theta = *q.induced_rel;
  auto phi_cls = classify_map(phi, &theta, &cod_rel);
  add_check(checks, "phi-isotone", phi_cls.isotone.value_or(false));
  add_check(checks, "phi-injective", phi.injective());
  if (f.surjective()) {
    add_check(checks, "phi-order-bijection",
              phi.surjective() && phi.injective() &&
                  phi_cls.isotone.value_or(false) &&
                  phi_cls.reverse_isotone.value_or(false));
  }

  OrderedIsoWitness out{std::move(eta),
                        IsoWitness{std::move(q), std::move(phi), false,
                                   phi_cls, std::move(checks)},
                        std::nullopt, std::nullopt};
  out.iso.factorization_ok = factors(f, out.iso.quotient, out.iso.phi);
  add_check(out.iso.checks, "factorization", out.iso.factorization_ok);

  if (rho != nullptr) {
    if (!is_quasiorder(*rho)) {
      throw Error("NotAQuasiorder", "supplied relation is not a quasiorder");
    }
    if (!rho->subset_of(out.eta)) {
      Rel excess = rho->intersected(out.eta.complement());
      auto p = excess.pairs().front();
      throw Error("RhoNotContainedInEta",
                  "quasiorder is not contained in the induced relation",
                  {p.first, p.second});
    }
    QuotientWitness rq = birkhoff_classical(f.domain(), *rho);
    Rel eps_rho = rho->intersected(rho->inverse());
    add_check(out.iso.checks, "eps-rho-in-ker", eps_rho.subset_of(kp.ker));
    SetoidMap phi_rho = class_map(rq, f);
    add_check(out.iso.checks, "phi-rho-representative-independent",
              representative_independent(rq, f, nullptr));
    auto rho_cls = classify_map(phi_rho, &*rq.induced_rel, &cod_rel);
    add_check(out.iso.checks, "phi-rho-isotone",
              rho_cls.isotone.value_or(false));
    add_check(out.iso.checks, "phi-rho-factorization",
              factors(f, rq, phi_rho));
    out.rho_quotient = std::move(rq);
    out.phi_rho = std::move(phi_rho);
  }
  return out;
}

CoOrderFactorization co_order_factorization(const SetoidMap& f,
                                            const Rel& sigma,
                                            const Rel* tau) {
  if (!f.se()) {
    throw Error("NotSe", "map is not strongly extensional");
  }
  if (!is_coquasiorder(f.codomain(), sigma)) {
    throw Error("SigmaNotCoquasiorder",
                "codomain relation is not a co-quasiorder");
  }
  Rel mu = pullback_relation(f, sigma);
  Rel kappa = mu.united(mu.inverse());
  KernelPair kp = kernel_cokernel(f);

  Certificate checks;
  add_check(checks, "mu-coquasiorder", is_coquasiorder(f.domain(), mu));
  add_check(checks, "kappa-coequivalence",
            is_coequivalence(f.domain(), kappa));
  add_check(checks, "kappa-in-coker", kappa.subset_of(kp.coker));
  bool sigma_coorder = is_coorder(f.codomain(), sigma);
  if (sigma_coorder) {
    add_check(checks, "kappa-equals-coker", kappa == kp.coker);
  }

  QuotientWitness dq = birkhoff_constructive(f.domain(), mu);
  QuotientWitness tq = birkhoff_constructive(f.codomain(), sigma);

  std::vector<Index> psi_graph(dq.classes.size());
  for (Index i = 0; i < dq.classes.size(); ++i) {
    psi_graph[i] = tq.class_of[f.apply(dq.classes[i].front())];
  }
  bool psi_ok = true;
  std::vector<Index> psi_witness;
  for (Index i = 0; i < dq.classes.size() && psi_ok; ++i) {
    for (Index m : dq.classes[i]) {
      if (tq.class_of[f.apply(m)] != psi_graph[i]) {
        psi_ok = false;
        psi_witness = {dq.classes[i].front(), m};
        break;
      }
    }
  }
  add_check(checks, "psi-representative-independent", psi_ok, psi_witness);
  if (!psi_ok) {
    throw Error("CertificateFailure",
                "co-order factorization map is not representative "
                "independent",
                psi_witness);
  }
  SetoidMap psi =
      SetoidMap::make(dq.quotient, tq.quotient, std::move(psi_graph));
  auto psi_cls = classify_map(psi, &*dq.induced_rel, &*tq.induced_rel);
  add_check(checks, "psi-isotone", psi_cls.isotone.value_or(false));
  add_check(checks, "psi-reverse-isotone",
            psi_cls.reverse_isotone.value_or(false));
  add_check(checks, "psi-a-injective", psi.a_injective());
  add_check(checks, "psi-se", psi.se());

  // psi . pi_f = pi_sigma . f on every element.
  bool square = true;
  for (Index x = 0; x < f.domain().size(); ++x) {
    if (psi.apply(dq.class_of[x]) != tq.class_of[f.apply(x)]) {
      square = false;
      break;
    }
  }
  add_check(checks, "psi-commutes-with-projections", square);

  CoOrderFactorization out{std::move(mu),    std::move(kappa),
                           std::move(dq),    std::move(tq),
                           std::move(psi),   std::move(checks),
                           std::nullopt};

  if (tau != nullptr) {
    if (!is_coquasiorder(f.domain(), *tau)) {
      throw Error("NotACoquasiorder",
                  "supplied relation is not a co-quasiorder");
    }
    if (!out.mu.subset_of(*tau)) {
      Rel excess = out.mu.intersected(tau->complement());
      auto p = excess.pairs().front();
      throw Error("MuNotContained",
                  "induced co-quasiorder is not contained in tau",
                  {p.first, p.second});
    }
    if (!f.codomain().tight()) {
      throw Error("CodomainNotTight",
                  "tight codomain apartness required for this factorization");
    }
    QuotientWitness tauq = birkhoff_constructive(f.domain(), *tau);
    std::vector<Index> wit;
    bool indep = representative_independent(tauq, f, &wit);
    add_check(out.checks, "phi-representative-independent", indep, wit);
    std::vector<Index> graph(tauq.classes.size());
    for (Index i = 0; i < tauq.classes.size(); ++i) {
      graph[i] = f.apply(tauq.classes[i].front());
    }
    SetoidMap phi =
        SetoidMap::make(tauq.quotient, f.codomain(), std::move(graph));
    add_check(out.checks, "phi-se", phi.se());
    add_check(out.checks, "phi-factorization", indep && factors(f, tauq, phi));
    out.phi_tight = std::move(phi);
  }
  return out;
}

}  // namespace apx
