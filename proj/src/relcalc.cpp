#include "apx/relcalc.hpp"

namespace apx {

std::string to_string(RelKind kind) {
  switch (kind) {
    case RelKind::kQuasiorder: return "quasiorder";
    case RelKind::kEquivalence: return "equivalence";
    case RelKind::kOrder: return "order";
    case RelKind::kCoQuasiorder: return "co-quasiorder";
    case RelKind::kCoEquivalence: return "co-equivalence";
    case RelKind::kCoOrder: return "co-order";
    case RelKind::kNone: return "none";
  }
  return "none";
}

Rel compose(const Rel& alpha, const Rel& beta) {
  require_same_size(alpha, beta);
  std::size_t n = alpha.size();
  Rel out(n);
  for (Index x = 0; x < n; ++x) {
    for (Index z = 0; z < n; ++z) {
      for (Index y = 0; y < n; ++y) {
        if (alpha.contains(x, y) && beta.contains(y, z)) {
          out.insert(x, z);
          break;
        }
      }
    }
  }
  return out;
}

Rel cocompose(const Rel& alpha, const Rel& beta) {
  require_same_size(alpha, beta);
  std::size_t n = alpha.size();
  Rel out(n);
  for (Index x = 0; x < n; ++x) {
    for (Index z = 0; z < n; ++z) {
      bool all = true;
      for (Index y = 0; y < n; ++y) {
        if (!alpha.contains(x, y) && !beta.contains(y, z)) {
          all = false;
          break;
        }
      }
      if (all) out.insert(x, z);
    }
  }
  return out;
}

RelComplements rel_complements(const ApartnessSet& a, const Rel& alpha) {
  if (alpha.size() != a.size()) {
    throw Error("CarrierMismatch", "relation does not live on the carrier");
  }
  std::size_t n = a.size();
  RelComplements out{alpha.complement(), Rel(n)};
  auto alpha_pairs = alpha.pairs();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      bool apart_from_all = true;
      for (auto [u, v] : alpha_pairs) {
        if (!a.apart(x, u) && !a.apart(y, v)) {
          apart_from_all = false;
          break;
        }
      }
      if (apart_from_all) out.apart.insert(x, y);
    }
  }
  return out;
}

RelProperties check_properties(const ApartnessSet& a, const Rel& alpha) {
  if (alpha.size() != a.size()) {
    throw Error("CarrierMismatch", "relation does not live on the carrier");
  }
  std::size_t n = a.size();
  RelProperties p;

  p.reflexive.holds = true;
  for (Index x = 0; x < n && p.reflexive.holds; ++x) {
    if (!alpha.contains(x, x)) p.reflexive = {false, {x}};
  }

  p.symmetric.holds = true;
  for (Index x = 0; x < n && p.symmetric.holds; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (alpha.contains(x, y) && !alpha.contains(y, x)) {
        p.symmetric = {false, {x, y}};
        break;
      }
    }
  }

  p.antisymmetric.holds = true;
  for (Index x = 0; x < n && p.antisymmetric.holds; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (alpha.contains(x, y) && alpha.contains(y, x) && !a.equal(x, y)) {
        p.antisymmetric = {false, {x, y}};
        break;
      }
    }
  }

  p.transitive.holds = true;
  for (Index x = 0; x < n && p.transitive.holds; ++x) {
    for (Index y = 0; y < n && p.transitive.holds; ++y) {
      if (!alpha.contains(x, y)) continue;
      for (Index z = 0; z < n; ++z) {
        if (alpha.contains(y, z) && !alpha.contains(x, z)) {
          p.transitive = {false, {x, y, z}};
          break;
        }
      }
    }
  }

  p.irreflexive.holds = true;
  for (Index x = 0; x < n && p.irreflexive.holds; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (alpha.contains(x, y) && a.equal(x, y)) {
        p.irreflexive = {false, {x, y}};
        break;
      }
    }
  }

  p.strongly_irreflexive.holds = true;
  for (Index x = 0; x < n && p.strongly_irreflexive.holds; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (alpha.contains(x, y) && !a.apart(x, y)) {
        p.strongly_irreflexive = {false, {x, y}};
        break;
      }
    }
  }

  p.cotransitive.holds = true;
  for (Index x = 0; x < n && p.cotransitive.holds; ++x) {
    for (Index z = 0; z < n && p.cotransitive.holds; ++z) {
      if (!alpha.contains(x, z)) continue;
      for (Index y = 0; y < n; ++y) {
        if (!alpha.contains(x, y) && !alpha.contains(y, z)) {
          p.cotransitive = {false, {x, z, y}};
          break;
        }
      }
    }
  }

  p.coantisymmetric.holds = true;
  for (Index x = 0; x < n && p.coantisymmetric.holds; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (a.apart(x, y) && !alpha.contains(x, y) && !alpha.contains(y, x)) {
        p.coantisymmetric = {false, {x, y}};
        break;
      }
    }
  }
  return p;
}

RelClass classify(const ApartnessSet& a, const Rel& alpha) {
  RelClass out;
  out.props = check_properties(a, alpha);
  const auto& p = out.props;
  bool quasi = p.reflexive.holds && p.transitive.holds;
  bool coquasi = p.strongly_irreflexive.holds && p.cotransitive.holds;
  if (coquasi && p.symmetric.holds) {
    out.kind = RelKind::kCoEquivalence;
  } else if (coquasi && p.coantisymmetric.holds) {
    out.kind = RelKind::kCoOrder;
  } else if (coquasi) {
    out.kind = RelKind::kCoQuasiorder;
  } else if (quasi && p.symmetric.holds) {
    out.kind = RelKind::kEquivalence;
  } else if (quasi && p.antisymmetric.holds) {
    out.kind = RelKind::kOrder;
  } else if (quasi) {
    out.kind = RelKind::kQuasiorder;
  } else {
    out.kind = RelKind::kNone;
  }
  return out;
}

bool associated_with(const Rel& alpha, const Rel& beta) {
  require_same_size(alpha, beta);
  std::size_t n = alpha.size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!alpha.contains(x, y)) continue;
      for (Index z = 0; z < n; ++z) {
        if (beta.contains(y, z) && !alpha.contains(x, z)) return false;
      }
    }
  }
  return true;
}

bool is_equivalence(const Rel& rel) {
  std::size_t n = rel.size();
  for (Index x = 0; x < n; ++x) {
    if (!rel.contains(x, x)) return false;
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (rel.contains(x, y) && !rel.contains(y, x)) return false;
    }
  }
  return is_quasiorder(rel);
}

bool is_quasiorder(const Rel& rel) {
  std::size_t n = rel.size();
  for (Index x = 0; x < n; ++x) {
    if (!rel.contains(x, x)) return false;
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!rel.contains(x, y)) continue;
      for (Index z = 0; z < n; ++z) {
        if (rel.contains(y, z) && !rel.contains(x, z)) return false;
      }
    }
  }
  return true;
}

bool is_order(const ApartnessSet& a, const Rel& rel) {
  if (!is_quasiorder(rel)) return false;
  std::size_t n = rel.size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (rel.contains(x, y) && rel.contains(y, x) && !a.equal(x, y)) {
        return false;
      }
    }
  }
  return true;
}

bool is_coquasiorder(const ApartnessSet& a, const Rel& rel) {
  std::size_t n = rel.size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (rel.contains(x, y) && !a.apart(x, y)) return false;
    }
  }
  for (Index x = 0; x < n; ++x) {
    for (Index z = 0; z < n; ++z) {
      if (!rel.contains(x, z)) continue;
      for (Index y = 0; y < n; ++y) {
        if (!rel.contains(x, y) && !rel.contains(y, z)) return false;
      }
    }
  }
  return true;
}

bool is_coequivalence(const ApartnessSet& a, const Rel& rel) {
  if (!is_coquasiorder(a, rel)) return false;
  std::size_t n = rel.size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (rel.contains(x, y) && !rel.contains(y, x)) return false;
    }
  }
  return true;
}

bool is_coorder(const ApartnessSet& a, const Rel& rel) {
  if (!is_coquasiorder(a, rel)) return false;
  std::size_t n = rel.size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (a.apart(x, y) && !rel.contains(x, y) && !rel.contains(y, x)) {
        return false;
      }
    }
  }
  return true;
}

Rel codiagonal(const ApartnessSet& a) { return a.eq().complement(); }

}  // namespace apx
