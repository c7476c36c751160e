#include "apx/setoid_map.hpp"

namespace apx {

namespace {

MapFlags compute_flags(const ApartnessSet& dom, const ApartnessSet& cod,
                       const std::vector<Index>& g) {
  std::size_t n = dom.size();
  MapFlags f;
  f.extensional = true;
  f.se = true;
  f.injective = true;
  f.a_injective = true;
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (dom.equal(x, y) && !cod.equal(g[x], g[y])) f.extensional = false;
      if (cod.apart(g[x], g[y]) && !dom.apart(x, y)) f.se = false;
      if (cod.equal(g[x], g[y]) && !dom.equal(x, y)) f.injective = false;
      if (dom.apart(x, y) && !cod.apart(g[x], g[y])) f.a_injective = false;
    }
  }
  f.surjective = true;
  for (Index t = 0; t < cod.size(); ++t) {
    bool hit = false;
    for (Index x = 0; x < n; ++x) {
      if (cod.equal(g[x], t)) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      f.surjective = false;
      break;
    }
  }
  return f;
}

}  // namespace

SetoidMap SetoidMap::make(ApartnessSet domain, ApartnessSet codomain,
                          std::vector<Index> graph) {
  if (graph.size() != domain.size()) {
    throw Error("ShapeError", "map graph must be total on the domain");
  }
  for (Index v : graph) {
    if (v >= codomain.size()) {
      throw Error("IndexOutOfRange", "map image out of codomain range");
    }
  }
  for (Index x = 0; x < domain.size(); ++x) {
    for (Index y = 0; y < domain.size(); ++y) {
      if (domain.equal(x, y) && !codomain.equal(graph[x], graph[y])) {
        throw Error("NonExtensional", "map does not respect equality",
                    {x, y});
      }
    }
  }
  MapFlags flags = compute_flags(domain, codomain, graph);
  return SetoidMap(std::move(domain), std::move(codomain), std::move(graph),
                   flags);
}

SetoidMap SetoidMap::identity(const ApartnessSet& a) {
  std::vector<Index> g(a.size());
  for (Index x = 0; x < a.size(); ++x) g[x] = x;
  return make(a, a, std::move(g));
}

bool SetoidMap::pointwise_equal(const SetoidMap& other) const {
  if (graph_.size() != other.graph_.size()) return false;
  for (Index x = 0; x < graph_.size(); ++x) {
    if (!codomain_.equal(graph_[x], other.graph_[x])) return false;
  }
  return true;
}

MapClassification classify_map(const SetoidMap& f, const Rel* dom_rel,
                               const Rel* cod_rel) {
  MapClassification out;
  out.flags = f.flags();
  if (dom_rel == nullptr || cod_rel == nullptr) return out;
  if (dom_rel->size() != f.domain().size() ||
      cod_rel->size() != f.codomain().size()) {
    throw Error("CarrierMismatch", "monotonicity relations have wrong size");
  }
  std::size_t n = f.domain().size();
  bool isotone = true, reverse = true;
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      bool in_dom = dom_rel->contains(x, y);
      bool in_cod = cod_rel->contains(f.apply(x), f.apply(y));
      if (in_dom && !in_cod) isotone = false;
      if (in_cod && !in_dom) reverse = false;
    }
  }
  out.isotone = isotone;
  out.reverse_isotone = reverse;
  return out;
}

KernelPair kernel_cokernel(const SetoidMap& f) {
  std::size_t n = f.domain().size();
  KernelPair out{Rel(n), Rel(n)};
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (f.codomain().equal(f.apply(x), f.apply(y))) out.ker.insert(x, y);
      if (f.codomain().apart(f.apply(x), f.apply(y))) out.coker.insert(x, y);
    }
  }
  return out;
}

Rel pullback_relation(const SetoidMap& f, const Rel& cod_rel) {
  if (cod_rel.size() != f.codomain().size()) {
    throw Error("CarrierMismatch", "relation does not live on the codomain");
  }
  std::size_t n = f.domain().size();
  Rel out(n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (cod_rel.contains(f.apply(x), f.apply(y))) out.insert(x, y);
    }
  }
  return out;
}

}  // namespace apx
