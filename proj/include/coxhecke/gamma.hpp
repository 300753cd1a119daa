#pragma once

// The parameter set of pairs (J, C): J a delta-stable subset of S and C an
// elliptic delta-class of W_J. It indexes the minimal-length reachability
// classes of W directly, and (through w -> w w0) the maximal-length ones.

#include <algorithm>
#include <map>
#include <memory>
#include <vector>

#include "coxhecke/conjugacy.hpp"
#include "coxhecke/parabolic.hpp"

namespace coxhecke {

struct GammaPair {
  GenSubset J;
  std::shared_ptr<const ParabolicEmbedding> parabolic;
  ConjClass classInWJ;            // in subgroup indices
  std::vector<Index> minSetInW;   // C_min embedded in W, ascending
  Index minRepInW = 0;            // smallest element of minSetInW
  int lengthC = 0;
};

/// All pairs, J in binary-counter order, then class order inside W_J.
inline std::vector<GammaPair> gamma(const DeltaAut& delta) {
  const GroupPtr& g = delta.groupPtr();
  std::vector<GammaPair> out;
  const std::uint32_t limit = 1u << g->rank();
  for (std::uint32_t bits = 0; bits < limit; ++bits) {
    const GenSubset J(bits);
    if (delta.apply(J) != J) continue;
    auto par = parabolic(g, J);
    const Conjugacy local(par->restrict(delta));
    for (const auto& c : local.classes()) {
      if (!c.elliptic) continue;
      GammaPair p;
      p.J = J;
      p.parabolic = par;
      p.classInWJ = c;
      for (Index u : c.minSet) p.minSetInW.push_back(par->embed(u));
      std::sort(p.minSetInW.begin(), p.minSetInW.end());
      p.minRepInW = p.minSetInW.front();
      p.lengthC = c.minLength;
      if (g->length(p.minRepInW) != p.lengthC)
        fail(ErrorKind::TheoremViolation, "parabolic embedding changed a length");
      out.push_back(std::move(p));
    }
  }
  return out;
}

/// f(J, C): the delta-class of W containing C.
inline std::size_t gammaToClass(const GammaPair& p, const Conjugacy& conj) { return conj.classOf(p.minRepInW); }

/// The min-kind reachability class containing C_min; it must coincide with
/// C_min exactly.
inline std::size_t gammaToMinApprox(const GammaPair& p, const Conjugacy& conj) {
  const std::size_t id = conj.minApproxOf(p.minRepInW);
  if (id == npos) fail(ErrorKind::TheoremViolation, "C_min is not minimal in its W-class");
  if (conj.minApprox()[id].members != p.minSetInW)
    fail(ErrorKind::TheoremViolation, "C_min is not a single reachability class of W");
  return id;
}

/// The assignment Gamma_delta -> W_{delta,min}/~; throws unless it is a bijection.
inline std::vector<std::size_t> gammaMinBijection(const std::vector<GammaPair>& pairs, const Conjugacy& conj) {
  std::vector<std::size_t> image;
  std::vector<bool> hit(conj.minApprox().size(), false);
  for (const auto& p : pairs) {
    const std::size_t id = gammaToMinApprox(p, conj);
    if (hit[id]) fail(ErrorKind::TheoremViolation, "two pairs map to one reachability class");
    hit[id] = true;
    image.push_back(id);
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end())
    fail(ErrorKind::TheoremViolation, "a minimal reachability class has no parameter");
  return image;
}

struct MaxParam {
  GammaPair pair;           // an element of Gamma_{delta'}
  std::size_t maxApproxId;  // the max-kind class C_min * w0 of W under delta
};

/// Gamma_{delta'} with delta' = Ad(w0) o delta, each pair sent to the class
/// C_min w0 in W_{delta,max}; throws unless this is a bijection.
inline std::vector<MaxParam> maxApproxParam(const Conjugacy& conj) {
  const CoxeterGroup& g = conj.group();
  const DeltaAut deltaPrime = composeAdW0(conj.delta());
  std::vector<MaxParam> out;
  std::vector<bool> hit(conj.maxApprox().size(), false);
  for (auto& p : gamma(deltaPrime)) {
    std::vector<Index> shifted;
    for (Index w : p.minSetInW) shifted.push_back(g.mult(w, g.longest()));
    std::sort(shifted.begin(), shifted.end());
    const std::size_t id = conj.maxApproxOf(shifted.front());
    if (id == npos || conj.maxApprox()[id].members != shifted)
      fail(ErrorKind::TheoremViolation, "C_min w0 is not a maximal reachability class");
    if (hit[id]) fail(ErrorKind::TheoremViolation, "two pairs map to one maximal reachability class");
    hit[id] = true;
    out.push_back({std::move(p), id});
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end())
    fail(ErrorKind::TheoremViolation, "a maximal reachability class has no parameter");
  return out;
}

/// Pairs are equivalent when some x in W^delta conjugates J onto J' and C
/// onto C'. Checks that f descends to a bijection from equivalence classes
/// onto cl(W)_delta.
inline bool gammaClassBijection(const std::vector<GammaPair>& pairs, const Conjugacy& conj) {
  const CoxeterGroup& g = conj.group();
  const auto fixed = conj.fixedSubgroup();
  auto equivalent = [&](const GammaPair& a, const GammaPair& b) {
    if (a.J.size() != b.J.size()) return false;
    for (Index x : fixed) {
      const Index xi = g.inverse(x);
      bool mapsJ = true;
      for (int s : a.J.members()) {
        const Index img = g.mult(g.mult(x, g.generator(s)), xi);
        if (g.length(img) != 1 || !b.J.contains(g.lastLetter(img))) {
          mapsJ = false;
          break;
        }
      }
      if (!mapsJ) continue;
      const Index img = g.mult(g.mult(x, a.minRepInW), xi);
      auto u = b.parabolic->preimage(img);
      if (!u) continue;
      const auto& cls = b.classInWJ.members;
      if (std::binary_search(cls.begin(), cls.end(), *u)) return true;
    }
    return false;
  };
  std::vector<bool> covered(conj.classes().size(), false);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    covered[gammaToClass(pairs[i], conj)] = true;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const bool same = gammaToClass(pairs[i], conj) == gammaToClass(pairs[j], conj);
      if (same != equivalent(pairs[i], pairs[j])) return false;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

}  // namespace coxhecke
