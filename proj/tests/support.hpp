#pragma once

#include <map>
#include <string>

#include "coxhecke/coxhecke.hpp"

namespace testing {

inline coxhecke::GroupPtr group(const std::string& spec) {
  static std::map<std::string, coxhecke::GroupPtr> cache;
  auto it = cache.find(spec);
  if (it == cache.end()) it = cache.emplace(spec, coxhecke::CoxeterGroup::build(coxhecke::parseGroupSpec(spec))).first;
  return it->second;
}

inline coxhecke::Index elem(const coxhecke::GroupPtr& g, const std::string& word) {
  return g->fromWord(coxhecke::parseWord(word, g->rank()));
}

inline coxhecke::DeltaAut identity(const std::string& spec) { return coxhecke::DeltaAut::identity(group(spec)); }

inline coxhecke::DeltaAut swap2(const std::string& spec) { return coxhecke::DeltaAut(group(spec), {1, 0}); }

}  // namespace testing
