#include <catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace coxhecke;
using testing::elem;
using testing::group;

namespace {

// lambda_J(t_w) as a product over the letters of a reduced word.
int letterProduct(const CoxeterGroup& g, GenSubset J, Index w) {
  int v = 1;
  for (int s : g.reducedWord(w)) v *= J.contains(s) ? -1 : 0;
  return v;
}

std::vector<GenSubset> allSubsets(int rank) {
  std::vector<GenSubset> out;
  for (std::uint32_t k = 0; k < (1u << rank); ++k) out.emplace_back(k);
  return out;
}

}  // namespace

TEST_CASE("one-dimensional representations of H_0") {
  const auto g = group("A2");
  const GenSubset one = GenSubset::single(0);
  CHECK(repValue(*g, one, 0) == 1);
  CHECK(repValue(*g, one, elem(g, "1")) == -1);
  CHECK(repValue(*g, one, elem(g, "2")) == 0);
  CHECK(repValue(*g, GenSubset::full(2), g->longest()) == -1);
  CHECK(evalRep(GenSubset::full(2), H0Elt::basis(g, elem(g, "1.2"), 3) + H0Elt::basis(g, 0)) == 4);
  for (const char* spec : {"A3", "B3", "H3"}) {
    const auto h = group(spec);
    for (GenSubset J : allSubsets(h->rank()))
      for (Index w = 0; w < h->order(); ++w) REQUIRE(repValue(*h, J, w) == letterProduct(*h, J, w));
  }
}

TEST_CASE("lambda_J is multiplicative and kills commutators") {
  std::mt19937_64 rng(9);
  for (const char* spec : {"A3", "B2", "G2"}) {
    const auto g = group(spec);
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(g->order() - 1));
    for (GenSubset J : allSubsets(g->rank())) {
      for (int i = 0; i < 100; ++i) {
        const H0Elt a = H0Elt::basis(g, pick(rng)), b = H0Elt::basis(g, pick(rng));
        REQUIRE(evalRep(J, h0Mult(a, b)) == evalRep(J, a) * evalRep(J, b));
      }
      const auto comm = commutatorSpace(testing::identity(spec));
      for (const auto& v : comm.space.basis()) CHECK(evalRep(J, H0Elt::fromVector(g, v)) == 0);
    }
  }
}

TEST_CASE("trace closed form matches direct evaluation") {
  for (const char* spec : {"A1", "A2", "A3", "B2", "B3", "G2", "H3", "I2(5)"}) {
    const auto d = testing::identity(spec);
    const auto pairs = gamma(d);
    const TraceMatrix tm = traceMatrix(d, pairs);
    REQUIRE(tm.entries.size() == pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t k = 0; k < tm.columns.size(); ++k) {
        CHECK(tm.entries[i][k] == traceClosedForm(pairs[i], tm.columns[k]));
        CHECK(tm.entries[i][k] == letterProduct(d.group(), tm.columns[k], pairs[i].minRepInW));
      }
  }
}

TEST_CASE("trace of t_w through its cocenter image") {
  for (const char* spec : {"A3", "B3"}) {
    const Conjugacy conj(testing::identity(spec));
    const ZeroCocenter cc(conj);
    const auto& g = conj.group();
    for (Index w = 0; w < g.order(); ++w) {
      const TwReduction r = reduceTw(cc, w);
      for (GenSubset K : allSubsets(g.rank()))
        REQUIRE(repValue(g, K, w) == r.sign * traceClosedForm(cc.pairs()[r.pairIndex], K));
    }
  }
}

TEST_CASE("trace matrices in small rank") {
  {
    const auto d = testing::identity("A1");
    const TraceMatrix tm = traceMatrix(d, gamma(d));
    CHECK(tm.entries == std::vector<std::vector<int>>{{1, 1}, {0, -1}});
    const auto rep = analyzeTrace(tm, gamma(d));
    CHECK(rep.rank == 2);
    CHECK(rep.kernelDim == 0);
  }
  {
    const auto d = testing::identity("A2");
    const auto pairs = gamma(d);
    const TraceMatrix tm = traceMatrix(d, pairs);
    CHECK(tm.entries.size() == 4);
    CHECK(tm.columns.size() == 4);
    const auto rep = analyzeTrace(tm, pairs);
    CHECK(rep.rank == 4);
    CHECK(rep.surjective);
    CHECK(rep.kernelIsSameJDifferences);
  }
  {
    const auto d = testing::identity("B2");
    const auto pairs = gamma(d);
    const TraceMatrix tm = traceMatrix(d, pairs);
    CHECK(tm.entries.size() == 5);
    const auto rep = analyzeTrace(tm, pairs);
    CHECK(rep.rank == 4);
    CHECK(rep.kernelDim == 1);
    CHECK(rep.kernelIsSameJDifferences);
  }
}

TEST_CASE("trace pairing needs delta = id") {
  const auto d = testing::swap2("A2");
  CHECK_THROWS_AS(traceMatrix(d, gamma(d)), Error);
  try {
    traceMatrix(d, gamma(d));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DeltaUnsupported);
  }
}

TEST_CASE("elliptic lengths with the same J agree mod 2") {
  for (const char* spec : {"A2", "B2", "G2", "H3", "B3", "F4"}) {
    INFO(spec);
    CHECK(parityCheck(gamma(testing::identity(spec))));
  }
  GammaPair a{}, b{};
  a.J = b.J = GenSubset::full(2);
  a.lengthC = 2;
  b.lengthC = 3;
  CHECK_FALSE(parityCheck({a, b}));
}
