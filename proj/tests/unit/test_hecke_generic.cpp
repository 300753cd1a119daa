#include <catch_amalgamated.hpp>

#include <limits>
#include <random>

#include "oracles.hpp"
#include "support.hpp"

using namespace coxhecke;
using testing::elem;
using testing::group;

namespace {

std::vector<DeltaAut> smallGrid() {
  std::vector<DeltaAut> out;
  for (const char* spec : {"A1", "A2", "A3", "B2", "B3", "G2", "I2(5)", "D4"})
    for (const auto& d : diagramAutomorphisms(group(spec))) out.push_back(d);
  return out;
}

// Trace of left multiplication by h on the regular module at q = q0.
Rational regularTrace(const H0Elt& h, const Rational& q0) {
  const auto& g = h.group();
  Rational tr = 0;
  for (Index x = 0; x < g.order(); ++x)
    tr += heckeMult(h, H0Elt::basis(h.groupPtr(), x), q0).coeff(x);
  return tr;
}

DeltaAut squared(const DeltaAut& d) {
  std::vector<int> img;
  for (int s = 0; s < d.group().rank(); ++s) img.push_back(d.onGenerator(d.onGenerator(s)));
  return DeltaAut(d.groupPtr(), img);
}

DeltaAut inverted(const DeltaAut& d) {
  std::vector<int> img(d.group().rank());
  for (int s = 0; s < d.group().rank(); ++s) img[d.onGenerator(s)] = s;
  return DeltaAut(d.groupPtr(), img);
}

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
  const Poly q = Poly::q();
  const Poly p = (q - Poly(1)) * (q - Poly(1));
  CHECK(p == Poly(std::vector<std::int64_t>{1, -2, 1}));
  CHECK(p.str() == "q^2-2q+1");
  CHECK(Poly().str() == "0");
  CHECK((q - Poly(1)).str() == "q-1");
  CHECK(Poly(-3).str() == "-3");
  CHECK(Poly::monomial(-1, 3).str() == "-q^3");
  CHECK(p.degree() == 2);
  CHECK(Poly().degree() == -1);
  CHECK(p.eval(3) == 4);
  CHECK((p - p).isZero());
  CHECK(p.constantTerm() == 1);
}

TEST_CASE("polynomial coefficients are overflow checked") {
  const Poly big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + Poly(1), Error);
  CHECK_THROWS_AS(big * Poly(2), Error);
  CHECK_NOTHROW(big * Poly(1));
}

TEST_CASE("Laurent polynomials") {
  const LaurentPoly inv = LaurentPoly::qPower(-1);
  CHECK((inv * LaurentPoly::q()) == LaurentPoly(1));
  CHECK(inv.lowest() == -1);
  CHECK(inv.eval(2) == Rational(1) / 2);
  CHECK_THROWS_AS(inv.eval(0), Error);
  CHECK(LaurentPoly(Poly::q() * Poly::q(), -1) == LaurentPoly::q());
  CHECK(LaurentPoly(Poly(std::vector<std::int64_t>{1, -1}), -2).str() == "-q^-1+q^-2");
  CHECK((LaurentPoly::q() - LaurentPoly::q()).isZero());
}

TEST_CASE("quadratic relation in H") {
  const auto g = group("B2");
  const Poly q = Poly::q();
  for (int s = 0; s < 2; ++s) {
    const GenericElt ts = GenericElt::basis(g, g->generator(s));
    GenericElt expect = GenericElt::basis(g, 0, q);
    expect.add(g->generator(s), q - Poly(1));
    CHECK(heckeMult(ts, ts, q) == expect);
  }
}

TEST_CASE("generic products specialize to H_0 and to the group algebra") {
  std::mt19937_64 rng(3);
  const Poly q = Poly::q();
  for (const char* spec : {"A3", "B3", "G2"}) {
    const auto g = group(spec);
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(g->order() - 1));
    for (int i = 0; i < 200; ++i) {
      const Index x = pick(rng), y = pick(rng);
      const GenericElt prod = heckeMult(GenericElt::basis(g, x), GenericElt::basis(g, y), q);
      const auto [z, sign] = oracle::h0Product(*g, x, y);
      CHECK(specialize(prod, 0) == H0Elt::basis(g, z, sign));
      CHECK(specialize(prod, 1) == H0Elt::basis(g, g->mult(x, y)));
    }
  }
}

TEST_CASE("generic products are associative") {
  std::mt19937_64 rng(5);
  const Poly q = Poly::q();
  const auto g = group("A3");
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(g->order() - 1));
  for (int i = 0; i < 50; ++i) {
    const GenericElt a = GenericElt::basis(g, pick(rng)), b = GenericElt::basis(g, pick(rng)),
                     c = GenericElt::basis(g, pick(rng));
    CHECK(heckeMult(heckeMult(a, b, q), c, q) == heckeMult(a, heckeMult(b, c, q), q));
  }
}

TEST_CASE("class polynomials of w0 in A2") {
  const auto g = group("A2");
  const Conjugacy conj(testing::identity("A2"));
  const ClassPolynomials cp(conj);
  const Index w0 = g->longest();
  CHECK(cp(w0, conj.classOf(elem(g, "1"))) == Poly::q());
  CHECK(cp(w0, conj.classOf(elem(g, "1.2"))) == Poly::q() - Poly(1));
  CHECK(cp(w0, conj.classOf(0)).isZero());
  CHECK(cp(w0, conj.classOf(elem(g, "1"))).str() == "q");
}

TEST_CASE("class polynomials: basic properties") {
  for (const auto& d : smallGrid()) {
    const Conjugacy conj(d);
    const ClassPolynomials cp(conj);
    const auto& g = conj.group();
    for (Index w = 0; w < g.order(); ++w) {
      for (std::size_t o = 0; o < conj.classes().size(); ++o) {
        const Poly& f = cp(w, o);
        CHECK(f.eval(1) == (conj.classOf(w) == o ? 1 : 0));
        CHECK(f.degree() <= static_cast<int>(g.length(w)));
        if (conj.isMinimal(w)) CHECK(f == Poly(conj.classOf(w) == o ? 1 : 0));
      }
      CHECK(zeroCongruence(cp, w));
    }
  }
}

TEST_CASE("class polynomials do not depend on the reduction path") {
  for (const char* spec : {"A3", "B3", "H3"}) {
    const Conjugacy conj(testing::identity(spec));
    const ClassPolynomials cp(conj);
    std::mt19937_64 rng(20240601);
    for (int r = 0; r < 50; ++r) REQUIRE(classPolynomialTable(conj, &rng) == cp.table());
  }
  for (const auto& d : diagramAutomorphisms(group("D4"))) {
    const Conjugacy conj(d);
    const ClassPolynomials cp(conj);
    std::mt19937_64 rng(7);
    for (int r = 0; r < 5; ++r) REQUIRE(classPolynomialTable(conj, &rng) == cp.table());
  }
}

TEST_CASE("class polynomials expand regular traces") {
  for (const char* spec : {"A2", "B2", "G2", "A3"}) {
    INFO(spec);
    const Conjugacy conj(testing::identity(spec));
    const ClassPolynomials cp(conj);
    const GroupPtr& g = conj.groupPtr();
    for (const Rational q0 : {Rational(2), Rational(-3)}) {
      std::vector<Rational> classTrace;
      for (const auto& c : conj.classes()) classTrace.push_back(regularTrace(H0Elt::basis(g, c.minSet.front()), q0));
      for (Index w = 0; w < g->order(); ++w) {
        Rational expect = 0;
        for (std::size_t o = 0; o < classTrace.size(); ++o) expect += cp(w, o).eval(q0) * classTrace[o];
        REQUIRE(regularTrace(H0Elt::basis(g, w), q0) == expect);
      }
    }
  }
}

TEST_CASE("central elements of H") {
  for (const auto& d : smallGrid()) {
    const Conjugacy conj(d);
    const ClassPolynomials cp(conj);
    const bool involution = squared(d).isIdentity();
    const DeltaAut inv = inverted(d);
    std::vector<QVector> at1;
    for (std::size_t o = 0; o < conj.classes().size(); ++o) {
      const LaurentElt z = geckRouquier(cp, o);
      CHECK(isDeltaCentralSymbolic(z, d));
      const LaurentElt zi = geckRouquierInverseForm(cp, o);
      CHECK(isDeltaCentralSymbolic(zi, inv));
      if (involution) CHECK(zi == z);
      at1.push_back(specialize(z, 1).toVector());
    }
    CHECK(Subspace::spannedBy(at1, conj.group().order()).dim() == at1.size());
  }
  const Conjugacy conj(testing::identity("A2"));
  const ClassPolynomials cp(conj);
  CHECK(geckRouquier(cp, conj.classOf(0)) == LaurentElt::basis(conj.groupPtr(), 0));
}

TEST_CASE("the displayed form fails for order-3 automorphisms of D4") {
  const auto g = group("D4");
  std::size_t seen = 0;
  for (const auto& d : diagramAutomorphisms(g)) {
    if (squared(d).isIdentity()) continue;
    ++seen;
    const Conjugacy conj(d);
    const ClassPolynomials cp(conj);
    bool allCentral = true;
    for (std::size_t o = 0; o < conj.classes().size(); ++o)
      allCentral = allCentral && isDeltaCentralSymbolic(geckRouquierInverseForm(cp, o), d);
    CHECK_FALSE(allCentral);
  }
  CHECK(seen == 2);
}

TEST_CASE("cocenter of H_q at nonzero parameters") {
  {
    const Conjugacy conj(testing::identity("A2"));
    const ClassPolynomials cp(conj);
    const auto rep = cocenterQCheck(cp, 2);
    CHECK(rep.ok());
    CHECK(6 - rep.commutatorDim == 3);
  }
  {
    const Conjugacy conj(testing::identity("B2"));
    const ClassPolynomials cp(conj);
    const auto rep = cocenterQCheck(cp, 3);
    CHECK(rep.ok());
    CHECK(8 - rep.commutatorDim == 5);
  }
  const Conjugacy conj(testing::identity("A1"));
  CHECK_THROWS_AS(cocenterQCheck(ClassPolynomials(conj), 0), Error);
  for (const auto& d : smallGrid()) {
    const Conjugacy c(d);
    const ClassPolynomials cp(c);
    for (const Rational q0 : {Rational(1), Rational(2), Rational(-1), Rational(Rational(1) / 2)}) CHECK(cocenterQCheck(cp, q0).ok());
  }
}

TEST_CASE("generator commutators span all commutators") {
  for (const char* spec : {"A2", "B2"}) {
    for (const auto& d : diagramAutomorphisms(group(spec))) {
      const GroupPtr& g = d.groupPtr();
      for (const Rational q0 : {Rational(2), Rational(-1)}) {
        std::vector<QVector> all;
        for (Index x = 0; x < g->order(); ++x)
          for (Index y = 0; y < g->order(); ++y) {
            const H0Elt c = heckeMult(H0Elt::basis(g, x), H0Elt::basis(g, y), q0) -
                            heckeMult(H0Elt::basis(g, y), H0Elt::basis(g, d.apply(x)), q0);
            all.push_back(c.toVector());
          }
        CHECK(spacesEqual(Subspace::spannedBy(all, g->order()), qCommutatorSpace(d, q0)));
      }
    }
  }
}
