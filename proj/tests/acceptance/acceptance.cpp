// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "coxhecke/coxhecke.hpp"
#include "oracles.hpp"

using namespace coxhecke;

namespace {

struct GridEntry {
  std::string spec;
  std::string delta;  // images, "id" for the identity
  std::unique_ptr<VerifyContext> ctx;
};

std::string deltaLabel(const DeltaAut& d) {
  if (d.isIdentity()) return "id";
  std::string s;
  for (int x : d.genImage()) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::vector<GridEntry> buildGrid(const std::vector<std::string>& specs, bool identityOnly) {
  std::vector<GridEntry> grid;
  for (const auto& spec : specs) {
    const GroupPtr g = CoxeterGroup::build(parseGroupSpec(spec));
    for (const auto& d : diagramAutomorphisms(g)) {
      if (identityOnly && !d.isIdentity()) continue;
      grid.push_back({spec, deltaLabel(d), std::make_unique<VerifyContext>(d)});
    }
  }
  return grid;
}

/// Runs check over the grid; detail is the first failure or a summary.
std::string overGrid(const std::vector<GridEntry>& grid, const std::function<CheckResult(const VerifyContext&)>& check) {
  for (const auto& e : grid) {
    const CheckResult r = check(*e.ctx);
    if (!r.passed) return e.spec + " delta=" + e.delta + ": " + r.detail;
  }
  return {};
}

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void report(int n, const std::string& title, const std::string& failure, const std::string& summary) {
  const bool ok = failure.empty();
  if (!ok) ++failures;
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", n, title.c_str(), ok ? summary.c_str() : failure.c_str());
}

std::string guarded(const std::function<std::string()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return std::string(to_string(e.kind())) + ": " + e.what();
  }
}

}  // namespace

int main() {
  const std::vector<std::string> gridSpecs{"A1", "A2", "A3", "A4", "B2", "B3", "D4", "G2", "I2(5)", "I2(6)", "I2(7)", "H3"};

  // 1. Counting for S3.
  {
    std::string summary;
    const auto t0 = std::chrono::steady_clock::now();
    const std::string fail = guarded([&]() -> std::string {
      const GroupPtr g = CoxeterGroup::build(types::A(2));
      const Conjugacy conj(DeltaAut::identity(g));
      const std::size_t cl = conj.classes().size();
      const std::size_t gam = gamma(conj.delta()).size();
      const std::size_t gamPrime = gamma(composeAdW0(conj.delta())).size();
      const std::size_t coc = ZeroCocenter(conj).dimension();
      const std::size_t cen = centerSpace(conj.delta()).dim();
      const double t = seconds(t0);
      summary = "cl=" + std::to_string(cl) + " Gamma=" + std::to_string(gam) + " Gamma'=" + std::to_string(gamPrime) +
                " dim cocenter=" + std::to_string(coc) + " dim center=" + std::to_string(cen) +
                " in " + std::to_string(t) + " s";
      if (cl != 3 || gam != 4 || gamPrime != 3 || coc != 4 || cen != 3) return "unexpected counts: " + summary;
      if (t >= 1.0) return "took " + std::to_string(t) + " s";
      return {};
    });
    report(1, "A2 counts", fail, summary);
  }

  std::vector<GridEntry> grid;
  try {
    grid = buildGrid(gridSpecs, false);
  } catch (const Error& e) {
    std::printf("FAIL grid construction: %s\n", e.what());
    return 1;
  }
  const std::string gridSummary = std::to_string(grid.size()) + " (W, delta) pairs";

  // 2. Center basis.
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::string fail = overGrid(grid, checkCenter);
    const double t = seconds(t0);
    if (fail.empty() && t >= 60.0) fail = "took " + std::to_string(t) + " s";
    report(2, "center basis of H_0", fail, gridSummary + ", " + std::to_string(t) + " s");
  }

  // 3. Cocenter basis.
  report(3, "cocenter basis of H_0", overGrid(grid, checkCocenter), gridSummary);

  // 4. Minimal and maximal elements.
  report(4, "minimal and maximal length elements", overGrid(grid, checkMinimalElements), gridSummary);

  // 5. 0-Hecke products against letter-by-letter folding.
  {
    std::size_t pairs = 0;
    const std::string fail = guarded([&]() -> std::string {
      for (const char* spec : {"A2", "A3", "B2", "B3", "G2"}) {
        const GroupPtr g = CoxeterGroup::build(parseGroupSpec(spec));
        for (Index x = 0; x < g->order(); ++x) {
          for (Index y = 0; y < g->order(); ++y) {
            const auto [z, sign] = oracle::h0Product(*g, x, y);
            const H0Elt expect = H0Elt::basis(g, z, Rational(sign));
            if (h0Mult(H0Elt::basis(g, x), H0Elt::basis(g, y)) != expect)
              return std::string(spec) + ": mismatch at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
            ++pairs;
          }
        }
      }
      return {};
    });
    report(5, "Demazure multiplication", fail, std::to_string(pairs) + " basis pairs");
  }

  // 6. Class polynomials.
  report(6, "class polynomials", overGrid(grid, [](const VerifyContext& c) { return checkClassPolynomials(c, 20240601, 50); }),
         gridSummary + ", 50 randomized tables each, q0 in {1,2,3,-1}");

  // 7. Central elements of the generic algebra.
  report(7, "Geck-Rouquier central elements", overGrid(grid, checkGeckRouquier), gridSummary);

  // 8. Trace map.
  {
    std::string fail;
    std::vector<GridEntry> traceGrid;
    fail = guarded([&]() -> std::string {
      traceGrid = buildGrid({"A1", "A2", "A3", "B2", "B3", "G2", "H3"}, true);
      return overGrid(traceGrid, checkTrace);
    });
    report(8, "trace map", fail, std::to_string(traceGrid.size()) + " groups");
  }

  // 9. Worked value in A2.
  {
    std::string summary;
    const std::string fail = guarded([&]() -> std::string {
      const GroupPtr g = CoxeterGroup::build(types::A(2));
      const Conjugacy conj(DeltaAut::identity(g));
      const ClassPolynomials cp(conj);
      const Index w0 = g->longest();
      const std::size_t refl = conj.classOf(g->generator(0));
      const std::size_t cox = conj.classOf(g->fromWord(std::vector<int>{0, 1}));
      const Poly fRefl = cp(w0, refl), fCox = cp(w0, cox);
      const ZeroCocenter cc(conj);
      const TwReduction tw = reduceTw(cc, w0);
      const GammaPair& p = cc.pairs()[tw.pairIndex];
      summary = "f_refl=" + fRefl.str() + " f_cox=" + fCox.str() + " t_w0 = " + (tw.sign < 0 ? "-" : "+") + "t_(" +
                formatSubset(p.J) + "," + formatElement(*g, p.minRepInW) + ")";
      if (fRefl != Poly::q() || fCox != Poly::q() - Poly(1)) return "class polynomials differ: " + summary;
      if (p.J != GenSubset::full(g->rank()) || conj.classOf(p.minRepInW) != cox || tw.sign != -1)
        return "reduction differs: " + summary;
      return {};
    });
    report(9, "worked value in A2", fail, summary);
  }

  return failures == 0 ? 0 : 1;
}
