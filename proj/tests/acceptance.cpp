// Acceptance gate: runs the registered verification checks grouped into the
// thirteen acceptance criteria, enforcing per-criterion wall-clock budgets,
// and prints one PASS/FAIL line per criterion. Exit code: number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include <exchci/gaussian.hpp>
#include <exchci/verify.hpp>

namespace {

using namespace exchci;

struct Criterion {
  const char* name;
  std::vector<std::string> ids;
  int nmax;
  double budget_seconds;
  bool (*extra)(std::string&) = nullptr;  // optional inline sweep
};

// Independent cross-check of the closed-form partial covariance against
// explicit matrix inversion over a dense grid of the validity interval.
bool gaussian_inversion_sweep(std::string& detail) {
  constexpr double kTol = 1e-12;
  constexpr int kPoints = 50;
  long queries = 0;
  for (int n = 2; n <= 6; ++n) {
    const double lo = -1.0 / (n - 1) + 1e-3;
    const double hi = 1.0 - 1e-3;
    for (int k = 0; k < kPoints; ++k) {
      const double rho = lo + (hi - lo) * k / (kPoints - 1);
      const Equicorrelation model(n, rho);
      Eigen::MatrixXd sigma = Eigen::MatrixXd::Constant(n, n, rho);
      sigma.diagonal().setOnes();
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const std::uint32_t all = (std::uint32_t{1} << n) - 1;
          const std::uint32_t rest = all & ~(std::uint32_t{1} << (i - 1)) &
                                     ~(std::uint32_t{1} << (j - 1));
          std::uint32_t sub = 0;
          while (true) {
            VarSet c = VarSet::of_bits(sub);
            const PartialCovariance pc = equicorrelation_ci(model, i, j, c);
            double inverted;
            const auto cs = c.elements();
            const int m = int(cs.size());
            if (m == 0) {
              inverted = sigma(i - 1, j - 1);
            } else {
              Eigen::MatrixXd scc(m, m);
              Eigen::VectorXd sic(m), sjc(m);
              for (int r = 0; r < m; ++r) {
                sic(r) = sigma(i - 1, cs[std::size_t(r)]);
                sjc(r) = sigma(j - 1, cs[std::size_t(r)]);
                for (int s = 0; s < m; ++s) scc(r, s) = sigma(cs[std::size_t(r)], cs[std::size_t(s)]);
              }
              inverted = sigma(i - 1, j - 1) - sic.dot(scc.inverse() * sjc);
            }
            ++queries;
            if (std::abs(pc.value - inverted) > kTol) {
              char buf[160];
              std::snprintf(buf, sizeof buf,
                            "closed form %.17g vs inversion %.17g at n=%d rho=%.17g",
                            pc.value, inverted, n, rho);
              detail = buf;
              return false;
            }
            if (pc.independent != (std::abs(inverted) <= 1e-9)) {
              detail = "independence verdict disagrees with the inverted value";
              return false;
            }
            if (sub == rest) break;
            sub = (sub - rest) & rest;
          }
        }
      }
    }
  }
  detail = std::to_string(queries) + " inversion queries agreed";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"criterion-01", {"fig1"}, 4, 1.0},
      {"criterion-02", {"prop12.1-n4", "prop12.1-n5", "prop12.1-n6"}, 6, 60.0},
      {"criterion-03", {"prop12.2-n4", "prop12.2-n5"}, 5, 30.0},
      {"criterion-04",
       {"prop12n.1-n5", "prop12n.1-n6", "prop12n.2-n5", "prop12n.2-n6"},
       6,
       120.0},
      {"criterion-05", {"named-separator-L6", "named-separator-Lc5"}, 6, 10.0},
      {"criterion-06", {"lemma-dual-random", "lemma5-random", "lemma5-families"}, 5, 120.0},
      {"criterion-07", {"prop4", "prop5", "prop3", "example1"}, 5, 60.0},
      {"criterion-08", {"example2-n5"}, 5, 300.0},
      {"criterion-09", {"algorithm1-n5"}, 5, 60.0},
      {"criterion-10", {"gaussian-corollary"}, 5, 5.0, gaussian_inversion_sweep},
      {"criterion-11", {"prop3n-tables", "network-conditioning"}, 5, 60.0},
      {"criterion-12", {"holds-vs-naive"}, 4, 120.0},
      {"criterion-13",
       {"separation-oracles", "lemma3nn", "lemma3n", "lemma3", "thm2-families"},
       5,
       300.0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.nmax = c.nmax;
    opts.only = c.ids;
    bool pass = true;
    std::string detail;
    try {
      for (const VerifyResult& r : run_verify(opts)) {
        if (!r.pass) {
          pass = false;
          detail = r.id + ": " + r.detail;
          break;
        }
      }
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("threw: ") + e.what();
    }
    std::string extra_detail;
    if (pass && c.extra != nullptr) {
      pass = c.extra(extra_detail);
      if (!pass) detail = extra_detail;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (pass && elapsed > c.budget_seconds) {
      pass = false;
      detail = "over budget: " + std::to_string(elapsed) + "s > " +
               std::to_string(c.budget_seconds) + "s";
    }
    std::string ids;
    for (const auto& id : c.ids) ids += (ids.empty() ? "" : ",") + id;
    std::printf("[%s] %s (%.2fs) %s%s%s\n", pass ? "PASS" : "FAIL", c.name, elapsed,
                ids.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures,
              criteria.size());
  return failures;
}
