#include <exchci/verify.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include <exchci/exchange.hpp>
#include "checks_internal.hpp"

namespace exchci {

void CheckOutcome::fail(const std::string& text) {
  ++failures_;
  if (failures_ == 1) {
    pass = false;
    detail = text;
  } else if (failures_ <= 3) {
    detail += " | " + text;
  } else if (failures_ == 4) {
    detail += " | ...";
  }
}

void CheckOutcome::note(const std::string& text) {
  if (!pass) return;
  if (!detail.empty()) detail += "; ";
  detail += text;
}

void CheckOutcome::expect(bool ok, const std::string& text) {
  if (!ok) fail(text);
}

const std::vector<VerifyCheck>& verify_checks() {
  static const std::vector<VerifyCheck> all = [] {
    std::vector<VerifyCheck> list;
    checks::append_vector_checks(list);
    checks::append_network_checks(list);
    checks::append_appendix_checks(list);
    return list;
  }();
  return all;
}

std::vector<VerifyResult> run_verify(const VerifyOptions& options) {
  if (options.suite != "all" && options.suite != "vector" &&
      options.suite != "network" && options.suite != "appendix") {
    throw std::invalid_argument("suite must be all, vector, network, or appendix");
  }
  if (options.nmax < 3 || options.nmax > 8) {
    throw std::invalid_argument("nmax must lie in [3, 8]");
  }
  const auto& registry = verify_checks();
  for (const auto& id : options.only) {
    bool known = false;
    for (const auto& c : registry) known = known || id == c.id;
    if (!known) throw std::invalid_argument("unknown check id '" + id + "'");
  }

  std::vector<const VerifyCheck*> selected;
  for (const auto& c : registry) {
    if (options.suite != "all" && options.suite != c.suite) continue;
    if (!options.only.empty()) {
      bool wanted = false;
      for (const auto& id : options.only) wanted = wanted || id == c.id;
      if (!wanted) continue;
    }
    if (c.needs_n > options.nmax) continue;
    selected.push_back(&c);
  }

  std::vector<VerifyResult> results(selected.size());
  if (selected.empty()) return results;

  int workers = options.threads > 0
                    ? options.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (const char* env = std::getenv("EXCHCI_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < workers) workers = cap;
  }
  if (workers > static_cast<int>(selected.size())) {
    workers = static_cast<int>(selected.size());
  }

  const CheckParams params{options.nmax, options.seed};
  std::atomic<std::size_t> cursor{0};
  auto run_one = [&](std::size_t k) {
    const VerifyCheck& check = *selected[k];
    auto start = std::chrono::steady_clock::now();
    CheckOutcome outcome;
    try {
      outcome = check.fn(params);
    } catch (const std::exception& e) {
      outcome.fail(std::string("threw: ") + e.what());
    }
    auto stop = std::chrono::steady_clock::now();
    VerifyResult& r = results[k];
    r.id = check.id;
    r.suite = check.suite;
    r.pass = outcome.pass;
    r.detail = outcome.detail;
    r.seconds = std::chrono::duration<double>(stop - start).count();
    r.repro = "exchci verify --only " + r.id + " --nmax " +
              std::to_string(options.nmax) + " --seed " +
              std::to_string(options.seed);
  };

  if (workers == 1) {
    for (std::size_t k = 0; k < selected.size(); ++k) run_one(k);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (true) {
          std::size_t k = cursor.fetch_add(1);
          if (k >= selected.size()) return;
          run_one(k);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  return results;
}

IndependenceModel random_elementary_model(const GroundSet& ground,
                                          std::mt19937_64& rng, int statements) {
  if (statements < 0) throw std::invalid_argument("statement count must be >= 0");
  IndependenceModel m(ground);
  const int s = ground.size();
  for (int k = 0; k < statements; ++k) {
    int u = checks::rand_below(rng, s);
    int v = checks::rand_below(rng, s - 1);
    if (v >= u) ++v;
    if (u > v) std::swap(u, v);
    VarSet rest = ground.all().without(u).without(v);
    m.insert(u, v, VarSet::of_bits(checks::rand_mask(rng, rest)));
  }
  return m;
}

IndependenceModel random_closed_model(const GroundSet& ground,
                                      std::mt19937_64& rng, int statements) {
  return semigraphoid_closure(random_elementary_model(ground, rng, statements));
}

IndependenceModel random_exchangeable_model(const GroundSet& ground,
                                            std::mt19937_64& rng, int statements) {
  return semigraphoid_closure(
      orbit_closure(random_elementary_model(ground, rng, statements)));
}

}  // namespace exchci
