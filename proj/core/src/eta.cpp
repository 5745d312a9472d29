#include "divconv/eta.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "divconv/errors.hpp"
#include "divconv/spaces.hpp"

namespace divconv {

LigozatReport ligozat_check(const EtaQuotient& e) {
  LigozatReport rep;
  const std::int64_t N = e.level();
  std::int64_t weighted = 0;
  std::int64_t dual = 0;
  for (const auto& [delta, r] : e.exponents()) {
    weighted += delta * r;
    dual += N / delta * r;
  }
  rep.weight_times_two = e.weight_times_two();
  rep.cond_i = weighted % 24 == 0;
  rep.cond_ii = product_is_square(e);
  rep.cond_iii = rep.weight_times_two > 0 && rep.weight_times_two % 4 == 0;
  rep.cond_level = dual % 24 == 0;
  bool nonneg = true;
  bool positive = true;
  for (auto d : divisors(N)) {
    BigRational s = 0;
    for (const auto& [delta, r] : e.exponents()) {
      const std::int64_t g = std::gcd(d, delta);
      s += BigRational(g * g * r, delta);
    }
    s.canonicalize();
    if (s < 0) nonneg = false;
    if (s <= 0) positive = false;
    rep.orders.emplace(d, s);
  }
  if (rep.cond_i) rep.order_at_infinity = weighted / 24;
  rep.is_modular = rep.cond_i && rep.cond_ii && rep.cond_iii && rep.cond_level && nonneg;
  rep.is_cusp = rep.is_modular && positive;
  return rep;
}

std::int64_t order_at_infinity(const EtaQuotient& e) {
  std::int64_t weighted = 0;
  for (const auto& [delta, r] : e.exponents()) weighted += delta * r;
  if (weighted % 24 != 0) {
    throw NonIntegralExponentError("order at infinity of " + e.label() + " is " + std::to_string(weighted) + "/24");
  }
  return weighted / 24;
}

bool product_is_square(const EtaQuotient& e) {
  Integer num = 1, den = 1;
  for (const auto& [delta, r] : e.exponents()) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(delta), static_cast<unsigned long>(r < 0 ? -r : r));
    (r < 0 ? den : num) *= p;
  }
  // num/den is a rational square iff num*den is an integer square.
  Integer prod = num * den;
  return mpz_perfect_square_p(prod.get_mpz_t()) != 0;
}

bool product_is_square_by_valuation(const EtaQuotient& e) {
  for (const auto& [p, k] : factorize(e.level())) {
    (void)k;
    long total = 0;
    for (const auto& [delta, r] : e.exponents()) total += static_cast<long>(r) * valuation(delta, p);
    if (total % 2 != 0) return false;
  }
  return true;
}

namespace {

// Integer form of the cusp-order constraints. With c[d][j] = N gcd(d, delta_j)^2 / delta_j,
// T_d = sum_j c[d][j] r_j is N times the order sum at d. A cusp form needs T_d >= 1
// for every d, and the valence identity sum_d w_d T_d = w2 mu L (w_d =
// phi(g_d) L / (g_d d), g_d = gcd(d, N/d)) caps every T_d once the others are >= 1.
struct SearchPlan {
  std::int64_t level = 0;
  std::vector<std::int64_t> divs;
  std::vector<std::vector<std::int64_t>> c;  // c[cusp][position]
  std::vector<std::int64_t> upper;           // cap on T_d
  int bound = 0;
  int w2 = 0;
  std::int64_t max_weighted = 0;             // 24 * max_order
  // For depth i: per cusp, positions i..k-2 sorted by descending coefficient.
  std::vector<std::vector<std::vector<std::size_t>>> order;
};

SearchPlan make_plan(std::int64_t N, int w2, const SearchOptions& opt, std::int64_t max_order) {
  SearchPlan plan;
  plan.level = N;
  plan.divs = divisors(N);
  plan.bound = opt.bound;
  plan.w2 = w2;
  plan.max_weighted = 24 * max_order;
  const std::size_t k = plan.divs.size();
  plan.c.assign(k, std::vector<std::int64_t>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const std::int64_t g = std::gcd(plan.divs[a], plan.divs[b]);
      plan.c[a][b] = N / plan.divs[b] * g * g;
    }
  }
  std::int64_t L = 1;
  for (auto d : plan.divs) L = std::lcm(L, std::gcd(d, N / d) * d);
  std::vector<std::int64_t> w(k);
  std::int64_t W = 0;
  for (std::size_t a = 0; a < k; ++a) {
    const std::int64_t d = plan.divs[a];
    const std::int64_t g = std::gcd(d, N / d);
    w[a] = euler_phi(g) * (L / (g * d));
    W += w[a];
  }
  const std::int64_t total = static_cast<std::int64_t>(w2) * profile(N).index_mu * L;
  plan.upper.resize(k);
  for (std::size_t a = 0; a < k; ++a) plan.upper[a] = (total - W + w[a]) / w[a];
  plan.order.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    plan.order[i].resize(k);
    for (std::size_t a = 0; a < k; ++a) {
      auto& idx = plan.order[i][a];
      for (std::size_t j = i; j < k; ++j) idx.push_back(j);
      std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return plan.c[a][x] > plan.c[a][y]; });
    }
  }
  return plan;
}

// Max of sum_{j in idx} c_j r_j subject to sum r_j = R and |r_j| <= B.
// Greedy is exact for a box with one equality constraint.
std::int64_t extreme(const std::vector<std::int64_t>& c, const std::vector<std::size_t>& idx, std::int64_t R, int B,
                     bool maximize) {
  std::int64_t val = 0;
  std::int64_t budget = R + static_cast<std::int64_t>(B) * static_cast<std::int64_t>(idx.size());
  for (std::size_t t = 0; t < idx.size(); ++t) {
    const std::size_t j = maximize ? idx[t] : idx[idx.size() - 1 - t];
    const std::int64_t add = std::min<std::int64_t>(budget, 2 * B);
    val += c[j] * (add - B);
    budget -= add;
  }
  return val;
}

class Searcher {
 public:
  explicit Searcher(const SearchPlan& plan) : p_(plan), r_(plan.divs.size()), t_(plan.divs.size()) {}

  void run_from(std::size_t depth) { descend(depth, partial_sum_); }

  /// Pins position `pos` to `value` before run_from.

  void fix(std::size_t pos, int value) {
    r_[pos] = value;
    partial_sum_ += value;
    for (std::size_t a = 0; a < r_.size(); ++a) t_[a] += p_.c[a][pos] * value;
  }

  void unfix(std::size_t pos) {
    const int value = r_[pos];
    r_[pos] = 0;
    partial_sum_ -= value;
    for (std::size_t a = 0; a < r_.size(); ++a) t_[a] -= p_.c[a][pos] * value;
  }

  std::vector<std::vector<int>> results;

 private:
  bool feasible(std::size_t depth, std::int64_t remaining) const {
    const std::size_t k = r_.size();
    const auto cnt = static_cast<std::int64_t>(k - depth);
    if (remaining < -p_.bound * cnt || remaining > p_.bound * cnt) return false;
    for (std::size_t a = 0; a < k; ++a) {
      const auto& idx = p_.order[depth][a];
      if (t_[a] + extreme(p_.c[a], idx, remaining, p_.bound, true) < 1) return false;
      if (t_[a] + extreme(p_.c[a], idx, remaining, p_.bound, false) > p_.upper[a]) return false;
    }
    return true;
  }

  void descend(std::size_t depth, std::int64_t sum) {
    const std::size_t k = r_.size();
    const std::int64_t remaining = p_.w2 - sum;
    if (!feasible(depth, remaining)) return;
    if (depth + 1 == k) {
      fix(depth, static_cast<int>(remaining));
      accept();
      unfix(depth);
      return;
    }
    for (int v = -p_.bound; v <= p_.bound; ++v) {
      fix(depth, v);
      descend(depth + 1, sum + v);
      unfix(depth);
    }
  }

  void accept() {
    const std::size_t k = r_.size();
    for (std::size_t a = 0; a < k; ++a) {
      if (t_[a] < 1 || t_[a] > p_.upper[a]) return;
    }
    std::int64_t weighted = 0;
    for (std::size_t j = 0; j < k; ++j) weighted += p_.divs[j] * r_[j];
    if (weighted % 24 != 0 || weighted > p_.max_weighted) return;
    // T at the cusp 1 is sum (N / delta) r_delta.
    if (t_[0] % 24 != 0) return;
    EtaQuotient e = EtaQuotient::from_vector(p_.level, r_);
    if (!product_is_square_by_valuation(e)) return;
    results.push_back(r_);
  }

  const SearchPlan& p_;
  std::vector<int> r_;
  std::vector<std::int64_t> t_;
  std::int64_t partial_sum_ = 0;
};

}  // namespace

std::vector<EtaQuotient> search_cusp_forms(std::int64_t level, int weight_times_two, const SearchOptions& options) {
  if (level < 1) throw DomainError("level must be >= 1");
  if (options.bound < 1) throw DomainError("search bound must be >= 1");
  if (weight_times_two <= 0 || weight_times_two % 4 != 0) return {};
  std::int64_t max_order = options.max_order;
  if (max_order <= 0) max_order = cusp_dimension(level, weight_times_two / 2);
  if (max_order <= 0) return {};
  const SearchPlan plan = make_plan(level, weight_times_two, options, max_order);
  const std::size_t k = plan.divs.size();

  std::vector<std::vector<int>> rows;
  if (k == 1) {
    Searcher s(plan);
    s.run_from(0);
    rows = std::move(s.results);
  } else {
    // Partition on the first exponent; each worker owns a slice of values.
    const int jobs = std::max(1, options.jobs);
    std::vector<std::future<std::vector<std::vector<int>>>> tasks;
    for (int w = 0; w < jobs; ++w) {
      tasks.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, [&plan, w, jobs] {
        std::vector<std::vector<int>> out;
        for (int v = -plan.bound + w; v <= plan.bound; v += jobs) {
          Searcher s(plan);
          s.fix(0, v);
          s.run_from(1);
          for (auto& r : s.results) out.push_back(std::move(r));
        }
        return out;
      }));
    }
    for (auto& t : tasks) {
      for (auto& r : t.get()) rows.push_back(std::move(r));
    }
  }
  std::sort(rows.begin(), rows.end());
  std::vector<EtaQuotient> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(EtaQuotient::from_vector(level, r));
  return out;
}

}  // namespace divconv
