#include "divconv/provider.hpp"

#include <algorithm>
#include <numeric>

#include "divconv/errors.hpp"

namespace divconv {

namespace {

template <class K, class V, class F>
std::shared_ptr<const V> single_flight(std::mutex& mu, std::map<K, std::shared_future<std::shared_ptr<const V>>>& slots,
                                       const K& key, F&& make) {
  std::promise<std::shared_ptr<const V>> promise;
  std::shared_future<std::shared_ptr<const V>> slot;
  bool owner = false;
  {
    std::lock_guard lock(mu);
    auto it = slots.find(key);
    if (it != slots.end()) {
      slot = it->second;
    } else {
      slot = promise.get_future().share();
      slots.emplace(key, slot);
      owner = true;
    }
  }
  if (owner) {
    try {
      promise.set_value(make());
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return slot.get();
}

std::string pair_name(std::int64_t a, std::int64_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

Natural BruteForceWSource::W(std::int64_t alpha, std::int64_t beta, std::int64_t n) {
  if (n <= 0) return 0;
  return brute_force_W(alpha, beta, n);
}

FormulaProvider::FormulaProvider(ProviderOptions options) : options_(std::move(options)) {
  if (options_.cache_dir) cache_.emplace(*options_.cache_dir);
}

void FormulaProvider::note(std::string event) {
  std::lock_guard lock(mu_);
  events_.push_back(std::move(event));
}

std::vector<std::string> FormulaProvider::events() const {
  std::lock_guard lock(mu_);
  return events_;
}

std::size_t FormulaProvider::base_precision(std::int64_t level) const {
  const std::int64_t verify = options_.verify_depth > 0 ? options_.verify_depth : default_verify_depth(level);
  return std::max({default_working_precision(level), static_cast<std::size_t>(verify) + 1, options_.precision});
}

std::shared_ptr<const ModularBasis> FormulaProvider::build_basis(std::int64_t level, BasisSource source) {
  const std::size_t precision = base_precision(level);
  if (cache_) {
    try {
      if (auto cached = cache_->load_basis(level, precision); cached && cached->source() == source) {
        note("basis for level " + std::to_string(level) + " loaded from cache");
        return std::make_shared<const ModularBasis>(std::move(*cached));
      }
    } catch (const CacheError& e) {
      note(std::string("ignored cached basis: ") + e.what());
    }
  }
  if (!classify_level(level).in_class) {
    throw UnsupportedLevelError("level " + std::to_string(level) +
                                " is outside 2^nu * (odd squarefree), nu <= 3, and no cached basis exists");
  }
  auto basis = std::make_shared<const ModularBasis>(source == BasisSource::Fixture
                                                        ? load_fixture_basis(level, precision)
                                                        : build_search_basis(level, precision, options_.search));
  // Fixture bases are embedded and cheap to rebuild; only searched ones are cached.
  if (cache_ && source == BasisSource::Search) {
    try {
      cache_->store_basis(*basis);
    } catch (const CacheError& e) {
      note(std::string("could not write basis cache: ") + e.what());
    }
  }
  return basis;
}

std::shared_ptr<const ModularBasis> FormulaProvider::basis_from(std::int64_t level, BasisSource source) {
  return single_flight(mu_, bases_, std::make_pair(level, source), [&] { return build_basis(level, source); });
}

std::shared_ptr<const ModularBasis> FormulaProvider::basis(std::int64_t level) {
  BasisSource source = BasisSource::Search;
  if (options_.policy == BasisPolicy::Fixture) {
    if (!has_fixture_basis(level)) {
      throw UnsupportedLevelError("no embedded fixture basis for level " + std::to_string(level));
    }
    source = BasisSource::Fixture;
  } else if (options_.policy == BasisPolicy::Auto && has_fixture_basis(level)) {
    std::lock_guard lock(mu_);
    source = fixture_failed_[level] ? BasisSource::Search : BasisSource::Fixture;
  }
  return basis_from(level, source);
}

std::shared_ptr<const FormulaEntry> FormulaProvider::build_formula(std::int64_t alpha, std::int64_t beta) {
  const std::int64_t level = alpha * beta;
  auto derive_on = [&](std::shared_ptr<const ModularBasis> b) {
    auto entry = std::make_shared<FormulaEntry>();
    entry->basis = b;
    std::optional<ConvolutionFormula> cached;
    if (cache_) {
      try {
        cached = cache_->load_formula(alpha, beta, b->id());
      } catch (const CacheError& e) {
        note(std::string("ignored cached formula: ") + e.what());
      }
    }
    const std::int64_t depth = options_.verify_depth > 0 ? options_.verify_depth : default_verify_depth(level);
    if (cached && cached->verified_to >= depth) {
      entry->formula = std::move(*cached);
    } else {
      entry->formula = derive_formula(alpha, beta, *b, depth);
      if (cache_) {
        try {
          cache_->store_formula(entry->formula);
        } catch (const CacheError& e) {
          note(std::string("could not write formula cache: ") + e.what());
        }
      }
    }
    entry->closed = closed_form(entry->formula);
    return std::shared_ptr<const FormulaEntry>(std::move(entry));
  };

  auto b = basis(level);
  if (options_.policy != BasisPolicy::Auto || b->source() != BasisSource::Fixture) return derive_on(b);
  try {
    return derive_on(b);
  } catch (const BasisNotSpanningError& e) {
    note("fixture basis at level " + std::to_string(level) + " rejected for " + pair_name(alpha, beta) + ": " +
         e.what() + "; using search basis");
  } catch (const UnderdeterminedError& e) {
    note("fixture basis at level " + std::to_string(level) + " rejected for " + pair_name(alpha, beta) + ": " +
         e.what() + "; using search basis");
  }
  {
    std::lock_guard lock(mu_);
    fixture_failed_[level] = true;
  }
  return derive_on(basis_from(level, BasisSource::Search));
}

std::shared_ptr<const FormulaEntry> FormulaProvider::formula(std::int64_t alpha, std::int64_t beta) {
  if (alpha < 1 || beta <= alpha || std::gcd(alpha, beta) != 1) {
    throw DomainError("formula() needs coprime 1 <= alpha < beta, got " + pair_name(alpha, beta));
  }
  return single_flight(mu_, formulas_, std::make_pair(alpha, beta), [&] { return build_formula(alpha, beta); });
}

std::shared_ptr<const FormulaEntry> FormulaProvider::formula_covering(std::int64_t alpha, std::int64_t beta, std::int64_t n) {
  auto base = formula(alpha, beta);
  if (n <= static_cast<std::int64_t>(base->basis->precision())) return base;
  // Round up so nearby requests share one extension.
  std::size_t target = std::max<std::size_t>(2 * base->basis->precision(), static_cast<std::size_t>(n));
  target = (target + 255) / 256 * 256;
  return single_flight(mu_, deep_, std::make_tuple(alpha, beta, target), [&] {
    auto entry = std::make_shared<FormulaEntry>(*base);
    entry->basis = std::make_shared<const ModularBasis>(base->basis->with_precision(target));
    return std::shared_ptr<const FormulaEntry>(std::move(entry));
  });
}

Natural FormulaProvider::W(std::int64_t alpha, std::int64_t beta, std::int64_t n) {
  return dispatch_W(alpha, beta, n, *this);
}

Natural dispatch_W(std::int64_t alpha, std::int64_t beta, std::int64_t n, FormulaProvider& provider) {
  if (alpha < 1 || beta < 1) throw DomainError("W needs alpha, beta >= 1");
  if (n <= 0) return 0;
  auto r = reduce_by_gcd(alpha, beta, n);
  if (!r) return 0;
  if (r->alpha == r->beta) {
    const BigRational v = diagonal_W(r->alpha, r->n);
    if (!is_integer(v) || v < 0) throw FormulaCorruptError("diagonal W evaluated to " + to_string(v));
    return v.get_num();
  }
  const std::int64_t a = std::min(r->alpha, r->beta);
  const std::int64_t b = std::max(r->alpha, r->beta);
  auto entry = provider.formula_covering(a, b, r->n);
  const BigRational v = evaluate_closed_form(entry->closed, *entry->basis, r->n);
  if (!is_integer(v) || v < 0) {
    throw FormulaCorruptError("W_" + pair_name(a, b) + "(" + std::to_string(r->n) + ") evaluated to " + to_string(v));
  }
  return v.get_num();
}

}  // namespace divconv
