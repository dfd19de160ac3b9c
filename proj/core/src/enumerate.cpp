#include "mf24/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "mf24/errors.hpp"
#include "mf24/linalg.hpp"

namespace mf24 {

namespace {

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

// The cusp condition in integers. For cusp class c the order is
//   sum_delta E[c][delta] r_delta / (24 gcd(c, N/c)),  E = N gcd(c, delta) / lcm(c, delta),
// and since the weighted orders sum to k index / 12, each order is also
// bounded above by that total over the class multiplicity.
class Search {
 public:
  Search(int level, int weight, const EnumerateOptions& options)
      : level_(level), weight_(weight), divisors_(divisors(level)), options_(options) {
    const std::size_t m = divisors_.size();
    const Rational total = Rational(weight * gamma0_index(level), 12);
    e_.assign(m, std::vector<long>(m));
    cap_.resize(m);
    RationalMatrix order(m, m);
    std::vector<Rational> vertex_scale(m);
    for (std::size_t ci = 0; ci < m; ++ci) {
      const int c = divisors_[ci];
      const int g = std::gcd(c, level / c);
      int mult = 0;
      for (int x = 1; x <= g; ++x) {
        mult += std::gcd(x, g) == 1;
      }
      for (std::size_t di = 0; di < m; ++di) {
        const int d = divisors_[di];
        e_[ci][di] = static_cast<long>(level) * std::gcd(c, d) / std::lcm(c, d);
        order(ci, di) = Rational(e_[ci][di], 24L * g);
      }
      cap_[ci] = floor_of(total * 24 * g / mult).get_si();
      vertex_scale[ci] = total / mult;
    }

    // The polytope {orders >= 0, weighted sum = total} is a simplex whose
    // vertices map to r = M^{-1} (total / mult_c) e_c.
    auto inv = inverse(order);
    if (!inv) {
      throw std::logic_error("cusp order matrix is singular");
    }
    lo_.assign(m, 0);
    hi_.assign(m, 0);
    for (std::size_t di = 0; di < m; ++di) {
      std::optional<Rational> mn, mx;
      for (std::size_t ci = 0; ci < m; ++ci) {
        const Rational v = (*inv)(di, ci) * vertex_scale[ci];
        if (!mn || v < *mn) mn = v;
        if (!mx || v > *mx) mx = v;
      }
      lo_[di] = std::max<long>(ceil_of(*mn).get_si(), -options_.safety_box);
      hi_[di] = std::min<long>(floor_of(*mx).get_si(), options_.safety_box);
    }

    // For each cusp and depth, suffix indices ordered by decreasing coefficient.
    by_coeff_.assign(m, {});
    for (std::size_t ci = 0; ci < m; ++ci) {
      by_coeff_[ci].resize(m);
      for (std::size_t depth = 0; depth < m; ++depth) {
        auto& idx = by_coeff_[ci][depth];
        for (std::size_t j = depth; j < m; ++j) {
          idx.push_back(j);
        }
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return e_[ci][a] > e_[ci][b]; });
      }
    }
  }

  const std::vector<long>& lower() const { return lo_; }
  const std::vector<long>& upper() const { return hi_; }

  // Solutions with r_0 = first, in lexicographic order.
  std::vector<std::vector<int>> run_branch(long first, SearchStats& stats) const {
    const std::size_t m = divisors_.size();
    State st{std::vector<long>(m, 0), std::vector<long>(m, 0), {}, stats};
    st.r[0] = first;
    for (std::size_t ci = 0; ci < m; ++ci) {
      st.partial[ci] = e_[ci][0] * first;
    }
    const long remaining = 2L * weight_ - first;
    if (feasible(1, remaining, st.partial)) {
      dfs(1, remaining, st);
    }
    return std::move(st.out);
  }

 private:
  struct State {
    std::vector<long> r;
    std::vector<long> partial;
    std::vector<std::vector<int>> out;
    SearchStats& stats;
  };

  // LP relaxation over the box and the sum: can each cusp still land in
  // [0, cap]? Fills the heaviest coefficients first for the maximum and
  // the lightest first for the minimum.
  bool feasible(std::size_t depth, long remaining, const std::vector<long>& partial) const {
    const std::size_t m = divisors_.size();
    long base = 0;
    long room = 0;
    for (std::size_t j = depth; j < m; ++j) {
      base += lo_[j];
      room += hi_[j] - lo_[j];
    }
    const long extra = remaining - base;
    if (extra < 0 || extra > room) {
      return false;
    }
    for (std::size_t ci = 0; ci < m; ++ci) {
      const auto& idx = by_coeff_[ci][depth];
      long at_lo = partial[ci];
      for (std::size_t j : idx) {
        at_lo += e_[ci][j] * lo_[j];
      }
      long mx = at_lo;
      long left = extra;
      for (std::size_t k = 0; k < idx.size() && left > 0; ++k) {
        const std::size_t j = idx[k];
        const long take = std::min(left, hi_[j] - lo_[j]);
        mx += take * e_[ci][j];
        left -= take;
      }
      if (mx < 0) {
        return false;
      }
      long mn = at_lo;
      left = extra;
      for (std::size_t k = idx.size(); k-- > 0 && left > 0;) {
        const std::size_t j = idx[k];
        const long take = std::min(left, hi_[j] - lo_[j]);
        mn += take * e_[ci][j];
        left -= take;
      }
      if (mn > cap_[ci]) {
        return false;
      }
    }
    return true;
  }

  void dfs(std::size_t depth, long remaining, State& st) const {
    const std::size_t m = divisors_.size();
    ++st.stats.nodes;
    if (depth + 1 == m) {
      leaf(remaining, st);
      return;
    }
    for (long v = lo_[depth]; v <= hi_[depth]; ++v) {
      st.r[depth] = v;
      for (std::size_t ci = 0; ci < m; ++ci) {
        st.partial[ci] += e_[ci][depth] * v;
      }
      if (feasible(depth + 1, remaining - v, st.partial)) {
        dfs(depth + 1, remaining - v, st);
      }
      for (std::size_t ci = 0; ci < m; ++ci) {
        st.partial[ci] -= e_[ci][depth] * v;
      }
    }
  }

  void leaf(long last, State& st) const {
    const std::size_t m = divisors_.size();
    ++st.stats.leaves;
    if (last < lo_[m - 1] || last > hi_[m - 1]) {
      return;
    }
    st.r[m - 1] = last;
    for (std::size_t ci = 0; ci < m; ++ci) {
      if (st.partial[ci] + e_[ci][m - 1] * last < 0) {
        return;
      }
    }
    long low = 0;
    long high = 0;
    for (std::size_t di = 0; di < m; ++di) {
      low += divisors_[di] * st.r[di];
      high += (level_ / divisors_[di]) * st.r[di];
    }
    if (low % 24 != 0 || high % 24 != 0) {
      return;
    }
    ++st.stats.holomorphic;
    std::vector<int> vec(st.r.begin(), st.r.end());
    for (int x : vec) {
      if (std::abs(x) >= options_.safety_box) {
        throw std::logic_error("accepted exponent vector touches the safety box");
      }
    }
    st.out.push_back(std::move(vec));
  }

  int level_;
  int weight_;
  std::vector<int> divisors_;
  EnumerateOptions options_;
  std::vector<std::vector<long>> e_;
  std::vector<long> cap_;
  std::vector<long> lo_;
  std::vector<long> hi_;
  std::vector<std::vector<std::vector<std::size_t>>> by_coeff_;
};

}  // namespace

std::vector<EtaQuotient> enumerate_holomorphic_eta_quotients(int level, int weight,
                                                             const EnumerateOptions& options,
                                                             SearchStats* stats) {
  if (level < 1 || weight < 1) {
    throw std::invalid_argument("enumeration needs positive level and weight");
  }
  const Search search(level, weight, options);
  const long first_lo = search.lower().front();
  const long first_hi = search.upper().front();
  const std::size_t branches = static_cast<std::size_t>(std::max(0L, first_hi - first_lo + 1));

  std::vector<std::vector<std::vector<int>>> results(branches);
  std::vector<SearchStats> branch_stats(branches);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t b = next++; b < branches; b = next++) {
      results[b] = search.run_branch(first_lo + static_cast<long>(b), branch_stats[b]);
    }
  };
  int jobs = options.jobs > 0 ? options.jobs : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(branches, 1)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < jobs; ++i) {
      pool.emplace_back(worker);
    }
  }

  std::vector<EtaQuotient> out;
  SearchStats total;
  for (std::size_t b = 0; b < branches; ++b) {
    total.nodes += branch_stats[b].nodes;
    total.leaves += branch_stats[b].leaves;
    total.holomorphic += branch_stats[b].holomorphic;
    for (const auto& vec : results[b]) {
      out.push_back(EtaQuotient::from_vector(vec, level));
    }
  }
  if (stats) {
    total.lower.assign(search.lower().begin(), search.lower().end());
    total.upper.assign(search.upper().begin(), search.upper().end());
    *stats = std::move(total);
  }
  return out;
}

std::vector<EtaQuotient> enumerate_eta_quotients(CharacterLabel character,
                                                 const EnumerateOptions& options,
                                                 SearchStats* stats) {
  if (character == CharacterLabel::other) {
    throw std::invalid_argument("enumeration needs one of the four space characters");
  }
  // The search does not depend on the character, so one run serves all four.
  static std::mutex mutex;
  static std::map<int, std::pair<std::vector<EtaQuotient>, SearchStats>> cache;
  const std::pair<std::vector<EtaQuotient>, SearchStats>* all = nullptr;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(options.safety_box);
    if (it == cache.end()) {
      SearchStats st;
      auto found = enumerate_holomorphic_eta_quotients(SpaceId::kLevel, SpaceId::kWeight, options,
                                                       &st);
      it = cache.emplace(options.safety_box, std::pair{std::move(found), std::move(st)}).first;
    }
    all = &it->second;
  }
  if (stats) {
    *stats = all->second;
  }
  std::vector<EtaQuotient> out;
  for (const EtaQuotient& f : all->first) {
    if (character_label(f) == character) {
      out.push_back(f);
    }
  }
  return out;
}

Classification classify_eisenstein(const std::vector<EtaQuotient>& quotients,
                                   CharacterLabel character, int verify_to) {
  const SpaceId space{character, Subspace::M};
  Classification out;
  for (const EtaQuotient& f : quotients) {
    EisensteinCuspSplit split;
    try {
      split = eisenstein_cusp_split(eta_quotient_series(f, verify_to + 1), space, verify_to);
    } catch (const NotInSpace& e) {
      throw std::logic_error("enumerated quotient " + to_string(f) + " not in " + space.name() +
                             ": " + e.what());
    }
    (split.is_eisenstein() ? out.eisenstein : out.cuspidal_component).push_back(f);
  }
  return out;
}

std::vector<ExpansionRow> derive_expansion_table(CharacterLabel character, int verify_to,
                                                 const EnumerateOptions& options) {
  const SpaceId space{character, Subspace::M};
  std::vector<ExpansionRow> out;
  for (const EtaQuotient& f : enumerate_eta_quotients(character, options)) {
    SolveResult sol = solve_in_basis(eta_quotient_series(f, verify_to + 1), space, verify_to);
    if (eisenstein_cusp_split(sol).is_eisenstein()) {
      out.push_back({f, std::move(sol)});
    }
  }
  return out;
}

std::optional<LowerLevelOrigin> lower_level_origin(const EtaQuotient& f, bool strict) {
  constexpr std::pair<int, int> kSources[] = {{12, 1}, {12, 2}, {8, 1}, {8, 3}};
  for (auto [level, t] : kSources) {
    if (f.level() % (level * t) != 0) {
      continue;
    }
    std::map<int, int> g;
    bool fits = true;
    for (auto [delta, r] : f.exponents()) {
      if (delta % t != 0 || level % (delta / t) != 0) {
        fits = false;
        break;
      }
      g[delta / t] = r;
    }
    if (!fits) {
      continue;
    }
    EtaQuotient source(g, level);
    if (strict && !satisfies_eta_congruences(source)) {
      continue;
    }
    return LowerLevelOrigin{level, t, std::move(source)};
  }
  return std::nullopt;
}

}  // namespace mf24
