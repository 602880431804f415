#include "tetraising/recoupling.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>
#include <shared_mutex>

namespace tetraising {

Spin Spin::from_twice(int twice) {
  if (twice < 0) throw InvalidArgument("spin twice-value must be nonnegative");
  return Spin(twice);
}

TetraSpins::TetraSpins(const std::array<int, 6>& twice) {
  for (std::size_t i = 0; i < 6; ++i) spins_[i] = Spin::from_twice(twice[i]);
}

std::array<int, 6> TetraSpins::twice_values() const {
  std::array<int, 6> out{};
  for (std::size_t i = 0; i < 6; ++i) out[i] = spins_[i].twice();
  return out;
}

TetraSpins TetraSpins::opposite_swapped() const {
  const auto t = twice_values();
  return TetraSpins({t[3], t[4], t[5], t[0], t[1], t[2]});
}

TetraSpins TetraSpins::relabeled(const std::array<int, 6>& perm) const {
  std::array<int, 6> out{};
  std::array<bool, 6> seen{};
  for (std::size_t e = 0; e < 6; ++e) {
    const int target = perm[e];
    if (target < 1 || target > 6 || seen[static_cast<std::size_t>(target - 1)])
      throw InvalidArgument("relabeling must be a permutation of 1..6");
    seen[static_cast<std::size_t>(target - 1)] = true;
    out[static_cast<std::size_t>(target - 1)] = spins_[e].twice();
  }
  return TetraSpins(out);
}

namespace {

bool admissible_twice(int a, int b, int c) {
  return (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b;
}

bool admissible_twice(const std::array<int, 6>& t) {
  for (const auto& v : kTetraVertexTriads)
    if (!admissible_twice(t[v[0] - 1], t[v[1] - 1], t[v[2] - 1])) return false;
  return true;
}

// Delta^2 for twice-spins, as an integer.
BigInt triangle_coeff_sq_twice(int a, int b, int c) {
  const int J = (a + b + c) / 2;
  BigInt out = factorial(J + 1);
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), factorial(J - a).get_mpz_t());
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), factorial(J - b).get_mpz_t());
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), factorial(J - c).get_mpz_t());
  return out;
}

// Racah sum for an admissible sextuple, written into `sum`. Consecutive terms
// are related by
//   term(n+1) = -term(n) (n+2) prod_gamma (J_gamma - n) / prod_v (n+1 - J_v),
// so only the first term touches the factorial table.
void racah_sum_admissible(const std::array<int, 6>& t, BigInt& sum, BigInt& term) {
  std::array<long, 4> jv{};
  std::array<long, 3> jg{};
  for (std::size_t v = 0; v < 4; ++v) {
    const auto& tri = kTetraVertexTriads[v];
    jv[v] = (t[tri[0] - 1] + t[tri[1] - 1] + t[tri[2] - 1]) / 2;
  }
  for (std::size_t g = 0; g < 3; ++g) {
    long s = 0;
    for (int e : kTetraSquares[g]) s += t[static_cast<std::size_t>(e - 1)];
    jg[g] = s / 2;
  }
  const long lo = *std::max_element(jv.begin(), jv.end());
  const long hi = *std::min_element(jg.begin(), jg.end());
  sum = 0;
  if (lo > hi) return;

  term = factorial(static_cast<int>(lo + 1));
  for (long j : jv)
    mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), factorial(static_cast<int>(lo - j)).get_mpz_t());
  for (long j : jg)
    mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), factorial(static_cast<int>(j - lo)).get_mpz_t());
  if (lo % 2 != 0) mpz_neg(term.get_mpz_t(), term.get_mpz_t());

  for (long n = lo;; ++n) {
    sum += term;
    if (n == hi) break;
    mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(n + 2));
    for (long j : jg)
      mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(j - n));
    for (long j : jv)
      mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(n + 1 - j));
    mpz_neg(term.get_mpz_t(), term.get_mpz_t());
  }
}

double log_abs(const BigInt& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::abs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

// Calls fn(t) for every admissible twice-spin sextuple with all entries <= cap.
template <class Fn>
void for_each_admissible(int cap, Fn&& fn) {
  std::array<int, 6> t{};
  for (t[0] = 0; t[0] <= cap; ++t[0])
    for (t[1] = 0; t[1] <= cap; ++t[1])
      for (t[2] = std::abs(t[0] - t[1]); t[2] <= std::min(cap, t[0] + t[1]); t[2] += 2)
        for (t[4] = 0; t[4] <= cap; ++t[4])
          for (t[5] = std::abs(t[0] - t[4]); t[5] <= std::min(cap, t[0] + t[4]); t[5] += 2) {
            // remaining triads {2,4,6} and {3,4,5} constrain j4
            const int lo = std::max(std::abs(t[1] - t[5]), std::abs(t[2] - t[4]));
            const int hi = std::min({cap, t[1] + t[5], t[2] + t[4]});
            if ((lo + t[1] + t[5]) % 2 != 0) continue;
            if ((lo + t[2] + t[4]) % 2 != 0) continue;
            for (t[3] = lo; t[3] <= hi; t[3] += 2) fn(t);
          }
}

}  // namespace

bool is_admissible(Spin a, Spin b, Spin c) {
  return admissible_twice(a.twice(), b.twice(), c.twice());
}

bool is_admissible(const TetraSpins& s) { return admissible_twice(s.twice_values()); }

ExactRational triangle_coeff_sq(Spin a, Spin b, Spin c) {
  if (!is_admissible(a, b, c))
    throw InvalidArgument("triangle coefficient needs an admissible triple");
  return ExactRational(triangle_coeff_sq_twice(a.twice(), b.twice(), c.twice()));
}

BigInt racah_weight_integer(const TetraSpins& s) {
  const auto t = s.twice_values();
  BigInt sum, term;
  if (admissible_twice(t)) racah_sum_admissible(t, sum, term);
  return sum;
}

ExactRational racah_weight(const TetraSpins& s) { return ExactRational(racah_weight_integer(s)); }

double sixj(const TetraSpins& s) {
  const auto t = s.twice_values();
  if (!admissible_twice(t)) return 0.0;
  const BigInt w = racah_weight_integer(s);
  if (w == 0) return 0.0;
  double log_value = log_abs(w);
  for (const auto& v : kTetraVertexTriads)
    log_value -= 0.5 * log_abs(triangle_coeff_sq_twice(t[v[0] - 1], t[v[1] - 1], t[v[2] - 1]));
  return std::copysign(std::exp(log_value), sgn(w));
}

GenfunPartialSum genfun_partial_sum(const Graph& g, const Couplings& y, Spin cap) {
  const auto kind = builtin_kind(g);
  if (!kind) throw Unsupported("generating function is only available for built-in graphs");
  y.require_matches(g);
  const int c = cap.twice();

  GenfunPartialSum out{Complex(0.0), Complex(0.0), 0.0};
  auto add = [&](int max_twice, Complex term) {
    if (max_twice <= c)
      out.value += term;
    else
      out.next_shell += term;
  };

  // powers[e][k] = Y_e^k for k <= cap + 1
  std::vector<std::vector<Complex>> powers(static_cast<std::size_t>(g.edge_count()));
  for (int e = 1; e <= g.edge_count(); ++e) {
    auto& row = powers[static_cast<std::size_t>(e - 1)];
    row.resize(static_cast<std::size_t>(c + 2));
    row[0] = 1.0;
    for (int k = 1; k <= c + 1; ++k) row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)] * y.at(e);
  }
  auto pw = [&](int e, int k) { return powers[static_cast<std::size_t>(e - 1)][static_cast<std::size_t>(k)]; };

  switch (*kind) {
    case BuiltinGraph::Triangle:
      for (int t = 0; t <= c + 1; ++t) {
        const double w = (t % 2 == 0 ? 1.0 : -1.0) * (t + 1);
        add(t, w * pw(1, t) * pw(2, t) * pw(3, t));
      }
      break;
    case BuiltinGraph::Theta:
      for (int a = 0; a <= c + 1; ++a)
        for (int b = 0; b <= c + 1; ++b)
          for (int d = std::abs(a - b); d <= std::min(c + 1, a + b); d += 2) {
            const int J = (a + b + d) / 2;
            const double w = (J % 2 == 0 ? 1.0 : -1.0) * triangle_coeff_sq_twice(a, b, d).get_d();
            add(std::max({a, b, d}), w * pw(1, a) * pw(2, b) * pw(3, d));
          }
      break;
    case BuiltinGraph::Tetra:
    case BuiltinGraph::TetraDual: {
      // TETRA_DUAL edge e sits where TETRA has its opposite edge.
      const bool swapped = *kind == BuiltinGraph::TetraDual;
      BigInt weight, scratch;
      for_each_admissible(c + 1, [&](const std::array<int, 6>& t) {
        racah_sum_admissible(t, weight, scratch);
        Complex term = weight.get_d();
        for (int e = 1; e <= 6; ++e) {
          const int edge = swapped ? (e <= 3 ? e + 3 : e - 3) : e;
          term *= pw(edge, t[static_cast<std::size_t>(e - 1)]);
        }
        add(*std::max_element(t.begin(), t.end()), term);
      });
      break;
    }
  }
  const double denom = std::abs(out.value);
  out.tail_ratio = denom > 0.0 ? std::abs(out.next_shell) / denom : INFINITY;
  return out;
}

const BigInt& factorial(int n) {
  if (n < 0) throw InvalidArgument("factorial of a negative number");
  static std::deque<BigInt> table{BigInt(1)};
  static std::shared_mutex mutex;
  {
    std::shared_lock lock(mutex);
    if (static_cast<std::size_t>(n) < table.size()) return table[static_cast<std::size_t>(n)];
  }
  std::unique_lock lock(mutex);
  while (table.size() <= static_cast<std::size_t>(n)) {
    BigInt next = table.back() * static_cast<unsigned long>(table.size());
    table.push_back(std::move(next));
  }
  return table[static_cast<std::size_t>(n)];
}

std::vector<BigInt> figurate_row(int p, int q_max) {
  if (p < 1 || q_max < 1) throw InvalidArgument("figurate numbers need p, q >= 1");
  const std::size_t n = static_cast<std::size_t>(q_max) + 1;
  // numerator Y (1-Y)^{p-1}
  std::vector<BigInt> num(n + 1);
  for (int k = 0; k < p && static_cast<std::size_t>(k + 1) <= n; ++k) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(p - 1), static_cast<unsigned long>(k));
    num[static_cast<std::size_t>(k + 1)] = (k % 2 == 0) ? c : BigInt(-c);
  }
  // 1/(1+Y)^{p+1} = sum_m (-1)^m C(p+m, m) Y^m
  std::vector<BigInt> inv(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    mpz_bin_uiui(inv[m].get_mpz_t(), static_cast<unsigned long>(p) + m, m);
    if (m % 2 != 0) inv[m] = -inv[m];
  }
  std::vector<BigInt> out(static_cast<std::size_t>(q_max));
  for (int q = 1; q <= q_max; ++q) {
    BigInt coef = 0;
    for (int i = 1; i <= q; ++i)
      coef += num[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(q - i)];
    out[static_cast<std::size_t>(q - 1)] = (q % 2 == 1) ? coef : BigInt(-coef);
  }
  return out;
}

BigInt figurate(int p, int q) {
  if (p < 1 || q < 1) throw InvalidArgument("figurate numbers need p, q >= 1");
  return figurate_row(p, q).back();
}

BigInt figurate_binomial(int p, int q) {
  if (p < 1 || q < 1) throw InvalidArgument("figurate numbers need p, q >= 1");
  BigInt total = 0, a, b;
  for (int n = 0; n < p; ++n) {
    mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(p - 1), static_cast<unsigned long>(n));
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(q + n), static_cast<unsigned long>(p));
    total += a * b;
  }
  return total;
}

bool figurate_bivariate_check(int order) {
  if (order > 64) throw InvalidArgument("bivariate check is capped at order 64");
  if (order < 2) return true;
  const auto n = static_cast<std::size_t>(order);
  // a[i][j]: coefficients of 1/(1-x-y-xy); b: the same times 1/(1-y)
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  a[0][0] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == 0 && j == 0) continue;
      BigInt v = 0;
      if (i > 0) v += a[i - 1][j];
      if (j > 0) v += a[i][j - 1];
      if (i > 0 && j > 0) v += a[i - 1][j - 1];
      a[i][j] = v;
    }
  for (int p = 1; p < order; ++p) {
    const auto row = figurate_row(p, order - p);
    BigInt running = 0;
    for (int q = 1; p + q <= order; ++q) {
      running += a[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(q - 1)];
      if (running != row[static_cast<std::size_t>(q - 1)]) return false;
    }
  }
  return true;
}

std::vector<ExactRational> figurate_transform_sequence(const TetraSpins& k, Spin max_cap) {
  const int cap = max_cap.twice();
  const auto kt = k.twice_values();
  int sign = 1;
  for (int v : kt)
    if (v % 2 != 0) sign = -sign;

  // fig[e][t] = T(t+1, 2k_e+1)
  std::array<std::vector<BigInt>, 6> fig;
  for (std::size_t e = 0; e < 6; ++e) {
    fig[e].resize(static_cast<std::size_t>(cap) + 1);
    for (int t = 0; t <= cap; ++t) fig[e][static_cast<std::size_t>(t)] = figurate(t + 1, kt[e] + 1);
  }

  std::vector<BigInt> shell(static_cast<std::size_t>(cap) + 1);
  BigInt weight, scratch, term;
  for_each_admissible(cap, [&](const std::array<int, 6>& t) {
    racah_sum_admissible(t, weight, scratch);
    term = weight;
    for (std::size_t e = 0; e < 6; ++e) term *= fig[e][static_cast<std::size_t>(t[e])];
    shell[static_cast<std::size_t>(*std::max_element(t.begin(), t.end()))] += term;
  });

  std::vector<ExactRational> out;
  BigInt running = 0;
  for (const auto& s : shell) {
    running += s;
    out.emplace_back(BigInt(64 * sign) * running);
  }
  return out;
}

FigurateTransform figurate_transform_partial(const TetraSpins& k, Spin j_cap) {
  return {figurate_transform_sequence(k, j_cap).back(), racah_weight(k.opposite_swapped())};
}

}  // namespace tetraising
