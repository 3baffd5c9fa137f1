#include <algorithm>
#include <numeric>
#include <vector>

#include "sfs/decide.hpp"
#include "sfs/error.hpp"

namespace sfs {

namespace {

constexpr long long kMaxAlphaBound = 10000;  // keeps the int64 kernel exact

std::vector<Fiber> candidate_fibers(long long max_alpha) {
  if (max_alpha < 2) throw Error(Errc::invalid_argument, "max_alpha must be >= 2");
  if (max_alpha > kMaxAlphaBound)
    throw Error(Errc::invalid_argument, "max_alpha above supported bound 10000");
  std::vector<Fiber> fibers;
  for (long long a = 2; a <= max_alpha; ++a)
    for (long long b = 1; b < a; ++b)
      if (std::gcd(a, b) == 1) fibers.push_back({a, b});
  return fibers;  // already in (alpha, beta) lex order
}

// Integer-only covering test for the (b=-1; f1,f2,f3) family. Works over
// the common denominator D = a1*a2*a3: e*D = D - S and t*D = D - C with
// S = sum of beta_i * (product of the other alphas), C the same with 1 in
// place of beta_i. Mirrors covers_unit_tangent_bundle.
bool kernel_covers(const Fiber& f1, const Fiber& f2, const Fiber& f3) {
  const long long d23 = f2.alpha * f3.alpha;
  const long long d13 = f1.alpha * f3.alpha;
  const long long d12 = f1.alpha * f2.alpha;
  const long long den = f1.alpha * d23;
  const long long e_num = den - (f1.beta * d23 + f2.beta * d13 + f3.beta * d12);
  const long long t_num = den - (d23 + d13 + d12);
  if (e_num == 0) return false;
  for (int s : {+1, -1}) {
    const long long ratio_num = s > 0 ? t_num : -t_num;
    if (ratio_num % e_num != 0) continue;
    const long long degree = ratio_num / e_num;
    if (degree <= 0) continue;
    bool ok = true;
    for (const Fiber& f : {f1, f2, f3}) {
      long long r = ((degree % f.alpha) * f.beta - s) % f.alpha;
      if (r < 0) r += f.alpha;
      if (std::gcd(degree % f.alpha, f.alpha) != 1 || r != 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool kernel_is_gap_example(const Fiber& f1, const Fiber& f2, const Fiber& f3) {
  const long long d23 = f2.alpha * f3.alpha;
  const long long d13 = f1.alpha * f3.alpha;
  const long long d12 = f1.alpha * f2.alpha;
  const long long den = f1.alpha * d23;
  if (d23 + d13 + d12 >= den) return false;                             // not hyperbolic
  if (f1.beta * d23 + f2.beta * d13 + f3.beta * d12 >= den) return false;  // sufficient test fails
  return !kernel_covers(f1, f2, f3);
}

}  // namespace

std::vector<SeifertInvariant> enumerate_turnover_gap_examples(long long max_alpha) {
  const std::vector<Fiber> cands = candidate_fibers(max_alpha);
  const long long n = static_cast<long long>(cands.size());

  std::vector<std::vector<SeifertInvariant>> buckets(cands.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    auto& local = buckets[i];
    for (long long j = i; j < n; ++j)
      for (long long k = j; k < n; ++k)
        if (kernel_is_gap_example(cands[i], cands[j], cands[k]))
          local.emplace_back(true, 0, -1, std::vector<Fiber>{cands[i], cands[j], cands[k]});
  }

  std::vector<SeifertInvariant> out;
  for (auto& bucket : buckets)
    out.insert(out.end(), std::make_move_iterator(bucket.begin()),
               std::make_move_iterator(bucket.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SeifertInvariant> enumerate_turnover_gap_examples_reference(long long max_alpha) {
  const std::vector<Fiber> cands = candidate_fibers(max_alpha);
  std::vector<SeifertInvariant> out;
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i; j < cands.size(); ++j)
      for (std::size_t k = j; k < cands.size(); ++k) {
        SeifertInvariant m(true, 0, -1, {cands[i], cands[j], cands[k]});
        if (!is_turnover(m.base()) || classify_geometry(m.base()) != Geometry::Hyperbolic)
          continue;
        if (!horizontal_foliation_sufficient(m)) continue;
        if (admits_ph_turnover(m).kind != VerdictKind::no) continue;
        out.push_back(std::move(m));
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sfs
