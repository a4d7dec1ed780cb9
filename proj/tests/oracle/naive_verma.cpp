#include "naive_verma.hpp"

namespace oracle {

std::vector<std::pair<Sym, Rational>> bracket(const Sym& a, const Sym& b) {
  std::vector<std::pair<Sym, Rational>> out;
  auto put = [&](char k, const Rational& idx, const Rational& c) {
    if (!c.is_zero()) out.push_back({Sym{k, idx}, c});
  };
  const Rational& u = a.idx;
  const Rational& v = b.idx;
  const Rational half(1, 2);
  if (a.kind == 'L' && b.kind == 'L') put('L', u + v, v - u);
  else if (a.kind == 'L' && b.kind == 'M') put('M', u + v, v);
  else if (a.kind == 'M' && b.kind == 'L') put('M', u + v, -u);
  else if (a.kind == 'L' && b.kind == 'Y') put('Y', u + v, v - u * half);
  else if (a.kind == 'Y' && b.kind == 'L') put('Y', u + v, -(u - v * half));
  else if (a.kind == 'Y' && b.kind == 'Y') put('M', u + v, v - u);
  return out;
}

namespace {

int kind_rank(char k) { return k == 'L' ? 0 : k == 'M' ? 1 : 2; }

}  // namespace

Poly act(const Word& word, const Rational& c, const Rational& h, bool natural) {
  auto sign = [&](const Rational& x) { return natural ? x.sign() : -x.sign(); };
  // a b must be swapped when a is not lowering, or both lower and b sorts first
  auto out_of_order = [&](const Sym& a, const Sym& b) {
    if (sign(a.idx) >= 0) return true;
    if (kind_rank(a.kind) != kind_rank(b.kind)) return kind_rank(a.kind) > kind_rank(b.kind);
    return sign(b.idx - a.idx) > 0;
  };

  Poly result;
  std::vector<std::pair<Word, Rational>> work{{word, Rational(1)}};
  while (!work.empty()) {
    auto [w, coef] = std::move(work.back());
    work.pop_back();
    if (coef.is_zero()) continue;
    if (w.empty()) {
      result[w] += coef;
      continue;
    }
    const Sym last = w.back();
    if (sign(last.idx) > 0) continue;
    if (last.idx.is_zero()) {
      w.pop_back();
      work.push_back({w, coef * (last.kind == 'L' ? h : last.kind == 'M' ? c : Rational(0))});
      continue;
    }
    // L_0 in the middle is handled by swapping it rightwards like any raising letter
    std::size_t p = w.size() - 1;
    bool found = false;
    while (p-- > 0) {
      if (out_of_order(w[p], w[p + 1])) {
        found = true;
        break;
      }
    }
    if (!found) {
      result[w] += coef;
      continue;
    }
    Word swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    work.push_back({swapped, coef});
    for (const auto& [s, k] : bracket(w[p], w[p + 1])) {
      Word merged(w.begin(), w.begin() + static_cast<long>(p));
      merged.push_back(s);
      merged.insert(merged.end(), w.begin() + static_cast<long>(p) + 2, w.end());
      work.push_back({merged, coef * k});
    }
  }
  std::erase_if(result, [](const auto& kv) { return kv.second.is_zero(); });
  return result;
}

namespace {

void count_multisets(const std::vector<long>& depths, std::size_t from, long remaining, std::uint64_t& n) {
  if (remaining == 0) {
    ++n;
    return;
  }
  for (std::size_t i = from; i < depths.size(); ++i)
    if (depths[i] <= remaining) count_multisets(depths, i, remaining - depths[i], n);
}

}  // namespace

std::uint64_t weight_space_dim(const gsv::GroupPresentation& gp, const Rational& step, const Rational& depth) {
  const Rational q = depth / step;
  if (!q.is_integer()) return 0;
  const long n = q.numerator().get_si();
  std::vector<long> letters;  // depth (in steps) of each lowering letter
  for (long e = 1; e <= n; ++e) {
    const Rational x = gp.oriented(-Rational(e) * step);
    switch (gp.classify(x)) {
      case gsv::ElementClass::InG:
        letters.push_back(e);  // L
        letters.push_back(e);  // M
        break;
      case gsv::ElementClass::InG1:
        letters.push_back(e);  // Y
        break;
      case gsv::ElementClass::Outside:
        break;
    }
  }
  std::uint64_t count = 0;
  count_multisets(letters, 0, n, count);
  return count;
}

std::uint64_t partitions(long n) {
  std::vector<std::uint64_t> series(static_cast<std::size_t>(n) + 1, 0);
  series[0] = 1;
  for (long k = 1; k <= n; ++k) {
    // multiply by 1 / (1 - q^k) = 1 + q^k + q^2k + ...
    std::vector<std::uint64_t> next(series.size(), 0);
    for (long s = 0; s <= n; ++s)
      for (long t = s; t <= n; t += k) next[static_cast<std::size_t>(t)] += series[static_cast<std::size_t>(s)];
    series = std::move(next);
  }
  return series[static_cast<std::size_t>(n)];
}

}  // namespace oracle
