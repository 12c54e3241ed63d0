#include <algorithm>
#include <array>

#include "confsched/ga.hpp"

namespace confsched {

namespace {

enum Neighbourhood { kMove, kSwap, kOrOpt, kTwoOpt, kCount };

// Candidate number `idx` of neighbourhood `h`, written into `out`; the
// numbering follows the lexicographic order of (i, k).
class Neighbours {
 public:
  explicit Neighbours(int n) : n_(n) {}

  std::int64_t size(int h) const {
    const std::int64_t n = n_;
    switch (h) {
      case kMove: return n * (n - 1);
      case kSwap:
      case kTwoOpt: return n * (n - 1) / 2;
      case kOrOpt: return n >= 3 ? (n - 1) * (n - 2) : 0;
    }
    return 0;
  }

  void apply(int h, std::int64_t idx, const std::vector<JobId>& base, std::vector<JobId>& out) const {
    out = base;
    if (h == kMove) {
      const int i = static_cast<int>(idx / (n_ - 1));
      int k = static_cast<int>(idx % (n_ - 1));
      if (k >= i) ++k;
      const JobId j = out[i];
      out.erase(out.begin() + i);
      out.insert(out.begin() + k, j);
    } else if (h == kOrOpt) {
      const int i = static_cast<int>(idx / (n_ - 2));
      int k = static_cast<int>(idx % (n_ - 2));
      if (k >= i) ++k;
      const JobId a = out[i], b = out[i + 1];
      out.erase(out.begin() + i, out.begin() + i + 2);
      out.insert(out.begin() + k, {a, b});
    } else {
      const auto [i, k] = pair_of(idx);
      if (h == kSwap) std::swap(out[i], out[k]);
      else std::reverse(out.begin() + i, out.begin() + k + 1);
    }
  }

 private:
  // idx-th pair i < k in lexicographic order.
  std::pair<int, int> pair_of(std::int64_t idx) const {
    int i = 0;
    while (idx >= n_ - 1 - i) {
      idx -= n_ - 1 - i;
      ++i;
    }
    return {i, i + 1 + static_cast<int>(idx)};
  }

  int n_;
};

}  // namespace

LocalSearchResult local_search(const Instance& inst, const Chromosome& start, int max_iters) {
  DecodeWorkspace ws;
  LocalSearchResult r;
  std::vector<JobId> current = start.perm;
  const Time ectf = ws.evaluate(inst, current, Decoder::Ectf);
  const Time nd = ws.evaluate(inst, current, Decoder::NonDelay);
  Time best = std::min(ectf, nd);
  r.decoder = ectf <= nd ? Decoder::Ectf : Decoder::NonDelay;

  const int n = inst.n();
  const Neighbours nb(n);
  std::array<std::int64_t, kCount> cursor{};
  std::vector<JobId> candidate;
  int h = 0, exhausted = 0;

  while (r.evaluations < max_iters && exhausted < kCount) {
    const std::int64_t size = nb.size(h);
    bool improved = false;
    for (std::int64_t scanned = 0; scanned < size && r.evaluations < max_iters; ++scanned) {
      const std::int64_t idx = cursor[h];
      cursor[h] = (idx + 1) % size;
      nb.apply(h, idx, current, candidate);
      ++r.evaluations;
      const Time a = ws.evaluate(inst, candidate, Decoder::Ectf, best - 1);
      const Time b = ws.evaluate(inst, candidate, Decoder::NonDelay, best - 1);
      const Time value = std::min(a, b);
      if (value < best) {
        best = value;
        r.decoder = a <= b ? Decoder::Ectf : Decoder::NonDelay;
        current.swap(candidate);
        improved = true;
        break;
      }
    }
    if (improved) {
      exhausted = 0;
    } else if (r.evaluations < max_iters || size == 0) {
      ++exhausted;
    }
    h = (h + 1) % kCount;
  }

  r.local_optimum = exhausted >= kCount;
  r.chromosome = Chromosome(std::move(current), best);
  return r;
}

}  // namespace confsched
