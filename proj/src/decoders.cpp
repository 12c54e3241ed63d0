#include "confsched/decoders.hpp"

#include <algorithm>
#include <cctype>

#include "confsched/error.hpp"

namespace confsched {

std::string_view to_string(Decoder d) {
  switch (d) {
    case Decoder::Fifo: return "FIFO";
    case Decoder::GifflerThompson: return "GT";
    case Decoder::Ectf: return "ECTF";
    case Decoder::NonDelay: return "ND";
  }
  return "?";
}

Decoder parse_decoder(std::string_view name) {
  std::string upper(name);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "FIFO") return Decoder::Fifo;
  if (upper == "GT") return Decoder::GifflerThompson;
  if (upper == "ECTF") return Decoder::Ectf;
  if (upper == "ND") return Decoder::NonDelay;
  throw ParameterError("unknown decoder '" + std::string(name) + "' (expected FIFO, GT, ECTF or ND)");
}

void StartMatrix::reset(int machines, int jobs) {
  release_.assign(jobs, 0);
  horizon_.assign(machines, 0);
  min_horizon_ = 0;
}

MachineId StartMatrix::machine_for(JobId j) const {
  const Time r = release_[j];
  const int m = machines();
  if (r >= min_horizon_) {
    for (int i = 0; i < m; ++i)
      if (horizon_[i] <= r) return i;
  }
  for (int i = 0; i < m; ++i)
    if (horizon_[i] == min_horizon_) return i;
  return 0;
}

void StartMatrix::place(MachineId i, Time completion, std::span<const int> conflicts) {
  if (horizon_[i] < completion) {
    const bool was_min = horizon_[i] == min_horizon_;
    horizon_[i] = completion;
    if (was_min) min_horizon_ = *std::min_element(horizon_.begin(), horizon_.end());
  }
  for (int c : conflicts)
    if (release_[c] < completion) release_[c] = completion;
}

namespace {

std::size_t select_position(const Instance& inst, const StartMatrix& starts, std::span<const JobId> remaining,
                            Decoder variant) {
  const std::size_t count = remaining.size();
  switch (variant) {
    case Decoder::Fifo: return 0;
    case Decoder::NonDelay: {
      std::size_t best = 0;
      Time best_start = starts.earliest(remaining[0]);
      for (std::size_t k = 1; k < count; ++k) {
        const Time s = starts.earliest(remaining[k]);
        if (s < best_start) {
          best_start = s;
          best = k;
        }
      }
      return best;
    }
    case Decoder::Ectf:
    case Decoder::GifflerThompson: {
      std::size_t best = 0;
      Time best_ect = starts.earliest(remaining[0]) + inst.p(remaining[0]);
      for (std::size_t k = 1; k < count; ++k) {
        const Time e = starts.earliest(remaining[k]) + inst.p(remaining[k]);
        if (e < best_ect) {
          best_ect = e;
          best = k;
        }
      }
      if (variant == Decoder::Ectf) return best;
      const JobId pivot = remaining[best];
      for (std::size_t k = 0; k < count; ++k) {
        const JobId j = remaining[k];
        if ((j == pivot || inst.conflict(j, pivot)) && starts.earliest(j) < best_ect) return k;
      }
      return best;
    }
  }
  return 0;
}

}  // namespace

Time DecodeWorkspace::evaluate(const Instance& inst, std::span<const JobId> perm, Decoder variant, Time cutoff,
                               Schedule* out, std::vector<JobId>* order) {
  remaining_.assign(perm.begin(), perm.end());
  starts_.reset(inst.m(), inst.n());
  if (out) *out = Schedule(inst.n());
  if (order) order->clear();
  Time total = 0;
  while (!remaining_.empty()) {
    const std::size_t pos = select_position(inst, starts_, remaining_, variant);
    const JobId j = remaining_[pos];
    const Time start = starts_.earliest(j);
    const MachineId machine = starts_.machine_for(j);
    const Time completion = start + inst.p(j);
    total += completion;
    if (out) {
      out->machine_of[j] = machine;
      out->start_of[j] = start;
    }
    if (order) order->push_back(j);
    remaining_.erase(remaining_.begin() + static_cast<std::ptrdiff_t>(pos));
    if (total > cutoff) return total;
    starts_.place(machine, completion, inst.conflicts().neighbors(j));
  }
  return total;
}

DecodeResult decode(const Instance& inst, std::span<const JobId> perm, Decoder variant) {
  if (!is_permutation(perm, inst.n())) throw StructuralError("decoder input is not a permutation of the jobs");
  DecodeWorkspace ws;
  DecodeResult r;
  r.total = ws.evaluate(inst, perm, variant, std::numeric_limits<Time>::max(), &r.schedule, &r.order);
  return r;
}

Time decode_value(const Instance& inst, std::span<const JobId> perm, Decoder variant, Time cutoff) {
  DecodeWorkspace ws;
  return ws.evaluate(inst, perm, variant, cutoff);
}

}  // namespace confsched
