#include "forcing/transfinite.hpp"

#include <algorithm>

namespace forcing {

BlockLayout::BlockLayout(std::vector<LengthRun> runs) {
  for (auto& r : runs) {
    if (r.count.is_zero()) continue;
    if (r.length.is_zero()) {
      throw Error("empty-component", "components must have nonzero length",
                  {{"component", count_.str()}});
    }
    first_component_.push_back(count_);
    first_offset_.push_back(total_);
    count_ = count_ + r.count;
    total_ = total_ + r.length * r.count;
    runs_.push_back(std::move(r));
  }
}

namespace {

// Index of the last run whose starting key is <= key.
std::size_t run_for(const std::vector<Ordinal>& starts, const Ordinal& key) {
  auto it = std::upper_bound(starts.begin(), starts.end(), key);
  return static_cast<std::size_t>(it - starts.begin()) - 1;
}

}  // namespace

Ordinal BlockLayout::component_length(const Ordinal& i) const {
  if (i >= count_) {
    throw Error("out-of-domain", "component " + i.str() + " of " + count_.str());
  }
  return runs_[run_for(first_component_, i)].length;
}

Ordinal BlockLayout::offset(const Ordinal& i) const {
  if (i == count_) return total_;
  if (i > count_) {
    throw Error("out-of-domain", "offset " + i.str() + " beyond " + count_.str());
  }
  const auto k = run_for(first_component_, i);
  return first_offset_[k] + runs_[k].length * interval_type(first_component_[k], i);
}

BlockLayout::Position BlockLayout::locate(const Ordinal& beta) const {
  if (beta >= total_) {
    throw Error("out-of-domain", beta.str() + " is not below " + total_.str(),
                {{"position", beta.str()}, {"length", total_.str()}});
  }
  const auto k = run_for(first_offset_, beta);
  auto dm = ord_divmod(interval_type(first_offset_[k], beta), runs_[k].length);
  return {first_component_[k] + dm.quotient, std::move(dm.remainder)};
}

std::vector<OrdinalProgression> BlockLayout::offsets() const {
  std::vector<OrdinalProgression> out;
  out.reserve(runs_.size() + 1);
  for (std::size_t k = 0; k < runs_.size(); ++k) {
    out.push_back({first_offset_[k], runs_[k].length, runs_[k].count});
  }
  if (count_.is_successor()) out.push_back(OrdinalProgression::single(total_));
  return out;
}

BlockLayout BlockLayout::take(std::uint64_t n) const {
  if (Ordinal(n) > count_) {
    throw Error("out-of-domain", "cannot take " + std::to_string(n) + " of " + count_.str() +
                                     " components");
  }
  std::vector<LengthRun> out;
  for (const auto& r : runs_) {
    if (n == 0) break;
    const std::uint64_t k = r.count.is_finite() ? std::min(n, r.count.finite_value()) : n;
    out.push_back({Ordinal(k), r.length});
    n -= k;
  }
  return BlockLayout(std::move(out));
}

BlockLayout BlockLayout::from_lengths(const std::vector<Ordinal>& lengths) {
  std::vector<LengthRun> runs;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const auto& len = lengths[i];
    if (len.is_zero()) {
      throw Error("empty-component", "component " + std::to_string(i) + " has length 0",
                  {{"component", i}});
    }
    if (!runs.empty() && runs.back().length == len) {
      runs.back().count = runs.back().count + Ordinal(1);
    } else {
      runs.push_back({Ordinal(1), len});
    }
  }
  return BlockLayout(std::move(runs));
}

}  // namespace forcing
