#include "forcing/finite_poset.hpp"

#include <bit>
#include <memory>
#include <sstream>

#include "forcing/error.hpp"

namespace forcing {

namespace {

constexpr std::size_t kOracleLimit = 20;

Mask bit(std::size_t i) { return Mask{1} << i; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool is_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '<' || c == '=' || c == '#') return false;
  }
  return true;
}

}  // namespace

FinitePoset FinitePoset::from_relation(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs) {
  const std::size_t n = labels.size();
  if (n > kMaxElements) {
    throw Error("poset-too-large", std::to_string(n) + " elements; at most 64 supported");
  }
  FinitePoset p;
  p.labels_ = std::move(labels);
  p.up_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) p.up_[i] = bit(i);
  for (const auto& [q, r] : leq_pairs) {
    if (q >= n || r >= n) throw Error("bad-poset-syntax", "relation refers to unknown element");
    p.up_[q] |= bit(r);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (p.up_[i] & bit(k)) p.up_[i] |= p.up_[k];
    }
  }
  p.down_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.leq(i, j)) p.down_[j] |= bit(i);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p.leq(i, j) && p.leq(j, i)) {
        throw Error("not-a-poset", p.labels_[i] + " and " + p.labels_[j] + " are equivalent",
                    {{"a", p.labels_[i]}, {"b", p.labels_[j]}});
      }
    }
  }
  return p;
}

FinitePoset FinitePoset::parse(std::string_view text) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto intern = [&](std::string_view name) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == name) return i;
    }
    labels.emplace_back(name);
    return labels.size() - 1;
  };

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto fail = [&]() -> Error {
      return Error("bad-poset-syntax", "line " + std::to_string(line_no) + ": '" +
                                            std::string(line) + "'",
                   {{"line", line_no}});
    };
    if (line.starts_with("elem ")) {
      const auto name = trim(line.substr(5));
      if (!is_label(name)) throw fail();
      intern(name);
      continue;
    }
    const auto op = line.find("<=");
    if (op == std::string_view::npos) throw fail();
    const auto lhs = trim(line.substr(0, op));
    const auto rhs = trim(line.substr(op + 2));
    if (!is_label(lhs) || !is_label(rhs)) throw fail();
    const auto q = intern(lhs);
    const auto r = intern(rhs);
    pairs.emplace_back(q, r);
  }
  return from_relation(std::move(labels), pairs);
}

std::string FinitePoset::str() const {
  std::ostringstream os;
  for (const auto& l : labels_) os << "elem " << l << '\n';
  // Covering pairs only; parsing takes the closure again.
  for (std::size_t q = 0; q < size(); ++q) {
    for (std::size_t r = 0; r < size(); ++r) {
      if (q == r || !leq(q, r)) continue;
      const Mask between = (up_[q] & down_[r]) & ~(bit(q) | bit(r));
      if (between == 0) os << labels_[q] << " <= " << labels_[r] << '\n';
    }
  }
  return os.str();
}

std::optional<std::size_t> FinitePoset::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

Mask FinitePoset::up_closure(Mask m) const {
  Mask out = 0;
  for (auto i : mask_elements(m)) out |= up_[i];
  return out;
}

bool FinitePoset::is_filter(Mask m) const {
  if (m == 0 || up_closure(m) != m) return false;
  const auto elems = mask_elements(m);
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = a + 1; b < elems.size(); ++b) {
      if ((down_[elems[a]] & down_[elems[b]] & m) == 0) return false;
    }
  }
  return true;
}

bool FinitePoset::is_dense(Mask m) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if ((down_[i] & m) == 0) return false;
  }
  return true;
}

PosetPresentation<std::size_t> FinitePoset::presentation(std::string name) const {
  PosetPresentation<std::size_t> p;
  p.name = std::move(name);
  const std::size_t n = size();
  auto self = std::make_shared<const FinitePoset>(*this);
  p.carrier = [n](const std::size_t& i) { return i < n; };
  p.leq = [self](const std::size_t& q, const std::size_t& r) { return self->leq(q, r); };
  p.enumerate = [n](std::size_t i) -> std::optional<std::size_t> {
    if (i < n) return i;
    return std::nullopt;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (down_[i] == all()) p.root = i;
  }
  return p;
}

std::optional<Mask> brute_force_filter(const FinitePoset& p, std::span<const Mask> dense) {
  if (p.size() > kOracleLimit) {
    throw Error("oracle-limit", std::to_string(p.size()) + " elements exceeds the limit of 20",
                {{"size", p.size()}});
  }
  const Mask end = bit(p.size());
  for (Mask m = 1; m < end; ++m) {
    bool meets_all = true;
    for (Mask d : dense) {
      if ((m & d) == 0) {
        meets_all = false;
        break;
      }
    }
    if (meets_all && p.is_filter(m)) return m;
  }
  return std::nullopt;
}

std::vector<Mask> all_filters(const FinitePoset& p) {
  if (p.size() > kOracleLimit) {
    throw Error("oracle-limit", std::to_string(p.size()) + " elements exceeds the limit of 20",
                {{"size", p.size()}});
  }
  std::vector<Mask> out;
  const Mask end = bit(p.size());
  for (Mask m = 1; m < end; ++m) {
    if (p.is_filter(m)) out.push_back(m);
  }
  return out;
}

DenseSet<std::size_t> finite_dense_set(const FinitePoset& p, Mask members, std::string name) {
  auto self = std::make_shared<const FinitePoset>(p);
  return {std::move(name),
          [members](const std::size_t& i) { return ((members >> i) & 1U) != 0; },
          [self, members](const std::size_t& i) -> std::size_t {
            const Mask below = self->down(i) & members;
            if (below == 0) return i;
            return static_cast<std::size_t>(std::countr_zero(below));
          }};
}

std::vector<std::size_t> mask_elements(Mask m) {
  std::vector<std::size_t> out;
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Mask elements_mask(std::span<const std::size_t> elems) {
  Mask m = 0;
  for (auto e : elems) m |= bit(e);
  return m;
}

}  // namespace forcing
