#include "forcing/ordinal.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <utility>

#include "forcing/error.hpp"
#include "forcing/pairing.hpp"

namespace forcing {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error("ordinal-overflow", "coefficient or exponent exceeds 64 bits");
  }
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error("ordinal-overflow", "coefficient exceeds 64 bits");
  }
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void syntax_error(std::string_view text, const std::string& why) {
  throw Error("bad-ordinal-syntax", "'" + std::string(text) + "': " + why,
              {{"text", std::string(text)}});
}

std::uint64_t parse_natural(std::string_view digits, std::string_view whole) {
  std::uint64_t v = 0;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, v);
  if (digits.empty() || ec != std::errc() || ptr != end) {
    syntax_error(whole, "expected a natural number, got '" + std::string(digits) + "'");
  }
  return v;
}

CnfTerm parse_term(std::string_view term, std::string_view whole) {
  term = trim(term);
  if (term.empty()) syntax_error(whole, "empty term");
  if (term.front() != 'w') return {0, parse_natural(term, whole)};

  term.remove_prefix(1);
  std::uint64_t exponent = 1;
  std::uint64_t coefficient = 1;
  if (!term.empty() && term.front() == '^') {
    term.remove_prefix(1);
    const auto star = term.find('*');
    exponent = parse_natural(trim(term.substr(0, star)), whole);
    term = star == std::string_view::npos ? std::string_view{} : term.substr(star);
  }
  term = trim(term);
  if (!term.empty()) {
    if (term.front() != '*') syntax_error(whole, "expected '*' after w");
    coefficient = parse_natural(trim(term.substr(1)), whole);
  }
  return {exponent, coefficient};
}

}  // namespace

Ordinal::Ordinal(std::uint64_t n) {
  if (n != 0) terms_.push_back({0, n});
}

Ordinal Ordinal::from_terms(std::vector<CnfTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) {
      throw Error("not-cnf", "zero coefficient in term " + std::to_string(i),
                  {{"term", i}});
    }
    if (i > 0 && terms[i].exponent >= terms[i - 1].exponent) {
      throw Error("not-cnf", "exponents must strictly decrease at term " + std::to_string(i),
                  {{"term", i}});
    }
  }
  Ordinal o;
  o.terms_ = std::move(terms);
  return o;
}

Ordinal Ordinal::omega_power(std::uint64_t exponent, std::uint64_t coefficient) {
  if (coefficient == 0) return Ordinal();
  return from_terms({{exponent, coefficient}});
}

Ordinal Ordinal::parse(std::string_view text) {
  const auto body = trim(text);
  if (body.empty()) syntax_error(text, "empty ordinal");
  if (body == "0") return Ordinal();

  std::vector<CnfTerm> terms;
  std::string_view rest = body;
  while (true) {
    const auto plus = rest.find('+');
    terms.push_back(parse_term(rest.substr(0, plus), text));
    if (plus == std::string_view::npos) break;
    rest = rest.substr(plus + 1);
  }
  return from_terms(std::move(terms));
}

std::string Ordinal::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) os << " + ";
    const auto& t = terms_[i];
    if (t.exponent == 0) {
      os << t.coefficient;
    } else if (t.exponent == 1) {
      os << "w*" << t.coefficient;
    } else {
      os << "w^" << t.exponent << '*' << t.coefficient;
    }
  }
  return os.str();
}

bool Ordinal::is_finite() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent == 0);
}

bool Ordinal::is_successor() const noexcept {
  return !terms_.empty() && terms_.back().exponent == 0;
}

std::uint64_t Ordinal::finite_value() const {
  if (!is_finite()) throw Error("not-finite", str() + " is infinite");
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

std::uint64_t Ordinal::leading_exponent() const {
  if (terms_.empty()) throw Error("zero-ordinal", "0 has no leading term");
  return terms_.front().exponent;
}

Ordinal Ordinal::predecessor() const {
  if (!is_successor()) throw Error("not-successor", str() + " has no predecessor");
  Ordinal o = *this;
  if (--o.terms_.back().coefficient == 0) o.terms_.pop_back();
  return o;
}

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const auto& bt = b.terms();
  const std::uint64_t lead = bt.front().exponent;

  std::vector<CnfTerm> out;
  out.reserve(a.terms().size() + bt.size());
  std::uint64_t carry = 0;
  for (const auto& t : a.terms()) {
    if (t.exponent > lead) {
      out.push_back(t);
    } else {
      if (t.exponent == lead) carry = t.coefficient;
      break;
    }
  }
  out.push_back({lead, checked_add(carry, bt.front().coefficient)});
  out.insert(out.end(), bt.begin() + 1, bt.end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal ord_mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const auto& at = a.terms();
  const std::uint64_t lead = at.front().exponent;

  std::vector<CnfTerm> out;
  for (const auto& t : b.terms()) {
    if (t.exponent > 0) {
      // a * w^f = w^(lead + f): everything below the leading term is absorbed.
      out.push_back({checked_add(lead, t.exponent), t.coefficient});
    } else {
      out.push_back({lead, checked_mul(at.front().coefficient, t.coefficient)});
      out.insert(out.end(), at.begin() + 1, at.end());
    }
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal interval_type(const Ordinal& a, const Ordinal& b) {
  if (a > b) {
    throw Error("not-ordered", a.str() + " exceeds " + b.str(),
                {{"from", a.str()}, {"to", b.str()}});
  }
  const auto& at = a.terms();
  const auto& bt = b.terms();
  std::size_t k = 0;
  while (k < at.size() && at[k] == bt[k]) ++k;

  std::vector<CnfTerm> out;
  if (k < at.size() && at[k].exponent == bt[k].exponent) {
    // Same exponent, larger coefficient in b (a <= b).
    out.push_back({bt[k].exponent, bt[k].coefficient - at[k].coefficient});
    out.insert(out.end(), bt.begin() + static_cast<std::ptrdiff_t>(k) + 1, bt.end());
  } else {
    out.assign(bt.begin() + static_cast<std::ptrdiff_t>(k), bt.end());
  }
  return Ordinal::from_terms(std::move(out));
}

DivMod ord_divmod(const Ordinal& n, const Ordinal& d) {
  if (d.is_zero()) throw Error("division-by-zero", "left division by 0");
  const std::uint64_t e = d.leading_exponent();
  const std::uint64_t c = d.terms().front().coefficient;

  std::vector<CnfTerm> quotient;
  std::vector<CnfTerm> low;
  for (const auto& t : n.terms()) {
    if (t.exponent > e) {
      quotient.push_back({t.exponent - e, t.coefficient});
    } else {
      low.push_back(t);
    }
  }
  const Ordinal low_part = Ordinal::from_terms(low);

  std::uint64_t k = 0;
  if (!low.empty() && low.front().exponent == e) {
    k = low.front().coefficient / c;
    if (k > 0 && ord_mul(d, Ordinal(k)) > low_part) --k;
  }
  if (k > 0) quotient.push_back({0, k});
  Ordinal remainder = interval_type(ord_mul(d, Ordinal(k)), low_part);
  return {Ordinal::from_terms(std::move(quotient)), std::move(remainder)};
}

std::optional<Ordinal> OrdinalProgression::max() const {
  if (count.is_zero()) return std::nullopt;
  if (step.is_zero()) return start;
  if (count.is_successor()) return start + step * count.predecessor();
  return std::nullopt;
}

Ordinal OrdinalProgression::limit() const { return start + step * count; }

Ordinal OrdinalProgression::at(const Ordinal& j) const {
  if (j >= count) {
    throw Error("out-of-domain", "index " + j.str() + " not below " + count.str());
  }
  return start + step * j;
}

Ordinal ssup(std::span<const Ordinal> ys) {
  if (ys.empty()) throw Error("undefined-ssup-of-empty", "ssup of the empty set");
  return *std::max_element(ys.begin(), ys.end()) + Ordinal(1);
}

Ordinal ssup(std::span<const OrdinalProgression> ys) {
  std::optional<Ordinal> best;
  for (const auto& p : ys) {
    if (p.empty()) continue;
    const auto m = p.max();
    Ordinal bound = m ? *m + Ordinal(1) : p.limit();
    if (!best || bound > *best) best = std::move(bound);
  }
  if (!best) throw Error("undefined-ssup-of-empty", "ssup of the empty set");
  return *best;
}

Ordinal sup(std::span<const OrdinalProgression> ys) {
  Ordinal best;
  for (const auto& p : ys) {
    if (p.empty()) continue;
    const auto m = p.max();
    Ordinal bound = m ? *m : p.limit();
    if (bound > best) best = std::move(bound);
  }
  return best;
}

namespace {

std::uint64_t pack_coordinates(const std::vector<std::uint64_t>& coords) {
  // coords[i] is the coefficient of w^i; pack from the highest down.
  std::uint64_t code = coords.front();
  for (std::size_t i = 1; i < coords.size(); ++i) code = cantor_pair(coords[i], code);
  return code;
}

std::vector<std::uint64_t> unpack_coordinates(std::uint64_t code, std::uint64_t exponent) {
  std::vector<std::uint64_t> coords(exponent, 0);
  for (std::uint64_t i = exponent - 1; i > 0; --i) {
    const auto [hi, rest] = cantor_unpair(code);
    coords[i] = hi;
    code = rest;
  }
  coords[0] = code;
  return coords;
}

}  // namespace

OmegaBijection::OmegaBijection(Ordinal bound) : bound_(std::move(bound)) {
  if (bound_ < Ordinal::omega()) {
    throw Error("finite-ordinal-no-omega-bijection",
                bound_.str() + " is finite; no bijection with N",
                {{"alpha", bound_.str()}});
  }
  Ordinal offset;
  for (const auto& t : bound_.terms()) {
    if (t.exponent == 0) {
      tail_ = t.coefficient;
      break;
    }
    runs_.push_back({t.exponent, t.coefficient, offset, blocks_});
    blocks_ = checked_add(blocks_, t.coefficient);
    offset = offset + Ordinal::omega_power(t.exponent, t.coefficient);
  }
  tail_start_ = offset;
}

std::uint64_t OmegaBijection::forward(const Ordinal& o) const {
  if (o >= bound_) {
    throw Error("out-of-domain", o.str() + " is not below " + bound_.str(),
                {{"ordinal", o.str()}, {"alpha", bound_.str()}});
  }
  if (o >= tail_start_) return interval_type(tail_start_, o).finite_value();

  auto run = std::find_if(runs_.rbegin(), runs_.rend(),
                          [&](const Run& r) { return r.start <= o; });
  const auto block = ord_divmod(interval_type(run->start, o),
                                Ordinal::omega_power(run->exponent));
  std::vector<std::uint64_t> coords(run->exponent, 0);
  for (const auto& t : block.remainder.terms()) coords[t.exponent] = t.coefficient;

  const std::uint64_t index = run->first_block + block.quotient.finite_value();
  return checked_add(tail_, checked_add(checked_mul(pack_coordinates(coords), blocks_), index));
}

Ordinal OmegaBijection::backward(std::uint64_t n) const {
  if (n < tail_) return tail_start_ + Ordinal(n);
  const std::uint64_t rest = n - tail_;
  const std::uint64_t index = rest % blocks_;
  auto run = std::find_if(runs_.rbegin(), runs_.rend(),
                          [&](const Run& r) { return r.first_block <= index; });

  const auto coords = unpack_coordinates(rest / blocks_, run->exponent);
  std::vector<CnfTerm> terms;
  for (std::uint64_t i = run->exponent; i-- > 0;) {
    if (coords[i] != 0) terms.push_back({i, coords[i]});
  }
  return run->start +
         Ordinal::omega_power(run->exponent, index - run->first_block) +
         Ordinal::from_terms(std::move(terms));
}

OmegaBijection omega_bijection(const Ordinal& bound) { return OmegaBijection(bound); }

}  // namespace forcing
