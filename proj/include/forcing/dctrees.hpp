#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "forcing/countable_set.hpp"
#include "forcing/poset.hpp"

namespace forcing {

// F: finite sequences -> nonempty subsets of X, presented by a membership
// predicate and a representative. In injective mode member(t, x) implies
// x is not in rge(t), so t ⌢ x stays injective.
struct ChoiceFunctional {
  std::string name;
  std::function<bool(std::span<const Code> t, Code x)> member;
  std::function<Code(std::span<const Code> t)> select;
  bool injective_mode = false;
};

// F(t) = X minus rge(t); select takes the first omitted code.
ChoiceFunctional f_seq(const CountableSet& x);
// Unused codes with an even enumeration index.
ChoiceFunctional evens_only(const CountableSet& x);
// Codes whose index exceeds the index of the last value by at least one;
// select jumps by two.
ChoiceFunctional skip_functional(const CountableSet& x);

// Repetition-allowing fixtures.
// F(t) = {enum(0)}.
ChoiceFunctional constant_functional(const CountableSet& x);
// F(t) = {enum(0), enum(1), enum(2)}; select cycles through them.
ChoiceFunctional window_functional(const CountableSet& x);
// F(t) = {enum(lh(t) / 2)}, so witnesses read 0, 0, 1, 1, 2, 2, ...
ChoiceFunctional stairs_functional(const CountableSet& x);

// "seq", "evens-only", "skip", "constant", "window", "stairs".
// Throws Error("unknown-functional").
ChoiceFunctional functional_by_name(const CountableSet& x, const std::string& name);
std::vector<std::string> functional_names();

// member(g|i, g(i)) for every i < lh(g).
bool check_dc_witness(const ChoiceFunctional& f, std::span<const Code> g);

// T(F): conditions of Coll(w, X) all of whose values obey F, ordered by
// end-extension. Throws Error("not-injective-mode").
PosetPresentation<CodeSeq> t_of_f(const CountableSet& x, const ChoiceFunctional& f);

// F_t: forced to t(i) on the proper restrictions t|i, F elsewhere.
// Throws Error("not-in-tree") unless t is a condition of T(F).
ChoiceFunctional modified_functional(const CountableSet& x, const ChoiceFunctional& f,
                                     const CodeSeq& t);

// L_i inside T(F); the extender appends select(p) until the length is i.
// Throws Error("bad-selector") when select returns a non-member.
DenseSet<CodeSeq> tree_level(const ChoiceFunctional& f, std::size_t i);

// Engine run on T(F) from the root meeting L_0, ..., L_n.
GenericRun<CodeSeq> dc_run(const CountableSet& x, const ChoiceFunctional& f, std::size_t n);
// The length-n union of dc_run.
CodeSeq dc_witness(const CountableSet& x, const ChoiceFunctional& f, std::size_t n);

struct MarkedElement {
  Code base;
  std::uint64_t marker;

  friend bool operator==(const MarkedElement&, const MarkedElement&) = default;
};

// X x w, coded as cantor_pair(index in X, marker).
CountableSet marked_product(const CountableSet& x);
Code encode_marked(const CountableSet& x, const MarkedElement& e);
MarkedElement decode_marked(const CountableSet& x, Code c);

// G over X x w in injective mode. On sequences whose markers count earlier
// occurrences of the base, G(u) = {(v, d) : v in F(t), d = occurrences of v
// in t} where t is the base sequence; elsewhere G is the fresh-pair
// complement.
ChoiceFunctional marker_reduction(const CountableSet& x, const ChoiceFunctional& f);

std::vector<MarkedElement> decode_witness(const CountableSet& x, std::span<const Code> g);
CodeSeq unmark(std::span<const MarkedElement> g);

// {"functional": name, "length": n, "values": [codes], "markers": [naturals]}
nlohmann::json witness_json(const std::string& functional, std::span<const Code> values);
nlohmann::json witness_json(const std::string& functional, std::span<const MarkedElement> g);

}  // namespace forcing
