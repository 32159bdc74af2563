#pragma once

// JSON and DOT renderings of the library's objects.

#include <string>
#include <vector>

#include "json.hpp"

#include "hbo/admissible.hpp"
#include "hbo/consistent.hpp"
#include "hbo/perm.hpp"
#include "hbo/poset.hpp"
#include "hbo/words.hpp"

namespace hbo {

using json = nlohmann::json;

json to_json(const AffinePermutation& w);
// Throws InvalidArgument naming the missing field or bad window.
AffinePermutation permutation_from_json(const json& j);

json to_json(const KClass& x);
json to_json(const std::vector<KClass>& xs);
KClass kclass_from_json(int n, const json& j);

// {"elements": [...], "covers": [[a,b],...]}
json to_json(const FinitePoset& p);

// {"classes": [[word,...],...], "arcs": [[i,j],...]}
json to_json(const BraidGraph& g);

json orders_json(const AdmissibleSpace& space, const std::vector<Order>& orders);

// Elements carry the class id, a representative order and its reversal set.
json bruhat_json(const AdmissibleSpace& space, const BruhatOrder& b);

json consistent_json(const ConsistentPoset& c);

// {"elements": [...], "arcs": [{"from","to","tag"},...]}
json to_json(const GRGraph& g);

std::string dot_reduced_word_graph(const ReducedWordGraph& g);
std::string dot_digraph(const Digraph& g, const std::string& name);
std::string dot_hasse(const FinitePoset& p, const std::string& name);
// quasi = black, reversal = red, complement = blue, congruence = dashed.
std::string dot_gr(const GRGraph& g);

}  // namespace hbo
