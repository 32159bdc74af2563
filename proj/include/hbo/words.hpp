#pragma once

// Reduced words, commutation classes, the reduced-word graph and the
// directed braid graph on commutation classes.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hbo/digraph.hpp"
#include "hbo/perm.hpp"

namespace hbo {

struct Word {
  int n = 1;
  std::vector<int> letters;  // residues 0..n-1

  std::size_t size() const { return letters.size(); }
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

// Letters are read modulo n, so the display convention writing s_0 as "n"
// ("4121432" for rank 4) is accepted. Compact digit strings are allowed for
// n <= 10; otherwise letters are comma separated.
Word parse_word(int n, std::string_view text);
std::string format_word(const Word& word);

AffinePermutation apply_word(const Word& word);
bool is_reduced(const Word& word);

// All reduced words of w, sorted lexicographically.
std::vector<Word> reduced_words(const AffinePermutation& w);

// True when s_a s_b = s_b s_a is a defining commutation (b != a, a±1 mod n).
bool letters_commute(int n, int a, int b);

struct WordClasses {
  std::vector<Word> words;                // sorted
  std::vector<std::vector<int>> classes;  // indices into words; each sorted, classes ordered by least word
  std::vector<int> class_of;              // word index -> class index
};

WordClasses commutation_classes(const AffinePermutation& w);

// Undirected graph R(w): reduced words joined by one commutation or braid.
struct ReducedWordGraph {
  std::vector<Word> words;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted
};
ReducedWordGraph reduced_word_graph(const AffinePermutation& w);

// G(w): nodes are commutation classes (labelled by their least word); an arc
// A -> B exists when a word of A turns into a word of B by replacing
// i (i+1) i with (i+1) i (i+1).
struct BraidGraph {
  WordClasses classes;
  Digraph graph;
};
BraidGraph braid_graph(const AffinePermutation& w);

// Positions p at which word has the pattern i (i+1) i, i.e. where a directed
// braid move applies. Empty for n < 3.
std::vector<std::size_t> directed_braid_sites(const Word& word);
Word apply_braid(const Word& word, std::size_t position);

}  // namespace hbo
