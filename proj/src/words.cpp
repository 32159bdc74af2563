#include "hbo/words.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "hbo/error.hpp"

namespace hbo {

Word parse_word(int n, std::string_view text) {
  if (n < 1) throw InvalidArgument("rank must be positive");
  Word word{n, {}};
  std::string cleaned;
  for (char c : text) {
    if (c != ' ' && c != '\t') cleaned.push_back(c);
  }
  if (cleaned.find(',') != std::string::npos) {
    std::stringstream ss(cleaned);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        if (v < 0 || v > n) throw std::out_of_range(item);
        word.letters.push_back(static_cast<int>(mod_n(v, n)));
      } catch (const std::exception&) {
        throw InvalidArgument("word letter '" + item + "' is not in 0.." + std::to_string(n));
      }
    }
    return word;
  }
  if (n > 10 && !cleaned.empty()) {
    throw InvalidArgument("words of rank above 10 must separate letters with commas");
  }
  for (char c : cleaned) {
    if (c < '0' || c > '9') throw InvalidArgument(std::string("word letter '") + c + "' is not a digit");
    // the letter n is accepted as another name for 0
    if (c - '0' > n) throw InvalidArgument(std::string("word letter '") + c + "' exceeds the rank");
    word.letters.push_back(static_cast<int>(mod_n(c - '0', n)));
  }
  return word;
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    if (word.n > 10 && i) out += ',';
    out += std::to_string(word.letters[i]);
  }
  return out;
}

AffinePermutation apply_word(const Word& word) {
  AffinePermutation w = AffinePermutation::identity(word.n);
  for (int letter : word.letters) w = w.times_simple(letter);
  return w;
}

bool is_reduced(const Word& word) {
  // Reduced iff every letter is an ascent of the prefix before it.
  AffinePermutation w = AffinePermutation::identity(word.n);
  if (word.n < 2) return word.letters.empty();
  for (int letter : word.letters) {
    if (w.has_right_descent(letter)) return false;
    w = w.times_simple(letter);
  }
  return true;
}

std::vector<Word> reduced_words(const AffinePermutation& w) {
  const int n = w.rank();
  std::vector<Word> out;
  std::vector<int> suffix;  // letters collected from the right
  std::function<void(const AffinePermutation&)> descend = [&](const AffinePermutation& v) {
    if (v.is_identity()) {
      out.push_back(Word{n, std::vector<int>(suffix.rbegin(), suffix.rend())});
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (!v.has_right_descent(i)) continue;
      suffix.push_back(i);
      descend(v.times_simple(i));
      suffix.pop_back();
    }
  };
  descend(w);
  std::sort(out.begin(), out.end());
  return out;
}

bool letters_commute(int n, int a, int b) {
  if (a == b) return false;
  return mod_n(b - a - 1, n) != 0 && mod_n(a - b - 1, n) != 0;
}

namespace {

int find_word(const std::vector<Word>& words, const Word& word) {
  auto it = std::lower_bound(words.begin(), words.end(), word);
  if (it == words.end() || *it != word) return -1;
  return static_cast<int>(it - words.begin());
}

int require_word(const std::vector<Word>& words, const Word& word, const char* move) {
  int idx = find_word(words, word);
  if (idx < 0) {
    throw InvariantViolation(std::string(move) + " produced " + format_word(word) +
                             ", which is not a reduced word of the same element");
  }
  return idx;
}

// Words reachable by one commutation.
template <typename F>
void for_each_commutation(const Word& word, F&& f) {
  for (std::size_t p = 0; p + 1 < word.letters.size(); ++p) {
    if (!letters_commute(word.n, word.letters[p], word.letters[p + 1])) continue;
    Word next = word;
    std::swap(next.letters[p], next.letters[p + 1]);
    f(next);
  }
}

}  // namespace

std::vector<std::size_t> directed_braid_sites(const Word& word) {
  std::vector<std::size_t> sites;
  if (word.n < 3) return sites;
  for (std::size_t p = 0; p + 2 < word.letters.size(); ++p) {
    int a = word.letters[p], b = word.letters[p + 1];
    if (word.letters[p + 2] == a && b == static_cast<int>(mod_n(a + 1, word.n))) sites.push_back(p);
  }
  return sites;
}

Word apply_braid(const Word& word, std::size_t p) {
  if (p + 2 >= word.letters.size() || word.letters[p] != word.letters[p + 2]) {
    throw InvalidArgument("no braid pattern at position " + std::to_string(p));
  }
  Word next = word;
  std::swap(next.letters[p], next.letters[p + 1]);
  next.letters[p + 2] = next.letters[p];
  return next;
}

WordClasses commutation_classes(const AffinePermutation& w) {
  WordClasses out;
  out.words = reduced_words(w);
  out.class_of.assign(out.words.size(), -1);
  for (std::size_t start = 0; start < out.words.size(); ++start) {
    if (out.class_of[start] >= 0) continue;
    int id = static_cast<int>(out.classes.size());
    out.classes.emplace_back();
    std::deque<int> queue{static_cast<int>(start)};
    out.class_of[start] = id;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      out.classes.back().push_back(u);
      for_each_commutation(out.words[static_cast<std::size_t>(u)], [&](const Word& next) {
        int v = require_word(out.words, next, "commutation");
        if (out.class_of[static_cast<std::size_t>(v)] < 0) {
          out.class_of[static_cast<std::size_t>(v)] = id;
          queue.push_back(v);
        }
      });
    }
    std::sort(out.classes.back().begin(), out.classes.back().end());
  }
  // Words are sorted and classes were opened in word order, so classes are
  // already ordered by their least word.
  return out;
}

ReducedWordGraph reduced_word_graph(const AffinePermutation& w) {
  ReducedWordGraph g;
  g.words = reduced_words(w);
  std::set<std::pair<int, int>> edges;
  auto add = [&](int a, int b) { edges.emplace(std::min(a, b), std::max(a, b)); };
  for (std::size_t i = 0; i < g.words.size(); ++i) {
    const Word& word = g.words[i];
    for_each_commutation(word, [&](const Word& next) {
      add(static_cast<int>(i), require_word(g.words, next, "commutation"));
    });
    for (std::size_t p : directed_braid_sites(word)) {
      add(static_cast<int>(i), require_word(g.words, apply_braid(word, p), "braid"));
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

BraidGraph braid_graph(const AffinePermutation& w) {
  BraidGraph out{commutation_classes(w), {}};
  const auto& words = out.classes.words;
  for (const auto& members : out.classes.classes) {
    out.graph.add_node(format_word(words[static_cast<std::size_t>(members.front())]));
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t p : directed_braid_sites(words[i])) {
      int j = require_word(words, apply_braid(words[i], p), "braid");
      int a = out.classes.class_of[i], b = out.classes.class_of[static_cast<std::size_t>(j)];
      if (a == b) {
        throw InvariantViolation("braid move inside a single commutation class at " + format_word(words[i]));
      }
      out.graph.add_arc(a, b);
    }
  }
  return out;
}

}  // namespace hbo
