// hbo: construct, verify and reproduce higher Bruhat orders of [id, w].

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"

#include "hbo/admissible.hpp"
#include "hbo/consistent.hpp"
#include "hbo/error.hpp"
#include "hbo/export.hpp"
#include "hbo/verify/checks.hpp"
#include "hbo/verify/reproduce.hpp"
#include "hbo/verify/sweep.hpp"

using namespace hbo;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kSkipped = 3;

struct Common {
  int n = 0;
  std::string window;
  std::string word;
  int k = 2;
  std::string format = "text";
  std::string out;
};

AffinePermutation target_permutation(const Common& c) {
  if (!c.window.empty() && !c.word.empty()) throw InvalidArgument("give either --window or --word, not both");
  if (!c.word.empty()) {
    if (c.n < 1) throw InvalidArgument("--word needs --n");
    Word word = parse_word(c.n, c.word);
    if (!is_reduced(word)) throw InvalidArgument("word " + c.word + " is not reduced");
    return apply_word(word);
  }
  if (c.window.empty()) throw InvalidArgument("--window (or --n with --word) is required");
  AffinePermutation w = parse_window(c.window);
  if (c.n && c.n != w.rank()) {
    throw InvalidArgument("--n " + std::to_string(c.n) + " does not match the window length " + std::to_string(w.rank()));
  }
  return w;
}

std::vector<KClass> parse_class_list(int n, const std::string& text) {
  std::vector<KClass> out;
  if (text.find('[') != std::string::npos) {
    static const std::regex inner(R"(\[([^\[\]]*)\])");
    for (auto it = std::sregex_iterator(text.begin(), text.end(), inner); it != std::sregex_iterator(); ++it) {
      std::string body = (*it)[1];
      if (!body.empty()) out.push_back(parse_kclass(n, body));
    }
    return out;
  }
  std::string token;
  std::istringstream in(std::regex_replace(text, std::regex("[,;]"), " "));
  while (in >> token) {
    if (token != "-") out.push_back(parse_kclass(n, token));
  }
  return out;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(c.out);
  if (!file) throw InvalidArgument("cannot write " + c.out);
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string poset_text(const FinitePoset& p) {
  std::ostringstream out;
  out << "elements (" << p.size() << "):\n";
  for (std::size_t i = 0; i < p.size(); ++i) out << "  " << i << " " << p.labels()[i] << "\n";
  out << "covers (" << p.covers().size() << "):\n";
  for (auto [a, b] : p.covers()) out << "  " << p.labels()[static_cast<std::size_t>(a)] << " < " << p.labels()[static_cast<std::size_t>(b)] << "\n";
  return out.str();
}

void require_format(const Common& c, bool dot_ok) {
  if (c.format != "text" && c.format != "json" && !(dot_ok && c.format == "dot")) {
    throw InvalidArgument("--format " + c.format + " is not available here");
  }
}

int cmd_show(const std::string& object, const Common& c, const std::string& rset) {
  const AffinePermutation w = target_permutation(c);
  const int n = w.rank();
  if (object == "inversions") {
    require_format(c, false);
    auto xs = InversionTable(w).inv_k(c.k);
    if (c.format == "json") {
      emit(c, dump(to_json(xs)));
    } else {
      std::string text;
      for (const auto& x : xs) text += format_kclass(x) + "\n";
      emit(c, text);
    }
  } else if (object == "words") {
    require_format(c, true);
    ReducedWordGraph g = reduced_word_graph(w);
    if (c.format == "dot") {
      emit(c, dot_reduced_word_graph(g));
    } else if (c.format == "json") {
      json words = json::array();
      for (const auto& word : g.words) words.push_back(format_word(word));
      json edges = json::array();
      for (auto [a, b] : g.edges) edges.push_back({a, b});
      emit(c, dump({{"words", words}, {"edges", edges}}));
    } else {
      std::string text;
      for (const auto& word : g.words) text += format_word(word) + "\n";
      emit(c, text);
    }
  } else if (object == "permanent-poset") {
    require_format(c, true);
    PermanentPoset p = permanent_poset(w, c.k);
    if (c.format == "dot") emit(c, dot_hasse(p.poset, "P"));
    else if (c.format == "json") emit(c, dump(to_json(p.poset)));
    else emit(c, poset_text(p.poset));
  } else if (object == "braid-graph") {
    require_format(c, true);
    BraidGraph g = braid_graph(w);
    if (c.format == "dot") {
      emit(c, dot_digraph(g.graph, "G"));
    } else if (c.format == "json") {
      emit(c, dump(to_json(g)));
    } else {
      std::ostringstream out;
      for (std::size_t i = 0; i < g.classes.classes.size(); ++i) {
        out << "class " << i << ":";
        for (int idx : g.classes.classes[i]) out << " " << format_word(g.classes.words[static_cast<std::size_t>(idx)]);
        out << "\n";
      }
      for (auto [a, b] : g.graph.arcs()) out << "arc " << a << " -> " << b << "\n";
      DigraphReport d = digraph_checks(g.graph);
      out << "acyclic " << (d.acyclic ? "yes" : "no") << ", sources " << d.sources.size() << ", sinks " << d.sinks.size()
          << ", undirected diameter " << d.undirected_diameter << "\n";
      emit(c, out.str());
    }
  } else if (object == "bruhat") {
    require_format(c, true);
    AdmissibleSpace space(w, c.k);
    BruhatOrder b = build_bruhat(space);
    if (c.format == "dot") {
      emit(c, dot_hasse(b.poset, "B"));
    } else if (c.format == "json") {
      emit(c, dump(bruhat_json(space, b)));
    } else {
      std::ostringstream out;
      out << b.classes.orders.size() << " admissible orders, " << b.classes.classes.size() << " commutation classes\n";
      for (std::size_t i = 0; i < b.classes.classes.size(); ++i) {
        const Order& rep = b.classes.orders[static_cast<std::size_t>(b.classes.classes[i].front())];
        out << "class " << i << " (" << b.classes.classes[i].size() << " orders) reversal "
            << format_kclass_list(to_classes(space.upper(), b.class_reversal[i])) << "\n  "
            << format_kclass_list(space.to_classes(rep)) << "\n";
      }
      for (auto [a, x] : b.poset.covers()) out << "cover " << a << " < " << x << "\n";
      emit(c, out.str());
    }
  } else if (object == "consistent") {
    require_format(c, true);
    ConsistentPoset cp = consistent_poset(w, c.k);
    if (c.format == "dot") emit(c, dot_hasse(cp.poset, "C"));
    else if (c.format == "json") emit(c, dump(consistent_json(cp)));
    else emit(c, poset_text(cp.poset));
  } else if (object == "gr") {
    require_format(c, true);
    GRGraph g = build_gr(w, c.k, parse_class_list(n, rset));
    auto cycle = gr_cycle(g);
    if (c.format == "dot") {
      emit(c, dot_gr(g));
    } else if (c.format == "json") {
      json j = to_json(g);
      j["acyclic"] = !cycle.has_value();
      emit(c, dump(j));
    } else {
      std::ostringstream out;
      for (const auto& a : g.arcs) {
        out << tag_name(a.tag) << " " << format_kclass(g.elements[static_cast<std::size_t>(a.from)]) << " -> "
            << format_kclass(g.elements[static_cast<std::size_t>(a.to)]) << "\n";
      }
      out << "acyclic " << (cycle ? "no" : "yes") << "\n";
      emit(c, out.str());
    }
  } else {
    throw InvalidArgument("unknown object '" + object +
                          "'; use inversions, words, permanent-poset, braid-graph, bruhat, consistent or gr");
  }
  return kPass;
}

int cmd_enumerate(const std::string& what, const Common& c, int max_len) {
  if (what == "group") {
    if (c.n < 2) throw InvalidArgument("--n is required");
    require_format(c, false);
    auto perms = max_len >= 0 ? enumerate_up_to_length(c.n, max_len) : enumerate_finite(c.n);
    if (c.format == "json") {
      json j = json::array();
      for (const auto& w : perms) j.push_back(to_json(w));
      emit(c, dump(j));
    } else {
      std::string text;
      for (const auto& w : perms) text += format_window(w) + " " + std::to_string(length(w)) + "\n";
      emit(c, text);
    }
    return kPass;
  }
  const AffinePermutation w = target_permutation(c);
  require_format(c, false);
  if (what == "admissible") {
    AdmissibleSpace space(w, c.k);
    auto orders = space.enumerate();
    if (c.format == "json") {
      emit(c, dump(orders_json(space, orders)));
    } else {
      std::string text;
      for (const auto& o : orders) text += format_kclass_list(space.to_classes(o)) + "\n";
      emit(c, text);
    }
  } else if (what == "consistent") {
    LevelContext ctx(w, c.k);
    auto sets = enumerate_consistent(ctx);
    json j = json::array();
    std::string text;
    for (const auto& s : sets) {
      j.push_back(to_json(to_classes(ctx.level(), s)));
      text += format_kclass_list(to_classes(ctx.level(), s)) + "\n";
    }
    emit(c, c.format == "json" ? dump(j) : text);
  } else if (what == "words") {
    json j = json::array();
    std::string text;
    for (const auto& word : reduced_words(w)) {
      j.push_back(format_word(word));
      text += format_word(word) + "\n";
    }
    emit(c, c.format == "json" ? dump(j) : text);
  } else {
    throw InvalidArgument("unknown enumeration '" + what + "'; use group, words, admissible or consistent");
  }
  return kPass;
}

int cmd_verify(const verify::SweepSpec& spec, const Common& c) {
  require_format(c, false);
  verify::SweepReport report = verify::run_sweep(spec);
  std::string text;
  if (c.format == "json") {
    text = dump(report.to_json());
  } else {
    std::ostringstream out;
    for (const auto& r : report.records) {
      if (r.status == verify::Status::pass) continue;
      out << verify::status_name(r.status) << " " << r.check << " w=" << format_window(r.w) << " k=" << r.k;
      for (const auto& m : r.messages) out << "\n  " << m;
      out << "\n";
    }
    out << "suite " << spec.suite << ": " << report.pass << " pass, " << report.fail << " fail, " << report.skip
        << " skip (" << report.elapsed_ms << " ms)\n";
    text = out.str();
  }
  if (!spec.out.empty()) {
    std::ofstream file(spec.out);
    if (!file) throw InvalidArgument("cannot write " + spec.out);
    file << dump(report.to_json());
    if (c.format == "json") text.clear();
  }
  std::cout << text;
  if (report.fail) return kFail;
  if (report.skip && spec.strict) return kSkipped;
  return kPass;
}

int cmd_reproduce(const std::string& target, const Common& c) {
  require_format(c, false);
  std::vector<std::string> targets = target == "all" ? verify::reproduce_targets() : std::vector<std::string>{target};
  bool pass = true;
  json j = json::array();
  std::ostringstream out;
  for (const auto& t : targets) {
    verify::ReproduceResult r = verify::reproduce(t);
    pass = pass && r.pass;
    j.push_back(r.to_json());
    out << (r.pass ? "PASS " : "FAIL ") << r.target << "\n";
    for (const auto& s : r.summary) out << "  " << s << "\n";
    for (const auto& d : r.diffs) out << "  " << d << "\n";
  }
  emit(c, c.format == "json" ? dump(targets.size() == 1 ? j[0] : j) : out.str());
  return pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher Bruhat orders of intervals [id, w] in finite and affine symmetric groups"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool window) {
    sub->add_option("--n", common.n, "rank n");
    if (window) {
      sub->add_option("--window", common.window, "window, e.g. \"(1,7,2,0)\"");
      sub->add_option("--word", common.word, "reduced word (needs --n), e.g. 0121032");
      sub->add_option("--k", common.k, "level k")->check(CLI::PositiveNumber);
    }
    sub->add_option("--format", common.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--out", common.out, "write output to FILE");
  };

  std::string object, rset;
  auto* show = app.add_subcommand("show", "render one object for w");
  show->add_option("object", object, "inversions|words|permanent-poset|braid-graph|bruhat|consistent|gr")->required();
  add_common(show, true);
  show->add_option("--rset", rset, "R for gr, e.g. \"[1,2,5,6],[1,3,5,6]\" or \"1256 1356\"");

  std::string what;
  int max_len = -1;
  auto* enumerate = app.add_subcommand("enumerate", "list elements, words, orders or consistent sets");
  enumerate->add_option("what", what, "group|words|admissible|consistent")->required();
  add_common(enumerate, true);
  enumerate->add_option("--max-len", max_len, "length bound for group (affine)");

  verify::SweepSpec spec;
  int single_k = 0, sweep_len = -1;
  auto* ver = app.add_subcommand("verify", "run a verification sweep");
  ver->add_option("--suite", spec.suite, "suite name or all");
  ver->add_option("--n", spec.n, "rank n")->required();
  ver->add_option("--max-len", sweep_len, "affine sweep over lengths <= L (default: all of S_n)");
  ver->add_option("--k", single_k, "single level k");
  ver->add_option("--k-min", spec.k_min, "lowest level k");
  ver->add_option("--k-max", spec.k_max, "highest level k");
  ver->add_option("--workers", spec.workers, "worker threads");
  ver->add_option("--budget-inv", spec.budget.max_inv, "skip instances with more k-inversions");
  ver->add_option("--budget-ext", spec.budget.max_ext, "skip instances with more estimated orders");
  ver->add_flag("--strict", spec.strict, "exit with status 3 when an instance was skipped");
  ver->add_option("--format", common.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  ver->add_option("--out", spec.out, "write the JSON report to FILE");
  std::string fault;
  ver->add_option("--inject-fault", fault, "test hook: make CHECK report a failure")->group("");

  std::string target;
  auto* rep = app.add_subcommand("reproduce", "rebuild a figure or table and diff against golden data");
  rep->add_option("target", target, "fig1|fig2|fig3|fig4|table1|count1228|all")->required();
  rep->add_option("--format", common.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  rep->add_option("--out", common.out, "write output to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (show->parsed()) return cmd_show(object, common, rset);
    if (enumerate->parsed()) return cmd_enumerate(what, common, max_len);
    if (ver->parsed()) {
      if (sweep_len >= 0) spec.max_len = sweep_len;
      if (single_k) spec.k_min = spec.k_max = single_k;
      if (!fault.empty()) verify::inject_fault(fault);
      return cmd_verify(spec, common);
    }
    if (rep->parsed()) return cmd_reproduce(target, common);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const UnsupportedCase& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
