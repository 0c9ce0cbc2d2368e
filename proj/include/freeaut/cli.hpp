#ifndef FREEAUT_CLI_HPP
#define FREEAUT_CLI_HPP

// Command-line front end. Every subcommand is a thin wrapper over the library.
//
// Exit codes: 0 success (or predicate true), 1 predicate false / failed
// verification, 2 usage or runtime error.
//
// Predicates: primitive, separable (true = bounded separable), orbit-equal,
// certify (verification passed), family-check (all checks passed).

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "freeaut/serialize.hpp"

namespace freeaut::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct CliConfig {
  int rank = 2;
  std::vector<std::string> words;
  std::uint64_t seed = kDefaultSeed;
  std::size_t cap = kDefaultCap;
  std::size_t samples = 500;
  std::string format;  // empty: subcommand default
  std::optional<std::string> defect_bound;
};

namespace detail {

struct Emitter {
  std::ostream& out;
  std::string format;

  bool json() const { return format == "json"; }
  bool dot() const { return format == "dot"; }
  void emit(const freeaut::json& j) const { out << j.dump(2) << '\n'; }
};

inline int exit_for(bool ok) { return ok ? 0 : 1; }

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string vertex_list(const std::vector<int>& vs) {
  std::string s;
  for (int v : vs) s += (s.empty() ? "" : " ") + vertex_label(v);
  return s.empty() ? "-" : s;
}

inline freeaut::json vertex_json(const std::vector<int>& vs) {
  freeaut::json a = freeaut::json::array();
  for (int v : vs) a.push_back(vertex_label(v));
  return a;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Whitehead algorithm, Brooks quasimorphisms and distortion certificates for free groups", "freeaut"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--rank,-r", cfg.rank, "rank of the free group (1..26)")->check(CLI::Range(1, kMaxRank));
  app.add_option("--format,-f", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--cap", cfg.cap, "level-set size cap")->check(CLI::PositiveNumber);
  app.add_option("--samples", cfg.samples, "number of random samples")->check(CLI::PositiveNumber);
  app.add_option("--defect-bound", cfg.defect_bound, "override the defect bound D (integer or p/q)");

  auto word_arg = [&](CLI::App* sub, std::size_t n) {
    sub->add_option("words", cfg.words, n == 1 ? "word" : "words")->required()->expected(static_cast<int>(n));
  };

  auto* reduce = app.add_subcommand("reduce", "free and cyclic reduction");
  word_arg(reduce, 1);
  auto* graph = app.add_subcommand("graph", "Whitehead graph of the cyclic reduction");
  word_arg(graph, 1);
  auto* primitive = app.add_subcommand("primitive", "is the word primitive? (predicate)");
  word_arg(primitive, 1);
  auto* separable = app.add_subcommand("separable", "is the word separable? (predicate)");
  word_arg(separable, 1);
  bool aut_plus = false;
  auto* orbit_eq = app.add_subcommand("orbit-equal", "same Aut(F_n)-orbit of conjugacy classes? (predicate)");
  word_arg(orbit_eq, 2);
  orbit_eq->add_flag("--aut-plus", aut_plus, "restrict to determinant-one automorphisms");
  auto* orbit_min = app.add_subcommand("orbit-min", "reduction trace and minimal level set");
  word_arg(orbit_min, 1);

  std::string qm_base;
  std::string qm_mode = "brooks";
  std::size_t max_len = 24;
  auto* qm = app.add_subcommand("qm", "Brooks counting quasimorphism");
  qm->add_option("--base", qm_base, "base word w of Br_w")->required();
  qm->add_option("--mode", qm_mode, "count | brooks | homogenized | defect | primitive-bound")
      ->check(CLI::IsMember({"count", "brooks", "homogenized", "defect", "primitive-bound"}));
  qm->add_option("--max-len", max_len, "defect mode: maximum sampled word length");
  qm->add_option("words", cfg.words, "argument word (not used by defect / primitive-bound)")->expected(0, 1);

  int n_max = 10;
  std::size_t defect_samples = 2000;
  auto* certify = app.add_subcommand("certify", "classify, verify and print a certificate (predicate: verified)");
  word_arg(certify, 1);
  certify->add_option("--n-max", n_max, "largest power checked")->check(CLI::Range(1, 1000));
  certify->add_option("--defect-samples", defect_samples, "pairs sampled to validate the defect bound");

  auto* stabilizer = app.add_subcommand("stabilizer", "McCool graph, stabilizer generators and Aut+ verdict");
  word_arg(stabilizer, 1);

  std::vector<int> ks{2, 3, 4};
  auto* family = app.add_subcommand("family-check", "checks on x_k = a^k b^2k a^3k b^4k (predicate)");
  family->add_option("--k", ks, "family indices (>= 2)");

  int steps = 12;
  int count = 1;
  auto* rand_prim = app.add_subcommand("random-primitive", "seeded random primitive elements");
  rand_prim->add_option("--steps", steps, "elementary moves per element")->check(CLI::NonNegativeNumber);
  rand_prim->add_option("--count", count, "number of elements")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto pick_format = [&](const std::string& def, std::initializer_list<const char*> allowed) {
    std::string f = cfg.format.empty() ? def : cfg.format;
    for (const char* a : allowed)
      if (f == a) return f;
    throw PreconditionError("format '" + f + "' is not supported by this subcommand");
  };
  auto word = [&](std::size_t i) { return parse_word(cfg.words.at(i), cfg.rank); };
  auto defect_override = [&]() -> std::optional<Rational> {
    if (!cfg.defect_bound) return std::nullopt;
    return Rational::parse(*cfg.defect_bound);
  };

  try {
    if (reduce->parsed()) {
      detail::Emitter e{out, pick_format("text", {"text", "json"})};
      const Word w = word(0);
      const CyclicReduction cr = cyclic_reduce(w);
      if (e.json()) {
        e.emit({{"free", to_json(w)}, {"cyclic", to_json(cr.cyclic)}, {"conjugator", to_json(cr.conjugator)}});
      } else {
        out << "free:       " << to_string(w) << " (length " << w.size() << ")\n"
            << "cyclic:     " << to_string(cr.cyclic) << " (length " << cr.cyclic.size() << ")\n"
            << "conjugator: " << to_string(cr.conjugator) << '\n';
      }
      return 0;
    }

    if (graph->parsed()) {
      detail::Emitter e{out, pick_format("text", {"text", "json", "dot"})};
      const Word w = word(0);
      const WhiteheadGraph g = build_whitehead_graph(w);
      const auto cuts = g.cut_vertices();
      if (e.dot()) {
        out << to_dot(g);
      } else if (e.json()) {
        freeaut::json j = to_json(g);
        j["word"] = to_string(cyclic_word(w), true);
        j["connected"] = g.is_connected();
        j["cut_vertices"] = detail::vertex_json(cuts);
        e.emit(j);
      } else {
        out << "cyclic word:  " << to_string(cyclic_word(w)) << '\n';
        for (const auto& ed : g.edges())
          out << "  " << vertex_label(ed.u) << " -- " << vertex_label(ed.v) << (ed.multiplicity > 1 ? "  x" + std::to_string(ed.multiplicity) : "")
              << '\n';
        out << "connected:    " << detail::yes_no(g.is_connected()) << '\n'
            << "cut vertices: " << detail::vertex_list(cuts) << '\n';
      }
      return 0;
    }

    if (primitive->parsed()) {
      detail::Emitter e{out, pick_format("text", {"text", "json"})};
      const Word w = word(0);
      const ReductionTrace t = reduce_to_minimal(w);
      const bool p = is_primitive(w);
      if (e.json()) {
        e.emit({{"word", to_json(w)}, {"primitive", p}, {"minimal_length", t.minimal.size()}});
      } else {
        out << to_string(w) << (p ? " is primitive" : " is not primitive") << " (minimal cyclic length " << t.minimal.size() << ")\n";
      }
      return detail::exit_for(p);
    }

    if (separable->parsed()) {
      detail::Emitter e{out, pick_format("text", {"text", "json"})};
      const Word w = word(0);
      const SeparabilityResult r = is_separable(w);
      if (e.json()) {
        e.emit({{"word", to_json(w)},
                {"separable", r.separable},
                {"minimal", to_json(r.trace.minimal)},
                {"graph", to_json(r.graph)},
                {"connected", r.connected},
                {"cut_vertices", detail::vertex_json(r.cut_vertices)}});
      } else {
        out << to_string(w) << (r.separable ? " is separable" : " is not separable") << '\n'
            << "minimal form: " << to_string(r.trace.minimal) << '\n'
            << "Whitehead graph connected: " << detail::yes_no(r.connected) << ", cut vertices: " << detail::vertex_list(r.cut_vertices)
            << '\n';
      }
      return detail::exit_for(r.separable);
    }

    if (orbit_eq->parsed()) {
      detail::Emitter e{out, pick_format("text", {"text", "json"})};
      const Word u = word(0);
      const Word v = word(1);
      const OrbitComparison r = aut_plus ? orbit_equal_aut_plus(u, v, cfg.cap) : orbit_equal(u, v, cfg.cap);
      if (e.json()) {
        freeaut::json j = to_json(r);
        j["group"] = aut_plus ? "Aut+" : "Aut";
        j["u"] = to_json(u);
        j["v"] = to_json(v);
        e.emit(j);
      } else {
        out << (r.equal ? "equal" : "different") << " (" << (aut_plus ? "Aut+" : "Aut") << "): " << r.reason << '\n';
        if (r.witness) {
          out << "witness:";
          for (int i = 0; i < r.witness->rank(); ++i)
            out << ' ' << letter_char(Generator(i, 1)) << "->" << to_string(r.witness->image(i), true);
          out << "  (det " << abelian_determinant(*r.witness) << ")\n";
        }
      }
      return detail::exit_for(r.equal);
    }

    if (orbit_min->parsed()) {
      detail::Emitter e{out, pick_format("text", {"text", "json", "dot"})};
      const Word w = word(0);
      const ReductionTrace t = reduce_to_minimal(w);
      if (e.dot()) {
        out << to_dot(build_mccool_graph(t.minimal, cfg.cap));
        return 0;
      }
      const LevelSet ls = minimal_level_set(t.minimal, cfg.cap);
      if (e.json()) {
        e.emit({{"trace", to_json(t)}, {"level_set", to_json(ls)}});
      } else {
        out << "start:   " << to_string(t.start) << " (length " << t.start.size() << ")\n";
        for (const auto& s : t.steps) out << "  " << describe(s.move) << "  ->  " << to_string(s.result) << " (" << s.result.size() << ")\n";
        out << "minimal: " << to_string(t.minimal) << " (length " << t.minimal.size() << ")\n"
            << "level set: " << ls.size() << " classes\n";
      }
      return 0;
    }

    if (qm->parsed()) {
      detail::Emitter e{out, pick_format("text", {"text", "json"})};
      const BrooksQm q(parse_word(qm_base, cfg.rank));
      if (qm_mode == "defect") {
        const DefectReport r = estimate_defect(q, cfg.samples, max_len, cfg.seed, defect_override());
        if (e.json()) {
          e.emit(to_json(r));
        } else {
          out << "defect of Br_" << to_string(q.base(), true) << ": empirical max " << r.empirical_max.str() << ", claimed bound "
              << r.claimed_bound.str() << " (" << r.samples << " samples) " << (r.passed() ? "ok" : "VIOLATED") << '\n';
        }
        return detail::exit_for(r.passed());
      }
      if (qm_mode == "primitive-bound") {
        const PrimitiveBoundReport r = check_primitive_bound(q, cfg.samples, cfg.seed);
        if (e.json()) {
          e.emit(to_json(r));
        } else {
          out << "max |Br| on primitives: " << r.max_abs_brooks << " (bound " << r.bound << "), " << r.violations.size()
              << " violations over " << r.samples << " samples and " << r.probes << " probes\n";
        }
        return detail::exit_for(r.passed());
      }
      if (cfg.words.size() != 1) throw PreconditionError("qm --mode " + qm_mode + " needs one argument word");
      const Word x = word(0);
      std::int64_t value = 0;
      if (qm_mode == "count") value = static_cast<std::int64_t>(count_occurrences(q.base(), x));
      else if (qm_mode == "brooks") value = brooks(q, x);
      else value = homogenized(q, x);
      if (e.json()) {
        e.emit({{"base", to_json(q.base())}, {"word", to_json(x)}, {"mode", qm_mode}, {"value", value}});
      } else {
        out << value << '\n';
      }
      return 0;
    }

    if (certify->parsed()) {
      detail::Emitter e{out, pick_format("json", {"text", "json"})};
      const Word x = word(0);
      ClassifyOptions copt;
      copt.cap = cfg.cap;
      copt.defect_bound = defect_override();
      const DistortionVerdict v = classify(x, copt);
      VerifyOptions vopt;
      vopt.n_max = n_max;
      vopt.samples = cfg.samples;
      vopt.defect_samples = defect_samples;
      vopt.seed = cfg.seed;
      const VerificationReport rep = verify(v, x, vopt);
      if (e.json()) {
        freeaut::json j = to_json(v);
        j["verification"] = to_json(rep);
        e.emit(j);
      } else {
        out << to_string(x) << ": " << kind_name(v.kind()) << '\n';
        for (const auto& c : rep.checks) out << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
        for (const auto& b : rep.bounds) {
          out << "  n=" << b.n << "  |x^n|_p >= " << b.lower;
          if (b.upper) out << ", <= " << *b.upper;
          out << '\n';
        }
        for (const auto& n : rep.notes) out << "  note: " << n << '\n';
      }
      return detail::exit_for(rep.passed());
    }

    if (stabilizer->parsed()) {
      detail::Emitter e{out, pick_format("text", {"text", "json", "dot"})};
      const Word w = word(0);
      const McCoolGraph g = build_mccool_graph(reduce_to_minimal(w).minimal, cfg.cap);
      if (e.dot()) {
        out << to_dot(g);
        return 0;
      }
      const auto gens = loop_generators(g);
      if (e.json()) {
        e.emit(to_json(g, gens));
      } else {
        out << "basepoint: " << to_string(g.basepoint()) << ", " << g.vertex_count() << " vertices, " << g.edges().size() << " edges\n"
            << gens.size() << " loop generators; stabilizer in Aut+: " << detail::yes_no(stabilizer_in_aut_plus(gens)) << '\n';
      }
      return 0;
    }

    if (family->parsed()) {
      detail::Emitter e{out, pick_format("text", {"text", "json"})};
      const FamilyReport r = check_family(ks, cfg.cap);
      if (e.json()) {
        e.emit(to_json(r));
      } else {
        for (const auto& c : r.checks)
          out << (c.passed ? "PASS  " : "FAIL  ") << c.lemma << "  " << c.subject << (c.detail.empty() ? "" : "  (" + c.detail + ")") << '\n';
        for (const auto& [k, s] : r.seconds) out << "x_" << k << ": " << s << " s\n";
        out << (r.passed() ? "all checks passed" : "some checks FAILED") << '\n';
      }
      return detail::exit_for(r.passed());
    }

    if (rand_prim->parsed()) {
      detail::Emitter e{out, pick_format("text", {"text", "json"})};
      freeaut::json arr = freeaut::json::array();
      for (int i = 0; i < count; ++i) {
        const Word p = random_primitive(cfg.rank, steps, freeaut::detail::splitmix64(cfg.seed + static_cast<std::uint64_t>(i)));
        if (e.json()) arr.push_back(to_json(p));
        else out << to_string(p) << '\n';
      }
      if (e.json()) e.emit({{"seed", cfg.seed}, {"steps", steps}, {"primitives", arr}});
      return 0;
    }
  } catch (const SyntaxError& ex) {
    err << "syntax error: " << ex.what() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace freeaut::cli

#endif  // FREEAUT_CLI_HPP
