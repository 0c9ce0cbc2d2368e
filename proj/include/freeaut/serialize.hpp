#ifndef FREEAUT_SERIALIZE_HPP
#define FREEAUT_SERIALIZE_HPP

// JSON forms of library values. Object keys are emitted in sorted order
// (nlohmann::json default), which keeps output byte-stable.

#include <string>
#include <vector>

#include "json.hpp"

#include "freeaut/automorphism.hpp"
#include "freeaut/certify.hpp"
#include "freeaut/family.hpp"
#include "freeaut/orbit.hpp"
#include "freeaut/quasimorphism.hpp"
#include "freeaut/stabilizer.hpp"
#include "freeaut/whitehead_graph.hpp"
#include "freeaut/word.hpp"

namespace freeaut {

using json = nlohmann::json;

inline json letters_to_json(std::span<const Generator> letters) {
  json arr = json::array();
  for (Generator g : letters) arr.push_back({static_cast<int>(g.index), static_cast<int>(g.sign)});
  return arr;
}

inline json to_json(const Word& w) {
  return {{"rank", w.rank()}, {"letters", letters_to_json(w.letters())}, {"text", to_string(w, true)}};
}

inline json to_json(const CyclicWord& c) {
  return {{"rank", c.rank()}, {"letters", letters_to_json(c.letters())}, {"text", to_string(c, true)}};
}

inline std::vector<Generator> letters_from_json(const json& arr) {
  std::vector<Generator> out;
  for (const auto& l : arr) {
    if (!l.is_array() || l.size() != 2) throw PreconditionError("letter must be [index, sign]");
    const int idx = l[0].get<int>();
    const int sign = l[1].get<int>();
    if (idx < 0 || (sign != 1 && sign != -1)) throw PreconditionError("bad letter in JSON");
    out.emplace_back(idx, sign);
  }
  return out;
}

inline Word word_from_json(const json& j) {
  const int rank = j.at("rank").get<int>();
  const auto letters = letters_from_json(j.at("letters"));
  // The letter list must already be reduced.
  if (!detail::is_freely_reduced(letters)) throw PreconditionError("JSON word is not freely reduced");
  return Word(rank, letters);
}

inline json to_json(const WhiteheadGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.multiplicity});
  return {{"rank", g.rank()}, {"edges", edges}};
}

inline json to_json(const ElementaryMove& m) {
  if (const auto* p = std::get_if<PermutationMove>(&m)) {
    return {{"kind", "permutation"}, {"images", letters_to_json(p->images)}};
  }
  const auto& w = std::get<WhiteheadMove>(m);
  json actions = json::array();
  for (Action a : w.actions) actions.push_back(action_name(a));
  return {{"kind", "whitehead"},
          {"multiplier", {static_cast<int>(w.multiplier.index), static_cast<int>(w.multiplier.sign)}},
          {"actions", actions}};
}

inline ElementaryMove move_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "permutation") return PermutationMove{letters_from_json(j.at("images"))};
  if (kind == "whitehead") {
    WhiteheadMove w;
    const auto mult = letters_from_json(json::array({j.at("multiplier")}));
    w.multiplier = mult.front();
    for (const auto& a : j.at("actions")) w.actions.push_back(parse_action(a.get<std::string>()));
    return w;
  }
  throw PreconditionError("unknown move kind '" + kind + "'");
}

inline json to_json(const Automorphism& a) {
  json images = json::array();
  for (const auto& w : a.images()) images.push_back(to_string(w));
  json fact = json::array();
  for (const auto& m : a.factorization()) fact.push_back(to_json(m));
  return {{"rank", a.rank()}, {"images", images}, {"factorization", fact}, {"abelian_determinant", abelian_determinant(a)}};
}

// Rebuilt from the factorization; the stated images must match.
inline Automorphism automorphism_from_json(const json& j) {
  const int rank = j.at("rank").get<int>();
  if (!j.contains("factorization")) throw PreconditionError("automorphism JSON lacks a factorization");
  std::vector<ElementaryMove> moves;
  for (const auto& m : j.at("factorization")) moves.push_back(move_from_json(m));
  for (const auto& m : moves)
    if (move_rank(m) != rank) throw RankError("move rank differs from automorphism rank");
  Automorphism a = Automorphism::from_moves(rank, moves);
  if (j.contains("images")) {
    const auto& imgs = j.at("images");
    if (imgs.size() != static_cast<std::size_t>(rank)) throw PreconditionError("wrong number of images");
    for (int i = 0; i < rank; ++i)
      if (parse_word(imgs[static_cast<std::size_t>(i)].get<std::string>(), rank) != a.image(i))
        throw PreconditionError("images do not match the factorization");
  }
  return a;
}

inline json to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"move", to_json(s.move)}, {"describe", describe(s.move)}, {"result", to_string(s.result, true)},
                     {"length", s.result.size()}});
  return {{"start", to_json(t.start)}, {"minimal", to_json(t.minimal)}, {"steps", steps}, {"minimal_length", t.minimal.size()}};
}

inline json to_json(const LevelSet& ls) {
  json classes = json::array();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    json path = json::array();
    for (const auto& m : ls.path_from_basepoint(i)) path.push_back(describe(m));
    classes.push_back({{"class", to_string(ls[i], true)}, {"tree_path", path}});
  }
  return {{"rank", ls.rank()}, {"length", ls.length()}, {"size", ls.size()}, {"basepoint", to_string(ls.basepoint(), true)},
          {"classes", classes}};
}

inline json to_json(const OrbitComparison& r) {
  json j = {{"equal", r.equal}, {"reason", r.reason}};
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  return j;
}

inline json to_json(const McCoolGraph& g, const std::vector<Automorphism>& generators) {
  json edges = json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"from", e.from}, {"to", e.to}, {"label", describe(g.label(e))}, {"tree", e.tree}});
  json gens = json::array();
  for (const auto& a : generators) gens.push_back(to_json(a));
  json j = to_json(g.level_set());
  j["edges"] = edges;
  j["loop_generators"] = gens;
  j["stabilizer_in_aut_plus"] = stabilizer_in_aut_plus(generators);
  return j;
}

inline json to_json(const DefectReport& r) {
  json j = {{"claimed_bound", r.claimed_bound.str()},
            {"empirical_max", r.empirical_max.str()},
            {"samples", r.samples},
            {"seed", r.seed},
            {"passed", r.passed()}};
  if (r.worst_pair) j["worst_pair"] = {to_string(r.worst_pair->first), to_string(r.worst_pair->second)};
  return j;
}

inline json to_json(const PrimitiveBoundReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"primitive", to_string(x.primitive)}, {"kind", x.kind}, {"value", x.value}});
  return {{"root", to_string(r.root)},   {"bound", r.bound},         {"samples", r.samples},
          {"probes", r.probes},          {"seed", r.seed},           {"max_abs_brooks", r.max_abs_brooks},
          {"violations", v},             {"passed", r.passed()}};
}

inline json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json bounds = json::array();
  for (const auto& b : r.bounds) {
    json e = {{"n", b.n}, {"lower", b.lower}};
    if (b.rate) e["rate"] = b.rate->str();
    if (b.upper) e["upper"] = *b.upper;
    bounds.push_back(e);
  }
  json j = {{"passed", r.passed()}, {"checks", checks}, {"bounds", bounds}, {"notes", r.notes}};
  if (r.primitive_bound) j["primitive_bound"] = to_json(*r.primitive_bound);
  if (r.defect) j["defect"] = to_json(*r.defect);
  return j;
}

// Certificate, schema distortion-cert/1.
inline json to_json(const DistortionVerdict& v) {
  json j = {{"schema", kCertificateSchema}, {"kind", kind_name(v.kind())}, {"input", to_json(v.input)}};
  if (v.kind() == VerdictKind::BoundedSeparable) {
    const auto& s = v.separable();
    j["witness_factor"] = to_json(s.witness_factor);
    j["reducing_automorphism"] = to_json(s.reducing);
    j["minimal"] = to_json(s.minimal);
    j["conjugator"] = to_json(s.conjugator);
    j["free_generator"] = {static_cast<int>(s.free_generator.index), static_cast<int>(s.free_generator.sign)};
    j["degenerate"] = s.degenerate;
    j["statement"] = "for all n: x^n = (x^n p) p^-1 with x^n p and p primitive, so |x^n|_p <= 2";
  } else {
    const auto& u = v.undistorted();
    j["minimizing_automorphism"] = to_json(u.minimizing_automorphism);
    j["reduced"] = to_json(u.reduced);
    j["conjugator"] = to_json(u.conjugator);
    j["qm_base"] = to_json(u.qm.base());
    j["primitive_bound"] = u.primitive_bound;
    j["defect_bound"] = u.defect_bound.str();
    j["homogenized"] = u.homogenized_value;
    j["slope"] = u.slope.str();
    j["statement"] = "|x^n|_p >= ceil(|Br(psi(x)^n)| / (C + D)); asymptotically n * slope";
  }
  return j;
}

inline DistortionVerdict verdict_from_json(const json& j) {
  if (j.at("schema").get<std::string>() != kCertificateSchema) throw PreconditionError("unsupported certificate schema");
  const Word input = word_from_json(j.at("input"));
  const std::string kind = j.at("kind").get<std::string>();
  auto cyc = [](const json& c) {
    const Word w = word_from_json(c);
    return canonical_rotation(w.rank(), w.letters());
  };
  if (kind == "bounded_separable") {
    const auto g = letters_from_json(json::array({j.at("free_generator")})).front();
    return {input, BoundedSeparable{word_from_json(j.at("witness_factor")), automorphism_from_json(j.at("reducing_automorphism")),
                                    cyc(j.at("minimal")), word_from_json(j.at("conjugator")), g, j.at("degenerate").get<bool>()}};
  }
  if (kind == "undistorted") {
    return {input, Undistorted{automorphism_from_json(j.at("minimizing_automorphism")), cyc(j.at("reduced")),
                               word_from_json(j.at("conjugator")), BrooksQm(word_from_json(j.at("qm_base"))),
                               j.at("primitive_bound").get<std::int64_t>(), Rational::parse(j.at("defect_bound").get<std::string>()),
                               j.at("homogenized").get<std::int64_t>(), Rational::parse(j.at("slope").get<std::string>())}};
  }
  throw PreconditionError("unknown certificate kind '" + kind + "'");
}

inline json to_json(const FamilyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"check", c.lemma}, {"subject", c.subject}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"ks", r.ks}, {"checks", checks}, {"passed", r.passed()}};
}

}  // namespace freeaut

#endif  // FREEAUT_SERIALIZE_HPP
