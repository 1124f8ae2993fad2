#include "arrtool/checks.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "arrtool/fmap.hpp"
#include "arrtool/graph_manifold.hpp"
#include "arrtool/graph_of_groups.hpp"
#include "arrtool/isomorphism.hpp"
#include "arrtool/tietze.hpp"
#include "arrtool/wiring.hpp"

namespace arrtool {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failures; the first few end up in the detail line.
struct Failures {
  std::vector<std::string> items;
  void add(std::string s) { items.push_back(std::move(s)); }
  bool empty() const { return items.empty(); }
  std::string summary(const std::string& ok) const {
    if (items.empty()) return ok;
    std::string out;
    for (std::size_t i = 0; i < items.size() && i < 3; ++i) out += (i ? "; " : "") + items[i];
    if (items.size() > 3) out += "; +" + std::to_string(items.size() - 3) + " more";
    return out;
  }
};

CheckResult finish(std::string name, const Failures& f, const std::string& ok, Clock::time_point t0, double limit,
                   double slowest = -1) {
  CheckResult r;
  r.name = std::move(name);
  r.seconds = since(t0);
  r.limit_seconds = limit;
  const double measured = slowest >= 0 ? slowest : r.seconds;
  r.passed = f.empty() && (limit <= 0 || measured < limit);
  r.detail = f.summary(ok);
  if (f.empty() && !r.passed) {
    std::ostringstream os;
    os << "over time limit: " << measured << " s >= " << limit << " s";
    r.detail = os.str();
  }
  return r;
}

std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

CheckResult check_h1_cross_oracle(const std::vector<CorpusEntry>& corpus, const CheckOptions& o) {
  const auto t0 = Clock::now();
  Failures f;
  double slowest = 0;
  for (const auto& entry : corpus) {
    const auto t = Clock::now();
    OrderedIncidenceGraph og = build_ordered_graph(entry.arrangement);
    AbelianGroupDescription words = abelianize(boundary_presentation_forest(og, o.convention));
    AbelianGroupDescription mv = h1_mayer_vietoris(build_descriptor(og));
    if (!(words == mv)) f.add(entry.name + ": presentation " + words.str() + " vs Mayer-Vietoris " + mv.str());
    slowest = std::max(slowest, since(t));
  }
  return finish("h1-cross-oracle", f, std::to_string(corpus.size()) + " arrangements agree", t0, 1.0, slowest);
}

CheckResult check_complement_homology(const std::vector<CorpusEntry>& corpus, const CheckOptions& o) {
  const auto t0 = Clock::now();
  Failures f;
  double slowest = 0;
  std::size_t checked = 0;
  for (const auto& entry : corpus) {
    OrderedIncidenceGraph og = build_ordered_graph(entry.arrangement);
    if (!is_connected(og.graph)) continue;
    for (Variant v : {Variant::thm4, Variant::lemma32}) {
      const auto t = Clock::now();
      AbelianGroupDescription h = abelianize(complement_presentation(og, o.convention, v));
      AbelianGroupDescription expected{entry.arrangement.line_count(), {}};
      if (!(h == expected))
        f.add(entry.name + " (" + std::string(to_string(v)) + "): " + h.str() + ", expected " + expected.str());
      slowest = std::max(slowest, since(t));
      ++checked;
    }
  }
  return finish("complement-homology", f, std::to_string(checked) + " presentations give Z^k", t0, 1.0, slowest);
}

CheckResult check_pencil_oracle(const CheckOptions& o) {
  const auto t0 = Clock::now();
  Failures f;
  std::string shape;
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto& entry = corpus_entry("pencil-" + std::to_string(k));
    OrderedIncidenceGraph og = build_ordered_graph(entry.arrangement);
    GroupPresentation p = tietze_simplify(complement_presentation(og, o.convention, o.variant));
    AbelianGroupDescription h = abelianize(p);
    if (!(h == AbelianGroupDescription{k, {}})) f.add(entry.name + ": simplified abelianization " + h.str());
    if (k == 2) {
      const bool ok = p.generators.size() == 2 && p.relators.size() == 1 && is_generator_commutator(p.relators[0]);
      shape = std::to_string(p.generators.size()) + " gens, " + std::to_string(p.relators.size()) + " rels";
      if (!ok) f.add("pencil-2 simplifies to " + shape + ", not one commutator on two generators");
    }
  }
  return finish("pencil-oracle", f, "k=2..5 give Z^k; k=2 -> " + shape + " [x,y]", t0, 0);
}

CheckResult check_gluing_algebra(const std::vector<CorpusEntry>& corpus, const CheckOptions&) {
  const auto t0 = Clock::now();
  Failures f;
  const Matrix2 a = gluing_matrix(GluingDirection::from_line_side);
  const Matrix2 b = gluing_matrix(GluingDirection::from_point_side);
  if (a.det() != -1) f.add("det = " + std::to_string(a.det()));
  if (!(a * b == Matrix2::identity()) || !(b * a == Matrix2::identity())) f.add("reverse gluing is not the inverse");
  for (const auto& entry : corpus) {
    auto violations = validate_descriptor(build_descriptor(build_ordered_graph(entry.arrangement)));
    if (!violations.empty()) f.add(entry.name + ": " + violations.front());
  }
  return finish("gluing-algebra", f, "det -1, inverse ok, " + std::to_string(corpus.size()) + " descriptors valid",
                t0, 0);
}

CheckResult check_combinatorial_invariance(const std::vector<CorpusEntry>& corpus, const CheckOptions& o) {
  const auto t0 = Clock::now();
  Failures f;
  for (std::size_t c = 0; c < corpus.size(); ++c) {
    const auto& entry = corpus[c];
    const IncidenceGraph g = build_incidence_graph(entry.arrangement);
    const std::string reference = descriptor_canonical_form(build_descriptor(g));
    auto bad = run_trials<int>(o.relabelings, trial_seed(o.seed, c), o.mode, [&](std::size_t, std::mt19937_64& rng) {
      auto pp = random_permutation(g.point_count(), rng);
      auto lp = random_permutation(g.line_count(), rng);
      IncidenceGraph h = relabel(g, pp, lp);
      int err = 0;
      if (descriptor_canonical_form(build_descriptor(h)) != reference) err |= 1;
      auto iso = are_isomorphic(g, h);
      if (!iso || !verify_isomorphism(g, h, *iso)) err |= 2;
      return err;
    });
    std::size_t canon = 0, iso = 0;
    for (int e : bad) {
      canon += (e & 1) != 0;
      iso += (e & 2) != 0;
    }
    if (canon) f.add(entry.name + ": " + std::to_string(canon) + " canonical forms differ");
    if (iso) f.add(entry.name + ": " + std::to_string(iso) + " isomorphism searches failed");
  }
  return finish("combinatorial-invariance", f,
                std::to_string(o.relabelings) + " relabelings x " + std::to_string(corpus.size()) + " arrangements",
                t0, 10.0);
}

CheckResult check_bass_serre(const CheckOptions& o) {
  const auto t0 = Clock::now();
  Failures f;
  const OrderedIncidenceGraph og = build_ordered_graph(corpus_entry("triangle").arrangement);
  const GraphOfGroups gg(og, o.convention);
  const AbelianizationMap ab(boundary_presentation(og, o.convention, gg.tree()));
  enum : int { not_idempotent = 1, grew = 2, inverse_nontrivial = 4, false_trivial = 8, image_changed = 16 };
  auto flags = run_trials<int>(o.graph_words, o.seed, o.mode, [&](std::size_t, std::mt19937_64& rng) {
    const std::size_t steps = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
    GraphWord w = random_closed_word(gg, gg.tree().root, steps, rng);
    GraphWord r = gg.reduce(w);
    int err = 0;
    if (!(gg.reduce(r) == r)) err |= not_idempotent;
    if (r.length() > w.length()) err |= grew;
    if (!gg.is_identity(gg.concat(w, gg.inverse(w)))) err |= inverse_nontrivial;
    if (r.length() >= 2 && gg.is_identity(r)) err |= false_trivial;
    if (ab.image(gg.expand(w)) != ab.image(gg.expand(r))) err |= image_changed;
    return err;
  });
  const char* names[] = {"not idempotent", "length grew", "w w^-1 nontrivial", "reduced word called trivial",
                         "abelian image changed"};
  for (int bit = 0; bit < 5; ++bit) {
    std::size_t n = 0;
    for (int e : flags) n += (e >> bit) & 1;
    if (n) f.add(std::to_string(n) + " words: " + names[bit]);
  }
  return finish("bass-serre-reduction", f, std::to_string(o.graph_words) + " random words on triangle", t0, 5.0);
}

CheckResult check_fmap_injectivity(const CheckOptions& o) {
  const auto t0 = Clock::now();
  Failures f;
  std::size_t probes = 0;
  for (const char* name : {"triangle", "generic-4"}) {
    const OrderedIncidenceGraph og = build_ordered_graph(corpus_entry(name).arrangement);
    const GraphOfGroups gg(og, o.convention);
    auto trivial = run_trials<int>(o.cycles, trial_seed(o.seed, probes), o.mode,
                                   [&](std::size_t, std::mt19937_64& rng) {
                                     const std::size_t steps = std::uniform_int_distribution<std::size_t>(2, 10)(rng);
                                     auto cycle = random_nontrivial_cycle(og.graph, gg.tree(), gg.tree().root, steps, rng);
                                     return gg.is_identity(f_path(gg, gg.tree().root, cycle, o.variant)) ? 1 : 0;
                                   });
    std::size_t n = 0;
    for (int t : trivial) n += t;
    if (n) f.add(std::string(name) + ": " + std::to_string(n) + " cycles map to the identity");
    probes += o.cycles;
  }
  return finish("fmap-injectivity", f, std::to_string(probes) + " nontrivial cycles stay nontrivial", t0, 5.0);
}

CheckResult check_relator_count(const std::vector<CorpusEntry>& corpus, const CheckOptions& o) {
  const auto t0 = Clock::now();
  Failures f;
  std::string seen;
  for (const auto& entry : corpus) {
    OrderedIncidenceGraph og = build_ordered_graph(entry.arrangement);
    const IncidenceGraph& g = og.graph;
    if (!is_connected(g)) continue;
    const std::size_t added = complement_presentation(og, o.convention, o.variant).relators.size() -
                              boundary_presentation(og, o.convention).relators.size();
    const std::size_t expected = g.pair_count() + 1 - g.vertex_count();
    if (added != expected || added != betti1(g))
      f.add(entry.name + ": " + std::to_string(added) + " cycle relators, b1 = " + std::to_string(expected));
    if (entry.name == "triangle" || entry.name == "generic-4")
      seen += (seen.empty() ? "" : ", ") + entry.name + " " + std::to_string(added);
  }
  return finish("relator-count", f, "added relators = b1 (" + seen + ")", t0, 0);
}

CheckResult check_disconnected_case(const std::vector<CorpusEntry>& corpus, const CheckOptions& o) {
  const auto t0 = Clock::now();
  Failures f;
  std::vector<std::pair<std::string, Arrangement>> cases;
  for (const auto& entry : corpus)
    if (entry.arrangement.classification() == Classification::all_parallel)
      cases.push_back({entry.name, entry.arrangement});
  for (std::size_t k : {1, 3, 5}) cases.push_back({"parallel-" + std::to_string(k), parallel_lines(k)});
  for (const auto& [name, a] : cases) {
    const std::size_t k = a.line_count();
    OrderedIncidenceGraph og = build_ordered_graph(a);
    GraphManifoldDescriptor d = build_descriptor(og);
    bool tori = d.pieces.size() == k && d.gluings.empty();
    for (const auto& p : d.pieces) tori = tori && p.hopf_components == 1;
    if (!tori) f.add(name + ": not " + std::to_string(k) + " solid tori without gluings");
    GroupPresentation p = complement_presentation(og, o.convention, o.variant);
    if (p.generators.size() != k || !p.relators.empty()) f.add(name + ": complement group is not free of rank k");
    if (!(h1_mayer_vietoris(d) == AbelianGroupDescription{k, {}})) f.add(name + ": H_1 is not Z^k");
  }
  return finish("disconnected-case", f, std::to_string(cases.size()) + " parallel families", t0, 0);
}

CheckResult check_wiring_consistency(const std::vector<CorpusEntry>& corpus, const CheckOptions&) {
  const auto t0 = Clock::now();
  Failures f;
  for (const auto& entry : corpus) {
    const IncidenceGraph g = build_incidence_graph(entry.arrangement);
    const WiringDiagram w = build_wiring_diagram(entry.arrangement);
    if (w.betti1() != betti1(g) || w.component_count() != component_count(g))
      f.add(entry.name + ": wiring b1/components " + std::to_string(w.betti1()) + "/" +
            std::to_string(w.component_count()) + " vs graph " + std::to_string(betti1(g)) + "/" +
            std::to_string(component_count(g)));
  }
  return finish("wiring-consistency", f, std::to_string(corpus.size()) + " skeleta match their graphs", t0, 0);
}

std::vector<CheckResult> run_acceptance(const std::vector<CorpusEntry>& corpus, const CheckOptions& o) {
  std::vector<CheckResult> out;
  auto guarded = [&](const std::string& name, auto fn) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("threw: ") + e.what(), 0, 0});
    }
  };
  guarded("h1-cross-oracle", [&] { return check_h1_cross_oracle(corpus, o); });
  guarded("complement-homology", [&] { return check_complement_homology(corpus, o); });
  guarded("pencil-oracle", [&] { return check_pencil_oracle(o); });
  guarded("gluing-algebra", [&] { return check_gluing_algebra(corpus, o); });
  guarded("combinatorial-invariance", [&] { return check_combinatorial_invariance(corpus, o); });
  guarded("bass-serre-reduction", [&] { return check_bass_serre(o); });
  guarded("fmap-injectivity", [&] { return check_fmap_injectivity(o); });
  guarded("relator-count", [&] { return check_relator_count(corpus, o); });
  guarded("disconnected-case", [&] { return check_disconnected_case(corpus, o); });
  guarded("wiring-consistency", [&] { return check_wiring_consistency(corpus, o); });
  return out;
}

std::string format_result(const CheckResult& r, bool with_timing) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.name;
  if (with_timing) {
    os << " (" << std::fixed << std::setprecision(3) << r.seconds << " s";
    if (r.limit_seconds > 0) os << ", limit " << std::setprecision(0) << r.limit_seconds << " s";
    os << ")";
  }
  os << " " << r.detail;
  return os.str();
}

}  // namespace arrtool
