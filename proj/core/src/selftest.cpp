#include "omegacanon/selftest.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "omegacanon/blackwhite.hpp"
#include "omegacanon/colors.hpp"
#include "omegacanon/fixtures.hpp"
#include "omegacanon/persistent.hpp"
#include "omegacanon/scc.hpp"
#include "omegacanon/wagner.hpp"

namespace omegacanon {

namespace {

struct Suite {
  const std::string& language;
  const SelftestBounds& bounds;
  std::vector<Violation>& out;
  const Alphabet& sigma;

  void fail(const std::string& property, const std::string& witness) const {
    out.push_back({language, property, witness});
  }
  std::string w(const Word& x) const { return "\"" + sigma.format(x) + "\""; }
};

Word operator+(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Word power(const Word& v, int i) {
  Word out;
  for (int k = 0; k < i; ++k) out = out + v;
  return out;
}

int color_key(const Color& c) { return c.bottom ? -1000 : c.value; }

bool stable(const ColorContext& ctx, const Word& u, const Word& v, int max_rep) {
  Color base = ctx.finite_color(u, v);
  for (int i = 2; i <= max_rep; ++i)
    if (!(ctx.finite_color(u, power(v, i)) == base)) return false;
  return true;
}

// Max acceptance alternations along any path from each state of a DFA
// whose MSCCs are polarity-pure: a successor of opposite polarity adds one
// flip, one of the same polarity passes its value through.
std::vector<int> path_alternations(const Dfa& d) {
  SccDecomposition scc = sccs(d.structure);
  int nc = static_cast<int>(scc.components.size());
  std::vector<int> flips(nc, 0);
  for (int c = nc - 1; c >= 0; --c) {
    bool acc = d.accepting[scc.components[c][0]];
    int best = 0;
    for (int s : scc.condensation[c]) {
      bool acc_s = d.accepting[scc.components[s][0]];
      best = std::max(best, flips[s] + (acc_s != acc ? 1 : 0));
    }
    flips[c] = best;
  }
  std::vector<int> per_state(d.state_count());
  for (State s = 0; s < d.state_count(); ++s) per_state[s] = flips[scc.component_of[s]];
  return per_state;
}

void run_language(const std::string& name, const OmegaAutomaton& m, const SelftestBounds& bounds,
                  const Limits& limits, std::vector<Violation>& out) {
  ColorContext ctx = ColorContext::build(m, limits);
  ColorfulFdfa colorful = build_colorful_fdfa(ctx);
  const Fdfa& periodic = ctx.periodic();
  Fdfa periodic_duo = with_mode(periodic, AcceptanceMode::DuoNormalized);
  const Alphabet sigma = m.structure.alphabet();
  Suite suite{name, bounds, out, sigma};

  std::vector<Word> us = enumerate_words(sigma.size(), 0, bounds.max_u);
  std::vector<Word> vs = enumerate_words(sigma.size(), 1, bounds.max_v);
  std::vector<Word> shorts = enumerate_words(sigma.size(), 1, 3);
  std::vector<Word> exts = enumerate_words(sigma.size(), 0, bounds.max_ext);

  // Equivalence classes agree on colors.
  for (const Word& u1 : us)
    for (const Word& u2 : us) {
      if (ctx.class_of_word(u1) != ctx.class_of_word(u2)) continue;
      for (const Word& v : shorts)
        if (!(ctx.finite_color(u1, v) == ctx.finite_color(u2, v)))
          suite.fail("equivalent-classes-agree", "u=" + suite.w(u1) + " u'=" + suite.w(u2) +
                                                     " v=" + suite.w(v));
    }

  // Monotonically non-increasing.
  for (const Word& u : us)
    for (const Word& v : vs)
      for (const Word& z : shorts)
        if (color_key(ctx.finite_color(u, v)) < color_key(ctx.finite_color(u, v + z)))
          suite.fail("monotonically-non-increasing",
                     "u=" + suite.w(u) + " v=" + suite.w(v) + " z=" + suite.w(z));

  // Step by step: color c > 1 admits an invariant extension of color c-1.
  for (const Word& u : us) {
    int cls = ctx.class_of_word(u);
    for (const Word& v : vs) {
      Color c = ctx.finite_color(u, v);
      if (c.bottom || c.value <= 1) continue;
      bool found = false;
      for (const Word& z : exts) {
        Word vz = v + z;
        if (ctx.class_of_word(u + vz) != cls) continue;
        Color cz = ctx.finite_color(u, vz);
        if (!cz.bottom && cz.value == c.value - 1) {
          found = true;
          break;
        }
      }
      if (!found) suite.fail("step-by-step", "u=" + suite.w(u) + " v=" + suite.w(v));
    }
  }

  // Every period eventually stabilizes.
  for (const Word& u : us)
    for (const Word& v : shorts) {
      bool found = false;
      for (int i = 1; i <= bounds.max_ext && !found; ++i)
        if (stable(ctx, u, power(v, i), bounds.max_rep)) found = true;
      if (!found) suite.fail("eventually-stabilizes", "u=" + suite.w(u) + " v=" + suite.w(v));
    }

  // Reliable periods determine membership; corollary: membership iff the
  // infinite color is even.
  for (const Word& u : us)
    for (const Word& v : vs) {
      UPWord word(u, v);
      if (ctx.is_reliable(u, v)) {
        Color c = ctx.finite_color(u, v);
        if (c.bottom || (c.value % 2 == 0) != accepts_up(m, word))
          suite.fail("reliable-periods-determine", "u=" + suite.w(u) + " v=" + suite.w(v));
      }
      if ((ctx.infinite_color(word) % 2 == 0) != accepts_up(m, word))
        suite.fail("membership-iff-color-even", "u=" + suite.w(u) + " v=" + suite.w(v));
    }

  // Monotonically decreasing on nested reliable periods of opposite
  // membership.
  for (const Word& u : us)
    for (const Word& v : vs)
      for (const Word& z : shorts) {
        Word vz = v + z;
        if (!ctx.is_reliable(u, v) || !ctx.is_reliable(u, vz)) continue;
        if (accepts_up(m, UPWord(u, v)) == accepts_up(m, UPWord(u, vz))) continue;
        if (!(color_key(ctx.finite_color(u, v)) > color_key(ctx.finite_color(u, vz))))
          suite.fail("monotonically-decreasing",
                     "u=" + suite.w(u) + " v=" + suite.w(v) + " z=" + suite.w(z));
      }

  // Extending to reliable periods of the same color.
  for (const Word& u : us)
    for (const Word& v : shorts) {
      if (!ctx.is_relevant(u, v)) continue;
      Color c = ctx.finite_color(u, v);
      bool found = false;
      for (const Word& z : exts) {
        Word vz = v + z;
        if (ctx.is_reliable(u, vz) && ctx.finite_color(u, vz) == c) {
          found = true;
          break;
        }
      }
      if (!found) suite.fail("extend-to-reliable", "u=" + suite.w(u) + " v=" + suite.w(v));
    }

  // Less is more: u ~ xy lets the longer viewpoint only lower the color.
  for (const Word& x : us)
    for (const Word& y : us) {
      if (y.empty()) continue;
      for (const Word& u : us) {
        if (ctx.class_of_word(u) != ctx.class_of_word(x + y)) continue;
        for (const Word& v : shorts) {
          if (color_key(ctx.finite_color(u, v)) < color_key(ctx.finite_color(x, y + v)))
            suite.fail("less-is-more", "u=" + suite.w(u) + " x=" + suite.w(x) +
                                           " y=" + suite.w(y) + " v=" + suite.w(v));
          // Clamped variant, restricted to relevant words.
          if (ctx.is_relevant(x, y + v) &&
              ctx.finite_color_clamped(u, v) < ctx.finite_color_clamped(x, y + v))
            suite.fail("less-is-more-clamped", "u=" + suite.w(u) + " x=" + suite.w(x) +
                                                   " y=" + suite.w(y) + " v=" + suite.w(v));
        }
      }
    }

  // Reliable normalizations of one omega-word agree on the color.
  {
    std::map<std::pair<Word, Word>, std::pair<UPWord, int>> seen;
    for (const Word& u : us)
      for (const Word& v : enumerate_words(sigma.size(), 1, 4)) {
        if (!ctx.is_reliable(u, v)) continue;
        Color c = ctx.finite_color(u, v);
        UPWord canon = canonical_up(UPWord(u, v));
        auto key = std::make_pair(canon.spoke, canon.cycle);
        auto [it, inserted] = seen.emplace(key, std::make_pair(UPWord(u, v), color_key(c)));
        if (!inserted && it->second.second != color_key(c))
          suite.fail("reliable-normalizations-agree",
                     "u=" + suite.w(u) + " v=" + suite.w(v) + " vs u=" +
                         suite.w(it->second.first.spoke) + " v=" + suite.w(it->second.first.cycle));
      }
  }

  // Chain characterization vs the literal bounded definition.
  for (const Word& u : enumerate_words(sigma.size(), 0, 1))
    for (const Word& v : enumerate_words(sigma.size(), 1, bounds.brute_v)) {
      Color lit = ctx.brute_force_color(u, v, bounds.brute_z, bounds.brute_rep);
      if (!(lit == ctx.finite_color(u, v)))
        suite.fail("chain-color-vs-literal-definition",
                   "u=" + suite.w(u) + " v=" + suite.w(v) + " chain=" +
                       ctx.finite_color(u, v).str() + " literal=" + lit.str());
    }

  // Clamped-variant spot checks: clamp is identity on relevant words,
  // monotone, and keeps the reliable-determination property.
  for (const Word& u : us)
    for (const Word& v : vs) {
      Color c = ctx.finite_color(u, v);
      int clamped = ctx.finite_color_clamped(u, v);
      if (!c.bottom && c.value >= ctx.mincolor(ctx.class_of_word(u)) && clamped != c.value)
        suite.fail("clamp-identity-on-relevant", "u=" + suite.w(u) + " v=" + suite.w(v));
      if (c.bottom && clamped != ctx.mincolor(ctx.class_of_word(u)))
        suite.fail("clamp-bottom-to-mincolor", "u=" + suite.w(u) + " v=" + suite.w(v));
      for (const Word& z : shorts)
        if (ctx.finite_color_clamped(u, v + z) > clamped)
          suite.fail("clamped-monotone", "u=" + suite.w(u) + " v=" + suite.w(v) +
                                             " z=" + suite.w(z));
      if (ctx.is_reliable(u, v) &&
          (ctx.finite_color_clamped(u, v) % 2 == 0) != accepts_up(m, UPWord(u, v)))
        suite.fail("clamped-reliable-determine", "u=" + suite.w(u) + " v=" + suite.w(v));
    }

  // Colorful FDFA: correct colors for finite words; duo-normalized pairs
  // are reliable; MSCC purity; alternations match colors.
  for (const Word& u : us) {
    int cls = ctx.class_of_word(u);
    const Dfa& prog = colorful.fdfa.progress[cls];
    for (const Word& v : vs) {
      State s = prog.structure.run(v);
      if (colorful.colors[cls][s] != ctx.finite_color_clamped(u, v))
        suite.fail("colorful-assigns-correct-colors",
                   "u=" + suite.w(u) + " v=" + suite.w(v) + " label=" +
                       std::to_string(colorful.colors[cls][s]) + " color=" +
                       std::to_string(ctx.finite_color_clamped(u, v)));
      if (is_normalized(colorful.fdfa, u, v, NormalizationKind::DuoNormalized) &&
          !ctx.is_reliable(u, v))
        suite.fail("colorful-duo-implies-reliable", "u=" + suite.w(u) + " v=" + suite.w(v));
    }
  }
  for (int cls = 0; cls < colorful.fdfa.leading_states(); ++cls) {
    const Dfa& prog = colorful.fdfa.progress[cls];
    SccDecomposition d = sccs(prog.structure);
    for (const auto& comp : d.components)
      for (State s : comp)
        if (prog.accepting[s] != prog.accepting[comp[0]])
          suite.fail("colorful-mscc-purity", "class=" + std::to_string(cls));
    std::vector<int> alt = path_alternations(prog);
    for (State s = 0; s < prog.state_count(); ++s)
      if (alt[s] != colorful.colors[cls][s] - colorful.class_mincolor[cls])
        suite.fail("colorful-alternations-match-colors",
                   "class=" + std::to_string(cls) + " state=" + std::to_string(s));
    // Minimality: distinct non-designated states have a distinguishing
    // extension with a different color.
    for (State s = 0; s < prog.state_count(); ++s)
      for (State t = s + 1; t < prog.state_count(); ++t) {
        if (s == colorful.epsilon_state[cls] || t == colorful.epsilon_state[cls]) continue;
        bool distinguished = false;
        for (const Word& z : exts)
          if (colorful.colors[cls][prog.structure.run(s, z)] !=
              colorful.colors[cls][prog.structure.run(t, z)]) {
            distinguished = true;
            break;
          }
        if (!distinguished)
          suite.fail("colorful-minimality", "class=" + std::to_string(cls) + " states " +
                                                std::to_string(s) + "," + std::to_string(t));
      }
  }
  color_states_procedure(colorful);  // throws on label mismatch

  // Acceptance-mode implications on the (exact-saturated) periodic FDFA,
  // the persistent-acceptance remark, and normalize postconditions.
  for (const Word& u : us)
    for (const Word& v : shorts) {
      UPWord word(u, v);
      bool exact = accepts(periodic, word);
      bool norm = accepts(with_mode(periodic, AcceptanceMode::Normalized), word);
      bool duo = accepts(periodic_duo, word);
      if (exact != norm || norm != duo)
        suite.fail("acceptance-mode-implications", "u=" + suite.w(u) + " v=" + suite.w(v));
      if (accepts_persistent_mode(periodic_duo, word) != duo)
        suite.fail("persistent-acceptance-equals-duo", "u=" + suite.w(u) + " v=" + suite.w(v));
      if (accepts_persistent_mode(colorful.fdfa, word) != accepts(colorful.fdfa, word))
        suite.fail("persistent-acceptance-equals-duo-colorful",
                   "u=" + suite.w(u) + " v=" + suite.w(v));
      for (NormalizationKind kind :
           {NormalizationKind::Normalized, NormalizationKind::DuoNormalized,
            NormalizationKind::Persistent}) {
        UPWord n = normalize(periodic, word, kind);
        if (!is_normalized(periodic, n.spoke, n.cycle, kind))
          suite.fail("normalize-satisfies-kind", "u=" + suite.w(u) + " v=" + suite.w(v));
        if (!(canonical_up(n) == canonical_up(word)))
          suite.fail("normalize-preserves-word", "u=" + suite.w(u) + " v=" + suite.w(v));
      }
      // Both routes to the persistence definition agree.
      if (is_persistent(periodic, u, v, limits) !=
          is_normalized(periodic, u, v, NormalizationKind::Persistent))
        suite.fail("persistence-two-routes", "u=" + suite.w(u) + " v=" + suite.w(v));
      // Persistent implies reliable, with stable acceptance under powers.
      if (is_persistent(periodic, u, v, limits)) {
        if (!ctx.is_reliable(u, v))
          suite.fail("persistent-implies-reliable", "u=" + suite.w(u) + " v=" + suite.w(v));
        for (int i = 2; i <= bounds.max_rep; ++i)
          if (accepts(periodic_duo, UPWord(u, power(v, i))) != accepts(periodic_duo, word))
            suite.fail("persistent-stable-acceptance",
                       "u=" + suite.w(u) + " v=" + suite.w(v) + " i=" + std::to_string(i));
      }
    }

  // The colorful FDFA and the periodic FDFA agree with the automaton.
  for (const Word& u : us)
    for (const Word& v : vs) {
      UPWord word(u, v);
      bool expected = accepts_up(m, word);
      if (accepts(colorful.fdfa, word) != expected)
        suite.fail("colorful-recognizes-language", "u=" + suite.w(u) + " v=" + suite.w(v));
      if (accepts(periodic, word) != expected)
        suite.fail("periodic-recognizes-language", "u=" + suite.w(u) + " v=" + suite.w(v));
    }

  // FDFA algebra on sampled words.
  {
    Fdfa comp = complement(colorful.fdfa);
    Fdfa both = intersect(periodic_duo, colorful.fdfa);
    Fdfa either = unite(periodic_duo, comp);
    for (const Word& u : enumerate_words(sigma.size(), 0, 1))
      for (const Word& v : shorts) {
        UPWord word(u, v);
        bool a = accepts(periodic_duo, word);
        bool b = accepts(colorful.fdfa, word);
        if (accepts(comp, word) != !b)
          suite.fail("complement-pointwise", "u=" + suite.w(u) + " v=" + suite.w(v));
        if (accepts(both, word) != (a && b))
          suite.fail("intersection-pointwise", "u=" + suite.w(u) + " v=" + suite.w(v));
        if (accepts(either, word) != (a || !b))
          suite.fail("union-pointwise", "u=" + suite.w(u) + " v=" + suite.w(v));
      }
    if (is_empty(intersect(colorful.fdfa, comp)))
      suite.fail("empty-intersection-with-complement", "witness returned");
    if (!is_universal(unite(colorful.fdfa, comp)).holds)
      suite.fail("universal-union-with-complement", "counterexample returned");
    CheckResult eq = equivalent(periodic_duo, colorful.fdfa);
    if (!eq.holds)
      suite.fail("periodic-equivalent-colorful",
                 "witness u=" + suite.w(eq.witness->spoke) + " v=" + suite.w(eq.witness->cycle));
    auto sat = check_saturation_bounded(colorful.fdfa, bounds.max_u, 4);
    if (sat)
      suite.fail("colorful-saturated", "u=" + suite.w(sat->accepted_as.spoke) +
                                           " v=" + suite.w(sat->accepted_as.cycle));
    auto witness = is_empty(colorful.fdfa);
    if (witness && !accepts(colorful.fdfa, *witness))
      suite.fail("emptiness-witness-replays", "u=" + suite.w(witness->spoke) +
                                                  " v=" + suite.w(witness->cycle));
  }

  // Measure robustness: diameters of the periodic and the colorful FDFA
  // both equal the inclusion measures of the automaton.
  {
    WagnerMeasure wm = inclusion_measures(m, limits);
    DiameterMeasure d1 = diameter(periodic, limits);
    DiameterMeasure d2 = diameter(colorful.fdfa, limits);
    if (d1.d_plus != wm.m_plus || d1.d_minus != wm.m_minus || d2.d_plus != wm.m_plus ||
        d2.d_minus != wm.m_minus) {
      std::ostringstream msg;
      msg << "wagner=(" << wm.m_plus << "," << wm.m_minus << ") periodic=(" << d1.d_plus << ","
          << d1.d_minus << ") colorful=(" << d2.d_plus << "," << d2.d_minus << ")";
      suite.fail("diameter-matches-inclusion-measures", msg.str());
    }
    if (wm.m_plus - wm.m_minus > 1 || wm.m_minus - wm.m_plus > 1)
      suite.fail("measure-difference-at-most-one", "");
  }

  // Lector contract for thresholds 0..3.
  for (int c = 0; c <= 3; ++c) {
    CLector lector = build_c_lector(ctx, colorful, c);
    for (const Word& u : enumerate_words(sigma.size(), 0, 1))
      for (const Word& v : vs) {
        UPWord word(u, v);
        if (lector_visits_f_infinitely(lector, word) != (ctx.infinite_color(word) <= c))
          suite.fail("lector-contract", "c=" + std::to_string(c) + " u=" + suite.w(u) +
                                            " v=" + suite.w(v));
      }
  }
}

}  // namespace

std::vector<Violation> run_property_suites(const SelftestBounds& bounds, const Limits& limits) {
  if (bounds.max_u < 1 || bounds.max_v < 1 || bounds.max_ext < 1 || bounds.max_rep < 1 ||
      bounds.brute_v < 1 || bounds.brute_z < 1 || bounds.brute_rep < 1)
    throw InputError("selftest: bounds must be >= 1");
  std::vector<Violation> out;
  for (const auto& [name, automaton] : fixtures::property_languages())
    run_language(name, automaton, bounds, limits, out);
  return out;
}

std::vector<Violation> run_injected_bug_check(const SelftestBounds& bounds) {
  std::vector<Violation> out;
  Fdfa gadget = fixtures::fdfa_unsaturated_gadget();
  auto counterexample = check_saturation_bounded(gadget, std::max(bounds.max_u, 1),
                                                 std::max(bounds.max_v, 2));
  if (!counterexample) {
    out.push_back({"unsaturated_gadget", "saturation-checker-detects-bug",
                   "no counterexample found"});
    return out;
  }
  const Alphabet sigma = gadget.leading.alphabet();
  out.push_back({"unsaturated_gadget", "saturation-violation",
                 "accepted as u=\"" + sigma.format(counterexample->accepted_as.spoke) + "\" v=\"" +
                     sigma.format(counterexample->accepted_as.cycle) + "\", rejected as u=\"" +
                     sigma.format(counterexample->rejected_as.spoke) + "\" v=\"" +
                     sigma.format(counterexample->rejected_as.cycle) + "\""});
  return out;
}

}  // namespace omegacanon
