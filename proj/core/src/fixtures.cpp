#include "omegacanon/fixtures.hpp"

namespace omegacanon {
namespace fixtures {

Alphabet ab() { return Alphabet({"a", "b"}); }

namespace {

AutomatonStructure structure_ab(int states, State initial, std::vector<std::vector<State>> delta) {
  return AutomatonStructure(ab(), states, initial, std::move(delta));
}

// Shared five-state backbone of the inf_aa_fin_bb automata:
// 0 -a-> 1, 0 -b-> 2, 1 -a-> 3, 1 -b-> 2, 2 -a-> 1, 2 -b-> 4,
// 3 -a-> 3, 3 -b-> 2, 4 -a-> 1, 4 -b-> 4.
AutomatonStructure inf_aa_fin_bb_structure() {
  return structure_ab(5, 0, {{1, 2}, {3, 2}, {1, 4}, {3, 2}, {1, 4}});
}

}  // namespace

OmegaAutomaton dma_inf_aa_fin_bb() {
  return OmegaAutomaton(inf_aa_fin_bb_structure(),
                        OmegaAcceptance::muller({{3}, {1, 2, 3}}, 5));
}

OmegaAutomaton dpa_inf_aa_fin_bb() {
  return OmegaAutomaton(inf_aa_fin_bb_structure(), OmegaAcceptance::parity({3, 3, 3, 2, 1}));
}

OmegaAutomaton dba_inf_aa() {
  // 0: no progress, 1: one a read, 2: "aa" just completed (accepting).
  return OmegaAutomaton(structure_ab(3, 0, {{1, 0}, {2, 0}, {2, 0}}),
                        OmegaAcceptance::buchi({2}, 3));
}

OmegaAutomaton dma_inf_aa() {
  // Same structure; the accepting inf-sets are exactly those containing
  // state 2.
  std::vector<std::vector<State>> alpha;
  for (unsigned mask = 1; mask < 8; ++mask) {
    if (!(mask >> 2 & 1)) continue;
    std::vector<State> f;
    for (State q = 0; q < 3; ++q)
      if (mask >> q & 1) f.push_back(q);
    alpha.push_back(std::move(f));
  }
  return OmegaAutomaton(structure_ab(3, 0, {{1, 0}, {2, 0}, {2, 0}}),
                        OmegaAcceptance::muller(std::move(alpha), 3));
}

OmegaAutomaton dpa_inf_b_even_b() {
  // 0: even number of b (stable), 1: odd, just read b, 2: odd (stable).
  // Reading b from an even state gives color 0, so infinitely many b
  // accept; otherwise the parity of the b-count decides.
  return OmegaAutomaton(structure_ab(3, 0, {{0, 1}, {2, 0}, {2, 0}}),
                        OmegaAcceptance::parity({0, 0, 1}));
}

OmegaAutomaton dba_all_words() {
  return OmegaAutomaton(structure_ab(1, 0, {{0, 0}}), OmegaAcceptance::buchi({0}, 1));
}

OmegaAutomaton dca_fin_a() {
  // 0: last letter b or none, 1: last letter a; finitely many a iff state 1
  // is visited finitely often.
  return OmegaAutomaton(structure_ab(2, 0, {{1, 0}, {1, 0}}), OmegaAcceptance::cobuchi({1}, 2));
}

OmegaAutomaton dca_fin_bb() {
  // 0: fresh, 1: one b read, 2: "bb" just completed.
  return OmegaAutomaton(structure_ab(3, 0, {{0, 1}, {0, 2}, {0, 2}}),
                        OmegaAcceptance::cobuchi({2}, 3));
}

OmegaAutomaton dba_prefix_a() {
  // 1 accepts everything, 2 rejects everything; the class of the empty
  // word is transient, which makes every period irrelevant for it.
  return OmegaAutomaton(structure_ab(3, 0, {{1, 2}, {1, 1}, {2, 2}}),
                        OmegaAcceptance::buchi({1}, 3));
}

namespace {

AutomatonStructure leading_parity_of_b() {
  // a self-loops, b toggles between the two classes.
  return structure_ab(2, 0, {{0, 1}, {1, 0}});
}

Dfa progress_three_state_even() {
  // 0 -a-> 1 (accepting), 0 -b-> 2; a preserves, b toggles between 1 and 2.
  return Dfa(structure_ab(3, 0, {{1, 2}, {1, 2}, {2, 1}}), {false, true, false});
}

Dfa progress_three_state_odd() {
  // 0 -a-> 1, 0 -b-> 2 (accepting sink).
  return Dfa(structure_ab(3, 0, {{1, 2}, {1, 2}, {2, 2}}), {false, false, true});
}

Dfa progress_four_state_even() {
  // aa reaches the accepting a-loop state 2; any b falls into the
  // accepting sink 3.
  return Dfa(structure_ab(4, 0, {{1, 3}, {2, 3}, {2, 3}, {3, 3}}), {false, false, true, true});
}

}  // namespace

Fdfa fdfa_n_inf_b_even_b() {
  return Fdfa(leading_parity_of_b(), {progress_three_state_even(), progress_three_state_odd()},
              AcceptanceMode::Normalized);
}

Fdfa fdfa_duo_inf_b_even_b() {
  return Fdfa(leading_parity_of_b(), {progress_four_state_even(), progress_three_state_odd()},
              AcceptanceMode::DuoNormalized);
}

Fdfa fdfa_n_inf_aa_fin_bb() {
  // States: 0 eps, 1 a, 2 b, 3 aa, 4 ab, 5 aab, 6 ba, 7 baa, 8 baab, 9 bb.
  AutomatonStructure progress = structure_ab(10, 0,
                                             {{1, 2},    // eps
                                              {3, 4},    // a
                                              {6, 9},    // b
                                              {3, 5},    // aa
                                              {1, 9},    // ab
                                              {3, 9},    // aab
                                              {7, 2},    // ba
                                              {7, 8},    // baa
                                              {7, 9},    // baab
                                              {9, 9}});  // bb
  std::vector<bool> accepting = {false, true, false, true, false, true, false, true, false, false};
  return Fdfa(structure_ab(1, 0, {{0, 0}}), {Dfa(std::move(progress), std::move(accepting))},
              AcceptanceMode::Normalized);
}

Fdfa fdfa_duo_inf_aa_fin_bb() {
  // States: 0 eps, 1 a, 2 b, 3 aa, 4 aab, 5 bb; colors 3 3 3 2 2 1.
  AutomatonStructure progress = structure_ab(6, 0,
                                             {{1, 2},    // eps
                                              {3, 2},    // a
                                              {1, 5},    // b
                                              {3, 4},    // aa
                                              {3, 5},    // aab
                                              {5, 5}});  // bb
  std::vector<bool> accepting = {false, false, false, true, true, false};
  return Fdfa(structure_ab(1, 0, {{0, 0}}), {Dfa(std::move(progress), std::move(accepting))},
              AcceptanceMode::DuoNormalized);
}

std::vector<int> fdfa_duo_inf_aa_fin_bb_colors() { return {3, 3, 3, 2, 2, 1}; }

Fdfa fdfa_duo_inf_aa() {
  // States: 0 eps, 1 a-loop (accepting), 2 b-region, 3 one a after b,
  // 4 accepting sink.
  AutomatonStructure progress = structure_ab(5, 0,
                                             {{1, 2},    // eps
                                              {1, 2},    // a
                                              {3, 2},    // after b
                                              {4, 2},    // ba
                                              {4, 4}});  // baa sink
  std::vector<bool> accepting = {false, true, false, false, true};
  return Fdfa(structure_ab(1, 0, {{0, 0}}), {Dfa(std::move(progress), std::move(accepting))},
              AcceptanceMode::DuoNormalized);
}

Fdfa fdfa_all_words() {
  return Fdfa(structure_ab(1, 0, {{0, 0}}),
              {Dfa(structure_ab(2, 0, {{1, 1}, {1, 1}}), {false, true})}, AcceptanceMode::Exact);
}

Fdfa fdfa_unsaturated_gadget() {
  // (eps, ab) reaches the accepting ab-loop, (a, ba) the rejecting
  // ba-loop; both are duo-normalized decompositions of (ab)^omega.
  // States: 0 init, 1 after a, 2 X (ab-loop, accepting), 3 Xa,
  // 4 after b, 5 Y (ba-loop), 6 Yb, 7 dead.
  AutomatonStructure progress = structure_ab(8, 0,
                                             {{1, 4},    // init
                                              {7, 2},    // a
                                              {3, 7},    // X
                                              {7, 2},    // Xa
                                              {5, 7},    // b
                                              {7, 6},    // Y
                                              {5, 7},    // Yb
                                              {7, 7}});  // dead
  std::vector<bool> accepting = {false, false, true, false, false, false, false, false};
  return Fdfa(structure_ab(1, 0, {{0, 0}}), {Dfa(std::move(progress), std::move(accepting))},
              AcceptanceMode::DuoNormalized);
}

std::vector<std::pair<std::string, OmegaAutomaton>> property_languages() {
  std::vector<std::pair<std::string, OmegaAutomaton>> out;
  out.emplace_back("inf_aa_fin_bb", dma_inf_aa_fin_bb());
  out.emplace_back("inf_aa", dba_inf_aa());
  out.emplace_back("inf_b_even_b", dpa_inf_b_even_b());
  out.emplace_back("all_words", dba_all_words());
  return out;
}

}  // namespace fixtures
}  // namespace omegacanon
