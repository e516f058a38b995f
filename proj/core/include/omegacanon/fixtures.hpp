#pragma once

#include "omegacanon/fdfa.hpp"
#include "omegacanon/omega.hpp"

namespace omegacanon {
namespace fixtures {

// The bundled desk-scale machines used by the self-test suites.  Names
// describe the recognized language:
//   inf_aa_fin_bb   infinitely many "aa" and finitely many "bb"
//   inf_aa          infinitely many "aa"
//   inf_b_even_b    infinitely many b, or an even number of b followed by a^w
//   all_words       Sigma^omega
//   fin_a           finitely many a
//   fin_bb          finitely many "bb"
//   prefix_a        words starting with a

Alphabet ab();

OmegaAutomaton dma_inf_aa_fin_bb();
OmegaAutomaton dpa_inf_aa_fin_bb();
OmegaAutomaton dba_inf_aa();
/// Muller automaton on the same structure as dba_inf_aa (alternate source
/// for canonicity checks).
OmegaAutomaton dma_inf_aa();
OmegaAutomaton dpa_inf_b_even_b();
OmegaAutomaton dba_all_words();
OmegaAutomaton dca_fin_a();
OmegaAutomaton dca_fin_bb();
OmegaAutomaton dba_prefix_a();

/// Two-state leading automaton with three-state progress DFAs, normalized
/// acceptance; recognizes inf_b_even_b.
Fdfa fdfa_n_inf_b_even_b();
/// Same language under duo-normalized acceptance with a four-state
/// progress DFA for the even class.
Fdfa fdfa_duo_inf_b_even_b();
/// Ten-state progress DFA under normalized acceptance for inf_aa_fin_bb.
Fdfa fdfa_n_inf_aa_fin_bb();
/// Six-state color-quotient progress DFA under duo-normalized acceptance
/// for inf_aa_fin_bb, with its expected state colors.
Fdfa fdfa_duo_inf_aa_fin_bb();
std::vector<int> fdfa_duo_inf_aa_fin_bb_colors();
/// Five-state progress DFA under duo-normalized acceptance for inf_aa.
Fdfa fdfa_duo_inf_aa();
/// One accepting-sink progress DFA for all_words (exact acceptance).
Fdfa fdfa_all_words();
/// A deliberately unsaturated FDFA: two duo-normalized decompositions of
/// (ab)^omega disagree on membership.
Fdfa fdfa_unsaturated_gadget();

/// The four fixture languages of the property suites.
std::vector<std::pair<std::string, OmegaAutomaton>> property_languages();

}  // namespace fixtures
}  // namespace omegacanon
