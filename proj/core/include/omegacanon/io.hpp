#pragma once

#include <string>

#include "omegacanon/colors.hpp"
#include "omegacanon/fdfa.hpp"
#include "omegacanon/omega.hpp"

namespace omegacanon {

// JSON document formats.  Loading validates the schema and every structural
// invariant; saving is deterministic and byte-stable, so load(save(x)) == x
// and repeated saves are identical.
//
// automaton: {alphabet:[sym], states:int, initial:int,
//             delta:[[int per symbol] per state],
//             acceptance:{kind:"buchi"|"cobuchi"|"parity"|"muller", data:...}}
// fdfa:      {leading:{alphabet, states, initial, delta},
//             progress:{"0":{states, initial, delta, accepting:[int]}, ...},
//             mode:"exact"|"normalized"|"duo"}
// upword:    {u:"...", v:"..."} over single-character symbols.

std::string save_automaton(const OmegaAutomaton& m);
OmegaAutomaton load_automaton(const std::string& json_text);

std::string save_fdfa(const Fdfa& f);
Fdfa load_fdfa(const std::string& json_text);

std::string save_upword(const UPWord& w, const Alphabet& sigma);
UPWord load_upword(const std::string& json_text, const Alphabet& sigma);

/// Whether a JSON document holds an FDFA (has a "leading" key) as opposed
/// to an automaton.
bool looks_like_fdfa(const std::string& json_text);

std::string automaton_to_dot(const OmegaAutomaton& m);
std::string fdfa_to_dot(const Fdfa& f);
std::string colorful_to_dot(const ColorfulFdfa& f);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace omegacanon
