#ifndef WIRETAP_SERIALIZE_HPP
#define WIRETAP_SERIALIZE_HPP

#include <optional>
#include <string>

#include "wiretap/gamesim.hpp"
#include "wiretap/regions.hpp"

// JSON interchange: system descriptions consumed by the CLI and the
// codebook document produced by the simulator.

namespace wiretap {

// Parameters of the binary-symmetric/Hamming shorthand block.
struct BscShorthand {
  double p = 0.5;
  double p1 = 0.0;
  double p2 = 0.3;
};

struct LoadedSpec {
  SystemSpec spec;
  std::optional<BscShorthand> bsc;  // present when the shorthand was used
};

// Accepts either explicit tables
//   {"source": [...], "channel_y": [[...]], "channel_z": [[...]],
//    "value": [[...]]}
// or the shorthand {"bsc": {"p": .., "p1": .., "p2": .., "hamming": true}}.
LoadedSpec load_spec_json(const std::string& text);
LoadedSpec load_spec_file(const std::string& path);

SystemSpec make_bsc_hamming_spec(const BscShorthand& bsc);

// Codebook document: {n, alphabets, seed, rate_pair, encoder_kind,
// satellite_redraw, randomization, tables{...}}. Probabilities round-trip
// exactly.
std::string codebook_to_json(const BlockCode& code);
BlockCode codebook_from_json(const std::string& text);

}  // namespace wiretap

#endif  // WIRETAP_SERIALIZE_HPP
