#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "qg/cauchy.hpp"
#include "qg/io.hpp"
#include "qg/solver.hpp"

namespace qg {

Json balance_json(const Balance& b);
Json classification_json(const Classification& c);

// seeded helpers shared by the CLI and the acceptance suite
std::vector<Rat> seeded_path_data(const Path& p, RatRng& rng);
// connected walk along edges (vertices may repeat)
Path sample_walk(const Quadgraph& g, std::mt19937_64& eng, int steps);

// canned experiment per fixture name; deterministic for a fixed seed
Json repro_report(const std::string& name, std::uint64_t seed);

}  // namespace qg
