#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qflab/quad_form.hpp"

namespace qflab {

/// Two classes of one genus plus the auxiliary lattices used to compare them.
struct GenusPair {
    std::string name;
    QuadForm primary;
    QuadForm mate;
    std::map<std::string, QuadForm> auxiliaries;
};

struct ClassifiedForm {
    std::array<i64, 4> diagonal{};
    std::string group; // empty for the non-regular entries
    bool expected_regular = true;

    QuadForm form() const;
};

struct NamedLattice {
    QuadForm form;
    std::string role;
    i64 recorded_discriminant = 0;
};

struct ClassificationGroup {
    std::string id;
    std::string label;
};

/// Bundled constants, parsed once from data/lattices.json (compiled in).
struct LatticeData {
    int version = 0;
    std::vector<ClassificationGroup> groups;
    std::vector<ClassifiedForm> classification; // regular forms in group order, then the non-regular ones
    std::map<std::string, NamedLattice> lattices;
    std::vector<GenusPair> genus_pairs;

    const GenusPair& genus_pair(std::string_view name) const;
    const QuadForm& lattice(std::string_view name) const;
};

const LatticeData& lattice_data();

/// Parses a document in the bundled format; exposed for tests.
LatticeData parse_lattice_data(const std::string& json_text);

} // namespace qflab
