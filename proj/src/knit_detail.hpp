#pragma once

// Helpers shared by the knitting and tilting sources.

#include <optional>
#include <vector>

#include "arknit/knit.hpp"

namespace arknit::detail {

/// The tag of a zigzag A/D family with even sources and unprefixed integer vertices.
std::optional<FamilyTag> zigzag_family(const QuiverSpec& spec);
bool family_source(FamilyTag family, const VertexId& x);
/// Two quantities that never decrease along arrows of ZQ^op for a zigzag family.
std::vector<long> family_potentials(FamilyTag family, long n, const VertexId& x);

}  // namespace arknit::detail
