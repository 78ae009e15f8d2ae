#include "plancol/errors.hpp"

namespace plancol {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::asymmetric_adjacency: return "AsymmetricAdjacency";
    case Errc::duplicate_neighbor: return "DuplicateNeighbor";
    case Errc::self_loop: return "SelfLoop";
    case Errc::non_spherical: return "NonSpherical";
    case Errc::disconnected_graph: return "DisconnectedGraph";
    case Errc::empty_set: return "EmptySet";
    case Errc::not_a_cycle: return "NotACycle";
    case Errc::adjacent_pair: return "AdjacentPair";
    case Errc::improper_coloring: return "ImproperColoring";
    case Errc::partial_coloring: return "PartialColoring";
    case Errc::non_cycle_face: return "NonCycleFace";
    case Errc::bad_dimensions: return "BadDimensions";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::no_merge_available: return "NoMergeAvailable";
    case Errc::winding_too_large: return "WindingTooLarge";
    case Errc::winding_mismatch: return "WindingMismatch";
    case Errc::family_too_close: return "FamilyTooClose";
    case Errc::not_length4: return "NotLength4";
    case Errc::infeasible_constraint: return "InfeasibleConstraint";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace plancol
