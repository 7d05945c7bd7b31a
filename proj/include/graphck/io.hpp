#pragma once

#include <string>

#include "graphck/canonical.hpp"
#include "graphck/corners.hpp"
#include "graphck/ideals.hpp"
#include "graphck/ktheory.hpp"
#include "graphck/projcalc.hpp"
#include "graphck/serialize.hpp"

namespace graphck {

// [{"v": "a", "T": [["a", "b", 0]], "n": 2}, ...]
json to_json(const CoefficientSystem& c);
CoefficientSystem system_from_json(const json& j);

// {"head": [<system>, ...], "tail": <system>}; "tail" may be absent.
json to_json(const ProjectionSequence& s);
ProjectionSequence sequence_from_json(const json& j);

// {"a": 3, "b": "inf"}
json to_json(const MultiplicityVector& m);
MultiplicityVector multiplicities_from_json(const json& j);

// {"base": <graph>, "heads": {"a": "inf", "b": 2}}
json to_json(const CornerGraph& cg);
CornerGraph corner_from_json(const json& j);

json to_json(const KTheoryPair& k);
json to_json(const K0Class& c);
json to_json(const VertexClass& c);
json to_json(const StablyCompleteReport& r);
json to_json(const IdealLattice& l);

/// One edge per vertex pair, labelled with its multiplicity or "∞".
std::string to_dot(const Graph& g, const std::string& name = "G");
/// Hasse diagram of the lattice.
std::string to_dot(const IdealLattice& l);

json read_json_file(const std::string& path);

} // namespace graphck
