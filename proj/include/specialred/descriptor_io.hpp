#pragma once

// JSON documents: group descriptors (format version 1), lattices, diagonal
// form specs and classification reports.
//
// Descriptor layout:
//   {"v": 1, "kind": "torus" | "semisimple" | "inner" | "quasisplit" |
//    "general", ...kind-specific fields}
// Groups are {"cyclic": n} or {"degree": n, "generators": [[perm], ...]}.
// A lattice or torus is {"galois": group, "rank": r, "action": [matrix per
// generator]} with matrices in the row convention.

#include <string>
#include <string_view>

#include "json.hpp"
#include "specialred/groups.hpp"
#include "specialred/laurent_forms.hpp"
#include "specialred/reductive.hpp"

namespace specialred::io {

using nlohmann::json;

/// Throws ParseError (malformed JSON, with line and column) or
/// ValidationError (well-formed JSON that is not a valid descriptor, with a
/// JSON-pointer path). No other exception escapes.
GroupDescriptor parse_descriptor(std::string_view text,
                                 const Limits& limits = {});

json descriptor_to_json(const GroupDescriptor& desc);
std::string serialize_descriptor(const GroupDescriptor& desc);

/// Same error contract as parse_descriptor.
json parse_json(std::string_view text);

FiniteGroup group_from_json(const json& j, const std::string& path,
                            const Limits& limits);
json group_to_json(const FiniteGroup& g);

GLattice lattice_from_json(const json& j, const std::string& path,
                           const Limits& limits);
json lattice_to_json(const GLattice& m);

IntMatrix matrix_from_json(const json& j, const std::string& path);
json matrix_to_json(const IntMatrix& m);
json integer_to_json(const Integer& v);
json vector_to_json(const IntVector& v);

forms::DiagonalFormSpec form_spec_from_json(const json& j);

json invariants_to_json(const AbelianInvariants& inv);
json subgroup_to_json(const Subgroup& h);

json report_to_json(const ClassificationReport& report, double elapsed_ms,
                    bool include_notes);

}  // namespace specialred::io
