#pragma once

#include "symflat/types.hpp"

#include <string>
#include <vector>

namespace symflat {

enum class ReprKind {
    Leaf, // Bool / Int / Unnamed: no choice
    TupleNode,
    MatrixNode,
    SetOccurrence,
    SetExplicit,
    SetExplicitVarSizeMarker,
    SetExplicitVarSizeFlags,
    SetExplicitVarSizeDummy,
    MSetOccurrence,
    MSetExplicitWithRepetition,
    MSetExplicitFlags,
    FunctionAsMatrix,
    FunctionAsMatrixPartial,
    FunctionAsMatrixDummy,
    FunctionAsRelation,
    RelationAsMatrix,
    RelationAsSet,
    PartitionOccurrence,
    PartitionAsSet,
    SequenceExplicitBounded,
};

// Representation choice at every node of a TypeExpr. Children:
//   TupleNode                - one per component
//   MatrixNode               - {element}
//   Set/MSet explicit family - {element}
//   FunctionAsMatrix/Partial - {to}
//   FunctionAsRelation       - {repr of relation (from * to)}
//   RelationAsSet            - {repr of set of tuple (comps)}
//   PartitionAsSet           - {repr of set of set of from}
//   SequenceExplicitBounded  - {element}
// Occurrence/AsMatrix/Dummy leaves carry no children.
struct ReprTree {
    ReprKind kind = ReprKind::Leaf;
    std::vector<ReprTree> children;

    static ReprTree leaf() { return {}; }
    static ReprTree node(ReprKind k, std::vector<ReprTree> cs = {}) { return {k, std::move(cs)}; }
};

const char* repr_name(ReprKind k);

// Checks r against t; throws InvalidRepr on mismatch (attribute
// requirements, index-type requirements, dummy-value requirements).
void validate_repr(const Type& t, const ReprTree& r);

// Default choice: outermost set-like layers refine to sorted explicit forms,
// inner set-like layers over index-type elements to occurrence vectors.
ReprTree default_repr(const Type& t);

// The synthesized set-like type a delegating node refines through.
Type function_as_relation_type(const Type& t);
Type relation_as_set_type(const Type& t);
Type partition_as_set_type(const Type& t);

// Textual form, e.g. "set:Explicit(set:Occurrence)". Children whose subtree
// is fully concrete may be omitted.
ReprTree parse_repr(const std::string& spec, const Type& t);
std::string to_string(const ReprTree& r, const Type& t);

// True when every node of the tree is occurrence-style, so the delayed
// condition holds with equality.
bool pure_occurrence(const Type& t, const ReprTree& r);

} // namespace symflat
