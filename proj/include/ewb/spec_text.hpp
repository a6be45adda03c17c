#ifndef EWB_SPEC_TEXT_HPP
#define EWB_SPEC_TEXT_HPP

#include "ewb/group.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ewb {

/// Line-oriented group description:
///   group <name>
///   kind permutation degree <d>   |   kind table order <n>
///   gen <name> = (1 2 3)(4 5)     |   gen <name> = <n ids: left-mult row>
///   end
/// Cycle points are 1-based; the identity permutation is written "()".
struct GroupSpecAst {
    enum class Kind { Permutation, Table };

    struct Gen {
        std::string name;
        std::vector<std::vector<int>> cycles; // 0-based points (permutation kind)
        std::vector<int> row;                 // left-multiplication row (table kind)
        int line = 0;
    };

    std::string name;
    Kind kind = Kind::Permutation;
    int degree = 0;
    int order = 0;
    std::vector<Gen> gens;
};

GroupSpecAst parse_group_spec(const std::string& text);
std::string print_group_spec(const GroupSpecAst& ast); // canonical form

/// Builds and validates the group the spec describes. Ids are assigned by
/// breadth-first closure from the generators in generator order.
GroupPtr realize_group(const GroupSpecAst& ast, int cap = kDefaultOrderCap,
                       uint64_t seed = kDefaultSeed);
GroupPtr load_group(const std::string& text, int cap = kDefaultOrderCap,
                    uint64_t seed = kDefaultSeed);

/// Automorphism assignment:
///   action <name> on <group>
///   actor <groupname>
///   auto <a-gen>: <g-gen> -> <word>, <g-gen> -> <word>, ...
///   end
/// Words multiply generator powers left to right, e.g. "u^-1 v u^2".
/// Actor generators without an auto line act as the identity.
struct ActionSpecAst {
    struct Word {
        std::vector<std::pair<std::string, int>> factors; // (generator name, exponent)
    };
    struct AutoLine {
        std::string actor_gen;
        std::vector<std::pair<std::string, Word>> images;
        int line = 0;
    };

    std::string name;
    std::string group_name;
    std::string actor_name;
    std::vector<AutoLine> autos;
};

ActionSpecAst parse_action_spec(const std::string& text);
std::string print_action_spec(const ActionSpecAst& ast);

/// Parses a cycle expression like "(1 2 3)(4 5)" into a 0-based permutation
/// of the given degree. Used for --element lookups.
std::vector<int> parse_cycles(const std::string& text, int degree);

} // namespace ewb

#endif
