#pragma once

#include <array>
#include <compare>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ploi {

using PropertyId = int;
using ObjectId = int;

// A predicate (or object type, represented as a unary predicate).
struct PropertySchema {
    std::string name;
    int arity = 1; // 1 or 2
    bool is_type = false;
    bool operator==(const PropertySchema&) const = default;
};

// Atom over action parameters; params are indices into ActionSchema::params.
struct SchemaAtom {
    PropertyId pred = -1;
    std::array<int, 2> params{-1, -1};
    bool operator==(const SchemaAtom&) const = default;
};

struct SchemaLiteral {
    SchemaAtom atom;
    bool positive = true;
    bool operator==(const SchemaLiteral&) const = default;
};

struct ActionParameter {
    std::string name; // includes the leading '?'
    PropertyId type = -1;
    bool operator==(const ActionParameter&) const = default;
};

struct ActionSchema {
    std::string name;
    std::vector<ActionParameter> params;
    std::vector<SchemaLiteral> preconditions;
    std::vector<SchemaAtom> add_effects;
    std::vector<SchemaAtom> delete_effects;
    bool operator==(const ActionSchema&) const = default;
};

struct DomainModel {
    std::string name;
    std::vector<PropertySchema> properties; // declaration order; includes type properties
    std::vector<ActionSchema> actions;      // declaration order

    PropertyId property_id(std::string_view name) const;
    const PropertySchema& property(PropertyId id) const { return properties.at(id); }
    bool operator==(const DomainModel&) const = default;
};

// Ground atom: property applied to one or two objects. Unused slots stay -1 so
// the default ordering is total.
struct GroundAtom {
    PropertyId pred = -1;
    std::array<ObjectId, 2> args{-1, -1};
    auto operator<=>(const GroundAtom&) const = default;
};

inline GroundAtom atom1(PropertyId p, ObjectId a) { return GroundAtom{p, {a, -1}}; }
inline GroundAtom atom2(PropertyId p, ObjectId a, ObjectId b) { return GroundAtom{p, {a, b}}; }

// Set of true ground atoms, closed-world: anything absent is false.
class State {
public:
    State() = default;
    explicit State(std::vector<GroundAtom> atoms);

    bool contains(const GroundAtom& a) const;
    void insert(const GroundAtom& a);
    void erase(const GroundAtom& a);
    std::size_t size() const { return atoms_.size(); }
    const std::vector<GroundAtom>& atoms() const { return atoms_; }

    bool operator==(const State&) const = default;

private:
    std::vector<GroundAtom> atoms_; // sorted, unique
};

struct GoalLiteral {
    GroundAtom atom;
    bool positive = true;
    auto operator<=>(const GoalLiteral&) const = default;
};

// Partial assignment; throws on contradictory literals.
class Goal {
public:
    Goal() = default;
    explicit Goal(std::vector<GoalLiteral> literals);

    const std::vector<GoalLiteral>& literals() const { return literals_; }
    bool empty() const { return literals_.empty(); }

    bool operator==(const Goal&) const = default;

private:
    std::vector<GoalLiteral> literals_; // sorted, unique
};

struct PddlObject {
    std::string name;
    PropertyId type = -1;
    bool operator==(const PddlObject&) const = default;
};

struct Problem {
    std::string name;
    std::shared_ptr<const DomainModel> domain;
    std::vector<PddlObject> objects; // sorted by name; ObjectId = index
    State init;                      // includes one type atom per object
    Goal goal;

    ObjectId object_id(std::string_view name) const; // -1 if missing
    const std::string& object_name(ObjectId id) const { return objects.at(id).name; }

    // Structural equality (compares the pointed-to domain, not the pointer).
    bool equals(const Problem& other) const;
};

struct GroundAction {
    int schema = -1; // index into DomainModel::actions
    std::vector<ObjectId> args;
    auto operator<=>(const GroundAction&) const = default;
};

struct Plan {
    std::vector<GroundAction> steps;
    bool operator==(const Plan&) const = default;
};

// All type-consistent instantiations of every schema, ordered by schema name
// and then lexicographically by argument tuple.
std::vector<GroundAction> ground_actions(const Problem& problem);

bool applicable(const Problem& problem, const State& state, const GroundAction& action);

// Successor state (state minus delete effects, plus add effects).
// Throws std::invalid_argument if the action is not applicable.
State apply(const Problem& problem, const State& state, const GroundAction& action);

bool holds(const State& state, const Goal& goal);

std::string to_string(const Problem& problem, const GroundAtom& atom);
std::string to_string(const Problem& problem, const GroundAction& action);

} // namespace ploi
