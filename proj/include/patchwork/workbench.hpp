#pragma once

#include <patchwork/error.hpp>
#include <patchwork/graph_of_groups.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace patchwork {

/// cyclic(n), symmetric(n), dihedral(n), trivial, or products "A x B".
auto make_group(const std::string & descriptor) -> FiniteGroup;

/// Raised by parse_input with every problem found, each prefixed by its path.
class InputError : public Error
{
public:
    explicit InputError(std::vector<std::string> problems);
    auto problems() const -> const std::vector<std::string> & { return problems_; }

private:
    std::vector<std::string> problems_;
};

struct WorkbenchInput
{
    int version = 0;
    std::map<std::string, GroupPtr> groups;
    std::optional<GraphSpec> graph;
    std::vector<GroupPtr> vertex_groups;
    std::vector<GroupPtr> edge_groups;
    std::vector<std::vector<Element>> to_point;      ///< edge-group element -> point-end element
    std::vector<std::vector<Element>> to_component;
    nlohmann::json descent = nlohmann::json::object();
    nlohmann::json options = nlohmann::json::object();
    std::vector<std::string> warnings;
    std::string digest;                              ///< SHA-256 of the raw document
};

auto parse_input(const std::string & document) -> WorkbenchInput;

/// Resolve a group by name from the input or as a descriptor.
auto resolve_group(const WorkbenchInput & input, const std::string & name_or_descriptor) -> GroupPtr;

auto build_graph(const WorkbenchInput & input) -> ReductionGraph;
auto build_graph_of_groups(const WorkbenchInput & input, EdgeMapMode mode) -> GraphOfGroups;

struct Flags
{
    std::optional<std::string> group;
    std::optional<long> degree;
    std::optional<long> support_bound;
    std::optional<long> truncation;
    std::optional<long> search_bound;
    bool all_trees = false;
    bool permissive = false;
    std::optional<std::string> dot_path;
};

enum class Status { pass, fail, inconclusive, input_error };

auto exit_code(Status s) -> int;

struct VerdictEntry
{
    std::string tag;      ///< which statement the verdict instantiates
    std::string verdict;  ///< PASS, FAIL, DESCENDS, OBSTRUCTED-within-bounds, ...
    std::string detail;
};

struct Report
{
    std::string command;
    std::string input_digest;
    Status status = Status::pass;
    std::vector<VerdictEntry> verdicts;
    std::vector<std::string> lines;          ///< human-readable body
    nlohmann::json data = nlohmann::json::object();
    std::vector<std::string> warnings;
    double elapsed_ms = 0;

    /// machine block without timing
    auto deterministic_json() const -> nlohmann::json;
    /// SHA-256 of the deterministic block
    auto digest() const -> std::string;
    auto render() const -> std::string;
};

auto sha256_hex(const std::string & bytes) -> std::string;

auto known_commands() -> const std::vector<std::string> &;

/// Dispatch; input errors inside a command become Status::input_error.
auto run(const std::string & command, const WorkbenchInput & input, const Flags & flags) -> Report;

/// Parse and run; a document that fails to parse gives an input-error report.
auto run_document(const std::string & command, const std::string & document, const Flags & flags) -> Report;

} // namespace patchwork
