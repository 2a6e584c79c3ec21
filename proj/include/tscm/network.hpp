#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "tscm/common.hpp"
#include "tscm/kernels.hpp"

namespace tscm {

struct AttributeSpec {
    std::string name;
    AttributeKind kind = AttributeKind::numerical;
    /// Label domain; only used by categorical attributes.
    std::vector<std::string> categories;
};

struct Numerical {
    double value;
    friend bool operator==(const Numerical&, const Numerical&) = default;
};
struct Binary {
    bool value;
    friend bool operator==(const Binary&, const Binary&) = default;
};
struct Categorical {
    std::uint32_t label;
    friend bool operator==(const Categorical&, const Categorical&) = default;
};

/// Tagged attribute value. Numerical values are raw (unnormalized).
using AttributeValue = std::variant<Numerical, Binary, Categorical>;

std::string_view kind_token(AttributeKind kind);
std::optional<AttributeKind> parse_kind_token(std::string_view token);

/// Undirected simple graph with typed node attributes. Immutable once built;
/// safe to share across threads.
///
/// Attribute "codes" are what the distance kernels consume: the min-max
/// normalized value for numerical attributes, 0/1 for binary ones and the
/// label index for categorical ones.
class AttributedNetwork {
  public:
    std::size_t node_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t attribute_count() const { return specs_.size(); }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
    /// Position of u in neighbors(v), if adjacent.
    std::optional<std::size_t> neighbor_slot(NodeId v, NodeId u) const;
    bool has_edge(NodeId v, NodeId u) const { return neighbor_slot(v, u).has_value(); }
    /// Edges with first < second, sorted.
    std::span<const Edge> edges() const { return edges_; }
    /// CSR offset of v's neighbor list; slot k of v is entry offset(v) + k.
    std::size_t adjacency_offset(NodeId v) const { return offsets_[v]; }

    const std::vector<AttributeSpec>& attributes() const { return specs_; }
    const kernels::DiffLayout& layout() const { return layout_; }

    /// Kernel codes of node v (length r).
    std::span<const double> codes(NodeId v) const {
        return {codes_.data() + v * specs_.size(), specs_.size()};
    }
    AttributeValue value(NodeId v, std::size_t t) const;
    /// Normalized value of a numerical attribute.
    double normalized(NodeId v, std::size_t t) const { return codes_[v * specs_.size() + t]; }

    const std::string& id(NodeId v) const { return ids_[v]; }
    std::optional<NodeId> find(std::string_view id) const;
    /// Like find() but throws InputError naming the ID.
    NodeId require(std::string_view id) const;

    std::size_t dropped_self_loops() const { return dropped_self_loops_; }
    std::size_t dropped_duplicates() const { return dropped_duplicates_; }

  private:
    friend class NetworkBuilder;

    std::vector<std::string> ids_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<AttributeSpec> specs_;
    kernels::DiffLayout layout_;
    std::vector<double> codes_;
    std::vector<double> raw_;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> adjacency_;
    std::vector<Edge> edges_;
    std::size_t dropped_self_loops_ = 0;
    std::size_t dropped_duplicates_ = 0;
};

class NetworkBuilder {
  public:
    explicit NetworkBuilder(std::vector<AttributeSpec> attributes);

    /// Index of a categorical label, added to the domain if new.
    std::uint32_t intern_category(std::size_t attribute, std::string_view label);

    NodeId add_node(std::string id, std::span<const AttributeValue> values);
    void add_edge(NodeId a, NodeId b);

    std::optional<NodeId> find(std::string_view id) const;
    std::size_t node_count() const { return ids_.size(); }

    /// Drops self-loops and duplicate edges (counted), normalizes numerical
    /// attributes over all nodes.
    AttributedNetwork build() &&;

  private:
    std::vector<AttributeSpec> specs_;
    std::vector<std::unordered_map<std::string, std::uint32_t>> category_index_;
    std::vector<std::string> ids_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<double> raw_;
    std::vector<Edge> edges_;
    std::size_t self_loops_ = 0;
};

/// Signed numerical difference or 0/1 mismatch indicator, see kernels.hpp.
double attribute_diff(const AttributedNetwork& net, std::size_t t, NodeId v, NodeId u);

// File formats.
//
// Edge list: one "<idA> <idB>" per line (whitespace separated), '#' comments.
// Attributes (TSV): line 1 names, line 2 kinds (num|bin|cat), then
// "<nodeID>\t<v1>\t...\t<vr>". Header lines may carry a leading label cell
// for the ID column; files written here always do ("node", "kind").

AttributedNetwork read_network(std::istream& edges, std::istream& attributes,
                               std::string_view edges_name = "<edges>",
                               std::string_view attributes_name = "<attributes>");
AttributedNetwork load_network(const std::filesystem::path& graph_path,
                               const std::filesystem::path& attrs_path);

void write_edge_list(const AttributedNetwork& net, std::ostream& out);
void write_attributes(const AttributedNetwork& net, std::ostream& out);
void save_network(const AttributedNetwork& net, const std::filesystem::path& graph_path,
                  const std::filesystem::path& attrs_path);

/// Shortest round-trip text form of a double.
std::string format_double(double value);

}  // namespace tscm
