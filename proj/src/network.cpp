#include "tscm/network.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "tscm/log.hpp"

namespace tscm {

std::string_view kind_token(AttributeKind kind) {
    switch (kind) {
        case AttributeKind::numerical: return "num";
        case AttributeKind::binary: return "bin";
        case AttributeKind::categorical: return "cat";
    }
    return "?";
}

std::optional<AttributeKind> parse_kind_token(std::string_view token) {
    if (token == "num") return AttributeKind::numerical;
    if (token == "bin") return AttributeKind::binary;
    if (token == "cat") return AttributeKind::categorical;
    return std::nullopt;
}

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

// --- AttributedNetwork -------------------------------------------------------

std::optional<std::size_t> AttributedNetwork::neighbor_slot(NodeId v, NodeId u) const {
    const auto nbrs = neighbors(v);
    const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), u);
    if (it == nbrs.end() || *it != u) return std::nullopt;
    return static_cast<std::size_t>(it - nbrs.begin());
}

AttributeValue AttributedNetwork::value(NodeId v, std::size_t t) const {
    const double raw = raw_[v * specs_.size() + t];
    switch (specs_[t].kind) {
        case AttributeKind::numerical: return Numerical{raw};
        case AttributeKind::binary: return Binary{raw == 1.0};
        case AttributeKind::categorical: return Categorical{static_cast<std::uint32_t>(raw)};
    }
    return Numerical{raw};
}

std::optional<NodeId> AttributedNetwork::find(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

NodeId AttributedNetwork::require(std::string_view id) const {
    if (auto v = find(id)) return *v;
    throw InputError("unknown node ID '" + std::string(id) + "'");
}

// --- NetworkBuilder ----------------------------------------------------------

NetworkBuilder::NetworkBuilder(std::vector<AttributeSpec> attributes)
    : specs_(std::move(attributes)), category_index_(specs_.size()) {
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t t = 0; t < specs_.size(); ++t) {
        if (!seen.emplace(specs_[t].name, t).second)
            throw InputError("duplicate attribute name '" + specs_[t].name + "'");
        for (std::size_t c = 0; c < specs_[t].categories.size(); ++c)
            category_index_[t].emplace(specs_[t].categories[c], static_cast<std::uint32_t>(c));
    }
}

std::uint32_t NetworkBuilder::intern_category(std::size_t attribute, std::string_view label) {
    auto& index = category_index_.at(attribute);
    const auto [it, inserted] =
        index.emplace(std::string(label), static_cast<std::uint32_t>(index.size()));
    if (inserted) specs_[attribute].categories.emplace_back(label);
    return it->second;
}

NodeId NetworkBuilder::add_node(std::string id, std::span<const AttributeValue> values) {
    if (values.size() != specs_.size())
        throw InputError("node '" + id + "' has " + std::to_string(values.size()) +
                         " attribute values, expected " + std::to_string(specs_.size()));
    for (std::size_t t = 0; t < specs_.size(); ++t) {
        const AttributeValue& value = values[t];
        const AttributeSpec& spec = specs_[t];
        bool ok = false;
        double code = 0.0;
        switch (spec.kind) {
            case AttributeKind::numerical:
                if (auto* x = std::get_if<Numerical>(&value)) {
                    ok = std::isfinite(x->value);
                    code = x->value;
                }
                break;
            case AttributeKind::binary:
                if (auto* x = std::get_if<Binary>(&value)) {
                    ok = true;
                    code = x->value ? 1.0 : 0.0;
                }
                break;
            case AttributeKind::categorical:
                if (auto* x = std::get_if<Categorical>(&value)) {
                    ok = x->label < spec.categories.size();
                    code = static_cast<double>(x->label);
                }
                break;
        }
        if (!ok)
            throw InputError("node '" + id + "': value for attribute '" + spec.name +
                             "' does not match kind " + std::string(kind_token(spec.kind)));
        raw_.push_back(code);
    }
    const auto v = static_cast<NodeId>(ids_.size());
    if (!index_.emplace(id, v).second) {
        raw_.resize(raw_.size() - specs_.size());
        throw InputError("duplicate node ID '" + id + "'");
    }
    ids_.push_back(std::move(id));
    return v;
}

void NetworkBuilder::add_edge(NodeId a, NodeId b) {
    if (a >= ids_.size() || b >= ids_.size()) throw InputError("edge endpoint out of range");
    if (a == b) {
        ++self_loops_;
        return;
    }
    edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
}

std::optional<NodeId> NetworkBuilder::find(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

AttributedNetwork NetworkBuilder::build() && {
    AttributedNetwork net;
    const std::size_t n = ids_.size();
    const std::size_t r = specs_.size();

    std::sort(edges_.begin(), edges_.end());
    const std::size_t before = edges_.size();
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    net.dropped_duplicates_ = before - edges_.size();
    net.dropped_self_loops_ = self_loops_;
    if (net.dropped_duplicates_ + net.dropped_self_loops_ > 0)
        log::warn("dropped " + std::to_string(net.dropped_self_loops_) + " self-loop(s) and " +
                  std::to_string(net.dropped_duplicates_) + " duplicate edge(s)");

    std::vector<std::size_t> degree(n, 0);
    for (const Edge& e : edges_) {
        ++degree[e.first];
        ++degree[e.second];
    }
    net.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) net.offsets_[v + 1] = net.offsets_[v] + degree[v];
    net.adjacency_.resize(net.offsets_[n]);
    std::vector<std::size_t> cursor(net.offsets_.begin(), net.offsets_.end() - 1);
    for (const Edge& e : edges_) {
        net.adjacency_[cursor[e.first]++] = e.second;
        net.adjacency_[cursor[e.second]++] = e.first;
    }
    for (std::size_t v = 0; v < n; ++v)
        std::sort(net.adjacency_.begin() + static_cast<std::ptrdiff_t>(net.offsets_[v]),
                  net.adjacency_.begin() + static_cast<std::ptrdiff_t>(net.offsets_[v + 1]));

    net.codes_ = raw_;
    for (std::size_t t = 0; t < r; ++t) {
        if (specs_[t].kind != AttributeKind::numerical || n == 0) continue;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (std::size_t v = 0; v < n; ++v) {
            lo = std::min(lo, raw_[v * r + t]);
            hi = std::max(hi, raw_[v * r + t]);
        }
        const double span = hi - lo;
        for (std::size_t v = 0; v < n; ++v)
            net.codes_[v * r + t] = span > 0.0 ? (raw_[v * r + t] - lo) / span : 0.0;
    }

    std::vector<AttributeKind> kinds;
    for (const auto& spec : specs_) kinds.push_back(spec.kind);
    net.layout_ = kernels::DiffLayout(kinds);
    net.specs_ = std::move(specs_);
    net.raw_ = std::move(raw_);
    net.ids_ = std::move(ids_);
    net.index_ = std::move(index_);
    net.edges_ = std::move(edges_);
    return net;
}

double attribute_diff(const AttributedNetwork& net, std::size_t t, NodeId v, NodeId u) {
    return kernels::attribute_difference(net.attributes()[t].kind, net.codes(v)[t],
                                         net.codes(u)[t]);
}

// --- Text formats --------------------------------------------------------------

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
        if (tab == std::string_view::npos) break;
        start = tab + 1;
    }
    return fields;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

[[noreturn]] void parse_failure(std::string_view file, std::size_t line, const std::string& what) {
    throw InputError(std::string(file) + ":" + std::to_string(line) + ": " + what);
}

std::optional<double> parse_real(std::string_view token) {
    double value = 0.0;
    const auto result = std::from_chars(token.data(), token.data() + token.size(), value);
    if (result.ec != std::errc() || result.ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

}  // namespace

AttributedNetwork read_network(std::istream& edges, std::istream& attributes,
                               std::string_view edges_name, std::string_view attributes_name) {
    std::string line;
    std::size_t line_no = 0;

    std::vector<std::string> names;
    while (names.empty() && std::getline(attributes, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty() || line[0] == '#') continue;
        for (auto field : split_tabs(line)) names.emplace_back(field);
    }
    if (names.empty()) parse_failure(attributes_name, line_no, "missing attribute name header");

    std::vector<std::string_view> kind_fields;
    std::string kind_line;
    while (kind_fields.empty() && std::getline(attributes, kind_line)) {
        ++line_no;
        strip_cr(kind_line);
        if (kind_line.empty() || kind_line[0] == '#') continue;
        kind_fields = split_tabs(kind_line);
    }
    if (kind_fields.empty()) parse_failure(attributes_name, line_no, "missing attribute kind header");
    if (kind_fields.size() != names.size())
        parse_failure(attributes_name, line_no, "kind header has " +
                                                    std::to_string(kind_fields.size()) +
                                                    " fields but name header has " +
                                                    std::to_string(names.size()));
    // Leading label cell for the ID column unless the first kind is a kind
    // token. A lone cell is always an attribute.
    const std::size_t skip = parse_kind_token(kind_fields.front()) || kind_fields.size() == 1 ? 0 : 1;
    std::vector<AttributeSpec> specs;
    for (std::size_t i = skip; i < kind_fields.size(); ++i) {
        const auto kind = parse_kind_token(kind_fields[i]);
        if (!kind)
            parse_failure(attributes_name, line_no,
                          "unknown attribute kind '" + std::string(kind_fields[i]) + "'");
        specs.push_back({names[i], *kind, {}});
    }
    const std::size_t r = specs.size();
    std::vector<AttributeKind> kinds;
    for (const auto& spec : specs) kinds.push_back(spec.kind);

    NetworkBuilder builder(std::move(specs));
    std::vector<AttributeValue> values(r, Numerical{0.0});
    while (std::getline(attributes, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty() || line[0] == '#') continue;
        const auto fields = split_tabs(line);
        if (fields.size() != r + 1)
            parse_failure(attributes_name, line_no,
                          "expected " + std::to_string(r + 1) + " fields, found " +
                              std::to_string(fields.size()));
        if (fields[0].empty()) parse_failure(attributes_name, line_no, "empty node ID");
        for (std::size_t t = 0; t < r; ++t) {
            const std::string_view token = fields[t + 1];
            switch (kinds[t]) {
                case AttributeKind::numerical: {
                    const auto x = parse_real(token);
                    if (!x || !std::isfinite(*x))
                        parse_failure(attributes_name, line_no,
                                      "attribute '" + names[t + skip] + "': '" + std::string(token) +
                                          "' is not a number");
                    values[t] = Numerical{*x};
                    break;
                }
                case AttributeKind::binary:
                    if (token != "0" && token != "1")
                        parse_failure(attributes_name, line_no,
                                      "attribute '" + names[t + skip] + "': '" + std::string(token) +
                                          "' is not 0 or 1");
                    values[t] = Binary{token == "1"};
                    break;
                case AttributeKind::categorical:
                    if (token.empty())
                        parse_failure(attributes_name, line_no,
                                      "attribute '" + names[t + skip] + "': empty category label");
                    values[t] = Categorical{builder.intern_category(t, token)};
                    break;
            }
        }
        try {
            builder.add_node(std::string(fields[0]), values);
        } catch (const InputError& e) {
            parse_failure(attributes_name, line_no, e.what());
        }
    }

    line_no = 0;
    while (std::getline(edges, line)) {
        ++line_no;
        strip_cr(line);
        const auto fields = split_whitespace(line);
        if (fields.empty() || fields[0].front() == '#') continue;
        if (fields.size() != 2)
            parse_failure(edges_name, line_no, "expected two node IDs, found " +
                                                   std::to_string(fields.size()) + " fields");
        const auto a = builder.find(fields[0]);
        const auto b = builder.find(fields[1]);
        if (!a || !b)
            parse_failure(edges_name, line_no,
                          "node '" + std::string(a ? fields[1] : fields[0]) +
                              "' missing from attribute file");
        builder.add_edge(*a, *b);
    }
    return std::move(builder).build();
}

AttributedNetwork load_network(const std::filesystem::path& graph_path,
                               const std::filesystem::path& attrs_path) {
    std::ifstream edges(graph_path);
    if (!edges) throw InputError("cannot open edge list '" + graph_path.string() + "'");
    std::ifstream attributes(attrs_path);
    if (!attributes) throw InputError("cannot open attribute file '" + attrs_path.string() + "'");
    return read_network(edges, attributes, graph_path.string(), attrs_path.string());
}

void write_edge_list(const AttributedNetwork& net, std::ostream& out) {
    for (const Edge& e : net.edges()) out << net.id(e.first) << ' ' << net.id(e.second) << '\n';
}

void write_attributes(const AttributedNetwork& net, std::ostream& out) {
    const auto& specs = net.attributes();
    out << "node";
    for (const auto& spec : specs) out << '\t' << spec.name;
    out << "\nkind";
    for (const auto& spec : specs) out << '\t' << kind_token(spec.kind);
    out << '\n';
    for (NodeId v = 0; v < net.node_count(); ++v) {
        out << net.id(v);
        for (std::size_t t = 0; t < specs.size(); ++t) {
            out << '\t';
            const AttributeValue value = net.value(v, t);
            if (auto* x = std::get_if<Numerical>(&value)) out << format_double(x->value);
            else if (auto* b = std::get_if<Binary>(&value)) out << (b->value ? '1' : '0');
            else out << specs[t].categories[std::get<Categorical>(value).label];
        }
        out << '\n';
    }
}

void save_network(const AttributedNetwork& net, const std::filesystem::path& graph_path,
                  const std::filesystem::path& attrs_path) {
    std::ofstream edges(graph_path);
    std::ofstream attributes(attrs_path);
    if (!edges || !attributes) throw InputError("cannot write network files");
    write_edge_list(net, edges);
    write_attributes(net, attributes);
}

}  // namespace tscm
