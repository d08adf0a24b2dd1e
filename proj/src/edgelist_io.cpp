#include "graphaudit/edgelist_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace graphaudit {

LabeledEdgeList parse_edge_list_text(std::string_view text) {
    LabeledEdgeList edges;
    size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty() && line.front() != '#') {
            std::istringstream in{std::string(line)};
            std::string a, b, extra;
            if (!(in >> a >> b) || (in >> extra)) {
                throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                         ": expected `<label> <label>`, got: " + std::string(line));
            }
            edges.push_back({std::move(a), std::move(b)});
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return edges;
}

LabeledEdgeList read_edge_list_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open edge list file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list_text(buf.str());
}

std::string to_edge_list_text(const Graph& g) {
    std::string out;
    for (const auto& [u, v] : g.edges()) {
        out += g.label_or_id(u);
        out += ' ';
        out += g.label_or_id(v);
        out += '\n';
    }
    return out;
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write edge list file: " + path.string());
    out << to_edge_list_text(g);
}

}  // namespace graphaudit
