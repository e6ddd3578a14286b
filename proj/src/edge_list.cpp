#include "maxgenus/edge_list.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "maxgenus/errors.hpp"

namespace maxgenus {

ParsedGraph parse_edge_list(std::string_view text) {
    std::vector<std::pair<long long, long long>> raw;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        long long values[2];
        int n_values = 0;
        size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            size_t start = i;
            while (i < line.size() &&
                   !std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            std::string_view tok = line.substr(start, i - start);
            if (n_values == 2)
                throw ParseError("more than two labels on a line", line_no);
            long long v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0)
                throw ParseError("expected a non-negative integer, got '" +
                                     std::string(tok) + "'",
                                 line_no);
            values[n_values++] = v;
        }
        if (n_values == 1)
            throw ParseError("a line must name two endpoints", line_no);
        if (n_values == 2) raw.push_back({values[0], values[1]});
        if (eol == text.size()) break;
    }
    if (raw.empty()) throw ParseError("no edges in input", line_no);

    std::map<long long, int> dense;
    for (auto [u, v] : raw) {
        dense.emplace(u, 0);
        dense.emplace(v, 0);
    }
    std::vector<long long> labels;
    labels.reserve(dense.size());
    for (auto& [label, id] : dense) {
        id = static_cast<int>(labels.size());
        labels.push_back(label);
    }

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (auto [u, v] : raw) edges.push_back({dense[u], dense[v]});
    return {Multigraph(static_cast<int>(labels.size()), std::move(edges)),
            std::move(labels)};
}

std::string format_edge_list(const Multigraph& g) {
    std::ostringstream out;
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace maxgenus
