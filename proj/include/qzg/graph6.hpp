#pragma once

#include <string>
#include <string_view>

#include "qzg/graph.hpp"

// graph6 interchange, standard short form only: header byte chr(n + 63)
// for n <= 62, then the upper triangle in column order
// x(0,1), x(0,2), x(1,2), x(0,3), ..., packed 6 bits per byte (+63),
// zero-padded to a multiple of 6. One graph per line.

namespace qzg {

inline std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    const unsigned h = static_cast<unsigned char>(text[0]);
    if (h == 126) throw std::invalid_argument("graph6: multi-byte order header not supported");
    if (h < 63 || h > 126) throw std::invalid_argument("graph6: malformed header byte");
    const int n = static_cast<int>(h) - 63;
    if (n > kMaxVertices)
        throw std::invalid_argument("graph6: order exceeds the 32-vertex cap");
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nchars = (nbits + 5) / 6;
    if (text.size() != 1 + nchars)
        throw std::invalid_argument("graph6: length does not match header");

    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (std::size_t c = 0; c < nchars; ++c) {
        const unsigned byte = static_cast<unsigned char>(text[1 + c]);
        if (byte < 63 || byte > 126)
            throw std::invalid_argument("graph6: data byte out of printable range");
        const unsigned val = byte - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            const bool set = (val >> b) & 1u;
            if (bit >= nbits) {
                if (set) throw std::invalid_argument("graph6: nonzero padding bits");
                continue;
            }
            if (set) {
                // invert bit index -> (i, j) in column order
                std::size_t k = bit;
                int j = 1;
                while (k >= static_cast<std::size_t>(j)) {
                    k -= j;
                    ++j;
                }
                edges.emplace_back(static_cast<int>(k), j);
            }
        }
    }
    return Graph::build(n, edges);
}

}  // namespace qzg
