#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sl2tilt/decide.hpp"

namespace sl2tilt {

enum class GridFormat { ascii, tsv, svg, json };

struct GridSpec {
    Int p;
    Int max_weight;
    GridFormat format;
};

/// Row-major tilting table: cell(r, s) = is_tilting_explicit(p, r, s).
class Grid {
public:
    Grid(Int p, Int max_weight) : p_(p), max_(max_weight) {
        require_prime(p);
        if (max_weight < 0 || max_weight > 4096)
            throw std::invalid_argument("grid: max weight must lie in [0, 4096]");
        cells_.resize(static_cast<std::size_t>(max_ + 1) * (max_ + 1));
        for (Int r = 0; r <= max_; ++r)
            for (Int s = 0; s <= max_; ++s)
                cells_[index(r, s)] = detail::explicit_tilting(p_, r, s);
    }

    Int prime() const { return p_; }
    Int max_weight() const { return max_; }

    bool cell(Int r, Int s) const { return cells_[index(r, s)]; }

private:
    std::size_t index(Int r, Int s) const {
        if (r < 0 || s < 0 || r > max_ || s > max_)
            throw std::out_of_range("grid cell out of range");
        return static_cast<std::size_t>(r) * (max_ + 1) + s;
    }

    Int p_;
    Int max_;
    std::vector<char> cells_;
};

/// Header-less, row r from 0 at top, column s from 0 at left, "1"/"0"
/// tab-separated, LF line endings.
inline std::string render_tsv(const Grid& g) {
    std::ostringstream out;
    for (Int r = 0; r <= g.max_weight(); ++r) {
        for (Int s = 0; s <= g.max_weight(); ++s) {
            if (s > 0) out << '\t';
            out << (g.cell(r, s) ? '1' : '0');
        }
        out << '\n';
    }
    return out.str();
}

inline std::string render_ascii(const Grid& g) {
    std::ostringstream out;
    for (Int r = 0; r <= g.max_weight(); ++r) {
        for (Int s = 0; s <= g.max_weight(); ++s)
            out << (g.cell(r, s) ? '#' : '.');
        out << '\n';
    }
    return out.str();
}

/// {"p": ..., "max": ..., "tilting": [[r,s], ...]} with the pair list in
/// lexicographic order.  Built by hand to keep the byte layout stable.
inline std::string render_json(const Grid& g) {
    std::ostringstream out;
    out << "{\"p\": " << g.prime() << ", \"max\": " << g.max_weight()
        << ", \"tilting\": [";
    bool first = true;
    for (Int r = 0; r <= g.max_weight(); ++r)
        for (Int s = 0; s <= g.max_weight(); ++s) {
            if (!g.cell(r, s)) continue;
            if (!first) out << ", ";
            first = false;
            out << "[" << r << ", " << s << "]";
        }
    out << "]}\n";
    return out.str();
}

/// One 16px rect per cell in row-major order, green (#2a2) for tilting,
/// then gridlines and axis labels at the weights p^n - 1.
inline std::string render_svg(const Grid& g) {
    constexpr Int cell = 16;
    const Int n_cells = g.max_weight() + 1;
    const Int margin = 24;
    const Int side = n_cells * cell;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side + margin
        << "\" height=\"" << side + margin << "\">\n";
    out << "<g transform=\"translate(" << margin << "," << margin << ")\">\n";
    for (Int r = 0; r <= g.max_weight(); ++r)
        for (Int s = 0; s <= g.max_weight(); ++s)
            out << "<rect x=\"" << s * cell << "\" y=\"" << r * cell
                << "\" width=\"" << cell << "\" height=\"" << cell
                << "\" fill=\"" << (g.cell(r, s) ? "#2a2" : "#ddd") << "\"/>\n";
    for (Int pw = 1; pw - 1 <= g.max_weight(); pw *= g.prime()) {
        Int w = pw - 1;
        Int off = (w + 1) * cell;
        out << "<line x1=\"" << off << "\" y1=\"0\" x2=\"" << off << "\" y2=\""
            << side << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
        out << "<line x1=\"0\" y1=\"" << off << "\" x2=\"" << side << "\" y2=\""
            << off << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << w * cell + cell / 2
            << "\" y=\"-6\" font-size=\"10\" text-anchor=\"middle\">" << w
            << "</text>\n";
        out << "<text x=\"-6\" y=\"" << w * cell + cell / 2 + 4
            << "\" font-size=\"10\" text-anchor=\"end\">" << w << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

inline std::string render(const Grid& g, GridFormat format) {
    switch (format) {
        case GridFormat::ascii: return render_ascii(g);
        case GridFormat::tsv: return render_tsv(g);
        case GridFormat::svg: return render_svg(g);
        case GridFormat::json: return render_json(g);
    }
    throw std::invalid_argument("unknown grid format");
}

} // namespace sl2tilt
