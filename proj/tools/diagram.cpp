#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace sidonkit::cli
{
    namespace
    {
        constexpr double radius = 160.0;
        constexpr double tick = 12.0;
        constexpr double centre = 200.0;

        auto fixed(double x) -> std::string
        {
            char buffer[32];
            std::snprintf(buffer, sizeof buffer, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
            return buffer;
        }

        // Residue k sits at angle 2πk/v, clockwise from the top.
        auto at(std::int64_t k, std::int64_t v, double r) -> std::pair<double, double>
        {
            auto theta = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(v);
            return {r * std::sin(theta), r * std::cos(theta)};
        }
    }

    auto diagram_dot(const ResidueSet & b) -> std::string
    {
        std::ostringstream out;
        out << "graph ticks {\n";
        out << "  layout=neato;\n";
        out << "  node [shape=plaintext, fontsize=10];\n";
        out << "  circle [shape=circle, label=\"\", width=" << fixed(2 * radius / 72) << ", pos=\"0,0!\"];\n";
        for (std::int64_t k = 0; k < b.v(); ++k) {
            auto [x, y] = at(k, b.v(), radius + tick);
            out << "  t" << k << " [label=\"" << k << "\", pos=\"" << fixed(x) << ',' << fixed(y) << "!\"";
            if (b.contains(k))
                out << ", fontname=\"Helvetica-Bold\", fontsize=14";
            out << "];\n";
        }
        out << "}\n";
        return out.str();
    }

    auto diagram_json(const ResidueSet & b) -> Json
    {
        return Json{{"modulus", b.v()}, {"bold", std::vector<std::int64_t>(b.begin(), b.end())}};
    }

    auto diagram_svg(const ResidueSet & b) -> std::string
    {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
        out << "<circle cx=\"200\" cy=\"200\" r=\"" << fixed(radius) << "\" fill=\"none\" stroke=\"black\"/>\n";
        for (std::int64_t k = 0; k < b.v(); ++k) {
            bool bold = b.contains(k);
            auto [x1, y1] = at(k, b.v(), radius - tick / 2);
            auto [x2, y2] = at(k, b.v(), radius + tick / 2);
            auto [lx, ly] = at(k, b.v(), radius + 2.2 * tick);
            out << "<line x1=\"" << fixed(centre + x1) << "\" y1=\"" << fixed(centre - y1) << "\" x2=\""
                << fixed(centre + x2) << "\" y2=\"" << fixed(centre - y2) << "\" stroke=\"black\" stroke-width=\""
                << (bold ? 3 : 1) << "\"/>\n";
            out << "<text x=\"" << fixed(centre + lx) << "\" y=\"" << fixed(centre - ly)
                << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-size=\"" << (bold ? 14 : 10) << '"'
                << (bold ? " font-weight=\"bold\"" : "") << '>' << k << "</text>\n";
        }
        out << "</svg>\n";
        return out.str();
    }
}
